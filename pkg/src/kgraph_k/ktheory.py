"""Homology of the Koszul complex and the K-group reports built on it.

Which statements are exact depends on the rank:

* ``k = 1, 2``: both K-groups are determined.
* ``k = 3``: determined when ``d_1`` is surjective; when the common kernel
  of the ``1 - M_i^T`` vanishes, ``K_1`` is determined and ``K_0`` sits in a
  short exact sequence. Otherwise both are only constrained.
* ``k >= 4``: only the E2 page and rank bounds are reported.

Extensions are never guessed. A short exact sequence is declared split
only when its quotient is free or one of its ends is trivial.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .errors import RankMismatch, UnsupportedRank
from .intlinalg import (
    AbelianGroupPresentation,
    IntMatrix,
    cokernel_invariants,
    kernel_basis,
    quotient_presentation,
    snf,
)
from .koszul import ChainComplex, build_complex
from .model import VertexMatrixFamily, require_valid

EXACT = "Exact"
CONSTRAINED = "Constrained"
E2_ONLY = "E2Only"


@dataclass(frozen=True)
class E2Page:
    """``homology[p]`` is ``H_p`` of the Koszul complex, ``p = 0..k``."""

    homology: tuple[AbelianGroupPresentation, ...]

    def __getitem__(self, p: int) -> AbelianGroupPresentation:
        if 0 <= p < len(self.homology):
            return self.homology[p]
        return AbelianGroupPresentation.trivial()

    def __len__(self):
        return len(self.homology)


@dataclass(frozen=True)
class Constraint:
    """``0 -> sub -> K -> quot -> 0``.

    ``sub_quotient_unknown`` means the true subgroup is ``sub`` modulo an
    unknown subgroup; ``quot_subgroup_unknown`` means the true quotient is an
    unknown subgroup of ``quot``. ``order`` is set only when the sequence
    pins down a finite order.
    """

    sub: AbelianGroupPresentation
    quot: AbelianGroupPresentation
    order: int | None = None
    sub_quotient_unknown: bool = False
    quot_subgroup_unknown: bool = False


@dataclass(frozen=True)
class KGroupReport:
    k: int
    k0_status: str
    k1_status: str
    e2: E2Page
    k0: AbelianGroupPresentation | None = None
    k1: AbelianGroupPresentation | None = None
    k0_constraint: Constraint | None = None
    k1_constraint: Constraint | None = None
    notes: tuple[str, ...] = ()
    bounds: dict | None = None

    @property
    def exact(self) -> bool:
        return self.k0_status == EXACT and self.k1_status == EXACT


def _homology(cx: ChainComplex) -> E2Page:
    return E2Page(tuple(quotient_presentation(cx.d(p + 1), cx.d(p)) for p in range(cx.k + 1)))


def e2_page(family: VertexMatrixFamily) -> E2Page:
    """``H_p`` of the Koszul complex for ``p = 0..k``."""
    return _homology(build_complex(family))


def _ses(sub: AbelianGroupPresentation, quot: AbelianGroupPresentation) -> Constraint:
    order = None
    if sub.is_finite and quot.is_finite:
        order = sub.order * quot.order
    return Constraint(sub, quot, order)


def _splits(c: Constraint) -> str | None:
    if c.sub.is_trivial:
        return "SubTrivial"
    if c.quot.is_free:
        return "QuotFree"
    return None


def kgroups(family: VertexMatrixFamily) -> KGroupReport:
    """K-group report for a valid family of any rank."""
    cx = build_complex(family)
    e2 = _homology(cx)
    k = family.k
    free = AbelianGroupPresentation

    if k == 1:
        return KGroupReport(k, EXACT, EXACT, e2, k0=e2[0], k1=e2[1], notes=("Rank1",))

    if k == 2:
        # H_2 = ker d_2 is a subgroup of a free group, so it splits off
        k0 = e2[0].direct_sum(free(e2[2].free_rank))
        return KGroupReport(k, EXACT, EXACT, e2, k0=k0, k1=e2[1], notes=("Rank2",))

    if k == 3:
        h0, h1, h2, h3 = e2.homology
        if h0.is_trivial:
            return KGroupReport(
                k, EXACT, EXACT, e2,
                k0=h2, k1=h1.direct_sum(h3),
                notes=("K3Case1:D1Surjective",),
            )
        if h3.is_trivial:
            c = _ses(h0, h2)
            split = _splits(c)
            if split:
                return KGroupReport(
                    k, EXACT, EXACT, e2,
                    k0=h0.direct_sum(h2), k1=h1,
                    notes=("K3Case2:CommonKernelTrivial", f"SplitDetected:{split}"),
                )
            return KGroupReport(
                k, CONSTRAINED, EXACT, e2,
                k1=h1, k0_constraint=c,
                notes=("K3Case2:CommonKernelTrivial", "ExtensionUndetermined"),
            )
        return KGroupReport(
            k, CONSTRAINED, CONSTRAINED, e2,
            k0_constraint=Constraint(h0, h2, None, sub_quotient_unknown=True),
            k1_constraint=Constraint(h1, h3, None, quot_subgroup_unknown=True),
            notes=(
                "K3General",
                f"G0UnknownSubgroupOf:{h0}",
                f"G1UnknownSubgroupOf:{h3}",
            ),
        )

    even = sum(e2[p].free_rank for p in range(0, k + 1, 2))
    odd = sum(e2[p].free_rank for p in range(1, k + 1, 2))
    return KGroupReport(
        k, E2_ONLY, E2_ONLY, e2,
        notes=("E2Only:HigherDifferentialsNotComputed",),
        bounds={
            "k0_free_rank_max": even,
            "k1_free_rank_max": odd,
            "filtration_length_max": k + 1,
        },
    )


@dataclass(frozen=True)
class UnitClass:
    """Coordinates of the unit in the K_0 presentation.

    ``free`` has ``group.free_rank`` entries; ``torsion[i]`` is a residue
    modulo ``group.torsion[i]``.
    """

    group: AbelianGroupPresentation
    free: tuple[int, ...]
    torsion: tuple[int, ...]

    @property
    def order(self) -> int | None:
        if any(self.free):
            return None
        from math import gcd, lcm

        return lcm(1, *(d // gcd(r, d) for r, d in zip(self.torsion, self.group.torsion)))

    def generates(self) -> bool:
        """True iff the class generates all of K_0."""
        from math import gcd

        if not self.group.is_cyclic:
            return False
        if self.group.free_rank:
            return abs(self.free[0]) == 1
        if self.group.torsion:
            return gcd(self.torsion[0], self.group.torsion[0]) == 1
        return True


def _require_rank(family: VertexMatrixFamily, k: int, what: str):
    if family.k != k:
        raise UnsupportedRank(f"{what} requires k = {k}, got k = {family.k}")


def unit_class(family: VertexMatrixFamily) -> UnitClass:
    """Class of the all-ones vector in ``coker d_1 (+) ker d_2`` (k = 2 only)."""
    _require_rank(family, 2, "unit-class")
    cx = build_complex(family)
    d1, d2 = cx.d(1), cx.d(2)
    dec = snf(d1)
    n, r = family.n, dec.rank
    y = (dec.u @ IntMatrix.column([1] * n)).col(0)
    ker_rank = d2.cols - snf(d2).rank
    free = tuple(y[r:]) + (0,) * ker_rank
    torsion = tuple(y[i] % d for i, d in enumerate(dec.invariant_factors) if d > 1)
    group = cokernel_invariants(d1).direct_sum(AbelianGroupPresentation(ker_rank))
    return UnitClass(group, free, torsion)


@dataclass(frozen=True)
class CrosscheckResult:
    r0_expected: int
    tor_k0_expected: tuple[int, ...]
    tor_k1_expected: tuple[int, ...]
    agrees: bool


def rank_torsion_crosscheck(family: VertexMatrixFamily) -> CrosscheckResult:
    """Compare the k = 2 pipeline against closed rank/torsion formulas.

    The formulas use ``coker(1 - M_1^T, 1 - M_2^T)`` and
    ``coker(1 - M_1, 1 - M_2)`` built directly from the matrices.
    """
    _require_rank(family, 2, "crosscheck")
    require_valid(family)
    one = IntMatrix.identity(family.n)
    m1, m2 = family.matrices
    transposed = cokernel_invariants(IntMatrix.hstack([one - m1.T, one - m2.T]))
    plain = cokernel_invariants(IntMatrix.hstack([one - m1, one - m2]))
    r0 = transposed.free_rank + plain.free_rank
    rep = kgroups(family)
    agrees = (
        rep.k0.free_rank == r0
        and rep.k1.free_rank == r0
        and rep.k0.torsion == transposed.torsion
        and rep.k1.torsion == plain.torsion
    )
    return CrosscheckResult(r0, transposed.torsion, plain.torsion, agrees)


@dataclass(frozen=True)
class K3RankCheck:
    applicable: bool
    m: int | None = None
    consistent: bool | None = None


def k3_unital_rank_check(family: VertexMatrixFamily) -> K3RankCheck:
    """When ``d_1`` is surjective both K-groups should be ``Z^m``, ``m = rank ker d_2 - n``."""
    _require_rank(family, 3, "k3 rank check")
    cx = build_complex(family)
    if not cokernel_invariants(cx.d(1)).is_trivial:
        return K3RankCheck(False)
    m = kernel_basis(cx.d(2)).cols - family.n
    rep = kgroups(family)
    expected = AbelianGroupPresentation(m) if m >= 0 else None
    consistent = rep.exact and rep.k0 == expected and rep.k1 == expected
    return K3RankCheck(True, m, consistent)


def find_isomorphism(a: VertexMatrixFamily, b: VertexMatrixFamily):
    """Search for vertex and colour permutations carrying ``a`` onto ``b``.

    Returns ``(vertex_perm, colour_perm)`` with
    ``a.permute_vertices(vertex_perm).permute_colours(colour_perm) == b``
    up to vertex names, or ``None``.
    """
    if a.k != b.k or a.n != b.n:
        return None
    n = a.n
    for cperm in itertools.permutations(range(a.k)):
        am = [a.matrices[c] for c in cperm]
        bm = b.matrices

        def signature(mats, v):
            return tuple((sorted(m.row(v)), sorted(m.col(v)), m[v, v]) for m in mats)

        sig_a = [signature(am, v) for v in range(n)]
        sig_b = [signature(bm, v) for v in range(n)]
        if sorted(sig_a) != sorted(sig_b):
            continue
        perm: list[int] = []
        used = [False] * n

        def extend(i):
            if i == n:
                return True
            for cand in range(n):
                if used[cand] or sig_a[cand] != sig_b[i]:
                    continue
                ok = all(
                    m_a[cand, perm[j]] == m_b[i, j] and m_a[perm[j], cand] == m_b[j, i]
                    for m_a, m_b in zip(am, bm)
                    for j in range(i)
                ) and all(m_a[cand, cand] == m_b[i, i] for m_a, m_b in zip(am, bm))
                if ok:
                    perm.append(cand)
                    used[cand] = True
                    if extend(i + 1):
                        return True
                    perm.pop()
                    used[cand] = False
            return False

        if extend(0):
            return tuple(perm), cperm
    return None


@dataclass(frozen=True)
class ComparisonReport:
    same_vertex_matrices: bool
    invariants_agree: bool
    kgroups_determined: bool
    unit_classes_agree: bool | None
    flags: dict = field(default_factory=dict)
    conclusion: str = ""
    isomorphism: tuple | None = None


def _invariant_key(rep: KGroupReport):
    return (rep.k0_status, rep.k1_status, rep.k0, rep.k1, rep.k0_constraint, rep.k1_constraint, rep.e2)


def _units_agree(ua: UnitClass, ub: UnitClass, relabelled: bool) -> bool | None:
    if ua.group != ub.group:
        return False
    if relabelled or (ua.free, ua.torsion) == (ub.free, ub.torsion):
        return True
    g = ua.group
    if g.is_cyclic and g.free_rank == 1:
        return abs(ua.free[0]) == abs(ub.free[0])
    if g.is_cyclic:
        # automorphisms of Z/d act transitively on elements of equal order
        d = g.torsion[0]
        return math.gcd(ua.torsion[0], d) == math.gcd(ub.torsion[0], d)
    return None


def compare(a: VertexMatrixFamily, b: VertexMatrixFamily, simple: bool = False, purely_infinite: bool = False) -> ComparisonReport:
    """Compare the computable invariants of two families.

    ``simple`` and ``purely_infinite`` are recorded as asserted by the
    caller; nothing here decides them. Unit classes are matched up to an
    automorphism of K0 when that is decidable cheaply (equal coordinates, a
    relabelling between the families, or a cyclic K0); otherwise
    ``unit_classes_agree`` is None.
    """
    if a.k != b.k:
        raise RankMismatch(f"cannot compare rank {a.k} with rank {b.k}")
    require_valid(a)
    require_valid(b)
    iso = find_isomorphism(a, b)
    ra, rb = kgroups(a), kgroups(b)
    agree = _invariant_key(ra) == _invariant_key(rb)
    determined = ra.exact and rb.exact
    units = _units_agree(unit_class(a), unit_class(b), iso is not None) if a.k == 2 else None
    flags = {"simple": bool(simple), "purely_infinite": bool(purely_infinite)}
    if agree and units is not False:
        conclusion = "same K-invariants; isomorphic if both simple and purely infinite (user-asserted flags)"
        if not determined:
            conclusion += "; K-groups only partially determined"
        if units is None and a.k == 2:
            conclusion += "; unit classes not matched up to automorphism"
        if simple and purely_infinite:
            conclusion += "; flags asserted: simple, purely infinite"
    else:
        conclusion = "different invariants"
    return ComparisonReport(
        same_vertex_matrices=iso is not None,
        invariants_agree=agree,
        kgroups_determined=determined,
        unit_classes_agree=units,
        flags=flags,
        conclusion=conclusion,
        isomorphism=iso,
    )
