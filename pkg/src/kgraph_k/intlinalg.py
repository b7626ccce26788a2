"""Exact integer matrix algebra.

Matrices hold Python ``int`` entries, so arithmetic never overflows. The
central routine is :func:`snf`, a Smith normal form with unimodular
transforms; kernels, cokernels and subquotients are all read off from it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Sequence

from .errors import SubgroupNotContained

__all__ = [
    "IntMatrix",
    "SmithDecomposition",
    "AbelianGroupPresentation",
    "snf",
    "kernel_basis",
    "cokernel_invariants",
    "quotient_presentation",
    "det",
]


def _as_int(x) -> int:
    # bool is an int subclass but never a legitimate matrix entry
    if isinstance(x, bool):
        raise TypeError(f"matrix entries must be integers, got {x!r}")
    try:
        import numpy as np

        if isinstance(x, np.integer):
            return int(x)
    except ImportError:  # pragma: no cover
        pass
    if not isinstance(x, int):
        raise TypeError(f"matrix entries must be integers, got {x!r}")
    return x


@dataclass(frozen=True)
class IntMatrix:
    """Dense immutable integer matrix, stored row-major.

    ``0 x n`` and ``n x 0`` shapes are allowed and stand for zero maps.
    """

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        ents = tuple(_as_int(x) for x in self.entries)
        if len(ents) != self.rows * self.cols:
            raise ValueError(
                f"{len(ents)} entries given for a {self.rows}x{self.cols} matrix"
            )
        object.__setattr__(self, "entries", ents)

    # -- construction -----------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        """Build from nested sequences. ``cols`` is needed only when ``rows`` is empty."""
        rows = [list(r) for r in rows]
        if not rows:
            return cls(0, cols or 0, ())
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        if cols is not None and cols != width:
            raise ValueError(f"expected {cols} columns, got {width}")
        return cls(len(rows), width, tuple(x for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, diag: Sequence[int], rows: int | None = None, cols: int | None = None) -> IntMatrix:
        rows = len(diag) if rows is None else rows
        cols = len(diag) if cols is None else cols
        data = [[0] * cols for _ in range(rows)]
        for i, d in enumerate(diag):
            data[i][i] = d
        return cls.from_rows(data, cols)

    @classmethod
    def column(cls, values: Sequence[int]) -> IntMatrix:
        return cls(len(values), 1, tuple(values))

    @classmethod
    def hstack(cls, blocks: Sequence[IntMatrix], rows: int | None = None) -> IntMatrix:
        if not blocks:
            return cls.zeros(rows or 0, 0)
        r = blocks[0].rows
        if any(b.rows != r for b in blocks):
            raise ValueError("hstack: row counts differ")
        data = [[x for b in blocks for x in b.row(i)] for i in range(r)]
        return cls.from_rows(data, sum(b.cols for b in blocks))

    @classmethod
    def vstack(cls, blocks: Sequence[IntMatrix], cols: int | None = None) -> IntMatrix:
        if not blocks:
            return cls.zeros(0, cols or 0)
        c = blocks[0].cols
        if any(b.cols != c for b in blocks):
            raise ValueError("vstack: column counts differ")
        return cls(sum(b.rows for b in blocks), c, tuple(x for b in blocks for x in b.entries))

    @classmethod
    def block(cls, grid: Sequence[Sequence[IntMatrix]]) -> IntMatrix:
        """Assemble a block matrix from a rectangular grid of blocks."""
        return cls.vstack([cls.hstack(list(r)) for r in grid])

    # -- access -------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(idx)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple[int, ...]:
        return self.entries[j::self.cols] if self.cols else ()

    def tolist(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> IntMatrix:
        rows, cols = list(rows), list(cols)
        return IntMatrix.from_rows([[self[i, j] for j in cols] for i in rows], len(cols))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __repr__(self) -> str:
        return f"IntMatrix({self.rows}x{self.cols}, {self.tolist()})"

    # -- arithmetic ----------------------------------------------------------

    @property
    def T(self) -> IntMatrix:
        return IntMatrix(
            self.cols, self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        ocols = [other.col(j) for j in range(other.cols)]
        out = []
        for i in range(self.rows):
            r = self.row(i)
            out.extend(sum(a * b for a, b in zip(r, c)) for c in ocols)
        return IntMatrix(self.rows, other.cols, tuple(out))

    def _check_same_shape(self, other: IntMatrix):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: IntMatrix) -> IntMatrix:
        self._check_same_shape(other)
        return IntMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        self._check_same_shape(other)
        return IntMatrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, c: int) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(c * a for a in self.entries))


def det(a: IntMatrix) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    n = a.rows
    if n != a.cols:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    m = a.tolist()
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


@dataclass(frozen=True)
class SmithDecomposition:
    """Result of :func:`snf`: ``u @ a @ v == s`` with ``u``, ``v`` unimodular.

    ``u_inv`` and ``v_inv`` are the exact inverses, kept because integer
    inverses are awkward to recover afterwards.
    """

    s: IntMatrix
    u: IntMatrix
    v: IntMatrix
    invariant_factors: tuple[int, ...]
    u_inv: IntMatrix = field(repr=False)
    v_inv: IntMatrix = field(repr=False)

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


def _pick_pivot(a, t, m, n):
    best = None
    for i in range(t, m):
        row = a[i]
        for j in range(t, n):
            x = row[j]
            if x and (best is None or abs(x) < best[0]):
                best = (abs(x), i, j)
    return best


def snf(a: IntMatrix) -> SmithDecomposition:
    """Smith normal form of ``a`` with unimodular transforms.

    The pivot is always the nonzero entry of least absolute value in the
    remaining submatrix, first in row-major order. Output is deterministic.
    """
    m, n = a.rows, a.cols
    w = a.tolist()
    u = IntMatrix.identity(m).tolist()
    ui = IntMatrix.identity(m).tolist()
    v = IntMatrix.identity(n).tolist()
    vi = IntMatrix.identity(n).tolist()

    # Row ops act on w and u from the left; ui accumulates the inverse by
    # the matching column ops. Column ops are the mirror image for v, vi.
    def swap_rows(i, j):
        w[i], w[j] = w[j], w[i]
        u[i], u[j] = u[j], u[i]
        for r in ui:
            r[i], r[j] = r[j], r[i]

    def swap_cols(i, j):
        for r in w:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]
        vi[i], vi[j] = vi[j], vi[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        wd, ws = w[dst], w[src]
        for c in range(n):
            wd[c] += q * ws[c]
        ud, us = u[dst], u[src]
        for c in range(m):
            ud[c] += q * us[c]
        for r in ui:
            r[src] -= q * r[dst]

    def add_col(dst, src, q):  # col_dst += q * col_src
        for r in w:
            r[dst] += q * r[src]
        for r in v:
            r[dst] += q * r[src]
        vd, vs = vi[dst], vi[src]
        for c in range(n):
            vs[c] -= q * vd[c]

    def negate_row(i):
        w[i] = [-x for x in w[i]]
        u[i] = [-x for x in u[i]]
        for r in ui:
            r[i] = -r[i]

    diag = []
    t = 0
    while t < min(m, n):
        piv = _pick_pivot(w, t, m, n)
        if piv is None:
            break
        _, pi, pj = piv
        if pi != t:
            swap_rows(t, pi)
        if pj != t:
            swap_cols(t, pj)
        p = w[t][t]
        clean = True
        for i in range(t + 1, m):
            if w[i][t]:
                add_row(i, t, -(w[i][t] // p))
                clean = clean and w[i][t] == 0
        for j in range(t + 1, n):
            if w[t][j]:
                add_col(j, t, -(w[t][j] // p))
                clean = clean and w[t][j] == 0
        if not clean:
            continue
        # enforce divisibility: pull an offending row into row t and retry
        bad = next(
            (i for i in range(t + 1, m) if any(w[i][j] % p for j in range(t + 1, n))),
            None,
        )
        if bad is not None:
            add_row(t, bad, 1)
            continue
        if p < 0:
            negate_row(t)
        diag.append(w[t][t])
        t += 1

    return SmithDecomposition(
        s=IntMatrix.from_rows(w, n),
        u=IntMatrix.from_rows(u, m),
        v=IntMatrix.from_rows(v, n),
        invariant_factors=tuple(diag),
        u_inv=IntMatrix.from_rows(ui, m),
        v_inv=IntMatrix.from_rows(vi, n),
    )


def kernel_basis(a: IntMatrix) -> IntMatrix:
    """Columns form a basis of the integer kernel of ``a`` (``cols(a) x nullity``)."""
    d = snf(a)
    return d.v.submatrix(range(a.cols), range(d.rank, a.cols))


@dataclass(frozen=True, order=True)
class AbelianGroupPresentation:
    """Finitely generated abelian group ``Z^free_rank + Z/t_1 + ... + Z/t_s``.

    The torsion coefficients are kept in invariant-factor form (each at
    least 2, each dividing the next), so equality of presentations is
    equality of isomorphism types.
    """

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        tors = tuple(_as_int(t) for t in self.torsion)
        object.__setattr__(self, "torsion", tors)
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        if any(t < 2 for t in tors):
            raise ValueError(f"torsion coefficients must be >= 2: {tors}")
        if any(b % a for a, b in zip(tors, tors[1:])):
            raise ValueError(f"torsion coefficients must form a divisibility chain: {tors}")

    @classmethod
    def from_cyclic_orders(cls, free_rank: int, orders: Iterable[int]) -> AbelianGroupPresentation:
        """Canonical form of ``Z^free_rank`` plus cyclic groups of the given orders.

        An order of 0 contributes a copy of Z; orders of 1 are dropped.
        """
        orders = [abs(_as_int(o)) for o in orders]
        free_rank += sum(1 for o in orders if o == 0)
        finite = [o for o in orders if o > 1]
        if not finite:
            return cls(free_rank, ())
        factors = snf(IntMatrix.diagonal(finite)).invariant_factors
        return cls(free_rank, tuple(d for d in factors if d > 1))

    @classmethod
    def trivial(cls) -> AbelianGroupPresentation:
        return cls(0, ())

    def direct_sum(self, other: AbelianGroupPresentation) -> AbelianGroupPresentation:
        return AbelianGroupPresentation.from_cyclic_orders(
            self.free_rank + other.free_rank, self.torsion + other.torsion
        )

    __add__ = direct_sum

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def is_free(self) -> bool:
        return not self.torsion

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def is_cyclic(self) -> bool:
        return self.free_rank + len(self.torsion) <= 1

    @property
    def order(self) -> int | None:
        """Group order, or ``None`` when the group is infinite."""
        if self.free_rank:
            return None
        return math.prod(self.torsion)

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " ⊕ ".join(parts) if parts else "0"


def cokernel_invariants(a: IntMatrix) -> AbelianGroupPresentation:
    """Presentation of ``Z^rows / image(a)``."""
    d = snf(a)
    return AbelianGroupPresentation(
        a.rows - d.rank, tuple(x for x in d.invariant_factors if x > 1)
    )


def quotient_presentation(sub_gens: IntMatrix, ambient_kernel_of: IntMatrix) -> AbelianGroupPresentation:
    """Presentation of ``ker(ambient_kernel_of) / colspan(sub_gens)``.

    Raises :class:`SubgroupNotContained` if a column of ``sub_gens`` is not
    in the kernel.
    """
    if sub_gens.rows != ambient_kernel_of.cols:
        raise ValueError(
            f"generators live in Z^{sub_gens.rows} but the map has domain Z^{ambient_kernel_of.cols}"
        )
    image = ambient_kernel_of @ sub_gens
    if not image.is_zero():
        bad = [j for j in range(image.cols) if any(image.col(j))]
        raise SubgroupNotContained(f"generator columns {bad} are not in the kernel")
    d = snf(ambient_kernel_of)
    n, r = ambient_kernel_of.cols, d.rank
    # v_inv maps into SNF coordinates; the kernel is spanned by the last n - r
    coords = d.v_inv @ sub_gens
    assert all(not any(coords.row(i)) for i in range(r))
    in_kernel = coords.submatrix(range(r, n), range(sub_gens.cols))
    return cokernel_invariants(in_kernel)


def gcd_all(values: Iterable[int]) -> int:
    return reduce(math.gcd, values, 0)
