"""The Koszul-type chain complex of a vertex-matrix family.

Degree ``p`` holds one copy of ``Z^n`` per strictly increasing ``p``-tuple
of colours, tuples in lexicographic order. The block of ``d_p`` from tuple
``mu`` to ``mu`` with its ``i``-th entry deleted is
``(-1)**(i + 1) * (1 - M_{mu_i}^T)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .intlinalg import IntMatrix
from .model import VertexMatrixFamily, require_valid

IndexTuple = tuple[int, ...]


def index_tuples(k: int, p: int) -> list[IndexTuple]:
    """Strictly increasing ``p``-tuples from ``1..k`` in lexicographic order."""
    return list(itertools.combinations(range(1, k + 1), p))


@dataclass(frozen=True)
class ChainComplex:
    """``0 <- D_0 <- D_1 <- ... <- D_k <- 0`` with ``differentials[p-1] = d_p``."""

    k: int
    n: int
    ranks: tuple[int, ...]
    differentials: tuple[IntMatrix, ...]
    basis_order: tuple[tuple[IndexTuple, ...], ...]

    def d(self, p: int) -> IntMatrix:
        """``d_p : D_p -> D_{p-1}`` for any integer ``p``; zero maps outside ``1..k``.

        ``d_0`` is ``0 x rank(D_0)`` and ``d_{k+1}`` is ``rank(D_k) x 0``.
        """
        if 1 <= p <= self.k:
            return self.differentials[p - 1]
        if p == 0:
            return IntMatrix.zeros(0, self.ranks[0])
        if p == self.k + 1:
            return IntMatrix.zeros(self.ranks[self.k], 0)
        src = self.ranks[p] if 0 <= p <= self.k else 0
        tgt = self.ranks[p - 1] if 0 <= p - 1 <= self.k else 0
        return IntMatrix.zeros(tgt, src)


def build_complex(family: VertexMatrixFamily, check: bool = True) -> ChainComplex:
    """Assemble the complex; ``check=False`` skips family validation."""
    if check:
        require_valid(family)
    k, n = family.k, family.n
    one = IntMatrix.identity(n)
    t = [one - m.T for m in family.matrices]  # t[i] = 1 - M_{i+1}^T
    zero = IntMatrix.zeros(n, n)
    bases = tuple(tuple(index_tuples(k, p)) for p in range(k + 1))
    diffs = []
    for p in range(1, k + 1):
        position = {lam: r for r, lam in enumerate(bases[p - 1])}
        grid = [[zero] * len(bases[p]) for _ in bases[p - 1]]
        for c, mu in enumerate(bases[p]):
            for i in range(1, p + 1):
                lam = mu[:i - 1] + mu[i:]
                block = t[mu[i - 1] - 1]
                grid[position[lam]][c] = block if i % 2 == 1 else -block
        diffs.append(IntMatrix.block(grid))
    return ChainComplex(
        k=k,
        n=n,
        ranks=tuple(comb(k, p) * n for p in range(k + 1)),
        differentials=tuple(diffs),
        basis_order=bases,
    )


def verify_complex(complex_: ChainComplex) -> bool:
    """True iff every composite ``d_p d_{p+1}`` vanishes."""
    for p in range(1, complex_.k):
        if not (complex_.d(p) @ complex_.d(p + 1)).is_zero():
            return False
    return True
