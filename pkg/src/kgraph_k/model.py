"""Vertex-matrix families and coloured-graph skeletons.

A :class:`VertexMatrixFamily` is the only input the K-theory computations
need. Validation checks *necessary* conditions for the matrices to come
from a row-finite k-graph with no sources (non-negative entries, pairwise
commutation, no zero rows). It does not certify that such a k-graph exists;
results are the groups the formulas assign to any k-graph realising the
matrices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import InvalidFamily, InvalidInput
from .intlinalg import IntMatrix

NON_COMMUTING = "NonCommuting"
NEGATIVE_ENTRY = "NegativeEntry"
ZERO_ROW = "ZeroRow"
SHAPE_MISMATCH = "ShapeMismatch"


@dataclass(frozen=True)
class VertexMatrixFamily:
    """``k`` square matrices over an ordered finite vertex set.

    ``matrices[i][r, c]`` counts the colour ``i + 1`` edges with range
    ``vertices[r]`` and source ``vertices[c]``.
    """

    vertices: tuple[str, ...]
    matrices: tuple[IntMatrix, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        mats = tuple(m if isinstance(m, IntMatrix) else IntMatrix.from_rows(m) for m in self.matrices)
        object.__setattr__(self, "matrices", mats)
        if not self.vertices:
            raise InvalidInput("vertex set must be nonempty")
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidInput("vertex names must be distinct")
        if not self.matrices:
            raise InvalidInput("a family needs at least one matrix (k >= 1)")

    @classmethod
    def from_lists(cls, matrices: Sequence[Sequence[Sequence[int]]], vertices: Sequence[str] | None = None):
        mats = [IntMatrix.from_rows(m) for m in matrices]
        if vertices is None:
            vertices = [f"v{i}" for i in range(mats[0].rows)]
        return cls(tuple(vertices), tuple(mats))

    @property
    def k(self) -> int:
        return len(self.matrices)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def permute_vertices(self, perm: Sequence[int]) -> VertexMatrixFamily:
        """Relabel so that new vertex ``i`` is old vertex ``perm[i]``."""
        perm = list(perm)
        return VertexMatrixFamily(
            tuple(self.vertices[p] for p in perm),
            tuple(m.submatrix(perm, perm) for m in self.matrices),
        )

    def permute_colours(self, perm: Sequence[int]) -> VertexMatrixFamily:
        """New colour ``i`` is old colour ``perm[i]`` (0-based)."""
        return VertexMatrixFamily(self.vertices, tuple(self.matrices[p] for p in perm))

    def transposed(self) -> VertexMatrixFamily:
        return VertexMatrixFamily(self.vertices, tuple(m.T for m in self.matrices))


@dataclass(frozen=True)
class ValidationFailure:
    kind: str
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    failures: tuple[ValidationFailure, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.failures

    def kinds(self) -> set[str]:
        return {f.kind for f in self.failures}


def validate_family(family: VertexMatrixFamily) -> ValidationReport:
    """Check every necessary condition and report all violations at once."""
    failures = []
    n = family.n
    shaped = []
    for i, m in enumerate(family.matrices, start=1):
        if m.shape != (n, n):
            failures.append(ValidationFailure(
                SHAPE_MISMATCH, f"M_{i} is {m.rows}x{m.cols}, expected {n}x{n}"))
        else:
            shaped.append((i, m))
    for i, m in shaped:
        neg = [(r, c) for r in range(n) for c in range(n) if m[r, c] < 0]
        if neg:
            failures.append(ValidationFailure(NEGATIVE_ENTRY, f"M_{i} has negative entries at {neg}"))
        for r in range(n):
            if not any(m.row(r)):
                failures.append(ValidationFailure(
                    ZERO_ROW, f"M_{i} row {r} (vertex {family.vertices[r]!r}) is zero: vertex is a source"))
    for a, (i, mi) in enumerate(shaped):
        for j, mj in shaped[a + 1:]:
            if mi @ mj != mj @ mi:
                failures.append(ValidationFailure(NON_COMMUTING, f"M_{i} M_{j} != M_{j} M_{i}"))
    return ValidationReport(tuple(failures))


def require_valid(family: VertexMatrixFamily) -> VertexMatrixFamily:
    report = validate_family(family)
    if not report.ok:
        raise InvalidFamily(report)
    return family


@dataclass(frozen=True)
class Edge:
    id: str
    color: int
    range: str
    source: str
    label: tuple[int, ...] | None = None


@dataclass(frozen=True)
class SkeletonGraph:
    """Coloured directed multigraph: the 1-skeleton of a k-graph.

    Colours run from 1 to ``k``. An edge's optional ``label`` is a residue
    tuple used by skew products.
    """

    k: int
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        if self.k < 1:
            raise InvalidInput("rank k must be positive")
        if not self.vertices:
            raise InvalidInput("vertex set must be nonempty")
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidInput("vertex names must be distinct")
        names = set(self.vertices)
        seen = set()
        for e in self.edges:
            if e.id in seen:
                raise InvalidInput(f"duplicate edge id {e.id!r}")
            seen.add(e.id)
            if not 1 <= e.color <= self.k:
                raise InvalidInput(f"edge {e.id!r} has colour {e.color} outside 1..{self.k}")
            for end in (e.range, e.source):
                if end not in names:
                    raise InvalidInput(f"edge {e.id!r} refers to unknown vertex {end!r}")

    def edges_of_color(self, color: int) -> list[Edge]:
        return [e for e in self.edges if e.color == color]


def matrices_from_skeleton(skeleton: SkeletonGraph, validate: bool = True) -> VertexMatrixFamily:
    """Count colour-``i`` edges by (range, source).

    Raises :class:`InvalidFamily` when ``validate`` is set and the counted
    matrices violate a necessary condition.
    """
    index = {v: i for i, v in enumerate(skeleton.vertices)}
    n = len(index)
    counts = [[[0] * n for _ in range(n)] for _ in range(skeleton.k)]
    for e in skeleton.edges:
        counts[e.color - 1][index[e.range]][index[e.source]] += 1
    family = VertexMatrixFamily(skeleton.vertices, tuple(IntMatrix.from_rows(c) for c in counts))
    if validate:
        require_valid(family)
    return family
