"""Products of 1-graph skeletons and skew products by finite abelian groups.

For an abelian group every edge labelling of a product of bouquets extends
to a functor, so labels are taken as given without consistency checks.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import LabelOutOfRange, RankNotOne, UnsupportedGroup
from .model import Edge, SkeletonGraph


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """``Z/m_1 x ... x Z/m_r``; the empty tuple is the trivial group."""

    orders: tuple[int, ...] = ()

    def __post_init__(self):
        orders = tuple(self.orders)
        object.__setattr__(self, "orders", orders)
        for m in orders:
            if isinstance(m, bool) or not isinstance(m, int):
                raise LabelOutOfRange(f"group orders must be integers, got {m!r}")
            if m == 0:
                raise UnsupportedGroup(
                    "infinite cyclic factor Z (order 0) requested: only finite groups are supported, "
                    "since a skew product by an infinite group has an infinite vertex set"
                )
            if m < 0:
                raise LabelOutOfRange(f"group orders must be positive, got {m}")

    @property
    def order(self) -> int:
        return math.prod(self.orders)

    @property
    def identity(self) -> tuple[int, ...]:
        return (0,) * len(self.orders)

    def elements(self) -> list[tuple[int, ...]]:
        """All elements in lexicographic order of residue tuples."""
        return list(itertools.product(*(range(m) for m in self.orders)))

    def check(self, g) -> tuple[int, ...]:
        g = tuple(g)
        if len(g) != len(self.orders) or any(
            isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < m
            for x, m in zip(g, self.orders)
        ):
            raise LabelOutOfRange(f"{list(g)} is not an element of Z/{self.orders}")
        return g

    def add(self, g, h) -> tuple[int, ...]:
        return tuple((a + b) % m for a, b, m in zip(g, h, self.orders))

    @staticmethod
    def format(g: Sequence[int]) -> str:
        return ",".join(str(x) for x in g)


def _tuple_name(parts: Sequence[str]) -> str:
    return "(" + ",".join(parts) + ")"


def product(factors: Sequence[SkeletonGraph]) -> SkeletonGraph:
    """Product of rank-1 skeletons, one colour per factor.

    Vertices are tuples in lexicographic order of the factors' vertex
    orders, named ``"(v1,...,vk)"``. A colour-``i`` edge pairs an edge of
    factor ``i`` with a fixed vertex in every other factor, and inherits the
    factor edge's label.
    """
    if not factors:
        raise RankNotOne("product needs at least one factor")
    for idx, f in enumerate(factors, start=1):
        if f.k != 1:
            raise RankNotOne(f"factor {idx} has rank {f.k}, expected 1")
    k = len(factors)
    tuples = list(itertools.product(*(f.vertices for f in factors)))
    edges = []
    for i, f in enumerate(factors):
        others = [g.vertices for j, g in enumerate(factors) if j != i]
        for e in f.edges:
            for rest in itertools.product(*others):
                rng = list(rest[:i]) + [e.range] + list(rest[i:])
                src = list(rest[:i]) + [e.source] + list(rest[i:])
                rname = _tuple_name(rng)
                edges.append(Edge(
                    id=f"{i + 1}:{e.id}@{rname}",
                    color=i + 1,
                    range=rname,
                    source=_tuple_name(src),
                    label=e.label,
                ))
    return SkeletonGraph(k, tuple(_tuple_name(t) for t in tuples), tuple(edges))


def skew_product(
    skeleton: SkeletonGraph,
    group: FiniteAbelianGroup,
    labelling: Mapping[str, Sequence[int]] | None = None,
) -> SkeletonGraph:
    """Skew product ``G x_c skeleton``.

    Each edge ``e`` from ``v`` to ``u`` and each ``g`` give an edge with
    range ``(g, u)`` and source ``(g + c(e), v)``. Labels come from
    ``labelling`` when given, otherwise from the edges themselves.
    Vertex ``(g, v)`` is named ``"g|v"`` with ``g`` comma separated.
    """
    labels = {}
    for e in skeleton.edges:
        raw = labelling.get(e.id) if labelling is not None else None
        if raw is None:
            raw = e.label
        if raw is None:
            raise LabelOutOfRange(f"edge {e.id!r} has no label")
        labels[e.id] = group.check(raw)
    if labelling is not None:
        unknown = set(labelling) - set(labels)
        if unknown:
            raise LabelOutOfRange(f"labelling names unknown edges {sorted(unknown)}")

    def name(g, v):
        return f"{group.format(g)}|{v}"

    elements = group.elements()
    vertices = tuple(name(g, v) for g in elements for v in skeleton.vertices)
    edges = []
    for g in elements:
        for e in skeleton.edges:
            edges.append(Edge(
                id=f"{group.format(g)}|{e.id}",
                color=e.color,
                range=name(g, e.range),
                source=name(group.add(g, labels[e.id]), e.source),
            ))
    return SkeletonGraph(skeleton.k, vertices, tuple(edges))


def bouquet(n: int, prefix: str = "a", labels: Sequence[Sequence[int]] | None = None) -> SkeletonGraph:
    """The 1-graph with one vertex ``*`` and ``n`` loops ``a1..an``."""
    if labels is not None and len(labels) != n:
        raise ValueError("need one label per loop")
    edges = tuple(
        Edge(f"{prefix}{i + 1}", 1, "*", "*", tuple(labels[i]) if labels is not None else None)
        for i in range(n)
    )
    return SkeletonGraph(1, ("*",), edges)
