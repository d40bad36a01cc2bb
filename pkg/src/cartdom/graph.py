"""Simple undirected graphs on dense integer vertices, and their Cartesian products.

Adjacency is stored as one Python ``int`` per vertex used as a bit row: bit ``u``
of ``adjacency[v]`` is set iff ``u`` and ``v`` are adjacent.  Vertex sets are
exchanged as ``frozenset`` objects at the public surface and as bit masks
internally.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Graph",
    "GraphError",
    "ParseError",
    "ProductGraph",
    "axis_neighborhood",
    "cartesian_product",
    "edge_axis",
    "has_isolated_vertex",
    "mask_of",
    "members",
    "neighbors_closed",
    "neighbors_open",
    "parse_edge_list",
    "project",
    "read_edge_list",
    "to_edge_list",
]


class GraphError(ValueError):
    pass


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    """Ascending list of the set bits of ``mask``."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class Graph:
    order: int
    adjacency: tuple[int, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.order < 1:
            raise GraphError("a graph needs at least one vertex")
        if len(self.adjacency) != self.order:
            raise GraphError("adjacency must have one row per vertex")
        full = (1 << self.order) - 1
        for v, row in enumerate(self.adjacency):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbor out of range")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in members(row):
                if not self.adjacency[u] >> v & 1:
                    raise GraphError(f"edge {v}-{u} is not symmetric")

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]], name: str = "") -> Graph:
        if order < 1:
            raise GraphError("a graph needs at least one vertex")
        rows = [0] * order
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise GraphError(f"edge {u}-{v} out of range for order {order}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(order, tuple(rows), name)

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    @property
    def closed_rows(self) -> tuple[int, ...]:
        return tuple(row | 1 << v for v, row in enumerate(self.adjacency))

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, row in enumerate(self.adjacency):
            for v in members(row >> (u + 1) << (u + 1)):
                yield u, v

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def with_name(self, name: str) -> Graph:
        return Graph(self.order, self.adjacency, name)

    def __repr__(self):
        label = f"{self.name!r}, " if self.name else ""
        return f"Graph({label}order={self.order}, edges={self.num_edges})"


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.order:
        raise IndexError(f"vertex {v} out of range for order {g.order}")


def neighbors_open(g: Graph, v: int) -> frozenset[int]:
    _check_vertex(g, v)
    return frozenset(members(g.adjacency[v]))


def neighbors_closed(g: Graph, v: int) -> frozenset[int]:
    _check_vertex(g, v)
    return frozenset(members(g.adjacency[v] | 1 << v))


def has_isolated_vertex(g: Graph) -> bool:
    return any(row == 0 for row in g.adjacency)


def parse_edge_list(text: str | bytes, name: str = "") -> Graph:
    """Parse the edge-list format.

    Lines starting with ``#`` are comments.  The first remaining line holds the
    vertex count; each further line is ``u v``.  Duplicate edges collapse.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    order = None
    rows: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if order is None:
            if len(parts) != 1:
                raise ParseError(f"expected a vertex count, got {line!r}", lineno)
            try:
                order = int(parts[0])
            except ValueError:
                raise ParseError(f"vertex count is not an integer: {line!r}", lineno) from None
            if order < 1:
                raise ParseError("vertex count must be at least 1", lineno)
            rows = [0] * order
            continue
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"vertex indices must be integers: {line!r}", lineno) from None
        for w in (u, v):
            if not 0 <= w < order:
                raise ParseError(f"vertex {w} out of range (order {order})", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    if order is None:
        raise ParseError("missing vertex count header")
    return Graph(order, tuple(rows), name)


def read_edge_list(path) -> Graph:
    from pathlib import Path

    path = Path(path)
    return parse_edge_list(path.read_bytes(), name=path.stem)


def to_edge_list(g: Graph) -> str:
    lines = []
    if g.name:
        lines.append(f"# {g.name}")
    lines.append(str(g.order))
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ProductGraph:
    """Cartesian product of two or more factors.

    Vertex ``(u_0, ..., u_{n-1})`` is stored at ``sum(u_i * strides[i])``; the
    last factor is the least significant digit.
    """

    factors: tuple[Graph, ...]
    graph: Graph
    strides: tuple[int, ...]

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(f.order for f in self.factors)

    @property
    def ndim(self) -> int:
        return len(self.factors)

    def encode(self, coords: Sequence[int]) -> int:
        if len(coords) != len(self.factors):
            raise GraphError(f"expected {len(self.factors)} coordinates, got {len(coords)}")
        index = 0
        for c, f, s in zip(coords, self.factors, self.strides):
            if not 0 <= c < f.order:
                raise IndexError(f"coordinate {c} out of range for factor of order {f.order}")
            index += c * s
        return index

    def decode(self, index: int) -> tuple[int, ...]:
        _check_vertex(self.graph, index)
        return tuple(index // s % f.order for f, s in zip(self.factors, self.strides))

    def coordinate(self, index: int, axis: int) -> int:
        return index // self.strides[axis] % self.factors[axis].order


def cartesian_product(factors: Sequence[Graph]) -> ProductGraph:
    factors = tuple(factors)
    if len(factors) < 2:
        raise GraphError("a Cartesian product needs at least two factors")
    orders = [f.order for f in factors]
    strides = [1] * len(factors)
    for i in range(len(factors) - 2, -1, -1):
        strides[i] = strides[i + 1] * orders[i + 1]
    total = math.prod(orders)

    rows = [0] * total
    for index in range(total):
        row = 0
        for f, s, n in zip(factors, strides, orders):
            c = index // s % n
            base = index - c * s
            for a in members(f.adjacency[c]):
                row |= 1 << (base + a * s)
        rows[index] = row
    name = "x".join(f.name or f"G{f.order}" for f in factors)
    return ProductGraph(factors, Graph(total, tuple(rows), name), tuple(strides))


def edge_axis(p: ProductGraph, u: int, v: int) -> int:
    """The unique coordinate in which the product edge ``u v`` varies."""
    if not p.graph.has_edge(u, v):
        raise GraphError(f"{p.decode(u)} and {p.decode(v)} are not adjacent")
    diff = [i for i, (a, b) in enumerate(zip(p.decode(u), p.decode(v))) if a != b]
    assert len(diff) == 1
    return diff[0]


def axis_neighborhood_mask(p: ProductGraph, u: int, axis: int) -> int:
    s = p.strides[axis]
    c = u // s % p.factors[axis].order
    base = u - c * s
    m = 0
    for a in members(p.factors[axis].adjacency[c]):
        m |= 1 << (base + a * s)
    return m


def axis_neighborhood(p: ProductGraph, u: int, axis: int) -> frozenset[int]:
    _check_vertex(p.graph, u)
    if not 0 <= axis < p.ndim:
        raise IndexError(f"axis {axis} out of range for {p.ndim} factors")
    return frozenset(members(axis_neighborhood_mask(p, u, axis)))


def project(p: ProductGraph, vertices: Iterable[int], axis: int) -> frozenset[int]:
    if not 0 <= axis < p.ndim:
        raise IndexError(f"axis {axis} out of range for {p.ndim} factors")
    out = set()
    for u in vertices:
        _check_vertex(p.graph, u)
        out.add(p.coordinate(u, axis))
    return frozenset(out)
