"""Certificate checks and exact solvers for plain, total and paired domination."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from cartdom import _search
from cartdom.graph import Graph, has_isolated_vertex, mask_of, members

__all__ = [
    "DominationCertificate",
    "DominationError",
    "DominationKind",
    "DominationResult",
    "brute_force_number",
    "domination_number",
    "is_dominating",
    "is_paired_dominating",
    "is_total_dominating",
    "max_matching_in_induced",
]

Pairing = tuple[tuple[int, int], ...]

# exact memoised matching up to this many vertices, networkx above
MATCHING_MEMO_LIMIT = 24


class DominationError(ValueError):
    """Total or paired domination requested on a graph with an isolated vertex."""


class DominationKind(str, enum.Enum):
    PLAIN = "plain"
    TOTAL = "total"
    PAIRED = "paired"

    @property
    def symbol(self) -> str:
        return {"plain": "gamma", "total": "gamma_t", "paired": "gamma_pr"}[self.value]


@dataclass(frozen=True)
class DominationCertificate:
    kind: DominationKind
    members: frozenset[int]
    pairing: Pairing | None = None

    def __post_init__(self):
        if (self.kind is DominationKind.PAIRED) != (self.pairing is not None):
            raise ValueError("a pairing is present exactly for paired certificates")

    def sorted_members(self) -> list[int]:
        return sorted(self.members)

    def is_valid(self, g: Graph) -> bool:
        if self.kind is DominationKind.PLAIN:
            return is_dominating(g, self.members)
        if self.kind is DominationKind.TOTAL:
            return is_total_dominating(g, self.members)
        return is_dominating(g, self.members) and _is_perfect_pairing(g, self.members, self.pairing)


@dataclass(frozen=True)
class DominationResult:
    number: int
    certificate: DominationCertificate


def _as_mask(g: Graph, vertices: Iterable[int] | int) -> int:
    if isinstance(vertices, int):
        m = vertices
    else:
        m = mask_of(vertices)
    if m < 0 or m & ~g.full_mask:
        raise IndexError("vertex set is not contained in the graph")
    return m


def _dominated_by(g: Graph, m: int) -> int:
    covered = m
    for v in members(m):
        covered |= g.adjacency[v]
    return covered


def is_dominating(g: Graph, vertices) -> bool:
    return _dominated_by(g, _as_mask(g, vertices)) == g.full_mask


def is_total_dominating(g: Graph, vertices) -> bool:
    covered = 0
    for v in members(_as_mask(g, vertices)):
        covered |= g.adjacency[v]
    return covered == g.full_mask


def _is_perfect_pairing(g: Graph, vertices, pairing) -> bool:
    seen: set[int] = set()
    for a, b in pairing:
        if a in seen or b in seen or a == b or not g.has_edge(a, b):
            return False
        seen.update((a, b))
    return seen == set(vertices)


def max_matching_in_induced(g: Graph, vertices) -> Pairing:
    """A maximum-cardinality matching of the subgraph induced by ``vertices``.

    Exact.  Pairs are ``(a, b)`` with ``a < b``, sorted; the result is a
    deterministic function of the graph and the vertex set.
    """
    m = _as_mask(g, vertices)
    if m.bit_count() > MATCHING_MEMO_LIMIT:
        return _networkx_matching(g, m)
    adj = g.adjacency

    @lru_cache(maxsize=None)
    def best(rest: int) -> tuple[int, Pairing]:
        if rest.bit_count() < 2:
            return 0, ()
        low = rest & -rest
        v = low.bit_length() - 1
        rest ^= low
        cap = (rest.bit_count() + 1) // 2
        size, pairs = -1, ()
        nbrs = adj[v] & rest
        while nbrs and size < cap:
            lw = nbrs & -nbrs
            nbrs ^= lw
            s, p = best(rest ^ lw)
            if s + 1 > size:
                size, pairs = s + 1, ((v, lw.bit_length() - 1),) + p
        if size < cap:
            s, p = best(rest)  # v stays unmatched
            if s > size:
                size, pairs = s, p
        return size, pairs

    return tuple(sorted(best(m)[1]))


def _networkx_matching(g: Graph, m: int) -> Pairing:
    import networkx as nx

    h = nx.Graph()
    verts = members(m)
    h.add_nodes_from(verts)
    h.add_edges_from((u, v) for u in verts for v in members(g.adjacency[u] & m) if u < v)
    matching = nx.max_weight_matching(h, maxcardinality=True)
    return tuple(sorted((min(a, b), max(a, b)) for a, b in matching))


def is_paired_dominating(g: Graph, vertices) -> tuple[bool, Pairing | None]:
    m = _as_mask(g, vertices)
    if m.bit_count() % 2 or not is_dominating(g, m):
        return False, None
    pairing = max_matching_in_induced(g, m)
    if 2 * len(pairing) != m.bit_count():
        return False, None
    return True, pairing


def _check_kind(g: Graph, kind) -> DominationKind:
    kind = DominationKind(kind)
    if kind is not DominationKind.PLAIN and has_isolated_vertex(g):
        raise DominationError(f"{kind.value} domination is undefined: graph has an isolated vertex")
    return kind


def _certificate(g: Graph, kind: DominationKind, m: int) -> DominationCertificate:
    verts = frozenset(members(m))
    if kind is DominationKind.PAIRED:
        ok, pairing = is_paired_dominating(g, m)
        assert ok
        return DominationCertificate(kind, verts, pairing)
    return DominationCertificate(kind, verts)


@lru_cache(maxsize=4096)
def _solve_cached(g: Graph, kind: DominationKind, backend: str | None) -> DominationResult:
    closed = g.closed_rows
    if kind is DominationKind.PLAIN:
        m = _search.min_dominating(g.order, closed, closed, None, False, backend)
    elif kind is DominationKind.TOTAL:
        m = _search.min_dominating(g.order, g.adjacency, g.adjacency, None, False, backend)
    else:
        m = _search.min_dominating(g.order, closed, closed, g.adjacency, True, backend)
    if m < 0:
        raise DominationError(f"no {kind.value} dominating set exists")
    return DominationResult(m.bit_count(), _certificate(g, kind, m))


def domination_number(g: Graph, kind="plain", backend: str | None = None) -> DominationResult:
    """Exact gamma, gamma_t or gamma_pr with a witnessing certificate.

    Among all minimum sets the lexicographically smallest (as a sorted tuple)
    is returned.  ``backend`` forces ``"python"`` or ``"compiled"``.
    """
    kind = _check_kind(g, kind)
    return _solve_cached(g, kind, backend)


def brute_force_number(g: Graph, kind="plain", max_order: int = 20) -> int:
    """Minimum size by enumerating subsets in increasing size.  Test oracle only."""
    kind = _check_kind(g, kind)
    if g.order > max_order:
        raise ValueError(f"brute force is capped at order {max_order}, got {g.order}")
    for size in range(1, g.order + 1):
        if kind is DominationKind.PAIRED and size % 2:
            continue
        for subset in combinations(range(g.order), size):
            if kind is DominationKind.PLAIN:
                ok = is_dominating(g, subset)
            elif kind is DominationKind.TOTAL:
                ok = is_total_dominating(g, subset)
            else:
                ok = is_paired_dominating(g, subset)[0]
            if ok:
                return size
    raise DominationError(f"no {kind.value} dominating set exists")
