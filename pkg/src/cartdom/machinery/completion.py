"""Turning a dominating set with a partial matching into a paired dominating set."""

from __future__ import annotations

from dataclasses import dataclass, field

from cartdom.graph import Graph, mask_of, members
from cartdom.machinery.partition import MachineryError
from cartdom.solvers import is_dominating


class CompletionFinding(MachineryError):
    """A completion step broke domination or a bound it should keep."""


@dataclass(frozen=True)
class PairCompletion:
    A: frozenset[int]
    B: frozenset[int]
    C: frozenset[int]
    M: tuple[tuple[int, int], ...]  # matching after step 2
    M1: frozenset[int]
    M2: frozenset[int]
    E_rec: frozenset[int]
    pairing: tuple[tuple[int, int], ...]
    removed: tuple[int, ...] = ()
    findings: tuple[str, ...] = field(default=())

    @property
    def size_bound(self) -> int:
        return 2 * len(self.A) + len(self.M1) + 2 * len(self.M2)

    @property
    def within_bound(self) -> bool:
        return len(self.E_rec) <= self.size_bound


def _is_perfect(h: Graph, vertices: frozenset[int], pairs) -> bool:
    seen: set[int] = set()
    for a, b in pairs:
        if a in seen or b in seen or not h.has_edge(a, b):
            return False
        seen.update((a, b))
    return seen == vertices


def _covered(h: Graph, E) -> int:
    m = mask_of(E)
    for v in E:
        m |= h.adjacency[v]
    return m


def pair_completion(h: Graph, A, B, C, pairsC, preferred=(), strict: bool = True) -> PairCompletion:
    """Extend ``A | B | C`` to a paired dominating set of ``h``.

    1. ``M`` starts as ``pairsC``, which must perfectly match ``C``.
    2. Unmatched vertices of ``B`` get a maximal matching: edges from
       ``preferred`` first, then every edge of ``h`` among them, each pass
       greedy in lexicographic order.
    3. Each still-unmatched vertex of ``E``, ascending, adopts its lowest
       neighbor outside ``V(M)``; with none available it is dropped, after
       which domination is re-checked.

    With ``strict`` any failed check raises :class:`CompletionFinding`;
    otherwise it is listed in ``findings``.
    """
    A, B, C = frozenset(A), frozenset(B), frozenset(C)
    for v in A | B | C:
        if not 0 <= v < h.order:
            raise IndexError(f"vertex {v} out of range")
    pairsC = tuple(tuple(sorted(p)) for p in pairsC)
    if not _is_perfect(h, C, pairsC):
        raise MachineryError("pairsC must be disjoint edges covering C exactly")

    M = list(pairsC)
    matched = set(C)
    free = (B - matched)
    free_mask = mask_of(free)
    candidates = sorted(tuple(sorted(e)) for e in preferred)
    candidates += [(u, v) for u in sorted(free) for v in members(h.adjacency[u] & free_mask) if u < v]
    for u, v in candidates:
        if u in free and v in free and u not in matched and v not in matched and h.has_edge(u, v):
            M.append((u, v))
            matched.update((u, v))
    step2 = tuple(M)
    M1 = frozenset(matched)
    M2 = (B | C) - M1

    findings = []
    E = set(A | B | C)
    removed = []
    for v in sorted(E - matched):
        if v in matched or v not in E:
            continue
        spare = h.adjacency[v] & ~mask_of(matched)
        if spare:
            w = (spare & -spare).bit_length() - 1
            M.append((min(v, w), max(v, w)))
            matched.update((v, w))
            E.add(w)
        else:
            before = _covered(h, E)
            E.discard(v)
            removed.append(v)
            lost = before & ~_covered(h, E)
            if lost:
                findings.append(f"dropping vertex {v} undominated {members(lost)}")

    E_rec = frozenset(E)
    pairing = tuple(sorted(M))
    if not is_dominating(h, E_rec):
        findings.append("completed set is not dominating")
    if not _is_perfect(h, E_rec, pairing):
        findings.append("completed set is not perfectly matched")
    result = PairCompletion(A, B, C, step2, M1, M2, E_rec, pairing, tuple(removed), tuple(findings))
    if not result.within_bound:
        findings.append(f"|E_rec| = {len(E_rec)} exceeds 2|A| + |M1| + 2|M2| = {result.size_bound}")
        result = PairCompletion(A, B, C, step2, M1, M2, E_rec, pairing, tuple(removed), tuple(findings))
    if strict and findings:
        raise CompletionFinding("; ".join(findings))
    return result
