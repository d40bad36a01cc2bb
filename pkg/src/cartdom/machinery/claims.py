"""Per-cell claims and per-slab completions of a prepared theorem instance.

Every routine works along a *peer axis*: the slab runs the full length of
that axis and its members are projected onto that axis' factor.  For two
factors, axis 1 is the H side (row slabs, column condition) and axis 0 the G
side.
"""

from __future__ import annotations

from dataclasses import dataclass

from cartdom.graph import mask_of, members
from cartdom.machinery.completion import PairCompletion, pair_completion
from cartdom.machinery.counting import matching_axes
from cartdom.machinery.facts import Fact, eq, leq, verdict
from cartdom.machinery.instance import TheoremInstance
from cartdom.machinery.partition import MachineryError, cell_of, slab_key
from cartdom.solvers import is_dominating, is_total_dominating


@dataclass(frozen=True)
class CompletedSet:
    vertices: frozenset[int]
    facts: tuple[Fact, ...]

    @property
    def holds(self) -> bool:
        return all(f.holds for f in self.facts)


def _projection(inst: TheoremInstance, key, axis: int, vertices=None) -> int:
    p = inst.product
    if vertices is None:
        vertices = inst.slabs[axis].Z[tuple(key)]
    return mask_of(p.coordinate(u, axis) for u in vertices)


def _require(inst: TheoremInstance, cell, axis: int) -> None:
    if not inst.qualifying.qualifies(cell, axis):
        raise MachineryError(f"cell {tuple(cell)} does not meet the axis-{axis} condition")


def check_claim_domination(inst: TheoremInstance, cell, axis: int = 1) -> bool:
    """The cell's block on ``axis`` is dominated by the projection of its slab's Z."""
    cell = tuple(cell)
    _require(inst, cell, axis)
    g = inst.product.factors[axis]
    proj = _projection(inst, slab_key(cell, axis), axis)
    covered = proj
    for v in members(proj):
        covered |= g.adjacency[v]
    block = mask_of(inst.partitions[axis].blocks[cell[axis]])
    return block & ~covered == 0


def check_claim_nonself(inst: TheoremInstance, cell, axis: int = 0) -> bool:
    """Every vertex of the cell's block has a neighbor (not itself) in the projection."""
    cell = tuple(cell)
    _require(inst, cell, axis)
    g = inst.product.factors[axis]
    proj = _projection(inst, slab_key(cell, axis), axis)
    return all(g.adjacency[v] & proj for v in inst.partitions[axis].blocks[cell[axis]])


def build_completed_dominating_set(inst: TheoremInstance, key, axis: int = 1) -> CompletedSet:
    """Projection of the slab plus the representatives of its non-qualifying blocks."""
    key = tuple(key)
    part = inst.partitions[axis]
    if part.mode == "paired":
        raise MachineryError("dominating completion needs an open or closed partition on this axis")
    g = inst.product.factors[axis]
    qualifying = set(inst.qualifying.S[axis][key])
    Z = inst.slabs[axis].Z[key]
    A = set(members(_projection(inst, key, axis)))
    rest = {part.representatives[j][0] for j in range(len(part)) if j not in qualifying}
    result = frozenset(A | rest)
    tag = f"axis{axis}/slab{key}"
    facts = [
        verdict(f"{tag}: completion dominates", is_dominating(g, result)),
        leq(f"{tag}: |S| <= |projection|", len(qualifying), len(A)),
        leq(f"{tag}: |projection| <= |Z|", len(A), len(Z)),
        leq(f"{tag}: block count <= |completion|", len(part), len(result)),
    ]
    if part.mode == "closed":
        # a closed block contains its representative, so no qualifying block's vertex is reused
        facts.insert(1, eq(f"{tag}: |projection & leftover representatives|", len(A & rest), 0))
    return CompletedSet(result, tuple(facts))


def build_completed_total_dominating_set(inst: TheoremInstance, key, axis: int = 0) -> CompletedSet:
    """Projection ``A`` plus the representatives u_i of blocks neither qualifying nor with u_i in A."""
    key = tuple(key)
    part = inst.partitions[axis]
    if part.mode != "open":
        raise MachineryError("total completion needs an open partition on this axis")
    g = inst.product.factors[axis]
    qualifying = set(inst.qualifying.S[axis][key])
    Z = inst.slabs[axis].Z[key]
    A = set(members(_projection(inst, key, axis)))
    extended = qualifying | {i for i in range(len(part)) if part.representatives[i][0] in A}
    rest = {part.representatives[i][0] for i in range(len(part)) if i not in extended}
    result = frozenset(A | rest)
    tag = f"axis{axis}/slab{key}"
    facts = (
        verdict(f"{tag}: completion totally dominates", is_total_dominating(g, result)),
        leq(f"{tag}: |S| <= extended count", len(qualifying), len(extended)),
        leq(f"{tag}: extended count <= |projection|", len(extended), len(A)),
        leq(f"{tag}: |projection| <= |Z|", len(A), len(Z)),
        leq(f"{tag}: block count <= |completion|", len(part), len(result)),
    )
    return CompletedSet(result, facts)


def complete_pairs(
    inst: TheoremInstance, key, axis: int, seed_matching: bool = True
) -> tuple[PairCompletion, tuple[Fact, ...]]:
    """Run the pair completion for one slab and check its counting chain.

    ``A`` projects the members matched along other axes, ``B`` those matched
    along ``axis``, and ``C`` holds the representative pairs of the blocks
    that do not qualify.  With ``seed_matching`` the projected matching edges
    of ``B`` are tried first in step 2.
    """
    key = tuple(key)
    part = inst.partitions[axis]
    if part.mode != "paired":
        raise MachineryError("pair completion needs a paired partition on this axis")
    p = inst.product
    g = p.factors[axis]
    split = inst.slabs[axis].split[key]
    along_axis = split[axis]
    others = frozenset().union(*(z for a, z in enumerate(split) if a != axis))
    qualifying = set(inst.qualifying.S[axis][key])
    pairsC = [part.representatives[j] for j in range(len(part)) if j not in qualifying]
    C = {v for pair in pairsC for v in pair}
    A = set(members(_projection(inst, key, axis, others)))
    B = set(members(_projection(inst, key, axis, along_axis)))

    axes = matching_axes(p, inst.D, inst.certificate.pairing)
    preferred = sorted(
        {
            tuple(sorted((p.coordinate(u, axis), p.coordinate(w, axis))))
            for u, w in inst.certificate.pairing
            if seed_matching and axes[u] == axis and u in along_axis
        }
    )
    pc = pair_completion(g, A, B, C, pairsC, preferred=preferred, strict=False)

    tag = f"axis{axis}/slab{key}"
    facts = [verdict(f"{tag}: {msg}", False) for msg in pc.findings]
    facts += [
        verdict(f"{tag}: completion is paired dominating", not pc.findings),
        leq(f"{tag}: |E_rec| <= 2|A| + |M1| + 2|M2|", len(pc.E_rec), pc.size_bound),
        leq(f"{tag}: |M1| + 2|M2| <= |C| + |Z_axis|", len(pc.M1) + 2 * len(pc.M2), len(C) + len(along_axis)),
        leq(f"{tag}: 2 x block count <= |E_rec|", 2 * len(part), len(pc.E_rec)),
        eq(f"{tag}: 2 x block count - |C| = 2|S|", 2 * len(part) - len(C), 2 * len(qualifying)),
        leq(f"{tag}: |A| <= |Z_other|", len(A), len(others)),
        leq(f"{tag}: 2|S| <= 2|Z_other| + |Z_axis|", 2 * len(qualifying), 2 * len(others) + len(along_axis)),
    ]
    return pc, tuple(facts)


def claim_kind(inst: TheoremInstance, axis: int) -> str:
    """``nonself`` where the completion must be total, ``domination`` otherwise."""
    return "nonself" if inst.partitions[axis].mode == "open" else "domination"


def slab_facts(inst: TheoremInstance, axis: int) -> list[Fact]:
    """Claims for every qualifying cell along ``axis`` and the completion of every slab."""
    facts: list[Fact] = []
    kind = claim_kind(inst, axis)
    check = check_claim_nonself if kind == "nonself" else check_claim_domination
    mode = inst.partitions[axis].mode
    for key, S in inst.qualifying.S[axis].items():
        for b in S:
            cell = cell_of(key, axis, b)
            facts.append(verdict(f"axis{axis}/cell{cell}: {kind} by slab projection", check(inst, cell, axis)))
        if mode == "closed":
            facts.extend(build_completed_dominating_set(inst, key, axis).facts)
        elif mode == "open":
            facts.extend(build_completed_total_dominating_set(inst, key, axis).facts)
        else:
            facts.extend(complete_pairs(inst, key, axis)[1])
    return facts
