"""The double-count ledger: every inequality from per-slab bounds to the final product bound."""

from __future__ import annotations

import math
from dataclasses import dataclass

from cartdom.machinery.claims import slab_facts
from cartdom.machinery.counting import matching_axes
from cartdom.machinery.facts import Fact, eq, leq, verdict
from cartdom.machinery.instance import TheoremInstance
from cartdom.machinery.matrix import ConditionMatrix
from cartdom.machinery.partition import BlockGrid


@dataclass(frozen=True)
class DoubleCount:
    theorem: int
    left: int
    right: int
    constant: int
    D_size: int
    facts: tuple[Fact, ...]

    @property
    def failed(self) -> list[Fact]:
        return [f for f in self.facts if not f.holds]

    @property
    def passed(self) -> bool:
        return self.left <= self.right and not self.failed


def membership_transfer_check(F: ConditionMatrix, grid: BlockGrid, labels=None) -> bool:
    """A j-matrix cell of any ``F^i`` is a j-matrix of ``F^j``, and every cell is an i-matrix of some ``F^i``.

    ``labels`` may carry precomputed per-cell classifications (tuples of
    j-sets, one per grid of the family).
    """
    from cartdom.machinery.counting import classify_cell

    if F.variant != "per_axis_family":
        raise ValueError("the transfer check needs the per-axis family of matrices")
    n = F.product.ndim
    for cell in grid.cells:
        lab = labels[cell] if labels is not None else classify_cell(F, grid, cell)
        for i in range(1, n + 1):
            for j in lab[i - 1]:
                if j not in lab[j - 1]:
                    return False
        if not any(i in lab[i - 1] for i in range(1, n + 1)):
            return False
    return True


def double_count(inst: TheoremInstance) -> DoubleCount:
    """Check the whole counting chain of ``inst.theorem`` on this instance."""
    n = inst.ndim
    D = inst.D
    size = len(D)
    thm = inst.theorem
    blocks = [len(p) for p in inst.partitions]
    Q = inst.qualifying
    tally = Q.tallies
    facts: list[Fact] = []

    facts.append(eq("cells = product of block counts", len(inst.grid), math.prod(blocks)))
    facts.append(eq("cells counted by no axis", len(Q.uncovered()), 0))
    paired = inst.partitions[0].mode == "paired"
    if paired:
        for a, (num, k) in enumerate(zip(inst.factor_numbers, blocks)):
            facts.append(eq(f"axis{a}: factor number = 2 x block count", num, 2 * k))
        along = matching_axes(inst.product, D, inst.certificate.pairing)
        D_axis = [sum(1 for u in D if along[u] == a) for a in range(n)]
    else:
        for a, (num, k) in enumerate(zip(inst.factor_numbers, blocks)):
            facts.append(eq(f"axis{a}: factor number = block count", num, k))

    for a in range(n):
        slabs = inst.slabs[a]
        facts.append(eq(f"axis{a}: sum |Z| = |D|", slabs.total(), size))
        if slabs.split is not None:
            split_total = sum(len(z) for parts in slabs.split.values() for z in parts)
            facts.append(eq(f"axis{a}: sum of split Z = |D|", split_total, size))
        facts.extend(slab_facts(inst, a))
        facts.append(eq(f"axis{a}: tally = sum |S|", tally[a], sum(len(s) for s in Q.S[a].values())))
        if paired:
            facts.append(leq(f"axis{a}: 2 x tally <= 2|D| - |D_axis|", 2 * tally[a], 2 * size - D_axis[a]))
        else:
            facts.append(leq(f"axis{a}: tally <= |D|", tally[a], size))

    cells = math.prod(blocks)
    covered = sum(tally.values())
    facts.append(leq("cells <= sum of tallies", cells, covered))
    if thm in (1, 2):
        facts.append(leq("d_H + d_G <= 2|D|", covered, 2 * size))
    elif thm == 3:
        facts.append(leq("sum of tallies <= n|D|", covered, n * size))
    elif thm == 4:
        facts.append(leq("2|d_H| <= 2|D_G| + |D_H|", 2 * tally[1], 2 * D_axis[0] + D_axis[1]))
        facts.append(leq("2|d_G| <= |D_G| + 2|D_H|", 2 * tally[0], D_axis[0] + 2 * D_axis[1]))
        facts.append(leq("2(d_H + d_G) <= 3|D|", 2 * covered, 3 * size))
        facts.append(eq("gamma_pr(G) gamma_pr(H) = 4 x cells", inst.left, 4 * cells))
    else:
        facts.append(
            verdict("membership transfers to the diagonal family", membership_transfer_check(inst.matrix, inst.grid, Q.labels))
        )
        facts.append(eq("sum |D_axis| = |D|", sum(D_axis), size))
        facts.append(leq("2 x sum of tallies <= (2n - 1)|D|", 2 * covered, (2 * n - 1) * size))
        facts.append(eq("product of numbers = 2^n x cells", inst.left, 2**n * cells))

    facts.append(leq(f"final: product of factor numbers <= {inst.constant}|D|", inst.left, inst.right))
    return DoubleCount(thm, inst.left, inst.right, inst.constant, size, tuple(facts))
