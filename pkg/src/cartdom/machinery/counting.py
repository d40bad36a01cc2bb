"""Slab sets Z and qualifying-block sets S behind the double count."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import numpy as np

from cartdom.graph import ProductGraph, edge_axis, mask_of
from cartdom.machinery.matrix import ConditionMatrix, classify_jmatrix, classify_binary_cell
from cartdom.machinery.partition import BlockGrid, MachineryError, cell_of

Key = tuple[int, ...]


@dataclass(frozen=True)
class SlabSets:
    """D cut into slabs that run the full length of ``axis``.

    A slab is keyed by its block indices on every other axis, so for two
    factors ``axis=1`` gives the row slabs ``D_i x V(H)`` keyed ``(i,)``.
    ``split[key][a]`` holds the members whose matching edge varies along ``a``.
    """

    axis: int
    Z: dict[Key, frozenset[int]]
    split: dict[Key, tuple[frozenset[int], ...]] | None = None

    def total(self) -> int:
        return sum(len(z) for z in self.Z.values())


def matching_axes(p: ProductGraph, D, pairing) -> dict[int, int]:
    """Axis of the matching edge at every member of ``D``."""
    dset = set(D)
    found: dict[int, int] = {}
    for u, w in pairing:
        if u in found or w in found:
            raise MachineryError(f"pairing reuses a vertex in ({u}, {w})")
        a = edge_axis(p, u, w)
        found[u] = found[w] = a
    if set(found) != dset:
        raise MachineryError("pairing does not cover D exactly")
    return found


def slab_sets(p: ProductGraph, D, grid: BlockGrid, axis: int, pairing=None) -> SlabSets:
    owners = [part.block_of for part in grid.partitions]
    Z: dict[Key, set[int]] = {key: set() for key in grid.slabs(axis)}
    for u in D:
        coords = p.decode(u)
        key = tuple(owners[a][c] for a, c in enumerate(coords) if a != axis)
        Z[key].add(u)
    split = None
    if pairing is not None:
        along = matching_axes(p, D, pairing)
        split = {
            key: tuple(frozenset(u for u in z if along[u] == a) for a in range(p.ndim))
            for key, z in Z.items()
        }
    return SlabSets(axis, {k: frozenset(v) for k, v in Z.items()}, split)


@dataclass(frozen=True)
class QualifyingBlocks:
    """Per peer axis, the blocks of each slab whose cell meets that axis' condition.

    For two factors with a binary matrix, axis 1 collects the cells where
    every column has a 1 (the row sets ``S_i``, tally ``d_H``) and axis 0 the
    cells where every row has a 0 (``S-bar_j``, tally ``d_G``).  With n-ary matrices axis ``a`` collects
    the ``(a+1)``-matrices, of ``F`` or of ``F^(a+1)`` for the family variant.
    """

    variant: str
    labels: dict[Key, Any]
    S: dict[int, dict[Key, tuple[int, ...]]]

    @property
    def tallies(self) -> dict[int, int]:
        return {a: sum(len(s) for s in per.values()) for a, per in self.S.items()}

    @property
    def d_H(self) -> int:
        return self.tallies[1]

    @property
    def d_G(self) -> int:
        return self.tallies[0]

    def qualifies(self, cell, axis: int) -> bool:
        return _qualifies(self.variant, self.labels[tuple(cell)], axis)

    def uncovered(self) -> list[Key]:
        """Cells counted by no axis; the classifiers guarantee there are none."""
        return [c for c in self.labels if not any(self.qualifies(c, a) for a in self.S)]


def _qualifies(variant: str, label, axis: int) -> bool:
    if variant in ("membership_or_axis", "axis_only"):
        return ("a" if axis == 1 else "b") in label
    if variant == "min_axis":
        return axis + 1 in label
    return axis + 1 in label[axis]


def cell_submatrix(F: ConditionMatrix, grid: BlockGrid, cell, i: int | None = None) -> np.ndarray:
    return F.grid(i)[np.ix_(*grid.index_lists(cell))]


def classify_cell(F: ConditionMatrix, grid: BlockGrid, cell):
    n = F.product.ndim
    if F.variant in ("membership_or_axis", "axis_only"):
        return classify_binary_cell(cell_submatrix(F, grid, cell))
    if F.variant == "min_axis":
        return classify_jmatrix(cell_submatrix(F, grid, cell), n)
    return tuple(classify_jmatrix(cell_submatrix(F, grid, cell, i), n) for i in range(1, n + 1))


def qualifying_blocks(F: ConditionMatrix, grid: BlockGrid) -> QualifyingBlocks:
    if F.product.shape != tuple(p.host.order for p in grid.partitions):
        raise MachineryError("matrix and grid describe different products")
    n = F.product.ndim
    labels = {cell: classify_cell(F, grid, cell) for cell in grid.cells}
    S = {}
    for axis in range(n):
        per = {}
        for key in grid.slabs(axis):
            per[key] = tuple(
                b
                for b in range(grid.shape[axis])
                if _qualifies(F.variant, labels[cell_of(key, axis, b)], axis)
            )
        S[axis] = per
    return QualifyingBlocks(F.variant, labels, S)


def projected_mask(p: ProductGraph, vertices, axis: int) -> int:
    return mask_of(p.coordinate(u, axis) for u in vertices)


__all__ = [
    "QualifyingBlocks",
    "SlabSets",
    "cell_submatrix",
    "classify_cell",
    "matching_axes",
    "projected_mask",
    "qualifying_blocks",
    "slab_sets",
]
