"""Condition matrices over the product's vertex grid and their cell classifiers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from cartdom.graph import ProductGraph, axis_neighborhood_mask, mask_of
from cartdom.machinery.partition import MachineryError

Variant = Literal["membership_or_axis", "axis_only", "min_axis", "per_axis_family"]
VARIANTS = ("membership_or_axis", "axis_only", "min_axis", "per_axis_family")


@dataclass(frozen=True, eq=False)
class ConditionMatrix:
    """Entries indexed by factor coordinates (C order matches the vertex encoding).

    ``per_axis_family`` stacks the n grids along a leading axis: ``entries[i-1]``
    is the grid for axis ``i``.  ``min_axis`` and family values are 1-based axes.
    """

    product: ProductGraph
    variant: Variant
    entries: np.ndarray

    def grid(self, i: int | None = None) -> np.ndarray:
        if self.variant == "per_axis_family":
            if i is None:
                raise ValueError("per_axis_family needs the 1-based axis of the grid")
            return self.entries[i - 1]
        return self.entries

    def at(self, coords, i: int | None = None) -> int:
        return int(self.grid(i)[tuple(coords)])


def build_condition_matrix(p: ProductGraph, D, variant: Variant) -> ConditionMatrix:
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    dmask = D if isinstance(D, int) else mask_of(D)
    n = p.ndim
    order = p.graph.order
    if variant in ("membership_or_axis", "axis_only") and n != 2:
        raise MachineryError(f"{variant} is defined for two factors, got {n}")

    # hit[a][u]: u has a neighbor in D along axis a
    hit = [[bool(axis_neighborhood_mask(p, u, a) & dmask) for u in range(order)] for a in range(n)]
    in_d = [bool(dmask >> u & 1) for u in range(order)]

    if variant == "membership_or_axis":
        flat = np.array([in_d[u] or hit[1][u] for u in range(order)], dtype=np.int8)
    elif variant == "axis_only":
        flat = np.array(hit[1], dtype=np.int8)
    else:
        lowest = []
        for u in range(order):
            axes = [a + 1 for a in range(n) if hit[a][u]]
            if axes:
                lowest.append(axes[0])
            elif variant == "min_axis" or not in_d[u]:
                what = "total dominating" if variant == "min_axis" else "dominating"
                raise MachineryError(f"vertex {p.decode(u)} has no axis neighbor in D; D is not {what}")
            else:
                lowest.append(0)
        if variant == "min_axis":
            flat = np.array(lowest, dtype=np.int8)
        else:
            fam = np.empty((n, order), dtype=np.int8)
            for i in range(1, n + 1):
                fam[i - 1] = [i if in_d[u] else lowest[u] for u in range(order)]
            return ConditionMatrix(p, variant, fam.reshape((n,) + p.shape))
    return ConditionMatrix(p, variant, flat.reshape(p.shape))


def classify_binary_cell(sub) -> frozenset[str]:
    """Which of "every column has a 1" (``a``) and "every row has a 0" (``b``) hold."""
    sub = np.asarray(sub)
    if sub.ndim != 2 or sub.size == 0:
        raise ValueError("classify_binary_cell needs a nonempty 2-d binary matrix")
    out = set()
    if sub.any(axis=0).all():
        out.add("a")
    if (sub == 0).any(axis=1).all():
        out.add("b")
    return frozenset(out)


def classify_jmatrix(sub, n: int | None = None) -> frozenset[int]:
    """All j such that every slice fixing axis j contains the value j.

    Axes and values are 1-based; ``n`` defaults to the number of dimensions.
    """
    sub = np.asarray(sub)
    if sub.size == 0:
        raise ValueError("classify_jmatrix needs a nonempty matrix")
    n = sub.ndim if n is None else n
    if sub.ndim != n:
        raise ValueError(f"expected a {n}-dimensional grid, got {sub.ndim}")
    if sub.min() < 1 or sub.max() > n:
        raise ValueError(f"entries must lie in 1..{n}")
    out = set()
    for j in range(1, n + 1):
        others = tuple(a for a in range(n) if a != j - 1)
        if (sub == j).any(axis=others).all():
            out.add(j)
    return frozenset(out)
