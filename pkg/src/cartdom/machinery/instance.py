"""Assemble every object one theorem's double count works with."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from cartdom.graph import Graph, ProductGraph, cartesian_product
from cartdom.machinery.counting import QualifyingBlocks, SlabSets, qualifying_blocks, slab_sets
from cartdom.machinery.matrix import ConditionMatrix, build_condition_matrix
from cartdom.machinery.partition import BlockGrid, MachineryError, Partition, build_partition
from cartdom.solvers import DominationCertificate, DominationKind, domination_number


@dataclass(frozen=True)
class Layout:
    theorem: int
    modes: tuple[str, ...]  # per factor, or a single mode repeated for n factors
    product_kind: DominationKind
    variant: str
    two_factor_only: bool

    def modes_for(self, n: int) -> tuple[str, ...]:
        return self.modes if self.two_factor_only else self.modes * n

    def constant(self, n: int) -> int:
        if self.theorem in (1, 2):
            return 2
        if self.theorem == 3:
            return n
        if self.theorem == 4:
            return 6
        return 2 ** (n - 1) * (2 * n - 1)


LAYOUTS = {
    1: Layout(1, ("open", "closed"), DominationKind.PLAIN, "membership_or_axis", True),
    2: Layout(2, ("open", "open"), DominationKind.TOTAL, "axis_only", True),
    3: Layout(3, ("open",), DominationKind.TOTAL, "min_axis", False),
    4: Layout(4, ("paired", "paired"), DominationKind.PAIRED, "membership_or_axis", True),
    5: Layout(5, ("paired",), DominationKind.PAIRED, "per_axis_family", False),
}

MODE_KIND = {"open": DominationKind.TOTAL, "closed": DominationKind.PLAIN, "paired": DominationKind.PAIRED}


@dataclass(frozen=True, eq=False)
class TheoremInstance:
    theorem: int
    product: ProductGraph
    factor_certificates: tuple[DominationCertificate, ...]
    certificate: DominationCertificate
    partitions: tuple[Partition, ...]
    grid: BlockGrid
    matrix: ConditionMatrix
    slabs: dict[int, SlabSets]
    qualifying: QualifyingBlocks

    @property
    def layout(self) -> Layout:
        return LAYOUTS[self.theorem]

    @property
    def ndim(self) -> int:
        return self.product.ndim

    @property
    def D(self) -> frozenset[int]:
        return self.certificate.members

    @property
    def factor_numbers(self) -> tuple[int, ...]:
        return tuple(len(c.members) for c in self.factor_certificates)

    @property
    def left(self) -> int:
        return math.prod(self.factor_numbers)

    @property
    def constant(self) -> int:
        return self.layout.constant(self.ndim)

    @property
    def right(self) -> int:
        return self.constant * len(self.D)


def prepare_instance(
    theorem: int,
    factors: Sequence[Graph],
    factor_certificates: Sequence[DominationCertificate] | None = None,
    certificate: DominationCertificate | None = None,
    backend: str | None = None,
) -> TheoremInstance:
    """Build partitions, condition matrix, slabs and qualifying blocks.

    Certificates default to the solvers' minimum ones; user-supplied ones must
    be valid for the kinds the theorem asks for.
    """
    if theorem not in LAYOUTS:
        raise ValueError(f"theorem must be one of 1..5, got {theorem}")
    layout = LAYOUTS[theorem]
    factors = tuple(factors)
    if layout.two_factor_only and len(factors) != 2:
        raise ValueError(f"theorem {theorem} takes exactly two factors, got {len(factors)}")
    if len(factors) < 2:
        raise ValueError(f"theorem {theorem} takes at least two factors")
    modes = layout.modes_for(len(factors))

    if factor_certificates is None:
        factor_certificates = tuple(
            domination_number(f, MODE_KIND[m], backend).certificate for f, m in zip(factors, modes)
        )
    factor_certificates = tuple(factor_certificates)
    if len(factor_certificates) != len(factors):
        raise ValueError("one certificate per factor")

    p = cartesian_product(factors)
    if certificate is None:
        certificate = domination_number(p.graph, layout.product_kind, backend).certificate
    if certificate.kind is not layout.product_kind or not certificate.is_valid(p.graph):
        raise MachineryError(f"product certificate must be a valid {layout.product_kind.value} dominating set")

    partitions = tuple(build_partition(f, c, m) for f, c, m in zip(factors, factor_certificates, modes))
    grid = BlockGrid(partitions)
    F = build_condition_matrix(p, certificate.members, layout.variant)
    pairing = certificate.pairing if layout.product_kind is DominationKind.PAIRED else None
    slabs = {a: slab_sets(p, certificate.members, grid, a, pairing) for a in range(len(factors))}
    return TheoremInstance(
        theorem, p, factor_certificates, certificate, partitions, grid, F, slabs, qualifying_blocks(F, grid)
    )
