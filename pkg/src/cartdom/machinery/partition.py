"""Partitions of a factor's vertex set around a domination certificate."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product as iproduct
from typing import Literal

from cartdom.graph import Graph
from cartdom.solvers import DominationCertificate, DominationKind

Mode = Literal["open", "closed", "paired"]

_MODE_KIND = {
    "open": DominationKind.TOTAL,
    "closed": DominationKind.PLAIN,
    "paired": DominationKind.PAIRED,
}


class MachineryError(ValueError):
    pass


def _admits(g: Graph, mode: str, rep: tuple[int, ...], v: int) -> bool:
    if mode == "open":
        return g.has_edge(rep[0], v)
    return any(v == r or g.has_edge(r, v) for r in rep)


@dataclass(frozen=True)
class Partition:
    """Ordered blocks of ``host``'s vertices, one per representative.

    ``open``: block i lies in N(u_i).  ``closed``: u_i is in block i, which lies
    in N[u_i].  ``paired``: x_i, y_i are in block i, which lies in N[x_i] | N[y_i].
    """

    host: Graph
    blocks: tuple[frozenset[int], ...]
    representatives: tuple[tuple[int, ...], ...]
    mode: Mode

    def __post_init__(self):
        if self.mode not in _MODE_KIND:
            raise MachineryError(f"unknown partition mode {self.mode!r}")
        if len(self.blocks) != len(self.representatives):
            raise MachineryError("one representative per block")
        seen: set[int] = set()
        for i, (block, rep) in enumerate(zip(self.blocks, self.representatives)):
            if seen & block:
                raise MachineryError("blocks overlap")
            seen |= block
            if self.mode != "open" and not set(rep) <= block:
                raise MachineryError(f"representative {rep} is not pinned to block {i}")
            if self.mode == "paired" and not self.host.has_edge(*rep):
                raise MachineryError(f"representative pair {rep} is not an edge")
            for v in block:
                if not _admits(self.host, self.mode, rep, v):
                    raise MachineryError(f"vertex {v} is not dominated by representative {rep}")
        if seen != set(range(self.host.order)):
            raise MachineryError("blocks do not cover the vertex set")

    def __len__(self):
        return len(self.blocks)

    @property
    def block_of(self) -> tuple[int, ...]:
        owner = [0] * self.host.order
        for i, block in enumerate(self.blocks):
            for v in block:
                owner[v] = i
        return tuple(owner)


def build_partition(g: Graph, certificate: DominationCertificate, mode: Mode) -> Partition:
    """Partition ``V(g)`` by the lowest-index admissible block.

    Representatives are the certificate members in ascending order (pairs
    ordered by their smaller vertex) and are pinned to their own block first.
    """
    if mode not in _MODE_KIND:
        raise MachineryError(f"unknown partition mode {mode!r}")
    if certificate.kind is not _MODE_KIND[mode]:
        raise MachineryError(f"mode {mode!r} needs a {_MODE_KIND[mode].value} certificate")
    if not certificate.is_valid(g):
        raise MachineryError(f"certificate is not a valid {certificate.kind.value} dominating set")

    if mode == "paired":
        reps = tuple(sorted(tuple(sorted(p)) for p in certificate.pairing))
    else:
        reps = tuple((u,) for u in sorted(certificate.members))

    owner: dict[int, int] = {}
    if mode != "open":
        for i, rep in enumerate(reps):
            for r in rep:
                owner[r] = i
    for v in range(g.order):
        if v in owner:
            continue
        for i, rep in enumerate(reps):
            if _admits(g, mode, rep, v):
                owner[v] = i
                break
        else:  # pragma: no cover - a valid certificate dominates every vertex
            raise AssertionError(f"vertex {v} fits no block")

    blocks = [set() for _ in reps]
    for v, i in owner.items():
        blocks[i].add(v)
    for i, block in enumerate(blocks):
        if not block:
            raise MachineryError(f"block {i} is empty; the certificate is not minimal")
    return Partition(g, tuple(frozenset(b) for b in blocks), reps, mode)


@dataclass(frozen=True)
class BlockGrid:
    """All cells (tuples of block indices) of one partition per factor."""

    partitions: tuple[Partition, ...]

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.partitions)

    @property
    def cells(self) -> list[tuple[int, ...]]:
        return list(iproduct(*(range(len(p)) for p in self.partitions)))

    def __len__(self):
        return math.prod(self.shape)

    def index_lists(self, cell) -> list[list[int]]:
        return [sorted(p.blocks[b]) for p, b in zip(self.partitions, cell)]

    def slabs(self, axis: int) -> list[tuple[int, ...]]:
        """Slab keys along ``axis``: block tuples over every other axis."""
        shape = self.shape
        return list(iproduct(*(range(s) for i, s in enumerate(shape) if i != axis)))


def slab_key(cell, axis: int) -> tuple[int, ...]:
    return tuple(cell[:axis]) + tuple(cell[axis + 1 :])


def cell_of(key, axis: int, block: int) -> tuple[int, ...]:
    return tuple(key[:axis]) + (block,) + tuple(key[axis:])
