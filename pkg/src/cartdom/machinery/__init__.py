"""Concrete objects of the product-domination double count, built and checked on instances."""

from cartdom.machinery.claims import (
    CompletedSet,
    build_completed_dominating_set,
    build_completed_total_dominating_set,
    check_claim_domination,
    check_claim_nonself,
    complete_pairs,
)
from cartdom.machinery.completion import CompletionFinding, PairCompletion, pair_completion
from cartdom.machinery.counting import QualifyingBlocks, SlabSets, qualifying_blocks, slab_sets
from cartdom.machinery.facts import Fact
from cartdom.machinery.instance import LAYOUTS, TheoremInstance, prepare_instance
from cartdom.machinery.ledger import DoubleCount, double_count, membership_transfer_check
from cartdom.machinery.matrix import ConditionMatrix, build_condition_matrix, classify_jmatrix, classify_binary_cell
from cartdom.machinery.partition import BlockGrid, MachineryError, Partition, build_partition

__all__ = [
    "BlockGrid",
    "CompletedSet",
    "CompletionFinding",
    "ConditionMatrix",
    "DoubleCount",
    "Fact",
    "LAYOUTS",
    "MachineryError",
    "PairCompletion",
    "Partition",
    "QualifyingBlocks",
    "SlabSets",
    "TheoremInstance",
    "build_completed_dominating_set",
    "build_completed_total_dominating_set",
    "build_condition_matrix",
    "build_partition",
    "check_claim_domination",
    "check_claim_nonself",
    "classify_jmatrix",
    "classify_binary_cell",
    "complete_pairs",
    "double_count",
    "pair_completion",
    "prepare_instance",
    "qualifying_blocks",
    "slab_sets",
    "membership_transfer_check",
]
