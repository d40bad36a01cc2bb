import itertools
import random

import numpy as np
import pytest

from cartdom.graph import Graph, cartesian_product, has_isolated_vertex
from cartdom.machinery import (
    BlockGrid,
    CompletionFinding,
    MachineryError,
    build_completed_dominating_set,
    build_completed_total_dominating_set,
    build_condition_matrix,
    build_partition,
    check_claim_domination,
    check_claim_nonself,
    classify_binary_cell,
    classify_jmatrix,
    complete_pairs,
    double_count,
    membership_transfer_check,
    pair_completion,
    prepare_instance,
    qualifying_blocks,
    slab_sets,
)
from cartdom.machinery.counting import classify_cell
from cartdom.solvers import DominationCertificate, DominationKind, domination_number, is_paired_dominating

from conftest import family


@pytest.fixture(scope="module")
def c4_total():
    """Two total-domination partitions of K2 with D = {(0,0),(0,1)} in their product."""
    K2 = family("complete", 2)
    return prepare_instance(2, [K2, K2])


def cert(kind, members, pairing=None):
    return DominationCertificate(DominationKind(kind), frozenset(members), pairing)


# partitions


def test_open_partition_of_a_path(P4):
    part = build_partition(P4, cert("total", {1, 2}), "open")
    assert part.blocks == ({0, 2}, {1, 3})
    assert part.representatives == ((1,), (2,))


def test_open_partition_of_an_edge(K2):
    assert build_partition(K2, cert("total", {0, 1}), "open").blocks == ({1}, {0})


def test_closed_partition_of_p3(P3):
    part = build_partition(P3, cert("plain", {1}), "closed")
    assert part.blocks == ({0, 1, 2},)


def test_paired_partition_pins_both_ends(P4):
    part = build_partition(P4, cert("paired", {1, 2}, ((1, 2),)), "paired")
    assert len(part) == 1 and part.representatives == ((1, 2),)
    assert part.blocks[0] == {0, 1, 2, 3}


def test_partition_rejects_bad_input(P4):
    with pytest.raises(MachineryError):
        build_partition(P4, cert("total", {0, 3}), "open")  # not total dominating
    with pytest.raises(MachineryError):
        build_partition(P4, cert("plain", {1, 2}), "open")  # kind/mode mismatch
    with pytest.raises(MachineryError):
        # valid but not minimal: no vertex is left for representative 3's block
        build_partition(P4, cert("total", {0, 1, 2, 3}), "open")


def test_partition_blocks_cover_every_vertex_once():
    for g in [family("cycle", 6), family("star", 5), family("path", 7)]:
        for kind, mode in [("plain", "closed"), ("total", "open"), ("paired", "paired")]:
            part = build_partition(g, domination_number(g, kind).certificate, mode)
            seen = sorted(v for b in part.blocks for v in b)
            assert seen == list(range(g.order))


# condition matrices and classifiers


def test_condition_matrices_on_c4(c4_total):
    p, D = c4_total.product, c4_total.D
    assert D == {0, 1}
    expected = [[1, 1], [0, 0]]
    assert build_condition_matrix(p, D, "axis_only").entries.tolist() == expected
    assert build_condition_matrix(p, D, "membership_or_axis").entries.tolist() == expected
    mins = build_condition_matrix(p, D, "min_axis")
    assert mins.at((1, 0)) == 1
    assert mins.entries.tolist() == [[2, 2], [1, 1]]


def test_min_axis_needs_total_domination():
    p = cartesian_product([family("complete", 2), family("complete", 2)])
    with pytest.raises(MachineryError):
        build_condition_matrix(p, {0, 3}, "min_axis")


def test_condition_matrix_entries_match_definition():
    p = cartesian_product([family("path", 3), family("cycle", 4)])
    D = domination_number(p.graph).certificate.members
    F = build_condition_matrix(p, D, "membership_or_axis")
    g = p.graph
    for u in range(g.order):
        hits = any((w in D) and p.coordinate(w, 0) == p.coordinate(u, 0) for w in members_of(g, u))
        assert F.at(p.decode(u)) == int(u in D or hits)


def members_of(g, u):
    return [v for v in range(g.order) if g.has_edge(u, v)]


@pytest.mark.parametrize(
    "sub, expected",
    [([[1, 0], [0, 1]], {"a", "b"}), ([[1, 1], [1, 1]], {"a"}), ([[0, 0], [0, 0]], {"b"})],
)
def test_binary_cell_examples(sub, expected):
    assert classify_binary_cell(sub) == expected


def test_binary_cell_rejects_empty():
    with pytest.raises(ValueError):
        classify_binary_cell(np.zeros((0, 2), dtype=int))


def test_jmatrix_examples():
    assert classify_jmatrix(np.full((2, 2, 2), 3)) == {3}
    assert classify_jmatrix([[1, 1], [1, 1]]) == {1}
    assert classify_jmatrix([[1, 2], [2, 1]]) == {1, 2}
    with pytest.raises(ValueError):
        classify_jmatrix([[0, 1], [1, 1]])
    with pytest.raises(ValueError):
        classify_jmatrix([[3, 1], [1, 1]])


def brute_jmatrix(sub):
    """Independent oracle: loop over every slice explicitly."""
    sub = np.asarray(sub)
    n = sub.ndim
    out = set()
    for j in range(1, n + 1):
        axis = j - 1
        if all((np.take(sub, k, axis=axis) == j).any() for k in range(sub.shape[axis])):
            out.add(j)
    return out


def test_jmatrix_matches_slice_oracle():
    rng = np.random.default_rng(7)
    for _ in range(300):
        n = int(rng.integers(2, 4))
        shape = tuple(int(s) for s in rng.integers(1, 4, size=n))
        sub = rng.integers(1, n + 1, size=shape)
        assert classify_jmatrix(sub) == brute_jmatrix(sub)


# slabs and qualifying blocks


def test_slab_sets_on_c4(c4_total):
    inst = c4_total
    along_h = slab_sets(inst.product, inst.D, inst.grid, 1)
    along_g = slab_sets(inst.product, inst.D, inst.grid, 0)
    assert along_h.Z == {(0,): frozenset(), (1,): frozenset({0, 1})}
    assert along_g.Z == {(0,): frozenset({1}), (1,): frozenset({0})}
    empty = slab_sets(inst.product, set(), inst.grid, 1)
    assert all(not z for z in empty.Z.values())


def test_slab_split_needs_full_pairing():
    K2 = family("complete", 2)
    inst = prepare_instance(4, [K2, K2])
    with pytest.raises(MachineryError):
        slab_sets(inst.product, inst.D, inst.grid, 0, pairing=())


def test_qualifying_blocks_on_c4(c4_total):
    Q = c4_total.qualifying
    assert Q.S[1] == {(0,): (), (1,): (0, 1)}
    assert Q.S[0] == {(0,): (0,), (1,): (0,)}
    assert Q.d_H == 2 and Q.d_G == 2
    assert Q.uncovered() == []
    left = domination_number(family("complete", 2), "total").number ** 2
    assert left == 4 <= Q.d_H + Q.d_G


def test_qualifying_blocks_recomputed_from_parts(c4_total):
    inst = c4_total
    again = qualifying_blocks(inst.matrix, BlockGrid(inst.partitions))
    assert again.S == inst.qualifying.S


# claims and completions


def test_domination_claims_on_c4(c4_total):
    assert check_claim_domination(c4_total, (1, 0), axis=1)
    assert check_claim_domination(c4_total, (1, 1), axis=1)
    with pytest.raises(MachineryError):
        check_claim_domination(c4_total, (0, 0), axis=1)


def test_nonself_claims_on_c4(c4_total):
    assert check_claim_nonself(c4_total, (0, 0), axis=0)
    assert check_claim_nonself(c4_total, (0, 1), axis=0)
    with pytest.raises(MachineryError):
        check_claim_nonself(c4_total, (1, 0), axis=0)


def test_dominating_completion_on_c4(c4_total):
    full = build_completed_dominating_set(c4_total, (1,), axis=1)
    assert full.vertices == {0, 1} and full.holds
    empty_slab = build_completed_dominating_set(c4_total, (0,), axis=1)
    assert empty_slab.vertices == {0, 1} and empty_slab.holds


def test_total_completion_on_c4(c4_total):
    for key in [(0,), (1,)]:
        done = build_completed_total_dominating_set(c4_total, key, axis=0)
        assert done.vertices == {0, 1} and done.holds


def test_completion_requires_matching_partition_mode(c4_total):
    K2 = family("complete", 2)
    paired = prepare_instance(4, [K2, K2])
    with pytest.raises(MachineryError):
        build_completed_dominating_set(paired, (0,), axis=1)
    with pytest.raises(MachineryError):
        complete_pairs(c4_total, (0,), axis=1)


def test_pair_completion_on_an_edge(K2):
    pc = pair_completion(K2, set(), set(), {0, 1}, [(0, 1)])
    assert pc.E_rec == {0, 1} and len(pc.E_rec) <= pc.size_bound == 2


def test_pair_completion_adopts_a_partner(P4):
    pc = pair_completion(P4, {1}, set(), {2, 3}, [(2, 3)])
    assert pc.E_rec == {0, 1, 2, 3}
    assert pc.pairing == ((0, 1), (2, 3))
    assert pc.size_bound == 4


def test_pair_completion_from_b_only(P3):
    pc = pair_completion(P3, set(), {1}, set(), [])
    assert pc.M == () and pc.M2 == {1}
    assert pc.E_rec == {0, 1} and pc.size_bound == 2


def test_pair_completion_rejects_bad_pairs(P4):
    with pytest.raises(MachineryError):
        pair_completion(P4, set(), set(), {0, 2}, [(0, 2)])


def test_pair_completion_surfaces_findings(P4):
    # A alone does not reach vertex 3, so the completed set cannot dominate
    with pytest.raises(CompletionFinding, match="not dominating"):
        pair_completion(P4, {0}, set(), set(), [])
    soft = pair_completion(P4, {0}, set(), set(), [], strict=False)
    assert soft.E_rec == {0, 1} and soft.findings


def test_dropped_vertices_never_break_domination():
    # every neighbour of a dropped vertex is already matched, hence kept and dominating it
    rng = random.Random(3)
    drops = 0
    for _ in range(400):
        n = rng.randint(2, 8)
        g = Graph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.4])
        if has_isolated_vertex(g):
            continue
        pick = [v for v in range(n) if rng.random() < 0.5]
        A = {v for v in pick if rng.random() < 0.5}
        B = set(pick) - A
        pc = pair_completion(g, A, B, set(), [], strict=False)
        drops += len(pc.removed)
        assert not any("dropping" in f for f in pc.findings), pc.findings
    assert drops > 0


def test_pair_completions_on_paired_instances():
    for factors in [("path", 3, "path", 3), ("cycle", 4, "path", 4), ("star", 4, "complete", 3)]:
        g, h = family(factors[0], factors[1]), family(factors[2], factors[3])
        inst = prepare_instance(4, [g, h])
        for axis in (0, 1):
            for key in inst.slabs[axis].Z:
                pc, facts = complete_pairs(inst, key, axis)
                assert all(f.holds for f in facts), [str(f) for f in facts if not f.holds]
                host = inst.product.factors[axis]
                assert is_paired_dominating(host, pc.E_rec)[0]


# ledger


def test_ledger_on_c4_is_tight(c4_total):
    dc = double_count(c4_total)
    assert (dc.left, dc.right) == (4, 4)
    assert dc.passed and not dc.failed


@pytest.mark.parametrize(
    "theorem, factors, left, right",
    [
        (1, [("complete", 2), ("path", 3)], 2, 4),
        (1, [("path", 3), ("complete", 2)], 2, 4),
        (4, [("complete", 2), ("complete", 2)], 4, 12),
        (3, [("complete", 2)] * 3, 8, None),
        (5, [("complete", 2), ("path", 3)], 4, 12),
    ],
)
def test_ledger_examples(theorem, factors, left, right):
    gs = [family(*f) for f in factors]
    dc = double_count(prepare_instance(theorem, gs))
    if right is None:
        right = len(gs) * domination_number(cartesian_product(gs).graph, "total").number
    assert (dc.left, dc.right) == (left, right)
    assert dc.passed, [str(f) for f in dc.failed]


def test_ledger_flags_a_bad_certificate():
    K2 = family("complete", 2)
    p = cartesian_product([K2, K2])
    with pytest.raises(MachineryError):
        prepare_instance(2, [K2, K2], certificate=cert("total", {0, 3}))
    # a larger valid certificate still passes every fact
    inst = prepare_instance(2, [K2, K2], certificate=cert("total", set(range(p.graph.order))))
    assert double_count(inst).passed


def test_membership_transfer_with_full_vertex_set():
    gs = [family("complete", 2), family("path", 3), family("complete", 2)]
    p = cartesian_product(gs)
    everything = set(range(p.graph.order))
    ok, pairing = is_paired_dominating(p.graph, everything)
    assert ok
    inst = prepare_instance(5, gs, certificate=cert("paired", everything, pairing))
    F = inst.matrix
    for i in range(1, 4):
        assert (F.grid(i) == i).all()
    labels = {cell: classify_cell(F, inst.grid, cell) for cell in inst.grid.cells}
    assert all(i in labels[c][i - 1] for c in inst.grid.cells for i in range(1, 4))
    assert membership_transfer_check(F, inst.grid)


def test_membership_transfer_on_c4_and_single_cell():
    K2 = family("complete", 2)
    inst = prepare_instance(5, [K2, K2])
    assert len(inst.grid) == 1
    assert membership_transfer_check(inst.matrix, inst.grid)


def test_membership_transfer_needs_the_family(c4_total):
    with pytest.raises(ValueError):
        membership_transfer_check(c4_total.matrix, c4_total.grid)


def test_binary_cells_cover_every_small_matrix():
    for r, c in itertools.product(range(1, 4), repeat=2):
        for bits in itertools.product((0, 1), repeat=r * c):
            assert classify_binary_cell(np.array(bits).reshape(r, c))


def test_theorem_runs_on_random_factors():
    rng = random.Random(11)
    for _ in range(10):
        gs = []
        for _ in range(2):
            n = rng.randint(2, 5)
            g = Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)] + [(0, rng.randrange(1, n))])
            gs.append(g)
        for thm in (1, 2, 4):
            assert double_count(prepare_instance(thm, gs)).passed


def test_plain_greedy_matching_can_break_the_counting_step():
    # H = path 2-0-1-3; D is a full row matched along H by 0-2 and 1-3
    h = Graph.from_edges(4, [(0, 1), (0, 2), (1, 3)])
    inst = prepare_instance(4, [family("path", 2), h])
    assert inst.certificate.pairing == ((0, 2), (1, 3))
    counting = "|M1| + 2|M2| <= |C| + |Z_axis|"
    greedy_pc, greedy = complete_pairs(inst, (0,), 1, seed_matching=False)
    seeded_pc, seeded = complete_pairs(inst, (0,), 1)
    assert greedy_pc.M == ((0, 1),) and greedy_pc.M2 == {2, 3}
    assert [f.holds for f in greedy if counting in f.name] == [False]
    assert seeded_pc.M == ((0, 2), (1, 3))
    assert all(f.holds for f in seeded)
