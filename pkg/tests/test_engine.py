from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import (
    brute_chi,
    brute_gallai_edmonds,
    brute_is_tihany,
    brute_mu,
    brute_partition,
    graphs,
    graphs_with_clique,
    random_graph,
)
from tihany.analysis import find_claw, find_clique_cutset
from tihany.constructions import ThickeningSpec, block_pattern, icosahedron, thicken
from tihany.engine import (
    CLIQUE_CUTSET,
    DENSE,
    EQUAL_NEIGHBOURHOOD,
    LEMMA_CHECKS,
    ReductionFailed,
    TihanyCertificate,
    TihanyRefutation,
    audit_refutation,
    certifying_lemma,
    check_clique_cutset,
    check_dense_cliques,
    check_lemma_basic,
    classify_clique,
    elt_partition_exists,
    find_min_tihany,
    find_nonreduced_wjoin,
    gallai_edmonds,
    is_tihany,
    merge_cutset_colorings,
    reduce_wjoin,
    s_f,
    wjoin_status,
)
from tihany.graph import (
    GraphError,
    complete_graph,
    cycle_graph,
    is_connected,
    make_graph,
    path_graph,
    wheel_graph,
)
from tihany.solvers import Budget, BudgetExhausted, chromatic_number, clique_number

W5 = wheel_graph(5)  # hub 0, rim 1..5
C5 = cycle_graph(5)
ICO = icosahedron(0).graph
BOWTIE = make_graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])


class TestIsTihany:
    def test_c5_edge(self):
        v = is_tihany(C5, [0, 1])
        assert isinstance(v, TihanyCertificate)
        assert (v.chi_before, v.chi_after) == (3, 2) and v.holds()
        assert v.coloring_after.is_proper(C5, [2, 3, 4])

    def test_wheel_hub_and_rim(self):
        v = is_tihany(W5, [0, 1])
        assert isinstance(v, TihanyRefutation)
        assert v.chi_before == 4 and v.coloring.k <= 2
        assert v.coloring.is_proper(W5, [2, 3, 4, 5])

    def test_wheel_rim_edge(self):
        v = is_tihany(W5, [1, 2])
        assert isinstance(v, TihanyCertificate) and v.chi_after == 3

    def test_rejects_non_clique(self):
        with pytest.raises(GraphError):
            is_tihany(C5, [0, 2])
        with pytest.raises(GraphError):
            is_tihany(C5, [9])

    @given(graphs_with_clique(max_n=8, max_k=3))
    def test_matches_brute_force(self, case):
        g, k = case
        v = is_tihany(g, k)
        assert isinstance(v, TihanyCertificate) == brute_is_tihany(g, k)
        rest = [x for x in range(g.n) if x not in k]
        if isinstance(v, TihanyCertificate):
            assert v.chi_after == brute_chi(g, rest)
            assert v.coloring_after.is_proper(g, rest)
        else:
            assert v.coloring.is_proper(g, rest)
            assert v.coloring.k <= brute_chi(g) - len(k)


class TestFindMinTihany:
    def test_wheel(self):
        cert = find_min_tihany(W5, 5)
        assert len(cert.clique) == 2 and 0 not in cert.clique
        assert cert.chi_after == 3

    def test_icosahedron(self):
        cert = find_min_tihany(ICO, 5)
        # every single vertex of the icosahedron is Tihany: removing it leaves a 4-chromatic graph
        assert len(cert.clique) == 1 and cert.chi_after == 4
        brace = find_min_tihany(ICO, 5, kmin=2)
        assert len(brace.clique) == 2 and brace.chi_after >= 3

    def test_c5_singletons_fail(self):
        assert find_min_tihany(C5, 1) is None
        assert len(find_min_tihany(C5, 2).clique) == 2

    def test_size_bounds(self):
        with pytest.raises(ValueError):
            find_min_tihany(C5, 0)
        with pytest.raises(ValueError):
            find_min_tihany(C5, 2, kmin=0)

    def test_refutation_hook_sees_every_rejected_clique(self):
        seen = []
        find_min_tihany(W5, 5, on_refutation=lambda g, r: seen.append(r))
        # the six vertices, then the five hub-rim braces that precede the first rim brace
        assert len(seen) == 11
        assert all(audit_refutation(W5, r).status == "ok" for r in seen)

    def test_deterministic(self):
        a = find_min_tihany(ICO, 5, kmin=2)
        b = find_min_tihany(ICO, 5, kmin=2)
        assert a == b

    def test_budget_exhaustion_propagates(self):
        g = random_graph(random.Random(3), 40, 0.5)
        with pytest.raises(BudgetExhausted):
            find_min_tihany(g, 5, Budget(node_limit=20))

    @settings(max_examples=80)
    @given(graphs(min_n=1, max_n=8))
    def test_minimal_size_matches_brute_force(self, g):
        from helpers import brute_cliques

        cert = find_min_tihany(g, 3)
        sizes = [len(k) for k in brute_cliques(g, 3) if brute_is_tihany(g, k)]
        if cert is None:
            assert sizes == []
        else:
            assert len(cert.clique) == min(sizes)


class TestClassify:
    def test_c5_edge_dense(self):
        c = classify_clique(C5, [0, 1])
        assert c.dense and c.good and c.common == frozenset()

    def test_wheel_hub(self):
        c = classify_clique(W5, [0])
        assert not c.dense and not c.good and c.common == frozenset(range(1, 6))

    def test_s_f_path(self):
        # u=0, v=1, x=2 with edges uv, vx
        g = make_graph(3, [(0, 1), (1, 2)])
        assert s_f(g, [0, 1], [(2, 0)]) == {2}
        assert classify_clique(g, [0, 1], [(2, 0)]).s_f == {2}
        assert s_f(g, [0, 1]) == frozenset()

    def test_s_f_rejects_overlapping_pairs(self):
        with pytest.raises(GraphError):
            s_f(C5, [0, 1], [(0, 2), (0, 3)])

    def test_dense_implies_good(self):
        for g in (C5, W5, ICO, BOWTIE):
            for k in ([0], [0, 1]):
                if g.is_clique(k):
                    c = classify_clique(g, k)
                    assert c.good or not c.dense


class TestLemmaBasic:
    def test_wheel_hub_rim(self):
        r = check_lemma_basic(W5, [0, 1])
        assert r.status == "ok"
        for cls, w in r.witnesses:
            assert w in cls and w in (2, 5)

    def test_c5_vacuous(self):
        assert check_lemma_basic(C5, [0, 1]).status == "vacuous"

    def test_diamond(self):
        diamond = make_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
        # chi = 3; removing the spine leaves two non-adjacent vertices, so the spine is not Tihany
        r = check_lemma_basic(diamond, [0, 1])
        assert r.status == "ok" and r.coloring.k == 1

    @given(graphs_with_clique(max_n=8, max_k=3))
    def test_never_violated(self, case):
        g, k = case
        assert check_lemma_basic(g, k).status in ("ok", "vacuous")


class TestGallaiEdmonds:
    @pytest.mark.parametrize("g, d, a, c", [
        (path_graph(3), {0, 2}, {1}, set()),
        (complete_graph(2), set(), set(), {0, 1}),
        (complete_graph(3), {0, 1, 2}, set(), set()),
    ])
    def test_examples(self, g, d, a, c):
        ge = gallai_edmonds(g)
        assert (ge.d, ge.a, ge.c) == (d, a, c)

    @given(graphs(max_n=8))
    def test_matches_brute_force(self, g):
        ge = gallai_edmonds(g)
        d, a, c = brute_gallai_edmonds(g)
        assert (set(ge.d), set(ge.a), set(ge.c)) == (d, a, c)
        assert ge.mu == brute_mu(g)
        assert g.n + len(ge.a) - ge.components_of_d == 2 * ge.mu


class TestMergeColorings:
    def test_p3(self):
        col = merge_cutset_colorings(path_graph(3), [1], [0], [2])
        assert col.k == 2 and col.is_proper(path_graph(3))

    def test_bowtie(self):
        col = merge_cutset_colorings(BOWTIE, [2], [0, 1], [3, 4])
        assert col.k == 3 and col.is_proper(BOWTIE)

    def test_bowtie_with_pendant(self):
        g = make_graph(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5)])
        col = merge_cutset_colorings(g, [4], [5], [0, 1, 2, 3])
        assert col.k == 3 and col.is_proper(g)

    def test_rejects_bad_separation(self):
        with pytest.raises(GraphError):
            merge_cutset_colorings(C5, [0], [1, 2], [3, 4])
        with pytest.raises(GraphError):
            merge_cutset_colorings(path_graph(3), [1], [0], [])

    @settings(max_examples=100)
    @given(graphs(min_n=3, max_n=9))
    def test_merged_colouring_is_optimal(self, g):
        if not is_connected(g):
            return
        cut = find_clique_cutset(g)
        if cut is None:
            return
        col = merge_cutset_colorings(g, cut.k, cut.a, cut.b)
        assert col.is_proper(g) and col.k == brute_chi(g)


def _square_join():
    # A = {a1, a2} = {0, 1}, B = {b1, b2} = {2, 3}, cross edges a1b1, a1b2, a2b1
    return make_graph(4, [(0, 1), (2, 3), (0, 2), (0, 3), (1, 2)])


class TestWJoins:
    def test_status(self):
        g = _square_join()
        w = wjoin_status(g, [0, 1], [2, 3])
        assert w is not None and not w.reduced
        assert wjoin_status(g, [0, 1], [0, 2]) is None
        assert wjoin_status(complete_graph(4), [0, 1], [2, 3]) is None

    def test_find_and_reduce(self):
        g = _square_join()
        w = find_nonreduced_wjoin(g)
        assert w is not None and {w.a, w.b} == {frozenset({0, 1}), frozenset({2, 3})}
        h = reduce_wjoin(g, w)
        assert h.m == g.m - 1
        assert not h.adjacent(0, 3) and h.adjacent(0, 2) and h.adjacent(1, 2)
        assert chromatic_number(h)[0] == 3
        assert wjoin_status(h, w.a, w.b).reduced

    def test_none_without_homogeneous_pair(self):
        assert find_nonreduced_wjoin(C5) is None

    def test_reduced_thickening_has_none(self):
        spec = ThickeningSpec(complete_graph(2), (3, 3), ((0, 1),), (block_pattern([0, 1], [0]),))
        th = thicken(spec)
        assert find_nonreduced_wjoin(th.graph) is None
        w = wjoin_status(th.graph, th.parts[0], th.parts[1])
        assert w is not None and w.reduced

    def test_reduce_rejects_reduced_input(self):
        spec = ThickeningSpec(complete_graph(2), (2, 2), ((0, 1),), (block_pattern([0], [0]),))
        th = thicken(spec)
        w = wjoin_status(th.graph, th.parts[0], th.parts[1])
        with pytest.raises(GraphError):
            reduce_wjoin(th.graph, w)

    def test_reduction_failure_type(self):
        assert issubclass(ReductionFailed, RuntimeError)

    def test_random_nonreduced_thickenings(self):
        rng = random.Random(11)
        done = 0
        for _ in range(40):
            su, sv = rng.randint(2, 3), rng.randint(2, 3)
            cells = [(i, j) for i in range(su) for j in range(sv)]
            pattern = frozenset(c for c in cells if rng.random() < 0.5)
            from tihany.constructions import is_reduced_pattern

            if not 0 < len(pattern) < len(cells) or is_reduced_pattern(pattern):
                continue
            th = thicken(ThickeningSpec(complete_graph(2), (su, sv), ((0, 1),), (pattern,)))
            g = th.graph
            w = find_nonreduced_wjoin(g)
            assert w is not None
            h = reduce_wjoin(g, w)
            assert h.m < g.m
            assert chromatic_number(h)[0] == chromatic_number(g)[0]
            assert find_claw(h) is None
            done += 1
        assert done > 10


class TestEltPartition:
    def test_c5(self):
        p = elt_partition_exists(C5, 2, 2)
        assert p is not None and len(p.s_side) == 2
        assert brute_chi(C5, p.s_side) >= 2 and brute_chi(C5, p.t_side) >= 2

    def test_k2(self):
        assert elt_partition_exists(complete_graph(2), 2, 2) is None

    def test_wheel(self):
        p = elt_partition_exists(W5, 2, 3)
        assert p is not None
        assert brute_chi(W5, p.s_side) >= 2 and brute_chi(W5, p.t_side) >= 3

    def test_argument_checks(self):
        with pytest.raises(ValueError):
            elt_partition_exists(C5, 1, 3)
        with pytest.raises(GraphError):
            elt_partition_exists(cycle_graph(17), 2, 2)

    @settings(max_examples=60)
    @given(graphs(max_n=7), st.integers(2, 4), st.integers(2, 4))
    def test_matches_brute_force(self, g, s, t):
        p = elt_partition_exists(g, s, t)
        assert (p is not None) == brute_partition(g, s, t)
        if p is not None:
            assert p.s_side | p.t_side == frozenset(range(g.n)) and not p.s_side & p.t_side
            assert brute_chi(g, p.s_side) >= s and brute_chi(g, p.t_side) >= t


class TestLemmaChecks:
    def test_wheel(self):
        out = check_dense_cliques(W5, 4)
        assert out.status == "ok" and out.checked > 0

    def test_vacuous_when_chi_equals_omega(self):
        assert check_dense_cliques(complete_graph(3), 3).status == "vacuous"

    def test_certifying_lemma(self):
        assert certifying_lemma(C5, [0, 1]) == DENSE
        # rim edge 1-2 of the wheel: C = {hub}, a clique
        assert certifying_lemma(W5, [1, 2]) == DENSE
        assert certifying_lemma(W5, [0]) is None

    def test_equal_neighbourhood_lemma_name(self):
        # two pendant-like braces at 0 sharing the same common neighbourhood {1}
        g = make_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
        assert certifying_lemma(g, [0, 2]) in (DENSE, EQUAL_NEIGHBOURHOOD)

    def test_clique_cutset_check(self):
        # W5 (hub 6, rim 0..4) with a triangle glued on the rim edge 3-4
        g = make_graph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (3, 5), (4, 5)]
                       + [(6, v) for v in range(5)])
        assert find_claw(g) is None
        out = check_clique_cutset(g, 4)
        assert out.checked == 1 and out.status == "ok"
        assert isinstance(is_tihany(g, [3, 5]), TihanyCertificate)
        assert certifying_lemma(g, [3, 5]) in (DENSE, CLIQUE_CUTSET)

    def test_random_graphs_have_no_violations(self):
        rng = random.Random(7)
        seen = 0
        while seen < 60:
            g = random_graph(rng, rng.randint(5, 10), rng.uniform(0.3, 0.8))
            chi = chromatic_number(g)[0]
            if chi <= clique_number(g)[0]:
                continue
            seen += 1
            for check in LEMMA_CHECKS.values():
                assert check(g, chi).status in ("ok", "vacuous")
