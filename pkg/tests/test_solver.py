"""Exact search: fixtures, certificates, properties, budgets, enumeration."""

import itertools

import pytest

from dinrep import (
    BUDGET_EXHAUSTED,
    INFEASIBLE,
    OPTIMAL,
    CyclicGraphError,
    Digraph,
    Representation,
    SolveBudget,
    exact_din,
    extremal_din,
    feasible_with_palette,
    gen_family,
    induced_subgraph,
    longest_path_levels,
    restrict,
    verify,
)
from corpus import connected_dag_corpus, independent_validity

TRIANGLE = Digraph(3, {(1, 2), (2, 3), (3, 1)})


def brute_force_din(D, kmax):
    """Dumb reference solver: try every assignment of nonempty subsets.

    Returns the smallest feasible palette size up to kmax, or None.  Shares
    nothing with the real search except the definition itself.
    """
    for k in range(1, kmax + 1):
        subsets = [frozenset(s) for r in range(1, k + 1)
                   for s in itertools.combinations(range(k), r)]
        for sets in itertools.product(subsets, repeat=D.n):
            if independent_validity(D, Representation(D.n, sets)):
                return k
    return None


class TestExactDin:
    def test_triangle_infeasible(self):
        result = exact_din(TRIANGLE)
        assert result.status == INFEASIBLE
        assert result.witness is None

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_star(self, n):
        assert exact_din(gen_family("star", n)).din == 2

    def test_complete_dag_on_three(self):
        assert exact_din(gen_family("complete_dag", 3)).din == 3

    def test_fig3_tree_small(self):
        assert exact_din(gen_family("fig3_tree_small")).din == 5

    def test_empty_graph_needs_one_color(self):
        assert exact_din(Digraph(4)).din == 1

    @pytest.mark.parametrize("n,expected", [(2, 2), (3, 4), (4, 6), (5, 9)])
    def test_directed_paths(self, n, expected):
        assert exact_din(gen_family("directed_path", n)).din == expected

    def test_witnesses_are_valid_and_canonical(self):
        for D in connected_dag_corpus(5, 30, seed=13):
            result = exact_din(D)
            assert result.status == OPTIMAL
            assert verify(D, result.witness).valid
            assert result.witness.palette_size == result.din
            assert result.witness.palette == frozenset(range(result.din))

    def test_deterministic(self):
        D = gen_family("source_arc_path", 5)
        a, b = exact_din(D), exact_din(D)
        assert a.din == b.din
        assert a.witness == b.witness

    def test_minimality_certificate(self):
        for D in connected_dag_corpus(4, 20, seed=29) + connected_dag_corpus(5, 10, seed=31):
            k = exact_din(D).din
            assert feasible_with_palette(D, k).feasible is True
            if k > 1:
                assert feasible_with_palette(D, k - 1).feasible is False

    def test_monotone_under_induced_subgraphs(self):
        for D in connected_dag_corpus(5, 20, seed=37):
            full = exact_din(D)
            for S in ({1, 2, 3}, {2, 4, 5}, {1, 5}):
                sub, _ = induced_subgraph(D, S)
                assert exact_din(sub).din <= full.din
                # restriction of the optimal witness stays valid
                assert verify(sub, restrict(full.witness, S)).valid

    def test_level_lower_bound(self):
        for D in connected_dag_corpus(5, 20, seed=41) + connected_dag_corpus(6, 10, seed=43):
            levels = longest_path_levels(D)
            assert exact_din(D).din >= len(levels.levels)

    def test_budget_exhaustion(self):
        result = exact_din(gen_family("source_arc_path", 6), SolveBudget(max_nodes=50))
        assert result.status == BUDGET_EXHAUSTED
        assert result.din is None

    def test_palette_cap_exhaustion(self):
        result = exact_din(gen_family("directed_path", 4), SolveBudget(max_palette=3))
        assert result.status == BUDGET_EXHAUSTED


class TestFeasibleWithPalette:
    def test_single_arc_brackets(self):
        D = Digraph(2, {(1, 2)})
        assert feasible_with_palette(D, 1).feasible is False
        result = feasible_with_palette(D, 2)
        assert result.feasible is True
        assert verify(D, result.witness).valid

    def test_sap4_brackets_the_exact_value(self):
        D = gen_family("source_arc_path", 4)
        assert feasible_with_palette(D, 7).feasible is False
        assert feasible_with_palette(D, 8).feasible is True

    def test_unknown_under_tiny_budget(self):
        D = gen_family("source_arc_path", 6)
        assert feasible_with_palette(D, 17, SolveBudget(max_nodes=10)).feasible is None

    def test_cyclic_precondition(self):
        with pytest.raises(CyclicGraphError):
            feasible_with_palette(TRIANGLE, 3)

    def test_bad_k(self):
        with pytest.raises(ValueError):
            feasible_with_palette(Digraph(2), 0)


class TestBruteForceCrossCheck:
    def test_every_three_vertex_digraph(self):
        # includes cyclic digraphs, where brute force finds nothing and the
        # solver must report infeasible; 4 colors cover every 3-vertex DAG
        pairs = [(i, j) for i in range(1, 4) for j in range(1, 4) if i != j]
        for mask in range(1 << len(pairs)):
            D = Digraph(3, {pairs[b] for b in range(len(pairs)) if (mask >> b) & 1})
            brute = brute_force_din(D, kmax=4)
            result = exact_din(D)
            if brute is None:
                assert result.status == INFEASIBLE, sorted(D.arcs)
            else:
                assert result.din == brute, sorted(D.arcs)

    @pytest.mark.parametrize("family,n", [("star", 4), ("complete_dag", 4)])
    def test_four_vertex_fixtures(self, family, n):
        D = gen_family(family, n)
        assert exact_din(D).din == brute_force_din(D, kmax=5)


class TestHamiltonianWitnesses:
    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_witness_sizes_distinct_along_hamiltonian_path(self, n):
        # any valid representation of a Hamiltonian DAG has pairwise
        # distinct set sizes; check the solver's optimal witnesses
        for D in (gen_family("directed_path", n), gen_family("source_arc_path", max(n, 4))):
            witness = exact_din(D).witness
            sizes = [len(witness.color_set(v)) for v in D.vertices]
            assert len(set(sizes)) == D.n


class TestExtremal:
    def test_n2(self):
        best, witnesses = extremal_din(2)
        assert best == 2
        assert any(w.arcs == {(1, 2)} for w in witnesses)

    def test_n3(self):
        best, _ = extremal_din(3)
        assert best == 4

    def test_n4_source_arc_path_attains(self):
        best, witnesses = extremal_din(4)
        assert best == 8
        target = gen_family("source_arc_path", 4).arcs
        assert any(w.arcs == target for w in witnesses)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            extremal_din(1)
        with pytest.raises(ValueError):
            extremal_din(6)  # requires the explicit opt-in flag

    def test_workers_match_sequential(self):
        seq = extremal_din(3)
        par = extremal_din(3, workers=2)
        assert seq[0] == par[0]
        assert [w.arcs for w in seq[1]] == [w.arcs for w in par[1]]
