#!/usr/bin/env python
"""Test suite for :mod:`cliquecolor.reduction`"""
import pytest

from cliquecolor.config import Config
from cliquecolor.corpus import transversal_instances
from cliquecolor.errors import ContractError, PipelineRefusal, StructureError
from cliquecolor.graph import Graph, complete_graph, construct, construct_moser_spindle, construct_o5,\
                              cycle_graph, join, empty_graph, verify
from cliquecolor.mozhan import AssumptionViolation, Outcome
from cliquecolor.reduction import TransversalInstance, build_transversal_instance, color_or_clique,\
                                  declared_bound, di_partition, enumerate_transversals,\
                                  find_independent_transversal, hitting_set, maximal_independent_set,\
                                  maximum_cliques
from cliquecolor.test.cases.fixtures import hitting_pair_graph, triple_core_graph, two_triangles,\
                                            wrong_overlap_graph

__author__ = "Joshua Griffin Dunn"
__date__ = "2026-10-17"


class TestReduction():
    """Test case for clique structure, transversals and the pipeline"""

    @classmethod
    def setup_class(cls):
        cls.config = Config()

        # (delta, mode, expected bound)
        cls.bound_cases = [(7, "theorem1", 4),
                           (8, "theorem1", 4),
                           (10, "theorem1", 7),
                           (12, "theorem1", 8),
                           (13, "theorem1", 10),
                           (20, "theorem1", 17),
                           (9, "theorem2", 9),
                           ]

    @staticmethod
    def check_pipeline(name, g, out, mode="theorem1"):
        """Check that `out` is a verified coloring with ``Delta - 1`` colors
        or a verified clique meeting its bound
        """
        delta = g.max_degree()
        if out.variant == Outcome.COLORING:
            assert verify(g, out.coloring), "%s: pipeline coloring does not verify" % name
            assert out.coloring.num_colors() <= delta - 1, "%s: %s colors for Delta %s" \
                                                           % (name, out.coloring.num_colors(), delta)
        else:
            assert out.variant == Outcome.CLIQUE, "%s: expected coloring or clique, got %s" % (name, out)
            assert verify(g, out.clique), "%s: clique %s does not verify" % (name, out.clique)
            assert len(out.clique) >= out.bound, "%s: clique of %s below bound %s" % (name, len(out.clique), out.bound)

    def test_maximum_cliques(self):
        found = maximum_cliques(hitting_pair_graph(), config=self.config)
        assert found == [frozenset(range(5)), frozenset(range(5, 10)), frozenset([5, 6, 7, 8, 10])]
        assert maximum_cliques(Graph(0), config=self.config) == []
        assert maximum_cliques(two_triangles(), config=self.config) == [frozenset([0, 1, 2]), frozenset([3, 4, 5])]

    def test_di_partition(self):
        g = hitting_pair_graph()
        d = di_partition(g, maximum_cliques(g, config=self.config))
        assert len(d) == 2
        assert d.groups[0].clique == frozenset(range(5)) and d.groups[0].x is None
        assert d.groups[1].clique == frozenset(range(5, 10)) and d.groups[1].x == 10
        assert d.union() == set(range(11))

    def test_di_partition_disjoint_cliques(self):
        g = two_triangles()
        d = di_partition(g, maximum_cliques(g, config=self.config))
        assert [X.x for X in d.groups] == [None, None]

    def test_di_partition_rejects_bad_structure(self):
        g = triple_core_graph()
        with pytest.raises(StructureError) as info:
            di_partition(g, maximum_cliques(g, config=self.config))
        assert len(info.value.cliques) == 3

        g = wrong_overlap_graph()
        with pytest.raises(StructureError) as info:
            di_partition(g, maximum_cliques(g, config=self.config))
        assert len(info.value.cliques) == 2

        with pytest.raises(ContractError):
            di_partition(g, [frozenset([0, 1]), frozenset([2, 3, 4])])

    def test_build_transversal_instance(self):
        g = hitting_pair_graph()
        t = build_transversal_instance(g, di_partition(g, maximum_cliques(g, config=self.config)))
        assert t.s == 1 and t.hypothesis
        assert [sorted(t.aux_graph.labels[v] for v in X) for X in t.parts] == [[0, 1, 2, 3, 4], [5, 6, 7, 8]]
        assert t.aux_graph.number_of_edges() == 1

    def test_hitting_set(self):
        assert hitting_set(hitting_pair_graph(), config=self.config) == frozenset([1, 5])
        assert hitting_set(two_triangles(), config=self.config) == frozenset([0, 3])

    def test_hitting_set_structure_error(self):
        with pytest.raises(StructureError):
            hitting_set(triple_core_graph(), config=self.config)

    def test_transversal_instance_contract(self):
        with pytest.raises(ContractError):
            TransversalInstance(Graph(3), [[0, 1], [1, 2]], 1)
        with pytest.raises(ContractError):
            TransversalInstance(Graph(4, [(0, 1)]), [[0, 1], [2, 3]], 1)
        t = TransversalInstance.from_parts([[0, 1], [2, 3]], [(0, 1), (0, 2)], 1)
        assert t.aux_graph.edges() == [(0, 2)]
        assert t.hypothesis

    def test_enumerate_transversals(self):
        t = TransversalInstance.from_parts([[0, 1], [2, 3]], [(0, 2)], 1)
        found = sorted(sorted(X) for X in enumerate_transversals(t))
        assert found == [[0, 3], [1, 2], [1, 3]]
        assert find_independent_transversal(t) == frozenset([0, 3])

    def test_no_transversal(self):
        t = TransversalInstance.from_parts([[0], [1]], [(0, 1)], 1)
        assert not t.hypothesis
        assert find_independent_transversal(t) is None
        assert list(enumerate_transversals(t)) == []

    def test_transversals_against_enumeration(self):
        for t in transversal_instances(5, 30, max_part_size=6):
            found = find_independent_transversal(t)
            assert found is not None, "no transversal found for %s although the hypothesis holds" % t
            assert t.aux_graph.is_independent(found)
            assert all(len(found & X) == 1 for X in t.parts)
            assert found in set(enumerate_transversals(t))

    def test_maximal_independent_set(self):
        g = cycle_graph(5)
        assert maximal_independent_set(g) == frozenset([0, 2])
        assert maximal_independent_set(g, [1]) == frozenset([1, 3])
        with pytest.raises(ContractError):
            maximal_independent_set(g, [0, 1])

    def test_declared_bound(self):
        for delta, mode, expected in self.bound_cases:
            found = declared_bound(delta, mode)
            assert found == expected, "Delta %s, %s: expected %s, got %s" % (delta, mode, expected, found)

    def test_pipeline_empty_graph(self):
        out = color_or_clique(Graph(0), config=self.config)
        assert out.variant == Outcome.COLORING and len(out.coloring) == 0

    def test_pipeline_complete_graph(self):
        g = complete_graph(17)
        out = color_or_clique(g, config=self.config)
        assert out.variant == Outcome.CLIQUE and len(out.clique) == 17 and out.bound == 17
        assert out.diagnostics["path"] == "complete-component"

    def test_pipeline_colors_colorable_graphs(self):
        g = join(complete_graph(4), empty_graph(3))
        out = color_or_clique(g, config=self.config)
        assert out.variant == Outcome.COLORING
        self.check_pipeline("K4 join E3", g, out)

    def test_pipeline_o5(self):
        g = construct_o5()
        for mode in ("theorem1", "theorem2"):
            out = color_or_clique(g, mode=mode, config=self.config)
            assert out.variant == Outcome.CLIQUE, "O5 is 5-chromatic with Delta 5, got %s" % out
            self.check_pipeline("O5 %s" % mode, g, out)

    def test_pipeline_exact_path(self):
        g = construct_o5()
        out = color_or_clique(g, fast_paths=False, config=self.config)
        assert out.variant == Outcome.CLIQUE and len(out.clique) == 4
        assert out.diagnostics["path"] == "brooks"

    def test_pipeline_engine_path(self):
        g = construct_moser_spindle()
        out = color_or_clique(g, mode="theorem2", fast_paths=False, config=self.config)
        self.check_pipeline("Moser theorem2", g, out)

    def test_pipeline_short_clique_falls_back_to_high_clique(self):
        # C5 with a pendant edge: the 3-critical part is C5, whose largest clique misses Delta
        g = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)])
        out = color_or_clique(g, mode="theorem2", fast_paths=False, config=self.config)
        assert out.variant == Outcome.CLIQUE and out.clique.high_only
        assert out.clique.vertices == frozenset([0]) and out.bound == g.max_degree() - 5
        assert out.diagnostics == {"path": "oracle-high-clique", "replaced": "brooks", "replaced_size": 2}
        self.check_pipeline("C5 plus pendant", g, out, mode="theorem2")

    def test_pipeline_engine_violation_falls_back_to_high_clique(self, monkeypatch):
        stuck = Outcome.of_violation(AssumptionViolation("C1", "stuck", {"clubhouses": []}))
        monkeypatch.setattr("cliquecolor.reduction.run_engine", lambda *args, **kwargs: stuck)
        g = construct_moser_spindle()
        out = color_or_clique(g, mode="theorem2", fast_paths=False, config=self.config)
        assert out.variant == Outcome.CLIQUE and out.clique.high_only
        assert out.diagnostics["path"] == "oracle-high-clique" and out.diagnostics["fallback"] == "C1"
        assert out.diagnostics["violation"]["claim"] == "C1"
        self.check_pipeline("Moser with a stuck engine", g, out, mode="theorem2")

    @pytest.mark.functional
    def test_pipeline_bk8(self):
        g = construct("bk8")
        out = color_or_clique(g, config=self.config)
        assert out.variant == Outcome.CLIQUE and out.bound == 4
        self.check_pipeline("bk8", g, out)

    @pytest.mark.functional
    def test_pipeline_lex_product(self):
        g = construct("lex:5:5")
        out = color_or_clique(g, config=self.config)
        assert out.variant == Outcome.COLORING
        self.check_pipeline("C5[K5]", g, out)

    def test_pipeline_refusal(self):
        small = self.config.copy(max_exact_chromatic=5)
        with pytest.raises(PipelineRefusal) as info:
            color_or_clique(construct_o5(), fast_paths=False, config=small)
        assert (info.value.size, info.value.bound) == (9, 5)
        assert info.value.diagnostics["delta"] == 5

    def test_pipeline_unknown_mode(self):
        with pytest.raises(ContractError):
            color_or_clique(complete_graph(3), mode="theorem3", config=self.config)
