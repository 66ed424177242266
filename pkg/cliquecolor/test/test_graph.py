#!/usr/bin/env python
"""Test suite for :mod:`cliquecolor.graph`

The exact oracles are checked against each other and against facts about
the named constructions: :math:`O_5` (9 vertices, 5-critical, two
nonadjacent vertices of maximum degree), the 8-regular graph on 15 vertices
with :math:`\\omega=6` and :math:`\\chi=8`, and the Moser spindle.
"""
import pytest

from cliquecolor.config import Config
from cliquecolor.corpus import small_graphs
from cliquecolor.errors import ContractError, OracleRefusal, ParseError, SearchLimitExceeded,\
                               StructureError
from cliquecolor.graph import CliqueCertificate, Coloring, Graph, chromatic_number_exact, complete_graph,\
                              construct, construct_bk8, construct_moser_spindle, construct_o5,\
                              critical_subgraph, cycle_graph, empty_graph, exact_coloring,\
                              find_k_coloring, greedy_coloring, high_subgraph, is_vertex_critical,\
                              isomorphism_classes, join, lex_product_cycle_clique, max_clique_exact,\
                              parse_dimacs, search_coloring, tabu_coloring, verify
from cliquecolor.listcolor import ListAssignment, l_colorable
from cliquecolor.test.cases.fixtures import case_path

__author__ = "Joshua Griffin Dunn"
__date__ = "2026-10-17"


class TestGraph():
    """Test case for types, constructions and oracles in :mod:`cliquecolor.graph`"""

    @classmethod
    def setup_class(cls):
        cls.config = Config()
        cls.o5 = construct_o5()
        cls.moser = construct_moser_spindle()

        # (text, vertices, edges)
        cls.dimacs_cases = [("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n", 3, 3),
                            ("p edge 4 0\n", 4, 0),
                            ("c comment\n\np col 2 1\ne 2 1\n", 2, 1),
                            ]
        # (text, line number of error)
        cls.bad_dimacs = [("e 1 2\n", 1),
                          ("p edge 3 1\ne 1 4\n", 2),
                          ("p edge 3 1\ne 1 1\n", 2),
                          ("p edge 3 2\ne 1 2\ne 2 1\n", 3),
                          ("p edge x 1\n", 1),
                          ("p edge 3 1\np edge 3 1\n", 2),
                          ("p edge 3 1\nq 1 2\n", 2),
                          ("", 1),
                          ]
        # (construction name, vertices, edges)
        cls.construct_cases = [("k4", 4, 6),
                               ("c5", 5, 5),
                               ("e3", 3, 0),
                               ("p4", 4, 3),
                               ("star3", 4, 3),
                               ("k2+k1", 3, 1),
                               ("join:k4:e3", 7, 18),
                               ("join:k3:e2", 5, 9),
                               ("join:e1:e1", 2, 1),
                               ("lex:5:5", 25, 175),
                               ("o5", 9, 19),
                               ("bk8", 15, 60),
                               ("moser", 7, 11),
                               ]

    @staticmethod
    def check_equal(expected, found, casename=""):
        message = "Expected '%s', found '%s'" % (expected, found)
        if casename != "":
            message = "test '%s': %s" % (casename, message)
        assert expected == found, message

    @staticmethod
    def check_parse_error(text, line_no):
        with pytest.raises(ParseError) as info:
            parse_dimacs(text)
        assert info.value.line_no == line_no, "For input %r expected error on line %s, got %s" \
                                              % (text, line_no, info.value.line_no)

    def test_parse_dimacs(self):
        for text, n, m in self.dimacs_cases:
            g = parse_dimacs(text)
            self.check_equal((n, m), (g.n, g.number_of_edges()), repr(text))

    def test_parse_dimacs_triangle_is_k3(self):
        assert parse_dimacs(self.dimacs_cases[0][0]) == complete_graph(3)

    def test_parse_dimacs_errors(self):
        for text, line_no in self.bad_dimacs:
            self.check_parse_error(text, line_no)

    def test_parse_dimacs_case_files(self):
        with open(case_path("o5.col")) as fh:
            assert parse_dimacs(fh.read()) == self.o5
        with open(case_path("moser.col")) as fh:
            assert parse_dimacs(fh.read()) == self.moser
        with open(case_path("bad_count.col")) as fh:
            self.check_parse_error(fh.read(), 2)

    def test_to_dimacs_reads_back(self):
        assert parse_dimacs(self.o5.to_dimacs()) == self.o5

    def test_graph_rejects_bad_edges(self):
        with pytest.raises(StructureError):
            Graph(3, [(0, 3)])
        with pytest.raises(ContractError):
            Graph(3, [(1, 1)])
        with pytest.raises(ContractError):
            Graph(-1)

    def test_construct(self):
        for name, n, m in self.construct_cases:
            g = construct(name)
            self.check_equal((n, m), (g.n, g.number_of_edges()), name)

    def test_construct_rejects_unknown_names(self):
        for name in ("k", "q5", "lex:4:2", "lex:5", "join:k3", "c2", "foo:k1"):
            with pytest.raises(ParseError):
                construct(name)

    def test_join(self):
        g = join(complete_graph(4), empty_graph(3))
        self.check_equal((7, 18), (g.n, g.number_of_edges()), "join(K4, E3)")
        assert join(empty_graph(1), empty_graph(1)) == complete_graph(2)
        assert all(g.adjacent(u, v) for u in range(4) for v in range(4, 7))
        assert g.is_independent([4, 5, 6])
        with pytest.raises(ContractError):
            join(empty_graph(0), complete_graph(2))

    def test_lex_product(self):
        g = lex_product_cycle_clique(5, 5)
        self.check_equal([14]*25, g.degrees(), "C5[K5] degrees")
        assert g.is_clique(range(5))
        assert g.adjacent(0, 5) and g.adjacent(0, 24) and not g.adjacent(0, 10)
        assert lex_product_cycle_clique(5, 1) == cycle_graph(5)
        for args in ((4, 2), (3, 2), (5, 0)):
            with pytest.raises(ContractError):
                lex_product_cycle_clique(*args)

    def test_induced_subgraph_labels(self):
        g = construct("k5")
        h = g.induced_subgraph([1, 3, 4])
        assert h == complete_graph(3)
        self.check_equal((1, 3, 4), h.labels)
        k = h.remove_vertices([0])
        self.check_equal((1, 2), k.labels)
        self.check_equal((3, 4), k.origin)

    def test_content_hash(self):
        assert self.o5.content_hash() == parse_dimacs(self.o5.to_dimacs()).content_hash()
        assert self.o5.content_hash().startswith("sha256:")
        assert complete_graph(3).content_hash() != cycle_graph(4).content_hash()
        assert empty_graph(3).content_hash() != empty_graph(4).content_hash()

    def test_verify_coloring(self):
        g = cycle_graph(5)
        good = Coloring({0: 0, 1: 1, 2: 0, 3: 1, 4: 2})
        assert verify(g, good)
        assert not verify(g, Coloring({0: 0, 1: 1, 2: 0, 3: 1, 4: 0}))
        assert not verify(g, Coloring(good.assignment, palette_size=2))
        assert not verify(g, Coloring({0: 0, 1: 1}))
        assert verify(g, Coloring({0: 0, 1: 1}, complete=False))
        with pytest.raises(StructureError):
            verify(g, Coloring({0: 0, 7: 1}, complete=False))

    def test_verify_clique(self):
        assert verify(self.o5, CliqueCertificate([0, 1, 2, 3]))
        assert verify(self.o5, CliqueCertificate([4, 5, 6, 7]))
        assert not verify(self.o5, CliqueCertificate([0, 1, 2, 4]))
        assert not verify(self.o5, CliqueCertificate([0, 1], claimed_size=3))
        assert verify(self.o5, CliqueCertificate([3], high_only=True))
        assert not verify(self.o5, CliqueCertificate([0], high_only=True))
        with pytest.raises(StructureError):
            verify(self.o5, CliqueCertificate([9]))

    def test_o5_facts(self):
        g = self.o5
        self.check_equal(5, g.max_degree(), "Delta(O5)")
        high = high_subgraph(g)
        self.check_equal((3, 8), high.labels, "high vertices of O5")
        self.check_equal(1, len(max_clique_exact(high, config=self.config)), "omega(H(O5))")
        self.check_equal(4, len(max_clique_exact(g, config=self.config)), "omega(O5)")
        self.check_equal(5, chromatic_number_exact(g, config=self.config), "chi(O5)")
        assert is_vertex_critical(g, 5, config=self.config)

    @pytest.mark.functional
    def test_bk8_facts(self):
        g = construct_bk8()
        self.check_equal([8]*15, g.degrees(), "bk8 degrees")
        self.check_equal(6, len(max_clique_exact(g, config=self.config)), "omega(bk8)")
        self.check_equal(8, chromatic_number_exact(g, config=self.config), "chi(bk8)")

    def test_moser_is_4_critical(self):
        self.check_equal(4, chromatic_number_exact(self.moser, config=self.config))
        assert is_vertex_critical(self.moser, 4, config=self.config)
        assert not is_vertex_critical(join(self.moser, empty_graph(1)), 4, config=self.config)

    def test_isomorphism_classes(self):
        for n, count in ((1, 1), (2, 2), (3, 4), (4, 11), (5, 34)):
            self.check_equal(count, len(isomorphism_classes(n)), "classes on %s vertices" % n)
        with pytest.raises(OracleRefusal):
            isomorphism_classes(6)

    def test_search_coloring(self):
        assert search_coloring(complete_graph(4), k=3) is None
        sol = search_coloring(complete_graph(4), k=4)
        assert verify(complete_graph(4), Coloring(sol, 4))
        lists = {0: [5], 1: [5, 6], 2: [6, 7]}
        sol = search_coloring(complete_graph(3), lists=lists)
        self.check_equal({0: 5, 1: 6, 2: 7}, sol)
        with pytest.raises(ContractError):
            search_coloring(complete_graph(3))

    def test_search_coloring_node_limit(self):
        with pytest.raises(SearchLimitExceeded):
            search_coloring(construct_bk8(), k=7, node_limit=10)

    def test_exact_oracles_refuse_large_graphs(self):
        small = self.config.copy(max_exact_chromatic=5, max_exact_clique=5)
        with pytest.raises(OracleRefusal) as info:
            chromatic_number_exact(self.o5, config=small)
        self.check_equal((9, 5), (info.value.size, info.value.bound))
        with pytest.raises(OracleRefusal):
            max_clique_exact(self.o5, config=small)

    def test_chromatic_number_agrees_with_list_coloring(self):
        for g in small_graphs(11, 40):
            chi = chromatic_number_exact(g, config=self.config)
            k = 1
            while l_colorable(g, ListAssignment({v: range(k) for v in g.vertices()})) is None:
                k += 1
            self.check_equal(chi, k, "graph %s" % g.edges())
            self.check_equal(chi, exact_coloring(g, config=self.config).num_colors())

    def test_greedy_and_tabu(self):
        g = cycle_graph(5)
        found = greedy_coloring(g)
        assert verify(g, found) and found.num_colors() == 3
        found = tabu_coloring(g, 3, seed=4, config=self.config)
        assert found is not None and verify(g, found)
        assert tabu_coloring(complete_graph(4), 3, iterations=50, config=self.config) is None

    def test_find_k_coloring(self):
        assert find_k_coloring(self.o5, 4) is None
        found = find_k_coloring(self.o5, 5)
        assert verify(self.o5, found)

    def test_critical_subgraph(self):
        g = join(complete_graph(4), empty_graph(3))
        h = critical_subgraph(g, 5, config=self.config)
        assert h == complete_graph(5)
        self.check_equal((0, 1, 2, 3, 6), h.labels)
        with pytest.raises(ContractError):
            critical_subgraph(cycle_graph(4), 3, config=self.config)
