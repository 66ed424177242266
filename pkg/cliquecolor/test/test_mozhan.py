#!/usr/bin/env python
"""Test suite for :mod:`cliquecolor.mozhan`

Partitions are built on the engine fixtures of
:func:`cliquecolor.corpus.engine_fixtures` and checked with
:func:`~cliquecolor.mozhan.verify_state`. Engine runs must end in a verified
coloring, a verified clique meeting the declared bound, or a violation that
carries a replayable snapshot.
"""
import copy
import json

import pytest

from cliquecolor.config import Config
from cliquecolor.corpus import engine_fixtures
from cliquecolor.errors import ContractError, OracleRefusal
from cliquecolor.graph import Coloring, CliqueCertificate, Graph, complete_graph, construct_bk8,\
                              construct_moser_spindle, critical_subgraph, cycle_graph, verify
from cliquecolor.mozhan import Outcome, PartitionState, RVector, StepResult, acquire_witness, choose_move,\
                               build_partition, clubgroups, recolor_claim, recolor_low_degree, run_engine,\
                               step, verify_state

__author__ = "Joshua Griffin Dunn"
__date__ = "2026-10-17"


class TestMozhan():
    """Test case for partitions and the member-moving engine"""

    @classmethod
    def setup_class(cls):
        cls.config = Config()
        cls.fixtures = engine_fixtures()
        cls.states = {}
        cls.witnesses = {}
        for name, g, r in cls.fixtures:
            cls.witnesses[name] = acquire_witness(g, sum(r), config=cls.config)
            cls.states[name] = build_partition(g, RVector(r), cls.witnesses[name], config=cls.config)

        # (delta, research, expected parts)
        cls.rvector_cases = [(7, False, (3, 3)),
                             (8, False, (3, 4)),
                             (9, False, (4, 4)),
                             (10, False, (3, 3, 3)),
                             (13, False, (3, 3, 3, 3)),
                             (14, False, (3, 3, 3, 4)),
                             (15, False, (3, 3, 4, 4)),
                             (16, False, (3, 3, 3, 3, 3)),
                             (5, True, (2, 2)),
                             (4, True, (2, 1)),
                             (3, True, (1, 1)),
                             ]

    @staticmethod
    def check_outcome(name, g, r, out):
        """Check that `out` is one of the three verified outcome kinds"""
        r = RVector(r)
        if out.variant == Outcome.COLORING:
            assert verify(g, out.coloring), "%s: engine coloring does not verify" % name
            assert out.coloring.num_colors() <= r.total, "%s: coloring uses %s colors" % (name, out.coloring.num_colors())
        elif out.variant == Outcome.CLIQUE:
            assert verify(g, out.clique), "%s: clique certificate does not verify" % name
            assert len(out.clique) >= out.bound, "%s: clique of %s below bound %s" % (name, len(out.clique), out.bound)
        else:
            assert out.variant == Outcome.VIOLATION, "%s: unknown outcome %s" % (name, out.variant)
            snapshot = out.violation.snapshot
            assert sorted(sum(snapshot["clubhouses"], [])) == list(g.vertices()), \
                   "%s: violation snapshot does not cover the graph" % name
            json.dumps(out.violation.to_json())

    def test_rvector_for_degree(self):
        for delta, research, parts in self.rvector_cases:
            r = RVector.for_degree(delta, research=research)
            assert r.parts == parts, "Delta %s: expected %s, got %s" % (delta, parts, r)
            if delta >= 7:
                assert r.total == delta - 1 and r.is_theorem_grade()

    def test_rvector_rejects_bad_input(self):
        for parts in ((3,), (3, 0), ()):
            with pytest.raises(ContractError):
                RVector(parts)
        with pytest.raises(ContractError):
            RVector.parse("3,x")
        with pytest.raises(ContractError):
            RVector.for_degree(6)
        with pytest.raises(ContractError):
            RVector.for_degree(2, research=True)

    def test_rvector_helpers(self):
        r = RVector.parse("3,3,4")
        assert r == RVector([3, 3, 4]) and r.total == 10
        assert r.offsets() == [0, 3, 6]
        assert not RVector([4, 4, 4]).is_theorem_grade()
        assert not RVector([2, 2]).is_theorem_grade()

    def test_fixture_partitions_pass_verify_state(self):
        for name, g, r in self.fixtures:
            s = self.states[name]
            assert isinstance(s, PartitionState), "%s: partition construction ended in %s" % (name, s)
            report = verify_state(s)
            assert report, "%s: %s" % (name, report)

    def test_k5_partition(self):
        s = self.states["k5"]
        R = s.active_club
        assert 0 in R.members and len(R.members) == 3
        assert R.members == s.houses[R.house]
        assert sorted(len(X) for X in s.clubhouses) == [2, 3]
        assert R.activation_count == 1
        groups = clubgroups(s)
        assert len(groups) == 1 and groups[0].spanned == frozenset([0, 1]) and not groups[0].big

    def test_k13_partition(self):
        s = self.states["k13"]
        R = s.active_club
        assert 0 in R.members and len(R.members) == 4
        assert sorted(len(X) for X in s.houses) == [3, 3, 3, 4]

    def test_active_club_is_uncolored_clique(self):
        for name, g, r in self.fixtures:
            s = self.states[name]
            R = s.active_club
            assert g.is_clique(R.members) and len(R.members) == r[R.house] + 1, name
            assert not any(v in s.colors for v in R.members), name

    def test_verify_state_detects_broken_colors(self):
        s = copy.deepcopy(self.states["k5"])
        x, y = sorted(s.houses[1 - s.active_club.house])
        s.colors[y] = s.colors[x]
        report = verify_state(s)
        assert not report and report.prop == "1"

    def test_verify_state_detects_lost_vertex(self):
        s = copy.deepcopy(self.states["k5"])
        house = 1 - s.active_club.house
        s.houses[house].discard(min(s.houses[house]))
        report = verify_state(s)
        assert not report and report.prop == "1"

    def test_snapshot_is_json(self):
        for name, _, _ in self.fixtures:
            text = json.dumps(self.states[name].snapshot(), sort_keys=True)
            assert '"clubhouses"' in text

    def test_engine_outcomes(self):
        for name, g, r in self.fixtures:
            out = run_engine(g, r, self.witnesses[name], research=True, config=self.config)
            self.check_outcome(name, g, r, out)
            assert out.variant != Outcome.COLORING, "%s needs more than sum(r) colors" % name

    def test_engine_on_complete_graphs_returns_the_graph(self):
        for name, g, r in self.fixtures:
            if name not in ("k5", "k13"):
                continue
            out = run_engine(g, r, self.witnesses[name], research=True, config=self.config)
            assert out.variant == Outcome.CLIQUE and len(out.clique) == g.n, "%s: %s" % (name, out)
            assert out.bound == g.max_degree() - max(r)

    def test_research_vectors_can_end_in_violations(self):
        # parts below 3 are outside the argument, so nothing forces a clique
        for name, g, r in self.fixtures:
            if name not in ("moser", "c5-join-k2"):
                continue
            out = run_engine(g, r, self.witnesses[name], research=True, config=self.config)
            if out.variant == Outcome.VIOLATION:
                assert out.violation.claim != "" and out.violation.snapshot["r"] == list(r), name

    def test_engine_is_deterministic(self):
        for name, g, r in self.fixtures:
            a = run_engine(g, r, self.witnesses[name], research=True, config=self.config)
            b = run_engine(g, r, self.witnesses[name], research=True, config=self.config)
            assert repr(a) == repr(b), name
            if a.variant == Outcome.VIOLATION:
                assert a.violation.snapshot == b.violation.snapshot, name

    def test_theorem2_mode(self):
        for name, g, r in self.fixtures:
            out = run_engine(g, r, self.witnesses[name], mode="theorem2", research=True, config=self.config)
            self.check_outcome(name, g, r, out)

    def test_colorable_input_yields_coloring(self):
        g = cycle_graph(4)
        witness = (0, Coloring({1: 0, 2: 1, 3: 0}))
        out = build_partition(g, RVector([1, 1]), witness, config=self.config)
        assert isinstance(out, Outcome) and out.variant == Outcome.COLORING
        assert verify(g, out.coloring) and out.coloring.num_colors() <= 2

    def test_step_reports_kind(self):
        s = copy.deepcopy(self.states["k13"])
        result = step(s)
        assert result.kind in (StepResult.MOVED, StepResult.COLORING_FOUND, StepResult.TERMINAL)
        if result.kind == StepResult.MOVED:
            assert verify_state(s, properties=("1", "2"))

    def test_no_move_towards_complete_clubs(self):
        # every other clubhouse of a complete graph is a clique club joined to the active club
        for name in ("k5", "k13"):
            assert choose_move(copy.deepcopy(self.states[name])) is None, name

    def test_recolor_low_degree_contract(self):
        s = copy.deepcopy(self.states["k5"])
        R = s.active_club
        other = 1 - R.house
        with pytest.raises(ContractError):
            recolor_low_degree(s, min(R.members), other)
        with pytest.raises(ContractError):
            recolor_low_degree(s, min(s.houses[other]), R.house)

    def test_recolor_claim_on_adjacent_pairs(self):
        s = copy.deepcopy(self.states["k5"])
        R = s.active_club
        a = min(R.members)
        b = min(s.houses[1 - R.house])
        assert recolor_claim(s, "C1", (a, b)) is None
        assert recolor_claim(s, "C3i", (a, b)) is None
        assert recolor_claim(s, "Join3", ((0, 1, 2), 3, 4)) is None
        with pytest.raises(ContractError):
            recolor_claim(s, "C5", (a, b))
        with pytest.raises(ContractError):
            recolor_claim(s, "Join4", ((0, 1, 2), 3, 4))

    def test_theorem_grade_runs_check_their_vector(self):
        g = complete_graph(5)
        with pytest.raises(ContractError):
            run_engine(g, (2, 2), self.witnesses["k5"], config=self.config)
        with pytest.raises(ContractError):
            run_engine(g, (2, 2), self.witnesses["k5"], mode="theorem3", research=True, config=self.config)

    def test_build_partition_rejects_bad_witness(self):
        g = complete_graph(5)
        bad = [(0, Coloring({1: 0, 2: 0, 3: 1, 4: 2})),
               (0, Coloring({1: 0, 2: 1, 3: 2})),
               (7, Coloring({})),
               (0, Coloring({1: 0, 2: 1, 3: 2, 4: 3, 0: 4})),
               "nonsense",
               ]
        for witness in bad:
            with pytest.raises(ContractError):
                build_partition(g, RVector([2, 2]), witness, config=self.config)
        with pytest.raises(ContractError):
            build_partition(g, RVector([1, 1]), (0, Coloring({1: 0, 2: 1, 3: 2, 4: 3})), config=self.config)

    def test_acquire_witness(self):
        g = construct_moser_spindle()
        v, coloring = acquire_witness(g, 3, config=self.config)
        assert v == 0 and set(coloring.assignment) == set(range(1, 7))
        assert verify(g.remove_vertices([0]), Coloring({k-1: c for k, c in coloring.assignment.items()}, 3))
        with pytest.raises(ContractError):
            acquire_witness(complete_graph(5), 3, config=self.config)
        # no theorem-grade K14 run: K14 - v is K13
        with pytest.raises(ContractError):
            acquire_witness(complete_graph(14), sum(RVector.for_degree(13)), config=self.config)
        with pytest.raises(OracleRefusal):
            acquire_witness(g, 3, config=self.config.copy(max_exact_chromatic=5))

    def test_outcome_relabel(self):
        out = Outcome.of_clique(CliqueCertificate([0, 1]), 2).relabel([5, 7])
        assert out.clique.vertices == frozenset([5, 7]) and out.bound == 2
        out = Outcome.of_coloring(Coloring({0: 1, 1: 0})).relabel([3, 4])
        assert out.coloring.assignment == {3: 1, 4: 0}

    def test_verify_state_reports_activation(self):
        s = copy.deepcopy(self.states["k5"])
        other = [X for X in s.clubs.values() if X.ident != s.active][0]
        other.activation_count = 4
        report = verify_state(s, properties=("1", "2"))
        assert not report and report.prop == "activation"

    def test_engine_reports_activation(self):
        for name, g, r in self.fixtures:
            out = run_engine(g, r, self.witnesses[name], research=True, config=self.config)
            if out.variant != Outcome.VIOLATION:
                assert 1 <= out.diagnostics["max_activation"] <= 3, name
            else:
                assert out.violation.snapshot["max_activation"] >= 1, name


class TestGadgets():
    """Test case for the recoloring exchanges on small hand-built partitions

    Each gadget fixes the clubhouses, the colors of inactive vertices and the
    active club, and misses exactly the edge the exchange turns into a
    coloring.
    """

    @classmethod
    def setup_class(cls):
        cls.config = Config()
        # K5 minus 03, minus 34
        cls.k5_03 = Graph(5, [(0, 1), (0, 2), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
        cls.k5_34 = Graph(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4)])
        # K4 minus 23
        cls.k4_23 = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
        cls.path = Graph(3, [(0, 1), (1, 2)])
        # K6 minus 45
        cls.k6_45 = Graph(6, [(u, v) for u in range(6) for v in range(u + 1, 6) if (u, v) != (4, 5)])
        cls.star = Graph(4, [(0, 1), (0, 2), (0, 3)])

    def make_state(self, g, r, houses, colors, active, active_house):
        return _state(g, r, houses, colors, active, active_house, self.config)

    @staticmethod
    def check_coloring(name, s, coloring):
        assert coloring is not None, "%s: exchange found no coloring" % name
        assert verify(s.graph, coloring), "%s: exchange coloring is not proper" % name
        assert coloring.num_colors() <= s.r.total, "%s: %s colors" % (name, coloring.num_colors())

    def test_c1_exchange(self):
        s = self.make_state(self.k5_03, (2, 2), [{0, 1, 2}, {3, 4}], {3: 0, 4: 1}, {0, 1, 2}, 0)
        assert verify_state(s, properties=("1", "2"))
        self.check_coloring("C1", s, recolor_claim(s, "C1", (0, 3)))
        assert s.events[-1]["claim"] == "C1"

    def test_c2_exchange(self):
        s = self.make_state(self.k4_23, (1, 1, 1), [{0, 1}, {2}, {3}], {2: 0, 3: 0}, {0, 1}, 0)
        self.check_coloring("C2", s, recolor_claim(s, "C2", (2, 3)))

    def test_c3_exchanges(self):
        for claim in ("C3i", "C3ii"):
            s = self.make_state(self.path, (1, 1), [{0, 1}, {2}], {2: 0}, {0, 1}, 0)
            self.check_coloring(claim, s, recolor_claim(s, claim, (0, 2)))
            assert s.events[-1]["moves"] == [[0, 1]], claim

    def test_join4_exchange(self):
        s = self.make_state(self.k6_45, (2, 3), [{4, 5}, {0, 1, 2, 3}], {4: 0, 5: 0}, {0, 1, 2, 3}, 1)
        self.check_coloring("Join4", s, recolor_claim(s, "Join4", ((0, 1, 2, 3), 4, 5)))

    def test_join3_exchange(self):
        s = self.make_state(self.k5_34, (2, 2), [{0, 1, 2}, {3, 4}], {3: 0, 4: 0}, {0, 1, 2}, 0)
        self.check_coloring("Join3", s, recolor_claim(s, "Join3", ((0, 1, 2), 3, 4)))

    def test_c2_needs_two_other_clubs(self):
        s = self.make_state(self.path, (1, 1), [{0, 1}, {2}], {2: 0}, {0, 1}, 0)
        with pytest.raises(ContractError):
            recolor_claim(s, "C2", (0, 2))

    def test_low_degree_step(self):
        s = self.make_state(self.path, (1, 1), [{0, 1}, {2}], {2: 0}, {0, 1}, 0)
        self.check_coloring("low-degree", s, recolor_low_degree(copy.deepcopy(s), 0, 1))
        result = step(s)
        assert result.kind == StepResult.COLORING_FOUND
        self.check_coloring("step", s, result.coloring)
        assert s.events[-1] == {"kind": "low-degree", "member": 0, "house": 1}

    def test_choose_move_prefers_sent_clubs(self):
        s = self.make_state(self.star, (1, 1, 1), [{0, 1}, {2}, {3}], {2: 0, 3: 0}, {0, 1}, 0)
        move = choose_move(s)
        assert (move.member, move.house, move.club, move.relay) == (0, 1, s.club_of[2], None)
        s.active_club.send_history.append((9, s.club_of[3]))
        move = choose_move(s)
        assert (move.member, move.house, move.club) == (0, 2, s.club_of[3])

    def test_clubgroups(self):
        s = self.make_state(self.k4_23, (1, 1, 1), [{0, 1}, {2}, {3}], {2: 0, 3: 0}, {0, 1}, 0)
        groups = clubgroups(s)
        assert [X.spanned for X in groups] == [frozenset([0, 1]), frozenset([0, 2])]
        assert all(X.big for X in groups)
        assert all(s.active in X.clubs for X in groups)

    @pytest.mark.functional
    def test_theorem_grade_run_on_bk8(self):
        W = critical_subgraph(construct_bk8(), 8, config=self.config)
        delta = W.max_degree()
        r = RVector.for_degree(delta)
        witness = acquire_witness(W, r.total, config=self.config)
        out = run_engine(W, r, witness, config=self.config)
        assert out.variant == Outcome.CLIQUE, out
        assert verify(W, out.clique) and len(out.clique) >= out.bound == delta - max(r)
        assert out.diagnostics["max_activation"] <= 3


def _state(g, r, houses, colors, active, active_house, config):
    """Return a :class:`~cliquecolor.mozhan.PartitionState` with the given
    clubhouses, inactive colors and active club
    """
    s = PartitionState(g, RVector(r), config=config)
    s.houses = [set(X) for X in houses]
    s.house_of = {v: i for i, X in enumerate(houses) for v in X}
    s.colors = dict(colors)
    s.start_phase(set(active), active_house)
    return s
