#!/usr/bin/env python
"""Mozhan partitions and the member-moving engine.

Given a graph `G`, a vertex `v` and a coloring of ``G - v`` with
``t = sum(r)`` colors, the color classes are grouped into clubhouses
``V_1..V_k`` whose sizes are the parts of an :class:`RVector`. Components of a
clubhouse are *clubs*, their vertices *members*. One club, the *active* one,
is a complete graph on ``r_j + 1`` vertices and holds no colors; every other
vertex carries a color from its clubhouse's own palette.

The engine repeatedly sends an unmoved member of the active club to a
clubhouse where it has exactly ``r_i`` neighbors, making the receiving club
active. Every place where the argument behind this process would derive a
contradiction is an explicit recoloring that produces a full ``t``-coloring
of `G`. The run therefore ends in one of three verified :class:`Outcome`
values: a coloring with ``t`` colors, a clique certificate, or a diagnosed
assumption violation that carries a replayable state snapshot.

Entry points
------------
:func:`build_partition`
    Build a partition from a witness, repairing until the active club is a
    clique and the partition passes its audit

:func:`step`, :func:`choose_move`
    Single moves of the process

:func:`run_engine`
    Run the process to an :class:`Outcome`

:func:`verify_state`, :func:`clubgroups`
    Read-only inspection of a :class:`PartitionState`
"""
import collections
import itertools
import logging

import networkx as nx

from cliquecolor.config import get_config
from cliquecolor.errors import CliqueColorError, ContractError, InternalInvariantError,\
                               OracleRefusal, SearchLimitExceeded
from cliquecolor.graph import Coloring, CliqueCertificate, find_k_coloring, high_subgraph,\
                              max_clique_exact, search_coloring, verify
from cliquecolor.listcolor import ListAssignment, color_mixed_join

__author__ = "Joshua Griffin Dunn"
__date__ = "2026-10-17"

logger = logging.getLogger(__name__)

MODES = ("theorem1", "theorem2")
CLAIMS = ("C1", "C2", "C3i", "C3ii", "Join4", "Join3")

#===============================================================================
# INDEX: value types
#===============================================================================

class RVector(object):
    """Clubhouse sizes ``r_1..r_k``

    Parameters
    ----------
    parts : iterable of int
        At least two positive integers

    Raises
    ------
    :class:`~cliquecolor.errors.ContractError`
        If there are fewer than two parts or a part is not positive
    """

    def __init__(self, parts):
        self.parts = tuple(int(X) for X in parts)
        if len(self.parts) < 2:
            raise ContractError("An r-vector needs at least two parts, got %s" % (self.parts,))
        if any(X < 1 for X in self.parts):
            raise ContractError("r-vector parts must be positive, got %s" % (self.parts,))

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __iter__(self):
        return iter(self.parts)

    def __eq__(self, other):
        return isinstance(other, RVector) and self.parts == other.parts

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return "RVector(%s)" % ",".join([str(X) for X in self.parts])

    @property
    def total(self):
        return sum(self.parts)

    def offsets(self):
        """Return the first palette color of each clubhouse"""
        out = []
        acc = 0
        for r in self.parts:
            out.append(acc)
            acc += r
        return out

    def is_theorem_grade(self):
        """Return `True` if every part is 3 or 4 and at most two parts are 4"""
        return all(X in (3, 4) for X in self.parts) and self.parts.count(4) <= 2

    @classmethod
    def parse(cls, text):
        """Build from a comma-separated string such as ``'3,3,3,4'``"""
        try:
            return cls([int(X) for X in text.split(",")])
        except ValueError:
            raise ContractError("Malformed r-vector '%s'" % text)

    @classmethod
    def for_degree(cls, delta, research=False):
        """Return the vector used for maximum degree `delta`

        For ``delta >= 7``, ``delta - 1`` is written with 3's and 4's: all 3's
        when ``delta`` is 1 mod 3, one 4 when it is 2 mod 3, two 4's when it
        is 0 mod 3. The 4's come last. Below 7 only research runs are
        possible; ``delta - 1`` is then split into 2's and at most one 1.
        """
        if delta >= 7:
            fours = {1: 0, 2: 1, 0: 2}[delta % 3]
            threes = (delta - 1 - 4*fours) // 3
            return cls([3]*threes + [4]*fours)
        if not research:
            raise ContractError("Theorem-grade r-vectors need delta >= 7, got %s" % delta)
        if delta < 3:
            raise ContractError("No r-vector with two parts sums to %s" % (delta - 1))
        total = delta - 1
        parts = [2]*(total // 2) + [1]*(total % 2)
        if len(parts) < 2:
            parts = [1, 1]
        return cls(parts)


class AssumptionViolation(object):
    """Diagnosis of an engine run whose input broke an assumption of the argument

    Attributes
    ----------
    claim : str
        Identifier of the failed step (e.g. ``'C1'``, ``'C3ii'``, ``'P2-repair'``)

    message : str
        Human-readable description

    snapshot : dict
        JSON-ready :meth:`PartitionState.snapshot` taken when the run stopped
    """

    def __init__(self, claim, message, snapshot=None):
        self.claim = claim
        self.message = message
        self.snapshot = {} if snapshot is None else snapshot

    def __repr__(self):
        return "<AssumptionViolation %s: %s>" % (self.claim, self.message)

    def to_json(self):
        return {"claim": self.claim, "message": self.message, "snapshot": self.snapshot}


class AssumptionFailed(CliqueColorError):
    """Raised inside the engine when the input breaks an assumption.
    :func:`run_engine` turns it into an :class:`Outcome`.
    """
    def __init__(self, claim, message):
        self.claim = claim
        self.message = message
        CliqueColorError.__init__(self, "%s: %s" % (claim, message))


class Outcome(object):
    """Verified result of the engine or the pipeline

    Exactly one of :attr:`coloring`, :attr:`clique` and :attr:`violation`
    is set, according to :attr:`variant`.

    Attributes
    ----------
    variant : str
        ``'coloring'``, ``'clique'`` or ``'violation'``

    bound : int or None
        For cliques, the size the producer declared it would reach

    diagnostics : dict
        Producer-specific extra information
    """
    COLORING = "coloring"
    CLIQUE = "clique"
    VIOLATION = "violation"

    def __init__(self, variant, coloring=None, clique=None, violation=None, bound=None, diagnostics=None):
        self.variant = variant
        self.coloring = coloring
        self.clique = clique
        self.violation = violation
        self.bound = bound
        self.diagnostics = {} if diagnostics is None else diagnostics

    def __repr__(self):
        if self.variant == Outcome.COLORING:
            return "<Outcome coloring with %s colors>" % self.coloring.num_colors()
        if self.variant == Outcome.CLIQUE:
            return "<Outcome clique of size %s (bound %s)>" % (len(self.clique), self.bound)
        return "<Outcome violation %s>" % self.violation.claim

    @classmethod
    def of_coloring(cls, coloring, diagnostics=None):
        return cls(cls.COLORING, coloring=coloring, diagnostics=diagnostics)

    @classmethod
    def of_clique(cls, clique, bound, diagnostics=None):
        return cls(cls.CLIQUE, clique=clique, bound=bound, diagnostics=diagnostics)

    @classmethod
    def of_violation(cls, violation, diagnostics=None):
        return cls(cls.VIOLATION, violation=violation, diagnostics=diagnostics)

    def relabel(self, labels):
        """Return this outcome with vertex ``v`` renamed ``labels[v]``"""
        if self.variant == Outcome.COLORING:
            return Outcome(self.variant, coloring=self.coloring.relabel(labels), bound=self.bound,
                           diagnostics=self.diagnostics)
        if self.variant == Outcome.CLIQUE:
            return Outcome(self.variant, clique=self.clique.relabel(labels), bound=self.bound,
                           diagnostics=self.diagnostics)
        return self


class StateReport(object):
    """Result of :func:`verify_state`. Truthy iff the state is valid.

    Attributes
    ----------
    ok : bool

    prop : str or None
        First violated property (``'1'`` to ``'4'``)

    message : str
    """

    def __init__(self, ok, prop=None, message=""):
        self.ok = ok
        self.prop = prop
        self.message = message

    def __bool__(self):
        return self.ok

    __nonzero__ = __bool__

    def __repr__(self):
        return "<StateReport ok>" if self.ok else "<StateReport property %s: %s>" % (self.prop, self.message)


class StepResult(object):
    """Result of :func:`step`: ``'moved'``, ``'coloring'`` or ``'terminal'``"""
    MOVED = "moved"
    COLORING_FOUND = "coloring"
    TERMINAL = "terminal"

    def __init__(self, kind, state=None, coloring=None):
        self.kind = kind
        self.state = state
        self.coloring = coloring

    def __repr__(self):
        return "<StepResult %s>" % self.kind


Move = collections.namedtuple("Move", ["member", "house", "club", "relay"])
"""A move: `member` goes to clubhouse `house`, joining club `club` (`None`
when its neighbors there do not form a single clique club). For relayed moves
`relay` is the active-club member that first moves into `member`'s club.
"""


class Clubgroup(object):
    """Maximal set of clique clubs pairwise complete to each other

    Attributes
    ----------
    clubs : frozenset
        Club identifiers

    spanned : frozenset
        Clubhouses of those clubs

    big : bool
        `True` iff exactly one clubhouse is not spanned
    """

    def __init__(self, clubs, spanned, num_houses):
        self.clubs = frozenset(clubs)
        self.spanned = frozenset(spanned)
        self.big = len(self.spanned) == num_houses - 1

    def __repr__(self):
        return "<Clubgroup clubs=%s houses=%s%s>" % (sorted(self.clubs), sorted(self.spanned), " big" if self.big else "")


#===============================================================================
# INDEX: partition state
#===============================================================================

class Club(object):
    """A component of a clubhouse. The object keeps its identity while
    members come and go.
    """
    __slots__ = ("ident", "house", "members", "send_history", "activation_count")

    def __init__(self, ident, house, members):
        self.ident = ident
        self.house = house
        self.members = set(members)
        self.send_history = []
        self.activation_count = 0

    def __repr__(self):
        return "<Club %s house=%s members=%s>" % (self.ident, self.house, sorted(self.members))

    def sent_to(self):
        return set([X[1] for X in self.send_history])

    def to_json(self):
        return {"id": self.ident,
                "house": self.house,
                "members": sorted(self.members),
                "send_history": [list(X) for X in self.send_history],
                "activation_count": self.activation_count}


def _component(g, vertices, start):
    seen = set([start])
    stack = [start]
    while stack:
        x = stack.pop()
        for y in g.neighbors(x):
            if y in vertices and y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def _components(g, vertices):
    rest = set(vertices)
    out = []
    for v in sorted(vertices):
        if v in rest:
            comp = _component(g, rest, v)
            rest -= comp
            out.append(comp)
    return out


def _complete(g, a, b):
    return all(g.adjacent(x, y) for x in a for y in b)


class PartitionState(object):
    """Live Mozhan partition

    Attributes
    ----------
    graph : :class:`~cliquecolor.graph.Graph`

    r : :class:`RVector`

    mode : str
        ``'theorem1'`` or ``'theorem2'``

    houses : list of set
        Clubhouses ``V_1..V_k``

    house_of : dict
        Clubhouse index of each vertex

    colors : dict
        Color (``0..r_i-1``, local to its clubhouse) of every vertex outside
        the active club

    clubs : dict
        :class:`Club` objects by identifier

    club_of : dict
        Club identifier of each vertex

    active : int
        Identifier of the active club

    moved : set
        Vertices moved during the current phase

    high : frozenset
        Vertices of maximum degree

    phase : int
        Number of repairs so far. Club bookkeeping restarts with each phase.

    max_activation : int
        Most activations of any club in any phase

    events : list
        Replay log of moves, repairs and recolorings
    """

    def __init__(self, graph, r, mode="theorem1", config=None):
        self.graph = graph
        self.r = r
        self.mode = mode
        self.config = get_config() if config is None else config
        self.houses = [set() for _ in r]
        self.house_of = {}
        self.colors = {}
        self.clubs = {}
        self.club_of = {}
        self.active = None
        self.moved = set()
        top = graph.max_degree()
        self.high = frozenset([v for v in graph.vertices() if graph.degree(v) == top])
        self.phase = 0
        self.steps = 0
        self.events = []
        self.group_activations = collections.Counter()
        self.max_activation = 0
        self._next_ident = 0

    # --- views -----------------------------------------------------------------

    @property
    def active_club(self):
        return self.clubs[self.active]

    @property
    def clubhouses(self):
        return [frozenset(X) for X in self.houses]

    @property
    def inactive_colorings(self):
        """Per clubhouse, the colors of its vertices outside the active club"""
        return [{v: self.colors[v] for v in sorted(X) if v in self.colors} for X in self.houses]

    @property
    def send_history(self):
        return {X.ident: list(X.send_history) for X in self.clubs.values()}

    @property
    def activation_count(self):
        return {X.ident: X.activation_count for X in self.clubs.values()}

    def house_neighbors(self, v, i):
        """Return the neighbors of `v` in clubhouse `i`"""
        return set(self.graph.neighbors(v)) & self.houses[i] - set([v])

    def potential(self):
        """Return the number of edges inside clubhouses minus ``r`` of the
        active clubhouse. Moves keep it; repairs lower it.
        """
        inside = sum([1 for u, v in self.graph.edges() if self.house_of[u] == self.house_of[v]])
        return inside - self.r[self.active_club.house]

    def is_clique_club(self, club):
        size = self.r[club.house] + (1 if club.ident == self.active else 0)
        return len(club.members) == size and self.graph.is_clique(club.members)

    def clique_clubs(self):
        return [self.clubs[X] for X in sorted(self.clubs) if self.is_clique_club(self.clubs[X])]

    def complete(self, a, b):
        """Return `True` if clubs `a` and `b` are complete to each other"""
        return _complete(self.graph, a.members, b.members)

    # --- bookkeeping -----------------------------------------------------------

    def _new_ident(self):
        self._next_ident += 1
        return self._next_ident - 1

    def start_phase(self, active_members, active_house):
        """Rebuild clubs from the clubhouses and reset the move history

        Parameters
        ----------
        active_members : set
            Members of the new active club (uncolored)

        active_house : int
        """
        if len(self.clubs) > 0:
            self.phase += 1
        self.clubs = {}
        self.club_of = {}
        self.moved = set()
        for i, house in enumerate(self.houses):
            for comp in _components(self.graph, house):
                club = Club(self._new_ident(), i, comp)
                self.clubs[club.ident] = club
                for v in comp:
                    self.club_of[v] = club.ident
                if i == active_house and comp == set(active_members):
                    self.active = club.ident
        self.active_club.activation_count = 1
        self.max_activation = max(self.max_activation, 1)
        for v in self.active_club.members:
            self.colors.pop(v, None)
        self.events.append({"kind": "phase", "phase": self.phase, "active": sorted(active_members)})
        logger.debug("[mozhan] phase %s: active club %s in clubhouse %s, potential %s"
                     % (self.phase, sorted(active_members), active_house, self.potential()))

    def fresh_clique_colors(self, members):
        """Color a clique club that stops being active"""
        for c, v in enumerate(sorted(members)):
            self.colors[v] = c

    def relocate(self, v, dest):
        src = self.house_of[v]
        self.houses[src].discard(v)
        self.houses[dest].add(v)
        self.house_of[v] = dest
        self.colors.pop(v, None)

    def assemble(self, colors=None):
        """Return the full coloring given by local `colors`, palettes disjoint per clubhouse"""
        colors = self.colors if colors is None else colors
        offsets = self.r.offsets()
        assignment = {v: offsets[self.house_of[v]] + colors[v] for v in self.graph.vertices()}
        return Coloring(assignment, self.r.total)

    def snapshot(self):
        """Return a JSON-ready description of the state"""
        active = self.clubs.get(self.active)
        return {"phase": self.phase,
                "steps": self.steps,
                "mode": self.mode,
                "r": list(self.r.parts),
                "clubhouses": [sorted(X) for X in self.houses],
                "colors": {str(v): c for v, c in sorted(self.colors.items())},
                "active": None if active is None else active.to_json(),
                "clubs": [self.clubs[X].to_json() for X in sorted(self.clubs)],
                "moved": sorted(self.moved),
                "max_activation": self.max_activation,
                "events": list(self.events)}


#===============================================================================
# INDEX: recoloring helpers
#===============================================================================

def _region_colors(s, moves=(), removed=()):
    """Apply `moves` to a copy of the partition, then recolor every club that
    gained a vertex or held the active club

    Parameters
    ----------
    s : :class:`PartitionState`

    moves : list of (vertex, clubhouse)
        Applied in order

    removed : iterable
        Vertices deleted from the graph first

    Returns
    -------
    tuple or None
        ``(houses, house_of, colors)`` after the moves, with local colors for
        every remaining vertex, or `None` if some region has no coloring
        within its clubhouse's size
    """
    g = s.graph
    removed = set(removed)
    houses = [set(X) - removed for X in s.houses]
    house_of = dict(s.house_of)
    colors = {v: c for v, c in s.colors.items() if v not in removed}
    pending = [set() for _ in houses]
    for v in s.active_club.members:
        if v not in removed:
            pending[s.active_club.house].add(v)

    for v, dest in moves:
        src = house_of[v]
        houses[src].discard(v)
        houses[dest].add(v)
        house_of[v] = dest
        colors.pop(v, None)
        pending[src].discard(v)
        pending[dest].add(v)

    for i, todo in enumerate(pending):
        if len(todo) == 0:
            continue
        region = set()
        for v in sorted(todo):
            if v not in region:
                region |= _component(g, houses[i], v)
        sub = g.induced_subgraph(region)
        try:
            sol = search_coloring(sub, k=s.r[i], node_limit=s.config.search_node_limit)
        except SearchLimitExceeded:
            logger.debug("[mozhan] search limit while recoloring %s vertices in clubhouse %s" % (len(region), i))
            return None
        if sol is None:
            return None
        for local, c in sol.items():
            colors[sub.labels[local]] = c

    return houses, house_of, colors


def _coloring_after(s, moves):
    """Return a verified full coloring after `moves`, or `None`"""
    found = _region_colors(s, moves)
    if found is None:
        return None
    _, house_of, colors = found
    offsets = s.r.offsets()
    coloring = Coloring({v: offsets[house_of[v]] + colors[v] for v in s.graph.vertices()}, s.r.total)
    if not verify(s.graph, coloring):
        raise InternalInvariantError("Recolored partition does not give a proper coloring")
    return coloring


def recolor_low_degree(s, u, e):
    """Color the whole graph after moving active member `u` to clubhouse `e`,
    where it has fewer than ``r_e`` neighbors

    `u` takes the lowest color of clubhouse `e` missing on its neighbors
    there, the rest of the active club is colored as a clique, and every other
    vertex keeps its color.

    Parameters
    ----------
    s : :class:`PartitionState`

    u : int
        Member of the active club

    e : int
        Clubhouse with ``d_e(u) < r_e``

    Returns
    -------
    :class:`~cliquecolor.graph.Coloring`

    Raises
    ------
    :class:`AssumptionFailed`
        If the completed coloring is not proper
    """
    R = s.active_club
    if u not in R.members or e == R.house:
        raise ContractError("recolor_low_degree needs an active member and another clubhouse")
    nbrs = s.house_neighbors(u, e)
    if len(nbrs) >= s.r[e]:
        raise ContractError("Vertex %s has %s neighbors in clubhouse %s, needs fewer than %s"
                            % (u, len(nbrs), e, s.r[e]))

    colors = dict(s.colors)
    house_of = dict(s.house_of)
    for c, v in enumerate(sorted(R.members - set([u]))):
        colors[v] = c
    taken = set([colors[X] for X in nbrs])
    colors[u] = min(set(range(s.r[e])) - taken)
    house_of[u] = e

    offsets = s.r.offsets()
    coloring = Coloring({v: offsets[house_of[v]] + colors[v] for v in s.graph.vertices()}, s.r.total)
    if not verify(s.graph, coloring):
        raise AssumptionFailed("low-degree", "moving %s to clubhouse %s does not complete a coloring" % (u, e))
    s.events.append({"kind": "low-degree", "member": u, "house": e})
    logger.debug("[mozhan] low-degree branch: %s has %s neighbors in clubhouse %s" % (u, len(nbrs), e))
    return coloring


def _club_of_vertex(s, v):
    return s.clubs[s.club_of[v]]


def _first_coloring(s, scripts):
    for moves in scripts:
        coloring = _coloring_after(s, moves)
        if coloring is not None:
            return coloring, moves
    return None, None


def _join_coloring(s, claim, quad, p, q):
    g = s.graph
    H = set(quad) | set([p, q])
    found = _region_colors(s, removed=H)
    if found is None:
        raise AssumptionFailed(claim, "no coloring of G - H for H = %s" % sorted(H))
    _, house_of, colors = found
    offsets = s.r.offsets()
    base = {v: offsets[house_of[v]] + c for v, c in colors.items()}

    order = sorted(quad) + [p, q]
    lists = {}
    for i, h in enumerate(order):
        lists[i] = set(range(s.r.total)) - set([base[X] for X in g.neighbors(h) if X not in H])
    kind = "K4E2" if len(quad) == 4 else "K3E2"
    try:
        local = color_mixed_join(kind, ListAssignment(lists))
    except ContractError as e:
        raise AssumptionFailed(claim, "join lemma does not apply: %s" % e)

    assignment = dict(base)
    for i, h in enumerate(order):
        assignment[h] = local[i]
    coloring = Coloring(assignment, s.r.total)
    if not verify(g, coloring):
        raise InternalInvariantError("%s coloring is not proper" % claim)
    return coloring


def recolor_claim(s, claim, context):
    """Turn a missing edge into a full coloring, following the exchange the
    corresponding step of the argument prescribes

    ============   ==================   ==========================================
    **claim**      **context**          **exchange**
    ------------   ------------------   ------------------------------------------
    ``C1``         ``(u, v)``           active member `u`, `v` in a clique club
                                        `S` that is complete to the active club
                                        minus `u`: move some other active member
                                        `w` to `S`, then `v` to the active club
    ``C2``         ``(u, v)``           `u`, `v` in two clique clubs joined to
                                        the active club: move active members
                                        `w1`, `w2` into them and `u`, `v` back
    ``C3i``,       ``(a, b)``           `a` in the active club, `b` in a club it
    ``C3ii``                            sent two members to: move `a` over; or
                                        some other `y` over and `b` back; or
                                        `b` back
    ``Join4``,     ``(Q, p, q)``        `Q` a clique of 4 (3) vertices complete
    ``Join3``                           to nonadjacent `p`, `q`: color the rest
                                        from the partition and finish with
                                        :func:`~cliquecolor.listcolor.color_mixed_join`
    ============   ==================   ==========================================

    Parameters
    ----------
    s : :class:`PartitionState`

    claim : str

    context : tuple

    Returns
    -------
    :class:`~cliquecolor.graph.Coloring` or None
        A verified ``sum(r)``-coloring, or `None` when the pair in question is
        adjacent (the edge the argument derives is present)

    Raises
    ------
    :class:`~cliquecolor.errors.ContractError`
        If `context` does not have the required structure

    :class:`AssumptionFailed`
        If the pair is nonadjacent but no exchange completes a coloring
    """
    g = s.graph
    R = s.active_club
    if claim not in CLAIMS:
        raise ContractError("Unknown claim '%s'" % claim)

    if claim in ("Join4", "Join3"):
        quad, p, q = context
        size = 4 if claim == "Join4" else 3
        if len(set(quad)) != size or not g.is_clique(quad) or p in quad or q in quad:
            raise ContractError("%s needs a clique of %s vertices, got %s" % (claim, size, list(quad)))
        if not (_complete(g, quad, [p, q])):
            raise ContractError("%s needs %s and %s complete to %s" % (claim, p, q, sorted(quad)))
        if g.adjacent(p, q):
            return None
        coloring = _join_coloring(s, claim, quad, p, q)
        s.events.append({"kind": "claim", "claim": claim, "context": [sorted(quad), p, q]})
        return coloring

    a, b = context
    if g.adjacent(a, b):
        logger.debug("[mozhan] %s: %s and %s adjacent, edge established" % (claim, a, b))
        return None

    if claim == "C1":
        if a not in R.members or b in R.members:
            raise ContractError("C1 needs an active member and a vertex outside the active club")
        S = _club_of_vertex(s, b)
        if S.house == R.house or not _complete(g, R.members - set([a]), S.members):
            raise ContractError("C1 needs a club complete to the active club minus %s" % a)
        scripts = [[(w, S.house), (b, R.house)] for w in sorted(R.members - set([a]))]
    elif claim == "C2":
        X, Y = _club_of_vertex(s, a), _club_of_vertex(s, b)
        if len(set([R.house, X.house, Y.house])) != 3 or not (s.complete(R, X) and s.complete(R, Y)):
            raise ContractError("C2 needs two clubs in distinct clubhouses joined to the active club")
        scripts = [[(w1, X.house), (a, R.house), (w2, Y.house), (b, R.house)]
                   for w1, w2 in itertools.permutations(sorted(R.members), 2)]
    else:
        if a not in R.members or b in R.members:
            raise ContractError("%s needs an active member and a vertex of another club" % claim)
        T = _club_of_vertex(s, b)
        scripts = [[(a, T.house)]]
        scripts.extend([[(y, T.house), (b, R.house)] for y in sorted(R.members - set([a]))])
        scripts.append([(b, R.house)])

    coloring, moves = _first_coloring(s, scripts)
    if coloring is None:
        raise AssumptionFailed(claim, "%s and %s are not adjacent but no exchange gives a coloring" % (a, b))
    s.events.append({"kind": "claim", "claim": claim, "context": [a, b], "moves": [list(X) for X in moves]})
    logger.debug("[mozhan] %s: %s and %s not adjacent, exchange %s gives a coloring" % (claim, a, b, moves))
    return coloring


#===============================================================================
# INDEX: building a partition
#===============================================================================

def _check_witness(g, r, witness):
    try:
        v, coloring = witness
    except (TypeError, ValueError):
        raise ContractError("Witness must be a pair (vertex, coloring)")
    assignment = coloring.assignment if isinstance(coloring, Coloring) else dict(coloring)
    if not 0 <= v < g.n:
        raise ContractError("Witness vertex %s is not in the graph" % v)
    if set(assignment) != set(g.vertices()) - set([v]):
        raise ContractError("Witness coloring must cover exactly the vertices other than %s" % v)
    for x, y in g.edges():
        if x != v and y != v and assignment[x] == assignment[y]:
            raise ContractError("Witness coloring is not proper on edge (%s, %s)" % (x, y))
    if len(set(assignment.values())) > r.total:
        raise ContractError("Witness uses %s colors, more than sum(r) = %s"
                            % (len(set(assignment.values())), r.total))
    return v, assignment


def _group_classes(g, classes, r):
    """Group color classes into clubhouses of sizes `r`, locally minimizing
    the number of edges inside clubhouses by swapping classes
    """
    t = len(classes)
    where = {}
    for c, v in enumerate(classes):
        for x in v:
            where[x] = c
    between = [[0] * t for _ in range(t)]
    for x, y in g.edges():
        if x in where and y in where:
            between[where[x]][where[y]] += 1
            between[where[y]][where[x]] += 1

    parts = []
    start = 0
    for size in r:
        parts.append(list(range(start, start + size)))
        start += size

    def gain(pa, a, pb, b):
        before = sum([between[a][X] for X in parts[pa] if X != a]) + sum([between[b][X] for X in parts[pb] if X != b])
        after = sum([between[a][X] for X in parts[pb] if X != b]) + sum([between[b][X] for X in parts[pa] if X != a])
        return before - after

    while True:
        best = None
        for pa, pb in itertools.combinations(range(len(parts)), 2):
            for a in parts[pa]:
                for b in parts[pb]:
                    found = gain(pa, a, pb, b)
                    if found > 0 and (best is None or found > best[0]):
                        best = (found, pa, a, pb, b)
        if best is None:
            break
        _, pa, a, pb, b = best
        parts[pa][parts[pa].index(a)] = b
        parts[pb][parts[pb].index(b)] = a

    return parts


def _free_color(s, v, i):
    taken = set([s.colors[X] for X in s.house_neighbors(v, i) if X in s.colors])
    free = sorted(set(range(s.r[i])) - taken)
    return free[0] if len(free) > 0 else None


def _settle(s, j, v):
    """Make the component of the uncolored vertex `v` in clubhouse `j` a
    clique of size ``r_j + 1``, repairing as needed

    Returns
    -------
    :class:`~cliquecolor.graph.Coloring` or tuple
        A full coloring when one turns up, else ``(members, house)`` of the
        new active club
    """
    g = s.graph
    limit = g.number_of_edges() + 1
    for _ in range(limit + 1):
        comp = _component(g, s.houses[j], v)
        if len(comp) == s.r[j] + 1 and g.is_clique(comp):
            return comp, j

        sub = g.induced_subgraph(comp)
        if sub.max_degree() <= s.r[j]:
            try:
                sol = search_coloring(sub, k=s.r[j], node_limit=s.config.search_node_limit)
            except SearchLimitExceeded:
                sol = None
            if sol is None:
                raise AssumptionFailed("P2", "component %s of clubhouse %s has maximum degree at most %s "
                                             "but is neither %s-colorable nor complete" % (sorted(comp), j, s.r[j], s.r[j]))
            for local, c in sol.items():
                s.colors[sub.labels[local]] = c
            s.events.append({"kind": "settle-color", "house": j, "component": sorted(comp)})
            return s.assemble()

        local_v = sub.labels.index(v)
        nxsub = sub.to_networkx()
        dist = nx.single_source_shortest_path_length(nxsub, local_v)
        heavy = [X for X in sub.vertices() if sub.degree(X) > s.r[j]]
        local_u = min(heavy, key=lambda X: (dist[X], sub.labels[X]))
        path = [sub.labels[X] for X in nx.shortest_path(nxsub, local_v, local_u)]
        u = path[-1]

        targets = [k for k in range(len(s.r)) if k != j and len(s.house_neighbors(u, k)) <= s.r[k]]
        if len(targets) == 0:
            raise AssumptionFailed("P2-repair", "vertex %s has more than r_k neighbors in every other clubhouse" % u)
        k = targets[0]

        s.relocate(u, k)
        for x in path[:-1]:
            s.colors.pop(x, None)
        for x in path[:-1]:
            c = _free_color(s, x, j)
            if c is None:
                region = set()
                for y in path[:-1]:
                    region |= _component(g, s.houses[j], y)
                rsub = g.induced_subgraph(region)
                try:
                    sol = search_coloring(rsub, k=s.r[j], node_limit=s.config.search_node_limit)
                except SearchLimitExceeded:
                    sol = None
                if sol is None:
                    raise AssumptionFailed("P2-repair", "cannot recolor path %s in clubhouse %s" % (path, j))
                for local, col in sol.items():
                    s.colors[rsub.labels[local]] = col
                break
            s.colors[x] = c

        s.events.append({"kind": "repair", "house": j, "path": path, "to": k})
        logger.debug("[mozhan] repair: %s has %s neighbors in its club, moved along %s to clubhouse %s"
                     % (u, sub.degree(local_u), path, k))

        c = _free_color(s, u, k)
        if len(s.house_neighbors(u, k)) < s.r[k]:
            s.colors[u] = c
            s.events.append({"kind": "repair-color", "member": u, "house": k})
            return s.assemble()
        v, j = u, k

    raise AssumptionFailed("P2-repair", "repairs did not terminate")


def _joins_clique(s, u, e):
    comp = _component(s.graph, s.houses[e] | set([u]), u)
    return len(comp) == s.r[e] + 1 and s.graph.is_clique(comp)


def _move_and_settle(s, u, e):
    R = s.active_club
    rest = R.members - set([u])
    s.fresh_clique_colors(rest)
    s.relocate(u, e)
    found = _settle(s, e, u)
    if isinstance(found, Coloring):
        return found
    members, house = found
    s.start_phase(members, house)
    return None


def _audit(s):
    """Check properties (3) and (4) for the active club, turning every failure
    into a coloring or a repair

    Returns
    -------
    :class:`~cliquecolor.graph.Coloring`, `True` or `None`
        A coloring, `True` after a repair (audit again), `None` when clean
    """
    g = s.graph
    R = s.active_club
    j = R.house
    for u in sorted(R.members):
        for e in range(len(s.r)):
            if e == j:
                continue
            nbrs = s.house_neighbors(u, e)
            if len(nbrs) < s.r[e]:
                return recolor_low_degree(s, u, e)
            if len(nbrs) == s.r[e] and not _joins_clique(s, u, e):
                coloring = _coloring_after(s, [(u, e)])
                if coloring is not None:
                    return coloring
                logger.debug("[mozhan] audit: %s does not join a clique in clubhouse %s, repairing" % (u, e))
                found = _move_and_settle(s, u, e)
                return True if found is None else found

            threshold = max(len(nbrs) + 1 - s.r[e], 1)
            for comp in _components(g, s.houses[e]):
                inside = nbrs & comp
                if len(inside) < threshold:
                    continue
                outside = set([s.colors[X] for X in nbrs - comp])
                sub = g.induced_subgraph(comp | set([u]))
                lists = {X: range(s.r[e]) for X in sub.vertices()}
                lists[sub.labels.index(u)] = [c for c in range(s.r[e]) if c not in outside]
                sol = search_coloring(sub, lists=lists)
                if sol is None:
                    continue
                colors = dict(s.colors)
                house_of = dict(s.house_of)
                for local, c in sol.items():
                    colors[sub.labels[local]] = c
                house_of[u] = e
                for c, x in enumerate(sorted(R.members - set([u]))):
                    colors[x] = c
                offsets = s.r.offsets()
                coloring = Coloring({x: offsets[house_of[x]] + colors[x] for x in g.vertices()}, s.r.total)
                if verify(g, coloring):
                    s.events.append({"kind": "audit-color", "member": u, "house": e})
                    return coloring
    return None


def build_partition(g, r, witness, mode="theorem1", config=None):
    """Build a Mozhan partition from a witness

    Color classes of the witness are grouped into clubhouses of sizes `r`,
    locally minimizing the number of edges inside clubhouses. The witness
    vertex joins the first clubhouse where it has exactly ``r_j`` neighbors.
    Its component is then repaired along shortest paths until it is a clique
    of size ``r_j + 1``; each repair lowers :meth:`PartitionState.potential`.
    Finally the active club is audited for properties (3) and (4).

    Parameters
    ----------
    g : :class:`~cliquecolor.graph.Graph`

    r : :class:`RVector`

    witness : tuple
        ``(v, coloring)``, a vertex and a proper coloring of ``g - v`` with at
        most ``sum(r)`` colors (a :class:`~cliquecolor.graph.Coloring` or dict)

    mode : str, optional
        ``'theorem1'`` (Default) or ``'theorem2'``

    config : :class:`~cliquecolor.config.Config`, optional

    Returns
    -------
    :class:`PartitionState` or :class:`Outcome`
        The partition, or an outcome when a coloring of `g` turned up (or an
        assumption failed) during construction

    Raises
    ------
    :class:`~cliquecolor.errors.ContractError`
        If the witness is invalid
    """
    if not isinstance(r, RVector):
        r = RVector(r)
    if mode not in MODES:
        raise ContractError("Unknown mode '%s'" % mode)
    v, assignment = _check_witness(g, r, witness)

    s = PartitionState(g, r, mode=mode, config=config)
    palette = sorted(set(assignment.values()))
    classes = [set([X for X in assignment if assignment[X] == c]) for c in palette]
    classes.extend([set() for _ in range(r.total - len(classes))])
    parts = _group_classes(g, classes, r)
    for i, part in enumerate(parts):
        for local, c in enumerate(part):
            for x in classes[c]:
                s.houses[i].add(x)
                s.house_of[x] = i
                s.colors[x] = local
    logger.debug("[mozhan] grouped %s classes into clubhouses %s" % (r.total, [len(X) for X in s.houses]))

    try:
        degrees = [len(set(g.neighbors(v)) & X) for X in s.houses]
        for i, d in enumerate(degrees):
            if d < r[i]:
                s.houses[i].add(v)
                s.house_of[v] = i
                s.colors[v] = _free_color(s, v, i)
                s.events.append({"kind": "witness-color", "house": i})
                return _finish(s, s.assemble())
        homes = [i for i, d in enumerate(degrees) if d == r[i]]
        if len(homes) == 0:
            raise AssumptionFailed("build", "witness vertex %s has more than r_i neighbors in every clubhouse" % v)
        j = homes[0]
        s.houses[j].add(v)
        s.house_of[v] = j

        found = _settle(s, j, v)
        if isinstance(found, Coloring):
            return _finish(s, found)
        s.start_phase(*found)

        for _ in range(g.number_of_edges() + 2):
            found = _audit(s)
            if isinstance(found, Coloring):
                return _finish(s, found)
            if found is None:
                return s
        raise AssumptionFailed("build", "audit repairs did not terminate")
    except AssumptionFailed as e:
        return _violation(s, e)


#===============================================================================
# INDEX: the moving process
#===============================================================================

def _destination(s, u, e):
    nbrs = s.house_neighbors(u, e)
    if len(nbrs) == 0:
        return None
    club = _club_of_vertex(s, min(nbrs))
    if club.members == nbrs and s.is_clique_club(club):
        return club
    return None


def _group_of(s, club):
    groups = [X for X in clubgroups(s) if club.ident in X.clubs]
    if len(groups) == 0:
        return None
    return max(groups, key=lambda X: (len(X.clubs), [-Y for Y in sorted(X.clubs)]))


def _relay_moves(s):
    """Moves that send an available vertex of another club of the active
    club's clubgroup, after an active member moves into that club
    """
    R = s.active_club
    group = _group_of(s, R)
    if group is None:
        return []
    found = []
    for ident in sorted(group.clubs - set([R.ident])):
        S = s.clubs[ident]
        relays = [a for a in sorted(R.members - s.moved) if s.house_neighbors(a, S.house) == S.members]
        if len(relays) == 0:
            continue
        for v in sorted(S.members - s.moved):
            for e in range(len(s.r)):
                if e == S.house or e == R.house:
                    continue
                if len(s.house_neighbors(v, e)) != s.r[e]:
                    continue
                dest = _destination(s, v, e)
                if dest is not None and (dest.ident in group.clubs or s.complete(S, dest)):
                    continue
                found.append(Move(v, e, None if dest is None else dest.ident, relays[0]))
    return found


def choose_move(s):
    """Select the next move of the process

    Candidates are unmoved active members `u` and clubhouses `E` with
    ``d_E(u) = r_E``, never towards a club complete to the active club.
    Preference goes to clubs the active club has already sent a member to,
    then (theorem-2 mode) to high members, then to the lowest vertex and the
    lowest clubhouse. In theorem-2 mode, when no direct move exists, an
    available vertex of the active clubgroup is relayed out.

    Returns
    -------
    :class:`Move` or None
        `None` when the process terminates
    """
    R = s.active_club
    sent = R.sent_to()
    best = None
    for u in sorted(R.members - s.moved):
        for e in range(len(s.r)):
            if e == R.house or len(s.house_neighbors(u, e)) != s.r[e]:
                continue
            dest = _destination(s, u, e)
            if dest is not None and s.complete(R, dest):
                continue
            ident = None if dest is None else dest.ident
            key = (0 if ident in sent else 1,
                   0 if (s.mode == "theorem1" or u in s.high) else 1,
                   u, e)
            if best is None or key < best[0]:
                best = (key, Move(u, e, ident, None))
    if best is not None:
        return best[1]

    if s.mode == "theorem2":
        relays = _relay_moves(s)
        if len(relays) > 0:
            return min(relays, key=lambda X: (0 if X.member in s.high else 1, X.member, X.house))
    return None


def _claim1_sweep(s, u):
    """Dispatch C1 for every clique club whose completeness to the active
    club is about to change, or has just changed, because of `u`
    """
    R = s.active_club
    for X in s.clique_clubs():
        if X.ident == R.ident or X.house == R.house:
            continue
        if not s.complete(R, X) and _complete(s.graph, R.members - set([u]), X.members):
            v = min([x for x in X.members if not s.graph.adjacent(u, x)])
            coloring = recolor_claim(s, "C1", (u, v))
            if coloring is not None:
                return coloring
    return None


def _claim3_check(s, club):
    """Check a club that became active again after sending two members to
    the same club
    """
    counts = collections.Counter([X[1] for X in club.send_history])
    for ident in sorted(counts):
        if counts[ident] < 2 or ident not in s.clubs:
            continue
        T = s.clubs[ident]
        sends = [i for i, X in enumerate(club.send_history) if X[1] == ident]
        claim = "C3i" if sends[1] == sends[0] + 1 else "C3ii"
        if s.complete(club, T):
            raise AssumptionFailed(claim, "club %s became complete to club %s after sending it two members"
                                          % (club.ident, ident))
        for a in sorted(club.members):
            for b in sorted(T.members):
                if not s.graph.adjacent(a, b):
                    coloring = recolor_claim(s, claim, (a, b))
                    if coloring is not None:
                        return coloring
    return None


def _send(s, u, e, dest):
    """Send active member `u` to clubhouse `e`, into club `dest`"""
    R = s.active_club
    s.fresh_clique_colors(R.members - set([u]))
    R.members.discard(u)
    s.relocate(u, e)
    D = s.clubs[dest]
    D.members.add(u)
    s.club_of[u] = dest
    for x in D.members:
        s.colors.pop(x, None)
    R.send_history.append((u, dest))
    s.moved.add(u)
    s.active = dest
    D.activation_count += 1
    s.max_activation = max(s.max_activation, D.activation_count)
    s.steps += 1
    s.events.append({"kind": "move", "member": u, "from": R.ident, "to": dest, "house": e})
    logger.debug("[mozhan] step %s: %s moves from club %s to club %s in clubhouse %s"
                 % (s.steps, u, R.ident, dest, e))
    if s.mode == "theorem2":
        group = _group_of(s, D)
        if group is not None and group.big:
            s.group_activations[group.clubs] += 1


def _apply_move(s, u, e, dest):
    if dest is None:
        coloring = _coloring_after(s, [(u, e)])
        if coloring is not None:
            s.events.append({"kind": "extend-color", "member": u, "house": e})
            return StepResult(StepResult.COLORING_FOUND, state=s, coloring=coloring)
        logger.debug("[mozhan] %s does not join a clique in clubhouse %s, repairing" % (u, e))
        found = _move_and_settle(s, u, e)
        if found is not None:
            return StepResult(StepResult.COLORING_FOUND, state=s, coloring=found)
        return None

    coloring = _claim1_sweep(s, u)
    if coloring is not None:
        return StepResult(StepResult.COLORING_FOUND, state=s, coloring=coloring)
    _send(s, u, e, dest)
    coloring = _claim1_sweep(s, u)
    if coloring is not None:
        return StepResult(StepResult.COLORING_FOUND, state=s, coloring=coloring)

    D = s.active_club
    if D.activation_count > 3:
        raise AssumptionFailed("C3", "club %s became active a fourth time" % D.ident)
    coloring = _claim3_check(s, D)
    if coloring is not None:
        return StepResult(StepResult.COLORING_FOUND, state=s, coloring=coloring)
    return None


def step(s):
    """Advance the process by one move

    Parameters
    ----------
    s : :class:`PartitionState`
        Modified in place

    Returns
    -------
    :class:`StepResult`

    Raises
    ------
    :class:`AssumptionFailed`
        If the input breaks an assumption of the argument
    """
    R = s.active_club
    for u in sorted(R.members):
        for e in range(len(s.r)):
            if e != R.house and len(s.house_neighbors(u, e)) < s.r[e]:
                return StepResult(StepResult.COLORING_FOUND, state=s, coloring=recolor_low_degree(s, u, e))

    move = choose_move(s)
    if move is None:
        return StepResult(StepResult.TERMINAL, state=s)

    if move.relay is not None:
        S = _club_of_vertex(s, move.member)
        logger.debug("[mozhan] relay: %s joins club %s so that %s can leave" % (move.relay, S.ident, move.member))
        found = _apply_move(s, move.relay, S.house, S.ident)
        if found is not None:
            return found
        dest = _destination(s, move.member, move.house)
        if dest is not None and s.complete(s.active_club, dest):
            return StepResult(StepResult.MOVED, state=s)
        move = Move(move.member, move.house, None if dest is None else dest.ident, None)

    found = _apply_move(s, move.member, move.house, move.club)
    if found is not None:
        return found
    return StepResult(StepResult.MOVED, state=s)


#===============================================================================
# INDEX: inspection
#===============================================================================

def verify_state(s, properties=("1", "2", "3", "4")):
    """Check the partition properties

    1. Clubhouses partition the vertices and each is properly colored with
       its own ``r_i`` colors outside the active club.
    2. The active club is a component of its clubhouse and a clique of size
       ``r_j + 1``.
    3. Every active member `v` with ``d_i(v) = r_i`` forms a clique of size
       ``r_i + 1`` with its neighbors in clubhouse `i`.
    4. If active member `v` has at least ``d_i(v) + 1 - r_i`` neighbors in a
       club `K` of clubhouse `i`, then ``K + v`` needs ``r_i + 1`` colors.

    No club may have become active more than three times; this is checked
    whatever `properties` says and reported as ``'activation'``.

    Parameters
    ----------
    s : :class:`PartitionState`

    properties : iterable of str, optional
        Properties to check (Default: all four)

    Returns
    -------
    :class:`StateReport`
    """
    g = s.graph
    R = s.clubs.get(s.active)

    if "1" in properties:
        seen = set()
        for i, house in enumerate(s.houses):
            if len(seen & house) > 0:
                return StateReport(False, "1", "clubhouses overlap at %s" % sorted(seen & house))
            seen |= house
            if any(s.house_of.get(X) != i for X in house):
                return StateReport(False, "1", "clubhouse index out of date in clubhouse %s" % i)
        if seen != set(g.vertices()):
            return StateReport(False, "1", "clubhouses miss vertices %s" % sorted(set(g.vertices()) - seen))
        for i, house in enumerate(s.houses):
            for x in house:
                if R is not None and x in R.members:
                    continue
                if s.colors.get(x) not in range(s.r[i]):
                    return StateReport(False, "1", "vertex %s has no color of clubhouse %s" % (x, i))
                for y in s.house_neighbors(x, i):
                    if y in s.colors and s.colors[y] == s.colors[x] and not (R is not None and y in R.members):
                        return StateReport(False, "1", "edge (%s, %s) monochromatic in clubhouse %s" % (x, y, i))

    if R is None:
        return StateReport(False, "2", "no active club")
    j = R.house

    if "2" in properties:
        if not R.members <= s.houses[j] or _component(g, s.houses[j], min(R.members)) != R.members:
            return StateReport(False, "2", "active club is not a component of clubhouse %s" % j)
        if len(R.members) != s.r[j] + 1 or not g.is_clique(R.members):
            return StateReport(False, "2", "active club %s is not a clique of size %s" % (sorted(R.members), s.r[j]+1))

    busy = [X for X in sorted(s.clubs) if s.clubs[X].activation_count > 3]
    if len(busy) > 0:
        return StateReport(False, "activation", "club %s became active %s times"
                                                % (busy[0], s.clubs[busy[0]].activation_count))

    for v in sorted(R.members):
        for i in range(len(s.r)):
            if i == j:
                continue
            nbrs = s.house_neighbors(v, i)
            if "3" in properties and len(nbrs) == s.r[i] and not _joins_clique(s, v, i):
                return StateReport(False, "3", "%s does not form a clique with its neighbors in clubhouse %s" % (v, i))
            if "4" in properties:
                threshold = len(nbrs) + 1 - s.r[i]
                for comp in _components(g, s.houses[i]):
                    if len(nbrs & comp) >= threshold:
                        if find_k_coloring(g.induced_subgraph(comp | set([v])), s.r[i]) is not None:
                            return StateReport(False, "4", "%s plus club %s is %s-colorable"
                                                           % (v, sorted(comp), s.r[i]))
    return StateReport(True)


def clubgroups(s):
    """Return the maximal groups of clique clubs pairwise complete to each other

    Returns
    -------
    list of :class:`Clubgroup`
        Sorted by smallest club identifier
    """
    cliques = s.clique_clubs()
    aux = nx.Graph()
    aux.add_nodes_from([X.ident for X in cliques])
    for a, b in itertools.combinations(cliques, 2):
        if a.house != b.house and s.complete(a, b):
            aux.add_edge(a.ident, b.ident)
    groups = [Clubgroup(X, [s.clubs[Y].house for Y in X], len(s.r)) for X in nx.find_cliques(aux)]
    return sorted(groups, key=lambda X: sorted(X.clubs))


#===============================================================================
# INDEX: termination analysis
#===============================================================================

def _joined_clubs(s):
    R = s.active_club
    joined = {}
    for X in s.clique_clubs():
        if X.house != R.house and X.house not in joined and s.complete(R, X):
            joined[X.house] = X
    return [joined[X] for X in sorted(joined)]


def _resolve_claim2(s, joined):
    g = s.graph
    for X, Y in itertools.combinations(joined, 2):
        for a in sorted(X.members):
            for b in sorted(Y.members):
                if not g.adjacent(a, b):
                    coloring = recolor_claim(s, "C2", (a, b))
                    if coloring is not None:
                        return coloring
    return None


def _high_clique(s, members):
    g = s.graph
    top = g.max_degree()
    high = [X for X in sorted(members) if g.degree(X) == top]
    return CliqueCertificate(high, high_only=True) if len(high) > 0 else None


def _derive_join_edges(s, K):
    """Try to derive every missing edge of `K` through the join lemmas.
    Returns a coloring as soon as one derivation produces it.
    """
    g = s.graph
    top = g.max_degree()
    low = set([X for X in K if g.degree(X) < top])
    underived = []
    for p, q in itertools.combinations(sorted(K), 2):
        if g.adjacent(p, q):
            continue
        common = [X for X in sorted(K) if X not in (p, q) and g.adjacent(X, p) and g.adjacent(X, q)]
        attempts = []
        for quad in itertools.combinations(common, 4):
            if len(low & set(quad)) > 0 and g.is_clique(quad):
                attempts.append(("Join4", quad))
        if p in low or q in low:
            for tri in itertools.combinations(common, 3):
                if len(low & set(tri)) > 0 and g.is_clique(tri):
                    attempts.append(("Join3", tri))
        for claim, quad in attempts:
            try:
                coloring = recolor_claim(s, claim, (quad, p, q))
            except AssumptionFailed:
                continue
            if coloring is not None:
                return coloring, []
        underived.append((p, q))
    return None, underived


def _terminal_theorem1(s):
    g = s.graph
    R = s.active_club
    joined = _joined_clubs(s)
    coloring = _resolve_claim2(s, joined)
    if coloring is not None:
        return Outcome.of_coloring(coloring)

    members = set(R.members)
    for X in joined:
        members |= X.members
    bound = g.max_degree() - max(s.r)
    diagnostics = {"steps": s.steps, "phase": s.phase, "joined_clubs": [X.ident for X in joined]}
    if len(members) >= bound:
        logger.debug("[mozhan] terminal: active club joined to %s clubs, clique of size %s" % (len(joined), len(members)))
        return Outcome.of_clique(CliqueCertificate(members), bound, diagnostics)
    raise AssumptionFailed("C4", "terminal clique %s is smaller than %s" % (sorted(members), bound))


def _terminal_theorem2(s):
    g = s.graph
    delta = g.max_degree()
    R = s.active_club
    joined = _joined_clubs(s)
    coloring = _resolve_claim2(s, joined)
    if coloring is not None:
        return Outcome.of_coloring(coloring)

    group = _group_of(s, R)
    idents = set([R.ident]) if group is None else set(group.clubs)
    A = set()
    for ident in idents:
        A |= s.clubs[ident].members
    spanned = set([s.clubs[X].house for X in idents])
    diagnostics = {"steps": s.steps, "phase": s.phase, "clubgroup": sorted(idents),
                   "group_activations": max(list(s.group_activations.values()) + [0]),
                   "stuck_low": sorted([X for X in R.members if X not in s.high and X not in s.moved])}
    full = s.r.total + 1
    high_bound = delta - 5
    if all(X == 3 for X in s.r):
        diagnostics["all_threes_high_bound"] = delta - 4

    if len(spanned) == len(s.r) and g.is_clique(A):
        return Outcome.of_clique(CliqueCertificate(A), full, diagnostics)

    if len(spanned) == len(s.r) - 1:
        missing = [i for i in range(len(s.r)) if i not in spanned][0]
        candidates = [X for X in s.clique_clubs() if X.house == missing]
        if len(candidates) > 0:
            B = max(candidates, key=lambda X: (sum([1 for a in A for b in X.members if g.adjacent(a, b)]), -X.ident))
            K = A | B.members
            coloring, underived = _derive_join_edges(s, K)
            if coloring is not None:
                return Outcome.of_coloring(coloring, diagnostics)
            if len(underived) == 0 and len(K) >= full:
                return Outcome.of_clique(CliqueCertificate(K), full, diagnostics)
            diagnostics["underived_pairs"] = [list(X) for X in underived]

    cert = _high_clique(s, A)
    if cert is not None and len(cert) >= high_bound:
        return Outcome.of_clique(cert, high_bound, diagnostics)

    try:
        H = high_subgraph(g)
        best = max_clique_exact(H, config=s.config).relabel(H.labels)
    except OracleRefusal:
        best = None
    if best is not None and len(best) >= high_bound:
        cert = CliqueCertificate(best.vertices, high_only=True)
        diagnostics["high_clique_from_oracle"] = True
        diagnostics["path"] = "oracle-high-clique"
        logger.warning("[mozhan] terminal analysis found no clique; high clique of size %s taken from the exact oracle"
                       % len(best))
        return Outcome.of_clique(cert, high_bound, diagnostics)
    raise AssumptionFailed("C4New", "no clique of size %s and no high clique of size %s" % (full, high_bound))


#===============================================================================
# INDEX: running the engine
#===============================================================================

def _violation(s, failure):
    logger.warning("[mozhan] assumption failed at %s: %s" % (failure.claim, failure.message))
    return Outcome.of_violation(AssumptionViolation(failure.claim, failure.message, s.snapshot()))


def _finish(s, coloring):
    if not verify(s.graph, coloring) or coloring.num_colors() > s.r.total:
        raise InternalInvariantError("Engine produced an invalid coloring")
    return Outcome.of_coloring(coloring, {"steps": s.steps, "phase": s.phase,
                                          "max_activation": s.max_activation})


def acquire_witness(g, t, v=0, config=None):
    """Return ``(v, coloring of g - v with t colors)`` from the exact search

    Raises
    ------
    :class:`~cliquecolor.errors.ContractError`
        If ``g - v`` is not `t`-colorable
    """
    config = get_config() if config is None else config
    if g.n > config.max_exact_chromatic:
        raise OracleRefusal("acquire_witness", g.n, config.max_exact_chromatic)
    rest = g.remove_vertices([v])
    found = find_k_coloring(rest, t)
    if found is None:
        raise ContractError("g - %s is not %s-colorable" % (v, t))
    return v, found.relabel(rest.labels)


def run_engine(g, r, witness, mode="theorem1", research=False, config=None):
    """Run the member-moving process to a verified :class:`Outcome`

    Parameters
    ----------
    g : :class:`~cliquecolor.graph.Graph`

    r : :class:`RVector` or sequence of int
        Theorem-grade runs need ``sum(r) = Delta(g) - 1``, parts 3 or 4 and at
        most two 4's. `research` lifts these conditions.

    witness : tuple
        ``(v, coloring of g - v)``, see :func:`build_partition`

    mode : str, optional
        ``'theorem1'`` (Default) ends in a coloring or a clique of size at
        least ``Delta - max(r)``; ``'theorem2'`` ends in a coloring, a clique
        of size `Delta` or a clique of at least ``Delta - 5`` high vertices

    research : bool, optional
        Accept any r-vector (Default: `False`)

    config : :class:`~cliquecolor.config.Config`, optional

    Returns
    -------
    :class:`Outcome`

    Raises
    ------
    :class:`~cliquecolor.errors.ContractError`
        If the witness or the r-vector is invalid
    """
    if not isinstance(r, RVector):
        r = RVector(r)
    if mode not in MODES:
        raise ContractError("Unknown mode '%s'" % mode)
    if not research:
        if r.total != g.max_degree() - 1:
            raise ContractError("sum(r) = %s, but Delta - 1 = %s; use research mode" % (r.total, g.max_degree() - 1))
        if not r.is_theorem_grade():
            raise ContractError("%s is not theorem-grade; use research mode" % r)

    found = build_partition(g, r, witness, mode=mode, config=config)
    if isinstance(found, Outcome):
        return found
    s = found

    max_phases = g.number_of_edges() + 1
    phase, moves = s.phase, 0
    try:
        while True:
            result = step(s)
            if result.kind == StepResult.COLORING_FOUND:
                return _finish(s, result.coloring)
            if result.kind == StepResult.TERMINAL:
                outcome = _terminal_theorem1(s) if mode == "theorem1" else _terminal_theorem2(s)
                if outcome.variant == Outcome.COLORING:
                    return _finish(s, outcome.coloring)
                if not verify(g, outcome.clique) or len(outcome.clique) < outcome.bound:
                    raise InternalInvariantError("Engine produced an invalid clique certificate")
                outcome.diagnostics["max_activation"] = s.max_activation
                return outcome

            report = verify_state(s, properties=("1", "2"))
            if not report:
                raise AssumptionFailed("state", "property %s: %s" % (report.prop, report.message))
            if s.phase > max_phases:
                raise AssumptionFailed("loop", "more than %s repairs" % max_phases)
            moves = moves + 1 if s.phase == phase else 0
            phase = s.phase
            if moves > g.n:
                raise AssumptionFailed("loop", "more than %s moves in one phase" % g.n)
    except AssumptionFailed as e:
        return _violation(s, e)
