#!/usr/bin/env python
"""Maximum-clique structure, independent transversals, hitting sets and the
top-level coloring-or-clique pipeline.

:func:`color_or_clique` accepts any graph. It first tries cheap exits: a
heuristic coloring with ``Delta - 1`` colors, or a clique at least as large
as the bound declared for the graph's maximum degree. Otherwise it reduces to
a vertex-critical subgraph with the exact oracles, peels hitting sets of the
maximum cliques until the maximum degree is 13, and hands the remainder to
the member-moving engine in :mod:`cliquecolor.mozhan`.

Declared clique bounds
----------------------
``'theorem1'`` mode
    ``Delta - 3`` when ``Delta >= 13`` or ``Delta`` is 7 or 10, else
    ``Delta - 4``

``'theorem2'`` mode
    a clique on ``Delta`` vertices, or a clique on at least ``Delta - 5``
    vertices of maximum degree
"""
import collections
import itertools
import logging

import networkx as nx

from cliquecolor.config import get_config
from cliquecolor.errors import ContractError, InternalInvariantError, OracleRefusal,\
                               PipelineRefusal, StructureError
from cliquecolor.graph import CliqueCertificate, Coloring, Graph, critical_subgraph,\
                              exact_coloring, greedy_coloring, high_subgraph,\
                              max_clique_exact, tabu_coloring, verify
from cliquecolor.mozhan import AssumptionViolation, MODES, Outcome, RVector, acquire_witness,\
                               run_engine

__author__ = "Joshua Griffin Dunn"
__date__ = "2026-10-17"

logger = logging.getLogger(__name__)

ENGINE_DEGREE = 13
"""Maximum degree at which peeling stops and the engine takes over"""


#===============================================================================
# INDEX: maximum cliques and their structure
#===============================================================================

def maximum_cliques(g, config=None):
    """Return every maximum clique of `g`

    Parameters
    ----------
    g : :class:`~cliquecolor.graph.Graph`

    config : :class:`~cliquecolor.config.Config`, optional

    Returns
    -------
    list of frozenset
        Ordered by their sorted vertex tuples

    Raises
    ------
    :class:`~cliquecolor.errors.OracleRefusal`
        If `g` has more than ``max_exact_clique`` vertices
    """
    config = get_config() if config is None else config
    if g.n > config.max_exact_clique:
        raise OracleRefusal("maximum_cliques", g.n, config.max_exact_clique)
    if g.n == 0:
        return []
    found = [frozenset(X) for X in nx.find_cliques(g.to_networkx())]
    top = max([len(X) for X in found])
    return sorted([X for X in found if len(X) == top], key=lambda X: sorted(X))


DiGroup = collections.namedtuple("DiGroup", ["clique", "x"])
"""One group of a :class:`DiPartition`: a maximum clique, and possibly a
vertex `x` adjacent to all but one of its members
"""


class DiPartition(object):
    """Disjoint groups covering the union of all maximum cliques

    Each group is a maximum clique `C` on its own, or ``C + x`` where
    ``C - c + x`` is the unique other maximum clique meeting `C`.

    Attributes
    ----------
    groups : list of :class:`DiGroup`
    """

    def __init__(self, groups):
        self.groups = list(groups)

    def __len__(self):
        return len(self.groups)

    def __repr__(self):
        return "<DiPartition %s>" % ", ".join(["%s%s" % (sorted(X.clique), "" if X.x is None else "+%s" % X.x)
                                               for X in self.groups])

    def union(self):
        out = set()
        for group in self.groups:
            out |= group.clique
            if group.x is not None:
                out.add(group.x)
        return out


def di_partition(g, cliques):
    """Group intersecting maximum cliques

    Any two intersecting maximum cliques must share all but one vertex, and
    each maximum clique may meet at most one other. For an intersecting pair,
    the group keeps the clique whose sorted vertices come first as `C` and the
    other one's extra vertex as `x`.

    Parameters
    ----------
    g : :class:`~cliquecolor.graph.Graph`

    cliques : list of frozenset
        The maximum cliques of `g`, as from :func:`maximum_cliques`

    Returns
    -------
    :class:`DiPartition`

    Raises
    ------
    :class:`~cliquecolor.errors.StructureError`
        If two cliques overlap in the wrong number of vertices, or a clique
        meets two others. The error's ``cliques`` are the offenders.
    """
    cliques = [frozenset(X) for X in cliques]
    if len(cliques) == 0:
        return DiPartition([])
    size = len(cliques[0])
    if any(len(X) != size for X in cliques):
        raise ContractError("di_partition needs cliques of a single size")

    partner = {}
    for a, b in itertools.combinations(range(len(cliques)), 2):
        common = cliques[a] & cliques[b]
        if len(common) == 0:
            continue
        if len(common) != size - 1:
            raise StructureError("Maximum cliques share %s vertices, expected %s" % (len(common), size - 1),
                                 [cliques[a], cliques[b]])
        for i in (a, b):
            if i in partner:
                raise StructureError("Maximum clique %s meets more than one other" % sorted(cliques[i]),
                                     [cliques[i], cliques[partner[i]], cliques[b if i == a else a]])
        partner[a] = b
        partner[b] = a

    groups = []
    for i, C in enumerate(cliques):
        if i not in partner:
            groups.append(DiGroup(C, None))
        elif i < partner[i]:
            first, second = sorted([C, cliques[partner[i]]], key=lambda X: sorted(X))
            x, = second - first
            groups.append(DiGroup(first, x))

    logger.debug("[reduction] %s maximum cliques of size %s in %s groups" % (len(cliques), size, len(groups)))
    return DiPartition(groups)


#===============================================================================
# INDEX: independent transversals
#===============================================================================

class TransversalInstance(object):
    """Parts ``K_1..K_r`` of an auxiliary graph, each independent in it

    Attributes
    ----------
    aux_graph : :class:`~cliquecolor.graph.Graph`
        Vertices ``0..m-1``, part by part; :attr:`~Graph.labels` maps them to
        the graph the instance was built from

    parts : list of frozenset
        Local vertex indices of each part

    s : int

    hypothesis : bool
        `True` iff every vertex `v` of part `K_i` has degree at most
        ``min(s, |K_i| - s)``, which guarantees an independent transversal
    """

    def __init__(self, aux_graph, parts, s):
        self.aux_graph = aux_graph
        self.parts = [frozenset(X) for X in parts]
        self.s = s
        seen = set()
        for part in self.parts:
            if len(seen & part) > 0:
                raise ContractError("Transversal parts must be disjoint")
            seen |= part
            if not aux_graph.is_independent(part):
                raise ContractError("Transversal parts must be independent in the auxiliary graph")
        self.hypothesis = all(aux_graph.degree(v) <= min(s, len(X) - s) for X in self.parts for v in X)

    def __repr__(self):
        return "<TransversalInstance parts=%s s=%s hypothesis=%s>" % ([len(X) for X in self.parts], self.s,
                                                                      self.hypothesis)

    @classmethod
    def from_parts(cls, parts, edges, s):
        """Build from parts given as lists of local vertex indices and
        cross-part `edges`. Edges inside a part are dropped.
        """
        where = {}
        for i, part in enumerate(parts):
            for v in part:
                where[v] = i
        n = len(where)
        kept = [(u, v) for u, v in edges if where[u] != where[v]]
        return cls(Graph(n, kept), parts, s)


def build_transversal_instance(g, d, s=None):
    """Build the transversal instance of a :class:`DiPartition`

    Part `K_i` is `C_i`, or ``C_i & N(x_i)`` when the group has an `x`. The
    auxiliary graph is induced on the union of the parts with every part
    made independent.

    Parameters
    ----------
    g : :class:`~cliquecolor.graph.Graph`

    d : :class:`DiPartition`

    s : int, optional
        Defaults to ``Delta(g) // 2 - 2``, and at least 1

    Returns
    -------
    :class:`TransversalInstance`
    """
    s = max(g.max_degree() // 2 - 2, 1) if s is None else s
    parts_global = []
    for group in d.groups:
        if group.x is None:
            parts_global.append(sorted(group.clique))
        else:
            parts_global.append(sorted(group.clique & g.neighbors(group.x)))

    order = [v for X in parts_global for v in X]
    index = {v: i for i, v in enumerate(order)}
    where = {}
    for i, part in enumerate(parts_global):
        for v in part:
            where[v] = i
    edges = [(index[u], index[v]) for u, v in g.edges() if u in index and v in index and where[u] != where[v]]
    aux = Graph(len(order), edges, labels=order)
    parts = [[index[v] for v in X] for X in parts_global]
    instance = TransversalInstance(aux, parts, s)
    logger.debug("[reduction] transversal instance: parts %s, s = %s, hypothesis %s"
                 % ([len(X) for X in parts], s, instance.hypothesis))
    return instance


def find_independent_transversal(t):
    """Find one vertex per part, pairwise nonadjacent

    Backtracking search that always branches on the part with the fewest
    remaining candidates (ties to the lower part), trying candidates in
    ascending order.

    Parameters
    ----------
    t : :class:`TransversalInstance`

    Returns
    -------
    frozenset or None
        Local vertex indices of an independent transversal

    Raises
    ------
    :class:`~cliquecolor.errors.InternalInvariantError`
        If no transversal exists although ``t.hypothesis`` holds
    """
    g = t.aux_graph
    parts = [sorted(X) for X in t.parts]
    chosen = {}

    def candidates(i):
        return [v for v in parts[i] if not any(g.adjacent(v, X) for X in chosen.values())]

    def extend():
        if len(chosen) == len(parts):
            return True
        open_parts = [i for i in range(len(parts)) if i not in chosen]
        options = [(len(candidates(i)), i) for i in open_parts]
        _, i = min(options)
        for v in candidates(i):
            chosen[i] = v
            if extend():
                return True
            del chosen[i]
        return False

    if extend():
        return frozenset(chosen.values())
    if t.hypothesis:
        raise InternalInvariantError("No independent transversal although every degree is at most min(s, |K_i| - s)")
    return None


def enumerate_transversals(t):
    """Yield every independent transversal of `t` by brute force"""
    g = t.aux_graph
    for pick in itertools.product(*[sorted(X) for X in t.parts]):
        if g.is_independent(pick):
            yield frozenset(pick)


def hitting_set(g, config=None):
    """Return an independent set meeting every maximum clique of `g`

    The maximum cliques are grouped with :func:`di_partition` and an
    independent transversal of the resulting instance is returned.

    Parameters
    ----------
    g : :class:`~cliquecolor.graph.Graph`

    config : :class:`~cliquecolor.config.Config`, optional

    Returns
    -------
    frozenset or None
        `None` if the transversal search finds nothing (possible outside the
        regime where one is guaranteed)

    Raises
    ------
    :class:`~cliquecolor.errors.StructureError`
        Propagated from :func:`di_partition`
    """
    cliques = maximum_cliques(g, config=config)
    instance = build_transversal_instance(g, di_partition(g, cliques))
    found = find_independent_transversal(instance)
    if found is None:
        return None
    hits = frozenset([instance.aux_graph.labels[v] for v in found])
    if not g.is_independent(hits) or any(len(hits & X) == 0 for X in cliques):
        raise InternalInvariantError("Transversal %s does not hit every maximum clique" % sorted(hits))
    return hits


def maximal_independent_set(g, start=()):
    """Extend independent set `start` greedily in ascending vertex order"""
    chosen = set(start)
    if not g.is_independent(chosen):
        raise ContractError("maximal_independent_set needs an independent start")
    for v in g.vertices():
        if v not in chosen and not any(g.adjacent(v, X) for X in chosen):
            chosen.add(v)
    return frozenset(chosen)


#===============================================================================
# INDEX: pipeline
#===============================================================================

def declared_bound(delta, mode="theorem1"):
    """Return the clique size :func:`color_or_clique` promises for maximum
    degree `delta` when no ``(delta - 1)``-coloring exists

    In ``'theorem2'`` mode this is the size of the plain clique; the
    high-vertex alternative is ``delta - 5``.
    """
    if mode == "theorem2":
        return delta
    if delta >= ENGINE_DEGREE or delta in (7, 10):
        return delta - 3
    return delta - 4


def _clique_outcome(cert, bound, **diagnostics):
    return Outcome.of_clique(cert, bound, diagnostics)


def _fast_clique(g, bound, mode):
    nxg = g.to_networkx()
    for found in nx.find_cliques(nxg):
        if len(found) >= bound:
            return _clique_outcome(CliqueCertificate(found), bound, path="fast-clique")
    if mode == "theorem2" and g.n > 0:
        H = high_subgraph(g)
        high_bound = g.max_degree() - 5
        for found in nx.find_cliques(H.to_networkx()):
            if len(found) >= max(high_bound, 1):
                cert = CliqueCertificate([H.labels[X] for X in found], high_only=True)
                return _clique_outcome(cert, high_bound, path="fast-high-clique")
    return None


def _brooks_clique(W, bound, config):
    cert = max_clique_exact(W, config=config).relabel(W.origin)
    logger.debug("[reduction] Brooks fallback: clique of size %s" % len(cert))
    return _clique_outcome(cert, bound, path="brooks")


def _engine(W, mode, config):
    """Run the engine on the `Delta`-critical graph `W`; vertices of the result
    are in `W`'s origin graph
    """
    delta = W.max_degree()
    research = delta < 7
    r = RVector.for_degree(delta, research=research)
    witness = acquire_witness(W, r.total, config=config)
    logger.debug("[reduction] engine on %s vertices, Delta = %s, r = %s, mode %s" % (W.n, delta, r, mode))
    out = run_engine(W, r, witness, mode=mode, research=research, config=config)
    if out.variant == Outcome.COLORING:
        raise InternalInvariantError("Engine colored a %s-critical graph with %s colors" % (delta, r.total))
    if out.variant == Outcome.VIOLATION and research:
        logger.warning("[reduction] research run failed at %s, high clique taken from the exact oracle"
                       % out.violation.claim)
        high = high_subgraph(W)
        cert = max_clique_exact(high, config=config).relabel(high.labels)
        out = Outcome.of_clique(CliqueCertificate(cert.vertices, high_only=True), delta - 5,
                                {"path": "oracle-high-clique",
                                 "fallback": out.violation.claim,
                                 "violation": out.violation.to_json()})
    return out.relabel(W.origin)


def _solve_critical(W, mode, config):
    """Return a clique outcome for the `Delta`-critical graph `W`, whose
    chromatic number equals its maximum degree
    """
    delta = W.max_degree()
    if mode == "theorem2" or delta <= ENGINE_DEGREE:
        if mode == "theorem1" and delta < 7:
            return _brooks_clique(W, declared_bound(delta), config)
        return _engine(W, mode, config)

    omega = max_clique_exact(W, config=config)
    if len(omega) >= delta - 3:
        return _clique_outcome(omega.relabel(W.origin), delta - 3, path="exact-clique")

    if len(omega) < delta - 4:
        peeled = maximal_independent_set(W)
    else:
        try:
            hits = hitting_set(W, config=config)
        except StructureError as e:
            return Outcome.of_violation(AssumptionViolation("hitting", str(e),
                                                            {"cliques": [sorted(W.origin[v] for v in X)
                                                                         for X in e.cliques]}))
        if hits is None:
            return Outcome.of_violation(AssumptionViolation("hitting", "no independent transversal", {}))
        peeled = maximal_independent_set(W, hits)

    rest = W.remove_vertices(peeled)
    logger.debug("[reduction] peel: Delta %s -> %s, removed %s vertices (omega %s)"
                 % (delta, rest.max_degree(), len(peeled), len(omega)))
    if rest.max_degree() < delta - 1:
        return _brooks_clique(rest, delta - 3, config)
    inner = critical_subgraph(rest, delta - 1, config=config)
    if inner.max_degree() < delta - 1:
        return _brooks_clique(inner, delta - 3, config)

    found = _solve_critical(inner, mode, config)
    if found.variant != Outcome.CLIQUE:
        return found
    if len(found.clique) >= delta - 3:
        # restate the bound for the outer Delta
        return Outcome.of_clique(found.clique, delta - 3, dict(found.diagnostics, inner_bound=found.bound))

    local = {o: i for i, o in enumerate(W.origin)}
    members = [local[X] for X in found.clique.vertices]
    extra = [W.origin[v] for v in sorted(peeled) if all(W.adjacent(v, X) for X in members)]
    if len(extra) > 0:
        return _clique_outcome(CliqueCertificate(set(found.clique.vertices) | set([extra[0]])), delta - 3,
                               path="lift")
    return Outcome.of_violation(AssumptionViolation("hitting", "clique of size %s survived peeling without a "
                                                    "common neighbor in the peeled set" % len(found.clique),
                                                    {"clique": sorted(found.clique.vertices)}))


def color_or_clique(g, mode="theorem1", fast_paths=True, config=None):
    """Return a ``(Delta - 1)``-coloring of `g` or a clique meeting the declared bound

    Parameters
    ----------
    g : :class:`~cliquecolor.graph.Graph`

    mode : str, optional
        ``'theorem1'`` (Default) or ``'theorem2'``; see :func:`declared_bound`

    fast_paths : bool, optional
        If `False`, skip the heuristic exits and always go through the exact
        reduction and the engine (Default: `True`)

    config : :class:`~cliquecolor.config.Config`, optional

    Returns
    -------
    :class:`~cliquecolor.mozhan.Outcome`
        A verified coloring, a verified clique certificate, or an assumption
        violation from the engine

    Raises
    ------
    :class:`~cliquecolor.errors.PipelineRefusal`
        If an exact step is needed beyond the configured bounds
    """
    if mode not in MODES:
        raise ContractError("Unknown mode '%s'" % mode)
    config = get_config() if config is None else config
    g = Graph(g.n, g.edges())
    if g.n == 0:
        return Outcome.of_coloring(Coloring({}, 0))

    delta = g.max_degree()
    target = delta - 1
    bound = declared_bound(delta, mode)
    diagnostics = {"n": g.n, "delta": delta, "mode": mode}

    for v in g.vertices():
        if g.degree(v) == delta and g.is_clique(g.neighbors(v) | set([v])):
            return _finish(g, target, _clique_outcome(CliqueCertificate(g.neighbors(v) | set([v])), delta + 1,
                                                      path="complete-component"))

    if fast_paths:
        greedy = greedy_coloring(g)
        diagnostics["greedy_colors"] = greedy.num_colors()
        if greedy.num_colors() <= target:
            return _finish(g, target, Outcome.of_coloring(greedy, {"path": "greedy"}))
        found = tabu_coloring(g, target, seed=config.seed, config=config)
        if found is not None:
            return _finish(g, target, Outcome.of_coloring(found, {"path": "tabu"}))
        found = _fast_clique(g, bound, mode)
        if found is not None:
            return _finish(g, target, found)

    try:
        best = exact_coloring(g, config=config)
        if best.num_colors() <= target:
            return _finish(g, target, Outcome.of_coloring(best, {"path": "exact"}))
        if best.num_colors() > delta:
            return _finish(g, target, _brooks_clique(g, bound, config), mode, config)
        H = critical_subgraph(g, delta, config=config)
        if H.max_degree() < delta:
            return _finish(g, target, _brooks_clique(H, bound, config), mode, config)
        return _finish(g, target, _solve_critical(H, mode, config))
    except OracleRefusal as e:
        diagnostics["refused_by"] = e.oracle
        logger.warning("[reduction] refusing %s-vertex graph: %s" % (g.n, e))
        raise PipelineRefusal("Graph needs the exact machinery beyond its configured bounds (%s)" % e,
                              diagnostics=diagnostics, size=e.size, bound=e.bound)


def _finish(g, target, outcome, mode="theorem1", config=None):
    if mode == "theorem2" and outcome.variant == Outcome.CLIQUE and len(outcome.clique) < outcome.bound:
        logger.warning("[reduction] clique of %s below %s, high clique taken from the exact oracle"
                       % (len(outcome.clique), outcome.bound))
        high = high_subgraph(g)
        cert = max_clique_exact(high, config=config).relabel(high.labels)
        outcome = Outcome.of_clique(CliqueCertificate(cert.vertices, high_only=True), g.max_degree() - 5,
                                    {"path": "oracle-high-clique",
                                     "replaced": outcome.diagnostics.get("path"),
                                     "replaced_size": len(outcome.clique)})
    if outcome.variant == Outcome.COLORING:
        if not verify(g, outcome.coloring) or outcome.coloring.num_colors() > target:
            raise InternalInvariantError("Pipeline produced an invalid coloring")
    elif outcome.variant == Outcome.CLIQUE:
        if not verify(g, outcome.clique) or len(outcome.clique) < outcome.bound:
            raise InternalInvariantError("Pipeline produced an invalid clique certificate")
    return outcome
