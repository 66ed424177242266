#!/usr/bin/env python
"""List coloring and choosability.

An `L`-coloring colors every vertex `v` from its own list ``L(v)``. A graph
is `f`-choosable when it has an `L`-coloring for every list assignment with
``|L(v)| = f(v)``, and `d1`-choosable when this holds for
``f(v) = d(v) - 1``.

:func:`f_choosable` only enumerates list assignments whose union of lists
(the *pot*) has fewer colors than the graph has vertices; no other assignment
can be the first to fail. :func:`f_choosable_naive` enumerates everything
and exists to cross-check it.

:func:`color_mixed_join` colors :math:`K_4 \\vee E_2` and
:math:`K_3 \\vee E_2` from lists that are one color short everywhere except
at a few vertices. The Mozhan engine uses it to finish recolorings around
high vertices.
"""
import itertools
import logging

from cliquecolor.config import get_config
from cliquecolor.errors import ContractError, InternalInvariantError, OracleRefusal
from cliquecolor.graph import Coloring, complete_graph, empty_graph, join, \
                              max_clique_exact, search_coloring, verify

__author__ = "Joshua Griffin Dunn"
__date__ = "2026-10-17"

logger = logging.getLogger(__name__)

#===============================================================================
# INDEX: list assignments and list sizes
#===============================================================================

class ListAssignment(object):
    """Per-vertex sets of allowed colors

    Parameters
    ----------
    lists : dict
        Map from vertex to an iterable of colors (integers)
    """

    def __init__(self, lists):
        self.lists = {v: frozenset(X) for v, X in lists.items()}

    def __getitem__(self, v):
        return self.lists[v]

    def __repr__(self):
        return "<ListAssignment %s>" % {v: sorted(X) for v, X in sorted(self.lists.items())}

    def pot(self):
        """Return the union of all lists"""
        return frozenset().union(*self.lists.values()) if len(self.lists) > 0 else frozenset()

    def covers(self, g):
        return all(v in self.lists for v in g.vertices())

    def sizes(self):
        """Return the :class:`ListSizeFunction` of this assignment"""
        return ListSizeFunction({v: len(X) for v, X in self.lists.items()})

    def to_json(self):
        """Return a JSON-ready dictionary ``{"lists": {"0": [1, 2], ...}}``"""
        return {"lists": {str(v): sorted(X) for v, X in sorted(self.lists.items())}}

    @classmethod
    def from_json(cls, data):
        """Build an assignment from the dictionary form produced by :meth:`to_json`

        Raises
        ------
        :class:`~cliquecolor.errors.ContractError`
            If `data` does not have the expected shape
        """
        try:
            return cls({int(v): [int(c) for c in X] for v, X in data["lists"].items()})
        except (KeyError, TypeError, ValueError, AttributeError) as e:
            raise ContractError("Malformed list assignment: %s" % e)


class ListSizeFunction(object):
    """Per-vertex list sizes

    Parameters
    ----------
    sizes : dict or sequence
        List size of each vertex
    """

    def __init__(self, sizes):
        if isinstance(sizes, dict):
            self.sizes = dict(sizes)
        else:
            self.sizes = dict(enumerate(sizes))

    def __getitem__(self, v):
        return self.sizes[v]

    def __repr__(self):
        return "<ListSizeFunction %s>" % [self.sizes[X] for X in sorted(self.sizes)]

    def total(self):
        return sum(self.sizes.values())

    def validate(self, g):
        """Check that every vertex of `g` has a size in ``0..|g|-1``

        Raises
        ------
        :class:`~cliquecolor.errors.ContractError`
        """
        errmsg = ""
        for v in g.vertices():
            if v not in self.sizes:
                errmsg += "vertex %s has no list size; " % v
            elif not 0 <= self.sizes[v] <= max(g.n - 1, 0):
                errmsg += "vertex %s has list size %s outside 0..%s; " % (v, self.sizes[v], g.n-1)
        if len(errmsg) > 0:
            raise ContractError("Invalid list sizes: " + errmsg.rstrip("; "))

    def dominates(self, other):
        """Return `True` if every size here is at least the corresponding size in `other`"""
        return all(self.sizes[v] >= other.sizes[v] for v in other.sizes)

    @classmethod
    def d1(cls, g):
        """Sizes ``max(d(v) - 1, 0)``"""
        return cls({v: max(g.degree(v) - 1, 0) for v in g.vertices()})

    @classmethod
    def degree(cls, g):
        """Sizes ``d(v)``"""
        return cls({v: g.degree(v) for v in g.vertices()})

    @classmethod
    def uniform(cls, g, k):
        """Size `k` everywhere"""
        return cls({v: k for v in g.vertices()})


#===============================================================================
# INDEX: L-coloring
#===============================================================================

def l_colorable(g, lists, node_limit=None):
    """Find an `L`-coloring of `g`

    Parameters
    ----------
    g : :class:`~cliquecolor.graph.Graph`

    lists : :class:`ListAssignment`
        Must have a list for every vertex

    node_limit : int, optional
        Search node budget (Default: unlimited)

    Returns
    -------
    :class:`~cliquecolor.graph.Coloring` or None
        A proper coloring with every vertex colored from its list, or `None`
    """
    if not lists.covers(g):
        raise ContractError("List assignment does not cover every vertex")
    sol = search_coloring(g, lists=lists.lists, node_limit=node_limit)
    if sol is None:
        return None
    coloring = Coloring(sol, max(len(lists.pot()), 1) if g.n > 0 else 0)
    assert verify(g, coloring)
    return coloring


def _bitmask_l_colorable(masks, lists):
    """Depth-first L-coloring on bitmask adjacency and bitmask lists.

    Chooses the vertex with the fewest remaining colors first.
    """
    n = len(masks)
    avail = list(lists)
    colored = 0

    def extend(colored):
        if colored == (1 << n) - 1:
            return True
        best = -1
        best_count = None
        for v in range(n):
            if not colored >> v & 1:
                count = bin(avail[v]).count("1")
                if best_count is None or count < best_count:
                    best, best_count = v, count
        if best_count == 0:
            return False
        v = best
        choices = avail[v]
        while choices:
            bit = choices & -choices
            choices ^= bit
            touched = [u for u in range(n) if masks[v] >> u & 1 and not colored >> u & 1 and avail[u] & bit]
            for u in touched:
                avail[u] ^= bit
            if extend(colored | 1 << v):
                return True
            for u in touched:
                avail[u] |= bit
        return False

    return extend(colored)


#===============================================================================
# INDEX: choosability
#===============================================================================

def _check_sizes(g, f, bound, oracle):
    if g.n > bound:
        raise OracleRefusal(oracle, g.n, bound)
    if not isinstance(f, ListSizeFunction):
        f = ListSizeFunction(f)
    f.validate(g)
    return f


def _canonical_lists(sizes, num_colors):
    """Yield list sequences for vertices with the given `sizes`, up to color
    permutation.

    Colors are numbered in order of first appearance: a list may reuse any
    colors seen so far, and may introduce new colors only as the next unused
    numbers. Every assignment over `num_colors` colors is a relabeling of one
    that is yielded.
    """
    def extend(i, used, acc):
        if i == len(sizes):
            yield tuple(acc)
            return
        size = sizes[i]
        for fresh in range(0, size + 1):
            if used + fresh > num_colors:
                break
            reused = size - fresh
            if reused > used:
                continue
            new_bits = sum([1 << c for c in range(used, used + fresh)])
            for old in itertools.combinations(range(used), reused):
                acc.append(new_bits | sum([1 << c for c in old]))
                for found in extend(i + 1, used + fresh, acc):
                    yield found
                acc.pop()

    for found in extend(0, 0, []):
        yield found


def _twin_class(g, f):
    """Return the largest class of twins with equal list size, and whether
    it is a clique. Ties go to the class containing the highest vertex.
    """
    groups = {}
    for v in g.vertices():
        closed = (True, frozenset(g.neighbors(v) | set([v])), f[v])
        opened = (False, frozenset(g.neighbors(v)), f[v])
        groups.setdefault(closed, []).append(v)
        groups.setdefault(opened, []).append(v)

    best = None
    for (is_clique, _, _), members in groups.items():
        key = (len(members), max(members), is_clique)
        if best is None or key > best[0]:
            best = (key, sorted(members), is_clique)
    return best[1], best[2] if len(best[1]) > 1 else True


def _footprints(g, prefix, lists, boundary):
    """Return the inclusion-minimal color sets that L-colorings of
    ``g[prefix]`` can put on `boundary`, as bitmasks.

    Parameters
    ----------
    prefix : list of int
        Vertices, in the order their `lists` are given

    lists : sequence of int
        Bitmask list of each prefix vertex

    boundary : list of int
        Prefix vertices adjacent to the twin class
    """
    index = {v: i for i, v in enumerate(prefix)}
    masks = [sum([1 << index[u] for u in g.neighbors(v) if u in index]) for v in prefix]
    inner = [index[v] for v in boundary]
    outer = [i for i in range(len(prefix)) if prefix[i] not in set(boundary)]
    outer_masks = [sum([1 << outer.index(j) for j in outer if masks[i] >> j & 1]) for i in outer]
    found = []

    def extends(colors):
        outer_lists = []
        for i in outer:
            allowed = lists[i]
            for j, c in colors.items():
                if masks[i] >> j & 1:
                    allowed &= ~(1 << c)
            outer_lists.append(allowed)
        return _bitmask_l_colorable(outer_masks, outer_lists)

    def walk(pos, colors, used):
        if any(X & used == X for X in found):
            return
        if pos == len(inner):
            if extends(colors):
                found[:] = [X for X in found if X & used != used] + [used]
            return
        i = inner[pos]
        choices = lists[i]
        for j, c in colors.items():
            if masks[i] >> j & 1:
                choices &= ~(1 << c)
        while choices:
            bit = choices & -choices
            choices ^= bit
            colors[i] = bit.bit_length() - 1
            walk(pos + 1, colors, used | bit)
            del colors[i]

    walk(0, {}, 0)
    return found


def _hall_fails(available):
    """Return `True` if the bitmask sets in `available` have no system of
    distinct representatives
    """
    for r in range(1, len(available) + 1):
        for subset in itertools.combinations(available, r):
            union = 0
            for X in subset:
                union |= X
            if bin(union).count("1") < r:
                return True
    return False


def _suffix_defeats(footprints, suffix_size, suffix_f, is_clique, num_colors):
    """Return `True` if some multiset of `suffix_size` lists of size `suffix_f`
    leaves the twin class uncolorable under every footprint
    """
    if is_clique:
        killable = [U for U in footprints if bin(U).count("1") >= suffix_f - suffix_size + 1]
    else:
        killable = [U for U in footprints if bin(U).count("1") >= suffix_f]
    if len(killable) < len(footprints):
        return False

    candidates = [sum([1 << c for c in X]) for X in itertools.combinations(range(num_colors), suffix_f)]

    def killed(U, chosen):
        if is_clique:
            return _hall_fails([X & ~U for X in chosen])
        return any(X & U == X for X in chosen)

    def walk(start, chosen, alive):
        if len(alive) == 0:
            return True
        remaining = suffix_size - len(chosen)
        if remaining == 0:
            return False
        if not is_clique:
            best = max([sum([1 for U in alive if X & U == X]) for X in candidates[start:]] + [0])
            if best * remaining < len(alive):
                return False
        for k in range(start, len(candidates)):
            chosen.append(candidates[k])
            still = [U for U in alive if not killed(U, chosen)]
            if walk(k, chosen, still):
                return True
            chosen.pop()
        return False

    return walk(0, [], list(footprints))


def f_choosable(g, f, config=None):
    """Decide whether `g` is `f`-choosable

    Only list assignments with fewer colors in the pot than `g` has vertices
    are examined. Lists on all vertices but one twin class are enumerated up
    to color permutation. For each of these, the colorings of those vertices
    are summarized by the color sets they leave on the twin class's
    neighborhood, and the twin class's lists are enumerated as a multiset
    against those summaries.

    Parameters
    ----------
    g : :class:`~cliquecolor.graph.Graph`

    f : :class:`ListSizeFunction` or sequence of int

    config : :class:`~cliquecolor.config.Config`, optional

    Returns
    -------
    bool

    Raises
    ------
    :class:`~cliquecolor.errors.OracleRefusal`
        If `g` has more than ``max_choosability`` vertices
    """
    config = get_config() if config is None else config
    f = _check_sizes(g, f, config.max_choosability, "f_choosable")
    n = g.n
    if n == 0:
        return True
    if any(f[v] == 0 for v in g.vertices()):
        return False

    suffix, is_clique = _twin_class(g, f)
    suffix_set = set(suffix)
    prefix = [v for v in g.vertices() if v not in suffix_set]
    boundary = sorted(set().union(*[g.neighbors(v) for v in suffix]) - suffix_set)
    num_colors = n - 1
    suffix_f = f[suffix[0]]
    logger.debug("[listcolor] f_choosable on %s vertices: twin class %s (%s), prefix %s"
                 % (n, suffix, "clique" if is_clique else "independent", prefix))

    checked = 0
    for lists in _canonical_lists([f[v] for v in prefix], num_colors):
        checked += 1
        footprints = _footprints(g, prefix, lists, boundary)
        if len(footprints) == 0:
            logger.debug("[listcolor] uncolorable prefix after %s assignments" % checked)
            return False
        if _suffix_defeats(footprints, len(suffix), suffix_f, is_clique, num_colors):
            logger.debug("[listcolor] uncolorable assignment after %s prefixes" % checked)
            return False

    logger.debug("[listcolor] choosable, %s prefixes examined" % checked)
    return True


def f_choosable_naive(g, f, config=None):
    """Decide `f`-choosability by trying every assignment over a universe of
    ``sum(f)`` colors, up to color permutation

    Parameters
    ----------
    g : :class:`~cliquecolor.graph.Graph`

    f : :class:`ListSizeFunction` or sequence of int

    config : :class:`~cliquecolor.config.Config`, optional

    Returns
    -------
    bool

    Raises
    ------
    :class:`~cliquecolor.errors.OracleRefusal`
        If `g` has more than ``max_naive_choosability`` vertices or the list
        sizes add up to more than ``max_naive_list_total``
    """
    config = get_config() if config is None else config
    f = _check_sizes(g, f, config.max_naive_choosability, "f_choosable_naive")
    if f.total() > config.max_naive_list_total:
        raise OracleRefusal("f_choosable_naive", f.total(), config.max_naive_list_total)

    masks = [sum([1 << u for u in g.neighbors(v)]) for v in g.vertices()]
    for lists in _canonical_lists([f[v] for v in g.vertices()], f.total()):
        if not _bitmask_l_colorable(masks, list(lists)):
            return False
    return True


def is_d1_choosable(g, config=None):
    """Return :func:`f_choosable` with ``f(v) = max(d(v) - 1, 0)``"""
    return f_choosable(g, ListSizeFunction.d1(g), config=config)


def _is_empty3(b):
    return b.n == 3 and b.number_of_edges() == 0


def _is_claw(b):
    return b.n == 4 and sorted(b.degrees()) == [1, 1, 1, 3]


def classify_join(t, b, config=None):
    """Predict whether :math:`K_t \\vee B` is `d1`-choosable

    It is not exactly when :math:`\\omega(B) \\ge |B| - 1`, or ``t == 4`` and
    `B` is :math:`E_3` or :math:`K_{1,3}`, or ``t == 5`` and `B` is
    :math:`E_3`.

    Parameters
    ----------
    t : int
        At least 4

    b : :class:`~cliquecolor.graph.Graph`
        Nonempty

    Returns
    -------
    bool
    """
    if t < 4:
        raise ContractError("classify_join needs t >= 4, got %s" % t)
    if b.n == 0:
        raise ContractError("classify_join needs a nonempty B")
    if len(max_clique_exact(b, config=config)) >= b.n - 1:
        return False
    if t == 4 and (_is_empty3(b) or _is_claw(b)):
        return False
    if t == 5 and _is_empty3(b):
        return False
    return True


#===============================================================================
# INDEX: mixed join lemmas
#===============================================================================

MIXED_JOIN_KINDS = {"K4E2": 4, "K3E2": 3}


def mixed_join_host(kind):
    """Return the host graph of `kind`: clique on ``0..t-1``, independent pair after it"""
    if kind not in MIXED_JOIN_KINDS:
        raise ContractError("Unknown mixed join kind '%s'" % kind)
    return join(complete_graph(MIXED_JOIN_KINDS[kind]), empty_graph(2))


def color_mixed_join(kind, lists):
    """Color :math:`K_4 \\vee E_2` or :math:`K_3 \\vee E_2` from short lists

    Vertices ``0..t-1`` form the clique and ``t, t+1`` the independent pair,
    as in :func:`mixed_join_host`. The two independent vertices get a common
    color when their lists share one, then the clique is colored greedily,
    ending with a clique vertex whose list is as long as its degree. If that
    fails, a full search is run, which the lemmas guarantee succeeds.

    Parameters
    ----------
    kind : str
        ``'K4E2'`` or ``'K3E2'``

    lists : :class:`ListAssignment`
        ``|L(v)| >= d(v) - 1`` for every vertex, ``|L(w)| >= d(w)`` for some
        clique vertex `w`, and for ``'K3E2'`` also ``|L(x)| >= d(x)`` for some
        independent vertex `x`

    Returns
    -------
    :class:`~cliquecolor.graph.Coloring`

    Raises
    ------
    :class:`~cliquecolor.errors.ContractError`
        If `lists` does not meet the size conditions

    :class:`~cliquecolor.errors.InternalInvariantError`
        If no coloring is found although the conditions hold
    """
    host = mixed_join_host(kind)
    t = MIXED_JOIN_KINDS[kind]
    clique = list(range(t))
    x, y = t, t + 1

    if not lists.covers(host):
        raise ContractError("%s lists must cover vertices 0..%s" % (kind, host.n - 1))
    short = [v for v in host.vertices() if len(lists[v]) < host.degree(v) - 1]
    if len(short) > 0:
        raise ContractError("%s lists too short at vertices %s" % (kind, short))
    full = [v for v in clique if len(lists[v]) >= host.degree(v)]
    if len(full) == 0:
        raise ContractError("%s needs a clique vertex with a list as long as its degree" % kind)
    if kind == "K3E2" and all(len(lists[v]) < host.degree(v) for v in (x, y)):
        raise ContractError("K3E2 needs an independent vertex with a list as long as its degree")

    w = full[0]
    common = sorted(lists[x] & lists[y])
    if len(common) > 0:
        colors = {x: common[0], y: common[0]}
        for v in [X for X in clique if X != w] + [w]:
            free = sorted(lists[v] - set(colors[u] for u in host.neighbors(v) if u in colors))
            if len(free) == 0:
                break
            colors[v] = free[0]
        if len(colors) == host.n:
            coloring = Coloring(colors, len(lists.pot()))
            assert verify(host, coloring)
            return coloring
        logger.debug("[listcolor] %s greedy finish failed, searching" % kind)

    coloring = l_colorable(host, lists)
    if coloring is None:
        raise InternalInvariantError("%s lists %s admit no coloring" % (kind, lists))
    return coloring
