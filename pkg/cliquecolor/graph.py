#!/usr/bin/env python
"""Graph representation, interchange formats, named constructions and exact
oracles. Every other module of :mod:`cliquecolor` uses the oracles defined here
as ground truth.

Types
-----
:class:`Graph`
    Immutable simple undirected graph on vertices ``0..n-1``. Induced
    subgraphs remember where their vertices came from.

:class:`Coloring`
    Map from vertex to color, with a permitted palette size

:class:`CliqueCertificate`
    Vertex set claimed to be a clique, optionally of maximum-degree vertices only

Oracles
-------
:func:`search_coloring`
    Backtracking search shared by the chromatic-number oracle, the list-coloring
    search and the engine's local completions

:func:`chromatic_number_exact`, :func:`exact_coloring`, :func:`max_clique_exact`
    Exact answers at desk scale. These refuse, rather than degrade, above the
    configured bounds.

:func:`is_vertex_critical`, :func:`critical_subgraph`
    Criticality certification and reduction
"""
import hashlib
import itertools
import logging
import random

import networkx as nx

from cliquecolor.config import get_config
from cliquecolor.errors import ParseError, StructureError, OracleRefusal,\
                               ContractError, SearchLimitExceeded

__author__ = "Joshua Griffin Dunn"
__date__ = "2026-10-17"

logger = logging.getLogger(__name__)

#===============================================================================
# INDEX: graph, coloring and certificate types
#===============================================================================

class Graph(object):
    """Immutable simple undirected graph with vertices ``0..n-1``

    Parameters
    ----------
    n : int
        Number of vertices

    edges : iterable of pairs, optional
        Edges as pairs of vertex indices

    labels : sequence of int, optional
        For induced subgraphs, index of each vertex in the parent graph

    origin : sequence of int, optional
        For induced subgraphs, index of each vertex in the outermost graph
        the chain of subgraphs was cut from

    Raises
    ------
    :class:`~cliquecolor.errors.StructureError`
        If an edge refers to a vertex outside ``0..n-1``

    :class:`~cliquecolor.errors.ContractError`
        If `n` is negative or an edge is a self-loop
    """

    def __init__(self, n, edges=(), labels=None, origin=None):
        if n < 0:
            raise ContractError("Graph needs a nonnegative vertex count, got %s" % n)

        adj = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise StructureError("Edge (%s, %s) leaves vertex range 0..%s" % (u, v, n-1))
            if u == v:
                raise ContractError("Self-loop at vertex %s" % u)
            adj[u].add(v)
            adj[v].add(u)

        self._n = n
        self._adj = tuple([frozenset(X) for X in adj])
        self._masks = tuple([sum([1 << u for u in X]) for X in adj])
        self.labels = tuple(range(n)) if labels is None else tuple(labels)
        self.origin = self.labels if origin is None else tuple(origin)

    @property
    def n(self):
        return self._n

    def __len__(self):
        return self._n

    def __repr__(self):
        return "<Graph n=%s m=%s>" % (self._n, self.number_of_edges())

    def __eq__(self, other):
        return isinstance(other, Graph) and self._adj == other._adj

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self._adj)

    def vertices(self):
        return range(self._n)

    def edges(self):
        """Return all edges as sorted pairs ``(u, v)`` with ``u < v``

        Returns
        -------
        list
        """
        return [(u, v) for u in range(self._n) for v in sorted(self._adj[u]) if u < v]

    def neighbors(self, v):
        return self._adj[v]

    def mask(self, v):
        """Return the neighborhood of `v` as a bitmask"""
        return self._masks[v]

    def adjacent(self, u, v):
        return v in self._adj[u]

    def degree(self, v):
        return len(self._adj[v])

    def degrees(self):
        return [len(X) for X in self._adj]

    def max_degree(self):
        return max(self.degrees()) if self._n > 0 else 0

    def number_of_edges(self):
        return sum(self.degrees()) // 2

    def is_clique(self, vertices):
        vertices = list(vertices)
        return all(self.adjacent(u, v) for u, v in itertools.combinations(vertices, 2))

    def is_independent(self, vertices):
        vertices = list(vertices)
        return not any(self.adjacent(u, v) for u, v in itertools.combinations(vertices, 2))

    def induced_subgraph(self, vertices):
        """Return the subgraph induced by `vertices`

        Vertices of the result are renumbered ``0..len(vertices)-1`` in
        ascending order of their index here. :attr:`labels` of the result maps
        back to this graph, :attr:`origin` to the outermost graph.

        Parameters
        ----------
        vertices : iterable of int

        Returns
        -------
        :class:`Graph`
        """
        keep = sorted(set(vertices))
        for v in keep:
            if not 0 <= v < self._n:
                raise StructureError("Vertex %s is not in a graph on %s vertices" % (v, self._n))

        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u in keep for v in self._adj[u] if v in index and u < v]
        return Graph(len(keep), edges, labels=keep, origin=[self.origin[v] for v in keep])

    def remove_vertices(self, vertices):
        """Return the subgraph induced by all vertices except `vertices`"""
        drop = set(vertices)
        return self.induced_subgraph([v for v in range(self._n) if v not in drop])

    def to_networkx(self):
        """Return an equivalent :class:`networkx.Graph` with nodes ``0..n-1``"""
        nxg = nx.Graph()
        nxg.add_nodes_from(range(self._n))
        nxg.add_edges_from(self.edges())
        return nxg

    @classmethod
    def from_networkx(cls, nxg, ordering=None):
        """Build a :class:`Graph` from a :class:`networkx.Graph`

        Parameters
        ----------
        nxg : :class:`networkx.Graph`

        ordering : list, optional
            Node order defining vertex indices (Default: sorted node labels)

        Returns
        -------
        :class:`Graph`
        """
        ordering = sorted(nxg.nodes()) if ordering is None else list(ordering)
        index = {X: i for i, X in enumerate(ordering)}
        return cls(len(ordering), [(index[u], index[v]) for u, v in nxg.edges() if u != v])

    def to_dimacs(self):
        """Return the graph in DIMACS ``p edge`` format, 1-based"""
        edges = self.edges()
        lines = ["p edge %s %s" % (self._n, len(edges))]
        lines.extend(["e %s %s" % (u+1, v+1) for u, v in edges])
        return "\n".join(lines) + "\n"

    def content_hash(self):
        """Return a content hash that identifies the graph up to equality

        Returns
        -------
        str
            ``'sha256:'`` followed by the hex digest of a canonical edge list
        """
        text = "%s;%s" % (self._n, ",".join(["%s-%s" % X for X in self.edges()]))
        return "sha256:" + hashlib.sha256(text.encode("ascii")).hexdigest()


class Coloring(object):
    """Assignment of colors to vertices

    Parameters
    ----------
    assignment : dict
        Map from vertex to color (any integer)

    palette_size : int, optional
        Number of distinct colors permitted (Default: number used)

    complete : bool, optional
        If `True`, the coloring claims to cover every vertex (Default: `True`)
    """

    def __init__(self, assignment, palette_size=None, complete=True):
        self.assignment = dict(assignment)
        self.palette_size = self.num_colors() if palette_size is None else palette_size
        self.complete = complete

    def __repr__(self):
        return "<Coloring %s vertices, %s colors, palette %s>" % (len(self.assignment), self.num_colors(), self.palette_size)

    def __getitem__(self, v):
        return self.assignment[v]

    def __len__(self):
        return len(self.assignment)

    def __eq__(self, other):
        return isinstance(other, Coloring) and self.assignment == other.assignment \
               and self.palette_size == other.palette_size

    def __ne__(self, other):
        return not self.__eq__(other)

    def num_colors(self):
        return len(set(self.assignment.values()))

    def color_classes(self):
        """Return a dictionary mapping each color to the sorted list of its vertices"""
        classes = {}
        for v in sorted(self.assignment):
            classes.setdefault(self.assignment[v], []).append(v)
        return classes

    def relabel(self, labels):
        """Return this coloring with every vertex ``v`` renamed ``labels[v]``"""
        return Coloring({labels[v]: c for v, c in self.assignment.items()}, self.palette_size, self.complete)


class CliqueCertificate(object):
    """Vertex set claimed to induce a complete graph

    Parameters
    ----------
    vertices : iterable of int

    claimed_size : int, optional
        Claimed clique size (Default: number of vertices)

    high_only : bool, optional
        If `True`, every member also claims degree equal to the host graph's
        maximum degree (Default: `False`)
    """

    def __init__(self, vertices, claimed_size=None, high_only=False):
        self.vertices = frozenset(vertices)
        self.claimed_size = len(self.vertices) if claimed_size is None else claimed_size
        self.high_only = high_only

    def __repr__(self):
        return "<CliqueCertificate %s%s>" % (sorted(self.vertices), " high" if self.high_only else "")

    def __len__(self):
        return len(self.vertices)

    def __eq__(self, other):
        return isinstance(other, CliqueCertificate) and self.vertices == other.vertices \
               and self.high_only == other.high_only

    def __ne__(self, other):
        return not self.__eq__(other)

    def relabel(self, labels):
        """Return this certificate with every vertex ``v`` renamed ``labels[v]``"""
        return CliqueCertificate([labels[v] for v in self.vertices], self.claimed_size, self.high_only)


def verify(g, obj):
    """Check a coloring or clique certificate against a graph

    Parameters
    ----------
    g : :class:`Graph`

    obj : :class:`Coloring` or :class:`CliqueCertificate`

    Returns
    -------
    bool
        For colorings, `True` iff no edge is monochromatic, no more than
        ``palette_size`` colors are used, and every vertex is colored when the
        coloring is marked complete. For cliques, `True` iff all pairs are
        adjacent, the size matches the claim and, when ``high_only`` is set,
        every member has degree :math:`\\Delta(g)`.

    Raises
    ------
    :class:`~cliquecolor.errors.StructureError`
        If `obj` refers to a vertex not in `g`
    """
    if isinstance(obj, Coloring):
        vertices = obj.assignment.keys()
    elif isinstance(obj, CliqueCertificate):
        vertices = obj.vertices
    else:
        raise ContractError("Cannot verify object of type %s" % type(obj).__name__)

    for v in vertices:
        if not 0 <= v < g.n:
            raise StructureError("Vertex %s is not in a graph on %s vertices" % (v, g.n))

    if isinstance(obj, Coloring):
        colors = obj.assignment
        if obj.complete and len(colors) != g.n:
            return False
        if obj.num_colors() > obj.palette_size:
            return False
        for u, v in g.edges():
            if u in colors and v in colors and colors[u] == colors[v]:
                return False
        return True

    if len(obj.vertices) != obj.claimed_size:
        return False
    if not g.is_clique(obj.vertices):
        return False
    if obj.high_only:
        top = g.max_degree()
        return all(g.degree(v) == top for v in obj.vertices)
    return True


#===============================================================================
# INDEX: DIMACS input
#===============================================================================

def parse_dimacs(text):
    """Parse a graph in DIMACS ``p edge n m`` format

    Comment lines start with ``c``. Vertex ids are 1-based in the text and
    0-based in the result. ``p col`` headers are accepted as a synonym.

    Parameters
    ----------
    text : str

    Returns
    -------
    :class:`Graph`

    Raises
    ------
    :class:`~cliquecolor.errors.ParseError`
        On a missing, repeated or malformed header, a malformed edge line, an
        out-of-range vertex id, a self-loop, a repeated edge, or an edge count
        that differs from the header
    """
    n = m = header_line = None
    edges = []
    seen = set()
    line_no = 0
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if len(line) == 0 or line.startswith("c"):
            continue

        items = line.split()
        if items[0] == "p":
            if n is not None:
                raise ParseError(line_no, "second 'p' header (first on line %s)" % header_line)
            if len(items) != 4 or items[1] not in ("edge", "col"):
                raise ParseError(line_no, "malformed header '%s', expected 'p edge <n> <m>'" % line)
            try:
                n, m = int(items[2]), int(items[3])
            except ValueError:
                raise ParseError(line_no, "malformed header '%s', counts must be integers" % line)
            if n < 0 or m < 0:
                raise ParseError(line_no, "malformed header '%s', counts must be nonnegative" % line)
            header_line = line_no
        elif items[0] == "e":
            if n is None:
                raise ParseError(line_no, "edge line before 'p edge' header")
            if len(items) != 3:
                raise ParseError(line_no, "malformed edge line '%s'" % line)
            try:
                u, v = int(items[1]), int(items[2])
            except ValueError:
                raise ParseError(line_no, "malformed edge line '%s'" % line)
            for x in (u, v):
                if not 1 <= x <= n:
                    raise ParseError(line_no, "vertex id %s out of range 1..%s" % (x, n))
            if u == v:
                raise ParseError(line_no, "self-loop at vertex %s" % u)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ParseError(line_no, "repeated edge %s %s" % key)
            seen.add(key)
            edges.append((u-1, v-1))
        else:
            raise ParseError(line_no, "unrecognized line '%s'" % line)

    if n is None:
        raise ParseError(max(line_no, 1), "missing 'p edge' header")
    if len(edges) != m:
        raise ParseError(header_line, "header declares %s edges, found %s" % (m, len(edges)))

    return Graph(n, edges)


#===============================================================================
# INDEX: named constructions
#===============================================================================

_O5_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
             (4, 5), (4, 6), (5, 6), (6, 7), (4, 7), (5, 7),
             (4, 8), (6, 8), (3, 5), (3, 7), (0, 8), (1, 8), (2, 8)]

_MOSER_EDGES = [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3),
                (0, 4), (0, 5), (4, 5), (4, 6), (5, 6), (3, 6)]


def complete_graph(n):
    return Graph.from_networkx(nx.complete_graph(n))


def cycle_graph(n):
    return Graph.from_networkx(nx.cycle_graph(n))


def empty_graph(n):
    return Graph.from_networkx(nx.empty_graph(n))


def path_graph(n):
    return Graph.from_networkx(nx.path_graph(n))


def star_graph(leaves):
    """Return :math:`K_{1,leaves}` with the center at vertex 0"""
    return Graph.from_networkx(nx.star_graph(leaves))


def disjoint_union(g, h):
    """Return the disjoint union of `g` and `h`; vertices of `h` follow those of `g`"""
    return Graph.from_networkx(nx.disjoint_union(g.to_networkx(), h.to_networkx()))


def join(g, h):
    """Return the join of `g` and `h`: their disjoint union plus every edge
    with one end in each. Vertices of `h` follow those of `g`.

    Parameters
    ----------
    g, h : :class:`Graph`
        Nonempty graphs

    Returns
    -------
    :class:`Graph`
    """
    if g.n == 0 or h.n == 0:
        raise ContractError("join needs two nonempty graphs")
    nxg = nx.disjoint_union(g.to_networkx(), h.to_networkx())
    nxg.add_edges_from([(u, g.n+v) for u in range(g.n) for v in range(h.n)])
    return Graph.from_networkx(nxg)


def lex_product_cycle_clique(cycle_len, clique_size):
    """Return the lexicographic product :math:`C_{cycle\\_len}[K_{clique\\_size}]`

    Vertex ``(i, a)`` gets index ``i*clique_size + a``. It is adjacent to
    ``(j, b)`` iff ``i == j`` and ``a != b``, or ``i`` and ``j`` are consecutive
    on the cycle.

    Parameters
    ----------
    cycle_len : int
        Odd, at least 5

    clique_size : int
        At least 1

    Returns
    -------
    :class:`Graph`
    """
    if cycle_len < 5 or cycle_len % 2 == 0:
        raise ContractError("lexicographic product needs an odd cycle of length >= 5, got %s" % cycle_len)
    if clique_size < 1:
        raise ContractError("lexicographic product needs clique size >= 1, got %s" % clique_size)
    nxg = nx.lexicographic_product(nx.cycle_graph(cycle_len), nx.complete_graph(clique_size))
    return Graph.from_networkx(nxg, ordering=sorted(nxg.nodes()))


def construct_bk8():
    """Return the 8-regular graph on five triangles ``D_0..D_4``, where
    ``D_i = {3i, 3i+1, 3i+2}`` and members of ``D_i`` and ``D_j`` are adjacent
    whenever ``i - j`` is 1 mod 5. It has :math:`\\omega=6` and :math:`\\chi=8`.
    """
    edges = []
    for i in range(5):
        block = [3*i + a for a in range(3)]
        edges.extend(itertools.combinations(block, 2))
        nxt = [3*((i+1) % 5) + a for a in range(3)]
        edges.extend([(u, v) for u in block for v in nxt])
    return Graph(15, edges)


def construct_o5():
    """Return the 9-vertex 5-critical graph :math:`O_5` with 19 edges.

    Vertices 3 and 8 are its only vertices of degree 5, and they are not
    adjacent.
    """
    return Graph(9, _O5_EDGES)


def construct_moser_spindle():
    """Return the Moser spindle, a 4-vertex-critical graph on 7 vertices"""
    return Graph(7, _MOSER_EDGES)


def _construct_atom(name):
    if name == "o5":
        return construct_o5()
    if name == "bk8":
        return construct_bk8()
    if name == "moser":
        return construct_moser_spindle()
    for prefix, func in (("star", star_graph), ("k", complete_graph), ("c", cycle_graph),
                         ("e", empty_graph), ("p", path_graph)):
        if name.startswith(prefix) and name[len(prefix):].isdigit():
            size = int(name[len(prefix):])
            if prefix == "c" and size < 3:
                raise ParseError(None, "cycle needs at least 3 vertices: '%s'" % name)
            return func(size)
    raise ParseError(None, "unknown construction '%s'" % name)


def _construct_term(text):
    parts = text.split("+")
    g = _construct_atom(parts[0])
    for name in parts[1:]:
        g = disjoint_union(g, _construct_atom(name))
    return g


def construct(name):
    """Build a graph from a construction name

    =====================   ================================================
    **Name**                **Graph**
    ---------------------   ------------------------------------------------
    ``o5``                  :func:`construct_o5`
    ``bk8``                 :func:`construct_bk8`
    ``moser``               :func:`construct_moser_spindle`
    ``k<n>``                complete graph
    ``c<n>``                cycle
    ``e<n>``                edgeless graph
    ``p<n>``                path on `n` vertices
    ``star<n>``             :math:`K_{1,n}`
    ``a+b``                 disjoint union of two names, e.g. ``k2+k1``
    ``join:<a>:<b>``        :func:`join` of two (union) names
    ``lex:<c>:<k>``         :func:`lex_product_cycle_clique`
    =====================   ================================================

    Parameters
    ----------
    name : str

    Returns
    -------
    :class:`Graph`

    Raises
    ------
    :class:`~cliquecolor.errors.ParseError`
        If `name` does not follow the grammar above
    """
    name = name.strip().lower()
    items = name.split(":")
    if items[0] == "lex":
        if len(items) != 3 or not (items[1].isdigit() and items[2].isdigit()):
            raise ParseError(None, "expected 'lex:<cycle>:<clique>', got '%s'" % name)
        try:
            return lex_product_cycle_clique(int(items[1]), int(items[2]))
        except ContractError as e:
            raise ParseError(None, str(e))
    if items[0] == "join":
        if len(items) != 3:
            raise ParseError(None, "expected 'join:<g>:<h>', got '%s'" % name)
        return join(_construct_term(items[1]), _construct_term(items[2]))
    if len(items) != 1:
        raise ParseError(None, "unknown construction '%s'" % name)
    return _construct_term(name)


def isomorphism_classes(n):
    """Return one representative of every isomorphism class of graphs on `n` vertices

    Classes are found by enumerating every edge set and keeping the first
    graph of each canonical form, where the canonical form is the smallest
    adjacency bitstring over all vertex permutations.

    Parameters
    ----------
    n : int
        Number of vertices, at most 5

    Returns
    -------
    list of :class:`Graph`
        Sorted by number of edges, then by canonical form
    """
    if n > 5:
        raise OracleRefusal("isomorphism_classes", n, 5)
    pairs = list(itertools.combinations(range(n), 2))
    perms = list(itertools.permutations(range(n)))
    position = {X: i for i, X in enumerate(pairs)}
    found = {}
    for code in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if code >> i & 1]
        canon = min(sum([1 << position[tuple(sorted((p[u], p[v])))] for u, v in edges]) for p in perms)
        if canon not in found:
            found[canon] = Graph(n, edges)
    return [found[X] for X in sorted(found, key=lambda X: (bin(X).count("1"), X))]


#===============================================================================
# INDEX: coloring search and heuristics
#===============================================================================

def _popcount(x):
    return bin(x).count("1")


def search_coloring(g, k=None, lists=None, node_limit=None):
    """Find a proper coloring by DSATUR-style backtracking with forward checking

    The next vertex is the uncolored one with the fewest remaining colors,
    ties broken by higher degree, then lower index. When every vertex may use
    the same colors, a vertex may only open the lowest unused color, which
    removes color-permutation symmetry.

    Parameters
    ----------
    g : :class:`Graph`

    k : int, optional
        Use colors ``0..k-1``

    lists : dict, optional
        Map from vertex to its allowed colors. When given together with `k`,
        lists are cut down to ``0..k-1``.

    node_limit : int, optional
        Maximum number of search nodes (Default: unlimited)

    Returns
    -------
    dict or None
        Map from vertex to color, or `None` if no coloring exists

    Raises
    ------
    :class:`~cliquecolor.errors.SearchLimitExceeded`
        If `node_limit` is exceeded before the search finishes
    """
    n = g.n
    if k is None and lists is None:
        raise ContractError("search_coloring needs k or lists")
    if n == 0:
        return {}

    if lists is None:
        universe = list(range(k))
        domains = [(1 << k) - 1] * n
    else:
        allowed = {v: set(lists.get(v, ())) for v in range(n)}
        if k is not None:
            allowed = {v: set([c for c in X if 0 <= c < k]) for v, X in allowed.items()}
        universe = sorted(set().union(*allowed.values()))
        index = {c: i for i, c in enumerate(universe)}
        domains = [sum([1 << index[c] for c in allowed[v]]) for v in range(n)]

    if any(X == 0 for X in domains):
        return None

    symmetric = all(X == domains[0] for X in domains)
    nbrs = [sorted(g.neighbors(v)) for v in range(n)]
    deg = [len(X) for X in nbrs]
    colors = [-1] * n
    avail = list(domains)
    visited = [0]

    def select():
        best = -1
        best_key = None
        for v in range(n):
            if colors[v] < 0:
                key = (_popcount(avail[v]), -deg[v], v)
                if best_key is None or key < best_key:
                    best, best_key = v, key
        return best

    def extend(placed, used):
        if placed == n:
            return True
        visited[0] += 1
        if node_limit is not None and visited[0] > node_limit:
            raise SearchLimitExceeded(node_limit)

        v = select()
        choices = avail[v]
        if symmetric:
            choices &= (1 << (used + 1)) - 1
        while choices:
            bit = choices & -choices
            choices ^= bit
            c = bit.bit_length() - 1
            touched = []
            dead = False
            for u in nbrs[v]:
                if colors[u] < 0 and avail[u] & bit:
                    avail[u] ^= bit
                    touched.append(u)
                    dead = dead or avail[u] == 0
            colors[v] = c
            if not dead and extend(placed + 1, max(used, c + 1)):
                return True
            colors[v] = -1
            for u in touched:
                avail[u] |= bit
        return False

    if not extend(0, 0):
        return None
    return {v: universe[colors[v]] for v in range(n)}


def find_k_coloring(g, k, node_limit=None):
    """Return a proper coloring of `g` with colors ``0..k-1``, or `None`"""
    if k < 0:
        return None
    sol = search_coloring(g, k=k, node_limit=node_limit)
    return None if sol is None else Coloring(sol, k)


_GREEDY_STRATEGIES = ["largest_first", "smallest_last", "DSATUR", "independent_set",
                      "connected_sequential_bfs", "connected_sequential_dfs"]


def greedy_coloring(g):
    """Return the best coloring found by the deterministic greedy strategies of
    :func:`networkx.greedy_color`

    Returns
    -------
    :class:`Coloring`
        Colors ``0..c-1`` where `c` is the number used
    """
    if g.n == 0:
        return Coloring({}, 0)
    nxg = g.to_networkx()
    best = None
    for strategy in _GREEDY_STRATEGIES:
        found = nx.greedy_color(nxg, strategy=strategy)
        if best is None or len(set(found.values())) < len(set(best.values())):
            best = found
    return Coloring(best)


def tabu_coloring(g, k, seed=0, iterations=None, config=None):
    """Search for a proper `k`-coloring with Tabucol local search

    Starts from the best greedy coloring, with surplus colors replaced at
    random, then repeatedly recolors a conflicting vertex with the best
    non-tabu color.

    Parameters
    ----------
    g : :class:`Graph`

    k : int
        Number of colors

    seed : int, optional
        Seed for the move tie-breaking (Default: `0`)

    iterations : int, optional
        Maximum number of moves (Default: configured ``tabu_iterations``)

    config : :class:`~cliquecolor.config.Config`, optional

    Returns
    -------
    :class:`Coloring` or None
        A proper coloring with colors ``0..k-1``, or `None` if none was found
    """
    config = get_config() if config is None else config
    iterations = config.tabu_iterations if iterations is None else iterations
    n = g.n
    if n == 0:
        return Coloring({}, k)
    if k < 1:
        return None

    rng = random.Random(seed)
    start = greedy_coloring(g).assignment
    col = [start[v] if start[v] < k else rng.randrange(k) for v in range(n)]
    nbrs = [sorted(g.neighbors(v)) for v in range(n)]
    gamma = [[0] * k for _ in range(n)]
    for v in range(n):
        for u in nbrs[v]:
            gamma[v][col[u]] += 1
    conflicts = sum([gamma[v][col[v]] for v in range(n)]) // 2
    best_conflicts = conflicts
    tabu = {}

    for it in range(iterations):
        if conflicts == 0:
            break
        best_delta = None
        moves = []
        for v in range(n):
            if gamma[v][col[v]] == 0:
                continue
            for c in range(k):
                if c == col[v]:
                    continue
                delta = gamma[v][c] - gamma[v][col[v]]
                if tabu.get((v, c), -1) >= it and conflicts + delta >= best_conflicts:
                    continue
                if best_delta is None or delta < best_delta:
                    best_delta, moves = delta, [(v, c)]
                elif delta == best_delta:
                    moves.append((v, c))
        if len(moves) == 0:
            continue

        v, c = moves[rng.randrange(len(moves))]
        old = col[v]
        col[v] = c
        for u in nbrs[v]:
            gamma[u][old] -= 1
            gamma[u][c] += 1
        conflicts += best_delta
        best_conflicts = min(best_conflicts, conflicts)
        num_conflicting = sum([1 for X in range(n) if gamma[X][col[X]] > 0])
        tabu[(v, old)] = it + rng.randint(0, 9) + int(0.6 * num_conflicting)

    if conflicts > 0:
        return None
    return Coloring({v: col[v] for v in range(n)}, k)


#===============================================================================
# INDEX: exact oracles
#===============================================================================

def _check_bound(oracle, g, bound):
    if g.n > bound:
        logger.warning("[graph] %s refuses a graph on %s vertices (bound %s)" % (oracle, g.n, bound))
        raise OracleRefusal(oracle, g.n, bound)


def max_clique_exact(g, config=None):
    """Return a maximum clique of `g`

    Parameters
    ----------
    g : :class:`Graph`

    config : :class:`~cliquecolor.config.Config`, optional

    Returns
    -------
    :class:`CliqueCertificate`

    Raises
    ------
    :class:`~cliquecolor.errors.OracleRefusal`
        If `g` has more than ``max_exact_clique`` vertices
    """
    config = get_config() if config is None else config
    _check_bound("max_clique_exact", g, config.max_exact_clique)
    if g.n == 0:
        return CliqueCertificate([])
    clique, _ = nx.max_weight_clique(g.to_networkx(), weight=None)
    cert = CliqueCertificate(clique)
    assert verify(g, cert)
    return cert


def exact_coloring(g, config=None):
    """Return an optimal coloring of `g`

    Tries ``k = omega, omega+1, ...`` below the best greedy count until the
    backtracking search succeeds; the greedy coloring is optimal otherwise.

    Parameters
    ----------
    g : :class:`Graph`

    config : :class:`~cliquecolor.config.Config`, optional

    Returns
    -------
    :class:`Coloring`
        Colors ``0..chi-1``

    Raises
    ------
    :class:`~cliquecolor.errors.OracleRefusal`
        If `g` has more than ``max_exact_chromatic`` vertices
    """
    config = get_config() if config is None else config
    _check_bound("chromatic_number_exact", g, config.max_exact_chromatic)
    if g.n == 0:
        return Coloring({}, 0)

    upper = greedy_coloring(g)
    lower = len(max_clique_exact(g, config=config))
    for k in range(lower, upper.num_colors()):
        found = find_k_coloring(g, k)
        if found is not None:
            logger.debug("[graph] chi = %s (clique bound %s, greedy %s)" % (k, lower, upper.num_colors()))
            return found

    classes = sorted(set(upper.assignment.values()))
    index = {c: i for i, c in enumerate(classes)}
    return Coloring({v: index[c] for v, c in upper.assignment.items()}, len(classes))


def chromatic_number_exact(g, config=None):
    """Return :math:`\\chi(g)`. See :func:`exact_coloring`."""
    return exact_coloring(g, config=config).palette_size


def is_vertex_critical(g, k, config=None):
    """Return `True` iff :math:`\\chi(g) = k` and :math:`\\chi(g-v) < k` for every vertex `v`

    Raises
    ------
    :class:`~cliquecolor.errors.OracleRefusal`
        Propagated from :func:`chromatic_number_exact`
    """
    if chromatic_number_exact(g, config=config) != k:
        return False
    return all(find_k_coloring(g.remove_vertices([v]), k-1) is not None for v in g.vertices())


def critical_subgraph(g, k, config=None):
    """Return an induced `k`-vertex-critical subgraph of `g`

    Scans vertices in ascending order and deletes each one whose removal keeps
    the chromatic number at least `k`. A vertex kept once stays needed in
    every later subgraph, so one pass suffices.

    Parameters
    ----------
    g : :class:`Graph`

    k : int

    config : :class:`~cliquecolor.config.Config`, optional

    Returns
    -------
    :class:`Graph`
        With :attr:`~Graph.labels` pointing into `g`

    Raises
    ------
    :class:`~cliquecolor.errors.ContractError`
        If :math:`\\chi(g) < k`
    """
    config = get_config() if config is None else config
    _check_bound("critical_subgraph", g, config.max_exact_chromatic)
    if k < 1 or find_k_coloring(g, k-1) is not None:
        raise ContractError("critical_subgraph needs chi(g) >= %s" % k)

    keep = set(g.vertices())
    for v in g.vertices():
        trial = keep - set([v])
        if find_k_coloring(g.induced_subgraph(trial), k-1) is None:
            keep = trial

    logger.debug("[graph] %s-critical subgraph keeps %s of %s vertices" % (k, len(keep), g.n))
    return g.induced_subgraph(keep)


def high_subgraph(g):
    """Return the subgraph induced by the vertices of degree :math:`\\Delta(g)`

    Returns
    -------
    :class:`Graph`
        With :attr:`~Graph.labels` pointing into `g`
    """
    if g.n == 0:
        raise ContractError("high_subgraph needs a nonempty graph")
    top = g.max_degree()
    return g.induced_subgraph([v for v in g.vertices() if g.degree(v) == top])
