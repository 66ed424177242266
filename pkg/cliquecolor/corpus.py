#!/usr/bin/env python
"""Seeded instance generators for the test suites and the ``suite`` command.

Every generator takes an explicit `seed` or :class:`random.Random`; the same
seed always yields the same instances in the same order.
"""
import random

import networkx as nx

from cliquecolor.errors import ContractError
from cliquecolor.graph import Graph, complete_graph, construct_moser_spindle, cycle_graph,\
                              join, lex_product_cycle_clique
from cliquecolor.listcolor import MIXED_JOIN_KINDS, ListAssignment, ListSizeFunction, mixed_join_host
from cliquecolor.reduction import TransversalInstance

__author__ = "Joshua Griffin Dunn"
__date__ = "2026-10-17"


#===============================================================================
# INDEX: random graphs
#===============================================================================

def gnp(n, p, seed):
    """Return a :math:`G(n, p)` random graph"""
    return Graph.from_networkx(nx.gnp_random_graph(n, p, seed=seed), ordering=range(n))


def random_regular(d, n, seed):
    """Return a random `d`-regular graph on `n` vertices"""
    if (d * n) % 2 == 1 or d >= n:
        raise ContractError("no %s-regular graph on %s vertices" % (d, n))
    return Graph.from_networkx(nx.random_regular_graph(d, n, seed=seed), ordering=range(n))


def planted(n, k, p, seed):
    """Return a :math:`G(n, p)` graph with a clique planted on `k` random vertices"""
    rng = random.Random(seed)
    nxg = nx.gnp_random_graph(n, p, seed=rng.randrange(1 << 30))
    members = rng.sample(range(n), k)
    nxg.add_edges_from([(u, v) for i, u in enumerate(members) for v in members[i+1:]])
    return Graph.from_networkx(nxg, ordering=range(n))


def small_graphs(seed, count, max_order=7):
    """Yield `count` random graphs on 2 to `max_order` vertices"""
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(2, max_order)
        yield gnp(n, rng.choice([0.2, 0.3, 0.4, 0.5]), rng.randrange(1 << 30))


def smallpot_instances(seed, count, max_order=7, max_total=12):
    """Yield `count` pairs ``(graph, ListSizeFunction)`` with list sizes
    ``d(v) - 1`` or ``d(v)`` (at least 1), summing to at most `max_total`
    """
    rng = random.Random(seed)
    made = 0
    while made < count:
        n = rng.randint(2, max_order)
        g = gnp(n, rng.choice([0.15, 0.25, 0.35]), rng.randrange(1 << 30))
        shape = rng.choice(["d1", "degree", "mixed"])
        sizes = {}
        for v in g.vertices():
            low = rng.random() < 0.5 if shape == "mixed" else shape == "d1"
            sizes[v] = max(g.degree(v) - (1 if low else 0), 1)
            sizes[v] = min(sizes[v], n - 1)
        f = ListSizeFunction(sizes)
        if f.total() > max_total:
            continue
        made += 1
        yield g, f


def dichotomy_instances(seed, count, max_order=24):
    """Yield `count` pairs ``(name, graph)`` for the pipeline dichotomy suite

    Instances cycle through random graphs with maximum degree 7 to 16 where
    the order allows it, random regular graphs, graphs with a planted
    clique, and small lexicographic products.
    """
    rng = random.Random(seed)
    lex = [(5, k) for k in range(1, 6) if 5 * k <= max_order]
    for i in range(count):
        kind = i % 4
        sub = rng.randrange(1 << 30)
        if kind == 0:
            n = rng.randint(10, max(max_order, 10))
            g = gnp(n, rng.uniform(0.3, 0.7), sub)
            yield "gnp-%s" % i, g
        elif kind == 1:
            n = rng.randint(10, max(max_order, 10))
            d = rng.randint(3, min(n - 1, 16))
            if (d * n) % 2 == 1:
                d -= 1
            yield "regular-%s" % i, random_regular(d, n, sub)
        elif kind == 2:
            n = rng.randint(10, max(max_order, 10))
            k = rng.randint(4, min(n, 10))
            yield "planted-%s" % i, planted(n, k, rng.uniform(0.2, 0.5), sub)
        else:
            if len(lex) == 0:
                yield "gnp-%s" % i, gnp(max_order, 0.5, sub)
            else:
                c, k = lex[rng.randrange(len(lex))]
                yield "lex-%s-%s" % (c, k), lex_product_cycle_clique(c, k)


def _planted_partite(n, delta, rng):
    """Return a graph on `n` vertices with a planted proper ``(delta - 1)``-coloring
    and maximum degree at most `delta`
    """
    classes = [X % (delta - 1) for X in range(n)]
    rng.shuffle(classes)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if classes[u] != classes[v]]
    rng.shuffle(pairs)
    p = rng.uniform(0.7, 1.0)
    degree = [0] * n
    edges = set()
    for u, v in pairs:
        if degree[u] < delta and degree[v] < delta and rng.random() < p:
            edges.add((u, v))
            degree[u] += 1
            degree[v] += 1

    # fill one vertex up to delta where its class allows
    top = max(range(n), key=lambda X: degree[X])
    for u, v in pairs:
        if degree[top] == delta:
            break
        if top in (u, v) and (u, v) not in edges:
            other = v if u == top else u
            if degree[other] < delta:
                edges.add((u, v))
                degree[u] += 1
                degree[v] += 1
    return Graph(n, sorted(edges))


def engine_instances(seed, count, max_order=24):
    """Yield `count` triples ``(name, graph, delta)`` for theorem-grade engine runs

    Every graph has maximum degree `delta` between 7 and 16 and a planted
    proper ``(delta - 1)``-coloring, so a witness coloring of ``G - v`` with
    ``sum(r) = delta - 1`` colors always exists.
    """
    if max_order < 9:
        raise ContractError("engine instances need at least 9 vertices, not %s" % max_order)
    rng = random.Random(seed)
    made = 0
    while made < count:
        delta = rng.randint(7, min(16, max_order - 2))
        n = rng.randint(delta + 2, min(max_order, 2 * delta + 4))
        g = _planted_partite(n, delta, rng)
        if g.max_degree() != delta:
            continue
        yield "engine-%s" % made, g, delta
        made += 1


#===============================================================================
# INDEX: list assignments
#===============================================================================

def random_lists(g, sizes, palette, rng):
    """Return a :class:`ListAssignment` with ``|L(v)| = sizes[v]`` drawn from
    colors ``0..palette-1``
    """
    return ListAssignment({v: rng.sample(range(palette), sizes[v]) for v in g.vertices()})


def mixed_join_lists(kind, rng, palette=None):
    """Return random lists for :func:`~cliquecolor.listcolor.color_mixed_join`

    Every vertex gets ``d(v) - 1`` or ``d(v)`` colors, one random clique vertex
    gets ``d(v)``, and for ``'K3E2'`` one random independent vertex gets
    ``d(v)`` as well.
    """
    host = mixed_join_host(kind)
    t = MIXED_JOIN_KINDS[kind]
    palette = host.n + 2 if palette is None else palette
    sizes = {v: host.degree(v) - rng.randint(0, 1) for v in host.vertices()}
    w = rng.randrange(t)
    sizes[w] = host.degree(w)
    if kind == "K3E2":
        x = rng.choice([t, t + 1])
        sizes[x] = host.degree(x)
    return random_lists(host, sizes, palette, rng)


#===============================================================================
# INDEX: transversal instances
#===============================================================================

def transversal_instance(rng, max_parts=5, max_part_size=8):
    """Return a random :class:`~cliquecolor.reduction.TransversalInstance`
    meeting the degree hypothesis that guarantees an independent transversal

    Cross-part edges are added at random while both ends stay within
    ``min(s, |K_i| - s)``.
    """
    r = rng.randint(2, max_parts)
    s = rng.randint(1, max(max_part_size // 2, 1))
    sizes = [rng.randint(s, max_part_size) for _ in range(r)]
    parts, where, offset = [], {}, 0
    for i, size in enumerate(sizes):
        parts.append(list(range(offset, offset + size)))
        for v in parts[-1]:
            where[v] = i
        offset += size
    cap = {v: min(s, sizes[where[v]] - s) for v in where}
    degree = dict.fromkeys(where, 0)
    edges = set()
    for _ in range(offset * s):
        u, v = rng.sample(range(offset), 2)
        u, v = min(u, v), max(u, v)
        if where[u] == where[v] or (u, v) in edges:
            continue
        if degree[u] < cap[u] and degree[v] < cap[v]:
            edges.add((u, v))
            degree[u] += 1
            degree[v] += 1
    return TransversalInstance.from_parts(parts, sorted(edges), s)


def transversal_instances(seed, count, max_parts=5, max_part_size=8):
    """Yield `count` instances from :func:`transversal_instance`"""
    rng = random.Random(seed)
    for _ in range(count):
        yield transversal_instance(rng, max_parts, max_part_size)


#===============================================================================
# INDEX: engine fixtures
#===============================================================================

def engine_fixtures():
    """Return the engine fixtures as ``(name, graph, r)`` triples

    Only ``moser`` has ``sum(r) = Delta - 1``; the fixtures run in research
    mode.
    """
    return [("k5", complete_graph(5), (2, 2)),
            ("c5-join-k2", join(cycle_graph(5), complete_graph(2)), (2, 1, 1)),
            ("k13", complete_graph(13), (3, 3, 3, 3)),
            ("moser", construct_moser_spindle(), (2, 1)),
            ]

