#!/usr/bin/env python
"""Hand-built graphs with known maximum-clique structure"""
import os

from cliquecolor.graph import Graph, complete_graph, disjoint_union

__author__ = "Joshua Griffin Dunn"
__date__ = "2026-10-17"


def case_path(name):
    """Return the path of data file `name` in this directory"""
    return os.path.join(os.path.dirname(os.path.abspath(__file__)), name)


def hitting_pair_graph():
    """Two groups: a plain :math:`K_5` on ``0..4``, and ``C = {5..9}`` with
    ``x = 10`` adjacent to ``5..8``. Edge ``(0, 5)`` crosses the groups.

    The maximum cliques are ``{0..4}``, ``{5..9}`` and ``{5, 6, 7, 8, 10}``.
    The transversal search picks 5 from the smaller part first, then 1.
    """
    edges = [(u, v) for u in range(5) for v in range(u+1, 5)]
    edges += [(u, v) for u in range(5, 10) for v in range(u+1, 10)]
    edges += [(v, 10) for v in range(5, 9)]
    edges.append((0, 5))
    return Graph(11, edges)


def triple_core_graph():
    """Core triangle ``{0, 1, 2}`` extended by pairwise nonadjacent 3, 4 and 5:
    three maximum cliques meeting pairwise in the core
    """
    edges = [(0, 1), (0, 2), (1, 2)]
    edges += [(v, x) for x in (3, 4, 5) for v in (0, 1, 2)]
    return Graph(6, edges)


def wrong_overlap_graph():
    """Two :math:`K_4` on ``{0, 1, 2, 3}`` and ``{2, 3, 4, 5}``, sharing two vertices"""
    edges = [(u, v) for u in range(4) for v in range(u+1, 4)]
    edges += [(u, v) for u in range(2, 6) for v in range(u+1, 6) if (u, v) != (2, 3)]
    return Graph(6, edges)


def two_triangles():
    return disjoint_union(complete_graph(3), complete_graph(3))
