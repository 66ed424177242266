#!/usr/bin/env python
"""Constructive Brooks-type coloring. For any input graph, :mod:`cliquecolor`
returns either a proper coloring with :math:`\\Delta-1` colors or a verified
clique certificate, by running Mozhan partitions, the club-moving process,
hitting-set reduction and list-coloring lemmas, all cross-checked against
exact brute-force oracles.

Modules
-------
:mod:`cliquecolor.graph`
    Graph representation, DIMACS I/O, named constructions and exact oracles

:mod:`cliquecolor.listcolor`
    List coloring, choosability decisions and the mixed join lemmas

:mod:`cliquecolor.mozhan`
    Mozhan partitions and the member-moving engine

:mod:`cliquecolor.reduction`
    Maximum-clique structure, independent transversals, hitting sets and the
    top-level :func:`~cliquecolor.reduction.color_or_clique` pipeline

:mod:`cliquecolor.certificate`
    JSON certificates and their re-verification

:mod:`cliquecolor.corpus`, :mod:`cliquecolor.suites`
    Seeded instance generators and the acceptance suites built on them

:mod:`cliquecolor.config`, :mod:`cliquecolor.errors`, :mod:`cliquecolor.report`
    Configuration registry, exception hierarchy and text formatting

:mod:`cliquecolor.cli`
    Command-line front end
"""

__author__ = "Joshua Griffin Dunn"
__date__ = "2026-10-17"
__version__ = "0.1.0"
