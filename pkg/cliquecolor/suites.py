#!/usr/bin/env python
"""Acceptance suites run by ``cliquecolor suite``.

Each suite turns its instances into jobs, runs them (optionally on a process
pool) and collects one table row per job, in job order, so that the report
does not depend on the number of workers:

==================   ==========================================================
**Suite**            **Checks**
------------------   ----------------------------------------------------------
``classification``   :func:`~cliquecolor.listcolor.is_d1_choosable` against
                     :func:`~cliquecolor.listcolor.classify_join` for every
                     small `B`
``smallpot``         :func:`~cliquecolor.listcolor.f_choosable` against
                     :func:`~cliquecolor.listcolor.f_choosable_naive`
``mixed``            :func:`~cliquecolor.listcolor.color_mixed_join` on random
                     lists meeting its size conditions
``mozhan``           partitions of the engine fixtures pass
                     :func:`~cliquecolor.mozhan.verify_state`, and the engine
                     ends in a verified outcome
``engine``           theorem-grade runs of :func:`~cliquecolor.mozhan.run_engine`
                     on random graphs with a planted ``(Delta - 1)``-coloring
                     end in a verified coloring or a clique meeting its bound,
                     with no club active more than three times
``transversal``      :func:`~cliquecolor.reduction.find_independent_transversal`
                     against brute-force enumeration
``dichotomy``        :func:`~cliquecolor.reduction.color_or_clique` returns a
                     verified coloring or clique on random graphs
==================   ==========================================================
"""
import logging
import multiprocessing
import random
import time

from cliquecolor.config import Config, get_config
from cliquecolor.corpus import dichotomy_instances, engine_fixtures, engine_instances, mixed_join_lists,\
                               smallpot_instances, transversal_instances
from cliquecolor.errors import CliqueColorError, ContractError
from cliquecolor.graph import Graph, complete_graph, empty_graph, isomorphism_classes, join, verify
from cliquecolor.listcolor import MIXED_JOIN_KINDS, ListSizeFunction, classify_join, color_mixed_join,\
                                  f_choosable, f_choosable_naive, is_d1_choosable
from cliquecolor.mozhan import Outcome, PartitionState, RVector, acquire_witness, build_partition,\
                               run_engine, verify_state
from cliquecolor.reduction import TransversalInstance, color_or_clique, enumerate_transversals,\
                                  find_independent_transversal
from cliquecolor.report import make_rest_table

__author__ = "Joshua Griffin Dunn"
__date__ = "2026-10-17"

logger = logging.getLogger(__name__)


class SuiteReport(object):
    """Result of one suite run

    Attributes
    ----------
    name : str

    header : tuple
        Column headings

    rows : list of tuple
        One row per job, in job order; the last cell is ``'pass'`` or ``'FAIL'``

    elapsed : float
        Wall-clock seconds
    """

    def __init__(self, name, header, rows, elapsed):
        self.name = name
        self.header = tuple(header)
        self.rows = list(rows)
        self.elapsed = elapsed

    @property
    def failed(self):
        return len([X for X in self.rows if X[-1] != "pass"])

    @property
    def passed(self):
        return len(self.rows) - self.failed

    @property
    def ok(self):
        return self.failed == 0

    def render(self, show_all=False):
        """Return the report as text: a summary line and a reStructuredText table

        Parameters
        ----------
        show_all : bool, optional
            If `False` (Default), only failing rows are tabulated
        """
        lines = ["suite %s: %s passed, %s failed in %.1f s" % (self.name, self.passed, self.failed, self.elapsed),
                 ""]
        rows = self.rows if show_all else [X for X in self.rows if X[-1] != "pass"]
        if len(rows) > 0:
            lines.extend(make_rest_table([self.header] + rows, title=True, max_width=60))
        return "\n".join(lines) + "\n"


def _verdict(ok):
    return "pass" if ok else "FAIL"


def _config_from(values):
    return Config().copy(**values)


#===============================================================================
# INDEX: jobs, one module-level function per suite so they can be pickled
#===============================================================================

def _job_classification(job):
    t, n, edges, values = job
    config = _config_from(values)
    b = Graph(n, edges)
    host = join(complete_graph(t), b)
    predicted = classify_join(t, b, config=config)
    actual = is_d1_choosable(host, config=config)
    return (t, n, len(edges), predicted, actual, _verdict(predicted == actual))


def _job_smallpot(job):
    n, edges, sizes, values = job
    config = _config_from(values)
    g = Graph(n, edges)
    f = ListSizeFunction(sizes)
    fast = f_choosable(g, f, config=config)
    naive = f_choosable_naive(g, f, config=config)
    return (n, len(edges), f.total(), fast, naive, _verdict(fast == naive))


def _job_mixed(job):
    kind, seed = job
    lists = mixed_join_lists(kind, random.Random(seed))
    try:
        coloring = color_mixed_join(kind, lists)
    except CliqueColorError as e:
        return (kind, seed, str(e), _verdict(False))
    ok = verify(join(complete_graph(MIXED_JOIN_KINDS[kind]), empty_graph(2)), coloring) \
         and all(coloring[v] in lists[v] for v in lists.lists)
    return (kind, seed, "colored", _verdict(ok))


def _job_mozhan(job):
    name, n, edges, r, values = job
    config = _config_from(values)
    g = Graph(n, edges)
    r = RVector(r)
    witness = acquire_witness(g, r.total, config=config)
    state = build_partition(g, r, witness, config=config)
    if isinstance(state, PartitionState):
        report = verify_state(state)
        state_text = "valid" if report else "property %s: %s" % (report.prop, report.message)
        state_ok = bool(report)
    else:
        state_text = "built to %s" % state.variant
        state_ok = state.variant != Outcome.VIOLATION
    out = run_engine(g, r, witness, research=True, config=config)
    if out.variant == Outcome.VIOLATION:
        out_text = "violation %s" % out.violation.claim
        # research vectors may get stuck, but the snapshot must replay the whole graph
        snapshot = out.violation.snapshot or {}
        out_ok = sorted(sum(snapshot.get("clubhouses", []), [])) == list(g.vertices())
    elif out.variant == Outcome.CLIQUE:
        out_text = "clique of %s" % len(out.clique)
        out_ok = verify(g, out.clique) and len(out.clique) >= out.bound
    else:
        out_text = "coloring with %s colors" % out.coloring.num_colors()
        out_ok = out.coloring.num_colors() <= r.total and verify(g, out.coloring)
    out_ok = out_ok and out.diagnostics.get("max_activation", 0) <= 3
    return (name, r, state_text, out_text, _verdict(state_ok and out_ok))


def _job_engine(job):
    name, n, edges, mode, values = job
    config = _config_from(values)
    g = Graph(n, edges)
    delta = g.max_degree()
    r = RVector.for_degree(delta)
    try:
        witness = acquire_witness(g, r.total, config=config)
        out = run_engine(g, r, witness, mode=mode, config=config)
    except CliqueColorError as e:
        return (name, n, delta, r, "%s: %s" % (type(e).__name__, e), "-", _verdict(False))
    activations = out.diagnostics.get("max_activation", 0)
    if out.variant == Outcome.COLORING:
        text = "%s colors" % out.coloring.num_colors()
        ok = verify(g, out.coloring) and out.coloring.num_colors() <= delta - 1
    elif out.variant == Outcome.CLIQUE:
        if out.clique.high_only:
            needed = delta - 5
        else:
            needed = r.total + 1 if mode == "theorem2" else delta - max(r)
        text = "clique of %s (bound %s)" % (len(out.clique), out.bound)
        if out.diagnostics.get("path") == "oracle-high-clique":
            text += ", from the oracle"
        ok = verify(g, out.clique) and len(out.clique) >= out.bound >= needed
    else:
        text = "violation %s" % out.violation.claim
        ok = False
    return (name, n, delta, r, text, activations, _verdict(ok and activations <= 3))


def _job_transversal(job):
    index, n, edges, parts, s = job
    t = TransversalInstance.from_parts(parts, edges, s)
    found = find_independent_transversal(t)
    exists = next(enumerate_transversals(t), None) is not None
    ok = (found is not None) == exists and (found is None or t.aux_graph.is_independent(found))
    ok = ok and (found is not None or not t.hypothesis)
    return (index, [len(X) for X in parts], s, found is not None, exists, _verdict(ok))


def _job_dichotomy(job):
    name, n, edges, mode, values = job
    config = _config_from(values)
    g = Graph(n, edges)
    delta = g.max_degree()
    try:
        out = color_or_clique(g, mode=mode, config=config)
    except CliqueColorError as e:
        return (name, n, delta, "%s: %s" % (type(e).__name__, e), _verdict(False))
    if out.variant == Outcome.COLORING:
        return (name, n, delta, "%s colors" % out.coloring.num_colors(),
                _verdict(verify(g, out.coloring) and out.coloring.num_colors() <= max(delta - 1, 0)))
    if out.variant == Outcome.CLIQUE:
        return (name, n, delta, "clique of %s (bound %s)" % (len(out.clique), out.bound),
                _verdict(verify(g, out.clique) and len(out.clique) >= out.bound))
    return (name, n, delta, "violation %s" % out.violation.claim, _verdict(False))


#===============================================================================
# INDEX: job lists
#===============================================================================

def _classification_jobs(options, values):
    max_order = min(options.get("max_order", 5), 5)
    classes = {n: isomorphism_classes(n) for n in range(1, max_order + 1)}
    jobs = []
    for t in (4, 5):
        for n in sorted(classes):
            jobs.extend([(t, n, X.edges(), values) for X in classes[n]])
    for n in sorted(classes):
        if n <= 4:
            jobs.extend([(6, n, X.edges(), values) for X in classes[n]])
    if max_order < 3:
        jobs.append((6, 3, [], values))
    return jobs


def _smallpot_jobs(options, values):
    found = smallpot_instances(options.get("seed", 0), options.get("count", 500),
                               max_order=min(options.get("max_order", 7), 7))
    return [(g.n, g.edges(), f.sizes, values) for g, f in found]


def _mixed_jobs(options, values):
    rng = random.Random(options.get("seed", 0))
    count = options.get("count", 1000)
    return [(kind, rng.randrange(1 << 30)) for kind in sorted(MIXED_JOIN_KINDS) for _ in range(count)]


def _mozhan_jobs(options, values):
    return [(name, g.n, g.edges(), tuple(r), values) for name, g, r in engine_fixtures()]


def _engine_jobs(options, values):
    found = engine_instances(options.get("seed", 0), options.get("count", 200),
                             max_order=options.get("max_order", 24))
    return [(name, g.n, g.edges(), options.get("mode", "theorem1"), values) for name, g, _ in found]


def _transversal_jobs(options, values):
    found = transversal_instances(options.get("seed", 0), options.get("count", 500))
    return [(i, t.aux_graph.n, t.aux_graph.edges(), [sorted(X) for X in t.parts], t.s)
            for i, t in enumerate(found)]


def _dichotomy_jobs(options, values):
    found = dichotomy_instances(options.get("seed", 0), options.get("count", 200),
                                max_order=options.get("max_order", 24))
    return [(name, g.n, g.edges(), options.get("mode", "theorem1"), values) for name, g in found]


SUITES = {
    "classification": (_classification_jobs, _job_classification, ("t", "|B|", "|E(B)|", "predicted", "actual", "result")),
    "smallpot": (_smallpot_jobs, _job_smallpot, ("n", "|E|", "sum f", "f_choosable", "naive", "result")),
    "mixed": (_mixed_jobs, _job_mixed, ("kind", "seed", "outcome", "result")),
    "mozhan": (_mozhan_jobs, _job_mozhan, ("fixture", "r", "partition", "engine", "result")),
    "engine": (_engine_jobs, _job_engine, ("instance", "n", "Delta", "r", "outcome", "activations", "result")),
    "transversal": (_transversal_jobs, _job_transversal, ("instance", "part sizes", "s", "found", "exists", "result")),
    "dichotomy": (_dichotomy_jobs, _job_dichotomy, ("instance", "n", "Delta", "outcome", "result")),
}
"""Suite name -> (job list builder, job runner, column headings)"""


def run_suite(name, seed=0, count=None, workers=1, max_order=None, mode="theorem1", config=None):
    """Run an acceptance suite

    Parameters
    ----------
    name : str
        Key of :data:`SUITES`

    seed : int, optional
        Seed of the randomized suites (Default: `0`)

    count : int, optional
        Number of random instances (Default: per suite)

    workers : int, optional
        Number of worker processes; 1 runs in this process (Default: `1`)

    max_order : int, optional
        Largest instance order, for suites that generate by order

    mode : str, optional
        Mode of the ``dichotomy`` and ``engine`` suites

    config : :class:`~cliquecolor.config.Config`, optional

    Returns
    -------
    :class:`SuiteReport`
    """
    if name not in SUITES:
        raise ContractError("Unknown suite '%s'; choose from %s" % (name, ", ".join(sorted(SUITES))))
    config = get_config() if config is None else config
    options = {"seed": seed, "mode": mode}
    if count is not None:
        options["count"] = count
    if max_order is not None:
        options["max_order"] = max_order

    make_jobs, run_job, header = SUITES[name]
    start = time.time()
    jobs = make_jobs(options, dict(config.values))
    logger.info("[suites] %s: %s jobs on %s worker(s)" % (name, len(jobs), workers))
    if workers > 1:
        pool = multiprocessing.Pool(workers)
        try:
            rows = pool.map(run_job, jobs)
        finally:
            pool.close()
            pool.join()
    else:
        rows = [run_job(X) for X in jobs]

    report = SuiteReport(name, header, rows, time.time() - start)
    if not report.ok:
        logger.warning("[suites] %s: %s of %s jobs failed" % (name, report.failed, len(rows)))
    return report
