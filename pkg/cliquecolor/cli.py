#!/usr/bin/env python
"""Command-line interface to :mod:`cliquecolor`.

Graphs are given as a path to a DIMACS file or as a construction name (see
:func:`~cliquecolor.graph.construct`). Results are written as JSON
certificates that ``cliquecolor verify`` checks again later.

Exit status
-----------
=====   ===========================================================
**#**   **Meaning**
-----   -----------------------------------------------------------
0       Success, a verified certificate, or answer `true`
1       The graph or certificate could not be parsed
2       Refusal: the instance exceeds the configured size bounds
3       The engine reported an assumption violation
4       The certificate was made for a different graph
5       The certificate does not verify
6       Answer `false`
=====   ===========================================================
"""
import argparse
import logging
import os
import sys

from cliquecolor import certificate
from cliquecolor.config import get_config
from cliquecolor.errors import ConfigError, ContractError, OracleRefusal, ParseError
from cliquecolor.graph import construct, parse_dimacs
from cliquecolor.listcolor import ListSizeFunction, f_choosable, f_choosable_naive
from cliquecolor.mozhan import MODES, Outcome, RVector, acquire_witness, run_engine
from cliquecolor.reduction import color_or_clique
from cliquecolor.report import format_warning
from cliquecolor.suites import SUITES, run_suite

__author__ = "Joshua Griffin Dunn"
__date__ = "2026-10-17"

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_REFUSAL = 2
EXIT_VIOLATION = 3
EXIT_HASH_MISMATCH = 4
EXIT_INVALID = 5
EXIT_FALSE = 6

color_help = "Find a (Delta-1)-coloring or a large clique"
color_desc = """Run the coloring-or-clique pipeline on a graph and print a verified
JSON certificate. With ``--r-vector``, run the member-moving engine directly
instead, from a witness found by exact search.
"""

choosable_help = "Decide f-choosability of a small graph"
choosable_desc = """Print ``true`` or ``false``. Exactly one of ``--d1``, ``--uniform``
or ``--sizes`` chooses the list sizes.
"""

verify_help = "Check a certificate against a graph"
verify_desc = """Recompute the graph's content hash and re-verify the certificate payload."""

suite_help = "Run an acceptance suite"
suite_desc = """Run one of the acceptance suites and print a summary, followed by a
table of failing instances. Exit status is 0 iff every instance passes.
"""


def load_graph(source):
    """Return the graph named by `source`: a DIMACS file if such a path
    exists, else a construction name

    Raises
    ------
    :class:`~cliquecolor.errors.ParseError`
    """
    if os.path.exists(source):
        with open(source) as fh:
            return parse_dimacs(fh.read())
    return construct(source)


def _write(text, output):
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w") as fh:
            fh.write(text)


def _parse_sizes(text, g):
    try:
        sizes = [int(X) for X in text.split(",")]
    except ValueError:
        raise ParseError(None, "list sizes must be comma-separated integers, got '%s'" % text)
    if len(sizes) != g.n:
        raise ParseError(None, "got %s list sizes for %s vertices" % (len(sizes), g.n))
    return ListSizeFunction(sizes)


#===============================================================================
# INDEX: subcommands
#===============================================================================

def cmd_color_or_clique(args, config):
    g = load_graph(args.input)
    engine_config = {"mode": args.mode,
                     "seed": config.seed,
                     "fast_paths": not args.no_fast_path,
                     "r_vector": args.r_vector}
    try:
        if args.r_vector is None:
            out = color_or_clique(g, mode=args.mode, fast_paths=not args.no_fast_path, config=config)
        else:
            r = RVector.parse(args.r_vector)
            research = r.total != g.max_degree() - 1 or not r.is_theorem_grade()
            witness = acquire_witness(g, r.total, config=config)
            out = run_engine(g, r, witness, mode=args.mode, research=research, config=config)
            engine_config["research"] = research
    except OracleRefusal as e:
        sys.stderr.write(format_warning("refused: %s" % e, getattr(e, "diagnostics", {})))
        _write(certificate.dumps(certificate.from_refusal(g, e, engine_config)), args.output)
        return EXIT_REFUSAL

    _write(certificate.dumps(certificate.from_outcome(g, out, engine_config)), args.output)
    if out.variant == Outcome.VIOLATION:
        sys.stderr.write(format_warning("assumption violation at %s: %s" % (out.violation.claim,
                                                                            out.violation.message),
                                        out.violation.snapshot))
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_choosable(args, config):
    g = load_graph(args.input)
    if args.d1:
        f = ListSizeFunction.d1(g)
    elif args.uniform is not None:
        f = ListSizeFunction.uniform(g, args.uniform)
    else:
        f = _parse_sizes(args.sizes, g)
    oracle = f_choosable_naive if args.naive else f_choosable
    try:
        answer = oracle(g, f, config=config)
    except OracleRefusal as e:
        sys.stderr.write(format_warning("refused: %s" % e, {"list sizes": str(f)}))
        return EXIT_REFUSAL
    sys.stdout.write("%s\n" % ("true" if answer else "false"))
    return EXIT_OK if answer else EXIT_FALSE


def cmd_verify(args, config):
    g = load_graph(args.input)
    with open(args.certificate) as fh:
        cert = certificate.loads(fh.read())
    result = certificate.check_certificate(g, cert)
    sys.stdout.write("%s\n" % result)
    if result == certificate.HASH_MISMATCH:
        return EXIT_HASH_MISMATCH
    if result == certificate.INVALID:
        return EXIT_INVALID
    return EXIT_OK


def cmd_suite(args, config):
    report = run_suite(args.name, seed=args.seed if args.seed is not None else 0, count=args.count,
                       workers=args.workers, max_order=args.max_order, mode=args.mode, config=config)
    _write(report.render(show_all=args.show_all), args.output)
    return EXIT_OK if report.ok else EXIT_FALSE


#===============================================================================
# INDEX: program entry point
#===============================================================================

def main(argv=sys.argv[1:]):
    """Command-line program for :mod:`cliquecolor`

    Parameters
    ----------
    argv : list, optional
        A list of command-line arguments, which will be processed
        as if the script were called from the command line if
        :func:`main` is called directly.

        Default: `sys.argv[1:]`. The command-line arguments, if the script is
        invoked from the command line

    Returns
    -------
    int
        Exit status
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="count", default=0,
                        help="Log engine steps (repeat for more detail)")
    common.add_argument("--output", default=None, metavar="FILE",
                        help="Write the result to FILE instead of standard output")
    common.add_argument("--seed", type=int, default=None,
                        help="Seed of heuristics and random instances (Default: configured seed)")
    common.add_argument("--mode", choices=MODES, default="theorem1",
                        help="Declared bound family (Default: theorem1)")

    parser = argparse.ArgumentParser(description="Color a graph with Delta-1 colors or certify a large clique")
    subparsers = parser.add_subparsers(title="subcommands",
                                       description="choose one of the following:",
                                       dest="program")

    colorparser = subparsers.add_parser("color-or-clique", parents=[common],
                                        help=color_help, description=color_desc)
    colorparser.add_argument("input", help="DIMACS file or construction name, e.g. 'lex:5:5'")
    colorparser.add_argument("--r-vector", default=None, metavar="R",
                             help="Run the engine with this comma-separated r-vector, e.g. '3,3,3,3'")
    colorparser.add_argument("--no-fast-path", action="store_true", default=False,
                             help="Skip heuristic exits and always run the exact reduction")

    chooseparser = subparsers.add_parser("choosable", parents=[common],
                                         help=choosable_help, description=choosable_desc)
    chooseparser.add_argument("input", help="DIMACS file or construction name")
    sizes = chooseparser.add_mutually_exclusive_group(required=True)
    sizes.add_argument("--d1", action="store_true", default=False, help="List sizes d(v) - 1")
    sizes.add_argument("--uniform", type=int, default=None, metavar="K", help="List size K everywhere")
    sizes.add_argument("--sizes", default=None, metavar="F",
                       help="Comma-separated list size of each vertex, in vertex order")
    chooseparser.add_argument("--naive", action="store_true", default=False,
                              help="Use exhaustive enumeration instead of small-pot enumeration")

    verifyparser = subparsers.add_parser("verify", parents=[common],
                                         help=verify_help, description=verify_desc)
    verifyparser.add_argument("input", help="DIMACS file or construction name")
    verifyparser.add_argument("certificate", help="Certificate JSON file")

    suiteparser = subparsers.add_parser("suite", parents=[common],
                                        help=suite_help, description=suite_desc)
    suiteparser.add_argument("name", choices=sorted(SUITES), help="Suite to run")
    suiteparser.add_argument("--count", type=int, default=None,
                             help="Number of random instances (Default: per suite)")
    suiteparser.add_argument("--workers", type=int, default=1,
                             help="Worker processes (Default: 1)")
    suiteparser.add_argument("--max-order", type=int, default=None, metavar="N",
                             help="Largest instance order, for suites that enumerate by order")
    suiteparser.add_argument("--show-all", action="store_true", default=False,
                             help="Tabulate passing instances too")

    args = parser.parse_args(argv)
    if args.program is None:
        parser.print_help()
        return EXIT_PARSE

    level = logging.WARNING if args.verbose == 0 else (logging.INFO if args.verbose == 1 else logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")

    commands = {"color-or-clique": cmd_color_or_clique,
                "choosable": cmd_choosable,
                "verify": cmd_verify,
                "suite": cmd_suite}
    try:
        config = get_config()
        if args.seed is not None:
            config = config.copy(seed=args.seed)
        return commands[args.program](args, config)
    except (ParseError, ContractError, ConfigError) as e:
        sys.stderr.write(format_warning("could not process input", str(e)))
        return EXIT_PARSE
    except IOError as e:
        sys.stderr.write(format_warning("could not read input", str(e)))
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
