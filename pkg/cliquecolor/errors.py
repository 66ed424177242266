#!/usr/bin/env python
"""Exception hierarchy for :mod:`cliquecolor`.

Every error raised on purpose by the package derives from
:class:`CliqueColorError`. Failed engine assumptions are *not* exceptions at
the public surface; they come back as
:class:`~cliquecolor.mozhan.Outcome` values.
"""
__author__ = "Joshua Griffin Dunn"
__date__ = "2026-10-17"


class CliqueColorError(Exception):
    """Base class for errors raised by :mod:`cliquecolor`"""


class ConfigError(CliqueColorError):
    """Raised when configuration values fail validation"""


class ParseError(CliqueColorError):
    """Raised when graph text cannot be parsed

    Parameters
    ----------
    line_no : int or None
        1-based line number at which parsing failed, `None` for input that
        is not line-oriented (e.g. construction names)

    message : str
        Description of the problem
    """
    def __init__(self, line_no, message):
        self.line_no = line_no
        self.message = message
        if line_no is None:
            CliqueColorError.__init__(self, message)
        else:
            CliqueColorError.__init__(self, "line %s: %s" % (line_no, message))


class StructureError(CliqueColorError):
    """Raised when an object does not fit the graph it refers to, or when
    maximum cliques do not have the intersection structure a lemma requires

    Parameters
    ----------
    message : str
        Description of the problem

    cliques : list, optional
        Offending cliques, if any
    """
    def __init__(self, message, cliques=None):
        self.cliques = [] if cliques is None else [sorted(X) for X in cliques]
        CliqueColorError.__init__(self, message)


class OracleRefusal(CliqueColorError):
    """Raised when an exact oracle is asked to work beyond its size bound

    Parameters
    ----------
    oracle : str
        Name of the refusing oracle

    size : int
        Size of the instance

    bound : int
        Configured bound that `size` exceeds
    """
    def __init__(self, oracle, size, bound):
        self.oracle = oracle
        self.size = size
        self.bound = bound
        CliqueColorError.__init__(self, "%s refuses instance of size %s (bound %s)" % (oracle, size, bound))


class PipelineRefusal(OracleRefusal):
    """Raised by the top-level pipeline when no path within the configured
    bounds can settle the input. Carries whatever the pipeline learned before
    giving up in :attr:`diagnostics`.
    """
    def __init__(self, message, diagnostics=None, size=None, bound=None):
        self.diagnostics = {} if diagnostics is None else diagnostics
        self.oracle = "pipeline"
        self.size = size
        self.bound = bound
        CliqueColorError.__init__(self, message)


class ContractError(CliqueColorError, ValueError):
    """Raised when the caller breaks an operation's precondition"""


class InternalInvariantError(CliqueColorError, AssertionError):
    """Raised when a search that is mathematically guaranteed to succeed fails.
    Seeing one of these means there is a bug.
    """


class SearchLimitExceeded(OracleRefusal):
    """Raised when a backtracking search visits more nodes than it was allowed"""
    def __init__(self, limit):
        OracleRefusal.__init__(self, "search", limit + 1, limit)
