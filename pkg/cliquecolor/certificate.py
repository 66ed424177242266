#!/usr/bin/env python
"""Machine-checkable JSON certificates.

A certificate is a JSON object with four keys:

=================   ============================================================
**Key**             **Contents**
-----------------   ------------------------------------------------------------
``kind``            ``coloring``, ``clique``, ``high_clique``, ``refusal`` or
                    ``violation``
``graph_hash``      :meth:`~cliquecolor.graph.Graph.content_hash` of the input
``engine_config``   mode, r-vector and seed the result was produced with
``payload``         kind-specific data, see below
=================   ============================================================

Coloring payloads map vertex (as a string) to color and give the palette size.
Clique payloads list the vertices and the bound that was declared for them.
Refusal and violation payloads carry diagnostics only and verify trivially.

A payload is checked against what the run recorded in ``engine_config``
promises, not against its own claims: see :func:`palette_limit` and
:func:`required_size`.
"""
import json

from cliquecolor.errors import InternalInvariantError, ParseError, StructureError
from cliquecolor.graph import CliqueCertificate, Coloring, verify
from cliquecolor.mozhan import Outcome, RVector
from cliquecolor.reduction import declared_bound

__author__ = "Joshua Griffin Dunn"
__date__ = "2026-10-17"

KINDS = ("coloring", "clique", "high_clique", "refusal", "violation")

VERIFIED = "verified"
HASH_MISMATCH = "hash-mismatch"
INVALID = "invalid"


def _assemble(g, kind, payload, engine_config):
    cert = {"kind": kind,
            "graph_hash": g.content_hash(),
            "engine_config": dict(engine_config),
            "payload": payload}
    if check_certificate(g, cert) != VERIFIED:
        raise InternalInvariantError("Refusing to emit a %s certificate that does not verify" % kind)
    return cert


def from_outcome(g, outcome, engine_config=None):
    """Build a certificate for a pipeline or engine :class:`~cliquecolor.mozhan.Outcome`

    Parameters
    ----------
    g : :class:`~cliquecolor.graph.Graph`
        Graph the outcome refers to

    outcome : :class:`~cliquecolor.mozhan.Outcome`

    engine_config : dict, optional

    Returns
    -------
    dict

    Raises
    ------
    :class:`~cliquecolor.errors.InternalInvariantError`
        If the payload does not verify against `g`
    """
    engine_config = {} if engine_config is None else engine_config
    if outcome.variant == Outcome.COLORING:
        payload = {"colors": {str(v): c for v, c in sorted(outcome.coloring.assignment.items())},
                   "palette_size": outcome.coloring.palette_size}
        return _assemble(g, "coloring", payload, engine_config)
    if outcome.variant == Outcome.CLIQUE:
        kind = "high_clique" if outcome.clique.high_only else "clique"
        payload = {"vertices": sorted(outcome.clique.vertices),
                   "bound": outcome.bound}
        return _assemble(g, kind, payload, engine_config)
    payload = outcome.violation.to_json()
    return _assemble(g, "violation", payload, engine_config)


def from_refusal(g, error, engine_config=None):
    """Build a certificate recording an :class:`~cliquecolor.errors.OracleRefusal`"""
    payload = {"message": str(error),
               "size": error.size,
               "bound": error.bound,
               "diagnostics": getattr(error, "diagnostics", {})}
    return _assemble(g, "refusal", payload, {} if engine_config is None else engine_config)


def dumps(cert):
    """Serialize a certificate; identical certificates give identical text"""
    return json.dumps(cert, sort_keys=True, indent=2) + "\n"


def loads(text):
    """Parse certificate text

    Raises
    ------
    :class:`~cliquecolor.errors.ParseError`
        If the text is not JSON or lacks a certificate key
    """
    try:
        cert = json.loads(text)
    except ValueError as e:
        raise ParseError(None, "certificate is not valid JSON: %s" % e)
    if not isinstance(cert, dict):
        raise ParseError(None, "certificate must be a JSON object")
    missing = [X for X in ("kind", "graph_hash", "engine_config", "payload") if X not in cert]
    if len(missing) > 0:
        raise ParseError(None, "certificate lacks keys %s" % ", ".join(missing))
    if cert["kind"] not in KINDS:
        raise ParseError(None, "unknown certificate kind '%s'" % cert["kind"])
    return cert


def _r_vector(engine_config):
    value = engine_config.get("r_vector")
    if value is None:
        return None
    if isinstance(value, str):
        return RVector.parse(value)
    return RVector(value)


def palette_limit(g, engine_config):
    """Return the most colors a coloring certificate for `g` may use

    That is ``Delta - 1``, or ``sum(r)`` for engine runs that record an
    r-vector.
    """
    r = _r_vector(engine_config)
    if r is not None:
        return r.total
    return max(g.max_degree() - 1, 0)


def required_size(g, kind, engine_config):
    """Return the smallest clique a ``clique`` or ``high_clique`` certificate
    for `g` must hold

    Parameters
    ----------
    g : :class:`~cliquecolor.graph.Graph`

    kind : str

    engine_config : dict
        Its ``mode`` and ``r_vector`` entries select the promise

    Returns
    -------
    int
        ``Delta - 5`` for high cliques. Otherwise
        :func:`~cliquecolor.reduction.declared_bound` for pipeline runs, and
        ``Delta - max(r)`` (theorem 1) or ``sum(r) + 1`` (theorem 2) for
        engine runs
    """
    delta = g.max_degree()
    if kind == "high_clique":
        return delta - 5
    mode = engine_config.get("mode", "theorem1")
    r = _r_vector(engine_config)
    if r is None:
        return declared_bound(delta, mode)
    return r.total + 1 if mode == "theorem2" else delta - max(r)


def check_certificate(g, cert):
    """Re-verify a certificate against a graph

    Parameters
    ----------
    g : :class:`~cliquecolor.graph.Graph`

    cert : dict

    Returns
    -------
    str
        :data:`VERIFIED`, :data:`HASH_MISMATCH` or :data:`INVALID`
    """
    if cert["graph_hash"] != g.content_hash():
        return HASH_MISMATCH
    payload = cert["payload"]
    engine_config = cert["engine_config"]
    try:
        if cert["kind"] == "coloring":
            colors = {int(v): int(c) for v, c in payload["colors"].items()}
            palette = int(payload["palette_size"])
            ok = palette <= palette_limit(g, engine_config) and verify(g, Coloring(colors, palette))
        elif cert["kind"] in ("clique", "high_clique"):
            clique = CliqueCertificate([int(X) for X in payload["vertices"]], len(payload["vertices"]),
                                       high_only=cert["kind"] == "high_clique")
            needed = required_size(g, cert["kind"], engine_config)
            ok = len(set(payload["vertices"])) == len(payload["vertices"]) and verify(g, clique) \
                 and int(payload["bound"]) >= needed and len(clique) >= int(payload["bound"])
        else:
            ok = True
    except (AttributeError, KeyError, TypeError, ValueError, StructureError):
        ok = False
    return VERIFIED if ok else INVALID
