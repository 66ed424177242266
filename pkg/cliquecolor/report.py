#!/usr/bin/env python
"""Text formatting for suite reports and for the diagnostics the command-line
interface writes to `stderr`
"""
import json

__author__ = "Joshua Griffin Dunn"
__date__ = "2026-10-17"

MAX_RULE = 79


def _cell(item, max_width):
    text = item if isinstance(item, str) else str(item)
    text = " ".join(text.split())
    if max_width is not None and len(text) > max_width:
        text = text[:max_width - 3] + "..."
    return text


def make_rest_table(rows, title=False, indent=0, max_width=None):
    """Make a reStructuredText table from suite rows

    Parameters
    ----------
    rows : list of tuples
        One tuple per table row, each item a cell. Cells that are not strings
        are converted with :func:`str`; runs of whitespace, newlines included,
        collapse to one space.

    title : bool, optional
        If `True`, the first row holds column headings (Default: `False`)

    indent : int, optional
        Number of spaces prepended to each line of output (Default: `0`)

    max_width : int or None, optional
        Cells longer than this are cut and end in ``...`` (Default: no limit)

    Returns
    -------
    list
        Lines of the table, ending with an empty line
    """
    rows = [[_cell(X, max_width) for X in row] for row in rows]
    pad = 4 if title else 0
    widths = [1 + pad + max([len(X) for X in column]) for column in zip(*rows)]
    rule = "    ".join(["=" * X for X in widths])

    def line(cells):
        return "    ".join([X.ljust(W) for X, W in zip(cells, widths)])

    lines = [rule]
    body = rows
    if title:
        lines.append(line(["**%s**" % X for X in rows[0]]))
        lines.append(rule.replace("=", "-"))
        body = rows[1:]
    lines.extend([line(X) for X in body])
    lines.extend([rule, ""])
    if indent > 0:
        lines = [" " * indent + X if len(X) > 0 else X for X in lines]
    return lines


def format_warning(topline, details=None):
    """Format a warning block for `stderr`

    Parameters
    ----------
    topline : str
        One-line summary, printed after a ``[cliquecolor]`` tag

    details : str, dict or None, optional
        Free text, or diagnostics such as a refusal's bounds or a violation
        snapshot. Dictionaries are written one sorted key per line, with
        structured values as compact JSON.

    Returns
    -------
    str
        Tagged summary, indented details and a closing rule as wide as the
        widest line, at most 79 characters
    """
    lines = ["[cliquecolor] %s" % topline]
    if isinstance(details, dict):
        for key in sorted(details):
            value = details[key]
            if not isinstance(value, str):
                value = json.dumps(value, sort_keys=True)
            lines.append("    %s: %s" % (key, value))
    elif details:
        lines.extend(["    %s" % X for X in details.rstrip("\n").split("\n")])
    width = min(max([len(X) for X in lines]), MAX_RULE)
    return "\n".join(lines + ["-" * width]) + "\n"
