"""Tests for :mod:`cliquecolor`. Run with ``pytest``; slow acceptance runs are
marked ``functional`` and can be skipped with ``-m "not functional"``.
"""
