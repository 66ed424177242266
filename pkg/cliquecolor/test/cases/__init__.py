"""Fixture graphs for the test suite. DIMACS files in this directory are read
with :func:`cliquecolor.test.cases.fixtures.case_path`.
"""
