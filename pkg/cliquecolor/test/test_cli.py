#!/usr/bin/env python
"""Test suite for :mod:`cliquecolor.cli`

The command-line program is called through :func:`~cliquecolor.cli.main`,
checking exit status and output.
"""
import json

import pytest

from cliquecolor import cli
from cliquecolor.config import reset_config
from cliquecolor.test.cases.fixtures import case_path

__author__ = "Joshua Griffin Dunn"
__date__ = "2026-10-17"


class TestCli():
    """Test case for subcommands and exit status"""

    @classmethod
    def setup_class(cls):
        # (argv, expected exit status, expected standard output)
        cls.choosable_cases = [(["choosable", "c4", "--uniform", "2"], cli.EXIT_OK, "true\n"),
                               (["choosable", "c5", "--uniform", "2"], cli.EXIT_FALSE, "false\n"),
                               (["choosable", "c5", "--uniform", "3"], cli.EXIT_OK, "true\n"),
                               (["choosable", "join:k4:e3", "--d1"], cli.EXIT_FALSE, "false\n"),
                               (["choosable", "c4", "--sizes", "2,2,2,2", "--naive"], cli.EXIT_OK, "true\n"),
                               (["choosable", "k11", "--d1"], cli.EXIT_REFUSAL, ""),
                               (["choosable", "c4", "--sizes", "2,2,2"], cli.EXIT_PARSE, ""),
                               (["choosable", "c4", "--sizes", "2,x,2,2"], cli.EXIT_PARSE, ""),
                               (["choosable", "q5", "--d1"], cli.EXIT_PARSE, ""),
                               ]

    @staticmethod
    def check_main(argv, expected, capsys):
        found = cli.main(argv)
        out, err = capsys.readouterr()
        assert found == expected, "'%s': expected exit status %s, got %s. stderr:\n%s" \
                                  % (" ".join(argv), expected, found, err)
        return out, err

    def test_choosable(self, capsys):
        for argv, expected, output in self.choosable_cases:
            out, _ = self.check_main(argv, expected, capsys)
            assert out == output, "'%s': expected output %r, got %r" % (" ".join(argv), output, out)

    def test_choosable_needs_one_size_option(self, capsys):
        for argv in (["choosable", "c4"], ["choosable", "c4", "--d1", "--uniform", "2"]):
            with pytest.raises(SystemExit):
                cli.main(argv)
        capsys.readouterr()

    def test_no_subcommand(self, capsys):
        self.check_main([], cli.EXIT_PARSE, capsys)

    def test_color_verify_flow(self, tmp_path, capsys):
        cert_file = str(tmp_path / "k5.json")
        self.check_main(["color-or-clique", "k5", "--output", cert_file], cli.EXIT_OK, capsys)
        with open(cert_file) as fh:
            cert = json.load(fh)
        assert cert["kind"] == "clique" and cert["payload"]["vertices"] == [0, 1, 2, 3, 4]

        out, _ = self.check_main(["verify", "k5", cert_file], cli.EXIT_OK, capsys)
        assert out == "verified\n"
        out, _ = self.check_main(["verify", "c5", cert_file], cli.EXIT_HASH_MISMATCH, capsys)
        assert out == "hash-mismatch\n"

        cert["payload"]["vertices"] = [0, 1, 2]
        with open(cert_file, "w") as fh:
            json.dump(cert, fh)
        out, _ = self.check_main(["verify", "k5", cert_file], cli.EXIT_INVALID, capsys)
        assert out == "invalid\n"

        # a triangle with a lowered bound meets theorem 1 on K5, not theorem 2
        cert["payload"] = {"vertices": [0, 1, 2], "bound": 1}
        with open(cert_file, "w") as fh:
            json.dump(cert, fh)
        self.check_main(["verify", "k5", cert_file], cli.EXIT_OK, capsys)
        cert["engine_config"]["mode"] = "theorem2"
        with open(cert_file, "w") as fh:
            json.dump(cert, fh)
        out, _ = self.check_main(["verify", "k5", cert_file], cli.EXIT_INVALID, capsys)
        assert out == "invalid\n"

        with open(cert_file, "w") as fh:
            fh.write("{")
        self.check_main(["verify", "k5", cert_file], cli.EXIT_PARSE, capsys)
        self.check_main(["verify", "k5", str(tmp_path / "missing.json")], cli.EXIT_PARSE, capsys)

    def test_color_dimacs_file(self, capsys):
        out, _ = self.check_main(["color-or-clique", case_path("o5.col")], cli.EXIT_OK, capsys)
        cert = json.loads(out)
        assert cert["kind"] == "clique" and cert["engine_config"]["mode"] == "theorem1"

    def test_color_parse_errors(self, capsys):
        _, err = self.check_main(["color-or-clique", case_path("bad_count.col")], cli.EXIT_PARSE, capsys)
        assert "[cliquecolor]" in err
        self.check_main(["color-or-clique", "lex:4:2"], cli.EXIT_PARSE, capsys)
        self.check_main(["color-or-clique", "k5", "--r-vector", "2,x"], cli.EXIT_PARSE, capsys)

    def test_color_with_r_vector(self, capsys):
        out, _ = self.check_main(["color-or-clique", "k5", "--r-vector", "2,2"], cli.EXIT_OK, capsys)
        cert = json.loads(out)
        assert cert["kind"] == "clique" and len(cert["payload"]["vertices"]) == 5
        assert cert["engine_config"]["research"] is True

    def test_color_refusal(self, capsys, monkeypatch):
        monkeypatch.setenv("CLIQUECOLOR_MAX_EXACT", "5")
        reset_config()
        try:
            out, err = self.check_main(["color-or-clique", "o5", "--no-fast-path"], cli.EXIT_REFUSAL, capsys)
        finally:
            reset_config()
        cert = json.loads(out)
        assert cert["kind"] == "refusal" and cert["payload"]["bound"] == 5
        assert "refused" in err
        assert "\n    delta: 5\n" in err and "\n    mode: theorem1\n" in err

    def test_suite(self, capsys):
        out, _ = self.check_main(["suite", "mixed", "--count", "2"], cli.EXIT_OK, capsys)
        assert out.startswith("suite mixed: 4 passed, 0 failed")

    def test_suite_show_all(self, tmp_path, capsys):
        output = str(tmp_path / "report.txt")
        self.check_main(["suite", "transversal", "--count", "3", "--show-all", "--output", output],
                        cli.EXIT_OK, capsys)
        with open(output) as fh:
            lines = fh.read().split("\n")
        assert lines[0].startswith("suite transversal: 3 passed")
        assert len([X for X in lines if X.rstrip().endswith("pass")]) == 3
