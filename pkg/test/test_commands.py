#!/usr/bin/env python
"""Unit tests for the command-line API, reports and export formats."""
from __future__ import absolute_import, division, print_function

import io
import json
import os
import shutil
import tempfile
import unittest

import pandas as pd

import weillib
from weillib import commands, export, verify
# Import all modules as a smoke test
from weillib import (charsum, core, cyclo, lpoly, parallel, params, reports,
                     roots, seqcorr, symfun)
from weillib.charsum import additive_character
from weillib.gf import FieldSpec
from weillib.reports import RunReport, exact_verdict, verdict


class CommandTests(unittest.TestCase):
    """Tests for the do_* command functions."""

    def test_field(self):
        report = commands.do_field(FieldSpec(2, 2), 2)
        self.assertEqual(report.results["q"], 4)
        self.assertEqual(report.results["modulus"], "x^2 + x + 1")
        self.assertEqual(report.results["generator"], FieldSpec(2, 2).x)
        self.assertEqual(len(report.results["table"]), 4)
        self.assertEqual(report.results["table"]["trace"].tolist(),
                         [0, 0, 1, 1])
        self.assertTrue(report.passed)
        self.assertEqual(commands.do_field(FieldSpec(5)).results["modulus"],
                         "x")

    def test_dickson(self):
        report = commands.do_dickson(1, 5)
        self.assertEqual(report.results["polynomial"],
                         "x^5 - 5a x^3 + 5a^2 x")
        self.assertTrue(report.passed)
        self.assertEqual(report.exit_code, 0)

    def test_kloosterman(self):
        field = FieldSpec(3)
        report = commands.do_kloosterman(field, field.one, field.one, 3)
        self.assertEqual(report.results["values"], [-1, 5, 8])
        self.assertTrue(report.passed)

    def test_lpoly(self):
        field = FieldSpec(3)
        report = commands.do_lpoly(field, 2, field.one, field.one,
                                   additive_character(field))
        self.assertTrue(report.passed)
        self.assertEqual(report.results["L"], report.results["closed_form"])
        self.assertEqual(len(report.results["roots"]), 3)

    def test_seq(self):
        field = FieldSpec(2, 2)
        report = commands.do_seq(field, 1, field.one)
        self.assertTrue(report.passed)
        self.assertEqual(report.results["spectrum"][1], 11)
        # Measured only when gcd(u, q-1) > 1
        report = commands.do_seq(field, 3, field.one, strict=False)
        self.assertEqual(report.verdicts, [])

    def test_verify(self):
        report = commands.do_verify(["symfun-properties"])
        self.assertTrue(report.passed)
        self.assertTrue(all(v.check.startswith("symfun-properties/")
                            for v in report.verdicts))
        report = commands.do_verify(verify.resolve_names(["auto"]),
                                    {"p": 2, "e": 2})
        self.assertTrue(report.passed)

    def test_resolve_names(self):
        self.assertEqual(verify.resolve_names(["prop41"]), ["prop41-spectrum"])
        self.assertEqual(verify.resolve_names(["thm11-recursion"]),
                         ["thm11-recursion"])
        self.assertEqual(verify.resolve_names(["auto"]), ["prop41-spectrum"])
        self.assertEqual(verify.resolve_names(["all"]), list(verify.SUITES))
        self.assertEqual(verify.resolve_names(["kloost", "cor37"]),
                         ["cor37-kloosterman"])
        self.assertEqual(len(verify.SUITES), 13)
        self.assertRaises(ValueError, verify.resolve_names, ["bogus"])
        self.assertRaises(ValueError, verify.resolve_names, ["prop"])


class VerifySuiteTests(unittest.TestCase):
    """Each registered suite passes on its built-in configuration."""

    def test_every_suite_passes(self):
        for name in verify.SUITES:
            result = verify.run_suite(name)
            self.assertTrue(result.verdicts, name)
            self.assertTrue(result.passed,
                            [v.check for v in result.verdicts
                             if not v.passed])

    def test_gsum_pipeline_config(self):
        result = verify.run_suite("thm31-pipeline")
        checks = {v.check: v.passed for v in result.verdicts}
        self.assertTrue(checks["q5-gsum-u3-a1-b1/tail"])
        self.assertTrue(checks["q5-gsum-u3-a1-b1/L-vs-sums"])
        self.assertTrue(checks["q5-gsum-u3-a1-b1/predict-s6"])

    def test_quadratic_configs(self):
        result = verify.run_suite("prop38-even")
        self.assertEqual(len(result.results), 49)
        self.assertTrue(result.passed)
        result = verify.run_suite("prop39-odd")
        self.assertIn("q7-a3-b2", result.results)
        self.assertTrue(result.passed)

    def test_generalized_config(self):
        result = verify.run_suite("thm44-generalized")
        self.assertEqual(len(result.results["q5"]["brute_force"]), 7)
        self.assertIn("q5/predict-s7", [v.check for v in result.verdicts])
        self.assertTrue(result.passed)

    def test_bound_config(self):
        result = verify.run_suite("cor33-bound")
        self.assertEqual([v.check for v in result.verdicts],
                         ["q5-u2", "q5-u3", "q7-u2", "q7-u3"])
        self.assertTrue(result.passed)
        # Outside the root-bound hypotheses values are only measured
        result = verify.run_suite("cor33-bound", {"p": 3, "u": 2, "smax": 1})
        self.assertIn("q3-u2-measured", result.results)
        self.assertTrue(result.passed)


class ReportTests(unittest.TestCase):
    """Tests for verdicts, reports and their serialization."""

    def test_verdicts(self):
        report = RunReport("test", None, {"n": 1})
        report.check(verdict("ok", True))
        self.assertEqual(report.exit_code, 0)
        report.check(exact_verdict("same", 2, 3))
        self.assertFalse(report.passed)
        self.assertEqual(report.exit_code, 1)
        self.assertEqual(report.summary(), "1 of 2 checks failed: same")

    def test_json(self):
        field = FieldSpec(3)
        report = commands.do_kloosterman(field, field.one, field.one, 2)
        text = export.fmt_json(report)
        self.assertEqual(text, export.fmt_json(report))
        data = json.loads(text)
        self.assertEqual(data["command"], "kloosterman")
        self.assertEqual(data["version"], weillib.__version__)
        self.assertNotIn("duration", data)
        self.assertEqual(data["results"]["values"][1]["coeffs"],
                         [["5", "1"], ["0", "1"]])
        self.assertTrue(data["passed"])
        report.duration = 1.5
        self.assertEqual(json.loads(export.fmt_json(report))["duration"], 1.5)

    def test_jsonable(self):
        z = cyclo.root_of_unity_power(4, 1)
        self.assertEqual(export.to_jsonable(z)["approx"], [0.0, 1.0])
        self.assertEqual(export.to_jsonable(cyclo.CycloNumber(4, [-1]))
                         ["approx"], [-1.0, 0.0])
        self.assertEqual(export.fmt_fraction(0.5), ["1", "2"])

    def test_empty_report(self):
        data = json.loads(export.fmt_json(RunReport("empty")))
        self.assertEqual(data["verdicts"], [])
        self.assertTrue(data["passed"])
        self.assertIsNone(data["field"])

    def test_csv_quoting(self):
        report = RunReport("quoting")
        report.add("poly", "x^2 + 1, x + 1")
        buf = io.StringIO()
        core.write_dataframe(buf, export.report_table(report))
        self.assertIn('"', buf.getvalue())
        buf.seek(0)
        table = pd.read_csv(buf)
        self.assertEqual(table["name"].tolist(), ["poly"])
        self.assertEqual(json.loads(table["value"][0]), "x^2 + 1, x + 1")

    def test_text(self):
        report = commands.do_dickson(1, 3)
        text = export.fmt_text(report)
        self.assertIn("polynomial: x^3 - 3a x", text)
        self.assertIn("[PASS] series", text)


class CommandLineTests(unittest.TestCase):
    """Tests for argument parsing and the run() shim."""

    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def _run(self, *argv):
        _report, code = commands.run_command(list(argv))
        return code

    def test_json_output(self):
        outfname = os.path.join(self.tmpdir, "dickson.json")
        code = self._run("dickson", "--n", "3", "-o", outfname)
        self.assertEqual(code, 0)
        with open(outfname) as handle:
            data = json.load(handle)
        self.assertEqual(data["results"]["polynomial"], "x^3 - 3a x")
        self.assertEqual(data["parameters"]["n"], 3)

    def test_csv_output(self):
        outfname = os.path.join(self.tmpdir, "sums.csv")
        code = self._run("sum", "S", "--p", "3", "--f", "0,0,1", "--s", "2",
                         "--format", "csv", "-o", outfname)
        self.assertEqual(code, 0)
        table = pd.read_csv(outfname)
        self.assertEqual(list(table.columns),
                         ["s", "exact", "real", "imag", "abs"])
        self.assertEqual(table["s"].tolist(), [1, 2])

    def test_reproducible(self):
        first = os.path.join(self.tmpdir, "first.json")
        second = os.path.join(self.tmpdir, "second.json")
        for outfname in (first, second):
            self._run("sum", "G", "--p", "2", "--e", "2", "--u", "1",
                      "--a", "0:1", "--s", "3", "-o", outfname)
        with open(first) as handle1, open(second) as handle2:
            self.assertEqual(handle1.read(), handle2.read())

    def test_kloosterman_report(self):
        outfname = os.path.join(self.tmpdir, "kloost.json")
        report, code = commands.run_command(
            ["kloosterman", "--p", "3", "--a", "1", "--b", "1",
             "--smax", "3", "-o", outfname])
        self.assertEqual(code, 0)
        self.assertTrue(report.verdicts)
        self.assertTrue(all(v.passed for v in report.verdicts))

    def test_verify_acceptance_id(self):
        outfname = os.path.join(self.tmpdir, "prop41.json")
        report, code = commands.run_command(
            ["verify", "prop41", "--p", "2", "--e", "3", "--u", "2",
             "-o", outfname])
        self.assertEqual(code, 0)
        self.assertTrue(all(v.check.startswith("prop41-spectrum/")
                            for v in report.verdicts))

    def test_timing(self):
        outfname = os.path.join(self.tmpdir, "timed.json")
        self._run("dickson", "--n", "2", "--timing", "-o", outfname)
        with open(outfname) as handle:
            self.assertIn("duration", json.load(handle))

    def test_errors(self):
        self.assertEqual(self._run("field", "--p", "4"), 1)
        self.assertEqual(self._run("field"), 1)
        self.assertEqual(self._run("sum", "G", "--p", "3", "--s", "1"), 1)
        self.assertEqual(self._run("seq", "--p", "3"), 1)
        with self.assertRaises(SystemExit):
            commands.parse_args(["sum", "Q", "--p", "3"])

    def test_enum_bound(self):
        self.assertEqual(self._run("sum", "S", "--p", "2", "--f", "0,1,1",
                                   "--s", "5", "--enum-bound", "16"), 1)
        self.assertEqual(core.enum_bound(10), 10)


if __name__ == '__main__':
    unittest.main(verbosity=2)
