"""
Unit tests for the command line front end and the table cache.
"""

import io
import json
import sys
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from math import factorial
from pathlib import Path

src_path = str(Path(__file__).parent.parent / 'src')
sys.path.insert(0, src_path)

from algebra.polyring import IntPoly  # noqa: E402
from config import ENV_BOUND_A, ENV_BOUND_B, get_settings, load_settings  # noqa: E402
from exceptions import CacheFormatError  # noqa: E402
from main import EXIT_FAILED, EXIT_OK, EXIT_USAGE, main  # noqa: E402
from tools.table_cache import CACHE_VERSION, Family, TableCache  # noqa: E402
from verification.models import VerificationReport  # noqa: E402


def invoke(*argv: str):
    """Run the CLI and return (exit code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


class TestPolyCommand(unittest.TestCase):
    """Test `poly`."""

    def test_known_values(self):
        self.assertEqual(invoke("poly", "A", "3")[:2], (EXIT_OK, "2 2 2\n"))
        self.assertEqual(invoke("poly", "B", "2")[:2], (EXIT_OK, "3 2 3\n"))
        self.assertEqual(invoke("poly", "Bminus", "2")[:2], (EXIT_OK, "3 1\n"))
        self.assertEqual(invoke("poly", "Q", "3")[:2], (EXIT_OK, "0 5 0 6\n"))
        self.assertEqual(invoke("poly", "P", "3")[:2], (EXIT_OK, "2 0 8 0 6\n"))

    def test_routes(self):
        for route in ("brute", "comb", "deriv", "rec", "sets"):
            code, out, _ = invoke("poly", "B", "3", "--route", route)
            self.assertEqual((code, out), (EXIT_OK, "11 13 13 11\n"), msg=route)

    def test_usage_errors(self):
        self.assertEqual(invoke("poly", "A", "3", "--route", "rec")[0], EXIT_USAGE)
        self.assertEqual(invoke("poly", "Z", "3")[0], EXIT_USAGE)
        self.assertEqual(invoke("poly", "A", "-1")[0], EXIT_USAGE)
        self.assertEqual(invoke("poly", "A", "0")[0], EXIT_USAGE)

    def test_enumeration_bound_flag(self):
        code, _, err = invoke("--enum-bound-a", "3", "poly", "A", "4", "--route", "brute")
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("enumeration bound 3", err)
        self.assertEqual(invoke("--enum-bound-a", "3", "poly", "A", "4")[0], EXIT_OK)

    def test_negative_bound_flag(self):
        code, _, err = invoke("--enum-bound-a", "-3", "poly", "A", "3")
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("configuration error", err)
        self.assertEqual(invoke("--enum-bound-b", "-1", "verify", "L1")[0], EXIT_USAGE)

    def test_bplus_from_one(self):
        code, _, err = invoke("poly", "Bplus", "0")
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("B_n^+", err)

    def test_config_is_restored(self):
        before = get_settings()
        invoke("--enum-bound-b", "2", "poly", "B", "1")
        self.assertIs(get_settings(), before)


class TestTableCommand(unittest.TestCase):
    """Test `table` in its three formats."""

    def test_plain(self):
        code, out, _ = invoke("table", "B", "2")
        self.assertEqual((code, out), (EXIT_OK, "1 1\n3 2 3\n"))
        self.assertEqual(invoke("table", "E", "6")[1], "1 1 2 5 16 61\n")
        self.assertEqual(invoke("table", "S", "5")[1], "1 3 11 57 361\n")

    def test_derivative_tables_start_at_zero(self):
        self.assertEqual(invoke("table", "Q", "2")[1], "1\n0 1\n1 0 2\n")

    def test_csv(self):
        code, out, _ = invoke("table", "A", "2", "--format", "csv")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out.splitlines(), ["n,k,value", "1,0,1", "2,0,1", "2,1,1"])

    def test_json(self):
        code, out, _ = invoke("table", "Bplus", "2", "--format", "json")
        self.assertEqual(code, EXIT_OK)
        document = json.loads(out)
        self.assertEqual(document["family"], "Bplus")
        self.assertEqual(document["version"], 1)
        self.assertEqual(document["rows"], [{"n": 1, "coeffs": ["0", "1"]},
                                            {"n": 2, "coeffs": ["0", "1", "3"]}])

    def test_output_is_byte_stable(self):
        first = invoke("table", "B", "9", "--format", "json")
        self.assertEqual(first[0], EXIT_OK)
        self.assertEqual(invoke("table", "B", "9", "--format", "json"), first)
        self.assertEqual(invoke("table", "Q", "9", "--format", "csv"), invoke("table", "Q", "9", "--format", "csv"))

    def test_big_coefficients_are_exact(self):
        self.assertEqual(invoke("table", "E", "20")[1].split()[-1], "370371188237525")
        _, out, _ = invoke("poly", "B", "25")
        self.assertEqual(sum(int(c) for c in out.split()), 2 ** 25 * factorial(25))


class TestVerifyCommand(unittest.TestCase):
    """Test `verify`."""

    def test_single_check(self):
        code, out, _ = invoke("verify", "L1", "--no-header")
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(out.startswith("L1"))
        self.assertIn("1 passed, 0 failed, 0 skipped", out)

    def test_header(self):
        _, out, _ = invoke("verify", "L2")
        self.assertTrue(out.startswith("# altdesc verify profile=quick generated="))

    def test_json_report(self):
        code, out, err = invoke("verify", "rec_prop", "b_n0_snake", "--report", "json")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("# altdesc verify", err)
        report = json.loads(out)
        self.assertEqual([check["id"] for check in report["checks"]], ["rec_prop", "b_n0_snake"])
        self.assertTrue(all(check["status"] == "pass" for check in report["checks"]))

    def test_skipped_checks_do_not_fail(self):
        code, out, _ = invoke("verify", "pan1", "--n-max", "9", "--no-header")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("skipped", out)

    def test_schema(self):
        code, out, _ = invoke("verify", "--schema")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("checks", json.loads(out)["properties"])

    def test_json_report_is_stable(self):
        argv = ("verify", "L1", "rec_diff", "key", "--report", "json", "--no-header")
        first = invoke(*argv)
        self.assertEqual(first[0], EXIT_OK)
        self.assertEqual(invoke(*argv), first)

    def test_json_report_matches_schema(self):
        _, out, _ = invoke("verify", "L1", "rec_diff", "key", "--report", "json", "--no-header")
        schema = VerificationReport.model_json_schema()
        document = json.loads(out)
        self.assertEqual(set(document), set(schema["properties"]))
        self.assertEqual(document["version"], 1)
        check_schema = schema["$defs"]["IdentityCheck"]
        statuses = schema["$defs"]["CheckStatus"]["enum"]
        for check in document["checks"]:
            for key in check_schema["required"]:
                self.assertIn(key, check)
            self.assertLessEqual(set(check), set(check_schema["properties"]))
            self.assertIn(check["status"], statuses)
            self.assertTrue(all(isinstance(value, int) for value in check["params"].values()))
        self.assertEqual([check["status"] for check in document["checks"]], ["pass", "pass", "pass"])
        restored = VerificationReport.model_validate_json(out)
        self.assertEqual(restored.model_dump_json(indent=2), out.rstrip("\n"))

    def test_usage_errors(self):
        self.assertEqual(invoke("verify", "nosuch")[0], EXIT_USAGE)
        self.assertEqual(invoke("verify")[0], EXIT_USAGE)
        self.assertEqual(invoke("verify", "L1", "--all")[0], EXIT_USAGE)
        self.assertEqual(invoke("verify", "L1", "--profile", "thorough")[0], EXIT_USAGE)
        self.assertEqual(invoke("--config", "/nonexistent/altdesc.yaml", "verify", "L1")[0], EXIT_USAGE)

    def test_help(self):
        self.assertEqual(invoke("--help")[0], EXIT_OK)


class TestTableCache(unittest.TestCase):
    """Test the JSON table cache and its use from the CLI."""

    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.path = Path(self.directory.name) / "tables.json"

    def tearDown(self):
        self.directory.cleanup()

    def test_round_trip(self):
        cache = TableCache(self.path)
        cache.put(Family.B, 2, IntPoly((3, 2, 3)))
        cache.put(Family.E, 30, 2 ** 90)
        cache.save()
        restored = TableCache(self.path).load()
        self.assertEqual(restored.get("B", 2), IntPoly((3, 2, 3)))
        self.assertEqual(restored.get(Family.E, 30), 2 ** 90)
        self.assertFalse(restored.dirty)
        document = json.loads(self.path.read_text())
        self.assertEqual(document["entries"]["B"]["2"], ["3", "2", "3"])

    def test_type_checks(self):
        cache = TableCache(self.path)
        with self.assertRaises(TypeError):
            cache.put(Family.E, 3, IntPoly((2,)))
        with self.assertRaises(TypeError):
            cache.put(Family.A, 3, 2)

    def test_missing_file_is_empty(self):
        self.assertEqual(len(TableCache(self.path).load()), 0)

    def test_version_mismatch_is_ignored(self):
        self.path.write_text(json.dumps({"version": CACHE_VERSION + 1, "entries": {"B": {"2": ["9"]}}}))
        with self.assertLogs("tools.table_cache", level="WARNING"):
            cache = TableCache(self.path).load()
        self.assertIsNone(cache.get(Family.B, 2))
        self.assertTrue(cache.dirty)

    def test_malformed_files(self):
        self.path.write_text("{not json")
        with self.assertRaises(CacheFormatError):
            TableCache(self.path).load()
        self.path.write_text(json.dumps({"version": CACHE_VERSION, "entries": {"B": {"2": ["x"]}}}))
        with self.assertRaises(CacheFormatError):
            TableCache(self.path).load()

    def test_cli_uses_cache(self):
        code, out, _ = invoke("--cache", str(self.path), "poly", "B", "2")
        self.assertEqual((code, out), (EXIT_OK, "3 2 3\n"))
        self.assertEqual(TableCache(self.path).load().get(Family.B, 2), IntPoly((3, 2, 3)))

        cache = TableCache(self.path).load()
        cache.put(Family.B, 2, IntPoly((1, 1)))
        cache.save()
        self.assertEqual(invoke("--cache", str(self.path), "poly", "B", "2")[1], "1 1\n")
        self.assertEqual(invoke("--cache", str(self.path), "poly", "B", "2", "--route", "brute")[1], "3 2 3\n")

    def test_corrupt_cache_is_a_usage_error(self):
        self.path.write_text("[]")
        self.assertEqual(invoke("--cache", str(self.path), "poly", "B", "2")[0], EXIT_USAGE)

    def test_cache_entry_above_degree_window_fails_the_check(self):
        cache = TableCache(self.path)
        cache.put(Family.Q, 3, IntPoly((0, 5, 0, 6, 0, 1)))
        cache.save()
        code, out, _ = invoke("--cache", str(self.path), "verify", "--all", "--report", "json", "--no-header")
        self.assertEqual(code, EXIT_FAILED)
        report = VerificationReport.model_validate_json(out)
        self.assertEqual(len(report.checks), 25)
        failed = {check.id: check.witness.n for check in report.checks if check.failed}
        self.assertEqual(failed["my2"], 3)

    def test_verify_fills_cache(self):
        code, _, _ = invoke("verify", "my2", "--no-header", "--cache", str(self.path))
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(TableCache(self.path).load().get(Family.Q, 3), IntPoly((0, 5, 0, 6)))


class TestSettings(unittest.TestCase):
    """Test configuration loading and environment overrides."""

    def test_defaults(self):
        settings = load_settings(env={})
        self.assertEqual((settings.enumeration.type_a, settings.enumeration.type_b), (8, 7))
        self.assertEqual(settings.profile("quick").type_b, 5)

    def test_environment_overrides(self):
        settings = load_settings(env={ENV_BOUND_A: "5", ENV_BOUND_B: " "})
        self.assertEqual(settings.enumeration.type_a, 5)
        self.assertEqual(settings.enumeration.type_b, 7)
        with self.assertRaises(ValueError):
            load_settings(env={ENV_BOUND_B: "many"})
        with self.assertRaises(ValueError):
            load_settings(env={ENV_BOUND_A: "-1"})

    def test_explicit_bounds_are_validated(self):
        settings = load_settings(env={})
        self.assertEqual(settings.with_bounds(type_a=3).enumeration.type_a, 3)
        with self.assertRaises(ValueError):
            settings.with_bounds(type_a=-3)

    def test_yaml_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / "altdesc.yaml"
            path.write_text("enumeration:\n  type_a: 4\nprofiles:\n  quick: {type_a: 3, type_b: 3, "
                            "series_order: 4, formula: 5}\n")
            settings = load_settings(str(path), env={ENV_BOUND_A: "6"})
            self.assertEqual(settings.enumeration.type_a, 6)
            self.assertEqual(settings.profile("quick").formula, 5)
            with self.assertRaises(ValueError):
                settings.profile("full")


if __name__ == '__main__':
    unittest.main()
