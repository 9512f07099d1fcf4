"""
Unit tests for the identity catalog, the runner and the report models.
"""

import json
import sys
import tempfile
import unittest
from pathlib import Path

src_path = str(Path(__file__).parent.parent / 'src')
sys.path.insert(0, src_path)

from algebra.polyring import IntPoly  # noqa: E402
from config import Settings, configure  # noqa: E402
from exceptions import UnknownCheckError  # noqa: E402
from polynomials.derivative import DerivativePolynomialTable, p_poly  # noqa: E402
from tools.table_cache import Family, TableCache  # noqa: E402
from verification.catalog import CATALOG, CHECK_ORDER, Scale, entry  # noqa: E402
from verification.models import CheckStatus, IdentityCheck, VerificationReport, Witness  # noqa: E402
from verification.runner import faulty_table, run, run_all  # noqa: E402


class VerificationTestCase(unittest.TestCase):

    def setUp(self):
        self.previous_settings = configure(Settings())

    def tearDown(self):
        configure(self.previous_settings)


class TestCatalog(unittest.TestCase):
    """Test the catalog registry."""

    def test_every_id_registered_once(self):
        self.assertEqual(len(CHECK_ORDER), 25)
        self.assertEqual(set(CHECK_ORDER), set(CATALOG))

    def test_entry_lookup(self):
        self.assertIs(entry("my2").scale, Scale.FORMULA)
        self.assertEqual(entry("my2").n_min, 0)
        self.assertIs(entry("hof1").scale, Scale.SERIES)
        with self.assertRaises(UnknownCheckError):
            entry("nosuch")


class TestRunner(VerificationTestCase):
    """Test single runs, ranges and skips."""

    def test_pan1_through_seven(self):
        result = run("pan1", n_min=1, n_max=7, profile="full")
        self.assertEqual(result.status, CheckStatus.PASS)
        self.assertEqual(result.params, {"n_min": 1, "n_max": 7})

    def test_my2_from_zero(self):
        result = run("my2", n_min=0, n_max=6)
        self.assertTrue(result.passed)

    def test_formula_checks_beyond_enumeration(self):
        """Above the bounds the formula checks fall back to generating functions."""
        settings = Settings().with_bounds(type_a=6, type_b=5)
        for check_id in ("my1", "my2", "rec_prop", "rec_diff", "b_n0_snake"):
            result = run(check_id, n_max=12, settings=settings)
            self.assertTrue(result.passed, msg=f"{check_id}: {result.witness}")

    def test_series_params(self):
        result = run("hof1", order=6)
        self.assertTrue(result.passed)
        self.assertEqual(result.params, {"order": 6, "x_order": 8})

    def test_skip_above_bound(self):
        result = run("pan1", n_max=5, settings=Settings().with_bounds(type_a=4))
        self.assertEqual(result.status, CheckStatus.SKIPPED)
        self.assertIn("bound", result.reason)
        result = run("key", n_max=8)
        self.assertEqual(result.status, CheckStatus.SKIPPED)

    def test_profile_caps_enumeration_bounds(self):
        result = run("pan2", n_max=7)
        self.assertEqual(result.status, CheckStatus.SKIPPED)
        self.assertIn("bound 5", result.reason)
        result = run("pan1", n_max=7)
        self.assertIn("bound 6", result.reason)
        configure(Settings().with_bounds(type_b=4))
        self.assertIn("bound 4", run("pan2", n_max=5).reason)

    def test_invalid_ranges(self):
        with self.assertRaises(ValueError):
            run("my1", n_min=0)
        with self.assertRaises(ValueError):
            run("pan1", n_min=5, n_max=3)
        with self.assertRaises(ValueError):
            run("pan1", profile="thorough")
        with self.assertRaises(UnknownCheckError):
            run("nosuch")

    def test_run_restores_state(self):
        before = p_poly(3)
        run("my1", n_max=4, tables=faulty_table("P", 3, 0))
        self.assertEqual(p_poly(3), before)


class TestMutations(VerificationTestCase):
    """A corrupted table entry must be caught at its n."""

    def test_faulty_q3(self):
        result = run("my2", n_min=0, n_max=6, tables=faulty_table("Q", 3, 1))
        self.assertTrue(result.failed)
        self.assertEqual(result.witness.n, 3)

    def test_faulty_p3(self):
        table = faulty_table("P", 3, 0)
        for check_id in ("my1", "A1"):
            result = run(check_id, n_max=6, tables=table)
            self.assertTrue(result.failed, msg=check_id)
            self.assertEqual(result.witness.n, 3)
        result = run("hof1", order=6, tables=table)
        self.assertTrue(result.failed)
        self.assertEqual(result.witness.n, 3)

    def test_coefficient_above_degree_window(self):
        for family, check_id in (("Q", "my2"), ("P", "my1")):
            table = faulty_table(family, 3, 5)
            result = run(check_id, n_max=6, tables=table)
            self.assertTrue(result.failed, msg=check_id)
            self.assertEqual(result.witness.n, 3)
            self.assertIn("degree", result.witness.detail)

            report = run_all("quick", tables=table)
            self.assertEqual(len(report.checks), 25)
            self.assertFalse(report.ok)
            failed = {check.id: check.witness.n for check in report.checks if check.failed}
            self.assertEqual(failed[check_id], 3)

    def test_faulty_table_shape(self):
        table = faulty_table("Q", 2, 5, delta=-2)
        self.assertEqual(table.q(2), IntPoly((1, 0, 2, 0, 0, -2)))


class TestRunAll(VerificationTestCase):
    """Test whole-catalog runs."""

    def test_quick_profile(self):
        report = run_all("quick")
        self.assertEqual(len(report.checks), 25)
        self.assertEqual([check.id for check in report.checks], list(CHECK_ORDER))
        failures = [(check.id, check.witness) for check in report.checks if check.failed]
        self.assertEqual(failures, [])
        self.assertTrue(report.ok)

    def test_selection_keeps_catalog_order(self):
        report = run_all("quick", check_ids=["rec_diff", "L1"])
        self.assertEqual([check.id for check in report.checks], ["L1", "rec_diff"])
        with self.assertRaises(UnknownCheckError):
            run_all("quick", check_ids=["L1", "nosuch"])

    def test_cache_receives_tables(self):
        with tempfile.TemporaryDirectory() as directory:
            cache = TableCache(Path(directory) / "tables.json")
            run_all("quick", check_ids=["my1"], cache=cache)
            self.assertEqual(cache.get(Family.P, 3), IntPoly((2, 0, 8, 0, 6)))
            self.assertTrue(cache.dirty)


class TestReportModels(unittest.TestCase):
    """Test the pydantic report schema."""

    def test_big_integers_are_strings(self):
        witness = Witness(n=30, position=2, expected=2 ** 70, actual=0)
        self.assertEqual(witness.expected, str(2 ** 70))
        dumped = json.loads(witness.model_dump_json())
        self.assertEqual(dumped["actual"], "0")

    def test_report_round_trip(self):
        report = VerificationReport(profile="quick", checks=[
            IdentityCheck(id="L1", params={"n_min": 1, "n_max": 6}, status=CheckStatus.PASS),
            IdentityCheck(id="key", params={"n_min": 1, "n_max": 9}, status=CheckStatus.SKIPPED,
                          reason="n_max = 9 exceeds the type B enumeration bound 7"),
        ])
        restored = VerificationReport.model_validate_json(report.model_dump_json())
        self.assertEqual(restored, report)
        self.assertTrue(restored.ok)
        self.assertEqual(restored.counts(), {"pass": 1, "fail": 0, "skipped": 1})
        self.assertTrue(report.to_text().endswith("1 passed, 0 failed, 1 skipped"))

    def test_failed_report(self):
        report = VerificationReport(checks=[
            IdentityCheck(id="my2", status=CheckStatus.FAIL,
                          witness=Witness(n=3, position=1, expected=13, actual=12, detail="mismatch")),
        ])
        self.assertFalse(report.ok)
        self.assertIn("witness n=3 k=1: expected 13 got 12 (mismatch)", report.to_text())

    def test_schema(self):
        schema = VerificationReport.model_json_schema()
        self.assertIn("checks", schema["properties"])
        self.assertIn("version", schema["properties"])


if __name__ == '__main__':
    unittest.main()
