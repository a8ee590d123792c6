import json
import unittest
from fractions import Fraction
from unittest import mock

from macdonald_lr.combinatorics.partitions import Composition, Partition
from macdonald_lr.combinatorics.tableaux import kostka, unique_ssyt
from macdonald_lr.errors import ParseError
from macdonald_lr.factorization import stanley
from macdonald_lr.verifier import verifier
from macdonald_lr.verifier.verifier import (
    Instance,
    InstanceResult,
    ReportGenerator,
    SweepConfig,
    SweepReport,
)

SMALL = SweepConfig(max_mu_size=2, lambda_box=(2, 2))
POINT = (Fraction(3, 10), Fraction(7, 10))


class TestSweepConfig(unittest.TestCase):
    def test_defaults(self):
        config = SweepConfig()
        self.assertEqual(config.max_mu_size, 5)
        self.assertEqual(config.lambda_box, (4, 4))
        self.assertEqual(
            config.eval_points, ((Fraction(1, 3), Fraction(2, 5)),)
        )
        self.assertEqual(config.output, "table")

    def test_validation(self):
        for kwargs in (
            {"max_mu_size": 0},
            {"lambda_box": (0, 2)},
            {"workers": 0},
            {"output": "xml"},
            {"mu_shape": "square"},
            {"suite": "random"},
            {"max_entry": 0},
        ):
            with self.assertRaises(ParseError):
                SweepConfig(**kwargs)

    def test_from_config(self):
        section = {
            "max_mu_size": 3,
            "lambda_box": "3x2",
            "eval_points": ["q=1/2,t=1/3"],
            "positivity_point": [0.3, 0.7],
            "workers": 2,
            "mu_shape": "row",
        }
        config = SweepConfig.from_config(section, workers=1, output=None)
        self.assertEqual(config.max_mu_size, 3)
        self.assertEqual(config.lambda_box, (3, 2))
        self.assertEqual(
            config.eval_points, ((Fraction(1, 2), Fraction(1, 3)),)
        )
        self.assertEqual(
            config.positivity_point, (Fraction(3, 10), Fraction(7, 10))
        )
        self.assertEqual(config.workers, 1)
        self.assertEqual(config.output, "table")
        self.assertEqual(config.mu_shape, "row")

    def test_to_json(self):
        self.assertEqual(
            SMALL.to_json(),
            {
                "suite": "agreement",
                "max_mu_size": 2,
                "lambda_box": [2, 2],
                "eval_points": [["1/3", "2/5"]],
                "positivity_point": ["3/10", "7/10"],
                "workers": 1,
                "mu_shape": "any",
            },
        )


class TestInstances(unittest.TestCase):
    def test_unique_weights(self):
        pairs = verifier.unique_weights(SMALL)
        self.assertTrue(pairs)
        for mu, chi, tableau in pairs:
            self.assertEqual(len(chi), 2)
            self.assertEqual(kostka(mu, chi), 1)
            self.assertEqual(tableau.shape, mu)

    def test_instances_are_valid(self):
        instances = list(verifier.iter_instances(SMALL))
        self.assertEqual(len(instances), len(set(instances)))
        for instance in instances:
            self.assertTrue(instance.nu.contains(instance.lam))
            self.assertEqual(
                instance.nu.size, instance.lam.size + instance.mu.size
            )
            self.assertEqual(instance.tableau.shape, instance.mu)

    def test_column_shape(self):
        config = SweepConfig(
            max_mu_size=3, lambda_box=(3, 2), mu_shape="column"
        )
        mus = {i.mu for i in verifier.iter_instances(config)}
        self.assertEqual(
            mus, {Partition.of(1), Partition.of(1, 1), Partition.of(1, 1, 1)}
        )


class TestCheckInstance(unittest.TestCase):
    def test_nonzero_instance(self):
        result = verifier.check_instance(
            Instance(Partition.of(1), Partition.of(2), Partition.of(2, 1)),
            SMALL,
        )
        self.assertTrue(result.passed)
        self.assertFalse(result.zero)
        self.assertEqual(set(result.checks), set(verifier.CHECKS))

    def test_zero_instance_skips_stanley(self):
        result = verifier.check_instance(
            Instance(Partition.of(1, 1), Partition.of(2), Partition.of(2, 2)),
            SMALL,
        )
        self.assertTrue(result.passed)
        self.assertTrue(result.zero)
        self.assertNotIn("stanley", result.checks)

    def test_precondition_is_recorded(self):
        result = verifier.check_instance(
            Instance(Partition(), Partition.of(2, 1), Partition.of(1, 1, 1)),
            SMALL,
        )
        self.assertFalse(result.passed)
        self.assertEqual(result.failed_checks, ["error"])
        self.assertIn("KostkaNotOneError", result.error)


    def test_found_tableau_is_reused(self):
        lam, mu, nu = Partition.of(1), Partition.of(2), Partition.of(2, 1)
        tableau = unique_ssyt(mu, Composition.of(1, 1))
        with_tableau = Instance(lam, mu, nu, tableau)
        self.assertEqual(with_tableau, Instance(lam, mu, nu))
        with mock.patch.object(verifier, "formula_input") as mock_input:
            with mock.patch.object(stanley, "formula_input") as mock_other:
                result = verifier.check_instance(with_tableau, SMALL)
        mock_input.assert_not_called()
        mock_other.assert_not_called()
        self.assertTrue(result.passed)


class TestPositivity(unittest.TestCase):
    def test_window_is_positive(self):
        self.assertTrue(
            verifier.window_strips_positive(
                Partition.of(1), Partition.of(3, 2, 1), POINT
            )
        )
        self.assertTrue(
            verifier.window_strips_positive(
                Partition(), Partition.of(3, 3, 3), POINT, 3
            )
        )

    @mock.patch.object(verifier, "_strip_positive", return_value=False)
    def test_negative_strip_fails(self, mock_strip):
        check = verifier.window_strips_positive.__wrapped__
        self.assertFalse(check(Partition(), Partition.of(1), POINT))
        mock_strip.assert_called_once_with(
            Partition(), Partition.of(1), POINT
        )

    def test_strips_are_checked_by_kind(self):
        self.assertTrue(
            verifier._strip_positive(
                Partition.of(1), Partition.of(2, 1), POINT
            )
        )
        self.assertTrue(
            verifier._strip_positive(
                Partition.of(1), Partition.of(1, 1, 1), POINT
            )
        )


class TestClassicalSuite(unittest.TestCase):
    CONFIG = SweepConfig(suite="classical", max_total_size=4, max_rows=3)

    def test_instances(self):
        instances = list(verifier.iter_instances(self.CONFIG))
        self.assertEqual(len(instances), len(set(instances)))
        for i in instances:
            self.assertTrue(i.nu.contains(i.lam))
            self.assertTrue(i.nu.contains(i.mu))
            self.assertTrue(i.mu)
            self.assertEqual(i.nu.size, i.lam.size + i.mu.size)
            self.assertLessEqual(i.nu.size, 4)
            self.assertLessEqual(len(i.nu), 3)

    def test_horizontal_strip_meets_the_bound(self):
        result = verifier.check_classical(
            Instance(Partition.of(1), Partition.of(2), Partition.of(2, 1)),
            self.CONFIG,
        )
        self.assertEqual(
            result.checks,
            {"schur": True, "kostka_bound": True, "horizontal_equality": True},
        )

    def test_vertical_strip_has_no_equality_check(self):
        result = verifier.check_classical(
            Instance(
                Partition.of(1), Partition.of(1, 1), Partition.of(1, 1, 1)
            ),
            self.CONFIG,
        )
        self.assertTrue(result.passed)
        self.assertEqual(set(result.checks), {"schur", "kostka_bound"})

    def test_small_sweep_passes(self):
        report = verifier.run_sweep(self.CONFIG)
        self.assertGreater(report.checked, 0)
        self.assertEqual(report.failed, 0)
        counts = report.check_counts()
        self.assertEqual(
            set(counts), {"schur", "kostka_bound", "horizontal_equality"}
        )
        self.assertGreater(counts["horizontal_equality"][1], 0)
        self.assertGreater(report.zero_count, 0)


class TestUniquenessSuite(unittest.TestCase):
    CONFIG = SweepConfig(suite="uniqueness", max_boxes=4, max_entry=3)

    def test_sweep_passes(self):
        report = verifier.run_sweep(self.CONFIG)
        # Shapes of at most three rows times weak compositions of length 3.
        self.assertEqual(report.checked, 1 * 3 + 2 * 6 + 3 * 10 + 4 * 15)
        self.assertEqual(report.failed, 0)

    def test_single_instance(self):
        instance = verifier.WeightInstance(Partition.of(3, 2), (1, 1, 3))
        result = verifier.check_uniqueness(instance, self.CONFIG)
        self.assertEqual(result.checks, {"uniqueness": True})
        self.assertEqual(result.to_json()["weight"], [1, 1, 3])
        self.assertEqual(str(instance), "mu=(3,2) weight=(1,1,3)")


class TestRunSweep(unittest.TestCase):
    def test_small_sweep_passes(self):
        report = verifier.run_sweep(SMALL)
        self.assertGreater(report.checked, 0)
        self.assertEqual(report.failed, 0)
        self.assertGreater(report.zero_count, 0)
        instances = [r.instance for r in report.results]
        self.assertEqual(instances, sorted(instances))

    def test_pool_chunksize(self):
        self.assertEqual(verifier.pool_chunksize(6307, 8), 12)
        self.assertEqual(verifier.pool_chunksize(10, 4), 1)

    def test_workers_do_not_change_results(self):
        config = SweepConfig(max_mu_size=2, lambda_box=(2, 1))
        parallel = SweepConfig(max_mu_size=2, lambda_box=(2, 1), workers=2)
        serial_report = verifier.run_sweep(config)
        parallel_report = verifier.run_sweep(parallel)
        self.assertEqual(serial_report.checked, parallel_report.checked)
        self.assertEqual(
            [r.to_json() for r in serial_report.results],
            [r.to_json() for r in parallel_report.results],
        )


class TestReportGenerator(unittest.TestCase):
    def setUp(self):
        ok = InstanceResult(
            Instance(Partition(), Partition.of(1), Partition.of(1)),
            checks={"numeric": True, "pieri": True},
        )
        bad = InstanceResult(
            Instance(Partition.of(1), Partition.of(1), Partition.of(2)),
            checks={"numeric": True, "pieri": False},
        )
        self.report = SweepReport(SMALL, [ok, bad])

    def test_counts(self):
        self.assertEqual(self.report.checked, 2)
        self.assertEqual(self.report.passed, 1)
        self.assertEqual(self.report.failed, 1)
        counts = self.report.check_counts()
        self.assertEqual(counts["numeric"], (2, 2))
        self.assertEqual(counts["pieri"], (1, 2))
        self.assertEqual(counts["stanley"], (0, 0))

    def test_table_report(self):
        content = ReportGenerator(self.report).generate_report("table")
        self.assertIn("# Verification Report", content)
        self.assertIn("| **Checked** | 2 |", content)
        self.assertIn("| **Pass rate** | 50.00% |", content)
        self.assertIn("| numeric | 2 | 2 | ✅ |", content)
        self.assertIn("| pieri | 1 | 2 | ❌ |", content)
        self.assertIn("## Failures", content)
        self.assertIn("| lam=(1) mu=(1) nu=(2) | pieri |", content)

    def test_json_report(self):
        content = ReportGenerator(self.report).generate_report("json")
        data = json.loads(content)
        self.assertEqual(data["checked"], 2)
        self.assertEqual(data["failed"], 1)
        self.assertEqual(data["failures"][0]["nu"], [2])

    def test_unknown_report_type(self):
        with self.assertRaises(ValueError):
            ReportGenerator(self.report).generate_report("xml")


if __name__ == "__main__":
    unittest.main()
