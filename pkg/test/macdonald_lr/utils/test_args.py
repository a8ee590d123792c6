import argparse
import logging
import unittest
from fractions import Fraction
from pathlib import Path
from unittest import mock

from macdonald_lr.combinatorics.partitions import Composition, Partition
from macdonald_lr.errors import ParseError
from macdonald_lr.utils import args as mlr_args


class ArgsTest(unittest.TestCase):

    def test_add_verbose_argument(self):
        parser = argparse.ArgumentParser()
        mlr_args.add_verbose_argument(parser)
        args = parser.parse_args(["--verbose"])
        self.assertTrue(args.verbose)

    @mock.patch("logging.basicConfig")
    def test_configure_logging_verbose(self, mock_basic_config):
        args = argparse.Namespace(verbose=True)
        mlr_args.configure_logging(args)
        mock_basic_config.assert_called_once_with(level=logging.DEBUG)

    @mock.patch("logging.basicConfig")
    def test_configure_logging_default(self, mock_basic_config):
        args = argparse.Namespace(verbose=False)
        mlr_args.configure_logging(args)
        mock_basic_config.assert_called_once_with(level=logging.INFO)

    def test_parse_eval_point(self):
        expected = (Fraction(1, 3), Fraction(2, 5))
        self.assertEqual(mlr_args.parse_eval_point("q=1/3,t=2/5"), expected)
        self.assertEqual(mlr_args.parse_eval_point("t=2/5, q=1/3"), expected)
        self.assertEqual(mlr_args.parse_eval_point("1/3,2/5"), expected)

    def test_parse_eval_point_errors(self):
        for text in ("q=1/3", "q=1/3,q=2/5", "x=1,t=2", "q=a,t=1", "q=1/0,t=1"):
            with self.assertRaises(ParseError):
                mlr_args.parse_eval_point(text)

    def test_parse_box(self):
        self.assertEqual(mlr_args.parse_box("4,4"), (4, 4))
        self.assertEqual(mlr_args.parse_box("3x5"), (3, 5))
        with self.assertRaises(ParseError):
            mlr_args.parse_box("4")

    def test_coeff_arguments(self):
        args = mlr_args.parse_args(
            ["coeff", "--lambda", "3,2,1,1", "--mu", "3,3,3", "--nu",
             "5,4,4,3", "--eval", "q=1/3,t=2/5"]
        )
        self.assertEqual(args.command, "coeff")
        self.assertEqual(args.lam, Partition.of(3, 2, 1, 1))
        self.assertEqual(args.mu, Partition.of(3, 3, 3))
        self.assertEqual(args.nu, Partition.of(5, 4, 4, 3))
        self.assertEqual(args.method, "both")
        self.assertEqual(args.eval, [(Fraction(1, 3), Fraction(2, 5))])
        self.assertFalse(args.json)

    def test_kostka_arguments(self):
        args = mlr_args.parse_args(
            ["kostka", "--mu", "2,1", "--weight", "1,0,2"]
        )
        self.assertEqual(args.weight, Composition.of(1, 0, 2))

    def test_verify_arguments(self):
        args = mlr_args.parse_args(
            ["verify", "--lambda-box", "3x3", "--mu-shape", "row", "--json",
             "--config", "sweep.yaml"]
        )
        self.assertEqual(args.lambda_box, (3, 3))
        self.assertEqual(args.mu_shape, "row")
        self.assertEqual(args.output, "json")
        self.assertEqual(args.config, Path("sweep.yaml"))
        self.assertIsNone(args.max_mu_size)

    def test_explicit_output_wins_over_json(self):
        args = mlr_args.parse_args(["verify", "--json", "--output", "table"])
        self.assertEqual(args.output, "table")

    @mock.patch("sys.stderr")
    def test_malformed_partition_exits(self, _):
        with self.assertRaises(SystemExit) as ctx:
            mlr_args.parse_args(
                ["coeff", "--lambda", "1,2", "--mu", "1", "--nu", "2,1"]
            )
        self.assertEqual(ctx.exception.code, 2)

    @mock.patch("sys.stderr")
    def test_command_is_required(self, _):
        with self.assertRaises(SystemExit):
            mlr_args.parse_args([])


if __name__ == "__main__":
    unittest.main()
