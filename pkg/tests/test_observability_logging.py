"""Tests for structured logging and counters."""

import json
import logging
import unittest
from unittest.mock import patch

from flatmodels.observability import metrics
from flatmodels.observability.logging import FlatModelsLogger, get_logger, set_verbose


class TestFlatModelsLogger(unittest.TestCase):
    """Test FlatModelsLogger functionality."""

    def setUp(self):
        self.logger = FlatModelsLogger("flatmodels.test", verbose=True)

    def test_structured_logging(self):
        with patch.object(self.logger.logger, "log") as mock_log:
            self.logger.info("cell enumerated", s=0, t=1, points=5)

            mock_log.assert_called_once()
            level, message = mock_log.call_args[0]
            self.assertEqual(level, logging.INFO)

            log_data = json.loads(message)
            self.assertEqual(log_data["message"], "cell enumerated")
            self.assertEqual(log_data["level"], "INFO")
            self.assertEqual(log_data["context"], {"s": 0, "t": 1, "points": 5})

    def test_no_context_key_without_kwargs(self):
        with patch.object(self.logger.logger, "log") as mock_log:
            self.logger.warning("plain")
            log_data = json.loads(mock_log.call_args[0][1])
            self.assertNotIn("context", log_data)

    def test_operation_context_manager(self):
        with patch.object(self.logger.logger, "log") as mock_log:
            with self.logger.operation("oracle_count", p=3, e=2):
                pass

            self.assertEqual(mock_log.call_count, 2)
            start_data = json.loads(mock_log.call_args_list[0][0][1])
            self.assertIn("Starting oracle_count", start_data["message"])
            self.assertEqual(start_data["context"]["operation"], "oracle_count")
            self.assertEqual(start_data["context"]["p"], 3)

            completion_data = json.loads(mock_log.call_args_list[1][0][1])
            self.assertIn("Completed oracle_count", completion_data["message"])
            self.assertIn("duration_ms", completion_data["context"])

    def test_operation_context_manager_exception(self):
        with patch.object(self.logger.logger, "log") as mock_log:
            with self.assertRaises(ValueError):
                with self.logger.operation("census"):
                    raise ValueError("bad cell")

            self.assertEqual(mock_log.call_count, 2)
            level, message = mock_log.call_args_list[1][0]
            self.assertEqual(level, logging.ERROR)
            error_data = json.loads(message)
            self.assertIn("Operation census failed", error_data["message"])
            self.assertEqual(error_data["context"]["error"], "bad cell")

    def test_get_logger_prefixes_and_caches(self):
        a = get_logger("oracle")
        b = get_logger("flatmodels.oracle")
        self.assertIs(a, b)
        self.assertEqual(a.logger.name, "flatmodels.oracle")

    def test_set_verbose_toggles_package_level(self):
        root = logging.getLogger("flatmodels")
        try:
            set_verbose(True)
            self.assertEqual(root.level, logging.DEBUG)
            set_verbose(False)
            self.assertEqual(root.level, logging.WARNING)
        finally:
            set_verbose(False)


class TestMetrics(unittest.TestCase):
    def setUp(self):
        metrics.clear()

    def tearDown(self):
        metrics.clear()

    def test_inc_and_merge(self):
        metrics.inc("oracle.candidates", 10)
        metrics.inc("oracle.candidates")
        metrics.merge({"oracle.candidates": 4, "oracle.pruned": 2})
        self.assertEqual(metrics.get("oracle.candidates"), 15)
        self.assertEqual(metrics.get_all(), {"oracle.candidates": 15, "oracle.pruned": 2})
        self.assertEqual(metrics.get("verify.pass"), 0)

    def test_snapshot_prefix(self):
        metrics.inc("census.cells", 4)
        metrics.inc("oracle.cells", 9)
        self.assertEqual(metrics.snapshot("oracle."), {"oracle.cells": 9})
        self.assertEqual(list(metrics.snapshot()), ["census.cells", "oracle.cells"])


if __name__ == "__main__":
    unittest.main()
