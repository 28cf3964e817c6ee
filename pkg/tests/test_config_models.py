import os
import sys
import tempfile
import textwrap
import unittest


class TestConfigModels(unittest.TestCase):
    def setUp(self):
        # Allow importing from src without installation
        repo_root = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))
        src_path = os.path.join(repo_root, "src")
        if src_path not in sys.path:
            sys.path.insert(0, src_path)

    def _write_yaml(self, content: str) -> str:
        fd, path = tempfile.mkstemp(suffix=".yaml")
        os.close(fd)
        with open(path, "w", encoding="utf-8") as f:
            f.write(textwrap.dedent(content))
        self.addCleanup(os.remove, path)
        return path

    def test_defaults_without_file(self):
        from flatmodels.config.loader import load_config

        cfg = load_config()
        self.assertEqual(cfg.oracle.max_e, 8)
        self.assertEqual(cfg.oracle.max_candidates, 10**8)
        self.assertFalse(cfg.oracle.prune)
        self.assertEqual(cfg.output.format, "plain")
        self.assertEqual(set(cfg.suites), {"desk", "quick"})
        self.assertEqual(cfg.suites["desk"].sweep_e_max, 40)

    def test_load_basic_yaml(self):
        from flatmodels.config.loader import load_config

        yaml_path = self._write_yaml(
            """
            oracle:
              max_e: 6
              workers: 4
            output:
              format: json
            """
        )
        cfg = load_config(yaml_path)
        self.assertEqual(cfg.oracle.max_e, 6)
        self.assertEqual(cfg.oracle.workers, 4)
        self.assertEqual(cfg.output.format, "json")
        # untouched defaults survive
        self.assertEqual(cfg.oracle.max_candidates, 10**8)

    def test_suite_fields_merge_over_builtins(self):
        from flatmodels.config.loader import load_config

        yaml_path = self._write_yaml(
            """
            suites:
              desk:
                sweep_e_max: 10
              tiny:
                sweep_primes: [3]
                sweep_e_max: 3
                singleton_primes: [3]
                example_primes: [3]
                aut_primes: [3]
                oracle_runs:
                  - {p: 3, e_max: 2}
            """
        )
        cfg = load_config(yaml_path)
        self.assertEqual(cfg.suites["desk"].sweep_e_max, 10)
        self.assertEqual(cfg.suites["desk"].sweep_primes, [3, 5, 7, 11, 13])
        self.assertEqual(cfg.suites["tiny"].oracle_runs[0].e_max, 2)
        self.assertEqual(cfg.suites["tiny"].oracle_runs[0].k, 1)

    def test_cli_set_overrides_take_highest_precedence(self):
        from flatmodels.config.loader import load_config

        yaml_path = self._write_yaml(
            """
            oracle:
              max_e: 6
            """
        )
        cfg = load_config(yaml_path, set_overrides=["oracle.max_e=7"])
        self.assertEqual(cfg.oracle.max_e, 7)

    def test_cli_set_parses_types_with_yaml(self):
        from flatmodels.config.loader import load_config

        sets = [
            "oracle.prune=true",
            "oracle.max_candidates=1000",
            "suites.quick.oracle_runs=[{p: 5, e_max: 2, prune: true}]",
        ]
        cfg = load_config(set_overrides=sets)
        self.assertTrue(cfg.oracle.prune)
        self.assertEqual(cfg.oracle.max_candidates, 1000)
        self.assertTrue(cfg.suites["quick"].oracle_runs[0].prune)

    def test_invalid_values_raise_config_error(self):
        from flatmodels.config.loader import load_config
        from flatmodels.core.errors import ConfigError

        with self.assertRaises(ConfigError):
            load_config(set_overrides=["oracle.max_e=0"])
        with self.assertRaises(ConfigError):
            load_config(set_overrides=["oracle.unknown=1"])
        with self.assertRaises(ConfigError):
            load_config(set_overrides=["oracle.max_e"])
        with self.assertRaises(ConfigError):
            load_config("/nonexistent/flatmodels.yaml")

    def test_non_mapping_yaml_is_rejected(self):
        from flatmodels.config.loader import load_config
        from flatmodels.core.errors import ConfigError

        with self.assertRaises(ConfigError):
            load_config(self._write_yaml("- just\n- a list\n"))

    def test_example_settings_file_loads(self):
        from flatmodels.config.loader import load_config

        repo_root = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))
        cfg = load_config(os.path.join(repo_root, "flatmodels.example.yaml"))
        self.assertIn("smoke", cfg.suites)
        self.assertEqual(cfg.suites["smoke"].oracle_runs[1].k, 2)
        self.assertEqual(cfg.suites["desk"].oracle_runs, load_config().suites["desk"].oracle_runs)

    def test_parse_set_overrides_nested(self):
        from flatmodels.config.loader import parse_set_overrides

        self.assertEqual(
            parse_set_overrides(["a.b=1", "a.c=x", "d=[1, 2]"]),
            {"a": {"b": 1, "c": "x"}, "d": [1, 2]},
        )


class TestRunConfig(unittest.TestCase):
    def setUp(self):
        repo_root = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))
        src_path = os.path.join(repo_root, "src")
        if src_path not in sys.path:
            sys.path.insert(0, src_path)

    def test_single_invocation(self):
        from flatmodels.config.models import RunConfig

        cfg = RunConfig(subcommand="count", p=[5], e=4)
        self.assertEqual(cfg.k, [1])
        self.assertEqual(cfg.e_range(), (4, 4))

    def test_table_range(self):
        from flatmodels.config.models import RunConfig

        cfg = RunConfig(subcommand="table", p=[3, 5], e_min=1, e_max=4)
        self.assertEqual(cfg.e_range(), (1, 4))

    def test_rejections(self):
        from pydantic import ValidationError

        from flatmodels.config.models import RunConfig

        bad = [
            dict(subcommand="count", e=4),
            dict(subcommand="count", p=[3, 5], e=4),
            dict(subcommand="count", p=[5]),
            dict(subcommand="count", p=[5], e=4, q=25, k=[2]),
            dict(subcommand="table", p=[5], e_min=4),
            dict(subcommand="table", p=[5], e_min=4, e_max=2),
            dict(subcommand="frobnicate", p=[5], e=4),
            dict(subcommand="count", p=[5], e=4, format="xml"),
        ]
        for kwargs in bad:
            with self.subTest(kwargs=kwargs):
                with self.assertRaises(ValidationError):
                    RunConfig(**kwargs)

    def test_verify_needs_no_prime(self):
        from flatmodels.config.models import RunConfig

        self.assertEqual(RunConfig(subcommand="verify").suite, "desk")


if __name__ == "__main__":
    unittest.main()
