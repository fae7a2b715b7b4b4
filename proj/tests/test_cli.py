"""End-to-end checks of the canred command line: exit codes, determinism, schema."""

import json
import subprocess
import sys
import unittest

from jsonschema import Draft202012Validator

BINARY = None
SCHEMA = None


def run(*args):
    return subprocess.run([BINARY, *args], capture_output=True, text=True, timeout=120)


class ExitCodes(unittest.TestCase):
    cases = [
        (["roots", "G2"], 0),
        (["roots", "X9"], 2),
        (["heights", "E6"], 0),
        (["canonical", "--type", "G2", "--delta", "0,1"], 0),
        (["canonical", "--type", "G2", "--delta", "1,1", "--S", "2"], 1),
        (["canonical", "--type", "G2", "--delta", "-1,0"], 2),
        (["canonical", "--type", "G2", "--delta", "0.5,1"], 2),
        (["chi-check", "--type", "G2", "--all"], 0),
        (["chi-check", "--type", "A3", "--S", "1,2", "--enlargement", "component"], 1),
        (["partition", "--type", "G2", "--S", "1"], 0),
        (["g2", "analyze", "--char", "2"], 0),
        (["g2", "analyze", "--char", "3"], 0),
        (["g2", "analyze", "--char", "4"], 2),
        (["g2", "ledger", "--genus", "2"], 1),
        (["g2", "ledger", "--genus", "1"], 2),
        (["g2", "one-param", "--field", "F4"], 0),
        (["g2", "one-param", "--field", "F9"], 2),
        ([], 2),
    ]

    def test_exit_codes(self):
        for args, code in self.cases:
            with self.subTest(args=args):
                self.assertEqual(run(*args).returncode, code)


class Output(unittest.TestCase):
    def test_roots_g2_rows(self):
        out = run("roots", "G2").stdout
        rows = [line for line in out.splitlines() if line.strip().startswith("(")]
        self.assertEqual(len(rows), 6, out)

    def test_roots_e8_json(self):
        data = json.loads(run("--format", "json", "roots", "E8").stdout)
        self.assertEqual(data["count"], 120)
        self.assertEqual(len(data["positive_roots"]), 120)

    def test_heights_e6(self):
        data = json.loads(run("--format", "json", "heights", "E6").stdout)
        self.assertEqual([r["ht"] for r in data["rows"]], ["10", "9", "7", "5", "7", "10"])

    def test_heights_f4_text(self):
        out = run("heights", "F4").stdout
        self.assertIn("char >= 11", out)

    def test_ledger_slope(self):
        proc = run("--format", "json", "g2", "ledger", "--genus", "2")
        data = json.loads(proc.stdout)
        self.assertEqual(data["ledger"]["slope_value"], "-1/2")
        self.assertEqual(data["status"], "VIOLATION")
        self.assertEqual(data["chain"][-1], "counterexample assembled")

    def test_csv(self):
        out = run("--format", "csv", "heights", "G2").stdout.splitlines()
        self.assertGreaterEqual(len(out), 3)
        self.assertTrue(all("," in line for line in out))

    def test_no_floats(self):
        out = run("--format", "json", "g2", "analyze", "--char", "2").stdout

        def walk(x):
            if isinstance(x, float):
                self.fail(f"float in output: {x}")
            if isinstance(x, dict):
                for v in x.values():
                    walk(v)
            if isinstance(x, list):
                for v in x:
                    walk(v)

        walk(json.loads(out))


class Determinism(unittest.TestCase):
    def test_byte_identical(self):
        for args in (["heights", "E8"], ["--format", "json", "g2", "analyze", "--char", "2"],
                     ["--format", "csv", "chi-check", "--type", "F4"], ["g2", "ledger", "--genus", "3"]):
            with self.subTest(args=args):
                self.assertEqual(run(*args).stdout, run(*args).stdout)

    def test_seed_changes_samples_not_verdicts(self):
        a = json.loads(run("--format", "json", "--seed", "1", "g2", "analyze", "--char", "2").stdout)
        b = json.loads(run("--format", "json", "--seed", "2", "g2", "analyze", "--char", "2").stdout)
        self.assertEqual([v["holds"] for v in a["verdicts"]], [v["holds"] for v in b["verdicts"]])


class Schema(unittest.TestCase):
    commands = [
        ["roots", "G2"],
        ["roots", "E8"],
        ["heights", "E7"],
        ["canonical", "--type", "G2", "--delta", "0,1"],
        ["canonical", "--type", "E6", "--delta", "1,0,0,0,0,2"],
        ["chi-check", "--type", "G2"],
        ["chi-check", "--type", "A3", "--S", "1,2", "--enlargement", "component"],
        ["partition", "--type", "F4", "--S", "2,3"],
        ["g2", "analyze", "--char", "2"],
        ["g2", "analyze", "--char", "5"],
        ["g2", "ledger", "--genus", "2"],
        ["g2", "ledger", "--genus", "4", "--char", "3"],
        ["g2", "one-param", "--field", "F16"],
    ]

    def test_outputs_validate(self):
        with open(SCHEMA) as fh:
            validator = Draft202012Validator(json.load(fh))
        for args in self.commands:
            with self.subTest(args=args):
                data = json.loads(run("--format", "json", *args).stdout)
                errors = sorted(validator.iter_errors(data), key=str)
                self.assertEqual(errors, [], errors[:1])


if __name__ == "__main__":
    BINARY, SCHEMA = sys.argv[1], sys.argv[2]
    unittest.main(argv=[sys.argv[0], "-v"])
