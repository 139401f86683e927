import contextlib
import io
import json
import os
import tempfile
import unittest

from pydantic import ValidationError

from src.interface import Citation
from src.interface.EnumModel import BaseKind, OutputFormat, Verdict
from src.interface.ErrorCode import ErrorCode
from src.interface.ReportFormat import ReportFormat
from src.interface.TopologyError import ConstructionError, InvariantViolation, KnotParseError, TopologyError
from src.main import main
from src.pipeline.Pipeline import RunConfig, SweepRange, expected_geography, geography_sweep, resolve_knot, run_pipeline


class TestRunPipeline(unittest.TestCase):

    def run_knot(self, source: str, **kwargs):
        return run_pipeline(RunConfig(knot_source=source, **kwargs))

    def test_trefoil_inconclusive(self):
        report = self.run_knot("table:K-prime")
        self.assertEqual(report.basic_classes.verdict, Verdict.INCONCLUSIVE.value, "|SW| = 1 时不能下结论")
        self.assertEqual((report.geography.chi, report.geography.c), (3, 8))
        self.assertEqual(len(report.basic_classes.classes), 2)
        self.assertEqual(report.manifold.name, "Z_K-prime")

    def test_five_two(self):
        report = self.run_knot("table:5_2")
        self.assertEqual(report.basic_classes.verdict, Verdict.NONSYMPLECTIC_BOTH_ORIENTATIONS.value)
        self.assertEqual([c.sw_magnitude for c in report.basic_classes.classes], [2, 2])
        self.assertEqual([(c.a, c.b) for c in report.basic_classes.classes], [(-2, -2), (2, 2)])
        self.assertEqual(report.basic_classes.count_up_to_sign, 1)
        self.assertIn(Citation.TAUBES, report.citations)
        self.assertIn(Citation.NONSYMPLECTIC_REVERSED, report.citations)
        self.assertIn(Citation.MST, report.citations)
        self.assertEqual(report.citations, sorted(report.citations))

    def test_whitehead_double(self):
        report = self.run_knot("table:Wh-K-prime")
        self.assertEqual(report.basic_classes.verdict, Verdict.TRIVIAL_SW.value)
        self.assertEqual(report.basic_classes.classes, [])
        self.assertFalse(report.knot.maximal_degree)
        self.assertIn("SW_{Z_K} = 0", report.basic_classes.notes)

    def test_unknot_braid(self):
        with self.assertRaises(ConstructionError) as context:
            self.run_knot("braid 2: 1")
        self.assertEqual(context.exception.error_code.exit_code, 4)

    def test_torus_knot_braid(self):
        report = self.run_knot("braid 2: -1 -1 -1 -1 -1")
        self.assertEqual(report.knot.genus, 2)
        self.assertEqual((report.geography.chi, report.geography.c), (4, 16))
        self.assertEqual(report.basic_classes.verdict, Verdict.INCONCLUSIVE.value)

    def test_genus_override(self):
        report = self.run_knot("braid 2: -1 -1 -1", genus_override=2)
        self.assertEqual(report.knot.genus, 2)
        self.assertEqual(report.basic_classes.verdict, Verdict.TRIVIAL_SW.value, "d < g 时 SW_{Z_K} = 0")
        self.assertEqual(report.basic_classes.classes, [])
        self.assertEqual((report.geography.chi, report.geography.c), (4, 16))

    def test_genus_override_above_seifert_genus(self):
        with self.assertRaises(InvariantViolation) as context:
            self.run_knot("table:K-prime", genus_override=2)
        self.assertEqual(context.exception.error_code.exit_code, 3, "亏格超过 Seifert 曲面亏格")

    def test_e4_base(self):
        report = self.run_knot("table:5_2", base=BaseKind.E2N, n=2)
        self.assertEqual(report.base, "E(4)")
        self.assertEqual((report.geography.chi, report.geography.c), expected_geography(2, 1))
        self.assertEqual(report.basic_classes.verdict, Verdict.NONSYMPLECTIC_BOTH_ORIENTATIONS.value)

    def test_verify(self):
        for source in ("table:5_2", "table:K-prime", "table:Wh-K-prime", "table:4_1"):
            report = self.run_knot(source, verify=True)
            self.assertTrue(report.verification.brute_force_matches, source)
            self.assertTrue(report.verification.negation_closed, source)
        whitehead = self.run_knot("table:Wh-K-prime", verify=True)
        self.assertIsNone(whitehead.verification.burau_matches_seifert, "只有一种表示时不做 Burau 校验")
        self.assertTrue(self.run_knot("table:5_2", verify=True).verification.burau_matches_seifert)

    def test_deterministic_json(self):
        first = ReportFormat.dumps(self.run_knot("table:5_2"))
        second = ReportFormat.dumps(self.run_knot("table:5_2"))
        self.assertEqual(first, second, "相同输入的输出应字节级相同")
        self.assertIn("NONSYMPLECTIC_BOTH_ORIENTATIONS", first)

    def test_unknown_source(self):
        with self.assertRaises(KnotParseError) as context:
            resolve_knot("dowker 4 6 2")
        self.assertEqual(context.exception.error_code, ErrorCode.PARSE_KNOT_SOURCE)

    def test_seifert_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "five_two.json")
            with open(path, "w", encoding="utf-8") as f:
                json.dump([[1, 1], [0, 2]], f)
            knot = resolve_knot(f"seifert:{path}")
        self.assertEqual((knot.name, knot.d, knot.a_d), ("five_two", 1, 2))

    def test_config_validation(self):
        with self.assertRaises(ValidationError):
            RunConfig()
        with self.assertRaises(ValidationError):
            RunConfig(knot_source="table:K-prime", n=0)
        with self.assertRaises(ValidationError, msg="纽结来源与 sweep 不能同时给出"):
            RunConfig(knot_source="table:K-prime", geography_sweep=SweepRange.parse("1..2"))


class TestGeographySweep(unittest.TestCase):

    def test_parse(self):
        sweep = SweepRange.parse("1..10,1..4")
        self.assertEqual((sweep.g_min, sweep.g_max, sweep.n_min, sweep.n_max), (1, 10, 1, 4))
        self.assertEqual(SweepRange.parse("2..3").points(), [(1, 2), (1, 3)])
        with self.assertRaises(TopologyError):
            SweepRange.parse("1-3")

    def test_sweep(self):
        rows = geography_sweep(RunConfig(geography_sweep=SweepRange.parse("1..10,1..4")))
        self.assertEqual(len(rows), 40)
        self.assertEqual([(row.n, row.g) for row in rows[:2]], [(1, 1), (1, 2)], "结果按输入顺序排列")
        for row in rows:
            self.assertEqual((row.chi, row.c), (row.chi_expected, row.c_expected), f"n={row.n}, g={row.g}")
            self.assertEqual((row.chi, row.c), (3 * row.n + row.g - 1, 8 * (row.g + row.n - 1)))
            self.assertEqual(row.c, 8 * (row.chi - 2 * row.n), "应落在过 (2n, 0) 的斜率 8 直线上")
        self.assertEqual([(row.chi, row.c) for row in rows[:3]], [(3, 8), (4, 16), (5, 24)])

    def test_empty_range(self):
        with self.assertRaises(TopologyError) as context:
            geography_sweep(RunConfig(geography_sweep=SweepRange.parse("3..1")))
        self.assertEqual(context.exception.error_code, ErrorCode.INVALID_PARAMETER)
        with self.assertRaises(TopologyError):
            geography_sweep(RunConfig(geography_sweep=SweepRange.parse("0..2")))


class TestCommandLine(unittest.TestCase):

    def run_main(self, *argv: str):
        stdout, stderr = io.StringIO(), io.StringIO()
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            code = main(list(argv))
        return code, stdout.getvalue(), stderr.getvalue()

    def test_json_output(self):
        code, out, _ = self.run_main("--knot", "table:5_2")
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertEqual(data["basic_classes"]["verdict"], "NONSYMPLECTIC_BOTH_ORIENTATIONS")
        self.assertEqual(data["geography"]["chi"], 3)

    def test_text_output(self):
        code, out, _ = self.run_main("--knot", "table:K-prime", "--format", "text")
        self.assertEqual(code, 0)
        self.assertIn("INCONCLUSIVE", out)

    def test_csv_sweep(self):
        code, out, _ = self.run_main("--sweep", "1..3,1..1", "--format", "csv")
        self.assertEqual(code, 0)
        lines = out.strip().splitlines()
        self.assertEqual(lines[0], "n,g,chi,c,chi_expected,c_expected")
        self.assertEqual(lines[1:], ["1,1,3,8,3,8", "1,2,4,16,4,16", "1,3,5,24,5,24"])

    def test_out_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "report.json")
            code, out, _ = self.run_main("--knot", "table:K-prime", "--out", path)
            self.assertEqual(code, 0)
            self.assertEqual(out, "")
            with open(path, encoding="utf-8") as f:
                self.assertEqual(json.load(f)["knot"]["name"], "K-prime")

    def test_exit_codes(self):
        cases = [
            (("--knot", "table:9_42"), 2),
            (("--knot", "braid 3: 1 1"), 2),
            (("--knot", "braid 2: 1"), 4),
            (("--knot", "table:K-prime", "--n", "0"), 2),
            ((), 2),
            (("--knot", "table:K-prime", "--table", "/nonexistent/knots.json"), 2),
            (("--knot", "table:K-prime", "--sweep", "1..2"), 2),
        ]
        for argv, expected in cases:
            code, _, err = self.run_main(*argv)
            self.assertEqual(code, expected, f"{argv} 的退出码")
            self.assertEqual(json.loads(err.strip().splitlines()[-1])["type"], "error")

    def test_error_code_in_response(self):
        _, _, err = self.run_main("--knot", "braid 2: 1")
        response = json.loads(err.strip().splitlines()[-1])
        self.assertEqual(response["code"], ErrorCode.CONS_GENUS_TOO_SMALL.value)


class TestOutputFormat(unittest.TestCase):

    def test_values(self):
        self.assertEqual([fmt.value for fmt in OutputFormat], ["json", "text", "csv"])


if __name__ == '__main__':
    unittest.main()
