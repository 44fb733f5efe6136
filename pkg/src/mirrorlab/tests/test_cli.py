"""
CLI 명령어 테스트
"""

import csv
import io
import json
import tempfile
from pathlib import Path
from typing import Dict, List
from unittest import TestCase
from unittest.mock import patch

from click.testing import CliRunner

from mirrorlab import __version__
from mirrorlab.cli.main import main
from mirrorlab.core.errors import ClassificationError

QUINTIC = "1/5,2/5,3/5,4/5"


def records(output: str) -> List[Dict]:
    """출력에서 JSON 레코드 줄만 파싱 (콘솔 메시지는 무시)"""
    return [json.loads(line) for line in output.splitlines() if line.startswith("{")]


class TestCli(TestCase):
    """mirrorlab 명령어 테스트 클래스"""

    def setUp(self):
        """테스트 설정"""
        self.runner = CliRunner()

    def invoke(self, *args: str):
        return self.runner.invoke(main, list(args))

    def test_version(self):
        result = self.invoke("--version")
        self.assertEqual(result.exit_code, 0)
        self.assertIn(__version__, result.output)

    def test_genfun(self):
        result = self.invoke("genfun")
        self.assertEqual(result.exit_code, 0)
        self.assertIn("1,28,4,14,14,40,40", result.output)
        result = self.invoke("genfun", "--terms", "3", "--format", "json")
        self.assertEqual([r["coeff"] for r in records(result.output)], [1, 28, 4])

    def test_dwork_check_ok(self):
        result = self.invoke("dwork-check", "--a", QUINTIC, "--p", "7", "--order", "20")
        self.assertEqual(result.exit_code, 0, result.output)
        (record,) = records(result.output)
        self.assertTrue(record["condition"])
        self.assertEqual(record["q_integral_to"], 21)
        self.assertIsNone(record["fast_congruence_failure"])

    def test_dwork_check_bad_prime(self):
        result = self.invoke("dwork-check", "--a", QUINTIC, "--p", "5")
        self.assertEqual(result.exit_code, 2)

    def test_invalid_params(self):
        result = self.invoke("dwork-check", "--a", "1/2,3/2", "--p", "7")
        self.assertEqual(result.exit_code, 2)

    def test_dwork_check_finds_failure(self):
        result = self.invoke(
            "dwork-check",
            "--a",
            "169/330,139/330",
            "--p",
            "101",
            "--order",
            "4",
            "--checks",
            "fast-congruence",
        )
        self.assertEqual(result.exit_code, 1)
        (record,) = records(result.output)
        self.assertEqual(record["fast_congruence_failure"], 2)

    def test_unknown_check(self):
        result = self.invoke("dwork-check", "--a", QUINTIC, "--p", "7", "--checks", "bogus")
        self.assertEqual(result.exit_code, 2)

    def test_sweep(self):
        result = self.invoke("sweep", "--a", QUINTIC, "--pmax", "13", "--order", "20")
        self.assertEqual(result.exit_code, 0, result.output)
        rows = records(result.output)
        self.assertEqual([r["prime"] for r in rows], [2, 3, 7, 11, 13])

    def test_congruence(self):
        result = self.invoke("congruence", "--a", QUINTIC, "--p", "7")
        self.assertEqual(result.exit_code, 0, result.output)
        (record,) = records(result.output)
        self.assertEqual(record["order"], 21)
        self.assertIsNone(record["theorem_failure"])
        self.assertEqual(record["delta_params"], QUINTIC)

    def test_congruence_order_below_p(self):
        result = self.invoke("congruence", "--a", QUINTIC, "--p", "7", "--order", "5")
        self.assertEqual(result.exit_code, 2)
        self.assertEqual(records(result.output), [])

    def test_witness(self):
        result = self.invoke("witness", "--x", "2/7", "--item", "1")
        self.assertEqual(result.exit_code, 0, result.output)
        (record,) = records(result.output)
        self.assertEqual(record["delta"], "5/7")

    def test_series_csv(self):
        result = self.invoke(
            "series", "--a", "1/2,1/2", "--kind", "F", "--order", "3", "--format", "csv"
        )
        self.assertEqual(result.exit_code, 0, result.output)
        rows = list(csv.DictReader(io.StringIO(result.output)))
        self.assertEqual([r["coeff"] for r in rows], ["1", "1/4", "9/64"])
        self.assertEqual(rows[0]["params"], "1/2,1/2")

    def test_series_q(self):
        result = self.invoke("series", "--a", QUINTIC, "--order", "3")
        self.assertEqual(result.exit_code, 0, result.output)
        rows = records(result.output)
        self.assertEqual([r["k"] for r in rows], [0, 1, 2, 3])
        self.assertEqual(rows[1]["coeff"], "1")

    def test_euler(self):
        result = self.invoke("euler", "--a", "1/3", "--b", "1/4")
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertTrue(records(result.output)[0]["holds"])

    def test_classify(self):
        result = self.invoke("classify", "--n", "3")
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(len(records(result.output)), 4)
        result = self.invoke("classify", "--n", "2")
        self.assertEqual(result.exit_code, 0, result.output)
        rows = records(result.output)
        self.assertEqual(len(rows), 28)
        self.assertEqual(rows[0]["params"], ["1/2", "1/2"])

    def test_classification_failure_exits_1(self):
        with patch(
            "mirrorlab.cli.classify.enumerate_candidates",
            side_effect=ClassificationError("entry fails its own condition"),
        ):
            result = self.invoke("classify", "--n", "3")
        self.assertEqual(result.exit_code, 1)

    def test_table1(self):
        result = self.invoke("table1", "4")
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(len(records(result.output)), 14)

    def test_triangle(self):
        result = self.invoke("triangle", "--a", "2/3", "1/3")
        self.assertEqual(result.exit_code, 0, result.output)
        (record,) = records(result.output)
        self.assertEqual((record["m1"], record["m2"]), ("3", "inf"))
        self.assertEqual(self.invoke("triangle").exit_code, 2)
        self.assertEqual(self.invoke("triangle", "--a", "5/6", "1/6").exit_code, 2)

    def test_reduce(self):
        result = self.invoke("reduce", "--q", "2")
        self.assertEqual(result.exit_code, 0, result.output)
        pairs = {(r["a1"], r["a2"]) for r in records(result.output)}
        self.assertEqual(pairs, {("1/5", "2/5"), ("1/3", "1/3")})

    def test_nconst(self):
        result = self.invoke("nconst", "--a", "1/3,1/3,2/3,2/3")
        self.assertEqual(result.exit_code, 0, result.output)
        (record,) = records(result.output)
        self.assertEqual(record["N"], 729)
        self.assertTrue(record["sufficient"])

    def test_yukawa(self):
        result = self.invoke("yukawa", "--a", QUINTIC, "--order", "4", "--dmax", "2")
        self.assertEqual(result.exit_code, 0, result.output)
        (record,) = records(result.output)
        self.assertEqual(record["N"], 3125)
        self.assertEqual(record["n0"], 5)
        self.assertEqual(record["instantons"], ["2875", "609250"])

    def test_yukawa_order_below_dmax(self):
        result = self.invoke("yukawa", "--a", QUINTIC, "--order", "2", "--dmax", "3")
        self.assertEqual(result.exit_code, 2)
        self.assertEqual(records(result.output), [])

    def test_config_overrides_defaults(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "settings.yml"
            path.write_text("instanton_depth: 1\n", encoding="utf-8")
            result = self.invoke("--config", str(path), "yukawa", "--a", QUINTIC, "--order", "3")
        self.assertEqual(result.exit_code, 0, result.output)
        (record,) = records(result.output)
        self.assertEqual(record["instantons"], ["2875"])

    def test_suite_case_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "cases.yml"
            path.write_text(
                "cases:\n  - label: X(3,3)\n    params: 1/3,1/3,2/3,2/3\n    n0: 9\n",
                encoding="utf-8",
            )
            result = self.invoke("suite", "--cases", str(path), "--order", "2", "--dmax", "1")
        self.assertEqual(result.exit_code, 0, result.output)
        (record,) = records(result.output)
        self.assertEqual(record["case"], "X(3,3)")
        self.assertEqual(record["instantons"], ["1053"])
        self.assertTrue(record["integrality"]["integral"])
