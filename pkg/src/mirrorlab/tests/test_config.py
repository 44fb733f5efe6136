"""
설정, 케이스 파일과 급수 캐시 테스트
"""

import json
import os
import tempfile
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from unittest import TestCase
from unittest.mock import patch

from mirrorlab.core.errors import InvalidParams, PreconditionError
from mirrorlab.core.models.config import (
    CYCase,
    Settings,
    SweepJob,
    default_cases,
    load_cases,
    parse_checks,
)
from mirrorlab.core.models.params import HGParams
from mirrorlab.core.models.series import Series
from mirrorlab.core.services.classify import canonical_row, load_table1
from mirrorlab.core.utils.cache import CACHE_ENV, load_series, memoized, store_series

QUINTIC = "1/5,2/5,3/5,4/5"
SHARED = Series.from_list([1, 2, 3, 4, 5])


def store_repeatedly(directory: str) -> int:
    """같은 키를 여러 번 저장 (워커 프로세스용)"""
    os.environ[CACHE_ENV] = directory
    for _ in range(200):
        store_series("q", QUINTIC, SHARED)
    return os.getpid()


class TestSettings(TestCase):
    """기본 설정과 사용자 설정 병합 테스트"""

    def test_packaged_defaults(self):
        with patch.dict(os.environ, {CACHE_ENV: ""}):
            settings = Settings.load()
        self.assertEqual(settings.sweep_pmax, 50)
        self.assertEqual(settings.sweep_order, 60)
        self.assertEqual(settings.n2_denominator_bound, 60)
        self.assertEqual(settings.jobs, 1)
        self.assertIsNone(settings.cache_dir)

    def test_user_overlay(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "settings.yml"
            path.write_text("sweep_pmax: 31\njobs: 4\nnotes: scratch\n", encoding="utf-8")
            with patch.dict(os.environ, {CACHE_ENV: ""}):
                settings = Settings.load(path)
        self.assertEqual(settings.sweep_pmax, 31)
        self.assertEqual(settings.jobs, 4)
        self.assertEqual(settings.sweep_order, 60)
        self.assertEqual(settings.extra, {"notes": "scratch"})

    def test_overlay_must_be_mapping(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "settings.yml"
            path.write_text("- 1\n- 2\n", encoding="utf-8")
            with self.assertRaises(InvalidParams):
                Settings.load(path)

    def test_cache_env_wins(self):
        with patch.dict(os.environ, {CACHE_ENV: "/tmp/mirrorlab-cache"}):
            settings = Settings.load()
            self.assertEqual(settings.cache_dir, "/tmp/mirrorlab-cache")

    def test_apply_cache_exports(self):
        with patch.dict(os.environ, {CACHE_ENV: ""}):
            Settings(cache_dir="/tmp/elsewhere").apply_cache()
            self.assertEqual(os.environ[CACHE_ENV], "/tmp/elsewhere")

    def test_parse_checks(self):
        self.assertEqual(
            parse_checks(["condition,q-integrality", "condition"]), ("condition", "q-integrality")
        )
        with self.assertRaises(InvalidParams):
            parse_checks(["bogus"])

    def test_sweep_job_validation(self):
        a = [HGParams.parse("1/2,1/2")]
        SweepJob(a, 13, 20, ("condition",))
        with self.assertRaises(PreconditionError):
            SweepJob([], 13, 20, ("condition",))
        with self.assertRaises(PreconditionError):
            SweepJob(a, 1, 20, ("condition",))
        with self.assertRaises(PreconditionError):
            SweepJob(a, 13, 20, ("bogus",))
        with self.assertRaises(PreconditionError):
            SweepJob(a, 31, 20, ("dieudonne",))
        SweepJob(a, 13, 20, ("dieudonne",))


class TestCases(TestCase):
    """케이스 데이터 로드 테스트"""

    def test_from_dict_variants(self):
        case = CYCase.from_dict({"label": "q", "params": "1/5,2/5,3/5,4/5", "n0": 5})
        self.assertIsNone(case.N)
        self.assertEqual(case.to_dict()["N"], "auto")
        listed = CYCase.from_dict({"params": ["1/2", "1/2"], "N": 16})
        self.assertEqual(listed.N, 16)
        self.assertEqual(listed.label, "1/2,1/2")
        self.assertEqual(listed.n0, 1)

    def test_from_dict_errors(self):
        for data in (
            {},
            {"params": "1/2,1/2", "N": "lots"},
            {"params": "1/2,1/2", "N": 0},
            {"params": "1/2,1/2", "n0": -1},
            {"params": "1/2,3/2"},
        ):
            with self.assertRaises(InvalidParams, msg=str(data)):
                CYCase.from_dict(data)

    def test_load_json_list(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "cases.json"
            path.write_text(
                json.dumps([{"label": "a", "params": "1/2,1/2,1/2,1/2", "n0": 16}]),
                encoding="utf-8",
            )
            cases = load_cases(path)
        self.assertEqual([c.label for c in cases], ["a"])
        self.assertEqual(cases[0].n0, 16)

    def test_load_single_object(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "case.yml"
            path.write_text("params: 1/3,1/3,2/3,2/3\nn0: 9\n", encoding="utf-8")
            self.assertEqual(len(load_cases(path)), 1)

    def test_default_cases_cover_table(self):
        cases = default_cases()
        self.assertEqual(len(cases), 14)
        rows = {canonical_row(row, 4) for row in load_table1()[4]}
        self.assertEqual({c.params.values for c in cases}, rows)
        self.assertEqual(cases[0].n0, 5)


class TestCache(TestCase):
    """MIRRORLAB_CACHE 디스크 캐시 테스트"""

    def test_disabled_without_env(self):
        with patch.dict(os.environ, {CACHE_ENV: ""}):
            self.assertIsNone(load_series("q", "1/2", 3))
            calls = []
            memoized("q", "1/2", 3, lambda: calls.append(1) or Series.one(3))
            memoized("q", "1/2", 3, lambda: calls.append(1) or Series.one(3))
            self.assertEqual(len(calls), 2)

    def test_store_and_reuse(self):
        with tempfile.TemporaryDirectory() as tmp:
            with patch.dict(os.environ, {CACHE_ENV: tmp}):
                f = Series.from_list([1, 2, 3])
                store_series("ratio", "1/2,1/2", f)
                self.assertEqual(load_series("ratio", "1/2,1/2", 3), f)
                self.assertIsNone(load_series("ratio", "1/2,1/2", 4))
                calls = []
                value = memoized("ratio", "1/2,1/2", 3, lambda: calls.append(1) or Series.one(3))
                self.assertEqual(value, f)
                self.assertEqual(calls, [])

    def test_corrupt_file_is_ignored(self):
        with tempfile.TemporaryDirectory() as tmp:
            with patch.dict(os.environ, {CACHE_ENV: tmp}):
                f = Series.from_list([1, 2])
                store_series("q", "x", f)
                for path in Path(tmp).iterdir():
                    path.write_text("not json", encoding="utf-8")
                self.assertIsNone(load_series("q", "x", 2))

    def test_concurrent_writers_share_a_key(self):
        with tempfile.TemporaryDirectory() as tmp:
            with ProcessPoolExecutor(max_workers=4) as pool:
                pids = list(pool.map(store_repeatedly, [tmp] * 4))
            self.assertEqual(len(pids), 4)
            with patch.dict(os.environ, {CACHE_ENV: tmp}):
                self.assertEqual(load_series("q", QUINTIC, 5), SHARED)
            self.assertEqual([p for p in Path(tmp).iterdir() if p.suffix == ".tmp"], [])

    def test_failed_store_is_no_cache(self):
        with tempfile.TemporaryDirectory() as tmp:
            with patch.dict(os.environ, {CACHE_ENV: tmp}):
                with patch("mirrorlab.core.utils.cache.os.replace", side_effect=OSError("full")):
                    store_series("q", QUINTIC, SHARED)
                self.assertIsNone(load_series("q", QUINTIC, 5))
                self.assertEqual(list(Path(tmp).iterdir()), [])
