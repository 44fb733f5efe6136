"""
mirrorlab 설정 및 케이스 데이터 모델
"""

import os
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from mirrorlab.core.errors import InvalidParams, PreconditionError
from mirrorlab.core.models.params import HGParams
from mirrorlab.core.utils.cache import CACHE_ENV


@dataclass
class CYCase:
    """n=4 케이스 데이터 모델 (파라미터, n0, 재조정 상수 N)"""

    label: str
    params: HGParams
    n0: int = 1
    N: Optional[int] = None  # None 이면 자동 계산

    def to_dict(self) -> Dict:
        """케이스 객체를 딕셔너리로 변환"""
        return {
            "label": self.label,
            "params": str(self.params),
            "n0": self.n0,
            "N": "auto" if self.N is None else self.N,
        }

    @classmethod
    def from_dict(cls, data: Dict) -> "CYCase":
        """딕셔너리에서 케이스 객체 생성"""
        if "params" not in data:
            raise InvalidParams("case entry has no 'params'")
        params = data["params"]
        if isinstance(params, (list, tuple)):
            params = ",".join(str(v) for v in params)
        a = HGParams.parse(str(params))

        raw_n = data.get("N", "auto")
        if raw_n is None or str(raw_n).strip().lower() == "auto":
            big_n = None
        else:
            try:
                big_n = int(raw_n)
            except (TypeError, ValueError):
                raise InvalidParams(f"N must be 'auto' or an integer, got {raw_n!r}") from None
            if big_n < 1:
                raise InvalidParams("N must be positive")

        try:
            n0 = int(data.get("n0", 1))
        except (TypeError, ValueError):
            raise InvalidParams(f"n0 must be an integer, got {data.get('n0')!r}") from None
        if n0 < 1:
            raise InvalidParams("n0 must be positive")

        return cls(label=str(data.get("label") or a), params=a, n0=n0, N=big_n)


def load_cases(file_path: Union[str, Path]) -> List[CYCase]:
    """케이스 YAML/JSON 파일 로드 (단일 객체, 리스트, 또는 {cases: [...]})"""
    from mirrorlab.core.utils.file_io import load_yaml

    data = load_yaml(file_path)
    if isinstance(data, dict) and "cases" in data:
        data = data["cases"]
    if isinstance(data, dict):
        data = [data]
    if not isinstance(data, list):
        raise InvalidParams(f"{file_path}: expected a case object or a list of cases")
    return [CYCase.from_dict(item) for item in data]


def default_cases() -> List[CYCase]:
    """패키지에 포함된 14개 케이스"""
    from mirrorlab.core.utils.file_io import data_path

    return load_cases(data_path("cy_cases.yml"))


@dataclass
class SweepJob:
    """(a, p) 스윕 작업 정의"""

    params: List[HGParams]
    pmax: int
    order: int
    checks: Tuple[str, ...]
    jobs: int = 1

    def __post_init__(self):
        from mirrorlab.core.services.dwork import CHECKS

        if not self.params:
            raise PreconditionError("sweep needs at least one parameter list")
        if self.pmax < 2:
            raise PreconditionError("prime bound must be at least 2")
        if self.order < 1:
            raise PreconditionError("truncation order must be positive")
        if self.jobs < 1:
            raise PreconditionError("jobs must be positive")
        unknown = [c for c in self.checks if c not in CHECKS]
        if unknown:
            raise PreconditionError(f"unknown checks: {', '.join(unknown)}")
        if "dieudonne" in self.checks and self.order < self.pmax:
            raise PreconditionError("dieudonne check needs --order of at least --pmax")


@dataclass
class Settings:
    """기본 설정 (data/default_config.yml + 사용자 설정 + 환경 변수)"""

    sweep_pmax: int = 50
    sweep_order: int = 60
    n2_denominator_bound: int = 60
    classify_verify_bound: int = 50
    yukawa_order: int = 12
    instanton_depth: int = 3
    suite_order_q: int = 6
    reduce_denominator_bound: int = 12
    jobs: int = 1
    cache_dir: Optional[str] = None
    extra: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_dict(cls, data: Dict) -> "Settings":
        known = {name for name in cls.__dataclass_fields__ if name != "extra"}
        values = {k: v for k, v in data.items() if k in known}
        extra = {k: v for k, v in data.items() if k not in known}
        return cls(**values, extra=extra)

    def merged(self, data: Dict) -> "Settings":
        overlay = Settings.from_dict(data)
        changes = {k: getattr(overlay, k) for k in data if k in self.__dataclass_fields__}
        merged = replace(self, **changes)
        merged.extra = {**self.extra, **overlay.extra}
        return merged

    @classmethod
    def load(cls, path: Optional[Union[str, Path]] = None) -> "Settings":
        """패키지 기본값 위에 사용자 YAML 과 MIRRORLAB_CACHE 를 덮어씀"""
        from mirrorlab.core.utils.file_io import data_path, load_yaml

        settings = cls.from_dict(load_yaml(data_path("default_config.yml")) or {})
        if path is not None:
            user = load_yaml(path) or {}
            if not isinstance(user, dict):
                raise InvalidParams(f"{path}: settings file must be a mapping")
            settings = settings.merged(user)

        env_cache = os.environ.get(CACHE_ENV, "").strip()
        if env_cache:
            settings.cache_dir = env_cache
        return settings

    def apply_cache(self) -> None:
        """설정 파일의 cache_dir 을 환경 변수로 내보냄 (환경 변수가 우선)"""
        if self.cache_dir and not os.environ.get(CACHE_ENV):
            os.environ[CACHE_ENV] = str(self.cache_dir)


def parse_checks(values: Sequence[str]) -> Tuple[str, ...]:
    """쉼표로 구분된 검사 이름 목록 정규화"""
    from mirrorlab.core.services.dwork import CHECKS

    names: List[str] = []
    for value in values:
        for name in value.split(","):
            name = name.strip().lower()
            if not name:
                continue
            if name not in CHECKS:
                raise InvalidParams(f"unknown check '{name}' (choose from {', '.join(CHECKS)})")
            if name not in names:
                names.append(name)
    return tuple(names)
