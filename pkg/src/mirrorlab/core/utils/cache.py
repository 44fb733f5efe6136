"""
급수 디스크 캐시 (MIRRORLAB_CACHE)
"""

import hashlib
import os
import tempfile
from pathlib import Path
from typing import Callable, Optional

from mirrorlab.core.models.series import Series

CACHE_ENV = "MIRRORLAB_CACHE"


def cache_dir() -> Optional[Path]:
    """Directory named by MIRRORLAB_CACHE, or None when caching is off."""
    value = os.environ.get(CACHE_ENV, "").strip()
    if not value:
        return None
    path = Path(value).expanduser()
    path.mkdir(parents=True, exist_ok=True)
    return path


def cache_key(kind: str, params: str, order: int) -> str:
    digest = hashlib.sha1(params.encode("utf-8")).hexdigest()[:16]
    return f"{kind}-{digest}-{order}.json"


def load_series(kind: str, params: str, order: int) -> Optional[Series]:
    directory = cache_dir()
    if directory is None:
        return None
    path = directory / cache_key(kind, params, order)
    if not path.exists():
        return None
    try:
        series = Series.from_json(path.read_text(encoding="utf-8"))
    except (OSError, ValueError):
        # 손상된 캐시 파일은 무시하고 다시 계산
        return None
    return series if series.order == order else None


def store_series(kind: str, params: str, series: Series) -> None:
    """Write the series atomically; a failed write leaves the cache unchanged."""
    directory = cache_dir()
    if directory is None:
        return
    path = directory / cache_key(kind, params, series.order)
    tmp_name = None
    try:
        # 작성자마다 고유한 임시 파일을 쓰고 rename 으로 교체
        with tempfile.NamedTemporaryFile(
            mode="w", encoding="utf-8", dir=directory, suffix=".tmp", delete=False
        ) as tf:
            tmp_name = tf.name
            tf.write(series.to_json())
        os.replace(tmp_name, path)
    except OSError:
        if tmp_name is not None:
            Path(tmp_name).unlink(missing_ok=True)


def memoized(kind: str, params: str, order: int, compute: Callable[[], Series]) -> Series:
    """Return the cached series or compute and store it."""
    cached = load_series(kind, params, order)
    if cached is not None:
        return cached
    series = compute()
    store_series(kind, params, series)
    return series
