"""
파일 입출력 및 콘솔 유틸리티 함수 모음
"""

import os
from pathlib import Path
from typing import Dict, List, Union

import yaml
from rich.console import Console
from rich.theme import Theme

# Rich 설정 (결과는 stdout, 진행 상황과 메시지는 stderr)
theme = Theme(
    {
        "info": "cyan",
        "warning": "yellow",
        "error": "bold red",
        "success": "bold green",
    }
)
console = Console(theme=theme, stderr=True)

DATA_DIR = Path(__file__).resolve().parent.parent.parent / "data"


def data_path(name: str) -> Path:
    """패키지 data 디렉터리 안의 파일 경로"""
    return DATA_DIR / name


def load_yaml(file_path: Union[str, Path]) -> Union[List, Dict, None]:
    """YAML(또는 JSON) 파일 로드"""
    if not os.path.exists(file_path):
        raise FileNotFoundError(f"{file_path} 파일이 존재하지 않습니다.")

    with open(file_path, "r", encoding="utf-8") as f:
        return yaml.safe_load(f)
