"""
결과 출력 유틸리티 (json / csv / plain)
"""

import csv
import json
import sys
from typing import Any, Dict, List, Optional, TextIO

from rich.console import Console
from rich.table import Table

FORMATS = ("json", "csv", "plain")


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return ";".join(_cell(v) for v in value)
    if isinstance(value, dict):
        return json.dumps(value, sort_keys=True)
    return str(value)


class Emitter:
    """레코드를 형식에 맞춰 stdout 으로 내보냄 (json 과 csv 는 한 줄씩 바로 출력)"""

    def __init__(self, fmt: str = "json", title: Optional[str] = None, stream: Optional[TextIO] = None):
        if fmt not in FORMATS:
            raise ValueError(f"unknown format: {fmt}")
        self.fmt = fmt
        self.title = title
        self.stream = stream
        self._writer: Optional[csv.DictWriter] = None
        self._rows: List[Dict] = []

    @property
    def out(self) -> TextIO:
        return self.stream if self.stream is not None else sys.stdout

    def emit(self, record: Dict) -> None:
        if self.fmt == "json":
            self.out.write(json.dumps(record, sort_keys=True) + "\n")
            self.out.flush()
        elif self.fmt == "csv":
            if self._writer is None:
                self._writer = csv.DictWriter(
                    self.out, fieldnames=sorted(record), lineterminator="\n", extrasaction="ignore"
                )
                self._writer.writeheader()
            self._writer.writerow({k: _cell(v) for k, v in record.items()})
            self.out.flush()
        else:
            self._rows.append(record)

    def close(self) -> None:
        """plain 형식은 모아둔 레코드를 표로 출력"""
        if self.fmt != "plain" or not self._rows:
            return
        columns: List[str] = []
        for row in self._rows:
            for key in row:
                if key not in columns:
                    columns.append(key)
        table = Table(title=self.title, show_header=True)
        for column in columns:
            table.add_column(column, style="cyan" if column == columns[0] else "")
        for row in self._rows:
            table.add_row(*(_cell(row.get(column)) for column in columns))
        Console(file=self.out, width=200).print(table)
        self._rows = []

    def __enter__(self) -> "Emitter":
        return self

    def __exit__(self, *exc) -> None:
        self.close()

