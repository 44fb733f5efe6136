"""
초기하 파라미터 데이터 모델
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from mirrorlab.core.errors import InvalidParams
from mirrorlab.core.models.series import format_rational, parse_rational


@dataclass(frozen=True, order=True)
class HGParams:
    """Multiset a = (a_1, ..., a_n) of rationals in (0, 1), kept as a sorted tuple."""

    values: Tuple[Fraction, ...]

    def __post_init__(self):
        values = tuple(sorted(Fraction(v) for v in self.values))
        if not values:
            raise InvalidParams("at least one parameter is required")
        for v in values:
            if not 0 < v < 1:
                raise InvalidParams(f"parameter {format_rational(v)} is not in (0, 1)")
        object.__setattr__(self, "values", values)

    @classmethod
    def parse(cls, text: str) -> "HGParams":
        """Comma-separated rationals, e.g. "1/5,2/5,3/5,4/5"."""
        parts = [part for part in text.replace(" ", "").split(",") if part]
        return cls(tuple(parse_rational(part) for part in parts))

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def denominator_lcm(self) -> int:
        """c: lcm of all parameter denominators."""
        return math.lcm(*(v.denominator for v in self.values))

    def is_good_prime(self, p: int) -> bool:
        return self.denominator_lcm % p != 0

    def complement(self) -> "HGParams":
        """(1 - a_1, ..., 1 - a_n)."""
        return HGParams(tuple(1 - v for v in self.values))

    def by_denominator(self) -> Dict[int, List[Fraction]]:
        groups: Dict[int, List[Fraction]] = {}
        for v in self.values:
            groups.setdefault(v.denominator, []).append(v)
        return groups

    def to_strings(self) -> List[str]:
        return [format_rational(v) for v in self.values]

    def __str__(self) -> str:
        return ",".join(self.to_strings())
