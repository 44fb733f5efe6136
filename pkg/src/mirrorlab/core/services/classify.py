"""
φ-분할 열거, 생성함수, 기준 표 재현과 삼각군 타입 서비스
"""

import difflib
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from sympy import primerange, totient

from mirrorlab.core.errors import ClassificationError, NotTriangle, PreconditionError
from mirrorlab.core.models.params import HGParams
from mirrorlab.core.models.series import Number, format_rational, parse_rational
from mirrorlab.core.services.dwork import condition_by_class, condition_check
from mirrorlab.core.services.hypergeom import ratio_equal
from mirrorlab.core.utils.file_io import data_path, load_yaml

Moduli = Tuple[int, ...]
TriangleIndex = Union[int, float]

TABLE1_FILE = "table1.yml"
TABLE1_SIZES = {2: 28, 4: 14, 6: 40}
# n=2 의 분할 개수에 더해지는 오일러 분기 쌍
N2_CORRECTION = 24


def _phi(m: int) -> int:
    return int(totient(m))


def modulus_bound(n: int) -> int:
    """phi(m) > sqrt(m/2), so every m with phi(m) <= n satisfies m <= 2 n^2."""
    return 2 * n * n


def _moduli_up_to(n: int, bound: Optional[int]) -> List[Tuple[int, int]]:
    bound = modulus_bound(n) if bound is None else bound
    return [(m, _phi(m)) for m in range(2, bound + 1) if _phi(m) <= n]


def phi_partitions(n: int, modulus_bound: Optional[int] = None) -> List[Moduli]:
    """All multisets {m_i > 1} with sum phi(m_i) = n, as non-decreasing tuples."""
    if n < 1:
        raise PreconditionError("n must be at least 1")
    moduli = _moduli_up_to(n, modulus_bound)
    found: List[Moduli] = []

    def extend(start: int, remaining: int, chosen: List[int]) -> None:
        if remaining == 0:
            found.append(tuple(chosen))
            return
        for idx in range(start, len(moduli)):
            m, phi_m = moduli[idx]
            if phi_m <= remaining:
                chosen.append(m)
                extend(idx, remaining - phi_m, chosen)
                chosen.pop()

    extend(0, n, [])
    return sorted(found)


def partition_counts(terms: int) -> List[int]:
    """Coefficients of x^1..x^terms in prod_{m >= 2} 1/(1 - x^phi(m))."""
    if terms < 1:
        raise PreconditionError("terms must be at least 1")
    counts = [1] + [0] * terms
    for _, weight in _moduli_up_to(terms, None):
        for k in range(weight, terms + 1):
            counts[k] += counts[k - weight]
    return counts[1:]


def genfun_coeffs(terms: int) -> List[int]:
    """24x^2 - 1 + prod_{m >= 2} 1/(1 - x^phi(m)), coefficients of x^1..x^terms."""
    counts = partition_counts(terms)
    if terms >= 2:
        counts[1] += N2_CORRECTION
    return counts


def totative_orbit(m: int) -> List[Fraction]:
    """{j/m : gcd(j, m) = 1}."""
    return [Fraction(j, m) for j in range(1, m) if math.gcd(j, m) == 1]


@dataclass(frozen=True)
class ClassificationEntry:
    """하나의 φ-분할과 그로부터 유도된 파라미터"""

    n: int
    orbit_moduli: Moduli
    params: HGParams

    @classmethod
    def from_moduli(cls, moduli: Sequence[int]) -> "ClassificationEntry":
        values: List[Fraction] = []
        for m in moduli:
            values.extend(totative_orbit(m))
        params = HGParams(tuple(values))
        return cls(n=params.n, orbit_moduli=tuple(sorted(moduli)), params=params)

    @property
    def representatives(self) -> Tuple[Fraction, ...]:
        """Elements in (0, 1/2], listed from the largest."""
        half = self.params.values[: (self.n + 1) // 2]
        return tuple(sorted(half, reverse=True))

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "moduli": list(self.orbit_moduli),
            "params": self.params.to_strings(),
            "representatives": [format_rational(v) for v in self.representatives],
        }


def enumerate_candidates(n: int, verify_bound: int = 50) -> List[ClassificationEntry]:
    """One entry per phi-partition of n, each checked against every good prime <= verify_bound."""
    if n == 2:
        raise PreconditionError("n = 2 has extra solutions; use enumerate_n2")
    entries = [ClassificationEntry.from_moduli(moduli) for moduli in phi_partitions(n)]
    for entry in entries:
        a = entry.params
        for p in primerange(2, verify_bound + 1):
            if a.is_good_prime(p) and not condition_check(a, p):
                raise ClassificationError(f"{a} fails the condition at p={p}")
    return entries


def enumerate_n2(denominator_bound: int = 60) -> List[Tuple[Fraction, Fraction]]:
    """Unordered pairs (a1 >= a2) satisfying the n=2 condition for every good prime.

    The delta-orbit of a_i has phi(den a_i) elements and stays inside
    {a1, a2, 1-a1, 1-a2}, so only denominators with phi <= 4 can occur.
    """
    if denominator_bound < 12:
        raise PreconditionError("denominator bound must be at least 12")
    values = sorted(
        {
            Fraction(j, m)
            for m in range(2, denominator_bound + 1)
            if _phi(m) <= 4
            for j in range(1, m)
        }
    )
    pairs = []
    for i, a2 in enumerate(values):
        for a1 in values[i:]:
            if condition_by_class(HGParams((a1, a2))):
                pairs.append((a1, a2))
    # 자기 닫힌 궤도 (a1 + a2 = 1) 가 먼저 온다
    return sorted(
        pairs,
        key=lambda pair: (
            pair[0] + pair[1] != 1,
            math.lcm(pair[0].denominator, pair[1].denominator),
            pair,
        ),
    )


def odd_extension(entry: ClassificationEntry) -> ClassificationEntry:
    """Adjoin the orbit {1/2}: entries for 2l map onto entries for 2l+1."""
    return ClassificationEntry.from_moduli(entry.orbit_moduli + (2,))


# --- reference table ---------------------------------------------------------


def canonical_row(values: Sequence[Fraction], n: int) -> Tuple[Fraction, ...]:
    """n=2 rows stay as pairs; other rows are expanded with x -> 1-x."""
    values = [Fraction(v) for v in values]
    if n != 2:
        values = values + [1 - v for v in values]
    return tuple(sorted(values))


def _row_text(row: Sequence[Fraction]) -> str:
    return "(" + ", ".join(format_rational(v) for v in row) + ")"


def load_table1(path=None) -> Dict[int, List[Tuple[Fraction, ...]]]:
    """Printed reference rows by n (fixture data/table1.yml)."""
    data = load_yaml(path or data_path(TABLE1_FILE))
    if not isinstance(data, dict) or "tables" not in data:
        raise ClassificationError("table fixture has no 'tables' section")
    tables = {}
    for n, rows in data["tables"].items():
        tables[int(n)] = [tuple(parse_rational(str(v)) for v in row) for row in rows]
    return tables


def enumerated_rows(n: int, denominator_bound: int = 60) -> List[Tuple[Fraction, ...]]:
    if n == 2:
        pairs = enumerate_n2(denominator_bound)
        return [canonical_row(pair, 2) for pair in pairs]
    return [entry.params.values for entry in enumerate_candidates(n)]


def table1_diff(n: int, denominator_bound: int = 60) -> Tuple[List[Tuple[Fraction, ...]], List[str]]:
    """Enumerated rows and a unified diff against the fixture (empty when they agree)."""
    if n not in TABLE1_SIZES:
        raise PreconditionError("the reference table covers n = 2, 4 and 6")
    expected = sorted(canonical_row(row, n) for row in load_table1()[n])
    produced = sorted(enumerated_rows(n, denominator_bound))
    diff = list(
        difflib.unified_diff(
            [_row_text(row) for row in expected],
            [_row_text(row) for row in produced],
            fromfile=f"table1[n={n}]",
            tofile=f"enumerated[n={n}]",
            lineterm="",
        )
    )
    return produced, diff


# --- triangle groups ---------------------------------------------------------


def _triangle_index(divisor: Fraction) -> TriangleIndex:
    if divisor == 0:
        return math.inf
    value = 1 / divisor
    if value <= 0 or value.denominator != 1:
        raise NotTriangle(f"1/{format_rational(divisor)} is not a positive integer")
    return int(value)


def triangle_type(a1: Number, a2: Number) -> Tuple[TriangleIndex, TriangleIndex]:
    """(m1, m2) with m1 = 1/(a1 - a2), m2 = 1/(1 - a1 - a2); a zero divisor gives inf."""
    a1, a2 = Fraction(a1), Fraction(a2)
    HGParams((a1, a2))
    if a1 < a2:
        raise PreconditionError("triangle_type expects a1 >= a2")
    return _triangle_index(a1 - a2), _triangle_index(1 - a1 - a2)


def _inverse(m: TriangleIndex) -> Fraction:
    if m == math.inf:
        return Fraction(0)
    if int(m) != m or m < 1:
        raise PreconditionError(f"triangle index must be a positive integer or inf, got {m}")
    return Fraction(1, int(m))


def triangle_params(m1: TriangleIndex, m2: TriangleIndex) -> Tuple[Fraction, Fraction]:
    """{a1, a2} = {(1 + 1/m1 - 1/m2)/2, (1 - 1/m1 - 1/m2)/2}."""
    r1, r2 = _inverse(m1), _inverse(m2)
    return (1 + r1 - r2) / 2, (1 - r1 - r2) / 2


def triangle_grid(mmax: int) -> List[Tuple[TriangleIndex, TriangleIndex, Fraction, Fraction]]:
    """(m1, m2, a1, a2) for m1 <= m2 taken from 1..mmax and inf, parameters in (0, 1)."""
    if mmax < 1:
        raise PreconditionError("mmax must be positive")
    indices: List[TriangleIndex] = list(range(1, mmax + 1)) + [math.inf]
    grid = []
    for i, m1 in enumerate(indices):
        for m2 in indices[i:]:
            a1, a2 = triangle_params(m1, m2)
            if 0 < a2 and a1 < 1:
                grid.append((m1, m2, a1, a2))
    return grid


# --- reduction by the Dwork operator ------------------------------------------


def dwork_reduction_search(
    q: int, denominator_bound: int = 12, order: int = 8
) -> List[Tuple[Fraction, Fraction]]:
    """n=4 pairs 0 < a1 <= a2 <= 1/2 (q not in the denominators) with
    G/F(a) == G/F(b), b = (q a1 - i, q a2 - j, 1 - b1, 1 - b2), i, j in 0..q-1.
    """
    if q not in (2, 3):
        raise PreconditionError("q must be 2 or 3")
    values = sorted(
        {
            Fraction(j, m)
            for m in range(2, denominator_bound + 1)
            if m % q
            for j in range(1, m // 2 + 1)
        }
    )
    found = []
    for idx, a1 in enumerate(values):
        for a2 in values[idx:]:
            a = HGParams((a1, a2, 1 - a1, 1 - a2))
            for i in range(q):
                for j in range(q):
                    b1, b2 = q * a1 - i, q * a2 - j
                    if not (0 < b1 < 1 and 0 < b2 < 1):
                        continue
                    if ratio_equal(a, HGParams((b1, b2, 1 - b1, 1 - b2)), order):
                        found.append((a1, a2))
                        break
                else:
                    continue
                break
    return sorted(found, key=lambda pair: (pair[0], pair[1]))
