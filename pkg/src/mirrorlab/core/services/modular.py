"""
N-재조정 정수 구조: 상수 N, u0..u6, 유카와 결합과 인스탄톤 수 서비스
"""

import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from sympy import divisors, primefactors, totient

from mirrorlab.core.errors import IncompleteOrbit, PreconditionError
from mirrorlab.core.models.config import CYCase
from mirrorlab.core.models.params import HGParams
from mirrorlab.core.models.series import (
    ZERO,
    Number,
    Series,
    compose,
    format_rational,
    power,
    rescale,
    revert,
    theta,
)
from mirrorlab.core.services.hypergeom import mirror_q, series_F, series_G


def _first_non_integral(f: Series, upto: Optional[int] = None) -> Optional[int]:
    upto = f.order if upto is None else min(upto, f.order)
    for k in range(upto):
        if f.coeffs[k].denominator != 1:
            return k
    return None


def orbit_multiplicities(a: HGParams) -> Dict[int, int]:
    """For each denominator s > 1, how many full totative sets {j/s} the parameters contain."""
    counts = Counter(a.values)
    result = {}
    for s, group in a.by_denominator().items():
        units = [Fraction(j, s) for j in range(1, s) if math.gcd(j, s) == 1]
        copies = {counts[u] for u in units}
        if len(copies) != 1 or len(group) != len(units) * next(iter(copies)):
            raise IncompleteOrbit(
                f"parameters with denominator {s} do not form complete totative sets"
            )
        result[s] = copies.pop()
    return result


def n_factor(s: int) -> int:
    """N_s = s^m prod_{p | s} p^(m/(p-1)) with m = phi(s)."""
    m = int(totient(s))
    value = s**m
    for p in primefactors(s):
        value *= p ** (m // (p - 1))
    return value


def n_constant(a: HGParams) -> int:
    """N = prod over the totative orbits of N_s; F(a | Nz) has integer coefficients."""
    big_n = 1
    for s, copies in orbit_multiplicities(a).items():
        big_n *= n_factor(s) ** copies
    return big_n


@dataclass
class NConstantReport:
    """N 과 충분성, 최소성 탐침 결과"""

    params: HGParams
    N: int
    order: int
    sufficient: bool
    # N/p 로도 정수 계수가 유지되는 소수 p
    reducible_by: List[int] = field(default_factory=list)

    @property
    def minimal(self) -> bool:
        return self.sufficient and not self.reducible_by

    def to_dict(self) -> Dict:
        return {
            "params": self.params.to_strings(),
            "N": self.N,
            "order": self.order,
            "sufficient": self.sufficient,
            "reducible_by": self.reducible_by,
            "minimal_probe": self.minimal,
        }


def n_constant_report(a: HGParams, order: int = 30) -> NConstantReport:
    """Validate N by F(Nz) integrality to the given order and probe N/p for each p | N."""
    big_n = n_constant(a)
    f = series_F(a, order)
    sufficient = rescale(f, big_n).is_integral()
    reducible = [
        p for p in primefactors(big_n) if rescale(f, big_n // p).is_integral()
    ]
    return NConstantReport(a, big_n, order, sufficient, reducible)


def case_n(case: CYCase) -> int:
    return case.N if case.N is not None else n_constant(case.params)


def rescaled_mirror(case: CYCase, order: int) -> Series:
    """q(z) = (1/N) q(a | Nz), coefficients of z^0..z^order."""
    big_n = case_n(case)
    return rescale(mirror_q(case.params, order), big_n).scale(Fraction(1, big_n))


def u_series(case: CYCase, order: int) -> List[Series]:
    """u0 = z, u1..u4 = theta^0..3 F(Nz), u5 = F theta G - G theta F, u6 = F theta^2 G - G theta^2 F."""
    if order < 2:
        raise PreconditionError("order must be at least 2")
    big_n = case_n(case)
    f = rescale(series_F(case.params, order), big_n)
    g = rescale(series_G(case.params, order), big_n)
    u = [Series.variable(order), f]
    for _ in range(3):
        u.append(theta(u[-1]))
    tf, tg = theta(f), theta(g)
    u.append(f * tg - g * tf)
    u.append(f * theta(tg) - g * theta(tf))
    return u


def mirror_coordinate(case: CYCase, order: int) -> Series:
    """z(q): the inverse of q(z), coefficients of q^0..q^(order-1)."""
    return revert(rescaled_mirror(case, order).truncate(order))


@dataclass
class IntegralitySuiteReport:
    """u_i(z(q)) 정수성 검사 결과"""

    label: str
    N: int
    order_z: int
    order_q: int
    q_first_failure: Optional[int]
    z_of_q: Series
    u_first_failures: List[Optional[int]]

    @property
    def integral(self) -> bool:
        return self.q_first_failure is None and all(f is None for f in self.u_first_failures)

    def to_dict(self) -> Dict:
        return {
            "case": self.label,
            "N": self.N,
            "order_q": self.order_q,
            "q_first_failure": self.q_first_failure,
            "z_of_q": self.z_of_q.to_strings(),
            "u_first_failures": self.u_first_failures,
            "integral": self.integral,
        }


def integrality_suite(case: CYCase, order_z: int, order_q: int) -> IntegralitySuiteReport:
    """Check that q(z) and every u_i(z(q)) have integer coefficients through q^order_q."""
    if order_q < 1:
        raise PreconditionError("order_q must be positive")
    if order_z < 2 * order_q:
        raise PreconditionError("order_z must be at least 2 * order_q")
    q_of_z = rescaled_mirror(case, order_z)
    z_of_q = revert(q_of_z.truncate(order_q + 1))
    failures = []
    for u in u_series(case, order_z):
        failures.append(_first_non_integral(compose(u, z_of_q)))
    return IntegralitySuiteReport(
        label=case.label,
        N=case_n(case),
        order_z=order_z,
        order_q=order_q,
        q_first_failure=_first_non_integral(q_of_z),
        z_of_q=z_of_q,
        u_first_failures=failures,
    )


def yukawa(case: CYCase, order_q: int) -> Series:
    """n0 u1^4 / ((u5 + u1^2)^3 (1 - Nz)) transported to q; coefficients of q^0..q^order_q."""
    if order_q < 1:
        raise PreconditionError("order_q must be positive")
    order = order_q + 1
    big_n = case_n(case)
    u = u_series(case, order)
    u1, u5 = u[1], u[5]
    discriminant = Series.from_list([1, -big_n], order)
    denominator = power(u5 + u1 * u1, 3) * discriminant
    y_of_z = (power(u1, 4) / denominator).scale(case.n0)
    return compose(y_of_z, mirror_coordinate(case, order))


def instanton_numbers(y: Series, dmax: int) -> List[Fraction]:
    """n_1..n_dmax from y = n0 + sum n_d d^3 q^d / (1 - q^d)."""
    if y.order <= dmax:
        raise PreconditionError(f"series order {y.order} must exceed dmax={dmax}")
    found: List[Fraction] = []
    for k in range(1, dmax + 1):
        rest = sum((found[d - 1] * d**3 for d in divisors(k) if d < k), ZERO)
        found.append((y.coeffs[k] - rest) / k**3)
    return found


def lambert_series(n0: Number, instantons: Sequence[Number], order: int) -> Series:
    """n0 + sum n_d d^3 q^d / (1 - q^d), coefficients of q^0..q^(order-1)."""
    coeffs = [ZERO] * order
    if order:
        coeffs[0] = Fraction(n0)
    for d, n_d in enumerate(instantons, start=1):
        weight = Fraction(n_d) * d**3
        for k in range(d, order, d):
            coeffs[k] += weight
    return Series(tuple(coeffs))


@dataclass
class CaseReport:
    """케이스 하나의 N, 인스탄톤 수, 정수성 결과"""

    case: CYCase
    N: int
    instantons: List[Fraction]
    integrality: IntegralitySuiteReport

    @property
    def integral(self) -> bool:
        return self.integrality.integral and all(
            n.denominator == 1 for n in self.instantons
        )

    def to_dict(self) -> Dict:
        return {
            "case": self.case.label,
            "params": self.case.params.to_strings(),
            "N": self.N,
            "n0": self.case.n0,
            "instantons": [format_rational(n) for n in self.instantons],
            "integrality": self.integrality.to_dict(),
        }


def evaluate_case(case: CYCase, order_q: int, dmax: int) -> CaseReport:
    """Top-level worker: integrality suite and instanton numbers for one case."""
    report = integrality_suite(case, 2 * order_q, order_q)
    y = yukawa(case, max(order_q, dmax))
    return CaseReport(case, report.N, instanton_numbers(y, dmax), report)


def suite(
    cases: Sequence[CYCase], order_q: int = 6, dmax: int = 3, jobs: int = 1
) -> List[CaseReport]:
    """Run every case; results keep the input order."""
    if jobs <= 1 or len(cases) <= 1:
        return [evaluate_case(case, order_q, dmax) for case in cases]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(evaluate_case, case, order_q, dmax) for case in cases]
        return [future.result() for future in futures]

