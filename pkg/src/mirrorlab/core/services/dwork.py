"""
Dwork 연산자, p-정수성 판정과 합동식 검사 서비스
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from sympy import multiplicity, primerange

from mirrorlab.core.errors import (
    BadConstantTerm,
    BadPrime,
    FormViolation,
    NotFound,
    PreconditionError,
)
from mirrorlab.core.models.params import HGParams
from mirrorlab.core.models.series import Number, Series, compose, format_rational, power
from mirrorlab.core.services.hypergeom import mirror_q, ratio_GF

INFINITY = math.inf

CHECKS = ("condition", "q-integrality", "fast-congruence", "dieudonne")
DEFAULT_CHECKS = ("condition", "q-integrality", "fast-congruence")


def padic_val(x: Number, p: int) -> Union[int, float]:
    """Exact p-adic valuation; +inf for 0."""
    x = Fraction(x)
    if not x:
        return INFINITY
    return multiplicity(p, abs(x.numerator)) - multiplicity(p, x.denominator)


def series_p_integral(f: Series, p: int) -> Optional[int]:
    """Smallest index whose coefficient has p in its denominator, or None."""
    for k, c in enumerate(f.coeffs):
        if c.denominator % p == 0:
            return k
    return None


def _first_not_divisible(f: Series, p: int, start: int = 0) -> Optional[int]:
    """Smallest k >= start with v_p(f_k) < 1."""
    for k in range(start, f.order):
        c = f.coeffs[k]
        if c and padic_val(c, p) < 1:
            return k
    return None


def _check_good(x: Fraction, p: int) -> None:
    if x.denominator % p == 0:
        raise BadPrime(f"p={p} divides the denominator of {format_rational(x)}")


def dwork_op(x: Number, p: int, cross_check: bool = False) -> Fraction:
    """delta_p(x) = (p^-1 x_1 mod x_2) / x_2."""
    x = Fraction(x)
    _check_good(x, p)
    den = x.denominator
    value = Fraction((pow(p, -1, den) * x.numerator) % den, den) if den > 1 else Fraction(0)
    if cross_check:
        other = dwork_op_by_search(x, p)
        if other != value:
            raise FormViolation(
                f"delta_{p}({format_rational(x)}): formula {value} != search {other}"
            )
    return value


def dwork_op_by_search(x: Number, p: int) -> Fraction:
    """delta_p(x) = (x + x0) / p with the unique x0 in 0..p-1 keeping p out of the denominator."""
    x = Fraction(x)
    _check_good(x, p)
    for x0 in range(p):
        candidate = (x + x0) / p
        if candidate.denominator % p:
            return candidate
    raise FormViolation(f"no x0 found for delta_{p}({format_rational(x)})")


def dwork_params(a: HGParams, p: int) -> HGParams:
    """delta_p applied to every parameter."""
    for v in a.values:
        _check_good(v, p)
    return HGParams(tuple(dwork_op(v, p) for v in a.values))


def _image_matches(a: HGParams, image: Tuple[Fraction, ...]) -> bool:
    if image == a.values:
        return True
    return a.n == 2 and image == a.complement().values


def condition_check(a: HGParams, p: int) -> bool:
    """delta_p(a) == a, or for n = 2 also delta_p(a) == 1 - a, with p a good prime."""
    if not a.is_good_prime(p):
        raise BadPrime(f"p={p} divides a parameter denominator of {a}")
    return _image_matches(a, dwork_params(a, p).values)


def _delta_by_inverse(x: Fraction, inverse: int) -> Fraction:
    den = x.denominator
    return Fraction((inverse * x.numerator) % den, den)


def prime_classes(a: HGParams) -> List[Tuple[int, Tuple[Fraction, ...]]]:
    """(r, image) for each unit r mod c; every prime with p^-1 = r (mod c) gives that image."""
    c = a.denominator_lcm
    classes = []
    for r in range(1, c + 1):
        if math.gcd(r, c) != 1:
            continue
        image = tuple(sorted(_delta_by_inverse(v, r) for v in a.values))
        classes.append((r % c, image))
    return sorted(classes)


def condition_by_class(a: HGParams) -> bool:
    """The condition for every good prime at once, via the unit classes mod c."""
    return all(_image_matches(a, image) for _, image in prime_classes(a))


def dieudonne_test(f: Series, p: int) -> Optional[int]:
    """First index where f(z^p) / f(z)^p leaves 1 + p Z_p[[z]], or None."""
    if not f.order or f.coeffs[0] != 1:
        raise BadConstantTerm("Dieudonne test needs f(0) = 1")
    if f.order < p:
        raise PreconditionError(f"order {f.order} is below p={p}")
    ratio = compose(f, Series.monomial(1, p, f.order)) / power(f, p)
    return _first_not_divisible(ratio, p, start=1)


def dwork_theorem_check(a: HGParams, p: int, order: int) -> Optional[int]:
    """Check G/F(delta_p a | z^p) == p G/F(a | z) mod p Z_p[[z]] for k <= order.

    Any failure is a bug.
    """
    if order < p:
        raise PreconditionError(f"order {order} is below p={p}")
    shifted = dwork_params(a, p)
    inner = ratio_GF(shifted, order // p + 1)
    lhs = Series.from_list(inner.substitute_power(p).coeffs, order + 1)
    rhs = ratio_GF(a, order + 1).scale(p)
    return _first_not_divisible(lhs - rhs, p)


def fast_congruence(a: HGParams, p: int, order: int) -> Optional[int]:
    """First k <= order where G/F(delta_p a) - G/F(a) is not in p Z_p, or None."""
    shifted = dwork_params(a, p)
    diff = ratio_GF(shifted, order + 1) - ratio_GF(a, order + 1)
    return _first_not_divisible(diff, p)


def congruence_is_equality(a: HGParams, p: int, order: int) -> bool:
    """Whether G/F(delta_p a) == G/F(a) exactly to the checked order."""
    shifted = dwork_params(a, p)
    return ratio_GF(shifted, order + 1) == ratio_GF(a, order + 1)


def prime_in_class(c: int, r: int, bound: int) -> int:
    """Smallest prime p <= bound with p * r = 1 (mod c), i.e. p^-1 = r."""
    if math.gcd(r, c) != 1:
        raise PreconditionError(f"{r} is not a unit mod {c}")
    for p in primerange(2, bound + 1):
        if (p * r - 1) % c == 0:
            return int(p)
    raise NotFound(f"no prime p <= {bound} with p^-1 = {r} (mod {c})")


def _split_denominator(x: Fraction, q: int) -> Tuple[int, int]:
    """den(x) = s * q^y with q not dividing s."""
    s = x.denominator
    y = 0
    while s % q == 0:
        s //= q
        y += 1
    return s, y


def _matches_shift(diff: Fraction, base: int, r_range: range, i_range: range) -> bool:
    """diff == r / base - i for some r, i in the given ranges."""
    for i in i_range:
        r = (diff + i) * base
        if r.denominator == 1 and int(r) in r_range:
            return True
    return False


def dwork_structure_witness(
    x: Number, item: int, q: Optional[int] = None, m: int = 0, bound: int = 10_000
) -> Tuple[int, Fraction]:
    """Find a prime in the class of the chosen structure item and check the form of delta_p(x).

    x = t / (s q^y) in lowest terms; items:
      1. p^-1 = -1 (mod s q^y): delta = 1 - x
      2. y = 0, p^-1 = q (mod s): delta = q x - i, i in 0..q-1
      3. p^-1 = s + q (mod s q^y): delta = q x + r/q^y - i, r in 0..q^y-1, i in 0..q
      4. y >= 1, 0 <= m <= y, p^-1 = 1 + q^(y-m) s (mod s q^y):
         delta = x, or x + r/q^m - i with r in 1..q^m-1, i in 0..1
    """
    x = Fraction(x)
    if not 0 < x < 1:
        raise PreconditionError("x must lie in (0, 1)")
    den = x.denominator
    if item == 1:
        p = prime_in_class(den, den - 1, bound)
        delta = dwork_op(x, p)
        if delta != 1 - x:
            raise FormViolation(f"item 1: delta_{p}({x}) = {delta}, expected {1 - x}")
        return p, delta

    if q is None:
        raise PreconditionError(f"item {item} needs the prime q")
    s, y = _split_denominator(x, q)
    modulus = s * q**y

    if item == 2:
        if y != 0:
            raise PreconditionError("item 2 needs q not dividing the denominator")
        p = prime_in_class(s, q % s, bound)
        delta = dwork_op(x, p)
        if not _matches_shift(delta - q * x, 1, range(0, 1), range(0, q)):
            raise FormViolation(f"item 2: delta_{p}({x}) = {delta} is not {q}x - i")
        return p, delta

    if item == 3:
        p = prime_in_class(modulus, (s + q) % modulus, bound)
        delta = dwork_op(x, p)
        qy = q**y
        if not _matches_shift(delta - q * x, qy, range(0, qy), range(0, q + 1)):
            raise FormViolation(f"item 3: delta_{p}({x}) = {delta} has no allowed form")
        return p, delta

    if item == 4:
        if y < 1 or not 0 <= m <= y:
            raise PreconditionError("item 4 needs y >= 1 and 0 <= m <= y")
        p = prime_in_class(modulus, (1 + q ** (y - m) * s) % modulus, bound)
        delta = dwork_op(x, p)
        qm = q**m
        if delta != x and not _matches_shift(delta - x, qm, range(1, qm), range(0, 2)):
            raise FormViolation(f"item 4: delta_{p}({x}) = {delta} has no allowed form")
        return p, delta

    raise PreconditionError(f"unknown structure item {item}")


@dataclass
class IntegralityReport:
    """Verdicts for one (a, p) cell up to the checked order."""

    params: HGParams
    p: int
    order: int
    condition_holds: Optional[bool] = None
    q_checked: bool = False
    q_first_failure: Optional[int] = None
    fast_congruence_first_failure: Optional[int] = None
    fast_congruence_equal: Optional[bool] = None
    dieudonne_first_failure: Optional[int] = None
    checks: Tuple[str, ...] = field(default=DEFAULT_CHECKS)

    @property
    def q_p_integral_to_order(self) -> Optional[int]:
        """Coefficients of q below this index are p-integral (order + 1 when all checked ones are)."""
        if not self.q_checked:
            return None
        return self.order + 1 if self.q_first_failure is None else self.q_first_failure

    @property
    def q_integral(self) -> Optional[bool]:
        if not self.q_checked:
            return None
        return self.q_first_failure is None

    @property
    def failed(self) -> bool:
        """A non-integrality witness was found."""
        return (
            self.q_integral is False
            or self.fast_congruence_first_failure is not None
            or self.dieudonne_first_failure is not None
        )

    @property
    def consistent(self) -> bool:
        """Condition true must come with a p-integral q."""
        return not (self.condition_holds and self.q_integral is False)

    def to_dict(self) -> Dict:
        data: Dict = {
            "params": str(self.params),
            "prime": self.p,
            "order": self.order,
        }
        if "condition" in self.checks:
            data["condition"] = self.condition_holds
        if "q-integrality" in self.checks:
            data["q_integral_to"] = self.q_p_integral_to_order
        if "fast-congruence" in self.checks:
            data["fast_congruence_failure"] = self.fast_congruence_first_failure
            data["fast_congruence_equal"] = self.fast_congruence_equal
        if "dieudonne" in self.checks:
            data["dieudonne_failure"] = self.dieudonne_first_failure
        return data


def integrality_report(
    a: HGParams, p: int, order: int, checks: Sequence[str] = DEFAULT_CHECKS
) -> IntegralityReport:
    """Run the selected checks for one good prime."""
    unknown = set(checks) - set(CHECKS)
    if unknown:
        raise PreconditionError(f"unknown checks: {', '.join(sorted(unknown))}")
    if not a.is_good_prime(p):
        raise BadPrime(f"p={p} divides a parameter denominator of {a}")
    if "dieudonne" in checks and order < p:
        raise PreconditionError(f"dieudonne check needs order >= p, got {order} for p={p}")
    report = IntegralityReport(params=a, p=p, order=order, checks=tuple(checks))
    if "condition" in checks:
        report.condition_holds = condition_check(a, p)
    if "q-integrality" in checks:
        report.q_checked = True
        report.q_first_failure = series_p_integral(mirror_q(a, order), p)
    if "fast-congruence" in checks:
        report.fast_congruence_first_failure = fast_congruence(a, p, order)
        report.fast_congruence_equal = congruence_is_equality(a, p, order)
    if "dieudonne" in checks:
        q_over_z = Series(mirror_q(a, order).coeffs[1:])
        report.dieudonne_first_failure = dieudonne_test(q_over_z, p)
    return report
