"""
유리수 계수 절단 멱급수 모델
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

from mirrorlab.core.errors import (
    BadConstantTerm,
    DivisionByNonUnit,
    InvalidParams,
    NonNilpotentInner,
    NotReversible,
    PreconditionError,
)

Number = Union[int, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" with an optional leading minus sign."""
    cleaned = text.strip().replace("−", "-")
    if not cleaned:
        raise InvalidParams("empty rational")
    try:
        if "/" in cleaned:
            num, den = cleaned.split("/", 1)
            if int(den) == 0:
                raise InvalidParams(f"zero denominator in {text!r}")
            return Fraction(int(num), int(den))
        return Fraction(int(cleaned))
    except ValueError as e:
        raise InvalidParams(f"not a rational: {text!r}") from e


def format_rational(x: Number) -> str:
    """Canonical text form: lowest terms, "p" for integers."""
    value = Fraction(x)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class Series:
    """Truncated power series: coeffs[k] is the coefficient of z^k for k < order.

    Coefficients from index ``order`` on are unknown, not zero.
    """

    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    # 생성자
    @classmethod
    def from_list(cls, values: Iterable[Number], order: int = -1) -> "Series":
        coeffs = [Fraction(v) for v in values]
        if order >= 0:
            coeffs = (coeffs + [ZERO] * order)[:order]
        return cls(tuple(coeffs))

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls((ZERO,) * order)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls.monomial(ONE, 0, order)

    @classmethod
    def variable(cls, order: int) -> "Series":
        """The series z."""
        return cls.monomial(ONE, 1, order)

    @classmethod
    def monomial(cls, c: Number, m: int, order: int) -> "Series":
        coeffs = [ZERO] * order
        if m < order:
            coeffs[m] = Fraction(c)
        return cls(tuple(coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        if not 0 <= k < self.order:
            raise IndexError(f"coefficient {k} is beyond the truncation order {self.order}")
        return self.coeffs[k]

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise PreconditionError(f"cannot extend order {self.order} to {order}")
        return Series(self.coeffs[:order])

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def mul_z(self) -> "Series":
        """z * f, whose order is one more than f's."""
        return Series((ZERO,) + self.coeffs)

    def scale(self, c: Number) -> "Series":
        c = Fraction(c)
        return Series(tuple(c * a for a in self.coeffs))

    def derivative(self) -> "Series":
        return Series(tuple(k * self.coeffs[k] for k in range(1, self.order)))

    def substitute_power(self, m: int) -> "Series":
        """f(z^m); known up to index m * order - 1."""
        if m < 1:
            raise PreconditionError("exponent must be positive")
        coeffs = [ZERO] * (m * self.order)
        for k, c in enumerate(self.coeffs):
            coeffs[m * k] = c
        return Series(tuple(coeffs))

    def __add__(self, other: "Series") -> "Series":
        return arith(self, other, "add")

    def __sub__(self, other: "Series") -> "Series":
        return arith(self, other, "sub")

    def __mul__(self, other: "Series") -> "Series":
        return arith(self, other, "mul")

    def __truediv__(self, other: "Series") -> "Series":
        return arith(self, other, "div")

    def __neg__(self) -> "Series":
        return self.scale(-1)

    def __pow__(self, e: int) -> "Series":
        return power(self, e)

    def to_strings(self) -> List[str]:
        return [format_rational(c) for c in self.coeffs]

    def to_json(self) -> str:
        """JSON array of rational strings, lowest index first."""
        return json.dumps(self.to_strings())

    @classmethod
    def from_json(cls, text: str) -> "Series":
        data = json.loads(text)
        if not isinstance(data, list):
            raise InvalidParams("series JSON must be an array")
        return cls(tuple(parse_rational(str(item)) for item in data))

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            text = format_rational(c)
            terms.append(text if k == 0 else f"({text})*z^{k}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(z^{self.order})"


def _as_pair(f: Series, g: Series) -> Tuple[Sequence[Fraction], Sequence[Fraction], int]:
    order = min(f.order, g.order)
    return f.coeffs[:order], g.coeffs[:order], order


def _cauchy(a: Sequence[Fraction], b: Sequence[Fraction], order: int) -> List[Fraction]:
    support_b = [j for j in range(order) if b[j]]
    out = [ZERO] * order
    for i in range(order):
        ai = a[i]
        if not ai:
            continue
        for j in support_b:
            if i + j >= order:
                break
            out[i + j] += ai * b[j]
    return out


def _divide(a: Sequence[Fraction], b: Sequence[Fraction], order: int) -> List[Fraction]:
    if not b or not b[0]:
        raise DivisionByNonUnit("divisor has zero constant term")
    inv0 = 1 / b[0]
    support_b = [j for j in range(1, order) if b[j]]
    out: List[Fraction] = []
    for k in range(order):
        acc = a[k]
        for j in support_b:
            if j > k:
                break
            acc -= b[j] * out[k - j]
        out.append(acc * inv0)
    return out


def arith(f: Series, g: Series, op: str) -> Series:
    """Exact add/sub/mul/div truncated to the smaller order."""
    a, b, order = _as_pair(f, g)
    if op == "add":
        return Series(tuple(x + y for x, y in zip(a, b)))
    if op == "sub":
        return Series(tuple(x - y for x, y in zip(a, b)))
    if op == "mul":
        return Series(tuple(_cauchy(a, b, order)))
    if op == "div":
        return Series(tuple(_divide(a, b, order)))
    raise PreconditionError(f"unknown operation {op!r}")


def power(f: Series, e: int) -> Series:
    """f**e for a nonnegative integer e by repeated squaring."""
    if e < 0:
        return Series.one(f.order) / power(f, -e)
    result = Series.one(f.order)
    base = f
    while e:
        if e & 1:
            result = result * base
        e >>= 1
        if e:
            base = base * base
    return result


def _exp(f: Series) -> Series:
    if f.order and f.coeffs[0]:
        raise BadConstantTerm("exp needs f(0) = 0")
    order = f.order
    weighted = [(j, j * f.coeffs[j]) for j in range(1, order) if f.coeffs[j]]
    out = [ONE] if order else []
    for k in range(1, order):
        acc = ZERO
        for j, wj in weighted:
            if j > k:
                break
            acc += wj * out[k - j]
        out.append(acc / k)
    return Series(tuple(out))


def _log(f: Series) -> Series:
    if f.order and f.coeffs[0] != 1:
        raise BadConstantTerm("log needs f(0) = 1")
    order = f.order
    support = [j for j in range(1, order) if f.coeffs[j]]
    out = [ZERO] * order
    # f * theta(log f) = theta(f)
    for k in range(1, order):
        acc = k * f.coeffs[k]
        for j in support:
            if j >= k:
                break
            acc -= (k - j) * out[k - j] * f.coeffs[j]
        out[k] = acc / k
    return Series(tuple(out))


def exp_log(f: Series, op: str) -> Series:
    """Formal exponential (f(0) = 0) or logarithm (f(0) = 1)."""
    if op == "exp":
        return _exp(f)
    if op == "log":
        return _log(f)
    raise PreconditionError(f"unknown operation {op!r}")


def exp(f: Series) -> Series:
    return _exp(f)


def log(f: Series) -> Series:
    return _log(f)


def pow_alpha(f: Series, alpha: Number) -> Series:
    """exp(alpha * log f) for f(0) = 1."""
    if f.order and f.coeffs[0] != 1:
        raise BadConstantTerm("pow_alpha needs f(0) = 1")
    return _exp(_log(f).scale(alpha))


def compose(f: Series, g: Series) -> Series:
    """f(g(z)) truncated to the smaller order; requires g(0) = 0."""
    if g.order and g.coeffs[0]:
        raise NonNilpotentInner("inner series must have zero constant term")
    order = min(f.order, g.order)
    support = [k for k in range(order) if g.coeffs[k]]
    if not support:
        return Series.from_list(f.coeffs[:1], order)
    if len(support) == 1:
        # monomial substitution f(c z^m)
        m = support[0]
        c = g.coeffs[m]
        coeffs = [ZERO] * order
        ck = ONE
        for k in range((order - 1) // m + 1):
            coeffs[m * k] = f.coeffs[k] * ck
            ck *= c
        return Series(tuple(coeffs))
    inner = g.truncate(order)
    result = Series.from_list(f.coeffs[order - 1 : order], order)
    for k in range(order - 2, -1, -1):
        result = result * inner
        result = Series((result.coeffs[0] + f.coeffs[k],) + result.coeffs[1:])
    return result


def _pad(f: Series, order: int) -> Series:
    return Series.from_list(f.coeffs, order)


def revert(f: Series) -> Series:
    """Compositional inverse by Newton iteration, doubling the precision each step."""
    if f.order < 2 or f.coeffs[0] or not f.coeffs[1]:
        raise NotReversible("revert needs f(0) = 0 and f'(0) != 0")
    order = f.order
    g = Series.monomial(1 / f.coeffs[1], 1, 2)
    prec = 2
    while prec < order:
        prec = min(2 * prec, order)
        fp = f.truncate(prec)
        gp = _pad(g, prec)
        residual = compose(fp, gp) - Series.variable(prec)
        # residual starts at the old precision, so f'(g) is only needed to order prec - 1
        slope = _pad(compose(fp.derivative(), gp.truncate(prec - 1)), prec)
        g = gp - residual / slope
    return g


def theta(f: Series) -> Series:
    """z d/dz."""
    return Series(tuple(k * c for k, c in enumerate(f.coeffs)))


def rescale(f: Series, c: Number) -> Series:
    """f(c z)."""
    c = Fraction(c)
    out = []
    scale = ONE
    for a in f.coeffs:
        out.append(a * scale)
        scale *= c
    return Series(tuple(out))
