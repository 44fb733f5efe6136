"""
초기하 급수 F, G 와 거울 사상 계산 서비스
"""

from fractions import Fraction
from functools import lru_cache
from typing import Tuple

from mirrorlab.core.errors import PreconditionError
from mirrorlab.core.models.params import HGParams
from mirrorlab.core.models.series import (
    ONE,
    ZERO,
    Number,
    Series,
    exp,
    pow_alpha,
    theta,
)
from mirrorlab.core.utils.cache import load_series, memoized, store_series


def pochhammer(x: Number, k: int) -> Fraction:
    """Rising factorial (x)_k = x (x+1) ... (x+k-1), (x)_0 = 1."""
    if k < 0:
        raise PreconditionError("k must be nonnegative")
    x = Fraction(x)
    result = ONE
    for i in range(k):
        result *= x + i
    return result


def _check_order(order: int) -> None:
    if order < 1:
        raise PreconditionError("truncation order must be at least 1")


@lru_cache(maxsize=256)
def _frobenius(a: HGParams, order: int) -> Tuple[Series, Series]:
    """F and G together; the bracket of G is accumulated across k."""
    key = str(a)
    cached_f = load_series("F", key, order)
    cached_g = load_series("G", key, order)
    if cached_f is not None and cached_g is not None:
        return cached_f, cached_g

    n = a.n
    f_coeffs = [ONE]
    g_coeffs = [ZERO]
    term = ONE
    bracket = ZERO
    for k in range(1, order):
        i = k - 1
        for aj in a.values:
            term *= aj + i
            bracket += 1 / (aj + i)
        term /= Fraction(k) ** n
        bracket -= Fraction(n, k)
        f_coeffs.append(term)
        g_coeffs.append(term * bracket)
    f = Series(tuple(f_coeffs))
    g = Series(tuple(g_coeffs))
    store_series("F", key, f)
    store_series("G", key, g)
    return f, g


def series_F(a: HGParams, order: int) -> Series:
    """Holomorphic solution: coefficient k is prod (a_i)_k / (k!)^n."""
    _check_order(order)
    return _frobenius(a, order)[0]


def series_G(a: HGParams, order: int) -> Series:
    """G of the first logarithmic solution G + F log z."""
    _check_order(order)
    return _frobenius(a, order)[1]


@lru_cache(maxsize=512)
def ratio_GF(a: HGParams, order: int) -> Series:
    """G/F = sum C_k(a) z^k."""
    _check_order(order)
    return memoized("ratio", str(a), order, lambda: series_G(a, order) / series_F(a, order))


@lru_cache(maxsize=256)
def mirror_q(a: HGParams, order: int) -> Series:
    """q(a|z) = z exp(G/F); coefficients of z^0..z^order are returned."""
    _check_order(order)
    return memoized("q", str(a), order + 1, lambda: exp(ratio_GF(a, order)).mul_z())


def ratio_equal(a: HGParams, b: HGParams, order: int) -> bool:
    """C_k(a) == C_k(b) for 1 <= k <= order."""
    if a.n != b.n:
        raise PreconditionError("parameter lists must have the same length")
    if a == b:
        return True
    return ratio_GF(a, order + 1) == ratio_GF(b, order + 1)


def euler_identity_check(a1: Number, b1: Number, order: int) -> bool:
    """2F1(a,b;1|z) == (1-z)^(1-a-b) 2F1(1-a,1-b;1|z) as truncated series."""
    _check_order(order)
    a1 = Fraction(a1)
    b1 = Fraction(b1)
    lhs = series_F(HGParams((a1, b1)), order)
    reflected = series_F(HGParams((1 - a1, 1 - b1)), order)
    one_minus_z = Series.from_list([1, -1], order)
    rhs = pow_alpha(one_minus_z, 1 - a1 - b1) * reflected
    return lhs == rhs


def hypergeometric_operator(a: HGParams, y: Series) -> Series:
    """theta^n y - z (theta + a_1) ... (theta + a_n) y."""
    head = y
    for _ in range(a.n):
        head = theta(head)
    tail = y
    for aj in a.values:
        tail = theta(tail) + tail.scale(aj)
    return head - tail.mul_z()


def hypergeometric_operator_dtheta(a: HGParams, y: Series) -> Series:
    """The theta-derivative of the operator applied to y.

    For L = P(theta), L(G + F log z) = log z * L(F) + L(G) + P'(theta) F.
    """
    n = a.n
    head = y
    for _ in range(n - 1):
        head = theta(head)
    head = head.scale(n)
    tail = Series.zero(y.order)
    for skip in range(n):
        factor = y
        for j, aj in enumerate(a.values):
            if j != skip:
                factor = theta(factor) + factor.scale(aj)
        tail = tail + factor
    return head - tail.mul_z()
