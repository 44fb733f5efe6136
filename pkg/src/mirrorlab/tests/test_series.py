"""
절단 멱급수 연산 테스트
"""

import random
from fractions import Fraction
from unittest import TestCase

from mirrorlab.core.errors import (
    BadConstantTerm,
    DivisionByNonUnit,
    InvalidParams,
    NonNilpotentInner,
    NotReversible,
    PreconditionError,
)
from mirrorlab.core.models.series import (
    Series,
    arith,
    compose,
    exp,
    exp_log,
    format_rational,
    log,
    parse_rational,
    pow_alpha,
    power,
    rescale,
    revert,
    theta,
)

SEED = 20130601
INSTANCES = 200


def random_series(rng: random.Random, order: int, constant=None) -> Series:
    coeffs = [Fraction(rng.randint(-6, 6), rng.randint(1, 5)) for _ in range(order)]
    if constant is not None:
        coeffs[0] = Fraction(constant)
    return Series(tuple(coeffs))


class TestRational(TestCase):
    """유리수 파싱/출력 테스트"""

    def test_parse(self):
        self.assertEqual(parse_rational("3/6"), Fraction(1, 2))
        self.assertEqual(parse_rational(" −2/4 "), Fraction(-1, 2))
        self.assertEqual(parse_rational("7"), Fraction(7))

    def test_parse_rejects_garbage(self):
        for text in ("", "1/0", "abc", "1/2/3"):
            with self.assertRaises(InvalidParams):
                parse_rational(text)

    def test_format_is_canonical(self):
        self.assertEqual(format_rational(Fraction(4, 8)), "1/2")
        self.assertEqual(format_rational(Fraction(6, 3)), "2")
        self.assertEqual(format_rational(Fraction(-3, 9)), "-1/3")


class TestSeriesBasics(TestCase):
    """급수 기본 연산 테스트"""

    def test_from_list_pads_and_truncates(self):
        self.assertEqual(Series.from_list([1, 2], 4).coeffs, (1, 2, 0, 0))
        self.assertEqual(Series.from_list([1, 2, 3], 2).order, 2)

    def test_binary_ops_take_minimum_order(self):
        f = Series.from_list([1, 1], 5)
        g = Series.from_list([1, -1], 3)
        self.assertEqual((f * g).order, 3)
        self.assertEqual((f * g).coeffs, (1, 0, -1))
        self.assertEqual((f + g).coeffs, (2, 0, 0))

    def test_division(self):
        one_minus_z = Series.from_list([1, -1], 6)
        geometric = Series.one(6) / one_minus_z
        self.assertEqual(geometric.coeffs, (1,) * 6)

    def test_division_by_non_unit(self):
        with self.assertRaises(DivisionByNonUnit):
            Series.one(4) / Series.variable(4)

    def test_index_beyond_order(self):
        with self.assertRaises(IndexError):
            Series.one(3)[3]

    def test_mul_z_and_substitute_power(self):
        f = Series.from_list([1, 2, 3])
        self.assertEqual(f.mul_z().coeffs, (0, 1, 2, 3))
        self.assertEqual(f.substitute_power(2).coeffs, (1, 0, 2, 0, 3, 0))

    def test_power(self):
        f = Series.from_list([1, 1], 5)
        self.assertEqual(power(f, 3).coeffs, (1, 3, 3, 1, 0))
        self.assertEqual((f**-1).coeffs, (1, -1, 1, -1, 1))

    def test_json_text(self):
        f = Series.from_list([Fraction(1, 2), 0, -3])
        self.assertEqual(f.to_json(), '["1/2", "0", "-3"]')
        self.assertEqual(Series.from_json(f.to_json()), f)

    def test_named_operations(self):
        f = Series.from_list([1, 1], 4)
        self.assertEqual(arith(f, f, "mul"), f * f)
        self.assertEqual(exp_log(Series.variable(4), "exp"), exp(Series.variable(4)))
        self.assertEqual(exp_log(f, "log"), log(f))
        with self.assertRaises(PreconditionError):
            arith(f, f, "mod")
        with self.assertRaises(PreconditionError):
            exp_log(f, "sin")

    def test_exp_log_constant_terms(self):
        with self.assertRaises(BadConstantTerm):
            exp(Series.one(3))
        with self.assertRaises(BadConstantTerm):
            log(Series.variable(3))

    def test_pow_alpha_square_root(self):
        one_minus_z = Series.from_list([1, -1], 8)
        root = pow_alpha(one_minus_z, Fraction(1, 2))
        self.assertEqual(root * root, one_minus_z)
        self.assertEqual(root[1], Fraction(-1, 2))

    def test_compose_requires_nilpotent_inner(self):
        with self.assertRaises(NonNilpotentInner):
            compose(Series.one(3), Series.one(3))

    def test_compose_monomial_matches_rescale(self):
        f = Series.from_list([1, 2, 3, 4, 5])
        self.assertEqual(compose(f, Series.monomial(3, 1, 5)), rescale(f, 3))
        self.assertEqual(compose(f, Series.monomial(1, 2, 5)).coeffs, (1, 0, 2, 0, 3))

    def test_revert_needs_linear_term(self):
        with self.assertRaises(NotReversible):
            revert(Series.from_list([0, 0, 1], 4))
        with self.assertRaises(NotReversible):
            revert(Series.from_list([1, 1], 4))

    def test_revert_geometric(self):
        # z/(1-z) 의 역함수는 z/(1+z)
        f = Series.from_list([0] + [1] * 7)
        g = revert(f)
        self.assertEqual(g.coeffs, tuple([0] + [(-1) ** (k + 1) for k in range(1, 8)]))


class TestSeriesProperties(TestCase):
    """고정 시드 무작위 성질 테스트"""

    def setUp(self):
        self.rng = random.Random(SEED)

    def test_exp_log_round_trip(self):
        for _ in range(INSTANCES):
            f = random_series(self.rng, 7, constant=1)
            self.assertEqual(exp(log(f)), f)
            g = random_series(self.rng, 7, constant=0)
            self.assertEqual(log(exp(g)), g)

    def test_revert_round_trip(self):
        for _ in range(INSTANCES):
            f = random_series(self.rng, 7, constant=0)
            if not f[1]:
                f = f + Series.variable(7)
            g = revert(f)
            self.assertEqual(compose(f, g), Series.variable(7))
            self.assertEqual(compose(g, f), Series.variable(7))

    def test_theta_leibniz(self):
        for _ in range(INSTANCES):
            f = random_series(self.rng, 6)
            g = random_series(self.rng, 6)
            self.assertEqual(theta(f * g), theta(f) * g + f * theta(g))

    def test_division_inverts_multiplication(self):
        for _ in range(INSTANCES):
            f = random_series(self.rng, 6)
            g = random_series(self.rng, 6, constant=self.rng.choice([1, -2, 3]))
            self.assertEqual((f * g) / g, f)

    def test_compose_is_associative_with_rescale(self):
        for _ in range(INSTANCES):
            f = random_series(self.rng, 6)
            c = Fraction(self.rng.randint(1, 7), self.rng.randint(1, 3))
            self.assertEqual(compose(f, Series.monomial(c, 1, 6)), rescale(f, c))

    def test_ring_axioms(self):
        for _ in range(INSTANCES):
            f, g, h = (random_series(self.rng, 12) for _ in range(3))
            self.assertEqual((f + g) * h, f * h + g * h)
            self.assertEqual(f * (g * h), (f * g) * h)

    def test_pow_alpha_exponent_law(self):
        for _ in range(INSTANCES):
            f = random_series(self.rng, 8, constant=1)
            a = Fraction(self.rng.randint(-5, 5), self.rng.randint(1, 4))
            b = Fraction(self.rng.randint(-5, 5), self.rng.randint(1, 4))
            self.assertEqual(pow_alpha(f, a + b), pow_alpha(f, a) * pow_alpha(f, b))
