import random
import unittest
from fractions import Fraction

from src.algebra.LaurentPoly import (
    LaurentPoly,
    SymmetricForm,
    add,
    center,
    degree_and_top,
    eval_at_one,
    evaluate,
    exact_div,
    from_json,
    from_symmetric,
    from_text,
    is_monic,
    mul,
    substitute_power,
    to_json,
    to_symmetric,
    to_text,
)
from src.interface.ErrorCode import ErrorCode
from src.interface.TopologyError import (
    InexactDivisionError,
    InvariantViolation,
    KnotParseError,
    LabelMismatchError,
    SymmetryViolation,
    TopologyError,
)

def poly(coeffs, label="t"):
    return LaurentPoly.from_dict(coeffs, label)

TREFOIL = poly({1: 1, 0: -1, -1: 1})
FIVE_TWO = poly({1: 2, 0: -3, -1: 2})
ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)


class TestLaurentArithmetic(unittest.TestCase):

    def test_add(self):
        self.assertEqual(add(poly({1: 1, 0: -1}), poly({0: 1, -1: 1})), poly({1: 1, -1: 1}), "加法应消去常数项")
        self.assertEqual(add(TREFOIL, ZERO), TREFOIL, "加零应不变")
        self.assertEqual(TREFOIL + TREFOIL, poly({1: 2, 0: -2, -1: 2}), "加法系数错误")

    def test_zero_coefficients_pruned(self):
        p = poly({3: 0, 1: 1, 0: 0})
        self.assertEqual(p.terms, ((1, 1),), "零系数不应被保存")
        self.assertTrue((TREFOIL - TREFOIL).is_zero(), "p - p 应为零多项式")

    def test_mul(self):
        self.assertEqual(mul(ONE, TREFOIL), TREFOIL, "乘以 1 应不变")
        self.assertEqual(
            mul(TREFOIL, TREFOIL),
            poly({2: 1, 1: -2, 0: 3, -1: -2, -2: 1}),
            "三叶结多项式平方错误",
        )
        self.assertTrue(mul(TREFOIL, ZERO).is_zero(), "乘以零应得零")

    def test_label_mismatch(self):
        other = TREFOIL.relabel("exp(2[T])")
        with self.assertRaises(LabelMismatchError) as context:
            add(TREFOIL, other)
        self.assertEqual(context.exception.error_code, ErrorCode.INV_VARIABLE_MISMATCH)
        with self.assertRaises(LabelMismatchError):
            mul(other, TREFOIL.relabel("exp([F])"))

    def test_substitute_power(self):
        self.assertEqual(substitute_power(TREFOIL, 1, "t"), TREFOIL)
        self.assertEqual(substitute_power(TREFOIL, 2, "t"), poly({2: 1, 0: -1, -2: 1}))
        self.assertEqual(substitute_power(FIVE_TWO, 3, "s"), poly({3: 2, 0: -3, -3: 2}, "s"))
        with self.assertRaises(TopologyError):
            substitute_power(TREFOIL, 0, "t")

    def test_substitute_power_matches_evaluation(self):
        p = poly({2: 1, 1: -2, 0: 3, -1: -2, -2: 1})
        for m in (1, 2, 3):
            substituted = substitute_power(p, m, "t")
            for x in (2, 3, -2, Fraction(1, 2)):
                self.assertEqual(evaluate(substituted, x), evaluate(p, Fraction(x) ** m), f"m={m}, x={x}")

    def test_eval_at_one(self):
        self.assertEqual(eval_at_one(TREFOIL), 1)
        self.assertEqual(eval_at_one(ZERO), 0)
        self.assertEqual(eval_at_one(FIVE_TWO), 1)

    def test_power(self):
        sw = poly({1: 1, -1: -1}) ** 2
        self.assertEqual(sw, poly({2: 1, 0: -2, -2: 1}), "(t - t^-1)^2 错误")
        self.assertEqual(TREFOIL ** 0, ONE)


class TestExactDivision(unittest.TestCase):

    def test_exact(self):
        dividend = mul(TREFOIL, poly({0: 1, 1: 1}))
        self.assertEqual(exact_div(dividend, poly({0: 1, 1: 1})), TREFOIL)

    def test_negative_exponents(self):
        # 1 + t^-5 = (1 + t) · (t^-1 - t^-2 + t^-3 - t^-4 + t^-5)
        quotient = exact_div(poly({0: 1, -5: 1}), poly({0: 1, 1: 1}))
        self.assertEqual(quotient, poly({-1: 1, -2: -1, -3: 1, -4: -1, -5: 1}))

    def test_inexact(self):
        with self.assertRaises(InexactDivisionError):
            exact_div(poly({2: 1, 0: 1}), poly({1: 1, 0: 1}))
        with self.assertRaises(InexactDivisionError):
            exact_div(poly({1: 1}), poly({0: 2}))
        with self.assertRaises(InexactDivisionError):
            exact_div(TREFOIL, ZERO)


class TestSymmetry(unittest.TestCase):

    def test_to_symmetric(self):
        self.assertEqual(to_symmetric(TREFOIL, 1), SymmetricForm(a0=-1, pairs=((1, 1),), parity_sign=1))
        self.assertEqual(to_symmetric(poly({1: 1, -1: -1}), -1), SymmetricForm(a0=0, pairs=((1, 1),), parity_sign=-1))

    def test_asymmetric(self):
        with self.assertRaises(SymmetryViolation) as context:
            to_symmetric(poly({1: 1, 0: 1}), 1)
        self.assertEqual(context.exception.exponent, 1, "应指出出错的指数")

    def test_round_trip(self):
        rng = random.Random(7)
        for _ in range(200):
            parity = rng.choice([1, -1])
            form = SymmetricForm(
                a0=rng.randint(-5, 5) if parity == 1 else 0,
                pairs=tuple((n, rng.randint(1, 9)) for n in range(1, rng.randint(1, 5))),
                parity_sign=parity,
            )
            self.assertEqual(to_symmetric(from_symmetric(form), parity), form)

    def test_center(self):
        self.assertEqual(center(poly({2: 1, 1: -1, 0: 1})), TREFOIL)
        with self.assertRaises(SymmetryViolation):
            center(poly({1: 1, 0: 1}))

    def test_degree_and_top(self):
        self.assertEqual(degree_and_top(TREFOIL), (1, 1))
        self.assertEqual(degree_and_top(ONE), (0, 1))
        self.assertEqual(degree_and_top(FIVE_TWO), (1, 2))
        with self.assertRaises(InvariantViolation) as context:
            degree_and_top(ZERO)
        self.assertEqual(context.exception.error_code, ErrorCode.INV_ZERO_POLYNOMIAL)

    def test_is_monic(self):
        self.assertTrue(is_monic(TREFOIL))
        self.assertFalse(is_monic(FIVE_TWO))
        self.assertTrue(is_monic(ONE))

    def test_degree_of_product(self):
        rng = random.Random(11)
        for _ in range(100):
            p = from_symmetric(SymmetricForm(rng.randint(-3, 3), tuple((n, rng.randint(1, 4)) for n in range(1, 4))))
            q = from_symmetric(SymmetricForm(rng.randint(-3, 3), tuple((n, rng.randint(1, 4)) for n in range(1, 3))))
            d_p, a_p = degree_and_top(p)
            d_q, a_q = degree_and_top(q)
            self.assertEqual(degree_and_top(mul(p, q)), (d_p + d_q, a_p * a_q))


class TestRingAxioms(unittest.TestCase):

    def setUp(self):
        self.rng = random.Random(20240601)

    def tearDown(self):
        self.rng = None

    def random_poly(self) -> LaurentPoly:
        return poly({self.rng.randint(-4, 4): self.rng.randint(-6, 6) for _ in range(self.rng.randint(0, 5))})

    def test_axioms(self):
        for case in range(1000):
            p, q, r = self.random_poly(), self.random_poly(), self.random_poly()
            self.assertEqual(p + q, q + p, f"第 {case} 组: 加法交换律")
            self.assertEqual((p + q) + r, p + (q + r), f"第 {case} 组: 加法结合律")
            self.assertEqual(p * q, q * p, f"第 {case} 组: 乘法交换律")
            self.assertEqual((p * q) * r, p * (q * r), f"第 {case} 组: 乘法结合律")
            self.assertEqual(p * (q + r), p * q + p * r, f"第 {case} 组: 分配律")
            self.assertEqual(p * ONE, p, f"第 {case} 组: 乘法单位元")
            self.assertTrue((p - p).is_zero(), f"第 {case} 组: 加法逆元")


class TestTextAndJson(unittest.TestCase):

    def test_to_text(self):
        self.assertEqual(to_text(TREFOIL), "t - 1 + t^-1")
        self.assertEqual(to_text(poly({1: -1, 0: 3, -1: -1})), "-t + 3 - t^-1")
        self.assertEqual(to_text(poly({2: 2, 0: -3, -2: 2})), "2*t^2 - 3 + 2*t^-2")
        self.assertEqual(to_text(ZERO), "0")

    def test_from_text(self):
        for text in ("t - 1 + t^-1", "-t + 3 - t^-1", "2*t^2 - 3 + 2*t^-2", "0", "7"):
            self.assertEqual(to_text(from_text(text)), text, f"文本 {text!r} 解析后应还原")
        with self.assertRaises(KnotParseError):
            from_text("t +* 1")

    def test_json(self):
        self.assertEqual(to_json(FIVE_TWO), {"var": "t", "terms": [[1, 2], [0, -3], [-1, 2]]})
        self.assertEqual(from_json(to_json(TREFOIL.relabel("exp(2[T])"))), TREFOIL.relabel("exp(2[T])"))
        with self.assertRaises(KnotParseError):
            from_json({"terms": [[1, 1]]})


if __name__ == '__main__':
    unittest.main()
