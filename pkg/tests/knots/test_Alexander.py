import unittest

from src.algebra.LaurentPoly import LaurentPoly, eval_at_one, to_symmetric, to_text
from src.interface.ErrorCode import ErrorCode
from src.interface.TopologyError import InvariantViolation, KnotParseError
from src.knots.Presentation import SeifertMatrix, closure_components, parse_braid
from src.knots.alexander import alexander_from_braid, alexander_from_seifert, bareiss_determinant, burau_generator

def poly(coeffs):
    return LaurentPoly.from_dict(coeffs)

TREFOIL = poly({1: 1, 0: -1, -1: 1})
FIGURE_EIGHT = poly({1: -1, 0: 3, -1: -1})
FIVE_TWO = poly({1: 2, 0: -3, -1: 2})


class TestParseBraid(unittest.TestCase):

    def test_parse(self):
        braid = parse_braid("2: -1 -1 -1")
        self.assertEqual(braid.strands, 2)
        self.assertEqual(braid.letters, (-1, -1, -1))
        self.assertEqual(parse_braid("3: 1 -2 1 -2").letters, (1, -2, 1, -2))

    def test_link_rejected(self):
        with self.assertRaises(KnotParseError) as context:
            parse_braid("3: 1 1")
        self.assertEqual(context.exception.error_code, ErrorCode.PARSE_NOT_A_KNOT)
        self.assertEqual(closure_components(3, [1, 1]), 3, "σ₁σ₁ 的置换是恒等，3 股闭包有 3 个分支")
        self.assertEqual(closure_components(3, [1]), 2, "(12) 在 3 股上有 2 个轮换")

    def test_bad_input(self):
        cases = {
            "1 -2": ErrorCode.PARSE_BAD_TOKEN,
            "3: 1 x": ErrorCode.PARSE_BAD_TOKEN,
            "3: 0": ErrorCode.PARSE_BAD_TOKEN,
            "3: 3": ErrorCode.PARSE_GENERATOR_OUT_OF_RANGE,
            "1: ": ErrorCode.PARSE_BAD_TOKEN,
        }
        for text, code in cases.items():
            with self.assertRaises(KnotParseError, msg=text) as context:
                parse_braid(text)
            self.assertEqual(context.exception.error_code, code, f"{text!r} 的错误码不对")


class TestSeifertPath(unittest.TestCase):

    def test_trefoil(self):
        self.assertEqual(alexander_from_seifert(SeifertMatrix.from_rows([[-1, 1], [0, -1]])), TREFOIL)

    def test_unknot(self):
        self.assertEqual(alexander_from_seifert(SeifertMatrix.from_rows([])), LaurentPoly.constant(1))

    def test_figure_eight(self):
        self.assertEqual(alexander_from_seifert(SeifertMatrix.from_rows([[1, 1], [0, -1]])), FIGURE_EIGHT)

    def test_five_two(self):
        self.assertEqual(alexander_from_seifert(SeifertMatrix.from_rows([[1, 1], [0, 2]])), FIVE_TWO)

    def test_mirror_invariance(self):
        for rows in ([[-1, 1], [0, -1]], [[1, 1], [0, 2]], [[-1, 1], [0, 0]]):
            matrix = SeifertMatrix.from_rows(rows)
            self.assertEqual(alexander_from_seifert(matrix.mirror()), alexander_from_seifert(matrix), f"{rows} 的镜像")

    def test_not_unimodular(self):
        with self.assertRaises(InvariantViolation) as context:
            SeifertMatrix.from_rows([[1, 0], [0, 1]])
        self.assertEqual(context.exception.error_code, ErrorCode.INV_NOT_UNIMODULAR)

    def test_odd_size(self):
        with self.assertRaises(KnotParseError):
            SeifertMatrix.from_rows([[1]])

    def test_normalized(self):
        alexander = alexander_from_seifert(SeifertMatrix.from_rows([[-1, 1, 0, 0], [0, -1, 1, 0], [0, 0, -1, 1], [0, 0, 0, -1]]))
        self.assertEqual(to_text(alexander), "t^2 - t + 1 - t^-1 + t^-2")
        self.assertEqual(eval_at_one(alexander), 1)
        to_symmetric(alexander, 1)


class TestBurauPath(unittest.TestCase):

    def test_generator_shape(self):
        matrix = burau_generator(2, 1)
        self.assertEqual(matrix, [[poly({1: -1})]], "n=2 时 σ1 对应 -t")
        inverse = burau_generator(2, -1)
        self.assertEqual(inverse, [[poly({-1: -1})]])

    def test_generator_inverse(self):
        for strands in (3, 4):
            for index in range(1, strands):
                forward = burau_generator(strands, index)
                backward = burau_generator(strands, -index)
                size = strands - 1
                for r in range(size):
                    for c in range(size):
                        entry = LaurentPoly()
                        for k in range(size):
                            entry = entry + forward[r][k] * backward[k][c]
                        expected = LaurentPoly.constant(1) if r == c else LaurentPoly()
                        self.assertEqual(entry, expected, f"σ_{index} σ_{index}^-1 在 ({r},{c}) 处不是单位阵")

    def test_bareiss(self):
        t = poly({1: 1})
        one = LaurentPoly.constant(1)
        matrix = [[t, one], [one, t]]
        self.assertEqual(bareiss_determinant(matrix), poly({2: 1, 0: -1}))
        self.assertEqual(bareiss_determinant([[LaurentPoly(), one], [one, LaurentPoly()]]), poly({0: -1}))

    def test_trefoil(self):
        self.assertEqual(alexander_from_braid(parse_braid("2: -1 -1 -1")), TREFOIL)

    def test_unknot(self):
        self.assertEqual(alexander_from_braid(parse_braid("2: 1")), LaurentPoly.constant(1))

    def test_figure_eight(self):
        self.assertEqual(alexander_from_braid(parse_braid("3: 1 -2 1 -2")), FIGURE_EIGHT)

    def test_five_two(self):
        self.assertEqual(alexander_from_braid(parse_braid("3: 1 1 1 2 -1 2")), FIVE_TWO)

    def test_torus_knot(self):
        self.assertEqual(
            alexander_from_braid(parse_braid("2: -1 -1 -1 -1 -1")),
            poly({2: 1, 1: -1, 0: 1, -1: -1, -2: 1}),
        )


if __name__ == '__main__':
    unittest.main()
