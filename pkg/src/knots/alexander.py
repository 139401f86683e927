"""对称化 Alexander 多项式的两个独立算法。

Seifert 路径用 sympy 在 ZZ[t] 上计算 det(tV - V^T)；辫子路径用约化 Burau 表示，
在自己的 Laurent 多项式算术上做分式无关的 Bareiss 消元。两者互为校验。
"""
import logging
from typing import List

import sympy as sp
from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from src.algebra.LaurentPoly import (
    LaurentPoly,
    center,
    eval_at_one,
    exact_div,
    mul,
    neg,
    sub,
    to_symmetric,
    to_text,
)
from src.interface.ErrorCode import ErrorCode
from src.interface.TopologyError import InvariantViolation
from src.knots.Presentation import BraidWord, SeifertMatrix

logger = logging.getLogger(__name__)

Matrix = List[List[LaurentPoly]]

_ZERO = LaurentPoly()
_ONE = LaurentPoly.constant(1)
_T = LaurentPoly.monomial(1, 1)
_T_INV = LaurentPoly.monomial(1, -1)


def normalize_alexander(raw: LaurentPoly, source: str) -> LaurentPoly:
    """把 ±t^k·Δ 规范成居中、对称且 Δ(1) = +1 的形式"""
    if raw.is_zero():
        raise InvariantViolation(f"{source}: 行列式为零，输入不是纽结", ErrorCode.INV_ALEXANDER_NORMALIZATION, provenance="knot")
    centered = center(raw)
    if eval_at_one(centered) < 0:
        centered = neg(centered)
    if eval_at_one(centered) != 1:
        raise InvariantViolation(
            f"{source}: Δ(1) = {eval_at_one(centered)}，不满足 Δ(1) = ±1",
            ErrorCode.INV_ALEXANDER_NORMALIZATION,
            provenance="knot",
        )
    to_symmetric(centered, 1)
    return centered


def alexander_from_seifert(seifert: SeifertMatrix) -> LaurentPoly:
    if seifert.size == 0:
        return _ONE
    t = sp.Symbol("t")
    ring = ZZ[t]
    gen = ring.from_sympy(t)
    size = seifert.size
    entries = [
        [gen * ring.convert(seifert.rows[r][c]) - ring.convert(seifert.rows[c][r]) for c in range(size)]
        for r in range(size)
    ]
    # ZZ[t] 上的 Bareiss 消元，不经过符号表达式化简
    determinant = DomainMatrix(entries, (size, size), ring).det()
    poly = sp.Poly(ring.to_sympy(determinant), t)
    raw = LaurentPoly.from_dict({monom[0]: int(coeff) for monom, coeff in poly.terms()})
    logger.debug(f"det(tV - V^T) = {to_text(raw)}")

    alexander = normalize_alexander(raw, "Seifert 矩阵")
    if not alexander.is_zero() and alexander.max_exponent > seifert.h:
        raise InvariantViolation(
            f"Alexander 多项式次数 {alexander.max_exponent} 超过 Seifert 亏格 {seifert.h}",
            ErrorCode.INV_ALEXANDER_NORMALIZATION,
            provenance="knot",
        )
    return alexander


def burau_generator(strands: int, letter: int) -> Matrix:
    """约化 Burau 表示中 σ_i^{±1} 的 (n-1)×(n-1) 矩阵，只有第 i 列不同于单位阵"""
    size = strands - 1
    matrix = [[_ONE if r == c else _ZERO for c in range(size)] for r in range(size)]
    column = abs(letter) - 1
    if letter > 0:
        above, diagonal, below = _T, neg(_T), _ONE
    else:
        above, diagonal, below = _ONE, neg(_T_INV), _T_INV
    if column - 1 >= 0:
        matrix[column - 1][column] = above
    matrix[column][column] = diagonal
    if column + 1 < size:
        matrix[column + 1][column] = below
    return matrix


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    size = len(a)
    result = []
    for r in range(size):
        row = []
        for c in range(size):
            entry = _ZERO
            for k in range(size):
                if not a[r][k].is_zero() and not b[k][c].is_zero():
                    entry = entry + mul(a[r][k], b[k][c])
            row.append(entry)
        result.append(row)
    return result


def bareiss_determinant(matrix: Matrix) -> LaurentPoly:
    """分式无关的 Bareiss 消元，每一步的除法都必须整除"""
    size = len(matrix)
    if size == 0:
        return _ONE
    m = [row[:] for row in matrix]
    sign = 1
    previous = _ONE
    for k in range(size - 1):
        if m[k][k].is_zero():
            pivot = next((r for r in range(k + 1, size) if not m[r][k].is_zero()), None)
            if pivot is None:
                return _ZERO
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = exact_div(sub(mul(m[i][j], m[k][k]), mul(m[i][k], m[k][j])), previous)
        previous = m[k][k]
    determinant = m[size - 1][size - 1]
    return determinant if sign == 1 else neg(determinant)


def alexander_from_braid(braid: BraidWord) -> LaurentPoly:
    """Δ(t)·(1 + t + ... + t^{n-1}) = ±t^j·det(I - ρ̄(b))"""
    size = braid.strands - 1
    representation = [[_ONE if r == c else _ZERO for c in range(size)] for r in range(size)]
    for letter in braid.letters:
        representation = _matmul(representation, burau_generator(braid.strands, letter))
    identity_minus = [
        [sub(_ONE if r == c else _ZERO, representation[r][c]) for c in range(size)]
        for r in range(size)
    ]
    determinant = bareiss_determinant(identity_minus)
    logger.debug(f"det(I - ρ̄(b)) = {to_text(determinant)}")

    cyclotomic = LaurentPoly.from_dict({k: 1 for k in range(braid.strands)})
    quotient = exact_div(determinant, cyclotomic)
    return normalize_alexander(quotient, f"辫子 {braid.to_text()}")
