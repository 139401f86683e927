"""整系数单变量 Laurent 多项式。

Alexander 多项式和 Seiberg-Witten 多项式都用这个类型承载。系数是 Python 的
任意精度整数，全程不出现浮点数。
"""
import logging
import re
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Tuple, Union

from src.interface.ErrorCode import ErrorCode
from src.interface.TopologyError import (
    InexactDivisionError,
    InvariantViolation,
    KnotParseError,
    LabelMismatchError,
    SymmetryViolation,
    TopologyError,
)

logger = logging.getLogger(__name__)

DEFAULT_VAR = "t"

@dataclass(frozen=True)
class LaurentPoly:
    """Laurent 多项式，terms 按指数降序存放，不含零系数"""
    terms: Tuple[Tuple[int, int], ...] = ()
    var_label: str = DEFAULT_VAR

    def __post_init__(self):
        merged: Dict[int, int] = defaultdict(int)
        for exponent, coeff in self.terms:
            merged[int(exponent)] += int(coeff)
        normalized = tuple(sorted(((e, c) for e, c in merged.items() if c != 0), reverse=True))
        object.__setattr__(self, "terms", normalized)

    @classmethod
    def from_dict(cls, coeffs: Mapping[int, int], var_label: str = DEFAULT_VAR) -> "LaurentPoly":
        return cls(tuple(coeffs.items()), var_label)

    @classmethod
    def constant(cls, value: int, var_label: str = DEFAULT_VAR) -> "LaurentPoly":
        return cls(((0, value),), var_label)

    @classmethod
    def monomial(cls, coeff: int, exponent: int, var_label: str = DEFAULT_VAR) -> "LaurentPoly":
        return cls(((exponent, coeff),), var_label)

    @property
    def coeffs(self) -> Dict[int, int]:
        return dict(self.terms)

    def coeff(self, exponent: int) -> int:
        return self.coeffs.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def max_exponent(self) -> int:
        if self.is_zero():
            raise InvariantViolation("零多项式没有最高次数", ErrorCode.INV_ZERO_POLYNOMIAL, provenance="laurent")
        return self.terms[0][0]

    @property
    def min_exponent(self) -> int:
        if self.is_zero():
            raise InvariantViolation("零多项式没有最低次数", ErrorCode.INV_ZERO_POLYNOMIAL, provenance="laurent")
        return self.terms[-1][0]

    def relabel(self, var_label: str) -> "LaurentPoly":
        return LaurentPoly(self.terms, var_label)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        return add(self, other)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return sub(self, other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        return mul(self, other)

    def __neg__(self) -> "LaurentPoly":
        return neg(self)

    def __pow__(self, power: int) -> "LaurentPoly":
        if power < 0:
            raise TopologyError("Laurent 多项式只支持非负整数次幂", ErrorCode.INVALID_PARAMETER, provenance="laurent")
        result = LaurentPoly.constant(1, self.var_label)
        for _ in range(power):
            result = mul(result, self)
        return result

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True)
class SymmetricForm:
    """a0 + Σ a_n (t^n + parity_sign * t^-n)"""
    a0: int
    pairs: Tuple[Tuple[int, int], ...]
    parity_sign: int = 1


def _check_labels(p: LaurentPoly, q: LaurentPoly) -> None:
    if p.var_label != q.var_label:
        raise LabelMismatchError(p.var_label, q.var_label)


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    _check_labels(p, q)
    return LaurentPoly(p.terms + q.terms, p.var_label)


def neg(p: LaurentPoly) -> LaurentPoly:
    return LaurentPoly(tuple((e, -c) for e, c in p.terms), p.var_label)


def sub(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return add(p, neg(q))


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """卷积乘法"""
    _check_labels(p, q)
    product: Dict[int, int] = defaultdict(int)
    for e1, c1 in p.terms:
        for e2, c2 in q.terms:
            product[e1 + e2] += c1 * c2
    return LaurentPoly.from_dict(product, p.var_label)


def shift(p: LaurentPoly, k: int) -> LaurentPoly:
    """乘以 t^k"""
    return LaurentPoly(tuple((e + k, c) for e, c in p.terms), p.var_label)


def substitute_power(p: LaurentPoly, m: int, new_label: str) -> LaurentPoly:
    """t -> t^m，同时更换形式变量标签"""
    if m < 1:
        raise TopologyError(f"substitute_power 要求 m >= 1，实际为 {m}", ErrorCode.INVALID_PARAMETER, provenance="laurent")
    return LaurentPoly(tuple((e * m, c) for e, c in p.terms), new_label)


def eval_at_one(p: LaurentPoly) -> int:
    return sum(c for _, c in p.terms)


def evaluate(p: LaurentPoly, x: Union[int, Fraction]) -> Fraction:
    """在整数或有理数点处精确求值"""
    x = Fraction(x)
    if x == 0 and any(e < 0 for e, _ in p.terms):
        raise TopologyError("负指数项不能在 0 处求值", ErrorCode.INVALID_PARAMETER, provenance="laurent")
    return sum((c * x ** e for e, c in p.terms), Fraction(0))


def exact_div(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """精确除法 p / q；不整除时抛出 InexactDivisionError，绝不取整"""
    _check_labels(p, q)
    if q.is_zero():
        raise InexactDivisionError("除数为零多项式")
    if p.is_zero():
        return LaurentPoly((), p.var_label)
    lowest_allowed = p.min_exponent - q.min_exponent
    lead_exp, lead_coeff = q.terms[0]
    remainder = p
    quotient: Dict[int, int] = {}
    while not remainder.is_zero():
        top_exp, top_coeff = remainder.terms[0]
        exponent = top_exp - lead_exp
        if exponent < lowest_allowed or top_coeff % lead_coeff != 0:
            raise InexactDivisionError(f"({to_text(p)}) 不能被 ({to_text(q)}) 整除")
        factor = LaurentPoly.monomial(top_coeff // lead_coeff, exponent, p.var_label)
        quotient[exponent] = top_coeff // lead_coeff
        remainder = sub(remainder, mul(factor, q))
    return LaurentPoly.from_dict(quotient, p.var_label)


def center(p: LaurentPoly) -> LaurentPoly:
    """平移使指数范围关于 0 对称；范围长度为奇数时无法居中"""
    if p.is_zero():
        return p
    total = p.max_exponent + p.min_exponent
    if total % 2 != 0:
        raise SymmetryViolation(f"{to_text(p)} 的指数范围无法居中", exponent=p.max_exponent)
    return shift(p, -total // 2)


def to_symmetric(p: LaurentPoly, parity_sign: int = 1) -> SymmetricForm:
    if parity_sign not in (1, -1):
        raise TopologyError(f"parity_sign 只能是 ±1，实际为 {parity_sign}", ErrorCode.INVALID_PARAMETER, provenance="laurent")
    coeffs = p.coeffs
    exponents = sorted({abs(e) for e in coeffs if e != 0})
    pairs = []
    for n in exponents:
        if coeffs.get(-n, 0) != parity_sign * coeffs.get(n, 0):
            raise SymmetryViolation(f"指数 {n} 处不满足 coeff(-n) = {parity_sign}·coeff(n)", exponent=n)
        if coeffs.get(n, 0) != 0:
            pairs.append((n, coeffs[n]))
    return SymmetricForm(a0=coeffs.get(0, 0), pairs=tuple(pairs), parity_sign=parity_sign)


def from_symmetric(form: SymmetricForm, var_label: str = DEFAULT_VAR) -> LaurentPoly:
    terms = [(0, form.a0)]
    for n, a_n in form.pairs:
        terms.append((n, a_n))
        terms.append((-n, form.parity_sign * a_n))
    return LaurentPoly(tuple(terms), var_label)


def degree_and_top(p: LaurentPoly) -> Tuple[int, int]:
    """返回 (d, a_d)：d 为最高次数，a_d 为首项系数"""
    if p.is_zero():
        raise InvariantViolation("零多项式没有次数", ErrorCode.INV_ZERO_POLYNOMIAL, provenance="laurent")
    d, a_d = p.terms[0]
    if d != -p.min_exponent:
        raise SymmetryViolation(f"{to_text(p)} 不是居中的对称多项式", exponent=d)
    return d, a_d


def is_monic(p: LaurentPoly) -> bool:
    _, a_d = degree_and_top(p)
    return abs(a_d) == 1


# 文本形式: "2*t^2 - 3 + 2*t^-2"，指数降序
def _format_term(exponent: int, magnitude: int) -> str:
    if exponent == 0:
        return str(magnitude)
    power = "t" if exponent == 1 else f"t^{exponent}"
    return power if magnitude == 1 else f"{magnitude}*{power}"


def to_text(p: LaurentPoly) -> str:
    if p.is_zero():
        return "0"
    pieces = []
    for index, (exponent, coeff) in enumerate(p.terms):
        body = _format_term(exponent, abs(coeff))
        if index == 0:
            pieces.append(f"-{body}" if coeff < 0 else body)
        else:
            pieces.append(f" - {body}" if coeff < 0 else f" + {body}")
    return "".join(pieces)


_TERM = re.compile(
    r"\s*(?P<sign>[+-])?\s*"
    r"(?:(?P<coeff>\d+)(?:\s*\*\s*t(?:\^(?P<exp1>-?\d+))?)?"
    r"|t(?:\^(?P<exp2>-?\d+))?)\s*"
)


def from_text(text: str, var_label: str = DEFAULT_VAR) -> LaurentPoly:
    """解析 to_text 的输出"""
    source = text.strip()
    if source == "0":
        return LaurentPoly((), var_label)
    position = 0
    terms = []
    while position < len(source):
        match = _TERM.match(source, position)
        if not match or match.end() == position:
            raise KnotParseError(f"无法解析多项式文本 {text!r}（位置 {position}）", ErrorCode.PARSE_POLYNOMIAL_TEXT)
        if terms and match.group("sign") is None:
            raise KnotParseError(f"多项式文本 {text!r} 缺少运算符", ErrorCode.PARSE_POLYNOMIAL_TEXT)
        sign = -1 if match.group("sign") == "-" else 1
        chunk = match.group(0)
        if match.group("coeff") is not None:
            coeff = int(match.group("coeff"))
            if "t" in chunk:
                exponent = int(match.group("exp1")) if match.group("exp1") else 1
            else:
                exponent = 0
        else:
            coeff = 1
            exponent = int(match.group("exp2")) if match.group("exp2") else 1
        terms.append((exponent, sign * coeff))
        position = match.end()
    return LaurentPoly(tuple(terms), var_label)


def to_json(p: LaurentPoly) -> dict:
    return {"var": p.var_label, "terms": [[e, c] for e, c in p.terms]}


def from_json(data: Mapping) -> LaurentPoly:
    try:
        return LaurentPoly(tuple((int(e), int(c)) for e, c in data["terms"]), str(data["var"]))
    except (KeyError, TypeError, ValueError) as e:
        raise KnotParseError(f"多项式 JSON 格式错误: {e}", ErrorCode.PARSE_POLYNOMIAL_TEXT)
