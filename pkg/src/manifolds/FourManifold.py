import logging
from dataclasses import dataclass, replace
from typing import Dict, Mapping, Optional, Tuple

from src.algebra.LaurentPoly import LaurentPoly
from src.interface.Citation import Assertion
from src.interface.ErrorCode import ErrorCode
from src.interface.TopologyError import ConstructionError, InvariantViolation, SWUndefinedError

logger = logging.getLogger(__name__)

# 被追踪曲面的标签
TORUS = "T"
SECTION = "S"
SIGMA = "Σ"
SECOND_FIBER = "T′"
ROOT_SPHERE = "E8-root"
SURGERED_SECTION = "S′"
SIGMA_PRIME = "Σ′"
FIBER = "F"
MERIDIAN_TORUS = "T_m"
Y_SECTION = "C"
TAU = "τ"

@dataclass(frozen=True)
class SurfaceClass:
    """被追踪的嵌入曲面同调类"""
    label: str
    genus: int
    self_int: int
    pairings: Tuple[Tuple[str, int], ...] = ()
    in_cusp_neighborhood: bool = False
    is_symplectic_torus: bool = False

    def __post_init__(self):
        if self.genus < 0:
            raise InvariantViolation(f"曲面 {self.label} 的亏格不能为负", ErrorCode.INV_BETTI_PARITY, provenance="manifold")
        own = dict(self.pairings).get(self.label)
        if own is not None and own != self.self_int:
            raise InvariantViolation(
                f"曲面 {self.label} 与自身的配对 {own} 不等于自交数 {self.self_int}",
                ErrorCode.INV_BETTI_PARITY,
                provenance="manifold",
            )
        object.__setattr__(self, "pairings", tuple(sorted((k, v) for k, v in self.pairings if k != self.label)))

    def pairing(self, other_label: str) -> int:
        if other_label == self.label:
            return self.self_int
        return dict(self.pairings).get(other_label, 0)

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "genus": self.genus,
            "self_int": self.self_int,
            "pairings": dict(self.pairings),
            "in_cusp_neighborhood": self.in_cusp_neighborhood,
            "is_symplectic_torus": self.is_symplectic_torus,
        }


@dataclass(frozen=True)
class CanonicalClass:
    """用被追踪曲面类的整系数组合表示的典范类"""
    terms: Tuple[Tuple[str, int], ...] = ()

    def __post_init__(self):
        merged: Dict[str, int] = {}
        for label, coeff in self.terms:
            merged[label] = merged.get(label, 0) + coeff
        object.__setattr__(self, "terms", tuple(sorted((k, v) for k, v in merged.items() if v != 0)))

    @classmethod
    def from_dict(cls, coeffs: Mapping[str, int]) -> "CanonicalClass":
        return cls(tuple(coeffs.items()))

    def __add__(self, other: "CanonicalClass") -> "CanonicalClass":
        return CanonicalClass(self.terms + other.terms)

    def coeff(self, label: str) -> int:
        return dict(self.terms).get(label, 0)

    def is_zero(self) -> bool:
        return not self.terms

    def to_text(self) -> str:
        if self.is_zero():
            return "0"
        return " + ".join(f"{c}[{label}]" for label, c in self.terms)


@dataclass(frozen=True)
class GeographyPoint:
    chi: int
    c: int


@dataclass(frozen=True)
class FourManifold:
    """闭定向 4-流形的示性数与标记记录"""
    name: str
    euler: int
    sign: int
    b1: int
    spin: bool
    simply_connected: bool
    surfaces: Tuple[SurfaceClass, ...] = ()
    sw_poly: Optional[LaurentPoly] = None
    sw_class: str = TORUS
    sw_unit: int = 2
    canonical: Optional[CanonicalClass] = None
    sw_at_canonical: Optional[int] = None
    elliptic_n: Optional[int] = None
    assertions: Tuple[Assertion, ...] = ()

    def __post_init__(self):
        self.validate()

    @property
    def b2(self) -> int:
        return self.euler - 2 + 2 * self.b1

    @property
    def b_plus(self) -> int:
        total = self.b2 + self.sign
        if total % 2 != 0:
            raise InvariantViolation(f"{self.name}: b2 + sign = {total} 不是偶数", ErrorCode.INV_BETTI_PARITY, provenance="manifold")
        return total // 2

    @property
    def sw_label(self) -> str:
        unit = "" if self.sw_unit == 1 else str(self.sw_unit)
        return f"exp({unit}[{self.sw_class}])"

    @property
    def sw(self) -> LaurentPoly:
        if self.sw_poly is None:
            raise SWUndefinedError(self.name)
        return self.sw_poly

    @property
    def canonical_multiple(self) -> Optional[Tuple[int, Optional[str]]]:
        """当典范类是某个被追踪类的倍数时返回 (系数, 标签)"""
        if self.canonical is None:
            return None
        if self.canonical.is_zero():
            return (0, None)
        if len(self.canonical.terms) == 1:
            label, coeff = self.canonical.terms[0]
            return (coeff, label)
        return None

    def validate(self) -> None:
        if self.b2 < 0:
            raise InvariantViolation(f"{self.name}: b2 = {self.b2} < 0", ErrorCode.INV_BETTI_PARITY, provenance="manifold")
        if self.b_plus < 0 or self.b_plus > self.b2:
            raise InvariantViolation(f"{self.name}: b+ = {self.b_plus} 超出范围", ErrorCode.INV_BETTI_PARITY, provenance="manifold")
        if self.simply_connected:
            if self.b1 != 0:
                raise InvariantViolation(f"{self.name}: 单连通流形的 b1 必须为 0", ErrorCode.INV_BETTI_PARITY, provenance="manifold")
            if self.b_plus < 1:
                raise InvariantViolation(f"{self.name}: b+ = {self.b_plus} < 1", ErrorCode.INV_BETTI_PARITY, provenance="manifold")
        if self.spin and self.sign % 16 != 0:
            raise InvariantViolation(
                f"{self.name}: 自旋流形的符号差 {self.sign} 不是 16 的倍数 (Rochlin)",
                ErrorCode.INV_ROCHLIN,
                provenance="manifold",
            )
        labels = [s.label for s in self.surfaces]
        if len(labels) != len(set(labels)):
            raise InvariantViolation(f"{self.name}: 曲面标签重复 {labels}", ErrorCode.INV_BETTI_PARITY, provenance="manifold")
        for s in self.surfaces:
            for t in self.surfaces:
                a, b = dict(s.pairings).get(t.label), dict(t.pairings).get(s.label)
                if a is not None and b is not None and a != b:
                    raise InvariantViolation(
                        f"{self.name}: {s.label}·{t.label} 的配对不对称 ({a} != {b})",
                        ErrorCode.INV_BETTI_PARITY,
                        provenance="manifold",
                    )

    def has_surface(self, label: str) -> bool:
        return any(s.label == label for s in self.surfaces)

    def surface(self, label: str) -> SurfaceClass:
        for s in self.surfaces:
            if s.label == label:
                return s
        raise ConstructionError(f"{self.name} 中没有被追踪的曲面 {label!r}", ErrorCode.CONS_SURFACE_NOT_FOUND)

    def intersection(self, first: str, second: str) -> int:
        """两个被追踪类的交数；任一方记录了即可"""
        a = self.surface(first)
        if first == second:
            return a.self_int
        recorded = dict(a.pairings).get(second)
        if recorded is not None:
            return recorded
        return self.surface(second).pairing(first)

    def with_assertions(self, *assertions: Assertion) -> "FourManifold":
        return replace(self, assertions=self.assertions + tuple(assertions))


def geography(manifold: FourManifold) -> GeographyPoint:
    """(χ, c) = ((b+ + 1)/2, 3·sign + 2·e)，只对单连通闭流形定义"""
    if not manifold.simply_connected:
        raise ConstructionError(f"{manifold.name} 不是单连通的，geography 不适用", ErrorCode.CONS_NOT_SIMPLY_CONNECTED)
    if manifold.b_plus % 2 == 0:
        raise InvariantViolation(f"{manifold.name}: b+ = {manifold.b_plus} 为偶数", ErrorCode.INV_BETTI_PARITY, provenance="manifold")
    return GeographyPoint(chi=(manifold.b_plus + 1) // 2, c=3 * manifold.sign + 2 * manifold.euler)


def sw_symmetry_exponent(manifold: FourManifold) -> int:
    """SW(-β) = (-1)^{(e+sign)/4} SW(β) 中的指数 (e+sign)/4 mod 2"""
    total = manifold.euler + manifold.sign
    if total % 4 != 0:
        raise InvariantViolation(f"{manifold.name}: e + sign = {total} 不能被 4 整除", ErrorCode.INV_NOT_DIVISIBLE, provenance="manifold")
    return (total // 4) % 2


def sw_symmetry_sign(manifold: FourManifold) -> int:
    return -1 if sw_symmetry_exponent(manifold) else 1


def has_minus_two_sphere(manifold: FourManifold) -> bool:
    """是否追踪了自交数 -2 的嵌入球面（反定向时的辛障碍）"""
    return any(s.genus == 0 and s.self_int == -2 for s in manifold.surfaces)
