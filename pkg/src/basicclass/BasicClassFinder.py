import itertools
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from src.algebra.LaurentPoly import LaurentPoly
from src.basicclass.Lattice import integer_determinant, short_vectors
from src.basicclass.ZKBasis import CandidateClass, ZKBasis
from src.interface import Citation
from src.interface.Citation import Assertion
from src.interface.EnumModel import Verdict
from src.interface.ErrorCode import ErrorCode
from src.interface.TopologyError import BasicClassError
from src.manifolds.FourManifold import SIGMA_PRIME, TAU, SurfaceClass

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class MSTValue:
    """MST 粘合公式给出的 SW 值；整体符号不确定"""
    magnitude: int
    sign_ambiguous: bool = True


@dataclass(frozen=True)
class BasicClassEntry:
    k: CandidateClass
    sw_value: int
    sign_ambiguous: bool = True


@dataclass(frozen=True)
class BasicClassResult:
    g: int
    classes: Tuple[BasicClassEntry, ...]
    simple_type: bool
    count_up_to_sign: int
    notes: Tuple[str, ...] = ()
    assertions: Tuple[Assertion, ...] = ()

    def class_set(self) -> List[CandidateClass]:
        return [entry.k for entry in self.classes]

    def sw_of(self, k: CandidateClass) -> int:
        for entry in self.classes:
            if entry.k == k:
                return entry.sw_value
        return 0


def _slack(surface: SurfaceClass) -> int:
    """伴随不等式允许的 |k·B| 上界 2g_B - 2 - B²"""
    return 2 * surface.genus - 2 - surface.self_int


def _excluded(surface: SurfaceClass, pairing: int) -> bool:
    return abs(pairing) > _slack(surface)


def adjunction_excludes(k: CandidateClass, surface: SurfaceClass, basis: ZKBasis) -> bool:
    """伴随不等式 2g_B - 2 >= B² + |k·B| 不成立时返回 True（k 被排除）"""
    if surface.self_int < 0:
        raise BasicClassError(
            f"曲面 {surface.label} 的自交数 {surface.self_int} < 0，伴随不等式不适用",
            ErrorCode.INVALID_PARAMETER,
        )
    return _excluded(surface, basis.pairing(k, basis.surface_vector(surface.label)))


def moduli_dimension(k: CandidateClass, basis: ZKBasis) -> int:
    """dim M(k) = (k² - (3·sign + 2·e)) / 4"""
    difference = basis.square(k) - basis.c
    if difference % 4 != 0:
        raise BasicClassError(
            f"k² - c = {difference} 不能被 4 整除，{k.to_text()} 不是示性类",
            ErrorCode.INV_NOT_DIVISIBLE,
        )
    return difference // 4


def extract_coefficient(sw: LaurentPoly, exponent: int) -> int:
    return sw.coeff(exponent)


def class_exponent(genus: int, sw_unit: int) -> int:
    """2g·[T] 在 exp(sw_unit·[T]) 变量下的指数"""
    if (2 * genus) % sw_unit != 0:
        raise BasicClassError(f"2g = {2 * genus} 不能被变量单位 {sw_unit} 整除", ErrorCode.INV_NOT_DIVISIBLE)
    return 2 * genus // sw_unit


def mst_gluing_value(sw_xk_at_2g_t: int, sw_y_at_2g_f: int) -> MSTValue:
    product = sw_xk_at_2g_t * sw_y_at_2g_f
    return MSTValue(magnitude=abs(product), sign_ambiguous=product != 0)


def _symmetry_sign(basis: ZKBasis) -> int:
    total = basis.euler + basis.signature
    if total % 4 != 0:
        raise BasicClassError(f"e + sign = {total} 不能被 4 整除", ErrorCode.INV_NOT_DIVISIBLE)
    return -1 if (total // 4) % 2 else 1


def _check_pairs_rigid(basis: ZKBasis) -> None:
    """每个 2×2 块里两张曲面的配对必须线性无关，零配对才能推出零系数"""
    for start, form, surfaces in basis.indefinite_blocks()[1:]:
        functionals = np.array([form @ vector for _, vector in surfaces], dtype=np.int64)
        if len(surfaces) != 2 or integer_determinant(functionals) == 0:
            raise BasicClassError(f"坐标 {start} 处的块不能被伴随曲面确定", ErrorCode.CONS_NOT_APPLICABLE)
        for surface, _ in surfaces:
            if _slack(surface) != 0:
                raise BasicClassError(f"曲面 {surface.label} 不是伴随不等式的紧情形", ErrorCode.CONS_NOT_APPLICABLE)


def enumerate_basic_classes(
    basis: ZKBasis,
    a_d: int,
    symmetry_sign: Optional[int] = None,
    sw_y_at_canonical: Optional[int] = 1,
) -> BasicClassResult:
    """按证明的约束链求 basic class。

    各环面把双曲对和 Y 对的系数压成零；Σ′ 和 τ 给出 |a| <= 2g、|b| <= 2；
    k² = 2ab + β² >= c 且 β² <= 0，于是 2ab = c、β = 0，模空间维数为 0。
    """
    _check_pairs_rigid(basis)
    surfaces = {surface.label: surface for surface, _ in basis.adjunction_surfaces()}
    a_max = _slack(surfaces[SIGMA_PRIME])
    b_max = _slack(surfaces[TAU])
    c = basis.c

    assertions = (
        Assertion("伴随不等式约束 basic class", Citation.ADJUNCTION),
        Assertion("边缘环面同调平凡，粘合求和只剩一项", Citation.RIM_TORI),
        Assertion("Z_K 为单型", Citation.SIMPLE_TYPE),
        Assertion("|SW_{Z_K}(k)| = |SW_{X_K}(2g T)·SW_Y(2g F)|", Citation.MST),
    )

    if a_d != 0 and sw_y_at_canonical is None:
        raise BasicClassError("Y 在典范类处的 SW 值未知，无法做 MST 粘合", ErrorCode.CONS_CANONICAL_UNKNOWN)
    if a_d == 0 or sw_y_at_canonical == 0:
        logger.info(f"g={basis.g}: a_d = {a_d}, SW_Y(K_Y) = {sw_y_at_canonical}，SW_{{Z_K}} = 0")
        return BasicClassResult(
            g=basis.g,
            classes=(),
            simple_type=True,
            count_up_to_sign=0,
            notes=("SW_{Z_K} = 0",),
            assertions=assertions,
        )

    sign = _symmetry_sign(basis) if symmetry_sign is None else symmetry_sign
    value = mst_gluing_value(a_d, sw_y_at_canonical)
    candidates: List[CandidateClass] = []
    for a in range(-a_max, a_max + 1):
        for b in range(-b_max, b_max + 1):
            if 2 * a * b < c:
                continue
            if 2 * a * b > c:
                raise BasicClassError(
                    f"(a, b) = ({a}, {b}) 给 β 留下空间，约束链不封闭",
                    ErrorCode.CONS_NOT_APPLICABLE,
                )
            k = basis.make_class(a, b)
            if moduli_dimension(k, basis) != 0:
                raise BasicClassError(f"{k.to_text()} 的模空间维数不为 0", ErrorCode.INV_VERIFY_MISMATCH)
            candidates.append(k)

    entries = []
    for k in sorted(candidates, key=lambda x: x.sort_key):
        sw_value = value.magnitude if k.a > 0 else sign * value.magnitude
        entries.append(BasicClassEntry(k=k, sw_value=sw_value, sign_ambiguous=value.sign_ambiguous))

    result = BasicClassResult(
        g=basis.g,
        classes=tuple(entries),
        simple_type=True,
        count_up_to_sign=len(entries) // 2,
        assertions=assertions,
    )
    logger.info(f"g={basis.g}: basic class {[e.k.to_text() for e in entries]}，|SW| = {value.magnitude}")
    return result


def brute_force_enumerate(basis: ZKBasis, bound: int) -> List[CandidateClass]:
    """在 |系数| <= bound 的盒子里穷举，β 用精确的短向量枚举。

    伴随曲面都落在单个 2×2 块里，所以先逐块筛选再做笛卡尔积。
    """
    if bound < 2 * basis.g + 2:
        raise BasicClassError(f"bound = {bound} 小于 2g + 2 = {2 * basis.g + 2}", ErrorCode.CONS_BOUND_TOO_SMALL)

    per_block: List[List[Tuple[Tuple[int, int], int]]] = []
    for start, form, surfaces in basis.indefinite_blocks():
        survivors = []
        for local in itertools.product(range(-bound, bound + 1), repeat=2):
            v = np.array(local, dtype=np.int64)
            if any(_excluded(surface, int(v @ form @ vector)) for surface, vector in surfaces):
                continue
            survivors.append((local, int(v @ form @ v)))
        logger.debug(f"坐标 {start} 处的块剩下 {len(survivors)} 个候选")
        per_block.append(survivors)

    if any(not survivors for survivors in per_block):
        return []
    slack = sum(max(q for _, q in survivors) for survivors in per_block) - basis.c
    if slack < 0:
        return []

    definite = basis.definite_gram
    betas: Dict[Tuple[int, ...], int] = {}
    for beta in short_vectors(definite, slack):
        vector = np.array(beta, dtype=np.int64)
        betas[beta] = int(vector @ definite @ vector)

    hyperbolic_count = len(basis.hyperbolic_pairs)
    found: List[CandidateClass] = []
    for combo in itertools.product(*per_block):
        indefinite_square = sum(q for _, q in combo)
        for beta, norm in betas.items():
            difference = indefinite_square - norm - basis.c
            if difference < 0 or difference % 4 != 0:
                continue
            (a, b), _ = combo[0]
            found.append(
                CandidateClass(
                    a=a,
                    b=b,
                    beta_square=-norm,
                    torus_pair_coeffs=tuple(local for local, _ in combo[1:1 + hyperbolic_count]),
                    y_pair_coeffs=tuple(local for local, _ in combo[1 + hyperbolic_count:]),
                    beta=beta,
                )
            )
    found.sort(key=lambda x: x.sort_key)
    logger.info(f"穷举 (bound={bound}) 得到 {len(found)} 个类")
    return found


def taubes_verdict(result: BasicClassResult, spin_sphere_present: bool) -> Verdict:
    if not result.classes:
        return Verdict.TRIVIAL_SW
    if any(abs(entry.sw_value) == 1 for entry in result.classes):
        return Verdict.INCONCLUSIVE
    if spin_sphere_present:
        return Verdict.NONSYMPLECTIC_BOTH_ORIENTATIONS
    return Verdict.NONSYMPLECTIC_GIVEN_ORIENTATION
