"""切割粘合构造：纽结手术、沿曲面的纤维和，以及 Y 与 Z_K 的组装。

所有构造只维护示性数和被追踪的曲面类；SW 多项式只在纽结手术里按乘法公式
更新，一般的纤维和结果不带 SW（读取会抛 SWUndefinedError）。
"""
import logging
from dataclasses import dataclass, replace
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from src.algebra.LaurentPoly import mul, substitute_power, to_text
from src.config.TopologyConfig import TopologyConfig
from src.interface import Citation
from src.interface.Citation import Assertion
from src.interface.ErrorCode import ErrorCode
from src.interface.TopologyError import ConstructionError
from src.knots.KnotTable import KnotRecord, k_prime
from src.manifolds.FourManifold import (
    FIBER,
    ROOT_SPHERE,
    SECOND_FIBER,
    SECTION,
    SIGMA,
    SIGMA_PRIME,
    SURGERED_SECTION,
    TAU,
    TORUS,
    Y_SECTION,
    CanonicalClass,
    FourManifold,
    SurfaceClass,
)
from src.manifolds.Templates import make_S1xM

logger = logging.getLogger(__name__)

config = TopologyConfig()


def _relabel_pairings(
    surface: SurfaceClass,
    renames: Dict[str, str],
    dropped: Set[str],
) -> Tuple[Tuple[str, int], ...]:
    return tuple((renames.get(label, label), value) for label, value in surface.pairings if label not in dropped)


def _merge_assertions(*groups: Iterable[Assertion]) -> Tuple[Assertion, ...]:
    merged: List[Assertion] = []
    for group in groups:
        for assertion in group:
            if assertion not in merged:
                merged.append(assertion)
    return tuple(merged)


def knot_surgery(manifold: FourManifold, torus_label: str, knot: KnotRecord) -> FourManifold:
    """X_K = (X - N(T)) ∪ (S¹ × (S³ - N(K)))，SW_{X_K} = SW_X · Δ_K(exp(2[T]))"""
    torus = manifold.surface(torus_label)
    if torus.genus != 1:
        raise ConstructionError(f"{torus_label} 的亏格为 {torus.genus}，不是环面", ErrorCode.CONS_NOT_SURGERY_TORUS)
    if torus.self_int != 0:
        raise ConstructionError(f"{torus_label} 的自交数为 {torus.self_int}", ErrorCode.CONS_NONZERO_SELF_INTERSECTION)
    if not torus.in_cusp_neighborhood:
        raise ConstructionError(f"{torus_label} 不在尖点邻域里", ErrorCode.CONS_NOT_SURGERY_TORUS)
    if not manifold.simply_connected:
        raise ConstructionError(f"{manifold.name} 不是单连通的", ErrorCode.CONS_NOT_SIMPLY_CONNECTED)
    if knot.genus is None:
        raise ConstructionError(f"纽结 {knot.name} 缺少亏格", ErrorCode.CONS_GENUS_ABSENT)
    if manifold.sw_unit not in (1, 2):
        raise ConstructionError(f"不支持以 {manifold.sw_label} 为变量的 SW 多项式", ErrorCode.CONS_NOT_APPLICABLE)

    delta = substitute_power(knot.alexander, 2 // manifold.sw_unit, manifold.sw_label)
    sw = mul(manifold.sw, delta)

    section_label = SURGERED_SECTION if manifold.has_surface(SURGERED_SECTION) else SECTION
    has_section = manifold.has_surface(section_label)
    renames = {SECTION: SURGERED_SECTION}
    dropped = {SIGMA, SIGMA_PRIME}

    surfaces: List[SurfaceClass] = []
    for surface in manifold.surfaces:
        if surface.label in dropped:
            continue
        pairings = _relabel_pairings(surface, renames, dropped)
        if surface.label == torus_label:
            surfaces.append(replace(surface, pairings=pairings, in_cusp_neighborhood=False))
        elif surface.label == section_label:
            # 截面与被手术的环面横截相交一次，接上 Seifert 曲面
            extra = knot.genus if manifold.intersection(surface.label, torus_label) != 0 else 0
            surfaces.append(replace(surface, label=SURGERED_SECTION, genus=surface.genus + extra, pairings=pairings))
        else:
            surfaces.append(replace(surface, pairings=pairings))

    surgered = replace(
        manifold,
        name=f"{manifold.name}_{knot.name}",
        surfaces=tuple(surfaces),
        sw_poly=sw,
        canonical=None,
        sw_at_canonical=None,
        assertions=_merge_assertions(
            manifold.assertions,
            [Assertion(f"SW = SW_X · Δ_{knot.name}", Citation.KNOT_SURGERY)],
        ),
    )
    if has_section and surgered.has_surface(SECOND_FIBER):
        surgered = replace(surgered, surfaces=surgered.surfaces + (_sigma_prime(surgered),))

    logger.info(f"纽结手术 {manifold.name} 沿 {torus_label} 用 {knot.name}: SW = {to_text(sw)}")
    return surgered


def _sigma_prime(manifold: FourManifold) -> SurfaceClass:
    """Σ′ = S′ + n·T′，自交数 0，亏格 g(S′) + n"""
    section = manifold.surface(SURGERED_SECTION)
    if section.self_int % 2 != 0 or section.self_int >= 0:
        raise ConstructionError(f"截面自交数 {section.self_int} 不是负偶数", ErrorCode.CONS_BAD_BASE)
    n = -section.self_int // 2
    pairings = []
    for surface in manifold.surfaces:
        value = manifold.intersection(SURGERED_SECTION, surface.label) + n * manifold.intersection(SECOND_FIBER, surface.label)
        pairings.append((surface.label, value))
    self_int = section.self_int + 2 * n * manifold.intersection(SURGERED_SECTION, SECOND_FIBER)
    return SurfaceClass(SIGMA_PRIME, genus=section.genus + n, self_int=self_int, pairings=tuple(pairings))


def fiber_sum(
    first: FourManifold,
    first_label: str,
    second: FourManifold,
    second_label: str,
    spin_choice: bool,
    *,
    name: Optional[str] = None,
    b1: Optional[int] = None,
    simply_connected: Optional[Assertion] = None,
    surfaces: Optional[Sequence[SurfaceClass]] = None,
) -> FourManifold:
    """沿两个同亏格、自交数为 0 的曲面做纤维和。

    e = e_A + e_B - 2·(2 - 2h)，符号差相加。b1 和单连通性无法从示性数推出，
    由调用方给出（单连通必须附带断言）；默认 b1 = b1(A) + b1(B)。
    """
    left = first.surface(first_label)
    right = second.surface(second_label)
    if left.genus != right.genus:
        raise ConstructionError(f"曲面亏格不一致: {left.genus} != {right.genus}", ErrorCode.CONS_GENUS_MISMATCH)
    if left.self_int != 0 or right.self_int != 0:
        raise ConstructionError(
            f"纤维和要求自交数为 0: {left.label}={left.self_int}, {right.label}={right.self_int}",
            ErrorCode.CONS_NONZERO_SELF_INTERSECTION,
        )
    if spin_choice and not (first.spin and second.spin):
        raise ConstructionError("两个加项都是自旋的才能选择自旋粘合", ErrorCode.CONS_NOT_APPLICABLE)

    genus = left.genus
    if surfaces is None:
        surfaces = _default_surfaces(first, first_label, second, second_label)

    assertions = _merge_assertions(first.assertions, second.assertions)
    if simply_connected is not None:
        assertions = _merge_assertions(assertions, [simply_connected])

    result = FourManifold(
        name=name or f"{first.name}#{second.name}",
        euler=first.euler + second.euler - 2 * (2 - 2 * genus),
        sign=first.sign + second.sign,
        b1=first.b1 + second.b1 if b1 is None else b1,
        spin=spin_choice,
        simply_connected=simply_connected is not None,
        surfaces=tuple(surfaces),
        assertions=assertions,
    )
    logger.debug(f"纤维和 {result.name}: e={result.euler}, sign={result.sign}, b1={result.b1}")
    return result


def _default_surfaces(
    first: FourManifold,
    first_label: str,
    second: FourManifold,
    second_label: str,
) -> List[SurfaceClass]:
    """两边剩下的曲面取并，标签冲突时给第二个加项加前缀"""
    kept_first = [s for s in first.surfaces if s.label != first_label]
    taken = {s.label for s in kept_first}
    renames = {s.label: f"{second.name}:{s.label}" for s in second.surfaces if s.label in taken}

    result = [replace(s, pairings=_relabel_pairings(s, {}, {first_label})) for s in kept_first]
    for surface in second.surfaces:
        if surface.label == second_label:
            continue
        result.append(
            replace(
                surface,
                label=renames.get(surface.label, surface.label),
                pairings=_relabel_pairings(surface, renames, {second_label}),
            )
        )
    return result


def canonical_of_symplectic_sum(
    first: Optional[CanonicalClass],
    second: Optional[CanonicalClass],
    along: SurfaceClass,
) -> CanonicalClass:
    """沿辛环面 N 的辛和: K = K_A + K_B + 2[N]"""
    if first is None or second is None:
        raise ConstructionError("加项的典范类未知", ErrorCode.CONS_CANONICAL_UNKNOWN)
    if along.genus != 1 or along.self_int != 0 or not along.is_symplectic_torus:
        raise ConstructionError(f"{along.label} 不是自交数为 0 的辛环面", ErrorCode.CONS_NOT_APPLICABLE)
    return first + second + CanonicalClass.from_dict({along.label: 2})


def build_Y(genus: int) -> FourManifold:
    """genus + 1 份 S¹×M_{K′} 沿纤维 F 的纤维和，截面粘成亏格 genus + 1 的曲面 C"""
    if genus < 1:
        raise ConstructionError(f"build_Y 要求亏格 >= 1，实际为 {genus}", ErrorCode.CONS_GENUS_TOO_SMALL)

    piece = make_S1xM(k_prime())
    y = piece
    for copies in range(2, genus + 2):
        fiber = y.surface(FIBER)
        canonical = canonical_of_symplectic_sum(y.canonical, piece.canonical, fiber)
        y = fiber_sum(
            y,
            FIBER,
            piece,
            FIBER,
            spin_choice=True,
            name=f"Y({copies - 1})",
            b1=y.b1 + 2,
            surfaces=(
                fiber,
                SurfaceClass(Y_SECTION, genus=copies, self_int=0, pairings=((FIBER, 1),)),
            ),
        )
        y = replace(y, canonical=canonical, sw_at_canonical=1)

    y = y.with_assertions(
        Assertion(f"K_Y = {y.canonical.to_text()}", Citation.CANONICAL_SUM),
        Assertion("SW_Y(K_Y) = ±1", Citation.TAUBES),
    )
    logger.info(f"构造 Y({genus}): b1={y.b1}, C 的亏格 {y.surface(Y_SECTION).genus}, K = {y.canonical.to_text()}")
    return y


@dataclass(frozen=True)
class ZKConstruction:
    """组装 Z_K 的各个中间流形"""
    knot: KnotRecord
    base: FourManifold
    x_k: FourManifold
    y: FourManifold
    z_k: FourManifold

    @property
    def genus(self) -> int:
        """Y 的参数 G = g(Σ′) - 1"""
        return self.x_k.surface(SIGMA_PRIME).genus - 1


def assemble_ZK(knot: KnotRecord, base: FourManifold) -> ZKConstruction:
    if base.elliptic_n is None or not base.has_surface(TORUS) or not base.has_surface(SECTION):
        raise ConstructionError(f"{base.name} 不是 K3 或 E(2n) 模板", ErrorCode.CONS_BAD_BASE)
    if knot.genus is None:
        raise ConstructionError(f"纽结 {knot.name} 缺少亏格", ErrorCode.CONS_GENUS_ABSENT)
    if knot.genus < 1:
        raise ConstructionError(f"纽结 {knot.name} 的亏格为 {knot.genus}，Z_K 需要 g >= 1", ErrorCode.CONS_GENUS_TOO_SMALL)
    if base.elliptic_n > config.e2n_validated_max:
        logger.warning(f"{base.name}: n = {base.elliptic_n} 超出已验证范围")

    x_k = knot_surgery(base, TORUS, knot)
    sigma = x_k.surface(SIGMA_PRIME)
    y = build_Y(sigma.genus - 1)

    name = f"Z_{knot.name}" if base.elliptic_n == 1 else f"Z_{knot.name}[{base.name}]"
    z_k = fiber_sum(
        x_k,
        SIGMA_PRIME,
        y,
        Y_SECTION,
        spin_choice=True,
        name=name,
        b1=0,
        simply_connected=Assertion("π1 = 1", Citation.PI1_ZK),
        surfaces=(
            SurfaceClass(SIGMA_PRIME, genus=sigma.genus, self_int=0, pairings=((TAU, 1),)),
            SurfaceClass(TAU, genus=2, self_int=0, pairings=((SIGMA_PRIME, 1),)),
            SurfaceClass(ROOT_SPHERE, genus=0, self_int=-2),
        ),
    )
    z_k = z_k.with_assertions(
        Assertion("自旋粘合", Citation.SPIN_GLUING),
        Assertion("边缘环面同调平凡", Citation.RIM_TORI),
    )
    logger.info(f"构造 {z_k.name}: e={z_k.euler}, sign={z_k.sign}, b+={z_k.b_plus}")
    return ZKConstruction(knot=knot, base=base, x_k=x_k, y=y, z_k=z_k)


def build_ZK(knot: KnotRecord, base: FourManifold) -> FourManifold:
    return assemble_ZK(knot, base).z_k
