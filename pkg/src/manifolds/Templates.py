import logging

from src.algebra.LaurentPoly import LaurentPoly
from src.config.TopologyConfig import TopologyConfig
from src.interface import Citation
from src.interface.Citation import Assertion
from src.interface.ErrorCode import ErrorCode
from src.interface.TopologyError import ConstructionError, TopologyError
from src.knots.KnotTable import KnotRecord
from src.manifolds.FourManifold import (
    FIBER,
    MERIDIAN_TORUS,
    ROOT_SPHERE,
    SECOND_FIBER,
    SECTION,
    SIGMA,
    TORUS,
    CanonicalClass,
    FourManifold,
    SurfaceClass,
)

logger = logging.getLogger(__name__)

config = TopologyConfig()


def _elliptic(n: int, name: str, sw_unit: int) -> FourManifold:
    """E(2n) 及其被追踪曲面；n = 1 时即 K3"""
    # K3 的 SW 只有常数项，用 exp(2[T]) 还是 exp([T]) 记账不改变系数
    sw_label = "exp([T])" if sw_unit == 1 else f"exp({sw_unit}[T])"
    sw = LaurentPoly.from_dict({1: 1, -1: -1}, var_label=sw_label) ** (2 * n - 2)
    surfaces = (
        SurfaceClass(TORUS, genus=1, self_int=0, in_cusp_neighborhood=True, is_symplectic_torus=True),
        SurfaceClass(SECTION, genus=0, self_int=-2 * n, pairings=((TORUS, 1),)),
        SurfaceClass(SIGMA, genus=n, self_int=0, pairings=((TORUS, 1), (SECTION, -n))),
        SurfaceClass(
            SECOND_FIBER,
            genus=1,
            self_int=0,
            pairings=((SECTION, 1), (SIGMA, 1)),
            in_cusp_neighborhood=True,
            is_symplectic_torus=True,
        ),
        SurfaceClass(ROOT_SPHERE, genus=0, self_int=-2),
    )
    return FourManifold(
        name=name,
        euler=24 * n,
        sign=-16 * n,
        b1=0,
        spin=True,
        simply_connected=True,
        surfaces=surfaces,
        sw_poly=sw,
        sw_class=TORUS,
        sw_unit=sw_unit,
        canonical=CanonicalClass.from_dict({TORUS: 2 * n - 2}),
        sw_at_canonical=1,
        elliptic_n=n,
        assertions=(
            Assertion("单连通，E8 根球面 (-2)", Citation.K3_SIMPLY_CONNECTED),
            Assertion(f"SW = (t - t^-1)^{2 * n - 2}", Citation.ELLIPTIC_SW),
        ),
    )


def make_K3() -> FourManifold:
    return _elliptic(1, "K3", sw_unit=2)


def make_E2n(n: int) -> FourManifold:
    if n < 1:
        raise TopologyError(f"E(2n) 要求 n >= 1，实际为 {n}", ErrorCode.INVALID_PARAMETER, provenance="manifold")
    if n > config.e2n_validated_max:
        logger.warning(f"E({2 * n}) 超出已验证范围 n <= {config.e2n_validated_max}，结果仅供参考")
    return _elliptic(n, f"E({2 * n})", sw_unit=1)


def make_S1xM(knot: KnotRecord) -> FourManifold:
    """S¹ × M_K：0-手术的三维流形与圆周的乘积，只对亏格 1 的纤维纽结构造"""
    if knot.genus != 1 or not knot.monic:
        raise ConstructionError(
            f"S¹×M_K 需要亏格 1 的纤维纽结，{knot.name} 的亏格为 {knot.genus}、首项系数为 {knot.a_d}",
            ErrorCode.CONS_NOT_APPLICABLE,
        )
    surfaces = (
        SurfaceClass(FIBER, genus=1, self_int=0, is_symplectic_torus=True),
        SurfaceClass(MERIDIAN_TORUS, genus=1, self_int=0, pairings=((FIBER, 1),), is_symplectic_torus=True),
    )
    return FourManifold(
        name=f"S1xM({knot.name})",
        euler=0,
        sign=0,
        b1=2,
        spin=True,
        simply_connected=False,
        surfaces=surfaces,
        canonical=CanonicalClass(),
        sw_at_canonical=1,
        assertions=(
            Assertion("同调与 S²×T² 相同", Citation.HOMOLOGY_S1XM),
            Assertion("辛流形，K = 0", Citation.THURSTON),
        ),
    )
