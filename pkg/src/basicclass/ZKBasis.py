"""Z_K 的 H² 上被追踪的基和交形式。

坐标顺序: τ, Σ′, 然后 (T_i, S_i) 双曲对, (T′_j, S′_j) 对, 最后是负定的 -E8 块。
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import List, Optional, Tuple

import numpy as np

from src.basicclass.Lattice import block_diagonal, e8_cartan, integer_determinant, signature
from src.interface.ErrorCode import ErrorCode
from src.interface.TopologyError import BasicClassError
from src.manifolds.FourManifold import SIGMA_PRIME, TAU, FourManifold, SurfaceClass, geography

logger = logging.getLogger(__name__)

HYPERBOLIC_FORM = np.array([[0, 1], [1, -2]], dtype=np.int64)
Y_PAIR_FORM = np.array([[0, 1], [1, 2]], dtype=np.int64)
SPECIAL_FORM = np.array([[0, 1], [1, 0]], dtype=np.int64)

@dataclass(frozen=True)
class CandidateClass:
    """k = aτ + bΣ′ + β + Σ (m_i T_i + n_i S_i) + Σ (t_j T′_j + s_j S′_j)"""
    a: int
    b: int
    beta_square: int = 0
    torus_pair_coeffs: Tuple[Tuple[int, int], ...] = ()
    y_pair_coeffs: Tuple[Tuple[int, int], ...] = ()
    beta: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if self.beta_square > 0:
            raise BasicClassError(f"负定部分的平方 {self.beta_square} 不能为正", ErrorCode.INVALID_PARAMETER)

    def __neg__(self) -> "CandidateClass":
        return CandidateClass(
            a=-self.a,
            b=-self.b,
            beta_square=self.beta_square,
            torus_pair_coeffs=tuple((-m, -n) for m, n in self.torus_pair_coeffs),
            y_pair_coeffs=tuple((-t, -s) for t, s in self.y_pair_coeffs),
            beta=None if self.beta is None else tuple(-x for x in self.beta),
        )

    @property
    def sort_key(self) -> tuple:
        return (self.a, self.b, self.torus_pair_coeffs, self.y_pair_coeffs, self.beta or ())

    def is_zero_outside_special(self) -> bool:
        return (
            self.beta_square == 0
            and all(m == 0 and n == 0 for m, n in self.torus_pair_coeffs)
            and all(t == 0 and s == 0 for t, s in self.y_pair_coeffs)
        )

    def to_text(self) -> str:
        text = f"{self.a}τ + {self.b}Σ′"
        if not self.is_zero_outside_special():
            text += " + …"
        return text


@dataclass(frozen=True)
class ZKBasis:
    """g 是 Σ′ 的亏格减一（K3 起点时就是纽结亏格），n 对应起点 E(2n)"""
    g: int
    n: int = 1
    hyperbolic_pairs: Tuple[Tuple[str, str], ...] = field(init=False)
    y_pairs: Tuple[Tuple[str, str], ...] = field(init=False)

    def __post_init__(self):
        if self.g < 1 or self.n < 1:
            raise BasicClassError(f"ZKBasis 需要 g >= 1 且 n >= 1，实际 g={self.g}, n={self.n}", ErrorCode.INVALID_PARAMETER)
        object.__setattr__(
            self,
            "hyperbolic_pairs",
            tuple((f"T_{i}", f"S_{i}") for i in range(1, 4 * self.n - 1)),
        )
        object.__setattr__(
            self,
            "y_pairs",
            tuple((f"T′_{j}", f"S′_{j}") for j in range(1, 2 * self.g + 1)),
        )

    @property
    def definite_rank(self) -> int:
        return 16 * self.n

    @property
    def rank(self) -> int:
        return 2 + 2 * len(self.hyperbolic_pairs) + 2 * len(self.y_pairs) + self.definite_rank

    @property
    def euler(self) -> int:
        return self.rank + 2

    @property
    def signature(self) -> int:
        return -self.definite_rank

    @property
    def c(self) -> int:
        """3·sign + 2·e，等于 basic class 在单型时的平方"""
        return 3 * self.signature + 2 * self.euler

    @property
    def labels(self) -> List[str]:
        names = [TAU, SIGMA_PRIME]
        for pair in self.hyperbolic_pairs + self.y_pairs:
            names.extend(pair)
        names.extend(f"e_{i}" for i in range(1, self.definite_rank + 1))
        return names

    @property
    def hyperbolic_offset(self) -> int:
        return 2

    @property
    def y_offset(self) -> int:
        return 2 + 2 * len(self.hyperbolic_pairs)

    @property
    def definite_offset(self) -> int:
        return self.y_offset + 2 * len(self.y_pairs)

    def blocks(self) -> List[np.ndarray]:
        return (
            [SPECIAL_FORM]
            + [HYPERBOLIC_FORM] * len(self.hyperbolic_pairs)
            + [Y_PAIR_FORM] * len(self.y_pairs)
            + [-e8_cartan()] * (self.definite_rank // 8)
        )

    @cached_property
    def gram(self) -> np.ndarray:
        return block_diagonal(self.blocks())

    @property
    def definite_gram(self) -> np.ndarray:
        """负定部分取负后的正定 Gram 矩阵"""
        start = self.definite_offset
        return -self.gram[start:, start:]

    def is_unimodular(self) -> bool:
        determinant = 1
        for block in self.blocks():
            determinant *= integer_determinant(block)
        return abs(determinant) == 1

    def is_even(self) -> bool:
        return bool(np.all(np.diag(self.gram) % 2 == 0))

    def lattice_signature(self) -> int:
        return sum(signature(block) for block in self.blocks())

    def vector(self, k: CandidateClass) -> np.ndarray:
        """k 的坐标向量；快速路径里 β 只有平方已知，此时负定坐标记为 0"""
        coords = np.zeros(self.rank, dtype=np.int64)
        coords[0], coords[1] = k.a, k.b
        for i, (m, n) in enumerate(k.torus_pair_coeffs):
            coords[self.hyperbolic_offset + 2 * i: self.hyperbolic_offset + 2 * i + 2] = (m, n)
        for j, (t, s) in enumerate(k.y_pair_coeffs):
            coords[self.y_offset + 2 * j: self.y_offset + 2 * j + 2] = (t, s)
        if k.beta is not None:
            coords[self.definite_offset:] = k.beta
        return coords

    def square(self, k: CandidateClass) -> int:
        coords = self.vector(k)
        value = int(coords @ self.gram @ coords)
        if k.beta is None:
            value += k.beta_square
        return value

    def adjunction_surfaces(self) -> List[Tuple[SurfaceClass, np.ndarray]]:
        """应用伴随不等式的曲面及其坐标：τ、Σ′、T_i、T_i+S_i、T′_j、T′_j+S′_j"""
        index = {label: i for i, label in enumerate(self.labels)}
        surfaces: List[Tuple[SurfaceClass, np.ndarray]] = []

        def unit(*labels: str) -> np.ndarray:
            v = np.zeros(self.rank, dtype=np.int64)
            for label in labels:
                v[index[label]] += 1
            return v

        surfaces.append((SurfaceClass(TAU, genus=2, self_int=0), unit(TAU)))
        surfaces.append((SurfaceClass(SIGMA_PRIME, genus=self.g + 1, self_int=0), unit(SIGMA_PRIME)))
        for torus, sphere in self.hyperbolic_pairs:
            surfaces.append((SurfaceClass(torus, genus=1, self_int=0), unit(torus)))
            surfaces.append((SurfaceClass(f"{torus}+{sphere}", genus=1, self_int=0), unit(torus, sphere)))
        for torus, surface in self.y_pairs:
            surfaces.append((SurfaceClass(torus, genus=1, self_int=0), unit(torus)))
            surfaces.append((SurfaceClass(f"{torus}+{surface}", genus=3, self_int=4), unit(torus, surface)))
        return surfaces

    def indefinite_blocks(self) -> List[Tuple[int, np.ndarray, List[Tuple[SurfaceClass, np.ndarray]]]]:
        """(起始坐标, 2×2 形式, 落在这个块里的伴随曲面及其局部坐标)"""
        starts = [0]
        starts += [self.hyperbolic_offset + 2 * i for i in range(len(self.hyperbolic_pairs))]
        starts += [self.y_offset + 2 * j for j in range(len(self.y_pairs))]
        surfaces = self.adjunction_surfaces()
        blocks = []
        for start in starts:
            local = [
                (surface, vector[start:start + 2])
                for surface, vector in surfaces
                if {int(i) for i in np.flatnonzero(vector)} <= {start, start + 1}
            ]
            blocks.append((start, self.gram[start:start + 2, start:start + 2], local))
        return blocks

    def surface_vector(self, label: str) -> np.ndarray:
        for surface, vector in self.adjunction_surfaces():
            if surface.label == label:
                return vector
        raise BasicClassError(f"基中没有名为 {label!r} 的曲面", ErrorCode.CONS_SURFACE_NOT_FOUND)

    def pairing(self, k: CandidateClass, vector: np.ndarray) -> int:
        return int(self.vector(k) @ self.gram @ vector)

    def make_class(self, a: int, b: int, beta_square: int = 0) -> CandidateClass:
        """除 τ、Σ′ 外系数全为零的类；β² = 0 时 β 取零向量"""
        beta = tuple([0] * self.definite_rank) if beta_square == 0 else None
        return CandidateClass(
            a=a,
            b=b,
            beta_square=beta_square,
            torus_pair_coeffs=tuple((0, 0) for _ in self.hyperbolic_pairs),
            y_pair_coeffs=tuple((0, 0) for _ in self.y_pairs),
            beta=beta,
        )


def zk_basis(manifold: FourManifold) -> ZKBasis:
    """从组装好的 Z_K 读出基的参数，并与示性数交叉校验"""
    sigma = manifold.surface(SIGMA_PRIME)
    if manifold.sign % 16 != 0 or manifold.sign >= 0:
        raise BasicClassError(f"{manifold.name} 的符号差 {manifold.sign} 不是 -16n", ErrorCode.CONS_NOT_APPLICABLE)
    basis = ZKBasis(g=sigma.genus - 1, n=-manifold.sign // 16)
    if basis.rank != manifold.b2:
        raise BasicClassError(
            f"{manifold.name}: 基的秩 {basis.rank} 与 b2 = {manifold.b2} 不一致",
            ErrorCode.INV_VERIFY_MISMATCH,
        )
    if basis.c != geography(manifold).c:
        raise BasicClassError(f"{manifold.name}: 3·sign + 2·e 与基不一致", ErrorCode.INV_VERIFY_MISMATCH)
    logger.debug(f"{manifold.name}: g={basis.g}, n={basis.n}, rank={basis.rank}")
    return basis
