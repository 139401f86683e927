"""整二次型的小工具：E8 Cartan 矩阵、分块对角拼接、精确短向量枚举。"""
import logging
import math
from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy as np
from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from src.interface.ErrorCode import ErrorCode
from src.interface.TopologyError import BasicClassError

logger = logging.getLogger(__name__)

# E8 的 Dynkin 图：链 0-1-2-3-4-5-6，节点 7 接在节点 4 上
_E8_EDGES = ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7))


def e8_cartan() -> np.ndarray:
    """正定、偶、幺模的 E8 Cartan 矩阵"""
    cartan = 2 * np.eye(8, dtype=np.int64)
    for i, j in _E8_EDGES:
        cartan[i, j] = cartan[j, i] = -1
    return cartan


def block_diagonal(blocks: Sequence[np.ndarray]) -> np.ndarray:
    size = sum(block.shape[0] for block in blocks)
    result = np.zeros((size, size), dtype=np.int64)
    offset = 0
    for block in blocks:
        k = block.shape[0]
        result[offset:offset + k, offset:offset + k] = block
        offset += k
    return result


def integer_determinant(gram: np.ndarray) -> int:
    """整数矩阵的精确行列式（ZZ 上的 Bareiss 消元）"""
    rows = [[ZZ(int(x)) for x in row] for row in np.asarray(gram).tolist()]
    if not rows:
        return 1
    return int(DomainMatrix(rows, (len(rows), len(rows[0])), ZZ).det())


def signature(gram: np.ndarray) -> int:
    eigenvalues = np.linalg.eigvalsh(gram.astype(float))
    return int(np.sum(eigenvalues > 1e-9)) - int(np.sum(eigenvalues < -1e-9))


def _fincke_pohst_form(gram: Sequence[Sequence[int]]) -> List[List[Fraction]]:
    """Q(x) = Σ q_ii (x_i + Σ_{j>i} q_ij x_j)^2，全部用有理数精确计算"""
    size = len(gram)
    q = [[Fraction(int(gram[i][j])) for j in range(size)] for i in range(size)]
    for i in range(size):
        if q[i][i] <= 0:
            raise BasicClassError("短向量枚举需要正定的 Gram 矩阵", ErrorCode.INVALID_PARAMETER)
        for j in range(i + 1, size):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, size):
            for m in range(k, size):
                q[k][m] -= q[k][i] * q[i][m]
    return q


def short_vectors(gram: Sequence[Sequence[int]], max_norm: int) -> List[Tuple[int, ...]]:
    """枚举正定整格中所有 x^T Q x <= max_norm 的整向量（含零向量）"""
    if max_norm < 0:
        return []
    size = len(gram)
    if size == 0:
        return [()]
    q = _fincke_pohst_form(gram)
    found: List[Tuple[int, ...]] = []
    x = [0] * size

    def search(i: int, remaining: Fraction) -> None:
        center = -sum((q[i][j] * x[j] for j in range(i + 1, size)), Fraction(0))
        radius = remaining / q[i][i]
        reach = math.isqrt(math.floor(radius)) + 1
        for value in range(math.floor(center) - reach, math.ceil(center) + reach + 1):
            offset = (value - center) ** 2
            if offset > radius:
                continue
            x[i] = value
            left = remaining - q[i][i] * offset
            if i == 0:
                found.append(tuple(x))
            else:
                search(i - 1, left)
        x[i] = 0

    search(size - 1, Fraction(max_norm))
    logger.debug(f"{size} 维格中范数 <= {max_norm} 的向量共 {len(found)} 个")
    return sorted(found)
