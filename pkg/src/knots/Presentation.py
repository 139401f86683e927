import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from src.interface.ErrorCode import ErrorCode
from src.interface.TopologyError import InvariantViolation, KnotParseError

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class SeifertMatrix:
    """2h×2h 整数 Seifert 矩阵"""
    rows: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "SeifertMatrix":
        try:
            matrix = cls(tuple(tuple(int(x) for x in row) for row in rows))
        except (TypeError, ValueError) as e:
            raise KnotParseError(f"Seifert 矩阵元素必须是整数: {e}", ErrorCode.PARSE_TABLE_FORMAT)
        matrix.validate()
        return matrix

    @property
    def size(self) -> int:
        return len(self.rows)

    @property
    def h(self) -> int:
        return self.size // 2

    def to_domain_matrix(self) -> DomainMatrix:
        return DomainMatrix([[ZZ(x) for x in row] for row in self.rows], (self.size, self.size), ZZ)

    def mirror(self) -> "SeifertMatrix":
        """镜像纽结的 Seifert 矩阵 -V^T"""
        return SeifertMatrix(tuple(tuple(-self.rows[j][i] for j in range(self.size)) for i in range(self.size)))

    def validate(self) -> None:
        if any(len(row) != self.size for row in self.rows):
            raise KnotParseError("Seifert 矩阵必须是方阵", ErrorCode.PARSE_TABLE_FORMAT)
        if self.size % 2 != 0:
            raise KnotParseError(f"Seifert 矩阵阶数必须为偶数，实际为 {self.size}", ErrorCode.PARSE_TABLE_FORMAT)
        intersection_det = 1
        if self.size:
            matrix = self.to_domain_matrix()
            intersection_det = (matrix - matrix.transpose()).det()
        if abs(int(intersection_det)) != 1:
            raise InvariantViolation(
                f"V - V^T 的行列式为 {intersection_det}，不是幺模的",
                ErrorCode.INV_NOT_UNIMODULAR,
                provenance="knot",
            )


@dataclass(frozen=True)
class BraidWord:
    """n 股辫子词；字母的符号表示交叉符号，绝对值表示生成元下标"""
    strands: int
    letters: Tuple[int, ...]

    def to_text(self) -> str:
        return f"{self.strands}: " + " ".join(str(x) for x in self.letters)


def closure_components(strands: int, letters: Sequence[int]) -> int:
    """辫子闭包的分支数 = 置换的轮换个数"""
    permutation = list(range(strands))
    for letter in letters:
        i = abs(letter) - 1
        permutation[i], permutation[i + 1] = permutation[i + 1], permutation[i]
    seen = [False] * strands
    cycles = 0
    for start in range(strands):
        if seen[start]:
            continue
        cycles += 1
        position = start
        while not seen[position]:
            seen[position] = True
            position = permutation[position]
    return cycles


def parse_braid(text: str) -> BraidWord:
    """解析 "n: w1 w2 ..." 形式的辫子词"""
    head, separator, body = text.partition(":")
    if not separator:
        raise KnotParseError(f"辫子词缺少股数前缀 'n:': {text!r}", ErrorCode.PARSE_BAD_TOKEN)
    try:
        strands = int(head.strip())
    except ValueError:
        raise KnotParseError(f"无法解析股数 {head.strip()!r}", ErrorCode.PARSE_BAD_TOKEN)
    if strands < 2:
        raise KnotParseError(f"股数必须至少为 2，实际为 {strands}", ErrorCode.PARSE_BAD_TOKEN)

    letters: List[int] = []
    for token in body.split():
        try:
            letter = int(token)
        except ValueError:
            raise KnotParseError(f"非法的辫子字母 {token!r}", ErrorCode.PARSE_BAD_TOKEN)
        if letter == 0:
            raise KnotParseError("辫子字母不能为 0", ErrorCode.PARSE_BAD_TOKEN)
        if abs(letter) >= strands:
            raise KnotParseError(
                f"生成元下标 {abs(letter)} 超出 {strands} 股辫子的范围",
                ErrorCode.PARSE_GENERATOR_OUT_OF_RANGE,
            )
        letters.append(letter)

    components = closure_components(strands, letters)
    if components != 1:
        raise KnotParseError(f"辫子闭包有 {components} 个分支，不是纽结", ErrorCode.PARSE_NOT_A_KNOT)
    logger.debug(f"解析辫子词成功: {strands} 股, {len(letters)} 个交叉")
    return BraidWord(strands=strands, letters=tuple(letters))
