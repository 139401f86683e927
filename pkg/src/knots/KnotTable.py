import json
import logging
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import List, Optional, Union

from src.algebra.LaurentPoly import LaurentPoly, degree_and_top, eval_at_one, is_monic, to_text
from src.interface.ErrorCode import ErrorCode
from src.interface.TopologyError import (
    ConstructionError,
    InvariantViolation,
    KnotParseError,
    TopologyError,
    VerificationMismatch,
)
from src.knots.Presentation import BraidWord, SeifertMatrix, parse_braid
from src.knots.alexander import alexander_from_braid, alexander_from_seifert

logger = logging.getLogger(__name__)

# 左手三叶结 K′ 的保留名
K_PRIME = "K-prime"

@dataclass(frozen=True)
class KnotRecord:
    name: str
    alexander: LaurentPoly
    d: int
    a_d: int
    genus: Optional[int]
    seifert: Optional[SeifertMatrix] = None
    braid: Optional[BraidWord] = None
    genus_assumed: bool = False

    @property
    def presentation(self) -> Union[SeifertMatrix, BraidWord]:
        return self.seifert if self.seifert is not None else self.braid

    @property
    def monic(self) -> bool:
        return is_monic(self.alexander)


def make_record(
    name: str,
    seifert: Optional[SeifertMatrix] = None,
    braid: Optional[BraidWord] = None,
    genus: Optional[int] = None,
) -> KnotRecord:
    """计算 Δ_K 并校验 KnotRecord 的不变量；两种表示都给出时互相校验"""
    if seifert is None and braid is None:
        raise KnotParseError(f"纽结 {name} 既没有 Seifert 矩阵也没有辫子词", ErrorCode.PARSE_TABLE_FORMAT)

    alexander = alexander_from_seifert(seifert) if seifert is not None else alexander_from_braid(braid)
    if seifert is not None and braid is not None:
        from_braid = alexander_from_braid(braid)
        if from_braid != alexander:
            raise VerificationMismatch(
                f"纽结 {name}: Seifert 给出 {to_text(alexander)}，Burau 给出 {to_text(from_braid)}",
                provenance="knot",
            )

    d, a_d = degree_and_top(alexander)
    if eval_at_one(alexander) != 1:
        raise InvariantViolation(f"纽结 {name}: Δ(1) != 1", ErrorCode.INV_ALEXANDER_NORMALIZATION, provenance="knot")

    genus_assumed = False
    if genus is None:
        genus = d
        genus_assumed = True
        logger.warning(f"纽结 {name} 未给出亏格，假设次数极大: genus = d = {d}")
    if genus < d:
        raise InvariantViolation(
            f"纽结 {name}: 亏格 {genus} 小于 Alexander 多项式次数 {d}",
            ErrorCode.INV_GENUS_BELOW_DEGREE,
            provenance="knot",
        )
    if seifert is not None and genus > seifert.h:
        raise InvariantViolation(
            f"纽结 {name}: 亏格 {genus} 超过 Seifert 曲面亏格 {seifert.h}",
            ErrorCode.INV_GENUS_BELOW_DEGREE,
            provenance="knot",
        )

    return KnotRecord(
        name=name,
        alexander=alexander,
        d=d,
        a_d=a_d,
        genus=genus,
        seifert=seifert,
        braid=braid,
        genus_assumed=genus_assumed,
    )


def with_genus(record: KnotRecord, genus: int) -> KnotRecord:
    """用用户给定的亏格重新校验"""
    return make_record(record.name, record.seifert, record.braid, genus)


def maximal_degree_check(record: KnotRecord) -> bool:
    if record.genus is None:
        raise ConstructionError(f"纽结 {record.name} 缺少亏格", ErrorCode.CONS_GENUS_ABSENT, provenance="knot")
    return record.d == record.genus


@lru_cache(maxsize=None)
def torus_knot_2(q: int) -> KnotRecord:
    """(2, q) 环面纽结，q 为奇数；交错纽结，次数极大"""
    if q < 1 or q % 2 == 0:
        raise TopologyError(f"T(2, q) 要求 q 为正奇数，实际为 {q}", ErrorCode.INVALID_PARAMETER, provenance="knot")
    size = q - 1
    rows = [[(-1 if r == c else 1 if c == r + 1 else 0) for c in range(size)] for r in range(size)]
    seifert = SeifertMatrix.from_rows(rows)
    braid = parse_braid("2: " + " ".join(["-1"] * q))
    return make_record(f"T(2,{q})", seifert=seifert, braid=braid, genus=size // 2)


def _record_from_entry(entry: dict, line: Optional[int] = None) -> KnotRecord:
    if not isinstance(entry, dict) or "name" not in entry:
        raise KnotParseError("纽结表条目必须是带 name 字段的对象", ErrorCode.PARSE_TABLE_FORMAT, line=line)
    name = str(entry["name"])
    try:
        seifert = SeifertMatrix.from_rows(entry["seifert"]) if entry.get("seifert") is not None else None
        braid = parse_braid(entry["braid"]) if entry.get("braid") else None
        genus = entry.get("genus")
        if genus is not None and (not isinstance(genus, int) or genus < 0):
            raise KnotParseError(f"亏格必须是非负整数，实际为 {genus!r}", ErrorCode.PARSE_TABLE_FORMAT)
        return make_record(name, seifert, braid, genus)
    except KnotParseError as e:
        logger.error(f"纽结 {name} 解析失败: {str(e)}")
        raise KnotParseError(f"纽结 {name}: {e}", e.error_code, line=e.line if e.line is not None else line) from e
    except TopologyError as e:
        logger.error(f"纽结 {name} 校验失败: {str(e)}")
        e.args = (f"纽结 {name}: {e}",)
        raise


def _entry_lines(text: str) -> List[int]:
    """顶层数组里每个条目起始处的行号"""
    decoder = json.JSONDecoder()
    position = text.index("[") + 1
    lines = []
    while True:
        while position < len(text) and text[position] in " \t\r\n,":
            position += 1
        if position >= len(text) or text[position] == "]":
            return lines
        lines.append(text.count("\n", 0, position) + 1)
        _, position = decoder.raw_decode(text, position)


def load_knot_table(path: Union[str, Path]) -> List[KnotRecord]:
    """读取 JSON 纽结表，逐条计算并校验"""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise KnotParseError(f"无法读取纽结表 {path}: {e}", ErrorCode.PARSE_KNOT_SOURCE)
    if not text.strip():
        return []
    try:
        entries = json.loads(text)
    except json.JSONDecodeError as e:
        raise KnotParseError(f"纽结表 JSON 解析失败: {e.msg}", ErrorCode.PARSE_TABLE_FORMAT, line=e.lineno)
    if not isinstance(entries, list):
        raise KnotParseError("纽结表顶层必须是数组", ErrorCode.PARSE_TABLE_FORMAT, line=1)

    lines = _entry_lines(text)
    records = [_record_from_entry(entry, line) for entry, line in zip(entries, lines)]
    logger.info(f"从 {path} 载入 {len(records)} 个纽结")
    return records


def find_knot(records: List[KnotRecord], name: str) -> KnotRecord:
    for record in records:
        if record.name == name:
            return record
    raise KnotParseError(f"纽结表中没有名为 {name!r} 的纽结", ErrorCode.PARSE_UNKNOWN_KNOT)


@lru_cache(maxsize=1)
def k_prime() -> KnotRecord:
    """左手三叶结 K′，构造 Y 时使用的纤维纽结"""
    return make_record(
        K_PRIME,
        seifert=SeifertMatrix.from_rows([[-1, 1], [0, -1]]),
        braid=parse_braid("2: -1 -1 -1"),
        genus=1,
    )


def is_fibered_candidate(record: KnotRecord) -> bool:
    """纤维纽结的必要条件：Δ_K 首一"""
    return record.monic
