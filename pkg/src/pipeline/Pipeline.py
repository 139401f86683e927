"""命令行背后的流水线：解析纽结、组装 Z_K、求 basic class、给出判定与 geography。"""
import json
import logging
import re
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import List, Optional, Tuple

from pydantic import BaseModel, Field, model_validator

from src.basicclass.BasicClassFinder import (
    BasicClassResult,
    brute_force_enumerate,
    class_exponent,
    enumerate_basic_classes,
    extract_coefficient,
    taubes_verdict,
)
from src.basicclass.ZKBasis import ZKBasis, zk_basis
from src.config.TopologyConfig import TopologyConfig
from src.interface import Citation
from src.interface.EnumModel import BaseKind, OutputFormat
from src.interface.ErrorCode import ErrorCode
from src.interface.ReportFormat import (
    GeographyReport,
    ReportFormat,
    RunReport,
    SweepRow,
    VerificationReport,
)
from src.interface.TopologyError import InvariantViolation, KnotParseError, TopologyError, VerificationMismatch
from src.knots.KnotTable import (
    KnotRecord,
    find_knot,
    load_knot_table,
    make_record,
    maximal_degree_check,
    torus_knot_2,
    with_genus,
)
from src.knots.Presentation import SeifertMatrix, parse_braid
from src.knots.alexander import alexander_from_braid, alexander_from_seifert
from src.manifolds.FourManifold import FourManifold, geography, has_minus_two_sphere, sw_symmetry_sign
from src.manifolds.Surgery import assemble_ZK, build_ZK
from src.manifolds.Templates import make_E2n, make_K3

logger = logging.getLogger(__name__)

config = TopologyConfig()

_RANGE = re.compile(r"^\s*(\d+)\s*\.\.\s*(\d+)\s*$")

class SweepRange(BaseModel):
    g_min: int = Field(..., description="亏格下界")
    g_max: int = Field(..., description="亏格上界（含）")
    n_min: int = Field(1, description="n 下界")
    n_max: int = Field(1, description="n 上界（含）")

    @classmethod
    def parse(cls, text: str) -> "SweepRange":
        """解析 "g1..g2,n1..n2"，n 的范围可省略"""
        parts = text.split(",")
        if len(parts) not in (1, 2):
            raise TopologyError(f"无法解析 sweep 范围 {text!r}", ErrorCode.INVALID_PARAMETER, provenance="cli")
        bounds = []
        for part in parts:
            match = _RANGE.match(part)
            if not match:
                raise TopologyError(f"无法解析范围 {part!r}，应为 a..b", ErrorCode.INVALID_PARAMETER, provenance="cli")
            bounds.append((int(match.group(1)), int(match.group(2))))
        (g_min, g_max), (n_min, n_max) = bounds[0], bounds[1] if len(bounds) == 2 else (1, 1)
        return cls(g_min=g_min, g_max=g_max, n_min=n_min, n_max=n_max)

    def points(self) -> List[Tuple[int, int]]:
        return [(n, g) for n in range(self.n_min, self.n_max + 1) for g in range(self.g_min, self.g_max + 1)]


class RunConfig(BaseModel):
    knot_source: Optional[str] = Field(None, description="table:NAME、braid n: ... 或 seifert:PATH")
    genus_override: Optional[int] = Field(None, description="用户给定的纽结亏格")
    base: BaseKind = Field(BaseKind.K3, description="起始流形")
    n: int = Field(1, description="E(2n) 的 n")
    output: Optional[str] = Field(None, description="报告输出路径，为空时写到标准输出")
    geography_sweep: Optional[SweepRange] = Field(None, description="geography 扫描范围")
    verify: bool = Field(False, description="是否运行独立校验")
    output_format: OutputFormat = Field(OutputFormat.JSON, description="输出格式")
    knot_table: Optional[str] = Field(None, description="纽结表路径")

    @model_validator(mode="after")
    def check_source(self) -> "RunConfig":
        if self.knot_source is None and self.geography_sweep is None:
            raise ValueError("必须给出纽结来源或 sweep 范围")
        if self.knot_source is not None and self.geography_sweep is not None:
            raise ValueError("纽结来源与 sweep 范围不能同时给出")
        if self.n < 1:
            raise ValueError(f"n 必须 >= 1，实际为 {self.n}")
        if self.genus_override is not None and self.genus_override < 0:
            raise ValueError("亏格不能为负")
        return self


def resolve_knot(source: str, table_path: Optional[str] = None) -> KnotRecord:
    """把 --knot 参数解析成 KnotRecord"""
    source = source.strip()
    if source.startswith("table:"):
        records = load_knot_table(table_path or config.knot_table_path)
        return find_knot(records, source[len("table:"):].strip())
    if source.startswith("braid"):
        text = source[len("braid"):].lstrip(" :")
        braid = parse_braid(text)
        return make_record(f"braid({braid.to_text()})", braid=braid)
    if source.startswith("seifert:"):
        path = Path(source[len("seifert:"):].strip())
        try:
            rows = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as e:
            raise KnotParseError(f"Seifert 矩阵文件解析失败: {e.msg}", ErrorCode.PARSE_TABLE_FORMAT, line=e.lineno)
        except OSError as e:
            raise KnotParseError(f"无法读取 Seifert 矩阵文件 {path}: {e}", ErrorCode.PARSE_KNOT_SOURCE)
        return make_record(path.stem, seifert=SeifertMatrix.from_rows(rows))
    raise KnotParseError(f"无法识别的纽结来源 {source!r}", ErrorCode.PARSE_KNOT_SOURCE)


def make_base(kind: BaseKind, n: int = 1) -> FourManifold:
    if kind == BaseKind.K3:
        return make_K3()
    return make_E2n(n)


def expected_geography(n: int, g: int) -> Tuple[int, int]:
    """E(2n) 起点、亏格 g 纽结的格点 (3n + g - 1, 8(g + n - 1))"""
    return 3 * n + g - 1, 8 * (g + n - 1)


def _burau_matches_seifert(knot: KnotRecord) -> Optional[bool]:
    if knot.seifert is None or knot.braid is None:
        return None
    return alexander_from_seifert(knot.seifert) == alexander_from_braid(knot.braid)


def _negation_closed(result: BasicClassResult, sign: int) -> bool:
    classes = result.class_set()
    for entry in result.classes:
        negated = -entry.k
        if negated not in classes or result.sw_of(negated) != sign * entry.sw_value:
            return False
    return True


def verify_result(knot: KnotRecord, basis: ZKBasis, result: BasicClassResult, sign: int) -> VerificationReport:
    """在线程池里并行跑两个独立校验，任何不一致都直接报错"""
    bound = 2 * basis.g + config.verify_bound_margin
    with ThreadPoolExecutor(max_workers=2) as executor:
        burau_future = executor.submit(_burau_matches_seifert, knot)
        brute_future = executor.submit(brute_force_enumerate, basis, bound)
        burau = burau_future.result()
        brute = brute_future.result()

    # a_d = 0 时 SW 恒为零，穷举给出的只是约束链的候选
    expected = result.class_set() if result.classes else sorted(
        enumerate_basic_classes(basis, 1).class_set(), key=lambda k: k.sort_key
    )
    report = VerificationReport(
        burau_matches_seifert=burau,
        brute_force_bound=bound,
        brute_force_matches=brute == expected,
        negation_closed=_negation_closed(result, sign),
    )
    if burau is False:
        raise VerificationMismatch(f"纽结 {knot.name}: Burau 与 Seifert 的 Alexander 多项式不一致", provenance="knot")
    if not report.brute_force_matches:
        raise VerificationMismatch(
            f"穷举得到 {[k.to_text() for k in brute]}，约束链得到 {[k.to_text() for k in expected]}",
            provenance="basicclass",
        )
    if not report.negation_closed:
        raise VerificationMismatch("basic class 结果在取负下不封闭", provenance="basicclass")
    logger.info(f"校验通过: bound={bound}, {len(brute)} 个候选")
    return report


def run_pipeline(cfg: RunConfig) -> RunReport:
    if cfg.knot_source is None:
        raise TopologyError("run_pipeline 需要纽结来源", ErrorCode.INVALID_PARAMETER, provenance="cli")
    knot = resolve_knot(cfg.knot_source, cfg.knot_table)
    if cfg.genus_override is not None:
        knot = with_genus(knot, cfg.genus_override)
    logger.info(f"纽结 {knot.name}: d={knot.d}, a_d={knot.a_d}, genus={knot.genus}")
    maximal = maximal_degree_check(knot)

    base = make_base(cfg.base, cfg.n)
    construction = assemble_ZK(knot, base)
    z_k = construction.z_k
    basis = zk_basis(z_k)
    sign = sw_symmetry_sign(z_k)

    exponent = class_exponent(basis.g, construction.x_k.sw_unit)
    coefficient = extract_coefficient(construction.x_k.sw, exponent)
    if maximal and coefficient != knot.a_d:
        raise InvariantViolation(
            f"SW_X_K 在指数 {exponent} 处的系数 {coefficient} 不等于 a_d = {knot.a_d}",
            ErrorCode.INV_VERIFY_MISMATCH,
            provenance="basicclass",
        )
    if not maximal and coefficient != 0:
        raise InvariantViolation(f"d < g 时系数应为 0，实际为 {coefficient}", ErrorCode.INV_VERIFY_MISMATCH, provenance="basicclass")

    result = enumerate_basic_classes(
        basis,
        coefficient,
        symmetry_sign=sign,
        sw_y_at_canonical=construction.y.sw_at_canonical,
    )
    verdict = taubes_verdict(result, has_minus_two_sphere(z_k))

    n = base.elliptic_n
    point = geography(z_k)
    chi_expected, c_expected = expected_geography(n, knot.genus)
    if (point.chi, point.c) != (chi_expected, c_expected):
        raise InvariantViolation(
            f"geography ({point.chi}, {point.c}) 与闭式 ({chi_expected}, {c_expected}) 不一致",
            ErrorCode.INV_GEOGRAPHY_MISMATCH,
            provenance="manifold",
        )

    verification = verify_result(knot, basis, result, sign) if cfg.verify else None

    manifold_report = ReportFormat.create_manifold_report(z_k)
    class_report = ReportFormat.create_basic_class_report(result, verdict)
    citations = set(manifold_report.assumptions) | set(class_report.citations)
    citations |= {assertion.citation for assertion in construction.x_k.assertions + construction.y.assertions}
    citations.add(Citation.TAUBES)
    if has_minus_two_sphere(z_k):
        citations.add(Citation.NONSYMPLECTIC_REVERSED)

    logger.info(f"{z_k.name}: (χ, c) = ({point.chi}, {point.c})，判定 {verdict.value}")
    return RunReport(
        knot=ReportFormat.create_knot_report(knot),
        base=base.name,
        manifold=manifold_report,
        basic_classes=class_report,
        geography=GeographyReport(
            chi=point.chi,
            c=point.c,
            chi_expected=chi_expected,
            c_expected=c_expected,
            on_slope_8_line=point.c == 8 * (point.chi - 2 * n),
        ),
        verification=verification,
        citations=sorted(citations),
    )


def _sweep_point(n: int, g: int) -> SweepRow:
    z_k = build_ZK(torus_knot_2(2 * g + 1), make_K3() if n == 1 else make_E2n(n))
    point = geography(z_k)
    chi_expected, c_expected = expected_geography(n, g)
    if (point.chi, point.c) != (chi_expected, c_expected):
        raise InvariantViolation(
            f"n={n}, g={g}: geography ({point.chi}, {point.c}) != ({chi_expected}, {c_expected})",
            ErrorCode.INV_GEOGRAPHY_MISMATCH,
            provenance="manifold",
        )
    return SweepRow(n=n, g=g, chi=point.chi, c=point.c, chi_expected=chi_expected, c_expected=c_expected)


def geography_sweep(cfg: RunConfig) -> List[SweepRow]:
    """每个 (n, g) 用 T(2, 2g+1) 构造一次 Z_K；线程池并行，按输入顺序合并"""
    sweep = cfg.geography_sweep
    if sweep is None:
        raise TopologyError("geography_sweep 需要 sweep 范围", ErrorCode.INVALID_PARAMETER, provenance="cli")
    points = sweep.points()
    if not points:
        raise TopologyError(f"sweep 范围为空: {sweep.model_dump()}", ErrorCode.INVALID_PARAMETER, provenance="cli")
    if sweep.g_min < 1 or sweep.n_min < 1:
        raise TopologyError("sweep 要求 g >= 1 且 n >= 1", ErrorCode.INVALID_PARAMETER, provenance="cli")

    with ThreadPoolExecutor(max_workers=config.sweep_workers) as executor:
        rows = list(executor.map(lambda point: _sweep_point(*point), points))
    logger.info(f"geography 扫描完成: {len(rows)} 个点")
    return rows
