import csv
import io
import json
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from src.algebra.LaurentPoly import to_json, to_text
from src.basicclass.BasicClassFinder import BasicClassResult
from src.interface.EnumModel import Verdict
from src.interface.TopologyError import TopologyError
from src.knots.KnotTable import KnotRecord
from src.manifolds.FourManifold import FourManifold, geography

# 报告模型
class SurfaceReport(BaseModel):
    label: str = Field(..., description="曲面标签")
    genus: int = Field(..., description="亏格")
    self_int: int = Field(..., description="自交数")
    pairings: Dict[str, int] = Field(default_factory=dict, description="与其他被追踪曲面的交数")
    in_cusp_neighborhood: bool = Field(False, description="是否在尖点邻域里")
    is_symplectic_torus: bool = Field(False, description="是否为辛环面")

class ManifoldReport(BaseModel):
    name: str = Field(..., description="流形名称")
    e: int = Field(..., description="Euler 示性数")
    sign: int = Field(..., description="符号差")
    b_plus: int = Field(..., description="b+")
    b1: int = Field(..., description="第一 Betti 数")
    spin: bool = Field(..., description="是否自旋")
    simply_connected: bool = Field(..., description="是否单连通（断言）")
    chi: Optional[int] = Field(None, description="全纯 Euler 示性数，只对单连通流形给出")
    c: Optional[int] = Field(None, description="3·sign + 2·e")
    sw: Optional[Dict[str, Any]] = Field(None, description="SW 多项式的 JSON 形式，未定义时为空")
    canonical: Optional[str] = Field(None, description="典范类")
    surfaces: List[SurfaceReport] = Field(default_factory=list, description="被追踪的曲面")
    assumptions: List[str] = Field(default_factory=list, description="断言所依据的引用")

class KnotReport(BaseModel):
    name: str = Field(..., description="纽结名称")
    presentation: str = Field(..., description="输入表示")
    alexander: Dict[str, Any] = Field(..., description="对称化 Alexander 多项式")
    alexander_text: str = Field(..., description="Alexander 多项式文本")
    d: int = Field(..., description="次数")
    a_d: int = Field(..., description="首项系数")
    genus: Optional[int] = Field(None, description="亏格")
    genus_assumed: bool = Field(False, description="亏格是否按 d 假设")
    maximal_degree: bool = Field(..., description="d 是否等于亏格")
    monic: bool = Field(..., description="首项系数是否为 ±1")

class ClassReport(BaseModel):
    a: int = Field(..., description="τ 的系数")
    b: int = Field(..., description="Σ′ 的系数")
    sw_value: int = Field(..., description="按符号规则给出的 SW 值")
    sw_magnitude: int = Field(..., description="|SW|")
    sign_ambiguous: bool = Field(True, description="整体符号是否不确定")

class BasicClassReport(BaseModel):
    g: int = Field(..., description="Σ′ 的亏格减一")
    classes: List[ClassReport] = Field(default_factory=list, description="basic class 列表")
    simple_type: bool = Field(..., description="是否单型")
    count_up_to_sign: int = Field(..., description="差一个符号意义下的个数")
    verdict: str = Field(..., description="Taubes 判定")
    citations: List[str] = Field(default_factory=list, description="引用")
    notes: List[str] = Field(default_factory=list, description="备注")

class GeographyReport(BaseModel):
    chi: int = Field(..., description="计算得到的 χ")
    c: int = Field(..., description="计算得到的 c")
    chi_expected: int = Field(..., description="闭式 3n + g - 1")
    c_expected: int = Field(..., description="闭式 8(g + n - 1)")
    on_slope_8_line: bool = Field(..., description="是否在过 (2n, 0) 的斜率 8 直线上")

class VerificationReport(BaseModel):
    burau_matches_seifert: Optional[bool] = Field(None, description="两种 Alexander 算法是否一致，只有一种表示时为空")
    brute_force_bound: int = Field(..., description="穷举的系数界")
    brute_force_matches: bool = Field(..., description="穷举结果与约束链结果是否一致")
    negation_closed: bool = Field(..., description="结果在取负下封闭且符号规则成立")

class RunReport(BaseModel):
    knot: KnotReport = Field(..., description="纽结数据")
    base: str = Field(..., description="起始流形")
    manifold: ManifoldReport = Field(..., description="Z_K 的数据")
    basic_classes: BasicClassReport = Field(..., description="basic class 与判定")
    geography: GeographyReport = Field(..., description="geography 点")
    verification: Optional[VerificationReport] = Field(None, description="--verify 的结果")
    citations: List[str] = Field(default_factory=list, description="所有断言的引用")

class SweepRow(BaseModel):
    n: int = Field(..., description="E(2n) 的 n")
    g: int = Field(..., description="纽结亏格")
    chi: int = Field(..., description="计算得到的 χ")
    c: int = Field(..., description="计算得到的 c")
    chi_expected: int = Field(..., description="闭式 χ")
    c_expected: int = Field(..., description="闭式 c")

class ErrorResponse(BaseModel):
    type: str = Field("error", description="响应类型")
    code: int = Field(..., description="错误码")
    message: str = Field(..., description="错误信息")
    provenance: Optional[str] = Field(None, description="出错的模块")


class ReportFormat:
    """报告格式统一管理类"""

    @staticmethod
    def dumps(model: BaseModel, indent: Optional[int] = 2) -> str:
        """键排序、不带时间戳，相同输入得到字节级相同的输出"""
        return json.dumps(model.model_dump(mode="json"), ensure_ascii=False, sort_keys=True, indent=indent)

    @staticmethod
    def create_knot_report(record: KnotRecord) -> KnotReport:
        if record.seifert is not None:
            presentation = f"seifert {[list(row) for row in record.seifert.rows]}"
        else:
            presentation = f"braid {record.braid.to_text()}"
        return KnotReport(
            name=record.name,
            presentation=presentation,
            alexander=to_json(record.alexander),
            alexander_text=to_text(record.alexander),
            d=record.d,
            a_d=record.a_d,
            genus=record.genus,
            genus_assumed=record.genus_assumed,
            maximal_degree=record.genus is not None and record.d == record.genus,
            monic=record.monic,
        )

    @staticmethod
    def create_manifold_report(manifold: FourManifold) -> ManifoldReport:
        chi = c = None
        if manifold.simply_connected:
            point = geography(manifold)
            chi, c = point.chi, point.c
        return ManifoldReport(
            name=manifold.name,
            e=manifold.euler,
            sign=manifold.sign,
            b_plus=manifold.b_plus,
            b1=manifold.b1,
            spin=manifold.spin,
            simply_connected=manifold.simply_connected,
            chi=chi,
            c=c,
            sw=None if manifold.sw_poly is None else to_json(manifold.sw_poly),
            canonical=None if manifold.canonical is None else manifold.canonical.to_text(),
            surfaces=[SurfaceReport(**surface.to_dict()) for surface in manifold.surfaces],
            assumptions=[assertion.citation for assertion in manifold.assertions],
        )

    @staticmethod
    def create_basic_class_report(result: BasicClassResult, verdict: Verdict) -> BasicClassReport:
        return BasicClassReport(
            g=result.g,
            classes=[
                ClassReport(
                    a=entry.k.a,
                    b=entry.k.b,
                    sw_value=entry.sw_value,
                    sw_magnitude=abs(entry.sw_value),
                    sign_ambiguous=entry.sign_ambiguous,
                )
                for entry in result.classes
            ],
            simple_type=result.simple_type,
            count_up_to_sign=result.count_up_to_sign,
            verdict=verdict.value,
            citations=[assertion.citation for assertion in result.assertions],
            notes=list(result.notes),
        )

    @staticmethod
    def create_error_response(error: TopologyError) -> str:
        """创建错误响应"""
        response = ErrorResponse(code=error.error_code.value, message=str(error), provenance=error.provenance)
        return ReportFormat.dumps(response, indent=None)

    @staticmethod
    def render_text(report: RunReport) -> str:
        knot, manifold, classes = report.knot, report.manifold, report.basic_classes
        lines = [
            f"纽结 {knot.name}: Δ = {knot.alexander_text}, d = {knot.d}, a_d = {knot.a_d}, "
            f"genus = {knot.genus}, 次数极大 = {knot.maximal_degree}",
            f"{manifold.name} (起点 {report.base}): e = {manifold.e}, sign = {manifold.sign}, "
            f"b+ = {manifold.b_plus}, spin = {manifold.spin}",
            f"geography: (χ, c) = ({report.geography.chi}, {report.geography.c})",
        ]
        for entry in classes.classes:
            lines.append(f"basic class {entry.a}τ + {entry.b}Σ′: SW = ±{entry.sw_magnitude}")
        lines.extend(f"备注: {note}" for note in classes.notes)
        lines.append(f"判定: {classes.verdict}")
        if report.verification is not None:
            lines.append(f"校验: {report.verification.model_dump()}")
        lines.extend(f"  - {citation}" for citation in report.citations)
        return "\n".join(lines)

    @staticmethod
    def render_csv(rows: List[SweepRow]) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["n", "g", "chi", "c", "chi_expected", "c_expected"])
        for row in rows:
            writer.writerow([row.n, row.g, row.chi, row.c, row.chi_expected, row.c_expected])
        return buffer.getvalue()

    @staticmethod
    def render_sweep_text(rows: List[SweepRow]) -> str:
        return "\n".join(f"n={row.n} g={row.g}: (χ, c) = ({row.chi}, {row.c})" for row in rows)
