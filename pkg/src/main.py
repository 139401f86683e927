import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from pydantic import ValidationError

from src.config.TopologyConfig import TopologyConfig
from src.interface.EnumModel import BaseKind, OutputFormat
from src.interface.ErrorCode import ErrorCode
from src.interface.ReportFormat import ReportFormat
from src.interface.TopologyError import TopologyError
from src.pipeline.Pipeline import RunConfig, SweepRange, geography_sweep, run_pipeline

config = TopologyConfig()

# 配置日志
logging.basicConfig(
    level=getattr(logging, config.log_level.upper(), logging.INFO),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="python -m src.main",
        description="构造只有一个 basic class 的非辛 4-流形 Z_K 并给出判定",
    )
    parser.add_argument("--knot", help='纽结来源: table:NAME | "braid n: w1 w2 ..." | seifert:PATH')
    parser.add_argument("--genus", type=int, help="纽结亏格（缺省时取 Alexander 多项式的次数）")
    parser.add_argument("--base", choices=[kind.value for kind in BaseKind], default=config.default_base.value, help="起始流形")
    parser.add_argument("--n", type=int, default=1, help="E(2n) 的 n")
    parser.add_argument("--out", help="报告输出路径")
    parser.add_argument("--sweep", help="geography 扫描范围 g1..g2,n1..n2")
    parser.add_argument("--verify", action="store_true", help="运行独立校验（Burau/Seifert、穷举）")
    parser.add_argument("--format", choices=[fmt.value for fmt in OutputFormat], default=OutputFormat.JSON.value, help="输出格式")
    parser.add_argument("--table", help="纽结表路径，覆盖 KNOT_TABLE_PATH")
    parser.add_argument("--log-level", help="日志级别，覆盖 LOG_LEVEL")
    return parser

def render(cfg: RunConfig) -> str:
    """运行流水线或扫描，按格式渲染"""
    if cfg.geography_sweep is not None:
        rows = geography_sweep(cfg)
        if cfg.output_format == OutputFormat.CSV:
            return ReportFormat.render_csv(rows)
        if cfg.output_format == OutputFormat.TEXT:
            return ReportFormat.render_sweep_text(rows)
        return "\n".join(ReportFormat.dumps(row, indent=None) for row in rows)

    report = run_pipeline(cfg)
    if cfg.output_format == OutputFormat.TEXT:
        return ReportFormat.render_text(report)
    if cfg.output_format == OutputFormat.CSV:
        geo = report.geography
        return f"n,g,chi,c\n{cfg.n if cfg.base == BaseKind.E2N else 1},{report.knot.genus},{geo.chi},{geo.c}\n"
    return ReportFormat.dumps(report, indent=config.report_indent)

def main(argv: Optional[List[str]] = None) -> int:
    """主函数，返回退出码"""
    args = build_parser().parse_args(argv)
    if args.log_level:
        logging.getLogger().setLevel(args.log_level.upper())

    try:
        cfg = RunConfig(
            knot_source=args.knot,
            genus_override=args.genus,
            base=BaseKind(args.base),
            n=args.n,
            output=args.out,
            geography_sweep=SweepRange.parse(args.sweep) if args.sweep else None,
            verify=args.verify,
            output_format=OutputFormat(args.format),
            knot_table=args.table,
        )
        text = render(cfg)
    except ValidationError as e:
        logger.error(f"参数无效: {str(e)}")
        print(ReportFormat.create_error_response(TopologyError(str(e), ErrorCode.INVALID_PARAMETER, provenance="cli")), file=sys.stderr)
        return ErrorCode.INVALID_PARAMETER.exit_code
    except TopologyError as e:
        logger.error(f"[{e.provenance}] {e.error_code.name}: {str(e)}")
        print(ReportFormat.create_error_response(e), file=sys.stderr)
        return e.error_code.exit_code

    if cfg.output:
        Path(cfg.output).write_text(text + "\n", encoding="utf-8")
        logger.info(f"报告已写入 {cfg.output}")
    else:
        print(text)
    return 0

if __name__ == "__main__":
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        logger.info("程序被用户中断")
        sys.exit(1)
    except Exception as e:
        logger.error(f"程序发生错误: {str(e)}", exc_info=True)
        sys.exit(ErrorCode.SERVER_INTERNAL_ERROR.exit_code)
