import os
from pathlib import Path

from src.interface.EnumModel import BaseKind

DEFAULT_KNOT_TABLE = Path(__file__).resolve().parent.parent / "data" / "knots.json"

class TopologyConfig:
    """计算流水线配置类"""
    def __init__(self):
        self.knot_table_path = Path(os.getenv("KNOT_TABLE_PATH", str(DEFAULT_KNOT_TABLE)))
        self.log_level = os.getenv("LOG_LEVEL", "INFO")
        self.default_base = BaseKind(os.getenv("DEFAULT_BASE", BaseKind.K3.value))
        self.sweep_workers = int(os.getenv("SWEEP_WORKERS", 4))
        self.e2n_validated_max = int(os.getenv("E2N_VALIDATED_MAX", 4))
        self.verify_bound_margin = int(os.getenv("VERIFY_BOUND_MARGIN", 4))
        self.report_indent = int(os.getenv("REPORT_INDENT", 2))
