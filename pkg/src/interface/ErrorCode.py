from enum import Enum

class ErrorCode(Enum):
    """错误码枚举"""
    # 输入解析错误 (1100-1199)

    PARSE_BAD_TOKEN = 1101
    PARSE_GENERATOR_OUT_OF_RANGE = 1102
    PARSE_NOT_A_KNOT = 1103  # 辫子闭包是多分支链环
    PARSE_TABLE_FORMAT = 1104
    PARSE_POLYNOMIAL_TEXT = 1105
    PARSE_KNOT_SOURCE = 1106
    PARSE_UNKNOWN_KNOT = 1107
    INVALID_PARAMETER = 1108

    # 数学不变量错误 (1200-1299)
    INV_VARIABLE_MISMATCH = 1201
    INV_SYMMETRY_VIOLATION = 1202
    INV_ZERO_POLYNOMIAL = 1203
    INV_NOT_UNIMODULAR = 1204  # V - V^T 不是幺模的
    INV_INEXACT_DIVISION = 1205
    INV_ALEXANDER_NORMALIZATION = 1206
    INV_GENUS_BELOW_DEGREE = 1207
    INV_ROCHLIN = 1208
    INV_BETTI_PARITY = 1209
    INV_NOT_DIVISIBLE = 1210
    INV_VERIFY_MISMATCH = 1211
    INV_GEOGRAPHY_MISMATCH = 1212

    # 构造前提错误 (1300-1399)
    CONS_SURFACE_NOT_FOUND = 1301
    CONS_NOT_SURGERY_TORUS = 1302
    CONS_GENUS_MISMATCH = 1303
    CONS_NONZERO_SELF_INTERSECTION = 1304
    CONS_GENUS_TOO_SMALL = 1305
    CONS_NOT_SIMPLY_CONNECTED = 1306
    CONS_SW_UNDEFINED = 1307
    CONS_CANONICAL_UNKNOWN = 1308
    CONS_BAD_BASE = 1309
    CONS_GENUS_ABSENT = 1310
    CONS_NOT_APPLICABLE = 1311
    CONS_BOUND_TOO_SMALL = 1312

    # 内部错误 (1400-1499)
    SERVER_INTERNAL_ERROR = 1401

    @property
    def exit_code(self) -> int:
        """命令行退出码：2 输入错误，3 不变量违例，4 构造前提失败，1 其他"""
        if 1100 <= self.value < 1200:
            return 2
        if 1200 <= self.value < 1300:
            return 3
        if 1300 <= self.value < 1400:
            return 4
        return 1
