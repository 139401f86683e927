from enum import Enum

class Verdict(Enum):
    NONSYMPLECTIC_BOTH_ORIENTATIONS = "NONSYMPLECTIC_BOTH_ORIENTATIONS"
    NONSYMPLECTIC_GIVEN_ORIENTATION = "NONSYMPLECTIC_GIVEN_ORIENTATION"
    INCONCLUSIVE = "INCONCLUSIVE"
    TRIVIAL_SW = "TRIVIAL_SW"

class BaseKind(Enum):
    K3 = "K3"
    E2N = "E2n"

class OutputFormat(Enum):
    JSON = "json"
    TEXT = "text"
    CSV = "csv"
