from .ErrorCode import ErrorCode
from .TopologyError import TopologyError

__all__ = ["ErrorCode", "TopologyError"]
