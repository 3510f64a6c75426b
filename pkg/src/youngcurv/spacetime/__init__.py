from .frame import GeometryError, PointFrame, build_point_frame
from .jet import Jet2, JetArray
from .metrics import CATALOG, MetricProvider, get_metric

__all__ = ["CATALOG", "GeometryError", "Jet2", "JetArray", "MetricProvider", "PointFrame",
           "build_point_frame", "get_metric"]
