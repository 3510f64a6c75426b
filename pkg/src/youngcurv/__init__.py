"""Young-symmetrizer algebra and curvature formulas of stationary space-times."""
from .perm_algebra import GroupRingElement, Permutation, build_named, ring_multiply, star
from .tensor_sym import DenseTensor, apply_operator, span_rank
from .young import Partition, YoungTableau, standard_tableaux, young_symmetrizer

__all__ = [
    "DenseTensor", "GroupRingElement", "Partition", "Permutation", "YoungTableau",
    "apply_operator", "build_named", "ring_multiply", "span_rank", "standard_tableaux",
    "star", "young_symmetrizer",
]
__version__ = "0.1.0"
