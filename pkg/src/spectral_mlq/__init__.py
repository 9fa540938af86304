"""Multiline queues with spectral parameters, their symmetric-group action,
determinant formulas for spectral weights, and the multispecies TASEP."""

from .core import format_word, parse_word, queue_apply
from .mlq import MLQ, enumerate_mlqs, mlq_apply, mlq_weight, spectral_weight, spectral_weights
from .poly import Poly

__version__ = "0.1.0"

__all__ = [
    "MLQ",
    "Poly",
    "enumerate_mlqs",
    "format_word",
    "mlq_apply",
    "mlq_weight",
    "parse_word",
    "queue_apply",
    "spectral_weight",
    "spectral_weights",
]
