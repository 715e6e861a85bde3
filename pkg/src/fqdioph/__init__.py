"""Diophantine tuples over finite fields: constructions, certificates and exact oracles."""

from ._kernels import BACKEND
from .constructions import construct, construct_auto, compute_Q
from .diophantine import verify_tuple
from .ffcore import Field, make_field, parse_field
from .oracle import exact_M

__version__ = "0.1.0"

__all__ = ["BACKEND", "Field", "compute_Q", "construct", "construct_auto", "exact_M",
           "make_field", "parse_field", "verify_tuple"]
