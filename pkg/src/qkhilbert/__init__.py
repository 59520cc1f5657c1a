"""Exact Hilbert polynomials of Wolf spaces and prolongation of the twistor symbol."""

__version__ = "0.1.0"

from .exactcore import UniPoly, bernoulli_poly, binomial, format_rational
from .rootsys import (
    RootSystem,
    build_root_system,
    casimir,
    highest_root,
    weyl_dim,
    wolf_grading,
)
from .hilbert import HilbertReport, bernoulli_expand, closed_form, hilbert_poly, verify_report

__all__ = [
    "UniPoly", "bernoulli_poly", "binomial", "format_rational",
    "RootSystem", "build_root_system", "casimir", "highest_root", "weyl_dim", "wolf_grading",
    "HilbertReport", "bernoulli_expand", "closed_form", "hilbert_poly", "verify_report",
]
