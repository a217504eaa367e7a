"""Exact verification of matrix, reflection-group, permutation and covering computations
for hidden extensions of a 4-punctured-sphere mutation."""

from .numfield import FieldElem, NotASquare, format_elem, parse_elem, sqrt_in_field
from .moebius import ExtendedIsometry, ProjectiveMatrix, compose, conjugate, parse_matrix
from .suites import SuiteConfig, list_suites, run_suite

__version__ = "0.1.0"
