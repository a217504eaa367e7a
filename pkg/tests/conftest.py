from fractions import Fraction

import sympy
from hypothesis import strategies as st

from hidsym.numfield import FieldElem

SQRT2 = sympy.sqrt(2)


def to_sympy(x: FieldElem):
    a, b, c, d = (sympy.Rational(q.numerator, q.denominator) for q in x.coords)
    return a + b * SQRT2 + sympy.I * (c + d * SQRT2)


def sympy_matrix(m):
    return sympy.Matrix([[to_sympy(m.a), to_sympy(m.b)], [to_sympy(m.c), to_sympy(m.d)]])


def sym_equal(x, y) -> bool:
    return sympy.expand(x - y) == 0


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
field_elems = st.builds(FieldElem, rationals, rationals, rationals, rationals)
nonzero_elems = field_elems.filter(lambda x: not x.is_zero())
