"""Every named matrix, plus the families obtained by conjugating with powers of c."""
from __future__ import annotations

from functools import lru_cache
from types import MappingProxyType
from typing import Mapping

from .moebius import ExtendedIsometry, ProjectiveMatrix, conjugate, parse_matrix, parse_matrix_entries
from .numfield import FieldElem

# literal values as displayed; s, t generate Delta_0, f, g, h generate Gamma_T0
MATRIX_LITERALS = {
    "s": "[[1, 0], [-1, 1]]",
    "t": "[[2*i, 2 - i], [i, 1 - i]]",
    "f": "[[1, 0], [-1, 1]]",
    "g": "[[-1 + i*r2, 1 - 2*i*r2], [-2, 3 - i*r2]]",
    "h": "[[2*i*r2, -3 - i*r2], [-3 + i*r2, -3*i*r2]]",
    "c": "[[1, i*r2], [0, 1]]",
    "m1": "[[-3, 5], [-2, 3]]",
    "p1": "[[1, 0], [1, 1]]",
    "p2": "[[-1, 5], [0, -1]]",
    "p3": "[[-14, 25], [-9, 16]]",
    "p4": "[[29, -45], [20, -31]]",
    "f0": "[[1, 1], [0, 1]]",
    "b0": "[[0, i], [i, 1]]",
    "a0": "[[0, -1], [1, -1]]",
    "a1": "[[-i*r2, 1 + i*r2], [1, -1 + i*r2]]",
}

# r_T acts on the group by x -> c^-2 conj(x) c^2, i.e. z -> conj(z) - 2 i r2
RT_LITERAL = "[[1, -2*i*r2], [0, 1]]"

MUTATION_CYCLES = {1: 3, 2: 4, 3: 1, 4: 2}


def literal_determinant(name: str) -> FieldElem:
    """Determinant of the literal exactly as written, before any normalization."""
    a, b, c, d = parse_matrix_entries(MATRIX_LITERALS[name])
    return a * d - b * c


def _load_literals() -> dict[str, ProjectiveMatrix]:
    return {name: parse_matrix(text) for name, text in MATRIX_LITERALS.items()}


@lru_cache(maxsize=None)
def registry() -> Mapping[str, ExtendedIsometry]:
    table = {name: ExtendedIsometry(m) for name, m in _load_literals().items()}
    table["rT"] = ExtendedIsometry(parse_matrix(RT_LITERAL), True)
    return MappingProxyType(table)


def get(name: str) -> ExtendedIsometry:
    return registry()[name]


def mat(name: str) -> ProjectiveMatrix:
    return registry()[name].mat


def c_power(n: int) -> ExtendedIsometry:
    return get("c") ** n


def conj_by_c(x: ExtendedIsometry, n: int) -> ExtendedIsometry:
    """``c^-n x c^n``."""
    return conjugate(c_power(-n), x)


@lru_cache(maxsize=None)
def a_family(k: int) -> ExtendedIsometry:
    """a_k = c^-k a_0 c^k."""
    return conj_by_c(get("a0"), k)


@lru_cache(maxsize=None)
def p_family(k: int, j: int) -> ExtendedIsometry:
    """p_k^(j) = c^-2j p_k c^2j."""
    return conj_by_c(get(f"p{k}"), 2 * j)


@lru_cache(maxsize=None)
def m1_family(n: int) -> ExtendedIsometry:
    """m_1^(n) = c^-2n m_1 c^2n."""
    return conj_by_c(get("m1"), 2 * n)


def conj_gamma_t0_generator(name: str) -> ExtendedIsometry:
    """Generator of c^-2 conj(Gamma_T0) c^2 coming from f, g or h."""
    x = get(name)
    return conj_by_c(ExtendedIsometry(x.mat.conj()), 2)


def gamma_t_generators(j: int = 1) -> dict[str, ExtendedIsometry]:
    """Generators of Gamma_T^(j) = c^-2(j-1) Gamma_T c^2(j-1)."""
    base = {name: get(name) for name in ("f", "g", "h")}
    base.update({f"{name}bar": conj_gamma_t0_generator(name) for name in ("f", "g", "h")})
    shift = 2 * (j - 1)
    suffix = "" if j == 1 else f"_{j}"
    return {name + suffix: conj_by_c(x, shift) for name, x in base.items()}


# displayed words for the boundary parabolics: (word in s, t; word in f, g, h)
P_WORDS = {
    "p1": ("s^-1", "f^-1"),
    "p2": ("s*t*s*t^-2", "f*g^-1*f^-1*h^-1*g"),
    "p3": ("(t*s*t)*s^-1*(t*s*t)^-1", "(h^-1*f*g)^-1*g^-1*(h^-1*f*g)"),
}
P4_WORD = "p1*p2*p3^-1"
