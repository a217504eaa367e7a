"""PSL2 over Q(i, r2), extended by complex conjugation.

A :class:`ProjectiveMatrix` is stored in canonical sign form so that equal
elements of PSL2 hash equally.  :class:`ExtendedIsometry` adds an
orientation flag; a set flag means ``z -> M(conj z)``.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Union

from .numfield import ONE, ZERO, FieldElem, NotASquare, format_elem, parse_elem, sqrt_in_field


class NormalizationFailure(ArithmeticError):
    """Determinant has no square root in the field."""


class NotParabolic(ValueError):
    pass


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "oo"

    __str__ = __repr__

    def conj(self):
        return self


INFINITY = _Infinity()
BoundaryPoint = Union[FieldElem, _Infinity]


class TraceClass(enum.Enum):
    IDENTITY = "Identity"
    PARABOLIC = "Parabolic"
    ELLIPTIC = "Elliptic"
    LOXODROMIC = "Loxodromic"


def _canonical(a, b, c, d):
    for x in (a, b, c, d):
        if not x.is_zero():
            if x.is_positive_normal():
                return a, b, c, d
            return -a, -b, -c, -d
    raise ValueError("zero matrix")


class ProjectiveMatrix:
    __slots__ = ("a", "b", "c", "d", "_key")

    def __init__(self, a, b, c, d, *, check: bool = True):
        a, b, c, d = (FieldElem.coerce(x) for x in (a, b, c, d))
        if check and not (a * d - b * c).is_one():
            raise ValueError(f"determinant {a * d - b * c} != 1")
        self.a, self.b, self.c, self.d = _canonical(a, b, c, d)
        self._key = None

    @classmethod
    def normalized(cls, a, b, c, d) -> "ProjectiveMatrix":
        """Scale an invertible matrix to determinant 1."""
        a, b, c, d = (FieldElem.coerce(x) for x in (a, b, c, d))
        det = a * d - b * c
        if det.is_zero():
            raise ValueError("singular matrix")
        if det.is_one():
            return cls(a, b, c, d, check=False)
        lam = sqrt_in_field(det)
        if lam is NotASquare:
            raise NormalizationFailure(f"determinant {det} is not a square in Q(i, r2)")
        s = lam.inv()
        return cls(a * s, b * s, c * s, d * s, check=False)

    @classmethod
    def identity(cls) -> "ProjectiveMatrix":
        return cls(ONE, ZERO, ZERO, ONE, check=False)

    @property
    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def key(self) -> tuple:
        if self._key is None:
            self._key = tuple(x.key() for x in self.entries)
        return self._key

    def __eq__(self, other):
        if not isinstance(other, ProjectiveMatrix):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __mul__(self, other: "ProjectiveMatrix") -> "ProjectiveMatrix":
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        return ProjectiveMatrix(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h, check=False)

    def inverse(self) -> "ProjectiveMatrix":
        return ProjectiveMatrix(self.d, -self.b, -self.c, self.a, check=False)

    def __pow__(self, n: int) -> "ProjectiveMatrix":
        base = self if n >= 0 else self.inverse()
        result = ProjectiveMatrix.identity()
        for _ in range(abs(n)):
            result = result * base
        return result

    def conj(self) -> "ProjectiveMatrix":
        return ProjectiveMatrix(*(x.conj() for x in self.entries), check=False)

    def det(self) -> FieldElem:
        return self.a * self.d - self.b * self.c

    def trace(self) -> FieldElem:
        """Trace of the canonical representative (defined up to sign)."""
        return self.a + self.d

    def is_identity(self) -> bool:
        return self.b.is_zero() and self.c.is_zero() and self.a == self.d

    def has_gaussian_integer_entries(self) -> bool:
        return all(x.is_gaussian_integer() for x in self.entries)

    def __repr__(self):
        return f"ProjectiveMatrix({format_matrix(self)})"

    def __str__(self):
        return format_matrix(self)


def equals_projective(x, y) -> bool:
    """Equality in PSL2 (extended by orientation when given isometries)."""
    if isinstance(x, ProjectiveMatrix) and isinstance(y, ProjectiveMatrix):
        return x == y
    return as_isometry(x) == as_isometry(y)


def entrywise_conj(m: ProjectiveMatrix) -> ProjectiveMatrix:
    return m.conj()


@dataclass(frozen=True)
class ExtendedIsometry:
    """``z -> mat(z)`` or, when antiholomorphic, ``z -> mat(conj z)``."""

    mat: ProjectiveMatrix
    antiholomorphic: bool = False

    @classmethod
    def identity(cls) -> "ExtendedIsometry":
        return cls(ProjectiveMatrix.identity(), False)

    def __mul__(self, other: "ExtendedIsometry") -> "ExtendedIsometry":
        return compose(self, other)

    def inverse(self) -> "ExtendedIsometry":
        if self.antiholomorphic:
            return ExtendedIsometry(self.mat.conj().inverse(), True)
        return ExtendedIsometry(self.mat.inverse(), False)

    def __pow__(self, n: int) -> "ExtendedIsometry":
        base = self if n >= 0 else self.inverse()
        result = ExtendedIsometry.identity()
        for _ in range(abs(n)):
            result = result * base
        return result

    def key(self) -> tuple:
        return (self.antiholomorphic, self.mat.key())

    def is_identity(self) -> bool:
        return not self.antiholomorphic and self.mat.is_identity()

    def __str__(self):
        text = format_matrix(self.mat)
        return text + " conj" if self.antiholomorphic else text


def as_isometry(x) -> ExtendedIsometry:
    if isinstance(x, ExtendedIsometry):
        return x
    if isinstance(x, ProjectiveMatrix):
        return ExtendedIsometry(x, False)
    raise TypeError(f"not an isometry: {x!r}")


def compose(x, y) -> ExtendedIsometry:
    """``x o y``: apply ``y`` first."""
    x, y = as_isometry(x), as_isometry(y)
    right = y.mat.conj() if x.antiholomorphic else y.mat
    return ExtendedIsometry(x.mat * right, x.antiholomorphic != y.antiholomorphic)


def conjugate(g, x) -> ExtendedIsometry:
    """``g x g^-1``."""
    g = as_isometry(g)
    return compose(compose(g, x), g.inverse())


def trace_class(m: ProjectiveMatrix) -> TraceClass:
    if m.is_identity():
        return TraceClass.IDENTITY
    tr2 = m.trace() * m.trace()
    if tr2 == 4:
        return TraceClass.PARABOLIC
    if tr2.is_real() and tr2.sign() >= 0 and (tr2 - 4).sign() < 0:
        return TraceClass.ELLIPTIC
    return TraceClass.LOXODROMIC


def parabolic_fixed_point(m: ProjectiveMatrix) -> BoundaryPoint:
    if trace_class(m) is not TraceClass.PARABOLIC:
        raise NotParabolic(f"{format_matrix(m)} is not parabolic")
    if m.c.is_zero():
        return INFINITY
    return (m.a - m.d) / (m.c + m.c)


def _mobius(m: ProjectiveMatrix, z: BoundaryPoint) -> BoundaryPoint:
    if z is INFINITY:
        return INFINITY if m.c.is_zero() else m.a / m.c
    den = m.c * z + m.d
    if den.is_zero():
        return INFINITY
    return (m.a * z + m.b) / den


def apply_boundary(x, z) -> BoundaryPoint:
    x = as_isometry(x)
    if z is not INFINITY:
        z = FieldElem.coerce(z)
        if x.antiholomorphic:
            z = z.conj()
    return _mobius(x.mat, z)


def apply_interior(x, z: FieldElem, t: FieldElem) -> tuple[FieldElem, FieldElem]:
    """Action on the upper half-space point ``(z, t)``, ``t`` real positive."""
    x = as_isometry(x)
    if x.antiholomorphic:
        z = z.conj()
    a, b, c, d = x.mat.entries
    cz_d = c * z + d
    t2 = t * t
    den = cz_d.norm_sq() + c.norm_sq() * t2
    num = (a * z + b) * cz_d.conj() + a * c.conj() * t2
    return num / den, t / den


# text forms ---------------------------------------------------------------------

def format_matrix(m: ProjectiveMatrix) -> str:
    a, b, c, d = (format_elem(x) for x in m.entries)
    return f"[[{a}, {b}], [{c}, {d}]]"


_MATRIX = re.compile(r"^\s*\[\s*\[(?P<a>[^,\]]+),(?P<b>[^\]]+)\]\s*,\s*\[(?P<c>[^,\]]+),(?P<d>[^\]]+)\]\s*\]\s*$")


def parse_matrix_entries(text: str) -> list[FieldElem]:
    m = _MATRIX.match(text)
    if not m:
        raise ValueError(f"cannot parse matrix literal {text!r}")
    return [parse_elem(m.group(k)) for k in "abcd"]


def parse_matrix(text: str, *, normalize: bool = False) -> ProjectiveMatrix:
    """Parse ``[[a, b], [c, d]]`` with field-element entries."""
    entries = parse_matrix_entries(text)
    if normalize:
        return ProjectiveMatrix.normalized(*entries)
    return ProjectiveMatrix(*entries)
