"""Exact arithmetic in Q(i, sqrt2).

Elements are stored as four integer numerators over one positive common
denominator, on the basis (1, r2, i, i*r2).  Arithmetic never leaves the
integers, which keeps long matrix products (word search) reasonably fast.
"""
from __future__ import annotations

import re
from decimal import Decimal, localcontext
from fractions import Fraction
from math import gcd, isqrt
from typing import Optional, Union

Number = Union[int, Fraction]


class _NotASquare:
    """Returned by :func:`sqrt_in_field` when no square root exists."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __bool__(self):
        return False

    def __repr__(self):
        return "NotASquare"


NotASquare = _NotASquare()


def _gcd4(a, b, c, d, den):
    return gcd(gcd(gcd(a, b), gcd(c, d)), den)


class FieldElem:
    __slots__ = ("_n", "_den", "_hash")

    def __init__(self, a: Number = 0, b: Number = 0, c: Number = 0, d: Number = 0):
        fa, fb, fc, fd = (Fraction(x) for x in (a, b, c, d))
        den = fa.denominator
        for x in (fb, fc, fd):
            den = den * x.denominator // gcd(den, x.denominator)
        self._set(
            fa.numerator * (den // fa.denominator),
            fb.numerator * (den // fb.denominator),
            fc.numerator * (den // fc.denominator),
            fd.numerator * (den // fd.denominator),
            den,
        )

    def _set(self, a, b, c, d, den):
        if den != 1:
            g = _gcd4(a, b, c, d, den)
            if g != 1:
                a //= g
                b //= g
                c //= g
                d //= g
                den //= g
        self._n = (a, b, c, d)
        self._den = den
        self._hash = None

    @classmethod
    def _raw(cls, a, b, c, d, den=1) -> "FieldElem":
        obj = object.__new__(cls)
        if den < 0:
            a, b, c, d, den = -a, -b, -c, -d, -den
        obj._set(a, b, c, d, den)
        return obj

    @classmethod
    def coerce(cls, x) -> "FieldElem":
        if isinstance(x, FieldElem):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x)
        if isinstance(x, str):
            return parse_elem(x)
        raise TypeError(f"cannot convert {type(x).__name__} to FieldElem")

    # coordinates ---------------------------------------------------------
    @property
    def a(self) -> Fraction:
        return Fraction(self._n[0], self._den)

    @property
    def b(self) -> Fraction:
        return Fraction(self._n[1], self._den)

    @property
    def c(self) -> Fraction:
        return Fraction(self._n[2], self._den)

    @property
    def d(self) -> Fraction:
        return Fraction(self._n[3], self._den)

    @property
    def coords(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    def key(self) -> tuple[int, int, int, int, int]:
        return self._n + (self._den,)

    # predicates ----------------------------------------------------------
    def is_zero(self) -> bool:
        return self._n == (0, 0, 0, 0)

    def is_one(self) -> bool:
        return self._n == (1, 0, 0, 0) and self._den == 1

    def is_real(self) -> bool:
        return self._n[2] == 0 and self._n[3] == 0

    def is_rational(self) -> bool:
        return self._n[1] == 0 and self._n[2] == 0 and self._n[3] == 0

    def is_gaussian_integer(self) -> bool:
        return self._den == 1 and self._n[1] == 0 and self._n[3] == 0

    def is_rational_integer(self) -> bool:
        return self._den == 1 and self.is_rational()

    def is_positive_normal(self) -> bool:
        """First nonzero coordinate in basis order is positive."""
        for x in self._n:
            if x:
                return x > 0
        return False

    # arithmetic ----------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, FieldElem):
            try:
                other = FieldElem.coerce(other)
            except TypeError:
                return NotImplemented
        a, b, c, d = self._n
        e, f, g, h = other._n
        p, q = self._den, other._den
        if p == q:
            return FieldElem._raw(a + e, b + f, c + g, d + h, p)
        return FieldElem._raw(a * q + e * p, b * q + f * p, c * q + g * p, d * q + h * p, p * q)

    __radd__ = __add__

    def __neg__(self):
        a, b, c, d = self._n
        return FieldElem._raw(-a, -b, -c, -d, self._den)

    def __sub__(self, other):
        if not isinstance(other, FieldElem):
            try:
                other = FieldElem.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return FieldElem.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, FieldElem):
            try:
                other = FieldElem.coerce(other)
            except TypeError:
                return NotImplemented
        a, b, c, d = self._n
        e, f, g, h = other._n
        # r2*r2 = 2, i*i = -1, r2*i = i*r2, (i*r2)^2 = -2
        return FieldElem._raw(
            a * e + 2 * b * f - c * g - 2 * d * h,
            a * f + b * e - c * h - d * g,
            a * g + c * e + 2 * (b * h + d * f),
            a * h + d * e + b * g + c * f,
            self._den * other._den,
        )

    __rmul__ = __mul__

    def conj(self) -> "FieldElem":
        a, b, c, d = self._n
        return FieldElem._raw(a, b, -c, -d, self._den)

    def norm_sq(self) -> "FieldElem":
        """|x|^2, an element of Q(r2)."""
        a, b, c, d = self._n
        den = self._den
        return FieldElem._raw(a * a + 2 * b * b + c * c + 2 * d * d, 2 * (a * b + c * d), 0, 0, den * den)

    def inv(self) -> "FieldElem":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(i, sqrt2)")
        n = self.norm_sq()
        u, v = n._n[0], n._n[1]
        # 1/(u + v r2) = (u - v r2)/(u^2 - 2 v^2), scaled back by n's denominator
        rat = u * u - 2 * v * v
        return self.conj() * FieldElem._raw(u * n._den, -v * n._den, 0, 0, rat)

    def __truediv__(self, other):
        if not isinstance(other, FieldElem):
            try:
                other = FieldElem.coerce(other)
            except TypeError:
                return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        return FieldElem.coerce(other) * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # real part / imaginary part as elements of Q(r2)
    def real(self) -> "FieldElem":
        a, b, _, _ = self._n
        return FieldElem._raw(a, b, 0, 0, self._den)

    def imag(self) -> "FieldElem":
        _, _, c, d = self._n
        return FieldElem._raw(c, d, 0, 0, self._den)

    def sign(self) -> int:
        """Sign of a real element under the embedding r2 > 0."""
        if not self.is_real():
            raise ValueError(f"sign of non-real element {self}")
        p, q = self._n[0], self._n[1]
        if q == 0:
            return (p > 0) - (p < 0)
        if p == 0 or (p > 0) == (q > 0):
            return 1 if q > 0 else -1
        if p * p > 2 * q * q:
            return 1 if p > 0 else -1
        return 1 if q > 0 else -1

    # comparison ------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self._n == other._n and self._den == other._den
        if isinstance(other, (int, Fraction)):
            return self == FieldElem(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._n, self._den))
        return self._hash

    def __lt__(self, other):
        return (self - FieldElem.coerce(other)).sign() < 0

    def __le__(self, other):
        return (self - FieldElem.coerce(other)).sign() <= 0

    def __gt__(self, other):
        return (self - FieldElem.coerce(other)).sign() > 0

    def __ge__(self, other):
        return (self - FieldElem.coerce(other)).sign() >= 0

    def __bool__(self):
        return not self.is_zero()

    # display -----------------------------------------------------------------
    def __str__(self):
        return format_elem(self)

    def __repr__(self):
        return f"FieldElem({format_elem(self)!r})"

    def embed(self) -> complex:
        return embed(self)


ZERO = FieldElem._raw(0, 0, 0, 0)
ONE = FieldElem._raw(1, 0, 0, 0)
R2 = FieldElem._raw(0, 1, 0, 0)
I = FieldElem._raw(0, 0, 1, 0)
IR2 = FieldElem._raw(0, 0, 0, 1)


def add(x: FieldElem, y: FieldElem) -> FieldElem:
    return x + y


def mul(x: FieldElem, y: FieldElem) -> FieldElem:
    return x * y


def inv(x: FieldElem) -> FieldElem:
    return x.inv()


def conj(x: FieldElem) -> FieldElem:
    return x.conj()


# square roots ---------------------------------------------------------------

def _rational_sqrt(q: Fraction) -> Optional[Fraction]:
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _sqrt_real(w: FieldElem) -> Optional[FieldElem]:
    """Square root of w in Q(r2), if one exists."""
    if w.is_zero():
        return ZERO
    a, b = w.a, w.b
    root_norm = _rational_sqrt(a * a - 2 * b * b)
    if root_norm is None:
        return None
    # (p + q r2)^2 = p^2 + 2q^2 + 2pq r2
    for s in (root_norm, -root_norm):
        p_sq = (a + s) / 2
        p = _rational_sqrt(p_sq)
        if p is None:
            continue
        if p:
            q = b / (2 * p)
        else:
            q = _rational_sqrt(a / 2)
            if q is None:
                continue
        cand = FieldElem(p, q)
        if cand * cand == w:
            return cand
    return None


def sqrt_in_field(x: FieldElem):
    """Square root of ``x`` in Q(i, r2), or ``NotASquare``.

    The root returned is the positive-normal one of the pair {y, -y}.
    """
    x = FieldElem.coerce(x)
    if x.is_zero():
        return ZERO
    u, v = x.real(), x.imag()
    # (al + i be)^2 = al^2 - be^2 + 2 al be i with al, be in Q(r2)
    modulus = _sqrt_real(u * u + v * v)
    if modulus is None:
        return NotASquare
    for m in (modulus, -modulus):
        al = _sqrt_real((u + m) / 2)
        if al is None:
            continue
        if al:
            be = v / (2 * al)
        else:
            be = _sqrt_real(-u)
            if be is None:
                continue
        y = al + I * be
        if y * y == x:
            return y if y.is_positive_normal() else -y
    return NotASquare


# floating embedding ------------------------------------------------------------

_R2_DECIMAL = None


def embed(x: FieldElem) -> complex:
    """Complex approximation, computed at 60 significant digits before rounding."""
    global _R2_DECIMAL
    with localcontext() as ctx:
        ctx.prec = 60
        if _R2_DECIMAL is None:
            _R2_DECIMAL = Decimal(2).sqrt()
        a, b, c, d = x._n
        den = Decimal(x._den)
        re = (Decimal(a) + Decimal(b) * _R2_DECIMAL) / den
        im = (Decimal(c) + Decimal(d) * _R2_DECIMAL) / den
        return complex(float(re), float(im))


# text form ------------------------------------------------------------------

_BASIS_SUFFIX = ("", "*r2", "*i", "*i*r2")


def _fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_elem(x: FieldElem) -> str:
    """Render as ``a + b*r2 + c*i + d*i*r2``, omitting zero terms."""
    parts = []
    for coeff, suffix in zip(x.coords, _BASIS_SUFFIX):
        if coeff == 0:
            continue
        sign = "-" if coeff < 0 else "+"
        mag = abs(coeff)
        if suffix and mag == 1:
            body = suffix[1:]
        else:
            body = _fmt_rational(mag) + suffix
        parts.append((sign, body))
    if not parts:
        return "0"
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?P<coef>\d+(?:/\d+)?)?\s*
        (?P<basis>(?:\*?\s*(?:i|r2))*)\s*""",
    re.VERBOSE,
)


def parse_elem(text: str) -> FieldElem:
    """Parse the grammar produced by :func:`format_elem`.

    Accepts ``r2`` or ``sqrt2`` for the square root, and basis factors in any
    order (``r2*i`` equals ``i*r2``).
    """
    src = text.replace("sqrt2", "r2").replace("√2", "r2").strip()
    if not src:
        raise ValueError("empty field element")
    coords = [Fraction(0)] * 4
    pos = 0
    first = True
    while pos < len(src):
        m = _TERM.match(src, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse field element {text!r} at {src[pos:]!r}")
        sign, coef, basis = m.group("sign"), m.group("coef"), m.group("basis")
        if not first and sign is None:
            raise ValueError(f"missing operator in {text!r}")
        if coef is None and not basis.strip("* "):
            raise ValueError(f"empty term in {text!r}")
        factors = [t for t in re.split(r"[\s*]+", basis) if t]
        n_i = factors.count("i")
        n_r = factors.count("r2")
        if n_i > 1 or n_r > 1:
            raise ValueError(f"repeated basis factor in {text!r}")
        value = Fraction(coef) if coef else Fraction(1)
        if sign == "-":
            value = -value
        coords[n_r + 2 * n_i] += value
        pos = m.end()
        first = False
    return FieldElem(*coords)
