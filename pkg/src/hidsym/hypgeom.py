"""Geodesic planes of upper half-space, reflections and dihedral angles.

A plane is stored as a Hermitian form ``(A, B, D)``: its boundary circle is
``A|z|^2 + 2 Re(conj(B) z) + D = 0`` and the plane itself is the zero set of

    F(z, t) = A (|z|^2 + t^2) + 2 Re(conj(B) z) + D.

``A`` and ``D`` are real.  The sign of the form is kept: the negative side of
``F`` is the plane's *inner* side.  Equality of planes ignores orientation.

Angles are decided exactly from ``cos^2`` of the inversive product; the face
adjacency test works in the hyperboloid model where every half-space is a
linear inequality.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from fractions import Fraction
from typing import Iterable, Optional

from .moebius import ExtendedIsometry, ProjectiveMatrix, as_isometry, compose
from .numfield import I, ONE, ZERO, FieldElem, NotASquare, format_elem, parse_elem, sqrt_in_field

HALF = FieldElem(Fraction(1, 2))
QUARTER = HALF * HALF


class Hyperplane:
    __slots__ = ("A", "B", "D")

    def __init__(self, A, B, D):
        A, B, D = (FieldElem.coerce(x) for x in (A, B, D))
        if not (A.is_real() and D.is_real()):
            raise ValueError("A and D must be real")
        delta = B.norm_sq() - A * D
        if delta.sign() <= 0:
            raise ValueError("form does not define a geodesic plane")
        scale = _leading(A, B)
        if scale.sign() < 0:
            scale = -scale
        inv = scale.inv()
        self.A, self.B, self.D = A * inv, B * inv, D * inv

    @classmethod
    def vertical(cls, anchor, direction) -> "Hyperplane":
        """The plane ``(direction * R + anchor) x (0, oo)``."""
        w, u = FieldElem.coerce(anchor), FieldElem.coerce(direction)
        if u.is_zero():
            raise ValueError("direction must be nonzero")
        normal = I * u
        return cls(ZERO, normal, -2 * (normal.conj() * w).real())

    @classmethod
    def hemisphere(cls, center, radius_sq) -> "Hyperplane":
        c, r2 = FieldElem.coerce(center), FieldElem.coerce(radius_sq)
        if not r2.is_real() or r2.sign() <= 0:
            raise ValueError("radius_sq must be a positive real")
        return cls(ONE, -c, c.norm_sq() - r2)

    # views --------------------------------------------------------------
    @property
    def is_vertical(self) -> bool:
        return self.A.is_zero()

    @property
    def center(self) -> FieldElem:
        if self.is_vertical:
            raise ValueError("vertical plane has no center")
        return -self.B / self.A

    @property
    def radius_sq(self) -> FieldElem:
        if self.is_vertical:
            raise ValueError("vertical plane has no radius")
        return self.delta() / (self.A * self.A)

    @property
    def direction(self) -> FieldElem:
        if not self.is_vertical:
            raise ValueError("hemisphere has no direction")
        return -I * self.B

    @property
    def anchor(self) -> FieldElem:
        """Point of the boundary line closest to 0."""
        if not self.is_vertical:
            raise ValueError("hemisphere has no anchor")
        return -self.D * self.B / (2 * self.B.norm_sq())

    def delta(self) -> FieldElem:
        return self.B.norm_sq() - self.A * self.D

    def side(self, z, t) -> FieldElem:
        """Value of the defining form at ``(z, t)``; negative on the inner side."""
        z, t = FieldElem.coerce(z), FieldElem.coerce(t)
        return self.A * (z.norm_sq() + t * t) + 2 * (self.B.conj() * z).real() + self.D

    def flipped(self) -> "Hyperplane":
        return Hyperplane(-self.A, -self.B, -self.D)

    def oriented_inside(self, z, t) -> "Hyperplane":
        """Same plane, oriented so that ``(z, t)`` lies on the inner side."""
        s = self.side(z, t).sign()
        if s == 0:
            raise ValueError("reference point lies on the plane")
        return self if s < 0 else self.flipped()

    def canonical(self) -> tuple:
        A, B, D = self.A, self.B, self.D
        lead = _leading(A, B)
        if lead.sign() < 0:
            A, B, D = -A, -B, -D
        return (A.key(), B.key(), D.key())

    def __eq__(self, other):
        if not isinstance(other, Hyperplane):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def __repr__(self):
        if self.is_vertical:
            return f"Vertical(anchor={format_elem(self.anchor)}, direction={format_elem(self.direction)})"
        return f"Hemisphere(center={format_elem(self.center)}, radius_sq={format_elem(self.radius_sq)})"


def _leading(A: FieldElem, B: FieldElem) -> FieldElem:
    if not A.is_zero():
        return A
    re_b = B.real()
    return re_b if not re_b.is_zero() else B.imag()


# named planes -----------------------------------------------------------------

def horizontal(offset) -> Hyperplane:
    """``H + offset``: the vertical plane over the line ``R + offset``."""
    return Hyperplane.vertical(offset, ONE)


def imaginary_axis_plane(offset) -> Hyperplane:
    """``iH + offset``."""
    return Hyperplane.vertical(offset, I)


def ball_boundary(k: int) -> Hyperplane:
    """Boundary of B_k: unit hemisphere centred at ``k * (-i r2)``."""
    return Hyperplane.hemisphere(FieldElem(0, 0, 0, -k), ONE)


# reflections ----------------------------------------------------------------------

def reflect(h: Hyperplane) -> ExtendedIsometry:
    """Antiholomorphic involution fixing ``h``, normalized to determinant 1."""
    # z -> (-B conj(z) - D) / (A conj(z) + conj(B)); determinant is -delta
    return ExtendedIsometry(ProjectiveMatrix.normalized(-h.B, -h.D, h.A, h.B.conj()), True)


def compose_reflections(h1: Hyperplane, h2: Hyperplane) -> ProjectiveMatrix:
    """Reflect in ``h1`` first, then in ``h2``."""
    result = compose(reflect(h2), reflect(h1))
    assert not result.antiholomorphic
    return result.mat


def apply_to_hyperplane(g, h: Hyperplane) -> Hyperplane:
    """Image of ``h`` under ``g``; the inner side maps to the inner side."""
    g = as_isometry(g)
    A, B, D = h.A, h.B, h.D
    if g.antiholomorphic:
        B = B.conj()
    a, b, c, d = g.mat.entries
    # M' = N^* M N with N = g^-1 = [[d, -b], [-c, a]]
    A2 = A * d.norm_sq() - (B * c * d.conj()).real() * 2 + D * c.norm_sq()
    B2 = -A * b * d.conj() + B * a * d.conj() + B.conj() * b * c.conj() - D * a * c.conj()
    D2 = A * b.norm_sq() - (B * a * b.conj()).real() * 2 + D * a.norm_sq()
    return Hyperplane(A2, B2, D2)


# angles --------------------------------------------------------------------------

class Incidence(enum.Enum):
    RIGHT_ANGLE = "right"
    PI_OVER_3 = "pi/3"
    TWO_PI_OVER_3 = "2pi/3"
    PI_OVER_4 = "pi/4"
    THREE_PI_OVER_4 = "3pi/4"
    PI_OVER_6 = "pi/6"
    FIVE_PI_OVER_6 = "5pi/6"
    OTHER_ANGLE = "other-angle"
    DISJOINT = "disjoint"
    TANGENT = "tangent"
    TANGENT_AT_INFINITY = "tangent-at-infinity"
    COINCIDENT = "coincident"
    NO_EDGE = "no-edge"

    @property
    def is_meeting(self) -> bool:
        return self in _ANGLES.values() or self is Incidence.OTHER_ANGLE

    def satisfies(self, expected: "Incidence") -> bool:
        """Expected ``NO_EDGE`` accepts any relation other than a shared edge."""
        if expected is Incidence.NO_EDGE:
            return not self.is_meeting
        return self is expected


# (cos^2, sign of interior cosine) -> class
_ANGLES = {
    (FieldElem(0), 0): Incidence.RIGHT_ANGLE,
    (QUARTER, 1): Incidence.PI_OVER_3,
    (QUARTER, -1): Incidence.TWO_PI_OVER_3,
    (HALF, 1): Incidence.PI_OVER_4,
    (HALF, -1): Incidence.THREE_PI_OVER_4,
    (FieldElem(Fraction(3, 4)), 1): Incidence.PI_OVER_6,
    (FieldElem(Fraction(3, 4)), -1): Incidence.FIVE_PI_OVER_6,
}


@dataclass(frozen=True)
class DihedralAngle:
    kind: str  # "angle" | "disjoint" | "tangent" | "tangent-at-infinity" | "coincident"
    cos_sq: Optional[FieldElem] = None
    sign: int = 0  # sign of the interior cosine

    @property
    def cos(self) -> Optional[FieldElem]:
        """Exact interior cosine when it lies in the field."""
        if self.cos_sq is None:
            return None
        root = sqrt_in_field(self.cos_sq)
        if root is NotASquare:
            return None
        return root if self.sign >= 0 else -root

    def classify(self) -> Incidence:
        if self.kind != "angle":
            return Incidence(self.kind)
        return _ANGLES.get((self.cos_sq, self.sign), Incidence.OTHER_ANGLE)

    def __str__(self):
        if self.kind != "angle":
            return self.kind
        return f"{self.classify().value} (cos^2 = {format_elem(self.cos_sq)})"


def dihedral_angle(h1: Hyperplane, h2: Hyperplane) -> DihedralAngle:
    """Angle of the region on the inner side of both planes."""
    if h1 == h2:
        return DihedralAngle("coincident")
    n = 2 * (h1.B * h2.B.conj()).real() - h1.A * h2.D - h2.A * h1.D
    four_deltas = 4 * h1.delta() * h2.delta()
    excess = (n * n - four_deltas).sign()
    if excess > 0:
        return DihedralAngle("disjoint")
    if excess == 0:
        if h1.is_vertical and h2.is_vertical:
            return DihedralAngle("tangent-at-infinity")
        return DihedralAngle("tangent")
    # n is the inversive product of the inner normals; interior cosine is -n / 2 sqrt(...)
    return DihedralAngle("angle", n * n / four_deltas, -n.sign())


# face adjacency in the hyperboloid model ----------------------------------------------
#
# Coordinates (u, v, x1, x2) = ((|z|^2 + t^2)/t, 1/t, Re z/t, Im z/t) make F/t linear and
# send H^3 to {x1^2 + x2^2 - u v = -1, u > 0}.

def _linear_form(h: Hyperplane) -> tuple[FieldElem, ...]:
    return (h.A, h.D, 2 * h.B.real(), 2 * h.B.imag())


_FUTURE = (-ONE, ZERO, ZERO, ZERO)  # -u <= 0


def _bilinear(x, y) -> FieldElem:
    return x[2] * y[2] + x[3] * y[3] - (x[0] * y[1] + x[1] * y[0]) * HALF


def _dot(row, vec) -> FieldElem:
    total = ZERO
    for a, b in zip(row, vec):
        total = total + a * b
    return total


def _nullspace(rows: list[tuple[FieldElem, ...]]) -> list[list[FieldElem]]:
    """Basis of the null space of ``rows`` by exact elimination."""
    m = [list(r) for r in rows]
    ncols = len(m[0])
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if not m[i][col].is_zero()), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][col].inv()
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and not m[i][col].is_zero():
                factor = m[i][col]
                m[i] = [x - factor * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        vec = [ZERO] * ncols
        vec[free] = ONE
        for row, col in zip(m, pivots):
            vec[col] = -row[free]
        basis.append(vec)
    return basis


def faces_share_edge(h1: Hyperplane, h2: Hyperplane, others: Iterable[Hyperplane]) -> bool:
    """Whether the faces in ``h1`` and ``h2`` of the polyhedron cut out by the
    inner sides of ``h1``, ``h2`` and ``others`` meet along a geodesic segment.

    All planes must already be oriented so the polyhedron is on their inner side.
    """
    basis = _nullspace([_linear_form(h1), _linear_form(h2)])
    if len(basis) != 2:
        return False
    e1, e2 = basis
    constraints = []
    for row in [_linear_form(h) for h in others] + [_FUTURE]:
        lin = (_dot(row, e1), _dot(row, e2))
        if not (lin[0].is_zero() and lin[1].is_zero()):
            constraints.append(lin)
    if not constraints:
        return False
    q11, q12, q22 = _bilinear(e1, e1), _bilinear(e1, e2), _bilinear(e2, e2)

    def q(x, y):
        return q11 * x[0] * y[0] + q12 * (x[0] * y[1] + x[1] * y[0]) + q22 * x[1] * y[1]

    candidates = []
    for p, r in constraints:
        candidates += [(-r, p), (r, -p), (-p, -r)]
    feasible = [
        ray for ray in candidates
        if all((p * ray[0] + r * ray[1]).sign() <= 0 for p, r in constraints)
    ]
    for x, y in combinations(feasible, 2):
        if (x[0] * y[1] - x[1] * y[0]).is_zero():
            continue
        qx, qy, qxy = q(x, x), q(y, y), q(x, y)
        if qx.sign() < 0 or qy.sign() < 0:
            return True
        if qxy.sign() < 0 and (qxy * qxy - qx * qy).sign() > 0:
            return True
    return False


# polyhedra --------------------------------------------------------------------------

@dataclass
class PolyhedronSpec:
    name: str
    faces: dict[str, Hyperplane]
    interior: tuple[FieldElem, FieldElem]
    expected: list[tuple[str, str, Incidence]] = field(default_factory=list)

    def oriented_faces(self) -> dict[str, Hyperplane]:
        z, t = self.interior
        return {name: h.oriented_inside(z, t) for name, h in self.faces.items()}


@dataclass(frozen=True)
class IncidenceCheck:
    face_a: str
    face_b: str
    expected: Incidence
    actual: Incidence
    detail: str

    @property
    def ok(self) -> bool:
        return self.actual.satisfies(self.expected)


@dataclass
class PolyhedronReport:
    name: str
    checks: list[IncidenceCheck]

    @property
    def mismatches(self) -> list[IncidenceCheck]:
        return [c for c in self.checks if not c.ok]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def face_incidence(faces: dict[str, Hyperplane], a: str, b: str) -> tuple[Incidence, DihedralAngle]:
    """Relation between two faces of an oriented face set."""
    angle = dihedral_angle(faces[a], faces[b])
    kind = angle.classify()
    if kind.is_meeting:
        others = [h for name, h in faces.items() if name not in (a, b)]
        if not faces_share_edge(faces[a], faces[b], others):
            return Incidence.NO_EDGE, angle
    return kind, angle


def verify_polyhedron(spec: PolyhedronSpec) -> PolyhedronReport:
    faces = spec.oriented_faces()
    checks = []
    for a, b, expected in spec.expected:
        actual, angle = face_incidence(faces, a, b)
        checks.append(IncidenceCheck(a, b, expected, actual, str(angle)))
    return PolyhedronReport(spec.name, checks)


# built-in face sets -----------------------------------------------------------------

TOP_READINGS = {"i/2": FieldElem(0, 0, Fraction(1, 2), 0), "i*r2": FieldElem(0, 0, 0, 1)}


def r_prime() -> ExtendedIsometry:
    """Reflection across iH + 1/2."""
    return reflect(imaginary_axis_plane(HALF))


def base_faces() -> dict[str, Hyperplane]:
    """Named planes usable in polyhedron tables."""
    rp = r_prime()
    faces = {
        "H+i/2": horizontal(TOP_READINGS["i/2"]),
        "H+i*r2": horizontal(TOP_READINGS["i*r2"]),
        "iH": imaginary_axis_plane(ZERO),
        "iH+1/2": imaginary_axis_plane(HALF),
        "iH+1": imaginary_axis_plane(ONE),
    }
    for k in range(4):
        faces[f"B{k}"] = ball_boundary(k)
        faces[f"rB{k}"] = apply_to_hyperplane(rp, ball_boundary(k))
    return faces


# a point inside every polyhedron below: z = 1/2, height 2
DEFAULT_INTERIOR = (HALF, FieldElem(2))


def q_union_spec(n: int = 2, top: str = "i/2") -> PolyhedronSpec:
    """Q_n together with its mirror image across iH + 1/2, with the angle table
    of the face-pairing argument."""
    named = base_faces()
    top_name = "H+i/2" if top == "i/2" else "H+i*r2"
    faces = {"top": named[top_name], "iH": named["iH"], "iH+1": named["iH+1"]}
    for k in range(n + 1):
        faces[f"B{k}"] = named[f"B{k}"] if k < 4 else ball_boundary(k)
        faces[f"rB{k}"] = named[f"rB{k}"] if k < 4 else apply_to_hyperplane(r_prime(), ball_boundary(k))
    R, P3, P23, NO, DIS = (Incidence.RIGHT_ANGLE, Incidence.PI_OVER_3, Incidence.TWO_PI_OVER_3,
                           Incidence.NO_EDGE, Incidence.DISJOINT)
    exp = [("top", "iH", R), ("top", "iH+1", R), ("top", "B0", P3), ("top", "rB0", P3)]
    exp += [("top", f"{p}{k}", NO) for k in range(1, n + 1) for p in ("B", "rB")]
    exp += [("iH", f"B{k}", R) for k in range(n + 1)]
    exp += [("iH", f"rB{k}", NO) for k in range(n + 1)]
    exp += [("iH+1", f"rB{k}", R) for k in range(n + 1)]
    exp += [("iH+1", f"B{k}", NO) for k in range(n + 1)]
    exp += [("iH", "iH+1", Incidence.TANGENT_AT_INFINITY)]
    for k in range(n + 1):
        for j in range(n + 1):
            exp.append((f"B{k}", f"rB{j}", P23 if j == k else NO))
    for p in ("B", "rB"):
        exp += [(f"{p}{k}", f"{p}{k + 1}", R) for k in range(n)]
        exp += [(f"{p}{k}", f"{p}{j}", DIS) for k in range(n + 1) for j in range(k + 2, n + 1)]
    return PolyhedronSpec(f"Q{n}-union[top=H+{top}]", faces, DEFAULT_INTERIOR, exp)


def pt0_union_spec() -> PolyhedronSpec:
    """P_T0 together with its mirror across iH + 1/2."""
    named = base_faces()
    faces = {k: named[k] for k in ("iH", "iH+1", "B0", "B1", "rB0", "rB1")}
    R, P23 = Incidence.RIGHT_ANGLE, Incidence.TWO_PI_OVER_3
    exp = [
        ("B0", "iH", R), ("B1", "iH", R), ("B0", "B1", R),
        ("B0", "rB0", P23), ("B1", "rB1", P23),
        ("rB0", "iH+1", R), ("rB1", "iH+1", R), ("rB0", "rB1", R),
        ("iH", "iH+1", Incidence.TANGENT_AT_INFINITY),
    ]
    return PolyhedronSpec("PT0-union", faces, DEFAULT_INTERIOR, exp)


def corrupted_q_union_spec() -> PolyhedronSpec:
    """Negative control: one right angle replaced by pi/3."""
    spec = q_union_spec(2)
    spec.name = "Q2-union-corrupted"
    spec.expected = [
        (a, b, Incidence.PI_OVER_3 if (a, b) == ("B0", "B1") else e) for a, b, e in spec.expected
    ]
    return spec


BUILTIN_SPECS = {
    "Q2-union": lambda: q_union_spec(2, "i/2"),
    "Q2-union-alt": lambda: q_union_spec(2, "i*r2"),
    "PT0-union": pt0_union_spec,
    "Q2-union-corrupted": corrupted_q_union_spec,
}


def builtin_spec(name: str) -> PolyhedronSpec:
    try:
        return BUILTIN_SPECS[name]()
    except KeyError:
        raise KeyError(f"unknown polyhedron dataset {name!r}; known: {sorted(BUILTIN_SPECS)}") from None


@dataclass(frozen=True)
class TopReadingReport:
    reports: dict[str, PolyhedronReport]

    @property
    def satisfying(self) -> list[str]:
        return [reading for reading, rep in self.reports.items() if rep.ok]


def top_face_readings(n: int = 2) -> TopReadingReport:
    """Check the angle table against both candidate top planes, H + i/2 and H + i r2."""
    return TopReadingReport({reading: verify_polyhedron(q_union_spec(n, reading)) for reading in TOP_READINGS})


# plain-text tables ----------------------------------------------------------------

def parse_polyhedron_spec(text: str, name: str = "table", faces: Optional[dict[str, Hyperplane]] = None) -> PolyhedronSpec:
    """Read ``faceA faceB expected`` lines.

    Optional directives::

        face NAME hemisphere CENTER RADIUS_SQ
        face NAME vertical ANCHOR DIRECTION
        interior Z T

    Field elements must not contain spaces (``-1+i*r2``).  ``#`` starts a comment.
    """
    table = dict(base_faces() if faces is None else faces)
    interior = DEFAULT_INTERIOR
    expected = []
    used = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "face":
            if len(parts) != 5 or parts[2] not in ("hemisphere", "vertical"):
                raise ValueError(f"line {lineno}: bad face directive {raw!r}")
            x, y = parse_elem(parts[3]), parse_elem(parts[4])
            table[parts[1]] = (Hyperplane.hemisphere(x, y) if parts[2] == "hemisphere"
                               else Hyperplane.vertical(x, y))
            continue
        if parts[0] == "interior":
            if len(parts) != 3:
                raise ValueError(f"line {lineno}: bad interior directive {raw!r}")
            interior = (parse_elem(parts[1]), parse_elem(parts[2]))
            continue
        if len(parts) != 3:
            raise ValueError(f"line {lineno}: expected 'faceA faceB relation', got {raw!r}")
        a, b, rel = parts
        for face in (a, b):
            if face not in table:
                raise ValueError(f"line {lineno}: unknown face {face!r}")
            used[face] = table[face]
        try:
            expected.append((a, b, Incidence(rel)))
        except ValueError:
            raise ValueError(f"line {lineno}: unknown relation {rel!r}") from None
    return PolyhedronSpec(name, used, interior, expected)


def format_polyhedron_spec(spec: PolyhedronSpec) -> str:
    return "\n".join(f"{a} {b} {e.value}" for a, b, e in spec.expected) + "\n"
