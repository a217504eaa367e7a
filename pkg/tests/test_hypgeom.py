from fractions import Fraction

import pytest

from hidsym import hypgeom as hg
from hidsym import registry as reg
from hidsym.hypgeom import Hyperplane, Incidence
from hidsym.moebius import apply_interior, compose, parse_matrix
from hidsym.numfield import I, ONE, R2, ZERO, FieldElem, parse_elem

HALF = Fraction(1, 2)
FACES = hg.base_faces()


def sample_points(h: Hyperplane):
    if h.is_vertical:
        w, u = h.anchor, h.direction
        return [(w, ONE), (w + u, FieldElem(2)), (w - 3 * u, FieldElem(HALF))]
    assert h.radius_sq == 1
    c = h.center
    return [(c, ONE), (c + FieldElem(Fraction(3, 5)), FieldElem(Fraction(4, 5))),
            (c + FieldElem(0, 0, Fraction(4, 5), 0), FieldElem(Fraction(3, 5)))]


def test_reflect_examples():
    r = hg.reflect(hg.imaginary_axis_plane(0))
    assert r.antiholomorphic and r.mat == parse_matrix("[[i, 0], [0, -i]]")
    r = hg.reflect(hg.ball_boundary(0))
    assert r.antiholomorphic and r.mat == parse_matrix("[[0, i], [i, 0]]")


@pytest.mark.parametrize("name", sorted(FACES))
def test_reflection_fixes_plane_and_is_involution(name):
    h = FACES[name]
    r = hg.reflect(h)
    assert compose(r, r).is_identity()
    for z, t in sample_points(h):
        assert h.side(z, t) == 0
        assert apply_interior(r, z, t) == (z, t)


def test_compose_reflections_examples():
    f0 = hg.compose_reflections(FACES["iH"], FACES["iH+1/2"])
    assert f0 == reg.mat("f0")
    assert hg.compose_reflections(FACES["H+i/2"], FACES["B0"]) == reg.mat("b0")
    assert hg.compose_reflections(FACES["iH+1/2"], FACES["B0"]) == reg.mat("a0")
    assert hg.compose_reflections(FACES["iH+1/2"], FACES["B1"]) == reg.mat("a1")


def test_compose_reflections_reversed_is_inverse():
    names = sorted(FACES)
    for a in names:
        for b in names:
            if a != b:
                x = hg.compose_reflections(FACES[a], FACES[b])
                assert x.inverse() == hg.compose_reflections(FACES[b], FACES[a])


def test_dihedral_angle_examples():
    inside = lambda h: h.oriented_inside(*hg.DEFAULT_INTERIOR)
    b0, b1, b2 = (inside(hg.ball_boundary(k)) for k in range(3))
    assert hg.dihedral_angle(b0, b1).classify() is Incidence.RIGHT_ANGLE
    assert hg.dihedral_angle(b0, b1).cos == 0
    rb0 = inside(Hyperplane.hemisphere(1, 1))
    assert rb0 == FACES["rB0"]
    angle = hg.dihedral_angle(b0, rb0)
    assert angle.cos_sq == Fraction(1, 4)
    assert angle.classify() is Incidence.TWO_PI_OVER_3
    assert angle.cos == -HALF
    assert hg.dihedral_angle(b0, b2).classify() is Incidence.DISJOINT
    assert hg.dihedral_angle(FACES["iH"], FACES["iH+1/2"]).classify() is Incidence.TANGENT_AT_INFINITY
    assert hg.dihedral_angle(b0, b0).classify() is Incidence.COINCIDENT
    tangent = inside(Hyperplane.hemisphere(2, 1))
    assert hg.dihedral_angle(b0, tangent).classify() is Incidence.TANGENT


def test_orientation_flips_angle():
    b0 = FACES["B0"].oriented_inside(*hg.DEFAULT_INTERIOR)
    rb0 = FACES["rB0"].oriented_inside(*hg.DEFAULT_INTERIOR)
    assert hg.dihedral_angle(b0, rb0.flipped()).classify() is Incidence.PI_OVER_3


def test_apply_to_hyperplane_examples():
    assert hg.apply_to_hyperplane(reg.get("c").inverse(), hg.ball_boundary(0)) == hg.ball_boundary(1)
    assert hg.apply_to_hyperplane(reg.get("f0"), FACES["iH"]) == FACES["iH+1"]
    image = hg.apply_to_hyperplane(hg.r_prime(), hg.ball_boundary(0))
    assert image.center == 1 and image.radius_sq == 1


def test_ball_centers():
    for k in range(4):
        h = hg.ball_boundary(k)
        assert h.center == -k * FieldElem(0, 0, 0, 1)
        assert h.radius_sq == 1


def test_vertical_normalization():
    a = Hyperplane.vertical(0, I)
    b = Hyperplane.vertical(3 * I, -2 * I)
    assert a == b
    assert Hyperplane.vertical(HALF, I) != a
    with pytest.raises(ValueError):
        Hyperplane.vertical(0, 0)
    with pytest.raises(ValueError):
        Hyperplane.hemisphere(0, -1)


def _invariant(angle):
    # an isometry can move a point of tangency to or from infinity
    kind = "tangent" if angle.kind.startswith("tangent") else angle.kind
    return kind, angle.cos_sq, angle.sign


def test_angles_are_isometry_invariant():
    z, t = hg.DEFAULT_INTERIOR
    faces = hg.q_union_spec(2).oriented_faces()
    names = sorted(faces)
    pairs = [(a, b) for i, a in enumerate(names) for b in names[i + 1:]]
    base = {p: _invariant(hg.dihedral_angle(faces[p[0]], faces[p[1]])) for p in pairs}
    for gname, g in reg.registry().items():
        gz, gt = apply_interior(g, z, t)
        moved = {n: hg.apply_to_hyperplane(g, h).oriented_inside(gz, gt) for n, h in faces.items()}
        for a, b in pairs:
            assert _invariant(hg.dihedral_angle(moved[a], moved[b])) == base[(a, b)], (gname, a, b)
            assert _invariant(hg.dihedral_angle(moved[b], moved[a])) == base[(a, b)]


def test_q2_union_table():
    spec = hg.q_union_spec(2)
    assert len(spec.expected) == 36
    rep = hg.verify_polyhedron(spec)
    assert rep.ok, [(c.face_a, c.face_b, c.actual) for c in rep.mismatches]


def test_q_union_larger_n():
    assert hg.verify_polyhedron(hg.q_union_spec(3)).ok


def test_pt0_union_table():
    assert hg.verify_polyhedron(hg.pt0_union_spec()).ok


def test_corrupted_table_has_one_mismatch():
    rep = hg.verify_polyhedron(hg.corrupted_q_union_spec())
    assert [(c.face_a, c.face_b) for c in rep.mismatches] == [("B0", "B1")]
    assert rep.mismatches[0].actual is Incidence.RIGHT_ANGLE


def test_top_face_readings():
    readings = hg.top_face_readings(2)
    assert readings.satisfying == ["i/2"]
    bad = {(c.face_a, c.face_b): c.actual for c in readings.reports["i*r2"].mismatches}
    assert bad == {("top", "B0"): Incidence.DISJOINT, ("top", "rB0"): Incidence.DISJOINT}


def test_no_edge_detection():
    # B1 and rB0 intersect as spheres but the crossing lies outside the other faces
    faces = hg.q_union_spec(2).oriented_faces()
    actual, angle = hg.face_incidence(faces, "B1", "rB0")
    assert angle.classify().is_meeting
    assert actual is Incidence.NO_EDGE


def test_text_table_roundtrip():
    spec = hg.q_union_spec(2)
    text = hg.format_polyhedron_spec(spec)
    text = text.replace("top ", "H+i/2 ")
    parsed = hg.parse_polyhedron_spec(text, faces={**FACES})
    assert len(parsed.expected) == len(spec.expected)
    assert hg.verify_polyhedron(parsed).ok


def test_text_table_directives():
    text = """
    # two unit balls
    face X hemisphere 0 1
    face Y hemisphere 1 1
    interior 1/2 2
    X Y 2pi/3
    X iH right
    """
    spec = hg.parse_polyhedron_spec(text, name="custom")
    assert spec.name == "custom"
    assert hg.verify_polyhedron(spec).ok


def test_text_table_errors():
    with pytest.raises(ValueError, match="unknown face"):
        hg.parse_polyhedron_spec("Z iH right")
    with pytest.raises(ValueError, match="unknown relation"):
        hg.parse_polyhedron_spec("B0 iH perpendicular")
    with pytest.raises(ValueError):
        hg.parse_polyhedron_spec("B0 iH")


def test_builtin_specs():
    assert set(hg.BUILTIN_SPECS) == {"Q2-union", "Q2-union-alt", "PT0-union", "Q2-union-corrupted"}
    with pytest.raises(KeyError):
        hg.builtin_spec("nope")
