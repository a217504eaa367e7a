from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st
from sympy.combinatorics import Permutation as SymPerm, PermutationGroup
from sympy.combinatorics.named_groups import AlternatingGroup

from hidsym import permgroup as pg
from hidsym.permgroup import Permutation, closure, phi

perms12 = st.permutations(list(range(1, 13))).map(Permutation)


def sympy_group(names):
    return PermutationGroup([SymPerm([phi(n)(i) - 1 for i in range(1, 13)]) for n in names])


def test_cycle_roundtrip():
    text = "(1 5 9)(2 6 10)(3 7 11)(4 8 12)"
    p = Permutation.from_cycles(text, 12)
    assert pg.format_cycles(p) == text
    assert Permutation.from_cycles("()", 4).is_identity()
    assert str(Permutation.identity(3)) == "()"
    with pytest.raises(ValueError):
        Permutation([1, 1, 2])


def test_composition_convention():
    p = Permutation.from_cycles("(1 2)", 3)
    q = Permutation.from_cycles("(2 3)", 3)
    # q first, then p: 3 -> 2 -> 1
    assert (p * q)(3) == 1


@settings(max_examples=100, deadline=None)
@given(perms12, perms12)
def test_permutation_laws(p, q):
    assert (p * q).inverse() == q.inverse() * p.inverse()
    assert (p * p.inverse()).is_identity()
    assert Permutation.from_cycles(pg.format_cycles(p), 12) == p
    assert (p ** p.order()).is_identity()


def test_closure_orders():
    assert closure([phi(n) for n in pg.PHI_GENERATORS]).order() == 660
    assert closure([phi("h"), phi("f")]).order() == 55
    assert closure([phi("a0"), phi("a1")]).order() == 12


def test_closure_orders_match_sympy():
    assert sympy_group(["a0", "a1", "f0"]).order() == 660
    assert sympy_group(["h", "f"]).order() == 55
    assert sympy_group(["a0", "a1"]).order() == 12


def test_closure_cap():
    with pytest.raises(pg.ClosureBudgetExceeded):
        closure([phi(n) for n in pg.PHI_GENERATORS], cap=100)


def test_relations():
    assert pg.verify_relations(pg.phi_images(), pg.H_T0_RELATORS).ok
    ident = {n: Permutation.identity(12) for n in ("a0", "a1", "f0")}
    assert pg.verify_relations(ident, pg.H_T0_RELATORS).ok
    broken = dict(pg.phi_images())
    broken["f0"] = phi("f0") * Permutation.from_cycles("(1 2)", 12)
    audit = pg.verify_relations(broken, pg.H_T0_RELATORS)
    assert not audit.ok
    assert audit.failing == "(a0*f0)^2"
    assert audit.value == Permutation.from_cycles("(1 2)(9 11)", 12)


def test_stabilizer():
    G = closure([phi(n) for n in pg.PHI_GENERATORS])
    assert pg.stabilizer(G, 1) == closure([phi("h"), phi("f")])
    trivial = closure([], degree=12)
    assert pg.stabilizer(trivial, 5).order() == 1
    F = closure([phi("f")])
    assert pg.stabilizer(F, 1) == F


def test_orbit_stabilizer():
    G = closure([phi(n) for n in pg.PHI_GENERATORS])
    for point in range(1, 13):
        assert pg.stabilizer(G, point).order() * len(G.orbit(point)) == G.order()


def test_block_action():
    blocks = pg.triples()
    A = closure([phi("a0"), phi("a1")])
    action = pg.block_action(A, blocks)
    assert action.order() == 12
    for name, cyc in pg.PSI_CYCLES.items():
        assert pg.block_permutation(phi(name), blocks) == pg.parse_block_cycles(cyc, blocks)
    trivial = pg.block_action(closure([], degree=12), blocks)
    assert trivial.order() == 1
    with pytest.raises(pg.NotBlockInvariant, match="block C"):
        pg.block_permutation(phi("f0"), blocks)


def test_block_action_is_alternating():
    action = pg.block_action(closure([phi("a0"), phi("a1")]), pg.triples())
    sym = PermutationGroup([SymPerm([g(i) - 1 for i in range(1, 5)]) for g in action.generators])
    assert sym.equals(AlternatingGroup(4))


def test_structure_identities():
    f, g, h, m1 = phi("f"), phi("g"), phi("h"), phi("m1")
    assert h.conjugate(f) == h ** 4
    assert g == f * h.inverse()
    assert f.conjugate(m1) == f.inverse()
    assert g == h ** 7 * f


def test_subgroups_of_order_55():
    G = closure([phi("h"), phi("f")])
    subs = pg.subgroups(G)
    assert len(subs) == 14
    assert Counter(K.order() for K in subs) == {1: 1, 5: 11, 11: 1, 55: 1}
    # Sylow oracle: 11 Sylow 5-subgroups, normal Sylow 11-subgroup
    sym = sympy_group(["h", "f"])
    assert sym.sylow_subgroup(11).is_normal(sym)
    assert not sym.sylow_subgroup(5).is_normal(sym)


def test_largest_normalized():
    G = closure([phi("h"), phi("f")])
    m1 = phi("m1")
    K = pg.largest_normalized(G, m1)
    assert K == closure([phi("f")]) and K.order() == 5
    assert pg.largest_normalized_by_intersection(G, m1) == K
    assert pg.largest_normalized(G, Permutation.identity(12)) == G
    # h is not conjugated into <h>, so only the trivial group survives
    H = closure([phi("h")])
    assert phi("h").conjugate(m1) not in H
    assert pg.largest_normalized(H, m1).order() == 1


def test_intersections():
    G = closure([phi("h"), phi("f")])
    m1 = phi("m1")
    assert pg.intersect(G, G.conjugate_by(m1)) == closure([phi("f")])
    assert pg.intersect(G, G) == G
    assert pg.intersect(G, closure([phi("a0")])).order() == 1


def test_phi_of_p():
    from hidsym.residue import phi_of_p
    f = phi("f")
    assert phi_of_p("p1") == f.inverse()
    assert phi_of_p("p3") == f.inverse()
    assert phi_of_p("p2").is_identity()


def test_affine_orbits():
    orbits = pg.orbits_of_affine_map(11, 4)
    assert [sorted(o) for o in orbits] == [[0], [1, 3, 4, 5, 9], [2, 6, 7, 8, 10]]
    assert orbits[1] == [1, 4, 5, 9, 3]
    assert pg.orbits_of_affine_map(7, 1) == [[j] for j in range(7)]
    assert sorted(map(len, pg.orbits_of_affine_map(11, 2))) == [1, 10]
    with pytest.raises(ValueError):
        pg.orbits_of_affine_map(12, 4)
