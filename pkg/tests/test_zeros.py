import pytest

from rigcomplete.biperm import check_bipermutative, check_lax_rig_morphism
from rigcomplete.cube import build_GR
from rigcomplete.effcat import Bound, StructureError
from rigcomplete.permcat import check_permutative, zero_cat
from rigcomplete.pi0 import pi0
from rigcomplete.thomason import HObj, Hocolim
from rigcomplete.zeros import (
    Zeta,
    add_isolated_zero,
    augmentation,
    augmentation_section,
    check_augmentation_pi0,
    check_hocolim_iz,
    check_level_simplicial,
    check_z_simplicial,
    dhocolim,
    z_degeneracy,
    z_face,
    z_level,
    zero_fiber_map,
)

SMALL = Bound(index=0, length=1, size=1)


def test_zeta_sum_and_product(E):
    Z = z_level(E, 2)
    z0, z1, z2 = Zeta(0), Zeta(1), Zeta(2)
    assert Z.oplus(z1, z2) == z1 and Z.oplus(z2, z0) == z0
    assert Z.oplus(z1, 3) == 3 == Z.oplus(3, z1)
    assert Z.tensor(z1, 3) == z1 == Z.tensor(3, z1)
    assert Z.tensor(z0, z2) == z2
    # the old zero acts as depth -1
    assert Z.oplus(0, z0) == 0 and Z.tensor(z0, 0) == z0


def test_adjoining_a_zero_adds_one_object(boolrig):
    H = Hocolim(build_GR(boolrig), validate=False)
    Hp = add_isolated_zero(H)
    assert len(Hp.objects(SMALL)) == len(H.objects(SMALL)) + 1
    assert check_permutative(Hp, SMALL).ok
    with pytest.raises(StructureError):
        add_isolated_zero(boolrig)


def test_hocolim_iz_identity(boolrig, E):
    assert check_hocolim_iz(build_GR(boolrig), Bound(index=1, length=2, size=1)).ok
    rep = check_hocolim_iz(build_GR(E), Bound(index=1, length=1, size=2))
    assert rep.ok and rep.counts["objects"] > 0


def test_resolution_of_the_zero_category():
    Z0 = z_level(zero_cat(), 0)
    assert len(Z0.objects(Bound())) == 2


def test_face_after_degeneracy(F2):
    b = Bound(size=2)
    for q in range(3):
        for i in range(q + 1):
            s, d0, d1 = z_degeneracy(F2, q, i), z_face(F2, q + 1, i), z_face(F2, q + 1, i + 1)
            for a in z_level(F2, q).objects(b):
                mid = s.functor.on_obj(a)
                assert d0.functor.on_obj(mid) == a == d1.functor.on_obj(mid)


def test_augmentation_equalizes_the_faces(F2):
    eps = augmentation(F2, 0).functor.on_obj
    d0, d1 = z_face(F2, 1, 0).functor.on_obj, z_face(F2, 1, 1).functor.on_obj
    for a in z_level(F2, 1).objects(Bound(size=2)):
        assert eps(d0(a)) == eps(d1(a))


def test_augmentation_and_section(F2):
    b = Bound(size=2)
    eps = augmentation(F2, 1).functor
    for a in F2.objects(b):
        assert eps.on_obj(a) == a
    assert eps.on_obj(Zeta(1)) == F2.zero
    sec = augmentation_section(F2, 1)
    for f in F2.morphisms(b):
        assert eps.on_mor(sec.on_mor(f)) == f


def test_simplicial_identities(boolrig, F2):
    assert check_z_simplicial(boolrig, Bound(size=1), q_max=2).ok
    rep = check_z_simplicial(F2, Bound(size=2), q_max=2)
    assert rep.ok and rep.counts["simplicial"] > 0


def test_augmentation_on_components(F2, E):
    for M, b in ((F2, Bound(size=2)), (E, Bound(size=3))):
        for q in (0, 1):
            assert check_augmentation_pi0(M, b, q).ok
            # the old zero keeps its class and each adjoined zero is isolated
            Z = z_level(M, q)
            eps = augmentation(M, q).functor
            P = pi0(Z, b)
            pre = {P.cls(a) for a in Z.objects(b) if eps.on_obj(a) == M.zero}
            assert len(pre) == q + 2


def test_level_zero_is_bipermutative_with_zero(boolrig):
    Dh = dhocolim(build_GR(boolrig), 1, validate=False)
    L0 = Dh.level(0)
    rep = check_bipermutative(L0, SMALL)
    assert rep.ok and rep.counts["zero"] > 0


def test_level_maps_are_lax_rig_morphisms(boolrig):
    Dh = dhocolim(build_GR(boolrig), 1, validate=False)
    for F in (Dh.face(1, 0), Dh.face(1, 1), Dh.degeneracy(0, 0)):
        assert check_lax_rig_morphism(F, SMALL).ok, F.name


def test_level_simplicial_identities(boolrig):
    Dh = dhocolim(build_GR(boolrig), 2, validate=False)
    assert check_level_simplicial(Dh, Bound(index=1, length=1, size=1)).ok


def test_fiber_span_exists(boolrig):
    Dh = dhocolim(build_GR(boolrig), 1, validate=False)
    G = zero_fiber_map(Dh.level(0))
    one = G.on_obj(1 if not hasattr(G.source, "R") else G.source.R.one)
    assert isinstance(one, HObj)
    assert G.on_obj(Zeta(0)) == Zeta(0)
    assert check_lax_rig_morphism(G, SMALL).ok


def test_degree_errors(F2):
    with pytest.raises(StructureError):
        z_level(F2, -1)
    with pytest.raises(StructureError):
        z_face(F2, 1, 2)
    Dh = dhocolim(build_GR(F2), 1, validate=False)
    with pytest.raises(StructureError):
        Dh.level(2)
