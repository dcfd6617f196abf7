import random

import pytest

from rigcomplete.biperm import check_lax_rig_morphism, strict_rig_morphism
from rigcomplete.cube import CubeMor, CubeObj, build_GR, cube_morphism
from rigcomplete.effcat import Bound, StructureError
from rigcomplete.examples import free_modules_F2, permutation_representation
from rigcomplete.indexing import J_ZERO, JObj, Perm, shuffle_chi
from rigcomplete.thomason import HMor, HObj, Hocolim, hocolim_suite, induced_morphism, unit_embed

B = Bound(index=1, length=2, size=2)


@pytest.fixture(scope="module")
def H(E):
    return Hocolim(build_GR(E))


def c0(e):
    return CubeObj(J_ZERO, (e,))


def one_term(x, entries):
    return HObj(((x, CubeObj(x, tuple(entries))),))


def randmors(H, k, seed=3, bound=B):
    rng = random.Random(seed)
    return [H.random_chain(rng, bound, 1)[0] for _ in range(k)]


def test_sum_concatenates(H):
    a, b = one_term(J_ZERO, [2]), one_term(JObj(1, (1,)), [1, 2])
    assert H.oplus(a, b) == HObj(a.terms + b.terms)
    assert H.oplus(a, b).n == 2


def test_sum_twist_is_an_involution(H):
    a, b = one_term(J_ZERO, [2]), one_term(JObj(1, (1,)), [1, 2])
    assert H.compose(H.twist(b, a), H.twist(a, b)) == H.identity(H.oplus(a, b))


def test_product_of_one_term_objects(H):
    x = JObj(1, (1,))
    out = H.tensor(one_term(x, [2, 3]), one_term(x, [5, 7]))
    assert out == HObj(((JObj(2, (1, 2)), CubeObj(JObj(2, (1, 2)), (10, 15, 14, 21))),))


def test_product_with_the_unit(H):
    for f in randmors(H, 50):
        assert H.tensor_mor(f, H.identity(H.one)) == f
        assert H.tensor_mor(H.identity(H.one), f) == f


def test_product_twist_unit_and_involution(H):
    for f in randmors(H, 50, seed=5):
        a = f.src
        assert H.gamma(H.one, a) == H.identity(a)
        b = randmors(H, 1, seed=hash(a) % 97)[0].src
        assert H.compose(H.gamma(b, a), H.gamma(a, b)) == H.identity(H.tensor(a, b))


def test_right_distributivity_is_the_identity(H):
    fs = randmors(H, 30, seed=7)
    for f, g, h in zip(fs, fs[1:], fs[2:]):
        a, a2, b = f.src, g.src, h.src
        assert H.d_right([a, a2], b) == H.identity(H.tensor(H.oplus(a, a2), b))


def test_left_distributivity_is_the_composite_of_twists(H):
    fs = randmors(H, 30, seed=11)
    for f, g, h in zip(fs, fs[1:], fs[2:]):
        a, b, b2 = f.src, g.src, h.src
        lhs = H.d_left(a, [b, b2])
        rhs = H.compose(H.gamma(H.oplus(b, b2), a), H.oplus_mor(H.gamma(a, b), H.gamma(a, b2)))
        assert lhs == rhs


def test_left_distributivity_on_units_is_trivial(H):
    a = HObj(((J_ZERO, c0(1)),))
    d = H.d_left(a, [a, a])
    assert d == H.identity(H.oplus(a, a))


def test_composite_carries_the_shuffle(H, E):
    # η⊕ after τ⊕ on 1[(0,2)] ⊕ 1[(0,3)] folds both terms with the shuffle
    a, b = HObj(((J_ZERO, c0(2)),)), HObj(((J_ZERO, c0(3)),))
    G = unit_embed(H)
    f = H.twist(a, b)
    g = G.eta_plus(c0(3), c0(2))
    gf = H.compose(g, f)
    assert gf.psi == (1, 1)
    assert gf.rho == (CubeMor(J_ZERO, (shuffle_chi(2, 3),)),)
    assert gf.tgt == HObj(((J_ZERO, c0(5)),))


def test_malformed_morphism_is_rejected(H):
    a = one_term(J_ZERO, [2])
    with pytest.raises(StructureError):
        H.make((1,), (H.J.identity(J_ZERO),), (CubeMor(J_ZERO, (Perm.identity(3),)),), a)


def test_object_count_against_brute_force(H, E):
    # a term is a grade with an object of its fiber; objects are words of terms
    D = H.D
    terms = sum(len(D.fiber(x).objects(B)) for x in H.J.objects(B))
    assert len(H.objects(B)) == sum(terms ** k for k in range(1, B.length + 1))


def test_enumerated_morphisms_are_well_formed(H):
    b = Bound(index=1, length=2, size=1)
    for a in H.objects(b):
        outs = H.out_homs(a, b)
        for f in outs:
            H.check_mor(f)
            assert f.src == a
        in_bound = {f.tgt for f in outs if H.in_bound(f.tgt, b)}
        assert in_bound == {t for t in H.out_targets(a, b) if H.in_bound(t, b)}


def test_unit_embedding(H, E):
    G = unit_embed(H)
    assert G.on_obj(c0(1)) == H.one
    for X, Y in [(c0(2), c0(3)), (c0(0), c0(4))]:
        assert G.on_obj(H.D.tensor(X, Y)) == H.tensor(G.on_obj(X), G.on_obj(Y))
        eta = G.eta_plus(X, Y)
        assert eta.psi == (1, 1) and len(set(eta.psi)) < len(eta.psi)
    rep = check_lax_rig_morphism(G, Bound(index=0, length=1, size=2))
    assert rep.ok


def test_unit_embedding_with_swapped_structure_map(H):
    G = unit_embed(H)
    good = G.eta_plus
    G.eta_plus = lambda X, Y: good(Y, X)
    assert not check_lax_rig_morphism(G, Bound(index=0, length=1, size=2)).ok


def test_induced_identity(H, E):
    F = strict_rig_morphism(H.D, H.D, lambda a: a, lambda f: f, name="id")
    Fs = induced_morphism(F, H, H)
    for f in randmors(H, 50, seed=13):
        assert Fs.on_obj(f.src) == f.src
        assert Fs.on_mor(f) == f


def test_induced_permutation_matrices_are_functorial(H, E):
    F2 = free_modules_F2(2)
    HF = Hocolim(build_GR(F2))
    Fs = induced_morphism(cube_morphism(permutation_representation(E, F2)), H, HF)
    rng = random.Random(17)
    for _ in range(200):
        f, g = H.random_chain(rng, B, 2)
        assert Fs.on_mor(H.compose(g, f)) == HF.compose(Fs.on_mor(g), Fs.on_mor(f))
        a, b = f.src, g.src
        lhs = Fs.eta_times(H.oplus(a, b), a)
        rhs = HF.oplus_mor(Fs.eta_times(a, a), Fs.eta_times(b, a))
        assert lhs == rhs


def test_randomized_suite_small(H):
    rep = hocolim_suite(H, B, samples=200, seed=2)
    assert rep.ok
    assert rep.counts["associativity"] == 200 and rep.counts["interchange"] == 200
