import itertools

import pytest
from hypothesis import given, settings, strategies as st

from rigcomplete.biperm import check_graded_bipermutative
from rigcomplete.cube import (
    CubeObj,
    GDiagram,
    build_GR,
    cube_diagonal,
    cube_extend_zero,
    g_apply,
    g_mor,
    g_obj,
    subset_of,
)
from rigcomplete.effcat import Bound, StructureError
from rigcomplete.examples import finite_sets_E
from rigcomplete.indexing import FinInj, J_ZERO, JCategory, JMor, JObj, Perm, j_compose, transpose_perm
from rigcomplete.permcat import check_symmon_functor


def cube(n, T, entries):
    return CubeObj(JObj(n, T), tuple(entries))


def test_diagonal_from_empty_set(E):
    assert cube_diagonal(1, (), (1,), E, cube(1, (), [3])).entries == (3, 3)


def test_diagonal_identity(E):
    a = cube(2, (1, 2), [1, 2, 3, 4])
    assert cube_diagonal(2, (1, 2), (1, 2), E, a) == a


def test_diagonal_into_a_square(E):
    out = cube_diagonal(2, (1,), (1, 2), E, cube(2, (1,), [5, 7]))
    # V = ∅, {1}, {2}, {1,2} picks a_{V ∩ {1}}
    assert out.entries == (5, 7, 5, 7)


def test_extension_by_zero_onto_empty_factor(E):
    phi = FinInj(1, 2, (2,))
    out = cube_extend_zero(phi, (), E, cube(1, (), [4]))
    assert out.owner == JObj(2, (1,)) and out.entries == (4, 0)


def test_extension_by_zero_lands_on_the_image(E):
    phi = FinInj(1, 2, (2,))
    out = cube_extend_zero(phi, (1,), E, cube(1, (1,), [4, 6]))
    assert out.owner == JObj(2, (1, 2))
    assert out.as_dict() == {(): 4, (1,): 0, (2,): 6, (1, 2): 0}


def test_extension_along_identity(E):
    a = cube(2, (2,), [1, 2])
    assert cube_extend_zero(FinInj.identity(2), (2,), E, a) == a


def test_commuting_square_against_the_formula(boolrig):
    M = boolrig
    for phi in (FinInj(1, 2, (1,)), FinInj(1, 2, (2,))):
        comp = phi.complement()
        for S, T in [((), ()), ((), (1,)), ((1,), (1,))]:
            fS = tuple(phi(s) for s in S)
            fT = tuple(sorted(tuple(phi(t) for t in T) + comp))
            for ents in itertools.product((0, 1), repeat=1 << len(S)):
                a = cube(1, S, ents)
                way1 = cube_diagonal(2, tuple(sorted(fS + comp)), fT, M, cube_extend_zero(phi, S, M, a))
                way2 = cube_extend_zero(phi, T, M, cube_diagonal(1, S, T, M, a))
                assert way1 == way2
                img_T = {phi(t) for t in T}
                for mask in range(1 << len(fT)):
                    W = subset_of(fT, mask)
                    if set(W) <= img_T:
                        pre = tuple(sorted(i for i in S if phi(i) in W))
                        want = a.entry(pre)
                    else:
                        want = 0
                    assert way1.entries[mask] == want


def test_negative_grades_give_the_zero_category(E):
    G = GDiagram(E)
    F = G.fiber(JObj(1, (-1,)))
    assert F.objects(Bound()) == [CubeObj(JObj(1, (-1,)), None)]
    m = JMor(FinInj(1, 2, (1,)), JObj(1, ()), JObj(2, (-1, 2)))
    assert g_obj(E, m, cube(1, (), [2])).is_zero


def test_g_is_functorial(boolrig):
    J = JCategory()
    b = Bound(index=2, size=1)
    objs = J.objects(b)
    G = GDiagram(boolrig)
    n = 0
    for x, y, z in itertools.product(objs, repeat=3):
        for f in J.homs(x, y):
            for g in J.homs(y, z):
                gf = j_compose(g, f)
                for a in G.fiber(x).objects(b):
                    assert g_obj(boolrig, gf, a) == g_obj(boolrig, g, g_obj(boolrig, f, a))
                    n += 1
    assert n == 597


def test_transitions_are_strict_functors(E):
    G = GDiagram(E)
    b = Bound(index=1, size=2)
    J = JCategory()
    for x in J.objects(b):
        for y in J.objects(b):
            for m in J.homs(x, y):
                assert check_symmon_functor(g_apply(G, m), b).ok


def test_wrong_owner_is_rejected(E):
    m = JMor(FinInj.identity(1), JObj(1, ()), JObj(1, (1,)))
    with pytest.raises(StructureError):
        g_obj(E, m, cube(1, (1,), [1, 1]))


# the graded product -------------------------------------------------------

def test_product_of_one_cubes(E):
    GR = build_GR(E)
    a, b, c, d = 2, 3, 5, 7
    out = GR.tensor(cube(1, (1,), [a, b]), cube(1, (1,), [c, d]))
    assert out.owner == JObj(2, (1, 2))
    assert out.as_dict() == {(): a * c, (1,): b * c, (2,): a * d, (1, 2): b * d}
    assert sorted(out.entries) == sorted([a * c, a * d, b * c, b * d])


def test_unit_and_zero_cube(E):
    GR = build_GR(E)
    a = cube(1, (1,), [2, 3])
    assert GR.tensor(a, GR.one) == a == GR.tensor(GR.one, a)
    z = CubeObj(JObj(1, (-1,)), None)
    assert GR.tensor(a, z).is_zero and GR.tensor(z, a).is_zero


def test_gamma_on_unit_length_cubes(E):
    GR = build_GR(E)
    a = CubeObj(J_ZERO, (2,))
    g = GR.gamma(a, a)
    # (i, j) -> (j, i) on 2 x 2: the transposition of the middle pair
    assert g.entries == (Perm([1, 3, 2, 4]),)
    assert g.entries[0] == transpose_perm(2, 2)


def test_gamma_is_discrete_for_discrete_rigs(boolrig):
    GR = build_GR(boolrig)
    for a in GR.fiber(JObj(1, (1,))).objects(Bound(size=1)):
        assert all(e[0] == "id" for e in GR.gamma(a, a).entries)


sizes = st.integers(0, 2)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([(), (1,)]), st.sampled_from([(), (1,)]), st.data())
def test_gamma_is_an_involution(S, T, data):
    E = finite_sets_E()
    GR = build_GR(E)
    a = cube(1, S, [data.draw(sizes) for _ in range(1 << len(S))])
    b = cube(1, T, [data.draw(sizes) for _ in range(1 << len(T))])
    x, y = a.owner, b.owner
    there = GR.gamma(a, b)
    back = GR.transition_mor(GR.chi(y, x), GR.gamma(b, a))
    assert GR.comp(back, there) == GR.ident(GR.tensor(a, b))


def test_fiber_over_zero_is_the_rig(E):
    GR = build_GR(E)
    F0 = GR.fiber(J_ZERO)
    b = Bound(size=3)
    objs = F0.objects(b)
    assert [o.entries[0] for o in objs] == E.objects(b)
    for a, c in itertools.product(objs, repeat=2):
        assert GR.oplus(a, c).entries[0] == E.oplus(a.entries[0], c.entries[0])
        assert GR.tensor(a, c).entries[0] == E.tensor(a.entries[0], c.entries[0])
        assert GR.plus_twist(a, c).entries[0] == E.twist(a.entries[0], c.entries[0])


def test_graded_boolean_rig_small(boolrig):
    assert check_graded_bipermutative(build_GR(boolrig), Bound(index=1, size=1)).ok


def test_identity_gamma_is_caught_in_the_graded_checker():
    rep = check_graded_bipermutative(build_GR(finite_sets_E("gamma")), Bound(index=0, size=2))
    assert {"gamma", "left-dist"} <= set(rep.failed_conditions())


def test_cube_morphisms_act_entrywise(E):
    m = JMor(FinInj.identity(1), JObj(1, ()), JObj(1, (1,)))
    f = GDiagram(E).fiber(JObj(1, ())).identity(cube(1, (), [2]))
    assert g_mor(E, m, f).entries == (Perm.identity(2), Perm.identity(2))
