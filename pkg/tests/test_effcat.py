import itertools

import pytest

from rigcomplete.cube import CubeObj, cube_extend_zero
from rigcomplete.effcat import (
    Bound,
    CompositionError,
    EffCategory,
    FunctorData,
    LeftLaxData,
    Report,
    ResourceError,
    TableCategory,
    check_category,
    check_functor,
    check_left_lax,
    compose,
    discrete_category,
    guarded,
)
from rigcomplete.indexing import FinInj, ICategory, JObj, Perm, SignedSubset, q_apply


def magma(table):
    """One object, morphisms e, a, b with e the identity."""
    mors = {m: ("*", "*") for m in "eab"}
    full = {("e", m): m for m in "eab"} | {(m, "e"): m for m in "eab"} | table
    return TableCategory(["*"], mors, {"*": "e"}, full, name="magma")


def test_identity_laws_in_table_category():
    C = magma({("a", "a"): "b", ("a", "b"): "e", ("b", "a"): "e", ("b", "b"): "a"})
    for f in "eab":
        assert compose(C, "e", f) == f
        assert compose(C, f, "e") == f


def test_shuffle_twice_is_identity(E):
    chi = E.twist(1, 1)
    assert compose(E, chi, chi) == Perm.identity(2)


def test_composition_mismatch_raises(E):
    with pytest.raises(CompositionError):
        compose(E, Perm.identity(2), Perm.identity(3))


def test_discrete_category_is_clean():
    rep = check_category(discrete_category(["p", "q"]), Bound())
    assert rep.ok and rep.counts["identity"] == 4


def test_symmetric_groupoid_is_clean(E):
    rep = check_category(E, Bound(size=3))
    assert rep.ok
    # 1 + 1 + 8 + 216 composable triples over sizes 0..3
    assert rep.counts["associativity"] == 1 + 1 + 2 ** 3 + 6 ** 3


def test_corrupted_table_names_the_triple():
    # the cyclic group of order 3 with one product changed
    C = magma({("a", "a"): "b", ("a", "b"): "e", ("b", "a"): "e", ("b", "b"): "b"})
    rep = check_category(C, Bound())
    assert not rep.ok
    assert "associativity" in rep.failed_conditions()
    assert any("triple" in v.message and "'a'" in v.message for v in rep.violations)


def test_budget_is_enforced(E):
    with pytest.raises(ResourceError):
        E.morphisms(Bound(size=4, budget=10))


def test_identity_functor_and_a_broken_one(E):
    b = Bound(size=3)
    assert check_functor(FunctorData(E, E, lambda a: a, lambda f: f), b).ok
    # inverting every permutation is contravariant, so composition fails
    rep = check_functor(FunctorData(E, E, lambda a: a, lambda f: f.inverse()), b)
    assert rep.failed_conditions() == ["composition"]


def test_report_merge_and_guarded():
    r1, r2 = Report("a"), Report("b")
    r1.expect(True, "x", "fine")
    r2.expect(False, "y", "broken")
    r2.exhaustive = False
    r1.merge(r2)
    assert r1.counts == {"x": 1, "y": 1}
    assert r1.failed_conditions() == ["y"] and not r1.exhaustive
    assert guarded(r1, "z", lambda: Perm([1, 1])) is None
    assert "z" in r1.failed_conditions()


# left lax transformations -------------------------------------------------

class Strict(EffCategory):
    """A sliver of the category of small categories: objects are finite
    sets ``S`` standing for ``M^{P S}``, morphisms are functors stored as
    their full tables on the (finite, discrete) cube categories."""

    name = "Strict"

    def __init__(self, M):
        self.M = M

    def cubes(self, S):
        return list(itertools.product(self.M.objects(Bound()), repeat=1 << len(S)))

    def dom(self, f):
        return f[0]

    def cod(self, f):
        return f[1]

    def identity(self, S):
        return (S, S, tuple((c, c) for c in self.cubes(S)))

    def _compose(self, g, f):
        gt = dict(g[2])
        return (f[0], g[1], tuple((c, gt[d]) for c, d in f[2]))


def cube_transformation(M, twist_at=None):
    """The cube transformation from the subset posets to Strict, over ``I``.

    ``twist_at`` names one injection whose component gets post-composed with
    the automorphism swapping the two values of the Boolean rig."""
    D = Strict(M)

    def source_obj(n):
        return [S for k in range(n + 1) for S in itertools.combinations(range(1, n + 1), k)]

    def source_map(phi, S):
        return q_apply(phi, SignedSubset(phi.m, S)).elems

    def nu(phi, S):
        T = source_map(phi, S)
        table = []
        for c in D.cubes(S):
            img = cube_extend_zero(phi, S, M, CubeObj(JObj(phi.m, S), c)).entries
            if phi == twist_at:
                img = tuple(1 - e for e in img)
            table.append((c, img))
        return (S, T, tuple(table))

    return LeftLaxData(ICategory(), source_obj, source_map, lambda n, S: S, nu, lambda k, f: f,
                       lambda y: D, name="cube")


def test_strict_transformation_is_clean():
    star = discrete_category(["*"])
    T = LeftLaxData(ICategory(), lambda n: [n], lambda k, X: k.n, lambda n, X: "*",
                    lambda k, X: ("id", "*"), lambda k, f: f, lambda y: star, name="strict")
    assert check_left_lax(T, Bound(index=3)).ok


def test_cube_transformation_cocycle(boolrig):
    rep = check_left_lax(cube_transformation(boolrig), Bound(index=2))
    assert rep.ok
    assert rep.counts["cocycle"] > 0 and rep.counts["unit"] == 1 + 2 + 4


def test_cube_transformation_negative_control(boolrig):
    phi = FinInj(1, 2, (2,))
    rep = check_left_lax(cube_transformation(boolrig, twist_at=phi), Bound(index=2))
    assert "cocycle" in rep.failed_conditions()


def test_cube_transformation_unit_negative_control(boolrig):
    rep = check_left_lax(cube_transformation(boolrig, twist_at=FinInj.identity(1)), Bound(index=2))
    assert "unit" in rep.failed_conditions()
