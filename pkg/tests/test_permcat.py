import itertools

from hypothesis import given, strategies as st

from rigcomplete.effcat import Bound, FunctorData
from rigcomplete.examples import finite_sets_E
from rigcomplete.indexing import Perm
from rigcomplete.permcat import (
    DiscreteMonoid,
    SymMonFunctor,
    check_permutative,
    check_symmon_functor,
    identity_functor,
    product_cat,
    zero_cat,
)


def z3():
    return DiscreteMonoid(range(3), lambda a, b: (a + b) % 3, 0, name="Z/3")


def test_finite_sets_are_permutative(E):
    rep = check_permutative(E, Bound(size=4))
    assert rep.ok and rep.exhaustive


def test_discrete_monoid_and_zero_cat():
    assert check_permutative(z3(), Bound()).ok
    assert check_permutative(zero_cat(), Bound()).ok
    assert zero_cat().objects(Bound()) == [zero_cat().zero]


def test_identity_twist_is_caught():
    # n ⊕ m = m ⊕ n on objects, but permuted morphisms break naturality
    rep = check_permutative(finite_sets_E("twist"), Bound(size=3))
    assert "naturality" in rep.failed_conditions()


def test_product_of_discrete_monoids():
    P = product_cat(z3(), DiscreteMonoid(range(2), lambda a, b: a ^ b, 0, name="Z/2"))
    b = Bound()
    objs = P.objects(b)
    assert len(objs) == len(z3().objects(b)) * 2
    assert P.oplus((1, 1), (2, 1)) == (0, 0)
    assert P.zero == (0, 0)
    assert check_permutative(P, b).ok


def test_product_counts(E, F2):
    b = Bound(size=2)
    P = product_cat(E, F2)
    assert len(P.objects(b)) == len(E.objects(b)) * len(F2.objects(b))
    assert len(P.morphisms(b)) == len(E.morphisms(b)) * len(F2.morphisms(b))


def test_identity_functor_is_clean(E):
    assert check_symmon_functor(identity_functor(E), Bound(size=3)).ok


def test_swapped_structure_map_is_caught(E):
    # η(a, b) = γ(a, b) reverses the summands
    fd = FunctorData(E, E, lambda a: a, lambda f: f, name="swap")
    F = SymMonFunctor(fd, lambda a, b: E.twist(a, b), E.identity(0))
    rep = check_symmon_functor(F, Bound(size=3))
    assert {"twist", "binaturality"} <= set(rep.failed_conditions())


def block_perm(sizes, order):
    """The permutation moving blocks of ``sizes`` into ``order``, by hand."""
    starts = list(itertools.accumulate([0] + list(sizes)))
    new_start, pos = {}, 0
    for src in order:
        new_start[src] = pos
        pos += sizes[src]
    images = []
    for k, n in enumerate(sizes):
        images += [new_start[k] + i + 1 for i in range(n)]
    return Perm(images)


@given(st.lists(st.integers(0, 3), min_size=1, max_size=5), st.data())
def test_permute_summands_matches_block_permutation(sizes, data):
    E = finite_sets_E()
    order = data.draw(st.permutations(list(range(len(sizes)))))
    assert E.permute_summands(sizes, order) == block_perm(sizes, order)


@given(st.lists(st.integers(0, 2), min_size=1, max_size=4), st.data())
def test_permute_summands_composes(sizes, data):
    E = finite_sets_E()
    n = len(sizes)
    s1 = data.draw(st.permutations(list(range(n))))
    s2 = data.draw(st.permutations(list(range(n))))
    mid = [sizes[i] for i in s1]
    both = [s1[j] for j in s2]
    assert E.compose(E.permute_summands(mid, s2), E.permute_summands(sizes, s1)) == E.permute_summands(sizes, both)
