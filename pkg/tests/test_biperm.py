import itertools

from rigcomplete.biperm import (
    ZeroGraded,
    check_bipermutative,
    check_graded_bipermutative,
    check_lax_rig_morphism,
    check_strictly_bimonoidal,
    derive_left_dist,
    lax_rig_morphism,
    strict_rig_morphism,
)
from rigcomplete.effcat import Bound
from rigcomplete.examples import FreeModulesF2, finite_sets_E, permutation_representation, perm_matrix
from rigcomplete.indexing import Perm, regroup_perm


class MatrixRig(FreeModulesF2):
    """Free F2-modules as a strictly bimonoidal category: no product twist,
    the left distributivity is the regrouping permutation matrix."""

    has_gamma = False

    def gamma(self, a, b):
        raise NotImplementedError


class WrongDistMatrixRig(MatrixRig):
    def d_left(self, a, bs):
        n = a * sum(bs)
        return perm_matrix(Perm(list(range(n, 0, -1)))) if n > 1 else self.identity(n)


def test_left_dist_of_finite_sets_is_xi(E):
    # the direct regrouping agrees with γ⊗ ∘ d_r ∘ (γ⊗ ⊕ γ⊗)
    for n, m, m2 in itertools.product(range(4), repeat=3):
        assert E.d_left(n, [m, m2]) == derive_left_dist(E, n, [m, m2])


def test_left_dist_degenerate_cases(E):
    for a, b in itertools.product(range(4), repeat=2):
        assert E.d_left(a, [b, 0]).is_identity()
        assert E.d_left(1, [a, b]).is_identity()


def test_finite_sets_are_bipermutative(E):
    rep = check_bipermutative(E, Bound(size=3))
    assert rep.ok and rep.exhaustive
    for cond in ("tensor", "gamma", "assoc", "zero", "right-dist", "left-dist", "interchange",
                 "dist-assoc", "pentagon"):
        assert rep.counts[cond] > 0, cond


def test_zero_graded_view_gives_the_same_verdict(boolrig):
    for R in (boolrig, finite_sets_E("gamma")):
        b = Bound(size=2)
        direct = check_bipermutative(R, b)
        graded = check_graded_bipermutative(ZeroGraded(R), b)
        # the direct check adds the permutative axioms on top
        assert direct.ok == graded.ok
        assert set(graded.failed_conditions()) <= set(direct.failed_conditions())


def test_corrupted_gamma_fails_named_conditions():
    rep = check_bipermutative(finite_sets_E("gamma"), Bound(size=3))
    assert {"gamma", "left-dist"} <= set(rep.failed_conditions())


def test_matrix_rig_is_strictly_bimonoidal():
    rep = check_strictly_bimonoidal(MatrixRig(2), Bound(size=2))
    assert rep.ok
    assert rep.counts["left-dist'"] > 0


def test_wrong_left_dist_fails_seven_prime():
    rep = check_strictly_bimonoidal(WrongDistMatrixRig(2), Bound(size=2))
    assert "left-dist'" in rep.failed_conditions()


def test_seven_prime_holds_for_bipermutative(E, F2):
    for R in (E, F2):
        rep = check_bipermutative(R, Bound(size=2))
        assert rep.counts["left-dist'"] > 0 and "left-dist'" not in rep.failed_conditions()


def test_identity_lax_morphism(E):
    F = strict_rig_morphism(E, E, lambda a: a, lambda f: f, name="id")
    assert check_lax_rig_morphism(F, Bound(size=3)).ok


def test_permutation_representation(E, F2):
    rep = check_lax_rig_morphism(permutation_representation(E, F2), Bound(size=2))
    assert rep.ok


def test_broken_lax_structure_is_caught(E):
    # η⊕ = γ⊕ is a valid map F(a) ⊕ F(b) -> F(a ⊕ b) only up to the order
    F = lax_rig_morphism(E, E, lambda a: a, lambda f: f, lambda a, b: E.twist(a, b),
                         lambda a, b: E.identity(a * b), lambda x: E.identity(0), E.identity(1), name="bad")
    assert not check_lax_rig_morphism(F, Bound(size=3)).ok


def test_regroup_perm_is_the_left_distributivity():
    # direct evaluation of the regrouping on labelled pairs
    for n, ws in [(2, (1, 2)), (3, (2, 1, 1)), (1, (3,))]:
        total = sum(ws)
        src, off = [], 0
        for w in ws:
            src += [(i, off + j) for i in range(1, n + 1) for j in range(1, w + 1)]
            off += w
        tgt = [(i, j) for i in range(1, n + 1) for j in range(1, total + 1)]
        p = regroup_perm(n, ws)
        assert [tgt[p(k) - 1] for k in range(1, len(src) + 1)] == src
