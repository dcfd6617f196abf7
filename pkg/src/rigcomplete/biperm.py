"""Bipermutative, strictly bimonoidal and graded variants, with checkers.

Graded categories are the main object here: a functor from a permutative
index category ``J`` to permutative categories with strict transitions,
plus a graded product ``C(x) × C(y) -> C(x+y)``.  An ungraded category is
checked through :class:`ZeroGraded`, its view over the one-object index.

Conditions are reported under these names::

    transition   strict transition functors
    tensor       (1) bifunctor and compatibility with transitions
    unit         (2)
    gamma        (3) naturality, transitions, involution, units
    assoc        (4) associativity and the hexagon
    zero         (5) annihilation
    right-dist   (6)
    left-dist    (7) d_ℓ equals its derivation from γ⊗, naturality
    interchange  (8)
    dist-assoc   (9)
    pentagon     (10)
    left-dist'   (7') for the strictly bimonoidal variant
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .effcat import Bound, FunctorData, Report, StructureError, guarded, sample_product
from .permcat import (
    PermutativeCat,
    SymMonFunctor,
    check_permutative,
    check_symmon_functor,
    zero_cat,
    ZERO_OBJ,
)


class StrictlyBimonoidalCat(PermutativeCat):
    """Permutative category with a strict product, strict right
    distributivity and a left distributivity ``d_left``."""

    one = None
    has_gamma = False

    def tensor(self, a, b):
        raise NotImplementedError

    def tensor_mor(self, f, g):
        raise NotImplementedError

    def d_left(self, a, bs: Sequence):
        """``⊕_j (a ⊗ b_j) -> a ⊗ (⊕_j b_j)``."""
        raise NotImplementedError

    def d_right(self, as_: Sequence, b):
        return self.identity(self.sum([self.tensor(a, b) for a in as_]))


class BipermutativeCat(StrictlyBimonoidalCat):
    has_gamma = True

    def gamma(self, a, b):
        """``γ⊗(a, b): a ⊗ b -> b ⊗ a``."""
        raise NotImplementedError

    def d_left(self, a, bs):
        return derive_left_dist(self, a, bs)


class GradedBimonoidal:
    """A ``J``-graded strictly bimonoidal category.

    Subclasses supply ``index`` (a :class:`PermutativeCat`), ``grade`` and
    ``mgrade`` (recover the fiber of an object or morphism), ``fiber``,
    transitions, the graded product, ``one`` and ``d_left``.
    """

    index: PermutativeCat
    one = None
    has_gamma = False
    name = "graded"

    def grade(self, a):
        raise NotImplementedError

    def mgrade(self, f):
        raise NotImplementedError

    def fiber(self, x) -> PermutativeCat:
        raise NotImplementedError

    def transition(self, k, a):
        raise NotImplementedError

    def transition_mor(self, k, f):
        raise NotImplementedError

    def tensor(self, a, b):
        raise NotImplementedError

    def tensor_mor(self, f, g):
        raise NotImplementedError

    def d_left(self, a, bs):
        raise NotImplementedError

    def d_right(self, as_, b):
        return self.ident(self.sum([self.tensor(a, b) for a in as_]))

    # fiberwise helpers, dispatched on the grade
    def fib(self, a) -> PermutativeCat:
        return self.fiber(self.grade(a))

    def mfib(self, f) -> PermutativeCat:
        return self.fiber(self.mgrade(f))

    def dom(self, f):
        return self.mfib(f).dom(f)

    def cod(self, f):
        return self.mfib(f).cod(f)

    def ident(self, a):
        return self.fib(a).identity(a)

    def comp(self, *mors):
        return self.mfib(mors[-1]).compose_all(*mors)

    def oplus(self, a, b):
        return self.fib(a).oplus(a, b)

    def oplus_mor(self, f, g):
        return self.mfib(f).oplus_mor(f, g)

    def plus_twist(self, a, b):
        return self.fib(a).twist(a, b)

    def sum(self, objs):
        return self.fib(objs[0]).sum(objs)

    def sum_mor(self, mors):
        return self.mfib(mors[0]).sum_mor(mors)

    def oeq(self, a, b) -> bool:
        return self.grade(a) == self.grade(b) and self.fib(a).obj_eq(a, b)

    def meq(self, f, g) -> bool:
        return self.mgrade(f) == self.mgrade(g) and self.mfib(f).mor_eq(f, g)

    def chi(self, x, y):
        """``χ^{x,y}: x + y -> y + x`` in the index category."""
        return self.index.twist(x, y)

    def samples(self, bound: Bound) -> "GradedSamples":
        raise NotImplementedError


class GradedBipermutativeCat(GradedBimonoidal):
    has_gamma = True

    def gamma(self, a, b):
        """``γ⊗^{a,b}: a ⊗ b -> C(χ^{y,x})(b ⊗ a)``."""
        raise NotImplementedError

    def d_left(self, a, bs):
        return derive_left_dist(self, a, bs)


def derive_left_dist(R, a, bs: Sequence):
    """``d_ℓ`` from the product twist and the strict right distributivity.

    Ungraded: ``γ(⊕b, a) ∘ (⊕_j γ(a, b_j))``.  Graded: the same with the
    twist ``C(χ^{y,x})`` applied to the outer ``γ``.
    """
    bs = list(bs)
    if not bs:
        raise StructureError("d_ℓ needs at least one summand")
    if isinstance(R, GradedBimonoidal):
        ys = {R.grade(b) for b in bs}
        if len(ys) != 1:
            raise StructureError(f"summands lie in different fibers: {sorted(map(repr, ys))}")
        x, y = R.grade(a), R.grade(bs[0])
        inner = R.sum_mor([R.gamma(a, b) for b in bs])
        outer = R.transition_mor(R.chi(y, x), R.gamma(R.sum(bs), a))
        return R.comp(outer, inner)
    inner = R.sum_mor([R.gamma(a, b) for b in bs])
    return R.compose(R.gamma(R.sum(bs), a), inner)


class ZeroGraded(GradedBipermutativeCat):
    """An ungraded category seen over the one-object index category."""

    def __init__(self, R: StrictlyBimonoidalCat):
        self.R = R
        self.index = zero_cat()
        self.one = R.one
        self.has_gamma = R.has_gamma
        self.name = R.name

    def grade(self, a):
        return ZERO_OBJ

    mgrade = grade

    def fiber(self, x):
        return self.R

    def transition(self, k, a):
        return a

    def transition_mor(self, k, f):
        return f

    def tensor(self, a, b):
        return self.R.tensor(a, b)

    def tensor_mor(self, f, g):
        return self.R.tensor_mor(f, g)

    def gamma(self, a, b):
        return self.R.gamma(a, b)

    def d_left(self, a, bs):
        return self.R.d_left(a, bs)

    def samples(self, bound):
        return GradedSamples([ZERO_OBJ], [self.index.identity(ZERO_OBJ)],
                             {ZERO_OBJ: self.R.objects(bound)}, {ZERO_OBJ: self.R.morphisms(bound)})


@dataclass
class GradedSamples:
    """Sample data for a graded checker: grades, index morphisms between
    them, and per-grade object and morphism pools."""

    grades: list
    index_mors: list
    objs: dict
    mors: dict
    exhaustive: bool = True


class _Strata:
    """Stratified tuple sampler: every grade assignment, then up to ``per``
    tuples of fiber data for each assignment."""

    def __init__(self, S: GradedSamples, per: int, rng: random.Random, rep: Report, max_strata: int):
        self.S, self.per, self.rng, self.rep, self.max_strata = S, per, rng, rep, max_strata

    def __call__(self, slots: str, kinds: str):
        """``slots`` names a grade slot per position, ``kinds`` is ``o`` or
        ``m`` per position.  Yields ``(grades_by_slot, tuple)``."""
        names = sorted(set(slots))
        assigns = itertools.product(self.S.grades, repeat=len(names))
        total = len(self.S.grades) ** len(names)
        if total > self.max_strata:
            self.rep.exhaustive = False
            assigns = (tuple(self.rng.choice(self.S.grades) for _ in names) for _ in range(self.max_strata))
        for gs in assigns:
            g = dict(zip(names, gs))
            pools = [(self.S.objs if kd == "o" else self.S.mors).get(g[s], []) for s, kd in zip(slots, kinds)]
            for tup in sample_product(pools, self.per, self.rng, self.rep):
                yield g, tup


def check_graded_bipermutative(C: GradedBimonoidal, bound: Bound, samples: GradedSamples | None = None,
                               per: int | None = None, max_strata: int = 5000) -> Report:
    """Conditions (1) to (10), or the strictly bimonoidal list with (7'),
    over stratified samples."""
    rep = Report(f"graded {'bipermutative' if C.has_gamma else 'strictly bimonoidal'} {C.name}")
    S = samples if samples is not None else C.samples(bound)
    rep.exhaustive = S.exhaustive
    if per is None:
        per = bound.samples
    rng = random.Random(bound.seed)
    strata = _Strata(S, per, rng, rep, max_strata)
    J = C.index
    T, Tm = C.transition, C.transition_mor
    tn, tm = C.tensor, C.tensor_mor
    meq, oeq, comp, ident = C.meq, C.oeq, C.comp, C.ident
    one = C.one
    zeroless = {x: C.fiber(x).zeroless for x in S.grades}

    def expect_eq(cond, lhs_fn, rhs_fn, msg):
        lhs = guarded(rep, cond, lhs_fn)
        if lhs is None:
            return
        rhs = guarded(rep, cond, rhs_fn)
        if rhs is None:
            return
        rep.expect(meq(lhs, rhs), cond, msg)

    # strict transitions
    for k in S.index_mors:
        x, y = J.dom(k), J.cod(k)
        Fy = C.fiber(y)
        pool = S.objs.get(x, [])
        for a, b in sample_product([pool, pool], per, rng, rep):
            rep.expect(oeq(T(k, C.oplus(a, b)), Fy.oplus(T(k, a), T(k, b))), "transition",
                       lambda: f"C(k)(a⊕b) != C(k)a ⊕ C(k)b for k={k!r}")
            rep.expect(meq(Tm(k, C.plus_twist(a, b)), Fy.twist(T(k, a), T(k, b))), "transition",
                       lambda: f"C(k)(γ⊕) != γ⊕ for k={k!r}")
        if not zeroless.get(x, True):
            rep.expect(oeq(T(k, C.fiber(x).zero), Fy.zero), "transition", lambda: f"C(k)(0) != 0 for k={k!r}")
        for a in pool:
            rep.expect(meq(Tm(k, ident(a)), ident(T(k, a))), "transition", lambda: f"C(k)(id) != id for k={k!r}")
        mpool = S.mors.get(x, [])
        for f, g in sample_product([mpool, mpool], per, rng, rep):
            fg = C.oplus_mor(f, g)
            rep.expect(meq(Tm(k, fg), Fy.oplus_mor(Tm(k, f), Tm(k, g))), "transition",
                       lambda: f"C(k)(f⊕g) != C(k)f ⊕ C(k)g for k={k!r}")
            if oeq(C.cod(f), C.dom(g)):
                expect_eq("transition", lambda: Tm(k, comp(g, f)), lambda: comp(Tm(k, g), Tm(k, f)),
                          lambda: f"C(k) does not preserve composition for k={k!r}")
    by_dom: dict = {}
    for k in S.index_mors:
        by_dom.setdefault(J.dom(k), []).append(k)
    for k in S.index_mors:
        for l in by_dom.get(J.cod(k), ()):
            lk = J.compose(l, k)
            for a in S.objs.get(J.dom(k), [])[:per]:
                rep.expect(oeq(T(lk, a), T(l, T(k, a))), "transition", lambda: f"C(ℓk) != C(ℓ)C(k) at {(k, l)!r}")

    # (1) the product and transitions
    for k, l in sample_product([S.index_mors, S.index_mors], max_strata, rng, rep):
        kl = J.oplus_mor(k, l)
        pa, pb = S.objs.get(J.dom(k), []), S.objs.get(J.dom(l), [])
        for a, b in sample_product([pa, pb], max(1, per // 4), rng, rep):
            rep.expect(oeq(T(kl, tn(a, b)), tn(T(k, a), T(l, b))), "tensor",
                       lambda: f"C(k+ℓ)(a⊗b) != C(k)a ⊗ C(ℓ)b for {(k, l, a, b)!r}")
            if C.has_gamma:
                rep.expect(meq(Tm(kl, C.gamma(a, b)), C.gamma(T(k, a), T(l, b))), "gamma",
                           lambda: f"C(k+ℓ)(γ⊗) != γ⊗ of transported objects for {(k, l, a, b)!r}")
        ma, mb = S.mors.get(J.dom(k), []), S.mors.get(J.dom(l), [])
        for f, g in sample_product([ma, mb], max(1, per // 4), rng, rep):
            rep.expect(meq(Tm(kl, tm(f, g)), tm(Tm(k, f), Tm(l, g))), "tensor",
                       lambda: f"C(k+ℓ)(f⊗g) != C(k)f ⊗ C(ℓ)g for {(k, l, f, g)!r}")

    for g_, (f, g) in strata("xy", "mm"):
        a, a2, b, b2 = C.dom(f), C.cod(f), C.dom(g), C.cod(g)
        fg = tm(f, g)
        if not rep.expect(oeq(C.dom(fg), tn(a, b)) and oeq(C.cod(fg), tn(a2, b2)), "tensor",
                          lambda: f"f⊗g has wrong endpoints for {(f, g)!r}"):
            continue
        expect_eq("tensor", lambda: fg, lambda: comp(tm(f, ident(b2)), tm(ident(a), g)),
                  lambda: f"f⊗g != (f⊗id)(id⊗g) for {(f, g)!r}")
        expect_eq("tensor", lambda: fg, lambda: comp(tm(ident(a2), g), tm(f, ident(b))),
                  lambda: f"f⊗g != (id⊗g)(f⊗id) for {(f, g)!r}")
        if C.has_gamma:
            expect_eq("gamma", lambda: comp(Tm(C.chi(g_["y"], g_["x"]), tm(g, f)), C.gamma(a, b)),
                      lambda: comp(C.gamma(a2, b2), fg), lambda: f"γ⊗ is not natural for {(f, g)!r}")
    for g_, (a, b) in strata("xy", "oo"):
        rep.expect(meq(tm(ident(a), ident(b)), ident(tn(a, b))), "tensor", lambda: f"id⊗id != id at {(a, b)!r}")
        if C.has_gamma:
            x, y = g_["x"], g_["y"]
            gab = C.gamma(a, b)
            rep.expect(oeq(C.dom(gab), tn(a, b)) and oeq(C.cod(gab), T(C.chi(y, x), tn(b, a))), "gamma",
                       lambda: f"γ⊗ has wrong endpoints at {(a, b)!r}")
            expect_eq("gamma", lambda: comp(Tm(C.chi(y, x), C.gamma(b, a)), gab), lambda: ident(tn(a, b)),
                      lambda: f"C(χ)(γ^(b,a)) ∘ γ^(a,b) != id at {(a, b)!r}")
    # functoriality in each variable
    for g_, (f, b) in strata("xy", "mo"):
        for f2 in _composable(C, f, S.mors.get(g_["x"], []), rng, 3):
            expect_eq("tensor", lambda: tm(comp(f2, f), ident(b)), lambda: comp(tm(f2, ident(b)), tm(f, ident(b))),
                      lambda: f"(f'f)⊗id != (f'⊗id)(f⊗id) for {(f, f2, b)!r}")
    for g_, (a, g) in strata("xy", "om"):
        for g2 in _composable(C, g, S.mors.get(g_["y"], []), rng, 3):
            expect_eq("tensor", lambda: tm(ident(a), comp(g2, g)), lambda: comp(tm(ident(a), g2), tm(ident(a), g)),
                      lambda: f"id⊗(g'g) != (id⊗g')(id⊗g) for {(a, g, g2)!r}")

    # (2) unit
    if one is not None:
        for x in S.grades:
            for a in S.objs.get(x, []):
                rep.expect(oeq(tn(one, a), a) and oeq(tn(a, one), a), "unit", lambda: f"1 is not a strict unit at {a!r}")
                if C.has_gamma:
                    rep.expect(meq(C.gamma(a, one), ident(a)) and meq(C.gamma(one, a), ident(a)), "gamma",
                               lambda: f"γ⊗ with the unit is not the identity at {a!r}")
            for f in S.mors.get(x, []):
                rep.expect(meq(tm(ident(one), f), f) and meq(tm(f, ident(one)), f), "unit",
                           lambda: f"id_1 ⊗ f != f for {f!r}")

    # (4) associativity and the hexagon
    for g_, (a, b, c) in strata("xyz", "ooo"):
        rep.expect(oeq(tn(tn(a, b), c), tn(a, tn(b, c))), "assoc", lambda: f"(ab)c != a(bc) for {(a, b, c)!r}")
        if C.has_gamma:
            x, y, z = g_["x"], g_["y"], g_["z"]
            jl = J.compose(C.chi(z, J.oplus(x, y)), J.oplus_mor(C.chi(x, z), J.identity(y)))
            jr = J.oplus_mor(J.identity(x), C.chi(z, y))
            rep.expect(J.mor_eq(jl, jr), "assoc", lambda: f"χ^(z,x+y)(χ^(x,z)+id) != id+χ^(z,y) at {(x, y, z)!r}")
            expect_eq("assoc", lambda: tm(ident(a), C.gamma(b, c)),
                      lambda: comp(Tm(C.chi(z, J.oplus(x, y)), tm(C.gamma(c, a), ident(b))), C.gamma(tn(a, b), c)),
                      lambda: f"hexagon fails at {(a, b, c)!r}")
    for g_, (f, g, h) in strata("xyz", "mmm"):
        rep.expect(meq(tm(tm(f, g), h), tm(f, tm(g, h))), "assoc", lambda: f"(f⊗g)⊗h != f⊗(g⊗h) for {(f, g, h)!r}")

    # (5) zeros annihilate
    for g_, (a, b) in strata("xy", "oo"):
        x, y = g_["x"], g_["y"]
        if zeroless[x] or zeroless[y]:
            continue
        z = C.fiber(J.oplus(x, y)).zero
        zx, zy = C.fiber(x).zero, C.fiber(y).zero
        rep.expect(oeq(tn(zx, b), z) and oeq(tn(a, zy), z), "zero", lambda: f"0 does not annihilate at {(a, b)!r}")
    for g_, (f, b) in strata("xy", "mo"):
        x, y = g_["x"], g_["y"]
        if zeroless[x] or zeroless[y]:
            continue
        zid = ident(C.fiber(J.oplus(x, y)).zero)
        rep.expect(meq(tm(f, ident(C.fiber(y).zero)), zid), "zero", lambda: f"f ⊗ id_0 != id_0 for {f!r}")
        rep.expect(meq(tm(ident(C.fiber(y).zero), f), ident(C.fiber(J.oplus(y, x)).zero)), "zero",
                   lambda: f"id_0 ⊗ f != id_0 for {f!r}")

    # (6) right distributivity
    for g_, (a, a2, b) in strata("xxy", "ooo"):
        lhs = tn(C.oplus(a, a2), b)
        rep.expect(oeq(lhs, C.oplus(tn(a, b), tn(a2, b))), "right-dist", lambda: f"(a⊕a')b != ab⊕a'b for {(a, a2, b)!r}")
        rep.expect(meq(C.d_right([a, a2], b), ident(lhs)), "right-dist",
                   lambda: f"d_r is not the identity at {(a, a2, b)!r}")
    for g_, (f, f2, g) in strata("xxy", "mmm"):
        rep.expect(meq(tm(C.oplus_mor(f, f2), g), C.oplus_mor(tm(f, g), tm(f2, g))), "right-dist",
                   lambda: f"(f⊕f')⊗g != f⊗g ⊕ f'⊗g for {(f, f2, g)!r}")

    # (7) left distributivity
    for g_, (a, b, b2) in strata("xyy", "ooo"):
        d = guarded(rep, "left-dist", lambda: C.d_left(a, [b, b2]))
        if d is None:
            continue
        rep.expect(oeq(C.dom(d), C.oplus(tn(a, b), tn(a, b2))) and oeq(C.cod(d), tn(a, C.oplus(b, b2))), "left-dist",
                   lambda: f"d_ℓ has wrong endpoints at {(a, b, b2)!r}")
        if C.has_gamma:
            expect_eq("left-dist", lambda: d, lambda: derive_left_dist(C, a, [b, b2]),
                      lambda: f"d_ℓ != C(χ)(γ⊗)∘(γ⊗⊕γ⊗) at {(a, b, b2)!r}")
        rep.expect(meq(C.d_left(a, [b]), ident(tn(a, b))), "left-dist", lambda: f"unary d_ℓ is not the identity at {(a, b)!r}")
        # (8) interchange
        expect_eq("interchange", lambda: comp(tm(ident(a), C.plus_twist(b, b2)), d),
                  lambda: comp(C.d_left(a, [b2, b]), C.plus_twist(tn(a, b), tn(a, b2))),
                  lambda: f"(id⊗γ⊕)∘d_ℓ != d_ℓ∘γ⊕ at {(a, b, b2)!r}")
    for g_, (a, a2, b) in strata("xxy", "ooo"):
        rep.expect(meq(C.plus_twist(tn(a, b), tn(a2, b)), tm(C.plus_twist(a, a2), ident(b))), "interchange",
                   lambda: f"γ⊕(ab,a'b) != γ⊕(a,a')⊗id at {(a, a2, b)!r}")
    for g_, (f, g, g2) in strata("xyy", "mmm"):
        a, a2 = C.dom(f), C.cod(f)
        b, b2, c, c2 = C.dom(g), C.dom(g2), C.cod(g), C.cod(g2)
        expect_eq("left-dist", lambda: comp(C.d_left(a2, [c, c2]), C.oplus_mor(tm(f, g), tm(f, g2))),
                  lambda: comp(tm(f, C.oplus_mor(g, g2)), C.d_left(a, [b, b2])),
                  lambda: f"d_ℓ is not natural for {(f, g, g2)!r}")

    # (9) associativity of distributivity
    for g_, (a, b, c, c2) in strata("xyzz", "oooo"):
        expect_eq("dist-assoc", lambda: C.d_left(tn(a, b), [c, c2]),
                  lambda: comp(tm(ident(a), C.d_left(b, [c, c2])), C.d_left(a, [tn(b, c), tn(b, c2)])),
                  lambda: f"d_ℓ(ab;c,c') != (id⊗d_ℓ)∘d_ℓ at {(a, b, c, c2)!r}")

    # (10) pentagon
    for g_, (a, a2, b, b2) in strata("xxyy", "oooo"):
        mid = C.sum_mor([ident(tn(a, b)), C.plus_twist(tn(a, b2), tn(a2, b)), ident(tn(a2, b2))])
        expect_eq("pentagon", lambda: C.oplus_mor(C.d_left(a, [b, b2]), C.d_left(a2, [b, b2])),
                  lambda: comp(C.d_left(C.oplus(a, a2), [b, b2]), mid),
                  lambda: f"pentagon fails at {(a, a2, b, b2)!r}")

    # (7') d_ℓ ⊗ id = d_ℓ with right factor absorbed
    for g_, (a, b, b2, c) in strata("xyyz", "oooo"):
        expect_eq("left-dist'", lambda: tm(C.d_left(a, [b, b2]), ident(c)),
                  lambda: C.d_left(a, [tn(b, c), tn(b2, c)]),
                  lambda: f"d_ℓ⊗id != d_ℓ(a; bc, b'c) at {(a, b, b2, c)!r}")
    return rep


def _composable(C, f, pool, rng, k):
    cod = C.cod(f)
    cands = [g for g in pool if C.oeq(C.dom(g), cod)]
    if len(cands) <= k:
        return cands
    return rng.sample(cands, k)


def check_graded_strictly_bimonoidal(C: GradedBimonoidal, bound: Bound, samples=None, **kw) -> Report:
    """The same checker; γ⊗ clauses are skipped when ``C.has_gamma`` is false."""
    return check_graded_bipermutative(C, bound, samples, **kw)


def check_bipermutative(R: StrictlyBimonoidalCat, bound: Bound, objs=None, mors=None, per: int | None = None) -> Report:
    """Permutative axioms plus conditions (1)-(10) for ``R`` as a 0-graded category."""
    rep = Report(f"bipermutative {R.name}")
    if objs is None:
        objs = R.objects(bound)
    if mors is None:
        mors = R.morphisms(bound)
    rep.merge(check_permutative(R, bound, objs, mors))
    Z = ZeroGraded(R)
    S = GradedSamples([ZERO_OBJ], [Z.index.identity(ZERO_OBJ)], {ZERO_OBJ: objs}, {ZERO_OBJ: mors})
    rep.merge(check_graded_bipermutative(Z, bound, S, per=per))
    return rep


def check_strictly_bimonoidal(R: StrictlyBimonoidalCat, bound: Bound, **kw) -> Report:
    return check_bipermutative(R, bound, **kw)


@dataclass
class LaxRigMorphism:
    """A lax morphism of (graded) bipermutative categories.

    Source and target are :class:`GradedBimonoidal`; ungraded categories are
    wrapped with :class:`ZeroGraded`.  ``on_obj`` and ``on_mor`` preserve
    grades; ``eta_plus(a, b): F(a) ⊕ F(b) -> F(a ⊕ b)`` and
    ``eta_times(a, b): F(a) ⊗ F(b) -> F(a ⊗ b)``.
    """

    source: GradedBimonoidal
    target: GradedBimonoidal
    on_obj: Callable
    on_mor: Callable
    eta_plus: Callable
    eta_times: Callable
    zero_mor: Callable | None = None
    one_mor: object = None
    name: str = "F"


def lax_rig_morphism(source, target, on_obj, on_mor, eta_plus, eta_times, zero_mor=None, one_mor=None, name="F"):
    """Build a :class:`LaxRigMorphism`, wrapping ungraded endpoints."""
    if not isinstance(source, GradedBimonoidal):
        source = ZeroGraded(source)
    if not isinstance(target, GradedBimonoidal):
        target = ZeroGraded(target)
    return LaxRigMorphism(source, target, on_obj, on_mor, eta_plus, eta_times, zero_mor, one_mor, name)


def strict_rig_morphism(source, target, on_obj, on_mor, name="F") -> LaxRigMorphism:
    tgt = target if isinstance(target, GradedBimonoidal) else ZeroGraded(target)

    def eta_plus(a, b):
        return tgt.ident(tgt.oplus(on_obj(a), on_obj(b)))

    def eta_times(a, b):
        return tgt.ident(tgt.tensor(on_obj(a), on_obj(b)))

    def zero_mor(x):
        return tgt.ident(tgt.fiber(x).zero)

    one = tgt.ident(tgt.one) if tgt.one is not None else None
    return lax_rig_morphism(source, target, on_obj, on_mor, eta_plus, eta_times, zero_mor, one, name)


def check_lax_rig_morphism(F: LaxRigMorphism, bound: Bound, samples: GradedSamples | None = None, per: int | None = None) -> Report:
    """Additive and multiplicative lax structure, their naturality in the
    grades, and both distributivity equations."""
    Sc, D = F.source, F.target
    rep = Report(f"lax rig morphism {F.name}")
    S = samples if samples is not None else Sc.samples(bound)
    rep.exhaustive = S.exhaustive
    if per is None:
        per = bound.samples
    rng = random.Random(bound.seed)
    strata = _Strata(S, per, rng, rep, 5000)
    Fo, Fm, ep, et = F.on_obj, F.on_mor, F.eta_plus, F.eta_times
    meq, oeq, comp, ident = D.meq, D.oeq, D.comp, D.ident
    J = Sc.index

    def expect_eq(cond, lhs_fn, rhs_fn, msg):
        lhs = guarded(rep, cond, lhs_fn)
        if lhs is None:
            return
        rhs = guarded(rep, cond, rhs_fn)
        if rhs is not None:
            rep.expect(meq(lhs, rhs), cond, msg)

    # additive part, fiber by fiber
    for x in S.grades:
        Px, Qx = Sc.fiber(x), D.fiber(x)
        fd = FunctorData(Px, Qx, Fo, Fm, name=f"{F.name}_{x!r}")
        unit = F.zero_mor(x) if (F.zero_mor is not None and not Px.zeroless) else None
        sub = check_symmon_functor(SymMonFunctor(fd, ep, unit), bound.but(samples=per), S.objs.get(x, []), S.mors.get(x, []))
        for v in sub.violations:
            rep.fail("additive", f"{x!r}: {v}")
        for k, n in sub.counts.items():
            rep.tick("additive", n)
        rep.exhaustive = rep.exhaustive and sub.exhaustive
        for f in S.mors.get(x, []):
            Ff = Fm(f)
            rep.expect(oeq(D.dom(Ff), Fo(Sc.dom(f))) and oeq(D.cod(Ff), Fo(Sc.cod(f))), "functor",
                       lambda: f"F(f) has wrong endpoints for {f!r}")

    # naturality in the grades
    for k in S.index_mors:
        x = J.dom(k)
        pool = S.objs.get(x, [])
        for a in pool:
            rep.expect(oeq(Fo(Sc.transition(k, a)), D.transition(k, Fo(a))), "grade-naturality",
                       lambda: f"F C(k) != D(k) F at {(k, a)!r}")
        for a, b in sample_product([pool, pool], per, rng, rep):
            rep.expect(meq(D.transition_mor(k, ep(a, b)), ep(Sc.transition(k, a), Sc.transition(k, b))),
                       "grade-naturality", lambda: f"η⊕ is not natural in the grade at {(k, a, b)!r}")
        for f in S.mors.get(x, []):
            rep.expect(meq(Fm(Sc.transition_mor(k, f)), D.transition_mor(k, Fm(f))), "grade-naturality",
                       lambda: f"F C(k)(f) != D(k) F(f) at {(k, f)!r}")
    for k, l in sample_product([S.index_mors, S.index_mors], 2000, rng, rep):
        kl = J.oplus_mor(k, l)
        for a, b in sample_product([S.objs.get(J.dom(k), []), S.objs.get(J.dom(l), [])], max(1, per // 4), rng, rep):
            rep.expect(meq(D.transition_mor(kl, et(a, b)), et(Sc.transition(k, a), Sc.transition(l, b))),
                       "grade-naturality", lambda: f"η⊗ is not natural in the grades at {(k, l, a, b)!r}")

    # multiplicative part
    for g_, (f, g) in strata("xy", "mm"):
        a, b, a2, b2 = Sc.dom(f), Sc.dom(g), Sc.cod(f), Sc.cod(g)
        expect_eq("eta-times", lambda: comp(Fm(Sc.tensor_mor(f, g)), et(a, b)),
                  lambda: comp(et(a2, b2), D.tensor_mor(Fm(f), Fm(g))),
                  lambda: f"η⊗ is not binatural at {(f, g)!r}")
    for g_, (a, b) in strata("xy", "oo"):
        e = et(a, b)
        rep.expect(oeq(D.dom(e), D.tensor(Fo(a), Fo(b))) and oeq(D.cod(e), Fo(Sc.tensor(a, b))), "eta-times",
                   lambda: f"η⊗ has wrong endpoints at {(a, b)!r}")
        if Sc.has_gamma and D.has_gamma:
            x, y = g_["x"], g_["y"]
            expect_eq("eta-times", lambda: comp(Fm(Sc.gamma(a, b)), e),
                      lambda: comp(D.transition_mor(D.chi(y, x), et(b, a)), D.gamma(Fo(a), Fo(b))),
                      lambda: f"η⊗ does not commute with γ⊗ at {(a, b)!r}")
    for g_, (a, b, c) in strata("xyz", "ooo"):
        expect_eq("eta-times", lambda: comp(et(Sc.tensor(a, b), c), D.tensor_mor(et(a, b), ident(Fo(c)))),
                  lambda: comp(et(a, Sc.tensor(b, c)), D.tensor_mor(ident(Fo(a)), et(b, c))),
                  lambda: f"η⊗ associativity fails at {(a, b, c)!r}")
    if F.one_mor is not None:
        for x in S.grades:
            for a in S.objs.get(x, []):
                expect_eq("eta-times", lambda: comp(et(Sc.one, a), D.tensor_mor(F.one_mor, ident(Fo(a)))),
                          lambda: ident(Fo(a)), lambda: f"unit coherence for η⊗ fails at {a!r}")

    # distributivity
    for g_, (a, a2, b) in strata("xxy", "ooo"):
        expect_eq("right-dist", lambda: comp(ep(Sc.tensor(a, b), Sc.tensor(a2, b)), D.oplus_mor(et(a, b), et(a2, b))),
                  lambda: comp(et(Sc.oplus(a, a2), b), D.tensor_mor(ep(a, a2), ident(Fo(b)))),
                  lambda: f"η⊕(η⊗⊕η⊗) != η⊗(η⊕⊗id) at {(a, a2, b)!r}")
    for g_, (a, b, b2) in strata("xyy", "ooo"):
        expect_eq("left-dist",
                  lambda: comp(Fm(Sc.d_left(a, [b, b2])), ep(Sc.tensor(a, b), Sc.tensor(a, b2)), D.oplus_mor(et(a, b), et(a, b2))),
                  lambda: comp(et(a, Sc.oplus(b, b2)), D.tensor_mor(ident(Fo(a)), ep(b, b2)), D.d_left(Fo(a), [Fo(b), Fo(b2)])),
                  lambda: f"F(d_ℓ)η⊕(η⊗⊕η⊗) != η⊗(id⊗η⊕)d_ℓ at {(a, b, b2)!r}")
    return rep
