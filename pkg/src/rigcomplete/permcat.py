"""Permutative categories, symmetric monoidal functors and their checkers.

A permutative category has a strictly associative and strictly unital sum
and a twist ``γ(a, b): a ⊕ b -> b ⊕ a``.  Setting ``zero = None`` marks a
category without a distinguished zero; every zero axiom is then skipped.

The checked axiom list: strict associativity and unitality on objects and
morphisms, bifunctoriality, symmetry ``γ(b,a)γ(a,b) = id``, ``γ(a,0) = id``,
naturality, and the compatibility of the twist with the sum,
``γ(a⊕b, c) = (γ(a,c) ⊕ id_b) ∘ (id_a ⊕ γ(b,c))``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Sequence

from .effcat import (
    Bound,
    EffCategory,
    FunctorData,
    Report,
    StructureError,
    guarded,
    sample_product,
)


class PermutativeCat(EffCategory):
    zero = None

    @property
    def zeroless(self) -> bool:
        return self.zero is None

    def oplus(self, a, b):
        raise NotImplementedError

    def oplus_mor(self, f, g):
        raise NotImplementedError

    def twist(self, a, b):
        raise NotImplementedError

    def sum(self, objs: Sequence):
        objs = list(objs)
        if not objs:
            if self.zeroless:
                raise StructureError(f"empty sum in zeroless {self.name}")
            return self.zero
        out = objs[0]
        for b in objs[1:]:
            out = self.oplus(out, b)
        return out

    def sum_mor(self, mors: Sequence):
        mors = list(mors)
        if not mors:
            return self.identity(self.sum([]))
        out = mors[0]
        for g in mors[1:]:
            out = self.oplus_mor(out, g)
        return out

    def permute_summands(self, objs: Sequence, order: Sequence[int]):
        """The canonical morphism ``⊕_i objs[i] -> ⊕_k objs[order[k]]``.

        ``order`` lists 0-based source positions in target order.  The result
        is a composite of adjacent twists ``id ⊕ γ ⊕ id``; by coherence any
        such composite gives the same morphism.
        """
        objs = list(objs)
        n = len(objs)
        if sorted(order) != list(range(n)):
            raise ValueError(f"not a reordering of {n} summands: {order}")
        rank = {src: k for k, src in enumerate(order)}
        cur = list(range(n))
        out = self.identity(self.sum(objs))
        changed = True
        while changed:
            changed = False
            for p in range(n - 1):
                i, j = cur[p], cur[p + 1]
                if rank[i] > rank[j]:
                    parts = [self.identity(objs[q]) for q in cur[:p]]
                    parts.append(self.twist(objs[i], objs[j]))
                    parts += [self.identity(objs[q]) for q in cur[p + 2:]]
                    out = self.compose(self.sum_mor(parts), out)
                    cur[p], cur[p + 1] = j, i
                    changed = True
        return out


def _samples(C, bound, objs, mors):
    if objs is None:
        objs = C.objects(bound)
    if mors is None:
        mors = C.morphisms(bound)
    return objs, mors


def check_permutative(P: PermutativeCat, bound: Bound, objs=None, mors=None) -> Report:
    """Every permutative axiom over enumerated (or supplied) samples."""
    rep = Report(f"permutative {P.name}")
    objs, mors = _samples(P, bound, objs, mors)
    rng = random.Random(bound.seed)
    cap = bound.samples
    eq, meq, C = P.obj_eq, P.mor_eq, P

    for a, b, c in sample_product([objs] * 3, cap, rng, rep):
        rep.expect(eq(P.oplus(P.oplus(a, b), c), P.oplus(a, P.oplus(b, c))),
                   "associativity", lambda: f"(a⊕b)⊕c != a⊕(b⊕c) for {(a, b, c)!r}")
        lhs = P.twist(P.oplus(a, b), c)
        rhs = guarded(rep, "hexagon", lambda: C.compose(
            P.oplus_mor(P.twist(a, c), P.identity(b)),
            P.oplus_mor(P.identity(a), P.twist(b, c))))
        if rhs is not None:
            rep.expect(meq(lhs, rhs), "hexagon", lambda: f"γ(a⊕b,c) != (γ(a,c)⊕id)(id⊕γ(b,c)) for {(a, b, c)!r}")

    for a, b in sample_product([objs] * 2, cap, rng, rep):
        t = P.twist(a, b)
        rep.expect(eq(P.dom(t), P.oplus(a, b)) and eq(P.cod(t), P.oplus(b, a)),
                   "twist-endpoints", lambda: f"γ has wrong endpoints at {(a, b)!r}")
        back = guarded(rep, "symmetry", lambda: C.compose(P.twist(b, a), t))
        if back is not None:
            rep.expect(meq(back, P.identity(P.oplus(a, b))), "symmetry", lambda: f"γ(b,a)γ(a,b) != id at {(a, b)!r}")
        rep.expect(meq(P.oplus_mor(P.identity(a), P.identity(b)), P.identity(P.oplus(a, b))),
                   "bifunctor", lambda: f"id⊕id != id at {(a, b)!r}")

    if not P.zeroless:
        z = P.zero
        for a in objs:
            rep.expect(eq(P.oplus(z, a), a) and eq(P.oplus(a, z), a), "unit", lambda: f"0 is not a strict unit at {a!r}")
            rep.expect(meq(P.twist(a, z), P.identity(a)), "unit-twist", lambda: f"γ(a,0) != id at {a!r}")
        for f in mors:
            rep.expect(meq(P.oplus_mor(P.identity(z), f), f) and meq(P.oplus_mor(f, P.identity(z)), f),
                       "unit", lambda: f"id_0 ⊕ f != f for {f!r}")

    for f, g in sample_product([mors] * 2, cap, rng, rep):
        a, a2, b, b2 = P.dom(f), P.cod(f), P.dom(g), P.cod(g)
        fg = P.oplus_mor(f, g)
        if not rep.expect(eq(P.dom(fg), P.oplus(a, b)) and eq(P.cod(fg), P.oplus(a2, b2)),
                          "bifunctor", lambda: f"f⊕g has wrong endpoints for {(f, g)!r}"):
            continue
        lhs = guarded(rep, "naturality", lambda: C.compose(P.twist(a2, b2), fg))
        rhs = guarded(rep, "naturality", lambda: C.compose(P.oplus_mor(g, f), P.twist(a, b)))
        if lhs is not None and rhs is not None:
            rep.expect(meq(lhs, rhs), "naturality", lambda: f"γ∘(f⊕g) != (g⊕f)∘γ for {(f, g)!r}")

    for f, g, h in sample_product([mors] * 3, cap, rng, rep):
        rep.expect(meq(P.oplus_mor(P.oplus_mor(f, g), h), P.oplus_mor(f, P.oplus_mor(g, h))),
                   "associativity", lambda: f"(f⊕g)⊕h != f⊕(g⊕h) for {(f, g, h)!r}")

    # bifunctoriality, one variable at a time
    by_dom: dict = {}
    for f in mors:
        by_dom.setdefault(P.dom(f), []).append(f)
    for f, g in sample_product([mors] * 2, cap, rng, rep):
        a, a2, b, b2 = P.dom(f), P.cod(f), P.dom(g), P.cod(g)
        fg = P.oplus_mor(f, g)
        rep.expect(meq(fg, C.compose(P.oplus_mor(f, P.identity(b2)), P.oplus_mor(P.identity(a), g))),
                   "bifunctor", lambda: f"f⊕g != (f⊕id)(id⊕g) for {(f, g)!r}")
        rep.expect(meq(fg, C.compose(P.oplus_mor(P.identity(a2), g), P.oplus_mor(f, P.identity(b)))),
                   "bifunctor", lambda: f"f⊕g != (id⊕g)(f⊕id) for {(f, g)!r}")
    pairs = [(f, f2) for f in mors for f2 in by_dom.get(P.cod(f), ())]
    for (f, f2), b in sample_product([pairs, objs], cap, rng, rep):
        ib = P.identity(b)
        rep.expect(meq(P.oplus_mor(C.compose(f2, f), ib), C.compose(P.oplus_mor(f2, ib), P.oplus_mor(f, ib))),
                   "bifunctor", lambda: f"(f'f)⊕id != (f'⊕id)(f⊕id) for {(f, f2, b)!r}")
        rep.expect(meq(P.oplus_mor(ib, C.compose(f2, f)), C.compose(P.oplus_mor(ib, f2), P.oplus_mor(ib, f))),
                   "bifunctor", lambda: f"id⊕(f'f) != (id⊕f')(id⊕f) for {(f, f2, b)!r}")
    return rep


@dataclass
class SymMonFunctor:
    """A lax symmetric monoidal functor between permutative categories.

    ``eta(a, b): F(a) ⊕ F(b) -> F(a ⊕ b)``; ``unit_mor: 0 -> F(0)`` is
    ``None`` when the source is zeroless.
    """

    functor: FunctorData
    eta: Callable
    unit_mor: object = None
    strict: bool = False

    @property
    def source(self) -> PermutativeCat:
        return self.functor.source

    @property
    def target(self) -> PermutativeCat:
        return self.functor.target


def strict_functor(F: FunctorData) -> SymMonFunctor:
    T = F.target
    unit = None
    if not F.source.zeroless:
        unit = T.identity(T.zero)
    return SymMonFunctor(F, lambda a, b: T.identity(T.oplus(F.on_obj(a), F.on_obj(b))), unit, True)


def identity_functor(P: PermutativeCat) -> SymMonFunctor:
    return strict_functor(FunctorData(P, P, lambda a: a, lambda f: f, name=f"id_{P.name}"))


def check_symmon_functor(F: SymMonFunctor, bound: Bound, objs=None, mors=None) -> Report:
    S, T = F.source, F.target
    Fo, Fm, eta = F.functor.on_obj, F.functor.on_mor, F.eta
    rep = Report(f"symmetric monoidal functor {F.functor.name}")
    objs, mors = _samples(S, bound, objs, mors)
    rng = random.Random(bound.seed)
    cap = bound.samples
    meq = T.mor_eq

    for a, b in sample_product([objs] * 2, cap, rng, rep):
        e = eta(a, b)
        if not rep.expect(T.obj_eq(T.dom(e), T.oplus(Fo(a), Fo(b))) and T.obj_eq(T.cod(e), Fo(S.oplus(a, b))),
                          "eta-endpoints", lambda: f"η⊕ has wrong endpoints at {(a, b)!r}"):
            continue
        lhs = guarded(rep, "twist", lambda: T.compose(Fm(S.twist(a, b)), e))
        rhs = guarded(rep, "twist", lambda: T.compose(eta(b, a), T.twist(Fo(a), Fo(b))))
        if lhs is not None and rhs is not None:
            rep.expect(meq(lhs, rhs), "twist", lambda: f"F(γ)∘η != η∘γ at {(a, b)!r}")
        if F.strict:
            rep.expect(T.obj_eq(Fo(S.oplus(a, b)), T.oplus(Fo(a), Fo(b))) and meq(e, T.identity(T.dom(e))),
                       "strict", lambda: f"F is not strict at {(a, b)!r}")

    for a, b, c in sample_product([objs] * 3, cap, rng, rep):
        lhs = guarded(rep, "associativity", lambda: T.compose(eta(S.oplus(a, b), c), T.oplus_mor(eta(a, b), T.identity(Fo(c)))))
        rhs = guarded(rep, "associativity", lambda: T.compose(eta(a, S.oplus(b, c)), T.oplus_mor(T.identity(Fo(a)), eta(b, c))))
        if lhs is not None and rhs is not None:
            rep.expect(meq(lhs, rhs), "associativity", lambda: f"η associativity fails at {(a, b, c)!r}")

    if not S.zeroless and F.unit_mor is not None:
        u = F.unit_mor
        for a in objs:
            got = guarded(rep, "unit", lambda: T.compose(eta(S.zero, a), T.oplus_mor(u, T.identity(Fo(a)))))
            if got is not None:
                rep.expect(meq(got, T.identity(Fo(a))), "unit", lambda: f"unit coherence fails at {a!r}")
        if F.strict:
            rep.expect(T.obj_eq(Fo(S.zero), T.zero) and meq(u, T.identity(T.zero)), "strict", "F(0) != 0")

    for f, g in sample_product([mors] * 2, cap, rng, rep):
        a, b, a2, b2 = S.dom(f), S.dom(g), S.cod(f), S.cod(g)
        lhs = guarded(rep, "binaturality", lambda: T.compose(Fm(S.oplus_mor(f, g)), eta(a, b)))
        rhs = guarded(rep, "binaturality", lambda: T.compose(eta(a2, b2), T.oplus_mor(Fm(f), Fm(g))))
        if lhs is not None and rhs is not None:
            rep.expect(meq(lhs, rhs), "binaturality", lambda: f"η⊕ is not natural at {(f, g)!r}")
    return rep


class ProductCat(PermutativeCat):
    """Componentwise structure on pairs."""

    def __init__(self, P1: PermutativeCat, P2: PermutativeCat):
        self.P1, self.P2 = P1, P2
        self.name = f"{P1.name}×{P2.name}"
        self.zero = None if P1.zeroless or P2.zeroless else (P1.zero, P2.zero)

    def dom(self, f):
        return (self.P1.dom(f[0]), self.P2.dom(f[1]))

    def cod(self, f):
        return (self.P1.cod(f[0]), self.P2.cod(f[1]))

    def identity(self, a):
        return (self.P1.identity(a[0]), self.P2.identity(a[1]))

    def _compose(self, g, f):
        return (self.P1.compose(g[0], f[0]), self.P2.compose(g[1], f[1]))

    def obj_eq(self, a, b):
        return self.P1.obj_eq(a[0], b[0]) and self.P2.obj_eq(a[1], b[1])

    def mor_eq(self, f, g):
        return self.P1.mor_eq(f[0], g[0]) and self.P2.mor_eq(f[1], g[1])

    def objects(self, bound):
        return [(a, b) for a in self.P1.objects(bound) for b in self.P2.objects(bound)]

    def homs(self, a, b, bound):
        return [(f, g) for f in self.P1.homs(a[0], b[0], bound) for g in self.P2.homs(a[1], b[1], bound)]

    def out_homs(self, a, bound):
        return [(f, g) for f in self.P1.out_homs(a[0], bound) for g in self.P2.out_homs(a[1], bound)]

    def oplus(self, a, b):
        return (self.P1.oplus(a[0], b[0]), self.P2.oplus(a[1], b[1]))

    def oplus_mor(self, f, g):
        return (self.P1.oplus_mor(f[0], g[0]), self.P2.oplus_mor(f[1], g[1]))

    def twist(self, a, b):
        return (self.P1.twist(a[0], b[0]), self.P2.twist(a[1], b[1]))


def product_cat(P1: PermutativeCat, P2: PermutativeCat) -> ProductCat:
    return ProductCat(P1, P2)


class DiscreteMonoid(PermutativeCat):
    """A commutative monoid viewed as a category with identities only.

    Morphisms are ``("id", a)``.
    """

    def __init__(self, elements, op: Callable, zero, name: str = "monoid"):
        self.elements = list(elements)
        self.op = op
        self.zero = zero
        self.name = name

    def dom(self, f):
        return f[1]

    cod = dom

    def identity(self, a):
        return ("id", a)

    def _compose(self, g, f):
        return g

    def objects(self, bound):
        return list(self.elements)

    def homs(self, a, b, bound):
        return [("id", a)] if a == b else []

    def out_homs(self, a, bound):
        return [("id", a)]

    def oplus(self, a, b):
        return self.op(a, b)

    def oplus_mor(self, f, g):
        return ("id", self.op(f[1], g[1]))

    def twist(self, a, b):
        return ("id", self.op(a, b))


ZERO_OBJ = "•"


def zero_cat() -> DiscreteMonoid:
    """The terminal permutative category: one object, one morphism."""
    return DiscreteMonoid([ZERO_OBJ], lambda a, b: ZERO_OBJ, ZERO_OBJ, name="0")
