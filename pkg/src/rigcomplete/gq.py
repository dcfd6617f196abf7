"""Quillen's construction ``G𝓜 = 𝓜⁻¹𝓜`` for a groupoid ``𝓜`` and the
comparison functor out of the homotopy colimit over ``Q1``.

An object is a pair ``(a, b)``, read as the formal difference ``a - b``.  A
morphism ``(a, b) -> (c, d)`` is a class ``[x, f, g]`` with
``f: x ⊕ a -> c`` and ``g: x ⊕ b -> d``, where ``(x, f, g)`` and
``(x, f(α ⊕ 1), g(α ⊕ 1))`` agree for every automorphism ``α`` of ``x``.
``M`` must be skeletal, so an iso class of ``x`` is a single object and
the orbit is the ``Aut(x)``-orbit; the stored triple is the orbit minimum.
"""

from __future__ import annotations

from dataclasses import dataclass

from .biperm import BipermutativeCat
from .cube import CubeObj, GDiagram
from .effcat import Bound, FunctorData, Report, StructureError, cached_hash, check_functor, encode, guarded
from .indexing import Perm, Q1Index
from .permcat import PermutativeCat
from .thomason import HMor, HObj, Hocolim, _fibers


@dataclass(frozen=True)
class GQObj:
    pos: object
    neg: object

    def __hash__(self):
        return cached_hash(self, (self.pos, self.neg))

    def to_json(self) -> dict:
        return {"pos": encode(self.pos), "neg": encode(self.neg)}

    def __repr__(self):
        return f"({self.pos!r},{self.neg!r})"


@dataclass(frozen=True)
class GQMor:
    x: object
    f: object
    g: object
    src: GQObj
    tgt: GQObj

    def __hash__(self):
        return cached_hash(self, (self.x, self.f, self.g, self.src, self.tgt))

    def to_json(self) -> dict:
        return {"x": encode(self.x), "f": encode(self.f), "g": encode(self.g),
                "from": self.src.to_json(), "to": self.tgt.to_json()}

    def __repr__(self):
        return f"[{self.x!r}, {self.f!r}, {self.g!r}]"


def _key(*ms) -> list:
    return [encode(m) for m in ms]


class GQ(PermutativeCat):
    """``M⁻¹M`` with componentwise sum; bounded by the sizes of both
    components."""

    def __init__(self, M: PermutativeCat):
        if M.zeroless:
            raise StructureError(f"{M.name} needs a zero for the group completion")
        self.M = M
        self.name = f"GQ({M.name})"
        self.zero = GQObj(M.zero, M.zero)
        self._auts: dict = {}
        self._canon: dict = {}

    def auts(self, x) -> list:
        hit = self._auts.get(x)
        if hit is None:
            hit = self._auts[x] = self.M.homs(x, x, None)
        return hit

    def make(self, x, f, g, src: GQObj, tgt: GQObj) -> GQMor:
        """The class of ``(x, f, g)``, after checking endpoints."""
        M = self.M
        if not (M.obj_eq(M.dom(f), M.oplus(x, src.pos)) and M.obj_eq(M.cod(f), tgt.pos)):
            raise StructureError(f"{f!r} is not a morphism {x!r} ⊕ {src.pos!r} -> {tgt.pos!r}")
        if not (M.obj_eq(M.dom(g), M.oplus(x, src.neg)) and M.obj_eq(M.cod(g), tgt.neg)):
            raise StructureError(f"{g!r} is not a morphism {x!r} ⊕ {src.neg!r} -> {tgt.neg!r}")
        memo = (x, f, g, src, tgt)
        hit = self._canon.get(memo)
        if hit is not None:
            return hit
        ia, ib = M.identity(src.pos), M.identity(src.neg)
        best = None
        auts = self.auts(x)
        if isinstance(f, Perm) and isinstance(x, int):
            # the orbit minimum sorts the images of the x block
            order = sorted(range(x), key=lambda i: f.images[i])
            auts = [Perm([i + 1 for i in order])]
        for alpha in auts:
            f2 = M.compose(f, M.oplus_mor(alpha, ia))
            g2 = M.compose(g, M.oplus_mor(alpha, ib))
            k = _key(f2, g2)
            if best is None or k < best[0]:
                best = (k, f2, g2)
        out = self._canon[memo] = GQMor(x, best[1], best[2], src, tgt)
        return out

    def dom(self, h):
        return h.src

    def cod(self, h):
        return h.tgt

    def identity(self, a):
        M = self.M
        return GQMor(M.zero, M.identity(a.pos), M.identity(a.neg), a, a)

    def _compose(self, k, h):
        M = self.M
        y = k.x
        f = M.compose(k.f, M.oplus_mor(M.identity(y), h.f))
        g = M.compose(k.g, M.oplus_mor(M.identity(y), h.g))
        return self.make(M.oplus(y, h.x), f, g, h.src, k.tgt)

    def oplus(self, a, b):
        return GQObj(self.M.oplus(a.pos, b.pos), self.M.oplus(a.neg, b.neg))

    def _middle(self, x, x2, a, a2):
        """``x ⊕ x2 ⊕ a ⊕ a2 -> x ⊕ a ⊕ x2 ⊕ a2``."""
        M = self.M
        return M.sum_mor([M.identity(x), M.twist(x2, a), M.identity(a2)])

    def oplus_mor(self, h, k):
        M = self.M
        f = M.compose(M.oplus_mor(h.f, k.f), self._middle(h.x, k.x, h.src.pos, k.src.pos))
        g = M.compose(M.oplus_mor(h.g, k.g), self._middle(h.x, k.x, h.src.neg, k.src.neg))
        return self.make(M.oplus(h.x, k.x), f, g, self.oplus(h.src, k.src), self.oplus(h.tgt, k.tgt))

    def twist(self, a, b):
        M = self.M
        return GQMor(M.zero, M.twist(a.pos, b.pos), M.twist(a.neg, b.neg), self.oplus(a, b), self.oplus(b, a))

    # enumeration
    def objects(self, bound):
        base = self.M.objects(bound)
        return [GQObj(p, q) for p in base for q in base]

    def in_bound(self, a, bound):
        return self.M.in_bound(a.pos, bound) and self.M.in_bound(a.neg, bound)

    def homs(self, a, b, bound):
        M = self.M
        seen: dict = {}
        for x in M.objects(bound):
            for f in M.homs(M.oplus(x, a.pos), b.pos, bound):
                for g in M.homs(M.oplus(x, a.neg), b.neg, bound):
                    seen[self.make(x, f, g, a, b)] = None
        return list(seen)

    def out_homs(self, a, bound):
        return [h for b in self.out_targets(a, bound) for h in self.homs(a, b, bound)]

    def out_targets(self, a, bound):
        M = self.M
        seen: dict = {}
        for x in M.objects(bound):
            for c in M.out_targets(M.oplus(x, a.pos), bound):
                for d in M.out_targets(M.oplus(x, a.neg), bound):
                    t = GQObj(c, d)
                    if self.in_bound(t, bound):
                        seen[t] = None
        return list(seen)

    def sample_out(self, a, rng, bound):
        M = self.M
        xs = [x for x in M.objects(bound)
              if M.in_bound(M.oplus(x, a.pos), bound) and M.in_bound(M.oplus(x, a.neg), bound)]
        x = rng.choice(xs)
        f = M.sample_out(M.oplus(x, a.pos), rng, bound)
        g = M.sample_out(M.oplus(x, a.neg), rng, bound)
        return self.make(x, f, g, a, GQObj(M.cod(f), M.cod(g)))

    # the M-module structure
    def act(self, m, a: GQObj) -> GQObj:
        R = self.M
        return GQObj(R.tensor(m, a.pos), R.tensor(m, a.neg))

    def act_mor(self, m, h: GQMor) -> GQMor:
        """``m · [x, f, g] = [m x, (1 ⊗ f) d_ℓ, (1 ⊗ g) d_ℓ]``."""
        R = self.M
        im = R.identity(m)
        f = R.compose(R.tensor_mor(im, h.f), R.d_left(m, [h.x, h.src.pos]))
        g = R.compose(R.tensor_mor(im, h.g), R.d_left(m, [h.x, h.src.neg]))
        return self.make(R.tensor(m, h.x), f, g, self.act(m, h.src), self.act(m, h.tgt))


def gq_build(M: PermutativeCat, bound: Bound) -> GQ:
    """``GQ(M)`` after checking, on enumerated data, that ``M`` is a
    skeletal groupoid."""
    for a in M.objects(bound):
        for b in M.objects(bound):
            hs = M.homs(a, b, bound)
            back = M.homs(b, a, bound)
            for f in hs:
                if not any(M.mor_eq(M.compose(g, f), M.identity(a)) for g in back):
                    raise StructureError(f"{M.name} is not a groupoid: {f!r} has no inverse")
            if hs and a != b:
                raise StructureError(f"{M.name} is not skeletal: {a!r} ≅ {b!r}")
    return GQ(M)


# comparison with the homotopy colimit over Q1

def q1_hocolim(M: PermutativeCat, validate: bool = True) -> Hocolim:
    return Hocolim(GDiagram(M, index=Q1Index()), validate=validate)


def _term_image(M, y, X: CubeObj) -> GQObj:
    if y.T == (1,):
        return GQObj(X.entries[0], X.entries[1])
    return GQObj(M.zero, M.zero)


def gq_compare(H: Hocolim, Q: GQ) -> FunctorData:
    """The functor ``hocolim_{Q1} G𝓜 -> GQ(M)``.

    ``1[∅, a]`` and ``1[{-1}, 0]`` go to ``(0, 0)`` and ``1[{1}, (a, b)]``
    to ``(a, b)``; sums go to sums.  On a morphism the source terms are
    first regrouped by target, then each block over ``{1}`` becomes
    ``[x, ϱ_∅ π, ϱ_{1} π]`` where ``x`` collects the terms coming from
    ``∅`` and ``π`` interleaves the summands back into source order.
    """
    M = Q.M

    def on_obj(h: HObj) -> GQObj:
        return Q.sum([_term_image(M, y, X) for y, X in h.terms])

    def block(F: HMor, j: int, fib: list) -> GQMor:
        y, Y = F.tgt.terms[j]
        src = Q.sum([_term_image(M, *F.src.terms[i - 1]) for i in fib])
        tgt = _term_image(M, y, Y)
        if y.T != (1,):
            return Q.identity(tgt)
        lo = [i for i in fib if F.src.terms[i - 1][0].T == ()]
        hi = [i for i in fib if F.src.terms[i - 1][0].T == (1,)]
        listed = lo + hi
        order = [listed.index(i) for i in fib]
        x = M.sum([F.src.terms[i - 1][1].entries[0] for i in lo])
        parts = []
        for side in (0, 1):
            ents = [F.src.terms[i - 1][1].entries[0 if i in lo else side] for i in listed]
            perm = M.permute_summands(ents, order)
            parts.append(M.compose(F.rho[j].entries[side], perm))
        return Q.make(x, parts[0], parts[1], src, tgt)

    def on_mor(F: HMor) -> GQMor:
        m = F.tgt.n
        fibs = _fibers(F.psi, m)
        imgs = [_term_image(M, y, X) for y, X in F.src.terms]
        reorder = Q.permute_summands(imgs, [i - 1 for fib in fibs for i in fib])
        return Q.compose(Q.sum_mor([block(F, j, fib) for j, fib in enumerate(fibs)]), reorder)

    return FunctorData(H, Q, on_obj, on_mor, name="compare")


def h_act(H: Hocolim, m, h: HObj) -> HObj:
    """``G(m) ⊗ h`` for ``h`` over ``Q1``: entrywise ``m ⊗ X_U``."""
    R = H.D.M
    return HObj(tuple((y, X if X.entries is None else CubeObj(y, tuple(R.tensor(m, e) for e in X.entries)))
                      for y, X in h.terms))


def h_act_mor(H: Hocolim, m, F: HMor) -> HMor:
    """``id_{G(m)} ⊗ F``; the index data is unchanged and
    ``ϱ_j`` becomes ``(1 ⊗ ϱ_j) d_ℓ`` entrywise."""
    R = H.D.M
    D = H.D
    im = R.identity(m)
    rho = []
    for j, fib in enumerate(_fibers(F.psi, F.tgt.n)):
        y = F.tgt.terms[j][0]
        r = F.rho[j]
        if r.entries is None:
            rho.append(r)
            continue
        parts = [D.transition(F.ell[i - 1], F.src.terms[i - 1][1]) for i in fib]
        ents = tuple(R.compose(R.tensor_mor(im, e), R.d_left(m, [p.entries[u] for p in parts]))
                     for u, e in enumerate(r.entries))
        rho.append(type(r)(y, ents))
    return HMor(F.psi, F.ell, tuple(rho), h_act(H, m, F.src), h_act(H, m, F.tgt))


def module_iso(H: Hocolim, Q: GQ, C: FunctorData, m):
    """``compare(G(m) ⊗ h) -> m · compare(h)``, which is ``[0, d_ℓ, d_ℓ]``
    on the images of the terms; the action on GQ is additive only up to
    this iso."""
    R = Q.M

    def eta(h: HObj) -> GQMor:
        imgs = [_term_image(R, y, X) for y, X in h.terms]
        f = R.d_left(m, [i.pos for i in imgs])
        g = R.d_left(m, [i.neg for i in imgs])
        return Q.make(R.zero, f, g, C.on_obj(h_act(H, m, h)), Q.act(m, C.on_obj(h)))

    return eta


def check_gq(M: PermutativeCat, bound: Bound, mor_bounds=None, samples: int = 0, seed: int = 0,
             stable_check: bool = True) -> Report:
    """The comparison on enumerated data.

    ``bound`` limits the hocolim objects for the π0 comparison; their
    classes are computed one length further, and the target side uses
    sizes up to ``length * size`` so every image is enumerated.
    Hocolim objects whose image falls outside that enumeration are skipped
    and counted.  Functoriality and the module check run over every
    composable pair of morphisms within each of ``mor_bounds``, and over
    ``samples`` random composites at ``bound`` one length further.
    """
    import random

    from .pi0 import pi0

    rep = Report(f"comparison with GQ({M.name})")
    if mor_bounds is None:
        mor_bounds = [bound]
    elif isinstance(mor_bounds, Bound):
        mor_bounds = [mor_bounds]
    Q = guarded(rep, "groupoid", lambda: gq_build(M, bound))
    if Q is None:
        return rep
    H = q1_hocolim(M)
    C = gq_compare(H, Q)

    for mb in mor_bounds:
        mors = [F for a in H.objects(mb) for F in H.out_homs(a, mb)]
        sub = guarded(rep, "functor", lambda: check_functor(C, mb, mors))
        if sub is not None:
            for v in sub.violations:
                rep.fail("functor", f"{v.condition}: {v.message}")
            rep.tick("functor", sum(sub.counts.values()))
        if isinstance(M, BipermutativeCat):
            for m in M.objects(mb):
                eta = module_iso(H, Q, C, m)
                for F in mors:
                    lhs = guarded(rep, "module", lambda: Q.compose(eta(F.tgt), C.on_mor(h_act_mor(H, m, F))))
                    rhs = guarded(rep, "module", lambda: Q.compose(Q.act_mor(m, C.on_mor(F)), eta(F.src)))
                    if lhs is not None and rhs is not None:
                        rep.expect(lhs == rhs, "module", lambda: f"the module iso is not natural at m={m!r}, F={F!r}")

    rng = random.Random(seed)
    sb = bound.but(length=bound.length + 1)
    for _ in range(samples):
        chain = guarded(rep, "functor-sampled", lambda: H.random_chain(rng, sb, 2))
        if chain is None:
            continue
        f, g = chain
        lhs = guarded(rep, "functor-sampled", lambda: C.on_mor(H.compose(g, f)))
        rhs = guarded(rep, "functor-sampled", lambda: Q.compose(C.on_mor(g), C.on_mor(f)))
        if lhs is not None and rhs is not None:
            rep.expect(lhs == rhs, "functor-sampled", lambda: f"compare(g f) != compare(g) compare(f) at {(f, g)!r}")

    # two terms of the same class may only meet through a longer object
    qb = bound.but(size=bound.size * max(bound.length, 1))
    Ph, Pq = pi0(H, bound.but(length=bound.length + 1)), pi0(Q, qb)
    if stable_check:
        Ph2 = pi0(H, bound.but(length=bound.length + 2))
        small = H.objects(bound)
        pairs = {(Ph.cls(a), Ph2.cls(a)) for a in small}
        rep.expect(len(pairs) == len({p[0] for p in pairs}) == len({p[1] for p in pairs}), "pi0-stable",
                   "the partition of the compared objects changes one length further")
    image: dict = {}
    skipped = 0
    for a in H.objects(bound):
        img = C.on_obj(a)
        if not Q.in_bound(img, qb):
            skipped += 1
            continue
        image.setdefault(Ph.cls(a), set()).add(Pq.cls(img))
    rep.tick("pi0-outside-target", skipped)
    for k, cs in image.items():
        rep.expect(len(cs) == 1, "pi0-well-defined", lambda: f"class {k} lands in {len(cs)} classes")
    hit: dict = {}
    for k, cs in image.items():
        for c in cs:
            hit.setdefault(c, set()).add(k)
    for c, ks in hit.items():
        rep.expect(len(ks) == 1, "pi0-injective", lambda: f"{len(ks)} hocolim classes map to class {c}")
    missed = set(Pq.classes()) - set(hit)
    rep.expect(not missed, "pi0-surjective", lambda: f"{len(missed)} classes of GQ are missed")
    rep.tick("pi0-surjective", len(Pq.classes()))
    return rep
