"""Thomason's homotopy colimit of a diagram of permutative categories.

An object ``n[(x_1, X_1), ..., (x_n, X_n)]`` is a nonempty sequence of
pairs with ``X_i`` in the fiber over ``x_i``.  A morphism ``(ψ, ℓ, ϱ)`` has a
surjection ``ψ: n -> m``, index morphisms ``ℓ_i: x_i -> y_ψ(i)`` and fiber
morphisms ``ϱ_j: ⊕_{ψ(i)=j} C(ℓ_i)(X_i) -> Y_j`` with summands in
increasing ``i``.

For a graded bipermutative diagram the homotopy colimit is a zeroless
bipermutative category; the product of morphisms is defined as
``(f ⊗ id) ∘ (id ⊗ g)`` and the other order is tested, not assumed.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .biperm import BipermutativeCat, LaxRigMorphism, ZeroGraded
from .effcat import Bound, Report, ResourceError, StructureError, cached_hash, encode, guarded
from .indexing import regroup_perm, shuffle_chi, transpose_perm


@dataclass(frozen=True)
class HObj:
    terms: tuple

    def __hash__(self):
        return cached_hash(self, (self.terms,))

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(tuple(t) for t in self.terms))
        if not self.terms:
            raise StructureError("a homotopy colimit object needs at least one term")

    @property
    def n(self) -> int:
        return len(self.terms)

    def to_json(self) -> dict:
        return {"n": self.n, "terms": [{"x": encode(x), "X": encode(X)} for x, X in self.terms]}

    def __repr__(self):
        return f"{self.n}[" + ", ".join(f"({x!r},{X!r})" for x, X in self.terms) + "]"


@dataclass(frozen=True)
class HMor:
    psi: tuple
    ell: tuple
    rho: tuple
    src: HObj
    tgt: HObj

    def __hash__(self):
        return cached_hash(self, (self.psi, self.ell, self.rho, self.src, self.tgt))

    def to_json(self) -> dict:
        return {"psi": list(self.psi), "ell": [encode(k) for k in self.ell],
                "rho": [encode(r) for r in self.rho], "from": self.src.to_json(), "to": self.tgt.to_json()}

    def __repr__(self):
        return f"({list(self.psi)}, {list(self.ell)}, {list(self.rho)})"


def surjections(n: int, m: int) -> Iterator[tuple]:
    for psi in itertools.product(range(1, m + 1), repeat=n):
        if len(set(psi)) == m:
            yield psi


def _fibers(psi: Sequence[int], m: int) -> list[list[int]]:
    out: list = [[] for _ in range(m)]
    for i, j in enumerate(psi, 1):
        out[j - 1].append(i)
    return out


class Hocolim(BipermutativeCat):
    """``hocolim_J C`` for a diagram ``D`` exposing ``index``, ``fiber``,
    ``transition`` and ``transition_mor``; the product structure is
    available when ``D`` is graded bimonoidal."""

    zero = None

    def __init__(self, D, validate: bool = True):
        self.D = D
        self.J = D.index
        self.validate = validate
        self.name = f"hocolim {D.name}"
        self.has_gamma = getattr(D, "has_gamma", False)
        self.one = HObj(((self.J.zero, D.one),)) if getattr(D, "one", None) is not None else None
        self._fiber_objs: dict = {}
        self._blocks: dict = {}

    # category structure
    def dom(self, f):
        return f.src

    def cod(self, f):
        return f.tgt

    def identity(self, a):
        D, J = self.D, self.J
        return HMor(tuple(range(1, a.n + 1)), tuple(J.identity(x) for x, _ in a.terms),
                    tuple(D.fiber(x).identity(X) for x, X in a.terms), a, a)

    def source_of(self, psi, ell, src: HObj, j: int):
        """``⊕_{ψ(i)=j} C(ℓ_i)(X_i)``, the domain of ``ϱ_j``."""
        D = self.D
        y = self.J.cod(ell[[i for i, p in enumerate(psi) if p == j][0]])
        parts = [D.transition(ell[i], src.terms[i][1]) for i, p in enumerate(psi) if p == j]
        return D.fiber(y).sum(parts)

    def make(self, psi, ell, rho, src: HObj) -> HMor:
        """Assemble a morphism, reading the target off ``ℓ`` and ``ϱ``."""
        D, J = self.D, self.J
        m = len(rho)
        ys = [None] * m
        for i, j in enumerate(psi):
            ys[j - 1] = J.cod(ell[i])
        tgt = HObj(tuple((ys[j], D.fiber(ys[j]).cod(rho[j])) for j in range(m)))
        f = HMor(tuple(psi), tuple(ell), tuple(rho), src, tgt)
        if self.validate:
            self.check_mor(f)
        return f

    def check_mor(self, f: HMor) -> None:
        D, J = self.D, self.J
        n, m = f.src.n, f.tgt.n
        if len(f.psi) != n or len(f.ell) != n or len(f.rho) != m or set(f.psi) != set(range(1, m + 1)):
            raise StructureError(f"ψ is not a surjection {n} -> {m}: {f!r}")
        for i, (x, _) in enumerate(f.src.terms):
            y = f.tgt.terms[f.psi[i] - 1][0]
            if J.dom(f.ell[i]) != x or J.cod(f.ell[i]) != y:
                raise StructureError(f"ℓ_{i + 1} is not a morphism {x!r} -> {y!r}")
        for j, (y, Y) in enumerate(f.tgt.terms, 1):
            F = D.fiber(y)
            if F.dom(f.rho[j - 1]) != self.source_of(f.psi, f.ell, f.src, j) or F.cod(f.rho[j - 1]) != Y:
                raise StructureError(f"ϱ_{j} has the wrong endpoints in {f!r}")

    def _compose(self, g, f):
        D, J = self.D, self.J
        n, m, p = f.src.n, f.tgt.n, g.tgt.n
        psi = tuple(g.psi[f.psi[i] - 1] for i in range(n))
        ell = tuple(J.compose(g.ell[f.psi[i] - 1], f.ell[i]) for i in range(n))
        fib_f = _fibers(f.psi, m)
        rho = []
        for r in range(1, p + 1):
            ks = [k for k in range(1, m + 1) if g.psi[k - 1] == r]
            F = D.fiber(g.tgt.terms[r - 1][0])
            src_is = [i for i in range(1, n + 1) if psi[i - 1] == r]
            objs = [D.transition(ell[i - 1], f.src.terms[i - 1][1]) for i in src_is]
            pos = {i: q for q, i in enumerate(src_is)}
            # regroup by (k, i), order preserving inside each fiber of ψ
            order = [pos[i] for k in ks for i in fib_f[k - 1]]
            sigma = F.permute_summands(objs, order)
            mid = F.sum_mor([D.transition_mor(g.ell[k - 1], f.rho[k - 1]) for k in ks])
            rho.append(F.compose(g.rho[r - 1], F.compose(mid, sigma)))
        return HMor(psi, ell, tuple(rho), f.src, g.tgt)

    # additive structure
    def oplus(self, a, b):
        return HObj(a.terms + b.terms)

    def oplus_mor(self, f, g):
        m = f.tgt.n
        return HMor(f.psi + tuple(m + j for j in g.psi), f.ell + g.ell, f.rho + g.rho,
                    self.oplus(f.src, g.src), self.oplus(f.tgt, g.tgt))

    def reorder(self, a: HObj, perm) -> HMor:
        """``(π, id, id)`` from ``a`` to the object whose term ``π(i)`` is
        the ``i``-th term of ``a``."""
        terms = [None] * a.n
        for i, t in enumerate(a.terms, 1):
            terms[perm(i) - 1] = t
        b = HObj(tuple(terms))
        D, J = self.D, self.J
        return HMor(tuple(perm.images), tuple(J.identity(x) for x, _ in a.terms),
                    tuple(D.fiber(y).identity(Y) for y, Y in b.terms), a, b)

    def twist(self, a, b):
        return self.reorder(self.oplus(a, b), shuffle_chi(a.n, b.n))

    # multiplicative structure
    def tensor(self, a, b):
        J, D = self.J, self.D
        return HObj(tuple((J.oplus(x, y), D.tensor(X, Y)) for x, X in a.terms for y, Y in b.terms))

    def tensor_left(self, f: HMor, b: HObj) -> HMor:
        """``f ⊗ id_b``: ``ϱ_(k,j) = ϱ_k ⊗ id`` after the identity ``d_r``."""
        J, D = self.J, self.D
        m = b.n
        psi = tuple((f.psi[i] - 1) * m + j for i in range(f.src.n) for j in range(1, m + 1))
        ell = tuple(J.oplus_mor(f.ell[i], J.identity(y)) for i in range(f.src.n) for y, _ in b.terms)
        rho = tuple(D.tensor_mor(f.rho[k], D.fiber(y).identity(Y)) for k in range(f.tgt.n) for y, Y in b.terms)
        return HMor(psi, ell, rho, self.tensor(f.src, b), self.tensor(f.tgt, b))

    def tensor_right(self, a: HObj, g: HMor) -> HMor:
        """``id_a ⊗ g``: ``ϱ_(i,l) = (id ⊗ π_l) ∘ d_ℓ``."""
        J, D = self.J, self.D
        m, m2 = g.src.n, g.tgt.n
        fib = _fibers(g.psi, m2)
        psi = tuple((i - 1) * m2 + g.psi[j] for i in range(1, a.n + 1) for j in range(m))
        ell = tuple(J.oplus_mor(J.identity(x), g.ell[j]) for x, _ in a.terms for j in range(m))
        rho = []
        for x, X in a.terms:
            idX = D.fiber(x).identity(X)
            for l in range(1, m2 + 1):
                parts = [D.transition(g.ell[j - 1], g.src.terms[j - 1][1]) for j in fib[l - 1]]
                d = D.d_left(X, parts)
                rho.append(D.comp(D.tensor_mor(idX, g.rho[l - 1]), d))
        return HMor(psi, ell, tuple(rho), self.tensor(a, g.src), self.tensor(a, g.tgt))

    def tensor_mor(self, f, g):
        return self.compose(self.tensor_left(f, g.tgt), self.tensor_right(f.src, g))

    def gamma(self, a, b):
        """``τ⊗ = (σ, id, id) ∘ (id, χ^{x_i,y_j}, C(χ)γ⊗)``."""
        if not self.has_gamma:
            raise StructureError(f"{self.D.name} has no product twist")
        J, D = self.J, self.D
        n, m = a.n, b.n
        ell, rho, terms = [], [], []
        for x, X in a.terms:
            for y, Y in b.terms:
                c = J.twist(x, y)
                ell.append(c)
                rho.append(D.transition_mor(c, D.gamma(X, Y)))
                terms.append((J.oplus(y, x), D.tensor(Y, X)))
        mid = HObj(tuple(terms))
        step = HMor(tuple(range(1, n * m + 1)), tuple(ell), tuple(rho), self.tensor(a, b), mid)
        return self.compose(self.reorder(mid, transpose_perm(n, m)), step)

    def d_left(self, a, bs):
        bs = list(bs)
        src = self.sum([self.tensor(a, b) for b in bs])
        return self.reorder(src, regroup_perm(a.n, [b.n for b in bs]))

    # enumeration
    def _pairs(self, bound: Bound) -> list:
        key = (bound.index, bound.size)
        if key not in self._fiber_objs:
            out = []
            for x in self.J.objects(bound):
                for X in self.D.fiber(x).objects(bound):
                    out.append((x, X))
            self._fiber_objs[key] = out
        return self._fiber_objs[key]

    def objects(self, bound):
        pairs = self._pairs(bound)
        out = []
        for L in range(1, bound.length + 1):
            if len(pairs) ** L + len(out) > bound.budget:
                raise ResourceError(f"{len(pairs)}^{L} objects of {self.name}", bound)
            out.extend(HObj(t) for t in itertools.product(pairs, repeat=L))
        return out

    def in_bound(self, a, bound):
        J, D = self.J, self.D
        return a.n <= bound.length and all(J.in_bound(x, bound) and D.fiber(x).in_bound(X, bound) for x, X in a.terms)

    def _shapes(self, a: HObj, bound: Bound):
        """Yield ``(ψ, ℓ, sources)`` for every surjection and every choice
        of index morphisms into bounded targets."""
        J, D = self.J, self.D
        jobs = J.objects(bound)
        for m in range(1, a.n + 1):
            for psi in surjections(a.n, m):
                fib = _fibers(psi, m)
                per_j = []
                for j in range(m):
                    opts = []
                    for y in jobs:
                        pools = [J.homs(a.terms[i - 1][0], y, bound) for i in fib[j]]
                        for ls in itertools.product(*pools):
                            opts.append((y, ls))
                    per_j.append(opts)
                for choice in itertools.product(*per_j):
                    ell = [None] * a.n
                    for j, (y, ls) in enumerate(choice):
                        for i, l in zip(fib[j], ls):
                            ell[i - 1] = l
                    srcs = [D.fiber(y).sum([D.transition(ell[i - 1], a.terms[i - 1][1]) for i in fib[j]])
                            for j, (y, _) in enumerate(choice)]
                    yield psi, tuple(ell), [y for y, _ in choice], srcs

    def out_homs(self, a, bound):
        D = self.D
        out = []
        for psi, ell, ys, srcs in self._shapes(a, bound):
            pools = []
            for y, s in zip(ys, srcs):
                F = D.fiber(y)
                pools.append([r for t in F.out_targets(s, bound) if F.in_bound(t, bound)
                              for r in F.homs(s, t, bound)])
            for rho in itertools.product(*pools):
                tgt = HObj(tuple((y, D.fiber(y).cod(r)) for y, r in zip(ys, rho)))
                out.append(HMor(psi, ell, tuple(rho), a, tgt))
                if len(out) > bound.budget:
                    raise ResourceError(f"morphisms out of {a!r}", bound)
        return out

    def _block_targets(self, block: tuple, bound: Bound) -> list:
        """Every ``(y, Y)`` reachable from the terms ``block`` merged into
        one target term."""
        key = (block, bound)
        hit = self._blocks.get(key)
        if hit is not None:
            return hit
        J, D = self.J, self.D
        opts: dict = {}
        for y in J.objects(bound):
            F = D.fiber(y)
            pools = [J.homs(x, y, bound) for x, _ in block]
            for ls in itertools.product(*pools):
                s = F.sum([D.transition(l, X) for l, (_, X) in zip(ls, block)])
                for t in F.out_targets(s, bound):
                    if F.in_bound(t, bound):
                        opts[(y, t)] = None
        out = self._blocks[key] = list(opts)
        return out

    def out_targets(self, a, bound):
        seen: dict = {}
        for m in range(1, a.n + 1):
            for psi in surjections(a.n, m):
                per_j = [self._block_targets(tuple(a.terms[i - 1] for i in fib), bound)
                         for fib in _fibers(psi, m)]
                for choice in itertools.product(*per_j):
                    seen[HObj(choice)] = None
                    if len(seen) > bound.budget:
                        raise ResourceError(f"targets out of {a!r}", bound)
        return list(seen)

    # random sampling
    def random_obj(self, rng: random.Random, bound: Bound, length: int | None = None) -> HObj:
        pairs = self._pairs(bound)
        L = length if length is not None else rng.randint(1, bound.length)
        return HObj(tuple(rng.choice(pairs) for _ in range(L)))

    def sample_out(self, a, rng, bound, tries: int = 50):
        J, D = self.J, self.D
        jobs = J.objects(bound)
        for _ in range(tries):
            m = rng.randint(1, a.n)
            psi = [rng.randint(1, m) for _ in range(a.n)]
            missing = set(range(1, m + 1)) - set(psi)
            if missing:
                slots = rng.sample(range(a.n), a.n)
                for j, i in zip(sorted(missing), slots):
                    psi[i] = j
                if set(psi) != set(range(1, m + 1)):
                    continue
            fib = _fibers(psi, m)
            ell = [None] * a.n
            ok = True
            for j in range(m):
                cands = [y for y in jobs if all(J.homs(a.terms[i - 1][0], y, bound) for i in fib[j])]
                if not cands:
                    ok = False
                    break
                y = rng.choice(cands)
                for i in fib[j]:
                    ell[i - 1] = rng.choice(J.homs(a.terms[i - 1][0], y, bound))
            if not ok:
                continue
            rho = []
            for j in range(m):
                y = J.cod(ell[fib[j][0] - 1])
                F = D.fiber(y)
                s = F.sum([D.transition(ell[i - 1], a.terms[i - 1][1]) for i in fib[j]])
                rho.append(F.sample_out(s, rng, bound))
            return self.make(tuple(psi), tuple(ell), tuple(rho), a)
        return self.identity(a)

    def random_chain(self, rng, bound, k: int, start: HObj | None = None) -> list[HMor]:
        a = start if start is not None else self.random_obj(rng, bound)
        out = []
        for _ in range(k):
            f = self.sample_out(a, rng, bound)
            out.append(f)
            a = f.tgt
        return out


def hocolim(D, validate: bool = True) -> Hocolim:
    return Hocolim(D, validate)


def h_compose(H: Hocolim, g: HMor, f: HMor) -> HMor:
    return H.compose(g, f)


def h_oplus(H: Hocolim, a: HObj, b: HObj) -> HObj:
    return H.oplus(a, b)


def h_twist_oplus(H: Hocolim, a: HObj, b: HObj) -> HMor:
    return H.twist(a, b)


def h_tensor(H: Hocolim, a: HObj, b: HObj) -> HObj:
    return H.tensor(a, b)


def h_tensor_mor(H: Hocolim, f: HMor, g: HMor) -> HMor:
    return H.tensor_mor(f, g)


def h_tau_tensor(H: Hocolim, a: HObj, b: HObj) -> HMor:
    return H.gamma(a, b)


def h_dl(H: Hocolim, a: HObj, b: HObj, b2: HObj) -> HMor:
    return H.d_left(a, [b, b2])


class ZeroFiber(BipermutativeCat):
    """The fiber ``C(0)`` of a graded diagram as a bipermutative category."""

    def __init__(self, D):
        self.D = D
        self.F = D.fiber(D.index.zero)
        self.name = f"{D.name}(0)"
        self.zero = self.F.zero
        self.one = D.one
        self.has_gamma = getattr(D, "has_gamma", False)

    def dom(self, f):
        return self.F.dom(f)

    def cod(self, f):
        return self.F.cod(f)

    def identity(self, a):
        return self.F.identity(a)

    def _compose(self, g, f):
        return self.F.compose(g, f)

    def objects(self, bound):
        return self.F.objects(bound)

    def homs(self, a, b, bound):
        return self.F.homs(a, b, bound)

    def out_homs(self, a, bound):
        return self.F.out_homs(a, bound)

    def oplus(self, a, b):
        return self.F.oplus(a, b)

    def oplus_mor(self, f, g):
        return self.F.oplus_mor(f, g)

    def twist(self, a, b):
        return self.F.twist(a, b)

    def tensor(self, a, b):
        return self.D.tensor(a, b)

    def tensor_mor(self, f, g):
        return self.D.tensor_mor(f, g)

    def gamma(self, a, b):
        return self.D.gamma(a, b)

    def d_left(self, a, bs):
        return self.D.d_left(a, bs)


def unit_embed(H: Hocolim) -> LaxRigMorphism:
    """``G(X) = 1[(0, X)]``: strict for the product, lax for the sum with
    ``η⊕ = (ψ: 2 -> 1, id, id)``."""
    D, J = H.D, H.J
    z = J.zero
    C0 = ZeroFiber(D)
    F0 = C0.F

    def on_obj(X):
        return HObj(((z, X),))

    def on_mor(f):
        return HMor((1,), (J.identity(z),), (f,), on_obj(F0.dom(f)), on_obj(F0.cod(f)))

    def eta_plus(X, Y):
        s = F0.oplus(X, Y)
        return HMor((1, 1), (J.identity(z), J.identity(z)), (F0.identity(s),),
                    HObj(((z, X), (z, Y))), on_obj(s))

    def eta_times(X, Y):
        return H.identity(on_obj(D.tensor(X, Y)))

    one = H.identity(H.one) if H.one is not None else None
    return LaxRigMorphism(ZeroGraded(C0), ZeroGraded(H), on_obj, on_mor, eta_plus, eta_times, None, one,
                          name="G")


def _eta_chain(F: LaxRigMorphism, D, objs: list):
    """The iterated ``η⊕: F(a_1) ⊕ ... ⊕ F(a_k) -> F(a_1 ⊕ ... ⊕ a_k)``."""
    out = D.ident(F.on_obj(objs[0]))
    acc = objs[0]
    for b in objs[1:]:
        step = D.comp(F.eta_plus(acc, b), D.oplus_mor(out, D.ident(F.on_obj(b))))
        out = step
        acc = F.source.oplus(acc, b)
    return out


def induced_morphism(F: LaxRigMorphism, HC: Hocolim, HD: Hocolim) -> LaxRigMorphism:
    """``F_*`` on homotopy colimits: entrywise on objects, ``F(ϱ_j) ∘ η⊕`` on
    morphisms, strict for the sum and ``(id, id, η⊗)`` for the product."""
    C, D = F.source, F.target

    def on_obj(a):
        return HObj(tuple((x, F.on_obj(X)) for x, X in a.terms))

    def on_mor(f):
        rho = []
        for j, fib in enumerate(_fibers(f.psi, f.tgt.n)):
            objs = [C.transition(f.ell[i - 1], f.src.terms[i - 1][1]) for i in fib]
            rho.append(D.comp(F.on_mor(f.rho[j]), _eta_chain(F, D, objs)))
        return HMor(f.psi, f.ell, tuple(rho), on_obj(f.src), on_obj(f.tgt))

    def eta_plus(a, b):
        return HD.identity(on_obj(HC.oplus(a, b)))

    def eta_times(a, b):
        src = HD.tensor(on_obj(a), on_obj(b))
        tgt = on_obj(HC.tensor(a, b))
        rho = tuple(F.eta_times(X, Y) for _, X in a.terms for _, Y in b.terms)
        return HMor(tuple(range(1, src.n + 1)), tuple(HD.J.identity(x) for x, _ in src.terms), rho, src, tgt)

    one = HD.identity(HD.one) if (HD.one is not None and F.one_mor is None) else None
    if F.one_mor is not None:
        one = HMor((1,), (HD.J.identity(HD.J.zero),), (F.one_mor,), HD.one, on_obj(HC.one))
    return LaxRigMorphism(ZeroGraded(HC), ZeroGraded(HD), on_obj, on_mor, eta_plus, eta_times, None, one,
                          name=f"{F.name}_*")


def hocolim_suite(H: Hocolim, bound: Bound, samples: int = 1000, seed: int = 0) -> Report:
    """Randomized checks of the zeroless bipermutative structure, at least
    ``samples`` instances per property."""
    rep = Report(f"randomized suite on {H.name}", exhaustive=False)
    rng = random.Random(seed)
    C, meq = H, H.mor_eq
    idm = H.identity

    def eq(cond, lhs, rhs, msg):
        a = guarded(rep, cond, lhs)
        if a is None:
            return
        b = guarded(rep, cond, rhs)
        if b is not None:
            rep.expect(meq(a, b), cond, msg)

    def obj():
        return H.random_obj(rng, bound)

    for _ in range(samples):
        f, g, h = H.random_chain(rng, bound, 3)
        eq("associativity", lambda: C.compose(h, C.compose(g, f)), lambda: C.compose(C.compose(h, g), f),
           lambda: f"h(gf) != (hg)f for {(f, g, h)!r}")
        eq("identity", lambda: C.compose(idm(f.tgt), f), lambda: f, lambda: f"id∘f != f for {f!r}")
        eq("identity", lambda: C.compose(f, idm(f.src)), lambda: f, lambda: f"f∘id != f for {f!r}")
        guarded(rep, "well-formed", lambda: [H.check_mor(m) for m in (f, g, h, C.compose(g, f))])
        rep.tick("well-formed")

    for _ in range(samples):
        f, f2 = H.random_chain(rng, bound, 2)
        g, g2 = H.random_chain(rng, bound, 2)
        eq("bifunctor", lambda: H.tensor_mor(C.compose(f2, f), C.compose(g2, g)),
           lambda: C.compose(H.tensor_mor(f2, g2), H.tensor_mor(f, g)),
           lambda: f"(f'f)⊗(g'g) != (f'⊗g')(f⊗g) for {(f, f2, g, g2)!r}")
        a, b = f.src, g.src
        eq("bifunctor", lambda: H.tensor_mor(idm(a), idm(b)), lambda: idm(H.tensor(a, b)),
           lambda: f"id⊗id != id at {(a, b)!r}")
        eq("interchange", lambda: C.compose(H.tensor_left(f, g.tgt), H.tensor_right(f.src, g)),
           lambda: C.compose(H.tensor_right(f.tgt, g), H.tensor_left(f, g.src)),
           lambda: f"(f⊗id)(id⊗g) != (id⊗g)(f⊗id) for {(f, g)!r}")
        guarded(rep, "well-formed", lambda: H.check_mor(H.tensor_mor(f, g)))
        rep.tick("well-formed")

    if H.has_gamma:
        for _ in range(samples):
            (f,), (g,) = H.random_chain(rng, bound, 1), H.random_chain(rng, bound, 1)
            eq("tau-naturality", lambda: C.compose(H.gamma(f.tgt, g.tgt), H.tensor_mor(f, g)),
               lambda: C.compose(H.tensor_mor(g, f), H.gamma(f.src, g.src)),
               lambda: f"τ⊗ is not natural for {(f, g)!r}")
            a, b = f.src, g.src
            eq("tau-involution", lambda: C.compose(H.gamma(b, a), H.gamma(a, b)), lambda: idm(H.tensor(a, b)),
               lambda: f"τ⊗² != id at {(a, b)!r}")
            if H.one is not None:
                eq("tau-unit", lambda: H.gamma(H.one, a), lambda: idm(a), lambda: f"τ⊗(1, a) != id at {a!r}")

    for _ in range(samples):
        (f,), (f2,), (g,) = (H.random_chain(rng, bound, 1) for _ in range(3))
        rep.expect(H.tensor(H.oplus(f.src, f2.src), g.src) == H.oplus(H.tensor(f.src, g.src), H.tensor(f2.src, g.src)),
                   "right-dist", lambda: f"(a⊕a')b != ab⊕a'b for {(f, f2, g)!r}")
        eq("right-dist", lambda: H.tensor_mor(H.oplus_mor(f, f2), g),
           lambda: H.oplus_mor(H.tensor_mor(f, g), H.tensor_mor(f2, g)),
           lambda: f"(f⊕f')⊗g != f⊗g ⊕ f'⊗g for {(f, f2, g)!r}")

    for _ in range(samples):
        (f,), (g,), (g2,) = (H.random_chain(rng, bound, 1) for _ in range(3))
        a, b, b2 = f.src, g.src, g2.src
        if H.has_gamma:
            eq("left-dist", lambda: H.d_left(a, [b, b2]),
               lambda: C.compose(H.gamma(H.oplus(b, b2), a), H.oplus_mor(H.gamma(a, b), H.gamma(a, b2))),
               lambda: f"d_ℓ != τ⊗(τ⊗⊕τ⊗) at {(a, b, b2)!r}")
        eq("left-dist", lambda: C.compose(H.d_left(f.tgt, [g.tgt, g2.tgt]), H.oplus_mor(H.tensor_mor(f, g), H.tensor_mor(f, g2))),
           lambda: C.compose(H.tensor_mor(f, H.oplus_mor(g, g2)), H.d_left(a, [b, b2])),
           lambda: f"d_ℓ is not natural for {(f, g, g2)!r}")
        eq("interchange-8", lambda: C.compose(H.tensor_mor(idm(a), H.twist(b, b2)), H.d_left(a, [b, b2])),
           lambda: C.compose(H.d_left(a, [b2, b]), H.twist(H.tensor(a, b), H.tensor(a, b2))),
           lambda: f"(id⊗γ⊕)d_ℓ != d_ℓγ⊕ at {(a, b, b2)!r}")
        eq("interchange-8", lambda: H.twist(H.tensor(a, b), H.tensor(b2, b)),
           lambda: H.tensor_mor(H.twist(a, b2), idm(b)),
           lambda: f"γ⊕(ab,a'b) != γ⊕(a,a')⊗id at {(a, b2, b)!r}")

    for _ in range(samples):
        a, b, c, c2 = obj(), obj(), obj(), obj()
        eq("dist-assoc", lambda: H.d_left(H.tensor(a, b), [c, c2]),
           lambda: C.compose(H.tensor_mor(idm(a), H.d_left(b, [c, c2])), H.d_left(a, [H.tensor(b, c), H.tensor(b, c2)])),
           lambda: f"associativity of distributivity fails at {(a, b, c, c2)!r}")
        a2, b2 = c, c2
        mid = H.sum_mor([idm(H.tensor(a, b)), H.twist(H.tensor(a, b2), H.tensor(a2, b)), idm(H.tensor(a2, b2))])
        eq("pentagon", lambda: H.oplus_mor(H.d_left(a, [b, b2]), H.d_left(a2, [b, b2])),
           lambda: C.compose(H.d_left(H.oplus(a, a2), [b, b2]), mid),
           lambda: f"pentagon fails at {(a, a2, b, b2)!r}")
    return rep
