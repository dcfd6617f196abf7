"""The cube construction.

``G𝓜(n, T)`` is the category of functions ``P T -> 𝓜`` when ``T`` is all
positive and the zero category otherwise.  A cube stores its entries in
bitmask order over ``T`` sorted ascending: bit ``k`` of the index says
whether ``T[k]`` belongs to the subset.  Entries of a product cube over
``T + S`` sit at ``v + u * 2^|T|``.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from functools import lru_cache

from .biperm import (
    GradedBipermutativeCat,
    GradedBimonoidal,
    GradedSamples,
    LaxRigMorphism,
    StrictlyBimonoidalCat,
    ZeroGraded,
)
from .effcat import Bound, FunctorData, ResourceError, StructureError, cached_hash, encode
from .indexing import FinInj, J_ZERO, JCategory, JMor, JObj, j_add, q_apply
from .permcat import PermutativeCat, SymMonFunctor, strict_functor


def subset_of(T: tuple, mask: int) -> tuple:
    return tuple(t for k, t in enumerate(T) if mask >> k & 1)


def mask_of(T: tuple, U) -> int:
    pos = {t: k for k, t in enumerate(T)}
    m = 0
    for u in U:
        if u not in pos:
            raise StructureError(f"{u} is not in {T}")
        m |= 1 << pos[u]
    return m


@dataclass(frozen=True)
class CubeObj:
    """A cube over ``owner``; ``entries is None`` marks the zero category's
    only object."""

    owner: JObj
    entries: tuple | None

    def __hash__(self):
        return cached_hash(self, (self.owner, self.entries))

    @property
    def is_zero(self) -> bool:
        return self.entries is None

    def entry(self, U) -> object:
        return self.entries[mask_of(self.owner.T, U)]

    def as_dict(self) -> dict:
        T = self.owner.T
        return {subset_of(T, m): e for m, e in enumerate(self.entries)}

    def to_json(self) -> dict:
        if self.entries is None:
            return {"j": self.owner.to_json(), "zero": True}
        T = self.owner.T
        return {"j": self.owner.to_json(),
                "entries": {json.dumps(list(subset_of(T, m))): encode(e) for m, e in enumerate(self.entries)}}

    def __repr__(self):
        if self.entries is None:
            return f"0{self.owner!r}"
        return f"{self.owner!r}{list(self.entries)}"


@dataclass(frozen=True)
class CubeMor:
    owner: JObj
    entries: tuple | None

    def __hash__(self):
        return cached_hash(self, (self.owner, self.entries))

    @property
    def is_zero(self) -> bool:
        return self.entries is None

    def to_json(self) -> dict:
        return CubeObj.to_json(self)  # same layout

    def __repr__(self):
        if self.entries is None:
            return f"id0{self.owner!r}"
        return f"{self.owner!r}{list(self.entries)}"


class CubeFiber(PermutativeCat):
    """``G𝓜(x)``, componentwise from ``M``."""

    def __init__(self, M: PermutativeCat, x: JObj):
        self.M, self.x = M, x
        self.k = None if not x.positive() else len(x.T)
        self.name = f"G{M.name}{x!r}"
        if self.k is None:
            self.zero = CubeObj(x, None)
        elif M.zeroless:
            self.zero = None
        else:
            self.zero = CubeObj(x, (M.zero,) * (1 << self.k))

    @property
    def trivial(self) -> bool:
        return self.k is None

    def _z(self):
        return CubeObj(self.x, None)

    def _zm(self):
        return CubeMor(self.x, None)

    def dom(self, f):
        if f.entries is None:
            return self._z()
        return CubeObj(self.x, tuple(self.M.dom(e) for e in f.entries))

    def cod(self, f):
        if f.entries is None:
            return self._z()
        return CubeObj(self.x, tuple(self.M.cod(e) for e in f.entries))

    def identity(self, a):
        if a.entries is None:
            return self._zm()
        return CubeMor(self.x, tuple(self.M.identity(e) for e in a.entries))

    def _compose(self, g, f):
        if f.entries is None:
            return f
        return CubeMor(self.x, tuple(self.M.compose(a, b) for a, b in zip(g.entries, f.entries)))

    def obj_eq(self, a, b):
        return a == b

    def mor_eq(self, f, g):
        return f == g

    def _product(self, pools, bound):
        total = 1
        for p in pools:
            total *= len(p)
        if total > bound.budget:
            raise ResourceError(f"{total} cubes in {self.name}", bound)
        return itertools.product(*pools)

    def objects(self, bound):
        if self.trivial:
            return [self._z()]
        base = self.M.objects(bound)
        return [CubeObj(self.x, e) for e in self._product([base] * (1 << self.k), bound)]

    def homs(self, a, b, bound=None):
        if self.trivial:
            return [self._zm()]
        pools = [self.M.homs(p, q, bound) for p, q in zip(a.entries, b.entries)]
        return [CubeMor(self.x, e) for e in self._product(pools, bound or Bound())]

    def out_homs(self, a, bound=None):
        if self.trivial:
            return [self._zm()]
        pools = [self.M.out_homs(p, bound) for p in a.entries]
        return [CubeMor(self.x, e) for e in self._product(pools, bound or Bound())]

    def out_targets(self, a, bound=None):
        if self.trivial:
            return [a]
        pools = [self.M.out_targets(p, bound) for p in a.entries]
        return [CubeObj(self.x, e) for e in self._product(pools, bound or Bound())]

    def sample_out(self, a, rng, bound=None):
        if self.trivial:
            return self._zm()
        return CubeMor(self.x, tuple(self.M.sample_out(p, rng, bound) for p in a.entries))

    def in_bound(self, a, bound):
        return self.trivial or all(self.M.in_bound(e, bound) for e in a.entries)

    def oplus(self, a, b):
        if a.entries is None:
            return a
        return CubeObj(self.x, tuple(self.M.oplus(p, q) for p, q in zip(a.entries, b.entries)))

    def oplus_mor(self, f, g):
        if f.entries is None:
            return f
        return CubeMor(self.x, tuple(self.M.oplus_mor(p, q) for p, q in zip(f.entries, g.entries)))

    def twist(self, a, b):
        if a.entries is None:
            return self._zm()
        return CubeMor(self.x, tuple(self.M.twist(p, q) for p, q in zip(a.entries, b.entries)))


@lru_cache(maxsize=None)
def _reindex(m: JMor) -> tuple | None:
    """For each target mask, the source mask or ``None`` for a zero entry."""
    y = m.tgt
    if not y.positive():
        return None
    phi, S, T = m.phi, m.src.T, y.T
    comp = set(phi.complement())
    Sset = set(S)
    out = []
    for mask in range(1 << len(T)):
        V = subset_of(T, mask)
        if comp.intersection(V):
            out.append(None)
            continue
        pre = [phi.preimage(v) for v in V]
        out.append(mask_of(S, [p for p in pre if p in Sset]))
    return tuple(out)


def g_obj(M: PermutativeCat, m: JMor, a: CubeObj) -> CubeObj:
    """``G𝓜(φ, ι)(a)``: extension by zero along ``φ``, then the diagonal."""
    if a.owner != m.src:
        raise StructureError(f"{a!r} is not over {m.src!r}")
    idx = _reindex(m)
    if idx is None:
        return CubeObj(m.tgt, None)
    return CubeObj(m.tgt, tuple(M.zero if s is None else a.entries[s] for s in idx))


def g_mor(M: PermutativeCat, m: JMor, f: CubeMor) -> CubeMor:
    if f.owner != m.src:
        raise StructureError(f"{f!r} is not over {m.src!r}")
    idx = _reindex(m)
    if idx is None:
        return CubeMor(m.tgt, None)
    z = M.identity(M.zero) if not M.zeroless else None
    return CubeMor(m.tgt, tuple(z if s is None else f.entries[s] for s in idx))


def cube_diagonal(n: int, S: tuple, T: tuple, M: PermutativeCat, a: CubeObj) -> CubeObj:
    """The diagonal ``𝓜^{PS} -> 𝓜^{PT}`` for ``S ⊆ T`` inside ``n``."""
    return g_obj(M, JMor(FinInj.identity(n), JObj(n, S), JObj(n, T)), a)


def cube_extend_zero(phi: FinInj, S: tuple, M: PermutativeCat, f):
    """Extension by zero along ``φ`` onto ``φ(S) ⊔ Cφ``; works on cubes and
    cube morphisms."""
    src = JObj(phi.m, S)
    tgt = JObj(phi.n, q_apply(phi, src.subset).elems)
    m = JMor(phi, src, tgt)
    return g_mor(M, m, f) if isinstance(f, CubeMor) else g_obj(M, m, f)


class GDiagram(GradedBimonoidal):
    """``G𝓜`` as a functor from the index category to permutative
    categories with strict transitions."""

    def __init__(self, M: PermutativeCat, index=None):
        self.M = M
        self.index = index if index is not None else JCategory()
        self.name = f"G{M.name}"
        self._fibers: dict = {}

    def grade(self, a):
        return a.owner

    def mgrade(self, f):
        return f.owner

    def fiber(self, x) -> CubeFiber:
        F = self._fibers.get(x)
        if F is None:
            F = self._fibers[x] = CubeFiber(self.M, x)
        return F

    def transition(self, k, a):
        return g_obj(self.M, k, a)

    def transition_mor(self, k, f):
        return g_mor(self.M, k, f)

    def samples(self, bound: Bound, pool_cap: int = 400, seed: int | None = None) -> GradedSamples:
        """Every grade within ``bound.index`` and every index morphism
        between them; fiber pools are exhaustive up to ``pool_cap``."""
        rng = random.Random(bound.seed if seed is None else seed)
        grades = self.index.objects(bound)
        imors = [f for x in grades for y in grades for f in self.index.homs(x, y, bound)]
        objs, mors, exhaustive = {}, {}, True
        for x in grades:
            F = self.fiber(x)
            o = F.objects(bound)
            m = [f for a in o for f in F.out_homs(a, bound) if F.in_bound(F.cod(f), bound)]
            if len(o) > pool_cap:
                o, exhaustive = rng.sample(o, pool_cap), False
            if len(m) > pool_cap:
                m, exhaustive = rng.sample(m, pool_cap), False
            objs[x], mors[x] = o, m
        return GradedSamples(grades, imors, objs, mors, exhaustive)


def g_apply(G: GDiagram, m: JMor) -> SymMonFunctor:
    """The strict symmetric monoidal transition ``G𝓜(φ, ι)``."""
    fd = FunctorData(G.fiber(m.src), G.fiber(m.tgt), lambda a: G.transition(m, a),
                     lambda f: G.transition_mor(m, f), name=f"G({m!r})")
    return strict_functor(fd)


def cube_tensor(R, a: CubeObj, b: CubeObj) -> CubeObj:
    owner = j_add(a.owner, b.owner)
    if a.entries is None or b.entries is None:
        return CubeObj(owner, None)
    return CubeObj(owner, tuple(R.tensor(p, q) for q in b.entries for p in a.entries))


def cube_tensor_mor(R, f: CubeMor, g: CubeMor) -> CubeMor:
    owner = j_add(f.owner, g.owner)
    if f.entries is None or g.entries is None:
        return CubeMor(owner, None)
    return CubeMor(owner, tuple(R.tensor_mor(p, q) for q in g.entries for p in f.entries))


def cube_gamma_tensor(R, a: CubeObj, b: CubeObj) -> CubeMor:
    """Entrywise ``γ⊗(a_V, b_U)``, a morphism ``a ⊗ b -> G(χ)(b ⊗ a)``."""
    owner = j_add(a.owner, b.owner)
    if a.entries is None or b.entries is None:
        return CubeMor(owner, None)
    return CubeMor(owner, tuple(R.gamma(p, q) for q in b.entries for p in a.entries))


class GR(GDiagram, GradedBipermutativeCat):
    """``G𝓡`` with the entrywise graded product.

    ``d_left`` is computed entrywise from ``R.d_left``; the checker compares
    it with the derivation from ``γ⊗``.
    """

    def __init__(self, R: StrictlyBimonoidalCat, index=None):
        super().__init__(R, index)
        self.R = R
        self.has_gamma = R.has_gamma
        self.one = CubeObj(J_ZERO, (R.one,))

    def tensor(self, a, b):
        return cube_tensor(self.R, a, b)

    def tensor_mor(self, f, g):
        return cube_tensor_mor(self.R, f, g)

    def gamma(self, a, b):
        if not self.has_gamma:
            raise StructureError(f"{self.R.name} has no product twist")
        return cube_gamma_tensor(self.R, a, b)

    def d_left(self, a, bs):
        bs = list(bs)
        ys = {b.owner for b in bs}
        if len(ys) != 1:
            raise StructureError("summands lie in different fibers")
        owner = j_add(a.owner, bs[0].owner)
        if a.entries is None or bs[0].entries is None:
            return CubeMor(owner, None)
        return CubeMor(owner, tuple(self.R.d_left(p, [b.entries[u] for b in bs])
                                    for u in range(len(bs[0].entries)) for p in a.entries))


def build_GR(R: StrictlyBimonoidalCat) -> GR:
    return GR(R)


def cube_morphism(F: LaxRigMorphism) -> LaxRigMorphism:
    """Apply an ungraded lax rig morphism entrywise: ``G𝓡 -> G𝓡'``."""
    src, tgt = F.source, F.target
    if not (isinstance(src, ZeroGraded) and isinstance(tgt, ZeroGraded)):
        raise StructureError("cube_morphism expects an ungraded lax morphism")
    GS, GT = GR(src.R), GR(tgt.R)
    T = tgt.R

    def on_obj(a):
        return a if a.entries is None else CubeObj(a.owner, tuple(F.on_obj(e) for e in a.entries))

    def on_mor(f):
        return f if f.entries is None else CubeMor(f.owner, tuple(F.on_mor(e) for e in f.entries))

    def eta_plus(a, b):
        if a.entries is None:
            return CubeMor(a.owner, None)
        return CubeMor(a.owner, tuple(F.eta_plus(p, q) for p, q in zip(a.entries, b.entries)))

    def eta_times(a, b):
        owner = j_add(a.owner, b.owner)
        if a.entries is None or b.entries is None:
            return CubeMor(owner, None)
        return CubeMor(owner, tuple(F.eta_times(p, q) for q in b.entries for p in a.entries))

    def zero_mor(x):
        if not x.positive():
            return CubeMor(x, None)
        return CubeMor(x, (F.zero_mor(None),) * (1 << len(x.T)))

    one = CubeMor(J_ZERO, (F.one_mor,)) if F.one_mor is not None else None
    return LaxRigMorphism(GS, GT, on_obj, on_mor, eta_plus, eta_times, zero_mor, one, name=f"G{F.name}")
