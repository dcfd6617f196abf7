"""Isolated zeros, the resolution ``Z_q M = (LR)^{q+1} M`` and the levels of
the derived homotopy colimit.

``L`` adjoins a disjoint zero and ``R`` forgets which object is the zero.
Iterating, ``Z_q M`` has the objects of ``M`` and the adjoined zeros
``ζ_0, ..., ζ_q``; the zero of ``M`` behaves as ``ζ_{-1}``.  Every ``ζ_j``
is a strict unit for the sum, so ``ζ_j ⊕ ζ_k = ζ_min(j,k)``, and the
outermost zero wins a product: ``ζ_j ⊗ a = ζ_j`` and ``ζ_j ⊗ ζ_k = ζ_max``.
"""

from __future__ import annotations

from dataclasses import dataclass
from .biperm import (BipermutativeCat, GradedBipermutativeCat, LaxRigMorphism, ZeroGraded,
                     check_lax_rig_morphism, strict_rig_morphism)
from .effcat import Bound, FunctorData, Report, StructureError, check_functor, encode
from .permcat import SymMonFunctor, check_symmon_functor
from .thomason import HMor, HObj, Hocolim, unit_embed


@dataclass(frozen=True)
class Zeta:
    """The adjoined zero of depth ``depth``, optionally over a grade."""

    depth: int
    grade: object = None

    def to_json(self) -> dict:
        out = {"zeta": self.depth}
        if self.grade is not None:
            out["grade"] = encode(self.grade)
        return out

    def __repr__(self):
        return f"ζ{self.depth}" if self.grade is None else f"ζ{self.depth}@{self.grade!r}"


@dataclass(frozen=True)
class ZId:
    """The identity of an adjoined zero, its only endomorphism."""

    obj: Zeta

    def to_json(self) -> dict:
        return {"id": self.obj.to_json()}

    def __repr__(self):
        return f"id_{self.obj!r}"


def _z(a) -> bool:
    return isinstance(a, Zeta)


class ZCat(BipermutativeCat):
    """``M`` with isolated zeros ``ζ_lo..ζ_hi`` adjoined.

    ``Z_q M`` is ``ZCat(M, 0, q)`` and ``L N`` is ``ZCat(N, 0, 0)``.  With
    ``forget`` the result is viewed as zeroless, which is ``R`` applied to
    it.  Products need ``M`` to be strictly bimonoidal.
    """

    def __init__(self, M, lo: int, hi: int, grade=None, forget: bool = False):
        if hi < lo:
            raise StructureError(f"no zeros to adjoin between {lo} and {hi}")
        self.M, self.lo, self.hi, self.grade = M, lo, hi, grade
        self.zetas = [Zeta(j, grade) for j in range(lo, hi + 1)]
        self.zero = None if forget else self.zetas[-1]
        self.one = getattr(M, "one", None)
        self.has_gamma = getattr(M, "has_gamma", False)
        tag = f"ζ{lo}" if lo == hi else f"ζ{lo}..ζ{hi}"
        self.name = f"{M.name}+{tag}" + (" (no zero)" if forget else "")

    def _own(self, a):
        if _z(a) and (a.depth < self.lo or a.depth > self.hi or a.grade != self.grade):
            raise StructureError(f"{a!r} is not an object of {self.name}")
        return a

    def dom(self, f):
        return f.obj if isinstance(f, ZId) else self.M.dom(f)

    def cod(self, f):
        return f.obj if isinstance(f, ZId) else self.M.cod(f)

    def identity(self, a):
        return ZId(self._own(a)) if _z(a) else self.M.identity(a)

    def _compose(self, g, f):
        if isinstance(f, ZId):
            return g
        if isinstance(g, ZId):
            return f
        return self.M.compose(g, f)

    def obj_eq(self, a, b):
        if _z(a) or _z(b):
            return a == b
        return self.M.obj_eq(a, b)

    def mor_eq(self, f, g):
        if isinstance(f, ZId) or isinstance(g, ZId):
            return f == g
        return self.M.mor_eq(f, g)

    def objects(self, bound):
        return list(self.M.objects(bound)) + list(self.zetas)

    def homs(self, a, b, bound=None):
        if _z(a) or _z(b):
            return [ZId(a)] if a == b else []
        return self.M.homs(a, b, bound)

    def out_homs(self, a, bound=None):
        return [ZId(a)] if _z(a) else self.M.out_homs(a, bound)

    def out_targets(self, a, bound=None):
        return [a] if _z(a) else self.M.out_targets(a, bound)

    def sample_out(self, a, rng, bound=None):
        return ZId(a) if _z(a) else self.M.sample_out(a, rng, bound)

    def in_bound(self, a, bound):
        return True if _z(a) else self.M.in_bound(a, bound)

    # sum: every ζ is a strict unit
    def oplus(self, a, b):
        if _z(a) and _z(b):
            return a if a.depth <= b.depth else b
        if _z(a):
            return b
        if _z(b):
            return a
        return self.M.oplus(a, b)

    def oplus_mor(self, f, g):
        if isinstance(f, ZId) and isinstance(g, ZId):
            return ZId(self.oplus(f.obj, g.obj))
        if isinstance(f, ZId):
            return g
        if isinstance(g, ZId):
            return f
        return self.M.oplus_mor(f, g)

    def twist(self, a, b):
        if _z(a) or _z(b):
            return self.identity(self.oplus(a, b))
        return self.M.twist(a, b)

    # product: the outermost zero annihilates
    def tensor(self, a, b):
        if _z(a) and _z(b):
            return a if a.depth >= b.depth else b
        if _z(a):
            return a
        if _z(b):
            return b
        return self.M.tensor(a, b)

    def tensor_mor(self, f, g):
        if isinstance(f, ZId) or isinstance(g, ZId):
            return ZId(self.tensor(self.dom(f), self.dom(g)))
        return self.M.tensor_mor(f, g)

    def gamma(self, a, b):
        if _z(a) or _z(b):
            return ZId(self.tensor(a, b))
        return self.M.gamma(a, b)

    def d_left(self, a, bs):
        bs = list(bs)
        if _z(a):
            return ZId(self.tensor(a, self.sum(bs)))
        rest = [b for b in bs if not _z(b)]
        if not rest:
            return ZId(self.sum(bs))
        return self.M.d_left(a, rest)


def add_isolated_zero(C, tag: int = 0) -> ZCat:
    """``C₊``: a zeroless category with a disjoint zero ``ζ_tag``."""
    if not C.zeroless:
        raise StructureError(f"{C.name} already has a zero; forget it first")
    return ZCat(C, tag, tag)


def z_level(M, q: int, forget: bool = False) -> ZCat:
    """``Z_q M = (LR)^{q+1} M``."""
    if q < 0:
        raise StructureError(f"simplicial degree must be at least 0, got {q}")
    return ZCat(M, 0, q, forget=forget)


def _face_zeta(z: Zeta, i: int) -> Zeta:
    return z if z.depth < i else Zeta(z.depth - 1, z.grade)


def _degen_zeta(z: Zeta, i: int) -> Zeta:
    return z if z.depth < i else Zeta(z.depth + 1, z.grade)


def _zmap(zfun, zero_of):
    """Objects and morphisms of ``Z M`` under a relabelling of the zetas;
    depth ``-1`` lands on the zero of ``M``."""

    def on_obj(a):
        if not _z(a):
            return a
        b = zfun(a)
        return zero_of(b.grade) if b.depth < 0 else b

    def on_mor(f, M_ident):
        if not isinstance(f, ZId):
            return f
        b = on_obj(f.obj)
        return M_ident(b) if not _z(b) else ZId(b)

    return on_obj, on_mor


def z_face(M, q: int, i: int) -> SymMonFunctor:
    """``d_i: Z_q M -> Z_{q-1} M``; ``Z_{-1} M = M``."""
    if not 0 <= i <= q:
        raise StructureError(f"face d_{i} does not exist in degree {q}")
    src = z_level(M, q)
    tgt = z_level(M, q - 1) if q >= 1 else M
    on_obj, on_mor = _zmap(lambda z: _face_zeta(z, i), lambda g: M.zero)
    fd = FunctorData(src, tgt, on_obj, lambda f: on_mor(f, tgt.identity), name=f"d{i}")
    return SymMonFunctor(fd, lambda a, b: tgt.identity(tgt.oplus(on_obj(a), on_obj(b))),
                         tgt.identity(tgt.zero), True)


def z_degeneracy(M, q: int, i: int) -> SymMonFunctor:
    """``s_i: Z_q M -> Z_{q+1} M``."""
    if not 0 <= i <= q:
        raise StructureError(f"degeneracy s_{i} does not exist in degree {q}")
    src, tgt = z_level(M, q), z_level(M, q + 1)
    on_obj, on_mor = _zmap(lambda z: _degen_zeta(z, i), lambda g: M.zero)
    fd = FunctorData(src, tgt, on_obj, lambda f: on_mor(f, tgt.identity), name=f"s{i}")
    return SymMonFunctor(fd, lambda a, b: tgt.identity(tgt.oplus(on_obj(a), on_obj(b))),
                         tgt.identity(tgt.zero), True)


def augmentation(M, q: int) -> SymMonFunctor:
    """``ε: Z_q M -> M``, sending every adjoined zero to the zero of ``M``."""
    src = z_level(M, q)
    on_obj, on_mor = _zmap(lambda z: Zeta(-1, z.grade), lambda g: M.zero)
    fd = FunctorData(src, M, on_obj, lambda f: on_mor(f, M.identity), name="ε")
    return SymMonFunctor(fd, lambda a, b: M.identity(M.oplus(on_obj(a), on_obj(b))), M.identity(M.zero), True)


def augmentation_section(M, q: int) -> FunctorData:
    """The inclusion ``M -> Z_q M`` induced by the unit; ``ε`` after it is
    the identity.  It is a functor but does not preserve the zero."""
    return FunctorData(M, z_level(M, q), lambda a: a, lambda f: f, name="ι")


# graded diagrams

class ZDiagram(GradedBipermutativeCat):
    """The fiberwise ``ZCat`` of a graded diagram, viewed as zeroless."""

    def __init__(self, C, lo: int, hi: int):
        self.C, self.lo, self.hi = C, lo, hi
        self.index = C.index
        self.one = C.one
        self.has_gamma = C.has_gamma
        self.name = f"{C.name}+ζ{lo}..ζ{hi}" if lo != hi else f"{C.name}+ζ{lo}"
        self._fibers: dict = {}

    def grade(self, a):
        return a.grade if _z(a) else self.C.grade(a)

    def mgrade(self, f):
        return f.obj.grade if isinstance(f, ZId) else self.C.mgrade(f)

    def fiber(self, x) -> ZCat:
        if x not in self._fibers:
            self._fibers[x] = ZCat(self.C.fiber(x), self.lo, self.hi, grade=x, forget=True)
        return self._fibers[x]

    def transition(self, k, a):
        if _z(a):
            return Zeta(a.depth, self.index.cod(k))
        return self.C.transition(k, a)

    def transition_mor(self, k, f):
        if isinstance(f, ZId):
            return ZId(self.transition(k, f.obj))
        return self.C.transition_mor(k, f)

    def tensor(self, a, b):
        if _z(a) or _z(b):
            da = a.depth if _z(a) else -1
            db = b.depth if _z(b) else -1
            return Zeta(max(da, db), self.index.oplus(self.grade(a), self.grade(b)))
        return self.C.tensor(a, b)

    def tensor_mor(self, f, g):
        if isinstance(f, ZId) or isinstance(g, ZId):
            return ZId(self.tensor(self.dom(f), self.dom(g)))
        return self.C.tensor_mor(f, g)

    def gamma(self, a, b):
        if _z(a) or _z(b):
            return ZId(self.tensor(a, b))
        return self.C.gamma(a, b)

    def d_left(self, a, bs):
        bs = list(bs)
        if _z(a):
            return ZId(self.tensor(a, bs[0]))
        rest = [b for b in bs if not _z(b)]
        if not rest:
            return ZId(self.tensor(a, self.sum(bs)))
        return self.C.d_left(a, rest)


PLUS = Zeta


def plus(q: int) -> Zeta:
    """The isolated outer zero of level ``q``."""
    return Zeta(q)


class Level(ZCat):
    """Level ``q`` of the derived homotopy colimit,
    ``hocolim^iz_J Z_q C = (hocolim_J R Z_{q-1} C)₊`` with ``Z_{-1} = C``."""

    def __init__(self, C, q: int, validate: bool = True):
        self.C, self.q = C, q
        D = ZDiagram(C, 0, q - 1) if q >= 1 else C
        self.H = Hocolim(D, validate)
        super().__init__(self.H, q, q)
        self.name = f"level {q} of Dhocolim {C.name}"


def normalize_terms(a: HObj, drop: int, q_out: int):
    """Drop the terms ``(x, ζ_drop)``; an object with no terms left is the
    outer zero ``ζ_{q_out}``."""
    kept = tuple(t for t in a.terms if not (_z(t[1]) and t[1].depth == drop))
    return HObj(kept) if kept else plus(q_out)


def normalize_mor(f: HMor, drop: int, q_out: int):
    """Drop source and target terms at ``ζ_drop`` and renumber ``ψ``."""
    keep_t = [j for j, (_, Y) in enumerate(f.tgt.terms, 1) if not (_z(Y) and Y.depth == drop)]
    if not keep_t:
        return ZId(plus(q_out))
    new_j = {j: k for k, j in enumerate(keep_t, 1)}
    keep_s = [i for i, (_, X) in enumerate(f.src.terms) if not (_z(X) and X.depth == drop)]
    psi = tuple(new_j[f.psi[i]] for i in keep_s)
    ell = tuple(f.ell[i] for i in keep_s)
    rho = tuple(f.rho[j - 1] for j in keep_t)
    src, tgt = normalize_terms(f.src, drop, q_out), normalize_terms(f.tgt, drop, q_out)
    if not isinstance(src, HObj):
        raise StructureError(f"{f!r} maps the zero onto a nonzero term")
    return HMor(psi, ell, rho, src, tgt)


def _level_map(L_src: Level, L_tgt: Level, zfun, name: str) -> LaxRigMorphism:
    """A simplicial operator on levels: relabel the fiber zetas by ``zfun``,
    send fiber depth ``-1`` to the fiber zero and collapse terms landing on
    the outer zero of the target."""
    q_t = L_tgt.q
    Ct = L_src.C

    def fz(z: Zeta):
        return zfun(z)

    def on_term(x, X):
        if not _z(X):
            return X
        Z = fz(X)
        if Z.depth < 0:
            return Ct.fiber(x).zero
        return Z

    def on_obj(a):
        if _z(a):
            return plus(q_t)
        terms = tuple((x, on_term(x, X)) for x, X in a.terms)
        return normalize_terms(HObj(terms), q_t, q_t)

    def on_fmor(y, r):
        if not isinstance(r, ZId):
            return r
        Z = on_term(y, r.obj)
        return Ct.fiber(y).identity(Z) if not _z(Z) else ZId(Z)

    def on_mor(f):
        if isinstance(f, ZId):
            return ZId(plus(q_t))
        src = HObj(tuple((x, on_term(x, X)) for x, X in f.src.terms))
        tgt = HObj(tuple((y, on_term(y, Y)) for y, Y in f.tgt.terms))
        rho = tuple(on_fmor(y, r) for (y, _), r in zip(f.tgt.terms, f.rho))
        return normalize_mor(HMor(f.psi, f.ell, rho, src, tgt), q_t, q_t)

    return strict_rig_morphism(L_src, L_tgt, on_obj, on_mor, name=name)


class DerivedHocolim:
    """Levels ``0..q_max`` of ``Dhocolim_J C`` with faces and degeneracies."""

    def __init__(self, C, q_max: int = 1, validate: bool = True):
        if q_max < 0:
            raise StructureError("q_max must be at least 0")
        self.C, self.q_max = C, q_max
        self.levels = [Level(C, q, validate) for q in range(q_max + 1)]

    def level(self, q: int) -> Level:
        if not 0 <= q <= self.q_max:
            raise StructureError(f"level {q} is outside 0..{self.q_max}")
        return self.levels[q]

    def face(self, q: int, i: int) -> LaxRigMorphism:
        if not 0 <= i <= q or q < 1:
            raise StructureError(f"face d_{i} does not exist in degree {q}")
        return _level_map(self.level(q), self.level(q - 1), lambda z: _face_zeta(z, i), f"d{i}")

    def degeneracy(self, q: int, i: int) -> LaxRigMorphism:
        if not 0 <= i <= q:
            raise StructureError(f"degeneracy s_{i} does not exist in degree {q}")
        return _level_map(self.level(q), self.level(q + 1), lambda z: _degen_zeta(z, i), f"s{i}")


def dhocolim(C, q_max: int = 1, validate: bool = True) -> DerivedHocolim:
    return DerivedHocolim(C, q_max, validate)


def zero_fiber_map(level: Level) -> LaxRigMorphism:
    """``Z_q C(0) -> level q``: ``X ↦ 1[(0, X)]`` and the outer zero to
    the outer zero, lax for the sum."""
    H, q = level.H, level.q
    G = unit_embed(H)
    C = level.C
    F0 = C.fiber(C.index.zero)
    Zq = ZCat(_FiberBiperm(C), 0, q)

    def on_obj(X):
        return plus(q) if X == plus(q) else G.on_obj(X if not _z(X) else Zeta(X.depth, C.index.zero))

    def on_mor(f):
        if isinstance(f, ZId):
            X = on_obj(f.obj)
            return ZId(X) if _z(X) else H.identity(X)
        return G.on_mor(f)

    def lift(X):
        return X if not _z(X) else Zeta(X.depth, C.index.zero)

    def eta_plus(X, Y):
        if X == plus(q) or Y == plus(q):
            return level.identity(on_obj(Zq.oplus(X, Y)))
        s = Zq.oplus(X, Y)
        z = C.index.zero
        Fz = H.D.fiber(z)
        return HMor((1, 1), (H.J.identity(z), H.J.identity(z)), (Fz.identity(lift(s)),),
                    HObj(((z, lift(X)), (z, lift(Y)))), on_obj(s))

    def eta_times(X, Y):
        return level.identity(on_obj(Zq.tensor(X, Y)))

    one = level.identity(level.one) if level.one is not None else None
    return LaxRigMorphism(ZeroGraded(Zq), ZeroGraded(level), on_obj, on_mor, eta_plus, eta_times,
                          lambda x: level.identity(plus(q)), one, name=f"Z_{q}C(0) -> level {q}")


class _FiberBiperm(BipermutativeCat):
    """The fiber over the index zero of a graded diagram, as a bipermutative
    category in its own right."""

    def __init__(self, C):
        self.C = C
        self.F = C.fiber(C.index.zero)
        self.name = f"{C.name}(0)"
        self.zero = self.F.zero
        self.one = C.one
        self.has_gamma = C.has_gamma

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

    def homs(self, a, b, bound=None):
        return self.F.homs(a, b, bound)

    def out_homs(self, a, bound=None):
        return self.F.out_homs(a, bound)

    def oplus(self, a, b):
        return self.F.oplus(a, b)

    def oplus_mor(self, f, g):
        return self.F.oplus_mor(f, g)

    def twist(self, a, b):
        return self.F.twist(a, b)

    def tensor(self, a, b):
        return self.C.tensor(a, b)

    def tensor_mor(self, f, g):
        return self.C.tensor_mor(f, g)

    def gamma(self, a, b):
        return self.C.gamma(a, b)

    def d_left(self, a, bs):
        return self.C.d_left(a, bs)


# checks

def check_hocolim_iz(C, bound: Bound) -> Report:
    """``hocolim^iz_J(C₊) = (hocolim_J C)₊`` on enumerated terms: normalize
    objects and morphisms of ``hocolim R(C₊)`` by collapsing the adjoined
    zero and compare with ``hocolim C`` plus the zero."""
    rep = Report(f"hocolim^iz identity for {C.name}")
    Hp = Hocolim(ZDiagram(C, 0, 0), validate=False)
    H = Hocolim(C, validate=False)
    lhs_objs, lhs_mors = set(), set()
    for a in Hp.objects(bound):
        lhs_objs.add(normalize_terms(a, 0, 0))
        for f in Hp.out_homs(a, bound):
            lhs_mors.add(normalize_mor(f, 0, 0))
    rhs_objs = set(H.objects(bound)) | {plus(0)}
    rhs_mors = {f for a in H.objects(bound) for f in H.out_homs(a, bound)} | {ZId(plus(0))}
    rep.expect(lhs_objs == rhs_objs, "objects",
               lambda: f"{len(lhs_objs ^ rhs_objs)} object terms differ, e.g. {next(iter(lhs_objs ^ rhs_objs))!r}")
    rep.expect(lhs_mors == rhs_mors, "morphisms",
               lambda: f"{len(lhs_mors ^ rhs_mors)} morphism terms differ, e.g. {next(iter(lhs_mors ^ rhs_mors))!r}")
    rep.tick("objects", len(lhs_objs) - 1)
    rep.tick("morphisms", len(lhs_mors) - 1)
    return rep


def _check_identities(name, ops: dict, objs_of, rep: Report, q_max: int):
    """The simplicial identities on objects of degrees ``0..q_max``;
    ``ops[("d", q, i)]`` and ``ops[("s", q, i)]`` are the object maps out of
    degree ``q``.  Identities whose operators are missing are skipped."""

    def law(q, a, lhs, rhs, what):
        x, y = a, a
        for k, qq, i in lhs:
            x = ops[(k, qq, i)](x)
        for k, qq, i in rhs:
            y = ops[(k, qq, i)](y)
        rep.expect(x == y, "simplicial", lambda: f"{name}: {what} fails at {a!r}")

    def have(*keys):
        return all(k in ops for k in keys)

    for q in range(q_max + 1):
        for a in objs_of(q):
            for i in range(q + 1):
                for j in range(i + 1, q + 1):
                    # d_i d_j = d_{j-1} d_i
                    if have(("d", q, j), ("d", q - 1, i), ("d", q, i), ("d", q - 1, j - 1)):
                        law(q, a, [("d", q, j), ("d", q - 1, i)], [("d", q, i), ("d", q - 1, j - 1)], f"d{i}d{j} = d{j - 1}d{i}")
                for j in range(i, q + 1):
                    # s_i s_j = s_{j+1} s_i
                    if have(("s", q, j), ("s", q + 1, i), ("s", q, i), ("s", q + 1, j + 1)):
                        law(q, a, [("s", q, j), ("s", q + 1, i)], [("s", q, i), ("s", q + 1, j + 1)], f"s{i}s{j} = s{j + 1}s{i}")
            for j in range(q + 1):
                for i in range(q + 2):
                    if not have(("s", q, j), ("d", q + 1, i)):
                        continue
                    if i in (j, j + 1):
                        law(q, a, [("s", q, j), ("d", q + 1, i)], [], f"d{i}s{j} = id")
                    elif i < j and have(("d", q, i), ("s", q - 1, j - 1)):
                        law(q, a, [("s", q, j), ("d", q + 1, i)], [("d", q, i), ("s", q - 1, j - 1)], f"d{i}s{j} = s{j - 1}d{i}")
                    elif i > j + 1 and have(("d", q, i - 1), ("s", q - 1, j)):
                        law(q, a, [("s", q, j), ("d", q + 1, i)], [("d", q, i - 1), ("s", q - 1, j)], f"d{i}s{j} = s{j}d{i - 1}")


def check_z_simplicial(M, bound: Bound, q_max: int = 2) -> Report:
    """Simplicial identities for ``Z_• M`` and ``ε d_0 = ε d_1``."""
    rep = Report(f"simplicial identities of Z {M.name}")
    ops = {}
    for q in range(q_max + 2):
        for i in range(q + 1):
            if q >= 1:
                ops[("d", q, i)] = z_face(M, q, i).functor.on_obj
            if q <= q_max:
                ops[("s", q, i)] = z_degeneracy(M, q, i).functor.on_obj
    _check_identities("Z", ops, lambda q: z_level(M, q).objects(bound), rep, q_max)
    eps0 = augmentation(M, 0).functor.on_obj
    for a in z_level(M, 1).objects(bound):
        rep.expect(eps0(ops[("d", 1, 0)](a)) == eps0(ops[("d", 1, 1)](a)), "augmentation",
                   lambda: f"ε d0 != ε d1 at {a!r}")
    for q in range(q_max + 1):
        for i in range(q + 1):
            F = z_face(M, q, i)
            rep.merge(_relabel(check_functor(F.functor, bound), "face-functor"))
            if isinstance(M, BipermutativeCat):
                R = strict_rig_morphism(F.source, F.target, F.functor.on_obj, F.functor.on_mor, name=f"d{i}")
                rep.merge(_relabel(check_lax_rig_morphism(R, bound), "face-rig"))
            else:
                rep.merge(_relabel(check_symmon_functor(F, bound), "face-functor"))
        F = augmentation(M, q)
        rep.merge(_relabel(check_symmon_functor(F, bound), "augmentation"))
        rep.merge(_relabel(check_functor(F.functor, bound), "augmentation"))
    return rep


def _relabel(sub: Report, cond: str) -> Report:
    out = Report(sub.subject, exhaustive=sub.exhaustive)
    for v in sub.violations:
        out.fail(cond, f"{v.condition}: {v.message}")
    out.tick(cond, sum(sub.counts.values()))
    return out


def check_level_simplicial(Dh: DerivedHocolim, bound: Bound) -> Report:
    """Simplicial identities on the enumerated objects of each level."""
    rep = Report(f"simplicial identities of {Dh.C.name}")
    ops = {}
    for q in range(Dh.q_max + 1):
        for i in range(q + 1):
            if q >= 1:
                ops[("d", q, i)] = Dh.face(q, i).on_obj
            if q < Dh.q_max:
                ops[("s", q, i)] = Dh.degeneracy(q, i).on_obj
    _check_identities("Dhocolim", ops, lambda q: Dh.level(q).objects(bound), rep, Dh.q_max - 1)
    return rep


def check_augmentation_pi0(M, bound: Bound, q: int = 0) -> Report:
    """π0 of ``ε: Z_q M -> M``: surjective, and injective away from the
    classes of the zeros."""
    from .pi0 import pi0

    rep = Report(f"π0 of the augmentation of {M.name}")
    Z = z_level(M, q)
    eps = augmentation(M, q).functor
    Pz, Pm = pi0(Z, bound), pi0(M, bound)
    image = {Pm.cls(eps.on_obj(a)) for a in Z.objects(bound)}
    rep.expect(image == set(Pm.classes()), "surjective", lambda: f"classes {set(Pm.classes()) - image} are missed")
    zero_cls = Pm.cls(M.zero)
    seen: dict = {}
    for a in Z.objects(bound):
        c = Pm.cls(eps.on_obj(a))
        if c == zero_cls:
            continue
        seen.setdefault(c, set()).add(Pz.cls(a))
    for c, zs in seen.items():
        rep.expect(len(zs) == 1, "injective-off-zero", lambda: f"class {c} of {M.name} has {len(zs)} preimages")
    zero_pre = {Pz.cls(a) for a in Z.objects(bound) if Pm.cls(eps.on_obj(a)) == zero_cls}
    # the old zero keeps its class and each adjoined zero is its own class
    rep.expect(len(zero_pre) == q + 2, "zero-classes",
               lambda: f"the zero class has {len(zero_pre)} preimages, expected {q + 2}")
    sec = augmentation_section(M, q)
    for a in M.objects(bound):
        rep.expect(eps.on_obj(sec.on_obj(a)) == a, "section", lambda: f"ε ι != id at {a!r}")
    for f in M.morphisms(bound):
        rep.expect(M.mor_eq(eps.on_mor(sec.on_mor(f)), f), "section", lambda: f"ε ι != id at {f!r}")
    return rep
