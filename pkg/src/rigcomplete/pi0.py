"""π0 by union-find, the Grothendieck ring oracle, the alternating sum and
group-completion witnesses."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable

from networkx.utils import UnionFind

from .effcat import Bound, EffCategory, Report, ResourceError, StructureError, encode, guarded


class IncompleteError(RuntimeError):
    """A bounded computation could not decide; raise the bound."""


@dataclass(frozen=True)
class MonoidPresentation:
    """A commutative monoid on ``generators`` subject to ``relations``.

    Elements are vectors of generator multiplicities.  ``mult`` maps a pair
    of generator indices to the vector of their product; it makes the
    monoid a rig when supplied.
    """

    generators: tuple
    relations: tuple = ()
    mult: dict | None = None


def _vectors(g: int, window: int):
    """All vectors in ``N^g`` with entry sum at most ``window``."""
    for total in range(window + 1):
        for combo in itertools.combinations_with_replacement(range(g), total):
            v = [0] * g
            for i in combo:
                v[i] += 1
            yield tuple(v)


def _add(u, v):
    return tuple(a + b for a, b in zip(u, v))


@dataclass
class K0Elem:
    """An element of the oracle's Grothendieck ring, in normal form."""

    ring: "GrothendieckRing"
    cls: int

    def __add__(self, other):
        return self.ring.add(self, other)

    def __neg__(self):
        return self.ring.neg(self)

    def __sub__(self, other):
        return self.ring.add(self, self.ring.neg(other))

    def __mul__(self, other):
        return self.ring.mul(self, other)

    def __eq__(self, other):
        return isinstance(other, K0Elem) and self.ring is other.ring and self.cls == other.cls

    def __hash__(self):
        return hash(self.cls)

    @property
    def normal_form(self) -> tuple:
        return self.ring.rep[self.cls]

    def __repr__(self):
        p, q = self.normal_form
        if len(p) == 1:
            return str(p[0] - q[0])
        return f"[{p}]-[{q}]"


class GrothendieckRing:
    """The Grothendieck group of a presented monoid, by congruence closure
    on formal differences ``(p, q)`` with ``|p|, |q| <= window``.

    Two differences are identified when related by a monoid relation on
    either side or by adding a generator to both sides.  Normal forms are
    the least pair of each class in (size, lexicographic) order.
    """

    def __init__(self, P: MonoidPresentation, window: int = 8):
        self.P, self.window = P, window
        g = len(P.generators)
        self.g = g
        vecs = list(_vectors(g, window))
        uf = UnionFind()
        pairs = [(p, q) for p in vecs for q in vecs]
        for pq in pairs:
            uf[pq]
        vset = set(vecs)
        for u, v in P.relations:
            for w in vecs:
                a, b = _add(u, w), _add(v, w)
                if a in vset and b in vset:
                    for q in vecs:
                        uf.union((a, q), (b, q))
                        uf.union((q, a), (q, b))
        units = [tuple(int(i == k) for i in range(g)) for k in range(g)]
        for p, q in pairs:
            for e in units:
                p2, q2 = _add(p, e), _add(q, e)
                if p2 in vset and q2 in vset:
                    uf.union((p, q), (p2, q2))
        key = lambda pq: (sum(pq[0]) + sum(pq[1]), pq)
        groups = sorted((sorted(s, key=key) for s in uf.to_sets()), key=lambda s: key(s[0]))
        self.rep = [s[0] for s in groups]
        self._cls = {pq: i for i, s in enumerate(groups) for pq in s}
        self.zero_vec = (0,) * g

    def __len__(self):
        return len(self.rep)

    def elem(self, p, q=None) -> K0Elem:
        q = self.zero_vec if q is None else tuple(q)
        p = tuple(p)
        try:
            return K0Elem(self, self._cls[(p, q)])
        except KeyError:
            raise IncompleteError(f"({p}, {q}) is outside the window {self.window}") from None

    def zero(self) -> K0Elem:
        return self.elem(self.zero_vec)

    def one(self) -> K0Elem:
        if not self.P.mult:
            raise StructureError("no multiplication registered")
        # the unit is the first generator by convention
        return self.elem(tuple(int(i == 0) for i in range(self.g)))

    def _reduce(self, p, q) -> K0Elem:
        # cancel common generators so the pair fits the window when possible
        c = tuple(min(a, b) for a, b in zip(p, q))
        p = tuple(a - m for a, m in zip(p, c))
        q = tuple(b - m for b, m in zip(q, c))
        return self.elem(p, q)

    def add(self, x: K0Elem, y: K0Elem) -> K0Elem:
        (p, q), (r, s) = x.normal_form, y.normal_form
        return self._reduce(_add(p, r), _add(q, s))

    def neg(self, x: K0Elem) -> K0Elem:
        p, q = x.normal_form
        return self.elem(q, p)

    def _vmul(self, u, v):
        out = [0] * self.g
        for i, a in enumerate(u):
            for j, b in enumerate(v):
                if a and b:
                    for k, c in enumerate(self.P.mult[(i, j)]):
                        out[k] += a * b * c
        return tuple(out)

    def mul(self, x: K0Elem, y: K0Elem) -> K0Elem:
        if not self.P.mult:
            raise StructureError("no multiplication registered")
        (p, q), (r, s) = x.normal_form, y.normal_form
        m = self._vmul
        return self._reduce(_add(m(p, r), m(q, s)), _add(m(p, s), m(q, r)))

    def elements(self) -> list[K0Elem]:
        return [K0Elem(self, i) for i in range(len(self.rep))]

    def from_int(self, n: int) -> K0Elem:
        """``n`` times the unit."""
        u = self.one()
        out = self.zero()
        for _ in range(abs(n)):
            out = out + u
        return out if n >= 0 else -out


def grothendieck_oracle(P: MonoidPresentation, window: int = 8) -> GrothendieckRing:
    return GrothendieckRing(P, window)


# path components

def _obj_key(a) -> tuple:
    terms = getattr(a, "terms", None)
    if terms is not None:
        return (1, len(terms), tuple(getattr(x, "n", 0) for x, _ in terms), repr(a))
    return (0, 0, (), repr(a))


class Pi0Partition:
    """Enumerated objects modulo zigzags of enumerated morphisms.

    Classes are numbered by their least representative in (length, index
    sizes, text) order, so numbering is deterministic for a fixed bound.
    """

    def __init__(self, objects: Iterable, uf: UnionFind, bound: Bound | None = None, name: str = ""):
        self.bound, self.name = bound, name
        self.objects = list(objects)
        groups: dict = {}
        for a in self.objects:
            groups.setdefault(uf[a], []).append(a)
        ordered = sorted((sorted(g, key=_obj_key) for g in groups.values()), key=lambda g: _obj_key(g[0]))
        self._members = ordered
        self._cls = {a: i for i, g in enumerate(ordered) for a in g}

    def __len__(self):
        return len(self._members)

    def __contains__(self, a):
        return a in self._cls

    def cls(self, a) -> int:
        try:
            return self._cls[a]
        except KeyError:
            raise IncompleteError(f"{a!r} is outside the enumeration; raise the bound") from None

    def classes(self) -> list[int]:
        return list(range(len(self._members)))

    def rep(self, c: int):
        return self._members[c][0]

    def members(self, c: int) -> list:
        return list(self._members[c])

    def same(self, a, b) -> bool:
        return self.cls(a) == self.cls(b)

    def refines_into(self, other: "Pi0Partition") -> bool:
        """Every class of ``self`` lies inside one class of ``other``."""
        return all(len({other.cls(a) for a in g}) == 1 for g in self._members)

    def to_json(self) -> dict:
        return {"classes": len(self), "objects": len(self.objects),
                "representatives": [encode(self.rep(c)) for c in self.classes()]}


def pi0(C: EffCategory, bound: Bound, objects=None, extra_edges: Iterable = ()) -> Pi0Partition:
    """Union-find over the undirected graph of enumerated morphisms between
    enumerated objects, plus any ``extra_edges``."""
    objs = list(C.objects(bound) if objects is None else objects)
    if len(objs) > bound.budget:
        raise ResourceError(f"{len(objs)} objects of {C.name}", bound)
    present = set(objs)
    uf = UnionFind(objs)
    for a in objs:
        for b in C.out_targets(a, bound):
            if b in present:
                uf.union(a, b)
    for a, b in extra_edges:
        if a in present and b in present:
            uf.union(a, b)
    return Pi0Partition(objs, uf, bound, C.name)


def stabilized(small: Pi0Partition, large: Pi0Partition) -> bool:
    """Raising the bound neither merged old classes nor created new ones."""
    if not small.refines_into(large):
        return False
    image = {large.cls(small.rep(c)) for c in small.classes()}
    return len(image) == len(small) == len(large)


# the alternating sum

def _full(x) -> bool:
    return set(x.T) == set(range(1, x.n + 1))


def alt_sum(h, K: GrothendieckRing, vector: Callable) -> K0Elem:
    """``Σ_i Σ_U (-1)^|U| [X_i(U)]`` over the terms whose signed subset is
    all of ``1..n``; every other term, the adjoined zeros and zero cubes
    contribute nothing."""
    total = K.zero()
    terms = getattr(h, "terms", None)
    if terms is None:
        return total
    for x, X in terms:
        entries = getattr(X, "entries", None)
        if entries is None or not _full(x):
            continue
        for mask, e in enumerate(entries):
            v = K.elem(vector(e))
            total = total - v if bin(mask).count("1") % 2 else total + v
    return total


def check_alt_sum_invariance(H, K: GrothendieckRing, vector: Callable, bound: Bound) -> Report:
    """``alt_sum(dom f) = alt_sum(cod f)`` for every enumerated morphism."""
    rep = Report(f"alternating sum on {H.name}")
    for a in H.objects(bound):
        va = alt_sum(a, K, vector)
        for f in H.out_homs(a, bound):
            vb = alt_sum(f.tgt, K, vector)
            rep.expect(va == vb, "alt-sum", lambda: f"{va!r} != {vb!r} along {f!r}")
    return rep


# group-completion witnesses

@dataclass
class Zigzag:
    """A path from ``start``; each step is ``(f, +1)`` for a morphism out
    of the current object and ``(f, -1)`` for one into it."""

    start: object
    steps: list = field(default_factory=list)

    def end(self):
        cur = self.start
        for f, d in self.steps:
            cur = f.tgt if d > 0 else f.src
        return cur

    def to_json(self) -> dict:
        return {"start": encode(self.start),
                "steps": [{"dir": "forward" if d > 0 else "backward", "mor": encode(f)} for f, d in self.steps]}


def verify_zigzag(H, z: Zigzag, end) -> None:
    """Raise unless every step is a valid morphism and the chain runs from
    ``z.start`` to ``end``."""
    cur = z.start
    for k, (f, d) in enumerate(z.steps):
        H.check_mor(f)
        here = f.src if d > 0 else f.tgt
        if here != cur:
            raise StructureError(f"step {k} starts at {here!r}, expected {cur!r}")
        cur = f.tgt if d > 0 else f.src
    if cur != end:
        raise StructureError(f"zigzag ends at {cur!r}, expected {end!r}")


def _zero_term(H):
    from .thomason import HObj

    z = H.J.zero
    return HObj(((z, H.D.fiber(z).zero),))


def _one_step(H, src, ell, rho):
    return H.make((1,), (ell,), (rho,), src)


def _negative_to_zero(H, y) -> list:
    """``1[(y,0)] <- 1[((n,∅),0)] -> 1[((n,1..n),0)] <- 1[((0,∅),0)]`` for
    ``y`` with a negative element."""
    from .indexing import FinInj, JMor, JObj
    from .thomason import HObj

    D = H.D
    e, full = JObj(y.n, ()), JObj(y.n, tuple(range(1, y.n + 1)))
    base = HObj(((e, D.fiber(e).zero),))
    zf = D.fiber(full).identity(D.fiber(full).zero)
    return [
        (_one_step(H, base, JMor(FinInj.identity(y.n), e, y), D.fiber(y).identity(D.fiber(y).zero)), -1),
        (_one_step(H, base, JMor(FinInj.identity(y.n), e, full), zf), +1),
        (_one_step(H, _zero_term(H), JMor(FinInj(0, y.n, ()), H.J.zero, full), zf), -1),
    ]


def _partial_to_zero(H, t) -> list:
    """A term over a positive proper ``(n, S)`` is pushed to
    ``(n, S ∪ {-i})``, whose fiber is the zero category."""
    from .indexing import FinInj, JMor, JObj

    (y, _), = t.terms
    i = min(k for k in range(1, y.n + 1) if k not in y.T)
    neg = JObj(y.n, y.T + (-i,))
    f = _one_step(H, t, JMor(FinInj.identity(y.n), y, neg), H.D.fiber(neg).identity(H.D.fiber(neg).zero))
    return [(f, +1)] + _negative_to_zero(H, neg)


def reflect(x, a):
    """The partner cube ``b_U = a_{U △ {n}}``."""
    from .cube import CubeObj

    bit = 1 << (x.n - 1)
    return CubeObj(x, tuple(a.entries[m ^ bit] for m in range(len(a.entries))))


def _full_path(H, x, a) -> list:
    """From ``1[(x,a)] ⊕ 1[(x,b)]`` with ``b`` the reflection of ``a``:
    merge, regroup into the diagonal of ``c_W = a_W ⊕ a_{W ∪ n}`` over
    ``(n, 1..n-1)``, step back to ``c`` and push ``c`` to zero."""
    from .cube import CubeMor, CubeObj
    from .indexing import FinInj, JMor, JObj
    from .thomason import HObj

    D, J, M, n = H.D, H.J, H.D.M, x.n
    F = D.fiber(x)
    b = reflect(x, a)
    start = HObj(((x, a), (x, b)))
    merge = H.make((1, 1), (J.identity(x), J.identity(x)), (F.identity(F.oplus(a, b)),), start)
    bit = 1 << (n - 1)
    ents = tuple(M.twist(a.entries[m], a.entries[m ^ bit]) if m & bit
                 else M.identity(M.oplus(a.entries[m], a.entries[m | bit])) for m in range(len(a.entries)))
    regroup = _one_step(H, merge.tgt, J.identity(x), CubeMor(x, ents))
    sub = JObj(n, tuple(range(1, n)))
    c = CubeObj(sub, tuple(M.oplus(a.entries[m], a.entries[m | bit]) for m in range(bit)))
    iota = JMor(FinInj.identity(n), sub, x)
    base = HObj(((sub, c),))
    back = _one_step(H, base, iota, F.identity(D.transition(iota, c)))
    if back.tgt != regroup.tgt:
        raise StructureError(f"regrouped cube {regroup.tgt!r} is not the diagonal of {c!r}")
    return [(merge, +1), (regroup, +1), (back, -1)] + _partial_to_zero(H, base)


def _term_plan(H, x, X):
    """``(witness or None, steps)``: the steps run from the term, followed
    by its witness if any, to the zero term."""
    from .indexing import FinInj, JMor, JObj
    from .thomason import HObj

    t = HObj(((x, X),))
    if not x.positive():
        return None, _negative_to_zero(H, x)
    if not _full(x):
        return None, _partial_to_zero(H, t)
    if x.n == 0:
        if t == _zero_term(H):
            return None, []
        # lift to (1,{1}), where the cube is (X, 0)
        one = JObj(1, (1,))
        k = JMor(FinInj(0, 1, ()), x, one)
        Y = H.D.transition(k, X)
        w = HObj(((one, reflect(one, Y)),))
        lift = H.oplus_mor(_one_step(H, t, k, H.D.fiber(one).identity(Y)), H.identity(w))
        return w, [(lift, +1)] + _full_path(H, one, Y)
    return HObj(((x, reflect(x, X)),)), _full_path(H, x, X)


class _Walker:
    """Runs per-block zigzags inside a sum, keeping the other blocks fixed."""

    def __init__(self, H, blocks: list):
        self.H, self.blocks = H, list(blocks)
        self.steps: list = []

    def move(self, k: int, f, d: int):
        H = self.H
        parts = [H.identity(b) for b in self.blocks]
        parts[k] = f
        self.steps.append((H.sum_mor(parts), d))
        self.blocks[k] = f.tgt if d > 0 else f.src


def inverse_witness(H, a) -> tuple:
    """``(w, zigzag, z0)``: the zigzag runs from ``a ⊕ w`` to the zero term
    ``z0 = 1[(0, 0)]`` of ``H``, a homotopy colimit of a cube diagram."""
    from .indexing import Perm
    from .thomason import HObj

    z0 = _zero_term(H)
    plans = [_term_plan(H, x, X) for x, X in a.terms]
    ws = [w for w, _ in plans if w is not None]
    witness = H.sum(ws) if ws else z0
    src = H.oplus(a, witness)
    # regroup a ⊕ w as (a_1 w_1)(a_2 w_2)..., then z0 if w was not needed
    order, wpos = [], a.n
    for i, (w, _) in enumerate(plans):
        order.append(i)
        if w is not None:
            order.append(wpos)
            wpos += 1
    if not ws:
        order.append(a.n)
    images = [0] * src.n
    for k, s in enumerate(order):
        images[s] = k + 1
    reo = H.reorder(src, Perm(images))
    steps = [] if reo.src == reo.tgt else [(reo, +1)]
    blocks, k = [], 0
    for w, _ in plans:
        size = 1 if w is None else 2
        blocks.append(HObj(reo.tgt.terms[k:k + size]))
        k += size
    if not ws:
        blocks.append(z0)
    walker = _Walker(H, blocks)
    for bi, (_, path) in enumerate(plans):
        for f, d in path:
            walker.move(bi, f, d)
    steps.extend(walker.steps)
    cur = H.sum(walker.blocks)
    if cur.n > 1:
        J, F0 = H.J, H.D.fiber(H.J.zero)
        collapse = H.make((1,) * cur.n, tuple(J.identity(J.zero) for _ in range(cur.n)),
                          (F0.identity(F0.sum([X for _, X in cur.terms])),), cur)
        steps.append((collapse, +1))
    return witness, Zigzag(src, steps), z0


def check_witnesses(H, bound: Bound, objects=None) -> Report:
    """Build and verify an inverse witness for every enumerated object."""
    rep = Report(f"inverse witnesses in {H.name}")
    for a in (H.objects(bound) if objects is None else objects):
        def run():
            w, z, z0 = inverse_witness(H, a)
            verify_zigzag(H, z, z0)
            return w

        if guarded(rep, "witness", run) is not None:
            rep.tick("witness")
    return rep


# the ring of components of level 0

@dataclass
class RingTable:
    """Sum and product on the path components of level 0, with labels and
    inverse witnesses per class."""

    partition: Pi0Partition
    zero: int
    one: int
    add: dict
    mul: dict
    witnesses: dict = field(default_factory=dict)
    labels: dict = field(default_factory=dict)
    stable: bool | None = None

    def __len__(self):
        return len(self.partition)

    def neg(self, c: int) -> int | None:
        for d in self.partition.classes():
            if self.add[(c, d)] == self.zero:
                return d
        return None

    def check_ring(self) -> Report:
        """Ring axioms on the class table, additive inverses included."""
        rep = Report("ring axioms on π0")
        cs = self.partition.classes()
        A, Mu = self.add, self.mul
        for a in cs:
            rep.expect(A[(a, self.zero)] == a, "zero", lambda: f"{a} + 0 != {a}")
            rep.expect(Mu[(a, self.one)] == a == Mu[(self.one, a)], "one", lambda: f"1 is not a unit at {a}")
            rep.expect(Mu[(a, self.zero)] == self.zero, "annihilation", lambda: f"{a} * 0 != 0")
            rep.expect(self.neg(a) is not None, "inverse", lambda: f"class {a} has no additive inverse")
            for b in cs:
                rep.expect(A[(a, b)] == A[(b, a)], "commutative", lambda: f"{a} + {b} != {b} + {a}")
                for c in cs:
                    rep.expect(A[(A[(a, b)], c)] == A[(a, A[(b, c)])], "associative", lambda: f"+ at {(a, b, c)}")
                    rep.expect(Mu[(Mu[(a, b)], c)] == Mu[(a, Mu[(b, c)])], "associative", lambda: f"* at {(a, b, c)}")
                    rep.expect(Mu[(a, A[(b, c)])] == A[(Mu[(a, b)], Mu[(a, c)])], "distributive",
                               lambda: f"left distributivity at {(a, b, c)}")
                    rep.expect(Mu[(A[(a, b)], c)] == A[(Mu[(a, c)], Mu[(b, c)])], "distributive",
                               lambda: f"right distributivity at {(a, b, c)}")
        return rep

    def check_iso(self, K: GrothendieckRing) -> Report:
        """The labels form a ring isomorphism onto ``K``."""
        rep = Report("π0 against the Grothendieck ring")
        L = self.labels
        cs = self.partition.classes()
        for c in cs:
            vals = {L_m for L_m in self._member_labels(c)}
            rep.expect(len(vals) == 1, "well-defined", lambda: f"class {c} carries labels {vals}")
        rep.expect(len({L[c] for c in cs}) == len(cs), "injective", lambda: f"labels {L} repeat")
        rep.expect({L[c] for c in cs} == set(K.elements()), "surjective",
                   lambda: f"labels {sorted(map(repr, L.values()))} miss part of {K.elements()}")
        rep.expect(L[self.zero] == K.zero(), "zero", "the zero class is not labelled 0")
        rep.expect(L[self.one] == K.one(), "one", "the unit class is not labelled 1")
        for a in cs:
            for b in cs:
                rep.expect(L[self.add[(a, b)]] == L[a] + L[b], "additive", lambda: f"labels do not add at {(a, b)}")
                rep.expect(L[self.mul[(a, b)]] == L[a] * L[b], "multiplicative",
                           lambda: f"labels do not multiply at {(a, b)}")
        return rep

    def _member_labels(self, c):
        return self._all_labels.get(c, [self.labels[c]])

    def to_json(self) -> dict:
        cs = self.partition.classes()
        return {
            "classes": [
                {"class": c, "representative": encode(self.partition.rep(c)),
                 "size": len(self.partition.members(c)),
                 "alt_sum": repr(self.labels[c]) if c in self.labels else None,
                 "inverse": self.neg(c),
                 "witness": encode(self.witnesses[c][0]) if c in self.witnesses else None}
                for c in cs],
            "zero": self.zero, "one": self.one,
            "add": [[self.add[(a, b)] for b in cs] for a in cs],
            "mul": [[self.mul[(a, b)] for b in cs] for a in cs],
            "stabilized": self.stable,
        }


def level0_partition(Dh, bound: Bound) -> Pi0Partition:
    """Components of ``|Dhocolim|`` seen from level 0: morphisms of level 0
    plus ``d_0(o) ~ d_1(o)`` for level-1 objects ``o`` carrying ``ζ_0``."""
    from .zeros import Zeta

    L0, L1 = Dh.level(0), Dh.level(1)
    d0, d1 = Dh.face(1, 0).on_obj, Dh.face(1, 1).on_obj
    extra = []
    for o in L1.H.objects(bound):
        if any(isinstance(X, Zeta) for _, X in o.terms):
            extra.append((d0(o), d1(o)))
    return pi0(L0, bound, L0.objects(bound), extra)


def pi0_ring(C, bound: Bound, K: GrothendieckRing | None = None, vector: Callable | None = None,
             witnesses: bool = True, check_stable: bool = True) -> RingTable:
    """The ring of components of level 0 of ``Dhocolim_J C`` at ``bound``."""
    from .zeros import DerivedHocolim, Zeta, plus

    Dh = DerivedHocolim(C, 1, validate=False)
    L0 = Dh.level(0)
    P = level0_partition(Dh, bound)
    cs = P.classes()
    add, mul = {}, {}
    for a in cs:
        for b in cs:
            ra, rb = P.rep(a), P.rep(b)
            add[(a, b)] = P.cls(L0.oplus(ra, rb))
            mul[(a, b)] = P.cls(L0.tensor(ra, rb))
    T = RingTable(P, P.cls(plus(0)), P.cls(L0.one), add, mul)
    if witnesses:
        for c in cs:
            r = P.rep(c)
            if isinstance(r, Zeta):
                T.witnesses[c] = (r, Zigzag(r))
                continue
            w, z, z0 = inverse_witness(L0.H, r)
            verify_zigzag(L0.H, z, z0)
            if P.cls(z0) != T.zero:
                raise StructureError(f"{z0!r} is not in the zero class")
            T.witnesses[c] = (w, z)
    T._all_labels = {}
    if K is not None and vector is not None:
        for c in cs:
            T._all_labels[c] = [alt_sum(m, K, vector) for m in P.members(c)]
            T.labels[c] = T._all_labels[c][0]
    if check_stable:
        big = level0_partition(Dh, bound.but(length=bound.length + 1))
        T.stable = stabilized(P, big)
    return T
