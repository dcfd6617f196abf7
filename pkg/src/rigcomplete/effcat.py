"""Effectively enumerable categories, functors and left lax transformations.

A category here is an object with decidable equality, a partial composition
and bounded, deterministic enumerators.  Checkers walk the enumerated data and
return a :class:`Report` listing every violation they find.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field, replace
from typing import Any, Callable, Iterable, Sequence


class CompositionError(ValueError):
    def __init__(self, g, f, msg: str = ""):
        super().__init__(msg or f"cannot compose {g!r} after {f!r}")
        self.g, self.f = g, f


class ResourceError(RuntimeError):
    def __init__(self, what: str, bound: "Bound"):
        super().__init__(f"enumeration budget exhausted ({what}) at {bound}")
        self.bound = bound


class StructureError(ValueError):
    pass


@dataclass(frozen=True)
class Bound:
    """One budget threaded through all enumerators.

    ``index`` caps the size ``n`` of indexing objects, ``length`` the number of
    terms in a homotopy colimit object, ``size`` the size of base objects.
    ``samples`` caps the number of instantiated diagrams per condition, and
    ``budget`` caps the total number of enumerated items.
    """

    index: int = 2
    length: int = 2
    size: int = 3
    samples: int = 200_000
    budget: int = 5_000_000
    seed: int = 0

    def but(self, **kw) -> "Bound":
        return replace(self, **kw)


@dataclass
class Violation:
    condition: str
    message: str

    def __str__(self):
        return f"[{self.condition}] {self.message}"


@dataclass
class Report:
    subject: str = ""
    violations: list = field(default_factory=list)
    counts: dict = field(default_factory=dict)
    exhaustive: bool = True

    @property
    def ok(self) -> bool:
        return not self.violations

    def fail(self, condition: str, message: str) -> None:
        self.violations.append(Violation(condition, message))

    def tick(self, condition: str, k: int = 1) -> None:
        self.counts[condition] = self.counts.get(condition, 0) + k

    def expect(self, cond: bool, condition: str, message: Callable[[], str] | str) -> bool:
        self.tick(condition)
        if not cond:
            self.fail(condition, message() if callable(message) else message)
        return cond

    def merge(self, other: "Report") -> "Report":
        self.violations.extend(other.violations)
        for k, v in other.counts.items():
            self.tick(k, v)
        self.exhaustive = self.exhaustive and other.exhaustive
        return self

    def failed_conditions(self) -> list[str]:
        return sorted({v.condition for v in self.violations})

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "exhaustive": self.exhaustive,
            "counts": dict(sorted(self.counts.items())),
            "violations": [{"condition": v.condition, "message": v.message} for v in self.violations],
        }

    def __str__(self):
        head = f"{self.subject}: {'clean' if self.ok else f'{len(self.violations)} violation(s)'}"
        return "\n".join([head] + [f"  {v}" for v in self.violations[:20]])


def guarded(report: Report, condition: str, fn: Callable[[], Any]) -> Any:
    """Run ``fn``; record a violation instead of propagating structural errors."""
    try:
        return fn()
    except (CompositionError, StructureError, ValueError) as exc:
        report.tick(condition)
        report.fail(condition, f"{type(exc).__name__}: {exc}")
        return None


def sample_product(pools: Sequence[Sequence], cap: int, rng: random.Random, report: Report | None = None) -> Iterable[tuple]:
    """Every tuple of the product if it has at most ``cap`` elements, otherwise
    ``cap`` tuples drawn with a seeded generator."""
    total = 1
    for p in pools:
        total *= len(p)
        if total == 0:
            return []
    if total <= cap:
        return itertools.product(*pools)
    if report is not None:
        report.exhaustive = False
    return (tuple(rng.choice(p) for p in pools) for _ in range(cap))


class EffCategory:
    """Base class for effectively enumerable categories.

    Subclasses implement ``dom``, ``cod``, ``identity``, ``_compose`` and the
    enumerators.  ``compose(g, f)`` checks endpoints and returns ``g ∘ f``.
    """

    name = "category"

    def dom(self, f):
        raise NotImplementedError

    def cod(self, f):
        raise NotImplementedError

    def identity(self, a):
        raise NotImplementedError

    def _compose(self, g, f):
        raise NotImplementedError

    def compose(self, g, f):
        if not self.obj_eq(self.cod(f), self.dom(g)):
            raise CompositionError(g, f, f"cod {self.cod(f)!r} != dom {self.dom(g)!r}")
        return self._compose(g, f)

    def compose_all(self, *mors):
        """``compose_all(h, g, f) = h ∘ g ∘ f``."""
        out = mors[-1]
        for m in reversed(mors[:-1]):
            out = self.compose(m, out)
        return out

    def obj_eq(self, a, b) -> bool:
        return a == b

    def mor_eq(self, f, g) -> bool:
        return f == g

    def objects(self, bound: Bound) -> list:
        raise NotImplementedError

    def homs(self, a, b, bound: Bound) -> list:
        return [f for f in self.out_homs(a, bound) if self.obj_eq(self.cod(f), b)]

    def out_homs(self, a, bound: Bound) -> list:
        return [f for b in self.objects(bound) for f in self.homs(a, b, bound)]

    def in_bound(self, a, bound: Bound) -> bool:
        return True

    def out_targets(self, a, bound: Bound) -> list:
        """Distinct codomains of morphisms out of ``a``; enough for π0."""
        seen, out = set(), []
        for f in self.out_homs(a, bound):
            b = self.cod(f)
            if b not in seen:
                seen.add(b)
                out.append(b)
        return out

    def morphisms(self, bound: Bound) -> list:
        out = []
        for a in self.objects(bound):
            out.extend(self.out_homs(a, bound))
            if len(out) > bound.budget:
                raise ResourceError(f"morphisms of {self.name}", bound)
        return out

    def sample_out(self, a, rng: random.Random, bound: Bound):
        return rng.choice(self.out_homs(a, bound))

    def __repr__(self):
        return f"<{self.name}>"


def cached_hash(obj, fields: tuple) -> int:
    """Hash of an immutable term, computed once; terms nest deeply and are
    hashed constantly by the enumerators."""
    h = obj.__dict__.get("_hash")
    if h is None:
        h = hash(fields)
        object.__setattr__(obj, "_hash", h)
    return h


def encode(x):
    """JSON-ready form of an object or morphism term."""
    if hasattr(x, "to_json"):
        return x.to_json()
    if isinstance(x, (tuple, list)):
        return [encode(e) for e in x]
    if isinstance(x, (int, str, float, bool)) or x is None:
        return x
    return repr(x)


def compose(C: EffCategory, g, f):
    """``g ∘ f`` in ``C``; raises :class:`CompositionError` on mismatch."""
    return C.compose(g, f)


def _by_dom(C: EffCategory, mors: list) -> dict:
    out: dict = {}
    for f in mors:
        out.setdefault(C.dom(f), []).append(f)
    return out


def check_category(C: EffCategory, bound: Bound, mors: list | None = None) -> Report:
    """Identity and associativity laws over enumerated composable data."""
    rep = Report(f"category {C.name}")
    if mors is None:
        mors = C.morphisms(bound)
    by_dom = _by_dom(C, mors)
    for f in mors:
        a, b = C.dom(f), C.cod(f)
        rep.expect(C.mor_eq(C.compose(C.identity(b), f), f), "identity", lambda: f"id∘f != f for {f!r}")
        rep.expect(C.mor_eq(C.compose(f, C.identity(a)), f), "identity", lambda: f"f∘id != f for {f!r}")
    budget = bound.samples
    n = 0
    for f in mors:
        for g in by_dom.get(C.cod(f), ()):
            gf = C.compose(g, f)
            for h in by_dom.get(C.cod(g), ()):
                n += 1
                if n > budget:
                    rep.exhaustive = False
                    return rep
                lhs = C.compose(h, gf)
                rhs = C.compose(C.compose(h, g), f)
                rep.expect(C.mor_eq(lhs, rhs), "associativity", lambda: f"h∘(g∘f) != (h∘g)∘f for triple {(f, g, h)!r}")
    return rep


class TableCategory(EffCategory):
    """A finite category from explicit tables.

    ``mors`` maps a morphism name to ``(dom, cod)``; ``table`` maps a pair
    ``(g, f)`` to the name of ``g ∘ f``; ``ids`` maps an object to its identity.
    """

    def __init__(self, objects, mors: dict, ids: dict, table: dict, name: str = "table"):
        self._objects = list(objects)
        self.mors = dict(mors)
        self.ids = dict(ids)
        self.table = dict(table)
        self.name = name

    def dom(self, f):
        return self.mors[f][0]

    def cod(self, f):
        return self.mors[f][1]

    def identity(self, a):
        return self.ids[a]

    def _compose(self, g, f):
        return self.table[(g, f)]

    def objects(self, bound):
        return list(self._objects)

    def homs(self, a, b, bound):
        return [f for f, (d, c) in self.mors.items() if d == a and c == b]

    def out_homs(self, a, bound):
        return [f for f, (d, _) in self.mors.items() if d == a]


def discrete_category(objects: Iterable, name: str = "discrete") -> TableCategory:
    objs = list(objects)
    mors = {("id", a): (a, a) for a in objs}
    ids = {a: ("id", a) for a in objs}
    table = {(("id", a), ("id", a)): ("id", a) for a in objs}
    return TableCategory(objs, mors, ids, table, name)


@dataclass
class FunctorData:
    source: EffCategory
    target: EffCategory
    on_obj: Callable
    on_mor: Callable
    name: str = "F"


def check_functor(F: FunctorData, bound: Bound, mors: list | None = None) -> Report:
    rep = Report(f"functor {F.name}")
    S, T = F.source, F.target
    if mors is None:
        mors = S.morphisms(bound)
    by_dom = _by_dom(S, mors)
    for a in {S.dom(f) for f in mors} | {S.cod(f) for f in mors}:
        rep.expect(T.mor_eq(F.on_mor(S.identity(a)), T.identity(F.on_obj(a))), "identities", lambda: f"F(id) != id at {a!r}")
    for f in mors:
        Ff = F.on_mor(f)
        rep.expect(T.obj_eq(T.dom(Ff), F.on_obj(S.dom(f))) and T.obj_eq(T.cod(Ff), F.on_obj(S.cod(f))),
                   "endpoints", lambda: f"F(f) has wrong endpoints for {f!r}")
    pairs = [(f, g) for f in mors for g in by_dom.get(S.cod(f), ())]
    rng = random.Random(bound.seed)
    if len(pairs) > bound.samples:
        rep.exhaustive = False
        pairs = rng.sample(pairs, bound.samples)
    for f, g in pairs:
        lhs = F.on_mor(S.compose(g, f))
        rhs = guarded(rep, "composition", lambda: T.compose(F.on_mor(g), F.on_mor(f)))
        if rhs is not None:
            rep.expect(T.mor_eq(lhs, rhs), "composition", lambda: f"F(g∘f) != F(g)∘F(f) for {(f, g)!r}")
    return rep


@dataclass
class LeftLaxData:
    """A left lax transformation between two ``J``-shaped diagrams.

    ``source_obj(x)`` lists sample objects of ``C(x)``; ``source_map(k, X)``
    applies ``C(k)``; ``component(x, X)`` applies ``F_x``; ``nu(k, X)`` is the
    component of ``ν^k`` at ``X``, a morphism ``D(k)(F_x X) -> F_y(C(k) X)``.
    ``target_map(k, f)`` applies ``D(k)`` to a morphism of ``D(x)``, and
    ``target(y)`` returns ``D(y)`` as an :class:`EffCategory`.
    """

    index: EffCategory
    source_obj: Callable
    source_map: Callable
    component: Callable
    nu: Callable
    target_map: Callable
    target: Callable
    name: str = "ν"


def check_left_lax(T: LeftLaxData, bound: Bound) -> Report:
    """``ν^{id} = id`` and ``ν^{ℓk} = ν^ℓ C(k) ∘ D(ℓ) ν^k`` on enumerated data."""
    rep = Report(f"left lax {T.name}")
    J = T.index
    mors = J.morphisms(bound)
    for x in J.objects(bound):
        Dx = T.target(x)
        for X in T.source_obj(x):
            got = T.nu(J.identity(x), X)
            rep.expect(Dx.mor_eq(got, Dx.identity(T.component(x, X))), "unit", lambda: f"ν^id != id at {x!r}, {X!r}")
    by_dom = _by_dom(J, mors)
    for k in mors:
        x = J.dom(k)
        for l in by_dom.get(J.cod(k), ()):
            z = J.cod(l)
            Dz = T.target(z)
            lk = J.compose(l, k)
            for X in T.source_obj(x):
                lhs = T.nu(lk, X)
                rhs = guarded(rep, "cocycle", lambda: Dz.compose(T.nu(l, T.source_map(k, X)), T.target_map(l, T.nu(k, X))))
                if rhs is not None:
                    rep.expect(Dz.mor_eq(lhs, rhs), "cocycle", lambda: f"ν^(ℓk) != ν^ℓ C(k) ∘ D(ℓ)ν^k for k={k!r}, ℓ={l!r}, X={X!r}")
    return rep
