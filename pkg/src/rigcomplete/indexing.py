"""Finite sets, signed subsets and the indexing category I∫Q.

Objects of I∫Q are pairs ``(n, T)`` where ``T`` is a set of nonzero integers
with ``|t| <= n`` and no index appearing with both signs.  A morphism
``(m, S) -> (n, T)`` is an injection ``phi: m -> n`` such that the image
``Q(phi)(S) = phi(S) | (n - im phi)`` is contained in ``T``.  The inclusion
is a property, so a morphism is stored as ``phi`` plus its endpoints.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .effcat import Bound, EffCategory, StructureError, cached_hash
from .permcat import PermutativeCat


class Perm:
    """A bijection of ``{1..n}`` stored as the tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation: {images}")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(range(1, n + 1))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def after(self, other: "Perm") -> "Perm":
        """Return ``self ∘ other``."""
        if other.n != self.n:
            raise ValueError("arity mismatch")
        im = self.images
        return Perm(im[j - 1] for j in other.images)

    def inverse(self) -> "Perm":
        inv = [0] * self.n
        for i, j in enumerate(self.images, 1):
            inv[j - 1] = i
        return Perm(inv)

    def __add__(self, other: "Perm") -> "Perm":
        """Block sum: ``self`` on the first block, ``other`` shifted."""
        n = self.n
        return Perm(self.images + tuple(n + j for j in other.images))

    def __mul__(self, other: "Perm") -> "Perm":
        """Product on ``n*m`` with ``(i, j)`` encoded as ``(i-1)*m + j``."""
        m = other.n
        return Perm(
            (self(i) - 1) * m + other(j)
            for i in range(1, self.n + 1)
            for j in range(1, m + 1)
        )

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images, 1))

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        return hash(("Perm", self.images))

    def __lt__(self, other: "Perm") -> bool:
        return (self.n, self.images) < (other.n, other.images)

    def to_json(self) -> list:
        return list(self.images)

    def __repr__(self):
        return f"Perm{list(self.images)}"


def shuffle_chi(n: int, m: int) -> Perm:
    """The block swap ``n + m -> m + n``."""
    if n < 0 or m < 0:
        raise ValueError("sizes must be nonnegative")
    return Perm([m + i for i in range(1, n + 1)] + [i - n for i in range(n + 1, n + m + 1)])


def transpose_perm(n: int, m: int) -> Perm:
    """Matrix transposition: ``(i, j)`` in ``n*m`` goes to ``(j, i)`` in ``m*n``."""
    return Perm(
        (j - 1) * n + i for i in range(1, n + 1) for j in range(1, m + 1)
    )


def regroup_perm(n: int, widths: Sequence[int]) -> Perm:
    """Reorder ``⊕_t (n x widths[t])`` into ``n x (Σ widths)``.

    Position ``(i, j)`` of block ``t`` goes to ``(i, offset_t + j)``.
    """
    total = sum(widths)
    images = []
    off = 0
    for w in widths:
        for i in range(1, n + 1):
            for j in range(1, w + 1):
                images.append((i - 1) * total + off + j)
        off += w
    return Perm(images)


def left_dist_perm(n: int, m: int, m2: int) -> Perm:
    """The left distributivity permutation ``n*m + n*m2 -> n*(m+m2)``."""
    return regroup_perm(n, (m, m2))


@dataclass(frozen=True)
class FinInj:
    """An injection ``{1..m} -> {1..n}``."""

    m: int
    n: int
    images: tuple

    def __hash__(self):
        return cached_hash(self, (self.m, self.n, self.images))

    def __post_init__(self):
        im = tuple(self.images)
        object.__setattr__(self, "images", im)
        if len(im) != self.m or len(set(im)) != self.m:
            raise ValueError(f"not injective: {im}")
        if any(not 1 <= j <= self.n for j in im):
            raise ValueError(f"image out of range: {im}")

    @classmethod
    def identity(cls, n: int) -> "FinInj":
        return cls(n, n, tuple(range(1, n + 1)))

    def __call__(self, i: int) -> int:
        """Odd extension to signed indices."""
        return self.images[i - 1] if i > 0 else -self.images[-i - 1]

    def after(self, other: "FinInj") -> "FinInj":
        if other.n != self.m:
            raise ValueError("arity mismatch")
        return FinInj(other.m, self.n, tuple(self(j) for j in other.images))

    def complement(self) -> tuple:
        hit = set(self.images)
        return tuple(j for j in range(1, self.n + 1) if j not in hit)

    def preimage(self, j: int) -> int | None:
        try:
            return self.images.index(j) + 1
        except ValueError:
            return None

    def __add__(self, other: "FinInj") -> "FinInj":
        n = self.n
        return FinInj(self.m + other.m, n + other.n, self.images + tuple(n + j for j in other.images))

    @classmethod
    def from_perm(cls, p: Perm) -> "FinInj":
        return cls(p.n, p.n, p.images)


def _canon(elems) -> tuple:
    return tuple(sorted(set(elems), key=lambda e: (abs(e), e)))


@dataclass(frozen=True)
class SignedSubset:
    """A subset of ``{±1..±n}`` on which the absolute value is injective."""

    n: int
    elems: tuple

    def __post_init__(self):
        raw = tuple(self.elems)
        el = _canon(raw)
        if len(el) != len(raw):
            raise ValueError(f"repeated element in {raw}")
        object.__setattr__(self, "elems", el)
        absv = [abs(e) for e in el]
        if any(e == 0 or abs(e) > self.n for e in el) or len(set(absv)) != len(absv):
            raise ValueError(f"invalid signed subset {el} of ±{self.n}")

    def positive(self) -> bool:
        return all(e > 0 for e in self.elems)

    def __le__(self, other: "SignedSubset") -> bool:
        return self.n == other.n and set(self.elems) <= set(other.elems)


def q_apply(phi: FinInj, S: SignedSubset) -> SignedSubset:
    """``φ(S)`` with ``φ`` extended oddly, plus the complement of the image."""
    if S.n != phi.m:
        raise ValueError("ambient size does not match the source of φ")
    return SignedSubset(phi.n, tuple(phi(e) for e in S.elems) + phi.complement())


@dataclass(frozen=True)
class JObj:
    n: int
    T: tuple

    def __hash__(self):
        return cached_hash(self, (self.n, self.T))

    def __post_init__(self):
        object.__setattr__(self, "T", SignedSubset(self.n, tuple(self.T)).elems)

    @property
    def subset(self) -> SignedSubset:
        return SignedSubset(self.n, self.T)

    def positive(self) -> bool:
        return all(e > 0 for e in self.T)

    def to_json(self) -> dict:
        return {"n": self.n, "T": list(self.T)}

    @classmethod
    def from_json(cls, d: dict) -> "JObj":
        return cls(d["n"], tuple(d["T"]))

    def __repr__(self):
        return f"({self.n},{{{','.join(map(str, self.T))}}})"


@dataclass(frozen=True)
class JMor:
    phi: FinInj
    src: JObj
    tgt: JObj

    def __hash__(self):
        return cached_hash(self, (self.phi, self.src, self.tgt))

    def __post_init__(self):
        if self.phi.m != self.src.n or self.phi.n != self.tgt.n:
            raise StructureError(f"φ has the wrong arity for {self.src} -> {self.tgt}")
        if not q_apply(self.phi, self.src.subset) <= self.tgt.subset:
            raise StructureError(f"inclusion fails for φ={self.phi.images}: {self.src} -> {self.tgt}")

    def to_json(self) -> dict:
        return {"phi": list(self.phi.images), "from": self.src.to_json(), "to": self.tgt.to_json()}

    @classmethod
    def from_json(cls, d: dict) -> "JMor":
        src, tgt = JObj.from_json(d["from"]), JObj.from_json(d["to"])
        return cls(FinInj(src.n, tgt.n, tuple(d["phi"])), src, tgt)

    def __repr__(self):
        return f"{self.src}-{list(self.phi.images)}->{self.tgt}"


J_ZERO = JObj(0, ())


def j_identity(x: JObj) -> JMor:
    return JMor(FinInj.identity(x.n), x, x)


@lru_cache(maxsize=1 << 16)
def j_compose(g: JMor, f: JMor) -> JMor:
    if f.tgt != g.src:
        raise StructureError(f"cannot compose {g} after {f}")
    return JMor(g.phi.after(f.phi), f.src, g.tgt)


def _in2(n: int, e: int) -> int:
    return e + n if e > 0 else e - n


@lru_cache(maxsize=1 << 16)
def j_add(x: JObj, y: JObj) -> JObj:
    return JObj(x.n + y.n, x.T + tuple(_in2(x.n, e) for e in y.T))


@lru_cache(maxsize=1 << 16)
def j_add_mor(f: JMor, g: JMor) -> JMor:
    return JMor(f.phi + g.phi, j_add(f.src, g.src), j_add(f.tgt, g.tgt))


@lru_cache(maxsize=1 << 16)
def j_twist(x: JObj, y: JObj) -> JMor:
    """``(χ(n, m), id): x + y -> y + x``."""
    return JMor(FinInj.from_perm(shuffle_chi(x.n, y.n)), j_add(x, y), j_add(y, x))


def signed_subsets(n: int) -> Iterator[tuple]:
    for signs in itertools.product((0, 1, -1), repeat=n):
        yield tuple(s * (i + 1) for i, s in enumerate(signs) if s)


def injections(m: int, n: int) -> Iterator[FinInj]:
    for im in itertools.permutations(range(1, n + 1), m):
        yield FinInj(m, n, im)


def enumerate_J(bound: Bound) -> tuple[list[JObj], list[JMor]]:
    """All objects with ``n <= bound.index`` and all morphisms between them."""
    J = JCategory()
    objs = J.objects(bound)
    mors = [f for x in objs for y in objs for f in J.homs(x, y, bound)]
    return objs, mors


class JCategory(PermutativeCat):
    """I∫Q with addition, zero ``(0, ∅)`` and twist ``(χ, id)``."""

    name = "I∫Q"
    zero = J_ZERO

    def __init__(self):
        self._homs: dict = {}

    def dom(self, f):
        return f.src

    def cod(self, f):
        return f.tgt

    def identity(self, a):
        return j_identity(a)

    def _compose(self, g, f):
        return j_compose(g, f)

    def objects(self, bound):
        return [JObj(n, T) for n in range(bound.index + 1) for T in signed_subsets(n)]

    def homs(self, a, b, bound=None):
        key = (a, b)
        if key not in self._homs:
            out = []
            S, T = a.subset, b.subset
            for phi in injections(a.n, b.n):
                if q_apply(phi, S) <= T:
                    out.append(JMor(phi, a, b))
            self._homs[key] = out
        return self._homs[key]

    def in_bound(self, a, bound):
        return a.n <= bound.index

    def oplus(self, a, b):
        return j_add(a, b)

    def oplus_mor(self, f, g):
        return j_add_mor(f, g)

    def twist(self, a, b):
        return j_twist(a, b)


class ICategory(EffCategory):
    """Finite sets ``n`` and injections."""

    name = "I"

    def dom(self, f):
        return f.m

    def cod(self, f):
        return f.n

    def identity(self, a):
        return FinInj.identity(a)

    def _compose(self, g, f):
        return g.after(f)

    def objects(self, bound):
        return list(range(bound.index + 1))

    def homs(self, a, b, bound=None):
        return list(injections(a, b))


class Q1Index(EffCategory):
    """The full subcategory of I∫Q on the three objects over ``n = 1``,
    which is the poset ``{1} ⊇ ∅ ⊆ {-1}``."""

    name = "Q1"
    OBJECTS = (JObj(1, ()), JObj(1, (1,)), JObj(1, (-1,)))

    def __init__(self):
        self.J = JCategory()

    def dom(self, f):
        return f.src

    def cod(self, f):
        return f.tgt

    def identity(self, a):
        return j_identity(a)

    def _compose(self, g, f):
        return j_compose(g, f)

    def objects(self, bound=None):
        return list(self.OBJECTS)

    def homs(self, a, b, bound=None):
        return self.J.homs(a, b, bound)
