"""Concrete rig categories: discrete finite rigs, finite sets and
bijections, free modules over F2, and deliberately broken fixtures."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

import numpy as np

from .biperm import BipermutativeCat, LaxRigMorphism, strict_rig_morphism
from .effcat import Bound, StructureError
from .indexing import Perm, regroup_perm, shuffle_chi, transpose_perm


@dataclass(frozen=True)
class FiniteRigTable:
    """A finite rig given by its operations; the axioms are verified on
    construction by exhaustive evaluation."""

    carrier: tuple
    add: Callable
    mul: Callable
    zero: object
    one: object
    name: str = "rig"
    commutative: bool = True

    def __post_init__(self):
        els = self.carrier
        bad = []
        for a in els:
            if self.add(self.zero, a) != a or self.add(a, self.zero) != a:
                bad.append(f"0 is not an additive unit at {a}")
            if self.mul(self.one, a) != a or self.mul(a, self.one) != a:
                bad.append(f"1 is not a multiplicative unit at {a}")
            if self.mul(self.zero, a) != self.zero or self.mul(a, self.zero) != self.zero:
                bad.append(f"0 does not annihilate {a}")
        for a, b in itertools.product(els, repeat=2):
            if self.add(a, b) not in els or self.mul(a, b) not in els:
                bad.append(f"not closed at {(a, b)}")
            if self.add(a, b) != self.add(b, a):
                bad.append(f"addition not commutative at {(a, b)}")
            if self.commutative and self.mul(a, b) != self.mul(b, a):
                bad.append(f"multiplication not commutative at {(a, b)}")
        for a, b, c in itertools.product(els, repeat=3):
            if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)):
                bad.append(f"addition not associative at {(a, b, c)}")
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                bad.append(f"multiplication not associative at {(a, b, c)}")
            if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)):
                bad.append(f"left distributivity fails at {(a, b, c)}")
            if self.mul(self.add(a, b), c) != self.add(self.mul(a, c), self.mul(b, c)):
                bad.append(f"right distributivity fails at {(a, b, c)}")
        if bad:
            raise StructureError(f"{self.name}: " + "; ".join(bad[:5]))


BOOL_RIG = FiniteRigTable((0, 1), lambda a, b: a | b, lambda a, b: a & b, 0, 1, "bool-rig")
Z2_RING = FiniteRigTable((0, 1), lambda a, b: a ^ b, lambda a, b: a & b, 0, 1, "z2")


class DiscreteRig(BipermutativeCat):
    """A commutative rig as a category with identity morphisms ``("id", a)``."""

    def __init__(self, table: FiniteRigTable):
        if not table.commutative:
            raise StructureError("a discrete bipermutative category needs a commutative rig")
        self.table = table
        self.name = table.name
        self.zero = table.zero
        self.one = table.one

    def dom(self, f):
        return f[1]

    cod = dom

    def identity(self, a):
        return ("id", a)

    def _compose(self, g, f):
        return g

    def objects(self, bound):
        return list(self.table.carrier)

    def homs(self, a, b, bound):
        return [("id", a)] if a == b else []

    def out_homs(self, a, bound):
        return [("id", a)]

    def out_targets(self, a, bound=None):
        return [a]

    def sample_out(self, a, rng, bound=None):
        return ("id", a)

    def oplus(self, a, b):
        return self.table.add(a, b)

    def oplus_mor(self, f, g):
        return ("id", self.table.add(f[1], g[1]))

    def twist(self, a, b):
        return ("id", self.table.add(a, b))

    def tensor(self, a, b):
        return self.table.mul(a, b)

    def tensor_mor(self, f, g):
        return ("id", self.table.mul(f[1], g[1]))

    def gamma(self, a, b):
        return ("id", self.table.mul(a, b))


def discrete_rig(table: FiniteRigTable) -> DiscreteRig:
    return DiscreteRig(table)


@lru_cache(maxsize=None)
def _all_perms(n: int) -> tuple:
    return tuple(Perm(p) for p in itertools.permutations(range(1, n + 1)))


class FinSets(BipermutativeCat):
    """Finite sets ``n`` and bijections.

    Sum is block sum with the shuffle twist; product is the lexicographic
    product, twisted by matrix transposition; ``d_left`` is the regrouping
    permutation, computed directly rather than from the twist.
    """

    name = "finsets"
    zero = 0
    one = 1

    def dom(self, f):
        return f.n

    cod = dom

    def identity(self, a):
        return Perm.identity(a)

    def _compose(self, g, f):
        return g.after(f)

    def objects(self, bound):
        return list(range(bound.size + 1))

    def in_bound(self, a, bound):
        return a <= bound.size

    def homs(self, a, b, bound=None):
        return list(_all_perms(a)) if a == b else []

    def out_homs(self, a, bound=None):
        return list(_all_perms(a))

    def out_targets(self, a, bound=None):
        return [a]

    def sample_out(self, a, rng, bound=None):
        im = list(range(1, a + 1))
        rng.shuffle(im)
        return Perm(im)

    def oplus(self, a, b):
        return a + b

    def oplus_mor(self, f, g):
        return f + g

    def twist(self, a, b):
        return shuffle_chi(a, b)

    def tensor(self, a, b):
        return a * b

    def tensor_mor(self, f, g):
        return f * g

    def gamma(self, a, b):
        return transpose_perm(a, b)

    def d_left(self, a, bs):
        return regroup_perm(a, list(bs))


class _IdentityGammaFinSets(FinSets):
    name = "corrupted-fixture"

    def gamma(self, a, b):
        return Perm.identity(a * b)


class _IdentityTwistFinSets(FinSets):
    name = "finsets-identity-twist"

    def twist(self, a, b):
        return Perm.identity(a + b)


def finite_sets_E(corrupt: str | None = None) -> FinSets:
    """The bipermutative category of finite sets and bijections.

    ``corrupt="gamma"`` replaces the product twist by identities and
    ``corrupt="twist"`` the sum twist; both are negative controls.
    """
    if corrupt is None:
        return FinSets()
    if corrupt == "gamma":
        return _IdentityGammaFinSets()
    if corrupt == "twist":
        return _IdentityTwistFinSets()
    raise ValueError(f"unknown corruption {corrupt!r}")


class F2Mat:
    """An invertible square matrix over F2, hashable by content."""

    __slots__ = ("a", "_key")

    def __init__(self, a):
        a = np.asarray(a, dtype=np.uint8) % 2
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"not a square matrix: shape {a.shape}")
        a.setflags(write=False)
        self.a = a
        self._key = (a.shape[0], a.tobytes())

    @property
    def n(self) -> int:
        return self.a.shape[0]

    def __eq__(self, other):
        return isinstance(other, F2Mat) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def to_json(self) -> list:
        return self.a.tolist()

    def __repr__(self):
        return f"F2Mat({self.a.tolist()})"


def perm_matrix(p: Perm) -> F2Mat:
    """``P[p(i)][i] = 1`` so that ``P_p P_q = P_{p∘q}``."""
    m = np.zeros((p.n, p.n), dtype=np.uint8)
    for i in range(1, p.n + 1):
        m[p(i) - 1, i - 1] = 1
    return F2Mat(m)


def f2_rank(a: np.ndarray) -> int:
    m = (np.array(a, dtype=np.uint8) % 2).copy()
    rows, cols = m.shape
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i, c]), None)
        if piv is None:
            continue
        m[[r, piv]] = m[[piv, r]]
        for i in range(rows):
            if i != r and m[i, c]:
                m[i] ^= m[r]
        r += 1
    return r


@lru_cache(maxsize=None)
def general_linear_f2(n: int) -> tuple:
    """All invertible ``n x n`` matrices over F2, in lexicographic order of
    their entries."""
    out = []
    for bits in itertools.product((0, 1), repeat=n * n):
        a = np.array(bits, dtype=np.uint8).reshape(n, n)
        if f2_rank(a) == n:
            out.append(F2Mat(a))
    return tuple(out)


def _block_sum(f: np.ndarray, g: np.ndarray) -> np.ndarray:
    n, m = f.shape[0], g.shape[0]
    out = np.zeros((n + m, n + m), dtype=np.uint8)
    out[:n, :n] = f
    out[n:, n:] = g
    return out


class FreeModulesF2(BipermutativeCat):
    """Free F2-modules ``F2^n`` and invertible matrices.

    Sum is the block sum, product the Kronecker product, which matches the
    lexicographic index ``(i-1)m + j``; the twists are permutation matrices.
    """

    zero = 0
    one = 1

    def __init__(self, max_rank: int = 2):
        if max_rank > 3:
            raise ValueError("rank enumeration is limited to 3")
        self.max_rank = max_rank
        self.name = "f2mod"

    def dom(self, f):
        return f.n

    cod = dom

    def identity(self, a):
        return F2Mat(np.eye(a, dtype=np.uint8))

    def _compose(self, g, f):
        return F2Mat((g.a.astype(np.int64) @ f.a.astype(np.int64)) % 2)

    def objects(self, bound):
        return list(range(min(self.max_rank, bound.size) + 1))

    def in_bound(self, a, bound):
        return a <= min(self.max_rank, bound.size)

    def homs(self, a, b, bound=None):
        return list(general_linear_f2(a)) if a == b else []

    def out_homs(self, a, bound=None):
        return list(general_linear_f2(a))

    def out_targets(self, a, bound=None):
        return [a]

    def sample_out(self, a, rng, bound=None):
        return rng.choice(general_linear_f2(a))

    def oplus(self, a, b):
        return a + b

    def oplus_mor(self, f, g):
        return F2Mat(_block_sum(f.a, g.a))

    def twist(self, a, b):
        return perm_matrix(shuffle_chi(a, b))

    def tensor(self, a, b):
        return a * b

    def tensor_mor(self, f, g):
        return F2Mat(np.kron(f.a, g.a))

    def gamma(self, a, b):
        return perm_matrix(transpose_perm(a, b))

    def d_left(self, a, bs):
        return perm_matrix(regroup_perm(a, list(bs)))


def free_modules_F2(max_rank: int = 2) -> FreeModulesF2:
    return FreeModulesF2(max_rank)


def permutation_representation(E: FinSets, F: FreeModulesF2) -> LaxRigMorphism:
    """The strict rig morphism sending a bijection to its permutation matrix."""
    return strict_rig_morphism(E, F, lambda n: n, perm_matrix, name="perm-matrix")


# The registry ---------------------------------------------------------------

from .pi0 import MonoidPresentation  # noqa: E402


@dataclass
class ExampleSpec:
    """A named example with its additive π0 presentation.

    ``vector(a)`` writes an object's π0 class in the generators of the
    presentation.  ``mult`` multiplies generators.
    """

    name: str
    build: Callable
    presentation: MonoidPresentation
    vector: Callable
    default: Bound = field(default_factory=Bound)
    groupoid: bool = True
    negative: bool = False
    description: str = ""


def _one_gen(relations=()):
    return MonoidPresentation(("1",), tuple(relations), {(0, 0): (1,)})


REGISTRY: dict[str, ExampleSpec] = {
    "bool-rig": ExampleSpec("bool-rig", lambda b=None: discrete_rig(BOOL_RIG), _one_gen([((2,), (1,))]),
                            lambda a: (a,), Bound(index=2, length=2, size=1),
                            description="Boolean rig {0,1} with 1+1=1, discrete"),
    "z2": ExampleSpec("z2", lambda b=None: discrete_rig(Z2_RING), _one_gen([((2,), (0,))]),
                      lambda a: (a,), Bound(index=2, length=2, size=1),
                      description="the field with two elements, discrete"),
    "finsets": ExampleSpec("finsets", lambda b=None: finite_sets_E(), _one_gen(), lambda a: (a,),
                           Bound(index=2, length=2, size=4),
                           description="finite sets and bijections"),
    "f2mod": ExampleSpec("f2mod", lambda b=None: free_modules_F2(min(b.size, 3) if b else 2), _one_gen(),
                         lambda a: (a,), Bound(index=2, length=2, size=2),
                         description="free F2-modules and invertible matrices"),
    "corrupted-fixture": ExampleSpec("corrupted-fixture", lambda b=None: finite_sets_E("gamma"), _one_gen(),
                                     lambda a: (a,), Bound(index=2, length=2, size=3), negative=True,
                                     description="finite sets with the product twist replaced by identities"),
}


def get_example(name: str) -> ExampleSpec:
    try:
        return REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown example {name!r}; choose from {', '.join(REGISTRY)}") from None
