"""Skew left braces: two compatible group structures on one index set.

A skew left brace here is a pair of Cayley tables (add, circle) on the same
indices, sharing identity 0 and satisfying a∘(b+c) = a∘b - a + a∘c.  The
lambda table lambda[a][b] = -a + a∘b is precomputed on construction since it
is the hot inner loop of every closure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Iterable, Optional, Sequence

from .groups import (
    BoundExceededError,
    FiniteGroup,
    GroupAxiomError,
    element_orders,
    generating_sequence,
    is_abelian,
    verify_group_axioms,
)

DEFAULT_PRODUCT_BOUND = 256


class BraceAxiomError(ValueError):
    """A pair of tables failed to form a skew left brace."""

    def __init__(self, axiom: str, witness: tuple, message: str):
        super().__init__(message)
        self.axiom = axiom
        self.witness = witness


@dataclass(frozen=True)
class CheckReport:
    """Outcome of a verification: status is 'pass', 'fail' or 'na'."""

    name: str
    status: str
    details: tuple[tuple[str, Any], ...] = ()

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    @property
    def failed(self) -> bool:
        return self.status == "fail"

    def detail(self, key: str) -> Any:
        for k, v in self.details:
            if k == key:
                return v
        raise KeyError(key)

    def as_dict(self) -> dict:
        return {"name": self.name, "status": self.status,
                "details": {k: v for k, v in self.details}}


@dataclass(frozen=True)
class BraceMorphism:
    """A map of element indices preserving both operations."""

    mapping: tuple[int, ...]
    source_order: int
    target_order: int

    def __call__(self, a: int) -> int:
        return self.mapping[a]

    @property
    def is_bijective(self) -> bool:
        return (self.source_order == self.target_order
                and len(set(self.mapping)) == self.source_order)


@dataclass(frozen=True)
class SkewBrace:
    """Two compatible group structures (add, circle) with shared identity 0."""

    add: FiniteGroup
    circle: FiniteGroup
    lam: tuple[tuple[int, ...], ...]
    circle_inverse: tuple[int, ...]

    @property
    def order(self) -> int:
        return self.add.order

    def elements(self) -> range:
        return range(self.order)

    def plus(self, a: int, b: int) -> int:
        return self.add.table[a][b]

    def neg(self, a: int) -> int:
        return self.add.inverse[a]

    def circ(self, a: int, b: int) -> int:
        return self.circle.table[a][b]

    def circ_inv(self, a: int) -> int:
        return self.circle_inverse[a]

    def lam_of(self, a: int, b: int) -> int:
        return self.lam[a][b]

    def star(self, a: int, b: int) -> int:
        """a*b = lambda_a(b) - b."""
        return self.add.table[self.lam[a][b]][self.add.inverse[b]]


def verify_brace(add_table: Sequence[Sequence[int]],
                 circle_table: Sequence[Sequence[int]]) -> SkewBrace:
    """Validate a pair of tables as a skew left brace.

    Raises GroupAxiomError if either table is not a group, and
    BraceAxiomError with a witness triple if the two groups are incompatible.
    Identities are normalized to index 0 (both tables must place the identity
    at the same raw index).
    """
    if len(add_table) != len(circle_table):
        raise BraceAxiomError("shape", (), "add and circle tables have different sizes")
    n = len(add_table)

    raw_add_identity = _raw_identity(add_table)
    raw_circle_identity = _raw_identity(circle_table)
    if raw_add_identity is not None and raw_circle_identity is not None \
            and raw_add_identity != raw_circle_identity:
        raise BraceAxiomError(
            "identity-mismatch", (raw_add_identity, raw_circle_identity),
            f"additive identity is {raw_add_identity} but multiplicative identity is {raw_circle_identity}")

    add = verify_group_axioms(add_table)
    circle = verify_group_axioms(circle_table)

    for a in range(n):
        for b in range(n):
            for c in range(n):
                lhs = circle.table[a][add.table[b][c]]
                rhs = add.table[add.table[circle.table[a][b]][add.inverse[a]]][circle.table[a][c]]
                if lhs != rhs:
                    raise BraceAxiomError(
                        "compatibility", (a, b, c),
                        f"a∘(b+c) != a∘b - a + a∘c for (a,b,c)=({a},{b},{c})")

    lam = tuple(
        tuple(add.table[add.inverse[a]][circle.table[a][b]] for b in range(n))
        for a in range(n)
    )
    return SkewBrace(add=add, circle=circle, lam=lam, circle_inverse=circle.inverse)


def trivial_brace(G: FiniteGroup) -> SkewBrace:
    """The trivial skew brace: both operations equal to G."""
    identity = tuple(tuple(range(G.order)) for _ in range(G.order))
    return SkewBrace(add=G, circle=G, lam=identity, circle_inverse=G.inverse)


def zero_brace() -> SkewBrace:
    return trivial_brace(verify_group_axioms([[0]]))


def star(A: SkewBrace, a: int, b: int) -> int:
    return A.star(a, b)


def check_star_identities(A: SkewBrace) -> CheckReport:
    """Exhaustively verify both (*) identities over all triples.

    A failure would indicate a library bug, since both identities follow
    from the brace axioms.
    """
    for x in A.elements():
        for y in A.elements():
            for z in A.elements():
                # x*(y+z) = x*y + y + x*z - y
                lhs = A.star(x, A.plus(y, z))
                rhs = A.plus(A.plus(A.plus(A.star(x, y), y), A.star(x, z)), A.neg(y))
                if lhs != rhs:
                    return CheckReport("star-identities", "fail",
                                       (("identity", "x*(y+z)"), ("witness", (x, y, z))))
                # (x∘y)*z = x*(y*z) + y*z + x*z
                lhs = A.star(A.circ(x, y), z)
                yz = A.star(y, z)
                rhs = A.plus(A.plus(A.star(x, yz), yz), A.star(x, z))
                if lhs != rhs:
                    return CheckReport("star-identities", "fail",
                                       (("identity", "(x∘y)*z"), ("witness", (x, y, z))))
    return CheckReport("star-identities", "pass")


def _raw_identity(table: Sequence[Sequence[int]]) -> Optional[int]:
    n = len(table)
    for e in range(n):
        try:
            if all(table[e][a] == a for a in range(n)) and all(table[a][e] == a for a in range(n)):
                return e
        except (IndexError, TypeError):
            return None
    return None


@lru_cache(maxsize=None)
def _element_profile(A: SkewBrace) -> tuple[tuple[int, int], ...]:
    """Per-element (additive order, multiplicative order) pairs."""
    add_orders = element_orders(A.add)
    circ_orders = element_orders(A.circle)
    return tuple(zip(add_orders, circ_orders))


def _extend_additive_map(A: SkewBrace, B: SkewBrace,
                         pairs: list[tuple[int, int]]) -> Optional[dict[int, int]]:
    """Close generator images into an additive homomorphism, or None."""
    m: dict[int, int] = {0: 0}
    work: list[int] = []
    for g, img in pairs:
        if g in m:
            if m[g] != img:
                return None
        else:
            m[g] = img
            work.append(g)
    while work:
        x = work.pop()
        for y in list(m):
            for a, b in ((x, y), (y, x)):
                z = A.plus(a, b)
                mz = B.plus(m[a], m[b])
                if z in m:
                    if m[z] != mz:
                        return None
                else:
                    m[z] = mz
                    work.append(z)
    return m


def _is_brace_morphism_map(A: SkewBrace, B: SkewBrace, perm: Sequence[int]) -> bool:
    n = A.order
    return all(
        perm[A.plus(a, b)] == B.plus(perm[a], perm[b])
        and perm[A.circ(a, b)] == B.circ(perm[a], perm[b])
        for a in range(n) for b in range(n)
    )


def brace_isomorphic(A: SkewBrace, B: SkewBrace) -> Optional[BraceMorphism]:
    """Search for a bijection preserving both operations.

    Canonicalizes by cheap invariants first (order, abelian flags, the
    multiset of per-element order pairs), then maps an additive generating
    sequence of A with pruning by order pairs.
    """
    if A.order != B.order:
        return None
    if is_abelian(A.add) != is_abelian(B.add) or is_abelian(A.circle) != is_abelian(B.circle):
        return None
    prof_a, prof_b = _element_profile(A), _element_profile(B)
    if sorted(prof_a) != sorted(prof_b):
        return None

    gens = generating_sequence(A.add)
    if not gens:
        return BraceMorphism((0,), 1, 1)

    def search(i: int, pairs: list[tuple[int, int]]) -> Optional[BraceMorphism]:
        if i == len(gens):
            m = _extend_additive_map(A, B, pairs)
            if m is None or len(m) != A.order or len(set(m.values())) != A.order:
                return None
            perm = tuple(m[a] for a in range(A.order))
            if _is_brace_morphism_map(A, B, perm):
                return BraceMorphism(perm, A.order, B.order)
            return None
        g = gens[i]
        for img in B.elements():
            if prof_b[img] != prof_a[g]:
                continue
            if _extend_additive_map(A, B, pairs + [(g, img)]) is None:
                continue
            result = search(i + 1, pairs + [(g, img)])
            if result is not None:
                return result
        return None

    return search(0, [])


def direct_product(A: SkewBrace, B: SkewBrace,
                   bound: int = DEFAULT_PRODUCT_BOUND) -> SkewBrace:
    """Componentwise product on pairs, indexed as a*|B| + b."""
    n = A.order * B.order
    if n > bound:
        raise BoundExceededError(f"product order {n} exceeds bound {bound}")
    nb = B.order

    def idx(a: int, b: int) -> int:
        return a * nb + b

    add = [[0] * n for _ in range(n)]
    circ = [[0] * n for _ in range(n)]
    for a1, b1 in itertools.product(A.elements(), B.elements()):
        for a2, b2 in itertools.product(A.elements(), B.elements()):
            add[idx(a1, b1)][idx(a2, b2)] = idx(A.plus(a1, a2), B.plus(b1, b2))
            circ[idx(a1, b1)][idx(a2, b2)] = idx(A.circ(a1, a2), B.circ(b1, b2))
    return verify_brace(add, circ)


def brace_automorphism_group(A: SkewBrace, bound: int = 16) -> tuple[BraceMorphism, ...]:
    """All bijections of A preserving both tables, sorted lexicographically."""
    if A.order > bound:
        raise BoundExceededError(f"order {A.order} exceeds the automorphism bound {bound}")
    prof = _element_profile(A)
    gens = generating_sequence(A.add)
    if not gens:
        return (BraceMorphism((0,), 1, 1),)
    found: list[tuple[int, ...]] = []

    def search(i: int, pairs: list[tuple[int, int]]) -> None:
        if i == len(gens):
            m = _extend_additive_map(A, A, pairs)
            if m is None or len(m) != A.order or len(set(m.values())) != A.order:
                return
            perm = tuple(m[a] for a in range(A.order))
            if _is_brace_morphism_map(A, A, perm):
                found.append(perm)
            return
        g = gens[i]
        for img in A.elements():
            if prof[img] != prof[g]:
                continue
            if _extend_additive_map(A, A, pairs + [(g, img)]) is None:
                continue
            search(i + 1, pairs + [(g, img)])

    search(0, [])
    return tuple(BraceMorphism(p, A.order, A.order) for p in sorted(set(found)))


def semidirect_product(A: SkewBrace, B: SkewBrace,
                       theta: Sequence[Sequence[int]],
                       bound: int = DEFAULT_PRODUCT_BOUND) -> SkewBrace:
    """Semidirect product with addition componentwise and
    (a1,b1)∘(a2,b2) = (a1∘θ(b1)(a2), b1∘b2).

    ``theta`` lists, for each b in B, a permutation of A's indices.  Each
    theta[b] must be a brace automorphism of A and b ↦ theta[b] must be a
    homomorphism from (B,∘); both are verified, with witnesses on failure.
    """
    if len(theta) != B.order:
        raise ValueError(f"theta must assign a map to each of the {B.order} elements of B")
    maps = [tuple(t) for t in theta]
    for b, t in enumerate(maps):
        if sorted(t) != list(range(A.order)):
            raise ValueError(f"theta({b}) is not a permutation of A")
        if not _is_brace_morphism_map(A, A, t):
            raise ValueError(f"theta({b}) is not a brace automorphism of A")
    for b1 in B.elements():
        for b2 in B.elements():
            composed = tuple(maps[b1][maps[b2][a]] for a in A.elements())
            if composed != maps[B.circ(b1, b2)]:
                raise ValueError(
                    f"theta is not a homomorphism: theta({b1})∘theta({b2}) != theta({b1}∘{b2})")

    n = A.order * B.order
    if n > bound:
        raise BoundExceededError(f"product order {n} exceeds bound {bound}")
    nb = B.order

    def idx(a: int, b: int) -> int:
        return a * nb + b

    add = [[0] * n for _ in range(n)]
    circ = [[0] * n for _ in range(n)]
    for a1, b1 in itertools.product(A.elements(), B.elements()):
        for a2, b2 in itertools.product(A.elements(), B.elements()):
            add[idx(a1, b1)][idx(a2, b2)] = idx(A.plus(a1, a2), B.plus(b1, b2))
            circ[idx(a1, b1)][idx(a2, b2)] = idx(A.circ(a1, maps[b1][a2]), B.circ(b1, b2))
    return verify_brace(add, circ)
