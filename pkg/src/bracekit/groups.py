"""Finite groups given by explicit multiplication tables on indices 0..n-1.

Every group in this library is a Cayley table.  The identity is always at
index 0 (tables are relabeled on verification if needed), which lets the
rest of the code write formulas exactly as in additive notation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

DEFAULT_ORDER_BOUND = 16


class GroupAxiomError(ValueError):
    """A candidate table failed a group axiom.

    ``axiom`` is a short tag and ``witness`` a tuple of indices exhibiting
    the failure.
    """

    def __init__(self, axiom: str, witness: tuple, message: str):
        super().__init__(message)
        self.axiom = axiom
        self.witness = witness


class BoundExceededError(RuntimeError):
    """An exhaustive operation was asked to run past its configured bound."""


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group as an order-n Cayley table with identity 0."""

    order: int
    table: tuple[tuple[int, ...], ...]
    inverse: tuple[int, ...]

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def elements(self) -> range:
        return range(self.order)

    def conjugate(self, g: int, x: int) -> int:
        """g x g^-1."""
        return self.table[self.table[g][x]][self.inverse[g]]

    def commutator(self, a: int, b: int) -> int:
        """a b a^-1 b^-1."""
        return self.table[self.table[a][b]][self.table[self.inverse[a]][self.inverse[b]]]


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of a table group, stored as its member set."""

    members: frozenset[int]
    parent_order: int

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def __len__(self) -> int:
        return len(self.members)

    def sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))


def _relabel_table(table: Sequence[Sequence[int]], perm: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Relabel indices by a permutation: new[p(a)][p(b)] = p(old[a][b])."""
    n = len(table)
    inv = [0] * n
    for i, p in enumerate(perm):
        inv[p] = i
    return tuple(
        tuple(perm[table[inv[a]][inv[b]]] for b in range(n)) for a in range(n)
    )


def verify_group_axioms(table: Sequence[Sequence[int]]) -> FiniteGroup:
    """Validate a Cayley table and return a FiniteGroup with identity 0.

    Checks, in order: shape, existence of a two-sided identity, existence of
    inverses, the Latin-square property, and associativity.  Raises
    GroupAxiomError with a witness on the first failure.  If the identity is
    not at index 0 the table is relabeled by the transposition moving it
    there.
    """
    n = len(table)
    if n == 0:
        raise GroupAxiomError("shape", (), "empty table")
    for a, row in enumerate(table):
        if len(row) != n:
            raise GroupAxiomError("shape", (a,), f"row {a} has length {len(row)}, expected {n}")
        for b, v in enumerate(row):
            if not isinstance(v, int) or not 0 <= v < n:
                raise GroupAxiomError("shape", (a, b), f"entry at row {a}, column {b} is {v!r}, not an index in 0..{n - 1}")

    identity = None
    for e in range(n):
        if all(table[e][a] == a for a in range(n)) and all(table[a][e] == a for a in range(n)):
            identity = e
            break
    if identity is None:
        raise GroupAxiomError("identity", (), "no two-sided identity element")

    for a in range(n):
        if not any(table[a][b] == identity and table[b][a] == identity for b in range(n)):
            raise GroupAxiomError("inverse", (a,), f"element {a} has no two-sided inverse")

    for a in range(n):
        if len(set(table[a])) != n:
            raise GroupAxiomError("latin-square", (a,), f"row {a} is not a permutation")
    for b in range(n):
        col = {table[a][b] for a in range(n)}
        if len(col) != n:
            raise GroupAxiomError("latin-square", (b,), f"column {b} is not a permutation")

    for a in range(n):
        for b in range(n):
            ab = table[a][b]
            for c in range(n):
                if table[ab][c] != table[a][table[b][c]]:
                    raise GroupAxiomError(
                        "associativity", (a, b, c),
                        f"(a*b)*c != a*(b*c) for (a,b,c)=({a},{b},{c})",
                    )

    tab = tuple(tuple(row) for row in table)
    if identity != 0:
        perm = list(range(n))
        perm[0], perm[identity] = identity, 0
        tab = _relabel_table(tab, perm)

    inverse = [0] * n
    for a in range(n):
        for b in range(n):
            if tab[a][b] == 0:
                inverse[a] = b
                break
    return FiniteGroup(order=n, table=tab, inverse=tuple(inverse))


@lru_cache(maxsize=None)
def is_abelian(G: FiniteGroup) -> bool:
    return all(
        G.table[a][b] == G.table[b][a]
        for a in range(G.order) for b in range(a + 1, G.order)
    )


@lru_cache(maxsize=None)
def element_orders(G: FiniteGroup) -> tuple[int, ...]:
    orders = []
    for a in G.elements():
        x, k = a, 1
        while x != 0:
            x = G.table[x][a]
            k += 1
        orders.append(k)
    return tuple(orders)


def center(G: FiniteGroup) -> Subgroup:
    """Elements commuting with everything."""
    members = frozenset(
        a for a in G.elements()
        if all(G.table[a][b] == G.table[b][a] for b in G.elements())
    )
    return Subgroup(members, G.order)


def subgroup_closure(G: FiniteGroup, seed: Iterable[int]) -> Subgroup:
    """Least subgroup containing ``seed`` (worklist closure under product and inverse)."""
    members = {0}
    work = sorted(set(seed))
    for x in work:
        members.add(x)
    while work:
        x = work.pop()
        y = G.inverse[x]
        if y not in members:
            members.add(y)
            work.append(y)
        for a in sorted(members):
            for z in (G.table[x][a], G.table[a][x]):
                if z not in members:
                    members.add(z)
                    work.append(z)
    return Subgroup(frozenset(members), G.order)


def commutator_subgroup(G: FiniteGroup) -> Subgroup:
    """Smallest subgroup containing all commutators; normal in G."""
    comms = {G.commutator(a, b) for a in G.elements() for b in G.elements()}
    return subgroup_closure(G, comms)


def normal_closure(G: FiniteGroup, seed: Iterable[int]) -> Subgroup:
    """Least normal subgroup containing ``seed``."""
    current = frozenset(subgroup_closure(G, seed).members)
    while True:
        conjugates = {G.conjugate(g, x) for g in G.elements() for x in current}
        nxt = frozenset(subgroup_closure(G, current | conjugates).members)
        if nxt == current:
            return Subgroup(current, G.order)
        current = nxt


def is_subgroup(G: FiniteGroup, S: frozenset[int]) -> bool:
    if 0 not in S:
        return False
    return all(G.table[a][b] in S for a in S for b in S) and all(G.inverse[a] in S for a in S)


def is_normal(G: FiniteGroup, S: frozenset[int]) -> bool:
    return all(G.conjugate(g, x) in S for g in G.elements() for x in S)


@lru_cache(maxsize=None)
def conjugacy_classes(G: FiniteGroup) -> tuple[tuple[int, ...], ...]:
    seen: set[int] = set()
    classes = []
    for a in G.elements():
        if a in seen:
            continue
        cls = {G.conjugate(g, a) for g in G.elements()}
        seen |= cls
        classes.append(tuple(sorted(cls)))
    return tuple(classes)


@lru_cache(maxsize=None)
def all_normal_subgroups(G: FiniteGroup, bound: int = DEFAULT_ORDER_BOUND) -> tuple[frozenset[int], ...]:
    """Every normal subgroup, as normal closures of subsets of class representatives."""
    if G.order > bound:
        raise BoundExceededError(f"order {G.order} exceeds the subgroup-lattice bound {bound}")
    reps = [cls[0] for cls in conjugacy_classes(G) if cls[0] != 0]
    found: set[frozenset[int]] = set()
    for r in range(len(reps) + 1):
        for subset in itertools.combinations(reps, r):
            found.add(normal_closure(G, subset).members)
    return tuple(sorted(found, key=lambda s: (len(s), tuple(sorted(s)))))


def generating_sequence(G: FiniteGroup) -> tuple[int, ...]:
    """A deterministic (greedy, increasing-index) generating sequence."""
    gens: list[int] = []
    current = frozenset({0})
    for x in G.elements():
        if x not in current:
            gens.append(x)
            current = subgroup_closure(G, gens).members
            if len(current) == G.order:
                break
    return tuple(gens)


def _extend_hom(G: FiniteGroup, H: FiniteGroup, pairs: list[tuple[int, int]]) -> Optional[dict[int, int]]:
    """Close a partial map on generators into a homomorphism on the generated
    subgroup, or return None on inconsistency."""
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
                z = G.table[a][b]
                mz = H.table[m[a]][m[b]]
                if z in m:
                    if m[z] != mz:
                        return None
                else:
                    m[z] = mz
                    work.append(z)
    return m


def _hom_is_table_automorphism(G: FiniteGroup, m: dict[int, int]) -> bool:
    if len(m) != G.order or len(set(m.values())) != G.order:
        return False
    perm = [m[a] for a in range(G.order)]
    return all(
        perm[G.table[a][b]] == G.table[perm[a]][perm[b]]
        for a in range(G.order) for b in range(G.order)
    )


@lru_cache(maxsize=None)
def automorphism_group(G: FiniteGroup, bound: int = DEFAULT_ORDER_BOUND) -> tuple[tuple[int, ...], ...]:
    """All automorphisms as index permutations, found by mapping a generating set.

    Candidate images are pruned by element order; each completed map is
    verified against the full table.  Output is sorted lexicographically.
    """
    if G.order > bound:
        raise BoundExceededError(f"order {G.order} exceeds the automorphism bound {bound}")
    gens = generating_sequence(G)
    orders = element_orders(G)
    found: list[tuple[int, ...]] = []

    def search(i: int, pairs: list[tuple[int, int]]) -> None:
        if i == len(gens):
            m = _extend_hom(G, G, pairs)
            if m is not None and _hom_is_table_automorphism(G, m):
                found.append(tuple(m[a] for a in range(G.order)))
            return
        g = gens[i]
        for img in G.elements():
            if orders[img] != orders[g]:
                continue
            if _extend_hom(G, G, pairs + [(g, img)]) is None:
                continue
            search(i + 1, pairs + [(g, img)])

    if not gens:
        return ((0,),) if G.order == 1 else (tuple(range(G.order)),)
    search(0, [])
    return tuple(sorted(set(found)))


def quotient_group(G: FiniteGroup, N: Subgroup | frozenset[int]) -> tuple[FiniteGroup, tuple[int, ...]]:
    """Quotient by a normal subgroup; returns (quotient, projection array).

    Cosets are labeled 0..k-1 in increasing order of their minimal member, so
    the identity coset is label 0.
    """
    members = N.members if isinstance(N, Subgroup) else N
    if not is_subgroup(G, frozenset(members)):
        raise ValueError("N is not a subgroup")
    if not is_normal(G, frozenset(members)):
        raise ValueError("N is not normal")
    coset_of: dict[int, int] = {}
    reps: list[int] = []
    for a in G.elements():
        if a in coset_of:
            continue
        coset = sorted(G.table[a][x] for x in members)
        label = len(reps)
        reps.append(coset[0])
        for c in coset:
            coset_of[c] = label
    table = tuple(
        tuple(coset_of[G.table[reps[i]][reps[j]]] for j in range(len(reps)))
        for i in range(len(reps))
    )
    Q = verify_group_axioms(table)
    projection = tuple(coset_of[a] for a in G.elements())
    return Q, projection


@lru_cache(maxsize=None)
def abelian_invariants(G: FiniteGroup) -> Optional[tuple[int, ...]]:
    """Cyclic invariant-factor decomposition for abelian G, else None.

    Computed greedily: repeatedly split off a cyclic factor of maximal
    element order.  Deterministic and adequate at table scale.
    """
    if not is_abelian(G):
        return None
    invariants = []
    current = G
    while current.order > 1:
        orders = element_orders(current)
        m = max(orders)
        invariants.append(m)
        g = orders.index(m)
        current, _ = quotient_group(current, subgroup_closure(current, [g]))
    return tuple(invariants)


def group_signature(G: FiniteGroup) -> str:
    """A short human-readable identification: abelian invariants or order profile."""
    inv = abelian_invariants(G)
    if inv is not None:
        if not inv:
            return "C1"
        return " x ".join(f"C{k}" for k in inv)
    profile = sorted(element_orders(G))
    return f"nonabelian(order={G.order}, element orders={profile})"
