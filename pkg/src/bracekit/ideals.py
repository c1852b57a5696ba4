"""Left ideals, ideals, distinguished ideals and the ideal lattice of a brace.

All ideal-valued results are frozensets of element indices.  The full ideal
lattice of a brace is memoized: it is the single most reused artifact in the
invariant computations.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Optional

from .braces import SkewBrace, verify_brace
from .groups import (
    BoundExceededError,
    all_normal_subgroups,
    center,
    is_normal,
    is_subgroup,
    quotient_group,
    subgroup_closure,
)

IDEAL_LATTICE_BOUND = 16


def is_left_ideal(A: SkewBrace, S: frozenset[int]) -> tuple[bool, Optional[tuple]]:
    """Additive subgroup, stable under every lambda_a.  Returns (ok, witness)."""
    if not is_subgroup(A.add, S):
        return False, ("not-additive-subgroup", tuple(sorted(S)))
    for a in A.elements():
        for i in sorted(S):
            if A.lam[a][i] not in S:
                return False, ("not-lambda-stable", (a, i))
    return True, None


def is_ideal(A: SkewBrace, S: frozenset[int]) -> tuple[bool, Optional[tuple]]:
    """Left ideal that is normal in both groups.  Returns (ok, witness)."""
    ok, witness = is_left_ideal(A, S)
    if not ok:
        return False, witness
    if not is_normal(A.add, S):
        return False, ("not-additively-normal", tuple(sorted(S)))
    for a in A.elements():
        for i in sorted(S):
            if A.circ(A.circ(a, i), A.circ_inv(a)) not in S:
                return False, ("not-multiplicatively-normal", (a, i))
    return True, None


def ideal_closure(A: SkewBrace, seed: Iterable[int]) -> frozenset[int]:
    """Least ideal containing ``seed``.

    Worklist fixpoint alternating additive subgroup closure, additive normal
    closure, lambda images, circle conjugation, and adjoining I*A and A*I
    elements, until stable.
    """
    current = frozenset(subgroup_closure(A.add, seed).members)
    while True:
        extra: set[int] = set()
        for g in A.elements():
            for x in current:
                extra.add(A.add.conjugate(g, x))       # additive normality
                extra.add(A.lam[g][x])                  # lambda stability
                extra.add(A.circ(A.circ(g, x), A.circ_inv(g)))  # circle normality
                extra.add(A.star(x, g))                 # I*A
                extra.add(A.star(g, x))                 # A*I
        nxt = frozenset(subgroup_closure(A.add, current | extra).members)
        if nxt == current:
            return current
        current = nxt


@lru_cache(maxsize=None)
def kernel_of_lambda(A: SkewBrace) -> frozenset[int]:
    identity = tuple(range(A.order))
    return frozenset(a for a in A.elements() if A.lam[a] == identity)


@lru_cache(maxsize=None)
def socle(A: SkewBrace) -> frozenset[int]:
    """Soc(A) = Ker(lambda) ∩ Cen(A,+)."""
    return kernel_of_lambda(A) & center(A.add).members


@lru_cache(maxsize=None)
def annihilator(A: SkewBrace) -> frozenset[int]:
    """Ann(A) = Soc(A) ∩ Cen(A,∘)."""
    return socle(A) & center(A.circle).members


@lru_cache(maxsize=None)
def fix(A: SkewBrace) -> frozenset[int]:
    """Elements fixed by every lambda_b; a left ideal."""
    return frozenset(
        a for a in A.elements() if all(A.lam[b][a] == a for b in A.elements())
    )


@lru_cache(maxsize=None)
def a2(A: SkewBrace) -> frozenset[int]:
    """The ideal A^(2): additive subgroup generated by all star values."""
    stars = {A.star(a, b) for a in A.elements() for b in A.elements()}
    return frozenset(subgroup_closure(A.add, stars).members)


def star_product(A: SkewBrace, I: Iterable[int], J: Iterable[int]) -> frozenset[int]:
    """Additive subgroup generated by {i*j : i in I, j in J}."""
    stars = {A.star(i, j) for i in I for j in J}
    return frozenset(subgroup_closure(A.add, stars).members)


def ideal_sum(A: SkewBrace, I: Iterable[int], J: Iterable[int]) -> frozenset[int]:
    """I+J as the additive subgroup closure of the union (exact for ideals)."""
    return frozenset(subgroup_closure(A.add, set(I) | set(J)).members)


def quotient_brace(A: SkewBrace, I: frozenset[int]) -> tuple[SkewBrace, tuple[int, ...]]:
    """Brace on the additive cosets of an ideal; returns (quotient, projection).

    For an ideal the additive and multiplicative cosets coincide, so one
    partition serves both operations.
    """
    ok, witness = is_ideal(A, I)
    if not ok:
        raise ValueError(f"not an ideal: {witness}")
    Q_add, projection = quotient_group(A.add, frozenset(I))
    k = Q_add.order
    reps = [0] * k
    seen = set()
    for a in A.elements():
        p = projection[a]
        if p not in seen:
            seen.add(p)
            reps[p] = a
    circ_table = tuple(
        tuple(projection[A.circ(reps[i], reps[j])] for j in range(k))
        for i in range(k)
    )
    Q = verify_brace(Q_add.table, circ_table)
    return Q, projection


def sub_brace(A: SkewBrace, S: frozenset[int]) -> tuple[SkewBrace, tuple[int, ...]]:
    """Restrict both operations to a closed subset, relabeled 0..|S|-1.

    Returns (sub, embedding) where embedding[i] is the parent index of the
    sub-brace element i.  S must be closed under +, negation and ∘ (any left
    ideal qualifies).
    """
    members = sorted(S)
    if 0 not in S:
        raise ValueError("subset does not contain 0")
    pos = {x: i for i, x in enumerate(members)}
    for x in members:
        if A.neg(x) not in S:
            raise ValueError(f"subset not closed under negation at {x}")
        for y in members:
            if A.plus(x, y) not in S or A.circ(x, y) not in S:
                raise ValueError(f"subset not closed at ({x},{y})")
    k = len(members)
    add = tuple(tuple(pos[A.plus(members[i], members[j])] for j in range(k)) for i in range(k))
    circ = tuple(tuple(pos[A.circ(members[i], members[j])] for j in range(k)) for i in range(k))
    return verify_brace(add, circ), tuple(members)


@lru_cache(maxsize=None)
def all_ideals(A: SkewBrace, bound: int = IDEAL_LATTICE_BOUND) -> tuple[frozenset[int], ...]:
    """Every ideal of A, sorted by (size, members).

    Filters the additive normal subgroups (the cheapest complete superset)
    through lambda-stability, circle-normality, and I*A ⊆ I.
    """
    if A.order > bound:
        raise BoundExceededError(f"order {A.order} exceeds the ideal-lattice bound {bound}")
    ideals = []
    for N in all_normal_subgroups(A.add, bound):
        if not all(A.lam[a][i] in N for a in A.elements() for i in N):
            continue
        if not all(A.circ(A.circ(a, i), A.circ_inv(a)) in N
                   for a in A.elements() for i in N):
            continue
        if not all(A.star(i, b) in N for i in N for b in A.elements()):
            continue
        ideals.append(N)
    return tuple(sorted(ideals, key=lambda s: (len(s), tuple(sorted(s)))))


@lru_cache(maxsize=None)
def maximal_ideals(A: SkewBrace) -> tuple[frozenset[int], ...]:
    """Proper ideals with no ideal strictly between them and A."""
    lattice = all_ideals(A)
    full = frozenset(A.elements())
    proper = [I for I in lattice if I != full]
    out = []
    for M in proper:
        if not any(M < J for J in proper if J != M):
            out.append(M)
    return tuple(out)


@lru_cache(maxsize=None)
def is_prime_brace(A: SkewBrace) -> bool:
    """All pairs of non-zero ideals have non-zero star product."""
    zero = frozenset({0})
    nonzero = [I for I in all_ideals(A) if I != zero]
    return all(
        star_product(A, I, J) != zero for I in nonzero for J in nonzero
    )


def is_prime_ideal(A: SkewBrace, P: frozenset[int]) -> bool:
    Q, _ = quotient_brace(A, P)
    return is_prime_brace(Q)


def is_small_ideal(A: SkewBrace, I: frozenset[int]) -> bool:
    """I+J = A forces J = A, over the full ideal lattice."""
    full = frozenset(A.elements())
    for J in all_ideals(A):
        if J != full and ideal_sum(A, I, J) == full:
            return False
    return True
