"""Shared fixtures and independent brute-force oracles."""

from __future__ import annotations

import itertools

import pytest

from bracekit.braces import SkewBrace, trivial_brace, verify_brace
from bracekit.groups import FiniteGroup, verify_group_axioms
from bracekit.grouptables import cyclic, dihedral, direct_product_group


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("BRACEKIT_CACHE", str(tmp_path / "bracekit-cache"))


def radical_ring_brace() -> SkewBrace:
    """The brace of the radical ring 2Z/8Z: index i is the ring element 2i,
    with x∘y = x + xy + y computed mod 8."""
    add = [[(i + j) % 4 for j in range(4)] for i in range(4)]
    circ = [[(i + j + 2 * i * j) % 4 for j in range(4)] for i in range(4)]
    return verify_brace(add, circ)


@pytest.fixture
def ring_brace() -> SkewBrace:
    return radical_ring_brace()


@pytest.fixture
def s3_group() -> FiniteGroup:
    return dihedral(3)


@pytest.fixture
def s3_brace(s3_group) -> SkewBrace:
    return trivial_brace(s3_group)


def klein_group() -> FiniteGroup:
    return direct_product_group(cyclic(2), cyclic(2))


# ---------------------------------------------------------------------------
# brute-force oracles, deliberately independent of the library's algorithms


def brute_subgroups(G: FiniteGroup) -> list[frozenset[int]]:
    """All subgroups by testing every subset containing the identity."""
    out = []
    rest = [x for x in G.elements() if x != 0]
    for r in range(len(rest) + 1):
        for combo in itertools.combinations(rest, r):
            S = frozenset({0, *combo})
            if all(G.table[a][b] in S for a in S for b in S) and \
                    all(G.inverse[a] in S for a in S):
                out.append(S)
    return out


def brute_normal_subgroups(G: FiniteGroup) -> list[frozenset[int]]:
    return [
        S for S in brute_subgroups(G)
        if all(G.conjugate(g, x) in S for g in G.elements() for x in S)
    ]


def brute_automorphisms(G: FiniteGroup) -> list[tuple[int, ...]]:
    """All automorphisms by testing every permutation fixing the identity."""
    n = G.order
    out = []
    for rest in itertools.permutations(range(1, n)):
        perm = (0, *rest)
        if all(perm[G.table[a][b]] == G.table[perm[a]][perm[b]]
               for a in range(n) for b in range(n)):
            out.append(perm)
    return out


def brute_ideals(A: SkewBrace) -> list[frozenset[int]]:
    """All ideals by testing every subset against the raw definition."""
    out = []
    for S in brute_subgroups(A.add):
        if not all(A.lam[a][i] in S for a in A.elements() for i in S):
            continue
        if not all(A.add.conjugate(a, i) in S for a in A.elements() for i in S):
            continue
        if not all(A.circ(A.circ(a, i), A.circ_inv(a)) in S
                   for a in A.elements() for i in S):
            continue
        out.append(S)
    return out


def permutation_table(perms: list[tuple[int, ...]]) -> list[list[int]]:
    """Cayley table of a closed set of permutations under composition."""
    index = {p: i for i, p in enumerate(perms)}
    return [
        [index[tuple(p[q[i]] for i in range(len(p)))] for q in perms]
        for p in perms
    ]
