"""Built-in Cayley tables for every group of order 1..12.

Tables are constructed from standard presentations (cyclic, dihedral,
dicyclic, alternating, direct products) and re-verified through
verify_group_axioms at load time.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .groups import FiniteGroup, verify_group_axioms


def cyclic(n: int) -> FiniteGroup:
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return verify_group_axioms(table)


def direct_product_group(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    n, m = G.order, H.order
    table = [[0] * (n * m) for _ in range(n * m)]
    for a1, b1 in itertools.product(range(n), range(m)):
        for a2, b2 in itertools.product(range(n), range(m)):
            table[a1 * m + b1][a2 * m + b2] = G.table[a1][a2] * m + H.table[b1][b2]
    return verify_group_axioms(table)


def dihedral(n: int) -> FiniteGroup:
    """D_n of order 2n: elements r^i s^j indexed as 2i + j."""
    size = 2 * n

    def mul(e1, e2):
        i1, j1 = divmod(e1, 2)
        i2, j2 = divmod(e2, 2)
        i = (i1 + i2) % n if j1 == 0 else (i1 - i2) % n
        return 2 * i + (j1 ^ j2)

    table = [[mul(a, b) for b in range(size)] for a in range(size)]
    return verify_group_axioms(table)


def dicyclic(n: int) -> FiniteGroup:
    """Dic_n of order 4n (Q8 is Dic_2): elements a^i b^j indexed as 2i + j."""
    size = 4 * n

    def mul(e1, e2):
        i1, j1 = divmod(e1, 2)
        i2, j2 = divmod(e2, 2)
        if j1 == 0:
            return 2 * ((i1 + i2) % (2 * n)) + j2
        if j2 == 0:
            return 2 * ((i1 - i2) % (2 * n)) + 1
        return 2 * ((i1 - i2 + n) % (2 * n))

    table = [[mul(a, b) for b in range(size)] for a in range(size)]
    return verify_group_axioms(table)


def alternating4() -> FiniteGroup:
    perms = sorted(p for p in itertools.permutations(range(4)) if _is_even(p))
    index = {p: i for i, p in enumerate(perms)}
    table = [
        [index[tuple(p[q[i]] for i in range(4))] for q in perms]
        for p in perms
    ]
    return verify_group_axioms(table)


def _is_even(p: tuple[int, ...]) -> bool:
    inversions = sum(
        1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j]
    )
    return inversions % 2 == 0


@lru_cache(maxsize=None)
def groups_of_order(n: int) -> tuple[tuple[str, FiniteGroup], ...]:
    """All groups of order n (1 <= n <= 12), as (name, group) pairs."""
    if not 1 <= n <= 12:
        raise ValueError(f"no built-in group tables for order {n}")
    builders = {
        1: [("C1", lambda: cyclic(1))],
        2: [("C2", lambda: cyclic(2))],
        3: [("C3", lambda: cyclic(3))],
        4: [("C4", lambda: cyclic(4)),
            ("C2xC2", lambda: direct_product_group(cyclic(2), cyclic(2)))],
        5: [("C5", lambda: cyclic(5))],
        6: [("C6", lambda: cyclic(6)),
            ("D3", lambda: dihedral(3))],
        7: [("C7", lambda: cyclic(7))],
        8: [("C8", lambda: cyclic(8)),
            ("C4xC2", lambda: direct_product_group(cyclic(4), cyclic(2))),
            ("C2xC2xC2", lambda: direct_product_group(
                cyclic(2), direct_product_group(cyclic(2), cyclic(2)))),
            ("D4", lambda: dihedral(4)),
            ("Q8", lambda: dicyclic(2))],
        9: [("C9", lambda: cyclic(9)),
            ("C3xC3", lambda: direct_product_group(cyclic(3), cyclic(3)))],
        10: [("C10", lambda: cyclic(10)),
             ("D5", lambda: dihedral(5))],
        11: [("C11", lambda: cyclic(11))],
        12: [("C12", lambda: cyclic(12)),
             ("C6xC2", lambda: direct_product_group(cyclic(6), cyclic(2))),
             ("D6", lambda: dihedral(6)),
             ("A4", alternating4),
             ("Dic3", lambda: dicyclic(3))],
    }
    return tuple((name, build()) for name, build in builders[n])
