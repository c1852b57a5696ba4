"""Exhaustive enumeration of skew braces of small order.

The main method walks, for each additive group G, over all lambda maps
G -> Aut(G) satisfying the cocycle condition lam_a lam_b = lam_{a + lam_a(b)}
with a propagating depth-first search.  These assignments are exactly the
regular subgroups {(x, lam_x)} of the holomorph G ⋊ Aut(G), i.e. the skew
braces with additive group G.  A brute-force method over circle tables
serves as the independent oracle for n <= 5.
"""

from __future__ import annotations

import itertools
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Optional

from . import __version__
from .braces import (
    BraceAxiomError,
    SkewBrace,
    brace_isomorphic,
    check_star_identities,
    verify_brace,
)
from .groups import FiniteGroup, GroupAxiomError, automorphism_group
from .grouptables import groups_of_order
from .invariants import brace_report, theorem_checks

EXHAUSTIVE_MAX_ORDER = 5
HOLOMORPH_MAX_ORDER = 12


@dataclass(frozen=True)
class BraceCatalog:
    """Isomorphism-class representatives of all braces of one order."""

    order: int
    method: str
    braces: tuple[SkewBrace, ...]
    additive_names: tuple[str, ...]
    counts: tuple[tuple[str, int], ...]


def _aut_tables(G: FiniteGroup):
    auts = list(automorphism_group(G))
    index = {a: i for i, a in enumerate(auts)}
    k = len(auts)
    comp = [[0] * k for _ in range(k)]
    for i, p in enumerate(auts):
        for j, q in enumerate(auts):
            comp[i][j] = index[tuple(p[q[x]] for x in range(G.order))]
    return auts, index, comp


def _circle_tables_holomorph(G: FiniteGroup) -> list[tuple[tuple[int, ...], ...]]:
    """All circle tables compatible with G, via the lambda-map cocycle search."""
    n = G.order
    auts, index, comp = _aut_tables(G)
    id_idx = index[tuple(range(n))]
    assign: list[Optional[int]] = [None] * n
    assign[0] = id_idx
    out: list[tuple[tuple[int, ...], ...]] = []

    def propagate(seed: int, trail: list[int]) -> bool:
        queue = [seed]
        while queue:
            e = queue.pop()
            for a in range(n):
                if assign[a] is None:
                    continue
                for u, v in ((e, a), (a, e)):
                    c = G.table[u][auts[assign[u]][v]]
                    lam_c = comp[assign[u]][assign[v]]
                    if assign[c] is None:
                        assign[c] = lam_c
                        trail.append(c)
                        queue.append(c)
                    elif assign[c] != lam_c:
                        return False
        return True

    def emit() -> None:
        table = tuple(
            tuple(G.table[a][auts[assign[a]][b]] for b in range(n))
            for a in range(n)
        )
        out.append(table)

    def search() -> None:
        x = next((i for i in range(n) if assign[i] is None), None)
        if x is None:
            emit()
            return
        for cand in range(len(auts)):
            assign[x] = cand
            trail = [x]
            if propagate(x, trail):
                search()
            for e in trail:
                assign[e] = None

    trail0: list[int] = []
    if propagate(0, trail0):
        search()
    return out


def _canonical_circle(G: FiniteGroup, circ: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    """Lexicographically minimal relabeling of a circle table under Aut(G,+).

    Braces sharing the additive group G are isomorphic exactly when an
    additive automorphism carries one circle table to the other, so this is
    a canonical form for the isomorphism class.
    """
    n = G.order
    best = None
    for phi in automorphism_group(G):
        inv = [0] * n
        for i, p in enumerate(phi):
            inv[p] = i
        t = tuple(
            tuple(phi[circ[inv[a]][inv[b]]] for b in range(n)) for a in range(n)
        )
        if best is None or t < best:
            best = t
    return best


def _circle_tables_exhaustive(G: FiniteGroup) -> list[tuple[tuple[int, ...], ...]]:
    """Brute force over circle tables: per-row candidates are filtered only by
    the shared identity and the compatibility axiom, then every combination
    is run through the full brace verifier."""
    n = G.order
    identity_row = tuple(range(n))
    row_candidates: list[list[tuple[int, ...]]] = [[identity_row]]
    for a in range(1, n):
        cands = []
        for perm in itertools.permutations(range(n)):
            if perm[0] != a:
                continue
            neg_a = G.inverse[a]
            ok = all(
                perm[G.table[b][c]] == G.table[G.table[perm[b]][neg_a]][perm[c]]
                for b in range(n) for c in range(n)
            )
            if ok:
                cands.append(perm)
        row_candidates.append(cands)

    out = []
    for rows in itertools.product(*row_candidates):
        try:
            verify_brace(G.table, rows)
        except (GroupAxiomError, BraceAxiomError):
            continue
        out.append(tuple(rows))
    return out


def _dedup_by_isomorphism(braces: list[SkewBrace]) -> list[SkewBrace]:
    reps: list[SkewBrace] = []
    for A in braces:
        if not any(brace_isomorphic(A, R) for R in reps):
            reps.append(A)
    return reps


def _build_catalog(n: int, method: str) -> BraceCatalog:
    if method == "holomorph":
        if n > HOLOMORPH_MAX_ORDER:
            raise ValueError(f"holomorph enumeration supports order <= {HOLOMORPH_MAX_ORDER}")
    elif method == "exhaustive":
        if n > EXHAUSTIVE_MAX_ORDER:
            raise ValueError(f"exhaustive enumeration supports order <= {EXHAUSTIVE_MAX_ORDER}")
    else:
        raise ValueError(f"unknown enumeration method: {method}")

    braces: list[SkewBrace] = []
    names: list[str] = []
    counts: list[tuple[str, int]] = []
    for name, G in groups_of_order(n):
        if method == "holomorph":
            tables = _circle_tables_holomorph(G)
            canon = sorted({_canonical_circle(G, t) for t in tables})
            classes = [verify_brace(G.table, t) for t in canon]
        else:
            tables = _circle_tables_exhaustive(G)
            candidates = [verify_brace(G.table, t) for t in sorted(tables)]
            classes = _dedup_by_isomorphism(candidates)
        braces.extend(classes)
        names.extend([name] * len(classes))
        counts.append((name, len(classes)))
    return BraceCatalog(n, method, tuple(braces), tuple(names), tuple(counts))


def cache_directory() -> Path:
    env = os.environ.get("BRACEKIT_CACHE")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "bracekit"


def _cache_path(n: int, method: str) -> Path:
    return cache_directory() / f"braces_{n}_{method}.json"


def _load_cached(n: int, method: str) -> Optional[BraceCatalog]:
    path = _cache_path(n, method)
    if not path.is_file():
        return None
    try:
        payload = json.loads(path.read_text())
        if payload.get("version") != __version__:
            return None
        braces = []
        names = []
        for entry in payload["entries"]:
            braces.append(verify_brace(entry["add"], entry["circle"]))
            names.append(entry["group"])
        counts = tuple((name, count) for name, count in payload["counts"])
    except (KeyError, ValueError, GroupAxiomError, BraceAxiomError, json.JSONDecodeError):
        return None
    return BraceCatalog(n, method, tuple(braces), tuple(names), counts)


def _store_cached(catalog: BraceCatalog) -> None:
    path = _cache_path(catalog.order, catalog.method)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        payload = {
            "version": __version__,
            "order": catalog.order,
            "method": catalog.method,
            "counts": [list(c) for c in catalog.counts],
            "entries": [
                {"group": name,
                 "add": [list(r) for r in A.add.table],
                 "circle": [list(r) for r in A.circle.table]}
                for name, A in zip(catalog.additive_names, catalog.braces)
            ],
        }
        path.write_text(json.dumps(payload, sort_keys=True))
    except OSError:
        pass  # cache is best-effort


@lru_cache(maxsize=None)
def enumerate_braces(n: int, method: str = "holomorph",
                     use_disk_cache: bool = True) -> BraceCatalog:
    """All skew braces of order n up to isomorphism.

    The catalog is deterministic: groups in a fixed order, class
    representatives in canonical (lexicographically minimal) form.
    """
    if use_disk_cache:
        cached = _load_cached(n, method)
        if cached is not None:
            return cached
    catalog = _build_catalog(n, method)
    if use_disk_cache:
        _store_cached(catalog)
    return catalog


def _sweep_row(args: tuple) -> dict:
    index, group_name, add_table, circle_table, desc_bound = args
    A = verify_brace(add_table, circle_table)
    row = {"index": index, "additive_name": group_name}
    row.update(brace_report(A, desc_bound))
    row["star_identities"] = check_star_identities(A).status
    row["checks"] = {r.name: r.status for r in theorem_checks(A, desc_bound)}
    return row


def catalog_invariant_sweep(catalog: BraceCatalog, jobs: int = 1,
                            desc_bound: int = 8) -> dict:
    """Run the invariant report and all theorem checks on every catalog entry.

    Rows are aggregated in catalog order regardless of the number of jobs,
    so the output is byte-stable.
    """
    tasks = [
        (i, name, A.add.table, A.circle.table, desc_bound)
        for i, (name, A) in enumerate(zip(catalog.additive_names, catalog.braces))
    ]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_sweep_row, tasks))
    else:
        rows = [_sweep_row(t) for t in tasks]
    rows.sort(key=lambda r: r["index"])

    aggregate: dict[str, dict[str, int]] = {}
    for row in rows:
        for name, status in row["checks"].items():
            bucket = aggregate.setdefault(name, {"pass": 0, "fail": 0, "na": 0})
            bucket[status] += 1
    return {
        "order": catalog.order,
        "method": catalog.method,
        "count": len(catalog.braces),
        "group_counts": {name: count for name, count in catalog.counts},
        "rows": rows,
        "aggregate": aggregate,
    }
