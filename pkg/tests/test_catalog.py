import pytest

from bracekit.braces import brace_isomorphic, verify_brace
from bracekit.catalog import (
    _build_catalog,
    cache_directory,
    catalog_invariant_sweep,
    enumerate_braces,
)
from bracekit.formats import dumps

KNOWN_COUNTS = {1: 1, 2: 1, 3: 1, 4: 4, 5: 1, 6: 6, 7: 1, 8: 47}


@pytest.mark.parametrize("n,count", sorted(KNOWN_COUNTS.items()))
def test_counts(n, count):
    assert len(enumerate_braces(n).braces) == count


def test_methods_agree_on_small_orders():
    for n in range(1, 6):
        hol = enumerate_braces(n, method="holomorph")
        exh = enumerate_braces(n, method="exhaustive")
        assert len(hol.braces) == len(exh.braces)
        # same classes, not merely the same count
        for A in exh.braces:
            assert sum(1 for B in hol.braces if brace_isomorphic(A, B)) == 1


def test_prime_orders_have_only_the_trivial_brace():
    for p in (2, 3, 5, 7):
        cat = enumerate_braces(p)
        assert len(cat.braces) == 1
        A = cat.braces[0]
        assert A.add.table == A.circle.table


def test_entries_reverify_and_are_pairwise_non_isomorphic():
    cat = enumerate_braces(6)
    for A in cat.braces:
        B = verify_brace(A.add.table, A.circle.table)
        assert B.circle.table == A.circle.table
    for i, A in enumerate(cat.braces):
        for B in cat.braces[i + 1:]:
            assert brace_isomorphic(A, B) is None


def test_catalog_order_4_group_breakdown():
    cat = enumerate_braces(4)
    assert dict(cat.counts) == {"C4": 2, "C2xC2": 2}
    assert len(cat.additive_names) == 4


def test_build_is_deterministic():
    a = _build_catalog(6, "holomorph")
    b = _build_catalog(6, "holomorph")
    assert [A.circle.table for A in a.braces] == [B.circle.table for B in b.braces]
    assert a.additive_names == b.additive_names


def test_disk_cache_roundtrip(tmp_path, monkeypatch):
    monkeypatch.setenv("BRACEKIT_CACHE", str(tmp_path / "cachedir"))
    enumerate_braces.cache_clear()
    fresh = enumerate_braces(6)
    assert cache_directory().exists()
    enumerate_braces.cache_clear()
    cached = enumerate_braces(6)
    assert [A.circle.table for A in cached.braces] == \
        [A.circle.table for A in fresh.braces]
    enumerate_braces.cache_clear()


def test_unknown_method_rejected():
    with pytest.raises(ValueError):
        enumerate_braces(4, method="magic")


def test_sweep_order_6_all_weight_one():
    sweep = catalog_invariant_sweep(enumerate_braces(6))
    assert sweep["count"] == 6
    assert all(row["weight"] == 1 for row in sweep["rows"])
    for name, bucket in sweep["aggregate"].items():
        assert bucket["fail"] == 0, name


def test_sweep_parallel_output_identical():
    cat = enumerate_braces(6)
    serial = catalog_invariant_sweep(cat, jobs=1)
    parallel = catalog_invariant_sweep(cat, jobs=4)
    assert dumps(serial) == dumps(parallel)
