import itertools

import pytest

from bracekit.groups import (
    GroupAxiomError,
    all_normal_subgroups,
    automorphism_group,
    abelian_invariants,
    center,
    commutator_subgroup,
    group_signature,
    normal_closure,
    quotient_group,
    subgroup_closure,
    verify_group_axioms,
)
from bracekit.grouptables import cyclic, dihedral, dicyclic, direct_product_group, alternating4

from conftest import brute_automorphisms, brute_normal_subgroups, brute_subgroups, klein_group, permutation_table


def test_verify_c2():
    G = verify_group_axioms([[0, 1], [1, 0]])
    assert G.order == 2
    assert G.inverse == (0, 1)


def test_verify_max_table_has_no_inverses():
    table = [[max(a, b) for b in range(3)] for a in range(3)]
    with pytest.raises(GroupAxiomError) as exc:
        verify_group_axioms(table)
    assert exc.value.axiom == "inverse"
    assert exc.value.witness == (1,)


def test_verify_s3_from_permutation_composition():
    # oracle: compose the six permutations of 3 points directly
    perms = sorted(itertools.permutations(range(3)))
    G = verify_group_axioms(permutation_table(perms))
    assert G.order == 6
    assert any(G.table[a][b] != G.table[b][a] for a in range(6) for b in range(6))


def test_verify_normalizes_identity_to_zero():
    # C3 with the identity parked at index 2
    relabel = [2, 0, 1]  # old -> new
    base = [[(i + j) % 3 for j in range(3)] for i in range(3)]
    table = [[0] * 3 for _ in range(3)]
    for a in range(3):
        for b in range(3):
            table[relabel[a]][relabel[b]] = relabel[base[a][b]]
    G = verify_group_axioms(table)
    assert all(G.table[0][a] == a for a in range(3))


def test_verify_broken_associativity():
    table = [[0, 1, 2], [1, 2, 0], [2, 0, 2]]
    with pytest.raises(GroupAxiomError):
        verify_group_axioms(table)


def test_center_examples(s3_group):
    assert center(cyclic(4)).members == frozenset(range(4))
    assert center(klein_group()).members == frozenset(range(4))
    # brute force over all pairs
    expected = frozenset(
        a for a in s3_group.elements()
        if all(s3_group.table[a][b] == s3_group.table[b][a] for b in s3_group.elements())
    )
    assert center(s3_group).members == expected == frozenset({0})


def test_commutator_subgroup(s3_group):
    assert commutator_subgroup(cyclic(6)).members == frozenset({0})
    # oracle: smallest brute-forced subgroup containing all commutators
    comms = {s3_group.commutator(a, b)
             for a in s3_group.elements() for b in s3_group.elements()}
    candidates = [S for S in brute_subgroups(s3_group) if comms <= S]
    expected = min(candidates, key=len)
    got = commutator_subgroup(s3_group).members
    assert got == expected
    assert len(got) == 3

    d4 = dihedral(4)
    comms = {d4.commutator(a, b) for a in d4.elements() for b in d4.elements()}
    candidates = [S for S in brute_subgroups(d4) if comms <= S]
    assert commutator_subgroup(d4).members == min(candidates, key=len)
    assert commutator_subgroup(d4).members == center(d4).members
    assert len(commutator_subgroup(d4)) == 2


def test_subgroup_closure(s3_group):
    assert subgroup_closure(cyclic(5), []).members == frozenset({0})
    assert subgroup_closure(cyclic(6), [2]).members == frozenset({0, 2, 4})
    transposition = next(a for a in range(1, 6) if s3_group.table[a][a] == 0)
    three_cycle = next(a for a in range(1, 6) if s3_group.table[a][a] != 0)
    got = subgroup_closure(s3_group, [transposition, three_cycle]).members
    assert got == frozenset(range(6))


def test_normal_closure(s3_group):
    assert normal_closure(cyclic(6), [2]).members == frozenset({0, 2, 4})
    assert normal_closure(s3_group, []).members == frozenset({0})
    transposition = next(a for a in range(1, 6) if s3_group.table[a][a] == 0)
    assert normal_closure(s3_group, [transposition]).members == frozenset(range(6))


def test_all_normal_subgroups_against_brute_force(s3_group):
    assert len(all_normal_subgroups(cyclic(5))) == 2
    assert set(all_normal_subgroups(s3_group)) == set(brute_normal_subgroups(s3_group))
    assert len(all_normal_subgroups(s3_group)) == 3
    klein = klein_group()
    assert set(all_normal_subgroups(klein)) == set(brute_normal_subgroups(klein))
    assert len(all_normal_subgroups(klein)) == 5


def test_normal_closure_is_intersection_of_normal_subgroups():
    for G in (cyclic(8), dihedral(4), dicyclic(3), alternating4()):
        lattice = all_normal_subgroups(G)
        for seed in ([1], [2], [1, 3]):
            expected = frozenset(G.elements())
            for N in lattice:
                if frozenset(seed) <= N:
                    expected &= N
            assert normal_closure(G, seed).members == expected


@pytest.mark.parametrize("G,count", [
    (cyclic(2), 1),
    (cyclic(3), 2),
    (klein_group(), 6),
])
def test_automorphism_counts_against_brute_force(G, count):
    auts = automorphism_group(G)
    assert len(auts) == count
    assert set(auts) == set(brute_automorphisms(G))


def test_automorphism_group_closed_under_composition_and_inverse():
    for G in (dihedral(3), cyclic(8), dihedral(4)):
        auts = set(automorphism_group(G))
        for p in auts:
            inv = [0] * G.order
            for i, v in enumerate(p):
                inv[v] = i
            assert tuple(inv) in auts
            for q in auts:
                assert tuple(p[q[i]] for i in range(G.order)) in auts


def test_quotient_group(s3_group):
    Q, _ = quotient_group(cyclic(4), subgroup_closure(cyclic(4), [0, 1, 2, 3]))
    assert Q.order == 1

    Q, proj = quotient_group(cyclic(4), subgroup_closure(cyclic(4), [2]))
    assert Q.order == 2 and proj == (0, 1, 0, 1)

    a3 = next(N for N in all_normal_subgroups(s3_group) if len(N) == 3)
    Q, proj = quotient_group(s3_group, a3)
    assert Q.order == 2
    # coset-arithmetic oracle: projection is a homomorphism with kernel a3
    for a in s3_group.elements():
        for b in s3_group.elements():
            assert proj[s3_group.table[a][b]] == Q.table[proj[a]][proj[b]]
    assert frozenset(a for a in s3_group.elements() if proj[a] == 0) == a3


def test_quotient_rejects_non_normal(s3_group):
    transposition = next(a for a in range(1, 6) if s3_group.table[a][a] == 0)
    H = subgroup_closure(s3_group, [transposition])
    with pytest.raises(ValueError):
        quotient_group(s3_group, H)


def test_constructed_groups_reverify():
    for G in (cyclic(7), dihedral(5), dicyclic(2), alternating4(),
              direct_product_group(cyclic(2), cyclic(6))):
        H = verify_group_axioms(G.table)
        assert H.table == G.table


def test_abelian_invariants_and_signature():
    assert abelian_invariants(cyclic(6)) == (6,)
    assert abelian_invariants(klein_group()) == (2, 2)
    assert abelian_invariants(direct_product_group(cyclic(4), cyclic(2))) == (4, 2)
    assert abelian_invariants(dihedral(3)) is None
    assert group_signature(klein_group()) == "C2 x C2"
    assert "nonabelian" in group_signature(dihedral(3))
