import pytest

import oracles
from coprime_nilpotency.groups import alternating, cyclic, is_normal, symmetric
from coprime_nilpotency.perm import element_order, parse_cycles, power
from coprime_nilpotency.sylow import (
    all_sylow_subgroups,
    default_sylow_system,
    element_of_prime_order,
    prime_decomposition,
    sylow_subgroup,
)


@pytest.mark.parametrize(
    "n, factors", [(60, ((2, 2), (3, 1), (5, 1))), (1, ()), (8, ((2, 3),)), (97, ((97, 1),)), (720, ((2, 4), (3, 2), (5, 1)))]
)
def test_prime_decomposition(n, factors):
    d = prime_decomposition(n)
    assert d.factors == factors
    assert d.value == n
    assert d.r == len(factors)


def test_element_of_prime_order(A5):
    g = element_of_prime_order(A5, 5)
    assert element_order(g) == 5 and len(g.cycles()) == 1
    C6 = cyclic(6)
    assert element_of_prime_order(C6, 3) == power(C6.generators[0], 2)
    t = element_of_prime_order(symmetric(3), 2)
    assert [len(c) for c in t.cycles()] == [2]
    with pytest.raises(ValueError):
        element_of_prime_order(A5, 7)


def test_sylow_examples(A5):
    assert sylow_subgroup(A5, 2).order == 4
    assert sylow_subgroup(cyclic(12), 3).order == 3
    P = sylow_subgroup(symmetric(4), 2)
    assert P.order == 8
    assert oracles.naive_closure([g._img for g in P], 4) == frozenset(g._img for g in P)
    with pytest.raises(ValueError):
        sylow_subgroup(A5, 7)


@pytest.fixture(scope="module")
def a5_census(A5):
    # every Sylow subgroup of A5 is cyclic or Klein four, so two generators reach all of them
    return oracles.two_generated_subgroups(frozenset(g._img for g in A5), 5)


@pytest.mark.parametrize("p, count", [(2, 5), (3, 10), (5, 6)])
def test_a5_sylow_counts_against_oracle(A5, a5_census, p, count):
    subs = all_sylow_subgroups(A5, p)
    assert len(subs) == count
    p_part = prime_decomposition(60).p_part(p)
    expected = {H for H in a5_census if len(H) == p_part}
    assert {frozenset(g._img for g in S) for S in subs} == expected


def test_abelian_sylow_is_unique():
    assert len(all_sylow_subgroups(cyclic(6), 3)) == 1


def test_sylow_properties_over_catalog(catalog):
    for name, G in catalog:
        for p, a in prime_decomposition(G.order):
            S = sylow_subgroup(G, p)
            assert S.order == p**a, name
            subs = all_sylow_subgroups(G, p)
            n_p = len(subs)
            assert n_p % p == 1 and (G.order // p**a) % n_p == 0, (name, p, n_p)
            assert all(T.order == p**a for T in subs)
            assert len({T.element_set for T in subs}) == n_p


def test_sylow_is_deterministic():
    a = sylow_subgroup(symmetric(5), 2).elements
    b = sylow_subgroup(symmetric(5), 2).elements
    assert a == b


def test_default_system():
    A5 = alternating(5)
    assert default_sylow_system(A5).orders == (4, 3, 5)
    assert len(default_sylow_system(cyclic(1))) == 0
    C30 = cyclic(30)
    system = default_sylow_system(C30)
    assert system.orders == (2, 3, 5)
    assert all(is_normal(S) for S in system.subgroups)


def test_classic_subgroups_are_sylow(A5, classic_pqr):
    keys = [{S.element_set for S in all_sylow_subgroups(A5, p)} for p in (2, 3, 5)]
    for S, found in zip(classic_pqr, keys):
        assert S.element_set in found


def test_s4_counts():
    S4 = symmetric(4)
    assert len(all_sylow_subgroups(S4, 2)) == 3
    assert len(all_sylow_subgroups(S4, 3)) == 4
    assert parse_cycles("(1,2,3)", 4) in {g for S in all_sylow_subgroups(S4, 3) for g in S}
