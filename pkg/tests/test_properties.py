import math

import pytest

import oracles
from coprime_nilpotency.groups import (
    alternating,
    cyclic,
    dihedral,
    direct_product,
    is_normal,
    quaternion8,
    subgroup_from,
    symmetric,
)
from coprime_nilpotency.perm import compose, element_order
from coprime_nilpotency.properties import (
    check_property_a,
    check_property_a_tuples,
    is_nilpotent_lcs,
    is_nilpotent_sylow,
    verify_theorem,
)
from coprime_nilpotency.groups import close, conjugate_subgroup
from coprime_nilpotency.sylow import prime_decomposition


def test_s3_counterexample():
    r = check_property_a(symmetric(3))
    assert not r.holds
    ce = r.counterexample
    assert (ce.order_x, ce.order_y, ce.observed) in {(2, 3, 2), (3, 2, 2)}
    assert ce.expected == 6


def test_c6_holds():
    r = check_property_a(cyclic(6))
    assert r.holds and r.counterexample is None


def test_c30_pair_count_from_oracle():
    # 76 ordered coprime nontrivial pairs, counted by brute force over element orders
    assert check_property_a(cyclic(30)).pairs_checked == 76


def test_p_groups_are_vacuous(catalog):
    for name, G in catalog:
        if prime_decomposition(G.order).r <= 1:
            r = check_property_a(G)
            assert r.holds and r.pairs_checked == 0, name
    assert check_property_a(quaternion8()).pairs_checked == 0


def test_tuple_extension():
    r = check_property_a_tuples(cyclic(30), 3)
    assert r.holds and r.tuple_size == 3
    assert r.pairs_checked == 48
    q = check_property_a_tuples(quaternion8(), 3)
    assert q.holds and q.pairs_checked == 0
    s = check_property_a_tuples(symmetric(3), 3)
    assert s.skipped and not s.holds
    assert s.counterexample == check_property_a(symmetric(3)).counterexample
    assert check_property_a_tuples(cyclic(6), 2) == check_property_a(cyclic(6))


def test_tuple_extension_on_nilpotent_catalog(catalog):
    for name, G in catalog:
        if G.order <= 32 and check_property_a(G).holds:
            assert check_property_a_tuples(G, 3).holds, name


def test_tuple_size_bounds():
    with pytest.raises(ValueError):
        check_property_a_tuples(cyclic(6), 4)
    with pytest.raises(ValueError):
        check_property_a_tuples(cyclic(6), 1)


def test_identity_skipping_is_equivalent(catalog):
    for name, G in catalog:
        if G.order > 100:
            continue
        full = oracles.property_a_full(frozenset(g._img for g in G)) is None
        assert check_property_a(G).holds == full, name


def test_counterexamples_reverify(catalog):
    for name, G in catalog:
        ce = check_property_a(G).counterexample
        if ce is None:
            continue
        k, m = element_order(ce.x), element_order(ce.y)
        assert (k, m) == (ce.order_x, ce.order_y)
        assert math.gcd(k, m) == 1 and k > 1 and m > 1
        assert oracles.order(oracles.mul(ce.x._img, ce.y._img)) == ce.observed != k * m


def test_nilpotency_examples():
    a5 = is_nilpotent_sylow(alternating(5))
    assert not a5.nilpotent
    assert a5.witness.order in (4, 3, 5)
    assert not is_normal(a5.witness)
    assert not conjugate_subgroup(a5.witness, a5.witness_conjugator).same_elements(a5.witness)
    assert is_nilpotent_sylow(cyclic(12)).nilpotent
    assert not is_nilpotent_sylow(symmetric(3)).nilpotent

    d4 = is_nilpotent_lcs(dihedral(4))
    assert d4.nilpotent and d4.series_orders == (8, 2, 1)
    s4 = is_nilpotent_lcs(symmetric(4))
    assert not s4.nilpotent
    assert s4.witness.order == 12
    assert is_nilpotent_lcs(cyclic(1)).nilpotent


def test_s4_lcs_stops_at_a4():
    S4 = symmetric(4)
    term = is_nilpotent_lcs(S4).witness
    A4 = {g for g in S4 if oracles.sign(g._img) == 1}
    assert set(term.elements) == A4


@pytest.mark.parametrize(
    "G, flags",
    [
        (alternating(5), (False, False, False)),
        (direct_product(cyclic(2), cyclic(9)), (True, True, True)),
        (symmetric(3), (False, False, False)),
        (quaternion8(), (True, True, True)),
    ],
)
def test_verify_theorem_examples(G, flags):
    v = verify_theorem(G)
    assert v.flags == flags
    assert v.consistent


def test_biconditional_and_oracle_agreement(catalog):
    for name, G in catalog:
        v = verify_theorem(G)
        assert v.consistent, (name, v.flags)


def test_property_a_inherited_by_subgroups(catalog):
    for name, G in catalog:
        if G.order > 64 or not check_property_a(G).holds:
            continue
        for g in G.elements[:8]:
            for h in G.elements[-4:]:
                H = subgroup_from(G, [g, h])
                sub = close(G.degree, H.elements)
                assert check_property_a(sub).holds, name


def test_first_counterexample_is_minimal_index():
    G = symmetric(4)
    ce = check_property_a(G).counterexample
    elems = G.elements
    first = None
    for i, x in enumerate(elems):
        for j, y in enumerate(elems):
            k, m = element_order(x), element_order(y)
            if k > 1 and m > 1 and math.gcd(k, m) == 1 and element_order(compose(x, y)) != k * m:
                first = (x, y)
                break
        if first:
            break
    assert (ce.x, ce.y) == first
