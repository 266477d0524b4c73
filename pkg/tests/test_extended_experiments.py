"""Extended experiment: Sylow factorizations of insoluble groups beyond A5.

Not part of the acceptance gate. These record search outcomes on a few
small insoluble groups; they say nothing about groups outside this list.
"""

import itertools
import os

import pytest

import oracles
from coprime_nilpotency.catalog import builtin_group, load_group
from coprime_nilpotency.factorization import EXHAUSTIVE, FIRST_HIT, search_sylow_factorization
from coprime_nilpotency.groups import is_soluble
from coprime_nilpotency.sylow import all_sylow_subgroups

pytestmark = pytest.mark.extended

DATA = os.path.join(os.path.dirname(__file__), os.pardir, "data")


def raw(S):
    return frozenset(g._img for g in S)


@pytest.fixture(scope="module")
def psl27():
    return load_group(os.path.join(DATA, "psl27.grp"))


def test_psl27_is_simple_of_order_168(psl27):
    assert psl27.order == 168 and not is_soluble(psl27)
    assert [len(all_sylow_subgroups(psl27, p)) for p in (2, 3, 7)] == [21, 28, 8]


def test_psl27_factorizes(psl27):
    res = search_sylow_factorization(psl27, EXHAUSTIVE)
    assert res.found and res.systems_tried == 21 * 28 * 8
    lists = [[raw(S) for S in all_sylow_subgroups(psl27, p)] for p in (2, 3, 7)]
    successes = sum(oracles.product_count(combo) == 168 for combo in itertools.product(*lists))
    assert res.successes == successes == 2184


def test_a6_needs_a_different_prime_order():
    A6 = builtin_group("A6")
    ascending = search_sylow_factorization(A6, FIRST_HIT)
    assert not ascending.found and ascending.systems_tried == 45 * 10 * 36
    assert ascending.product_size < 360

    res = search_sylow_factorization(A6, FIRST_HIT, prime_order=(3, 2, 5))
    assert res.found and res.prime_order == (3, 2, 5)
    S2, S3, S5 = res.system.subgroups
    assert oracles.product_count([raw(S3), raw(S2), raw(S5)]) == 360
    assert oracles.product_count([raw(S2), raw(S3), raw(S5)]) < 360


def test_prime_order_must_permute_primes():
    with pytest.raises(ValueError):
        search_sylow_factorization(builtin_group("A5"), prime_order=(2, 3))
    with pytest.raises(ValueError):
        search_sylow_factorization(builtin_group("A5"), prime_order=(2, 3, 7))
