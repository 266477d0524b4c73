"""Coprime-order product property, and nilpotency decided two independent ways.

A group has *Property A* when, for any elements x, y whose orders k and m
are coprime, the product xy has order exactly km. For finite groups this
holds precisely for the nilpotent ones; :func:`verify_theorem` checks that
all three computations agree on a given group.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Tuple

from .groups import GroupTable, Subgroup, lower_central_series, non_normalizing_generator
from .perm import Permutation, _cycles0, element_order
from .sylow import default_sylow_system

MAX_TUPLE_SIZE = 3


@dataclass(frozen=True)
class Counterexample:
    """Nontrivial elements with pairwise coprime orders whose product has the wrong order."""

    factors: Tuple[Permutation, ...]
    orders: Tuple[int, ...]
    observed: int

    @property
    def expected(self) -> int:
        return math.prod(self.orders)

    @property
    def x(self) -> Permutation:
        return self.factors[0]

    @property
    def y(self) -> Permutation:
        return self.factors[1]

    @property
    def order_x(self) -> int:
        return self.orders[0]

    @property
    def order_y(self) -> int:
        return self.orders[1]


@dataclass(frozen=True)
class PropertyAReport:
    holds: bool
    counterexample: Optional[Counterexample]
    pairs_checked: int
    tuple_size: int = 2
    # set when the k-tuple scan was not run because the pairwise scan already failed
    skipped: bool = False

    def __post_init__(self):
        assert self.holds == (self.counterexample is None)


@dataclass(frozen=True)
class NilpotencyReport:
    nilpotent: bool
    method: str
    witness: Optional[Subgroup] = None
    # sylow-normality only: the prime and a parent generator g with S^g != S
    witness_prime: Optional[int] = None
    witness_conjugator: Optional[Permutation] = None
    series_orders: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        assert self.nilpotent == (self.witness is None)


SYLOW = "sylow-normality"
LCS = "lower-central-series"


def _order_of_product(factors) -> int:
    img = factors[0]._img
    for f in factors[1:]:
        img = tuple(map(f._img.__getitem__, img))
    return math.lcm(*(len(c) for c in _cycles0(img)))


def _nontrivial_with_orders(G: GroupTable) -> list:
    return [(g, k) for g in G.elements if (k := element_order(g)) > 1]


def check_property_a(G: GroupTable) -> PropertyAReport:
    """Scan ordered pairs of nontrivial elements with coprime orders.

    Stops at the first pair (in enumeration order) whose product order is
    not the product of the two orders and reports it.
    """
    elems = _nontrivial_with_orders(G)
    checked = 0
    for x, k in elems:
        x_img = x._img
        for y, m in elems:
            if math.gcd(k, m) != 1:
                continue
            checked += 1
            xy = tuple(map(y._img.__getitem__, x_img))
            observed = math.lcm(*(len(c) for c in _cycles0(xy)))
            if observed != k * m:
                return PropertyAReport(False, Counterexample((x, y), (k, m), observed), checked)
    return PropertyAReport(True, None, checked)


def check_property_a_tuples(G: GroupTable, k: int) -> PropertyAReport:
    """Extension to k elements of pairwise coprime orders.

    Only evaluated on groups that pass the pairwise check; otherwise the
    pairwise counterexample is returned with ``skipped=True``.
    """
    if not 2 <= k <= MAX_TUPLE_SIZE:
        raise ValueError(f"tuple size must be in 2..{MAX_TUPLE_SIZE}, got {k}")
    pair = check_property_a(G)
    if k == 2:
        return pair
    if not pair.holds:
        return PropertyAReport(False, pair.counterexample, 0, tuple_size=k, skipped=True)

    elems = _nontrivial_with_orders(G)
    checked = 0
    chosen = []

    def scan(depth):
        nonlocal checked
        if depth == k:
            checked += 1
            factors = tuple(g for g, _ in chosen)
            orders = tuple(o for _, o in chosen)
            observed = _order_of_product(factors)
            if observed != math.prod(orders):
                return Counterexample(factors, orders, observed)
            return None
        for g, o in elems:
            if all(math.gcd(o, prev) == 1 for _, prev in chosen):
                chosen.append((g, o))
                bad = scan(depth + 1)
                chosen.pop()
                if bad is not None:
                    return bad
        return None

    bad = scan(0)
    return PropertyAReport(bad is None, bad, checked, tuple_size=k)


def is_nilpotent_sylow(G: GroupTable) -> NilpotencyReport:
    """Nilpotent iff each Sylow subgroup of the default system is normal.

    A normal Sylow p-subgroup is the only one, so testing one per prime loses
    nothing.
    """
    system = default_sylow_system(G)
    for p, S in zip(system.primes.primes, system.subgroups):
        g = non_normalizing_generator(S)
        if g is not None:
            return NilpotencyReport(False, SYLOW, witness=S, witness_prime=p, witness_conjugator=g)
    return NilpotencyReport(True, SYLOW)


def is_nilpotent_lcs(G: GroupTable) -> NilpotencyReport:
    series = lower_central_series(G)
    orders = tuple(s.order for s in series)
    last = series[-1]
    if last.is_trivial():
        return NilpotencyReport(True, LCS, series_orders=orders)
    return NilpotencyReport(False, LCS, witness=last, series_orders=orders)


@dataclass(frozen=True)
class TheoremVerdict:
    property_a: PropertyAReport
    sylow: NilpotencyReport
    lcs: NilpotencyReport

    @property
    def flags(self) -> tuple:
        return (self.property_a.holds, self.sylow.nilpotent, self.lcs.nilpotent)

    @property
    def consistent(self) -> bool:
        a, n, n2 = self.flags
        return a == n == n2


def verify_theorem(G: GroupTable) -> TheoremVerdict:
    """Property A, Sylow-normality and lower central series must all agree.

    An inconsistent verdict means a bug in this package.
    """
    return TheoremVerdict(check_property_a(G), is_nilpotent_sylow(G), is_nilpotent_lcs(G))
