"""Products of Sylow subgroups and the search for exact factorizations G = S1 S2 ... Sr."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import ResourceLimitError
from .groups import GroupTable, Subgroup
from .perm import Permutation, compose
from .sylow import SylowSystem, all_sylow_subgroups, prime_decomposition

DEFAULT_BUDGET = 10_000_000

FIRST_HIT = "first-hit"
EXHAUSTIVE = "exhaustive"


class _Meter:
    """Counts element multiplications against a budget."""

    def __init__(self, budget: Optional[int]):
        self.budget = budget
        self.used = 0

    def charge(self, n: int, stats=None) -> None:
        self.used += n
        if self.budget is not None and self.used > self.budget:
            raise ResourceLimitError(
                f"factorization budget of {self.budget} multiplications exceeded",
                limit=self.budget,
                stats=dict(stats or {}, multiplications=self.used),
            )


def _product_imgs(subgroups: Sequence[Subgroup], meter: Optional[_Meter] = None, stats=None) -> set:
    current = {s._img for s in subgroups[0].elements}
    for S in subgroups[1:]:
        if meter is not None:
            meter.charge(len(current) * S.order, stats)
        factors = [s._img for s in S.elements]
        current = {tuple(map(s.__getitem__, a)) for a in current for s in factors}
    return current


def product_set(subgroups: Sequence[Subgroup]) -> frozenset:
    """{s1 s2 ... sr : si in Si}, products read left to right."""
    subgroups = list(subgroups)
    if not subgroups:
        raise ValueError("product_set needs at least one subgroup")
    parent = subgroups[0].parent
    if any(S.parent is not parent for S in subgroups):
        raise ValueError("all subgroups must share one parent group")
    return frozenset(Permutation._raw(img) for img in _product_imgs(subgroups))


@dataclass(frozen=True)
class InjectivityResult:
    injective: bool
    product_size: int
    tuple_count: int
    # two distinct tuples (s1..sr), (t1..tr) with equal products
    collision: Optional[tuple] = None


def verify_product_injectivity(system: SylowSystem) -> InjectivityResult:
    """Is (s1, ..., sr) -> s1...sr injective on S1 x ... x Sr?"""
    subgroups = list(system.subgroups)
    tuples = math.prod(S.order for S in subgroups)
    if not subgroups:
        return InjectivityResult(True, 1, 1)
    size = len(product_set(subgroups))
    if size == tuples:
        return InjectivityResult(True, size, tuples)
    seen = {}
    for combo in itertools.product(*(S.elements for S in subgroups)):
        prod = combo[0]
        for s in combo[1:]:
            prod = compose(prod, s)
        if prod in seen:
            return InjectivityResult(False, size, tuples, (seen[prod], combo))
        seen[prod] = combo
    raise AssertionError("product set smaller than tuple count but no collision found")


@dataclass(frozen=True)
class FactorizationResult:
    found: bool
    system: Optional[SylowSystem]
    product_size: int
    systems_tried: int
    successes: int = 0
    failures: int = 0
    # (system, product_size) of the first failing system; exhaustive mode only
    failing_example: Optional[tuple] = None
    multiplications: int = 0
    exhaustive: bool = False
    # order in which the Sylow subgroups were multiplied; systems are stored by ascending prime
    prime_order: tuple = ()


def search_sylow_factorization(G: GroupTable, mode: str = FIRST_HIT,
                               budget: Optional[int] = DEFAULT_BUDGET,
                               prime_order: Optional[Sequence[int]] = None) -> FactorizationResult:
    """Look for a Sylow system whose product is all of G.

    Systems are visited lexicographically: primes in ``prime_order``
    (ascending by default), and for each prime the Sylow subgroups in the
    order :func:`all_sylow_subgroups` discovers them. The product is taken
    in ``prime_order`` too. ``first-hit`` stops at the first success;
    ``exhaustive`` visits every system, counts successes and failures, and
    keeps the first failing system. Exceeding ``budget`` multiplications
    raises :class:`ResourceLimitError` carrying the statistics gathered so far.
    """
    if mode not in (FIRST_HIT, EXHAUSTIVE):
        raise ValueError(f"unknown search mode {mode!r}")
    exhaustive = mode == EXHAUSTIVE
    primes = prime_decomposition(G.order)
    order = tuple(prime_order) if prime_order is not None else primes.primes
    if sorted(order) != list(primes.primes):
        raise ValueError(f"prime order {order} is not a permutation of {primes.primes}")
    if primes.r == 0:
        system = SylowSystem(G, primes, ())
        return FactorizationResult(True, system, 1, 1, successes=1, exhaustive=exhaustive)

    # position of each prime's subgroup within an ascending-prime system
    slot = [order.index(p) for p in primes.primes]
    as_system = lambda combo: SylowSystem(G, primes, tuple(combo[i] for i in slot))
    candidates = [all_sylow_subgroups(G, p) for p in order]
    meter = _Meter(budget)
    tried = successes = failures = 0
    found_system = None
    failing = None
    best = 0
    for combo in itertools.product(*candidates):
        stats = {"systems_tried": tried, "successes": successes, "failures": failures}
        size = len(_product_imgs(combo, meter, stats))
        tried += 1
        best = max(best, size)
        if size == G.order:
            successes += 1
            if found_system is None:
                found_system = as_system(combo)
                if not exhaustive:
                    break
        else:
            failures += 1
            if failing is None and exhaustive:
                failing = (as_system(combo), size)
    return FactorizationResult(
        found=found_system is not None,
        system=found_system,
        product_size=G.order if found_system is not None else best,
        systems_tried=tried,
        successes=successes,
        failures=failures,
        failing_example=failing,
        multiplications=meter.used,
        exhaustive=exhaustive,
        prime_order=order,
    )
