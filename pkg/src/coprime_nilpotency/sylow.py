"""Sylow subgroups: construction, conjugacy classes and Sylow systems."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .errors import InvariantError
from .groups import GroupTable, Subgroup, _closure, conjugate_subgroup, normalizer
from .perm import Permutation, element_order, power


@dataclass(frozen=True)
class PrimeDecomposition:
    """Sorted prime factorization ``((p1, a1), (p2, a2), ...)`` with p1 < p2 < ..."""

    factors: Tuple[Tuple[int, int], ...]

    @property
    def primes(self) -> tuple:
        return tuple(p for p, _ in self.factors)

    @property
    def r(self) -> int:
        return len(self.factors)

    @property
    def value(self) -> int:
        n = 1
        for p, a in self.factors:
            n *= p**a
        return n

    def p_part(self, p: int) -> int:
        for q, a in self.factors:
            if q == p:
                return p**a
        return 1

    def __iter__(self):
        return iter(self.factors)


def prime_decomposition(n: int) -> PrimeDecomposition:
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    factors = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            a = 0
            while n % p == 0:
                n //= p
                a += 1
            factors.append((p, a))
        p += 1 if p == 2 else 2
    if n > 1:
        factors.append((n, 1))
    return PrimeDecomposition(tuple(factors))


def _require_divides(G: GroupTable, p: int) -> None:
    if p < 2 or G.order % p:
        raise ValueError(f"{p} does not divide the group order {G.order}")


def element_of_prime_order(G: GroupTable, p: int) -> Permutation:
    """First element of order exactly p, reached by powering the first h with p | order(h)."""
    _require_divides(G, p)
    for h in G.elements:
        k = element_order(h)
        if k % p == 0:
            return power(h, k // p)
    raise InvariantError(f"no element of order {p} in a group of order {G.order}")


def _cached(G: GroupTable, key, compute):
    cache = G.__dict__.setdefault("_sylow_cache", {})
    if key not in cache:
        cache[key] = compute()
    return cache[key]


def sylow_subgroup(G: GroupTable, p: int) -> Subgroup:
    """A Sylow p-subgroup of G.

    Starts from the cyclic group of an element of order p and repeatedly
    adjoins the first element of the normalizer whose image in N/P has
    order p, until the full p-part of |G| is reached.
    """
    _require_divides(G, p)
    return _cached(G, ("sylow", p), lambda: _build_sylow(G, p))


def _build_sylow(G: GroupTable, p: int) -> Subgroup:
    target = prime_decomposition(G.order).p_part(p)
    seed = element_of_prime_order(G, p)
    P = Subgroup(G, _closure(G.identity, [seed], G.order), [seed])
    while P.order < target:
        N = normalizer(P)
        for g in N.elements:
            if g in P.element_set or power(g, p) not in P.element_set:
                continue
            gens = P.generators + (g,)
            elements = _closure(G.identity, gens, G.order)
            if len(elements) == P.order * p:
                P = Subgroup(G, elements, gens)
                break
        else:
            raise InvariantError(f"could not extend a {p}-subgroup of order {P.order} inside its normalizer")
    if P.order != target:
        raise InvariantError(f"Sylow {p}-subgroup has order {P.order}, expected {target}")
    return P


def all_sylow_subgroups(G: GroupTable, p: int) -> list:
    """Every Sylow p-subgroup, as distinct conjugates of the default one, in discovery order."""
    _require_divides(G, p)
    return list(_cached(G, ("all", p), lambda: _build_all(G, p)))


def _build_all(G: GroupTable, p: int) -> tuple:
    P = sylow_subgroup(G, p)
    found = {}
    for g in G.elements:
        Q = conjugate_subgroup(P, g)
        if Q.element_set not in found:
            found[Q.element_set] = Q
    subgroups = tuple(found.values())
    n_p = len(subgroups)
    index = G.order // P.order
    if n_p % p != 1 or index % n_p:
        raise InvariantError(f"Sylow count n_{p} = {n_p} violates n_p = 1 mod p or n_p | {index}")
    return subgroups


@dataclass(frozen=True)
class SylowSystem:
    """One Sylow p-subgroup per prime dividing |G|, ordered by increasing prime."""

    parent: GroupTable
    primes: PrimeDecomposition
    subgroups: Tuple[Subgroup, ...]

    def __post_init__(self):
        if len(self.subgroups) != self.primes.r:
            raise InvariantError("a Sylow system needs exactly one subgroup per prime")
        for (p, a), S in zip(self.primes, self.subgroups):
            if S.order != p**a or S.parent is not self.parent:
                raise InvariantError(f"subgroup of order {S.order} is not a Sylow {p}-subgroup here")

    @property
    def orders(self) -> tuple:
        return tuple(S.order for S in self.subgroups)

    def __len__(self) -> int:
        return len(self.subgroups)


def default_sylow_system(G: GroupTable) -> SylowSystem:
    primes = prime_decomposition(G.order)
    return SylowSystem(G, primes, tuple(sylow_subgroup(G, p) for p in primes.primes))
