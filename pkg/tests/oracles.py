"""Naive reference computations on plain 0-based image tuples.

Nothing here imports the package under test. Everything is written for
clarity over speed: orders by repeated powering, closures by multiplying
until nothing new appears.
"""

import itertools


def mul(a, b):
    """a first, then b."""
    return tuple(b[a[i]] for i in range(len(a)))


def ident(n):
    return tuple(range(n))


def inv(a):
    out = [None] * len(a)
    for i, v in enumerate(a):
        out[v] = i
    return tuple(out)


def order(a):
    e = ident(len(a))
    k, x = 1, a
    while x != e:
        x = mul(x, a)
        k += 1
    return k


def sign(a):
    inversions = sum(1 for i in range(len(a)) for j in range(i + 1, len(a)) if a[i] > a[j])
    return -1 if inversions % 2 else 1


def naive_closure(gens, n):
    gens = list(gens)
    group = {ident(n)}
    frontier = list(group)
    while frontier:
        new = {mul(x, g) for x in frontier for g in gens} - group
        group |= new
        frontier = list(new)
    return frozenset(group)


def from_cycles(cycles, n):
    img = list(range(n))
    for c in cycles:
        for a, b in zip(c, c[1:] + c[:1]):
            img[a - 1] = b - 1
    return tuple(img)


def conj_set(S, g):
    gi = inv(g)
    return frozenset(mul(mul(gi, s), g) for s in S)


def commutator_subgroup(A, B, n):
    comms = {mul(mul(inv(a), inv(b)), mul(a, b)) for a in A for b in B}
    return naive_closure(comms, n)


def lcs_orders(G, n):
    orders = [len(G)]
    cur = G
    while True:
        nxt = commutator_subgroup(cur, G, n)
        if len(nxt) == len(cur):
            return orders
        orders.append(len(nxt))
        cur = nxt


def two_generated_subgroups(G, n):
    """Every subgroup generated by at most two elements of G."""
    elems = sorted(G)
    return {naive_closure([a, b], n) for i, a in enumerate(elems) for b in elems[i:]}


def product_count(subgroups):
    """Distinct values of s1*s2*...*sr over all tuples."""
    out = set()
    for combo in itertools.product(*subgroups):
        x = combo[0]
        for s in combo[1:]:
            x = mul(x, s)
        out.add(x)
    return len(out)


def property_a_full(G):
    """First failing ordered pair over ALL elements, identity included, or None."""
    for x in G:
        for y in G:
            k, m = order(x), order(y)
            if _gcd(k, m) == 1 and order(mul(x, y)) != k * m:
                return x, y
    return None


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a
