"""Finite permutation groups by full enumeration.

Every group is stored with its complete element list, in the order the
breadth-first closure discovered them. That order is the "fixed enumeration
order" every deterministic scan in the package relies on.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Optional, Sequence

from .errors import DegreeMismatchError, InvariantError, MembershipError, ResourceLimitError
from .perm import Permutation, compose, inverse

DEFAULT_MAX_ELEMENTS = 1_000_000

# inclusive parameter bounds for the standard families
FAMILY_BOUNDS = {
    "cyclic": (1, 5000),
    "dihedral": (3, 2500),
    "symmetric": (1, 9),
    "alternating": (1, 10),
}


def _closure(identity: Permutation, generators: Sequence[Permutation], max_elements: int) -> list:
    elements = [identity]
    seen = {identity}
    queue = deque([identity])
    gens = [g for g in dict.fromkeys(generators) if g != identity]
    while queue:
        x = queue.popleft()
        for g in gens:
            y = compose(x, g)
            if y not in seen:
                seen.add(y)
                elements.append(y)
                if len(elements) > max_elements:
                    raise ResourceLimitError(
                        f"group has more than {max_elements} elements (enumeration cap)",
                        limit=max_elements,
                        stats={"elements_enumerated": len(elements)},
                    )
                queue.append(y)
    return elements


def _small_generating_set(identity: Permutation, elements: Sequence[Permutation]) -> tuple:
    gens = []
    span = {identity}
    for x in elements:
        if x not in span:
            gens.append(x)
            span = set(_closure(identity, gens, len(elements)))
            if len(span) == len(elements):
                break
    return tuple(gens) or (identity,)


class GroupTable:
    """A permutation group with every element enumerated.

    ``elements`` is a tuple in discovery order with the identity first.
    Membership tests and ``index`` lookups are O(1).
    """

    def __init__(self, degree: int, generators: Sequence[Permutation], elements: Sequence[Permutation],
                 name: Optional[str] = None):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(elements)
        self._index = {g: i for i, g in enumerate(self.elements)}
        self.order = len(self.elements)
        self.name = name
        if math.factorial(degree) % self.order:
            raise InvariantError(f"order {self.order} does not divide {degree}!")

    @property
    def identity(self) -> Permutation:
        return self.elements[0]

    def __contains__(self, g) -> bool:
        return g in self._index

    def __len__(self) -> int:
        return self.order

    def __iter__(self):
        return iter(self.elements)

    def index(self, g: Permutation) -> int:
        return self._index[g]

    def whole(self) -> "Subgroup":
        """The group itself viewed as a subgroup of itself."""
        return Subgroup(self, self.elements, self.generators)

    def trivial(self) -> "Subgroup":
        return Subgroup(self, (self.identity,), (self.identity,))

    def __repr__(self):
        label = self.name or "group"
        return f"<GroupTable {label} degree={self.degree} order={self.order}>"


class Subgroup:
    """A subgroup of a :class:`GroupTable`, stored as an explicit element set."""

    def __init__(self, parent: GroupTable, elements: Sequence[Permutation],
                 generators: Optional[Sequence[Permutation]] = None):
        self.parent = parent
        self.elements = tuple(elements)
        self.element_set = frozenset(self.elements)
        self.order = len(self.elements)
        self._generators = tuple(generators) if generators is not None else None
        if parent.order % self.order:
            raise InvariantError(f"subgroup order {self.order} does not divide {parent.order}")

    @property
    def generators(self) -> tuple:
        if self._generators is None:
            self._generators = _small_generating_set(self.parent.identity, self.elements)
        return self._generators

    def __contains__(self, g) -> bool:
        return g in self.element_set

    def __len__(self) -> int:
        return self.order

    def __iter__(self):
        return iter(self.elements)

    def same_elements(self, other: "Subgroup") -> bool:
        return self.element_set == other.element_set

    def key(self) -> tuple:
        """Canonical, hashable identity of the element set."""
        return tuple(sorted(self.elements))

    def is_trivial(self) -> bool:
        return self.order == 1

    def __repr__(self):
        return f"<Subgroup order={self.order} of {self.parent!r}>"


def close(degree: int, generators: Iterable[Permutation], max_elements: int = DEFAULT_MAX_ELEMENTS,
          name: Optional[str] = None) -> GroupTable:
    """Enumerate the group generated by ``generators`` acting on ``degree`` points."""
    gens = list(generators)
    if not gens:
        raise ValueError("at least one generator is required")
    for g in gens:
        if g.degree != degree:
            raise DegreeMismatchError(f"generator {g} has degree {g.degree}, expected {degree}")
    elements = _closure(Permutation.identity(degree), gens, max_elements)
    return GroupTable(degree, gens, elements, name=name)


def subgroup_from(parent: GroupTable, generators: Iterable[Permutation]) -> Subgroup:
    gens = list(generators)
    for g in gens:
        if g not in parent:
            raise MembershipError(f"generator {g} is not in the parent group")
    if not gens:
        gens = [parent.identity]
    return Subgroup(parent, _closure(parent.identity, gens, parent.order), gens)


def conjugate(s: Permutation, g: Permutation) -> Permutation:
    """Return g^-1 s g."""
    return compose(compose(inverse(g), s), g)


def conjugate_subgroup(S: Subgroup, g: Permutation) -> Subgroup:
    if g not in S.parent:
        raise MembershipError(f"conjugating element {g} is not in the parent group")
    gi = inverse(g)
    conj = lambda s: compose(compose(gi, s), g)
    return Subgroup(S.parent, [conj(s) for s in S.elements], [conj(s) for s in S.generators])


def normalizes(g: Permutation, S: Subgroup) -> bool:
    # conjugating a generating set into S suffices: the conjugate has the same order as S
    gi = inverse(g)
    return all(compose(compose(gi, s), g) in S.element_set for s in S.generators)


def non_normalizing_generator(S: Subgroup) -> Optional[Permutation]:
    """First parent generator g with S^g != S, or None when S is normal."""
    for g in S.parent.generators:
        if not normalizes(g, S):
            return g
    return None


def is_normal(S: Subgroup) -> bool:
    return non_normalizing_generator(S) is None


def normalizer(S: Subgroup) -> Subgroup:
    return Subgroup(S.parent, [g for g in S.parent.elements if normalizes(g, S)])


def commutator(x: Permutation, y: Permutation) -> Permutation:
    """Return x^-1 y^-1 x y."""
    return compose(compose(inverse(x), inverse(y)), compose(x, y))


def commutator_subgroup(A: Subgroup, B: Subgroup) -> Subgroup:
    """<[a, b] : a in A, b in B>, by scanning every pair."""
    G = A.parent
    e = G.identity
    gens = []
    span = {e._img}
    # raw image tuples in the hot loop; this scan is O(|A||B|)
    b_pairs = [(b._img, inverse(b)._img) for b in B.elements]
    for a in A.elements:
        a_img, ai_img = a._img, inverse(a)._img
        for b_img, bi_img in b_pairs:
            left = tuple(map(bi_img.__getitem__, ai_img))
            right = tuple(map(b_img.__getitem__, a_img))
            c = tuple(map(right.__getitem__, left))
            if c not in span:
                gens.append(Permutation._raw(c))
                span = {g._img for g in _closure(e, gens, G.order)}
    elements = _closure(e, gens, G.order) if gens else [e]
    return Subgroup(G, elements, gens or [e])


def lower_central_series(G: GroupTable) -> list:
    """G = gamma_1 >= gamma_2 >= ..., with gamma_{k+1} = [gamma_k, G], up to stabilization."""
    whole = G.whole()
    series = [whole]
    while True:
        nxt = commutator_subgroup(series[-1], whole)
        if nxt.order == series[-1].order:
            return series
        series.append(nxt)


def derived_series(G: GroupTable) -> list:
    series = [G.whole()]
    while True:
        cur = series[-1]
        nxt = commutator_subgroup(cur, cur)
        if nxt.order == cur.order:
            return series
        series.append(nxt)


def is_soluble(G: GroupTable) -> bool:
    return derived_series(G)[-1].is_trivial()


def is_abelian(G: GroupTable) -> bool:
    gens = G.generators
    return all(compose(a, b) == compose(b, a) for a in gens for b in gens)


# --- standard constructors ---------------------------------------------------


def _check_bounds(family: str, n: int) -> None:
    lo, hi = FAMILY_BOUNDS[family]
    if not isinstance(n, int) or not lo <= n <= hi:
        raise ValueError(f"{family} parameter must be an integer in {lo}..{hi}, got {n!r}")


def cyclic(n: int, max_elements: int = DEFAULT_MAX_ELEMENTS) -> GroupTable:
    _check_bounds("cyclic", n)
    gen = Permutation.from_cycles([list(range(1, n + 1))] if n > 1 else [], n)
    return close(n, [gen], max_elements, name=f"C{n}")


def dihedral(n: int, max_elements: int = DEFAULT_MAX_ELEMENTS) -> GroupTable:
    """Symmetries of the regular n-gon: order 2n on n points."""
    _check_bounds("dihedral", n)
    rotation = Permutation.from_cycles([list(range(1, n + 1))], n)
    reflection = Permutation.from_cycles([[i, n + 1 - i] for i in range(1, n // 2 + 1)], n)
    return close(n, [rotation, reflection], max_elements, name=f"D{n}")


def symmetric(n: int, max_elements: int = DEFAULT_MAX_ELEMENTS) -> GroupTable:
    _check_bounds("symmetric", n)
    if n == 1:
        gens = [Permutation.identity(1)]
    else:
        gens = [Permutation.from_cycles([[1, 2]], n), Permutation.from_cycles([list(range(1, n + 1))], n)]
    return close(n, gens, max_elements, name=f"S{n}")


def alternating(n: int, max_elements: int = DEFAULT_MAX_ELEMENTS) -> GroupTable:
    """Even permutations of 1..n, generated by the 3-cycles (1,2,k)."""
    _check_bounds("alternating", n)
    gens = [Permutation.from_cycles([[1, 2, k]], n) for k in range(3, n + 1)]
    return close(n, gens or [Permutation.identity(n)], max_elements, name=f"A{n}")


# rows/columns: 1, -1, i, -i, j, -j, k, -k
_Q8_LABELS = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")
_Q8_TABLE = (
    (0, 1, 2, 3, 4, 5, 6, 7),
    (1, 0, 3, 2, 5, 4, 7, 6),
    (2, 3, 1, 0, 6, 7, 5, 4),
    (3, 2, 0, 1, 7, 6, 4, 5),
    (4, 5, 7, 6, 1, 0, 2, 3),
    (5, 4, 6, 7, 0, 1, 3, 2),
    (6, 7, 4, 5, 3, 2, 1, 0),
    (7, 6, 5, 4, 2, 3, 0, 1),
)


def _check_group_table(table) -> None:
    n = len(table)
    rng = range(n)
    if any(sorted(row) != list(rng) for row in table):
        raise InvariantError("table rows are not permutations")
    if any(table[0][x] != x or table[x][0] != x for x in rng):
        raise InvariantError("element 0 is not the identity")
    for a in rng:
        if not any(table[a][b] == 0 for b in rng):
            raise InvariantError(f"element {a} has no inverse")
        for b in rng:
            for c in rng:
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    raise InvariantError("table is not associative")


def quaternion8(max_elements: int = DEFAULT_MAX_ELEMENTS) -> GroupTable:
    """Q8 in its right regular representation on 8 points."""
    _check_group_table(_Q8_TABLE)
    # right multiplication x -> x*g, so that left-to-right composition is a homomorphism
    right = lambda g: Permutation([_Q8_TABLE[x][g] + 1 for x in range(8)])
    return close(8, [right(2), right(4)], max_elements, name="Q8")


def direct_product(G: GroupTable, H: GroupTable, max_elements: int = DEFAULT_MAX_ELEMENTS) -> GroupTable:
    """G x H acting on disjoint points: G on 1..deg G, H on the following deg H points."""
    m, n = G.degree, H.degree
    left = [Permutation(list(g.images) + list(range(m + 1, m + n + 1))) for g in G.generators]
    right = [Permutation(list(range(1, m + 1)) + [v + m for v in h.images]) for h in H.generators]
    name = f"{G.name}x{H.name}" if G.name and H.name else None
    return close(m + n, left + right, max_elements, name=name)
