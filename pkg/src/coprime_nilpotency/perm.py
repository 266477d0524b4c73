"""Permutations of {1, ..., n} and their cycle notation.

Products are read left to right: ``compose(p, q)`` (also ``p * q``) applies
``p`` first and then ``q``. Points are 1-based everywhere in the public
surface; internally images are stored 0-based for cheap composition.
"""

from __future__ import annotations

import math
from functools import total_ordering
from typing import Iterable, Sequence

from .errors import DegreeMismatchError, ParseError


@total_ordering
class Permutation:
    """An immutable bijection of {1, ..., degree}.

    >>> p = Permutation([2, 1, 3])
    >>> p.images
    (2, 1, 3)
    >>> str(p)
    '(1,2)'
    """

    __slots__ = ("_img", "_hash")

    def __init__(self, images: Iterable[int]):
        img = tuple(int(v) - 1 for v in images)
        n = len(img)
        if n == 0:
            raise ValueError("degree must be positive")
        if sorted(img) != list(range(n)):
            raise ValueError(f"images {tuple(v + 1 for v in img)} are not a permutation of 1..{n}")
        self._img = img
        self._hash = hash(img)

    @classmethod
    def _raw(cls, img: tuple) -> "Permutation":
        # trusted 0-based constructor; skips validation
        p = cls.__new__(cls)
        p._img = img
        p._hash = hash(img)
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 1:
            raise ValueError("degree must be positive")
        return cls._raw(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        """Build a permutation from disjoint cycles of 1-based points."""
        img = list(range(degree))
        seen = set()
        for cycle in cycles:
            for a in cycle:
                if not 1 <= a <= degree:
                    raise ValueError(f"point {a} out of range 1..{degree}")
                if a in seen:
                    raise ValueError(f"point {a} repeated")
                seen.add(a)
            for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
                img[a - 1] = b - 1
        return cls._raw(tuple(img))

    @property
    def degree(self) -> int:
        return len(self._img)

    @property
    def images(self) -> tuple:
        """1-based images: ``images[i - 1]`` is the image of point ``i``."""
        return tuple(v + 1 for v in self._img)

    def __call__(self, point: int) -> int:
        return self._img[point - 1] + 1

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self._img))

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __pow__(self, k: int) -> "Permutation":
        return power(self, k)

    def inverse(self) -> "Permutation":
        return inverse(self)

    def order(self) -> int:
        return element_order(self)

    def cycles(self) -> list:
        return cycle_decomposition(self)

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._img == other._img

    def __lt__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return (len(self._img), self._img) < (len(other._img), other._img)

    def __hash__(self):
        return self._hash

    def __str__(self):
        return format_cycles(self)

    def __repr__(self):
        return f"Permutation.parse({format_cycles(self)!r}, {self.degree})"

    @staticmethod
    def parse(text: str, degree: int) -> "Permutation":
        return parse_cycles(text, degree)

    def __reduce__(self):
        return (Permutation, (self.images,))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply ``p`` first, then ``q``."""
    if len(p._img) != len(q._img):
        raise DegreeMismatchError(f"cannot compose degree {p.degree} with degree {q.degree}")
    return Permutation._raw(tuple(map(q._img.__getitem__, p._img)))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p._img)
    for i, v in enumerate(p._img):
        inv[v] = i
    return Permutation._raw(tuple(inv))


def _cycles0(img: tuple) -> list:
    seen = [False] * len(img)
    out = []
    for start in range(len(img)):
        if seen[start] or img[start] == start:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = img[i]
        out.append(cyc)
    return out


def cycle_decomposition(p: Permutation) -> list:
    """Non-trivial cycles, each starting at its smallest point, sorted by that point."""
    # scanning starts in increasing order, so both conventions hold by construction
    return [[i + 1 for i in c] for c in _cycles0(p._img)]


def element_order(p: Permutation) -> int:
    return math.lcm(*(len(c) for c in _cycles0(p._img)))


def power(p: Permutation, k: int) -> Permutation:
    img = list(range(len(p._img)))
    for cyc in _cycles0(p._img):
        n = len(cyc)
        for pos, a in enumerate(cyc):
            img[a] = cyc[(pos + k) % n]
    return Permutation._raw(tuple(img))


def format_cycles(p: Permutation) -> str:
    cycles = cycle_decomposition(p)
    if not cycles:
        return "()"
    return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse cycle notation such as ``"(1,2)(3,4)"`` into a permutation of the given degree.

    Grammar: ``"()"`` or one or more cycles ``(a,b,...)`` of at least two
    points. Whitespace may separate cycles but may not appear inside one.
    Raises :class:`ParseError` naming the offending token.
    """
    if degree < 1:
        raise ParseError(f"degree must be positive, got {degree}")
    s = text.strip()
    if s == "()":
        return Permutation.identity(degree)
    if not s:
        raise ParseError("empty cycle expression", token="")

    cycles = []
    seen = {}
    i, n = 0, len(s)
    while i < n:
        if s[i].isspace():
            i += 1
            continue
        if s[i] != "(":
            raise ParseError(f"expected '(' at position {i}, found {s[i]!r}", token=s[i])
        close = s.find(")", i)
        if close < 0:
            raise ParseError(f"unterminated cycle starting at position {i}", token=s[i:])
        body = s[i + 1:close]
        tokens = body.split(",")
        if len(tokens) < 2:
            raise ParseError(f"cycle {s[i:close + 1]!r} needs at least two points", token=s[i:close + 1])
        cyc = []
        for tok in tokens:
            if not tok.isdigit() or not tok.isascii():
                raise ParseError(f"invalid point {tok!r}", token=tok)
            a = int(tok)
            if not 1 <= a <= degree:
                raise ParseError(f"point {a} out of range 1..{degree}", token=tok)
            if a in seen:
                raise ParseError(f"repeated point {a}", token=tok)
            seen[a] = True
            cyc.append(a)
        cycles.append(cyc)
        i = close + 1
    return Permutation.from_cycles(cycles, degree)
