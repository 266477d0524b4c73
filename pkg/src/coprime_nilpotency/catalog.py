"""Group files (.grp), builtin group names and catalog specifications.

A ``.grp`` file looks like::

    # Sylow 2-subgroup of A5
    degree 5
    name P
    (1,2)(3,4)
    (1,3)(2,4)

A catalog spec lists one request per line::

    cyclic 1..32
    symmetric 4
    quaternion8
    product cyclic:2 alternating:4
    group A5
    file extra/psl27.grp
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from typing import List, Optional, Tuple, Union

from . import groups
from .errors import ParseError
from .groups import DEFAULT_MAX_ELEMENTS, GroupTable
from .perm import parse_cycles

FAMILIES = ("cyclic", "dihedral", "symmetric", "alternating")
_FAMILY_PREFIX = {"cyclic": "C", "dihedral": "D", "symmetric": "S", "alternating": "A"}
_PREFIX_FAMILY = {v: k for k, v in _FAMILY_PREFIX.items()}

DEFAULT_CATALOG = """\
cyclic 1..32
dihedral 3..16
symmetric 3..6
alternating 3..6
quaternion8
product cyclic:2 cyclic:2
product cyclic:2 cyclic:4
product cyclic:3 symmetric:3
product cyclic:2 alternating:4
product cyclic:6 cyclic:5
product dihedral:4 cyclic:3
"""


@dataclass
class GroupFile:
    degree: int
    generator_lines: List[Tuple[int, str]]
    name: Optional[str] = None

    def build(self, max_elements: int = DEFAULT_MAX_ELEMENTS) -> GroupTable:
        gens = []
        for lineno, line in self.generator_lines:
            try:
                gens.append(parse_cycles(line, self.degree))
            except ParseError as exc:
                col = line.find(exc.token) + 1 if exc.token else None
                raise ParseError(str(exc), token=exc.token, line=lineno, column=col or None) from None
        return groups.close(self.degree, gens, max_elements, name=self.name)


def read_group_file(text: str) -> GroupFile:
    degree = None
    name = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if degree is None:
            m = re.fullmatch(r"degree\s+(\d+)", line)
            if not m or int(m.group(1)) < 1:
                raise ParseError("expected 'degree <n>' with n >= 1", token=line, line=lineno, column=1)
            degree = int(m.group(1))
        elif line.startswith("name"):
            if gens:
                raise ParseError("'name' must come before the generators", token=line, line=lineno, column=1)
            parts = line.split(None, 1)
            if parts[0] != "name" or len(parts) < 2:
                raise ParseError("expected 'name <string>'", token=line, line=lineno, column=1)
            name = parts[1].strip()
        else:
            gens.append((lineno, raw))
    if degree is None:
        raise ParseError("missing 'degree <n>' line", line=1)
    if not gens:
        raise ParseError("no generator lines", line=lineno if text.strip() else 1)
    return GroupFile(degree, gens, name)


def parse_group_file(text: str, max_elements: int = DEFAULT_MAX_ELEMENTS) -> GroupTable:
    return read_group_file(text).build(max_elements)


def build_family(family: str, n: Optional[int] = None, max_elements: int = DEFAULT_MAX_ELEMENTS) -> GroupTable:
    if family == "quaternion8":
        if n not in (None, 8):
            raise ValueError("quaternion8 takes no parameter")
        return groups.quaternion8(max_elements)
    if family not in FAMILIES:
        raise ValueError(f"unknown group family {family!r}")
    if n is None:
        raise ValueError(f"family {family!r} needs a parameter")
    return getattr(groups, family)(n, max_elements)


_BUILTIN_FACTOR = re.compile(r"([CDSA])(\d+)|Q8")


def is_builtin_name(name: str) -> bool:
    return all(_BUILTIN_FACTOR.fullmatch(part) for part in name.split("x"))


def builtin_group(name: str, max_elements: int = DEFAULT_MAX_ELEMENTS) -> GroupTable:
    """Resolve names like ``A5``, ``C12``, ``D4`` (order 8), ``Q8`` or ``C2xA4``.

    ``Dn`` is the dihedral group of order 2n acting on n points.
    """
    factors = []
    for part in name.split("x"):
        m = _BUILTIN_FACTOR.fullmatch(part)
        if not m:
            raise ValueError(f"unknown builtin group {name!r}")
        if part == "Q8":
            factors.append(groups.quaternion8(max_elements))
        else:
            factors.append(build_family(_PREFIX_FAMILY[m.group(1)], int(m.group(2)), max_elements))
    G = factors[0]
    for H in factors[1:]:
        G = groups.direct_product(G, H, max_elements)
    G.name = name
    return G


def load_group(ref: str, max_elements: int = DEFAULT_MAX_ELEMENTS) -> GroupTable:
    """A path to a .grp file, or a builtin name when no such file exists."""
    if os.path.isfile(ref):
        with open(ref, encoding="utf-8") as fh:
            G = parse_group_file(fh.read(), max_elements)
        if G.name is None:
            G.name = os.path.splitext(os.path.basename(ref))[0]
        return G
    if is_builtin_name(ref):
        return builtin_group(ref, max_elements)
    raise FileNotFoundError(f"{ref!r} is neither a readable group file nor a builtin group name")


@dataclass
class FamilyRange:
    family: str
    lo: Optional[int] = None
    hi: Optional[int] = None


@dataclass
class ProductRequest:
    factors: List[FamilyRange]


@dataclass
class BuiltinRequest:
    name: str


@dataclass
class FileRequest:
    path: str


CatalogEntry = Union[FamilyRange, ProductRequest, BuiltinRequest, FileRequest]


@dataclass
class CatalogSpec:
    entries: List[CatalogEntry] = field(default_factory=list)


def _parse_factor(token: str, lineno: int) -> FamilyRange:
    if token == "quaternion8":
        return FamilyRange("quaternion8")
    family, sep, param = token.partition(":")
    if family not in FAMILIES or not sep or not param.isdigit():
        raise ParseError(f"bad product factor {token!r}, expected family:n", token=token, line=lineno)
    n = int(param)
    _check_family_bounds(family, n, n, lineno)
    return FamilyRange(family, n, n)


def _check_family_bounds(family: str, lo: int, hi: int, lineno: int) -> None:
    flo, fhi = groups.FAMILY_BOUNDS[family]
    if lo > hi or lo < flo or hi > fhi:
        raise ParseError(f"{family} range {lo}..{hi} outside bounds {flo}..{fhi}", token=f"{lo}..{hi}", line=lineno)


def parse_catalog_spec(text: str, base_dir: str = ".") -> CatalogSpec:
    entries: List[CatalogEntry] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        head = words[0]
        if head in FAMILIES:
            if len(words) != 2:
                raise ParseError(f"expected '{head} <n>' or '{head} <a>..<b>'", token=line, line=lineno)
            m = re.fullmatch(r"(\d+)(?:\.\.(\d+))?", words[1])
            if not m:
                raise ParseError(f"bad parameter range {words[1]!r}", token=words[1], line=lineno)
            lo = int(m.group(1))
            hi = int(m.group(2)) if m.group(2) else lo
            _check_family_bounds(head, lo, hi, lineno)
            entries.append(FamilyRange(head, lo, hi))
        elif head == "quaternion8" and len(words) == 1:
            entries.append(FamilyRange("quaternion8"))
        elif head == "product":
            if len(words) < 3:
                raise ParseError("a product needs at least two factors", token=line, line=lineno)
            entries.append(ProductRequest([_parse_factor(w, lineno) for w in words[1:]]))
        elif head == "group" and len(words) == 2:
            if not is_builtin_name(words[1]):
                raise ParseError(f"unknown builtin group {words[1]!r}", token=words[1], line=lineno)
            entries.append(BuiltinRequest(words[1]))
        elif head == "file" and len(words) == 2:
            entries.append(FileRequest(os.path.join(base_dir, words[1])))
        else:
            raise ParseError(f"unknown catalog entry {head!r}", token=head, line=lineno)
    return CatalogSpec(entries)


def default_catalog_spec() -> CatalogSpec:
    return parse_catalog_spec(DEFAULT_CATALOG)


def _family_name(f: FamilyRange, n: Optional[int]) -> str:
    return "Q8" if f.family == "quaternion8" else f"{_FAMILY_PREFIX[f.family]}{n}"


def expand_catalog(spec: CatalogSpec, max_elements: int = DEFAULT_MAX_ELEMENTS) -> List[Tuple[str, GroupTable]]:
    """Build every requested group, in spec order and then parameter order."""
    out = []
    for entry in spec.entries:
        if isinstance(entry, FamilyRange):
            params = [None] if entry.family == "quaternion8" else range(entry.lo, entry.hi + 1)
            for n in params:
                G = build_family(entry.family, n, max_elements)
                out.append((_family_name(entry, n), G))
        elif isinstance(entry, ProductRequest):
            parts = [build_family(f.family, f.lo, max_elements) for f in entry.factors]
            G = parts[0]
            for H in parts[1:]:
                G = groups.direct_product(G, H, max_elements)
            G.name = "x".join(_family_name(f, f.lo) for f in entry.factors)
            out.append((G.name, G))
        elif isinstance(entry, BuiltinRequest):
            out.append((entry.name, builtin_group(entry.name, max_elements)))
        elif isinstance(entry, FileRequest):
            G = load_group(entry.path, max_elements)
            out.append((G.name, G))
        else:
            raise TypeError(f"unknown catalog entry {entry!r}")
    return out


def load_catalog(ref: str, max_elements: int = DEFAULT_MAX_ELEMENTS) -> List[Tuple[str, GroupTable]]:
    """``default`` or a path to a catalog spec file."""
    if ref == "default" and not os.path.isfile(ref):
        return expand_catalog(default_catalog_spec(), max_elements)
    with open(ref, encoding="utf-8") as fh:
        spec = parse_catalog_spec(fh.read(), base_dir=os.path.dirname(os.path.abspath(ref)))
    return expand_catalog(spec, max_elements)
