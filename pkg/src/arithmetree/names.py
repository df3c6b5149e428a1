"""Vector names of planar trees.

A tree of degree ``n`` is written as a complete parenthesised word on
``x_1 ... x_{n+1}`` (every internal vertex, the root included, contributes
one pair of parentheses around its children).  Its *name* records, for
each variable ``x_i``, a polynomial in ``h^-1``:

* ``i`` when at least one parenthesis opens just before ``x_i`` (OPEN),
* ``(i-1) + i h^-1`` when no parenthesis touches ``x_i`` (BARE),
* ``p_1 + h^-p_1 + ... + h^-p_k`` when parentheses opened at
  ``x_{p_1} < ... < x_{p_k}`` close just after ``x_i`` (CLOSE).

Coordinates are compared lexicographically on their coefficient sequences
(constant term first) and names coordinatewise.  The leaf is named ``(0)``.

The closed-form grafting, over/under grafting and mirror formulas are
implemented directly on coordinates; ``*_oracle`` companions go through the
tree structure instead and are what the tests compare against.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import (
    ArityError,
    DegreeMismatchError,
    DomainError,
    InvalidNameError,
    LiteralSyntaxError,
)
from .trees import LEAF, Tree, graft, graft_on_leaf, involution

__all__ = [
    "Coordinate",
    "Name",
    "UNIT",
    "encode_name",
    "decode_name",
    "is_valid_name",
    "compare",
    "leq_name",
    "lt_name",
    "shift",
    "graft_names",
    "over",
    "under",
    "involute_name",
    "project_binary",
    "parse_name",
    "format_name",
    "coordinate_to_json",
    "coordinate_from_json",
]

OPEN, BARE, CLOSE = "open", "bare", "close"
BOX, TRI = "box", "tri"


@dataclass(frozen=True)
class Coordinate:
    kind: str
    pos: int = 0
    exps: tuple[int, ...] = ()

    @classmethod
    def open(cls, j: int) -> Coordinate:
        if j < 1:
            raise DomainError(f"OPEN position must be >= 1, got {j}")
        return cls(OPEN, j)

    @classmethod
    def bare(cls, j: int) -> Coordinate:
        if j < 2:
            raise DomainError(f"BARE position must be >= 2, got {j}")
        return cls(BARE, j)

    @classmethod
    def close(cls, exps: Iterable[int]) -> Coordinate:
        exps = tuple(exps)
        if not exps:
            raise DomainError("CLOSE needs at least one exponent")
        if exps[0] < 1 or any(a >= b for a, b in zip(exps, exps[1:])):
            raise DomainError(f"CLOSE exponents must be positive and strictly ascending: {exps}")
        return cls(CLOSE, exps[0], exps)

    @property
    def coefficients(self) -> tuple[int, ...]:
        """Constant term, then the coefficients of h^-1, h^-2, ..."""
        if self.kind == OPEN:
            return (self.pos,)
        if self.kind == BARE:
            return (self.pos - 1, self.pos)
        coeffs = [0] * (self.exps[-1] + 1)
        coeffs[0] = self.exps[0]
        for e in self.exps:
            coeffs[e] += 1
        return tuple(coeffs)

    def __str__(self):
        if self.kind == OPEN:
            return str(self.pos)
        if self.kind == BARE:
            return f"{self.pos - 1}+{self.pos}h^-1"
        return str(self.exps[0]) + "".join(f"+h^-{e}" for e in self.exps)

    def __repr__(self):
        return f"Coordinate({str(self)!r})"


def _key(c: Coordinate) -> tuple[int, ...]:
    # No coordinate has trailing zero coefficients and all are non-negative,
    # so plain tuple order coincides with the zero-padded order.
    return c.coefficients


def compare(a: Coordinate, b: Coordinate) -> int:
    """-1, 0 or 1 as ``a`` is below, equal to or above ``b``."""
    ka, kb = _key(a), _key(b)
    return (ka > kb) - (ka < kb)


@dataclass(frozen=True)
class Name:
    coords: tuple[Coordinate, ...] = ()

    @property
    def is_unit(self) -> bool:
        return not self.coords

    @property
    def degree(self) -> int:
        return max(len(self.coords) - 1, 0)

    @property
    def length(self) -> int:
        """Number of leaves of the named tree."""
        return max(len(self.coords), 1)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __str__(self):
        return format_name(self)

    def __repr__(self):
        return f"Name({format_name(self)!r})"

    def __lt__(self, other):
        # lexicographic on coordinates: a linear extension of the lattice order
        if not isinstance(other, Name):
            return NotImplemented
        return self.sort_key < other.sort_key

    @property
    def sort_key(self) -> tuple:
        return tuple(_key(c) for c in self.coords)

    @property
    def last_close(self) -> tuple[int, ...]:
        return self.coords[-1].exps if self.coords else ()


#: the name ``(0)`` of the leaf
UNIT = Name()


# --------------------------------------------------------------------------
# encoding and decoding


@lru_cache(maxsize=None)
def encode_name(t: Tree) -> Name:
    if t.is_leaf:
        return UNIT
    n_leaves = t.leaf_count
    opens = [False] * (n_leaves + 1)
    closers: list[list[int]] = [[] for _ in range(n_leaves + 1)]
    for first, last in t.spans():
        opens[first] = True
        closers[last].append(first)
    coords = []
    for i in range(1, n_leaves + 1):
        if opens[i]:
            coords.append(Coordinate(OPEN, i))
        elif closers[i]:
            coords.append(Coordinate.close(sorted(closers[i])))
        else:
            coords.append(Coordinate(BARE, i))
    return Name(tuple(coords))


def _word(v: Name) -> list:
    """Parenthesised word as tokens: '(' , ')' and leaf positions."""
    mult = [0] * (len(v) + 1)
    for c in v.coords:
        if c.kind == CLOSE:
            for e in c.exps:
                if e > len(v):
                    raise InvalidNameError(f"exponent {e} beyond name length in {v}")
                mult[e] += 1
    tokens = []
    for i, c in enumerate(v.coords, start=1):
        tokens.extend("(" * mult[i])
        tokens.append(i)
        if c.kind == CLOSE:
            tokens.extend(")" * len(c.exps))
    return tokens


@lru_cache(maxsize=None)
def decode_name(v: Name) -> Tree:
    """Rebuild the tree named by ``v``; raise :class:`InvalidNameError` otherwise."""
    if v.is_unit:
        return LEAF
    if len(v) < 2:
        raise InvalidNameError(f"{v} is too short to name a tree")
    tokens = _word(v)
    stack: list[list[Tree]] = []
    result = None
    for k, tok in enumerate(tokens):
        if tok == "(":
            stack.append([])
        elif tok == ")":
            if not stack:
                raise InvalidNameError(f"unbalanced parentheses in {v}")
            kids = stack.pop()
            if len(kids) < 2:
                raise InvalidNameError(f"{v} would need a unary vertex")
            node = Tree(tuple(kids))
            if stack:
                stack[-1].append(node)
            elif k == len(tokens) - 1:
                result = node
            else:
                raise InvalidNameError(f"{v} is not a single complete expression")
        else:
            if not stack:
                raise InvalidNameError(f"variable x_{tok} lies outside every parenthesis in {v}")
            stack[-1].append(LEAF)
    if result is None or stack:
        raise InvalidNameError(f"unbalanced parentheses in {v}")
    if encode_name(result) != v:
        raise InvalidNameError(f"{v} is not an exact name (nearest tree is {result})")
    return result


def is_valid_name(v: Name) -> bool:
    try:
        decode_name(v)
    except InvalidNameError:
        return False
    return True


# --------------------------------------------------------------------------
# the trivial order


def _check_same_length(v: Name, w: Name):
    if len(v) != len(w):
        raise DegreeMismatchError(f"cannot compare {v} (degree {v.degree}) with {w} (degree {w.degree})")


def leq_name(v: Name, w: Name) -> bool:
    _check_same_length(v, w)
    return all(_key(a) <= _key(b) for a, b in zip(v.coords, w.coords))


def lt_name(v: Name, w: Name) -> bool:
    return v != w and leq_name(v, w)


# --------------------------------------------------------------------------
# shifts and grafting on names


def shift(k: int, c: Coordinate, mode: str = BOX) -> Coordinate:
    """Translate a coordinate ``k`` positions to the right.

    In ``TRI`` mode a CLOSE starting at 1 keeps its leading ``1 + h^-1``.
    """
    if k < 0:
        raise DomainError("shift amount must be non-negative")
    if c.kind != CLOSE:
        return Coordinate(c.kind, c.pos + k)
    if mode == TRI and c.exps[0] == 1:
        return Coordinate.close((1,) + tuple(e + k for e in c.exps[1:]))
    return Coordinate.close(e + k for e in c.exps)


def graft_names(parts: Sequence[Name]) -> Name:
    """Name of the grafting of the trees named by ``parts``."""
    parts = list(parts)
    if len(parts) < 2:
        raise ArityError(f"graft needs at least two names, got {len(parts)}")
    coords: list[Coordinate] = []
    offset = 0
    last = len(parts) - 1
    for idx, part in enumerate(parts):
        if part.is_unit:
            if idx == 0:
                coords.append(Coordinate(OPEN, 1))
            elif idx == last:
                coords.append(Coordinate.close((1,)))
            else:
                coords.append(Coordinate(BARE, offset + 1))
            offset += 1
            continue
        body = part.coords if idx < last else part.coords[:-1]
        coords.extend(shift(offset, c) for c in body)
        if idx == last:
            # the root closes together with the last part's own parentheses
            merged = {1} | {e + offset for e in part.last_close}
            coords.append(Coordinate.close(sorted(merged)))
        offset += len(part)
    return Name(tuple(coords))


def graft_names_oracle(parts: Sequence[Name]) -> Name:
    return encode_name(graft(*(decode_name(p) for p in parts)))


def over(v: Name, w: Name) -> Name:
    """Name of the tree of ``v`` planted on the leftmost leaf of ``w``."""
    if v.is_unit:
        return w
    if w.is_unit:
        return v
    k = len(v) - 1
    return Name(v.coords + tuple(shift(k, c, TRI) for c in w.coords[1:]))


def under(v: Name, w: Name) -> Name:
    """Name of the tree of ``w`` planted on the rightmost leaf of ``v``."""
    if v.is_unit:
        return w
    if w.is_unit:
        return v
    k = len(v) - 1
    head = v.coords[:-1] + tuple(shift(k, c) for c in w.coords[:-1])
    merged = set(v.last_close) | {e + k for e in w.last_close}
    return Name(head + (Coordinate.close(sorted(merged)),))


def over_oracle(v: Name, w: Name) -> Name:
    return encode_name(graft_on_leaf(decode_name(v), 1, decode_name(w)))


def under_oracle(v: Name, w: Name) -> Name:
    tv = decode_name(v)
    return encode_name(graft_on_leaf(decode_name(w), tv.leaf_count, tv))


def involute_name(v: Name) -> Name:
    """Name of the mirror tree, computed coordinatewise."""
    if v.is_unit:
        return v
    n = len(v)
    closed_at: dict[int, list[int]] = {}
    for j, c in enumerate(v.coords, start=1):
        if c.kind == CLOSE:
            for e in c.exps:
                closed_at.setdefault(e, []).append(j)
    out: list[Coordinate] = [None] * n  # type: ignore[list-item]
    for i, c in enumerate(v.coords, start=1):
        mirror = n + 1 - i
        if c.kind == OPEN:
            out[mirror - 1] = Coordinate.close(sorted(n + 1 - j for j in closed_at.get(i, ())))
        elif c.kind == BARE:
            out[mirror - 1] = Coordinate(BARE, mirror)
        else:
            out[mirror - 1] = Coordinate(OPEN, mirror)
    return Name(tuple(out))


def involute_name_oracle(v: Name) -> Name:
    return encode_name(involution(decode_name(v)))


def project_binary(v: Name) -> tuple[int, ...]:
    """Drop the ``h^-1`` part of each coordinate (BARE ``i`` goes to ``i``) and the last entry."""
    if v.is_unit:
        raise DomainError("the unit has no binary projection")
    return tuple(c.pos for c in v.coords[:-1])


# --------------------------------------------------------------------------
# literals and JSON

_COORD_RE = re.compile(
    r"(?P<c>\d+)(?:(?P<bare>\+(?P<k>\d+)h\^-1)|(?P<close>(?:\+h\^-\d+)+))?"
)


def _parse_coordinate(token: str, text: str, position: int) -> Coordinate:
    m = _COORD_RE.fullmatch(token)
    if m is None:
        raise LiteralSyntaxError(f"malformed coordinate {token!r}", text, position)
    const = int(m["c"])
    try:
        if m["bare"]:
            k = int(m["k"])
            if k != const + 1:
                raise DomainError(f"BARE coordinate {token!r} needs h^-1 coefficient {const + 1}")
            return Coordinate.bare(k)
        if m["close"]:
            exps = tuple(int(e) for e in re.findall(r"\d+", m["close"]))
            if exps[0] != const:
                raise DomainError(f"CLOSE coordinate {token!r}: constant must equal first exponent")
            return Coordinate.close(exps)
        return Coordinate.open(const)
    except LiteralSyntaxError:
        raise
    except DomainError as exc:
        raise InvalidNameError(f"{exc} at position {position} in {text!r}") from None


def parse_name(text: str, validate: bool = True) -> Name:
    """Parse ``(c1,c2,...)``; with ``validate`` the result must name a tree."""
    s = "".join(text.split())
    if not (s.startswith("(") and s.endswith(")")) or len(s) < 3:
        raise LiteralSyntaxError("a name literal is a parenthesised, comma separated list", text, 0)
    if s == "(0)":
        return UNIT
    coords = []
    position = 1
    for token in s[1:-1].split(","):
        coords.append(_parse_coordinate(token, s, position))
        position += len(token) + 1
    v = Name(tuple(coords))
    if validate:
        decode_name(v)
    return v


def format_name(v: Name) -> str:
    if v.is_unit:
        return "(0)"
    return "(" + ",".join(str(c) for c in v.coords) + ")"


def coordinate_to_json(c: Coordinate) -> dict:
    if c.kind == CLOSE:
        return {"kind": CLOSE, "exps": list(c.exps)}
    return {"kind": c.kind, "pos": c.pos}


def coordinate_from_json(obj: dict) -> Coordinate:
    kind = obj.get("kind")
    if kind == OPEN:
        return Coordinate.open(int(obj["pos"]))
    if kind == BARE:
        return Coordinate.bare(int(obj["pos"]))
    if kind == CLOSE:
        return Coordinate.close(int(e) for e in obj["exps"])
    raise DomainError(f"unknown coordinate kind {kind!r}")
