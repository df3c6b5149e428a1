"""Groves: sets of equal-degree trees, added and multiplied like integers.

``a ∔ b`` collects the supports of ``v ★ w`` over all members; it splits as
the disjoint union ``(a ⊣ b) ∪ (a ⊢ b) ∪ (a ⊥ b)`` of the set-valued
versions of ``≺``, ``≻`` and ``•``.  Corollas behave like the integers:
``Corl_p ⊥ Corl_q = Corl_{p+q}`` and ``Corl_p ⋉ Corl_q = Corl_{pq}``.

>>> str(dend_add(parse_grove("(oo)"), parse_grove("(oo)")))
'((oo)o) ∪ (ooo) ∪ (o(oo))'
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Mapping

from .errors import (
    DegreeMismatchError,
    DomainError,
    GroveCollisionError,
    LiteralSyntaxError,
)
from .names import UNIT, Coordinate, Name, OPEN, CLOSE, decode_name, encode_name, involute_name, parse_name
from .trees import corolla, enumerate_trees, parse_tree
from .trialgebra import AXIOMS, Op, eval_universal, op_names, order_interval, star_names, universal_expression

__all__ = [
    "Grove",
    "EMPTY",
    "UNIT_GROVE",
    "grove",
    "dend_add",
    "grove_op",
    "GROVE_OPS",
    "total_grove",
    "decompose_pair",
    "sandwich_pairs",
    "star_pairs",
    "dend_mul",
    "corolla_grove",
    "grove_axiom_failures",
    "involute_grove",
    "parse_member",
    "parse_grove",
    "grove_to_json",
    "grove_from_json",
]


@dataclass(frozen=True)
class Grove:
    """A set of names of one degree; the empty grove has degree ``None``."""

    members: frozenset[Name] = frozenset()

    def __post_init__(self):
        degrees = {v.degree for v in self.members}
        if len(degrees) > 1:
            raise DegreeMismatchError(f"grove members have degrees {sorted(degrees)}")

    @property
    def degree(self) -> int | None:
        return next(iter(self.members)).degree if self.members else None

    @property
    def is_empty(self) -> bool:
        return not self.members

    @property
    def is_unit(self) -> bool:
        return self.members == frozenset({UNIT})

    def sorted(self) -> list[Name]:
        return sorted(self.members)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.sorted())

    def __contains__(self, v):
        return v in self.members

    def format(self, ascii_only: bool = False) -> str:
        if not self.members:
            return "empty" if ascii_only else "∅"
        sep = " u " if ascii_only else " ∪ "
        return sep.join(str(decode_name(v)) for v in self.sorted())

    def __str__(self):
        return self.format()


EMPTY = Grove()
UNIT_GROVE = Grove(frozenset({UNIT}))


def grove(members: Iterable) -> Grove:
    """Build a grove from names or trees."""
    out = set()
    for m in members:
        out.add(m if isinstance(m, Name) else encode_name(m))
    return Grove(frozenset(out))


def _collect(pieces: Iterable[tuple[Name, ...]], what: str) -> Grove:
    out: set[Name] = set()
    for piece in pieces:
        for u in piece:
            if u in out:
                raise GroveCollisionError(f"{decode_name(u)} appears twice in {what}")
            out.add(u)
    return Grove(frozenset(out))


def dend_add(a: Grove, b: Grove) -> Grove:
    """``a ∔ b``; raises :class:`GroveCollisionError` if a tree would repeat."""
    if a.is_empty or b.is_empty:
        return EMPTY
    return _collect((star_names(v, w) for v in a.members for w in b.members), "a ∔ b")


def grove_op(kind: Op | str, a: Grove, b: Grove) -> Grove:
    """``a ⊣ b`` (``Op.PREC``), ``a ⊢ b`` (``Op.SUCC``) or ``a ⊥ b`` (``Op.BULLET``)."""
    kind = kind if isinstance(kind, Op) else Op.parse(kind)
    if a.is_empty or b.is_empty:
        return EMPTY
    return _collect((op_names(kind, v, w) for v in a.members for w in b.members), f"a {kind.symbol} b")


GROVE_OPS: dict[Op, Callable] = {k: (lambda x, y, k=k: grove_op(k, x, y)) for k in Op}


def grove_axiom_failures(x: Grove, y: Grove, z: Grove) -> list[str]:
    bad = []
    for name, law in AXIOMS.items():
        lhs, rhs = law(GROVE_OPS, dend_add, x, y, z)
        if lhs != rhs:
            bad.append(name)
    return bad


@lru_cache(maxsize=None)
def total_grove(n: int) -> Grove:
    """Every tree of degree ``n``; ``total_grove(0)`` is ``{(0)}``."""
    return grove(enumerate_trees(n))


def corolla_grove(p: int) -> Grove:
    return grove([corolla(p)])


def involute_grove(a: Grove) -> Grove:
    return Grove(frozenset(involute_name(v) for v in a.members))


# --------------------------------------------------------------------------
# sandwich decomposition


def _shift_back(c: Coordinate, n: int) -> Coordinate:
    if c.kind == CLOSE:
        return Coordinate.close(sorted({e - n if e > n else 1 for e in c.exps}))
    return Coordinate(c.kind, c.pos - n)


def decompose_pair(w: Name, n: int, m: int) -> tuple[Name, Name]:
    """The pair ``(u, v)`` of degrees ``(n, m)`` whose product contains ``w``.

    ``u`` keeps the first ``n`` coordinates of ``w`` and closes, on its last
    leaf, every parenthesis opened among them that ``w`` closes later.
    ``v`` starts with ``1`` and takes the remaining coordinates shifted left
    by ``n``; exponents pointing into ``u`` become ``1``.
    """
    if n < 1 or m < 1:
        raise DomainError("both parts of a split need degree >= 1")
    if w.degree != n + m:
        raise DegreeMismatchError(f"{w} has degree {w.degree}, not {n} + {m}")
    coords = w.coords
    early: dict[int, int] = {}
    total: dict[int, int] = {}
    for pos, c in enumerate(coords, start=1):
        if c.kind != CLOSE:
            continue
        for e in c.exps:
            if e <= n:
                total[e] = total.get(e, 0) + 1
                if pos <= n:
                    early[e] = early.get(e, 0) + 1
    still_open = {e for e, k in total.items() if k > early.get(e, 0)} | {1}
    u = Name(coords[:n] + (Coordinate.close(sorted(still_open)),))
    v = Name((Coordinate(OPEN, 1),) + tuple(_shift_back(c, n) for c in coords[n + 1:]))
    return u, v


def sandwich_pairs(w: Name, n: int, m: int) -> list[tuple[Name, Name]]:
    """Brute force: every ``(u, v)`` with ``over(u, v) <= w <= under(u, v)``."""
    return [(u, v) for u in total_grove(n).sorted() for v in total_grove(m).sorted()
            if w in order_interval(u, v)]


def star_pairs(w: Name, n: int, m: int) -> list[tuple[Name, Name]]:
    """Brute force: every ``(u, v)`` with ``w`` in the support of ``u ★ v``."""
    return [(u, v) for u in total_grove(n).sorted() for v in total_grove(m).sorted()
            if w in star_names(u, v)]


# --------------------------------------------------------------------------
# multiplication


def dend_mul(a: Grove, b: Grove) -> Grove:
    """``a ⋉ b``: each member's universal expression evaluated on ``b``.

    ``{(0)}`` absorbs on either side, the empty grove absorbs everything,
    and ``{(oo)}`` is a two-sided unit.
    """
    if a.is_empty or b.is_empty:
        return EMPTY
    if a.is_unit or b.is_unit:
        return UNIT_GROVE
    out: set[Name] = set()
    for v in a.members:
        out |= eval_universal(universal_expression(v), GROVE_OPS, b).members
    return Grove(frozenset(out))


# --------------------------------------------------------------------------
# text and JSON


_NAME_START = re.compile(r"\s*\(\s*\d")


def parse_member(text: str) -> Name:
    """A tree literal such as ``(o(oo))`` or a name literal such as ``(1,2,1+h^-1+h^-2)``."""
    text = text.strip()
    if text in ("o", "(0)"):
        return UNIT
    if _NAME_START.match(text):
        return parse_name(text)
    return encode_name(parse_tree(text))


def parse_grove(text: str) -> Grove:
    """Members separated by ``∪``, ``u`` or ``,`` at top level; ``∅``/``empty`` is empty."""
    text = text.strip()
    if text in ("∅", "empty", "{}"):
        return EMPTY
    text = text.strip("{}")
    parts, depth, cur = [], 0, []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and (ch in "∪;" or (ch == "u" and text[i - 1:i] in (" ", "") )):
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
        i += 1
    parts.append("".join(cur))
    parts = [p for p in (p.strip() for p in parts)]
    if any(not p for p in parts):
        raise LiteralSyntaxError("empty grove member", text)
    return grove(parse_member(p) for p in parts)


def grove_to_json(a: Grove) -> dict:
    return {"degree": a.degree, "members": [str(v) for v in a.sorted()]}


def grove_from_json(obj: Mapping) -> Grove:
    g = Grove(frozenset(parse_name(s) for s in obj["members"]))
    if obj.get("degree") is not None and g.degree is not None and g.degree != obj["degree"]:
        raise DegreeMismatchError(f"declared degree {obj['degree']} but members have {g.degree}")
    return g
