"""The dendriform trialgebra on names.

``v ★ w`` is the sum of the three operations below.  Every term lies in
the order interval between ``over(v, w)`` (``v`` planted on the leftmost
leaf of ``w``) and ``under(v, w)`` (``w`` planted on the rightmost leaf of
``v``), and up to degree 3 the terms are exactly that interval; from
degree 4 on the interval can hold extra names, so :func:`order_interval`
is kept separate.  The operations differ in where ``v`` meets ``w``:

* ``v ≻ w``  merges ``v`` into the first child of ``w``;
* ``v ≺ w``  merges ``w`` into the last child of ``v``;
* ``v • w``  merges the last child of ``v`` with the first child of ``w``.

The leaf ``(0)`` is a partial unit: ``v ≺ (0) = v = (0) ≻ v`` while
``(0) ≺ v``, ``v ≻ (0)`` and anything ``•`` with ``(0)`` vanish.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Mapping

from .errors import GroveCollisionError, LiteralSyntaxError, UndefinedExpressionError
from .lattice import _bits, poset
from .linear import FormalSum, LinComb, bilinear
from .names import Name, decode_name, encode_name, graft_names, involute_name, over, under
from .trees import LEAF, Tree

__all__ = [
    "Op",
    "interval",
    "star_names",
    "order_interval",
    "star",
    "op_names",
    "tri_op",
    "children_names",
    "UniversalExpr",
    "GEN",
    "universal_expression",
    "parse_expression",
    "eval_universal",
    "TRIALGEBRA_OPS",
    "evaluate_at_generator",
    "AXIOMS",
    "axiom_failures",
    "GENERATOR",
    "involution_sum",
]

#: the single-vertex tree ``(oo)``, generator of everything
GENERATOR = encode_name(Tree((LEAF, LEAF)))


class Op(enum.Enum):
    PREC = "<"
    SUCC = ">"
    BULLET = "."

    @property
    def symbol(self) -> str:
        return {"<": "≺", ">": "≻", ".": "•"}[self.value]

    @classmethod
    def parse(cls, text: str) -> Op:
        aliases = {
            "<": cls.PREC, "prec": cls.PREC, "≺": cls.PREC, "left": cls.PREC, "⊣": cls.PREC,
            ">": cls.SUCC, "succ": cls.SUCC, "≻": cls.SUCC, "right": cls.SUCC, "⊢": cls.SUCC,
            ".": cls.BULLET, "bullet": cls.BULLET, "•": cls.BULLET, "mid": cls.BULLET, "⊥": cls.BULLET,
        }
        try:
            return aliases[text.strip().lower()]
        except KeyError:
            raise LiteralSyntaxError(f"unknown operation {text!r}", text) from None


# --------------------------------------------------------------------------
# intervals and the associative product


@lru_cache(maxsize=None)
def interval(lo: Name, hi: Name) -> tuple[Name, ...]:
    """All names ``u`` with ``lo <= u <= hi``, in canonical order."""
    if lo.is_unit or hi.is_unit:
        return (lo,) if lo == hi else ()
    P = poset(lo.degree)
    mask = P.up[P.index[lo]] & P.down[P.index[hi]]
    return tuple(P.elements[i] for i in _bits(mask))


def order_interval(v: Name, w: Name) -> tuple[Name, ...]:
    """Names between ``over(v, w)`` and ``under(v, w)``."""
    if v.is_unit:
        return (w,)
    if w.is_unit:
        return (v,)
    return interval(over(v, w), under(v, w))


@lru_cache(maxsize=None)
def star_names(v: Name, w: Name) -> tuple[Name, ...]:
    """Support of ``v ★ w`` in canonical order; all coefficients are one."""
    if v.is_unit:
        return (w,)
    if w.is_unit:
        return (v,)
    terms = [u for kind in Op for u in op_names(kind, v, w)]
    if len(set(terms)) != len(terms):
        raise GroveCollisionError(f"{v} ★ {w} has a repeated term")
    return tuple(sorted(terms))


def star(x, y) -> FormalSum:
    """``x ★ y`` for names or formal sums."""
    return bilinear(_as_sum(x), _as_sum(y), lambda a, b: FormalSum.of(star_names(a, b)), FormalSum)


# --------------------------------------------------------------------------
# the three operations


@lru_cache(maxsize=None)
def children_names(v: Name) -> tuple[Name, ...]:
    """Names of the root's children; leaf children are ``(0)``."""
    return tuple(encode_name(c) for c in decode_name(v).children)


@lru_cache(maxsize=None)
def op_names(kind: Op, v: Name, w: Name) -> tuple[Name, ...]:
    """Support of ``v ∘ w`` as a tuple of distinct names (every coefficient is one)."""
    if v.is_unit and w.is_unit:
        raise UndefinedExpressionError(f"(0) {kind.symbol} (0) is undefined")
    if kind is Op.PREC:
        if v.is_unit:
            return ()
        if w.is_unit:
            return (v,)
        head = children_names(v)
        return tuple(graft_names(head[:-1] + (u,)) for u in star_names(head[-1], w))
    if kind is Op.SUCC:
        if w.is_unit:
            return ()
        if v.is_unit:
            return (w,)
        tail = children_names(w)
        return tuple(graft_names((u,) + tail[1:]) for u in star_names(v, tail[0]))
    if v.is_unit or w.is_unit:
        return ()
    head, tail = children_names(v), children_names(w)
    return tuple(graft_names(head[:-1] + (u,) + tail[1:]) for u in star_names(head[-1], tail[0]))


def _as_sum(x) -> LinComb:
    if isinstance(x, Name):
        return FormalSum.basis(x)
    if isinstance(x, Tree):
        return FormalSum.basis(encode_name(x))
    return x


def tri_op(kind: Op | str, x, y) -> FormalSum:
    """``x ≺ y``, ``x ≻ y`` or ``x • y``, extended bilinearly to formal sums."""
    kind = kind if isinstance(kind, Op) else Op.parse(kind)
    return bilinear(_as_sum(x), _as_sum(y), lambda a, b: FormalSum.of(op_names(kind, a, b)), FormalSum)


# --------------------------------------------------------------------------
# universal expressions


@dataclass(frozen=True)
class UniversalExpr:
    """``GEN`` (``op is None``) or a binary node ``left op right``."""

    op: Op | None = None
    left: UniversalExpr | None = None
    right: UniversalExpr | None = None

    @property
    def is_gen(self) -> bool:
        return self.op is None

    def generator_count(self) -> int:
        if self.is_gen:
            return 1
        return self.left.generator_count() + self.right.generator_count()

    def _text(self, top: bool, ascii_ops: bool) -> str:
        if self.is_gen:
            return "g"
        sym = self.op.value if ascii_ops else self.op.symbol
        body = f"{self.left._text(False, ascii_ops)} {sym} {self.right._text(False, ascii_ops)}"
        return body if top else f"({body})"

    def __str__(self):
        return self._text(True, True)

    def pretty(self) -> str:
        return self._text(True, False)


GEN = UniversalExpr()


def _node(op: Op, a: UniversalExpr, b: UniversalExpr) -> UniversalExpr:
    return UniversalExpr(op, a, b)


@lru_cache(maxsize=None)
def _omega(t: Tree) -> UniversalExpr:
    kids = t.children
    chain = None
    for child in kids[1:]:
        piece = GEN if child.is_leaf else _node(Op.PREC, GEN, _omega(child))
        chain = piece if chain is None else _node(Op.BULLET, chain, piece)
    if not kids[0].is_leaf:
        chain = _node(Op.SUCC, _omega(kids[0]), chain)
    return chain


def universal_expression(t: Tree | Name) -> UniversalExpr:
    """The expression in ``g = (oo)`` that evaluates to exactly ``t``.

    For ``t = t_1 v ... v t_m`` it is ``[ω(t_1) ≻] (p_1 • ... • p_{m-1})``
    with ``p_j = g ≺ ω(t_{j+1})`` for a non-leaf child and ``p_j = g``
    for a leaf; the ``≻`` part appears only if ``t_1`` is not a leaf.
    """
    if isinstance(t, Name):
        t = decode_name(t)
    if t.is_leaf:
        raise UndefinedExpressionError("the leaf has no universal expression")
    return _omega(t)


_TOKEN = re.compile(r"\s*(?:(g)|([<>.])|(\()|(\)))")


def parse_expression(text: str) -> UniversalExpr:
    """Inverse of ``str(expr)``; unparenthesised chains associate to the left."""
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise LiteralSyntaxError("unexpected character in expression", text, pos)
        tokens.append((m.group(m.lastindex), m.start(m.lastindex)))
        pos = m.end()
    i = 0

    def atom():
        nonlocal i
        if i >= len(tokens):
            raise LiteralSyntaxError("unexpected end of expression", text, len(text))
        tok, at = tokens[i]
        if tok == "g":
            i += 1
            return GEN
        if tok == "(":
            i += 1
            e = chain()
            if i >= len(tokens) or tokens[i][0] != ")":
                raise LiteralSyntaxError("missing ')'", text, at)
            i += 1
            return e
        raise LiteralSyntaxError(f"unexpected {tok!r}", text, at)

    def chain():
        nonlocal i
        e = atom()
        while i < len(tokens) and tokens[i][0] in "<>.":
            op = Op(tokens[i][0])
            i += 1
            e = _node(op, e, atom())
        return e

    result = chain()
    if i != len(tokens):
        raise LiteralSyntaxError("trailing tokens", text, tokens[i][1])
    return result


def eval_universal(e: UniversalExpr, ops: Mapping[Op, Callable], g):
    """Fold ``e`` with ``ops[op](left, right)``, substituting ``g`` for ``GEN``."""
    if e.is_gen:
        return g
    return ops[e.op](eval_universal(e.left, ops, g), eval_universal(e.right, ops, g))


TRIALGEBRA_OPS: dict[Op, Callable] = {k: (lambda x, y, k=k: tri_op(k, x, y)) for k in Op}


def evaluate_at_generator(e: UniversalExpr) -> FormalSum:
    return eval_universal(e, TRIALGEBRA_OPS, FormalSum.basis(GENERATOR))


# --------------------------------------------------------------------------
# axioms


#: name -> function (ops, star, x, y, z) -> (lhs, rhs); shared with groves
AXIOMS: dict[str, Callable] = {
    "(x<y)<z = x<(y*z)": lambda o, s, x, y, z: (o[Op.PREC](o[Op.PREC](x, y), z), o[Op.PREC](x, s(y, z))),
    "(x>y)<z = x>(y<z)": lambda o, s, x, y, z: (o[Op.PREC](o[Op.SUCC](x, y), z), o[Op.SUCC](x, o[Op.PREC](y, z))),
    "(x*y)>z = x>(y>z)": lambda o, s, x, y, z: (o[Op.SUCC](s(x, y), z), o[Op.SUCC](x, o[Op.SUCC](y, z))),
    "(x>y).z = x>(y.z)": lambda o, s, x, y, z: (o[Op.BULLET](o[Op.SUCC](x, y), z), o[Op.SUCC](x, o[Op.BULLET](y, z))),
    "(x<y).z = x.(y>z)": lambda o, s, x, y, z: (o[Op.BULLET](o[Op.PREC](x, y), z), o[Op.BULLET](x, o[Op.SUCC](y, z))),
    "(x.y)<z = x.(y<z)": lambda o, s, x, y, z: (o[Op.PREC](o[Op.BULLET](x, y), z), o[Op.BULLET](x, o[Op.PREC](y, z))),
    "(x.y).z = x.(y.z)": lambda o, s, x, y, z: (o[Op.BULLET](o[Op.BULLET](x, y), z), o[Op.BULLET](x, o[Op.BULLET](y, z))),
}


def axiom_failures(x, y, z, ops: Mapping[Op, Callable] = TRIALGEBRA_OPS, star_op: Callable = star) -> list[str]:
    """Names of the axioms that fail on ``(x, y, z)``."""
    bad = []
    for name, law in AXIOMS.items():
        lhs, rhs = law(ops, star_op, x, y, z)
        if lhs != rhs:
            bad.append(name)
    return bad


def involution_sum(x: LinComb) -> FormalSum:
    """Mirror every name in a formal sum."""
    return _as_sum(x).map_keys(involute_name)
