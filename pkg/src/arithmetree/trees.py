"""Planar rooted trees whose internal vertices have at least two children.

A tree is either the leaf ``LEAF`` or a vertex holding an ordered tuple of
two or more subtrees.  The degree of a tree is its number of leaves minus
one, so ``T_n`` is the set of trees of degree ``n``.

The canonical text form writes a leaf as ``o`` and a vertex as its
children wrapped in parentheses::

    >>> parse_tree("(o(oo))")
    Tree('(o(oo))')
    >>> str(graft(LEAF, LEAF, corolla(1)))
    '(oo(oo))'
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from typing import Iterator

from .errors import ArityError, DomainError, EnumerationLimitError, LiteralSyntaxError

__all__ = [
    "Tree",
    "LEAF",
    "graft",
    "corolla",
    "involution",
    "graft_on_leaf",
    "enumerate_trees",
    "super_catalan",
    "recurrence_check",
    "invariant_count",
    "parse_tree",
    "format_tree",
    "ENUMERATION_CAP",
]

#: Largest degree :func:`enumerate_trees` accepts unless told otherwise.
ENUMERATION_CAP = 10


@dataclass(frozen=True, eq=True)
class Tree:
    children: tuple[Tree, ...] = ()

    def __post_init__(self):
        if len(self.children) == 1:
            raise ArityError("a vertex needs at least two children")

    @property
    def is_leaf(self) -> bool:
        return not self.children

    @cached_property
    def leaf_count(self) -> int:
        if not self.children:
            return 1
        return sum(c.leaf_count for c in self.children)

    @property
    def degree(self) -> int:
        return self.leaf_count - 1

    @cached_property
    def literal(self) -> str:
        if not self.children:
            return "o"
        return "(" + "".join(c.literal for c in self.children) + ")"

    def __str__(self):
        return self.literal

    def __repr__(self):
        return f"Tree({self.literal!r})"

    def __lt__(self, other):
        if not isinstance(other, Tree):
            return NotImplemented
        return self.literal < other.literal

    def spans(self, start: int = 1) -> Iterator[tuple[int, int]]:
        """Yield ``(first_leaf, last_leaf)`` for every internal vertex, preorder."""
        if not self.children:
            return
        yield start, start + self.leaf_count - 1
        offset = start
        for child in self.children:
            yield from child.spans(offset)
            offset += child.leaf_count


LEAF = Tree()


def graft(*children: Tree) -> Tree:
    """Join the roots of ``children`` under a new common root."""
    if len(children) == 1 and not isinstance(children[0], Tree):
        children = tuple(children[0])
    if len(children) < 2:
        raise ArityError(f"graft needs at least two trees, got {len(children)}")
    return Tree(tuple(children))


def corolla(p: int) -> Tree:
    """The tree with a single vertex and ``p + 1`` leaves; ``corolla(0)`` is the leaf."""
    if p < 0:
        raise DomainError("corolla size must be non-negative")
    if p == 0:
        return LEAF
    return Tree((LEAF,) * (p + 1))


@lru_cache(maxsize=None)
def involution(t: Tree) -> Tree:
    """Mirror image: reverse the children at every vertex."""
    if t.is_leaf:
        return t
    return Tree(tuple(involution(c) for c in reversed(t.children)))


def graft_on_leaf(t: Tree, i: int, host: Tree) -> Tree:
    """Replace the ``i``-th leaf of ``host`` (1-based, left to right) by ``t``."""
    if not 1 <= i <= host.leaf_count:
        raise DomainError(f"leaf index {i} out of range 1..{host.leaf_count}")

    def walk(node, i):
        if node.is_leaf:
            return t
        out = []
        for child in node.children:
            if 0 < i <= child.leaf_count:
                out.append(walk(child, i))
            else:
                out.append(child)
            i -= child.leaf_count
        return Tree(tuple(out))

    return walk(host, i)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _trees_unsorted(n: int) -> tuple[Tree, ...]:
    if n == 0:
        return (LEAF,)
    out = []
    # a root with k + 1 children spends k of the n degrees itself
    for k in range(1, n + 1):
        for degrees in _compositions(n - k, k + 1):
            for kids in product(*(_trees_unsorted(d) for d in degrees)):
                out.append(Tree(kids))
    return tuple(out)


@lru_cache(maxsize=None)
def _sorted_trees(n: int) -> tuple[Tree, ...]:
    return tuple(sorted(_trees_unsorted(n), key=lambda t: t.literal))


def enumerate_trees(n: int, cap: int = ENUMERATION_CAP) -> tuple[Tree, ...]:
    """All trees of degree ``n``, sorted by canonical literal."""
    if n < 0:
        raise DomainError("degree must be non-negative")
    if n > cap:
        raise EnumerationLimitError(f"degree {n} exceeds enumeration cap {cap}")
    return _sorted_trees(n)


@lru_cache(maxsize=None)
def _weighted_compositions(total: int, parts: int) -> int:
    # sum over compositions of ``total`` into ``parts`` parts of prod C_i
    if parts == 0:
        return 1 if total == 0 else 0
    return sum(super_catalan(i) * _weighted_compositions(total - i, parts - 1)
               for i in range(total + 1))


@lru_cache(maxsize=None)
def super_catalan(n: int) -> int:
    """Number of trees of degree ``n`` (Schröder numbers 1, 1, 3, 11, 45, ...)."""
    if n < 0:
        raise DomainError("degree must be non-negative")
    if n == 0:
        return 1
    return sum(_weighted_compositions(n - k, k + 1) for k in range(1, n + 1))


def recurrence_check(n: int) -> bool:
    """Check the closed recursion of ``C_n`` by the last-child decomposition.

    ``C_n = sum_k C_k * sum_j sum_{i_0+...+i_{j-1} = n-k-j} C_{i_0}...C_{i_{j-1}}``
    with ``1 <= j <= n - k``.
    """
    if n < 1:
        return super_catalan(n) == 1
    rhs = 0
    for k in range(n):
        inner = sum(_weighted_compositions(n - k - j, j) for j in range(1, n - k + 1))
        rhs += inner * super_catalan(k)
    return rhs == super_catalan(n)


def invariant_count(n: int) -> int:
    """How many trees of degree ``n`` are fixed by :func:`involution`."""
    if n < 1:
        raise DomainError("invariant_count needs n >= 1")
    return sum(1 for t in enumerate_trees(n) if involution(t) == t)


def parse_tree(text: str) -> Tree:
    """Parse a canonical tree literal; whitespace between siblings is ignored."""
    pos = 0
    n = len(text)

    def skip():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def node():
        nonlocal pos
        skip()
        if pos >= n:
            raise LiteralSyntaxError("unexpected end of tree literal", text, pos)
        ch = text[pos]
        if ch == "o":
            pos += 1
            return LEAF
        if ch != "(":
            raise LiteralSyntaxError(f"unexpected character {ch!r}", text, pos)
        start = pos
        pos += 1
        kids = []
        while True:
            skip()
            if pos >= n:
                raise LiteralSyntaxError("unclosed parenthesis", text, start)
            if text[pos] == ")":
                pos += 1
                break
            kids.append(node())
        if len(kids) < 2:
            raise ArityError(f"vertex at position {start} in {text!r} has {len(kids)} child")
        return Tree(tuple(kids))

    result = node()
    skip()
    if pos != n:
        raise LiteralSyntaxError("trailing characters", text, pos)
    return result


def format_tree(t: Tree) -> str:
    return t.literal
