"""The lattice of trees of a fixed degree under the coordinatewise order.

Closed-form :func:`join` and :func:`meet` work on names directly; the
:class:`Poset` built by :func:`poset` holds the brute-force order as
bitmasks and is the oracle they are checked against.  Everything else
(covers, Möbius function, left-modular chains, the characteristic
polynomial) is computed on that poset.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import DegreeMismatchError, DomainError, EnumerationLimitError, SearchFailure
from .names import (
    BARE,
    CLOSE,
    OPEN,
    UNIT,
    Coordinate,
    Name,
    _key,
    decode_name,
    encode_name,
    graft_names,
    project_binary,
)
from .trees import LEAF, Tree, enumerate_trees

__all__ = [
    "Poset",
    "poset",
    "join",
    "meet",
    "covers",
    "moves",
    "moebius",
    "atoms",
    "is_left_modular",
    "left_modular_witness",
    "left_modular_chain",
    "atom_levels",
    "level_condition_holds",
    "CharacteristicPolynomial",
    "characteristic_polynomial",
    "hasse_dot",
    "minimum",
    "maximum",
    "POSET_CAP",
    "projection_image",
    "projection_moebius",
    "projection_violations",
    "moves_closure",
]

#: Largest degree for which the pairwise poset is built.
POSET_CAP = 7


# --------------------------------------------------------------------------
# closed-form join and meet


def _set_geq(s: Iterable[int], t: Iterable[int]) -> bool:
    """Order on CLOSE exponent sets sharing their least element."""
    diff = set(s) ^ set(t)
    return not diff or min(diff) in set(s)


def _intervals(coords: Sequence[Coordinate]) -> list[tuple[int, int]]:
    return [(e, j) for j, c in enumerate(coords, start=1) if c.kind == CLOSE for e in c.exps]


def _crosses(r: int, i: int, intervals) -> bool:
    # a parenthesis opened at r and closed after x_i would overlap one of these
    return any(p < r <= j < i for p, j in intervals)


def _still_open(a0: int, i: int, coords: Sequence[Coordinate]) -> set[int]:
    closed = {e for c in coords if c.kind == CLOSE for e in c.exps}
    return {r for r in range(a0 + 1, i) if coords[r - 1].kind == OPEN and r not in closed}


def _check_degrees(v: Name, w: Name):
    if len(v) != len(w):
        raise DegreeMismatchError(f"{v} and {w} have different degrees")


def join(v: Name, w: Name) -> Name:
    """Least upper bound, built coordinate by coordinate from the left.

    OPEN wins, then BARE.  Two CLOSE coordinates give a CLOSE whose leading
    exponent is the larger of the two, which must also re-close every
    parenthesis still open after it; extra exponents are added only as far
    as needed to dominate the operand with the same leading exponent.
    """
    _check_degrees(v, w)
    if v.is_unit:
        return v
    out: list[Coordinate] = []
    for i, (a, b) in enumerate(zip(v.coords, w.coords), start=1):
        if OPEN in (a.kind, b.kind):
            out.append(Coordinate(OPEN, i))
        elif BARE in (a.kind, b.kind):
            out.append(Coordinate(BARE, i))
        else:
            a0 = max(a.exps[0], b.exps[0])
            exps = {a0} | _still_open(a0, i, out)
            rivals = [c.exps for c in (a, b) if c.exps[0] == a0]
            top = rivals[0]
            if len(rivals) == 2 and not _set_geq(top, rivals[1]):
                top = rivals[1]
            while not _set_geq(exps, top):
                exps.add(min(exps ^ set(top)))
            out.append(Coordinate.close(sorted(exps)))
    return Name(tuple(out))


def meet(v: Name, w: Name) -> Name:
    """Greatest lower bound, built coordinate by coordinate from the left.

    A coordinate stays OPEN only if both are OPEN and becomes BARE if neither
    is CLOSE.  Otherwise the result closes back to the last common open
    parenthesis at or before the smaller leading exponent (skipping ones
    that would overlap an earlier pair), re-closes what is still open, and
    then takes every further exponent it can while staying below the
    operands.
    """
    _check_degrees(v, w)
    if v.is_unit:
        return v
    out: list[Coordinate] = []
    for i, (a, b) in enumerate(zip(v.coords, w.coords), start=1):
        if a.kind == OPEN and b.kind == OPEN:
            out.append(Coordinate(OPEN, i))
            continue
        if CLOSE not in (a.kind, b.kind):
            out.append(Coordinate(BARE, i))
            continue
        closes = [c for c in (a, b) if c.kind == CLOSE]
        j0 = min(c.exps[0] for c in closes)
        ivs = _intervals(out)
        a0 = max(k for k in range(1, j0 + 1)
                 if out[k - 1].kind == OPEN and not _crosses(k, i, ivs))
        exps = {a0} | _still_open(a0, i, out)
        rivals = [c.exps for c in closes if c.exps[0] == a0]
        bound = None
        if rivals:
            bound = rivals[0]
            if len(rivals) == 2 and _set_geq(bound, rivals[1]):
                bound = rivals[1]
        for r in range(a0 + 1, i):
            if r in exps or out[r - 1].kind != OPEN or _crosses(r, i, ivs):
                continue
            if bound is None or _set_geq(bound, exps | {r}):
                exps.add(r)
        out.append(Coordinate.close(sorted(exps)))
    return Name(tuple(out))


# --------------------------------------------------------------------------
# the brute-force poset


def _bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


class Poset:
    """All names of one degree with the order stored as bitmasks.

    ``up[i]`` has bit ``j`` set when ``elements[i] <= elements[j]``.
    """

    def __init__(self, n: int):
        if n > POSET_CAP:
            raise EnumerationLimitError(f"poset of degree {n} exceeds cap {POSET_CAP}")
        self.degree = n
        self.elements: tuple[Name, ...] = tuple(encode_name(t) for t in enumerate_trees(n))
        self.index = {v: i for i, v in enumerate(self.elements)}
        size = len(self.elements)
        full = (1 << size) - 1
        ge = {}  # (position, coefficient key) -> mask of elements at or above
        le = {}
        for p in range(len(self.elements[0])):
            values = {_key(v.coords[p]) for v in self.elements} if n else set()
            for val in values:
                gm = lm = 0
                for i, v in enumerate(self.elements):
                    k = _key(v.coords[p])
                    if k >= val:
                        gm |= 1 << i
                    if k <= val:
                        lm |= 1 << i
                ge[p, val] = gm
                le[p, val] = lm
        self.up = []
        self.down = []
        for v in self.elements:
            u = d = full
            for p, c in enumerate(v.coords):
                u &= ge[p, _key(c)]
                d &= le[p, _key(c)]
            self.up.append(u)
            self.down.append(d)
        self._by_up = {m: i for i, m in enumerate(self.up)}
        self._by_down = {m: i for i, m in enumerate(self.down)}
        self._join = {}
        self._meet = {}

    def __len__(self):
        return len(self.elements)

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def bottom(self) -> int:
        return next(i for i, m in enumerate(self.down) if m == 1 << i)

    def top(self) -> int:
        return next(i for i, m in enumerate(self.up) if m == 1 << i)

    def join_index(self, i: int, j: int) -> int:
        """Index of the least common upper bound; ``KeyError`` if there is none."""
        key = (i, j) if i <= j else (j, i)
        res = self._join.get(key)
        if res is None:
            res = self._join[key] = self._by_up[self.up[i] & self.up[j]]
        return res

    def meet_index(self, i: int, j: int) -> int:
        key = (i, j) if i <= j else (j, i)
        res = self._meet.get(key)
        if res is None:
            res = self._meet[key] = self._by_down[self.down[i] & self.down[j]]
        return res

    def brute_join(self, v: Name, w: Name) -> Name:
        return self.elements[self.join_index(self.index[v], self.index[w])]

    def brute_meet(self, v: Name, w: Name) -> Name:
        return self.elements[self.meet_index(self.index[v], self.index[w])]

    def is_lattice(self) -> bool:
        n = len(self)
        for i in range(n):
            for j in range(i, n):
                if (self.up[i] & self.up[j]) not in self._by_up:
                    return False
                if (self.down[i] & self.down[j]) not in self._by_down:
                    return False
        return self.bottom() is not None and self.top() is not None

    @lru_cache(maxsize=None)
    def cover_indices(self, i: int) -> tuple[int, ...]:
        strict = self.up[i] & ~(1 << i)
        return tuple(j for j in _bits(strict) if self.down[j] & strict == 1 << j)

    @lru_cache(maxsize=None)
    def heights(self) -> tuple[int, ...]:
        """Length of the longest chain from the bottom to each element."""
        order = sorted(range(len(self)), key=lambda i: bin(self.down[i]).count("1"))
        h = [0] * len(self)
        for i in order:
            for j in self.cover_indices(i):
                h[j] = max(h[j], h[i] + 1)
        return tuple(h)

    @lru_cache(maxsize=None)
    def moebius_values(self) -> tuple[int, ...]:
        """mu(bottom, x) for every element by the defining recursion."""
        order = sorted(range(len(self)), key=lambda i: bin(self.down[i]).count("1"))
        mu = [0] * len(self)
        for x in order:
            below = self.down[x] & ~(1 << x)
            mu[x] = 1 if not below else -sum(mu[y] for y in _bits(below))
        return tuple(mu)

    @lru_cache(maxsize=None)
    def left_modular_witness(self, x: int) -> tuple[int, int] | None:
        """A pair ``y <= z`` breaking left-modularity of ``x``, or ``None``."""
        for y in range(len(self)):
            for z in _bits(self.up[y]):
                lhs = self.join_index(y, self.meet_index(x, z))
                rhs = self.meet_index(self.join_index(y, x), z)
                if lhs != rhs:
                    return y, z
        return None

    def left_modular(self, x: int) -> bool:
        return self.left_modular_witness(x) is None


@lru_cache(maxsize=None)
def poset(n: int) -> Poset:
    if n < 1:
        raise DomainError("posets are defined for degree >= 1")
    return Poset(n)


def minimum(n: int) -> Name:
    """Left comb ``(((oo)o)...o)``."""
    t = LEAF
    for _ in range(n):
        t = Tree((t, LEAF))
    return encode_name(t)


def maximum(n: int) -> Name:
    """Right comb ``(o(o(...(oo))))``; the unit for ``n = 0``."""
    t = LEAF
    for _ in range(n):
        t = Tree((LEAF, t))
    return encode_name(t)


# --------------------------------------------------------------------------
# covers and the three moves


def covers(v: Name) -> tuple[Name, ...]:
    """Elements covering ``v``, read off the brute-force order."""
    P = poset(v.degree)
    return tuple(P.elements[j] for j in P.cover_indices(P.index[v]))


def _tree_moves(t: Tree) -> set[Tree]:
    out: set[Tree] = set()
    kids = t.children
    m = len(kids)
    for i, child in enumerate(kids):
        if child.is_leaf:
            continue
        for new in _tree_moves(child):
            out.add(Tree(kids[:i] + (new,) + kids[i + 1:]))
    # unfolding also works on a later child followed by a sibling, as long as
    # a parenthesis still opens at its first leaf afterwards
    for i in range(m - 1):
        if not kids[i].is_leaf and (i == 0 or not kids[i].children[0].is_leaf):
            out.add(Tree(kids[:i] + kids[i].children + kids[i + 1:]))
    for j in range(1, m - 1):
        out.add(Tree(kids[:j] + (Tree(kids[j:]),)))
    return out


def moves_closure(v: Name) -> set[Name]:
    """Everything reachable from ``v`` by zero or more moves."""
    seen = {v}
    todo = [v]
    while todo:
        for w in moves(todo.pop()):
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return seen


def moves(v: Name) -> set[Name]:
    """One application of any of the three moves.

    1. apply a move inside one child;
    2. replace a non-leaf child that has a right sibling by its own children,
       provided it is the first child or its own first child is not a leaf;
    3. regroup the last ``m - j >= 2`` children under a new vertex.
    """
    return {encode_name(t) for t in _tree_moves(decode_name(v))}


# --------------------------------------------------------------------------
# Möbius function and atoms


def _moebius_closed(v: Name) -> int:
    if v.is_unit or len(v) < 2:
        raise DomainError("the Möbius function needs a name of degree >= 1")
    last = v.coords[-1]
    if last.kind != CLOSE or last.exps != (1,):
        return 0
    t = 0
    for c in v.coords[1:-1]:
        if c.kind == BARE:
            t += 1
        elif not (c.kind == CLOSE and c.exps == (1,)):
            return 0
    return -1 if t % 2 else 1


def moebius(v: Name, mode: str = "closed", degree: int | None = None) -> int:
    """``mu(bottom, v)``; ``mode`` is ``"closed"`` or ``"brute"``."""
    if degree is not None and degree != v.degree:
        raise DegreeMismatchError(f"{v} has degree {v.degree}, not {degree}")
    if mode == "closed":
        return _moebius_closed(v)
    if mode == "brute":
        P = poset(v.degree)
        return P.moebius_values()[P.index[v]]
    raise DomainError(f"unknown Möbius mode {mode!r}")


def atoms(n: int) -> tuple[Name, ...]:
    """The ``n - 1`` atoms: a single BARE coordinate, every other inner one ``1+h^-1``."""
    if n < 2:
        raise DomainError("atoms need degree >= 2")
    out = []
    for i in range(1, n):
        coords = [Coordinate(OPEN, 1)]
        for p in range(2, n + 2):
            coords.append(Coordinate(BARE, p) if p == i + 1 else Coordinate.close((1,)))
        out.append(Name(tuple(coords)))
    return tuple(out)


# --------------------------------------------------------------------------
# left-modular chains and the characteristic polynomial


def is_left_modular(x: Name) -> bool:
    """``y v (x ^ z) == (y v x) ^ z`` for every ``y <= z``."""
    P = poset(x.degree)
    return P.left_modular(P.index[x])


def left_modular_witness(x: Name) -> tuple[Name, Name] | None:
    """Some ``y <= z`` with ``y v (x ^ z) != (y v x) ^ z``."""
    P = poset(x.degree)
    hit = P.left_modular_witness(P.index[x])
    return None if hit is None else (P.elements[hit[0]], P.elements[hit[1]])


def _chain_length(n: int) -> int:
    return (n - 1) ** 2 + (n - 1) + 1


@lru_cache(maxsize=None)
def left_modular_chain(n: int) -> tuple[Name, ...]:
    """A maximal chain of left-modular elements from the bottom to the top.

    For ``n > 2`` the chain starts with the chain of degree ``n - 1`` with a
    leaf grafted on the right, passes through ``(0) v top(n-2) v (0)`` and is
    completed by a depth-first search over covers, trying covers in canonical
    order so the first hit is the lexicographically smallest completion.
    """
    if n < 2:
        raise DomainError("left-modular chains need degree >= 2")
    P = poset(n)
    if n == 2:
        chain = tuple(encode_name(t) for t in
                      (Tree((Tree((LEAF, LEAF)), LEAF)), Tree((LEAF,) * 3), Tree((LEAF, Tree((LEAF, LEAF))))))
    else:
        try:
            lower = left_modular_chain(n - 1)
        except SearchFailure as exc:
            raise SearchFailure(f"degree {n}: the prefix needs the degree-{n - 1} chain, which fails: {exc}") from exc
        prefix = [graft_names([d, UNIT]) for d in lower]
        prefix.append(graft_names([UNIT, maximum(n - 2), UNIT]))
        for v in prefix:
            hit = left_modular_witness(v)
            if hit is not None:
                y, z = (decode_name(u) for u in hit)
                raise SearchFailure(
                    f"prefix element {decode_name(v)} of degree {n} is not left-modular: "
                    f"y={y} <= z={z} gives y v (x ^ z) != (y v x) ^ z")
        remaining = _chain_length(n) - len(prefix)
        top = P.top()
        start = P.index[prefix[-1]]

        def search(i, steps):
            if steps == 0:
                return [] if i == top else None
            for j in sorted(P.cover_indices(i), key=lambda j: str(P.elements[j])):
                if not P.left_modular(j):
                    continue
                rest = search(j, steps - 1)
                if rest is not None:
                    return [j] + rest
            return None

        tail = search(start, remaining)
        if tail is None:
            raise SearchFailure(f"no left-modular completion of the degree-{n} chain")
        chain = tuple(prefix) + tuple(P.elements[j] for j in tail)
    _verify_chain(P, chain, n)
    return chain


def _verify_chain(P: Poset, chain: Sequence[Name], n: int):
    idx = [P.index[v] for v in chain]
    if idx[0] != P.bottom() or idx[-1] != P.top():
        raise SearchFailure("chain does not run from bottom to top")
    if len(chain) != _chain_length(n):
        raise SearchFailure(f"chain has {len(chain)} elements, expected {_chain_length(n)}")
    for a, b in zip(idx, idx[1:]):
        if b not in P.cover_indices(a):
            raise SearchFailure(f"{P.elements[a]} -> {P.elements[b]} is not a cover")
    for i in idx:
        if not P.left_modular(i):
            raise SearchFailure(f"{P.elements[i]} is not left-modular")


def atom_levels(n: int, chain: Sequence[Name] | None = None) -> tuple[tuple[Name, ...], ...]:
    """Atoms sorted into levels along the chain: level ``i`` holds atoms below
    ``x_i`` but not below ``x_{i-1}``, for ``i = 1 .. len(chain) - 1``."""
    P = poset(n)
    chain = left_modular_chain(n) if chain is None else chain
    idx = [P.index[v] for v in chain]
    levels = []
    for prev, cur in zip(idx, idx[1:]):
        levels.append(tuple(a for a in atoms(n)
                            if P.leq(P.index[a], cur) and not P.leq(P.index[a], prev)))
    return tuple(levels)


def level_condition_holds(n: int) -> bool:
    """``a < b_1 < ... < b_k`` in level order implies ``a`` is not below the join of the ``b``."""
    P = poset(n)
    level_of = {}
    for k, level in enumerate(atom_levels(n)):
        for a in level:
            level_of[a] = k
    atom_list = sorted(level_of, key=level_of.get)
    for pos, a in enumerate(atom_list):
        later = [b for b in atom_list[pos + 1:] if level_of[b] > level_of[a]]
        # every subset of strictly later atoms whose levels strictly increase
        for mask in range(1, 1 << len(later)):
            chosen = [later[k] for k in range(len(later)) if mask >> k & 1]
            if len({level_of[b] for b in chosen}) != len(chosen):
                continue
            top = P.index[chosen[0]]
            for b in chosen[1:]:
                top = P.join_index(top, P.index[b])
            if P.leq(P.index[a], top):
                return False
    return True


@dataclass(frozen=True)
class CharacteristicPolynomial:
    """Product of ``(x - s)`` over the level sizes ``s``."""

    level_sizes: tuple[int, ...]

    @property
    def exponents(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for s in self.level_sizes:
            out[s] = out.get(s, 0) + 1
        return out

    def __call__(self, x):
        result = 1
        for s in self.level_sizes:
            result *= x - s
        return result

    def __str__(self):
        parts = []
        for s, e in sorted(self.exponents.items()):
            base = "x" if s == 0 else f"(x-{s})"
            parts.append(base if e == 1 else f"{base}^{e}")
        return "*".join(parts) or "1"


def characteristic_polynomial(n: int) -> CharacteristicPolynomial:
    """Factor through the atom levels of :func:`left_modular_chain`.

    Checks the level condition and that exactly ``n - 1`` levels are
    singletons with all others empty.
    """
    levels = atom_levels(n)
    sizes = tuple(len(level) for level in levels)
    if not level_condition_holds(n):
        raise SearchFailure(f"level condition fails in degree {n}")
    if sizes.count(1) != n - 1 or any(s not in (0, 1) for s in sizes):
        raise SearchFailure(f"unexpected level sizes {sizes} in degree {n}")
    return CharacteristicPolynomial(sizes)


# --------------------------------------------------------------------------
# DOT export


def hasse_dot(n: int) -> str:
    """Graphviz source of the Hasse diagram, bottom element at the bottom.

    Nodes are labelled with tree literals and grouped into ranks by the
    length of the longest chain below them.
    """
    P = poset(n)
    heights = P.heights()
    lines = [f"digraph T{n} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    for i, v in enumerate(P.elements):
        lines.append(f'  n{i} [label="{decode_name(v)}"];')
    for h in sorted(set(heights)):
        members = " ".join(f"n{i};" for i in range(len(P)) if heights[i] == h)
        lines.append(f"  {{ rank=same; {members} }}")
    for i in range(len(P)):
        for j in P.cover_indices(i):
            lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# projection to binary names


def projection_image(n: int) -> tuple[tuple[int, ...], ...]:
    """Distinct binary projections of the names of degree ``n``, sorted."""
    return tuple(sorted({project_binary(v) for v in poset(n).elements}))


def projection_moebius(n: int) -> dict[tuple[int, ...], int]:
    """Möbius function from the minimum of the projection image, ordered componentwise."""
    image = projection_image(n)

    def leq(a, b):
        return all(x <= y for x, y in zip(a, b))

    bottom = [a for a in image if all(leq(a, b) for b in image)]
    if len(bottom) != 1:
        raise DomainError(f"projection image of degree {n} has no minimum")
    mu: dict[tuple[int, ...], int] = {}
    for x in sorted(image, key=lambda a: sum(1 for b in image if leq(b, a))):
        below = [y for y in image if leq(y, x) and y != x]
        mu[x] = 1 if not below else -sum(mu[y] for y in below)
    return mu


def projection_violations(n: int) -> list[Name]:
    """Names with non-zero Möbius value whose projection has zero Möbius value,
    plus names where the projection fails to be monotone on a cover."""
    P = poset(n)
    mu = projection_moebius(n)
    bad = [v for v in P.elements if moebius(v) != 0 and mu[project_binary(v)] == 0]
    for i, v in enumerate(P.elements):
        pv = project_binary(v)
        for j in P.cover_indices(i):
            if not all(a <= b for a, b in zip(pv, project_binary(P.elements[j]))):
                bad.append(v)
                break
    return bad
