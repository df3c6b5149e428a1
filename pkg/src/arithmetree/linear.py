"""Finite formal linear combinations with exact rational coefficients.

One class serves for sums of names, sums of pairs of names (tensors) and
sums of integers; only the basis keys differ.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Iterable, Iterator, Mapping

__all__ = ["LinComb", "FormalSum", "TensorComb", "bilinear"]


class LinComb:
    """Immutable mapping from basis keys to non-zero ``Fraction`` coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Hashable, object] | Iterable = ()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, coeff in items:
            acc[key] = acc.get(key, 0) + Fraction(coeff)
        self._terms = {k: c for k, c in acc.items() if c != 0}
        self._hash = None

    @classmethod
    def basis(cls, key, coeff=1) -> LinComb:
        return cls({key: coeff})

    @classmethod
    def of(cls, keys: Iterable) -> LinComb:
        """Sum of ``keys`` each with coefficient one (repeats add up)."""
        return cls((k, 1) for k in keys)

    def items(self):
        try:
            return sorted(self._terms.items())
        except TypeError:
            return sorted(self._terms.items(), key=lambda kv: repr(kv[0]))

    def keys(self):
        return [k for k, _ in self.items()]

    def support(self) -> frozenset:
        return frozenset(self._terms)

    def coefficient(self, key) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __iter__(self) -> Iterator:
        return iter(self.items())

    def __contains__(self, key):
        return key in self._terms

    def __eq__(self, other):
        if isinstance(other, LinComb):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: LinComb) -> LinComb:
        if not isinstance(other, LinComb):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return type(self)(out)

    def __sub__(self, other: LinComb) -> LinComb:
        if not isinstance(other, LinComb):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> LinComb:
        return type(self)({k: -c for k, c in self._terms.items()})

    def __mul__(self, scalar) -> LinComb:
        if isinstance(scalar, LinComb):
            return NotImplemented
        s = Fraction(scalar)
        return type(self)({k: c * s for k, c in self._terms.items()})

    __rmul__ = __mul__

    def map_keys(self, f: Callable) -> LinComb:
        """Apply ``f`` to every basis key, collecting coefficients."""
        return type(self)((f(k), c) for k, c in self._terms.items())

    def flat_map(self, f: Callable[[Hashable], LinComb]) -> LinComb:
        """Linear extension of ``f`` from basis keys to combinations."""
        out: dict = {}
        for k, c in self._terms.items():
            for k2, c2 in f(k)._terms.items():
                out[k2] = out.get(k2, 0) + c * c2
        return type(self)(out)

    def to_json(self, render: Callable = str) -> list[dict]:
        return [{"coefficient": _fraction_text(c), "basis": render(k)} for k, c in self.items()]

    def format(self, render: Callable = str) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, c in self.items():
            body = render(k)
            if c == 1:
                term = body
            elif c == -1:
                term = f"-{body}"
            else:
                term = f"{_fraction_text(c)}*{body}"
            parts.append(term)
        return " + ".join(parts).replace("+ -", "- ")

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"{type(self).__name__}({self.format(repr)})"


def _fraction_text(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class FormalSum(LinComb):
    """Combination of names."""

    __slots__ = ()


class TensorComb(LinComb):
    """Combination of ordered pairs ``(left, right)``."""

    __slots__ = ()

    def swap(self) -> TensorComb:
        return self.map_keys(lambda k: (k[1], k[0]))


def bilinear(x: LinComb, y: LinComb, f: Callable, result=LinComb) -> LinComb:
    """Extend ``f(basis, basis) -> LinComb`` bilinearly."""
    out: dict = {}
    for a, ca in x._terms.items():
        for b, cb in y._terms.items():
            for k, c in f(a, b)._terms.items():
                out[k] = out.get(k, 0) + ca * cb * c
    return result(out)
