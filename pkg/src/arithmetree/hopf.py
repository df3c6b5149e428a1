"""Coproduct on the trialgebra of names, and the integer Hopf algebra.

The basis element of a name ``v`` is written ``X^v``; the leaf name ``(0)``
is the unit ``1``.  For ``v = v_1 ∨ ... ∨ v_m``::

    Δ(X^v) = X^v ⊗ 1 + Σ (X^{v_1(1)} ★ ... ★ X^{v_m(1)}) ⊗ X^{v_1(2) ∨ ... ∨ v_m(2)}

with the sum over one Sweedler term of ``Δ(X^{v_i})`` per child and
``Δ(1) = 1 ⊗ 1``.

The integer side has basis ``[n]``, product ``[n] ⊥ [m] = [n + m]`` and
``[n]`` primitive for ``n >= 1``; :func:`ext_map` sends ``[p]`` to the
corolla with ``p + 1`` leaves.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Sequence

from .errors import DomainError, PreconditionError
from .linear import FormalSum, LinComb, TensorComb, bilinear
from .names import UNIT, Name, decode_name, encode_name, graft_names, involute_name
from .trees import corolla, graft_on_leaf
from .trialgebra import Op, children_names, op_names, star_names

__all__ = [
    "ONE",
    "basis",
    "coproduct",
    "coproduct_basis",
    "counit",
    "tensor_op",
    "tensor_star",
    "is_primitive",
    "primitive_combination",
    "coassociativity_defect",
    "counit_defects",
    "morphism_defect",
    "INVOLUTION_LAWS",
    "involution_law_holds",
    "find_involution_law",
    "IntegerElement",
    "integer",
    "int_add",
    "int_coproduct",
    "int_tensor_add",
    "int_times",
    "ext_map",
]

#: the unit ``1 = X^(0)``
ONE = FormalSum.basis(UNIT)


def basis(v: Name) -> FormalSum:
    return FormalSum.basis(v)


def _as_sum(x) -> FormalSum:
    return FormalSum.basis(x) if isinstance(x, Name) else x


def _star_basis(a: Name, b: Name) -> FormalSum:
    return FormalSum.of(star_names(a, b))


def _star_many(parts: Sequence[Name]) -> FormalSum:
    acc = FormalSum.basis(parts[0])
    for p in parts[1:]:
        acc = bilinear(acc, FormalSum.basis(p), _star_basis, FormalSum)
    return acc


@lru_cache(maxsize=None)
def coproduct_basis(v: Name) -> TensorComb:
    if v.is_unit:
        return TensorComb.basis((UNIT, UNIT))
    terms: dict = {(v, UNIT): Fraction(1)}
    legs = [coproduct_basis(c).items() for c in children_names(v)]
    for choice in product(*legs):
        coeff = Fraction(1)
        for _, c in choice:
            coeff *= c
        right = graft_names([pair[1] for pair, _ in choice])
        for left, c in _star_many([pair[0] for pair, _ in choice]).items():
            key = (left, right)
            terms[key] = terms.get(key, 0) + coeff * c
    return TensorComb(terms)


def coproduct(x) -> TensorComb:
    """``Δ``, linear in ``x`` (a name or a formal sum)."""
    if isinstance(x, Name):
        return coproduct_basis(x)
    return TensorComb(x.flat_map(coproduct_basis).items())


def counit(x) -> Fraction:
    return _as_sum(x).coefficient(UNIT)


# --------------------------------------------------------------------------
# tensor squares


def _tensor_basis(kind: Op):
    def f(p, q):
        (a, b), (a2, b2) = p, q
        if b.is_unit and b2.is_unit:
            return TensorComb(((u, UNIT), 1) for u in op_names(kind, a, a2))
        right = op_names(kind, b, b2)
        return TensorComb(((u, w), 1) for u in star_names(a, a2) for w in right)
    return f


def tensor_op(kind: Op | str, x: TensorComb, y: TensorComb) -> TensorComb:
    """``(a⊗b) ∘ (a'⊗b') = (a ★ a') ⊗ (b ∘ b')`` unless ``b = b' = 1``,
    in which case it is ``(a ∘ a') ⊗ 1``."""
    kind = kind if isinstance(kind, Op) else Op.parse(kind)
    return bilinear(x, y, _tensor_basis(kind), TensorComb)


def tensor_star(x: TensorComb, y: TensorComb) -> TensorComb:
    return tensor_op(Op.PREC, x, y) + tensor_op(Op.SUCC, x, y) + tensor_op(Op.BULLET, x, y)


# --------------------------------------------------------------------------
# checks


def is_primitive(x) -> bool:
    """``Δ(x) = x ⊗ 1 + 1 ⊗ x``."""
    x = _as_sum(x)
    expected = TensorComb(((v, UNIT), c) for v, c in x.items()) + \
        TensorComb(((UNIT, v), c) for v, c in x.items())
    return coproduct(x) == expected


def primitive_combination(v: Name, p: int, coefficients: Sequence) -> FormalSum:
    """``Σ λ_i X^{t_i}`` where ``t_i`` plants ``v`` on leaf ``i`` of the corolla
    with ``2p`` leaves; needs ``X^v`` primitive and ``Σ λ_i = 0``."""
    if p < 1:
        raise PreconditionError("p must be at least 1")
    lam = [Fraction(c) for c in coefficients]
    if len(lam) != 2 * p:
        raise PreconditionError(f"need {2 * p} coefficients, got {len(lam)}")
    if sum(lam) != 0:
        raise PreconditionError("coefficients must sum to zero")
    if v.is_unit or not is_primitive(v):
        raise PreconditionError(f"X^{decode_name(v)} is not primitive")
    host = corolla(2 * p - 1)
    tv = decode_name(v)
    return FormalSum((encode_name(graft_on_leaf(tv, i, host)), c) for i, c in enumerate(lam, start=1))


def _delta_left(t: TensorComb) -> LinComb:
    """``(Δ ⊗ id)`` on a tensor, giving a combination of triples."""
    out: dict = {}
    for (a, b), c in t.items():
        for (a1, a2), c2 in coproduct_basis(a).items():
            out[(a1, a2, b)] = out.get((a1, a2, b), 0) + c * c2
    return LinComb(out)


def _delta_right(t: TensorComb) -> LinComb:
    out: dict = {}
    for (a, b), c in t.items():
        for (b1, b2), c2 in coproduct_basis(b).items():
            out[(a, b1, b2)] = out.get((a, b1, b2), 0) + c * c2
    return LinComb(out)


def coassociativity_defect(v: Name) -> LinComb:
    """``(Δ⊗id)Δ - (id⊗Δ)Δ`` on ``X^v``; zero when coassociative."""
    d = coproduct_basis(v)
    return _delta_left(d) - _delta_right(d)


def counit_defects(v: Name) -> tuple[FormalSum, FormalSum]:
    """``(ε⊗id)Δ - id`` and ``(id⊗ε)Δ - id`` on ``X^v``."""
    d = coproduct_basis(v)
    left = FormalSum((b, c) for (a, b), c in d.items() if a.is_unit)
    right = FormalSum((a, c) for (a, b), c in d.items() if b.is_unit)
    x = FormalSum.basis(v)
    return left - x, right - x


def morphism_defect(kind: Op, v: Name, w: Name) -> TensorComb:
    """``Δ(v ∘ w) - Δ(v) ∘ Δ(w)``."""
    lhs = coproduct(FormalSum.of(op_names(kind, v, w)))
    return lhs - tensor_op(kind, coproduct_basis(v), coproduct_basis(w))


def _dagger_pair(t: TensorComb) -> TensorComb:
    return t.map_keys(lambda k: (involute_name(k[0]), involute_name(k[1])))


#: candidate compatibility laws between Δ and the mirror involution
INVOLUTION_LAWS = {
    "plain": lambda v: _dagger_pair(coproduct_basis(v)),
    "swapped": lambda v: _dagger_pair(coproduct_basis(v)).swap(),
}


def involution_law_holds(law: str, v: Name) -> bool:
    """Does ``Δ(X^{v†})`` equal the law's image of ``Δ(X^v)``?"""
    return coproduct_basis(involute_name(v)) == INVOLUTION_LAWS[law](v)


def find_involution_law(names: Sequence[Name]) -> list[str]:
    """Candidate laws that hold on every name in ``names``."""
    return [law for law in INVOLUTION_LAWS if all(involution_law_holds(law, v) for v in names)]


# --------------------------------------------------------------------------
# integers


class IntegerElement(LinComb):
    """Combination of basis integers ``[n]``."""

    __slots__ = ()

    def format(self, render=lambda n: f"[{n}]"):
        return super().format(render)


def integer(n: int) -> IntegerElement:
    if n < 0:
        raise DomainError("integer basis elements are non-negative")
    return IntegerElement.basis(n)


def int_add(x: IntegerElement, y: IntegerElement) -> IntegerElement:
    """``⊥``: linearised addition with unit ``[0]``."""
    return bilinear(x, y, lambda a, b: IntegerElement.basis(a + b), IntegerElement)


def int_coproduct(x: IntegerElement) -> TensorComb:
    def one(n):
        if n == 0:
            return TensorComb.basis((0, 0))
        return TensorComb({(n, 0): 1, (0, n): 1})
    if isinstance(x, int):
        return one(x)
    return TensorComb(x.flat_map(one).items())


def _tensor_add_basis(p, q) -> TensorComb:
    (n, m), (a, b) = p, q
    if m != 0 and a != 0 and b == 0:
        return TensorComb()
    if n != 0 and b != 0 and m == 0:
        return TensorComb()
    return TensorComb.basis((n + a, m + b))


def int_tensor_add(x: TensorComb, y: TensorComb) -> TensorComb:
    """``⊥`` on tensors: ``[n]⊗[m] ⊥ [p]⊗[q]`` vanishes when ``m, p ≠ 0 = q``
    or ``n, q ≠ 0 = m``, and is ``[n+p]⊗[m+q]`` otherwise."""
    return bilinear(x, y, _tensor_add_basis, TensorComb)


def int_times(x: IntegerElement, r: int) -> IntegerElement:
    """``[p] ↦ [p r]``."""
    if r < 1:
        raise DomainError("the multiplier must be at least 1")
    return x.map_keys(lambda p: p * r)


def ext_map(x: IntegerElement) -> FormalSum:
    """``[p] ↦ X^{corolla(p)}``, with ``[0] ↦ 1``."""
    return FormalSum((encode_name(corolla(p)), c) for p, c in x.items())
