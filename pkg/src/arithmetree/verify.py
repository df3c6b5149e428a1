"""Exhaustive property checks grouped into suites, shared by the CLI and tests.

Each check returns a :class:`Check`; a suite is a list of them.  The
``max_degree`` bound is the largest tree degree (or total degree for
products) a suite visits; every suite also has its own hard ceiling so
that large bounds stay tractable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable

from .errors import DomainError, GroveCollisionError, SearchFailure
from .grove import (
    corolla_grove,
    decompose_pair,
    dend_add,
    dend_mul,
    grove,
    grove_axiom_failures,
    grove_op,
    involute_grove,
    sandwich_pairs,
    star_pairs,
    total_grove,
)
from .hopf import (
    coassociativity_defect,
    counit_defects,
    find_involution_law,
    int_add,
    int_coproduct,
    int_tensor_add,
    int_times,
    integer,
    is_primitive,
    morphism_defect,
    primitive_combination,
)
from .lattice import (
    atoms,
    characteristic_polynomial,
    covers,
    join,
    left_modular_chain,
    level_condition_holds,
    meet,
    minimum,
    moebius,
    moves_closure,
    poset,
    projection_violations,
)
from .linear import FormalSum, TensorComb
from .names import decode_name, encode_name, involute_name
from .trees import corolla, enumerate_trees, invariant_count, recurrence_check, super_catalan
from .trialgebra import (
    Op,
    axiom_failures,
    evaluate_at_generator,
    involution_sum,
    op_names,
    order_interval,
    star,
    star_names,
    tri_op,
    universal_expression,
)

__all__ = ["Check", "SUITES", "run_suite", "names_of_degree", "splits"]


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f" ({self.detail})" if self.detail else ""
        return f"{status} {self.suite}: {self.name}{tail}"


def names_of_degree(n: int):
    return [encode_name(t) for t in enumerate_trees(n)]


def splits(total: int, parts: int) -> Iterable[tuple[int, ...]]:
    """Compositions of ``total`` into ``parts`` positive degrees."""
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in splits(total - first, parts - 1):
            yield (first,) + rest


def _first_bad(items, pred):
    for it in items:
        if not pred(it):
            return it
    return None


def _show(v) -> str:
    if isinstance(v, tuple):
        return ", ".join(_show(x) for x in v)
    try:
        return str(decode_name(v))
    except Exception:
        return str(v)


def _check(suite, name, bad, count=None) -> Check:
    if bad is None:
        return Check(suite, name, True, f"{count} cases" if count is not None else "")
    return Check(suite, name, False, f"counterexample: {_show(bad)}")


# --------------------------------------------------------------------------
# lattice


def lattice_suite(max_degree: int) -> list[Check]:
    s = "lattice"
    out = []
    for n in range(1, min(max_degree, 5) + 1):
        P = poset(n)
        pairs = [(v, w) for v in P.elements for w in P.elements]
        bad = _first_bad(pairs, lambda p: join(*p) == P.brute_join(*p) and meet(*p) == P.brute_meet(*p))
        out.append(Check(s, f"degree {n}: bounded lattice", P.is_lattice()))
        out.append(_check(s, f"degree {n}: closed-form join and meet", bad, len(pairs)))
        bad = _first_bad(P.elements, lambda v: moebius(v) == moebius(v, "brute"))
        nonzero = sum(1 for v in P.elements if moebius(v) != 0)
        out.append(_check(s, f"degree {n}: Möbius closed form", bad, len(P)))
        out.append(Check(s, f"degree {n}: {2 ** (n - 1)} non-zero Möbius values",
                         nonzero == 2 ** (n - 1), f"found {nonzero}"))
        dual = [(v, w) for v in P.elements for w in covers(v)]
        bad = _first_bad(dual, lambda p: involute_name(p[0]) in covers(involute_name(p[1])))
        out.append(_check(s, f"degree {n}: mirror reverses covers", bad, len(dual)))
        if n >= 2:
            at = atoms(n)
            top = at[0]
            for a in at[1:]:
                top = join(top, a)
            ok = set(at) == set(covers(minimum(n))) and top == encode_name(corolla(n))
            for mask in range(1, (1 << len(at)) - 1):
                j = None
                for k, a in enumerate(at):
                    if mask >> k & 1:
                        j = a if j is None else join(j, a)
                ok = ok and j != top
            out.append(Check(s, f"degree {n}: atoms independent, join is the corolla", ok))
            try:
                chain = left_modular_chain(n)
                cp = characteristic_polynomial(n)
                out.append(Check(s, f"degree {n}: left-modular chain and characteristic polynomial",
                                 len(chain) == (n - 1) ** 2 + (n - 1) + 1 and level_condition_holds(n)
                                 and cp.exponents == {0: (n - 1) ** 2, 1: n - 1}, str(cp)))
            except SearchFailure as e:
                out.append(Check(s, f"degree {n}: left-modular chain and characteristic polynomial",
                                 False, str(e)))
        if n <= 4:
            bad = _first_bad(P.elements, lambda v: moves_closure(v) == {
                P.elements[j] for j in range(len(P)) if P.leq(P.index[v], j)})
            out.append(_check(s, f"degree {n}: moves reach the whole up-set", bad, len(P)))
            bad = projection_violations(n)
            out.append(_check(s, f"degree {n}: projection keeps non-zero Möbius values",
                              bad[0] if bad else None, len(P)))
    return out


# --------------------------------------------------------------------------
# trialgebra


def trialgebra_suite(max_degree: int) -> list[Check]:
    s = "trialgebra"
    out = []
    top = min(max_degree, 6)
    for total in range(2, top + 1):
        pairs = [(v, w) for a, b in splits(total, 2) for v in names_of_degree(a) for w in names_of_degree(b)]

        def partitioned(p):
            parts = [set(op_names(k, *p)) for k in Op]
            return sum(map(len, parts)) == len(set().union(*parts)) == len(star_names(*p))

        out.append(_check(s, f"total degree {total}: ≺, ≻, • have disjoint supports",
                          _first_bad(pairs, partitioned), len(pairs)))
        out.append(_check(s, f"total degree {total}: ★ support is the order interval",
                          _first_bad(pairs, lambda p: set(star_names(*p)) == set(order_interval(*p))),
                          len(pairs)))
        if total <= 5:
            def mirrored(p):
                v, w = p
                vd, wd = involute_name(v), involute_name(w)
                return (involution_sum(star(v, w)) == star(wd, vd)
                        and involution_sum(tri_op(Op.PREC, v, w)) == tri_op(Op.SUCC, wd, vd)
                        and involution_sum(tri_op(Op.BULLET, v, w)) == tri_op(Op.BULLET, wd, vd))
            out.append(_check(s, f"total degree {total}: mirror reverses the operations",
                              _first_bad(pairs, mirrored), len(pairs)))
        if total >= 3:
            triples = [t for a, b, c in splits(total, 3)
                       for t in product(names_of_degree(a), names_of_degree(b), names_of_degree(c))]
            out.append(_check(s, f"total degree {total}: seven axioms",
                              _first_bad(triples, lambda t: not axiom_failures(*t)), len(triples)))
    for n in range(1, min(max_degree, 5) + 1):
        ts = names_of_degree(n)
        bad = _first_bad(ts, lambda v: evaluate_at_generator(universal_expression(v)) == FormalSum.basis(v)
                         and universal_expression(v).generator_count() == n)
        out.append(_check(s, f"degree {n}: universal expressions evaluate to their tree", bad, len(ts)))
    return out


# --------------------------------------------------------------------------
# groves


def grove_suite(max_degree: int) -> list[Check]:
    s = "grove"
    out = []
    A = grove([encode_name(corolla(1))])
    out.append(Check(s, "A ∔ A = {AB, M, BA}", str(dend_add(A, A)) == "((oo)o) ∪ (ooo) ∪ (o(oo))"))
    top = min(max_degree, 6)
    for total in range(1, top + 1):
        for n in range(0, total + 1):
            m = total - n
            try:
                ok = dend_add(total_grove(n), total_grove(m)) == total_grove(total)
                detail = ""
            except GroveCollisionError as e:
                ok, detail = False, str(e)
            out.append(Check(s, f"total({n}) ∔ total({m}) = total({total}) without repeats", ok, detail))
    for total in range(2, min(max_degree, 5) + 1):
        for n in range(1, total):
            m = total - n
            ws = total_grove(total).sorted()
            out.append(_check(s, f"split {n}+{m}: unique pair whose ★ contains w",
                              _first_bad(ws, lambda w: star_pairs(w, n, m) == [decompose_pair(w, n, m)]),
                              len(ws)))
            out.append(_check(s, f"split {n}+{m}: unique pair whose order interval contains w",
                              _first_bad(ws, lambda w: sandwich_pairs(w, n, m) == [decompose_pair(w, n, m)]),
                              len(ws)))
    for p in range(1, top):
        for q in range(1, top - p + 1):
            out.append(Check(s, f"Corl_{p} ⊥ Corl_{q} = Corl_{p + q}",
                             grove_op(Op.BULLET, corolla_grove(p), corolla_grove(q)) == corolla_grove(p + q)))
    for p in range(1, top + 1):
        for q in range(1, top // p + 1):
            out.append(Check(s, f"Corl_{p} ⋉ Corl_{q} = Corl_{p * q}",
                             dend_mul(corolla_grove(p), corolla_grove(q)) == corolla_grove(p * q)))
    triples = [t for a in range(1, top + 1) for b in range(1, top // a + 1) for c in range(1, top // (a * b) + 1)
               for t in product(names_of_degree(a), names_of_degree(b), names_of_degree(c))]
    G = lambda v: grove([v])
    out.append(_check(s, f"⋉ associative, degree product <= {top}",
                      _first_bad(triples, lambda t: dend_mul(dend_mul(G(t[0]), G(t[1])), G(t[2]))
                                 == dend_mul(G(t[0]), dend_mul(G(t[1]), G(t[2])))), len(triples)))
    singles = [v for n in range(1, min(top, 4) + 1) for v in names_of_degree(n)]
    out.append(_check(s, "{A} is a two-sided unit for ⋉",
                      _first_bad(singles, lambda v: dend_mul(A, G(v)) == G(v) == dend_mul(G(v), A)),
                      len(singles)))
    out.append(_check(s, "mirror commutes with ⋉",
                      _first_bad([(v, w) for v in singles for w in singles if v.degree * w.degree <= top],
                                 lambda p: dend_mul(G(involute_name(p[0])), G(involute_name(p[1])))
                                 == involute_grove(dend_mul(G(p[0]), G(p[1]))))))
    for total in range(3, top + 1):
        triples = [tuple(G(x) for x in t) for a, b, c in splits(total, 3)
                   for t in product(names_of_degree(a), names_of_degree(b), names_of_degree(c))]
        out.append(_check(s, f"total degree {total}: seven grove axioms",
                          _first_bad(triples, lambda t: not grove_axiom_failures(*t)), len(triples)))
    return out


# --------------------------------------------------------------------------
# Hopf


def hopf_suite(max_degree: int) -> list[Check]:
    s = "hopf"
    out = []
    top = min(max_degree, 5)
    basis = [v for n in range(0, top + 1) for v in names_of_degree(n)]
    out.append(_check(s, f"coassociative up to degree {top}",
                      _first_bad(basis, lambda v: not coassociativity_defect(v)), len(basis)))
    out.append(_check(s, f"counit laws up to degree {top}",
                      _first_bad(basis, lambda v: not any(counit_defects(v))), len(basis)))
    for total in range(2, min(top, 4) + 1):
        pairs = [(k, v, w) for a, b in splits(total, 2) for v in names_of_degree(a)
                 for w in names_of_degree(b) for k in Op]
        out.append(_check(s, f"total degree {total}: Δ respects ≺, ≻, •",
                          _first_bad(pairs, lambda t: not morphism_defect(*t)), len(pairs)))
    for k in range(1, min(top, 4) + 1):
        out.append(Check(s, f"X^corolla({k}) primitive", is_primitive(encode_name(corolla(k)))))
    for v in (corolla(1), corolla(2)):
        for p in (1, 2):
            lam = [1] * (2 * p - 1) + [-(2 * p - 1)]
            x = primitive_combination(encode_name(v), p, lam)
            out.append(Check(s, f"primitive combination on {v}, p={p}", is_primitive(x)))
    small = [v for n in range(1, 4) for v in names_of_degree(n)]
    laws = find_involution_law(small)
    out.append(Check(s, "mirror law found on degrees <= 3", len(laws) == 1, ", ".join(laws) or "none"))
    if laws and top >= 4:
        holds = find_involution_law(names_of_degree(4))
        out.append(Check(s, f"mirror law '{laws[0]}' holds on degree 4", laws[0] in holds))
    ok = True
    for n in range(0, 11):
        for m in range(0, 11):
            x, y = integer(n), integer(m)
            ok &= int_coproduct(int_add(x, y)) == int_tensor_add(int_coproduct(x), int_coproduct(y))
            ok &= int_coproduct(int_add(x, y)) == int_coproduct(int_add(y, x))
    out.append(Check(s, "integer coproduct is a morphism, n, m <= 10", ok))
    ok = True
    for r in range(1, 6):
        for n in range(0, 11):
            x = integer(n)
            scaled = TensorComb((((a * r, b * r), c) for (a, b), c in int_coproduct(x).items()))
            ok &= int_coproduct(int_times(x, r)) == scaled
            for m in range(0, 11):
                ok &= int_times(int_add(x, integer(m)), r) == int_add(int_times(x, r), int_times(integer(m), r))
    out.append(Check(s, "scaling by r <= 5 respects ⊥ and the coproduct", ok))
    return out


# --------------------------------------------------------------------------
# counting


def counting_suite(max_degree: int) -> list[Check]:
    s = "counting"
    out = []
    top = min(max(max_degree, 1), 8)
    for n in range(0, min(top, 7) + 1):
        out.append(Check(s, f"|T_{n}| = {super_catalan(n)}", len(enumerate_trees(n)) == super_catalan(n)))
    for n in range(1, top + 1):
        out.append(Check(s, f"C_{n} recurrence", recurrence_check(n)))
    for n in range(1, top + 1):
        k = invariant_count(n)
        out.append(Check(s, f"{k} mirror-symmetric trees of degree {n}", k == super_catalan((n + 1) // 2)))
    return out


SUITES: dict[str, Callable[[int], list[Check]]] = {
    "lattice": lattice_suite,
    "trialgebra": trialgebra_suite,
    "grove": grove_suite,
    "hopf": hopf_suite,
    "counting": counting_suite,
}


def run_suite(name: str, max_degree: int) -> list[Check]:
    if name == "all":
        return [c for key in SUITES for c in SUITES[key](max_degree)]
    try:
        return SUITES[name](max_degree)
    except KeyError:
        raise DomainError(f"unknown suite {name!r}") from None
