"""Command-line front end: ``arithmetree <subcommand> ...``.

Trees can be given as tree literals (``(o(oo))``) or name literals
(``(1,2,1+h^-1+h^-2)``); groves as members joined by ``∪`` or `` u ``.
Exit status is 0 on success, 1 on a domain error or a failed check and 2
on a usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Sequence

from .errors import DomainError, LiteralSyntaxError
from .grove import Grove, dend_add, dend_mul, decompose_pair, grove_op, grove_to_json, parse_grove, parse_member
from .hopf import coproduct, is_primitive
from .lattice import (
    atoms,
    characteristic_polynomial,
    covers,
    hasse_dot,
    join,
    left_modular_chain,
    meet,
    moebius,
    poset,
)
from .linear import FormalSum, LinComb
from .names import Name, decode_name, encode_name
from .trees import enumerate_trees, invariant_count, parse_tree
from .trialgebra import Op, star, tri_op, universal_expression
from .verify import SUITES, run_suite

__all__ = ["main", "build_parser", "parse_sum"]


# --------------------------------------------------------------------------
# rendering


def _tree(v: Name) -> str:
    return str(decode_name(v))


def _name_json(v: Name) -> dict:
    return {"tree": _tree(v), "name": str(v)}


def _basis_text(v: Name) -> str:
    return "1" if v.is_unit else _tree(v)


def _pair_text(ascii_only: bool):
    sep = " (x) " if ascii_only else "⊗"
    return lambda k: f"{_basis_text(k[0])}{sep}{_basis_text(k[1])}"


_TERM = re.compile(r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*\s*)?(\S+)")


def parse_sum(text: str) -> FormalSum:
    """``"(o(oo)) - 2*((oo)o) + 1/2*(ooo)"``; ``1`` is the unit."""
    out: dict = {}
    pos = 0
    text = text.strip()
    if not text:
        raise LiteralSyntaxError("empty sum", text)
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m:
            raise LiteralSyntaxError("malformed term", text, pos)
        sign, coeff, body = m.groups()
        if pos > 0 and sign is None:
            raise LiteralSyntaxError("missing '+' or '-' between terms", text, m.start(3))
        c = Fraction(coeff) if coeff else Fraction(1)
        if sign == "-":
            c = -c
        key = Name() if body == "1" else parse_member(body)
        out[key] = out.get(key, 0) + c
        pos = m.end()
    return FormalSum(out)


# --------------------------------------------------------------------------
# subcommands


def _emit(args, text: str, obj=None):
    if args.format == "json" and obj is not None:
        text = json.dumps(obj, ensure_ascii=False, sort_keys=True)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + ("" if text.endswith("\n") else "\n"))
    else:
        sys.stdout.write(text + ("" if text.endswith("\n") else "\n"))
    return 0


def _names_out(args, names: Sequence[Name]):
    return _emit(args, "\n".join(_tree(v) for v in names), [_name_json(v) for v in names])


def cmd_enumerate(args):
    trees = enumerate_trees(args.degree)
    return _emit(args, "\n".join(t.literal for t in trees), [t.literal for t in trees])


def cmd_encode(args):
    v = encode_name(parse_tree(args.tree))
    return _emit(args, str(v), _name_json(v))


def cmd_decode(args):
    v = parse_member(args.name)
    return _emit(args, _tree(v), _name_json(v))


def cmd_order(args):
    if args.format == "dot" or args.format == "text":
        return _emit(args, hasse_dot(args.degree))
    P = poset(args.degree)
    obj = {"nodes": [_tree(v) for v in P.elements],
           "covers": [[i, j] for i in range(len(P)) for j in P.cover_indices(i)]}
    return _emit(args, "", obj)


def cmd_meet(args):
    v = meet(parse_member(args.a), parse_member(args.b))
    return _emit(args, _tree(v), _name_json(v))


def cmd_join(args):
    v = join(parse_member(args.a), parse_member(args.b))
    return _emit(args, _tree(v), _name_json(v))


def cmd_covers(args):
    return _names_out(args, sorted(covers(parse_member(args.tree))))


def cmd_moebius(args):
    value = moebius(parse_member(args.tree), args.mode, args.degree)
    return _emit(args, str(value), value)


def cmd_atoms(args):
    return _names_out(args, atoms(args.degree))


def cmd_chain(args):
    return _names_out(args, left_modular_chain(args.degree))


def cmd_charpoly(args):
    cp = characteristic_polynomial(args.degree)
    return _emit(args, str(cp), {"polynomial": str(cp), "level_sizes": list(cp.level_sizes)})


def _sum_out(args, x: LinComb):
    return _emit(args, x.format(_basis_text), x.to_json(_basis_text))


def cmd_star(args):
    return _sum_out(args, star(parse_member(args.a), parse_member(args.b)))


def cmd_op(args):
    return _sum_out(args, tri_op(Op.parse(args.kind), parse_member(args.a), parse_member(args.b)))


def cmd_omega(args):
    e = universal_expression(parse_member(args.tree))
    return _emit(args, str(e), {"expression": str(e), "generators": e.generator_count()})


def _grove_out(args, g: Grove):
    return _emit(args, g.format(args.ascii), grove_to_json(g))


def cmd_add(args):
    return _grove_out(args, dend_add(parse_grove(args.a), parse_grove(args.b)))


def cmd_groveop(args):
    return _grove_out(args, grove_op(Op.parse(args.kind), parse_grove(args.a), parse_grove(args.b)))


def cmd_mul(args):
    return _grove_out(args, dend_mul(parse_grove(args.a), parse_grove(args.b)))


def cmd_decompose(args):
    u, v = decompose_pair(parse_member(args.tree), args.n, args.m)
    return _emit(args, f"{_tree(u)} {_tree(v)}", {"left": _name_json(u), "right": _name_json(v)})


def cmd_coproduct(args):
    d = coproduct(parse_sum(args.element))
    render = _pair_text(args.ascii)
    return _emit(args, d.format(render),
                 d.to_json(lambda k: {"left": _basis_text(k[0]), "right": _basis_text(k[1])}))


def cmd_primcheck(args):
    ok = is_primitive(parse_sum(args.element))
    return _emit(args, "primitive" if ok else "not primitive", ok)


def cmd_invariants(args):
    k = invariant_count(args.degree)
    return _emit(args, str(k), k)


def cmd_verify(args):
    checks = run_suite(args.suite, args.max_degree)
    text = "\n".join(c.line() for c in checks)
    failed = sum(1 for c in checks if not c.passed)
    text += f"\n{len(checks) - failed} passed, {failed} failed"
    obj = {"checks": [{"suite": c.suite, "name": c.name, "passed": c.passed, "detail": c.detail}
                      for c in checks], "failed": failed}
    _emit(args, text, obj)
    return 1 if failed else 0


# --------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "dot"), default="text")
    common.add_argument("--ascii", action="store_true", help="plain ASCII separators in groves and tensors")
    common.add_argument("--out", help="write output to this file instead of stdout")

    parser = argparse.ArgumentParser(prog="arithmetree", description="Planar trees, their lattice and arithmetic.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, *spec):
        p = sub.add_parser(name, parents=[common], help=help_text)
        for args, kwargs in spec:
            p.add_argument(*args, **kwargs)
        p.set_defaults(func=func)
        return p

    degree = (("--degree",), {"type": int, "required": True})
    one = (("tree",), {"help": "tree or name literal"})
    two = ((("a",), {}), (("b",), {}))
    kind = (("kind",), {"help": "< > . (or prec, succ, bullet)"})

    add("enumerate", cmd_enumerate, "list all trees of a degree", degree)
    add("encode", cmd_encode, "name of a tree", (("tree",), {}))
    add("decode", cmd_decode, "tree of a name", (("name",), {}))
    add("order", cmd_order, "Hasse diagram as DOT", degree)
    add("meet", cmd_meet, "greatest lower bound", *two)
    add("join", cmd_join, "least upper bound", *two)
    add("covers", cmd_covers, "elements covering a tree", one)
    add("moebius", cmd_moebius, "Möbius value from the minimum", one,
        (("--mode",), {"choices": ("closed", "brute"), "default": "closed"}),
        (("--degree",), {"type": int, "default": None}))
    add("atoms", cmd_atoms, "atoms of the lattice", degree)
    add("chain", cmd_chain, "maximal left-modular chain", degree)
    add("charpoly", cmd_charpoly, "characteristic polynomial", degree)
    add("star", cmd_star, "associative product ★", *two)
    add("op", cmd_op, "one of ≺ ≻ •", kind, *two)
    add("omega", cmd_omega, "universal expression of a tree", one)
    add("add", cmd_add, "grove addition ∔", *two)
    add("groveop", cmd_groveop, "one of ⊣ ⊢ ⊥ on groves", kind, *two)
    add("mul", cmd_mul, "grove multiplication ⋉", *two)
    add("decompose", cmd_decompose, "split a tree into the pair whose product contains it", one,
        (("n",), {"type": int}), (("m",), {"type": int}))
    add("coproduct", cmd_coproduct, "coproduct of a tree or sum", (("element",), {}))
    add("primcheck", cmd_primcheck, "is a tree or sum primitive", (("element",), {}))
    add("invariants", cmd_invariants, "number of mirror-symmetric trees", degree)
    add("verify", cmd_verify, "run property suites",
        (("--suite",), {"choices": tuple(SUITES) + ("all",), "default": "all"}),
        (("--max-degree",), {"type": int, "default": 4}))
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as e:
        sys.stderr.write(f"error: {e}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
