"""A short walk through the library, from trees to the coproduct.

    python demos/tour.py
"""

from arithmetree import (
    Op,
    atoms,
    characteristic_polynomial,
    coproduct,
    corolla_grove,
    covers,
    decode_name,
    dend_add,
    dend_mul,
    encode_name,
    enumerate_trees,
    join,
    left_modular_chain,
    meet,
    moebius,
    parse_grove,
    parse_tree,
    primitive_combination,
    star,
    tri_op,
    universal_expression,
)


def tree(v):
    return "1" if v.is_unit else decode_name(v).literal


def name(literal):
    return encode_name(parse_tree(literal))


def section(title):
    print(f"\n== {title}")


section("trees of degree 2 and their names")
for t in enumerate_trees(2):
    print(f"  {t.literal:10} {encode_name(t)}")

section("the lattice of degree 3")
lo, hi = name("((o(oo))o)"), name("((oo)(oo))")
print("  meet:", tree(meet(lo, hi)), "  join:", tree(join(lo, hi)))
print("  covers of the bottom:", [tree(v) for v in covers(name("(((oo)o)o)"))])
print("  atoms:", [tree(v) for v in atoms(3)])
print("  Möbius values:", {t.literal: moebius(encode_name(t)) for t in enumerate_trees(2)})
print("  left-modular chain:", " < ".join(tree(v) for v in left_modular_chain(3)))
print("  characteristic polynomial:", characteristic_polynomial(3))

section("the three operations and their sum")
a = name("(oo)")
for kind in Op:
    print(f"  (oo) {kind.symbol} (oo) =", tri_op(kind, a, a).format(tree))
print("  (oo) ★ (ooo) =", star(a, name("(ooo)")).format(tree))
print("  universal expression of ((oo)(oo)):", universal_expression(name("((oo)(oo))")).pretty())

section("arithmetic on groves")
g = parse_grove("(oo)")
print("  A ∔ A =", dend_add(g, g))
print("  Corl_2 ⋉ Corl_3 =", dend_mul(corolla_grove(2), corolla_grove(3)))

section("coproduct")
for literal in ("(oo)", "(ooo)", "(o(oo))"):
    print(f"  Δ{literal} =", coproduct(name(literal)).format(lambda k: f"{tree(k[0])}⊗{tree(k[1])}"))
print("  a primitive combination:", primitive_combination(a, 1, (1, -1)).format(tree))
