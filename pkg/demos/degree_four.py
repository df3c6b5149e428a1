"""Where the coordinate order stops matching the tree structure.

Up to degree 3 the order on names, the moves, the mirror symmetry and the
order intervals all agree with the recursive operations.  In degree 4 they
part ways; this script prints one witness for each disagreement.

    python demos/degree_four.py
"""

from arithmetree import (
    SearchFailure,
    decode_name,
    encode_name,
    involute_name,
    leq_name,
    left_modular_chain,
    moves_closure,
    order_interval,
    parse_tree,
    poset,
    star_names,
)


def tree(v):
    return decode_name(v).literal


def name(literal):
    return encode_name(parse_tree(literal))


P = poset(4)
lm = [tree(v) for i, v in enumerate(P.elements) if P.left_modular(i)]
print(f"left-modular elements of degree 4: {len(lm)} of {len(P)}")
for t in lm:
    print("   ", t)
try:
    left_modular_chain(4)
except SearchFailure as e:
    print("chain search:", e)

v = name("(oo((oo)o))")
target = name("(o(o(oo)o))")
print(f"\n{tree(v)} <= {tree(target)}: {leq_name(v, target)}, "
      f"reachable by moves: {target in moves_closure(v)}")

x, y = name("((o((oo)o))o)"), name("(o(oo)(oo))")
print(f"\n{tree(x)} <= {tree(y)}: {leq_name(x, y)}")
print(f"mirrors {tree(involute_name(y))} <= {tree(involute_name(x))}: "
      f"{leq_name(involute_name(y), involute_name(x))}")

a, w = name("(oo)"), name("(o((oo)o))")
extra = set(order_interval(a, w)) - set(star_names(a, w))
print(f"\n(oo) ★ {tree(w)} has {len(star_names(a, w))} terms; "
      f"the order interval also holds {[tree(u) for u in extra]}")
