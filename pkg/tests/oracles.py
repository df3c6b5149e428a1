
from arithmetree import encode_name, parse_tree


def N(literal: str):
    """Name of a tree literal."""
    return encode_name(parse_tree(literal))


# Nicknames for the small trees, as tree literals.
A = "(oo)"
AB, M, BA = "((oo)o)", "(ooo)", "(o(oo))"
ABC, MB, AM, ACA = "(((oo)o)o)", "((ooo)o)", "((oo)oo)", "((oo)(oo))"
BAC, AMC, CAB, CM, CBA = "((o(oo))o)", "(o(oo)o)", "(o((oo)o))", "(o(ooo))", "(o(o(oo)))"
COR3 = "(oooo)"
MA = "(oo(oo))"

