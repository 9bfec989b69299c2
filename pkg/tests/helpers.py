"""Shared schemes and shorthand constructors for the tests."""
from egdp.qdb.database import parse_relation
from egdp.relation import GDPRelation, Scheme

S1 = Scheme(("A",), (("a", "b", "c"),))
S2 = Scheme(("A", "B"), (("a", "b"), ("p", "q")))
SA = Scheme(("A",), (("a", "b"),))


def E(body: str, scheme: Scheme = S1):
    """An EGDP relation from its text form, exactly as written."""
    return parse_relation(body, scheme)


def G(pos: str = "", neg: str = "", scheme: Scheme = S1) -> GDPRelation:
    r = parse_relation(f"pos: {pos} mix: neg: {neg}", scheme)
    return GDPRelation(scheme, r.pos, r.neg)


def T(*names: str) -> frozenset:
    """A set of single-attribute tuples."""
    return frozenset((n,) for n in names)
