"""Brute-force reference semantics, written independently of the engine.

A classical relation is a frozenset of tuples.  A positive tuple set holds
when it meets the relation, a negative one when some member is missing,
and a mixed pair when either of those holds for its two sides.
"""
import itertools


def classical_relations(tuples):
    tuples = list(tuples)
    for k in range(len(tuples) + 1):
        for combo in itertools.combinations(tuples, k):
            yield frozenset(combo)


def satisfies(m, pos=(), neg=(), mixed=()):
    if any(not (set(w) & m) for w in pos):
        return False
    if any(set(u) <= m for u in neg):
        return False
    return all((set(v) & m) or not (set(x) <= m) for v, x in mixed)


def models(r):
    """Models of a GDP or EGDP relation over its whole tuple space."""
    mixed = getattr(r, "mixed", ())
    space = [t for t in itertools.product(*r.scheme.domains)]
    return frozenset(m for m in classical_relations(space) if satisfies(m, r.pos, r.neg, mixed))


def models_of_all(rs):
    out = set()
    for r in rs:
        out |= models(r)
    return frozenset(out)


def choice_rep(pos, neg):
    """Pick one tuple from every tuple set; drop picks with a tuple on both sides."""
    out = set()
    for p in itertools.product(*[sorted(w) for w in pos]):
        for n in itertools.product(*[sorted(u) for u in neg]):
            if not set(p) & set(n):
                out.add((frozenset(p), frozenset(n)))
    return out


def classical(op, scheme_in, scheme_out, *ms):
    """The ordinary relational operators on classical relations."""
    kind = op.kind
    if kind == "union":
        return ms[0] | ms[1]
    if kind == "intersect":
        return ms[0] & ms[1]
    space = frozenset(itertools.product(*scheme_out.domains))
    if kind == "complement":
        return space - ms[0]
    if kind == "select":
        return frozenset(t for t in ms[0] if op.formula.holds(scheme_in[0], t))
    if kind == "project":
        pos = [scheme_in[0].attributes.index(a) for a in scheme_out.attributes]
        return frozenset(tuple(t[i] for i in pos) for t in ms[0])
    s1, s2 = scheme_in
    out = set()
    for t1 in ms[0]:
        for t2 in ms[1]:
            d1, d2 = dict(zip(s1.attributes, t1)), dict(zip(s2.attributes, t2))
            if all(d1[a] == d2[a] for a in d1.keys() & d2.keys()):
                merged = {**d1, **d2}
                out.add(tuple(merged[a] for a in scheme_out.attributes))
    return frozenset(out)
