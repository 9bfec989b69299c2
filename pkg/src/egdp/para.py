"""Algebra on definite paraconsistent relations.

This is the bottom layer: each operator follows the "t is in the result
iff ..." truth conditions for both the positive and the negative part.
"""
from __future__ import annotations

from .formula import satisfying
from .ops import Op, as_op, check_arity
from .relation import ParaconsistentRelation, Projector


def p_apply(op: Op | str, *args: ParaconsistentRelation) -> ParaconsistentRelation:
    op = as_op(op)
    check_arity(op, args)
    r = args[0]
    s = r.scheme
    if op.kind == "union":
        o = args[1]
        return ParaconsistentRelation(s, r.pos | o.pos, r.neg & o.neg)
    if op.kind == "intersect":
        o = args[1]
        return ParaconsistentRelation(s, r.pos & o.pos, r.neg | o.neg)
    if op.kind == "complement":
        return ParaconsistentRelation(s, r.neg, r.pos)
    if op.kind == "select":
        good = satisfying(op.formula, s)
        return ParaconsistentRelation(s, r.pos & good, r.neg | (s.space - good))
    if op.kind == "project":
        proj = Projector(s, s.sub(op.attrs))
        pos = {proj(t) for t in r.pos}
        # t' is definitely absent iff every extension of t' is
        ext_all_neg: dict = {}
        for t in s.tuples:
            key = proj(t)
            ext_all_neg[key] = ext_all_neg.get(key, True) and t in r.neg
        neg = {k for k, v in ext_all_neg.items() if v}
        return ParaconsistentRelation(proj.target, pos, neg)
    other = args[1]
    out = s.join(other.scheme)
    left = Projector(out, s)
    right = Projector(out, other.scheme)
    pos = {t for t in out.tuples if left(t) in r.pos and right(t) in other.pos}
    neg = {t for t in out.tuples if left(t) in r.neg or right(t) in other.neg}
    return ParaconsistentRelation(out, pos, neg)
