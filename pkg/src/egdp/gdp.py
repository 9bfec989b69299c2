"""Generalized disjunctive paraconsistent (GDP) relations.

Consistency, reduction and subsumption, the two semantic oracles
(:func:`g_rep` over choice functions, :func:`g_models` over classical
relations) and the GDP-level operators consumed by the EGDP algebra.

Disjunctions are inclusive: a positive tuple set holds when at least one
member is present, a negative one when at least one member is absent.
"""
from __future__ import annotations

import itertools
from typing import Iterable

from .errors import InconsistentError
from .formula import satisfying
from .ops import Op, as_op, check_arity
from .relation import (
    GDPRelation,
    ParaconsistentRelation,
    Projector,
    TupleSet,
    definite_neg,
    definite_pos,
    join_tuples,
)


def minimal_sets(sets: Iterable[frozenset]) -> frozenset:
    """Members of ``sets`` with no proper subset in ``sets``."""
    kept: list = []
    for w in sorted(set(sets), key=len):
        if not any(k < w for k in kept):
            kept.append(w)
    return frozenset(kept)


def _consistent(pos, neg) -> bool:
    dneg = frozenset(t for u in neg if len(u) == 1 for t in u)
    dpos = frozenset(t for w in pos if len(w) == 1 for t in w)
    return not any(w <= dneg for w in pos) and not any(u <= dpos for u in neg)


def g_consistent(r: GDPRelation) -> bool:
    return _consistent(r.pos, r.neg)


def _reduce_pass(pos, neg):
    dneg = frozenset(t for u in neg if len(u) == 1 for t in u)
    dpos = frozenset(t for w in pos if len(w) == 1 for t in w)
    new_pos = minimal_sets(TupleSet(w - dneg) for w in pos)
    new_neg = minimal_sets(TupleSet(u - dpos) for u in neg)
    return new_pos, new_neg


def g_reduce(r: GDPRelation) -> GDPRelation:
    """Remove subsumed tuple sets and tuples contradicted by definite facts.

    One pass strips definite negatives from positive tuple sets (and dually)
    and keeps the minimal sets.  Stripping can create new definite facts,
    so passes repeat until nothing changes.  Raises
    :class:`InconsistentError` if the input, or any pass, is inconsistent.
    """
    pos, neg = r.pos, r.neg
    while True:
        if not _consistent(pos, neg):
            raise InconsistentError(f"inconsistent GDP relation {r}")
        new_pos, new_neg = _reduce_pass(pos, neg)
        if new_pos == pos and new_neg == neg:
            break
        pos, neg = new_pos, new_neg
    if pos is r.pos and neg is r.neg:
        return r
    return GDPRelation(r.scheme, pos, neg)


def try_reduce(r: GDPRelation) -> GDPRelation | None:
    try:
        return g_reduce(r)
    except InconsistentError:
        return None


def g_subsumes(s: GDPRelation, r: GDPRelation) -> bool:
    """``s`` is a strictly smaller description than ``r``."""
    return s != r and s.pos <= r.pos and s.neg <= r.neg


def g_rep(r: GDPRelation) -> frozenset:
    """Definite relations obtained by picking one tuple from every tuple set.

    Choices that put the same tuple on both sides are dropped.
    """
    pos_sets = list(r.pos)
    neg_sets = list(r.neg)
    out = set()
    for pick_pos in itertools.product(*pos_sets):
        p = frozenset(pick_pos)
        for pick_neg in itertools.product(*neg_sets):
            n = frozenset(pick_neg)
            if not p & n:
                out.add(ParaconsistentRelation(r.scheme, p, n))
    return frozenset(out)


def is_model(r: GDPRelation, m: frozenset) -> bool:
    return all(w & m for w in r.pos) and all(not u <= m for u in r.neg)


def g_models(r: GDPRelation) -> frozenset:
    """Every classical relation over the scheme satisfying all facts of ``r``."""
    space = r.scheme.tuples
    out = []
    for bits in itertools.product((False, True), repeat=len(space)):
        m = frozenset(t for t, b in zip(space, bits) if b)
        if is_model(r, m):
            out.append(m)
    return frozenset(out)


def _all_extensions(u, source, out_scheme):
    proj = Projector(out_scheme, source)
    return TupleSet(t for t in out_scheme.tuples if proj(t) in u)


def g_apply(op: Op | str, *args: GDPRelation, reduce: bool = True) -> GDPRelation:
    """GDP-level union, intersect, complement, select, project or join.

    Every operator is sound: for models of the operands, the classical
    result is a model of the output.  Outputs are passed through
    :func:`g_reduce` unless ``reduce`` is false.
    """
    op = as_op(op)
    check_arity(op, args)
    for a in args:
        if not g_consistent(a):
            raise InconsistentError(f"{op} applied to an inconsistent operand")
    out = _apply(op, args)
    return g_reduce(out) if reduce else out


def _apply(op: Op, args) -> GDPRelation:
    r = args[0]
    s = r.scheme
    if op.kind == "union":
        o = args[1]
        dr, do = definite_neg(r), definite_neg(o)
        neg = {u for u in r.neg if u <= do} | {u for u in o.neg if u <= dr}
        return GDPRelation(s, r.pos | o.pos, neg)
    if op.kind == "intersect":
        o = args[1]
        pr, po = definite_pos(r), definite_pos(o)
        pos = {w for w in r.pos if w <= po} | {w for w in o.pos if w <= pr}
        return GDPRelation(s, pos, r.neg | o.neg)
    if op.kind == "complement":
        return GDPRelation(s, r.neg, r.pos)
    if op.kind == "select":
        good = satisfying(op.formula, s)
        pos = {w for w in r.pos if w <= good}
        neg = set(r.neg) | {TupleSet((t,)) for t in s.space - good}
        return GDPRelation(s, pos, neg)
    if op.kind == "project":
        proj = Projector(s, s.sub(op.attrs))
        pos = {TupleSet(proj(t) for t in w) for w in r.pos}
        dneg = definite_neg(r)
        covered: dict = {}
        for t in s.tuples:
            k = proj(t)
            covered[k] = covered.get(k, True) and t in dneg
        neg = {TupleSet((k,)) for k, v in covered.items() if v}
        return GDPRelation(proj.target, pos, neg)
    o = args[1]
    out = s.join(o.scheme)
    left = Projector(out, s)
    right = Projector(out, o.scheme)
    pos = set()
    for w1 in r.pos:
        for w2 in o.pos:
            joined = _join_tsets(w1, s, w2, o.scheme)
            if joined is not None:
                pos.add(joined)
    dr, do = definite_neg(r), definite_neg(o)
    neg = {TupleSet((t,)) for t in out.tuples if left(t) in dr or right(t) in do}
    neg |= {_all_extensions(u, s, out) for u in r.neg}
    neg |= {_all_extensions(u, o.scheme, out) for u in o.neg}
    return GDPRelation(out, pos, neg)


def _join_tsets(w1, s1, w2, s2):
    """``w1 ⋈ w2`` when every member of ``w1`` joins every member of ``w2``."""
    joined = []
    for t1 in w1:
        for t2 in w2:
            t = join_tuples(t1, s1, t2, s2)
            if t is None:
                return None
            joined.append(t)
    return TupleSet(joined)
