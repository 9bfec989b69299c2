"""Inconsistency removal, redundancy removal and information content of EGDP relations."""
from __future__ import annotations

import itertools
from typing import Iterable

from . import kernels
from .errors import BranchLimitError, NotNormalizedError
from .gdp import g_consistent, minimal_sets, try_reduce
from .relation import EGDPRelation, GDPRelation, MixedPair, TupleSet, definite_neg, definite_pos, pair_key

DEFAULT_MAX_BRANCHES = 4096


def _singletons(ts) -> set:
    return {TupleSet((t,)) for t in ts}


def conflicts(r: EGDPRelation) -> tuple[frozenset, frozenset, frozenset]:
    """The positive sets, negative sets and mixed pairs caught in a conflict."""
    sn, sp = definite_neg(r), definite_pos(r)
    bad_pos = frozenset(w for w in r.pos if w <= sn)
    bad_neg = frozenset(u for u in r.neg if u <= sp)
    bad_mix = frozenset(p for p in r.mixed if p.v <= sn and p.x <= sp)
    return bad_pos, bad_neg, bad_mix


def is_normalized(r: EGDPRelation) -> bool:
    return not any(conflicts(r))


def eg_norm(r: EGDPRelation) -> EGDPRelation:
    """Drop every conflict together with the definite facts it collides with.

    A positive set covered by definite negatives is removed along with the
    singletons of its tuples on the negative side, and dually.  A mixed
    pair whose two sides are both contradicted is removed along with the
    matching singletons on both sides.  Removal only shrinks the definite
    sets, so one pass leaves no conflict behind.
    """
    bad_pos, bad_neg, bad_mix = conflicts(r)
    if not (bad_pos or bad_neg or bad_mix):
        return r
    drop_pos = set(bad_pos)
    drop_neg = set(bad_neg)
    for u in bad_neg:
        drop_pos |= _singletons(u)
    for w in bad_pos:
        drop_neg |= _singletons(w)
    for p in bad_mix:
        drop_pos |= _singletons(p.x)
        drop_neg |= _singletons(p.v)
    out = EGDPRelation(r.scheme, r.pos - drop_pos, r.mixed - bad_mix, r.neg - drop_neg)
    assert is_normalized(out)
    return out


def _reduce_pass(r: EGDPRelation) -> EGDPRelation:
    dneg, dpos = definite_neg(r), definite_pos(r)
    pos = [w - dneg for w in r.pos]
    neg = [u - dpos for u in r.neg]
    stripped = [(p, p.v - dneg, p.x - dpos) for p in r.mixed]
    mixed = []
    for p, v, x in stripped:
        if not x:
            pos.append(v)
        elif not v:
            neg.append(x)
        elif any(w <= p.v for w in r.pos) or any(u <= p.x for u in r.neg):
            continue
        elif any(v1 < v and x1 < x for _, v1, x1 in stripped):
            continue
        else:
            mixed.append(MixedPair(TupleSet(v), TupleSet(x)))
    return EGDPRelation(
        r.scheme,
        minimal_sets(TupleSet(w) for w in pos),
        mixed,
        minimal_sets(TupleSet(u) for u in neg),
    )


def eg_reduce(r: EGDPRelation) -> EGDPRelation:
    """Remove the eight kinds of redundancy from a normalized relation.

    Each pass strips definite facts out of disjunctions, collapses mixed
    pairs with an emptied side into a plain positive or negative set, drops
    mixed pairs subsumed by a plain set or by a smaller pair, and keeps only
    minimal tuple sets.  Passes repeat until the relation stops changing.

    A pass can turn a hidden contradiction into an explicit conflict (the
    relation then has no consistent information content at all).  In that
    case the last normalized stage is returned, so the output is always
    normalized and a fixed point of this function.
    """
    if not is_normalized(r):
        raise NotNormalizedError(f"eg_reduce needs a normalized relation, got {r}")
    while True:
        nxt = _reduce_pass(r)
        if nxt == r or not is_normalized(nxt):
            return r
        r = nxt


def eg_normrep(relations: Iterable[GDPRelation]) -> frozenset:
    return frozenset(r for r in relations if g_consistent(r))


def eg_reducerep(relations: Iterable[GDPRelation]) -> frozenset:
    """Keep the members not subsumed by another member."""
    rel = list(set(relations))
    if len(rel) < 2:
        return frozenset(rel)
    keep = kernels.unsubsumed(rel)
    return frozenset(r for r, k in zip(rel, keep) if k)


def branches(r: EGDPRelation, max_branches: int = DEFAULT_MAX_BRANCHES) -> list:
    """All ``2^k`` side assignments of the mixed pairs, as raw GDP relations.

    Pairs are taken in canonical order, the first pair's side varying slowest.
    """
    pairs = sorted(r.mixed, key=lambda p: pair_key(r.scheme, p))
    k = len(pairs)
    if 2 ** k > max_branches:
        raise BranchLimitError(2 ** k, max_branches, f"branches for {k} mixed pairs")
    out = []
    for sides in itertools.product((0, 1), repeat=k):
        pos = set(r.pos)
        neg = set(r.neg)
        for p, side in zip(pairs, sides):
            if side:
                neg.add(p.x)
            else:
                pos.add(p.v)
        out.append(GDPRelation(r.scheme, pos, neg))
    return out


def canonical_members(relations: Iterable[GDPRelation]) -> frozenset:
    """``g_reduce`` each member, dropping those whose reduction is contradictory."""
    out = set()
    for g in relations:
        red = try_reduce(g)
        if red is not None:
            out.add(red)
    return frozenset(out)


def eg_rep(r: EGDPRelation, max_branches: int = DEFAULT_MAX_BRANCHES) -> frozenset:
    """Information content: the minimal consistent GDP relations ``r`` stands for.

    Branches are filtered for consistency and subsumption, each survivor is
    put in ``g_reduce`` form, and the subsumption filter runs once more on
    the reduced members.
    """
    if not is_normalized(r):
        raise NotNormalizedError(f"eg_rep needs a normalized relation, got {r}")
    return canonical_rep(branches(r, max_branches))


def canonical_rep(relations: Iterable[GDPRelation]) -> frozenset:
    """The comparison form used for every set of GDP relations."""
    return eg_reducerep(canonical_members(eg_reducerep(eg_normrep(relations))))
