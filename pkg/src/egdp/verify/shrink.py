"""Greedy counterexample minimization."""
from __future__ import annotations

from typing import Callable, Iterator, Sequence

from ..relation import EGDPRelation, GDPRelation, MixedPair, TupleSet, pair_key, tset_key


def _smaller_sets(scheme, sets: frozenset) -> Iterator[frozenset]:
    ordered = sorted(sets, key=lambda w: tset_key(scheme, w))
    for w in ordered:
        yield sets - {w}
    for w in ordered:
        if len(w) > 1:
            for t in sorted(w, key=scheme.tuple_key):
                yield (sets - {w}) | {TupleSet(w - {t})}


def _smaller_pairs(scheme, pairs: frozenset) -> Iterator[frozenset]:
    ordered = sorted(pairs, key=lambda p: pair_key(scheme, p))
    for p in ordered:
        yield pairs - {p}
    for p in ordered:
        for side in (0, 1):
            w = p[side]
            if len(w) > 1:
                for t in sorted(w, key=scheme.tuple_key):
                    smaller = TupleSet(w - {t})
                    q = MixedPair(smaller, p.x) if side == 0 else MixedPair(p.v, smaller)
                    yield (pairs - {p}) | {q}


def smaller(r):
    """Every relation obtained by deleting one tuple set, mixed pair or tuple."""
    s = r.scheme
    if isinstance(r, EGDPRelation):
        for pos in _smaller_sets(s, r.pos):
            yield EGDPRelation(s, pos, r.mixed, r.neg)
        for mixed in _smaller_pairs(s, r.mixed):
            yield EGDPRelation(s, r.pos, mixed, r.neg)
        for neg in _smaller_sets(s, r.neg):
            yield EGDPRelation(s, r.pos, r.mixed, neg)
    else:
        for pos in _smaller_sets(s, r.pos):
            yield GDPRelation(s, pos, r.neg)
        for neg in _smaller_sets(s, r.neg):
            yield GDPRelation(s, r.pos, neg)


def shrink(
    instance: Sequence,
    fails: Callable[[tuple], bool],
    valid: Callable[[tuple], bool] = lambda inst: True,
    max_steps: int = 10_000,
) -> tuple:
    """Remove parts of ``instance`` while it stays valid and still fails.

    The result is 1-minimal: no single tuple set, mixed pair or tuple can be
    removed from any of its relations without losing the failure.
    """
    current = tuple(instance)
    for _ in range(max_steps):
        for i, r in enumerate(current):
            for cand in smaller(r):
                inst = current[:i] + (cand,) + current[i + 1:]
                if valid(inst) and fails(inst):
                    current = inst
                    break
            else:
                continue
            break
        else:
            return current
    return current


def size(instance: Sequence) -> int:
    """Tuple sets in an instance, counting both sides of a mixed pair."""
    total = 0
    for r in instance:
        total += len(r.pos) + len(r.neg)
        if isinstance(r, EGDPRelation):
            total += 2 * len(r.mixed)
    return total
