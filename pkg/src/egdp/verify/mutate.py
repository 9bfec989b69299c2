"""Deliberately unsound operator variants, used to show the checks have teeth."""
from __future__ import annotations

from typing import Callable

from ..errors import InconsistentError
from ..gdp import _apply, g_apply, g_consistent, g_reduce
from ..ops import Op, as_op, check_arity
from ..relation import GDPRelation, Projector, TupleSet, definite_neg


def _union_all_negatives(op: Op, args) -> GDPRelation:
    # copies every negative fact, even ones the other operand may contradict
    r, s = args
    return GDPRelation(r.scheme, r.pos | s.pos, r.neg | s.neg)


def _intersect_all_positives(op: Op, args) -> GDPRelation:
    r, s = args
    return GDPRelation(r.scheme, r.pos | s.pos, r.neg | s.neg)


def _project_any_negative(op: Op, args) -> GDPRelation:
    # a projected tuple is declared absent as soon as one extension is
    (r,) = args
    out = _apply(op, args)
    proj = Projector(r.scheme, r.scheme.sub(op.attrs))
    neg = set(out.neg) | {TupleSet((proj(t),)) for t in definite_neg(r)}
    return GDPRelation(out.scheme, out.pos, neg)


MUTATIONS: dict[str, tuple[str, Callable]] = {
    "union_all_negatives": ("union", _union_all_negatives),
    "intersect_all_positives": ("intersect", _intersect_all_positives),
    "project_any_negative": ("project", _project_any_negative),
}


def mutated_apply(name: str) -> Callable:
    """A drop-in for :func:`g_apply` with one operator replaced."""
    if name not in MUTATIONS:
        raise ValueError(f"unknown mutation {name!r}; choose from {', '.join(MUTATIONS)}")
    kind, body = MUTATIONS[name]

    def apply(op: Op | str, *args: GDPRelation, reduce: bool = True) -> GDPRelation:
        op = as_op(op)
        if op.kind != kind:
            return g_apply(op, *args, reduce=reduce)
        check_arity(op, args)
        if not all(g_consistent(a) for a in args):
            raise InconsistentError(f"{op} applied to an inconsistent operand")
        out = body(op, args)
        return g_reduce(out) if reduce else out

    apply.__name__ = f"g_apply[{name}]"
    return apply


def mutated_kind(name: str) -> str:
    return MUTATIONS[name][0]
