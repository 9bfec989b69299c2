"""Relational operators on EGDP relations.

Every operator follows the same three steps: expand each operand's mixed
pairs into the consistent GDP branches, apply the GDP-level operator to
every branch (or pair of branches), and fold the distinct results back
into one EGDP relation with :func:`recombine`.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .core import DEFAULT_MAX_BRANCHES, branches, eg_norm, eg_reduce, is_normalized
from .errors import BranchLimitError, InconsistentError, NotNormalizedError, SchemeError
from .gdp import g_apply, g_consistent, minimal_sets, try_reduce
from .ops import INTERSECT, JOIN, UNION, Op, as_op, check_arity
from .ops import project as project_op
from .ops import select as select_op
from .relation import EGDPRelation, GDPRelation, MixedPair, TupleSet, sorted_relations

DEFAULT_MAX_TERMS = 200_000


@dataclass
class Trace:
    """What a dotted operator did, for ``--explain``."""

    op: str = ""
    branches: list = field(default_factory=list)
    images: list = field(default_factory=list)
    combined: EGDPRelation | None = None
    notes: list = field(default_factory=list)


def expand_mixed(r: EGDPRelation, max_branches: int = DEFAULT_MAX_BRANCHES) -> list:
    """The consistent side assignments of ``eg_reduce(r)``, each in ``g_reduce`` form.

    Branches whose reduction uncovers a contradiction are dropped, as are
    repeats.  Order is enumeration order: mixed pairs in canonical order,
    the positive side of each pair before its negative side.
    """
    if not is_normalized(r):
        raise NotNormalizedError(f"expand_mixed needs a normalized relation, got {r}")
    reduced = (try_reduce(g) for g in branches(eg_reduce(r), max_branches) if g_consistent(g))
    return list(dict.fromkeys(g for g in reduced if g is not None))


def _term_count(images) -> int:
    return math.prod(len(a.pos) + len(a.neg) for a in images)


def recombine(
    images: list,
    max_terms: int = DEFAULT_MAX_TERMS,
    trace: Trace | None = None,
) -> EGDPRelation:
    """Fold "one of these GDP relations holds" into a single EGDP relation.

    A clause is built from every way of choosing one fact from each member:
    all-positive choices union into a positive tuple set, all-negative
    choices into a negative one, and mixed choices into a mixed pair.  The
    result is then normalized and reduced.
    """
    if not images:
        raise InconsistentError("no consistent branch to recombine (totally inconsistent operand)")
    scheme = images[0].scheme
    if any(a.scheme != scheme for a in images):
        raise SchemeError("recombine needs members on one scheme")
    count = _term_count(images)
    if count > max_terms:
        raise BranchLimitError(count, max_terms, "recombination terms")
    for i, a in enumerate(images):
        if trace is not None and (not a.pos or not a.neg):
            side = "positive" if not a.pos else "negative"
            trace.notes.append(f"member {i + 1} has an empty {side} component, so the combined {side} component is empty")
    options = [[(True, w) for w in a.pos] + [(False, u) for u in a.neg] for a in images]
    pos, neg, mixed = set(), set(), set()
    for choice in itertools.product(*options):
        p = frozenset().union(*(s for side, s in choice if side))
        n = frozenset().union(*(s for side, s in choice if not side))
        if not n:
            pos.add(TupleSet(p))
        elif not p:
            neg.add(TupleSet(n))
        else:
            mixed.add(MixedPair(TupleSet(p), TupleSet(n)))
    combined = EGDPRelation(scheme, minimal_sets(pos), mixed, minimal_sets(neg))
    if trace is not None:
        trace.combined = combined
    if not is_normalized(combined):
        raise InconsistentError(f"recombination produced a non-normalized relation: {combined}")
    return eg_reduce(eg_norm(combined))


def _images(op: Op, operands: list, max_branches: int, trace: Trace | None) -> list:
    expanded = []
    for r in operands:
        e = expand_mixed(r, max_branches)
        if not e:
            raise InconsistentError(f"operand has no consistent branch: {r}")
        expanded.append(e)
    out = set()
    for combo in itertools.product(*expanded):
        try:
            out.add(g_apply(op, *combo))
        except InconsistentError:
            # the branch hides a contradiction that only reduction exposes
            continue
    images = sorted_relations(out)
    if trace is not None:
        trace.op = str(op)
        trace.branches = expanded
        trace.images = images
    return images


def e_apply(
    op: Op | str,
    *args: EGDPRelation,
    max_branches: int = DEFAULT_MAX_BRANCHES,
    max_terms: int = DEFAULT_MAX_TERMS,
    trace: Trace | None = None,
) -> EGDPRelation:
    """The dotted version of ``op`` on normalized EGDP relations."""
    op = as_op(op)
    check_arity(op, args)
    for a in args:
        if not is_normalized(a):
            raise NotNormalizedError(f"{op} needs normalized operands, got {a}")
    if op.kind == "complement":
        return e_complement(args[0])
    images = _images(op, list(args), max_branches, trace)
    out = recombine(images, max_terms, trace)
    assert is_normalized(out)
    return out


def e_union(r: EGDPRelation, s: EGDPRelation, **kw) -> EGDPRelation:
    return e_apply(UNION, r, s, **kw)


def e_intersect(r: EGDPRelation, s: EGDPRelation, **kw) -> EGDPRelation:
    return e_apply(INTERSECT, r, s, **kw)


def e_complement(r: EGDPRelation) -> EGDPRelation:
    if not is_normalized(r):
        raise NotNormalizedError(f"complement needs a normalized operand, got {r}")
    red = eg_reduce(r)
    return EGDPRelation(r.scheme, red.neg, {MixedPair(p.x, p.v) for p in red.mixed}, red.pos)


def e_select(formula, r: EGDPRelation, **kw) -> EGDPRelation:
    return e_apply(select_op(formula), r, **kw)


def e_project(attrs, r: EGDPRelation, **kw) -> EGDPRelation:
    return e_apply(project_op(attrs), r, **kw)


def e_join(r: EGDPRelation, s: EGDPRelation, **kw) -> EGDPRelation:
    return e_apply(JOIN, r, s, **kw)


def as_egdp(g: GDPRelation) -> EGDPRelation:
    return EGDPRelation(g.scheme, g.pos, (), g.neg)

