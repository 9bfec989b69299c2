"""Query algebra for extended generalized disjunctive paraconsistent relations."""
from .algebra import e_apply, e_complement, e_intersect, e_join, e_project, e_select, e_union, expand_mixed, recombine
from .core import eg_norm, eg_normrep, eg_reduce, eg_reducerep, eg_rep, is_normalized
from .errors import (
    BranchLimitError,
    EGDPError,
    EmptyTupleSetError,
    InconsistentError,
    NotNormalizedError,
    ParseError,
    SchemeError,
)
from .formula import And, Atom, Not, Or
from .gdp import g_apply, g_consistent, g_models, g_reduce, g_rep, g_subsumes
from .ops import COMPLEMENT, INTERSECT, JOIN, UNION, Op, project, select
from .para import p_apply
from .relation import (
    EGDPRelation,
    GDPRelation,
    MixedPair,
    ParaconsistentRelation,
    Scheme,
    TupleSet,
    canonical_form,
    definite_neg,
    definite_pos,
    join_tuples,
    project_tuple,
    tset,
    tuple_space,
)

__version__ = "0.1.0"

__all__ = [
    "And",
    "Atom",
    "BranchLimitError",
    "COMPLEMENT",
    "EGDPError",
    "EGDPRelation",
    "EmptyTupleSetError",
    "GDPRelation",
    "INTERSECT",
    "InconsistentError",
    "JOIN",
    "MixedPair",
    "Not",
    "NotNormalizedError",
    "Op",
    "Or",
    "ParaconsistentRelation",
    "ParseError",
    "Scheme",
    "SchemeError",
    "TupleSet",
    "UNION",
    "canonical_form",
    "definite_neg",
    "definite_pos",
    "e_apply",
    "e_complement",
    "e_intersect",
    "e_join",
    "e_project",
    "e_select",
    "e_union",
    "eg_norm",
    "eg_normrep",
    "eg_reduce",
    "eg_reducerep",
    "eg_rep",
    "expand_mixed",
    "g_apply",
    "g_consistent",
    "g_models",
    "g_reduce",
    "g_rep",
    "g_subsumes",
    "is_normalized",
    "join_tuples",
    "p_apply",
    "project",
    "project_tuple",
    "recombine",
    "select",
    "tset",
    "tuple_space",
]
