"""Evaluate query expressions against a database."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..algebra import Trace, e_apply, e_complement
from ..core import DEFAULT_MAX_BRANCHES, eg_norm, eg_reduce, eg_rep
from ..ops import INTERSECT, JOIN, UNION, project, select
from ..relation import EGDPRelation, sorted_relations
from ..textformat import dumps, egdp_to_json, format_egdp, format_gdp, format_rep, gdp_to_json
from .query import Apply, QueryExpr, Ref, check_query

_DOTTED = {"union": UNION, "intersect": INTERSECT, "join": JOIN}


@dataclass
class Result:
    """A relation, or (for ``rep``) the list of GDP relations it stands for."""

    relation: EGDPRelation | None = None
    rep: list | None = None
    traces: list = field(default_factory=list)

    def text(self) -> str:
        if self.rep is not None:
            return format_rep(self.rep)
        return format_egdp(self.relation)

    def json_doc(self) -> dict:
        if self.rep is not None:
            return {"rep": [gdp_to_json(g) for g in self.rep]}
        return egdp_to_json(self.relation)

    def explain_text(self) -> str:
        return "\n".join(_explain_block(label, t) for label, t in self.traces)

    def explain_json(self) -> list:
        return [_explain_doc(label, t) for label, t in self.traces]

    def render(self, fmt: str = "text", explain: bool = False) -> str:
        if fmt == "json":
            doc = self.json_doc()
            if explain:
                doc = {"result": doc, "explain": self.explain_json()}
            return dumps(doc)
        if explain and self.traces:
            return self.explain_text() + "\n-- result\n" + self.text()
        return self.text()


def evaluate(expr: QueryExpr, db, max_branches: int = DEFAULT_MAX_BRANCHES) -> Result:
    check_query(expr, db)
    traces: list = []
    if isinstance(expr, Apply) and expr.op == "rep":
        inner = _eval(expr.args[0], db, max_branches, traces)
        return Result(rep=sorted_relations(eg_rep(inner, max_branches)), traces=traces)
    return Result(relation=_eval(expr, db, max_branches, traces), traces=traces)


def _eval(expr: QueryExpr, db, mb: int, traces: list) -> EGDPRelation:
    if isinstance(expr, Ref):
        return db.relation(expr.name)
    args = [_eval(a, db, mb, traces) for a in expr.args]
    if expr.op == "norm":
        return eg_norm(args[0])
    if expr.op == "reduce":
        return eg_reduce(args[0])
    if expr.op == "minus":
        trace = Trace(op="minus", notes=["components and mixed pair sides swapped after reduction"])
        traces.append((str(expr), trace))
        return e_complement(args[0])
    if expr.op == "select":
        op = select(expr.formula)
    elif expr.op == "project":
        op = project(expr.attrs)
    else:
        op = _DOTTED[expr.op]
    trace = Trace()
    traces.append((str(expr), trace))
    return e_apply(op, *args, max_branches=mb, trace=trace)


def _explain_block(label: str, t: Trace) -> str:
    lines = [f"-- {label}"]
    for name, branch_set in zip("EF", t.branches):
        lines.append(f"{name}:")
        lines += [f"  {format_gdp(g)}" for g in branch_set] or ["  (empty)"]
    if t.branches:
        lines.append("A:")
        lines += [f"  {format_gdp(g)}" for g in t.images] or ["  (empty)"]
    if t.combined is not None:
        lines.append(f"T: {format_egdp(t.combined)}")
    lines += [f"note: {n}" for n in t.notes]
    return "\n".join(lines)


def _explain_doc(label: str, t: Trace) -> dict:
    doc = {"query": label, "notes": list(t.notes)}
    for name, branch_set in zip("EF", t.branches):
        doc[name] = [gdp_to_json(g) for g in branch_set]
    if t.branches:
        doc["A"] = [gdp_to_json(g) for g in t.images]
    if t.combined is not None:
        doc["T"] = egdp_to_json(t.combined)
    return doc
