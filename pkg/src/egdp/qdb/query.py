"""Query expressions: syntax tree, parser and scheme checking."""
from __future__ import annotations

from dataclasses import dataclass

from ..errors import ParseError, SchemeError
from ..formula import And, Atom, Formula, Not, Or
from ..relation import Scheme
from .lexer import Token, TokenStream

UNARY = ("minus", "norm", "reduce", "rep")
BINARY = ("union", "intersect", "join")
OPERATORS = UNARY + BINARY + ("select", "project")


@dataclass(frozen=True)
class Ref:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Apply:
    """``op(args)``, with a formula for select and attributes for project."""

    op: str
    args: tuple
    formula: Formula | None = None
    attrs: tuple | None = None

    def __str__(self):
        head = self.op
        if self.op == "select":
            head += f"[{self.formula}]"
        elif self.op == "project":
            head += f"[{','.join(self.attrs)}]"
        return f"{head}({','.join(map(str, self.args))})"


QueryExpr = Ref | Apply


def parse_query(text: str, db=None) -> QueryExpr:
    """Parse a query; with ``db``, also check names and schemes."""
    ts = TokenStream(text)
    expr = _query(ts)
    ts.end()
    if db is not None:
        check_query(expr, db)
    return expr


def _query(ts: TokenStream) -> QueryExpr:
    tok = ts.name("a relation name or an operator")
    word = tok.value
    if word in ("select", "project") and ts.at("["):
        ts.next()
        if word == "select":
            formula, attrs = _formula(ts), None
        else:
            formula, attrs = None, _attr_list(ts)
        ts.expect("]")
        ts.expect("(")
        args = _args(ts)
        return _build(tok, word, args, formula, attrs)
    if word in UNARY + BINARY and ts.at("("):
        ts.next()
        return _build(tok, word, _args(ts))
    return Ref(word)


def _args(ts: TokenStream) -> tuple:
    args = [_query(ts)]
    while not ts.accept(")"):
        if not ts.at(","):
            raise ts.fail("')' or ','")
        ts.next()
        args.append(_query(ts))
    return tuple(args)


def _build(tok: Token, op: str, args: tuple, formula=None, attrs=None) -> Apply:
    want = 2 if op in BINARY else 1
    if len(args) != want:
        raise ParseError(f"{op} takes {want} operand(s), got {len(args)}", tok.line, tok.column)
    return Apply(op, args, formula, attrs)


def _attr_list(ts: TokenStream) -> tuple:
    attrs = [ts.name("an attribute name").value]
    while ts.accept(","):
        attrs.append(ts.name("an attribute name").value)
    return tuple(attrs)


def parse_formula(text: str) -> Formula:
    ts = TokenStream(text)
    f = _formula(ts)
    ts.end()
    return f


def _formula(ts: TokenStream) -> Formula:
    left = _conj(ts)
    while ts.at("or") and not ts.at("=", 1):
        ts.next()
        left = Or(left, _conj(ts))
    return left


def _conj(ts: TokenStream) -> Formula:
    left = _neg(ts)
    while ts.at("and") and not ts.at("=", 1):
        ts.next()
        left = And(left, _neg(ts))
    return left


def _neg(ts: TokenStream) -> Formula:
    if ts.at("not") and not ts.at("=", 1):
        ts.next()
        return Not(_neg(ts))
    if ts.accept("("):
        f = _formula(ts)
        ts.expect(")")
        return f
    attr = ts.name("an attribute name, 'not' or '('").value
    ts.expect("=")
    return Atom(attr, ts.name("a constant").value)


def check_query(expr: QueryExpr, db, top: bool = True) -> Scheme | None:
    """The result scheme of ``expr`` (``None`` for ``rep``), or a :class:`SchemeError`."""
    if isinstance(expr, Ref):
        return db.relation(expr.name).scheme
    if expr.op == "rep" and not top:
        raise SchemeError("rep(...) yields a set of GDP relations and can only be the outermost operator")
    schemes = [check_query(a, db, top=False) for a in expr.args]
    s = schemes[0]
    if expr.op == "rep":
        return None
    if expr.op in ("union", "intersect"):
        if schemes[0] != schemes[1]:
            raise SchemeError(f"{expr.op} needs operands on the same scheme, got {schemes[0]} and {schemes[1]}")
        return s
    if expr.op == "join":
        return s.join(schemes[1])
    if expr.op == "select":
        expr.formula.validate(s)
        return s
    if expr.op == "project":
        if len(set(expr.attrs)) != len(expr.attrs):
            raise SchemeError(f"project lists an attribute twice: {','.join(expr.attrs)}")
        return s.sub(expr.attrs)
    return s
