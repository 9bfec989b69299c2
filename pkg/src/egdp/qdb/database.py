"""Database files: scheme and relation declarations."""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from ..core import eg_norm
from ..errors import SchemeError
from ..relation import EGDPRelation, MixedPair, Scheme, TupleSet
from ..textformat import format_relation_decl, format_scheme_decl
from .lexer import TokenStream


@dataclass
class Database:
    """Named schemes and named relations, each relation tied to a scheme name.

    Relations are stored normalized; ``warnings`` records every relation
    that ``eg_norm`` had to change on load.
    """

    schemes: dict = field(default_factory=dict)
    relations: dict = field(default_factory=dict)
    relation_schemes: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list)

    def add_scheme(self, name: str, scheme: Scheme) -> None:
        if name in self.schemes:
            raise SchemeError(f"scheme {name} is declared twice")
        self.schemes[name] = scheme

    def add_relation(self, name: str, scheme_name: str, r: EGDPRelation) -> None:
        if name in self.relations:
            raise SchemeError(f"relation {name} is declared twice")
        norm = eg_norm(r)
        if norm != r:
            self.warnings.append(f"relation {name} was not normalized; loaded as {norm}")
        self.relations[name] = norm
        self.relation_schemes[name] = scheme_name

    def relation(self, name: str) -> EGDPRelation:
        try:
            return self.relations[name]
        except KeyError:
            raise SchemeError(f"unknown relation {name}") from None

    def scheme(self, name: str) -> Scheme:
        try:
            return self.schemes[name]
        except KeyError:
            raise SchemeError(f"unknown scheme {name}") from None

    def format(self) -> str:
        lines = [format_scheme_decl(n, s) for n, s in self.schemes.items()]
        lines += [format_relation_decl(n, self.relation_schemes[n], r) for n, r in self.relations.items()]
        return "\n".join(lines) + "\n"


def parse_database(text: str) -> Database:
    """Parse a database file.

    Syntax errors raise :class:`~egdp.errors.ParseError`; unknown schemes,
    constants outside a domain and wrong tuple widths raise
    :class:`~egdp.errors.SchemeError`.
    """
    ts = TokenStream(text)
    db = Database()
    if not ts.at("scheme"):
        raise ts.fail("'scheme'")
    while ts.at("scheme"):
        name, scheme = _scheme_decl(ts)
        db.add_scheme(name, scheme)
    while ts.at("relation"):
        _relation_decl(ts, db)
    if ts.peek().kind != "end":
        raise ts.fail("'scheme' or 'relation'" if not db.relations else "'relation' or end of input")
    return db


def load_database(path: str | Path) -> Database:
    return parse_database(Path(path).read_text(encoding="utf-8"))


def parse_relation(text: str, scheme: Scheme) -> EGDPRelation:
    """Parse a relation body such as ``pos: {a} mix: <{b};{c}> neg:``, as written.

    Unlike a database load, the relation is not normalized.
    """
    ts = TokenStream(text)
    r = _body(ts, scheme)
    ts.end()
    return r


def _scheme_decl(ts: TokenStream) -> tuple[str, Scheme]:
    ts.expect("scheme")
    name = ts.name("a scheme name").value
    ts.expect("(")
    attrs, doms = [], []
    while True:
        attrs.append(ts.name("an attribute name").value)
        ts.expect(":")
        ts.expect("{")
        dom = [ts.name("a constant").value]
        while ts.accept(","):
            dom.append(ts.name("a constant").value)
        ts.expect("}")
        doms.append(tuple(dom))
        if ts.accept(")"):
            break
        if not ts.at(","):
            raise ts.fail("',' or ')'")
        ts.next()
    return name, Scheme(tuple(attrs), tuple(doms))


def _relation_decl(ts: TokenStream, db: Database) -> None:
    ts.expect("relation")
    name = ts.name("a relation name").value
    ts.expect("on")
    tok = ts.name("a scheme name")
    scheme = db.scheme(tok.value)
    ts.expect("{")
    r = _body(ts, scheme)
    ts.expect("}")
    db.add_relation(name, tok.value, r)


def _body(ts: TokenStream, scheme: Scheme) -> EGDPRelation:
    _label(ts, "pos")
    pos = _tsets(ts, scheme)
    _label(ts, "mix")
    mixed = _pairs(ts, scheme)
    _label(ts, "neg")
    neg = _tsets(ts, scheme)
    return EGDPRelation(scheme, pos, mixed, neg)


def _label(ts: TokenStream, word: str) -> None:
    if not (ts.at(word) and ts.at(":", 1)):
        raise ts.fail(f"'{word}:'")
    ts.next()
    ts.next()


def _tsets(ts: TokenStream, scheme: Scheme) -> list:
    out = []
    if not ts.at("{"):
        return out
    out.append(_tset(ts, scheme))
    while ts.accept(","):
        out.append(_tset(ts, scheme))
    return out


def _pairs(ts: TokenStream, scheme: Scheme) -> list:
    out = []
    if not ts.at("<"):
        return out
    out.append(_pair(ts, scheme))
    while ts.accept(","):
        if not ts.at("<"):
            raise ts.fail("'<'")
        out.append(_pair(ts, scheme))
    return out


def _pair(ts: TokenStream, scheme: Scheme) -> MixedPair:
    ts.expect("<")
    v = _tset(ts, scheme)
    ts.expect(";")
    x = _tset(ts, scheme)
    ts.expect(">")
    return MixedPair(v, x)


def _tset(ts: TokenStream, scheme: Scheme) -> TupleSet:
    if not ts.at("{"):
        raise ts.fail("'{'")
    ts.next()
    members = [_tuple(ts, scheme)]
    while ts.accept(";"):
        members.append(_tuple(ts, scheme))
    if not ts.at("}"):
        raise ts.fail("';' or '}'")
    ts.next()
    return TupleSet(members)


def _tuple(ts: TokenStream, scheme: Scheme) -> tuple:
    tok = ts.peek()
    if ts.accept("("):
        values = [ts.name("a constant").value]
        while ts.accept(","):
            values.append(ts.name("a constant").value)
        if not ts.at(")"):
            raise ts.fail("',' or ')'")
        ts.next()
    else:
        values = [ts.name("a constant or '('").value]
    t = tuple(values)
    if len(t) != len(scheme.attributes):
        raise SchemeError(
            f"line {tok.line}, column {tok.column}: tuple {'(' + ','.join(t) + ')'} has {len(t)} "
            f"value(s) but the scheme has {len(scheme.attributes)} attribute(s)"
        )
    try:
        return scheme.check_tuple(t)
    except SchemeError as exc:
        raise SchemeError(f"line {tok.line}, column {tok.column}: {exc}") from None
