"""Text and JSON renderings of relations, in the database file syntax.

A relation body prints as ``pos: {a}, {b;c} mix: <{a};{b}> neg: {c}``,
which is exactly what the ``relation`` declaration of a database file
accepts, so parsing a formatted relation gives it back.
"""
from __future__ import annotations

import json
from typing import Iterable

from .relation import (
    EGDPRelation,
    GDPRelation,
    ParaconsistentRelation,
    Scheme,
    canonical_form,
    sorted_relations,
)


def format_tuple(t: tuple) -> str:
    return t[0] if len(t) == 1 else "(" + ",".join(t) + ")"


def format_tset(ts: Iterable[tuple]) -> str:
    return "{" + ";".join(format_tuple(t) for t in ts) + "}"


def _tsets(items) -> str:
    return ", ".join(format_tset(w) for w in items)


def format_egdp(r: EGDPRelation) -> str:
    pos, mixed, neg = canonical_form(r)
    mix = ", ".join(f"<{format_tset(v)};{format_tset(x)}>" for v, x in mixed)
    return _join("pos:", _tsets(pos), "mix:", mix, "neg:", _tsets(neg))


def format_gdp(r: GDPRelation) -> str:
    pos, neg = canonical_form(r)
    return _join("pos:", _tsets(pos), "neg:", _tsets(neg))


def format_para(r: ParaconsistentRelation) -> str:
    pos, neg = canonical_form(r)
    return _join("pos:", ", ".join(map(format_tuple, pos)), "neg:", ", ".join(map(format_tuple, neg)))


def _join(*parts: str) -> str:
    return " ".join(p for p in parts if p)


def format_relation_decl(name: str, scheme_name: str, r: EGDPRelation) -> str:
    return f"relation {name} on {scheme_name} {{ {format_egdp(r)} }}"


def format_scheme_decl(name: str, scheme: Scheme) -> str:
    attrs = ", ".join(f"{a}: {{{','.join(d)}}}" for a, d in zip(scheme.attributes, scheme.domains))
    return f"scheme {name}({attrs})"


def format_rep(rs: Iterable[GDPRelation]) -> str:
    """One GDP relation per line, in canonical order."""
    lines = [format_gdp(g) for g in sorted_relations(rs)]
    return "\n".join(lines) if lines else "(empty)"


def _tuple_json(t: tuple):
    return t[0] if len(t) == 1 else list(t)


def _tsets_json(items) -> list:
    return [[_tuple_json(t) for t in w] for w in items]


def egdp_to_json(r: EGDPRelation) -> dict:
    pos, mixed, neg = canonical_form(r)
    return {
        "attributes": list(r.scheme.attributes),
        "pos": _tsets_json(pos),
        "mix": [[_tsets_json([v])[0], _tsets_json([x])[0]] for v, x in mixed],
        "neg": _tsets_json(neg),
    }


def gdp_to_json(r: GDPRelation) -> dict:
    pos, neg = canonical_form(r)
    return {"pos": _tsets_json(pos), "neg": _tsets_json(neg)}


def dumps(doc) -> str:
    """Byte-stable JSON: sorted keys, fixed separators."""
    return json.dumps(doc, sort_keys=True, ensure_ascii=False, indent=2)
