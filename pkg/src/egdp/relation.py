"""Schemes, tuples, tuple sets and the three relation value types.

A tuple is a plain Python tuple of constants listed in the order of its
scheme's attributes.  A :class:`TupleSet` is a nonempty frozenset of such
tuples and is read disjunctively: at least one of its members holds.

Relations keep their components as frozensets, so two relations built from
the same components in a different order compare (and hash) equal.  The
ordered view used for printing and serialization is :func:`canonical_form`.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple, Sequence, Union

from .errors import EmptyTupleSetError, SchemeError

Tuple = tuple


@dataclass(frozen=True)
class Scheme:
    """An ordered list of attributes, each with a finite ordered domain."""

    attributes: tuple[str, ...]
    domains: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        attrs = tuple(self.attributes)
        doms = tuple(tuple(d) for d in self.domains)
        object.__setattr__(self, "attributes", attrs)
        object.__setattr__(self, "domains", doms)
        if not attrs:
            raise SchemeError("a scheme needs at least one attribute")
        if len(set(attrs)) != len(attrs):
            raise SchemeError(f"duplicate attribute names in {attrs}")
        if len(doms) != len(attrs):
            raise SchemeError("one domain is required per attribute")
        for a, d in zip(attrs, doms):
            if not d:
                raise SchemeError(f"domain of {a} is empty")
            if len(set(d)) != len(d):
                raise SchemeError(f"domain of {a} lists a constant twice")

    @classmethod
    def of(cls, mapping: Mapping[str, Sequence[str]] | None = None, **domains: Sequence[str]) -> "Scheme":
        """``Scheme.of(A="abc")`` or ``Scheme.of({"A": ["a", "b"]})``."""
        items = dict(mapping or {}, **domains)
        return cls(tuple(items), tuple(tuple(v) for v in items.values()))

    def __str__(self):
        parts = (f"{a}: {{{', '.join(d)}}}" for a, d in zip(self.attributes, self.domains))
        return "(" + ", ".join(parts) + ")"

    def domain(self, attr: str) -> tuple[str, ...]:
        return self.domains[self.position(attr)]

    def position(self, attr: str) -> int:
        try:
            return self._positions[attr]
        except KeyError:
            raise SchemeError(f"unknown attribute {attr!r} (scheme has {', '.join(self.attributes)})") from None

    @cached_property
    def _positions(self) -> dict[str, int]:
        return {a: i for i, a in enumerate(self.attributes)}

    @cached_property
    def _orders(self) -> tuple[dict[str, int], ...]:
        return tuple({c: i for i, c in enumerate(d)} for d in self.domains)

    @cached_property
    def tuples(self) -> tuple[Tuple, ...]:
        """Every tuple on the scheme, in canonical order."""
        return tuple(itertools.product(*self.domains))

    @cached_property
    def space(self) -> frozenset:
        return frozenset(self.tuples)

    @cached_property
    def index(self) -> dict[Tuple, int]:
        """Position of each tuple in :attr:`tuples`; used for bitmask encodings."""
        return {t: i for i, t in enumerate(self.tuples)}

    def tuple_key(self, t: Tuple) -> tuple[int, ...]:
        return tuple(order[c] for order, c in zip(self._orders, t))

    def check_tuple(self, t: Tuple) -> Tuple:
        if not isinstance(t, tuple) or len(t) != len(self.attributes):
            raise SchemeError(f"{t!r} is not a tuple on {self}")
        for a, order, c in zip(self.attributes, self._orders, t):
            if c not in order:
                raise SchemeError(f"constant {c!r} is not in dom({a})")
        return t

    def sub(self, attrs: Iterable[str]) -> "Scheme":
        """The sub-scheme on ``attrs``, kept in this scheme's attribute order."""
        wanted = set(attrs)
        for a in wanted:
            self.position(a)
        if not wanted:
            raise SchemeError("cannot project onto an empty attribute list")
        keep = [i for i, a in enumerate(self.attributes) if a in wanted]
        return Scheme(tuple(self.attributes[i] for i in keep), tuple(self.domains[i] for i in keep))

    def join(self, other: "Scheme") -> "Scheme":
        """Scheme of a natural join: this scheme's attributes, then the new ones of ``other``."""
        attrs = list(self.attributes)
        doms = list(self.domains)
        for a, d in zip(other.attributes, other.domains):
            if a in self._positions:
                if self.domain(a) != d:
                    raise SchemeError(f"attribute {a} has different domains in the two schemes")
            else:
                attrs.append(a)
                doms.append(d)
        return Scheme(tuple(attrs), tuple(doms))


class TupleSet(frozenset):
    """A nonempty set of tuples on one scheme, read as a disjunction."""

    __slots__ = ()

    def __new__(cls, tuples: Iterable[Tuple] = ()):
        self = super().__new__(cls, tuples)
        if not self:
            raise EmptyTupleSetError("tuple sets must have at least one member")
        return self

    def __repr__(self):
        return "TupleSet({" + ", ".join(map(repr, sorted(self, key=repr))) + "})"


def tset(*tuples: Tuple) -> TupleSet:
    return TupleSet(tuples)


def as_tset(w: Iterable[Tuple]) -> TupleSet:
    return w if type(w) is TupleSet else TupleSet(w)


class MixedPair(NamedTuple):
    """``<v ; x>``: some tuple of ``v`` is present or some tuple of ``x`` is absent."""

    v: TupleSet
    x: TupleSet


def _tuples(scheme: Scheme, items: Iterable[Tuple]) -> frozenset:
    out = frozenset(items)
    if not out <= scheme.space:
        bad = next(t for t in out if t not in scheme.space)
        scheme.check_tuple(bad)
    return out


def _tsets(scheme: Scheme, items: Iterable[Iterable[Tuple]]) -> frozenset:
    out = frozenset(as_tset(w) for w in items)
    space = scheme.space
    for w in out:
        if not w <= space:
            scheme.check_tuple(next(t for t in w if t not in space))
    return out


def _pairs(scheme: Scheme, items: Iterable) -> frozenset:
    out = []
    space = scheme.space
    for p in items:
        v, x = as_tset(p[0]), as_tset(p[1])
        for w in (v, x):
            if not w <= space:
                scheme.check_tuple(next(t for t in w if t not in space))
        out.append(MixedPair(v, x))
    return frozenset(out)


@dataclass(frozen=True)
class ParaconsistentRelation:
    """Definite positive and negative tuples; the bottom-layer oracle type."""

    scheme: Scheme
    pos: frozenset = frozenset()
    neg: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "pos", _tuples(self.scheme, self.pos))
        object.__setattr__(self, "neg", _tuples(self.scheme, self.neg))


@dataclass(frozen=True)
class GDPRelation:
    """Positive and negative components, each a set of disjunctive tuple sets."""

    scheme: Scheme
    pos: frozenset = frozenset()
    neg: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "pos", _tsets(self.scheme, self.pos))
        object.__setattr__(self, "neg", _tsets(self.scheme, self.neg))

    def __str__(self):
        from .textformat import format_gdp

        return format_gdp(self)


@dataclass(frozen=True)
class EGDPRelation:
    """Positive, mixed and negative components; the engine's main value type."""

    scheme: Scheme
    pos: frozenset = frozenset()
    mixed: frozenset = frozenset()
    neg: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "pos", _tsets(self.scheme, self.pos))
        object.__setattr__(self, "mixed", _pairs(self.scheme, self.mixed))
        object.__setattr__(self, "neg", _tsets(self.scheme, self.neg))

    def __str__(self):
        from .textformat import format_egdp

        return format_egdp(self)

    @property
    def size(self) -> int:
        return len(self.pos) + len(self.mixed) + len(self.neg)

    def gdp(self) -> GDPRelation:
        """The relation without its mixed component."""
        return GDPRelation(self.scheme, self.pos, self.neg)


AnyRelation = Union[ParaconsistentRelation, GDPRelation, EGDPRelation]


def tuple_space(scheme: Scheme) -> frozenset:
    return scheme.space


def definite_pos(r: GDPRelation | EGDPRelation) -> frozenset:
    """Tuples of the singleton tuple sets in the positive component."""
    return frozenset(t for w in r.pos if len(w) == 1 for t in w)


def definite_neg(r: GDPRelation | EGDPRelation) -> frozenset:
    return frozenset(t for u in r.neg if len(u) == 1 for t in u)


def tset_key(scheme: Scheme, w: Iterable[Tuple]) -> tuple:
    keys = sorted(scheme.tuple_key(t) for t in w)
    return (len(keys), keys)


def pair_key(scheme: Scheme, p: MixedPair) -> tuple:
    return (tset_key(scheme, p.v), tset_key(scheme, p.x))


def sorted_tuples(scheme: Scheme, ts: Iterable[Tuple]) -> list:
    return sorted(ts, key=scheme.tuple_key)


def sorted_tsets(scheme: Scheme, ws: Iterable[TupleSet]) -> list:
    """Tuple sets by size, then lexicographically; members sorted too."""
    return [tuple(sorted_tuples(scheme, w)) for w in sorted(ws, key=lambda w: tset_key(scheme, w))]


def canonical_form(r: AnyRelation) -> tuple:
    """Ordered, hashable view of ``r``'s components.

    Tuples are ordered by the declared constant order of each attribute,
    tuple sets by size then lexicographically, mixed pairs by ``(v, x)``.
    Two relations are equal exactly when their canonical forms are.
    """
    s = r.scheme
    if isinstance(r, ParaconsistentRelation):
        return (tuple(sorted_tuples(s, r.pos)), tuple(sorted_tuples(s, r.neg)))
    pos = tuple(sorted_tsets(s, r.pos))
    neg = tuple(sorted_tsets(s, r.neg))
    if isinstance(r, GDPRelation):
        return (pos, neg)
    mixed = tuple(
        (tuple(sorted_tuples(s, p.v)), tuple(sorted_tuples(s, p.x)))
        for p in sorted(r.mixed, key=lambda p: pair_key(s, p))
    )
    return (pos, mixed, neg)


def relation_key(r: AnyRelation) -> tuple:
    """Sort key for relations on one scheme, consistent with :func:`canonical_form`."""
    s = r.scheme
    if isinstance(r, ParaconsistentRelation):
        return ([s.tuple_key(t) for t in sorted_tuples(s, r.pos)], [s.tuple_key(t) for t in sorted_tuples(s, r.neg)])
    pos = sorted(tset_key(s, w) for w in r.pos)
    neg = sorted(tset_key(s, u) for u in r.neg)
    if isinstance(r, GDPRelation):
        return (len(pos) + len(neg), pos, neg)
    mixed = sorted(pair_key(s, p) for p in r.mixed)
    return (r.size, pos, mixed, neg)


def sorted_relations(rs: Iterable[AnyRelation]) -> list:
    return sorted(rs, key=relation_key)


def project_tuple(t: Tuple, scheme: Scheme, attrs: Iterable[str]) -> Tuple:
    """Restrict ``t`` to ``attrs`` (returned in ``scheme`` order)."""
    target = scheme.sub(attrs)
    return tuple(t[scheme.position(a)] for a in target.attributes)


def join_tuples(t1: Tuple, s1: Scheme, t2: Tuple, s2: Scheme) -> Tuple | None:
    """Merge two tuples that agree on shared attributes; ``None`` if they disagree."""
    for a in s2.attributes:
        if a in s1._positions and t1[s1.position(a)] != t2[s2.position(a)]:
            return None
    extra = tuple(t2[i] for i, a in enumerate(s2.attributes) if a not in s1._positions)
    return t1 + extra


@dataclass(frozen=True)
class Projector:
    """Precomputed tuple projection from a scheme onto a sub-scheme."""

    source: Scheme
    target: Scheme
    positions: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "positions", tuple(self.source.position(a) for a in self.target.attributes))

    def __call__(self, t: Tuple) -> Tuple:
        return tuple(t[i] for i in self.positions)
