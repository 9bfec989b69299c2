"""Bounded exhaustive and seeded random instance generators."""
from __future__ import annotations

import itertools
import math
import random
import string
from dataclasses import dataclass
from typing import Iterator

from ..core import eg_norm
from ..errors import EGDPError
from ..gdp import g_consistent
from ..relation import EGDPRelation, GDPRelation, MixedPair, Scheme, TupleSet, tset_key

DEFAULT_CAP = 2_000_000


@dataclass(frozen=True)
class Bounds:
    """Per-component limits for generated relations.

    ``max_set_size`` caps the number of tuples in a generated tuple set
    (``None`` means any nonempty subset of the tuple space).
    """

    max_pos: int = 3
    max_neg: int = 3
    max_mixed: int = 2
    max_set_size: int | None = None

    @classmethod
    def parse(cls, text: str) -> "Bounds":
        """``"pos=2,neg=2,mixed=1,size=2"``; omitted keys keep their defaults."""
        names = {"pos": "max_pos", "neg": "max_neg", "mixed": "max_mixed", "size": "max_set_size"}
        kw = {}
        for part in filter(None, (p.strip() for p in text.split(","))):
            key, _, value = part.partition("=")
            if key.strip() not in names or not value.strip().isdigit():
                raise ValueError(f"bad bounds entry {part!r} (use pos=, neg=, mixed=, size=)")
            kw[names[key.strip()]] = int(value)
        return cls(**kw)


class InstanceCapError(EGDPError):
    pass


def domain_names(n: int, offset: int = 0) -> tuple[str, ...]:
    letters = string.ascii_lowercase
    if n + offset > len(letters):
        return tuple(f"c{i}" for i in range(offset, offset + n))
    return tuple(letters[offset:offset + n])


def unary_scheme(size: int, attr: str = "A") -> Scheme:
    """``{A}`` with domain ``a, b, c, ...``."""
    return Scheme((attr,), (domain_names(size),))


def binary_scheme(size_a: int, size_b: int) -> Scheme:
    """``{A, B}`` with ``dom(A) = a, b, ...`` and ``dom(B) = p, q, ...``."""
    return Scheme(("A", "B"), (domain_names(size_a), domain_names(size_b, offset=15)))


def tuple_sets(scheme: Scheme, max_size: int | None = None) -> list:
    """Every nonempty tuple set on ``scheme``, in canonical order."""
    space = scheme.tuples
    top = len(space) if max_size is None else min(max_size, len(space))
    out = [TupleSet(c) for k in range(1, top + 1) for c in itertools.combinations(space, k)]
    return sorted(out, key=lambda w: tset_key(scheme, w))


def _upto(n: int, k: int) -> int:
    return sum(math.comb(n, i) for i in range(min(n, k) + 1))


def raw_count(scheme: Scheme, bounds: Bounds) -> int:
    """Number of raw candidates :func:`raw_candidates` enumerates."""
    s = len(tuple_sets(scheme, bounds.max_set_size))
    return _upto(s, bounds.max_pos) * _upto(s * s, bounds.max_mixed) * _upto(s, bounds.max_neg)


def _subsets(items: list, k: int):
    for size in range(min(len(items), k) + 1):
        yield from itertools.combinations(items, size)


def raw_candidates(scheme: Scheme, bounds: Bounds) -> Iterator[EGDPRelation]:
    sets = tuple_sets(scheme, bounds.max_set_size)
    pairs = [MixedPair(v, x) for v in sets for x in sets]
    for pos in _subsets(sets, bounds.max_pos):
        for mixed in _subsets(pairs, bounds.max_mixed):
            for neg in _subsets(sets, bounds.max_neg):
                yield EGDPRelation(scheme, pos, mixed, neg)


def gen_exhaustive(scheme: Scheme, bounds: Bounds, cap: int = DEFAULT_CAP) -> Iterator[EGDPRelation]:
    """Every normalized relation within ``bounds``, once each, in a fixed order.

    Raw candidates are normalized with ``eg_norm``; repeats are skipped.
    """
    count = raw_count(scheme, bounds)
    if count > cap:
        raise InstanceCapError(f"{count} raw candidates exceed the cap of {cap}")
    seen = set()
    for r in raw_candidates(scheme, bounds):
        n = eg_norm(r)
        if n not in seen:
            seen.add(n)
            yield n


def gen_random(scheme: Scheme, bounds: Bounds, seed: int, normalize: bool = True) -> Iterator[EGDPRelation]:
    """An endless, seed-reproducible stream of normalized (or raw) relations."""
    rng = random.Random(seed)
    sets = tuple_sets(scheme, bounds.max_set_size)
    while True:
        pos = rng.sample(sets, rng.randint(0, min(bounds.max_pos, len(sets))))
        neg = rng.sample(sets, rng.randint(0, min(bounds.max_neg, len(sets))))
        mixed = [MixedPair(rng.choice(sets), rng.choice(sets)) for _ in range(rng.randint(0, bounds.max_mixed))]
        r = EGDPRelation(scheme, pos, mixed, neg)
        yield eg_norm(r) if normalize else r


def gen_gdp_exhaustive(scheme: Scheme, max_per_component: int) -> Iterator[GDPRelation]:
    """Every consistent GDP relation with at most ``max_per_component`` sets per side."""
    sets = tuple_sets(scheme)
    for pos in _subsets(sets, max_per_component):
        for neg in _subsets(sets, max_per_component):
            g = GDPRelation(scheme, pos, neg)
            if g_consistent(g):
                yield g


def gen_gdp_random(scheme: Scheme, max_per_component: int, seed: int) -> Iterator[GDPRelation]:
    rng = random.Random(seed)
    sets = tuple_sets(scheme)
    while True:
        pos = rng.sample(sets, rng.randint(0, min(max_per_component, len(sets))))
        neg = rng.sample(sets, rng.randint(0, min(max_per_component, len(sets))))
        g = GDPRelation(scheme, pos, neg)
        if g_consistent(g):
            yield g
