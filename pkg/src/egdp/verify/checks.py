"""Property checks: rep preservation, precise generalization, soundness and the laws.

Every check walks a family of instances (exhaustive or seeded random),
counts failures, and shrinks the first failure to a minimal counterexample.
Sets of GDP relations are always compared after :func:`canonical_rep`.
"""
from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

from .. import kernels
from ..algebra import e_apply, e_complement, expand_mixed, recombine
from ..core import DEFAULT_MAX_BRANCHES, canonical_rep, eg_norm, eg_reduce, eg_rep, is_normalized
from ..errors import EGDPError, InconsistentError
from ..formula import And, Atom, Not, Or, satisfying
from ..gdp import g_apply, g_consistent
from ..ops import COMPLEMENT, INTERSECT, JOIN, UNION, Op, project, select
from ..relation import EGDPRelation, GDPRelation, Projector, Scheme, join_tuples, sorted_relations
from ..textformat import format_gdp, format_relation_decl, format_scheme_decl, format_tset
from .generate import (
    DEFAULT_CAP,
    Bounds,
    binary_scheme,
    gen_exhaustive,
    gen_gdp_exhaustive,
    gen_random,
    raw_candidates,
    raw_count,
    InstanceCapError,
    unary_scheme,
)
from .lift import lift_op
from .mutate import mutated_apply, mutated_kind
from .shrink import shrink, size

PROPERTIES = (
    "theorem1",
    "precise_union",
    "precise_intersect",
    "precise_select",
    "precise_project",
    "precise_join",
    "soundness",
    "idempotence",
    "involution",
    "roundtrip",
)

SOUNDNESS_OPS = ("union", "intersect", "complement", "select", "project", "join")


@dataclass
class CheckConfig:
    """How to run a property check.

    ``domain_size`` sizes the schemes; for ``soundness`` it is the largest
    tuple space checked.  ``bounds`` of ``None`` picks a per-property
    default.  A ``mutation`` swaps in a broken GDP operator (see
    :mod:`egdp.verify.mutate`) and implies ``fail_fast``.
    """

    mode: str = "exhaustive"
    domain_size: int = 2
    samples: int = 1000
    seed: int = 0
    bounds: Bounds | None = None
    cap: int = DEFAULT_CAP
    mutation: str | None = None
    fail_fast: bool = False
    ops: tuple | None = None
    use_numba: bool | None = None
    max_branches: int = DEFAULT_MAX_BRANCHES
    cross_check: int = 2000

    def __post_init__(self):
        if self.mode not in ("exhaustive", "random"):
            raise ValueError(f"mode must be exhaustive or random, not {self.mode!r}")
        if self.domain_size < 1:
            raise ValueError("domain size must be at least 1")
        if self.mutation is not None:
            mutated_apply(self.mutation)
            self.fail_fast = True

    @property
    def apply(self) -> Callable:
        return g_apply if self.mutation is None else mutated_apply(self.mutation)


class Skip(Exception):
    """The instance does not meet the property's precondition."""


@dataclass
class Counterexample:
    instance: tuple
    query: str
    detail: dict
    original_size: int

    def db_text(self) -> str:
        """The instance as a database file, with ``R`` (and ``S``) as relation names."""
        schemes: list[Scheme] = []
        for r in self.instance:
            if r.scheme not in schemes:
                schemes.append(r.scheme)
        lines = [format_scheme_decl(f"S{i + 1}", s) for i, s in enumerate(schemes)]
        for name, r in zip("RS", self.instance):
            e = r if isinstance(r, EGDPRelation) else EGDPRelation(r.scheme, r.pos, (), r.neg)
            lines.append(format_relation_decl(name, f"S{schemes.index(r.scheme) + 1}", e))
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "database": self.db_text(),
            "query": self.query,
            "tuple_sets": size(self.instance),
            "original_tuple_sets": self.original_size,
            **self.detail,
        }


@dataclass
class CaseResult:
    label: str
    checked: int = 0
    skipped: int = 0
    failures: int = 0


@dataclass
class Report:
    property: str
    config: CheckConfig
    cases: list = field(default_factory=list)
    counterexample: Counterexample | None = None
    notes: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def checked(self) -> int:
        return sum(c.checked for c in self.cases)

    @property
    def skipped(self) -> int:
        return sum(c.skipped for c in self.cases)

    @property
    def failures(self) -> int:
        return sum(c.failures for c in self.cases)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_json(self) -> dict:
        c = self.config
        return {
            "property": self.property,
            "mode": c.mode,
            "seed": c.seed,
            "domain_size": c.domain_size,
            "samples": c.samples if c.mode == "random" else None,
            "mutation": c.mutation,
            "status": self.status,
            "checked": self.checked,
            "skipped": self.skipped,
            "failures": self.failures,
            "elapsed_seconds": round(self.elapsed, 3),
            "cases": [vars(r) for r in self.cases],
            "notes": list(self.notes),
            "counterexample": self.counterexample.to_json() if self.counterexample else None,
        }

    def text(self) -> str:
        c = self.config
        out = [f"property: {self.property}"]
        head = f"mode: {c.mode}  seed: {c.seed}  domain size: {c.domain_size}"
        if c.mode == "random":
            head += f"  samples: {c.samples}"
        if c.mutation:
            head += f"  mutation: {c.mutation}"
        out.append(head)
        for r in self.cases:
            out.append(f"  {r.label}: {r.checked} checked, {r.skipped} skipped, {r.failures} failed")
        out += [f"  note: {n}" for n in self.notes]
        out.append(f"checked: {self.checked}  skipped: {self.skipped}  failed: {self.failures}")
        out.append(f"elapsed: {self.elapsed:.2f} s")
        out.append(f"result: {self.status}")
        cx = self.counterexample
        if cx is not None:
            out.append(f"counterexample ({size(cx.instance)} tuple sets, shrunk from {cx.original_size}):")
            out += ["  " + line for line in cx.db_text().splitlines()]
            out.append(f"  query: {cx.query}")
            for key, value in cx.detail.items():
                if isinstance(value, list):
                    out.append(f"  {key}:")
                    out += [f"    {v}" for v in value] or ["    (empty)"]
                else:
                    out.append(f"  {key}: {value}")
        return "\n".join(out)


# --- generic driver -------------------------------------------------------------


@dataclass
class Case:
    """A family of instances and the check each one must pass.

    ``check`` returns ``None`` on success, a detail dict on failure, and
    raises :class:`Skip` when the precondition does not hold.  ``valid``
    guards the shrinker.
    """

    label: str
    instances: Callable[[], Iterable[tuple]]
    check: Callable[[tuple], dict | None]
    query: str
    valid: Callable[[tuple], bool]
    limit: int | None = None

    def run(self, report: Report, first: list) -> None:
        res = CaseResult(self.label)
        report.cases.append(res)
        for inst in self.instances():
            if self.limit is not None and (res.checked >= self.limit or res.skipped > 1000 * (self.limit + 1)):
                break
            try:
                detail = self.check(inst)
            except Skip:
                res.skipped += 1
                continue
            res.checked += 1
            if detail is not None:
                res.failures += 1
                if not first:
                    first.append((self, inst))
                if report.config.fail_fast:
                    return

    def fails(self, inst: tuple) -> bool:
        try:
            return self.check(inst) is not None
        except Skip:
            return False


def _minimize(case: Case, inst: tuple) -> Counterexample:
    small = shrink(inst, case.fails, case.valid)
    detail = case.check(small) or {"problem": "the bitmask kernel and g_apply disagree on this pair"}
    return Counterexample(small, case.query, detail, size(inst))


def check_property(name: str, config: CheckConfig | None = None) -> Report:
    """Run property ``name`` and return its report."""
    if name not in PROPERTIES:
        raise ValueError(f"unknown property {name!r}; choose from {', '.join(PROPERTIES)}")
    config = config or CheckConfig()
    report = Report(name, config)
    start = time.perf_counter()
    first: list = []
    for case in _BUILDERS[name](config, report):
        case.run(report, first)
        if first and config.fail_fast:
            break
    if first:
        report.counterexample = _minimize(*first[0])
    report.elapsed = time.perf_counter() - start
    return report


# --- families -------------------------------------------------------------------


def _family(scheme: Scheme, bounds: Bounds, config: CheckConfig, stream: int = 0) -> Callable:
    """Exhaustive or seeded random normalized relations on ``scheme``."""
    if config.mode == "exhaustive":
        return lambda: gen_exhaustive(scheme, bounds, config.cap)
    return lambda: gen_random(scheme, bounds, config.seed * 7919 + stream)


def _singles(family: Callable) -> Callable:
    return lambda: ((r,) for r in family())


def _pairs(left: Callable, right: Callable, config: CheckConfig, keep: Callable) -> Callable:
    """All pairs of usable members (exhaustive) or a stream of random pairs."""
    if config.mode == "exhaustive":

        def gen():
            a = [r for r in left() if keep(r)]
            b = a if left is right else [r for r in right() if keep(r)]
            return itertools.product(a, b)

        return gen
    return lambda: zip(left(), right())


def _normalized(inst: tuple) -> bool:
    return all(is_normalized(r) for r in inst)


def _consistent(inst: tuple) -> bool:
    return all(g_consistent(r) for r in inst)


def _rep_lines(rs) -> list:
    return [format_gdp(g) for g in sorted_relations(rs)]


# --- rep preservation and the laws ---------------------------------------------


def _theorem1(config: CheckConfig, report: Report):
    scheme = unary_scheme(config.domain_size)
    bounds = config.bounds or Bounds(3, 3, 2)
    mb = config.max_branches

    def check(inst):
        (r,) = inst
        lhs, rhs = eg_rep(eg_reduce(r), mb), eg_rep(r, mb)
        if lhs != rhs:
            return {"expected": _rep_lines(rhs), "got": _rep_lines(lhs)}
        return None

    family = _family(scheme, bounds, config)
    yield Case(f"eg_rep(eg_reduce(R)) = eg_rep(R) on {_describe(scheme)}", _singles(family), check,
               "rep(reduce(R)) vs rep(R)", _normalized, _limit(config))


def _raw_family(scheme: Scheme, bounds: Bounds, config: CheckConfig) -> Callable:
    if config.mode == "exhaustive":
        count = raw_count(scheme, bounds)
        if count > config.cap:
            raise InstanceCapError(f"{count} raw candidates exceed the cap of {config.cap}")
        return lambda: raw_candidates(scheme, bounds)
    return lambda: gen_random(scheme, bounds, config.seed, normalize=False)


def _idempotence(config: CheckConfig, report: Report):
    scheme = unary_scheme(config.domain_size)
    bounds = config.bounds or Bounds(3, 3, 2)

    def check_norm(inst):
        (r,) = inst
        n = eg_norm(r)
        if not is_normalized(n):
            return {"problem": "eg_norm output is not normalized", "got": str(n)}
        if eg_norm(n) != n:
            return {"problem": "eg_norm is not idempotent", "once": str(n), "twice": str(eg_norm(n))}
        return None

    def check_reduce(inst):
        (r,) = inst
        red = eg_reduce(r)
        if not is_normalized(red):
            return {"problem": "eg_reduce output is not normalized", "got": str(red)}
        if eg_reduce(red) != red:
            return {"problem": "eg_reduce is not idempotent", "once": str(red), "twice": str(eg_reduce(red))}
        return None

    d = _describe(scheme)
    yield Case(f"eg_norm idempotent and normalizing on raw {d}", _singles(_raw_family(scheme, bounds, config)),
               check_norm, "norm(norm(R)) vs norm(R)", lambda inst: True, _limit(config))
    yield Case(f"eg_reduce idempotent and normalization-preserving on {d}",
               _singles(_family(scheme, bounds, config)), check_reduce, "reduce(reduce(R)) vs reduce(R)",
               _normalized, _limit(config))


def _involution(config: CheckConfig, report: Report):
    scheme = unary_scheme(config.domain_size)
    bounds = config.bounds or Bounds(3, 3, 2)

    def check(inst):
        (r,) = inst
        twice, red = e_complement(e_complement(r)), eg_reduce(r)
        if twice != red:
            return {"expected": str(red), "got": str(twice)}
        return None

    yield Case(f"minus(minus(R)) = reduce(R) on {_describe(scheme)}", _singles(_family(scheme, bounds, config)),
               check, "minus(minus(R))", _normalized, _limit(config))


def _roundtrip(config: CheckConfig, report: Report):
    scheme = unary_scheme(config.domain_size)
    bounds = config.bounds or Bounds(3, 3, 2)
    mb = config.max_branches

    def check(inst):
        (r,) = inst
        rep = eg_rep(r, mb)
        if not rep:
            raise Skip
        try:
            back = eg_rep(recombine(sorted_relations(rep)), mb)
        except EGDPError as exc:
            return {"expected": _rep_lines(rep), "error": str(exc)}
        if back != rep:
            return {"expected": _rep_lines(rep), "got": _rep_lines(back)}
        return None

    report.notes.append("relations with empty information content are skipped (nothing to recombine)")
    yield Case(f"eg_rep(recombine(eg_rep(R))) = eg_rep(R) on {_describe(scheme)}",
               _singles(_family(scheme, bounds, config)), check, "rep(R) recombined", _normalized, _limit(config))


def _limit(config: CheckConfig) -> int | None:
    return config.samples if config.mode == "random" else None


def _describe(scheme: Scheme) -> str:
    doms = " x ".join(str(len(d)) for d in scheme.domains)
    return "{" + ",".join(scheme.attributes) + "} dom " + doms


# --- precise generalization -----------------------------------------------------


def _usable(r: EGDPRelation, mb: int) -> bool:
    return bool(expand_mixed(r, mb))


def _precise_check(op: Op, config: CheckConfig) -> Callable:
    """Dotted operator against the canonicalized lift over the operands' eg_rep."""
    mb = config.max_branches
    apply = config.apply

    def check(inst):
        if not all(_usable(r, mb) for r in inst):
            raise Skip
        reps = [eg_rep(r, mb) for r in inst]
        expected = canonical_rep(lift_op(op, *reps, apply=apply))
        try:
            got = eg_rep(e_apply(op, *inst, max_branches=mb), mb)
        except InconsistentError as exc:
            if not expected:
                return None
            return {"expected": _rep_lines(expected), "error": str(exc)}
        if got != expected:
            return {"expected": _rep_lines(expected), "got": _rep_lines(got)}
        return None

    return check


def _valid_precise(mb: int) -> Callable:
    return lambda inst: _normalized(inst) and all(_usable(r, mb) for r in inst)


def _precise_binary(op: Op):
    def build(config: CheckConfig, report: Report):
        scheme = unary_scheme(config.domain_size)
        bounds = config.bounds or Bounds(2, 2, 1)
        mb = config.max_branches
        fam = _family(scheme, bounds, config)
        other = fam if config.mode == "exhaustive" else _family(scheme, bounds, config, stream=1)
        pairs = _pairs(fam, other, config, lambda r: _usable(r, mb))
        yield Case(f"{op.kind} on {_describe(scheme)}", pairs, _precise_check(op, config),
                   f"{op.kind}(R,S)", _valid_precise(mb), _limit(config))

    return build


def selection_formulas(scheme: Scheme) -> list:
    """Every atom ``A=c`` and its negation."""
    atoms = [Atom(a, c) for a in scheme.attributes for c in scheme.domain(a)]
    return [f for a in atoms for f in (a, Not(a))]


def _precise_select(config: CheckConfig, report: Report):
    scheme = unary_scheme(config.domain_size)
    bounds = config.bounds or Bounds(2, 2, 1)
    mb = config.max_branches
    fam = _family(scheme, bounds, config)
    for f in selection_formulas(scheme):
        op = select(f)
        yield Case(f"select[{f}] on {_describe(scheme)}", _singles(fam), _precise_check(op, config),
                   f"select[{f}](R)", _valid_precise(mb), _limit(config))


def _precise_project(config: CheckConfig, report: Report):
    scheme = binary_scheme(config.domain_size, config.domain_size)
    bounds = config.bounds or (Bounds(1, 1, 1, 2) if config.mode == "exhaustive" else Bounds(2, 2, 1))
    mb = config.max_branches
    op = project(("A",))
    yield Case(f"project[A] on {_describe(scheme)}", _singles(_family(scheme, bounds, config)),
               _precise_check(op, config), "project[A](R)", _valid_precise(mb), _limit(config))


def _precise_join(config: CheckConfig, report: Report):
    d = config.domain_size
    left_s, right_s = unary_scheme(d), binary_scheme(d, d)
    exhaustive = config.mode == "exhaustive"
    lb = config.bounds or Bounds(2, 2, 1)
    rb = config.bounds or (Bounds(1, 1, 1, 2) if exhaustive else Bounds(2, 2, 1))
    mb = config.max_branches
    left = _family(left_s, lb, config)
    right = _family(right_s, rb, config, stream=1)
    pairs = _pairs(left, right, config, lambda r: _usable(r, mb))
    yield Case(f"join of {_describe(left_s)} and {_describe(right_s)}", pairs, _precise_check(JOIN, config),
               "join(R,S)", _valid_precise(mb), _limit(config))


# --- soundness against the model oracle -----------------------------------------


class _Models:
    """Classical relations over a scheme, as bitmasks over its tuple space."""

    def __init__(self, scheme: Scheme):
        self.scheme = scheme
        self.n = len(scheme.tuples)
        self.full = (1 << self.n) - 1
        self._cache: dict = {}

    def mask(self, ts) -> int:
        idx = self.scheme.index
        return sum(1 << idx[t] for t in ts)

    def clauses(self, r: GDPRelation):
        return [self.mask(w) for w in r.pos], [self.mask(u) for u in r.neg]

    def models(self, r: GDPRelation) -> list:
        hit = self._cache.get(r)
        if hit is None:
            pos, neg = self.clauses(r)
            hit = [m for m in range(1 << self.n)
                   if all(m & w for w in pos) and all(m & u != u for u in neg)]
            self._cache[r] = hit
        return hit

    def model_bits(self, r: GDPRelation) -> int:
        return sum(1 << m for m in self.models(r))

    def show(self, m: int) -> str:
        ts = [t for t in self.scheme.tuples if m >> self.scheme.index[t] & 1]
        return format_tset(ts) if ts else "{}"


def _classical(op: Op, ins: list, out: _Models) -> Callable:
    """The ordinary relational operator on model bitmasks."""
    if op.kind == "union":
        return lambda a, b: a | b
    if op.kind == "intersect":
        return lambda a, b: a & b
    if op.kind == "complement":
        return lambda a: out.full & ~a
    if op.kind == "select":
        good = out.mask(satisfying(op.formula, out.scheme))
        return lambda a: a & good
    src = ins[0]
    if op.kind == "project":
        proj = Projector(src.scheme, out.scheme)
        image = [out.mask({proj(t) for t in src.scheme.tuples if m >> src.scheme.index[t] & 1})
                 for m in range(1 << src.n)]
        return lambda a: image[a]
    s1, s2 = ins[0].scheme, ins[1].scheme
    bits = {}
    for t1 in s1.tuples:
        for t2 in s2.tuples:
            t = join_tuples(t1, s1, t2, s2)
            if t is not None:
                bits[(s1.index[t1], s2.index[t2])] = 1 << out.scheme.index[t]
    table = {}

    def join(a, b):
        key = (a, b)
        if key not in table:
            table[key] = sum({v for (i, j), v in bits.items() if a >> i & 1 and b >> j & 1})
        return table[key]

    return join


def _sound_check(op: Op, schemes: list, out_scheme: Scheme, apply: Callable) -> Callable:
    ins = [_Models(s) for s in schemes]
    out = _Models(out_scheme)
    classical = _classical(op, ins, out)

    def check(inst):
        model_lists = [m.models(r) for m, r in zip(ins, inst)]
        if not all(model_lists):
            return None
        try:
            res = apply(op, *inst)
        except InconsistentError as exc:
            return {"problem": "the operator rejected operands that have models", "error": str(exc)}
        good = out.model_bits(res)
        for combo in itertools.product(*model_lists):
            img = classical(*combo)
            if not good >> img & 1:
                return {
                    "problem": "the classical image is not a model of the result",
                    "operand models": [m.show(x) for m, x in zip(ins, combo)],
                    "image": out.show(img),
                    "result": format_gdp(res),
                }
        return None

    return check


def _soundness_plan(n: int) -> list:
    """``(op, operand schemes, result scheme)`` for every case up to ``n`` tuples."""
    plan = []
    unary = [unary_scheme(k) for k in range(1, n + 1)]
    binary = [binary_scheme(2, 1)] if n >= 2 else []
    if n >= 4:
        binary.append(binary_scheme(2, 2))
    for s in unary:
        plan.append((UNION, [s, s], s))
    for s in unary:
        plan.append((INTERSECT, [s, s], s))
    for s in unary + binary:
        plan.append((COMPLEMENT, [s], s))
    for s in unary + binary:
        formulas = selection_formulas(s)
        if len(s.attributes) > 1:
            a, b = (Atom(x, s.domain(x)[0]) for x in s.attributes)
            formulas += [And(a, b), Or(a, Not(b))]
        for f in formulas:
            plan.append((select(f), [s], s))
    for s in binary:
        for attrs in (("A",), ("B",)):
            plan.append((project(attrs), [s], s.sub(attrs)))
    a2 = unary_scheme(min(n, 2))
    b2 = unary_scheme(min(n, 2), "B")
    plan.append((JOIN, [a2, a2], a2))
    if n >= 2:
        plan.append((JOIN, [a2, b2], a2.join(b2)))
    if n >= 4:
        s2 = binary_scheme(2, 2)
        plan.append((JOIN, [a2, s2], a2.join(s2)))
    return plan


def _soundness(config: CheckConfig, report: Report):
    n = config.domain_size
    wanted = set(config.ops or SOUNDNESS_OPS)
    if config.mutation:
        wanted &= {mutated_kind(config.mutation)}
    apply = config.apply
    families: dict = {}

    def family(s: Scheme):
        if s not in families:
            families[s] = list(gen_gdp_exhaustive(s, 2))
        return families[s]

    if config.mode == "random":
        report.notes.append("soundness is always exhaustive; mode and samples are ignored")
    for op, schemes, out in _soundness_plan(n):
        if op.kind not in wanted:
            continue
        label = f"{op} on " + " and ".join(_describe(s) for s in schemes)
        if op.kind in ("union", "intersect") and config.mutation is None:
            yield _KernelCase(label, op, schemes[0], family(schemes[0]), config)
            continue
        fams = [family(s) for s in schemes]
        query = f"{op}(R,S)" if len(schemes) == 2 else f"{op}(R)"
        yield Case(label, lambda fams=fams: itertools.product(*fams), _sound_check(op, schemes, out, apply),
                   query, _consistent)


class _KernelCase(Case):
    """Union or intersect over every ordered pair, on the bitmask kernel.

    The kernel rebuilds the operator's clauses from bitmasks, so a seeded
    sample of pairs is also compared against :func:`g_apply` and the model
    oracle; any disagreement counts as a failure.
    """

    def __init__(self, label, op, scheme, fam, config):
        super().__init__(label, lambda: iter(()), _sound_check(op, [scheme, scheme], scheme, g_apply),
                         f"{op}(R,S)", _consistent)
        self.op, self.scheme, self.fam, self.config = op, scheme, fam, config

    def run(self, report: Report, first: list) -> None:
        res = CaseResult(self.label + " [kernel]")
        report.cases.append(res)
        kind = kernels.UNION if self.op.kind == "union" else kernels.INTERSECT
        n = len(self.scheme.tuples)
        pos, neg = kernels.encode_gdps(self.fam, 2)
        fails, i, j = kernels.pair_soundness(kind, pos, neg, n, self.config.use_numba)
        res.checked = len(self.fam) ** 2
        res.failures = fails
        if fails and not first:
            first.append((self, (self.fam[i], self.fam[j])))
        bad = self._cross_check(kind, pos, neg, n)
        res.failures += len(bad)
        if bad and not first:
            first.append((self, bad[0]))

    def _cross_check(self, kind, pos, neg, n) -> list:
        total = len(self.fam) ** 2
        k = min(self.config.cross_check, total)
        rng = random.Random(self.config.seed)
        flat = sorted(rng.sample(range(total), k))
        rows = np.array([f // len(self.fam) for f in flat], dtype=np.int64)
        cols = np.array([f % len(self.fam) for f in flat], dtype=np.int64)
        got = kernels.pair_result_models(kind, pos, neg, n, rows, cols, self.config.use_numba)
        models = _Models(self.scheme)
        bad = []
        for r, c, bits in zip(rows, cols, got):
            inst = (self.fam[r], self.fam[c])
            try:
                want = models.model_bits(g_apply(self.op, *inst))
            except InconsistentError:
                want = 0
            if int(bits) != want:
                bad.append(inst)
        return bad


_BUILDERS = {
    "theorem1": _theorem1,
    "precise_union": _precise_binary(UNION),
    "precise_intersect": _precise_binary(INTERSECT),
    "precise_select": _precise_select,
    "precise_project": _precise_project,
    "precise_join": _precise_join,
    "soundness": _soundness,
    "idempotence": _idempotence,
    "involution": _involution,
    "roundtrip": _roundtrip,
}
