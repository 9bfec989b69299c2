import itertools

import pytest

from egdp import (
    COMPLEMENT,
    INTERSECT,
    JOIN,
    UNION,
    And,
    Atom,
    InconsistentError,
    Not,
    g_apply,
    g_consistent,
    g_models,
    g_reduce,
    g_rep,
    g_subsumes,
    project,
    select,
)
from egdp.relation import Scheme
from egdp.verify.generate import gen_gdp_exhaustive, gen_gdp_random, unary_scheme
from helpers import S1, S2, SA, G, T
import oracles


@pytest.mark.parametrize(
    "pos, neg, expected",
    [("{a}", "{a}", False), ("{a;b}", "{a}", True), ("", "", True), ("{a;b}", "{a}, {b}", False)],
)
def test_consistency(pos, neg, expected):
    assert g_consistent(G(pos, neg)) is expected


@pytest.mark.parametrize(
    "before, after",
    [
        (("{a}, {a;b}", ""), ("{a}", "")),
        (("{a;b}", "{a}"), ("{b}", "{a}")),
        (("{a}", "{a;b}"), ("{a}", "{b}")),
    ],
)
def test_reduce_examples(before, after):
    assert g_reduce(G(*before)) == G(*after)


def test_reduce_runs_to_a_fixed_point():
    # stripping {a} makes {b} definite, which then strips {b;c}
    assert g_reduce(G("{a;b}", "{a}, {b;c}")) == G("{b}", "{a}, {c}")


def test_reduce_rejects_inconsistent_and_latent():
    with pytest.raises(InconsistentError):
        g_reduce(G("{a}", "{a}"))
    with pytest.raises(InconsistentError):
        g_reduce(G("{a;b}, {a;c}", "{a}, {b;c}"))


def test_subsumption():
    assert g_subsumes(G("{a}"), G("{a}, {b}"))
    r = G("{a}, {b}")
    assert not g_subsumes(r, r)
    assert not g_subsumes(G("{a}", "{c}"), G("{a}, {b}"))


def test_rep_examples():
    assert {(r.pos, r.neg) for r in g_rep(G("{a;b}"))} == {(T("a"), T()), (T("b"), T())}
    assert {(r.pos, r.neg) for r in g_rep(G("{a}", "{a;b}"))} == {(T("a"), T("b"))}
    assert {(r.pos, r.neg) for r in g_rep(G())} == {(T(), T())}


def test_rep_matches_choice_oracle():
    for g in itertools.islice(gen_gdp_random(S1, 3, seed=5), 300):
        got = {(r.pos, r.neg) for r in g_rep(g)}
        assert got == oracles.choice_rep(g.pos, g.neg)


def test_models_examples():
    assert g_models(G("{a;b}", "{a}", SA)) == {T("b")}
    one = Scheme.of(A="a")
    assert g_models(G(scheme=one)) == {T(), T("a")}
    assert g_models(G("{a}", "{a}")) == frozenset()


def test_models_match_oracle():
    for g in gen_gdp_exhaustive(SA, 2):
        assert g_models(g) == oracles.models(g)


def test_reduce_keeps_models():
    for g in gen_gdp_exhaustive(unary_scheme(3), 2):
        try:
            red = g_reduce(g)
        except InconsistentError:
            assert not oracles.models(g)
            continue
        assert oracles.models(red) == oracles.models(g)


@pytest.mark.parametrize(
    "op, args, expected",
    [
        (UNION, (G(neg="{a}", scheme=SA), G(neg="{a}", scheme=SA)), G(neg="{a}", scheme=SA)),
        (UNION, (G(neg="{a}", scheme=SA), G(neg="{b}", scheme=SA)), G(scheme=SA)),
        (select(Atom("A", "a")), (G("{a;b}"),), G(neg="{b}, {c}")),
        (INTERSECT, (G("{a}"), G("{a}")), G("{a}")),
        (COMPLEMENT, (G("{a}", "{b;c}"),), G("{b;c}", "{a}")),
    ],
)
def test_apply_examples(op, args, expected):
    assert g_apply(op, *args) == expected


def test_join_example():
    assert g_apply(JOIN, G("{a}", scheme=SA), G("{(a,p)}", scheme=S2)) == G("{(a,p)}", scheme=S2)


def test_join_drops_sets_with_a_non_joinable_pair():
    out = g_apply(JOIN, G("{a;b}", scheme=SA), G("{(a,p)}", scheme=S2))
    assert out.pos == frozenset()


def test_project_negatives_need_all_extensions():
    out = g_apply(project("A"), G(neg="{(a,p)}, {(a,q)}, {(b,p)}", scheme=S2))
    assert out == G(neg="{a}", scheme=S2.sub(["A"]))


def test_apply_rejects_inconsistent_operand():
    with pytest.raises(InconsistentError):
        g_apply(COMPLEMENT, G("{a}", "{a}"))


def _ops_for(scheme):
    yield UNION, (scheme, scheme)
    yield INTERSECT, (scheme, scheme)
    yield COMPLEMENT, (scheme,)
    a0 = scheme.attributes[0]
    for f in (Atom(a0, scheme.domains[0][0]), Not(Atom(a0, scheme.domains[0][0]))):
        yield select(f), (scheme,)


def _sound(op, schemes, out_scheme, rels):
    try:
        res = g_apply(op, *rels)
    except InconsistentError:
        # only operands without models may be rejected
        assert not all(oracles.models(r) for r in rels)
        return
    good = oracles.models(res)
    for ms in itertools.product(*(oracles.models(r) for r in rels)):
        assert oracles.classical(op, schemes, out_scheme, *ms) in good, (op, rels, ms)


def test_soundness_small_exhaustive():
    """Every operator image of operand models is a model of the result."""
    fam = list(gen_gdp_exhaustive(SA, 2))
    for op, schemes in _ops_for(SA):
        for rels in itertools.product(fam, repeat=len(schemes)):
            _sound(op, schemes, SA, rels)


def test_soundness_project_and_join():
    b = Scheme.of(B="pq")
    small = Scheme(("A", "B"), (("a", "b"), ("p",)))
    for g in gen_gdp_exhaustive(small, 2):
        _sound(project("A"), (small,), small.sub(["A"]), (g,))
        _sound(project("B"), (small,), small.sub(["B"]), (g,))
    fam_a = list(gen_gdp_exhaustive(SA, 2))
    fam_b = list(gen_gdp_exhaustive(b, 2))
    for r, s in itertools.product(fam_a, fam_b):
        _sound(JOIN, (SA, b), SA.join(b), (r, s))
    fam_s2 = list(itertools.islice(gen_gdp_random(S2, 2, seed=3), 100))
    for r, s in itertools.product(fam_a, fam_s2):
        _sound(JOIN, (SA, S2), S2, (r, s))


def test_select_compound_formula():
    f = And(Atom("A", "a"), Not(Atom("B", "q")))
    out = g_apply(select(f), G("{(a,p);(a,q)}, {(a,p)}", scheme=S2))
    assert out == G("{(a,p)}", "{(a,q)}, {(b,p)}, {(b,q)}", scheme=S2)
