import itertools

import pytest

from egdp import NotNormalizedError, eg_norm, eg_normrep, eg_reduce, eg_reducerep, eg_rep, g_reduce, is_normalized
from egdp.core import branches
from egdp.verify.generate import Bounds, gen_exhaustive, gen_random, raw_candidates, unary_scheme
from helpers import E, G
import oracles

AB = unary_scheme(2)
FAMILY = list(gen_exhaustive(AB, Bounds(3, 3, 2)))


@pytest.mark.parametrize(
    "raw, normalized",
    [
        ("pos: mix: neg:", "pos: mix: neg:"),
        ("pos: {a} mix: neg: {a}", "pos: mix: neg:"),
        ("pos: {b} mix: <{a};{b}> neg: {a}", "pos: mix: neg:"),
        ("pos: {a;b} mix: neg: {a}", "pos: {a;b} mix: neg: {a}"),
    ],
)
def test_norm_examples(raw, normalized):
    assert eg_norm(E(raw)) == E(normalized)


def test_norm_removes_only_the_conflict():
    r = E("pos: {a}, {c} mix: neg: {a}, {b}")
    assert eg_norm(r) == E("pos: {c} mix: neg: {b}")


def test_is_normalized():
    assert not is_normalized(E("pos: {a} mix: neg: {a}"))
    assert is_normalized(E("pos: {a;b} mix: neg: {a}"))
    for r in itertools.islice(raw_candidates(AB, Bounds(2, 2, 1)), 2000):
        assert is_normalized(eg_norm(r))


@pytest.mark.parametrize(
    "before, after",
    [
        ("pos: {a}, {a;b} mix: neg:", "pos: {a} mix: neg:"),
        ("pos: {a;b} mix: neg: {a}", "pos: {b} mix: neg: {a}"),
        ("pos: {a} mix: <{a;b};{c}> neg:", "pos: {a} mix: neg:"),
        ("pos: mix: <{a;b};{c}> neg: {a}", "pos: mix: <{b};{c}> neg: {a}"),
        ("pos: {c} mix: <{a;b};{c}> neg:", "pos: {c}, {a;b} mix: neg:"),
    ],
)
def test_reduce_examples(before, after):
    assert eg_reduce(E(before)) == E(after)


def test_reduce_drops_pair_subsumed_by_smaller_pair():
    r = E("pos: mix: <{a};{b}>, <{a;c};{b;c}> neg:")
    assert eg_reduce(r) == E("pos: mix: <{a};{b}> neg:")


def test_reduce_needs_normalized_input():
    with pytest.raises(NotNormalizedError):
        eg_reduce(E("pos: {a} mix: neg: {a}"))


def test_reduce_stops_before_a_latent_contradiction():
    r = E("pos: {a;b} mix: <{a};{a;b}>, <{b};{a}> neg: {b}", AB)
    assert is_normalized(r)
    red = eg_reduce(r)
    assert is_normalized(red) and eg_reduce(red) == red
    assert eg_rep(r) == frozenset()


def test_normrep_and_reducerep():
    assert eg_normrep([G("{a}", "{a}")]) == frozenset()
    assert eg_normrep([G("{a}"), G("{b}", "{b}")]) == {G("{a}")}
    assert eg_normrep([]) == frozenset()
    assert eg_reducerep([G("{a}"), G("{a}, {b}")]) == {G("{a}")}
    assert eg_reducerep([G("{a}")]) == {G("{a}")}
    assert eg_reducerep([G("{a}"), G("{b}")]) == {G("{a}"), G("{b}")}


def test_rep_examples():
    assert eg_rep(E("pos: {a} mix: <{b};{c}> neg:")) == {G("{a}, {b}"), G("{a}", "{c}")}
    assert eg_rep(E("pos: {b} mix: <{a};{b}> neg:")) == {G("{a}, {b}")}
    r = E("pos: {a}, {a;b} mix: neg: {c}")
    assert eg_rep(r) == {g_reduce(r.gdp())}


def test_rep_needs_normalized_input():
    with pytest.raises(NotNormalizedError):
        eg_rep(E("pos: {a} mix: neg: {a}"))


@pytest.mark.parametrize("k", range(6))
def test_branch_count(k):
    pairs = ", ".join("<{a};{b}>" if i == 0 else f"<{{c{i}}};{{d{i}}}>" for i in range(k))
    doms = ["a", "b"] + [f"c{i}" for i in range(k)] + [f"d{i}" for i in range(k)]
    from egdp.relation import Scheme

    s = Scheme(("A",), (tuple(doms),))
    assert len(branches(E(f"pos: mix: {pairs} neg:", s))) == 2 ** k


def test_reduce_keeps_models():
    for r in FAMILY:
        assert oracles.models(eg_reduce(r)) == oracles.models(r)


def test_rep_members_cover_exactly_the_models():
    for r in FAMILY:
        assert oracles.models_of_all(eg_rep(r)) == oracles.models(r)
    for r in itertools.islice(gen_random(unary_scheme(3), Bounds(3, 3, 3), seed=11), 400):
        assert oracles.models_of_all(eg_rep(r)) == oracles.models(r)


def test_rep_members_are_reduced_and_unsubsumed():
    for r in FAMILY:
        rep = eg_rep(r)
        assert all(g_reduce(g) == g for g in rep)
        for a, b in itertools.permutations(rep, 2):
            assert not (a.pos <= b.pos and a.neg <= b.neg)
