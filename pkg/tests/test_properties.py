from hypothesis import given, settings
from hypothesis import strategies as st

from egdp import InconsistentError, e_complement, e_intersect, e_union, eg_norm, eg_reduce, eg_rep, is_normalized
from egdp.relation import EGDPRelation, MixedPair
from egdp.verify.generate import tuple_sets, unary_scheme
import oracles

SCHEME = unary_scheme(3)
SETS = tuple_sets(SCHEME)

tsets = st.sampled_from(SETS)
raw = st.builds(
    lambda pos, mixed, neg: EGDPRelation(SCHEME, pos, mixed, neg),
    st.lists(tsets, max_size=3),
    st.lists(st.builds(MixedPair, tsets, tsets), max_size=2),
    st.lists(tsets, max_size=3),
)
normalized = raw.map(eg_norm)


@given(raw)
def test_norm_is_idempotent_and_normalizes(r):
    n = eg_norm(r)
    assert is_normalized(n) and eg_norm(n) == n


@given(normalized)
def test_reduce_is_idempotent(r):
    red = eg_reduce(r)
    assert is_normalized(red) and eg_reduce(red) == red


@given(normalized)
def test_reduce_and_rep_keep_models(r):
    m = oracles.models(r)
    assert oracles.models(eg_reduce(r)) == m
    assert oracles.models_of_all(eg_rep(r)) == m


@given(normalized)
def test_complement_is_an_involution(r):
    assert e_complement(e_complement(r)) == eg_reduce(r)


@settings(max_examples=60)
@given(normalized, normalized)
def test_union_and_intersect_are_sound(r, s):
    mr, ms = oracles.models(r), oracles.models(s)
    for op, f in ((e_union, frozenset.union), (e_intersect, frozenset.intersection)):
        try:
            out = op(r, s)
        except InconsistentError:
            assert not mr or not ms
            continue
        got = oracles.models(out)
        assert all(f(a, b) in got for a in mr for b in ms)


@given(normalized)
def test_union_with_itself_keeps_models(r):
    if not oracles.models(r):
        return
    assert oracles.models(e_union(r, r)) >= oracles.models(r)
