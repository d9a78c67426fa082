from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mzvreg.algebra import (
    Combination,
    Product,
    combine,
    format_combination,
    parse_combination,
    product,
    product_linear,
    shuffle,
    stuffle,
)
from mzvreg.indices import DomainError

from oracles import as_fractions, binomial, brute_shuffle, brute_stuffle, delannoy

small = st.lists(st.integers(1, 3), max_size=3).map(tuple)
light = st.lists(st.integers(1, 3), max_size=3).map(tuple).filter(lambda k: sum(k) <= 4)
C = Combination


def test_combine_examples():
    assert combine(C.of((2, 1)), C.of((4,)), -2, 3) == C({(2, 1): -2, (4,): 3})
    a = C({(2,): 1, (1, 1): Fraction(1, 2)})
    assert combine(a, a, 1, -1) == C.zero()
    assert not combine(a, a, 1, -1).terms
    assert combine(C.zero(), a, 1, 1) == a


def test_no_stored_zeros():
    c = C([((2,), 1), ((2,), -1), ((3,), 0)])
    assert c.terms == {}


def test_product_goldens():
    assert stuffle((2,), (3,)) == C({(2, 3): 1, (3, 2): 1, (5,): 1})
    assert shuffle((2,), (3,)) == C({(2, 3): 1, (3, 2): 3, (4, 1): 6})
    assert stuffle((), (2, 1)) == C.of((2, 1))
    assert stuffle((1,), (1,)) == C({(1, 1): 2, (2,): 1})
    assert shuffle((), (4,)) == C.of((4,))
    assert shuffle((1,), (2,)) == C({(1, 2): 1, (2, 1): 2})


def test_product_linear_examples():
    assert product_linear(C.of((2,)), C.of((3,)), Product.STUFFLE) == stuffle((2,), (3,))
    assert product_linear(C.zero(), C.of((2,)), Product.SHUFFLE) == C.zero()
    assert product_linear(C.of((1,), 2), C.of((1,)), "stuffle") == C({(1, 1): 4, (2,): 2})


def test_unknown_product_rejected():
    with pytest.raises(DomainError):
        product((1,), (1,), "concat")


@settings(max_examples=200, deadline=None)
@given(small, small)
def test_products_match_oracles(k, l):
    assert stuffle(k, l).terms == as_fractions(brute_stuffle(k, l))
    assert shuffle(k, l).terms == as_fractions(brute_shuffle(k, l))


@settings(max_examples=150, deadline=None)
@given(light, light, light, st.sampled_from(list(Product)))
def test_laws(k, l, m, which):
    kl = product(k, l, which)
    assert kl == product(l, k, which)
    assert product_linear(kl, C.of(m), which) == product_linear(C.of(k), product(l, m, which), which)
    assert product(k, (), which) == C.of(k) == product((), k, which)
    assert kl.weights() <= {sum(k) + sum(l)}


@settings(max_examples=150, deadline=None)
@given(small, small)
def test_coefficient_sums_and_depths(k, l):
    sh = shuffle(k, l)
    st_ = stuffle(k, l)
    assert sh.coefficient_sum() == binomial(sum(k) + sum(l), sum(k))
    assert st_.coefficient_sum() == delannoy(len(k), len(l))
    assert {len(i) for i, _ in sh} == {len(k) + len(l)}
    assert all(max(len(k), len(l)) <= len(i) <= len(k) + len(l) for i, _ in st_)


def test_format_and_parse():
    sh = shuffle((2,), (3,))
    assert format_combination(sh) == "1·(2,3)+3·(3,2)+6·(4,1)"
    assert format_combination(C.zero()) == "0"
    c = C({(2, 1): -2, (4,): 3, (): Fraction(1, 2), (1, 1): Fraction(-5, 3)})
    assert format_combination(c) == "1/2·()-5/3·(1,1)-2·(2,1)+3·(4)"
    assert parse_combination(format_combination(c)) == c
    assert parse_combination("1*(2,3) + 3*(3,2)") == C({(2, 3): 1, (3, 2): 3})


@pytest.mark.parametrize("text", ["", "2·(1", "(2,3)", "1·(2,3)3·(1)"])
def test_parse_combination_rejects(text):
    with pytest.raises(DomainError):
        parse_combination(text)


@given(st.dictionaries(small, st.fractions(max_denominator=20), max_size=5))
def test_combination_round_trip(terms):
    c = C(terms)
    assert parse_combination(format_combination(c)) == c
