"""Both kernel backends against the brute-force oracles."""
import pytest
from hypothesis import given, settings, strategies as st

from mzvreg import _kernels_py, kernels

from oracles import brute_shuffle_words, brute_stuffle

BACKENDS = [_kernels_py]
if kernels.compiled_module() is not None:
    BACKENDS.append(kernels.compiled_module())

backend = pytest.mark.parametrize("impl", BACKENDS, ids=lambda m: m.BACKEND)

words = st.lists(st.integers(0, 1), max_size=7).map(tuple)
parts = st.lists(st.integers(1, 4), max_size=4).map(tuple)


@backend
def test_shuffle_golden(impl):
    assert impl.shuffle_counts((0, 1), (0, 0, 1)) == {(0, 1, 0, 0, 1): 1, (0, 0, 1, 0, 1): 3, (0, 0, 0, 1, 1): 6}


@backend
def test_stuffle_golden(impl):
    assert impl.stuffle_counts((2,), (3,)) == {(2, 3): 1, (3, 2): 1, (5,): 1}
    assert impl.stuffle_counts((), (2, 1)) == {(2, 1): 1}
    assert impl.stuffle_counts((1,), (1,)) == {(1, 1): 2, (2,): 1}


@backend
@settings(max_examples=150, deadline=None)
@given(words, words)
def test_shuffle_matches_oracle(impl, u, v):
    assert impl.shuffle_counts(u, v) == brute_shuffle_words(u, v)


@backend
@settings(max_examples=150, deadline=None)
@given(parts, parts)
def test_stuffle_matches_oracle(impl, k, l):
    assert impl.stuffle_counts(k, l) == brute_stuffle(k, l)


def test_compiled_backend_is_selected_when_built():
    if kernels.compiled_module() is None:
        pytest.skip("extension not built")
    assert kernels.BACKEND == "cython"


def test_compiled_limit_and_fallback():
    impl = kernels.compiled_module()
    if impl is None:
        pytest.skip("extension not built")
    with pytest.raises(OverflowError):
        impl.stuffle_counts((40,), (30,))
    # the selector routes oversize inputs to the Python kernel instead
    assert kernels.stuffle_counts((40,), (30,)) == {(40, 30): 1, (30, 40): 1, (70,): 1}


def test_compiled_rejects_bad_letters():
    impl = kernels.compiled_module()
    if impl is None:
        pytest.skip("extension not built")
    with pytest.raises(ValueError):
        impl.shuffle_counts((0, 2), (1,))
