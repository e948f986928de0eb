import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from tetraspeed.arith import (
    agreement_depth,
    decimal_length,
    digit_sum,
    last_nonzero_digit,
    lte_predict,
    nu,
    nu_capped,
)
from tetraspeed.exceptions import DomainError, LTEPreconditionError, UndefinedValuationError


def trial_division_valuation(p, n):
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


@pytest.mark.parametrize(
    "p, n, expected",
    [(5, 1000, 3), (2, 1000, 3), (5, 651250, trial_division_valuation(5, 651250))],
)
def test_nu_examples(p, n, expected):
    assert nu(p, n) == expected


def test_nu_651250_is_807_squared_plus_one():
    assert 807**2 + 1 == 651250
    assert nu(5, 651250) == 4


def test_nu_of_zero_is_undefined():
    with pytest.raises(UndefinedValuationError):
        nu(5, 0)


def test_nu_rejects_composite():
    with pytest.raises(DomainError):
        nu(10, 100)


def test_nu_huge_power():
    assert nu(5, 5**5000 * 3) == 5000
    assert nu(2, 2**12345) == 12345


@given(st.sampled_from([2, 3, 5, 7]), st.integers(1, 10**30))
def test_nu_divides_exactly(p, n):
    e = nu(p, n)
    assert n % p**e == 0
    assert n % p ** (e + 1) != 0


def test_nu_capped():
    assert nu_capped(5, 5**10, 4) == 4
    assert nu_capped(5, 50, 4) == 2
    assert nu_capped(2, -1 + 2**9, 8) == 0


@pytest.mark.parametrize("c, j", [(940030, 3), (1000, 1), (7, 7), (5, 5), (1250, 5)])
def test_last_nonzero_digit(c, j):
    assert last_nonzero_digit(c) == j


@pytest.mark.parametrize("c, d", [(7, 1), (1000, 4), (940030, 6), (9, 1), (10, 2)])
def test_decimal_length(c, d):
    assert decimal_length(c) == d
    assert 10 ** (d - 1) <= c < 10**d


@pytest.mark.parametrize("fn", [last_nonzero_digit, decimal_length])
def test_zero_rejected(fn):
    with pytest.raises(DomainError):
        fn(0)


@pytest.mark.parametrize("n, s", [(10**7 + 10**3 + 1, 3), (0, 0), (999, 27)])
def test_digit_sum(n, s):
    assert digit_sum(n) == s


@given(st.integers(0, 10**40))
def test_digit_sum_mod_nine(n):
    assert digit_sum(n) % 9 == n % 9


def test_agreement_depth_examples():
    assert agreement_depth(549620396283318273888501737943, 601692651466822940525632857943, 30) == (4, False)
    assert agreement_depth(12, 17, 5) == (0, False)
    assert agreement_depth(1025, 3025, 4) == (3, False)


@given(st.integers(0, 10**20), st.integers(0, 10**20), st.integers(1, 25))
def test_agreement_depth_symmetric(x, y, cap):
    assert agreement_depth(x, y, cap) == agreement_depth(y, x, cap)


@given(st.integers(0, 10**20), st.integers(1, 25))
def test_agreement_depth_self_saturates(x, cap):
    assert agreement_depth(x, x, cap) == (cap, True)


@given(st.integers(0, 10**20), st.integers(0, 10**20), st.integers(1, 25))
def test_agreement_depth_definition(x, y, cap):
    d, sat = agreement_depth(x, y, cap)
    assert (x - y) % 10**d == 0
    if not sat:
        assert (x - y) % 10 ** (d + 1) != 0


@pytest.mark.parametrize("p, x, y, c", [(5, 1101, 1, 5), (2, 1101, 1, 3), (2, 1101, 1, 2)])
def test_lte_examples_against_brute_force(p, x, y, c):
    assert lte_predict(p, x, y, c) == trial_division_valuation(p, x**c - y**c)


def test_lte_example_values():
    assert lte_predict(5, 1101, 1, 5) == 3
    assert lte_predict(2, 1101, 1, 3) == 2
    assert lte_predict(2, 1101, 1, 2) == 3
    assert 1101**2 - 1 == 2**3 * 151525


@given(
    st.sampled_from([2, 3, 5, 7]),
    st.integers(1, 10**6),
    st.integers(1, 10**5),
    st.integers(1, 30),
)
def test_lte_matches_brute_force(p, x, m, c):
    # y = x (mod p) by construction, so only x needs filtering
    assume(x % p)
    y = x + p * m
    assert lte_predict(p, x, y, c) == nu(p, x**c - y**c)


@pytest.mark.parametrize(
    "args, condition",
    [
        ((5, 10, 1, 2), "does not divide x"),
        ((5, 6, 5, 2), "does not divide y"),
        ((5, 7, 1, 2), "divides x - y"),
        ((2, 3, 1, 0), "c >= 1"),
    ],
)
def test_lte_preconditions(args, condition):
    with pytest.raises(LTEPreconditionError, match=condition):
        lte_predict(*args)
