import pytest

from oracles import alpha25_crt
from tetraspeed.decadic import (
    alpha25_prefix,
    alpha76_prefix,
    idempotent_prefix,
    idempotents_mod,
    is_automorphic,
)


@pytest.mark.parametrize("n", [2, 3, 6])
def test_alpha25_matches_crt(n):
    assert alpha25_prefix(n).value == alpha25_crt(n)


def test_alpha25_examples():
    assert alpha25_prefix(2).digits == "25"
    assert alpha25_prefix(6).digits == "890625" == str(alpha25_crt(6)).zfill(6)
    assert alpha25_prefix(3).digits == "625"


def test_alpha76_examples():
    assert alpha76_prefix(7).digits == "7109376"
    assert alpha76_prefix(2).digits == "76"
    assert alpha76_prefix(1).digits == "6"


def test_leading_zero_kept():
    p = alpha25_prefix(10)
    assert len(p.digits) == 10
    assert p.value == alpha25_crt(10)
    assert alpha25_prefix(4).digits == "0625"
    assert alpha25_prefix(4).digit(4) == 0


@pytest.mark.parametrize("y, n, expected", [(76, 2, True), (25, 2, True), (26, 2, False), (376, 3, True)])
def test_is_automorphic(y, n, expected):
    assert is_automorphic(y, n) is expected


@pytest.mark.parametrize("n", [1, 5, 50, 100, 300])
def test_prefix_invariants(n):
    m = 10**n
    a25, a76 = alpha25_prefix(n), alpha76_prefix(n)
    assert (a25.value + a76.value) % m == 1
    for p in (a25, a76, idempotent_prefix("alpha00", n), idempotent_prefix("alpha01", n)):
        assert is_automorphic(p.value, n)
        assert len(p.digits) == n
    assert a25.digits.endswith("5") and a76.digits.endswith("6")
    assert a25.value == alpha25_crt(n)


def test_prefix_coherence():
    long = alpha25_prefix(120).value
    for n in range(1, 120, 7):
        assert long % 10**n == alpha25_prefix(n).value


@pytest.mark.parametrize("n", range(1, 7))
def test_exactly_four_idempotents(n):
    found = idempotents_mod(n)
    assert len(found) == 4
    assert sorted(found) == sorted(idempotent_prefix(r, n).value for r in ("alpha00", "alpha01", "alpha25", "alpha76"))


def test_stream_order():
    assert alpha76_prefix(7).stream() == [6, 7, 3, 9, 0, 1, 7]
