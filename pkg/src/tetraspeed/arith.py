"""Exact digit and valuation primitives on Python integers."""

from __future__ import annotations

from typing import NamedTuple

from .exceptions import DomainError, LTEPreconditionError, UndefinedValuationError


class Depth(NamedTuple):
    """Agreement depth of two residues; ``saturated`` means the cap was reached."""

    digits: int
    saturated: bool


def _check_prime(p: int) -> None:
    if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
        raise DomainError(f"{p} is not prime")


def nu(p: int, n: int) -> int:
    """Return the exponent of the prime ``p`` in ``n``.

    >>> nu(5, 651250)
    4
    """
    _check_prime(p)
    if n == 0:
        raise UndefinedValuationError("valuation of 0 is infinite")
    n = abs(n)
    e = 0
    # Strip p^(2^i) blocks first so huge powers do not cost one division per factor.
    while n % p == 0:
        q, e_step = p, 1
        while n % (q * q) == 0:
            q, e_step = q * q, e_step * 2
        n //= q
        e += e_step
    return e


def nu_capped(p: int, n: int, cap: int) -> int:
    """Valuation of ``n`` known only modulo ``p**cap``; returns ``cap`` when ``n`` vanishes there."""
    n %= p**cap
    if n == 0:
        return cap
    return nu(p, n)


def last_nonzero_digit(c: int) -> int:
    if c <= 0:
        raise DomainError("last nonzero digit needs a positive integer")
    while c % 10 == 0:
        c //= 10
    return c % 10


def decimal_length(c: int) -> int:
    if c <= 0:
        raise DomainError("decimal length needs a positive integer")
    return len(str(c))


def digit_sum(n: int) -> int:
    if n < 0:
        raise DomainError("digit sum needs a nonnegative integer")
    return sum(map(int, str(n)))


def agreement_depth(x: int, y: int, cap: int) -> Depth:
    """Largest ``k <= cap`` with ``x = y (mod 10**k)``.

    Both arguments must be meaningful modulo ``10**cap``. When the residues
    agree on all ``cap`` digits the true depth may be larger, which is
    reported through the ``saturated`` flag.
    """
    if cap < 1:
        raise DomainError("cap must be at least 1")
    diff = (x - y) % 10**cap
    if diff == 0:
        return Depth(cap, True)
    s = str(diff)
    return Depth(len(s) - len(s.rstrip("0")), False)


def lte_predict(p: int, x: int, y: int, c: int) -> int:
    """Predict ``nu(p, x**c - y**c)`` with the lifting-the-exponent identity."""
    _check_prime(p)
    if c < 1:
        raise LTEPreconditionError("c >= 1")
    if x % p == 0:
        raise LTEPreconditionError(f"{p} does not divide x")
    if y % p == 0:
        raise LTEPreconditionError(f"{p} does not divide y")
    if (x - y) % p != 0:
        raise LTEPreconditionError(f"{p} divides x - y")
    if x == y:
        raise LTEPreconditionError("x != y")
    if p != 2:
        return nu(p, x - y) + nu(p, c)
    if c % 2 == 1:
        return nu(2, x - y)
    if x + y == 0:
        raise LTEPreconditionError("x + y != 0")
    return nu(2, x - y) + nu(2, x + y) + nu(2, c) - 1
