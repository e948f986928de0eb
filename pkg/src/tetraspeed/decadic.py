"""Trailing digits of the four 10-adic solutions of y**2 = y."""

from __future__ import annotations

from dataclasses import dataclass

from .exceptions import DomainError

ROOTS = ("alpha00", "alpha01", "alpha25", "alpha76")


@dataclass(frozen=True)
class DecadicPrefix:
    """``length`` trailing digits of a 10-adic idempotent, most significant first."""

    root: str
    length: int
    digits: str

    @property
    def value(self) -> int:
        return int(self.digits)

    def digit(self, i: int) -> int:
        """The ``i``-th digit counted from the right, starting at 1."""
        if not 1 <= i <= self.length:
            raise DomainError(f"digit position {i} outside 1..{self.length}")
        return int(self.digits[-i])

    def stream(self) -> list[int]:
        """Digits least significant first."""
        return [int(ch) for ch in reversed(self.digits)]

    def __str__(self):
        return self.digits


def _check_length(n):
    if n < 1:
        raise DomainError("prefix length must be at least 1")


def alpha25_prefix(n: int) -> DecadicPrefix:
    """Fixed point of ``x -> x**2 mod 10**n`` reached from ``x = 5``."""
    _check_length(n)
    m = 10**n
    x = 5
    while True:
        y = x * x % m
        if y == x:
            break
        x = y
    return DecadicPrefix("alpha25", n, str(x).zfill(n))


def alpha76_prefix(n: int) -> DecadicPrefix:
    _check_length(n)
    y = (1 - alpha25_prefix(n).value) % 10**n
    return DecadicPrefix("alpha76", n, str(y).zfill(n))


def idempotent_prefix(root: str, n: int) -> DecadicPrefix:
    _check_length(n)
    if root == "alpha00":
        return DecadicPrefix(root, n, "0" * n)
    if root == "alpha01":
        return DecadicPrefix(root, n, "1".zfill(n))
    if root == "alpha25":
        return alpha25_prefix(n)
    if root == "alpha76":
        return alpha76_prefix(n)
    raise DomainError(f"unknown root {root!r}; expected one of {ROOTS}")


def is_automorphic(y: int, n: int) -> bool:
    _check_length(n)
    m = 10**n
    return y * y % m == y % m


def idempotents_mod(n: int) -> list[int]:
    """All ``y`` in ``[0, 10**n)`` with ``y**2 = y (mod 10**n)``, by exhaustive search."""
    _check_length(n)
    m = 10**n
    return [y for y in range(m) if y * y % m == y]
