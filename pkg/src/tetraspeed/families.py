"""Constructive families of bases with a predicted constant congruence speed."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property

import gmpy2

from .arith import decimal_length, digit_sum, last_nonzero_digit, nu
from .decadic import alpha25_prefix
from .exceptions import ClassNotCoveredError, DomainError

EXACT = "exact"
AT_LEAST = "at-least"

FAMILIES = ("lemma20", "thm22", "thm23", "thm24", "cor21", "cor25", "remark1")

# Bases with more digits than this are handled as (root, degree) pairs only.
MATERIALIZE_DIGITS = 20_000


class Relation(enum.Enum):
    EQUAL = "equal"
    AT_LEAST = "at-least"


@dataclass(frozen=True)
class FamilyParams:
    t: int | None = None
    k: int | None = None
    c: int | None = None
    h: int | None = None
    n: int | None = None

    def as_dict(self) -> dict:
        return {key: v for key, v in vars(self).items() if v is not None}


@dataclass(frozen=True)
class ConstructedBase:
    family: str
    params: FamilyParams
    root: int
    degree: int
    predicted_speed: int
    prediction_kind: str = EXACT
    theorem: str = field(default="", compare=False)

    def __post_init__(self):
        if self.root % 10 == 0:
            raise DomainError("root must not be a multiple of 10")

    @property
    def base_digits_estimate(self) -> int:
        return decimal_length(self.root) * self.degree

    @property
    def is_huge(self) -> bool:
        return self.base_digits_estimate > MATERIALIZE_DIGITS

    @cached_property
    def base(self) -> int:
        if self.is_huge:
            raise DomainError(
                f"base has about {self.base_digits_estimate} digits; use base_mod or the (root, degree) pair"
            )
        return self.root**self.degree

    def base_mod(self, m: int) -> int:
        return int(gmpy2.powmod(self.root, self.degree, m))

    def describe(self) -> str:
        r = _pretty_root(self.root)
        return r if self.degree == 1 else f"({r})^{self.degree}"


def _pretty_root(x: int) -> str:
    """Render sums of powers of ten compactly, e.g. ``10^1314 + 10^997 + 1``."""
    s = str(x)
    if len(s) < 12:
        return s
    terms = []
    for pos, ch in enumerate(reversed(s)):
        if ch == "0":
            continue
        if pos == 0:
            terms.append(ch)
        else:
            coeff = "" if ch == "1" else f"{ch}*"
            terms.append(f"{coeff}10^{pos}")
    if len(terms) > 6:
        return s
    return " + ".join(reversed(terms))


def _need(cond: bool, message: str) -> None:
    if not cond:
        raise DomainError(message)


def min_nu(c: int) -> int:
    return min(nu(5, c), nu(2, c))


def lemma20_base(t: int) -> ConstructedBase:
    _need(t >= 1, "t must be at least 1 (t = 0 would be the excluded base 1)")
    root = 10**t - 1
    return ConstructedBase("lemma20", FamilyParams(t=t), root, 1, t, EXACT, "V(10^t - 1) = t")


def thm23_root(t: int, k: int | None = None) -> int:
    """Bump the (t+1)-th digit of alpha25 and keep the t digits below it.

    The bumped digit goes up by one unless it is 9, in which case it goes
    down by one; with ``k`` given, ``10**(k+t)`` is added on top.
    """
    _need(t >= 2, "t must be at least 2")
    prefix = alpha25_prefix(t + 1)
    x = prefix.digit(t + 1)
    bumped = x - 1 if x == 9 else x + 1
    root = bumped * 10**t + prefix.value % 10**t
    if k is not None:
        _need(k >= 1, "k must be at least 1")
        root += 10 ** (k + t)
    return root


def thm23_construct(t: int, k: int | None = None, c: int = 1) -> ConstructedBase:
    _need(c >= 1, "c must be at least 1")
    root = thm23_root(t, k)
    # odd powers keep the speed of a root = 5 (mod 20); even powers can only raise it
    kind = EXACT if c % 2 == 1 else AT_LEAST
    return ConstructedBase("thm23", FamilyParams(t=t, k=k, c=c), root, c, t, kind, "V(root) = t, V(root^c) >= t")


def thm22_base(t: int, k: int, c: int) -> ConstructedBase:
    _need(t >= 2, "t must be at least 2")
    _need(k >= 1 and c >= 1, "k and c must be at least 1")
    root = 10 ** (k + t) + 10**t + 1
    return ConstructedBase(
        "thm22", FamilyParams(t=t, k=k, c=c), root, c, t + min_nu(c), EXACT, "t + min(nu5(c), nu2(c))"
    )


def cor21_instance(t: int, k: int, h: int) -> ConstructedBase:
    _need(t >= 1 and k >= 1 and h >= 0, "need t >= 1, k >= 1, h >= 0")
    params = FamilyParams(t=t, k=k, h=h)
    if t == 1:
        root = 10 ** (k + 1) + 86
        degree = 2 ** (k - 1) * 5**h
    else:
        root = 10 ** (k + t) + 10**t + 1
        degree = 2 ** (k + h) * 5**h
    return ConstructedBase("cor21", params, root, degree, t + h, EXACT, "V = t + h")


def thm24_base(c: int, t: int, k: int) -> ConstructedBase:
    _need(c >= 1 and k >= 1, "c and k must be at least 1")
    _need(t > min_nu(c) + 1, f"t must exceed min(nu5(c), nu2(c)) + 1 = {min_nu(c) + 1}")
    shift = nu(5, c) if last_nonzero_digit(c) != 5 else nu(2, c)
    root = 10 ** (k + t) + 10 ** (t - shift) + 1
    return ConstructedBase("thm24", FamilyParams(t=t, k=k, c=c), root, c, t, EXACT, "V = t")


def cor25_base(c: int, k: int) -> ConstructedBase:
    _need(c >= 1 and k >= 1, "c and k must be at least 1")
    params = FamilyParams(k=k, c=c)
    if c == 1:
        return ConstructedBase("cor25", params, 10 ** (1 + k) + 11, 1, 1, EXACT, "V = c")
    if c == 2:
        return ConstructedBase("cor25", params, 10 ** (2 + k) + 101, 2, 2, EXACT, "V = c")
    b = thm24_base(c, c, k)
    return ConstructedBase("cor25", params, b.root, c, c, EXACT, "V = c")


def exact_degree_certificate(root: int) -> bool:
    """Digit sum 3 and not divisible by 9: ``root`` is divisible by 3 exactly once, so it is no perfect power."""
    return digit_sum(root) == 3 and root % 9 != 0


def remark1_base(n: int, c: int = 1) -> ConstructedBase:
    _need(n >= 1 and c >= 1, "n and c must be at least 1")
    root = 10 ** (n + 1) + 86
    kind = EXACT if c % 5 else AT_LEAST
    return ConstructedBase("remark1", FamilyParams(n=n, c=c), root, c, 1, kind, "V(root^c) = 1 when 5 does not divide c")


def remark2_residue(c: int, t: int, k: int) -> int:
    """Predicted residue of ``(10**(k+t) + 10**t + 1)**c`` modulo ``10**(t+d)``, ``d`` the length of ``c``."""
    _need(k >= 1, "k must be at least 1")
    d = decimal_length(c)
    _need(t >= d + 1, f"t must be at least {d + 1}")
    return (c * 10**t + 1) % 10 ** (t + d)


def remark0_relation(a: int, c: int) -> Relation:
    """How ``V(a**c)`` relates to ``V(a)`` for ``a`` in one of the classes 6 mod 10, 5 mod 20, 1 mod 20."""
    _need(c >= 1, "c must be at least 1")
    if a % 10 == 6 or a % 20 == 1:
        return Relation.EQUAL if c % 5 else Relation.AT_LEAST
    if a % 20 == 5:
        return Relation.EQUAL if c % 2 else Relation.AT_LEAST
    raise ClassNotCoveredError(f"{a} is not congruent to 6 mod 10, 5 mod 20 or 1 mod 20")


CONSTRUCTORS = {
    "lemma20": (lemma20_base, ("t",)),
    "thm22": (thm22_base, ("t", "k", "c")),
    "thm23": (thm23_construct, ("t", "k", "c")),
    "thm24": (thm24_base, ("c", "t", "k")),
    "cor21": (cor21_instance, ("t", "k", "h")),
    "cor25": (cor25_base, ("c", "k")),
    "remark1": (remark1_base, ("n", "c")),
}


def construct(family: str, **params) -> ConstructedBase:
    """Build a family member from keyword parameters, e.g. ``construct("thm22", t=2, k=1, c=5)``."""
    try:
        fn, names = CONSTRUCTORS[family]
    except KeyError:
        raise DomainError(f"unknown family {family!r}; expected one of {FAMILIES}") from None
    unknown = set(params) - set(names)
    if unknown:
        raise DomainError(f"{family} takes parameters {names}, got {sorted(unknown)}")
    return fn(**params)
