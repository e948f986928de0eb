"""Congruence speed of integer tetration in radix 10.

``d(b)`` is the number of trailing digits shared by the towers of heights
``b`` and ``b + 1``; the congruence speed at height ``b`` is
``d(b) - d(b - 1)`` with ``d(0) = 0``, and the constant congruence speed is
the value those increments settle on.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import gmpy2

from .arith import agreement_depth, decimal_length, nu, nu_capped
from .exceptions import (
    DomainError,
    InvalidBaseError,
    NotStabilizedError,
    PrecisionExhaustedError,
)
from .tower import tower_residues

WINDOWED = "windowed"
GUARANTEED = "guaranteed"
POLICIES = (WINDOWED, GUARANTEED)

DEFAULT_WINDOW = 30
DEFAULT_MAX_DIGITS = 200_000
DEFAULT_MAX_HEIGHT = 2_000
DEFAULT_GUARANTEED_CUTOFF = 200
# Cap on the base-length term of the minimum height; see min_height_for.
MIN_HEIGHT_LENGTH_CAP = 32


def check_base(a: int) -> None:
    if a <= 1 or a % 10 == 0:
        raise InvalidBaseError(f"{a} is not a valid tetration base (need a >= 2, 10 does not divide a)")


@dataclass
class SpeedProfile:
    base: int
    depths: list[int]
    speeds: list[int]
    precision_digits: int
    stabilization_height: int = field(init=False)
    constant_speed: int = field(init=False)

    def __post_init__(self):
        # first height from which every observed increment is equal
        tail = self.speeds[-1]
        b = len(self.speeds)
        while b > 1 and self.speeds[b - 2] == tail:
            b -= 1
        self.stabilization_height = b
        self.constant_speed = tail

    @property
    def max_height(self):
        return len(self.speeds)

    def speed_at(self, b: int) -> int:
        return self.speeds[b - 1]


def _initial_digits(max_height: int) -> int:
    # depths grow linearly in the height; start from a slope guess of 4
    return 4 * (max_height + 1) + 40


def speed_profile(
    a: int,
    max_height: int,
    *,
    precision: int | None = None,
    max_digits: int = DEFAULT_MAX_DIGITS,
) -> SpeedProfile:
    """Speeds ``V(a, 1..max_height)`` computed from tower residues at one shared precision.

    Precision doubles until no depth saturates, raising
    :class:`PrecisionExhaustedError` past ``max_digits``.
    """
    check_base(a)
    if max_height < 1:
        raise DomainError("max_height must be at least 1")
    n = precision or _initial_digits(max_height)
    while True:
        n = min(n, max_digits)
        residues = tower_residues(a, max_height + 1, n)
        depths = []
        saturated = False
        for x, y in zip(residues, residues[1:]):
            d = agreement_depth(x, y, n)
            if d.saturated:
                saturated = True
                break
            depths.append(d.digits)
        if not saturated:
            break
        if n >= max_digits:
            raise PrecisionExhaustedError(f"depths for base {a} saturate at {max_digits} digits")
        n *= 2
    speeds = [d1 - d0 for d0, d1 in zip([0] + depths, depths)]
    return SpeedProfile(a, depths, speeds, n)


def speed_at(a: int, b: int, *, max_digits: int = DEFAULT_MAX_DIGITS) -> int:
    if b < 1:
        raise DomainError("height must be at least 1")
    return speed_profile(a, b, max_digits=max_digits).speeds[-1]


def min_height_for(a: int) -> int:
    """Fewest heights the windowed policy observes before trusting a constant tail.

    The base-length term is capped: towers over a base with hundreds of
    digits cost quadratically in the height, and the length of the
    pre-stabilization phase is governed by low-order valuations of the
    base rather than by its total size.
    """
    return max(10, min(decimal_length(a), MIN_HEIGHT_LENGTH_CAP) + 8)


def _last_run_start(speeds) -> int:
    """1-based height where the final run of equal speeds begins."""
    s = len(speeds)
    while s > 1 and speeds[s - 2] == speeds[-1]:
        s -= 1
    return s


def _windowed_profile(a, window, min_height, max_height, max_digits):
    # a short pilot profile gives the slope of the depths and a first guess
    # at where the speed settles
    pilot = speed_profile(a, 8, precision=64, max_digits=max_digits)
    height = max(min_height, window + 1, _last_run_start(pilot.speeds) + window - 1)
    height = min(height, max_height)
    precision = (max(pilot.speeds) + 1) * (height + 1) + 40
    while True:
        prof = speed_profile(a, height, precision=precision, max_digits=max_digits)
        tail = prof.speeds[-window:]
        if len(tail) == window and len(set(tail)) == 1:
            return prof
        if height >= max_height:
            raise NotStabilizedError(f"speed of base {a} not constant over the last {window} heights up to {max_height}")
        # the latest run needs window heights of its own; grow at least by half
        new_height = max(_last_run_start(prof.speeds) + window - 1, height + height // 2)
        new_height = min(new_height, max_height)
        precision = prof.precision_digits * new_height // height
        height = new_height


def constant_speed_profile(
    a: int,
    policy: str = WINDOWED,
    *,
    window: int = DEFAULT_WINDOW,
    min_height: int | None = None,
    max_height: int = DEFAULT_MAX_HEIGHT,
    max_digits: int = DEFAULT_MAX_DIGITS,
    guaranteed_cutoff: int = DEFAULT_GUARANTEED_CUTOFF,
) -> SpeedProfile:
    """Profile whose last speed is the constant congruence speed under ``policy``.

    ``guaranteed`` evaluates up to height ``a + 1``, which always suffices,
    and is refused for bases above ``guaranteed_cutoff``. ``windowed`` grows
    the height until the last ``window`` increments agree.
    """
    check_base(a)
    if policy == GUARANTEED:
        if a > guaranteed_cutoff:
            raise DomainError(f"guaranteed policy limited to bases <= {guaranteed_cutoff}")
        return speed_profile(a, a + 1, max_digits=max_digits)
    if policy != WINDOWED:
        raise DomainError(f"unknown stabilization policy {policy!r}")
    if window < 1:
        raise DomainError("window must be at least 1")
    if min_height is None:
        min_height = min_height_for(a)
    return _windowed_profile(a, window, min_height, max_height, max_digits)


def constant_speed(a: int, policy: str = WINDOWED, **kwargs) -> int:
    return constant_speed_profile(a, policy, **kwargs).constant_speed


def constant_speed_shortcut(a: int) -> int | None:
    """Constant speed read off a closed form, or None when ``a`` is not covered.

    Covers ``a = 1 (mod 100)``, where the speed is ``min(nu5(a-1), nu2(a-1))``,
    and the repunit-nines ``a = 10**t - 1`` with speed ``t``.
    """
    if a > 1 and a % 100 == 1:
        return min(nu(5, a - 1), nu(2, a - 1))
    s = str(a)
    if a > 1 and s == "9" * len(s):
        return len(s)
    return None


def power_speed_shortcut(root: int, degree: int, cap: int) -> tuple[int, int, int]:
    """Speed of ``root**degree`` for ``root = 1 (mod 100)`` without materializing the power.

    Returns ``(speed, nu5, nu2)`` where the valuations of ``root**degree - 1``
    come from modular exponentiation modulo ``5**cap`` and ``2**cap``.
    A valuation equal to ``cap`` is only a lower bound; the speed is exact
    as long as the smaller one stays below ``cap``, otherwise
    :class:`PrecisionExhaustedError` is raised.
    """
    if root % 100 != 1 or root == 1:
        raise DomainError("power shortcut needs a root congruent to 1 mod 100")
    if degree < 1 or cap < 1:
        raise DomainError("degree and cap must be positive")
    v5 = nu_capped(5, int(gmpy2.powmod(root, degree, 5**cap)) - 1, cap)
    v2 = nu_capped(2, int(gmpy2.powmod(root, degree, 2**cap)) - 1, cap)
    if min(v5, v2) >= cap:
        raise PrecisionExhaustedError(f"valuations reach the cap {cap}")
    return min(v5, v2), v5, v2
