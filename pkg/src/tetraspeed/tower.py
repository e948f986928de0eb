"""Power towers modulo 2^alpha * 5^beta.

Every modulus is kept in the closed form ``2**alpha * 5**beta`` so the
Carmichael function has a closed form too. Exponents are reduced with the
generalized Euler rule: for any base ``a`` and any ``E >= max(alpha, beta)``,
``a**E = a**(t + (E - t) % lam) (mod m)`` with ``t = max(alpha, beta)`` and
``lam = carmichael(m)``. That covers bases sharing factors with 10, so no
CRT split is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

import gmpy2

from .exceptions import DomainError, TowerOverflowError, UnsupportedModulusError


def split_modulus(m: int) -> tuple[int, int]:
    """Return ``(alpha, beta)`` with ``m == 2**alpha * 5**beta``."""
    if m < 1:
        raise UnsupportedModulusError(f"modulus must be positive, got {m}")
    alpha = (m & -m).bit_length() - 1
    m >>= alpha
    beta = 0
    while m % 5 == 0:
        m //= 5
        beta += 1
    if m != 1:
        raise UnsupportedModulusError("modulus has a prime factor other than 2 or 5")
    return alpha, beta


def _carmichael_exponents(alpha: int, beta: int) -> tuple[int, int]:
    # lambda(2) = 1, lambda(4) = 2, lambda(2^a) = 2^(a-2); lambda(5^b) = 4 * 5^(b-1)
    two = 0 if alpha <= 1 else (1 if alpha == 2 else alpha - 2)
    if beta == 0:
        return two, 0
    return max(two, 2), beta - 1


def carmichael(m: int) -> int:
    """Carmichael function of ``m = 2**alpha * 5**beta``."""
    alpha, beta = split_modulus(m)
    two, five = _carmichael_exponents(alpha, beta)
    return 2**two * 5**five


def lifting_threshold(m: int) -> int:
    """Smallest exponent from which ``a**E mod m`` is periodic in ``E`` for every ``a``."""
    return max(split_modulus(m))


@dataclass(frozen=True)
class ModulusChain:
    links: tuple[int, ...]
    exponents: tuple[tuple[int, int], ...]

    def __len__(self):
        return len(self.links)

    def __iter__(self):
        return iter(self.links)

    def __getitem__(self, i):
        return self.links[i]


def modulus_chain(m: int) -> ModulusChain:
    """Iterate ``m -> lambda(m)`` down to 1."""
    alpha, beta = split_modulus(m)
    exps = [(alpha, beta)]
    while (alpha, beta) != (0, 0):
        alpha, beta = _carmichael_exponents(alpha, beta)
        exps.append((alpha, beta))
    return ModulusChain(tuple(2**a * 5**b for a, b in exps), tuple(exps))


def pow_mod_lifted(a: int, e_residue: int, e_is_large: bool, m: int) -> int:
    """``a**E mod m`` where ``E`` is either exact or known only modulo ``carmichael(m)``.

    With ``e_is_large`` false, ``e_residue`` is the exponent itself. Otherwise
    the true exponent must satisfy ``E >= lifting_threshold(m)`` and
    ``E = e_residue (mod carmichael(m))``.
    """
    if m == 1:
        split_modulus(m)
        return 0
    if not e_is_large:
        if e_residue < 0:
            raise DomainError("exact exponent must be nonnegative")
        return int(gmpy2.powmod(a, e_residue, m))
    lam = carmichael(m)
    t = lifting_threshold(m)
    return int(gmpy2.powmod(a, t + (e_residue - t) % lam, m))


def small_tower(a: int, b: int, limit: int) -> int | None:
    """Exact value of the height-``b`` tower of ``a`` if it is at most ``limit``, else None."""
    if a < 2:
        return a if b >= 1 else 1
    v = a
    for _ in range(b - 1):
        # a**v > limit as soon as v > log2(limit) because a >= 2
        if v > limit.bit_length():
            return None
        v = a**v
        if v > limit:
            return None
    return v if v <= limit else None


def tower_exact(a: int, b: int, size_cap: int) -> int:
    """Exact tower value, refusing anything longer than ``size_cap`` decimal digits."""
    if b < 1:
        raise DomainError("height must be at least 1")
    v = small_tower(a, b, 10**size_cap - 1)
    if v is None:
        raise TowerOverflowError(f"tower of height {b} over {a} exceeds {size_cap} digits")
    return v


def tower_residue(a: int, b: int, m: int) -> int:
    """Tower of height ``b`` over ``a`` modulo ``m = 2**alpha * 5**beta``.

    Walks down the Carmichael chain, one level per unit of height, and stops
    at the first level where the exponent is small enough to use exactly,
    where the modulus reaches 1, or where the height reaches 1.
    """
    if b < 1:
        raise DomainError("height must be at least 1")
    links = modulus_chain(m).links
    # path[i] = (modulus, exact exponent or None) for the tower of height b - i
    path: list[tuple[int, int | None]] = []
    i = 0
    while True:
        mod = links[i]
        h = b - i
        if mod == 1 or h == 1:
            bottom = 0 if mod == 1 else a % mod
            break
        limit = max(lifting_threshold(mod), 1 << 12)
        exact = small_tower(a, h - 1, limit)
        if exact is not None:
            bottom = int(gmpy2.powmod(a, exact, mod))
            break
        path.append((mod, None))
        i += 1
    r = bottom
    for mod, _ in reversed(path):
        r = pow_mod_lifted(a, r, True, mod)
    return r


@dataclass(frozen=True)
class TowerResidue:
    base: int
    height: int
    modulus_digits: int
    residue: int
    exact: bool

    def __str__(self):
        return str(self.residue).zfill(self.modulus_digits)


def tower_mod(a: int, b: int, n: int) -> TowerResidue:
    """Tower of height ``b`` over ``a`` modulo ``10**n``."""
    if a < 2:
        raise DomainError("tower base must be at least 2")
    if n < 1:
        raise DomainError("digit count must be at least 1")
    m = 10**n
    exact = small_tower(a, b, m - 1)
    residue = exact if exact is not None else tower_residue(a, b, m)
    return TowerResidue(a, b, n, residue, exact is not None)


def tower_residues(a: int, max_height: int, n: int) -> list[int]:
    """Residues modulo ``10**n`` of the towers of heights ``1..max_height``.

    Fills the table of ``tower(h) mod chain[i]`` for ``h + i <= max_height``
    bottom-up; every entry is used exactly once, so this is the cheapest way
    to get a whole height profile at a shared precision.
    """
    if a < 2:
        raise DomainError("tower base must be at least 2")
    if max_height < 1 or n < 1:
        raise DomainError("height and digit count must be at least 1")
    links = modulus_chain(10**n).links
    limit = 10**n
    exact = [None] + [small_tower(a, h, limit) for h in range(1, max_height + 1)]
    depth = min(len(links) - 1, max_height - 1)
    below: list = []
    for i in range(depth, -1, -1):
        mod = links[i]
        row = [None] * (max_height - i + 1)
        if mod == 1:
            row[1:] = [0] * (max_height - i)
        else:
            lam, t = links[i + 1], lifting_threshold(mod)
            a_mod = gmpy2.mpz(a % mod)
            row[1] = a_mod
            for h in range(2, max_height - i + 1):
                e = exact[h - 1]
                if e is None:
                    e = t + (below[h - 1] - t) % lam
                row[h] = gmpy2.powmod(a_mod, e, mod)
        below = row
    return [int(r) for r in below[1:]]
