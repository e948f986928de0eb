"""Reference implementations kept deliberately separate from the package code paths."""

import math


def phi(m):
    result, n, p = m, m, 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def exact_small(a, b, limit):
    v = a
    for _ in range(b - 1):
        if v > 4096:
            return None
        v = a**v
        if v > limit:
            return None
    return v


def tower_mod_ref(a, b, m):
    """Tower modulo any m by Euler's theorem, recursing on phi."""
    if m == 1:
        return 0
    if b == 1:
        return a % m
    e = exact_small(a, b - 1, 1 << 4096)
    if e is not None:
        return pow(a, e, m)
    p = phi(m)
    k = 1 + math.ceil(m.bit_length() / p)
    return pow(a, tower_mod_ref(a, b - 1, p) % p + k * p, m)


def common_suffix(x, y, n):
    sx, sy = str(x % 10**n).zfill(n), str(y % 10**n).zfill(n)
    d = 0
    while d < n and sx[-1 - d] == sy[-1 - d]:
        d += 1
    return d


def speeds_ref(a, max_height, n):
    towers = [tower_mod_ref(a, b, 10**n) for b in range(1, max_height + 2)]
    depths = [common_suffix(x, y, n) for x, y in zip(towers, towers[1:])]
    assert max(depths) < n, "reference precision too small"
    return [d1 - d0 for d0, d1 in zip([0] + depths, depths)]


def alpha25_crt(n):
    """The idempotent = 0 mod 5^n and = 1 mod 2^n."""
    m5, m2 = 5**n, 2**n
    return m5 * pow(m5, -1, m2) % (m5 * m2)
