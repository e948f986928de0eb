"""Batch verification of predicted speeds against the definitional oracle."""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor

import gmpy2

from .arith import decimal_length, nu
from .cache import SpeedCache
from .exceptions import ComputationError, DomainError, TetraspeedError
from .families import (
    AT_LEAST,
    CONSTRUCTORS,
    EXACT,
    ConstructedBase,
    Relation,
    construct,
    exact_degree_certificate,
    remark0_relation,
    remark2_residue,
)
from .report import FAIL, PASS, InstanceResult, VerifyReport
from .speed import WINDOWED, constant_speed_profile, power_speed_shortcut

# Above this many digits a base is verified through valuations of base - 1.
ORACLE_DIGIT_LIMIT = 5_000

CAMPAIGN_PARAMS = {name: names for name, (_, names) in CONSTRUCTORS.items()}
CAMPAIGN_PARAMS.update(
    {
        "lemma25": ("t", "k", "c"),
        "remark2": ("c", "t", "k"),
        "remark0": ("a", "c"),
    }
)
CAMPAIGNS = tuple(CAMPAIGN_PARAMS)


def parse_range(text: str) -> list[int]:
    """Parse ``"lo..hi"`` (inclusive), a single integer, or a comma list of either."""
    values: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..", 1)
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise DomainError(f"empty range {part!r}")
            values.extend(range(lo, hi + 1))
        else:
            values.append(int(part))
    return sorted(set(values))


def format_values(values) -> str:
    values = sorted(values)
    if len(values) > 1 and values == list(range(values[0], values[-1] + 1)):
        return f"{values[0]}..{values[-1]}"
    return ",".join(map(str, values))


def campaign_id(family: str, grid: dict) -> str:
    names = CAMPAIGN_PARAMS[family]
    return family + ":" + ";".join(f"{n}={format_values(grid[n])}" for n in names if n in grid)


def observe_speed(a: int, policy: str, cache: SpeedCache | None = None, **speed_opts) -> tuple[int, int]:
    """Constant speed of ``a`` by the definitional oracle, as ``(speed, precision_digits)``."""
    if cache is not None:
        hit = cache.get(a, policy)
        if hit is not None:
            return hit, 0
    prof = constant_speed_profile(a, policy, **speed_opts)
    if cache is not None:
        cache.put(a, prof.constant_speed, policy)
    return prof.constant_speed, prof.precision_digits


def _observe_constructed(cb: ConstructedBase, policy, cache, speed_opts):
    if cb.base_digits_estimate <= ORACLE_DIGIT_LIMIT:
        v, prec = observe_speed(cb.base, policy, cache, **speed_opts)
        return v, "oracle", prec
    if cb.root % 100 != 1:
        raise DomainError("base too large for the oracle and not covered by the valuation shortcut")
    cap = cb.predicted_speed + 5
    while True:
        try:
            v, _, _ = power_speed_shortcut(cb.root, cb.degree, cap)
            return v, "valuation-shortcut", cap
        except ComputationError:
            cap *= 2


def _compare(kind: str, predicted, observed) -> bool:
    if kind == AT_LEAST:
        return observed >= predicted
    return observed == predicted


def _family_instance(family, params, policy, cache, speed_opts) -> InstanceResult:
    cb = construct(family, **params)
    observed, method, prec = _observe_constructed(cb, policy, cache, speed_opts)
    ok = _compare(cb.prediction_kind, cb.predicted_speed, observed)
    reason = "" if ok else "observed speed contradicts prediction"
    if ok and family == "cor25" and params["c"] >= 3 and not exact_degree_certificate(cb.root):
        ok, reason = False, "root fails the digit-sum-3 exact-degree certificate"
    return InstanceResult(params, cb.predicted_speed, observed, cb.prediction_kind, PASS if ok else FAIL, method, reason, prec)


def _lemma25_instance(params) -> InstanceResult:
    t, k, c = params["t"], params["k"], params["c"]
    if t < 2 or k < 1 or c < 1:
        raise DomainError("need t >= 2, k >= 1, c >= 1")
    root = 10 ** (k + t) + 10**t + 1
    diff = root**c - 1
    predicted = [t + nu(5, c), t + nu(2, c)]
    observed = [nu(5, diff), nu(2, diff)]
    ok = predicted == observed
    return InstanceResult(params, predicted, observed, "valuations", PASS if ok else FAIL, "brute-force", "" if ok else "valuation mismatch")


def _remark2_instance(params) -> InstanceResult:
    c, t, k = params["c"], params["t"], params["k"]
    predicted = remark2_residue(c, t, k)
    root = 10 ** (k + t) + 10**t + 1
    observed = int(gmpy2.powmod(root, c, 10 ** (t + decimal_length(c))))
    ok = predicted == observed
    return InstanceResult(params, predicted, observed, "residue", PASS if ok else FAIL, "modular-power", "" if ok else "residue mismatch")


def _remark0_instance(params, policy, cache, speed_opts) -> InstanceResult:
    a, c = params["a"], params["c"]
    relation = remark0_relation(a, c)
    kind = EXACT if relation is Relation.EQUAL else AT_LEAST
    v_root, p1 = observe_speed(a, policy, cache, **speed_opts)
    v_pow, p2 = observe_speed(a**c, policy, cache, **speed_opts)
    ok = _compare(kind, v_root, v_pow)
    return InstanceResult(params, v_root, v_pow, kind, PASS if ok else FAIL, "oracle", "" if ok else "relation violated", max(p1, p2))


def evaluate_instance(family: str, params: dict, policy: str = WINDOWED, cache=None, speed_opts=None) -> InstanceResult:
    """Evaluate one campaign instance; domain and computation errors become failures."""
    speed_opts = speed_opts or {}
    try:
        if family == "lemma25":
            return _lemma25_instance(params)
        if family == "remark2":
            return _remark2_instance(params)
        if family == "remark0":
            return _remark0_instance(params, policy, cache, speed_opts)
        return _family_instance(family, params, policy, cache, speed_opts)
    except TetraspeedError as exc:
        return InstanceResult(params, None, None, "", FAIL, "", f"{type(exc).__name__}: {exc}")


def _evaluate_packed(args):
    return evaluate_instance(*args)


def iter_grid(family: str, grid: dict) -> list[dict]:
    if family not in CAMPAIGN_PARAMS:
        raise DomainError(f"unknown campaign {family!r}; expected one of {CAMPAIGNS}")
    names = CAMPAIGN_PARAMS[family]
    unknown = set(grid) - set(names)
    if unknown:
        raise DomainError(f"{family} grid takes {names}, got {sorted(unknown)}")
    used = [n for n in names if n in grid]
    axes = [sorted(set(grid[n])) for n in used]
    return [dict(zip(used, combo)) for combo in itertools.product(*axes)]


def verify_family(
    family: str,
    grid: dict,
    policy: str = WINDOWED,
    *,
    jobs: int = 1,
    cache: SpeedCache | None = None,
    speed_opts: dict | None = None,
) -> VerifyReport:
    """Check every grid instance of ``family`` and collect the outcomes.

    ``grid`` maps parameter names to iterables of values; instances are the
    Cartesian product, ordered by the family's parameter order. The report
    is the same for any ``jobs``; with ``jobs > 1`` the cache is consulted
    and filled only in the parent process.
    """
    start = time.perf_counter()
    instances = iter_grid(family, grid)
    speed_opts = speed_opts or {}
    if jobs <= 1:
        results = [evaluate_instance(family, p, policy, cache, speed_opts) for p in instances]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_evaluate_packed, [(family, p, policy, None, speed_opts) for p in instances]))
        if cache is not None:
            _backfill_cache(family, results, policy, cache)
    report = VerifyReport(campaign_id(family, grid), results)
    report.wall_time = time.perf_counter() - start
    return report


def _backfill_cache(family, results, policy, cache):
    for r in results:
        if r.method != "oracle" or family in ("remark0",):
            continue
        cb = construct(family, **r.params)
        cache.put(cb.base, r.observed, policy)
