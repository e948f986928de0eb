"""Command-line interface.

Exit codes: 0 success, 1 verification failures, 2 usage or domain errors,
3 computation errors (precision exhausted, no stabilization, missing data).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import speed as sp
from .cache import SpeedCache
from .decadic import alpha25_prefix, alpha76_prefix
from .exceptions import ComputationError, DomainError, FixtureError, TetraspeedError
from .families import CONSTRUCTORS, FAMILIES, construct, exact_degree_certificate
from .oeis import check_sequence, fetch_bfile, load_fixture, parse_bfile
from .tower import tower_mod
from .verify import CAMPAIGN_PARAMS, CAMPAIGNS, parse_range, verify_family

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_COMPUTE = 0, 1, 2, 3


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("common options")
    g.add_argument("--format", choices=("human", "json", "tsv"), default="human")
    g.add_argument("--json", dest="format", action="store_const", const="json", help="shorthand for --format json")
    g.add_argument("--max-digits", type=_positive, default=sp.DEFAULT_MAX_DIGITS, help="hard precision cap in digits")
    g.add_argument("--max-height", type=_positive, default=sp.DEFAULT_MAX_HEIGHT, help="height cap for stabilization")
    g.add_argument("--jobs", type=_positive, default=1, help="parallel workers for verify campaigns")
    g.add_argument("--cache", metavar="PATH", help="speed cache file (base<TAB>speed<TAB>policy)")
    g.add_argument("--fixtures", metavar="DIR", help="OEIS fixture directory")
    g.add_argument("--online", action="store_true", help="allow network access (oeis fetch only)")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="tetraspeed", description="Congruence speed of integer tetration in radix 10.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("speed", parents=[common], help="constant congruence speed V(a)")
    p.add_argument("a", type=int)
    p.add_argument("--policy", choices=sp.POLICIES, default=sp.WINDOWED)
    p.add_argument("--window", type=_positive, default=sp.DEFAULT_WINDOW)

    p = sub.add_parser("speed-at", parents=[common], help="congruence speed V(a, b) at one height")
    p.add_argument("a", type=int)
    p.add_argument("b", type=_positive)

    p = sub.add_parser("profile", parents=[common], help="speeds V(a, 1..B)")
    p.add_argument("a", type=int)
    p.add_argument("--height", type=_positive, required=True)

    p = sub.add_parser("tower", parents=[common], help="tower of height b over a modulo 10^n")
    p.add_argument("a", type=int)
    p.add_argument("b", type=_positive)
    p.add_argument("--digits", type=_positive, required=True)

    p = sub.add_parser("construct", parents=[common], help="build a family member and its predicted speed")
    p.add_argument("family", choices=FAMILIES)
    for name in ("t", "k", "c", "h", "n"):
        p.add_argument(f"--{name}", type=int)

    p = sub.add_parser("verify", parents=[common], help="run a verification campaign over a parameter grid")
    p.add_argument("campaign", choices=CAMPAIGNS)
    for name in ("t", "k", "c", "h", "n", "a"):
        p.add_argument(f"--{name}", metavar="LO..HI", help="inclusive range, integer, or comma list")
    p.add_argument("--policy", choices=sp.POLICIES, default=sp.WINDOWED)
    p.add_argument("--verbose", action="store_true", help="list passing instances too")

    p = sub.add_parser("oeis", help="OEIS fixture maintenance and regression checks")
    osub = p.add_subparsers(dest="oeis_command", required=True, metavar="ACTION")
    q = osub.add_parser("check", parents=[common], help="regenerate fixture terms and compare")
    q.add_argument("sequence")
    q.add_argument("--limit", type=_positive)
    q.add_argument("--policy", choices=sp.POLICIES, default=sp.WINDOWED)
    q = osub.add_parser("fetch", parents=[common], help="download a b-file into the fixture directory")
    q.add_argument("sequence")

    p = sub.add_parser("alpha", parents=[common], help="trailing digits of a nontrivial 10-adic idempotent")
    p.add_argument("root", choices=("25", "76"))
    p.add_argument("--digits", type=_positive, required=True)
    return parser


def _emit(args, human: str, data: dict, tsv: str | None = None) -> None:
    if args.format == "json":
        print(json.dumps(data, sort_keys=True, indent=2))
    elif args.format == "tsv":
        print(tsv if tsv is not None else "\t".join(f"{v}" for v in data.values()))
    else:
        print(human)


def _excluded(args, a) -> bool:
    if a == 1:
        _emit(args, "V(1) = 0 (special case: 1 is outside the tetration base domain)", {"base": 1, "speed": 0, "note": "special case"})
        return True
    if a < 1 or a % 10 == 0:
        _emit(args, f"V({a}) undefined (excluded base)", {"base": a, "speed": None, "note": "excluded base"})
        return True
    return False


def cmd_speed(args) -> int:
    if _excluded(args, args.a):
        return EXIT_OK
    cache = SpeedCache(args.cache) if args.cache else None
    cached = cache.get(args.a, args.policy) if cache is not None else None
    if cached is not None:
        v, b_bar = cached, None
    else:
        prof = sp.constant_speed_profile(
            args.a, args.policy, window=args.window, max_height=args.max_height, max_digits=args.max_digits
        )
        v, b_bar = prof.constant_speed, prof.stabilization_height
        if cache is not None:
            cache.put(args.a, v, args.policy)
    data = {"base": args.a, "speed": v, "policy": args.policy, "stabilization_height": b_bar}
    _emit(args, f"V({args.a}) = {v}", data)
    return EXIT_OK


def cmd_speed_at(args) -> int:
    v = sp.speed_at(args.a, args.b, max_digits=args.max_digits)
    _emit(args, f"V({args.a}, {args.b}) = {v}", {"base": args.a, "height": args.b, "speed": v})
    return EXIT_OK


def cmd_profile(args) -> int:
    prof = sp.speed_profile(args.a, args.height, max_digits=args.max_digits)
    data = {"base": args.a, "depths": prof.depths, "speeds": prof.speeds, "stabilization_height": prof.stabilization_height}
    human = f"V({args.a}, b) for b = 1..{args.height}: " + " ".join(map(str, prof.speeds))
    tsv = "\n".join(f"{b}\t{d}\t{v}" for b, (d, v) in enumerate(zip(prof.depths, prof.speeds), 1))
    _emit(args, human, data, tsv)
    return EXIT_OK


def cmd_tower(args) -> int:
    r = tower_mod(args.a, args.b, args.digits)
    data = {"base": r.base, "height": r.height, "digits": r.modulus_digits, "residue": str(r), "exact": r.exact}
    _emit(args, str(r), data, str(r))
    return EXIT_OK


def cmd_construct(args) -> int:
    names = CONSTRUCTORS[args.family][1]
    params = {n: getattr(args, n) for n in names if getattr(args, n) is not None}
    cb = construct(args.family, **params)
    data = {
        "family": cb.family,
        "params": cb.params.as_dict(),
        "root": str(cb.root),
        "degree": cb.degree,
        "base": None if cb.is_huge else str(cb.base),
        "predicted_speed": cb.predicted_speed,
        "prediction_kind": cb.prediction_kind,
    }
    if cb.family == "cor25" and cb.degree >= 3:
        data["exact_degree_certificate"] = exact_degree_certificate(cb.root)
    rel = "=" if cb.prediction_kind == "exact" else ">="
    human = f"{cb.describe()}: V {rel} {cb.predicted_speed}"
    _emit(args, human, data)
    return EXIT_OK


def cmd_verify(args) -> int:
    names = CAMPAIGN_PARAMS[args.campaign]
    grid = {}
    for n in ("t", "k", "c", "h", "n", "a"):
        value = getattr(args, n)
        if value is None:
            continue
        if n not in names:
            raise DomainError(f"{args.campaign} takes {', '.join(names)}; --{n} does not apply")
        grid[n] = parse_range(value)
    cache = SpeedCache(args.cache) if args.cache else None
    opts = {"max_height": args.max_height, "max_digits": args.max_digits}
    report = verify_family(args.campaign, grid, args.policy, jobs=args.jobs, cache=cache, speed_opts=opts)
    if args.format == "json":
        print(report.to_json())
    elif args.format == "tsv":
        sys.stdout.write(report.to_tsv())
    else:
        sys.stdout.write(report.to_text(args.verbose))
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_oeis(args) -> int:
    if args.oeis_command == "fetch":
        if not args.online:
            raise DomainError("oeis fetch needs --online")
        text = fetch_bfile(args.sequence, args.fixtures, online=True)
        fixture = parse_bfile(text, args.sequence)
        print(f"{args.sequence}: {len(fixture)} terms from index {fixture.offset}")
        return EXIT_OK
    fixture = load_fixture(args.sequence, args.fixtures)
    cache = SpeedCache(args.cache) if args.cache else None
    report = check_sequence(fixture, limit=args.limit, policy=args.policy, cache=cache)
    if args.format == "json":
        print(report.to_json())
    elif args.format == "tsv":
        sys.stdout.write(report.to_tsv())
    else:
        sys.stdout.write(report.to_text())
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_alpha(args) -> int:
    prefix = alpha25_prefix(args.digits) if args.root == "25" else alpha76_prefix(args.digits)
    _emit(args, prefix.digits, {"root": prefix.root, "digits": prefix.digits}, prefix.digits)
    return EXIT_OK


COMMANDS = {
    "speed": cmd_speed,
    "speed-at": cmd_speed_at,
    "profile": cmd_profile,
    "tower": cmd_tower,
    "construct": cmd_construct,
    "verify": cmd_verify,
    "oeis": cmd_oeis,
    "alpha": cmd_alpha,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ComputationError, FixtureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    except TetraspeedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
