"""OEIS b-file fixtures: parsing, rendering, offline-first fetching and regeneration checks."""

from __future__ import annotations

import json
import os
import re
import urllib.error
import urllib.request
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .cache import SpeedCache
from .decadic import idempotent_prefix
from .exceptions import (
    BFileParseError,
    DomainError,
    FetchError,
    FixtureMissingError,
    ManifestMismatchError,
    NoGeneratorError,
    TetraspeedError,
)
from .families import cor25_base
from .report import FAIL, PASS, SKIP, InstanceResult, VerifyReport
from .speed import WINDOWED, constant_speed_profile

DEFAULT_BASE_URL = "https://oeis.org"
BASE_URL_ENV = "TETRASPEED_OEIS_URL"
FIXTURE_DIR_ENV = "TETRASPEED_FIXTURES"
MAX_BFILE_BYTES = 4 * 1024 * 1024

_SEQ_RE = re.compile(r"^A\d{6}$")


@dataclass
class OeisFixture:
    sequence_id: str | None
    offset: int
    terms: list[int]
    comments: list[str] = field(default_factory=list)
    source: str | None = field(default=None, compare=False)

    def __len__(self):
        return len(self.terms)

    @property
    def indices(self) -> range:
        return range(self.offset, self.offset + len(self.terms))

    def term(self, index: int) -> int:
        return self.terms[index - self.offset]


def _check_id(sequence_id: str) -> str:
    if not _SEQ_RE.match(sequence_id):
        raise DomainError(f"not an OEIS A-number: {sequence_id!r}")
    return sequence_id


def parse_bfile(text: str, sequence_id: str | None = None, source: str | None = None) -> OeisFixture:
    """Parse b-file text: ``#`` comment lines and ``index value`` data lines."""
    comments: list[str] = []
    indices: list[int] = []
    terms: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            comments.append(line[1:].strip())
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileParseError(f"expected 'index value', got {raw!r}", lineno)
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileParseError(f"non-integer field in {raw!r}", lineno) from None
        if indices and index != indices[-1] + 1:
            raise BFileParseError(f"index {index} does not follow {indices[-1]}", lineno)
        indices.append(index)
        terms.append(value)
    if not terms:
        raise BFileParseError("b-file has no data lines")
    if sequence_id is None:
        for c in comments:
            m = re.search(r"\bA\d{6}\b", c)
            if m:
                sequence_id = m.group(0)
                break
    return OeisFixture(sequence_id, indices[0], terms, comments, source)


def render_bfile(fixture: OeisFixture) -> str:
    lines = [f"# {c}" if c else "#" for c in fixture.comments]
    lines += [f"{i} {v}" for i, v in zip(fixture.indices, fixture.terms)]
    return "\n".join(lines) + "\n"


def default_fixture_dir() -> Path:
    env = os.environ.get(FIXTURE_DIR_ENV)
    if env:
        return Path(env)
    return Path(str(resources.files("tetraspeed") / "data" / "oeis"))


def bfile_path(sequence_id: str, fixture_dir: str | os.PathLike | None = None) -> Path:
    _check_id(sequence_id)
    return Path(fixture_dir or default_fixture_dir()) / f"b{sequence_id[1:]}.txt"


def fetch_bfile(
    sequence_id: str,
    fixture_dir: str | os.PathLike | None = None,
    *,
    online: bool = False,
    base_url: str | None = None,
    max_bytes: int = MAX_BFILE_BYTES,
    timeout: float = 30.0,
) -> str:
    """Return b-file text, from disk unless ``online`` is set.

    Online fetches always write the result into ``fixture_dir`` so later
    runs can stay offline. The endpoint defaults to ``$TETRASPEED_OEIS_URL``
    and then to oeis.org.
    """
    path = bfile_path(sequence_id, fixture_dir)
    if not online:
        if not path.exists():
            raise FixtureMissingError(
                f"no fixture for {sequence_id} at {path}; run 'tetraspeed oeis fetch {sequence_id} --online'"
            )
        return path.read_text(encoding="utf-8")
    base_url = (base_url or os.environ.get(BASE_URL_ENV) or DEFAULT_BASE_URL).rstrip("/")
    url = f"{base_url}/{sequence_id}/b{sequence_id[1:]}.txt"
    try:
        with urllib.request.urlopen(url, timeout=timeout) as resp:
            status = getattr(resp, "status", 200)
            if status != 200:
                raise FetchError(f"HTTP {status} for {url}")
            data = resp.read(max_bytes + 1)
    except urllib.error.HTTPError as exc:
        raise FetchError(f"HTTP {exc.code} for {url}") from exc
    except (urllib.error.URLError, OSError) as exc:
        raise FetchError(f"cannot fetch {url}: {exc}") from exc
    if len(data) > max_bytes:
        raise FetchError(f"{url} exceeds the {max_bytes}-byte cap")
    text = data.decode("utf-8")
    parse_bfile(text, sequence_id)  # refuse to pin something unparseable
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    return text


def load_manifest(path: str | os.PathLike | None = None) -> dict:
    if path is None:
        text = (resources.files("tetraspeed") / "data" / "oeis" / "manifest.json").read_text(encoding="utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    return json.loads(text)["sequences"]


def load_fixture(
    sequence_id: str,
    fixture_dir: str | os.PathLike | None = None,
    manifest: dict | None = None,
) -> OeisFixture:
    """Read a pinned fixture and check it against its manifest entry."""
    path = bfile_path(sequence_id, fixture_dir)
    fixture = parse_bfile(fetch_bfile(sequence_id, fixture_dir), source=str(path))
    if fixture.sequence_id not in (None, sequence_id):
        raise ManifestMismatchError(f"{path} is labelled {fixture.sequence_id}, expected {sequence_id}")
    fixture.sequence_id = sequence_id
    entry = (manifest if manifest is not None else load_manifest()).get(sequence_id)
    if entry is not None and entry.get("offset") is not None and entry["offset"] != fixture.offset:
        raise ManifestMismatchError(
            f"{sequence_id}: manifest offset {entry['offset']} but fixture starts at {fixture.offset}"
        )
    return fixture


# Generators map (indices, manifest entry, options) to one value per index,
# None marking an index outside the generator's domain.


def _digit_stream(root):
    def gen(indices, entry, opts):
        n = len(indices)
        digits = idempotent_prefix(root, n).stream()
        start = entry.get("digit_start", 1)
        if start != 1:
            digits = idempotent_prefix(root, n + start - 1).stream()[start - 1 :]
        return digits[:n]

    return gen


def _speed_values(attr):
    def gen(indices, entry, opts):
        cache = opts.get("cache")
        policy = opts.get("policy", WINDOWED)
        excluded = entry.get("excluded_term")
        out = []
        for a in indices:
            if a < 2 or a % 10 == 0:
                out.append(excluded)
                continue
            if attr == "constant_speed" and cache is not None:
                hit = cache.get(a, policy)
                if hit is not None:
                    out.append(hit)
                    continue
            prof = constant_speed_profile(a, policy)
            if attr == "constant_speed" and cache is not None:
                cache.put(a, prof.constant_speed, policy)
            out.append(getattr(prof, attr))
        return out

    return gen


def _cor25_bases(indices, entry, opts):
    k = entry.get("k", 1)
    return [cor25_base(c, k).base if c >= 1 else None for c in indices]


GENERATORS = {
    "alpha25_digits": _digit_stream("alpha25"),
    "alpha76_digits": _digit_stream("alpha76"),
    "constant_speed": _speed_values("constant_speed"),
    "stabilization_height": _speed_values("stabilization_height"),
    "cor25_bases": _cor25_bases,
}


def _resolve_orientation(fixture, entry, generated):
    """Digit streams: confirm least-significant-first order or flag the fixture as reversed."""
    orientation = entry.get("orientation", "lsd")
    if orientation != "auto":
        return orientation
    head = min(len(fixture.terms), 8)
    if fixture.terms[:head] == generated[:head]:
        return "lsd"
    return "unresolved"


def check_sequence(
    fixture: OeisFixture,
    generator: str | None = None,
    limit: int | None = None,
    *,
    manifest: dict | None = None,
    policy: str = WINDOWED,
    cache: SpeedCache | None = None,
) -> VerifyReport:
    """Regenerate the first ``limit`` fixture terms and compare them one by one.

    Mismatches are reported as failed instances; indices outside the
    generator's domain are reported as skipped when the manifest declares
    no value for them.
    """
    entry = (manifest if manifest is not None else load_manifest()).get(fixture.sequence_id, {})
    generator = generator or entry.get("generator")
    if generator not in GENERATORS:
        raise NoGeneratorError(f"no generator registered for {fixture.sequence_id} ({generator!r})")
    if limit is None:
        limit = len(fixture)
    if not 1 <= limit <= len(fixture):
        raise DomainError(f"limit must be within 1..{len(fixture)}")
    indices = list(fixture.indices)[:limit]
    campaign = f"oeis:{fixture.sequence_id}:{generator}:{indices[0]}..{indices[-1]}"
    try:
        generated = GENERATORS[generator](indices, entry, {"policy": policy, "cache": cache})
    except TetraspeedError as exc:
        results = [InstanceResult({"n": i}, fixture.term(i), None, "term", FAIL, generator, str(exc)) for i in indices]
        return VerifyReport(campaign, results)
    orientation = _resolve_orientation(fixture, entry, generated) if generator.endswith("_digits") else None
    results = []
    for i, value in zip(indices, generated):
        expected = fixture.term(i)
        if value is None:
            results.append(InstanceResult({"n": i}, expected, None, "term", SKIP, generator, "outside generator domain"))
            continue
        ok = value == expected and orientation != "unresolved"
        reason = "" if ok else ("digit orientation unresolved" if orientation == "unresolved" else "term mismatch")
        results.append(InstanceResult({"n": i}, expected, value, "term", PASS if ok else FAIL, generator, reason))
    return VerifyReport(campaign, results)
