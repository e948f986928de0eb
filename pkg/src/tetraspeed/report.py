"""Verification reports shared by family campaigns and OEIS checks."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

PASS, FAIL, SKIP = "pass", "fail", "skip"


@dataclass
class InstanceResult:
    params: dict
    predicted: object
    observed: object
    kind: str
    status: str
    method: str = ""
    reason: str = ""
    precision_digits: int = 0

    @property
    def passed(self) -> bool:
        return self.status == PASS


@dataclass
class VerifyReport:
    campaign: str
    instances: list[InstanceResult] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def counts(self) -> dict:
        statuses = [r.status for r in self.instances]
        return {
            "total": len(statuses),
            "passed": statuses.count(PASS),
            "failed": statuses.count(FAIL),
            "skipped": statuses.count(SKIP),
        }

    @property
    def ok(self) -> bool:
        return self.counts["failed"] == 0

    @property
    def max_precision(self) -> int:
        return max((r.precision_digits for r in self.instances), default=0)

    def failures(self) -> list[InstanceResult]:
        return [r for r in self.instances if r.status == FAIL]

    def to_dict(self, include_runtime: bool = False) -> dict:
        # Wall time and precision depend on the machine, the cache state and
        # the job count, so they stay out of machine output by default.
        instances = [asdict(r) for r in self.instances]
        if not include_runtime:
            for r in instances:
                del r["precision_digits"]
        d = {"campaign": self.campaign, "counts": self.counts, "instances": instances}
        if include_runtime:
            d["runtime"] = {"wall_time": round(self.wall_time, 3), "max_precision_digits": self.max_precision}
        return d

    def to_json(self, include_runtime: bool = False) -> str:
        return json.dumps(self.to_dict(include_runtime), sort_keys=True, indent=2)

    @classmethod
    def from_dict(cls, d: dict) -> VerifyReport:
        runtime = d.get("runtime", {})
        report = cls(d["campaign"], [InstanceResult(**r) for r in d["instances"]], runtime.get("wall_time", 0.0))
        if report.counts != d["counts"]:
            raise ValueError("report counts do not match its instance list")
        return report

    def to_tsv(self) -> str:
        lines = ["params\tpredicted\tobserved\tkind\tstatus\tmethod\treason"]
        for r in self.instances:
            params = ",".join(f"{k}={v}" for k, v in r.params.items())
            lines.append("\t".join(map(str, (params, r.predicted, r.observed, r.kind, r.status, r.method, r.reason))))
        return "\n".join(lines) + "\n"

    def summary(self) -> str:
        c = self.counts
        s = f"{self.campaign}: {c['passed']}/{c['total']} passed, {c['failed']} failed"
        if c["skipped"]:
            s += f", {c['skipped']} skipped"
        return s

    def to_text(self, verbose: bool = False) -> str:
        lines = [self.summary()]
        shown = self.instances if verbose else self.failures()
        for r in shown:
            params = ", ".join(f"{k}={v}" for k, v in r.params.items())
            line = f"  [{r.status.upper()}] {params}: predicted {r.predicted} ({r.kind}), observed {r.observed}"
            if r.reason:
                line += f" -- {r.reason}"
            lines.append(line)
        return "\n".join(lines) + "\n"
