"""Machine-readable verification reports and run configuration.

A report is the single source of truth for a suite run.  Two runs with
the same configuration must serialize to byte-identical JSON, so the
format is pinned: UTF-8, sorted keys, two-space indentation, rationals
as ``"p/q"`` strings, trailing newline.  Reports never carry wall-clock
data or host information.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .rational import format_rational

PASS = "pass"
FAIL = "fail"
FINDING = "finding"
INCONCLUSIVE = "inconclusive"

_STATUSES = (PASS, FAIL, FINDING, INCONCLUSIVE)


@dataclass
class SuiteConfig:
    """Knobs shared by every suite the CLI can run."""

    seed: int = 0
    samples: int = 10_000
    prefix_max: int = 2
    grid: tuple[Fraction, ...] = (Fraction(0), Fraction(1, 2), Fraction(1))
    n: int = 2
    budget: int = 10**7
    jobs: int = 1
    output_path: str | None = None

    def validate(self) -> None:
        if self.seed < 0:
            raise ValueError("seed must be nonnegative")
        if self.samples < 1:
            raise ValueError("samples must be positive")
        if self.prefix_max < 1:
            raise ValueError("prefix-max must be positive")
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.budget < 1:
            raise ValueError("budget must be positive")
        if self.jobs < 1:
            raise ValueError("jobs must be positive")
        if list(self.grid) != sorted(set(self.grid)):
            raise ValueError("grid must be strictly increasing")
        if self.grid[0] != 0 or self.grid[-1] != 1:
            raise ValueError("grid must start at 0 and end at 1")

    def echo(self) -> dict[str, Any]:
        # jobs and output_path are execution details: two runs that differ
        # only there must still produce byte-identical reports.
        return {
            "seed": self.seed,
            "samples": self.samples,
            "prefix_max": self.prefix_max,
            "grid": [format_rational(g) for g in self.grid],
            "n": self.n,
            "budget": self.budget,
        }


@dataclass
class VerificationReport:
    """Outcome of one verification suite.

    ``counts`` holds integer tallies, ``witnesses`` holds JSON-ready
    dictionaries describing violations or noteworthy findings.  A report
    whose status is ``fail`` must exhibit at least one witness.
    """

    claim_id: str
    status: str
    counts: dict[str, int] = field(default_factory=dict)
    witnesses: list[dict[str, Any]] = field(default_factory=list)
    seed: int = 0
    config_echo: dict[str, Any] | None = None

    def __post_init__(self) -> None:
        if self.status not in _STATUSES:
            raise ValueError(f"unknown status {self.status!r}")
        if self.status == FAIL and not self.witnesses:
            raise ValueError("a failing report must carry a witness")

    @property
    def failed(self) -> bool:
        return self.status == FAIL

    def to_dict(self) -> dict[str, Any]:
        return {
            "claim_id": self.claim_id,
            "status": self.status,
            "counts": dict(self.counts),
            "witnesses": list(self.witnesses),
            "seed": self.seed,
            "config_echo": self.config_echo,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"


def jsonify(value: Any) -> Any:
    """Recursively rewrite Fractions (and tuples) into report-safe JSON values."""
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, bool) or isinstance(value, int) or isinstance(value, str):
        return value
    if value is None:
        return None
    if isinstance(value, dict):
        return {str(k): jsonify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonify(v) for v in value]
    raise TypeError(f"cannot serialize {type(value).__name__} into a report")
