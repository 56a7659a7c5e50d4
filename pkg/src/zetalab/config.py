"""Evaluation configuration and worker-count plumbing."""

from __future__ import annotations

import dataclasses
import json
import os
from dataclasses import dataclass
from pathlib import Path

from .errors import DomainError

THREADS_ENV = "ZETALAB_THREADS"


@dataclass(frozen=True)
class EvalConfig:
    """Knobs governing every evaluator.

    ``truncation_N = None`` selects the automatic rule
    ``N = max(20, ceil(1.3 |Im s|) + 10)`` per evaluation point.
    """

    truncation_N: int | None = None
    correction_K: int = 12
    quad_abs_tol: float = 1e-12
    quad_rel_tol: float = 1e-12
    max_refine_iters: int = 200
    contour_abs_tol: float = 1e-6
    scan_step: float = 0.05
    eta_terms: int | None = None

    def __post_init__(self) -> None:
        if self.truncation_N is not None and self.truncation_N < 2:
            raise DomainError("truncation_N must be >= 2")
        if self.correction_K < 1:
            raise DomainError("correction_K must be >= 1")
        if min(self.quad_abs_tol, self.quad_rel_tol, self.contour_abs_tol) <= 0:
            raise DomainError("tolerances must be positive")
        if self.max_refine_iters < 1:
            raise DomainError("max_refine_iters must be >= 1")
        if self.scan_step <= 0:
            raise DomainError("scan_step must be positive")

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> EvalConfig:
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise DomainError(f"unknown config keys: {', '.join(unknown)}")
        return cls(**data)

    @classmethod
    def from_file(cls, path: str | Path) -> EvalConfig:
        return cls.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))


DEFAULT_CONFIG = EvalConfig()


def worker_count() -> int:
    """Worker cap from ``ZETALAB_THREADS`` (default 1)."""
    raw = os.environ.get(THREADS_ENV)
    if raw is None or raw.strip() == "":
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise DomainError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise DomainError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return n
