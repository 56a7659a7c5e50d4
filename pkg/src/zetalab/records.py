"""Claim records: one evaluated assertion with its residual and verdict."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Any


class Verdict(str, enum.Enum):
    SUPPORTED = "supported"
    REFUTED = "refuted"
    INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class ClaimRecord:
    claim_id: str
    inputs: dict[str, Any]
    computed: Any
    asserted: str
    residual: float | None
    verdict: Verdict
    evaluator_agreement: float | None = None
    threshold: float | None = None
    note: str = ""
    extra: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "claim_id": self.claim_id,
            "inputs": plain(self.inputs),
            "computed": plain(self.computed),
            "asserted": self.asserted,
            "residual": plain(self.residual),
            "threshold": plain(self.threshold),
            "verdict": self.verdict.value,
            "evaluator_agreement": plain(self.evaluator_agreement),
            "note": self.note,
            **({"extra": plain(self.extra)} if self.extra else {}),
        }


def verdict_for(residual: float, threshold: float) -> Verdict:
    """Supported at or below the threshold; a nan residual decides nothing."""
    if math.isnan(residual):
        return Verdict.INDETERMINATE
    return Verdict.SUPPORTED if residual <= threshold else Verdict.REFUTED


def sig12(x: float) -> float | str:
    """Round to 12 significant digits; non-finite values become strings."""
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return float(f"{x:.12g}")


def plain(value: Any) -> Any:
    """Convert numbers and containers to JSON-ready values at 12 digits."""
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, enum.Enum):
        return value.value
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        return sig12(value)
    if isinstance(value, complex):
        return {"re": sig12(value.real), "im": sig12(value.imag)}
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [plain(v) for v in value]
    try:
        import numpy as np

        if isinstance(value, np.generic):
            return plain(value.item())
    except ImportError:  # pragma: no cover
        pass
    return str(value)
