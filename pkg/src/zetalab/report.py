"""Run the claim registry and the table reproductions into one text report.

Layout::

    [meta]          tool name and version
    [config]        EvalConfig as sorted JSON
    [claims]        one sorted-key JSON object per line, registry order
    [table Tn]      CSV for T1..T7
    [timing]        wall time per section (the only non-deterministic block)

Everything above ``[timing]`` is byte-identical across runs with the same
config, whatever ``ZETALAB_THREADS`` says.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from . import __version__
from .claims import REGISTRY, evaluate
from .config import DEFAULT_CONFIG, EvalConfig
from .parallel import ordered_map
from .records import ClaimRecord
from .tables import TABLE_IDS, emit_table

TOOL_NAME = "zetalab"


@dataclass(frozen=True)
class ReportDocument:
    tool_version: str
    config: dict
    claims: tuple[ClaimRecord, ...]
    tables: dict[str, str]
    timing: dict[str, float] = field(default_factory=dict)

    def claim(self, claim_id: str) -> ClaimRecord:
        for rec in self.claims:
            if rec.claim_id == claim_id:
                return rec
        raise KeyError(claim_id)

    def verdict_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for rec in self.claims:
            counts[rec.verdict.value] = counts.get(rec.verdict.value, 0) + 1
        return dict(sorted(counts.items()))

    def data_blocks(self) -> str:
        parts = [
            "[meta]",
            f"tool={TOOL_NAME}",
            f"tool_version={self.tool_version}",
            "",
            "[config]",
            json.dumps(self.config, sort_keys=True),
            "",
            "[claims]",
        ]
        parts.extend(json.dumps(rec.to_dict(), sort_keys=True) for rec in self.claims)
        parts.append("")
        for tid, csv_text in self.tables.items():
            parts.append(f"[table {tid}]")
            parts.append(csv_text.rstrip("\n"))
            parts.append("")
        return "\n".join(parts) + "\n"

    def render(self) -> str:
        lines = ["[timing]"]
        lines.extend(f"{name}={secs:.3f}" for name, secs in self.timing.items())
        return self.data_blocks() + "\n".join(lines) + "\n"


def run_claims(cfg: EvalConfig = DEFAULT_CONFIG, include_tables: bool = True) -> ReportDocument:
    """Evaluate every registered claim (concurrently, assembled in registry order)."""
    timing: dict[str, float] = {}
    start = time.perf_counter()
    records = ordered_map(lambda entry: evaluate(entry, cfg), REGISTRY)
    timing["claims"] = time.perf_counter() - start

    tables: dict[str, str] = {}
    if include_tables:
        start = time.perf_counter()
        tables = {tid: emit_table(tid, cfg) for tid in TABLE_IDS}
        timing["tables"] = time.perf_counter() - start
    return ReportDocument(
        tool_version=__version__,
        config=cfg.to_dict(),
        claims=tuple(records),
        tables=tables,
        timing=timing,
    )
