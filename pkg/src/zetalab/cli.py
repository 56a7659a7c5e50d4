"""Command-line front end.

Exit status is 0 whenever a command completes, whatever the verdicts say;
2 on an internal error (bad input, tolerance not met, capability exceeded).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .config import DEFAULT_CONFIG, EvalConfig
from .critical_line import scan_zeros, verify_claimed_zero
from .errors import ZetaLabError
from .records import plain
from .report import run_claims
from .tables import TABLE_IDS, emit_figure1, emit_table, to_csv
from .zeta import count_zeros_rectangle, zeta_em, zeta_eta, zeta_functional


def _load_config(path: str | None) -> EvalConfig:
    return DEFAULT_CONFIG if path is None else EvalConfig.from_file(path)


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8", newline="\n")


def _cmd_zeta_eval(args: argparse.Namespace, cfg: EvalConfig) -> str:
    s = complex(args.sigma, args.t)
    value = zeta_functional(s, cfg) if s.real < 0.5 else zeta_em(s, cfg)
    out = {"sigma": args.sigma, "t": args.t, "zeta": value, "abs": abs(value)}
    if s.real > 0:
        try:
            out["eta_agreement"] = abs(value - zeta_eta(s, cfg.eta_terms))
        except ZetaLabError:
            pass
    return json.dumps(plain(out), sort_keys=True) + "\n"


def _cmd_zero_scan(args: argparse.Namespace, cfg: EvalConfig) -> str:
    found = scan_zeros(args.t_lo, args.t_hi, args.step, cfg, verify_count=args.verify_count)
    rows = [(i, z.t, z.bracket[0], z.bracket[1], z.residual, z.refine_iters) for i, z in enumerate(found, start=1)]
    return to_csv(("index", "t", "bracket_lo", "bracket_hi", "residual", "refine_iters"), rows)


def _parse_rect(text: str) -> tuple[float, float, float, float]:
    parts = [p for p in text.split(",") if p.strip()]
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("--rect needs sigma_lo,sigma_hi,t_lo,t_hi")
    try:
        a, b, c, d = (float(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"--rect values must be numbers: {text!r}") from None
    return a, b, c, d


def _cmd_count(args: argparse.Namespace, cfg: EvalConfig) -> str:
    res = count_zeros_rectangle(args.rect, cfg)
    out = {"rectangle": list(res.rectangle), "count": res.count, "raw_count": res.raw_count}
    return json.dumps(plain(out), sort_keys=True) + "\n"


def _cmd_tables(args: argparse.Namespace, cfg: EvalConfig) -> str:
    ids = TABLE_IDS if args.id.upper() == "ALL" else (args.id,)
    if len(ids) == 1:
        return emit_table(ids[0], cfg)
    return "".join(f"[table {tid}]\n{emit_table(tid, cfg)}\n" for tid in ids)


def _cmd_figure1(args: argparse.Namespace, cfg: EvalConfig) -> str:
    return emit_figure1(args.b_min, args.b_max, args.b_steps, args.gamma_max, args.gamma_min)


def _cmd_claims(args: argparse.Namespace, cfg: EvalConfig) -> str:
    doc = run_claims(cfg, include_tables=not args.no_tables)
    return doc.data_blocks() if args.no_timing else doc.render()


def _cmd_verify(args: argparse.Namespace, cfg: EvalConfig) -> str:
    rec = verify_claimed_zero(args.b, cfg)
    return json.dumps(rec.to_dict(), sort_keys=True) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zetalab", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default=None, help="output path (default: standard output)")
    common.add_argument("--config", default=None, help="JSON file with EvalConfig overrides")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("zeta-eval", parents=[common], help="evaluate zeta(sigma + i t)")
    p.add_argument("--sigma", type=float, required=True)
    p.add_argument("--t", type=float, required=True)
    p.set_defaults(func=_cmd_zeta_eval)

    p = sub.add_parser("zero-scan", parents=[common], help="locate zeros on the critical line")
    p.add_argument("--t-lo", type=float, required=True)
    p.add_argument("--t-hi", type=float, required=True)
    p.add_argument("--step", type=float, default=None)
    p.add_argument("--verify-count", action="store_true", help="cross-check against the argument principle")
    p.set_defaults(func=_cmd_zero_scan)

    p = sub.add_parser("count", parents=[common], help="count zeros in a rectangle")
    p.add_argument("--rect", type=_parse_rect, required=True, help="sigma_lo,sigma_hi,t_lo,t_hi")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("tables", parents=[common], help="reproduce a table as CSV")
    p.add_argument("--id", required=True, help=f"one of {', '.join(TABLE_IDS)} or ALL")
    p.set_defaults(func=_cmd_tables)

    p = sub.add_parser("figure1", parents=[common], help="q over a (b, gamma) grid as CSV")
    p.add_argument("--b-min", type=float, default=10.0)
    p.add_argument("--b-max", type=float, default=100.0)
    p.add_argument("--b-steps", type=int, default=10)
    p.add_argument("--gamma-max", type=int, default=20)
    p.add_argument("--gamma-min", type=int, default=1)
    p.set_defaults(func=_cmd_figure1)

    p = sub.add_parser("claims", parents=[common], help="run the claim ledger")
    p.add_argument("--no-timing", action="store_true", help="omit the [timing] section")
    p.add_argument("--no-tables", action="store_true", help="omit the table blocks")
    p.set_defaults(func=_cmd_claims)

    p = sub.add_parser("verify-zero", parents=[common], help="check one claimed ordinate b")
    p.add_argument("--b", type=float, required=True)
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _load_config(args.config)
        text = args.func(args, cfg)
        _emit(text, args.out)
    except (ZetaLabError, OSError, json.JSONDecodeError) as exc:
        print(f"zetalab: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    return 0

