"""Command-line entry point.

    combident list
    combident verify rockett even-binom --n-max 100 --format json
    combident method-check --instances 20
    combident numeric --samples 1000000 --seed 0
    combident report-all --out report.csv --format csv

Exit status: 0 when every executed check passes (paper-form failures of
identities that ship a corrected form count as documented misprints unless
``--strict-paper``), 1 when any check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .identities.catalog import (
    CATALOG,
    EXACT,
    METHOD,
    NUMERIC,
    SuiteConfig,
    UnknownIdentityError,
    UnverifiableIdentityError,
    names,
    run_suite,
)
from .identities.report import DOCUMENTED_MISPRINT, FAIL, PASS, IdentityReport

COLUMNS = ("identity", "variant", "params", "lhs", "rhs", "verdict", "note")
FORMATS = ("text", "json", "csv")
COMMANDS = ("list", "verify", "method-check", "numeric", "report-all")


@dataclass
class RunConfig:
    command: str
    identities: list[str] = field(default_factory=list)
    n_max: int = 50
    m_max: int = 3
    tolerance: float = 1e-9
    samples: int = 10**6
    seed: int = 0
    format: str = "text"
    out: str | None = None
    strict_paper: bool = False
    instances: int = 20

    def suite_config(self) -> SuiteConfig:
        return SuiteConfig(
            n_max=self.n_max,
            m_max=self.m_max,
            seed=self.seed,
            instances=self.instances,
            tolerance=self.tolerance,
            samples=self.samples,
        )


def render_value(value):
    """JSON-ready rendering: exact rationals become "num/den" strings, floats stay shortest round-trip."""
    if isinstance(value, bool):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        return value if math.isfinite(value) else repr(value)
    if isinstance(value, int):
        return value
    if isinstance(value, (list, tuple)):
        return [render_value(v) for v in value]
    return str(value)


def _flat(value) -> str:
    v = render_value(value)
    if isinstance(v, list):
        return "(" + ",".join(_flat(x) for x in value) + ")"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _params_text(params: dict) -> str:
    return ";".join(f"{k}={_flat(v)}" for k, v in params.items())


def _sort_key(report: IdentityReport):
    def key(v):
        if isinstance(v, (int, float, Fraction)) and not isinstance(v, bool):
            return (0, v, "")
        if isinstance(v, (list, tuple)):
            return (1, 0, _flat(v))
        return (2, 0, str(v))

    return (report.identity, tuple((k, key(v)) for k, v in report.params.items()), report.variant.value)


def sort_reports(reports: Sequence[IdentityReport]) -> list[IdentityReport]:
    return sorted(reports, key=_sort_key)


def _row(report: IdentityReport) -> dict:
    return {
        "identity": report.identity,
        "variant": report.variant.value,
        "params": {k: render_value(v) for k, v in report.params.items()},
        "lhs": render_value(report.lhs),
        "rhs": render_value(report.rhs),
        "verdict": report.status,
        "note": report.note,
    }


def _short(value, width: int = 40) -> str:
    text = _flat(value)
    if len(text) > width and isinstance(value, Fraction):
        return f"~{float(value):.17g}"
    return text


def render_report(reports: Sequence[IdentityReport], fmt: str = "text") -> bytes:
    """Serialize reports deterministically, sorted by identity then parameters."""
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    ordered = sort_reports(reports)
    if fmt == "json":
        text = json.dumps([_row(r) for r in ordered], indent=2, ensure_ascii=False) + "\n"
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(COLUMNS)
        for r in ordered:
            writer.writerow(
                [r.identity, r.variant.value, _params_text(r.params), _flat(r.lhs), _flat(r.rhs), r.status, r.note]
            )
        text = buf.getvalue()
    else:
        rows = [("identity", "variant", "params", "lhs", "rhs", "verdict")]
        for r in ordered:
            rows.append((r.identity, r.variant.value, _params_text(r.params), _short(r.lhs), _short(r.rhs), r.status))
        widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
        lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
        text = "\n".join(lines) + "\n"
    return text.encode("utf-8")


def render_catalog(fmt: str = "text") -> bytes:
    entries = [CATALOG[n] for n in names()]
    if fmt == "json":
        data = [
            {"name": e.name, "kind": e.kind, "corrected_form": e.has_correction, "summary": e.summary, "note": e.note}
            for e in entries
        ]
        return (json.dumps(data, indent=2) + "\n").encode("utf-8")
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(("name", "kind", "corrected_form", "summary", "note"))
        for e in entries:
            writer.writerow((e.name, e.kind, e.has_correction, e.summary, e.note))
        return buf.getvalue().encode("utf-8")
    width = max(len(e.name) for e in entries)
    lines = []
    for e in entries:
        flag = " [corrected form]" if e.has_correction else ""
        lines.append(f"{e.name.ljust(width)}  {e.kind:<12}  {e.summary}{flag}")
        if e.note:
            lines.append(f"{'':{width}}  {'':<12}  ({e.note})")
    return ("\n".join(lines) + "\n").encode("utf-8")


def _catalog_listing() -> str:
    return "available identities: " + ", ".join(names())


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n-max", type=int, default=50, dest="n_max")
    common.add_argument("--m-max", type=int, default=3, dest="m_max")
    common.add_argument("--tol", type=float, default=1e-9, dest="tolerance")
    common.add_argument("--samples", type=int, default=10**6)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--out", default=None, help="write the report to PATH instead of stdout")
    common.add_argument(
        "--strict-paper", action="store_true", help="count documented misprints as failures"
    )

    parser = argparse.ArgumentParser(
        prog="combident", description="Verify inverse-binomial identities exactly and numerically."
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("list", parents=[common], help="show the identity catalogue")
    verify = sub.add_parser("verify", parents=[common], help="run named identities")
    verify.add_argument("identities", nargs="+", metavar="NAME")
    method = sub.add_parser("method-check", parents=[common], help="theorem-level coefficient checks")
    method.add_argument("--instances", type=int, default=20)
    sub.add_parser("numeric", parents=[common], help="floating-point checks")
    report_all = sub.add_parser("report-all", parents=[common], help="every runnable check")
    report_all.add_argument("--instances", type=int, default=20)
    return parser


def parse_config(argv: Sequence[str] | None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    values = vars(ns)
    return RunConfig(
        command=values.pop("command"),
        identities=values.pop("identities", []),
        **values,
    )


def _selection(cfg: RunConfig) -> list[str]:
    if cfg.command == "verify":
        return cfg.identities
    if cfg.command == "method-check":
        return names(METHOD)
    if cfg.command == "numeric":
        return names(NUMERIC)
    return names(EXACT) + names(METHOD) + names(NUMERIC)


def execute(cfg: RunConfig) -> tuple[list[IdentityReport], list[str]]:
    """Run the configured checks; returns reports and skipped-entry messages."""
    reports: list[IdentityReport] = []
    skipped = []
    suite = cfg.suite_config()
    for name in _selection(cfg):
        try:
            reports.extend(run_suite([name], config=suite))
        except UnverifiableIdentityError as exc:
            skipped.append(str(exc))
    return reports, skipped


def _emit(data: bytes, out: str | None) -> None:
    if out:
        with open(out, "wb") as fh:
            fh.write(data)
        return
    stream = getattr(sys.stdout, "buffer", None)
    if stream is not None:
        sys.stdout.flush()
        stream.write(data)
        stream.flush()
    else:
        sys.stdout.write(data.decode("utf-8"))


def main(argv: Sequence[str] | None = None) -> int:
    try:
        cfg = parse_config(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    if cfg.command == "list":
        _emit(render_catalog(cfg.format), cfg.out)
        return 0

    if cfg.command == "verify":
        unknown = [n for n in cfg.identities if n not in CATALOG]
        if unknown:
            print(f"error: {UnknownIdentityError(unknown[0], CATALOG)}", file=sys.stderr)
            return 2

    try:
        reports, skipped = execute(cfg)
    except UnknownIdentityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    for msg in skipped:
        print(f"skipped: {msg}", file=sys.stderr)
    _emit(render_report(reports, cfg.format), cfg.out)

    counts = {PASS: 0, DOCUMENTED_MISPRINT: 0, FAIL: 0}
    for r in reports:
        counts[r.status] += 1
    print(
        f"{len(reports)} checks: {counts[PASS]} pass, {counts[DOCUMENTED_MISPRINT]} documented misprint, "
        f"{counts[FAIL]} fail",
        file=sys.stderr,
    )
    failed = any(r.counts_as_failure(cfg.strict_paper) for r in reports)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
