"""Command-line front end: ``hhq dims | verify | centre``.

Exit codes: 0 success, 1 a verification failed, 2 bad usage or parameters.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass

from . import barcomplex, hilbert, koszul, resolution
from .cup import product_table, verify_presentation
from .algebra import classify
from .exactfield import INFINITE, FieldContext, FieldError, FieldScalar, make_field, mult_order, parse_scalar
from .report import Report

log = logging.getLogger("hhq")

SUITES = ("complex", "comultiplication", "minimality", "oracle", "ring", "centre", "hilbert")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    ctx: FieldContext
    q: FieldScalar
    max_n: int = 8
    cap: int | None = None
    oracle_cap: int = barcomplex.DEFAULT_ORACLE_CAP
    max_deg: int | None = None
    fmt: str = "human"
    suite: str = "all"
    products: int = 2

    @property
    def order(self):
        return mult_order(self.q)

    def ring_cap(self) -> int:
        if self.cap is not None:
            return self.cap
        r = self.order
        return self.max_n if r in (0, INFINITE) else max(self.max_n, 4 * int(r))

    def centre_cap(self) -> int:
        if self.max_deg is not None:
            return self.max_deg
        r = self.order
        return 20 if r in (0, INFINITE) else max(8, 4 * int(r))


def _config(args) -> RunConfig:
    try:
        ctx = make_field(args.field)
        q = parse_scalar(ctx, args.q)
    except (FieldError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    if args.max_n < 0:
        raise UsageError("--max-n must be >= 0")
    oracle_cap = args.oracle_cap if args.oracle_cap is not None else None
    if oracle_cap is None:
        try:
            oracle_cap = barcomplex.oracle_cap()
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if not 0 <= oracle_cap <= barcomplex.MAX_ORACLE_CAP:
        raise UsageError(f"--oracle-cap must be in 0..{barcomplex.MAX_ORACLE_CAP}")
    cap = getattr(args, "cap", None)
    if cap is not None and cap < 0:
        raise UsageError("--cap must be >= 0")
    return RunConfig(
        ctx=ctx,
        q=q,
        max_n=args.max_n,
        cap=cap,
        oracle_cap=oracle_cap,
        max_deg=getattr(args, "max_deg", None),
        fmt=args.format,
        suite=getattr(args, "suite", "all"),
        products=getattr(args, "products", 2),
    )


def _header(cfg: RunConfig) -> dict:
    order = cfg.order
    return {
        "case": str(classify(cfg.ctx, cfg.q)),
        "field": cfg.ctx.descriptor,
        "q": str(cfg.q),
        "order": None if order == INFINITE else int(order),
    }


def _bases(cfg: RunConfig, upto: int) -> list[dict]:
    return [
        {"degree": n, "representatives": resolution.hh_basis(n, cfg.ctx, cfg.q).describe()}
        for n in range(upto + 1)
    ]


def cmd_dims(cfg: RunConfig) -> tuple[dict, int]:
    dims = [resolution.hh_dimension(n, cfg.ctx, cfg.q) for n in range(cfg.max_n + 1)]
    out = _header(cfg)
    out["dims"] = dims
    out["bases"] = _bases(cfg, cfg.max_n)
    return out, 0


def run_suite(cfg: RunConfig, suite: str) -> Report:
    ctx, q, n = cfg.ctx, cfg.q, cfg.max_n
    if suite == "complex":
        return resolution.verify_complex(max(n, 2), ctx, q)
    if suite == "comultiplication":
        return resolution.verify_comultiplication(n, ctx, q)
    if suite == "minimality":
        return resolution.verify_minimality(max(n, 1), ctx, q)
    if suite == "oracle":
        return barcomplex.compare_with_resolution(min(n, cfg.oracle_cap), ctx, q)
    if suite == "ring":
        return verify_presentation(ctx, q, cfg.ring_cap())
    if suite == "centre":
        return koszul.verify_centre_proposition(ctx, q, cfg.centre_cap())
    if suite == "hilbert":
        return hilbert.compare_dims(ctx, q, n)
    raise UsageError(f"unknown suite {suite!r}")


def cmd_verify(cfg: RunConfig) -> tuple[dict, int]:
    suites = SUITES if cfg.suite == "all" else (cfg.suite,)
    report = Report()
    for s in suites:
        log.info("running suite %s", s)
        report.extend(run_suite(cfg, s))
    out = _header(cfg)
    out["dims"] = [resolution.hh_dimension(k, cfg.ctx, cfg.q) for k in range(cfg.max_n + 1)]
    out["bases"] = []
    out["products"] = []
    if "ring" in suites:
        out["products"] = product_table(cfg.ctx, cfg.q, min(cfg.products, cfg.ring_cap()))
    out["checks"] = [c.to_dict() for c in report.checks]
    return out, 0 if report.ok else 1


def cmd_centre(cfg: RunConfig) -> tuple[dict, int]:
    cap = cfg.centre_cap()
    report = koszul.verify_centre_proposition(cfg.ctx, cfg.q, cap)
    out = _header(cfg)
    out["max_deg"] = cap
    out["monomials"] = [list(m) for m in koszul.graded_centre_monomials(cfg.ctx, cfg.q, cap)]
    out["subalgebra"] = koszul.expected_centre_monomials(cfg.ctx, cfg.q, cap)[0]
    out["checks"] = [c.to_dict() for c in report.checks]
    return out, 0 if report.ok else 1


def _render_human(command: str, out: dict) -> str:
    lines = [f"field {out['field']}, q = {out['q']}, case {out['case']}"]
    if "dims" in out and out["dims"]:
        lines.append("dims: " + " ".join(str(d) for d in out["dims"]))
    for b in out.get("bases", []):
        lines.append(f"  HH^{b['degree']}: " + (", ".join(b["representatives"]) or "0"))
    if command == "centre":
        mons = [str(koszul.QuantumMonomial(a, b, 1)) for a, b in out["monomials"]]
        lines.append(f"graded-central monomials up to degree {out['max_deg']}: " + ", ".join(mons))
    for c in out.get("checks", []):
        lines.append(f"[{c['status']}] {c['name']}" + (f" -- {c['note']}" if c["note"] else ""))
    return "\n".join(lines) + "\n"


def _render_csv(out: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "dim"])
    for n, d in enumerate(out.get("dims", [])):
        w.writerow([n, d])
    return buf.getvalue()


def render(command: str, out: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(out, indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        return _render_csv(out)
    return _render_human(command, out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hhq",
        description="Hochschild cohomology of Lambda_q = k<x,y>/(x^2, xy+qyx, y^2).",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="diagnostics on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--field", default="Q", help="Q, Fp:<p> or cyclo:<r> (default Q)")
        p.add_argument("--q", required=True, help="integer, fraction, 'zeta' or 'zeta^k'")
        p.add_argument("--max-n", type=int, default=8, help="largest cohomological degree")
        p.add_argument("--oracle-cap", type=int, default=None,
                       help="bar-complex degree cap (default $HHQ_ORACLE_CAP or 4)")
        p.add_argument("--format", choices=("human", "json", "csv"), default="human")
        p.add_argument("--out", help="write the report to this file instead of stdout")

    common(sub.add_parser("dims", help="dimension table of HH^n"))
    p = sub.add_parser("verify", help="run verification suites")
    common(p)
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--cap", type=int, default=None, help="degree cap for the ring suite")
    p.add_argument("--max-deg", type=int, default=None, help="degree cap for the centre suite")
    p.add_argument("--products", type=int, default=2, help="product table up to this degree")
    p = sub.add_parser("centre", help="graded centre of the Koszul dual")
    common(p)
    p.add_argument("--max-deg", type=int, default=None)
    return parser


COMMANDS = {"dims": cmd_dims, "verify": cmd_verify, "centre": cmd_centre}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    try:
        cfg = _config(args)
        out, code = COMMANDS[args.command](cfg)
    except UsageError as exc:
        print(f"hhq: error: {exc}", file=sys.stderr)
        return 2
    text = render(args.command, out, cfg.fmt)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
