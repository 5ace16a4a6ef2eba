"""Command-line interface.

Usage::

    chernsub verify -p 3 [-p 5 ...] [--format json] [--sweep-degree D] [--oracle]
    chernsub chern -p 3 "23*L3 - 2*L1^3"
    chernsub oracle -p 5 [--cap 10000000]

Exit codes: 0 everything asserted was verified, 1 a certificate failed,
2 usage or configuration error.  The default oracle cap can be set with
the CHERNSUB_ORACLE_CAP environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any

from .chern import c1, c2, total_chern
from .exactarith import is_prime
from .expr import ExpressionError, parse_lambda_expression
from .repring import DEFAULT_ORACLE_CAP, OracleSkipped, phi1_star, phi1_star_lambda, phi1_star_lambda_bruteforce
from .verifier import verify_theorem

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

ORACLE_CAP_ENV = "CHERNSUB_ORACLE_CAP"


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    primes: list[int]
    N: int = 2
    sweep: bool = True
    sweep_degree: int | None = None
    oracle: bool = False
    oracle_cap: int = DEFAULT_ORACLE_CAP
    workers: int = 1
    fmt: str = "text"
    output: str | None = None
    timings: bool = field(default=True)

    def validate(self) -> None:
        if not self.primes:
            raise UsageError("at least one prime is required")
        for p in self.primes:
            if not is_prime(p):
                raise UsageError(f"{p} is not prime")
        if self.N < 2:
            raise UsageError("truncation degree must be >= 2 in verify mode")
        if self.oracle_cap < 1:
            raise UsageError("oracle cap must be positive")
        if self.workers < 1:
            raise UsageError("workers must be positive")
        if self.sweep_degree is not None and self.sweep_degree < 0:
            raise UsageError("sweep degree must be non-negative")


def default_oracle_cap() -> int:
    raw = os.environ.get(ORACLE_CAP_ENV)
    if raw is None:
        return DEFAULT_ORACLE_CAP
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{ORACLE_CAP_ENV}={raw!r} is not an integer") from None


@contextmanager
def _open_output(path: str | None):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


# --------------------------------------------------------------------------
# Text rendering (from the same dict the JSON is built from)


def render_text(report: dict[str, Any]) -> str:
    lines = [f"== p = {report['prime']} =="]
    if report["scope_flag"]:
        lines.append(f"!! {report['scope_flag']}")
    for key, title in (("certificate_dim", "A: p | C(p^2, l)"),
                       ("certificate_pk", "B: p | C(p^2-2, pk-1)")):
        checks = report[key]
        ok = sum(c["passed"] for c in checks.values())
        lines.append(f"certificate {title}: {ok}/{len(checks)} passed")
        for label, c in checks.items():
            mark = "ok" if c["passed"] else "FAIL"
            lines.append(
                f"  [{label}] C({c['n']}, {c['k']}) = {c['binomial']}"
                f"  mod p: {c['residue']} (lucas {c['lucas_residue']})  {mark}"
            )
    lines.append("lambda c2 table (c2 in units of t^2):")
    for ell, row in report["lambda_c2_table"].items():
        mark = "ok" if row["passed"] else "FAIL"
        lines.append(
            f"  l={ell}: dim {row['dim']}  c1 {row['c1']}  c2 {row['c2']}"
            f"  closed form {row['closed_form_c2']}  c = [{', '.join(row['total_chern'])}]  {mark}"
        )
    r = report["remark21"]
    lines.append(
        f"centre restriction: lambda_p -> ({', '.join(r['delta1_lambda_p'])}) "
        f"{'trivial' if r['lambda_p_trivial'] else 'NON-TRIVIAL'}; "
        f"lambda_1^p -> ({', '.join(r['delta1_lambda_1_pow_p'])}) "
        f"{'trivial' if r['lambda_1_pow_p_trivial'] else 'NON-TRIVIAL'}"
    )
    cg = report["congruence_mod_p2"]
    lines.append(f"C(p^2-2, p-1) = {cg['binomial']} = {cg['residue']} mod {cg['modulus']}")
    b = report["bezout"]
    if b is not None:
        lines.append(
            f"bezout: ({b['beta1']})*{b['binomial']} + ({b['beta2']})*{b['p_power']}"
            f" = {b['identity_value']}  (gcd {b['gcd']})"
        )
    lines.append(f"c2(y) = {report['y_c2']}")
    s = report["sweep"]
    if s is not None:
        lengths = ", ".join(f"r={k}: {v}" for k, v in s["by_length"].items())
        lines.append(
            f"sweep (sum(L) <= {s['max_total_degree']}, p | sum(L)): {s['count']} monomials"
            f" [{lengths}], product-rule pairs {s['product_rule_checked']},"
            f" oracle-checked {s['oracle_checked']}, violations {len(s['violations'])}"
        )
        for v in s["violations"]:
            lines.append(f"  VIOLATION {v}")
    o = report["oracle"]
    if o is not None:
        lines.append(
            f"oracle (cap {o['cap']}): {len(o['matched'])}/{o['compared']} matched;"
            f" mismatched [{', '.join(o['mismatched'])}]; skipped [{', '.join(o['skipped'])}]"
        )
    for f in report["failures"]:
        lines.append(f"FAILURE: {f}")
    lines.append("assumptions:")
    lines.extend(f"  - {a}" for a in report["assumptions"])
    if report["timings"]:
        lines.append(
            "timings (s): " + ", ".join(f"{k} {v}" for k, v in report["timings"].items())
        )
    lines.append(
        f"version: {report['version']['schema']} / chernsub {report['version']['package']}"
    )
    index = report["index"]
    lines.append(
        f"Chern subgroup index: {index}" if index is not None
        else "Chern subgroup index: not asserted"
    )
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# Commands


def cmd_verify(config: RunConfig) -> int:
    config.validate()
    reports = []
    failed = False
    for p in config.primes:
        report = verify_theorem(
            p,
            N=config.N,
            sweep=config.sweep,
            sweep_degree=config.sweep_degree,
            oracle=config.oracle,
            oracle_cap=config.oracle_cap,
            workers=config.workers,
        )
        if report.scope_flag is None and report.index != p:
            failed = True
        reports.append(report.to_dict(timings=config.timings))
    with _open_output(config.output) as out:
        if config.fmt == "json":
            doc = reports[0] if len(reports) == 1 else reports
            out.write(json.dumps(doc, indent=2) + "\n")
        else:
            out.write("\n".join(render_text(r) for r in reports))
    return EXIT_FAILED if failed else EXIT_OK


def _format_weights(v) -> str:
    return "{" + ", ".join(f"{a}: {m}" for a, m in sorted(v.items(), reverse=True)) + "}"


def _format_series(coeffs) -> str:
    parts = []
    for k, c in enumerate(coeffs):
        if k == 0:
            parts.append(str(c))
        elif c:
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            mono = "t" if k == 1 else f"t^{k}"
            parts.append(f"{sign} {mono}" if mag == 1 else f"{sign} {mag}*{mono}")
    return " ".join(parts)


def cmd_chern(expr: str, p: int, N: int = 2, out=None) -> int:
    out = out or sys.stdout
    if not is_prime(p):
        raise UsageError(f"{p} is not prime")
    if N < 0:
        raise UsageError("truncation degree must be >= 0")
    try:
        x = parse_lambda_expression(expr, p)
    except ExpressionError as exc:
        raise UsageError(f"cannot parse {expr!r}: {exc}") from None
    v = phi1_star(x)
    series = total_chern(v, N)
    out.write(f"x = {x!r}\n")
    out.write(f"weights = {_format_weights(v)}\n")
    out.write(f"dim = {v.dim()}\n")
    out.write(f"c = {_format_series(series.coeffs)} + O(t^{N + 1})\n")
    if N >= 1:
        out.write(f"c1 = {c1(series)}\n")
    if N >= 2:
        out.write(f"c2 = {c2(series)}\n")
    return EXIT_OK


def cmd_oracle(p: int, cap: int, workers: int = 1, out=None) -> int:
    out = out or sys.stdout
    if not is_prime(p):
        raise UsageError(f"{p} is not prime")
    if cap < 1 or workers < 1:
        raise UsageError("cap and workers must be positive")
    matched, compared, skipped = 0, 0, []
    for ell in range(1, p * p):
        try:
            brute = phi1_star_lambda_bruteforce(ell, p, cap, workers)
        except OracleSkipped as exc:
            skipped.append(ell)
            out.write(f"l={ell}: skipped ({exc})\n")
            continue
        closed = phi1_star_lambda(ell, p)
        compared += 1
        ok = brute == closed
        matched += ok
        out.write(f"l={ell}: {'match' if ok else 'MISMATCH'} {_format_weights(brute)}\n")
    out.write(f"{matched}/{compared} matched")
    if skipped:
        out.write(f"; skipped l = {', '.join(map(str, skipped))}")
    out.write("\n")
    return EXIT_OK if matched == compared else EXIT_FAILED


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chernsub",
        description="Exact verification of the Chern subgroup of H^4(BSU(p^2)/mu_p; Z).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the full certificate for one or more primes")
    v.add_argument("-p", "--prime", type=int, action="append", required=True, dest="primes")
    v.add_argument("-N", "--degree", type=int, default=2, help="truncation degree (default 2)")
    v.add_argument("--sweep-degree", type=int, default=None,
                   help="bound on sum(L) in the monomial sweep (default 2p)")
    v.add_argument("--no-sweep", action="store_true", help="skip the monomial sweep")
    v.add_argument("--oracle", action="store_true", help="also run the brute-force oracle")
    v.add_argument("--cap", type=int, default=None, help="oracle subset budget")
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--no-timings", action="store_true", help="omit timing fields")
    v.add_argument("-o", "--output", default=None, help="output path (default stdout)")

    c = sub.add_parser("chern", help="restrict a lambda-expression to S^1 and print c")
    c.add_argument("-p", "--prime", type=int, required=True)
    c.add_argument("-N", "--degree", type=int, default=2)
    c.add_argument("expr")

    o = sub.add_parser("oracle", help="compare closed form against subset enumeration")
    o.add_argument("-p", "--prime", type=int, required=True)
    o.add_argument("--cap", type=int, default=None)
    o.add_argument("--workers", type=int, default=1)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cap = args.cap if getattr(args, "cap", None) is not None else default_oracle_cap()
        if args.command == "verify":
            config = RunConfig(
                primes=args.primes,
                N=args.degree,
                sweep=not args.no_sweep,
                sweep_degree=args.sweep_degree,
                oracle=args.oracle,
                oracle_cap=cap,
                workers=args.workers,
                fmt=args.format,
                output=args.output,
                timings=not args.no_timings,
            )
            return cmd_verify(config)
        if args.command == "chern":
            return cmd_chern(args.expr, args.prime, args.degree)
        return cmd_oracle(args.prime, cap, args.workers)
    except UsageError as exc:
        print(f"chernsub: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
