"""Command-line front end.

    ipjfact gen N          [--format csv|json|mm] [--output PATH]
    ipjfact invert N       [--method closed|gover-fact|gover-binom|gauss]
    ipjfact verify N
    ipjfact identities N
    ipjfact condition N
    ipjfact floatstudy N

Exit status is 0 on success, 1 if any verification fails, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from dataclasses import dataclass
from decimal import Decimal, localcontext
from typing import Optional

from . import bigcombinatorics as bc
from . import exact_matrix as em
from . import float_lab
from . import formats
from . import hankel_inverse as hi
from .formats import OutputFormat

COMMANDS = ("gen", "invert", "verify", "identities", "condition", "floatstudy")
METHODS = {
    "closed": hi.inverse_closed_form,
    "gover-fact": hi.inverse_gover_factorial,
    "gover-binom": hi.inverse_gover_binomial,
    "gauss": lambda n: em.gauss_inverse(hi.hankel(n)),
}


@dataclass(frozen=True)
class CommandConfig:
    command: str
    n: int
    format: OutputFormat = OutputFormat.CSV
    output: Optional[str] = None
    method: str = "closed"

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")


def _verify(n: int) -> tuple[bool, str]:
    ok_all = True
    lines = []
    for k in range(1, n + 1):
        ok = hi.verify_inverse(k) and hi.formulas_agree(k)
        ok_all &= ok
        lines.append(f"n={k} {'PASS' if ok else 'FAIL'}")
    return ok_all, "\n".join(lines) + "\n"


def _identities(n: int) -> tuple[bool, str]:
    checks = {
        "reflection": all(bc.check_reflection(t, m)
                          for t in range(-n, n + 1) for m in range(n + 1)),
        "chu-vandermonde": all(bc.check_chu_vandermonde(s, t, m)
                               for s in range(-n, n + 1)
                               for t in range(-n, n + 1)
                               for m in range(n + 1)),
        "lemma1": all(hi.lemma1_check(k, i, l, q)
                      for k in range(1, n + 1)
                      for i in range(1, k + 1)
                      for l in range(1, k + 1)
                      for q in range(i)),
        "lemma2": all(hi.lemma2_sum(k, i, l) == (i == l)
                      for k in range(1, n + 1)
                      for i in range(1, k + 1)
                      for l in range(1, k + 1)),
    }
    text = "".join(f"{name} {'PASS' if ok else 'FAIL'}\n" for name, ok in checks.items())
    return all(checks.values()), text


def _decimal(x) -> str:
    with localcontext() as ctx:
        ctx.prec = 17
        return f"{Decimal(x.numerator) / Decimal(x.denominator):.15e}"


def _condition(n: int, fmt: OutputFormat) -> str:
    rows = []
    for k in range(1, n + 1):
        c = float_lab.cond_inf_exact(k)
        rows.append([str(k), formats.format_scalar(c), _decimal(c)])
    if fmt is OutputFormat.JSON:
        return json.dumps({"n": n, "kind": "condition",
                           "columns": ["n", "cond_inf", "approx"],
                           "entries": rows}) + "\n"
    if fmt is OutputFormat.MM:
        return formats.dense_to_mm([[float(r[2])] for r in rows])
    return "".join(",".join(r) + "\n" for r in rows)


def run(config: CommandConfig) -> tuple[int, str]:
    """Execute one command; returns ``(exit_status, output_text)``."""
    cmd, n, fmt = config.command, config.n, config.format
    if cmd == "gen":
        return 0, formats.matrix_to_text(hi.hankel(n), fmt, "hankel")
    if cmd == "invert":
        m = METHODS[config.method](n)
        if m.is_integral():
            m = em.RationalMatrix(m.rows).to_integer()
        return 0, formats.matrix_to_text(m, fmt, "inverse")
    if cmd == "verify":
        ok, text = _verify(n)
        return (0 if ok else 1), text
    if cmd == "identities":
        ok, text = _identities(n)
        return (0 if ok else 1), text
    if cmd == "condition":
        return 0, _condition(n, fmt)
    return 0, formats.reports_to_text(float_lab.study(n), fmt)


def _write_atomic(path: str, text: str) -> None:
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".ipjfact-")
    try:
        with os.fdopen(fd, "w", newline="") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def _positive_int(s: str) -> int:
    try:
        v = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {s!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("n", type=_positive_int,
                        help="matrix order (or largest order for sweeps)")
    common.add_argument("--format", choices=[f.value for f in OutputFormat],
                        default="csv")
    common.add_argument("--output", metavar="PATH",
                        help="write here instead of standard output")

    parser = argparse.ArgumentParser(
        prog="ipjfact",
        description="Exact inverse of the factorial Hankel matrix 1/(i+j-1)!")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("gen", parents=[common], help="emit H(n)")
    inv = sub.add_parser("invert", parents=[common], help="emit the inverse of H(n)")
    inv.add_argument("--method", choices=list(METHODS), default="closed")
    sub.add_parser("verify", parents=[common],
                   help="check M H = H M = I and formula agreement for orders 1..n")
    sub.add_parser("identities", parents=[common],
                   help="check the binomial identities and lemma grids up to n")
    sub.add_parser("condition", parents=[common],
                   help="exact infinity-norm condition numbers for orders 1..n")
    sub.add_parser("floatstudy", parents=[common],
                   help="binary64 error study for orders 1..n")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    config = CommandConfig(
        command=args.command, n=args.n, format=OutputFormat(args.format),
        output=args.output, method=getattr(args, "method", "closed"))
    status, text = run(config)
    if config.output:
        _write_atomic(config.output, text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
