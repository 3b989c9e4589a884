"""Command-line front end.

Subcommands: `seq` prints sequence tables, `verify` runs phi1/phi2
divisibility reports over a sequence expression, `oracle` counts fixed or
antifixed points of an interval map by exact enumeration, `crosscheck`
compares the recurrence, oracle, and edge-engine values side by side, and
`conjecture` scans phi1 applied to the psi families (an open question, so it
reports neutrally and always exits 0).

Exit codes: 0 success/agreement, 1 verification failure or disagreement,
2 usage error, 3 piece cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import __version__
from .arith import divisibility_check, phi1, phi2
from .interval_map import (
    DEFAULT_PIECE_CAP,
    PieceCapExceededError,
    build_gj,
    compose,
    count_antifixed,
    count_fixed,
    load_map_file,
)
from .sequences import (
    Sequence,
    TableRangeError,
    constant,
    dilate,
    dilate_odd,
    linear_combine,
    load_table,
    make_theorem4,
    make_theorem5_phi,
    make_theorem5_psi,
    product,
)
from .symbolic import c_count, d_count, initial_tensor, step

__all__ = [
    "main",
    "parse_expression",
    "ExpressionError",
    "UsageError",
    "run_divisibility",
    "run_crosscheck",
    "DivisibilityReport",
    "ReportRow",
    "CrossCheckReport",
    "CrossCheckRow",
]

DEFAULT_N_MAX = {"seq": 24, "verify": 48, "oracle": 10,
                 "crosscheck": 8, "conjecture": 36}


class UsageError(Exception):
    """Invalid command-line parameters (exit code 2)."""


class ExpressionError(ValueError):
    """Malformed sequence expression (exit code 2)."""


# ---------------------------------------------------------------------------
# sequence expression grammar:
#   expr := theorem4(j,k,m) | theorem5phi(j) | theorem5psi(j) | const(v)
#         | table(path) | lin(k,expr,m,expr) | dilate(expr,k)
#         | dilateodd(expr,k) | prod(expr,...)

class _ExprParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, msg: str):
        raise ExpressionError(f"{msg} at position {self.pos} in {self.text!r}")

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _expect(self, ch: str):
        self._skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            self.fail(f"expected {ch!r}")
        self.pos += 1

    def _name(self) -> str:
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum()
                                             or self.text[self.pos] == "_"):
            self.pos += 1
        if self.pos == start:
            self.fail("expected a generator or combinator name")
        return self.text[start:self.pos].lower()

    def _integer(self) -> int:
        self._skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        token = self.text[start:self.pos]
        try:
            return int(token)
        except ValueError:
            self.fail("expected an integer")

    def _path(self) -> str:
        # everything up to the closing paren; quotes optional
        self._skip_ws()
        end = self.text.find(")", self.pos)
        if end < 0:
            self.fail("unterminated table(...) path")
        raw = self.text[self.pos:end].strip()
        self.pos = end
        if len(raw) >= 2 and raw[0] == raw[-1] and raw[0] in "'\"":
            raw = raw[1:-1]
        if not raw:
            self.fail("empty table(...) path")
        return raw

    def parse(self) -> Sequence:
        seq = self._expr()
        self._skip_ws()
        if self.pos != len(self.text):
            self.fail("trailing characters")
        return seq

    def _expr(self) -> Sequence:
        name = self._name()
        self._expect("(")
        try:
            seq = self._body(name)
        except ValueError as exc:
            if isinstance(exc, ExpressionError):
                raise
            raise ExpressionError(str(exc)) from None
        self._expect(")")
        return seq

    def _body(self, name: str) -> Sequence:
        if name == "theorem4":
            j = self._integer(); self._expect(",")
            k = self._integer(); self._expect(",")
            m = self._integer()
            return make_theorem4(j, k, m)
        if name == "theorem5phi":
            return make_theorem5_phi(self._integer())
        if name == "theorem5psi":
            return make_theorem5_psi(self._integer())
        if name in ("const", "constant"):
            return constant(self._integer())
        if name == "table":
            return load_table(self._path())
        if name == "lin":
            k = self._integer(); self._expect(",")
            a = self._expr(); self._expect(",")
            m = self._integer(); self._expect(",")
            b = self._expr()
            return linear_combine(k, a, m, b)
        if name == "dilate":
            a = self._expr(); self._expect(",")
            return dilate(a, self._integer())
        if name == "dilateodd":
            a = self._expr(); self._expect(",")
            return dilate_odd(a, self._integer())
        if name == "prod":
            seqs = [self._expr()]
            while True:
                self._skip_ws()
                if self.pos < len(self.text) and self.text[self.pos] == ",":
                    self.pos += 1
                    seqs.append(self._expr())
                else:
                    return product(seqs)
        self.fail(f"unknown generator or combinator {name!r}")


def parse_expression(text: str) -> Sequence:
    """Build a Sequence from the command-line expression grammar."""
    return _ExprParser(text).parse()


# ---------------------------------------------------------------------------
# reports

@dataclass
class ReportRow:
    n: int
    q: int | None
    phi: int | None
    modulus: int
    remainder: int | None
    passed: bool
    error: str | None = None


@dataclass
class DivisibilityReport:
    sequence_id: str
    mode: str
    rows: list[ReportRow]

    @property
    def checked(self) -> int:
        return len(self.rows)

    @property
    def failures(self) -> int:
        return sum(1 for r in self.rows if not r.passed)

    @property
    def first_failure(self) -> int | None:
        for r in self.rows:
            if not r.passed:
                return r.n
        return None


@dataclass
class CrossCheckRow:
    n: int
    equation: str                # "fixed" or "antifixed"
    recurrence: int
    oracle: int | str            # count, or an error marker string
    symbolic: int | None         # None when the edge engine is out of scope
    agree: bool


@dataclass
class CrossCheckReport:
    j: int
    rows: list[CrossCheckRow]

    @property
    def disagreements(self) -> int:
        return sum(1 for r in self.rows if not r.agree)

    @property
    def cap_hit(self) -> bool:
        return any(isinstance(r.oracle, str) for r in self.rows)


_MODES = {
    "phi1-mod-n": (phi1, 1),
    "phi2-mod-2n": (phi2, 2),
    "phi1-of-psi": (phi1, 1),
}


def run_divisibility(seq: Sequence, mode: str, n_max: int) -> DivisibilityReport:
    """Check transform(seq, n) against its modulus for n = 1..n_max.

    Rows that cannot be evaluated (a table running out of values) are
    recorded as failures with the error message, not raised.
    """
    transform, mod_factor = _MODES[mode]
    rows = []
    for n in range(1, n_max + 1):
        modulus = mod_factor * n
        try:
            q = seq(n)
            value = transform(seq, n)
        except TableRangeError as exc:
            rows.append(ReportRow(n, None, None, modulus, None, False, str(exc)))
            continue
        ok, remainder = divisibility_check(value, modulus)
        rows.append(ReportRow(n, q, value, modulus, remainder, ok))
    return DivisibilityReport(seq.id, mode, rows)


def run_crosscheck(j: int, n_max: int,
                   piece_cap: int = DEFAULT_PIECE_CAP) -> CrossCheckReport:
    """Compare recurrence, oracle, and (j >= 3) edge-engine counts.

    A piece-cap overflow on the oracle path is recorded in the affected rows
    as "error:piece-cap" rather than aborting the report.
    """
    g = build_gj(j)
    phi_seq, psi_seq = make_theorem5_phi(j), make_theorem5_psi(j)
    tensor = initial_tensor(j) if j >= 3 else None
    power = None
    cap_msg = None
    rows = []
    for n in range(1, n_max + 1):
        if cap_msg is None:
            try:
                power = g if n == 1 else compose(g, power, piece_cap)
            except PieceCapExceededError as exc:
                cap_msg = f"error:piece-cap(n={n}: {exc})"
        if tensor is not None and n > 1:
            tensor = step(tensor)
        for equation, rec, oracle, sym in (
            ("fixed", phi_seq(n),
             "error:piece-cap" if cap_msg else count_fixed(power, 1, piece_cap),
             None if tensor is None else c_count(tensor)),
            ("antifixed", psi_seq(n),
             "error:piece-cap" if cap_msg else count_antifixed(power, 1, piece_cap),
             None if tensor is None else d_count(tensor)),
        ):
            present = [rec] + [v for v in (oracle, sym)
                               if isinstance(v, int)]
            agree = (not isinstance(oracle, str)) and all(
                v == present[0] for v in present)
            rows.append(CrossCheckRow(n, equation, rec, oracle, sym, agree))
    return CrossCheckReport(j, rows)


# ---------------------------------------------------------------------------
# rendering (csv | tsv | json); identical invocations must emit identical
# bytes, so everything is assembled as a string with LF endings

def _bool(b: bool) -> str:
    return "true" if b else "false"


def _render_table(fmt: str, meta: dict, rows) -> str:
    if fmt == "json":
        payload = {"meta": meta,
                   "rows": [{"n": n, "value": str(v)} for n, v in rows]}
        return json.dumps(payload, indent=2) + "\n"
    sep = "," if fmt == "csv" else "\t"
    lines = ["n" + sep + "value"]
    lines.extend(f"{n}{sep}{v}" for n, v in rows)
    return "\n".join(lines) + "\n"


def _render_report(fmt: str, meta: dict, report: DivisibilityReport) -> str:
    if fmt == "json":
        rows = []
        for r in report.rows:
            row = {"n": r.n,
                   "q": None if r.q is None else str(r.q),
                   "phi": None if r.phi is None else str(r.phi),
                   "modulus": r.modulus,
                   "remainder": None if r.remainder is None else str(r.remainder),
                   "pass": r.passed}
            if r.error is not None:
                row["error"] = r.error
            rows.append(row)
        payload = {"meta": meta,
                   "rows": rows,
                   "summary": {"checked": report.checked,
                               "failures": report.failures,
                               "first_failure": report.first_failure}}
        return json.dumps(payload, indent=2) + "\n"
    sep = "," if fmt == "csv" else "\t"
    lines = [sep.join(("n", "q", "phi", "modulus", "remainder", "pass"))]
    for r in report.rows:
        cells = (str(r.n),
                 "" if r.q is None else str(r.q),
                 "" if r.phi is None else str(r.phi),
                 str(r.modulus),
                 "" if r.remainder is None else str(r.remainder),
                 _bool(r.passed))
        lines.append(sep.join(cells))
    return "\n".join(lines) + "\n"


def _render_crosscheck(fmt: str, meta: dict, report: CrossCheckReport) -> str:
    if fmt == "json":
        rows = [{"n": r.n,
                 "equation": r.equation,
                 "recurrence": str(r.recurrence),
                 "oracle": r.oracle if isinstance(r.oracle, str) else str(r.oracle),
                 "symbolic": None if r.symbolic is None else str(r.symbolic),
                 "agree": r.agree}
                for r in report.rows]
        payload = {"meta": meta,
                   "rows": rows,
                   "summary": {"rows": len(report.rows),
                               "disagreements": report.disagreements,
                               "piece_cap_hit": report.cap_hit}}
        return json.dumps(payload, indent=2) + "\n"
    sep = "," if fmt == "csv" else "\t"
    lines = [sep.join(("n", "equation", "recurrence", "oracle", "symbolic",
                       "agree"))]
    for r in report.rows:
        cells = (str(r.n), r.equation, str(r.recurrence), str(r.oracle),
                 "n/a" if r.symbolic is None else str(r.symbolic),
                 _bool(r.agree))
        lines.append(sep.join(cells))
    return "\n".join(lines) + "\n"


def _report_errors_to_stderr(report: DivisibilityReport):
    for r in report.rows:
        if r.error is not None:
            print(f"divseq: row n={r.n}: {r.error}", file=sys.stderr)


# ---------------------------------------------------------------------------
# subcommands

def _seq_from_flags(args) -> Sequence:
    def need(flag, value):
        if value is None:
            raise UsageError(f"seq {args.kind} requires {flag}")
        return value

    if args.kind == "theorem4":
        return make_theorem4(need("--j", args.j), need("--k", args.k),
                             need("--m", args.m))
    if args.kind == "theorem5-phi":
        return make_theorem5_phi(need("--j", args.j))
    if args.kind == "theorem5-psi":
        return make_theorem5_psi(need("--j", args.j))
    if args.kind == "constant":
        return constant(need("--value", args.value))
    return load_table(need("--file", args.file))


def cmd_seq(args) -> int:
    seq = _seq_from_flags(args)
    rows = [(n, seq(n)) for n in range(1, args.n_max + 1)]
    meta = {"command": "seq", "params": {"kind": args.kind, "id": seq.id,
                                         "n_max": args.n_max},
            "version": __version__}
    sys.stdout.write(_render_table(args.format, meta, rows))
    return 0


def cmd_verify(args) -> int:
    seq = parse_expression(args.expr)
    report = run_divisibility(seq, args.mode, args.n_max)
    meta = {"command": "verify",
            "params": {"expr": args.expr, "sequence": seq.id,
                       "mode": args.mode, "guarantee": seq.guarantee,
                       "n_max": args.n_max},
            "version": __version__}
    sys.stdout.write(_render_report(args.format, meta, report))
    if args.format != "json":
        _report_errors_to_stderr(report)
    return 1 if report.failures else 0


def cmd_oracle(args) -> int:
    if args.j is not None:
        gmap = build_gj(args.j)
        source = {"j": args.j}
    else:
        gmap = load_map_file(args.map_file)
        source = {"map_file": args.map_file}
    rows = []
    power = None
    for n in range(1, args.n_max + 1):
        try:
            power = gmap if n == 1 else compose(gmap, power, args.piece_cap)
        except PieceCapExceededError as exc:
            raise PieceCapExceededError(f"oracle stopped at n={n}: {exc}") from None
        if args.equation == "fixed":
            rows.append((n, count_fixed(power, 1, args.piece_cap)))
        else:
            rows.append((n, count_antifixed(power, 1, args.piece_cap)))
    meta = {"command": "oracle",
            "params": {**source, "equation": args.equation,
                       "n_max": args.n_max, "piece_cap": args.piece_cap},
            "version": __version__}
    sys.stdout.write(_render_table(args.format, meta, rows))
    return 0


def cmd_crosscheck(args) -> int:
    report = run_crosscheck(args.j, args.n_max, args.piece_cap)
    meta = {"command": "crosscheck",
            "params": {"j": args.j, "n_max": args.n_max,
                       "piece_cap": args.piece_cap},
            "version": __version__}
    sys.stdout.write(_render_crosscheck(args.format, meta, report))
    if report.cap_hit:
        print("divseq: oracle column hit the piece cap", file=sys.stderr)
        return 3
    return 1 if report.disagreements else 0


def cmd_conjecture(args) -> int:
    seq = make_theorem5_psi(args.j)
    report = run_divisibility(seq, "phi1-of-psi", args.n_max)
    meta = {"command": "conjecture",
            "params": {"j": args.j, "n_max": args.n_max},
            "version": __version__}
    sys.stdout.write(_render_report(args.format, meta, report))
    # open question: counterexamples are findings to report, not failures,
    # so the exit status stays 0 either way
    return 0


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json", "tsv"),
                        default="csv", help="output format (default csv)")
    common.add_argument("--n-max", type=int, default=None, metavar="N",
                        help="largest n to include (command-specific default)")
    common.add_argument("--piece-cap", type=int, default=DEFAULT_PIECE_CAP,
                        metavar="N",
                        help="max linear pieces per composed map")

    parser = argparse.ArgumentParser(
        prog="divseq",
        description="Exact toolkit for dividing formulas n | Q(n): sequence "
                    "families, inclusion-exclusion verification, and "
                    "interval-map oracles.")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", parents=[common],
                       help="print a sequence table")
    p.add_argument("kind", choices=("theorem4", "theorem5-phi",
                                    "theorem5-psi", "constant", "table"))
    p.add_argument("--j", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--value", type=int)
    p.add_argument("--file")
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("verify", parents=[common],
                       help="run a divisibility report over a sequence "
                            "expression")
    p.add_argument("expr",
                   help="e.g. 'theorem5phi(3)' or 'lin(3,theorem5phi(2),-2,"
                        "theorem4(3,0,1))'")
    p.add_argument("--mode", required=True,
                   choices=("phi1-mod-n", "phi2-mod-2n"))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", parents=[common],
                       help="count fixed/antifixed points of an interval map")
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--j", type=int, help="use the zigzag map on [-j, j]")
    target.add_argument("--map-file", help="load a user map file")
    p.add_argument("--equation", choices=("fixed", "antifixed"),
                   default="fixed")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("crosscheck", parents=[common],
                       help="compare recurrence, oracle, and edge-engine "
                            "counts")
    p.add_argument("--j", type=int, required=True)
    p.set_defaults(func=cmd_crosscheck)

    p = sub.add_parser("conjecture", parents=[common],
                       help="scan phi1 applied to the psi family (open "
                            "question; always exits 0)")
    p.add_argument("--j", type=int, required=True)
    p.set_defaults(func=cmd_conjecture)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.n_max is None:
        args.n_max = DEFAULT_N_MAX[args.command]
    if args.n_max < 1:
        print("divseq: --n-max must be >= 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (UsageError, ExpressionError, ValueError, LookupError, OSError) as exc:
        print(f"divseq: {exc}", file=sys.stderr)
        return 2
    except PieceCapExceededError as exc:
        print(f"divseq: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
