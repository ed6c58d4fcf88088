"""Command-line front end: ``wilkercert <subcommand> [options]``.

Exit codes: 0 when everything is proved or verified, 1 on any refutation or
mismatch, 2 when something stays inconclusive, 64 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .arith import bernoulli_abs_even, bernoulli_bound_precision
from .certifier import (
    BEST_CONSTANT_FAMILIES,
    CASES,
    INCONCLUSIVE,
    PROVED,
    REFUTED,
    CertifyConfig,
    all_best_constants,
    best_constants,
    certified_decimal,
    certify_sign,
    get_case,
    sweep,
)
from .enclosure import Interval
from .sequences import (
    PRINTED_CLOSED_FORMS,
    Y_VARIANTS,
    appendix_range_check,
    compare_with_threshold,
    exp_poly_checks,
    huygens_kernel_positive,
    is_decreasing,
    kernel_identity_checks,
    ratio2_reduction,
    sequence_exact,
)
from .series import RATIO_IDS, ratio_taylor, tan_coeff

EXIT_OK, EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_USAGE = 0, 1, 2, 64
FORMATS = ("json", "markdown", "csv")

# n values certified by default when a family case is given without --n
DEFAULT_N = {
    "tan-tail": range(1, 6),
    "wilker-family": range(3, 7),
    "huygens-family": range(2, 7),
    "wilker2-family": range(1, 7),
}

SEQUENCE_TARGETS = (("a_n", 3), ("b_N", 2), ("x_n", 2), ("y_N", 1))


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit with status 2
        raise UsageError(message)


@dataclass(frozen=True)
class RunConfig:
    precision: int = 64
    max_depth: int = 40
    delta0: Fraction = Fraction(1, 4)
    output_format: str = "markdown"
    output_path: str | None = None
    case: str | None = None
    n: int | None = None
    grid: int = 100

    def __post_init__(self):
        if self.precision < 32:
            raise UsageError("--precision must be >= 32")
        if self.max_depth < 1:
            raise UsageError("--max-depth must be >= 1")
        if not 0 < self.delta0 <= Fraction(1, 2):
            raise UsageError("--delta0 must lie in (0, 1/2]")
        if self.output_format not in FORMATS:
            raise UsageError(f"--format must be one of {', '.join(FORMATS)}")
        if self.grid < 2:
            raise UsageError("--grid must be >= 2")

    def certify_config(self) -> CertifyConfig:
        p = self.precision
        return CertifyConfig(self.max_depth, (p, 2 * p, 4 * p, 8 * p), self.delta0)

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        try:
            delta0 = Fraction(args.delta0)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"bad --delta0 {args.delta0!r}") from None
        return cls(args.precision, args.max_depth, delta0, args.format, args.out, args.case, args.n, args.grid)


def _combine(codes) -> int:
    codes = list(codes)
    if EXIT_FAIL in codes:
        return EXIT_FAIL
    if EXIT_INCONCLUSIVE in codes:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _status_code(status: str) -> int:
    return {PROVED: EXIT_OK, REFUTED: EXIT_FAIL, INCONCLUSIVE: EXIT_INCONCLUSIVE}[status]


def _md_table(header, rows) -> str:
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    lines += ["| " + " | ".join(str(c) for c in row) + " |" for row in rows]
    return "\n".join(lines) + "\n"


def _csv_table(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _table(cfg: RunConfig, header, rows, records=None) -> str:
    if cfg.output_format == "csv":
        return _csv_table(header, rows)
    if cfg.output_format == "json":
        data = records if records is not None else [dict(zip(header, map(str, r))) for r in rows]
        return json.dumps(data, indent=2) + "\n"
    return _md_table(header, rows)


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- subcommands ----------------------------------------------------------------


def cmd_list(cfg: RunConfig, args) -> int:
    header = ["id", "group", "role", "n", "domain", "expected", "statement"]
    rows = []
    for c in CASES:
        nr = "" if c.n_range is None else f"{c.n_range[0]}..{c.n_range[1]}"
        rows.append([c.id, c.group, c.role, nr, c.domain_text(), c.expected, c.statement])
    _emit(cfg, _table(cfg, header, rows))
    return EXIT_OK


def _case_runs(case_id: str, n: int | None):
    case = get_case(case_id)
    if case.n_range is None or n is not None:
        case.check_n(n)
        return [(case, n)]
    return [(case, k) for k in DEFAULT_N[case.group]]


def cmd_certify(cfg: RunConfig, args) -> int:
    if not cfg.case:
        raise UsageError("certify needs --case")
    certs = [certify_sign(case.id, n, cfg.certify_config()) for case, n in _case_runs(cfg.case, cfg.n)]
    if cfg.output_format == "json":
        data = [c.to_dict() for c in certs]
        text = json.dumps(data[0] if len(data) == 1 else data, indent=2) + "\n"
    else:
        header = ["case", "n", "status", "leaves", "nodes", "witness"]
        rows = [[c.case, c.params.get("n", ""), c.status, len(c.leaves), c.nodes,
                 "" if c.witness is None else str(c.witness)] for c in certs]
        text = _table(cfg, header, rows)
    _emit(cfg, text)
    return _combine(_status_code(c.status) for c in certs)


def _constant_rows(pairs):
    rows = []
    for p in pairs:
        zero_dec = certified_decimal(Interval.from_fraction(p.at_zero, 128))
        rows.append([p.label, f"{p.names[0]} = {p.at_zero}", zero_dec,
                     f"{p.names[1]} = {p.at_pi_half.format()}", certified_decimal(p.at_pi_half_enclosure),
                     f"inf at {p.inf_at}, sup at {p.sup_at}",
                     "ok" if p.printed_match and p.series_match and p.cross_check_ok else "MISMATCH"])
    return rows


def cmd_constants(cfg: RunConfig, args) -> int:
    if cfg.case:
        if cfg.case not in BEST_CONSTANT_FAMILIES:
            raise UsageError(f"constants --case must be one of {', '.join(BEST_CONSTANT_FAMILIES)}")
        pairs = [best_constants(cfg.case, cfg.n, max(cfg.precision, 128))]
    else:
        pairs = all_best_constants(precision=max(cfg.precision, 128))
    header = ["family", "at 0", "decimal", "at pi/2", "decimal", "extremes", "checks"]
    _emit(cfg, _table(cfg, header, _constant_rows(pairs)))
    ok = all(p.printed_match and p.series_match and p.cross_check_ok for p in pairs)
    return EXIT_OK if ok else EXIT_FAIL


def series_coefficients(expr: str, order: int) -> list[Fraction]:
    if expr == "tan":
        return [tan_coeff(k) for k in range(1, order // 2 + 1)]
    if expr not in RATIO_IDS:
        raise UsageError(f"--expr must be one of tan, {', '.join(RATIO_IDS)}")
    return ratio_taylor(expr, order)


def cmd_series(cfg: RunConfig, args) -> int:
    if args.order < 2:
        raise UsageError("--order must be >= 2")
    coeffs = series_coefficients(args.expr, args.order)
    if cfg.output_format == "json":
        text = json.dumps({"expr": args.expr, "order": args.order, "coefficients": [str(c) for c in coeffs]},
                          indent=2) + "\n"
    else:
        text = "\n".join(str(c) for c in coeffs) + "\n"
    _emit(cfg, text)
    return EXIT_OK


def cmd_bernoulli(cfg: RunConfig, args) -> int:
    if args.upto < 1:
        raise UsageError("--upto must be >= 1")
    rows, ok = [], True
    for k in range(1, args.upto + 1):
        prec = bernoulli_bound_precision(k, cfg.precision)
        ok = ok and prec is not None
        rows.append([k, bernoulli_abs_even(k), "undecided" if prec is None else f"holds ({prec} bits)"])
    _emit(cfg, _table(cfg, ["k", "abs(B_2k)", "bracket"], rows))
    return EXIT_OK if ok else EXIT_INCONCLUSIVE


def _appendix_results(which: str, n_max: int | None) -> list[tuple[str, bool, str]]:
    checks = exp_poly_checks()
    out = []
    if which == "A":
        m = n_max or 20
        out.append((f"A: integer reductions, N = 1..{m}, k = 2N+1..2N+20", appendix_range_check("A", m), ""))
        base = ratio2_reduction(3, 1)
        out.append(("A: displayed base value 224*256^N - 590*16^N - 4*64^N (informational)",
                    True, "equals the reduction" if base["printed_base_identity"]
                    else "differs; the reduction gives 32*256^N - 110*16^N - 4*64^N"))
    elif which == "B":
        m = n_max or 100
        out += [(c.name, c.ok, c.detail) for c in checks if c.name.startswith("B:")]
        out.append((f"B: q_n - 20 p_n > 0, n = 9..{m}", appendix_range_check("B", m), ""))
    elif which == "C":
        m = n_max or 100
        out += [(c.name, c.ok, c.detail) for c in checks if c.name.startswith("C:")]
        out.append((f"C: (9/4)^n > A_n, n = 6..{m}", appendix_range_check("C1", m), ""))
        out.append((f"C: 70 n^4 9^n > displayed polynomial, n = 6..{m}", appendix_range_check("C2", m), ""))
        out.append((f"C: Q_n - 12 P_n > 0, n = 6..{m}", huygens_kernel_positive(m), ""))
    else:
        raise UsageError("--check must be A, B or C")
    return out


def _verdict(name: str, ok: bool) -> str:
    if name.endswith("(informational)"):
        return "note"
    return "ok" if ok else "MISMATCH"


def cmd_appendix(cfg: RunConfig, args) -> int:
    if args.n_max is not None and args.n_max < 1:
        raise UsageError("--n-max must be >= 1")
    try:
        results = _appendix_results(args.check, args.n_max)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rows = [[name, _verdict(name, ok), detail] for name, ok, detail in results]
    _emit(cfg, _table(cfg, ["check", "result", "detail"], rows))
    return EXIT_OK if all(ok for _, ok, _ in results) else EXIT_FAIL


def cmd_sweep(cfg: RunConfig, args) -> int:
    if not cfg.case:
        raise UsageError("sweep needs --case")
    try:
        res = sweep(cfg.case, cfg.n, cfg.grid, max(cfg.precision, 64))
    except KeyError as exc:
        raise UsageError(str(exc)) from None
    rows = [r.csv_fields() for r in res.rows]
    _emit(cfg, _csv_table(["x", "gap_lower", "gap_upper", "dominance"], rows))
    summary = res.dominance_summary()
    if not res.all_positive() or any(v["no"] for v in summary.values()):
        return EXIT_FAIL
    if any(v["undecided"] for v in summary.values()):
        return EXIT_INCONCLUSIVE
    return EXIT_OK


# -- report -----------------------------------------------------------------------


def build_report(cfg: RunConfig) -> tuple[str, int]:
    """Markdown summary of every check; no timings, so the text is reproducible."""
    codes: list[int] = []
    parts = ["# wilkercert report", "",
             f"precision {cfg.precision} bits, max depth {cfg.max_depth}, delta0 {cfg.delta0}, grid {cfg.grid}", ""]

    parts += ["## Series", ""]
    rows = [[e, ", ".join(str(c) for c in ratio_taylor(e, 14))] for e in RATIO_IDS]
    parts.append(_md_table(["ratio", "coefficients of x^0..x^12"], rows))

    parts += ["## Bernoulli bracket", ""]
    bad = [k for k in range(1, 61) if bernoulli_bound_precision(k, cfg.precision) is None]
    codes.append(EXIT_OK if not bad else EXIT_INCONCLUSIVE)
    parts += [f"k = 1..60: {'all certified' if not bad else f'undecided at {bad}'}", ""]

    parts += ["## Best constants", ""]
    pairs = all_best_constants(precision=max(cfg.precision, 128))
    codes.append(EXIT_OK if all(r[-1] == "ok" for r in _constant_rows(pairs)) else EXIT_FAIL)
    parts.append(_md_table(["family", "at 0", "decimal", "at pi/2", "decimal", "extremes", "checks"],
                           _constant_rows(pairs)))

    parts += ["## Proof sequences", ""]
    rows = []
    for seq, idx in SEQUENCE_TARGETS:
        variants = Y_VARIANTS if seq == "y_N" else ("derived",)
        for v in variants:
            c = compare_with_threshold(seq, idx, variant=v)
            dec = None if v == "printed-value" else is_decreasing(seq, idx, 40, v)
            codes.append(EXIT_OK if c.certified and dec is not False else EXIT_FAIL)
            rows.append([f"{seq}[{idx}]", v, certified_decimal(c.value, 10), certified_decimal(c.threshold, 10),
                         "certified" if c.certified else "not certified", {None: "n/a", True: "yes", False: "no"}[dec]])
    parts.append(_md_table(["term", "variant", "value", "threshold", "value < threshold", "decreasing to 40"], rows))
    rows = []
    for (seq, idx), printed in sorted(PRINTED_CLOSED_FORMS.items()):
        variant = "printed-value" if seq == "y_N" else "derived"
        derived = sequence_exact(seq, idx, "derived")
        rows.append([f"{seq}[{idx}]", printed.format(), "yes" if derived == printed else "no",
                     "yes" if sequence_exact(seq, idx, variant) == printed else "no"])
    parts.append(_md_table(["term", "displayed closed form", "equals derived term", "equals compared term"], rows))

    parts += ["## Exact identities", ""]
    rows = [[c.name, "ok" if c.ok else "MISMATCH", c.detail] for c in exp_poly_checks()]
    rows += [[c.name, "ok" if c.ok else "MISMATCH", c.detail] for c in kernel_identity_checks()]
    for which in "ABC":
        rows += [[name, _verdict(name, ok), detail] for name, ok, detail in _appendix_results(which, None)]
    # the printed u-ratio p_n is a known transcription slip; its corrected form is checked alongside
    codes += [EXIT_OK if r[1] in ("ok", "note") or r[0] == "u-ratio (printed p_n)" else EXIT_FAIL for r in rows]
    parts.append(_md_table(["check", "result", "detail"], [[r[0], r[1], r[2].replace("|", "\\|")] for r in rows]))

    parts += ["## Certificates", ""]
    rows = []
    ccfg = cfg.certify_config()
    for case in CASES:
        ns = [None] if case.n_range is None else list(DEFAULT_N[case.group])
        for n in ns:
            cert = certify_sign(case.id, n, ccfg)
            match = cert.status == case.expected
            codes.append(EXIT_OK if match else _status_code(cert.status) or EXIT_FAIL)
            rows.append([case.id, "" if n is None else n, case.role, cert.status, case.expected,
                         len(cert.leaves), "" if cert.witness is None else str(cert.witness)])
    parts.append(_md_table(["case", "n", "role", "status", "expected", "leaves", "witness"], rows))

    parts += ["## Sweeps", ""]
    rows = []
    for group in ("wilker-sharp", "wilker2-sharp", "huygens-sharp", "huygens2-sharp", "chain"):
        res = sweep(group, None, cfg.grid, max(cfg.precision, 64))
        codes.append(EXIT_OK if res.all_positive() else EXIT_FAIL)
        summary = res.dominance_summary()
        rows.append([group, "ok" if res.all_positive() else "NEGATIVE", "", "", ""])
        for pair, counts in summary.items():
            first = res.first_failure(pair)
            rows.append([group, "", pair, f"{counts['yes']}/{len(res.rows)}",
                         "" if first is None else certified_decimal(first, 8)])
    parts.append(_md_table(["group", "gaps positive", "comparison", "holds at nodes", "first failing node"], rows))
    return "\n".join(parts), _combine(codes)


def cmd_report(cfg: RunConfig, args) -> int:
    text, code = build_report(cfg)
    _emit(cfg, text)
    return code


# -- entry point ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--precision", type=int, default=64, help="starting precision in bits (default 64)")
    common.add_argument("--max-depth", type=int, default=40, help="bisection depth limit")
    common.add_argument("--delta0", default="1/4", help="width of the endpoint zones, a rational in (0, 1/2]")
    common.add_argument("--format", choices=FORMATS, default="markdown")
    common.add_argument("--out", help="write output to this file")
    common.add_argument("--case", help="catalog case id or group")
    common.add_argument("--n", type=int, help="family parameter")
    common.add_argument("--grid", type=int, default=100, help="sweep grid points")

    parser = _Parser(prog="wilkercert", description="Certify Wilker- and Huygens-type trigonometric inequalities.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("list", parents=[common], help="print the inequality catalog")
    sub.add_parser("certify", parents=[common], help="certify one case (all default n for families)")
    sub.add_parser("constants", parents=[common], help="best-possible constants at 0 and pi/2")
    p = sub.add_parser("series", parents=[common], help="exact Taylor coefficients")
    p.add_argument("--expr", required=True, help=f"tan or one of {', '.join(RATIO_IDS)}")
    p.add_argument("--order", type=int, required=True, help="highest even power plus two")
    p = sub.add_parser("bernoulli", parents=[common], help="|B_2k| and the two-sided bracket")
    p.add_argument("--upto", type=int, required=True)
    p = sub.add_parser("appendix", parents=[common], help="exact appendix verifications")
    p.add_argument("--check", required=True, choices=("A", "B", "C"))
    p.add_argument("--n-max", type=int)
    sub.add_parser("sweep", parents=[common], help="CSV grid sweep of a case or group")
    sub.add_parser("report", parents=[common], help="run everything and write a Markdown summary")
    return parser


COMMANDS = {
    "list": cmd_list,
    "certify": cmd_certify,
    "constants": cmd_constants,
    "series": cmd_series,
    "bernoulli": cmd_bernoulli,
    "appendix": cmd_appendix,
    "sweep": cmd_sweep,
    "report": cmd_report,
}


def run(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        cfg = RunConfig.from_args(args)
        if args.command == "report" and args.format != "markdown":
            raise UsageError("report is always Markdown")
        return COMMANDS[args.command](cfg, args)
    except UsageError as exc:
        print(f"wilkercert: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (KeyError, ValueError) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        print(f"wilkercert: error: {msg}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
