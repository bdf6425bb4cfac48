"""Command-line front end: Kostka tables, identity suites, tableau listings.

Exit codes: 0 success, 1 identity or assertion failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .hall import OracleScaleError
from .multisym import CONJ_SLOTS, ConventionError, DegenerateGramError, kostka_multi
from .partitions import (
    ORDERS,
    format_multipartition,
    format_partition,
    parse_multipartition,
    parse_partition,
)
from .tableaux import charge, enumerate_sst, theta, word
from .verify import SUITES, passed, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
FORMATS = ("json", "csv", "latex", "text")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None)
    common.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")
    common.add_argument("--jobs", type=_positive, default=1, help="worker processes")

    level = _Parser(add_help=False)
    level.add_argument("--n", type=_nonneg, required=True)
    level.add_argument("--r", type=_positive, default=1)

    parser = _Parser(prog="kostkacr", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    k = sub.add_parser("kostka", parents=[common, level], help="emit a full K^+- table")
    k.add_argument("--sign", choices=("+", "-"), default="-")
    k.add_argument("--order", choices=ORDERS, default="lex-c")
    k.add_argument("--conj-slot", choices=CONJ_SLOTS, default=CONJ_SLOTS[0],
                   help="argument of the form in which zeta is conjugated")

    v = sub.add_parser("verify", parents=[common, level], help="run an identity suite")
    v.add_argument("suite", choices=sorted(SUITES))

    t = sub.add_parser("tableaux", parents=[common], help="list semistandard tableaux")
    t.add_argument("--shape", required=True, help='r-partition as JSON, e.g. [[1],[1]]')
    t.add_argument("--weight", required=True, help="partition as JSON, e.g. [1,1]")
    return parser


# ------------------------------------------------------------ kostka


def _latex_label(lam) -> str:
    parts = []
    for p in lam:
        parts.append(",".join(map(str, p)) if p else r"\varnothing")
    return "(" + ";".join(parts) + ")"


def _latex_value(v) -> str:
    s = str(v)
    return s.replace("*", "")


def render_table(table, fmt: str) -> str:
    labels = table.labels
    if fmt == "json":
        data = table.to_json()
        for entry, (i, j) in zip(data["entries"], _nonzero_positions(table)):
            entry["text"] = str(table.matrix[i][j])
        return json.dumps(data, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["lambda", "mu", "value"])
        for i, j in _nonzero_positions(table):
            writer.writerow([json.dumps([list(p) for p in labels[i]]),
                             json.dumps([list(p) for p in labels[j]]), str(table.matrix[i][j])])
        return buf.getvalue()
    if fmt == "latex":
        lines = [r"\begin{tabular}{l|" + "c" * len(labels) + "}",
                 " & ".join([f"$K^{{{table.sign}}}$"] + [f"${_latex_label(m)}$" for m in labels]) + r" \\",
                 r"\hline"]
        for i, lam in enumerate(labels):
            cells = [f"${_latex_label(lam)}$"]
            cells += [f"${_latex_value(v)}$" if v else "$0$" for v in table.matrix[i]]
            lines.append(" & ".join(cells) + r" \\")
        lines.append(r"\end{tabular}")
        return "\n".join(lines) + "\n"
    # text
    names = [format_multipartition(lam) for lam in labels]
    cells = [[str(v) for v in row] for row in table.matrix]
    head = f"K{table.sign}  n={table.n} r={table.r} order={table.order}"
    width0 = max(len(s) for s in names)
    widths = [max(len(names[j]), *(len(cells[i][j]) for i in range(len(labels)))) for j in range(len(labels))]
    out = [head, " " * width0 + " | " + " | ".join(nm.ljust(w) for nm, w in zip(names, widths))]
    out.append("-" * len(out[-1]))
    for i, nm in enumerate(names):
        out.append(nm.ljust(width0) + " | " + " | ".join(c.ljust(w) for c, w in zip(cells[i], widths)))
    return "\n".join(line.rstrip() for line in out) + "\n"


def _nonzero_positions(table):
    return [(i, j) for i in range(len(table.labels)) for j in range(len(table.labels))
            if table.matrix[i][j]]


def cmd_kostka(args) -> tuple[int, str]:
    table = kostka_multi(args.n, args.r, args.sign, args.order, args.conj_slot)
    return EXIT_OK, render_table(table, args.format or "text")


# ------------------------------------------------------------ verify


def _suite_job(job):
    name, m, r = job
    return run_suite(name, m, r, sizes=[m])[0]


def render_reports(reports, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(reports, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["identity", "n", "r", "status", "checked", "witness"])
        for rep in reports:
            writer.writerow([rep["identity"], rep["n"], rep["r"], rep["status"], rep["checked"],
                             json.dumps(rep["witness"], sort_keys=True) if rep["witness"] else ""])
        return buf.getvalue()
    if fmt == "latex":
        raise UsageError("verify supports json, csv and text output")
    lines = []
    for rep in reports:
        line = f"{rep['identity']} n={rep['n']} r={rep['r']} {rep['status']} ({rep['checked']} checked)"
        if rep["witness"]:
            line += " " + json.dumps(rep["witness"], sort_keys=True)
        lines.append(line)
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> tuple[int, str]:
    fmt = args.format or "text"
    if fmt == "latex":
        raise UsageError("verify supports json, csv and text output")
    jobs = [(args.suite, m, args.r) for m in range(args.n + 1)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_suite_job, jobs))
    else:
        reports = [_suite_job(job) for job in jobs]
    return (EXIT_OK if passed(reports) else EXIT_FAIL), render_reports(reports, fmt)


# ------------------------------------------------------------ tableaux


def cmd_tableaux(args) -> tuple[int, str]:
    try:
        shape = parse_multipartition(args.shape)
        weight = parse_partition(args.weight)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"malformed shape or weight: {exc}") from exc
    fmt = args.format or "text"
    rows = []
    for t in enumerate_sst(shape, weight):
        nu, s, lattice = theta(t)
        w = word(t)
        rows.append({"tableau": t.to_json(), "word": list(w), "lattice": lattice,
                     "rectified_shape": list(nu), "charge": charge(word(s))})
    if fmt == "json":
        return EXIT_OK, json.dumps(rows, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["index", "rows", "word", "lattice", "rectified_shape", "charge"])
        for i, row in enumerate(rows, 1):
            writer.writerow([i, json.dumps([c["rows"] for c in row["tableau"]]), json.dumps(row["word"]),
                             str(row["lattice"]).lower(), json.dumps(row["rectified_shape"]), row["charge"]])
        return EXIT_OK, buf.getvalue()
    if fmt == "latex":
        raise UsageError("tableaux supports json, csv and text output")
    out = [f"shape {format_multipartition(shape)} weight {format_partition(weight)}: {len(rows)} tableaux"]
    for i, (t, row) in enumerate(zip(enumerate_sst(shape, weight), rows), 1):
        out.append(f"#{i} word={''.join(map(str, row['word'])) or '-'} lattice={str(row['lattice']).lower()} "
                   f"shape={format_partition(tuple(row['rectified_shape']))} charge={row['charge']}")
        for k, comp in enumerate(t.components, 1):
            grid = comp.render() if comp.rows else "-"
            out.extend(f"  [{k}] {line}" if j == 0 else f"      {line}"
                       for j, line in enumerate(grid.splitlines()))
    return EXIT_OK, "\n".join(out) + "\n"


COMMANDS = {"kostka": cmd_kostka, "verify": cmd_verify, "tableaux": cmd_tableaux}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        code, text = COMMANDS[args.command](args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except OracleScaleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ConventionError, DegenerateGramError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
