"""Command-line front end: ``nsring {info,ideal,scan,paper-check}``.

Exit codes: 0 success, 1 paper-check failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from collections import Counter, defaultdict
from typing import Any, Sequence, TextIO

from . import zideal as zi
from .checks import run_cases
from .classify import classify
from .enumeration import ScanRecord, parse_template, scan_family, scan_genus
from .errors import NSRingError
from .filtration import ord_of_ideal
from .semigroup import NumericalSemigroup, construct

_COLORS = {"pass": "32", "ok": "32", "fail": "31", "informational-discrepancy": "33"}


def _use_color(stream: TextIO) -> bool:
    mode = os.environ.get("NSRING_COLOR", "auto")
    if mode == "always":
        return True
    if mode == "never":
        return False
    return hasattr(stream, "isatty") and stream.isatty()


def _paint(text: str, key: str, color: bool) -> str:
    code = _COLORS.get(key, "33" if key.startswith("skipped") else None)
    return f"\x1b[{code}m{text}\x1b[0m" if color and code else text


def dumps(obj: Any) -> str:
    """Stable JSON: insertion-ordered keys, so parse + dump is byte-identical."""
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _cell(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple)):
        return " ".join(map(str, v))
    return str(v)


def _table(rows: list[dict], color: bool = False, status_key: str | None = None) -> str:
    if not rows:
        return ""
    cols = list(rows[0])
    cells = [[_cell(r.get(c)) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip()]
    for r, row in zip(rows, cells):
        parts = []
        for c, v, w in zip(cols, row, widths):
            txt = v.ljust(w)
            if c == status_key:
                txt = _paint(txt, str(r.get(c)), color)
            parts.append(txt)
        lines.append("  ".join(parts).rstrip())
    return "\n".join(lines) + "\n"


def _csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    if rows:
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(list(rows[0]))
        for r in rows:
            w.writerow([_cell(v) for v in r.values()])
    return buf.getvalue()


def _parse_ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise NSRingError(f"expected comma-separated integers, got {text!r}") from None


def _parse_range(text: str) -> range:
    try:
        a, b = text.split("..")
        return range(int(a), int(b) + 1)
    except ValueError:
        raise NSRingError(f"expected a range A..B, got {text!r}") from None


def _emit(text: str, out: str | None, stdout: TextIO) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)


# -- info ----------------------------------------------------------------------


def cmd_info(args, stdout: TextIO) -> int:
    H = construct(_parse_ints(args.gens))
    report = classify(H).to_dict()
    if args.format == "json":
        text = dumps(report)
    elif args.format == "csv":
        text = _csv([report])
    else:
        text = _table([{"field": k, "value": _cell(v)} for k, v in report.items()])
    _emit(text, args.out, stdout)
    return 0


# -- ideal ---------------------------------------------------------------------


def _ideal_from_spec(H: NumericalSemigroup, spec: str) -> zi.ZIdeal:
    named = {
        "conductor": zi.conductor_ideal,
        "canonical": zi.canonical_ideal,
        "m": zi.maximal_ideal,
        "R": zi.whole_ring,
        "normalization": zi.normalization,
    }
    if spec in named:
        return named[spec](H)
    return zi.from_generators(H, _parse_ints(spec))


def cmd_ideal(args, stdout: TextIO) -> int:
    H = construct(_parse_ints(args.gens))
    if args.conductor:
        spec = "conductor"
    elif args.canonical:
        spec = "canonical"
    elif args.ideal:
        spec = args.ideal
    else:
        raise NSRingError("give one of --ideal SPEC, --conductor, --canonical")
    E = _ideal_from_spec(H, spec)
    out: dict[str, Any] = {"gens": list(H.minimal_generators), "ideal": E.canonical_form(), "op": args.op}
    summary = None
    op = args.op
    if op == "dual":
        out["result"] = zi.dual(E).canonical_form()
    elif op == "bidual":
        B = zi.bidual(E)
        out["result"] = B.canonical_form()
        out["reflexive"] = B == E
        summary = "bidual = ideal (reflexive)" if B == E else "bidual != ideal (not reflexive)"
    elif op == "trace":
        T = zi.trace(E)
        out["result"] = T.canonical_form()
        out["is_trace_ideal"] = T == E
    elif op == "colon":
        if not args.by:
            raise NSRingError("--op colon needs --by SPEC")
        out["by"] = _ideal_from_spec(H, args.by).canonical_form()
        out["result"] = zi.colon(E, _ideal_from_spec(H, args.by)).canonical_form()
    elif op == "ord":
        out["result"] = ord_of_ideal(E)
    elif op == "colength":
        out["result"] = zi.colength(E)
    elif op == "reflexive":
        out["result"] = zi.is_reflexive(E)
    elif op == "selfdual":
        z = zi.self_dual_shift(E)
        out["result"] = z is not None
        out["shift"] = z
    out["minimal_generators"] = list(zi.minimal_generators(E))
    if args.format == "json":
        text = dumps(out)
    elif args.format == "csv":
        text = _csv([out])
    else:
        text = "".join(f"{k}: {_cell(v)}\n" for k, v in out.items())
        if summary:
            text += summary + "\n"
    _emit(text, args.out, stdout)
    return 0


# -- scan ----------------------------------------------------------------------


def _summary(records: list[ScanRecord], where: str | None, family: bool) -> dict:
    status = Counter(r.status for r in records)
    by_ord: dict[str, list] = defaultdict(list)
    for r in records:
        if r.report is not None and (where is None or r.matched):
            key = next(iter(r.params.values())) if family else r.params["gens"]
            by_ord[str(r.report.ord_conductor)].append(key)
    s: dict[str, Any] = {
        "total": len(records),
        "status": dict(sorted(status.items())),
        "where": where,
    }
    if where is not None:
        matched = [r for r in records if r.matched]
        s["matched"] = len(matched)
        s["unmatched"] = sum(1 for r in records if r.matched is False)
        if family:
            s["matched_values"] = [next(iter(r.params.values())) for r in matched]
    if family:
        s["by_ord_conductor"] = {k: by_ord[k] for k in sorted(by_ord, key=int)}
    else:
        s["by_ord_conductor"] = {k: len(by_ord[k]) for k in sorted(by_ord, key=int)}
    return s


def cmd_scan(args, stdout: TextIO) -> int:
    if (args.family is None) == (args.genus_max is None):
        raise NSRingError("give exactly one of --family or --genus-max")
    if args.family is not None:
        if not args.range:
            raise NSRingError("--family needs --range A..B")
        parse_template(args.family)
        records = scan_family(args.family, _parse_range(args.range), args.where, jobs=args.jobs)
    else:
        records = scan_genus(args.genus_max, args.where, jobs=args.jobs)
    summary = _summary(records, args.where, args.family is not None)
    shown = records if args.where is None else [r for r in records if r.matched]
    rows = [r.flat() for r in shown]
    if args.format == "json":
        text = "".join(json.dumps(r, ensure_ascii=False) + "\n" for r in rows)
        text += json.dumps({"summary": summary}, ensure_ascii=False) + "\n"
    elif args.format == "csv":
        if not rows:
            rows_hdr = ScanRecord({}, "").flat()
            text = ",".join(rows_hdr) + "\n"
        else:
            text = _csv(rows)
        text += "# summary " + json.dumps(summary, ensure_ascii=False) + "\n"
    else:
        color = args.out is None and _use_color(stdout)
        text = _table(rows, color, "status")
        text += "# summary " + json.dumps(summary, ensure_ascii=False) + "\n"
    _emit(text, args.out, stdout)
    return 0


# -- paper-check ---------------------------------------------------------------


def cmd_paper_check(args, stdout: TextIO) -> int:
    results = run_cases(only=args.only)
    if args.only and not results:
        raise NSRingError(f"no case with id {args.only!r}")
    counts = Counter(r.status for r in results)
    summary = {k: counts.get(k, 0) for k in ("pass", "fail", "informational-discrepancy")}
    if args.format == "json":
        text = dumps({"cases": [r.to_dict() for r in results], "summary": summary})
    else:
        rows = []
        for r in results:
            for f in r.facts:
                rows.append({
                    "case": r.id,
                    "status": r.status,
                    "field": f.field,
                    "expected": f.expected,
                    "actual": f.actual,
                    "provenance": f.provenance,
                    "ok": f.ok,
                })
        if args.format == "csv":
            text = _csv(rows)
        else:
            color = args.out is None and _use_color(stdout)
            lines = []
            for r in results:
                lines.append(f"{_paint(r.status.upper(), r.status, color)}  {r.id}  <{','.join(map(str, r.generators))}>")
                for f in r.facts:
                    if not f.ok:
                        tag = "NOTE" if f.informational else "MISMATCH"
                        lines.append(f"    {tag} {f.field}: expected {f.expected!r}, computed {f.actual!r}")
            text = "\n".join(lines) + "\n"
        text += "# summary " + json.dumps(summary) + "\n"
    _emit(text, args.out, stdout)
    return 1 if summary["fail"] else 0


# -- entry point -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nsring", description="Invariants of numerical semigroup rings k[[H]].")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, default_format="table"):
        sp.add_argument("--format", choices=["table", "json", "csv"], default=default_format)
        sp.add_argument("--out", metavar="PATH")

    sp = sub.add_parser("info", help="classification report for one semigroup")
    sp.add_argument("--gens", required=True)
    common(sp)
    sp.set_defaults(func=cmd_info)

    sp = sub.add_parser("ideal", help="operations on one monomial ideal")
    sp.add_argument("--gens", required=True)
    grp = sp.add_mutually_exclusive_group()
    grp.add_argument("--ideal", metavar="SPEC", help="a,b,c | conductor | canonical | m | R | normalization")
    grp.add_argument("--conductor", action="store_true")
    grp.add_argument("--canonical", action="store_true")
    sp.add_argument("--op", required=True,
                    choices=["dual", "bidual", "trace", "colon", "ord", "colength", "reflexive", "selfdual"])
    sp.add_argument("--by", metavar="SPEC", help="second ideal for --op colon")
    common(sp)
    sp.set_defaults(func=cmd_ideal)

    sp = sub.add_parser("scan", help="classify a family or all semigroups up to a genus")
    sp.add_argument("--family", metavar="TEMPLATE", help='e.g. "4,5,a" or "e-run"')
    sp.add_argument("--range", metavar="A..B")
    sp.add_argument("--genus-max", type=int)
    sp.add_argument("--where", metavar="EXPR")
    sp.add_argument("--jobs", type=int, default=1)
    common(sp)
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("paper-check", help="run the bundled golden checks")
    sp.add_argument("--only", metavar="CASEID")
    common(sp)
    sp.set_defaults(func=cmd_paper_check)
    return p


def main(argv: Sequence[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, stdout)
    except NSRingError as exc:
        print(f"nsring: error: {exc}", file=stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
