"""Command-line surface: bound queries, ETF / Levenstein feasibility
reports, range scans, point-set verification and witness construction.

Subcommands
-----------
bounds     --d D --s S --t T          all applicable size bounds + best known
etf        --d D --n N                ETF necessary-condition report
leven      --d D [--n N] [--al-filter]  packing report or admissible-size table
scan       --mode etf|leven --d-min A --d-max B   per-d survivor tables
verify     --input FILE [--tol T] [--claim etf|leven|design:T]
construct  --name simplex|cross|icosahedron|e8|e8-derived [--d D] --output FILE

Exit codes: 0 success/feasible, 1 infeasible or failed claim, 2 usage or
input errors.

Reports are emitted on stdout as text (default), JSON or CSV.  JSON
reports follow a stable envelope, versioned via ``schema_version``:

    {"schema_version": 1, "query": {...}, "verdict": "...",
     "conditions": [{"id": ..., "status": ..., "witness": {...}}, ...]}

Exact rational values serialize as {"num": "...", "den": "...",
"approx": float}; the num/den fields are authoritative.

Point-set files: JSON {"dim": d, "tolerance": t, "points": [[...], ...]}
with entries either numbers or strings ("p/q" or decimal, parsed
exactly); all-string points with exactly unit norms engage exact mode.
CSV alternative: one point per row, plain floats.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Any, Dict, List, Optional

from . import bounds as bounds_mod
from . import constructions
from . import etf as etf_mod
from . import leven as leven_mod
from . import pointset as ps_mod
from .status import FAIL, NOT_APPLICABLE, PASS, Condition

SCHEMA_VERSION = 1

REPORT_SCHEMA = {
    "type": "object",
    "required": ["schema_version", "query", "verdict", "conditions"],
    "properties": {
        "schema_version": {"const": 1},
        "query": {"type": "object"},
        "verdict": {"type": "string"},
        "conditions": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "status"],
                "properties": {
                    "id": {"type": "string"},
                    "status": {"enum": [PASS, FAIL, NOT_APPLICABLE]},
                    "witness": {"type": "object"},
                },
            },
        },
    },
}


def _rat_json(x: Fraction) -> Dict[str, Any]:
    return {"num": str(x.numerator), "den": str(x.denominator), "approx": float(x)}


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return _rat_json(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (str, int, float, bool)) or obj is None:
        return obj
    return str(obj)


def _condition_dicts(conditions) -> List[Dict[str, Any]]:
    return [
        {"id": c.id, "status": c.status, "witness": _jsonable(c.witness)}
        for c in conditions
    ]


def _envelope(query: Dict[str, Any], verdict: str, conditions, **extra) -> Dict[str, Any]:
    out = {
        "schema_version": SCHEMA_VERSION,
        "query": _jsonable(query),
        "verdict": verdict,
        "conditions": _condition_dicts(conditions),
    }
    for key, value in extra.items():
        out[key] = _jsonable(value)
    return out


# -- output formatting ---------------------------------------------------


def _emit_text(report: Dict[str, Any], out) -> None:
    q = ", ".join(f"{k}={v}" for k, v in report["query"].items())
    print(f"query: {q}", file=out)
    for cond in report["conditions"]:
        line = f"  [{cond['status']:>14}] {cond['id']}"
        witness = cond.get("witness") or {}
        if witness:
            parts = ", ".join(f"{k}={_compact(v)}" for k, v in witness.items())
            line += f"  ({parts})"
        print(line, file=out)
    for key in ("bounds", "table", "profile"):
        if key in report:
            print(f"{key}:", file=out)
            _print_block(report[key], out, indent="  ")
    for note in report.get("notes", []):
        print(f"  note: {note}", file=out)
    print(f"verdict: {report['verdict']}", file=out)


def _compact(v: Any) -> str:
    if isinstance(v, dict) and set(v) == {"num", "den", "approx"}:
        return v["num"] if v["den"] == "1" else f"{v['num']}/{v['den']}"
    return str(v)


def _print_block(block: Any, out, indent: str) -> None:
    if isinstance(block, list):
        for item in block:
            _print_block(item, out, indent)
    elif isinstance(block, dict):
        parts = ", ".join(f"{k}={_compact(v)}" for k, v in block.items())
        print(f"{indent}{parts}", file=out)
    else:
        print(f"{indent}{block}", file=out)


def _csv_rows(report: Dict[str, Any]) -> List[List[Any]]:
    if "bounds" in report:
        rows = [["formula_id", "applicable", "value", "approx", "note"]]
        for b in report["bounds"]:
            val = b.get("value")
            rows.append(
                [
                    b["formula_id"],
                    b["applicable"],
                    _compact(val) if val else "",
                    val["approx"] if val else "",
                    b.get("note", ""),
                ]
            )
        return rows
    if "table" in report:
        table = report["table"]
        if table and "survivors" in table[0]:
            rows = [["d", "n", "detail"]]
            for entry in table:
                for sv in entry["survivors"]:
                    rows.append([entry["d"], sv["n"], _compact(sv.get("detail", ""))])
            return rows
        rows = [["n", "alpha", "in_window", "special", "al_pass", "verdict"]]
        for entry in table:
            rows.append(
                [
                    entry["n"],
                    entry["alpha"] if entry["alpha"] is not None else "",
                    entry["in_window"],
                    entry["special"] or "",
                    entry["al_pass"],
                    entry.get("verdict", ""),
                ]
            )
        return rows
    rows = [["condition", "status", "witness"]]
    for cond in report["conditions"]:
        rows.append(
            [
                cond["id"],
                cond["status"],
                "; ".join(f"{k}={_compact(v)}" for k, v in (cond.get("witness") or {}).items()),
            ]
        )
    return rows


def emit(report: Dict[str, Any], fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        json.dump(report, out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        writer = csv.writer(out)
        writer.writerows(_csv_rows(report))
    else:
        _emit_text(report, out)


def _exit_code(verdict: str) -> int:
    return 1 if verdict in ("infeasible", "fail") else 0


# -- point-set files ------------------------------------------------------


def load_pointset(path: str, tol: Optional[float] = None) -> ps_mod.PointSet:
    """Read a point set from a JSON or CSV file (see module docstring)."""
    if path.endswith(".csv"):
        with open(path, newline="") as fh:
            rows = [[float(x) for x in row] for row in csv.reader(fh) if row]
        return ps_mod.PointSet.from_floats(rows, tol if tol is not None else ps_mod.DEFAULT_TOL)
    with open(path) as fh:
        data = json.load(fh)
    points = data["points"]
    tolerance = tol if tol is not None else float(data.get("tolerance", ps_mod.DEFAULT_TOL))
    all_strings = points and all(
        isinstance(x, str) for row in points for x in row
    )
    ps = None
    if all_strings:
        try:
            ps = ps_mod.PointSet.from_rational(
                [[Fraction(x) for x in row] for row in points], tolerance=tolerance
            )
        except ValueError:
            pass  # exact parse failed (non-unit norms or huge denominators)
    if ps is None:
        rows = [
            [float(Fraction(x)) if isinstance(x, str) else float(x) for x in row]
            for row in points
        ]
        ps = ps_mod.PointSet.from_floats(rows, tolerance)
    dim = data.get("dim")
    if dim is not None and int(dim) != ps.dim:
        raise ValueError(f"file claims dim {dim} but points have dimension {ps.dim}")
    return ps


def write_pointset(ps: ps_mod.PointSet, path: str, fmt: str = "json") -> None:
    """Write JSON with "p/q" strings (exact mode) or decimal strings, or
    a bare-float CSV."""
    if fmt == "csv" or path.endswith(".csv"):
        with open(path, "w", newline="") as fh:
            csv.writer(fh).writerows(ps.coords.tolist())
        return
    if ps.exact_coords is not None:
        points = [[str(x) for x in row] for row in ps.exact_coords]
    else:
        points = [[repr(x) for x in row] for row in ps.coords.tolist()]
    with open(path, "w") as fh:
        json.dump({"dim": ps.dim, "tolerance": ps.tolerance, "points": points}, fh)
        fh.write("\n")


# -- subcommands -----------------------------------------------------------


def _bound_dict(rep: bounds_mod.BoundReport) -> Dict[str, Any]:
    out: Dict[str, Any] = {"formula_id": rep.formula_id, "applicable": rep.applicable}
    if rep.value is not None:
        out["value"] = _rat_json(rep.value)
        if rep.value.denominator != 1:
            out["floor"] = rep.floor()
    if rep.note:
        out["note"] = rep.note
    return out


def cmd_bounds(args) -> int:
    reports = [
        bounds_mod.dgs_antipodal(args.d, args.s),
        bounds_mod.nozaki_suda(args.d, args.s, args.t),
        bounds_mod.xxy_bound(args.d, args.s, args.t),
    ]
    best = bounds_mod.best_known(args.d, args.s, args.t)
    query = {"command": "bounds", "d": args.d, "s": args.s, "t": args.t}
    if args.n is not None:
        reports += [
            bounds_mod.welch_report(args.d, args.n),
            bounds_mod.levenstein_report(args.d, args.n),
            bounds_mod.gerzon_report(args.d, args.n),
        ]
        query["n"] = args.n
    reports.append(best)
    conditions = [
        Condition(
            rep.formula_id if rep is not best else "best_known",
            PASS if rep.applicable else NOT_APPLICABLE,
            {"note": rep.note} if rep.note else {},
        )
        for rep in reports
    ]
    report = _envelope(
        query,
        "ok",
        conditions,
        bounds=[_bound_dict(r) for r in reports],
    )
    emit(report, args.format)
    return 0


def cmd_etf(args) -> int:
    rep = etf_mod.etf_report(args.d, args.n)
    report = _envelope(
        {"command": "etf", "d": args.d, "n": args.n},
        rep.verdict,
        rep.conditions,
        notes=list(rep.notes),
    )
    emit(report, args.format)
    return _exit_code(rep.verdict)


def _size_dict(c: leven_mod.SizeCandidate, d: int) -> Dict[str, Any]:
    return {
        "n": c.n,
        "alpha": c.alpha,
        "in_window": c.in_window,
        "special": c.special,
        "al_pass": c.al_pass,
        "verdict": leven_mod.leven_report(d, c.n).verdict,
    }


def cmd_leven(args) -> int:
    if args.n is None:
        candidates = leven_mod.enumerate_sizes(args.d, apply_al_filter=args.al_filter)
        report = _envelope(
            {"command": "leven", "d": args.d, "al_filter": args.al_filter},
            "ok",
            [],
            table=[_size_dict(c, args.d) for c in candidates],
        )
        emit(report, args.format)
        return 0
    rep = leven_mod.leven_report(args.d, args.n)
    report = _envelope(
        {"command": "leven", "d": args.d, "n": args.n},
        rep.verdict,
        rep.conditions,
        alpha_sq=rep.alpha_sq,
        notes=list(rep.notes),
    )
    emit(report, args.format)
    return _exit_code(rep.verdict)


def _scan_workers() -> int:
    env = os.environ.get("PACKCERT_THREADS")
    if env:
        return max(1, int(env))
    return min(8, os.cpu_count() or 1)


def _scan_etf_row(d: int) -> Dict[str, Any]:
    survivors = []
    for n in range(d + 2, d * (d + 1) // 2 + 1):
        rep = etf_mod.etf_report(d, n)
        if rep.verdict == "feasible":
            detail = rep.condition("coro1_window").witness.get("classification", "")
            survivors.append({"n": n, "detail": detail})
    return {"d": d, "survivors": survivors}


def _scan_leven_row(d: int) -> Dict[str, Any]:
    survivors = []
    for cand in leven_mod.enumerate_sizes(d):
        rep = leven_mod.leven_report(d, cand.n)
        if rep.verdict == "feasible":
            detail = cand.special if cand.alpha is None else f"alpha={cand.alpha}"
            survivors.append({"n": cand.n, "detail": detail})
    return {"d": d, "survivors": survivors}


def cmd_scan(args) -> int:
    if args.d_min > args.d_max:
        raise ValueError(f"--d-min {args.d_min} exceeds --d-max {args.d_max}")
    lo_floor = 3 if args.mode == "etf" else 4
    if args.d_min < lo_floor:
        raise ValueError(f"scan --mode {args.mode} requires --d-min >= {lo_floor}")
    row_fn = _scan_etf_row if args.mode == "etf" else _scan_leven_row
    ds = list(range(args.d_min, args.d_max + 1))
    with ThreadPoolExecutor(max_workers=_scan_workers()) as pool:
        rows = list(pool.map(row_fn, ds))  # map preserves d order
    report = _envelope(
        {"command": "scan", "mode": args.mode, "d_min": args.d_min, "d_max": args.d_max},
        "ok",
        [],
        table=rows,
    )
    emit(report, args.format)
    return 0


def _parse_claim(claim: str):
    if claim in ("etf", "leven"):
        return claim, None
    if claim.startswith("design:"):
        t = int(claim.split(":", 1)[1])
        if t < 1:
            raise ValueError(f"design strength claim must be >= 1, got {t}")
        return "design", t
    raise ValueError(f"unknown claim {claim!r}; expected etf, leven or design:T")


def cmd_verify(args) -> int:
    ps = load_pointset(args.input, args.tol)
    profile = ps_mod.classify(ps)
    conditions = []
    verdict = "ok"
    if args.claim:
        kind, t = _parse_claim(args.claim)
        if kind == "etf":
            ok = profile.verdicts["etf"]
            witness = {"coherence": profile.coherence}
        elif kind == "leven":
            ok = profile.verdicts["levenstein_equality"]
            witness = {"coherence": profile.coherence}
        else:
            strength = ps_mod.design_strength(ps, kmax=t)
            ok = strength.strength >= t
            witness = {"claimed": t, "certified_strength": profile.strength}
        conditions.append(Condition(f"claim:{args.claim}", PASS if ok else FAIL, witness))
        verdict = PASS if ok else FAIL
    report = _envelope(
        {"command": "verify", "input": args.input, "claim": args.claim or ""},
        verdict,
        conditions,
        profile={
            "dim": profile.dim,
            "n": profile.n,
            "mode": profile.exact_mode,
            "s": profile.s,
            "angle_set": [[v, m] for v, m in profile.angle_set],
            "coherence": profile.coherence,
            "antipodal": profile.antipodal,
            "strength": profile.strength,
            "strength_capped": profile.strength_capped,
            "moments": [[k, v] for k, v in profile.moments],
            "verdicts": profile.verdicts,
            "notes": list(profile.notes),
        },
    )
    emit(report, args.format)
    return _exit_code(verdict)


_CONSTRUCTORS = {
    "simplex": lambda d, tol: constructions.simplex_etf(d, tol),
    "cross": lambda d, tol: constructions.cross_polytope(d, tol),
    "icosahedron": lambda d, tol: constructions.icosahedron(tol),
    "e8": lambda d, tol: constructions.e8_roots(tol),
    "e8-derived": lambda d, tol: constructions.derived_code(constructions.e8_roots(tol), 0),
}


def cmd_construct(args) -> int:
    if args.name in ("simplex", "cross") and args.d is None:
        raise ValueError(f"construct --name {args.name} requires --d")
    ps = _CONSTRUCTORS[args.name](args.d, args.tol)
    write_pointset(ps, args.output)  # .csv extension selects the CSV format
    report = _envelope(
        {"command": "construct", "name": args.name, "d": ps.dim},
        "ok",
        [],
        written=args.output,
        n=ps.n,
        dim=ps.dim,
        mode=ps.mode,
    )
    emit(report, args.format)
    return 0


# -- parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="packcert",
        description=(
            "Feasibility certification and verification for antipodal "
            "few-distance spherical designs, real equiangular tight frames "
            "and Levenstein-equality packings."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument(
            "--format", choices=("text", "json", "csv"), default="text",
            help="output format (default text)",
        )

    p = sub.add_parser("bounds", help="size bounds for an antipodal s-distance t-strength set")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n", type=int, help="also report coherence/window bounds for n vectors")
    add_format(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("etf", help="necessary conditions for a real (d, n) ETF")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_etf)

    p = sub.add_parser("leven", help="Levenstein-equality packing report or size table")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--al-filter", action="store_true", help="keep only sizes passing the integrality conditions")
    add_format(p)
    p.set_defaults(func=cmd_leven)

    p = sub.add_parser("scan", help="survivor tables over a dimension range")
    p.add_argument("--mode", choices=("etf", "leven"), required=True)
    p.add_argument("--d-min", type=int, required=True)
    p.add_argument("--d-max", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", help="verify a point-set file and optional claim")
    p.add_argument("--input", required=True)
    p.add_argument("--tol", type=float, help="override the verification tolerance")
    p.add_argument("--claim", help="etf | leven | design:T")
    add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="emit a built-in witness configuration")
    p.add_argument("--name", choices=sorted(_CONSTRUCTORS), required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--tol", type=float, default=ps_mod.DEFAULT_TOL)
    p.add_argument("--output", required=True)
    add_format(p)
    p.set_defaults(func=cmd_construct)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, KeyError) as exc:
        print(f"packcert: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
