"""Command-line front end with JSON/CSV serialization.

Commands: triangle, spectrum, levels, orbit, families, verify. Exit codes:
0 success, 1 a verification check failed, 2 usage error (bad input or
enumeration ceiling exceeded), 3 a conjecture check found a counterexample.
JSON documents are stable-ordered (sorted keys, members sorted by text) so
saved outputs diff cleanly; worker count never changes the payload.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bitseq import BitSeq
from .families import (
    NoClosedFormError,
    all_families,
    family_seq,
    predicted_triangle_weight,
)
from .spectrum import (
    LevelSet,
    full_spectrum,
    level_sets_high,
    level_sets_low,
    symmetry_reduced_spectrum,
)
from .symmetry import orbit
from .triangle import render, s3, triangle_weight
from .verify import verify_all

SCHEMA_VERSION = 1


def _document(command: str, args: dict, payload: dict) -> dict:
    return {"schema": SCHEMA_VERSION, "command": command, "args": args,
            "payload": payload}


def _emit(doc: dict) -> None:
    print(json.dumps(doc, sort_keys=True, indent=2))


def _texts(seqs) -> list[str]:
    return sorted(str(x) for x in seqs)


def _spectrum_payload(spec) -> dict:
    levels = spec.levels
    derived = {
        "m": spec.m,
        "total": spec.total,
        "w1": levels[1] if spec.m >= 1 else None,
        "w2": levels[2] if spec.m >= 2 else None,
        "w3": levels[3] if spec.m >= 3 else None,
        "wm": levels[-1] if spec.m >= 1 else None,
        "wm1": levels[-2] if spec.m >= 1 else None,
    }
    return {"n": spec.n,
            "counts": [[w, c] for w, c in enumerate(spec.counts) if c],
            "derived": derived}


def _level_payload(ls: LevelSet) -> dict:
    return {"index": ls.index, "weight": ls.weight, "count": ls.count,
            "truncated": ls.truncated, "members": _texts(ls.members)}


def cmd_triangle(ns: argparse.Namespace) -> int:
    x = BitSeq.from_string(ns.sequence)
    if x.n == 0:
        raise ValueError("empty sequence generates no triangle")
    art = render(x, zero="0" if ns.zeros else ".")
    tw = triangle_weight(x)
    s3_value = s3(x) if x.n >= 3 else None
    if ns.format == "json":
        rows = [str(x.derivative_k(k)) for k in range(x.n)]
        _emit(_document("triangle", {"sequence": str(x), "zeros": ns.zeros}, {
            "sequence": str(x), "n": x.n, "ones": x.weight,
            "triangle_weight": tw, "s3": s3_value, "rows": rows,
        }))
    else:
        print(art)
        tail = f"length {x.n}, ones {x.weight}, triangle weight {tw}"
        if s3_value is not None:
            tail += f", three-row weight {s3_value}"
        print(tail)
    return 0


def cmd_spectrum(ns: argparse.Namespace) -> int:
    compute = symmetry_reduced_spectrum if ns.reduced else full_spectrum
    spec = compute(ns.n, workers=ns.workers, force=ns.force)
    if ns.format == "csv":
        print("weight,count")
        for w, c in enumerate(spec.counts):
            if c:
                print(f"{w},{c}")
    else:
        _emit(_document("spectrum", {"n": ns.n, "reduced": ns.reduced},
                        _spectrum_payload(spec)))
    return 0


def cmd_levels(ns: argparse.Namespace) -> int:
    if (ns.low is not None and ns.low < 0) or (ns.high is not None and ns.high < 0):
        raise ValueError("level counts must be nonnegative")
    spec = full_spectrum(ns.n, workers=ns.workers, force=ns.force)
    low_k = min(3, spec.m) if ns.low is None else ns.low
    high_k = min(2, spec.m + 1) if ns.high is None else ns.high
    low = level_sets_low(ns.n, low_k, workers=ns.workers, spectrum=spec) \
        if low_k else []
    high = level_sets_high(ns.n, high_k, workers=ns.workers, spectrum=spec) \
        if high_k else []
    payload = {"n": ns.n,
               "low": [_level_payload(ls) for ls in low],
               "high": [_level_payload(ls) for ls in high]}
    if ns.format == "json":
        _emit(_document("levels", {"n": ns.n, "low": low_k, "high": high_k},
                        payload))
    else:
        for ls in list(low) + list(high):
            mark = " (truncated)" if ls.truncated else ""
            print(f"W_{ls.index}: weight {ls.weight}, {ls.count} generators{mark}")
            print("  " + " ".join(_texts(ls.members)))
    return 0


def cmd_orbit(ns: argparse.Namespace) -> int:
    x = BitSeq.from_string(ns.sequence)
    orb = orbit(x)
    if ns.format == "json":
        _emit(_document("orbit", {"sequence": str(x)}, {
            "sequence": str(x), "canonical": str(orb.canonical),
            "size": orb.size, "members": _texts(orb.members),
        }))
    else:
        print(f"orbit size {orb.size}, canonical {orb.canonical}")
        for member in orb.members:
            print(f"  {member}")
    return 0


def cmd_families(ns: argparse.Namespace) -> int:
    rows = []
    for f in all_families(ns.n):
        x = family_seq(f, ns.n)
        actual = triangle_weight(x)
        try:
            predicted = predicted_triangle_weight(f, ns.n)
        except (NoClosedFormError, ValueError):
            predicted = None
        rows.append({"family": str(f), "sequence": str(x),
                     "predicted": predicted, "actual": actual,
                     "match": None if predicted is None else predicted == actual})
    if ns.format == "json":
        _emit(_document("families", {"n": ns.n}, {"n": ns.n, "rows": rows}))
    else:
        width = max(len(r["sequence"]) for r in rows)
        print(f"{'family':<8}{'sequence':<{width + 2}}{'predicted':>10}{'actual':>8}  match")
        for r in rows:
            pred = "-" if r["predicted"] is None else str(r["predicted"])
            mark = "-" if r["match"] is None else ("yes" if r["match"] else "NO")
            print(f"{r['family']:<8}{r['sequence']:<{width + 2}}{pred:>10}"
                  f"{r['actual']:>8}  {mark}")
    return 0


def _witness_payload(record) -> dict | None:
    if record.witness is None:
        return None
    return {"sequence": str(record.witness.sequence),
            "observed": record.witness.observed,
            "predicted": record.witness.predicted}


def cmd_verify(ns: argparse.Namespace) -> int:
    report = verify_all(ns.start, ns.end, workers=ns.workers)
    statuses = sorted({r.status for r in report.records})
    counts = {status: sum(r.status == status for r in report.records)
              for status in statuses}
    if ns.format == "json":
        _emit(_document("verify", {"from": ns.start, "to": ns.end}, {
            "from": ns.start, "to": ns.end,
            "exit_code": report.exit_code,
            "summary": counts,
            "records": [{
                "check": r.check, "n": r.n, "status": r.status,
                "detail": r.detail, "witness": _witness_payload(r),
                "elapsed": round(r.elapsed, 6),
            } for r in report.records],
        }))
    else:
        for r in report.records:
            line = f"[{r.status:>20}] n={r.n:<3} {r.check}: {r.detail}"
            if r.witness is not None:
                line += (f" | witness {r.witness.sequence} observed "
                         f"{r.witness.observed} predicted {r.witness.predicted}")
            print(line)
        print("summary: " + ", ".join(f"{k}={v}" for k, v in counts.items()))
    return report.exit_code


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="steinhaus",
        description="Binary Steinhaus triangles: weights, orbits, families, "
                    "exhaustive verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("triangle", help="render a triangle and its weights")
    p.add_argument("sequence", help="generator as '0'/'1' text")
    p.add_argument("--zeros", action="store_true", help="render zeros as '0' not '.'")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("spectrum", help="exact weight histogram over all 2^n generators")
    p.add_argument("n", type=int)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--reduced", action="store_true",
                   help="enumerate orbit representatives only (same output)")
    p.add_argument("--force", action="store_true",
                   help="bypass the enumeration ceiling")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("levels", help="level sets from both ends of the ladder")
    p.add_argument("n", type=int)
    p.add_argument("--low", type=int, default=None, metavar="K",
                   help="levels W_0..W_K from the bottom (0 to skip; default 3, clamped)")
    p.add_argument("--high", type=int, default=None, metavar="K",
                   help="K levels down from W_m (0 to skip; default 2, clamped)")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_levels)

    p = sub.add_parser("orbit", help="symmetry orbit and canonical representative")
    p.add_argument("sequence")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("families", help="named families at one length, with predictions")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_families)

    p = sub.add_parser("verify", help="run the verification ladder over a size range")
    p.add_argument("--from", dest="start", type=int, default=4)
    p.add_argument("--to", dest="end", type=int, default=12)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    ns = parser.parse_args(argv)
    try:
        return ns.func(ns)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
