"""Command-line frontend: mld evaluation, spectrum scans, region suites,
lemma verifiers, and hyperquotient classification.

Output conventions: rationals travel as exact "p/q" strings, never decimals.
Structured results are JSON documents {"manifest": ..., "payload": ...};
payloads are byte-deterministic for identical parameters (timestamps and
wall-time live in the manifest only).  Exit codes: 0 success, 1 an
expected-empty suite produced a witness or counterexample, 2 usage error,
3 resource-guard abort.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from datetime import datetime, timezone
from fractions import Fraction

from . import hyperquot, regions, spectrum, verifiers
from .quotient import CyclicQuotient, mld, mld_argmin
from .spectrum import ScanConfig, format_rat


def _parse_rat(text: str) -> Fraction:
    try:
        if "/" in text:
            num, den = text.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from exc


def _parse_weights(text: str) -> tuple[int, ...]:
    if not text.strip():
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"malformed weight list: {text!r}") from exc


def _parse_krange(text: str) -> tuple[int, int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return int(lo), int(hi)
    value = int(text)
    return value, value


def _default_jobs() -> int:
    return os.cpu_count() or 1


def _emit(args, command: str, parameters: dict, payload, started: float) -> None:
    doc = {
        "manifest": {
            "command": command,
            "parameters": parameters,
            "started": datetime.fromtimestamp(started, timezone.utc).isoformat(),
            "wall_time_s": round(time.time() - started, 3),
        },
        "payload": payload,
    }
    text = json.dumps(doc, indent=2)
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


# ---------------------------------------------------------------- mld

def _cmd_mld(args) -> int:
    if args.r == 1:
        weights = args.w if args.w else (0,) * args.dim
        X = CyclicQuotient(1, weights)
        print(format_rat(mld(X)))
        return 0
    if not args.w:
        print("error: weights are required for r >= 2", file=sys.stderr)
        return 2
    X = CyclicQuotient(args.r, args.w)
    k, value = mld_argmin(X)
    print(f"{format_rat(value)} (k={k})")
    return 0


# ---------------------------------------------------------------- scan

def _scan_config(args) -> ScanConfig:
    lo, hi = Fraction(0), None
    include_lo, include_hi = True, False
    if args.interval:
        parts = args.interval.split(",")
        if len(parts) != 2:
            raise argparse.ArgumentTypeError("interval must be 'lo,hi'")
        lo, hi = _parse_rat(parts[0]), _parse_rat(parts[1])
    if args.open_left:
        include_lo = False
    if args.closed_right:
        include_hi = True
    return ScanConfig(dim=args.dim, r_max=args.rmax, lo=lo, hi=hi,
                      include_lo=include_lo, include_hi=include_hi,
                      isolated_only=args.isolated, jobs=args.jobs)


def _cmd_scan(args) -> int:
    cfg = _scan_config(args)
    lines = []
    if args.mode == "records":
        records = list(spectrum.scan(cfg))
        if args.format == "csv":
            sys.stdout.write(spectrum.records_to_csv(records))
        else:
            for rec in records:
                print(spectrum.record_to_json(rec))
        print(f"# records={len(records)} rmax={cfg.r_max} dim={cfg.dim}")
        return 0
    if args.mode == "values":
        values = spectrum.distinct_values(cfg)
        for v in values:
            print(format_rat(v))
        print(f"# values={len(values)} rmax={cfg.r_max} dim={cfg.dim}")
        return 0
    # accumulation mode
    if not args.target or not args.windows:
        print("error: --target and --windows are required with --mode accum",
              file=sys.stderr)
        return 2
    windows = [_parse_rat(w) for w in args.windows.split(",")]
    table = spectrum.accumulation_report(cfg, _parse_rat(args.target), windows)
    for w, count in table:
        print(f"{format_rat(w)},{count}")
    print(f"# windows={len(table)} target={args.target} rmax={cfg.r_max}")
    return 0


# ---------------------------------------------------------------- regions

def _region_limit(args):
    return args.box_limit if args.box_limit else None


def _cmd_regions_sgrid(args) -> int:
    started = time.time()
    report = regions.verify_s_grid(args.nmax, _region_limit(args), jobs=args.jobs)
    empties = sum(1 for entry in report if entry["verdict"] == "empty")
    payload = {"nmax": args.nmax, "intervals": report,
               "empty": empties, "total": len(report)}
    _emit(args, "regions s-grid", {"nmax": args.nmax}, payload, started)
    return 0 if empties == len(report) else 1


def _cmd_regions_vl(args) -> int:
    started = time.time()
    results = {l: regions.verify_vl_step(l, _region_limit(args))
               for l in range(args.start, args.stop + 1)}
    payload = {"steps": {str(l): ok for l, ok in results.items()},
               "all_equal": all(results.values())}
    _emit(args, "regions vl-steps",
          {"from": args.start, "to": args.stop}, payload, started)
    return 0 if all(results.values()) else 1


def _cmd_regions_cases(args) -> int:
    started = time.time()
    klo, khi = args.k
    cases = range(args.case[0], args.case[1] + 1) if args.case else range(1, 11)
    payload = {"verdicts": [], "witnesses": 0}
    for k, cid, res in regions.verify_cases(range(klo, khi + 1), cases,
                                            _region_limit(args), jobs=args.jobs):
        payload["verdicts"].append({"k": k, "case": cid, **res.certificate()})
        if not res.is_empty:
            payload["witnesses"] += 1
    _emit(args, "regions cases", {"k": list(args.k)}, payload, started)
    return 0 if payload["witnesses"] == 0 else 1


def _cmd_regions_system(args) -> int:
    started = time.time()
    if args.gamma_file:
        with open(args.gamma_file, encoding="utf-8") as fh:
            pairs = json.load(fh)
    else:
        pairs = json.loads(args.gamma)
    G = regions.GammaSet(tuple((int(n), int(c)) for n, c in pairs))
    initial = regions.unit_cube(ordered_simplex=not args.unordered)
    res = regions.system_empty(initial, G, _region_limit(args))
    _emit(args, "regions system", {"pairs": [list(p) for p in G]},
          res.certificate(), started)
    if args.expect_empty and not res.is_empty:
        return 1
    return 0


# ---------------------------------------------------------------- verify

def _cmd_verify_terminal(args) -> int:
    started = time.time()
    bad = verifiers.terminal_bruteforce(args.rmax, jobs=args.jobs)
    payload = {"rmax": args.rmax, "counterexamples":
               [{"r": t.r, "a": list(t.a), "e": t.e} for t in bad],
               "count": len(bad)}
    _emit(args, "verify terminal", {"rmax": args.rmax}, payload, started)
    return 0 if not bad else 1


def _cmd_verify_fourfold(args) -> int:
    started = time.time()
    bad = verifiers.fourfold_gap_scan(args.rmax, jobs=args.jobs)
    payload = {"rmax": args.rmax,
               "counterexamples": [[format_rat(v) for v in tup] for tup in bad],
               "count": len(bad)}
    _emit(args, "verify fourfold", {"rmax": args.rmax}, payload, started)
    return 0 if not bad else 1


def _cmd_verify_transfer(args) -> int:
    started = time.time()
    try:
        r_text, a_text, e_text = args.tuple.split(":")
    except ValueError:
        print("error: --tuple must look like r:a1,a2,a3,a4:e", file=sys.stderr)
        return 2
    t = verifiers.TermTuple(int(r_text), _parse_weights(a_text), int(e_text))
    rep = verifiers.transfer_classify(t, _parse_rat(args.eps))
    payload = {
        "r": t.r, "a": list(t.a), "e": t.e, "eps": args.eps,
        "hypothesis_ok": rep.hypothesis_ok, "failure": rep.failure,
        "failure_k": rep.failure_k, "case": rep.case_tag,
        "gamma": list(rep.gamma), "conclusions": rep.conclusions,
        "p": rep.p, "q": rep.q,
    }
    _emit(args, "verify transfer", {"tuple": args.tuple, "eps": args.eps},
          payload, started)
    return 0


def _cmd_verify_fivefold(args) -> int:
    started = time.time()
    cands = verifiers.fivefold_scan(args.rmax, _parse_rat(args.eps), args.cond,
                                    jobs=args.jobs)
    payload = {"rmax": args.rmax, "eps": args.eps, "condition": args.cond,
               "candidates": [{"r": c.X.r, "weights": list(c.X.weights),
                               "mld": format_rat(c.mld)} for c in cands],
               "count": len(cands)}
    _emit(args, "verify fivefold", {"rmax": args.rmax, "eps": args.eps,
                                    "cond": args.cond}, payload, started)
    return 0


# ---------------------------------------------------------------- hyperquot

def _cmd_hq_psi(args) -> int:
    started = time.time()
    with open(args.datum, encoding="utf-8") as fh:
        raw = json.load(fh)
    datum = hyperquot.HyperquotientDatum(
        int(raw["r"]), tuple(int(x) for x in raw["a"]), int(raw["e"]),
        hyperquot.MonomialSupport(frozenset(tuple(v) for v in raw["support"])))
    part = hyperquot.psi_classify(datum, _parse_rat(args.eps))

    def dump(ws):
        return [{"coords": [format_rat(c) for c in w.coords],
                 "class": w.class_index, "primitive": w.primitive} for w in ws]

    payload = {"r": datum.r, "a": list(datum.a), "e": datum.e, "eps": args.eps,
               "psi1": dump(part.psi1), "psi2": dump(part.psi2),
               "rest_count": len(part.rest)}
    _emit(args, "hyperquot psi", {"datum": args.datum, "eps": args.eps},
          payload, started)
    return 0


def _cmd_hq_identity5(args) -> int:
    failures = hyperquot.identity5_check(args.r, args.a, args.e)
    if failures:
        print("failures at j = " + ",".join(str(j) for j in failures))
    else:
        print("ok")
    return 0


def _cmd_hq_type(args) -> int:
    tag, param = hyperquot.classify_type(args.r, args.a, args.e)
    if tag == "none":
        print("none")
    elif param is None:
        print(tag)
    else:
        print(f"{tag} a={param}")
    return 0


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mldlab",
        description="Exact minimal-log-discrepancy computations for cyclic "
                    "quotient singularities, with region and lemma verifiers.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mld", help="mld of a single cyclic quotient")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--w", type=_parse_weights, default=())
    p.add_argument("--dim", type=int, default=3,
                   help="dimension when r=1 and no weights are given")
    p.set_defaults(func=_cmd_mld)

    p = sub.add_parser("scan", help="spectrum scan over canonical weight classes")
    p.add_argument("--dim", type=int, default=3)
    p.add_argument("--rmax", type=int, required=True)
    p.add_argument("--interval", default=None, help="lo,hi as exact rationals")
    p.add_argument("--open-left", action="store_true")
    p.add_argument("--closed-right", action="store_true")
    p.add_argument("--isolated", action="store_true")
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--mode", choices=("records", "values", "accum"),
                   default="records")
    p.add_argument("--target", default=None)
    p.add_argument("--windows", default=None)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("regions", help="floor-constraint region suites")
    rsub = p.add_subparsers(dest="subcommand", required=True)

    q = rsub.add_parser("s-grid", help="verify every interval of the grid")
    q.add_argument("--nmax", type=int, default=100)
    q.add_argument("--jobs", type=int, default=_default_jobs())
    q.add_argument("--box-limit", type=int, default=None)
    q.add_argument("--out", default=None)
    q.set_defaults(func=_cmd_regions_sgrid)

    q = rsub.add_parser("vl-steps", help="verify the nested-box induction steps")
    q.add_argument("--from", dest="start", type=int, default=4)
    q.add_argument("--to", dest="stop", type=int, default=10)
    q.add_argument("--box-limit", type=int, default=None)
    q.add_argument("--out", default=None)
    q.set_defaults(func=_cmd_regions_vl)

    q = rsub.add_parser("cases", help="verify the ten interval cases per level")
    q.add_argument("--k", type=_parse_krange, required=True,
                   help="level or level range, e.g. 4..8")
    q.add_argument("--case", type=_parse_krange, default=None,
                   help="case or case range, e.g. 1..10")
    q.add_argument("--jobs", type=int, default=_default_jobs())
    q.add_argument("--box-limit", type=int, default=None)
    q.add_argument("--out", default=None)
    q.set_defaults(func=_cmd_regions_cases)

    q = rsub.add_parser("system", help="run an explicit constraint system")
    q.add_argument("--gamma", default=None, help="JSON list of [n,c] pairs")
    q.add_argument("--gamma-file", default=None)
    q.add_argument("--expect-empty", action="store_true")
    q.add_argument("--unordered", action="store_true",
                   help="drop the ordered-simplex restriction")
    q.add_argument("--box-limit", type=int, default=None)
    q.add_argument("--out", default=None)
    q.set_defaults(func=_cmd_regions_system)

    p = sub.add_parser("verify", help="lemma verifiers")
    vsub = p.add_subparsers(dest="subcommand", required=True)

    q = vsub.add_parser("terminal", help="brute-force the terminal classification")
    q.add_argument("--rmax", type=int, default=30)
    q.add_argument("--jobs", type=int, default=_default_jobs())
    q.add_argument("--out", default=None)
    q.set_defaults(func=_cmd_verify_terminal)

    q = vsub.add_parser("fourfold", help="brute-force the fourfold gap window")
    q.add_argument("--rmax", type=int, default=40)
    q.add_argument("--jobs", type=int, default=_default_jobs())
    q.add_argument("--out", default=None)
    q.set_defaults(func=_cmd_verify_fourfold)

    q = vsub.add_parser("transfer", help="classify one transfer tuple")
    q.add_argument("--tuple", required=True, help="r:a1,a2,a3,a4:e")
    q.add_argument("--eps", required=True, help="exact rational in (0, 1/6)")
    q.add_argument("--out", default=None)
    q.set_defaults(func=_cmd_verify_transfer)

    q = vsub.add_parser("fivefold", help="scan fivefold candidates")
    q.add_argument("--rmax", type=int, default=13)
    q.add_argument("--eps", required=True)
    q.add_argument("--cond", choices=("4a", "4b", "4c"), required=True)
    q.add_argument("--jobs", type=int, default=_default_jobs())
    q.add_argument("--out", default=None)
    q.set_defaults(func=_cmd_verify_fivefold)

    p = sub.add_parser("hyperquot", help="hyperquotient weight calculus")
    hsub = p.add_subparsers(dest="subcommand", required=True)

    q = hsub.add_parser("psi", help="gap partition of the box weights")
    q.add_argument("--datum", required=True, help="JSON file with r, a, e, support")
    q.add_argument("--eps", required=True)
    q.add_argument("--out", default=None)
    q.set_defaults(func=_cmd_hq_psi)

    q = hsub.add_parser("identity5", help="check the five-term congruence identity")
    q.add_argument("--r", type=int, required=True)
    q.add_argument("--a", type=_parse_weights, required=True)
    q.add_argument("--e", type=int, required=True)
    q.set_defaults(func=_cmd_hq_identity5)

    q = hsub.add_parser("type", help="match against the classification patterns")
    q.add_argument("--r", type=int, required=True)
    q.add_argument("--a", type=_parse_weights, required=True)
    q.add_argument("--e", type=int, required=True)
    q.set_defaults(func=_cmd_hq_type)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except regions.BoxLimitExceeded as exc:
        print(f"error: box budget exhausted: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
