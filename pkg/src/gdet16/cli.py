"""Command-line interface.

Subcommands:
  eval      evaluate a 16-entry assignment (oracle / factored / frobenius / all)
  classify  decide whether an integer is an achievable determinant value
  witness   print a verified assignment realizing an achievable integer
  verify    run the verification suites
  search    exhaustive or random box campaign with the membership check

Exit codes: 0 success / achievable, 1 not-achievable or verification
failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .analysis import classify
from .evaluators import FactorBreakdown, eval_factored, eval_oracle, frobenius_eval
from .search import SearchConfig, run_search
from .verify import run_suites
from .witnesses import family_assignment, witness


def _parse_assignment(text: str) -> tuple[int, ...]:
    parts = [p.strip() for p in text.split(",")]
    try:
        values = tuple(int(p) for p in parts if p)
    except ValueError as exc:
        raise SystemExit(f"error: bad assignment entry: {exc}")
    if len(values) != 16:
        raise SystemExit(f"error: assignment needs 16 integers, got {len(values)}")
    return values


def _read_assignment_file(path: str) -> tuple[int, ...]:
    with open(path) as fh:
        lines = [ln.strip() for ln in fh]
    data = [ln for ln in lines if ln and not ln.startswith("#")]
    if len(data) != 1:
        raise SystemExit(f"error: {path} must contain exactly one data line")
    return _parse_assignment(data[0])


def _breakdown_dict(fb: FactorBreakdown) -> dict:
    return {"d4b": fb.d4b, "d4c": fb.d4c, "m0": fb.m0, "m1": fb.m1, "F": fb.F}


def cmd_eval(args: argparse.Namespace) -> int:
    if args.input:
        a = _read_assignment_file(args.input)
    elif args.assignment:
        a = _parse_assignment(args.assignment)
    else:
        raise SystemExit("error: give an assignment or --input FILE")

    out: dict = {"method": args.method}
    if args.method in ("factored", "all"):
        fb = eval_factored(a)
        out["breakdown"] = _breakdown_dict(fb)
        out["value"] = fb.product
    if args.method in ("oracle", "all"):
        out["oracle"] = eval_oracle(a)
        out.setdefault("value", out["oracle"])
    if args.method in ("frobenius", "all"):
        frob = frobenius_eval(a)
        out["frobenius"] = frob.re
        out.setdefault("value", frob.re)

    if args.method == "all":
        values = {out["value"], out["oracle"], out["frobenius"]}
        if len(values) != 1:
            print(f"METHOD DISAGREEMENT on a={a}: {out}", file=sys.stderr)
            return 1

    if args.json:
        print(json.dumps(out))
    else:
        print(out["value"])
        if "breakdown" in out:
            bd = out["breakdown"]
            print(
                f"  d4(b)={bd['d4b']}  d4(c)={bd['d4c']}  "
                f"m0={bd['m0']}  m1={bd['m1']}  F={bd['F']}"
            )
        if args.method == "all":
            print("  all three methods agree")
    return 0


def cmd_classify(args: argparse.Namespace) -> int:
    cls = classify(args.n)
    out = {
        "classification": {
            "achievable": cls.achievable,
            "family": cls.family,
            "m": cls.m,
            "reason": cls.reason,
        }
    }
    if args.json:
        print(json.dumps(out))
    elif cls.achievable:
        print(f"{args.n}: achievable (family {cls.family}, m={cls.m})")
    else:
        print(f"{args.n}: not achievable ({cls.reason})")
    return 0 if cls.achievable else 1


def cmd_witness(args: argparse.Namespace) -> int:
    a = witness(args.n)
    if a is None:
        if args.json:
            print(json.dumps({"achievable": False, "n": args.n}))
        else:
            print(f"{args.n}: not achievable, no witness exists")
        return 1
    # re-verify through all three methods before printing
    fb = eval_factored(a)
    oracle = eval_oracle(a)
    frob = frobenius_eval(a).re
    if not (fb.product == oracle == frob == args.n):
        print(
            f"REFUSING unverified witness for {args.n}: "
            f"factored={fb.product} oracle={oracle} frobenius={frob}",
            file=sys.stderr,
        )
        return 1
    cls = classify(args.n)
    out = {
        "achievable": True,
        "n": args.n,
        "assignment": list(a),
        "classification": {"achievable": True, "family": cls.family, "m": cls.m},
        "value": fb.product,
        "breakdown": _breakdown_dict(fb),
    }
    if args.json:
        print(json.dumps(out))
    else:
        print(",".join(str(x) for x in a))
        print(f"  family {cls.family}, m={cls.m}; verified by all three methods = {args.n}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    suites = run_suites(args.suite, trials=args.trials, seed=args.seed)
    ok = all(s["ok"] for s in suites)
    if args.json:
        print(json.dumps({"ok": ok, "suites": suites}))
    else:
        for s in suites:
            print(f"suite {s['suite']}: {'PASS' if s['ok'] else 'FAIL'}")
            for name, c in s["checks"].items():
                line = f"  {name}: {c['applicable']}/{c['checked']} applicable, "
                line += f"{len(c['failures'])} failures"
                print(line)
                for failure in c["failures"][:5]:
                    print(f"    reproducer: {failure}")
    return 0 if ok else 1


def cmd_search(args: argparse.Namespace) -> int:
    config = SearchConfig(
        box_low=args.box_low,
        box_high=args.box_high,
        mode=args.mode,
        samples=args.samples,
        parallelism=args.parallelism,
        seed=args.seed,
    )
    report = run_search(config)
    if args.json:
        print(json.dumps(report.to_dict()))
    else:
        print(
            f"evaluated {report.evaluated} assignments in "
            f"[{args.box_low},{args.box_high}]^16 ({args.mode})"
        )
        print(f"  distinct values: {report.distinct_values}")
        print(f"  value range: [{report.min_value}, {report.max_value}]")
        print(f"  small odd values achieved: {list(report.achieved_small_odd)}")
        print(f"  membership violations: {len(report.membership_violations)}")
        print(f"  runtime: {report.runtime_ms:.0f} ms")
    if report.membership_violations:
        for v in report.membership_violations[:5]:
            print(f"  VIOLATION at a={v}", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gdet16",
        description="Exact integer group determinants of the order-16 group C2^2 x| C4",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate an assignment")
    p.add_argument("assignment", nargs="?", help="16 comma-separated integers")
    p.add_argument("--input", help="file with one line of 16 comma-separated integers")
    p.add_argument(
        "--method",
        choices=["oracle", "factored", "frobenius", "all"],
        default="all",
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("classify", help="decide achievability of an integer")
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("witness", help="print a verified witness assignment")
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument(
        "suite",
        choices=["identities", "congruences", "representations", "witnesses", "all"],
    )
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="box campaign with the membership check")
    p.add_argument("--box-low", type=int, default=-9)
    p.add_argument("--box-high", type=int, default=9)
    p.add_argument("--mode", choices=["exhaustive", "random"], default="random")
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--parallelism", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
