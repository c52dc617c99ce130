"""Command-line entry point.

Exit status: 0 when the command ran and its checks passed (any splitting
decision counts as success), 1 when a check failed, 2 on usage errors."""

from __future__ import annotations

import argparse
import itertools
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor

from . import artin, geometry, solver
from .collection import CollectionError, collect, parse_mixed_word
from .kernels import Gamma2Context, Gamma3Context, KernelError, Ring
from .presentations import FAMILIES, PresentationError, Surface, build_presentation
from .words import WordError, format_word, parse_word


class UsageError(Exception):
    pass


def dumps(obj):
    return json.dumps(_clean(obj), sort_keys=True, indent=2, ensure_ascii=False)


def _clean(obj):
    """Make a report strict JSON (no infinities)."""
    if isinstance(obj, float) and not math.isfinite(obj):
        return None
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return obj


def int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def int_range(text):
    """``a:b`` (inclusive) or a single integer."""
    try:
        lo, _, hi = text.partition(":")
        lo = int(lo)
        hi = int(hi) if hi else lo
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a range like 2:5, got {text!r}") from None
    return list(range(lo, hi + 1))


def surface_arg(text):
    try:
        return Surface.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


# -- subcommands ------------------------------------------------------------------------

def cmd_present(args):
    pres = build_presentation(args.family, args.surface, args.n, args.m)
    print(pres.dumps() if args.json else pres.to_text())
    return 0


def cmd_artin_check(args):
    if args.word:
        w = parse_word(args.word)
        try:
            reduced = artin.handle_reduce(w, args.k)
            status = "trivial" if not reduced else "nontrivial"
        except artin.Undecided as exc:
            reduced, status = None, "undecided"
            print(exc, file=sys.stderr)
        report = {"word": format_word(w), "k": args.k, "status": status,
                  "reduced": format_word(reduced) if reduced is not None else None}
        if args.oracle:
            report["oracle"] = "trivial" if artin.lk_is_trivial(w, args.k) else "nontrivial"
        if args.json:
            print(dumps(report))
        else:
            print(f"{report['word']} in B_{args.k}: {status}" + (f" (reduced: {report['reduced']})" if reduced else ""))
            if args.oracle:
                print(f"linear representation: {report['oracle']}")
        agree = not args.oracle or report["oracle"] == status
        return 0 if status != "undecided" and agree else 1
    reports = [artin.check_remark_cij(k) for k in range(2, args.k + 1)]
    if args.json:
        print(dumps({"ok": all(r.ok for r in reports), "reports": [r.to_json() for r in reports]}))
    else:
        width = max(len(l) for r in reports for l, _ in r.rows)
        for r in reports:
            for label, status in r.rows:
                print(f"k={r.k:<3} {label:<{width}}  {status.upper()}")
        print(f"{sum(len(r.rows) for r in reports)} identities, "
              f"{sum(s != 'pass' for r in reports for _, s in r.rows)} not passing")
    return 0 if all(r.ok for r in reports) else 1


def cmd_collect(args):
    if args.level == "gamma2":
        if args.n is None:
            raise UsageError("gamma2 collection needs --n")
        ctx = Gamma2Context(args.surface, args.n)
    else:
        if args.t is None or args.s is None:
            raise UsageError("gamma3 collection needs --t and --s")
        ring = Ring("Z2") if args.surface is Surface.KLEIN and args.mod2 else Ring("Z")
        ctx = Gamma3Context(args.surface, args.t, args.s, ring)
    form = collect(parse_mixed_word(args.word, ctx), ctx)
    if args.json:
        print(dumps(form.to_json()))
    else:
        print(form)
    return 0


def cmd_verify_lemma(args):
    params = {k: v for k, v in (("n", args.n), ("t", args.t), ("s", args.s)) if v is not None}
    report = solver.verify_derived_lemma(args.id, args.surface, params)
    if args.json:
        print(dumps(report.to_json()))
    else:
        print(f"{report.lemma} on {report.surface} {report.params}")
        for c in report.checks:
            mark = "PASS" if c["holds"] else "FAIL"
            src = "; ".join(c["provenance"][:4]) + (" ..." if len(c["provenance"]) > 4 else "")
            print(f"  {mark}  {c['claim']}" + (f"   <= {src}" if src else ""))
    return 0 if report.ok else 1


def _verdict_for(surface, n=None, m=None, blocks=None, q=None):
    if blocks is None:
        return solver.two_factor_verdict(surface, n, m)
    if q in ("last", "k-1"):
        return solver.q_last_verdict(surface, blocks)
    if q == "1":
        return solver.q1_verdict(surface, blocks)
    raise UsageError(f"--q must be 1 or last, got {q!r}")


def cmd_solve_split(args):
    if args.blocks is None and (args.n is None or args.m is None):
        raise UsageError("give --n and --m, or --blocks with --q")
    if args.blocks is not None and len(args.blocks) == 2 and args.q is None:
        verdict = solver.two_factor_verdict(args.surface, *args.blocks)
    else:
        if args.blocks is not None and args.q is None:
            raise UsageError("--blocks with three or more sizes needs --q 1 or --q last")
        verdict = _verdict_for(args.surface, args.n, args.m, args.blocks, args.q)
    if args.json:
        print(dumps(verdict.to_json()))
    else:
        print(f"decision: {verdict.decision}")
        _print_certificate(verdict.certificate)
    return 0


def _print_certificate(cert, indent="  "):
    for key in sorted(cert):
        val = cert[key]
        if isinstance(val, list) and val and all(isinstance(x, str) for x in val):
            print(f"{indent}{key}:")
            for line in val:
                print(f"{indent}  {line}")
        elif isinstance(val, list) and val and isinstance(val[0], dict):
            print(f"{indent}{key}: {len(val)} entries")
        else:
            print(f"{indent}{key}: {val}")


def cmd_geom_check(args):
    if len(args.blocks) != len(args.mult):
        raise UsageError("--blocks and --mult need the same length")
    report = geometry.check_section_properties(args.surface, args.blocks, args.mult, args.trials, args.seed)
    if args.json:
        print(dumps(report.to_json()))
    else:
        new = sum(n * l for n, l in zip(args.blocks, args.mult))
        print(f"{report.M.value} blocks={args.blocks} mult={args.mult} new block={new} "
              f"trials={args.trials} seed={args.seed}")
        for check, passed in report.counts.items():
            print(f"  {check:<24} {passed}/{args.trials}")
        print(f"  smallest output distance {report.min_distance:.3e}")
        for f in report.failures[:5]:
            print(f"  FAIL trial {f['trial']}: {f['check']} {f['detail']}")
    return 0 if report.ok else 1


# -- sweeps -------------------------------------------------------------------------

def _sweep_row(job):
    kind, surface, point = job
    if kind == "two-factor":
        n, m = point
        v = solver.two_factor_verdict(surface, n, m)
        expected = "splits" if m % n == 0 else "does-not-split"
        return {"n": n, "m": m, "decision": v.decision, "k4": v.certificate.get("k4"),
                "agrees": v.decision == expected}
    if kind == "q-last":
        v = solver.q_last_verdict(surface, point)
        expected = "splits" if all(x % point[0] == 0 for x in point[1:]) else "does-not-split"
        return {"sizes": list(point), "decision": v.decision, "agrees": v.decision == expected}
    if kind == "q1":
        v = solver.q1_verdict(surface, point)
        return {"sizes": list(point), "decision": v.decision, "agrees": True}
    t, s = point
    v = solver.ts1_verdict(surface, t, s)
    return {"t": t, "s": s, "decision": v.decision, "agrees": v.certificate["replays"]}


def cmd_sweep(args):
    if args.kind == "two-factor":
        points = list(itertools.product(args.n or [], args.m or []))
    elif args.kind == "ts1":
        points = list(itertools.product(args.t or [], args.s or []))
    else:
        if not args.sizes:
            raise UsageError(f"{args.kind} sweeps need --sizes, e.g. 2:4,2:4")
        points = list(itertools.product(*args.sizes))
        if any(len(p) < 2 for p in points):
            raise UsageError("size tuples need at least two entries")
    jobs = [(args.kind, args.surface, p) for p in points]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            rows = list(pool.map(_sweep_row, jobs))
    else:
        rows = [_sweep_row(j) for j in jobs]
    counts = {}
    for r in rows:
        counts[r["decision"]] = counts.get(r["decision"], 0) + 1
    ok = all(r["agrees"] for r in rows)
    if args.json:
        print(dumps({"kind": args.kind, "surface": args.surface.value, "rows": rows,
                     "counts": counts, "ok": ok}))
    else:
        for r in rows:
            print("  ".join(f"{k}={v}" for k, v in r.items()))
        summary = ", ".join(f"{k}: {v}" for k, v in sorted(counts.items())) or "no points"
        print(f"{len(rows)} rows; {summary}")
    return 0 if ok else 1


def _sizes_ranges(text):
    try:
        return [int_range(part) for part in text.split(",")]
    except argparse.ArgumentTypeError:
        raise argparse.ArgumentTypeError(f"expected ranges like 2:4,2:4, got {text!r}") from None


# -- parser -------------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="braidsplit", description="Splitting problems for surface braid groups.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--json", action="store_true", help="print a JSON report")
        sp.set_defaults(func=func)
        return sp

    sp = add("present", cmd_present, "print a group presentation")
    sp.add_argument("--surface", type=surface_arg, required=True)
    sp.add_argument("--family", choices=sorted(FAMILIES), required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, default=1)

    sp = add("artin-check", cmd_artin_check, "C_{i,j} identities in the Artin braid group")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--word", help="decide triviality of one word instead")
    sp.add_argument("--oracle", action="store_true", help="also evaluate the linear representation")

    sp = add("collect", cmd_collect, "collect a mixed word into canonical form")
    sp.add_argument("--surface", type=surface_arg, required=True)
    sp.add_argument("--mode", "--level", dest="level", choices=["gamma2", "gamma3"], default="gamma2")
    sp.add_argument("--n", type=int)
    sp.add_argument("--m", type=int, help="accepted for symmetry with solve-split; the kernel action does not depend on m")
    sp.add_argument("--t", type=int)
    sp.add_argument("--s", type=int)
    sp.add_argument("--mod2", action="store_true", help="Klein class-2 kernel with coefficients mod 2")
    sp.add_argument("--word", required=True)

    sp = add("verify-lemma", cmd_verify_lemma, "regenerate a lemma from raw relator constraints")
    sp.add_argument("--id", choices=solver.LEMMAS, required=True)
    sp.add_argument("--surface", type=surface_arg, required=True)
    sp.add_argument("--n", type=int)
    sp.add_argument("--t", type=int)
    sp.add_argument("--s", type=int)

    sp = add("solve-split", cmd_solve_split, "decide whether a projection splits")
    sp.add_argument("--surface", type=surface_arg, required=True)
    sp.add_argument("--n", type=int)
    sp.add_argument("--m", type=int)
    sp.add_argument("--blocks", type=int_list)
    sp.add_argument("--q", choices=["1", "last", "k-1"])

    sp = add("geom-check", cmd_geom_check, "check the vector-field cross-section numerically")
    sp.add_argument("--surface", type=surface_arg, required=True)
    sp.add_argument("--blocks", type=int_list, required=True)
    sp.add_argument("--mult", type=int_list, required=True)
    sp.add_argument("--trials", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)

    sp = add("sweep", cmd_sweep, "verdicts over a parameter grid")
    sp.add_argument("--kind", choices=["two-factor", "q-last", "q1", "ts1"], default="two-factor")
    sp.add_argument("--surface", type=surface_arg, default=Surface.TORUS)
    sp.add_argument("--n", type=int_range)
    sp.add_argument("--m", type=int_range)
    sp.add_argument("--t", type=int_range)
    sp.add_argument("--s", type=int_range)
    sp.add_argument("--sizes", type=_sizes_ranges)
    sp.add_argument("--jobs", type=int, default=1)
    return p


USAGE_ERRORS = (UsageError, PresentationError, KernelError, CollectionError, WordError,
                solver.SolverError, geometry.GeometryError, artin.ArtinError)


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse has already printed usage; --help exits 0
        return exc.code
    try:
        return args.func(args)
    except USAGE_ERRORS as exc:
        print(f"braidsplit {args.command}: {exc}", file=sys.stderr)
        return 2
    except (solver.CertificateError, artin.Undecided) as exc:
        print(f"braidsplit {args.command}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
