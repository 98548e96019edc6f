"""Command-line front end: solve, reduce, verify, bench.

Exit codes: 0 feasible/true/pass, 1 infeasible/false, 2 usage error,
3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import json
import sys
import time
from fractions import Fraction
from random import Random

from . import fileio, verify as verify_mod
from .continuous import decide, optimize
from .core import Box, Point, PointSet, format_scalar, parse_scalar
from .discrete import solve_discrete, solve_discrete_1d_scan, solve_discrete_optimize
from .envelope import solve_1d_opt
from .errors import HutError, UnsupportedVariant
from .gadgets import (
    KPartiteHypergraph,
    lb_pipeline_lopsided,
    pcd_pipeline_3d,
)
from .hausdorff import CONTINUOUS, DIRECTED, DISCRETE, UNDIRECTED, HutInstance
from .instances import (
    TpwcInstance,
    default_orthant_bounding,
    hut_to_tpwc,
    orthant_shapes_to_tpwo,
    shapes_to_tpwb,
    tpwb_to_tpwo_double_dim,
    tpwc_to_hut,
    tpwo_to_tpwc,
    tpwo_to_uhut,
)
from .oracles import (
    brute_dischut,
    brute_hut_decide,
    brute_hut_optimize,
    hut_feasible_at,
)
from .reductions import (
    dischut_to_boxcover,
    fopz_aee_to_dischut,
    linear_alignment_to_hut1d,
    maxconvlb_to_dischut1d,
    necklace_to_linear_alignment,
    undirected_to_directed,
)

ALGOS = ("auto", "envelope1d", "sweep2d", "lopsided3d", "rangetree", "scan1d", "brute")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="hutkit",
        description="Exact L-infinity Hausdorff-under-translation toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="decide or optimize an instance")
    p_solve.add_argument("--variant", choices=(DIRECTED, UNDIRECTED))
    p_solve.add_argument("--mode", choices=(CONTINUOUS, DISCRETE))
    p_solve.add_argument("--algo", choices=ALGOS, default="auto")
    p_solve.add_argument("--delta", type=str)
    p_solve.add_argument("--optimize", action="store_true")
    p_solve.add_argument("--in", dest="infile", required=True)
    p_solve.add_argument("--out", dest="outfile")

    p_red = sub.add_parser("reduce", help="apply a constructive reduction")
    p_red.add_argument("--from", dest="src", required=True)
    p_red.add_argument("--to", dest="dst", required=True)
    p_red.add_argument("--pipeline", choices=("lopsided", "pcd3d"))
    p_red.add_argument("--lam", type=str, default="1")
    p_red.add_argument("--dim", type=int, default=2)
    p_red.add_argument("--in", dest="infile", required=True)
    p_red.add_argument("--out", dest="outfile", required=True)

    p_ver = sub.add_parser("verify", help="randomized oracle-equivalence runs")
    p_ver.add_argument(
        "--suite", choices=("solvers", "reductions", "gadgets", "pcd", "all"),
        default="all",
    )
    p_ver.add_argument("--trials", type=int, default=50)
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--max-size", type=int, default=8)
    p_ver.add_argument("--jobs", type=int, default=1)

    p_bench = sub.add_parser("bench", help="timing table for solver families")
    p_bench.add_argument(
        "--family", choices=("sweep2d", "lopsided3d", "rangetree"), required=True
    )
    p_bench.add_argument("--sizes", type=str, default="")
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--out", dest="outfile", required=True)

    args = parser.parse_args(argv)
    try:
        if args.command == "solve":
            return cmd_solve(args)
        if args.command == "reduce":
            return cmd_reduce(args)
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "bench":
            return cmd_bench(args)
    except UnsupportedVariant as exc:
        print(f"capability error: {exc}", file=sys.stderr)
        print(
            "supported routes: continuous directed/undirected in 1-D "
            "(envelope1d) and 2-D (sweep2d); continuous directed 3-D "
            "(lopsided3d); undirected 3-D continuous: the dimension-doubling "
            "transfer does not reduce 3-D, use --algo brute; discrete "
            "directed/undirected up to 6-D (rangetree, scan1d in 1-D)",
            file=sys.stderr,
        )
        return 2
    except (HutError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


def _pick_algo(inst: HutInstance, optimizing: bool) -> str:
    if inst.mode == DISCRETE:
        return "scan1d" if inst.dim == 1 else "rangetree"
    if inst.dim == 1:
        return "envelope1d"
    if inst.dim == 2:
        return "sweep2d"
    if inst.dim == 3 and inst.variant == DIRECTED:
        return "lopsided3d"
    raise UnsupportedVariant(
        f"no automatic continuous solver for {inst.variant} in {inst.dim}-D"
    )


def cmd_solve(args) -> int:
    inst = fileio.load(args.infile)
    if not isinstance(inst, HutInstance):
        if isinstance(inst, TpwcInstance):
            inst = tpwc_to_hut(inst)
        else:
            raise HutError("solve expects a hut/dischut (or tpwc) instance file")
    if args.variant and args.variant != inst.variant:
        inst = HutInstance(inst.P, inst.Q, args.variant, inst.mode, inst.delta, inst.T)
    if args.mode and args.mode != inst.mode:
        raise HutError(f"instance file is {inst.mode}, not {args.mode}")
    delta = parse_scalar(args.delta) if args.delta else inst.delta
    if args.optimize and args.delta:
        raise HutError("--delta and --optimize are mutually exclusive")
    if not args.optimize and delta is None:
        raise HutError("decision needs --delta (or a delta in the file)")

    algo = args.algo if args.algo != "auto" else _pick_algo(inst, args.optimize)
    t0 = time.perf_counter_ns()
    report: dict = {
        "instance": args.infile,
        "algorithm": algo,
        "variant": inst.variant,
        "mode": inst.mode,
        "dim": inst.dim,
        "sizes": {"n": len(inst.P), "m": len(inst.Q),
                  **({"t": len(inst.T)} if inst.T is not None else {})},
    }
    feasible = None
    if args.optimize:
        value, tau = _solve_optimize(inst, algo)
        report["value"] = format_scalar(value)
        report["tau"] = [format_scalar(c) for c in tau.coords]
        feasible = True
    else:
        witness = _solve_decide(inst, delta, algo)
        report["delta"] = format_scalar(delta)
        report["feasible"] = witness is not None
        feasible = witness is not None
        if witness is not None:
            tau, cert = witness
            report["tau"] = [format_scalar(c) for c in tau.coords]
            if cert is not None:
                report["certificate"] = [
                    {"p": [format_scalar(c) for c in p.coords],
                     "q": [format_scalar(c) for c in q.coords]}
                    for p, q in cert
                ]
    report["wall_ns"] = time.perf_counter_ns() - t0
    _emit(report, args.outfile)
    return 0 if feasible else 1


def _solve_decide(inst: HutInstance, delta, algo: str):
    P, Q, variant = inst.P, inst.Q, inst.variant
    if algo == "brute":
        if inst.mode == DISCRETE:
            tau = brute_dischut(inst.T, P, Q, delta, variant)
        else:
            tau = brute_hut_decide(P, Q, delta, variant, inst.dim)
        return None if tau is None else (tau, None)
    if inst.mode == DISCRETE:
        if algo == "scan1d":
            res = solve_discrete_1d_scan(inst.T, P, Q, variant)
            if res.best_value > delta:
                return None
            best = next(t for t, v in res.values if v <= delta)
            return (best, None)
        if algo != "rangetree":
            raise UnsupportedVariant(f"algo {algo} does not apply to discrete mode")
        got = solve_discrete(inst.T, P, Q, delta, variant)
        return None if got is None else (got.tau, got.certificate)
    expected = {1: "envelope1d", 2: "sweep2d", 3: "lopsided3d"}.get(inst.dim)
    if algo != expected:
        raise UnsupportedVariant(
            f"algo {algo} does not apply to continuous {inst.dim}-D"
        )
    got = decide(P, Q, delta, variant, inst.dim)
    return None if got is None else (got.tau, got.certificate)


def _solve_optimize(inst: HutInstance, algo: str):
    P, Q, variant = inst.P, inst.Q, inst.variant
    if inst.mode == DISCRETE:
        if algo == "brute":
            best = None
            for tau in sorted(inst.T, key=lambda t: t.coords):
                from .hausdorff import directed_hausdorff, undirected_hausdorff

                f = directed_hausdorff if variant == DIRECTED else undirected_hausdorff
                v = f(P.translate(tau), Q)
                if best is None or v < best[0]:
                    best = (v, tau)
            return best
        if algo == "scan1d":
            res = solve_discrete_1d_scan(inst.T, P, Q, variant)
            return res.best_value, res.best_tau
        return solve_discrete_optimize(inst.T, P, Q, variant)
    if algo == "brute":
        return brute_hut_optimize(P, Q, variant, inst.dim)
    if algo == "envelope1d":
        return solve_1d_opt(P, Q, variant)
    return optimize(P, Q, variant, inst.dim)


REDUCTIONS = {
    ("maxconvlb", "dischut"): lambda inst, args: maxconvlb_to_dischut1d(inst),
    ("linearalign", "hut"): lambda inst, args: linear_alignment_to_hut1d(inst),
    ("necklace", "linearalign"): lambda inst, args: necklace_to_linear_alignment(inst),
    ("fopz", "dischut"): lambda inst, args: fopz_aee_to_dischut(inst),
    ("tpwo", "tpwc"): lambda inst, args: tpwo_to_tpwc(inst),
    ("tpwo", "hut"): lambda inst, args: tpwo_to_uhut(inst),
    ("tpwc", "hut"): lambda inst, args: tpwc_to_hut(inst),
    ("hut", "tpwc"): lambda inst, args: hut_to_tpwc(inst),
    ("tpwb", "tpwo"): lambda inst, args: tpwb_to_tpwo_double_dim(inst),
    ("shapes", "tpwb"): lambda inst, args: shapes_to_tpwb(inst),
    ("shapes", "tpwo"): lambda inst, args: orthant_shapes_to_tpwo(
        inst, default_orthant_bounding(inst)
    ),
}


def cmd_reduce(args) -> int:
    inst = fileio.load(args.infile)
    lam = Fraction(args.lam)
    if args.src == "hyperclique":
        if not isinstance(inst, KPartiteHypergraph):
            raise HutError("hyperclique reductions need a hypergraph file")
        if args.pipeline == "pcd3d":
            out = pcd_pipeline_3d(inst, lam)
        elif args.pipeline == "lopsided":
            out = lb_pipeline_lopsided(inst, lam, args.dim)
        else:
            raise HutError("hyperclique needs --pipeline {lopsided|pcd3d}")
    elif args.src == "dischut" and args.dst == "boxcover":
        if not isinstance(inst, HutInstance) or inst.mode != DISCRETE:
            raise HutError("expected a dischut instance file")
        out = dischut_to_boxcover(inst.T, inst.P, inst.Q, inst.delta)
    elif args.src == "undirected" and args.dst == "directed":
        if not isinstance(inst, HutInstance):
            raise HutError("expected a hut instance file")
        P2, Q2 = undirected_to_directed(inst.P, inst.Q)
        out = HutInstance(P2, Q2, DIRECTED, inst.mode, inst.delta, inst.T)
    else:
        key = (args.src, args.dst)
        if key not in REDUCTIONS:
            raise HutError(
                f"unsupported reduction {args.src} -> {args.dst}; edges: "
                + ", ".join(f"{a}->{b}" for a, b in sorted(REDUCTIONS))
                + ", hyperclique->hut (--pipeline), dischut->boxcover, "
                "undirected->directed"
            )
        out = REDUCTIONS[key](inst, args)

    obj = fileio.to_obj(out)
    meta = obj.setdefault("meta", {})
    if isinstance(out, HutInstance) and out.meta:
        meta.update(fileio._jsonable(out.meta))
    with open(args.infile, "rb") as fh:
        meta["source_sha256"] = hashlib.sha256(fh.read()).hexdigest()
    meta.setdefault("reduction", f"{args.src}->{args.dst}")
    meta.setdefault("flip", meta.get("flip", False))
    with open(args.outfile, "w") as fh:
        json.dump(obj, fh, indent=1, sort_keys=True)
        fh.write("\n")
    print(f"wrote {args.outfile} ({obj['kind']}, flip={meta['flip']})")
    return 0


def cmd_verify(args) -> int:
    names = (
        ["solvers", "reductions", "gadgets"]
        if args.suite == "all"
        else [args.suite]
    )
    if args.jobs > 1:
        reports = _verify_parallel(names, args)
    else:
        reports = verify_mod.run_suites(names, args.trials, args.seed, args.max_size)
    failed = False
    for rep in reports:
        print(rep.line())
        if not rep.passed:
            failed = True
            desc, payload = rep.failures[0]
            print(f"  first counterexample ({desc}):")
            try:
                print(json.dumps(fileio.to_obj(payload), sort_keys=True))
            except Exception:
                print(f"  {payload!r}")
    return 3 if failed else 0


def _verify_parallel(names, args):
    from concurrent.futures import ProcessPoolExecutor

    jobs = []
    chunk = max(1, args.trials // args.jobs)
    for name in names:
        done = 0
        part = 0
        while done < args.trials:
            k = min(chunk, args.trials - done)
            jobs.append((name, args.seed + part, k, args.max_size))
            done += k
            part += 1
    with ProcessPoolExecutor(max_workers=args.jobs) as pool:
        parts = list(pool.map(_run_one_suite, jobs))
    merged: dict[str, verify_mod.SuiteReport] = {}
    for rep in parts:
        agg = merged.setdefault(rep.name, verify_mod.SuiteReport(rep.name))
        agg.trials += rep.trials
        agg.failures.extend(rep.failures)
    return [merged[n] for n in sorted(merged)]


def _run_one_suite(job):
    name, seed, trials, max_size = job
    return verify_mod.run_suites([name], trials, seed, max_size)[0]


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    rng = Random(args.seed)
    rows = []
    if args.family == "sweep2d":
        rows, notes = _bench_sweep2d(rng, sizes)
    elif args.family == "lopsided3d":
        rows, notes = _bench_lopsided3d(rng, sizes)
    else:
        rows, notes = _bench_rangetree(rng, sizes)
    with open(args.outfile, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["family", "n", "m", "t", "wall_ns", "verdict"])
        w.writerows(rows)
    for note in notes:
        print(note)
    print(f"wrote {args.outfile} ({len(rows)} rows)")
    return 0


def _rand_cloud(rng, dim, n, span):
    return PointSet(
        dim,
        tuple(
            Point(tuple(Fraction(rng.randint(0, span)) for _ in range(dim)))
            for _ in range(n)
        ),
    )


def _bench_sweep2d(rng, sizes):
    from .continuous import decide_2d

    sizes = sizes or [50, 100, 200]
    rows, notes = [], []
    for n in sizes:
        P = _rand_cloud(rng, 2, n, 4 * n)
        Q = _rand_cloud(rng, 2, n, 4 * n)
        delta = Fraction(n, 2)
        t0 = time.perf_counter_ns()
        got = decide_2d(P, Q, delta, DIRECTED)
        dt = time.perf_counter_ns() - t0
        rows.append(["sweep2d", n, n, "", dt, got is not None])
        est = _estimate_brute_ns(P, Q, delta)
        if est is not None:
            ratio = est / max(dt, 1)
            notes.append(
                f"sweep2d n=m={n}: {dt/1e6:.1f} ms vs brute est {est/1e6:.1f} ms "
                f"(x{ratio:.0f}{', >=5x target met' if ratio >= 5 else ''})"
            )
    return rows, notes


def _estimate_brute_ns(P, Q, delta, probe=2000):
    """Extrapolated grid-oracle cost: timed probe of the candidate grid."""
    from .oracles import hut_feasible_at

    xs = sorted(
        {q.coords[0] - p.coords[0] + s * delta for p in P for q in Q for s in (-1, 1)}
    )
    ys = sorted(
        {q.coords[1] - p.coords[1] + s * delta for p in P for q in Q for s in (-1, 1)}
    )
    total = len(xs) * len(ys)
    cnt = 0
    t0 = time.perf_counter_ns()
    for x in xs:
        for y in ys:
            hut_feasible_at(P, Q, delta, Point((x, y)), DIRECTED)
            cnt += 1
            if cnt >= probe:
                dt = time.perf_counter_ns() - t0
                return dt * total // cnt
    return time.perf_counter_ns() - t0


def _bench_lopsided3d(rng, sizes):
    from .continuous import decide_3d_lopsided

    sizes = sizes or [50, 100, 200, 400]
    rows, notes = [], []
    times = []
    for m in sizes:
        span = max(4, round(4 * m ** (1 / 3)))
        P = _rand_cloud(rng, 3, 3, span)
        Q = _rand_cloud(rng, 3, m, span)
        t0 = time.perf_counter_ns()
        got = decide_3d_lopsided(P, Q, Fraction(1))
        dt = time.perf_counter_ns() - t0
        rows.append(["lopsided3d", 3, m, "", dt, got is not None])
        times.append((m, dt))
    for (m1, t1), (m2, t2) in zip(times, times[1:]):
        growth = (t2 / max(t1, 1)) / ((m2 / m1) ** 2)
        notes.append(
            f"lopsided3d m {m1}->{m2}: time x{t2/max(t1,1):.2f} vs quadratic "
            f"x{(m2/m1)**2:.1f} ({'subquadratic' if growth < 1 else 'not subquadratic'})"
        )
    return rows, notes


def _bench_rangetree(rng, sizes):
    from .rangetree import RangeTree

    sizes = sizes or [100, 1000, 5000]
    rows = []
    for n in sizes:
        ps = _rand_cloud(rng, 3, n, 10 * n)
        t0 = time.perf_counter_ns()
        tree = RangeTree(list(ps), 3)
        hits = 0
        for _ in range(200):
            lo = [Fraction(rng.randint(0, 10 * n)) for _ in range(3)]
            b = Box(tuple(lo), tuple(v + n for v in lo))
            if tree.query_witness(b) is not None:
                hits += 1
        dt = time.perf_counter_ns() - t0
        rows.append(["rangetree", n, "", 200, dt, hits > 0])
    return rows, []


def _emit(report: dict, outfile) -> None:
    text = json.dumps(report, indent=1, sort_keys=True)
    if outfile:
        with open(outfile, "w") as fh:
            fh.write(text + "\n")
    print(text)


if __name__ == "__main__":
    sys.exit(main())
