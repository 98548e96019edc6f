"""Randomized oracle-equivalence campaigns behind the verify subcommand.

Each suite runs seeded trials comparing solvers or reductions against the
brute-force oracles and reports the first counterexample instance, which
the CLI serializes for reproduction.  Operation overrides exist so the test
suite can inject a known-buggy reduction and watch the campaign catch it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from random import Random
from typing import Callable

from . import gen
from .continuous import decide, decide_2d, optimize
from .discrete import solve_discrete
from .envelope import solve_1d_opt
from .gadgets import lb_pipeline_lopsided, pcd_pipeline_3d
from .hausdorff import DIRECTED, UNDIRECTED
from .oracles import (
    brute_dischut,
    brute_hut_decide,
    brute_hyperclique,
    brute_linear_alignment,
    brute_maxconvlb,
    brute_necklace,
    hut_feasible_at,
)
from .reductions import (
    boxcover_decide,
    dischut_to_boxcover,
    fopz_aee_to_dischut,
    linear_alignment_to_hut1d,
    maxconvlb_to_dischut1d,
    necklace_to_linear_alignment,
    undirected_to_directed,
)


@dataclass
class SuiteReport:
    name: str
    trials: int = 0
    failures: list = field(default_factory=list)  # (description, instance-ish)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, description: str, payload=None) -> None:
        self.trials += 1
        if not ok:
            self.failures.append((description, payload))

    def line(self) -> str:
        state = "pass" if self.passed else f"FAIL ({len(self.failures)})"
        return f"suite {self.name}: {self.trials} checks, {state}"


def suite_solvers(seed: int, trials: int, max_size: int = 8) -> SuiteReport:
    rng = Random(seed)
    rep = SuiteReport("solvers")
    for t in range(trials):
        dim = rng.choice([1, 1, 2, 2, 3])
        variant = rng.choice([DIRECTED, UNDIRECTED])
        if dim == 3:
            variant = DIRECTED
        cap = max_size if dim < 3 else min(max_size, 5)
        inst = gen.rand_hut_decision(rng, dim, cap, max_size, variant)
        want = brute_hut_decide(inst.P, inst.Q, inst.delta, variant, dim)
        got = decide(inst.P, inst.Q, inst.delta, variant, dim)
        ok = (want is None) == (got is None)
        if ok and got is not None:
            ok = hut_feasible_at(inst.P, inst.Q, inst.delta, got.tau, variant)
        rep.check(ok, f"continuous decide dim={dim} {variant}", inst)

        dinst = gen.rand_dischut(rng, rng.choice([1, 2, 3]), variant=variant)
        want_d = brute_dischut(dinst.T, dinst.P, dinst.Q, dinst.delta, variant)
        got_d = solve_discrete(dinst.T, dinst.P, dinst.Q, dinst.delta, variant)
        rep.check(
            (want_d is None) == (got_d is None),
            f"discrete decide {variant}",
            dinst,
        )
    return rep


def suite_reductions(
    seed: int,
    trials: int,
    max_size: int = 8,
    maxconv_reduction: Callable = maxconvlb_to_dischut1d,
) -> SuiteReport:
    rng = Random(seed)
    rep = SuiteReport("reductions")
    for t in range(trials):
        mc = gen.rand_maxconv(rng, max_n=min(6, max_size))
        hut = maxconv_reduction(mc)
        src = brute_maxconvlb(mc.A, mc.B, mc.C)
        tgt = brute_dischut(hut.T, hut.P, hut.Q, hut.delta, DIRECTED) is not None
        rep.check(src == (not tgt), "maxconvlb flip equivalence", mc)

        la = gen.rand_linear_alignment(rng, max_n=min(5, max_size))
        v_src, _, _ = brute_linear_alignment(la.A, la.B)
        h = linear_alignment_to_hut1d(la)
        v_tgt, _ = solve_1d_opt(h.P, h.Q, DIRECTED)
        rep.check(v_src == v_tgt, "linear alignment value", la)

        nk = gen.rand_necklace(rng, max_n=min(6, max_size))
        v_src, _, _ = brute_necklace(nk.A, nk.B)
        lin = necklace_to_linear_alignment(nk)
        v_tgt, _, _ = brute_linear_alignment(lin.A, lin.B)
        rep.check(v_src == v_tgt, "necklace chain value", nk)

        dim = rng.choice([1, 2, 3])
        dh = gen.rand_dischut(rng, dim, 5, 5, 5)
        bc = dischut_to_boxcover(dh.T, dh.P, dh.Q, dh.delta)
        src = brute_dischut(dh.T, dh.P, dh.Q, dh.delta, DIRECTED) is not None
        rep.check(src == (not boxcover_decide(bc)), "boxcover flip", dh)

        f = gen.rand_fopz(rng)
        fh = fopz_aee_to_dischut(f)
        src = f.evaluate()
        tgt = brute_dischut(fh.T, fh.P, fh.Q, fh.delta, DIRECTED) is not None
        rep.check(src == (not tgt), "fopz flip equivalence", f)

        dim = rng.choice([1, 2])
        P = gen.rand_point_set(rng, dim, rng.randint(1, 4))
        Q = gen.rand_point_set(rng, dim, rng.randint(1, 4))
        v_src, _ = optimize(P, Q, UNDIRECTED, dim)
        P2, Q2 = undirected_to_directed(P, Q)
        v_tgt, _ = (
            solve_1d_opt(P2, Q2, DIRECTED) if dim == 1 else optimize(P2, Q2, DIRECTED, dim)
        )
        rep.check(v_src == v_tgt, "undirected-to-directed value", (P, Q))
    return rep


def suite_gadgets(seed: int, trials: int, max_size: int = 3) -> SuiteReport:
    rng = Random(seed)
    rep = SuiteReport("gadgets")
    for t in range(trials):
        u = rng.choice([2, 3])
        n = rng.choice([2, 2, min(3, max(2, max_size))])
        H = gen.rand_hypergraph(rng, u, 4, n)
        lam = rng.choice([Fraction(0), Fraction(1, 2), Fraction(1)])
        hut = lb_pipeline_lopsided(H, lam, 2)
        want = brute_hyperclique(H) is not None
        got = decide_2d(hut.P, hut.Q, hut.delta, DIRECTED) is not None
        rep.check(want == got, f"lopsided pipeline u={u} n={n}", H)
    return rep


def suite_pcd(seed: int, trials: int) -> SuiteReport:
    from .gadgets import decide_pipeline_output_3d

    rng = Random(seed)
    rep = SuiteReport("pcd3d")
    for t in range(trials):
        H = gen.rand_hypergraph(rng, 3, 9, 2)
        lam = rng.choice([Fraction(2, 3), Fraction(1)])
        hut = pcd_pipeline_3d(H, lam)
        want = brute_hyperclique(H) is not None
        got = decide_pipeline_output_3d(hut, H) is not None
        rep.check(want == got, "pcd pipeline", H)
    return rep


SUITES = {
    "solvers": suite_solvers,
    "reductions": suite_reductions,
    "gadgets": suite_gadgets,
    "pcd": suite_pcd,
}


def run_suites(names, trials: int, seed: int, max_size: int = 8) -> list[SuiteReport]:
    out = []
    for name in names:
        fn = SUITES[name]
        if name == "pcd":
            out.append(fn(seed, max(1, trials // 10)))
        elif name == "gadgets":
            out.append(fn(seed, trials, min(max_size, 3)))
        else:
            out.append(fn(seed, trials, max_size))
    return out
