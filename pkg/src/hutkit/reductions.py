"""Additive-problem reductions and the directed/undirected transfers.

Scale constants follow the source constructions, computed from input
extremes with explicit slack; each reduction records them in the returned
instance metadata together with the answer-flip flag where the target
verdict is the negation of the source verdict.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from .core import Box, Point, PointSet
from .errors import ContractViolation, FormatError, InvalidParameter
from .hausdorff import CONTINUOUS, DIRECTED, DISCRETE, HutInstance
from .unionops import complement_decompose

ZERO = Fraction(0)


@dataclass(frozen=True)
class MaxConvLbInstance:
    """Decide whether C[k] <= max_{i+j=k} (A[i]+B[j]) for all k in {2..n}."""

    A: tuple[int, ...]
    B: tuple[int, ...]
    C: tuple[int, ...]

    def __post_init__(self):
        if not (len(self.A) == len(self.B) == len(self.C)):
            raise FormatError("arrays must have equal length")
        if any(v <= 0 for arr in (self.A, self.B, self.C) for v in arr):
            raise FormatError("entries must be positive")


@dataclass(frozen=True)
class LinearAlignmentInstance:
    """Minimize max_i |(A[i]+c) - B[i+s]| over integer s and offset c."""

    A: tuple[Fraction, ...]
    B: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.B) < len(self.A):
            raise FormatError("B must be at least as long as A")
        for arr in (self.A, self.B):
            if any(x > y for x, y in zip(arr, arr[1:])):
                raise FormatError("arrays must be sorted")


@dataclass(frozen=True)
class NecklaceInstance:
    """Circular alignment of two sorted necklaces with entries in [0, 1)."""

    A: tuple[Fraction, ...]
    B: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.A) != len(self.B):
            raise FormatError("necklaces must have equal length")
        for arr in (self.A, self.B):
            if any(not (0 <= v < 1) for v in arr):
                raise FormatError("entries must lie in [0, 1)")
            if any(x > y for x, y in zip(arr, arr[1:])):
                raise FormatError("necklace arrays are kept sorted")


@dataclass(frozen=True)
class AllInts3SumInstance:
    A: tuple[int, ...]
    B: tuple[int, ...]
    C: tuple[int, ...]


@dataclass(frozen=True)
class BoxCoverInstance:
    """Decide: for all t in T there are p in P and a box with t + p inside."""

    T: PointSet
    P: PointSet
    boxes: tuple[Box, ...]

    def __post_init__(self):
        if self.T.dim != self.P.dim:
            raise ContractViolation("T and P dimensions differ")
        for b in self.boxes:
            if b.dim != self.T.dim:
                raise ContractViolation("box dimension mismatch")


@dataclass(frozen=True)
class FopzAtom:
    """Linear atom  alpha.a + beta.b <= gamma.c + shift  over integer vectors."""

    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    gamma: tuple[int, ...]
    shift: int


@dataclass(frozen=True)
class FopzAeeFormula:
    """forall a exists b exists c : DNF over at most three linear atoms."""

    a_set: tuple[tuple[int, ...], ...]
    b_set: tuple[tuple[int, ...], ...]
    c_set: tuple[tuple[int, ...], ...]
    atoms: tuple[FopzAtom, ...]
    dnf: tuple[tuple[tuple[int, bool], ...], ...]  # (atom index, negated)

    def __post_init__(self):
        if not 1 <= len(self.atoms) <= 3:
            raise FormatError("inequality dimension must be between 1 and 3")
        for clause in self.dnf:
            for idx, _ in clause:
                if not 0 <= idx < len(self.atoms):
                    raise FormatError("clause references an unknown atom")

    def atom_holds(self, k: int, a, b, c) -> bool:
        at = self.atoms[k]
        lhs = sum(x * y for x, y in zip(at.alpha, a))
        lhs += sum(x * y for x, y in zip(at.beta, b))
        rhs = sum(x * y for x, y in zip(at.gamma, c)) + at.shift
        return lhs <= rhs

    def matrix_holds(self, a, b, c) -> bool:
        return any(
            all(self.atom_holds(k, a, b, c) != neg for k, neg in clause)
            for clause in self.dnf
        )

    def evaluate(self) -> bool:
        return all(
            any(self.matrix_holds(a, b, c) for b in self.b_set for c in self.c_set)
            for a in self.a_set
        )


# --- directed/undirected transfer (folklore observation) --------------------


def undirected_to_directed(P: PointSet, Q: PointSet) -> tuple[PointSet, PointSet]:
    """P' = P u (sigma - Q), Q' = Q u (sigma - P) with sigma = (M, 0, ..., 0).

    For every translation with sup-norm below M/4 the undirected distance of
    (P+tau, Q) equals the directed distance of (P'+tau, Q'); the optima and
    their minimizers therefore agree.
    """
    if len(P) == 0 or len(Q) == 0:
        raise InvalidParameter("nonempty sets required")
    dim = P.dim
    coord_max = max(
        (abs(c) for ps in (P, Q) for p in ps for c in p.coords), default=ZERO
    )
    M = 10 * (1 + coord_max) * (len(P) + len(Q))
    sigma = Point((M,) + (ZERO,) * (dim - 1))
    P2 = tuple(P) + tuple(sigma - q for q in Q)
    Q2 = tuple(Q) + tuple(sigma - p for p in P)
    return PointSet(dim, P2), PointSet(dim, Q2)


# --- Linear Alignment / Necklace chain ---------------------------------------


def linear_alignment_to_hut1d(inst: LinearAlignmentInstance) -> HutInstance:
    """1-D directed HuT optimization instance with matching optimum.

    Recover (s, c) from a minimizing translation with
    linear_alignment_solution_from_tau.
    """
    n, m = len(inst.A), len(inst.B)
    M = _alignment_scale(inst)
    P = PointSet(1, tuple(Point((a + (i + 1) * M,)) for i, a in enumerate(inst.A)))
    Q = PointSet(1, tuple(Point((b + (j + 1) * M,)) for j, b in enumerate(inst.B)))
    return HutInstance(
        P=P, Q=Q, variant=DIRECTED, mode=CONTINUOUS,
        meta={"reduction": "linearalign", "M": M, "n": n, "m": m},
    )


def _alignment_scale(inst: LinearAlignmentInstance) -> Fraction:
    n, m = len(inst.A), len(inst.B)
    coord_max = max((abs(v) for v in inst.A + inst.B), default=ZERO)
    return max(Fraction(10), 10 * n * m * coord_max)


def linear_alignment_solution_from_tau(
    inst: LinearAlignmentInstance, tau: Fraction
) -> tuple[int, Fraction]:
    """Split tau = s*M + c with c nearest to zero; s is clamped into range."""
    M = _alignment_scale(inst)
    s = int((tau / M + Fraction(1, 2)).__floor__())
    c = tau - s * M
    s = max(0, min(len(inst.B) - len(inst.A), s))
    return s, c


def necklace_to_linear_alignment(inst: NecklaceInstance) -> LinearAlignmentInstance:
    """Duplicate B on the unrolled line so rotations become shifts."""
    B2 = tuple(inst.B) + tuple(b + 1 for b in inst.B)
    return LinearAlignmentInstance(tuple(inst.A), B2)


# --- MaxConv LowerBound to 1-D discrete HuT ----------------------------------


def maxconvlb_to_dischut1d(inst: MaxConvLbInstance) -> HutInstance:
    """Answer-flipping reduction: the DiscHuT instance is feasible exactly
    when the MaxConv LowerBound answer is NO.

    T indexes k in {2..n} only: the k = 1 translation would be feasible
    unconditionally (the max over an empty sum is vacuous), so it is
    excluded; see the decisions ledger.
    """
    n = len(inst.A)
    msum = max(inst.A) + max(inst.B) + max(inst.C)
    M = 4 * (msum + 1)  # divisible by four so all coordinates are integers
    q = M // 4
    T = [Point((Fraction(-(k * M + inst.C[k - 1])),)) for k in range(2, n + 1)]
    P = [Point((Fraction(i * M + inst.A[i - 1] + q),)) for i in range(1, n + 1)]
    Q = [Point((Fraction(-z * M + q),)) for z in range(-n, 1)]
    Q += [Point((Fraction(-(j * M + inst.B[j - 1])),)) for j in range(1, n + 1)]
    return HutInstance(
        P=PointSet(1, tuple(P)),
        Q=PointSet(1, tuple(Q)),
        variant=DIRECTED,
        mode=DISCRETE,
        delta=Fraction(q - 1),
        T=PointSet(1, tuple(T)),
        meta={"reduction": "maxconvlb", "M": M, "flip": True},
    )


# --- discrete HuT to BoxCover (complement trick) ------------------------------


def dischut_to_boxcover(
    T: PointSet, P: PointSet, Q: PointSet, delta: Fraction
) -> BoxCoverInstance:
    """Answer-flipping: BoxCover is YES exactly when directed DiscHuT is NO.

    On integer points the closed cube around q with radius delta equals the
    half-open integer box [q - floor(delta), q + floor(delta) + 1); the
    complement of the cube union inside a bounding box covering T + P is
    decomposed into disjoint half-open boxes and emitted closed.
    """
    dim = P.dim
    if dim > 3:
        raise ContractViolation("complement decomposition needs dim <= 3")
    if delta <= 0:
        raise InvalidParameter("delta must be positive")
    for ps in (T, P, Q):
        for p in ps:
            if any(c.denominator != 1 for c in p.coords):
                raise FormatError("integer inputs required")
    D = delta.__floor__()
    cubes = [
        Box(
            tuple(c - D for c in q.coords),
            tuple(c + D + 1 for c in q.coords),
        )
        for q in Q
    ]
    if len(T) and len(P):
        lo = tuple(
            min(t.coords[i] for t in T) + min(p.coords[i] for p in P) - 1
            for i in range(dim)
        )
        hi = tuple(
            max(t.coords[i] for t in T) + max(p.coords[i] for p in P) + 2
            for i in range(dim)
        )
    else:
        lo = tuple(ZERO for _ in range(dim))
        hi = tuple(Fraction(1) for _ in range(dim))
    parts = complement_decompose(cubes, Box(lo, hi))
    closed = tuple(
        Box(b.lo, tuple(h - 1 for h in b.hi))
        for b in parts
        if all(h - 1 >= l for l, h in zip(b.lo, b.hi))
    )
    return BoxCoverInstance(T, P, closed)


def boxcover_decide(inst: BoxCoverInstance) -> bool:
    """Direct evaluation with a sorted first-axis prefilter."""
    from bisect import bisect_right

    boxes = sorted(inst.boxes, key=lambda b: b.lo[0])
    lows = [b.lo[0] for b in boxes]
    dim = inst.T.dim
    for t in inst.T:
        hit = False
        for p in inst.P:
            x = tuple(a + b for a, b in zip(t.coords, p.coords))
            for b in boxes[: bisect_right(lows, x[0])]:
                if all(b.lo[i] <= x[i] <= b.hi[i] for i in range(dim)):
                    hit = True
                    break
            if hit:
                break
        if not hit:
            return False
    return True


# --- FOPZ(forall exists exists) to discrete HuT -------------------------------


def fopz_aee_to_dischut(f: FopzAeeFormula) -> HutInstance:
    """Answer-flipping reduction into 2k-dimensional discrete HuT, where k
    is the number of atoms (the inequality dimension, at most three).

    Orthant solution spaces of the co-clauses are capped to congruent cubes,
    their union complement is decomposed into boxes, and box membership of
    a' + b' is realized as a cube condition in doubled dimension.
    """
    na = len(f.atoms)
    avecs = sorted(
        {
            tuple(sum(x * y for x, y in zip(at.alpha, a)) for at in f.atoms)
            for a in f.a_set
        }
    )
    bvecs = sorted(
        {
            tuple(sum(x * y for x, y in zip(at.beta, b)) for at in f.atoms)
            for b in f.b_set
        }
    )
    cvecs = sorted(
        {
            tuple(
                sum(x * y for x, y in zip(at.gamma, c)) + at.shift for at in f.atoms
            )
            for c in f.c_set
        }
    )
    if not avecs or not bvecs or not cvecs:
        raise InvalidParameter("empty quantifier domain")

    r_ab = max(
        abs(x + y) for av in avecs for bv in bvecs for x, y in zip(av, bv)
    )
    r_c = max(abs(x) for cv in cvecs for x in cv)
    R = r_ab + r_c + 2

    cubes = []
    for clause in f.dnf:
        referenced: dict[int, bool] = {}
        consistent = True
        for k, neg in clause:
            if referenced.get(k, neg) != neg:
                consistent = False  # atom with both polarities: empty clause
                break
            referenced[k] = neg
        if not consistent:
            continue
        for cv in cvecs:
            lo, hi = [], []
            for k in range(na):
                if k in referenced and not referenced[k]:
                    lo.append(Fraction(cv[k] - 2 * R))
                    hi.append(Fraction(cv[k]))
                elif k in referenced:
                    lo.append(Fraction(cv[k] + 1))
                    hi.append(Fraction(cv[k] + 1 + 2 * R))
                else:
                    lo.append(Fraction(-R))
                    hi.append(Fraction(R))
            cubes.append(Box(tuple(lo), tuple(hi)))

    # half-open world shift: closed integer [lo, hi] becomes [lo, hi + 1)
    halfopen = [
        Box(b.lo, tuple(h + 1 for h in b.hi)) for b in cubes
    ]
    bound = Box(
        tuple(Fraction(-r_ab - 1) for _ in range(na)),
        tuple(Fraction(r_ab + 2) for _ in range(na)),
    )
    parts = complement_decompose(halfopen, bound)
    boxes = [
        Box(b.lo, tuple(h - 1 for h in b.hi))
        for b in parts
        if all(h - 1 >= l for l, h in zip(b.lo, b.hi))
    ]

    delta = Fraction(4 * R + 8)
    T = [Point(_double(av)) for av in avecs]
    P = [Point(_double(bv)) for bv in bvecs]
    Q = [
        Point(
            tuple(
                val
                for i in range(na)
                for val in (b.hi[i] - delta, -b.lo[i] - delta)
            )
        )
        for b in boxes
    ]
    return HutInstance(
        P=PointSet(2 * na, tuple(P)),
        Q=PointSet(2 * na, tuple(Q)),
        variant=DIRECTED,
        mode=DISCRETE,
        delta=delta,
        T=PointSet(2 * na, tuple(T)),
        meta={"reduction": "fopz", "R": R, "flip": True},
    )


def _double(vec) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for x in vec for v in (x, -x))
