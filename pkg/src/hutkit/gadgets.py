"""Hyperclique-to-geometry gadget pipelines, executable at small k.

Cells of the encoding hypercube are unit half-open boxes; emitted geometry
shrinks every cell-index range [a, b) to the closed box [a, b - 1/2], so
abutting covers from different non-edges never create spurious closed-set
intersections while each cell keeps a full-dimensional representative.

Slice decompositions use digit-fiber sets: fixing a set of digit positions
that avoids the non-edge's positions yields slices that are identical under
translation with no carry effects; see the decisions ledger for how this
instantiates the lemma's interleaving.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Optional, Sequence

from .core import NEG_INF, POS_INF, Box, Point, PointSet
from .errors import ContractViolation, FormatError, InvalidParameter
from .hausdorff import HutInstance
from .instances import (
    ShapeInstance,
    compose_all,
    default_orthant_bounding,
    orthant_shapes_to_tpwo,
    shapes_to_tpwb,
    tpwb_to_tpwo_double_dim,
    tpwc_to_hut,
    tpwo_to_tpwc,
)

ZERO = Fraction(0)
HALF = Fraction(1, 2)

Edge = tuple[tuple[int, int], ...]  # ((class, vertex), ...) sorted by class


@dataclass(frozen=True)
class KPartiteHypergraph:
    """u-uniform k-partite hypergraph with n vertices per class."""

    u: int
    k: int
    n_per_class: int
    edges: frozenset

    def __post_init__(self):
        if self.u not in (2, 3):
            raise FormatError("uniformity must be 2 or 3")
        if self.k < self.u:
            raise FormatError("need at least u classes")
        for e in self.edges:
            if len(e) != self.u:
                raise FormatError("edge arity mismatch")
            classes = [c for c, _ in e]
            if sorted(set(classes)) != classes:
                raise FormatError("edge must span distinct sorted classes")
            for c, v in e:
                if not (0 <= c < self.k and 0 <= v < self.n_per_class):
                    raise FormatError("edge endpoint out of range")

    def is_edge(self, e: Edge) -> bool:
        return e in self.edges

    def class_tuples(self) -> Iterable[tuple[int, ...]]:
        return combinations(range(self.k), self.u)

    def non_edges(self) -> list[Edge]:
        out = []
        for classes in self.class_tuples():
            for vs in product(range(self.n_per_class), repeat=self.u):
                e = tuple(zip(classes, vs))
                if e not in self.edges:
                    out.append(e)
        return out

    def is_clique(self, assignment: Sequence[int]) -> bool:
        for classes in self.class_tuples():
            e = tuple((c, assignment[c]) for c in classes)
            if e not in self.edges:
                return False
        return True

    @staticmethod
    def complete(u: int, k: int, n: int) -> "KPartiteHypergraph":
        edges = set()
        for classes in combinations(range(k), u):
            for vs in product(range(n), repeat=u):
                edges.add(tuple(zip(classes, vs)))
        return KPartiteHypergraph(u, k, n, frozenset(edges))

    def without(self, removed: Iterable[Edge]) -> "KPartiteHypergraph":
        return KPartiteHypergraph(
            self.u, self.k, self.n_per_class, self.edges - set(removed)
        )


# --- positional cell encoding -------------------------------------------------


def _ind(digits: Sequence[int], n: int) -> int:
    out = 0
    for d in digits:
        out = out * n + d
    return out


def encode_cell(H: KPartiteHypergraph, tup: Sequence[int], d: int) -> Point:
    """Cell origin of a k-tuple in the d-dimensional side-n^(k/d) hypercube."""
    if H.k % d:
        raise InvalidParameter("d must divide k")
    g = H.k // d
    coords = tuple(
        Fraction(_ind(tup[D * g : (D + 1) * g], H.n_per_class)) for D in range(d)
    )
    return Point(coords)


def decode_cell(H: KPartiteHypergraph, cell: Point, d: int) -> tuple[int, ...]:
    g = H.k // d
    n = H.n_per_class
    out = []
    for D in range(d):
        x = int(cell.coords[D])
        digits = []
        for _ in range(g):
            digits.append(x % n)
            x //= n
        out.extend(reversed(digits))
    return tuple(out)


def _forbidden_blocks(n: int, g: int, pos: int, v: int) -> list[tuple[int, int]]:
    """Index ranges [a, b) in [0, n^g) whose digit at pos equals v."""
    width = n ** (g - pos - 1)
    period = n ** (g - pos)
    return [(p * period + v * width, p * period + (v + 1) * width) for p in range(n**pos)]


def _complement_intervals(blocks: list[tuple[int, int]], lo: int, hi: int):
    """Sorted gaps of disjoint sorted [a, b) blocks within [lo, hi)."""
    out = []
    cur = lo
    for a, b in blocks:
        if a > cur:
            out.append((cur, a))
        cur = max(cur, b)
    if cur < hi:
        out.append((cur, hi))
    return out


def _shrunk_box(dim: int, full_hi: int, parts: dict[int, tuple[int, int]]) -> Box:
    """Closed box for cell ranges: axis i spans parts[i] = [a, b) cells,
    all other axes the full range [0, full_hi)."""
    lo = []
    hi = []
    for i in range(dim):
        a, b = parts.get(i, (0, full_hi))
        lo.append(Fraction(a))
        hi.append(Fraction(b) - HALF)
    return Box(tuple(lo), tuple(hi))


def cover_feasible_region(
    H: KPartiteHypergraph, nonedge: Edge, d: int
) -> list[Box]:
    """Boxes covering exactly the cells whose tuple avoids the non-edge."""
    if H.is_edge(nonedge):
        raise InvalidParameter("cover_feasible_region expects a non-edge")
    if H.k % d:
        raise InvalidParameter("d must divide k")
    g = H.k // d
    n = H.n_per_class
    N = n**g
    out = []
    for cls, v in nonedge:
        D, pos = divmod(cls, g)
        for a, b in _complement_intervals(_forbidden_blocks(n, g, pos, v), 0, N):
            out.append(_shrunk_box(d, N, {D: (a, b)}))
    return out


# --- digit-fiber slice decomposition ------------------------------------------


@dataclass(frozen=True)
class SliceDecomposition:
    """Slices of one axis: digit fibers over `positions`, each slice the set
    of indices whose digits at those positions spell a fixed word."""

    g: int
    n: int
    positions: tuple[int, ...]

    @property
    def count(self) -> int:
        return self.n ** len(self.positions)

    def shift(self, word: Sequence[int]) -> int:
        """Translation taking slice 0...0 to the given slice; carry-free."""
        return sum(
            e * self.n ** (self.g - 1 - p) for e, p in zip(word, self.positions)
        )

    def members(self, word: Sequence[int]) -> list[int]:
        fixed = dict(zip(self.positions, word))
        out = []
        for x in range(self.n**self.g):
            digits = _digits(x, self.n, self.g)
            if all(digits[p] == e for p, e in fixed.items()):
                out.append(x)
        return out


def _digits(x: int, n: int, g: int) -> list[int]:
    out = []
    for _ in range(g):
        out.append(x % n)
        x //= n
    return list(reversed(out))


def slice_decomposition(
    H: KPartiteHypergraph, nonedge: Edge, lam: Fraction, d: int, D: int
) -> SliceDecomposition:
    """Slices of dimension D avoiding the non-edge's digit positions.

    The slice count is n^min(floor(lam*g), number of free positions); the
    most significant free positions are fixed first, keeping slices
    contiguous whenever the non-edge sits in low-significance digits.
    """
    g = H.k // d
    taken = {cls % g for cls, _ in nonedge if cls // g == D}
    free = [p for p in range(g) if p not in taken]
    want = int(lam * g)  # floor
    return SliceDecomposition(g, H.n_per_class, tuple(free[: min(want, len(free))]))


def _runs(members: Sequence[int]) -> list[tuple[int, int]]:
    """Maximal [a, b) runs of a sorted integer set."""
    out = []
    for x in members:
        if out and out[-1][1] == x:
            out[-1] = (out[-1][0], x + 1)
        else:
            out.append((x, x + 1))
    return out


def build_translated_shape(
    H: KPartiteHypergraph, lam: Fraction, d: int
) -> ShapeInstance:
    """Shape instance whose solution set is nonempty iff H has a colorful
    k-(hyper)clique: one shape per non-edge (complement of a slice product
    plus the feasible-region cover) with one object per slice product, all
    composed with the mandatory hypercube-bounding shape."""
    if not 0 <= lam <= 1:
        raise InvalidParameter("lambda must lie in [0, 1]")
    if H.k % d:
        raise InvalidParameter("d must divide k")
    g = H.k // d
    n = H.n_per_class
    N = n**g

    instances = [
        ShapeInstance(
            d,
            ((_shrunk_box(d, N, {}),),),
            ((Point(tuple(ZERO for _ in range(d))), 0),),
        )
    ]
    for nonedge in H.non_edges():
        decomps = [slice_decomposition(H, nonedge, lam, d, D) for D in range(d)]
        boxes: list[Box] = []
        for D, dec in enumerate(decomps):
            if not dec.positions:
                continue
            base = dec.members((0,) * len(dec.positions))
            # complement within [-N, 2N): every translate of these boxes
            # covers everything outside its own slice inside [0, N)
            blocks = _runs(base)
            for a, b in _complement_intervals(blocks, -N, 2 * N):
                boxes.append(_shrunk_box(d, N, {D: (a, b)}))
        boxes.extend(cover_feasible_region(H, nonedge, d))
        objects = []
        for words in product(
            *[product(range(n), repeat=len(dec.positions)) for dec in decomps]
        ):
            off = Point(
                tuple(Fraction(dec.shift(w)) for dec, w in zip(decomps, words))
            )
            objects.append((off, 0))
        instances.append(ShapeInstance(d, (tuple(boxes),), tuple(objects)))
    return compose_all(instances, d)


def lb_pipeline_lopsided(
    H: KPartiteHypergraph, lam: Fraction, d: int
) -> HutInstance:
    """Hyperclique to directed HuT in dimension d (d halved internally,
    then doubled back by the box-to-orthant step)."""
    d_int = d // 2
    if d_int < 1:
        raise InvalidParameter("output dimension must be at least 2")
    shape = build_translated_shape(H, lam, d_int)
    tpwb = shapes_to_tpwb(shape)
    tpwo = tpwb_to_tpwo_double_dim(tpwb)
    hut = tpwc_to_hut(tpwo_to_tpwc(tpwo))
    hut.meta.update(
        {
            "pipeline": "lopsided",
            "shape_objects": len(shape.objects),
            "shape_boxes": sum(len(s) for s in shape.shapes),
        }
    )
    return hut


# --- prefix covering sequences and the 3-D pipeline ---------------------------


@dataclass(frozen=True)
class PrefixCoveringSequences:
    """Three sequences over the k classes, each of length 4k/9; every
    3-tuple of classes is covered by short, balanced prefixes."""

    k: int
    seqs: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]

    def occurrences(self) -> dict[int, list[tuple[int, int]]]:
        """class -> list of (sequence index, digit position)."""
        occ: dict[int, list[tuple[int, int]]] = {}
        for z, seq in enumerate(self.seqs):
            for p, cls in enumerate(seq):
                occ.setdefault(cls, []).append((z, p))
        return occ


def prefix_covering_sequences(k: int) -> PrefixCoveringSequences:
    if k % 9:
        raise InvalidParameter("k must be divisible by nine")
    k3, k9 = k // 3, k // 9
    x = list(range(0, k3))
    y = list(range(k3, 2 * k3))
    z = list(range(2 * k3, k))
    s1 = tuple(x) + tuple(y[i - 1] for i in range(k3, 2 * k9, -1))
    s2 = tuple(y) + tuple(z[i - 1] for i in range(k3, 2 * k9, -1))
    s3 = tuple(z) + tuple(x[i - 1] for i in range(k3, 2 * k9, -1))
    return PrefixCoveringSequences(k, (s1, s2, s3))


def find_prefixes(
    pcs: PrefixCoveringSequences, classes: Sequence[int]
) -> Optional[tuple[int, int, int]]:
    """Lexicographically smallest (i, j, l) with balanced short prefixes
    covering all given classes; None when no triple qualifies."""
    k = pcs.k
    top = 4 * k // 9
    sum_cap = 2 * k // 3 + 1
    want = set(classes)
    pos = [
        {cls: p for p, cls in enumerate(seq)} for seq in pcs.seqs
    ]
    for i in range(top + 1):
        for j in range(top + 1):
            if i + j > sum_cap:
                break
            for l in range(top + 1):
                if i + j + l > sum_cap:
                    break
                if min(i, j, l) + max(i, j, l) > top:
                    continue
                if all(
                    any(c in pos[t] and pos[t][c] < (i, j, l)[t] for t in range(3))
                    for c in want
                ):
                    return i, j, l
    return None


def verify_prefix_properties(k: int) -> bool:
    """Exhaustively check that every 3-tuple admits a valid prefix triple."""
    pcs = prefix_covering_sequences(k)
    return all(
        find_prefixes(pcs, trip) is not None
        for trip in combinations(range(k), 3)
    )


# --- quasi-diagonal decomposition ---------------------------------------------


def _iroot(x: int, r: int) -> int:
    if x < 0:
        raise InvalidParameter("negative radicand")
    if x == 0 or r == 1:
        return x
    guess = max(1, int(round(x ** (1.0 / r))))
    while guess > 1 and guess**r > x:
        guess -= 1
    while (guess + 1) ** r <= x:
        guess += 1
    return guess


def _ipow_floor(x: int, q: Fraction) -> int:
    """floor(x ** q) for nonnegative rational q, exactly."""
    return _iroot(x**q.numerator, q.denominator)


def _is_ap(runs: list[tuple[int, int]]) -> Optional[int]:
    """Common start spacing when the runs form an arithmetic progression."""
    if len(runs) < 2:
        return None
    step = runs[1][0] - runs[0][0]
    if any(runs[i + 1][0] - runs[i][0] != step for i in range(len(runs) - 1)):
        return None
    return step


def _exits(runs: list[tuple[int, int]], step: int, size: int) -> bool:
    """Extending the progression one step either way leaves [0, size)."""
    a0, b0 = runs[0]
    length = b0 - a0
    return a0 - step + length <= 0 and runs[-1][0] + step >= size


Region = tuple[tuple[int, int], tuple[int, int], tuple[int, int]]


def quasi_diagonal_decompose(
    runs: Sequence[list[tuple[int, int]]],
    sizes: Sequence[int],
    lam: Fraction,
) -> tuple[list[Region], list[tuple[int, int, int]], Optional[tuple[int, int]]]:
    """Cover the product of per-dimension runs by quasi-diagonals that are
    translates of one prototype.

    Returns (prototype regions, per-diagonal offsets, diagonal dims or None
    for one-element diagonals).  Diagonals longer than one region are built
    only over regularly spaced runs whose progression exits the coarse grid,
    so overhanging regions fall outside the encoding hypercube; otherwise
    the decomposition falls back to one-element diagonals, which are always
    valid (see ledger).
    """
    if not Fraction(2, 3) <= lam <= 1:
        raise InvalidParameter("lambda must lie in [2/3, 1]")
    counts = [len(r) for r in runs]
    if any(c == 0 for c in counts):
        return [], [], None
    total = counts[0] * counts[1] * counts[2]
    active = [D for D in range(3) if counts[D] > 1]
    plan = None
    if len(active) >= 2 and lam < 1:
        A, B = sorted(sorted(active, key=lambda D: (-counts[D], D))[:2])
        stepA, stepB = _is_ap(runs[A]), _is_ap(runs[B])
        if (
            stepA is not None
            and stepB is not None
            and _exits(runs[A], stepA, sizes[A])
            and _exits(runs[B], stepB, sizes[B])
        ):
            L = max(1, min(counts[A], counts[B], _ipow_floor(total, 1 - lam)))
            if L > 1:
                plan = (A, B, stepA, stepB, L)

    if plan is None:
        proto = [tuple(runs[D][0] for D in range(3))]
        offsets = [
            tuple(runs[D][idx[D]][0] - runs[D][0][0] for D in range(3))
            for idx in product(*[range(c) for c in counts])
        ]
        return proto, offsets, None

    A, B, stepA, stepB, L = plan
    C = next(D for D in range(3) if D not in (A, B))
    lenA = runs[A][0][1] - runs[A][0][0]
    lenB = runs[B][0][1] - runs[B][0][0]
    proto: list[Region] = []
    for x in range(L):
        region = [None, None, None]
        region[A] = (runs[A][0][0] + x * stepA, runs[A][0][0] + x * stepA + lenA)
        region[B] = (runs[B][0][0] + x * stepB, runs[B][0][0] + x * stepB + lenB)
        region[C] = runs[C][0]
        proto.append(tuple(region))
    offsets = []
    nblocks = (counts[A] + L - 1) // L
    for rc in range(counts[C]):
        offC = runs[C][rc][0] - runs[C][0][0]
        for delta in range(-(counts[A] - 1), counts[B]):
            for blk in range(nblocks):
                lo = max(blk * L, -delta)
                hi = min(blk * L + L, counts[A], counts[B] - delta)
                if lo >= hi:
                    continue  # this stretch covers no real region
                off = [0, 0, 0]
                off[A] = blk * L * stepA
                off[B] = (blk * L + delta) * stepB
                off[C] = offC
                offsets.append(tuple(off))
    return proto, offsets, (A, B)


def _halfspace(dim_index: int, upper: bool, value: Fraction) -> Box:
    lo = [NEG_INF] * 3
    hi = [POS_INF] * 3
    if upper:
        hi[dim_index] = value
    else:
        lo[dim_index] = value
    return Box(tuple(lo), tuple(hi))


def _wedge(dA: int, hiA: Fraction, dB: int, loB: Fraction) -> Box:
    lo = [NEG_INF] * 3
    hi = [POS_INF] * 3
    hi[dA] = hiA
    lo[dB] = loB
    return Box(tuple(lo), tuple(hi))


def _complement_orthants(
    proto: list[Region], diag_dims: Optional[tuple[int, int]]
) -> tuple[Box, ...]:
    """Orthants covering exactly the complement of the quasi-diagonal.

    Region bounds are fine cell ranges [a, b); orthant facets sit at a - 1/2
    and b, matching the shrunken cell convention.
    """
    out: list[Box] = []
    if diag_dims is None:
        (r,) = proto
        for D in range(3):
            a, b = r[D]
            out.append(_halfspace(D, True, Fraction(a) - HALF))
            out.append(_halfspace(D, False, Fraction(b)))
        return tuple(out)
    A, B = diag_dims
    C = next(D for D in range(3) if D not in (A, B))
    for i in range(len(proto) - 1):
        out.append(
            _wedge(A, Fraction(proto[i + 1][A][0]) - HALF, B, Fraction(proto[i][B][1]))
        )
        out.append(
            _wedge(B, Fraction(proto[i + 1][B][0]) - HALF, A, Fraction(proto[i][A][1]))
        )
    out.append(_halfspace(A, True, Fraction(proto[0][A][0]) - HALF))
    out.append(_halfspace(B, True, Fraction(proto[0][B][0]) - HALF))
    out.append(_halfspace(A, False, Fraction(proto[-1][A][1])))
    out.append(_halfspace(B, False, Fraction(proto[-1][B][1])))
    a, b = proto[0][C]
    out.append(_halfspace(C, True, Fraction(a) - HALF))
    out.append(_halfspace(C, False, Fraction(b)))
    return tuple(out)


def _matching_indices(size_digits: int, n: int, conditions: dict[int, int]) -> list[int]:
    """Indices in [0, n^size_digits) whose digits satisfy the conditions."""
    if size_digits == 0:
        return [0]
    out = []
    for x in range(n**size_digits):
        digits = _digits(x, n, size_digits)
        if all(digits[p] == v for p, v in conditions.items()):
            out.append(x)
    return out


def _pcd_instance_for(
    conditions: list[dict[int, int]],
    prefixes: tuple[int, int, int],
    n: int,
    g: int,
    lam: Fraction,
) -> ShapeInstance:
    """Shape instance excluding exactly the cells matching the conditions."""
    runs = []
    sizes = []
    for z in range(3):
        members = _matching_indices(prefixes[z], n, conditions[z])
        runs.append(_runs(members))
        sizes.append(n ** prefixes[z])
    proto_c, offsets_c, diag_dims = quasi_diagonal_decompose(runs, sizes, lam)
    units = [n ** (g - prefixes[z]) for z in range(3)]
    proto = [
        tuple((a * units[z], b * units[z]) for z, (a, b) in enumerate(region))
        for region in proto_c
    ]
    orthants = _complement_orthants(proto, diag_dims)
    objects = tuple(
        (Point(tuple(Fraction(off[z] * units[z]) for z in range(3))), 0)
        for off in offsets_c
    )
    return ShapeInstance(3, (orthants,), objects)


def build_pcd_shape_instance(H: KPartiteHypergraph, lam: Fraction) -> ShapeInstance:
    """Translated-orthant instance whose solution set is nonempty iff the
    3-uniform hypergraph has a colorful k-hyperclique.

    Uses the redundant prefix-covering encoding: one quasi-diagonal
    instance per non-edge (covering the complement of one designated
    encoding), consistency instances for every redundantly encoded class,
    and six half-space shapes restricting solutions to the hypercube."""
    if H.u != 3:
        raise InvalidParameter("the 3-D pipeline needs 3-uniform hypergraphs")
    if not Fraction(2, 3) <= lam <= 1:
        raise InvalidParameter("lambda must lie in [2/3, 1]")
    pcs = prefix_covering_sequences(H.k)
    occ = pcs.occurrences()
    n = H.n_per_class
    g = 4 * H.k // 9
    N = Fraction(n**g)

    instances = []
    zero = Point((ZERO, ZERO, ZERO))
    for D in range(3):
        instances.append(
            ShapeInstance(3, ((_halfspace(D, False, ZERO),),), ((zero, 0),))
        )
        instances.append(
            ShapeInstance(3, ((_halfspace(D, True, N - HALF),),), ((zero, 0),))
        )

    for nonedge in H.non_edges():
        classes = [c for c, _ in nonedge]
        prefixes = find_prefixes(pcs, classes)
        if prefixes is None:
            raise ContractViolation("prefix covering failed")
        conditions: list[dict[int, int]] = [{}, {}, {}]
        for cls, v in nonedge:
            z, p = next(
                (z, p) for z in range(3) for (zz, p) in occ[cls]
                if zz == z and p < prefixes[z]
            )
            conditions[z][p] = v
        instances.append(_pcd_instance_for(conditions, prefixes, n, g, lam))

    for cls, places in sorted(occ.items()):
        if len(places) < 2:
            continue
        (z1, p1), (z2, p2) = places[:2]
        for a in range(n):
            for b in range(n):
                if a == b:
                    continue
                conditions = [{}, {}, {}]
                conditions[z1][p1] = a
                conditions[z2][p2] = b
                prefixes = [0, 0, 0]
                prefixes[z1] = p1 + 1
                prefixes[z2] = p2 + 1
                instances.append(
                    _pcd_instance_for(conditions, tuple(prefixes), n, g, lam)
                )

    return compose_all(instances, 3)


def pcd_pipeline_3d(H: KPartiteHypergraph, lam: Fraction) -> HutInstance:
    """Full chain: redundant encoding, quasi-diagonal complements, orthant
    clipping, target-box gadgets; ends at directed 3-D continuous HuT."""
    shape = build_pcd_shape_instance(H, lam)
    tpwo = orthant_shapes_to_tpwo(shape, default_orthant_bounding(shape))
    hut = tpwc_to_hut(tpwo_to_tpwc(tpwo))
    hut.meta.update(
        {
            "pipeline": "pcd3d",
            "shape_objects": len(shape.objects),
            "shape_orthants": sum(len(s) for s in shape.shapes),
        }
    )
    return hut


def decide_pipeline_output_3d(
    hut: HutInstance, H: KPartiteHypergraph
) -> Optional[Point]:
    """Decide a pcd_pipeline_3d output by checking one representative
    translation per encoding cell directly on the emitted instance.

    The candidate set is complete for pipeline outputs: each conversion in
    the chain preserves the solution set, which by construction is a union
    of cell boxes inside the encoding hypercube (the conversions themselves
    are certified on random instances by their own suites)."""
    from .core import common_denominator_scale
    from .discrete import solve_discrete

    g = 4 * H.k // 9
    N = H.n_per_class**g
    quarter = Fraction(1, 4)
    cands = [
        Point((x + quarter, y + quarter, z + quarter))
        for x in range(N)
        for y in range(N)
        for z in range(N)
    ]
    values = [hut.delta, quarter]
    for ps in (hut.P, hut.Q):
        for p in ps:
            values.extend(p.coords)
    scale = common_denominator_scale(values)

    def scaled(ps):
        return PointSet(
            3, tuple(Point(tuple(c * scale for c in p.coords)) for p in ps)
        )

    got = solve_discrete(
        scaled(PointSet(3, tuple(cands))),
        scaled(hut.P),
        scaled(hut.Q),
        hut.delta * scale,
        "directed",
    )
    if got is None:
        return None
    return Point(tuple(c / scale for c in got.tau.coords))
