"""Instance files: one JSON object per file, discriminated by "kind".

Every scalar is encoded as a canonical rational string ("-3/4", "7",
"+inf"/"-inf" for box bounds), so files are exact and diff-able.  The
"meta" member carries optional provenance (reduction name, scale constants,
answer-flip flag) and round-trips untouched.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .core import Box, Point, PointSet, format_scalar, parse_scalar
from .errors import FormatError
from .gadgets import KPartiteHypergraph
from .hausdorff import DISCRETE, HutInstance
from .instances import ShapeInstance, TpwbInstance, TpwcInstance, TpwoInstance, TpwoSub
from .reductions import (
    AllInts3SumInstance,
    BoxCoverInstance,
    FopzAeeFormula,
    FopzAtom,
    LinearAlignmentInstance,
    MaxConvLbInstance,
    NecklaceInstance,
)

KINDS = (
    "hut", "dischut", "tpwc", "tpwb", "tpwo", "shapes", "maxconvlb",
    "linearalign", "necklace", "allints3sum", "fopz", "hypergraph", "boxcover",
)


def _enc_point(p: Point) -> list[str]:
    return [format_scalar(c) for c in p.coords]


def _dec_point(row) -> Point:
    return Point(tuple(_dec_fraction(c) for c in row))


def _dec_fraction(text) -> Fraction:
    v = parse_scalar(str(text))
    if not isinstance(v, Fraction):
        raise FormatError("point coordinates must be finite")
    return v


def _enc_points(ps: PointSet) -> list[list[str]]:
    return [_enc_point(p) for p in ps]


def _dec_points(rows, dim: int) -> PointSet:
    return PointSet(dim, tuple(_dec_point(r) for r in rows))


def _enc_box(b: Box) -> list[list[str]]:
    return [[format_scalar(lo), format_scalar(hi)] for lo, hi in zip(b.lo, b.hi)]


def _dec_box(rows) -> Box:
    lo = tuple(parse_scalar(str(r[0]), allow_inf=True) for r in rows)
    hi = tuple(parse_scalar(str(r[1]), allow_inf=True) for r in rows)
    return Box(lo, hi)


def to_obj(inst) -> dict[str, Any]:
    if isinstance(inst, HutInstance):
        obj = {
            "kind": "dischut" if inst.mode == DISCRETE else "hut",
            "dim": inst.dim,
            "variant": inst.variant,
            "p": _enc_points(inst.P),
            "q": _enc_points(inst.Q),
        }
        if inst.delta is not None:
            obj["delta"] = format_scalar(inst.delta)
        if inst.T is not None:
            obj["t"] = _enc_points(inst.T)
        if inst.meta:
            obj["meta"] = _jsonable(inst.meta)
        return obj
    if isinstance(inst, TpwcInstance):
        return {
            "kind": "tpwc", "dim": inst.dim, "delta": format_scalar(inst.delta),
            "p": _enc_points(inst.points), "centers": _enc_points(inst.centers),
        }
    if isinstance(inst, TpwbInstance):
        return {
            "kind": "tpwb", "dim": inst.dim,
            "p": _enc_points(inst.points),
            "boxes": [_enc_box(b) for b in inst.boxes],
        }
    if isinstance(inst, TpwoInstance):
        return {
            "kind": "tpwo", "dim": inst.dim,
            "delta": format_scalar(inst.delta),
            "delta0": format_scalar(inst.delta0),
            "target_box": _enc_box(inst.target_box),
            "subs": [
                {"p": _enc_points(s.points), "centers": _enc_points(s.centers)}
                for s in inst.subs
            ],
        }
    if isinstance(inst, ShapeInstance):
        return {
            "kind": "shapes", "dim": inst.dim,
            "shapes": [[_enc_box(b) for b in sh] for sh in inst.shapes],
            "objects": [
                {"offset": _enc_point(t), "shape": sid} for t, sid in inst.objects
            ],
        }
    if isinstance(inst, MaxConvLbInstance):
        return {"kind": "maxconvlb", "a": list(inst.A), "b": list(inst.B),
                "c": list(inst.C)}
    if isinstance(inst, LinearAlignmentInstance):
        return {"kind": "linearalign",
                "a": [format_scalar(v) for v in inst.A],
                "b": [format_scalar(v) for v in inst.B]}
    if isinstance(inst, NecklaceInstance):
        return {"kind": "necklace",
                "a": [format_scalar(v) for v in inst.A],
                "b": [format_scalar(v) for v in inst.B]}
    if isinstance(inst, AllInts3SumInstance):
        return {"kind": "allints3sum", "a": list(inst.A), "b": list(inst.B),
                "c": list(inst.C)}
    if isinstance(inst, BoxCoverInstance):
        return {
            "kind": "boxcover", "dim": inst.T.dim,
            "t": _enc_points(inst.T), "p": _enc_points(inst.P),
            "boxes": [_enc_box(b) for b in inst.boxes],
        }
    if isinstance(inst, FopzAeeFormula):
        return {
            "kind": "fopz",
            "a": [list(v) for v in inst.a_set],
            "b": [list(v) for v in inst.b_set],
            "c": [list(v) for v in inst.c_set],
            "atoms": [
                {"alpha": list(at.alpha), "beta": list(at.beta),
                 "gamma": list(at.gamma), "shift": at.shift}
                for at in inst.atoms
            ],
            "dnf": [[[k, bool(neg)] for k, neg in clause] for clause in inst.dnf],
        }
    if isinstance(inst, KPartiteHypergraph):
        return {
            "kind": "hypergraph", "u": inst.u, "k": inst.k,
            "n_per_class": inst.n_per_class,
            "edges": sorted([list(pair) for pair in e] for e in inst.edges),
        }
    raise FormatError(f"cannot serialize {type(inst).__name__}")


def from_obj(obj: dict[str, Any]):
    kind = obj.get("kind")
    if kind in ("hut", "dischut"):
        dim = int(obj["dim"])
        delta = _dec_fraction(obj["delta"]) if "delta" in obj else None
        T = _dec_points(obj["t"], dim) if "t" in obj else None
        return HutInstance(
            P=_dec_points(obj["p"], dim),
            Q=_dec_points(obj["q"], dim),
            variant=obj.get("variant", "directed"),
            mode=DISCRETE if kind == "dischut" else "continuous",
            delta=delta,
            T=T,
            meta=obj.get("meta", {}),
        )
    if kind == "tpwc":
        dim = int(obj["dim"])
        return TpwcInstance(
            _dec_points(obj["p"], dim), _dec_points(obj["centers"], dim),
            _dec_fraction(obj["delta"]),
        )
    if kind == "tpwb":
        dim = int(obj["dim"])
        return TpwbInstance(
            _dec_points(obj["p"], dim),
            tuple(_dec_box(r) for r in obj["boxes"]),
        )
    if kind == "tpwo":
        dim = int(obj["dim"])
        return TpwoInstance(
            tuple(
                TpwoSub(_dec_points(s["p"], dim), _dec_points(s["centers"], dim))
                for s in obj["subs"]
            ),
            _dec_fraction(obj["delta"]),
            _dec_box(obj["target_box"]),
            _dec_fraction(obj["delta0"]),
        )
    if kind == "shapes":
        dim = int(obj["dim"])
        return ShapeInstance(
            dim,
            tuple(tuple(_dec_box(b) for b in sh) for sh in obj["shapes"]),
            tuple(
                (_dec_point(o["offset"]), int(o["shape"])) for o in obj["objects"]
            ),
        )
    if kind == "maxconvlb":
        return MaxConvLbInstance(
            tuple(obj["a"]), tuple(obj["b"]), tuple(obj["c"])
        )
    if kind == "linearalign":
        return LinearAlignmentInstance(
            tuple(_dec_fraction(v) for v in obj["a"]),
            tuple(_dec_fraction(v) for v in obj["b"]),
        )
    if kind == "necklace":
        return NecklaceInstance(
            tuple(_dec_fraction(v) for v in obj["a"]),
            tuple(_dec_fraction(v) for v in obj["b"]),
        )
    if kind == "allints3sum":
        return AllInts3SumInstance(
            tuple(obj["a"]), tuple(obj["b"]), tuple(obj["c"])
        )
    if kind == "boxcover":
        dim = int(obj["dim"])
        return BoxCoverInstance(
            _dec_points(obj["t"], dim), _dec_points(obj["p"], dim),
            tuple(_dec_box(r) for r in obj["boxes"]),
        )
    if kind == "fopz":
        return FopzAeeFormula(
            tuple(tuple(v) for v in obj["a"]),
            tuple(tuple(v) for v in obj["b"]),
            tuple(tuple(v) for v in obj["c"]),
            tuple(
                FopzAtom(tuple(a["alpha"]), tuple(a["beta"]), tuple(a["gamma"]),
                         int(a["shift"]))
                for a in obj["atoms"]
            ),
            tuple(tuple((int(k), bool(neg)) for k, neg in cl) for cl in obj["dnf"]),
        )
    if kind == "hypergraph":
        return KPartiteHypergraph(
            int(obj["u"]), int(obj["k"]), int(obj["n_per_class"]),
            frozenset(
                tuple(tuple(pair) for pair in e) for e in obj["edges"]
            ),
        )
    raise FormatError(f"unknown instance kind {kind!r}")


def _jsonable(meta: dict) -> dict:
    out = {}
    for k, v in meta.items():
        if isinstance(v, Fraction):
            out[k] = format_scalar(v)
        else:
            out[k] = v
    return out


def dump(inst, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(to_obj(inst), fh, indent=1, sort_keys=True)
        fh.write("\n")


def load(path: str):
    with open(path) as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"not valid JSON: {exc}") from exc
    return from_obj(obj)
