"""JSON spec files for convertible codes.

Field elements are decimal residues and matrices are row-major lists. Loading
rebuilds the objects from the stored data without re-deriving or re-checking
anything, so a tampered file is caught by verification rather than silently
repaired.
"""

from __future__ import annotations

import json
from pathlib import Path

from .codes import GrsCode, LrcCode
from .errors import ConvCodesError, SpecFileError
from .field import PrimeField
from .lrc_convert import LrcConvertibleCode, LrcLayout
from .matrix import Matrix
from .mds_convert import DefaultReencode, MdsConvertibleCode, MdsLayout
from .poly import EvaluationSet, Polynomial

SCHEMA_VERSION = 1


def _pts(es) -> list[int]:
    return list(es.points if isinstance(es, EvaluationSet) else es)


def to_dict(code) -> dict:
    if isinstance(code, MdsConvertibleCode):
        L = code.layout
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": "mds",
            "strategy": "coset",
            "field": L.field.p,
            "params": {"zeta": L.zeta, "k": L.k, "l_initial": L.l_initial, "l_final": L.l_final},
            "generators": {
                "alpha": L.alpha,
                "subgroup_generator": L.subgroup_generator,
                "subgroup_order": L.subgroup_order,
            },
            "sets": {"A": [_pts(A) for A in L.A_sets], "C": _pts(L.C), "B": _pts(L.B)},
            "initial": {"points": _pts(code.initial.points), "multipliers": list(code.initial.multipliers)},
            "final": {"points": _pts(code.final.points), "multipliers": list(code.final.multipliers)},
            "thetas": code.thetas,
            "M": [M.tolist() for M in code.M_matrices],
            "etas": code.etas,
            "c_weights": code.c_weights,
        }
    if isinstance(code, DefaultReencode):
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": "mds",
            "strategy": "default-reencode",
            "field": code.field.p,
            "params": {"zeta": code.zeta, "k": code.k, "l_initial": code.l_initial, "l_final": code.l_final},
        }
    if isinstance(code, LrcConvertibleCode):
        L = code.layout
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": "lrc",
            "field": L.field.p,
            "params": {"zeta": L.zeta, "k": L.k, "r": L.r, "l_initial": L.l_initial, "l_final": L.l_final},
            "generators": {"beta": L.beta, "alpha": L.alpha, "zeta0": L.zeta0},
            "g": list(L.g.coeffs),
            "groups": {
                "A": [[_pts(gr) for gr in row] for row in L.A_groups],
                "C": [_pts(gr) for gr in L.C_groups],
                "B": [_pts(gr) for gr in L.B_groups],
                "B_origin": [list(o) for o in L.B_origin],
            },
            "initial": {"points": _pts(code.initial.points), "multipliers": list(code.initial.multipliers)},
            "final": {"points": _pts(code.final.points), "multipliers": list(code.final.multipliers)},
            "thetas": code.thetas,
            "M": [M.tolist() for M in code.M_matrices],
            "etas": code.etas,
            "c_weights": code.c_weights,
        }
    raise TypeError(f"cannot serialize {type(code).__name__}")


def from_dict(data: dict):
    try:
        if data.get("schema_version") != SCHEMA_VERSION:
            raise SpecFileError(f"unsupported schema_version {data.get('schema_version')!r}")
        F = PrimeField(data["field"])
        prm = data["params"]
        kind = data["kind"]
        if kind == "mds" and data.get("strategy") == "default-reencode":
            return DefaultReencode(prm["zeta"], prm["k"], prm["l_initial"], prm["l_final"], F)
        if kind == "mds":
            gens = data["generators"]
            sets = data["sets"]
            layout = MdsLayout.from_sets(F, sets["A"], sets["C"], sets["B"], alpha=gens["alpha"],
                                         subgroup_generator=gens["subgroup_generator"],
                                         subgroup_order=gens["subgroup_order"])
            initial = GrsCode(EvaluationSet(data["initial"]["points"], F), prm["k"], data["initial"]["multipliers"])
            final = GrsCode(EvaluationSet(data["final"]["points"], F), prm["zeta"] * prm["k"],
                            data["final"]["multipliers"])
            return MdsConvertibleCode(
                layout, initial, final, [Matrix(M, F) for M in data["M"]],
                data["thetas"], data["etas"], data["c_weights"],
            )
        if kind == "lrc":
            gens = data["generators"]
            grp = data["groups"]
            g = Polynomial(data["g"], F)
            layout = LrcLayout.from_groups(F, grp["A"], grp["C"], grp["B"], g=g, beta=gens["beta"],
                                           alpha=gens["alpha"], zeta0=gens["zeta0"],
                                           B_origin=tuple(tuple(o) for o in grp["B_origin"]))
            k, r = prm["k"], prm["r"]
            initial = LrcCode(layout.initial_groups(), g, k, r, data["initial"]["multipliers"])
            final = LrcCode(layout.final_groups(), g, prm["zeta"] * k, r, data["final"]["multipliers"])
            return LrcConvertibleCode(
                layout, initial, final, [Matrix(M, F) for M in data["M"]],
                data["thetas"], data["etas"], data["c_weights"],
            )
        raise SpecFileError(f"unknown kind {kind!r}")
    except (KeyError, TypeError, IndexError) as exc:
        raise SpecFileError(f"malformed spec file: {exc!r}") from exc


def dumps(code) -> str:
    return json.dumps(to_dict(code), indent=1, sort_keys=True) + "\n"


def save(code, path) -> None:
    try:
        Path(path).write_text(dumps(code))
    except OSError as exc:
        raise SpecFileError(f"cannot write {path}: {exc}") from exc


def load(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SpecFileError(f"cannot read {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecFileError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise SpecFileError(f"{path} does not hold a JSON object")
    try:
        return from_dict(data)
    except SpecFileError:
        raise
    except ConvCodesError as exc:
        raise SpecFileError(f"{path}: {exc}") from exc
