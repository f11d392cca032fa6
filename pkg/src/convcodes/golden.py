"""Reproductions of the two worked examples over F_19.

Each function builds the code pair from hard-coded evaluation sets, runs a
conversion and compares every intermediate quantity against a frozen value.
"""

from __future__ import annotations

import random

from .codes import LrcCode, min_distance_bruteforce
from .field import PrimeField
from .lrc_convert import LrcLayout, build_lrc_convertible, lrc_convert
from .mds_convert import MdsLayout, build_mds_convertible, mds_convert
from .poly import annihilator_value, xg_vector
from .verify import CheckResult

F19 = PrimeField(19)

EX1_A = [1, 8, 7, 18]
EX1_B = [2, 16, 14, 17]
EX1_C = [4, 9]
EX1_THETA = [11, 3, 3, 6]
EX1_M = [[0, 16, 14, 7], [1, 17, 17, 17], [16, 16, 10, 7], [1, 6, 17, 15]]
EX1_MC = [[14, 4, 4, 3], [16, 16, 12, 17]]
EX1_ETA = [[13, 1], [18, 17]]

EX2_A = [[1, 7, 11], [8, 18, 12]]
EX2_B = [[2, 14, 3], [16, 17, 5]]
EX2_C = [4, 9, 6]
EX2_CONSTANTS = [1, 18, 8, 11, 7]
EX2_THETA = [5, 15]
EX2_M = [[10, 0, 16, 0], [0, 5, 0, 8], [14, 0, 6, 0], [0, 7, 0, 3]]
EX2_MC = [[8, 16, 18, 17], [8, 17, 18, 5]]
EX2_ETA = [[15, 12], [11, 16]]
EX2_C_WEIGHTS = [4, 10]


def _check(results, name, got, want):
    results.append(CheckResult(name, got == want, f"got {got}, expected {want}"))


def example1_code():
    return build_mds_convertible(MdsLayout.from_sets(F19, [EX1_A, EX1_B], EX1_C))


def example2_code():
    return build_lrc_convertible(LrcLayout.from_groups(F19, [EX2_A, EX2_B], [EX2_C]))


def reproduce_example1(seed: int = 0, distance: bool = True) -> list[CheckResult]:
    code = example1_code()
    F, res = F19, []
    M = code.M_matrices[1]
    _check(res, "theta", code.thetas[1], EX1_THETA)
    _check(res, "M", M.tolist(), EX1_M)
    res.append(CheckResult(
        "M b_i = theta_i a_i",
        all(M @ [pow(b, t, 19) for t in range(4)] == [th * pow(a, t, 19) % 19 for t in range(4)]
            for a, b, th in zip(EX1_A, EX1_B, EX1_THETA)),
    ))
    _check(res, "M c-vectors", [M @ [pow(c, t, 19) for t in range(4)] for c in EX1_C], EX1_MC)
    _check(res, "c-span coefficients", code.etas[1], EX1_ETA)
    u = code.final.multipliers
    want_u = [F.inv(annihilator_value(EX1_B, a, F)) for a in EX1_A]
    want_u += [F.inv(th * annihilator_value(EX1_A, b, F)) for b, th in zip(EX1_B, EX1_THETA)]
    _check(res, "final multipliers", list(u), want_u + [1, 1])

    rng = random.Random(seed)
    msgs = [[rng.randrange(19) for _ in range(4)] for _ in range(2)]
    c1, c2 = (code.initial.encode(m) for m in msgs)
    d, trace = mds_convert(code, [c1, c2])
    _check(res, "costs", (trace.read_cost, trace.write_cost), (4, 2))
    _check(res, "d|A = c1|A", list(d[0:4]), list(c1[0:4]))
    _check(res, "d|B = c2|A", list(d[4:8]), list(c2[0:4]))
    _check(res, "accessed = C coordinates", trace.accessed, [[4, 5], [4, 5]])
    if distance:
        _check(res, "initial distance", min_distance_bruteforce(code.initial), 3)
    return res


def reproduce_example2(seed: int = 0, distance: bool = True) -> list[CheckResult]:
    code = example2_code()
    F, res = F19, []
    L = code.layout
    consts = [L.constant(gr) for gr in L.final_groups()]
    _check(res, "group constants", consts, EX2_CONSTANTS)
    M = code.M_matrices[1]
    _check(res, "theta", code.thetas[1], EX2_THETA)
    _check(res, "M", M.tolist(), EX2_M)
    basis = code.basis
    res.append(CheckResult(
        "M b_ij = theta_i a_ij",
        all(M @ xg_vector(b, basis) == [th * v % 19 for v in xg_vector(a, basis)]
            for rowA, rowB, th in zip(EX2_A, EX2_B, EX2_THETA) for a, b in zip(rowA, rowB)),
    ))
    _check(res, "M c-vectors", [M @ xg_vector(c, basis) for c in EX2_C[:2]], EX2_MC)
    _check(res, "c-span coefficients", code.etas[1], EX2_ETA)
    _check(res, "C weights", [w[0] for w in code.c_weights], EX2_C_WEIGHTS)
    G1, G2 = EX2_CONSTANTS[0:2], EX2_CONSTANTS[2:4]
    want_u = [F.inv(annihilator_value(G2, 1 if i == 0 else 18, F)) for i in range(2) for _ in range(3)]
    want_u += [F.inv(th * annihilator_value(G1, gb, F)) for th, gb in zip(EX2_THETA, G2) for _ in range(3)]
    _check(res, "final multipliers", list(code.final.multipliers), want_u + [1, 1, 1])
    _check(res, "lengths", (code.initial.n, code.final.n), (9, 15))

    rng = random.Random(seed)
    msgs = [[rng.randrange(19) for _ in range(4)] for _ in range(2)]
    c1, c2 = (code.initial.encode(m) for m in msgs)
    d, trace = lrc_convert(code, [c1, c2])
    _check(res, "costs", (trace.read_cost, trace.write_cost), (4, 3))
    _check(res, "d|A = c1|A", list(d[0:6]), list(c1[0:6]))
    _check(res, "d|B = c2|A", list(d[6:12]), list(c2[0:6]))
    _check(res, "accessed = c1, c2 of C", trace.accessed, [[6, 7], [6, 7]])
    _check(res, "c3 by local repair", (trace.repaired, trace.provenance[14]),
           ([14], [("final", None, 12), ("final", None, 13)]))
    if distance:
        _check(res, "initial distance", min_distance_bruteforce(code.initial), 5)
    return res
