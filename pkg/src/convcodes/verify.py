"""Batch verification of a built (or loaded) convertible code."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .bounds import AccessBounds, appendix_checks, lrc_access_bounds, mds_access_bounds, singleton_lrc
from .codes import check_good_polynomial, check_locality, generator_rank, is_mds, min_distance_bruteforce, structural_distance
from .errors import BudgetExceededError, ConditionViolation, ConvCodesError
from .lrc_convert import LrcConvertibleCode, lrc_convert
from .mds_convert import DefaultReencode, MdsConvertibleCode, mds_convert
from .poly import annihilator_value


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        tag = "PASS" if self.ok else "FAIL"
        return f"{tag} {self.name}" + (f": {self.detail}" if self.detail else "")


def expected_bounds(code) -> AccessBounds:
    """The lower bound the construction is supposed to meet with equality."""
    nI, nF, z = code.initial.n, code.final.n, code.zeta
    if isinstance(code, LrcConvertibleCode):
        kI = code.initial.dim
        d = singleton_lrc(nF, code.final.dim, code.r)[0]
        return lrc_access_bounds(nI, kI, nF, z, code.r, d)
    return mds_access_bounds(nI, code.k, nF, z)


def convert(code, initials, validate: bool = True):
    if isinstance(code, LrcConvertibleCode):
        return lrc_convert(code, initials, validate)
    return mds_convert(code, initials, validate)


def _run(name, fn) -> CheckResult:
    try:
        out = fn()
    except ConditionViolation as exc:
        return CheckResult(name, False, f"{exc} (witness {exc.witness})")
    except ConvCodesError as exc:
        return CheckResult(name, False, f"{exc.code}: {exc}")
    if isinstance(out, CheckResult):
        return out
    if isinstance(out, tuple):
        ok, detail = out
        return CheckResult(name, bool(ok), detail)
    return CheckResult(name, bool(out))


def _expected_multipliers(code) -> list[int]:
    F, L = code.field, code.layout
    if isinstance(code, MdsConvertibleCode):
        out = []
        for i, Ai in enumerate(L.A_sets):
            others = [a for s, A in enumerate(L.A_sets) if s != i for a in A]
            out += [F.inv(code.thetas[i][j] * annihilator_value(others, a, F)) for j, a in enumerate(Ai)]
        return out + [1] * L.l_final
    G = L.G_sets
    out = []
    for s, row in enumerate(L.A_groups):
        others = [x for t, Gt in enumerate(G) if t != s for x in Gt]
        for i in range(len(row)):
            out += [F.inv(code.thetas[s][i] * annihilator_value(others, G[s][i], F))] * (L.r + 1)
    return out + [1] * (L.l_final * (L.r + 1))


def _distance_check(c, expected: int, budget: int):
    try:
        d = min_distance_bruteforce(c, budget)
        how = "enumeration"
    except BudgetExceededError:
        try:
            d = structural_distance(c)
            how = "subset ranks"
        except BudgetExceededError:
            return True, "skipped (too large)"
    return d == expected, f"d = {d} by {how}, expected {expected}"


def _trials(code, trials: int, seed: int):
    rng = random.Random(seed)
    p, dim = code.field.p, code.initial.dim
    bound = expected_bounds(code)
    for t in range(trials):
        msgs = [[rng.randrange(p) for _ in range(dim)] for _ in range(code.zeta)]
        word, trace = convert(code, [code.initial.encode(m) for m in msgs])
        direct = code.final.encode_poly(code.conversion_map(msgs))
        if word != direct:
            return False, f"trial {t}: converted word differs from direct evaluation"
        if code.decode_final(word) != msgs:
            return False, f"trial {t}: decoding did not recover the messages"
        if (trace.read_cost, trace.write_cost) != (bound.read_lower, bound.write_lower):
            return False, f"trial {t}: {trace.summary()} vs bound read>={bound.read_lower} write>={bound.write_lower}"
    return True, f"{trials} trials, costs read={bound.read_lower} write={bound.write_lower}"


def verify_code(code, level: str = "quick", trials: int = 100, seed: int = 0, budget: int = 10**7) -> list[CheckResult]:
    results = []
    add = lambda name, fn: results.append(_run(name, fn))  # noqa: E731
    z = code.zeta

    if isinstance(code, DefaultReencode):
        add("initial-rank", lambda: generator_rank(code.initial) == code.k)
        add("final-rank", lambda: generator_rank(code.final) == z * code.k)
    elif isinstance(code, MdsConvertibleCode):
        add("conditions", lambda: (code.check_conditions() == code.etas, "stored eta table matches"))
        add("thetas-nonzero", lambda: all(t for row in code.thetas for t in row))
        add("multipliers", lambda: list(code.final.multipliers) == _expected_multipliers(code))
        add("initial-rank", lambda: generator_rank(code.initial) == code.k)
        add("final-rank", lambda: generator_rank(code.final) == z * code.k)
    else:
        L = code.layout
        add("conditions", lambda: (code.check_conditions() == code.etas, "stored eta table matches"))
        add("thetas-nonzero", lambda: all(t for row in code.thetas for t in row))
        add("multipliers", lambda: list(code.final.multipliers) == _expected_multipliers(code))
        add("good-polynomial", lambda: check_good_polynomial(L.g, L.final_groups()).ok
            and check_good_polynomial(L.g, L.initial_groups()).ok)
        add("initial-locality", lambda: check_locality(code.initial).ok)
        add("final-locality", lambda: check_locality(code.final).ok)
        add("initial-rank", lambda: generator_rank(code.initial) == code.initial.dim)
        add("final-rank", lambda: generator_rank(code.final) == code.final.dim)
        add("appendix-identities", lambda: appendix_checks(L).ok)

    if not isinstance(code, LrcConvertibleCode):
        for name, c in (("initial-mds", code.initial), ("final-mds", code.final)):
            if c.n <= 12:
                add(name, lambda c=c: is_mds(c))

    if level == "full":
        for name, c in (("initial-distance", code.initial), ("final-distance", code.final)):
            if isinstance(code, LrcConvertibleCode):
                expected = singleton_lrc(c.n, c.dim, c.r)[0]
            else:
                expected = c.n - c.dim + 1
            add(name, lambda c=c, e=expected: _distance_check(c, e, budget))
        add("conversion-trials", lambda: _trials(code, trials, seed))
    return results
