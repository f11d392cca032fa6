"""Access-cost lower bounds, the Singleton-type LRC bound, isolated subsets,
and numerical checks of the ``{x^s g^t}`` basis identities.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from itertools import combinations

from .codes import LrcCode
from .errors import BudgetExceededError, ParameterError, VerificationError
from .matrix import Matrix, in_span, mat_inverse, mat_rank
from .poly import EvaluationSet, XGBasis, annihilator_value, poly_eval, vandermonde, xg_vector


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class AccessBounds:
    read_lower: int
    write_lower: int
    regime_note: str = ""

    @property
    def total_lower(self) -> int:
        return self.read_lower + self.write_lower


def singleton_lrc(n: int, k: int, r: int) -> tuple[int, bool]:
    """``(n - k - ceil(k/r) + 2, k/n <= r/(r+1))``."""
    if not 1 <= r <= k <= n:
        raise ParameterError(f"need 1 <= r <= k <= n, got n={n}, k={k}, r={r}")
    return n - k - _ceil_div(k, r) + 2, k * (r + 1) <= n * r


def mds_access_bounds(nI: int, k: int, nF: int, zeta: int) -> AccessBounds:
    """Read and write lower bounds for merging ``zeta`` MDS ``[nI, k]`` codewords into ``[nF, zeta k]``."""
    if min(k, zeta) < 1 or nI < k or nF < zeta * k:
        raise ParameterError(f"need nI >= k >= 1 and nF >= zeta*k, got nI={nI}, k={k}, nF={nF}, zeta={zeta}")
    parity = nF - zeta * k
    if nI - k < parity:
        return AccessBounds(zeta * k, parity, "nI - k < nF - zeta*k: every data symbol must be read")
    return AccessBounds(zeta * min(k, parity), parity, "read >= zeta * min(k, nF - zeta*k)")


def _max_remaining(nF: int, d: int, zeta: int, k: int, r: int) -> int:
    """Largest number of remaining symbols any single initial codeword can keep."""
    return nF - d - ((zeta - 1) * k + _ceil_div((zeta - 1) * k, r)) + 2


def lrc_access_bounds(nI: int, k: int, nF: int, zeta: int, r: int, d: int) -> AccessBounds:
    """Lower bounds for merging ``zeta`` codewords of an ``(nI, k, r)`` LRC into an
    ``(nF, zeta k, r)`` LRC of distance ``d``. ``k`` is the initial dimension.
    """
    if d < 1 or k < 1 or zeta < 1 or not 1 <= r <= zeta * k or nF < zeta * k or nI < k:
        raise ParameterError(f"inadmissible parameters nI={nI}, k={k}, nF={nF}, zeta={zeta}, r={r}, d={d}")
    write = zeta * (d + (zeta - 1) * k + _ceil_div((zeta - 1) * k, r) - 2) - (zeta - 1) * nF
    delta = _max_remaining(nF, d, zeta, k, r) - d + 1
    if d > nI - k + 1:
        read, note = zeta * k, "d > nI - k + 1: every data symbol must be read"
    elif delta <= 0:
        read, note = zeta * k, f"Delta = {delta} <= 0"
    else:
        read, note = zeta * (k - _ceil_div(r * delta, r + 1)), f"Delta = {delta} > 0"
    return AccessBounds(max(read, 0), max(write, 0), note)


def optimal_lrc_bounds(nI: int, nF: int, zeta: int, k: int, r: int) -> AccessBounds:
    """Closed forms for optimal LRCs of dimensions ``kr`` and ``zeta kr`` (``k`` counts groups)."""
    if (nI % (r + 1)) or (nF % (r + 1)):
        raise ParameterError("r + 1 must divide both lengths")
    write = nF - zeta * k * (r + 1)
    if nF - nI >= (zeta - 1) * k * r + zeta * k:
        return AccessBounds(zeta * k * r, write, "nF - nI >= (zeta-1)kr + zeta k")
    if (zeta + 1) * k <= nF // (r + 1):
        return AccessBounds(zeta * k * r, write, "(zeta+1)k <= nF/(r+1)")
    return AccessBounds(zeta * (r * nF // (r + 1) - zeta * k * r), write, "(zeta+1)k > nF/(r+1)")


# ---------------------------------------------------------------------------
# Isolated subsets


def enumerate_recovering_sets(G: Matrix, r: int, max_n: int = 16) -> dict:
    """For every coordinate, the first smallest set of at most ``r`` other
    columns spanning it. Its union with the coordinate is a circuit, so every
    member is recoverable from the rest.
    """
    n = G.cols
    if n > max_n:
        raise BudgetExceededError(f"recovering-set enumeration limited to n <= {max_n}")
    cols = G.columns()
    out = {}
    for i in range(n):
        others = [j for j in range(n) if j != i]
        for size in range(0, r + 1):
            hit = next(
                (I for I in combinations(others, size)
                 if in_span(cols[i], [cols[j] for j in I], G.field) is not None),
                None,
            )
            if hit is not None:
                out[i] = list(hit)
                break
        else:
            raise ParameterError(f"coordinate {i} has no recovering set of size <= {r}")
    return out


def _prune(sets: list, universe: set) -> list:
    """Drop sets, in order, while the rest still cover ``universe``."""
    kept = list(sets)
    idx = 0
    while idx < len(kept):
        rest = set().union(*(s for j, s in enumerate(kept) if j != idx)) if len(kept) > 1 else set()
        if universe <= rest:
            kept.pop(idx)
        else:
            idx += 1
    return kept


@dataclass
class IsolatedSubset:
    elements: list
    recovering_sets: dict = dc_field(default_factory=dict)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def isolated_subset(code, A, r: int | None = None) -> IsolatedSubset:
    """A subset ``A'`` of ``A`` with ``|A'| >= ceil(|A|/(r+1))`` whose members have
    recovering sets avoiding ``A'``.

    Extended recovering sets are the repair groups for an :class:`LrcCode`;
    otherwise they are enumerated from the generator matrix (``r`` required).
    The result is checked by rank tests before it is returned.
    """
    A = sorted(set(A))
    G = code.generator_matrix()
    n = G.cols
    if isinstance(code, LrcCode):
        r = code.r
        family = [frozenset(code.group_coords(g)) for g in range(len(code.groups))]
    else:
        if r is None:
            raise ParameterError("locality r is required for a generic code")
        rec = enumerate_recovering_sets(G, r)
        family = []
        for i, I in rec.items():
            ext = frozenset(I) | {i}
            if ext not in family:
                family.append(ext)
    if not set(A) <= set(range(n)):
        raise ParameterError("A contains coordinates outside the code")
    cover = _prune(family, set(range(n)))
    traces, owners = [], []
    for R in cover:
        S = R & set(A)
        if S and S not in traces:
            traces.append(S)
            owners.append(R)
    keep = _prune(traces, set(A))
    chosen, rec_sets = [], {}
    for S in keep:
        others = set().union(*(T for T in keep if T is not S))
        unique = sorted(S - others)
        i = unique[0]
        R = owners[traces.index(S)]
        chosen.append(i)
        rec_sets[i] = sorted(R - {i})
    result = IsolatedSubset(sorted(chosen), rec_sets)
    _verify_isolated(G, A, r, result)
    return result


def _verify_isolated(G: Matrix, A, r: int, result: IsolatedSubset):
    need = _ceil_div(len(A), r + 1)
    if len(result) < need:
        raise VerificationError(f"isolated subset has {len(result)} < {need} elements")
    cols = G.columns()
    chosen = set(result.elements)
    for i, I in result.recovering_sets.items():
        if len(I) > r or chosen & set(I):
            raise VerificationError(f"recovering set of {i} is too large or meets the subset")
        if in_span(cols[i], [cols[j] for j in I], G.field) is None:
            raise VerificationError(f"coordinate {i} is not recoverable from {I}")


# ---------------------------------------------------------------------------
# Basis identities


@dataclass
class AppendixReport:
    rank: int
    rank_ok: bool
    expansion_ok: bool
    zero_block_ok: bool
    block_shape: tuple
    failures: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.rank_ok and self.expansion_ok and self.zero_block_ok


def appendix_checks(source, g=None, trials: int = 20, seed: int = 0) -> AppendixReport:
    """Check three facts about ``k`` groups of size ``r+1`` with good polynomial ``g``:

    1. the ``kr`` vectors of the first ``r`` points of every group are independent;
    2. any ``c``'s vector expands over them with the closed-form Lagrange coefficients;
    3. the block matrix ``[g_i^t V_i]`` (``t < k-1``) times ``[V_i^-1 / h_{G-g_i}(g_i)]`` is zero.

    ``source`` is an LrcLayout (its ``A_{1,.}`` groups are used) or a list of groups.
    """
    if hasattr(source, "A_groups"):
        groups, g = list(source.A_groups[0]), source.g
    else:
        groups = list(source)
        if g is None:
            raise ParameterError("g is required with explicit groups")
    F = g.field
    p = F.p
    k, r = len(groups), len(groups[0]) - 1
    basis = XGBasis(g, r, k)
    Gc = [poly_eval(g, gr[0]) for gr in groups]
    tilde = [list(gr)[:r] for gr in groups]
    failures = []

    vecs = [xg_vector(a, basis) for pts in tilde for a in pts]
    rank = mat_rank(Matrix(vecs, F))
    rank_ok = rank == k * r
    if not rank_ok:
        failures.append(f"rank {rank} != kr = {k * r}")

    rng = random.Random(seed)
    expansion_ok = True
    for _ in range(trials):
        c = rng.randrange(p)
        gc = poly_eval(g, c)
        acc = [0] * (k * r)
        for i, pts in enumerate(tilde):
            others = [x for x in Gc if x != Gc[i]]
            outer = F.div(annihilator_value(others, gc, F), annihilator_value(others, Gc[i], F))
            for a in pts:
                rest = [x for x in pts if x != a]
                coef = outer * F.div(annihilator_value(rest, c, F), annihilator_value(rest, a, F)) % p
                for t, v in enumerate(xg_vector(a, basis)):
                    acc[t] = (acc[t] + coef * v) % p
        if acc != xg_vector(c, basis):
            expansion_ok = False
            failures.append(f"expansion fails at c = {c}")
            break

    rows = (k - 1) * r
    zero_block_ok = True
    if rows:
        V = [vandermonde(EvaluationSet(pts, F), r) for pts in tilde]
        left = [
            [pow(Gc[i], t, p) * V[i][e, j] % p for i in range(k) for j in range(r)]
            for t in range(k - 1) for e in range(r)
        ]
        right = []
        for i in range(k):
            scale = F.inv(annihilator_value([x for x in Gc if x != Gc[i]], Gc[i], F))
            right.extend(mat_inverse(V[i]).scaled(scale).tolist())
        prod = Matrix(left, F) @ Matrix(right, F)
        zero_block_ok = all(v == 0 for row in prod.entries for v in row)
        if not zero_block_ok:
            failures.append("block product is not zero")
    return AppendixReport(rank, rank_ok, expansion_ok, zero_block_ok, (rows, r), failures)
