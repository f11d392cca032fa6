"""MDS convertible codes in the merge regime.

``zeta`` codewords of an ``[k + lI, k]`` RS code are merged into one codeword
of an ``[zeta*k + lF, zeta*k]`` GRS code. With the coset layout, every
initial codeword's ``A_1`` block survives verbatim as the ``A_i`` block of the
final codeword, and only the ``lF`` symbols at ``C`` have to be read from each
initial codeword.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import Codeword, GrsCode
from .errors import ConditionViolation, NotACodewordError, ParameterError
from .field import PrimeField, divisors, find_modulus, primitive_root, subgroup_generator
from .matrix import Matrix, in_span, mat_inverse
from .poly import EvaluationSet, Polynomial, annihilator, annihilator_value, interpolate, vandermonde
from .trace import ConversionTrace, SourceWord, TargetWord


@dataclass(frozen=True)
class MdsLayout:
    """Evaluation sets: ``A_i = alpha^(i-1) A_1``, ``C`` and ``B`` inside ``alpha^zeta G``."""

    field: PrimeField
    zeta: int
    k: int
    l_initial: int
    l_final: int
    A_sets: tuple
    C: EvaluationSet
    B: EvaluationSet
    alpha: int | None = None
    subgroup_generator: int | None = None
    subgroup_order: int | None = None

    def __post_init__(self):
        if self.l_final > min(self.k, self.l_initial):
            raise ParameterError("the coset layout needs lF <= min(k, lI)")
        if len(self.A_sets) != self.zeta or any(len(A) != self.k for A in self.A_sets):
            raise ParameterError("need zeta A-sets of size k each")
        if len(self.C) != self.l_final or len(self.B) != self.l_initial - self.l_final:
            raise ParameterError("C must have lF points and B must have lI - lF points")
        everything = [a for A in self.A_sets for a in A] + list(self.C) + list(self.B)
        if len(set(everything)) != len(everything):
            raise ParameterError("A-sets, C and B must be pairwise disjoint")

    @classmethod
    def from_sets(cls, field: PrimeField, A_sets, C, B=(), **extra) -> "MdsLayout":
        A_sets = tuple(EvaluationSet(A, field) for A in A_sets)
        C, B = EvaluationSet(C, field), EvaluationSet(B, field)
        return cls(field, len(A_sets), len(A_sets[0]), len(C) + len(B), len(C), A_sets, C, B, **extra)

    @property
    def A(self) -> list[int]:
        return [a for A in self.A_sets for a in A]


def _coset_subgroup_order(field: PrimeField, m: int, zeta: int) -> int:
    """Smallest divisor of ``p - 1`` that is at least ``m`` and leaves ``zeta + 1`` cosets."""
    for d in divisors(field.p - 1):
        if d >= m:
            if (field.p - 1) // d < zeta + 1:
                break
            return d
    raise ParameterError(
        f"F_{field.p} has no subgroup of order >= {m} with at least {zeta + 1} cosets"
    )


def mds_min_modulus(zeta: int, k: int, l_initial: int) -> int:
    return (zeta + 1) * max(k, l_initial) + 1


def build_mds_sets(zeta: int, k: int, l_initial: int, l_final: int, field: PrimeField) -> MdsLayout:
    """Deterministic coset layout.

    ``G`` is the smallest subgroup of order at least ``max(k, lI)``; ``A_1`` is
    the first ``k`` powers of its generator; ``alpha`` is the primitive root;
    ``C`` is the ``lF`` smallest residues of ``alpha^zeta A_1`` and ``B`` the
    smallest ``lI - lF`` residues of ``alpha^zeta G`` outside ``C``.
    """
    if zeta < 1 or k < 1 or l_final < 1 or l_initial < l_final:
        raise ParameterError("need zeta, k, lF >= 1 and lI >= lF")
    if l_final > k:
        raise ParameterError("the coset layout needs lF <= min(k, lI)")
    p = field.p
    order = _coset_subgroup_order(field, max(k, l_initial), zeta)
    gen = int(subgroup_generator(field, order))
    G = [pow(gen, j, p) for j in range(order)]
    alpha = int(primitive_root(field))
    A_sets = tuple(
        EvaluationSet((pow(alpha, i, p) * a % p for a in G[:k]), field) for i in range(zeta)
    )
    shift = pow(alpha, zeta, p)
    C = sorted(shift * a % p for a in G[:k])[:l_final]
    B = sorted(x for x in (shift * a % p for a in G) if x not in C)[: l_initial - l_final]
    return MdsLayout(
        field, zeta, k, l_initial, l_final, A_sets,
        EvaluationSet(C, field), EvaluationSet(B, field),
        alpha=alpha, subgroup_generator=gen, subgroup_order=order,
    )


def build_m_matrix(A: EvaluationSet, B: EvaluationSet, C: EvaluationSet) -> tuple[list[int], Matrix]:
    """``M = Vand(A) diag(theta) Vand(B)^-1`` mapping power vectors of ``B`` onto ``A``.

    Both conditions are checked before returning: ``M b_j = theta_j a_j`` and
    every ``M c_j`` lies in the span of the ``c``-vectors.
    """
    F = A.field
    k = len(A)
    if len(B) != k:
        raise ParameterError("A and B must have the same size")
    pts = list(A) + list(B) + list(C)
    if len(set(pts)) != len(pts):
        raise ParameterError("A, B and C must be pairwise disjoint")
    thetas = []
    for a, b in zip(A, B):
        num = annihilator_value([x for x in list(B) + list(C) if x != b], b, F)
        den = annihilator_value([x for x in list(A) + list(C) if x != a], a, F)
        thetas.append(F.div(num, den))
    M = vandermonde(A, k) @ Matrix.diag(thetas, F) @ mat_inverse(vandermonde(B, k))
    _check_conditions(M, thetas, A, B, C, index=None)
    return thetas, M


def _power_vector(a: int, k: int, p: int) -> list[int]:
    return [pow(a, t, p) for t in range(k)]


def _c_coefficients(M: Matrix, C, k: int, index) -> list[list[int]]:
    p = M.field.p
    basis = [_power_vector(c, k, p) for c in C]
    out = []
    for j, c in enumerate(C):
        eta = in_span(M @ _power_vector(c, k, p), basis, M.field)
        if eta is None:
            witness = (index, j + 1) if index is not None else (j + 1,)
            raise ConditionViolation(f"M c_{j + 1} leaves the span of the c-vectors", witness)
        out.append(eta)
    return out


def _check_conditions(M: Matrix, thetas, A, B, C, index) -> list[list[int]]:
    p = M.field.p
    k = len(A)
    for j, (a, b) in enumerate(zip(A, B)):
        lhs = M @ _power_vector(b, k, p)
        rhs = [thetas[j] * v % p for v in _power_vector(a, k, p)]
        if lhs != rhs:
            witness = (index, j + 1) if index is not None else (j + 1,)
            raise ConditionViolation(f"M b_{j + 1} != theta_{j + 1} a_{j + 1}", witness)
    return _c_coefficients(M, C, k, index)


@dataclass
class MdsConvertibleCode:
    """Initial/final GRS pair with the conversion matrices.

    Initial coordinates are ordered ``A_1, C, B``; final ones ``A_1, ..., A_zeta, C``.
    ``etas[i][j]`` expresses ``M_i c_j`` in the ``c``-vector basis and
    ``c_weights[i][j] = h_{A \\ A_i}(c_j)``.
    """

    layout: MdsLayout
    initial: GrsCode
    final: GrsCode
    M_matrices: list
    thetas: list
    etas: list
    c_weights: list

    @property
    def zeta(self) -> int:
        return self.layout.zeta

    @property
    def k(self) -> int:
        return self.layout.k

    @property
    def field(self) -> PrimeField:
        return self.layout.field

    def check_conditions(self) -> list:
        """Re-verify both conditions for every stored ``M_i``; return the ``eta`` table."""
        L = self.layout
        out = []
        for i, (M, th) in enumerate(zip(self.M_matrices, self.thetas)):
            out.append(_check_conditions(M, th, L.A_sets[0], L.A_sets[i], L.C, index=i + 1))
        return out

    def conversion_map(self, messages) -> Polynomial:
        """``T(f_1, ..., f_zeta) = sum_i h_{A \\ A_i} * M_i(f_i)`` for monomial-coefficient messages."""
        F, L = self.field, self.layout
        total = Polynomial([], F)
        for i, (msg, M) in enumerate(zip(messages, self.M_matrices)):
            Mf = Polynomial(M.left_mul(list(msg)), F)
            others = [a for s, A in enumerate(L.A_sets) if s != i for a in A]
            total = total + annihilator(others, F) * Mf
        return total

    def convert(self, initials, validate: bool = True):
        return mds_convert(self, initials, validate)

    def decode_final(self, word) -> list[list[int]]:
        """Recover the ``zeta`` source messages from a final codeword."""
        if not self.final.contains(word):
            raise NotACodewordError("word is not in the final code")
        F, k = self.field, self.k
        A1 = list(self.layout.A_sets[0])
        msgs = []
        for i in range(self.zeta):
            f = interpolate(list(zip(A1, word[i * k:(i + 1) * k])), F)
            msgs.append(list(f.coeffs) + [0] * (k - len(f.coeffs)))
        return msgs


def build_mds_convertible(layout: MdsLayout) -> MdsConvertibleCode:
    F, L = layout.field, layout
    p, k = F.p, L.k
    A1 = L.A_sets[0]
    initial = GrsCode(EvaluationSet(list(A1) + list(L.C) + list(L.B), F), k)
    Ms, thetas, etas = [], [], []
    for i, Ai in enumerate(L.A_sets):
        if i == 0:
            M, th = Matrix.identity(k, F), [1] * k
        else:
            th, M = build_m_matrix(A1, Ai, L.C)
        eta = _c_coefficients(M, L.C, k, index=i + 1)
        if 0 in th:
            raise ConditionViolation(f"zero theta for codeword {i + 1}", (i + 1,))
        Ms.append(M)
        thetas.append(th)
        etas.append(eta)
    mult = []
    for i, Ai in enumerate(L.A_sets):
        others = [a for s, A in enumerate(L.A_sets) if s != i for a in A]
        for j, a in enumerate(Ai):
            mult.append(F.inv(thetas[i][j] * annihilator_value(others, a, F)))
    mult += [1] * L.l_final
    final = GrsCode(EvaluationSet(L.A + list(L.C), F), L.zeta * k, mult)
    c_weights = []
    for i in range(L.zeta):
        others = [a for s, A in enumerate(L.A_sets) if s != i for a in A]
        c_weights.append([annihilator_value(others, c, F) for c in L.C])
    return MdsConvertibleCode(L, initial, final, Ms, thetas, etas, c_weights)


def _check_members(code, initials):
    if len(initials) != code.zeta:
        raise ParameterError(f"expected {code.zeta} initial codewords, got {len(initials)}")
    for i, w in enumerate(initials):
        if not code.initial.contains(w):
            raise NotACodewordError(f"initial word {i + 1} is not a codeword")


def mds_convert(code, initials, validate: bool = True) -> tuple[Codeword, ConversionTrace]:
    """Merge ``zeta`` initial codewords into one final codeword, logging every access.

    ``validate`` checks membership up front; that check is not part of the
    conversion and does not go through the access log.
    """
    if isinstance(code, DefaultReencode):
        return code.convert(initials, validate)
    if validate:
        _check_members(code, initials)
    L, F = code.layout, code.field
    k, lF, p = L.k, L.l_final, F.p
    sources = [SourceWord(w) for w in initials]
    target = TargetWord(code.final.n)
    for i, src in enumerate(sources):
        for j in range(k):
            target.keep(i * k + j, src, i, j)
    at_c = [[src.read(k + s) for s in range(lF)] for src in sources]
    for j in range(lF):
        val = 0
        for i in range(L.zeta):
            inner = sum(e * v for e, v in zip(code.etas[i][j], at_c[i]))
            val += code.c_weights[i][j] * inner
        used = [("initial", i, k + s) for i in range(L.zeta) for s in range(lF)]
        target.write(L.zeta * k + j, val % p, used)
    word = Codeword(target.symbols(), F, code.final.points.points)
    return word, ConversionTrace.from_logs(sources, target)


class DefaultReencode:
    """Fallback outside ``lF <= min(k, lI)``: read an information set of each
    initial codeword, keep those symbols, re-encode the parities.

    Initial points are ``1..k+lI``; final points are ``1..zeta*k+lF``.
    """

    def __init__(self, zeta: int, k: int, l_initial: int, l_final: int, field: PrimeField):
        if field.p <= max(zeta * k + l_final, k + l_initial):
            raise ParameterError(f"F_{field.p} is too small for these lengths")
        self.zeta, self.k, self.field = zeta, k, field
        self.l_initial, self.l_final = l_initial, l_final
        self.initial = GrsCode(EvaluationSet(range(1, k + l_initial + 1), field), k)
        self.final = GrsCode(EvaluationSet(range(1, zeta * k + l_final + 1), field), zeta * k)

    def __repr__(self):
        return f"DefaultReencode(zeta={self.zeta}, k={self.k}, lI={self.l_initial}, lF={self.l_final}, F{self.field.p})"

    def conversion_map(self, messages) -> Polynomial:
        F, k = self.field, self.k
        xs = list(self.initial.points)[:k]
        ys = list(self.final.points)
        polys = [Polynomial(m, F) for m in messages]
        pts = [(ys[i * k + j], f(xs[j])) for i, f in enumerate(polys) for j in range(k)]
        return interpolate(pts, F)

    def convert(self, initials, validate: bool = True):
        if validate:
            _check_members(self, initials)
        F, k, z = self.field, self.k, self.zeta
        sources = [SourceWord(w) for w in initials]
        target = TargetWord(self.final.n)
        pts = []
        for i, src in enumerate(sources):
            for j in range(k):
                src.read(j)
                target.keep(i * k + j, src, i, j)
                pts.append((self.final.points[i * k + j], target[i * k + j]))
        f = interpolate(pts, F)
        used = [("initial", i, j) for i in range(z) for j in range(k)]
        for t in range(z * k, self.final.n):
            target.write(t, f(self.final.points[t]), used)
        word = Codeword(target.symbols(), F, self.final.points.points)
        return word, ConversionTrace.from_logs(sources, target)

    def decode_final(self, word) -> list[list[int]]:
        if not self.final.contains(word):
            raise NotACodewordError("word is not in the final code")
        k = self.k
        xs = list(self.initial.points)[:k]
        msgs = []
        for i in range(self.zeta):
            f = interpolate(list(zip(xs, word[i * k:(i + 1) * k])), self.field)
            msgs.append(list(f.coeffs) + [0] * (k - len(f.coeffs)))
        return msgs


def plan_mds_conversion(zeta: int, k: int, l_initial: int, l_final: int, field: PrimeField | None = None):
    """Coset construction when ``lF <= min(k, lI)``, otherwise :class:`DefaultReencode`.

    Without an explicit field the smallest admissible prime is used.
    """
    if zeta < 1 or k < 1 or l_final < 1 or l_initial < 1:
        raise ParameterError("need zeta, k, lI, lF >= 1")
    if l_final <= min(k, l_initial):
        if field is None:
            m = max(k, l_initial)
            field = find_modulus(m, mds_min_modulus(zeta, k, l_initial))
        return build_mds_convertible(build_mds_sets(zeta, k, l_initial, l_final, field))
    if field is None:
        field = find_modulus(1, max(zeta * k + l_final, k + l_initial) + 1)
    return DefaultReencode(zeta, k, l_initial, l_final, field)
