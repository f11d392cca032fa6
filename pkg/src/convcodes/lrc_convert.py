"""Locally repairable convertible codes in the merge regime.

Initial code: Tamo-Barg LRC on groups ``A_{1,i}``, ``C_i``, ``B_i`` with
``g = x^(r+1)``. Final code: Tamo-Barg LRC on ``A_{s,i}`` (``s <= zeta``) and
``C_i``. Each group is a coset of the order-``k(r+1)`` subgroup's
``(r+1)``-element subgroup, so ``g`` is constant on it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import Codeword, LrcCode
from .errors import ConditionViolation, DivisibilityError, LayoutError, NotACodewordError, ParameterError
from .field import PrimeField, find_modulus, primitive_root
from .matrix import Matrix, in_span, mat_inverse
from .poly import (
    EvaluationSet,
    Polynomial,
    XGBasis,
    annihilator,
    annihilator_value,
    compose,
    poly_eval,
    xg_to_monomial,
    xg_vector,
)
from .trace import ConversionTrace, SourceWord, TargetWord


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def lrc_min_modulus(zeta: int, k: int, r: int, l_initial: int) -> int:
    return k * (r + 1) * max(zeta + 1, _ceil_div(l_initial, k) + 2) + 1


@dataclass(frozen=True)
class LrcLayout:
    """Repair groups for the initial and final codes.

    ``A_groups[s-1][i-1]`` is ``A_{s,i}``; ``B_origin`` records which
    ``(s, i)`` slot each B group was taken from.
    """

    field: PrimeField
    zeta: int
    k: int
    r: int
    l_initial: int
    l_final: int
    g: Polynomial
    A_groups: tuple
    C_groups: tuple
    B_groups: tuple
    beta: int | None = None
    alpha: int | None = None
    zeta0: int | None = None
    B_origin: tuple = ()

    def __post_init__(self):
        if self.l_final > min(self.k, self.l_initial):
            raise ParameterError("the coset layout needs lF <= min(k, lI)")
        if len(self.A_groups) != self.zeta or any(len(row) != self.k for row in self.A_groups):
            raise ParameterError("need zeta rows of k A-groups")
        if len(self.C_groups) != self.l_final or len(self.B_groups) != self.l_initial - self.l_final:
            raise ParameterError("need lF C-groups and lI - lF B-groups")
        if self.g.degree != self.r + 1:
            raise ParameterError("g must have degree r + 1")
        for name, groups in (("final", self.final_groups()), ("initial", self.initial_groups())):
            pts = [a for gr in groups for a in gr]
            if len(set(pts)) != len(pts):
                raise LayoutError(f"{name} groups are not pairwise disjoint")
            consts = []
            for gr in groups:
                vals = {poly_eval(self.g, a) for a in gr}
                if len(vals) != 1:
                    raise LayoutError(f"g is not constant on group {list(gr)}")
                consts.append(vals.pop())
            if len(set(consts)) != len(consts):
                raise LayoutError(f"{name} group constants collide: {consts}")

    @classmethod
    def from_groups(cls, field: PrimeField, A_groups, C_groups, B_groups=(), g=None, **extra) -> "LrcLayout":
        A_groups = tuple(tuple(EvaluationSet(gr, field) for gr in row) for row in A_groups)
        C_groups = tuple(EvaluationSet(gr, field) for gr in C_groups)
        B_groups = tuple(EvaluationSet(gr, field) for gr in B_groups)
        r = len(A_groups[0][0]) - 1
        if g is None:
            g = Polynomial.monomial(r + 1, field)
        return cls(
            field, len(A_groups), len(A_groups[0]), r, len(C_groups) + len(B_groups), len(C_groups),
            g, A_groups, C_groups, B_groups, **extra,
        )

    def final_groups(self) -> list:
        return [gr for row in self.A_groups for gr in row] + list(self.C_groups)

    def initial_groups(self) -> list:
        return list(self.A_groups[0]) + list(self.C_groups) + list(self.B_groups)

    def constant(self, group: EvaluationSet) -> int:
        return poly_eval(self.g, group[0])

    @property
    def G_sets(self) -> list[list[int]]:
        """``G_s = {g(A_{s,i})}_i`` for ``s = 1..zeta``."""
        return [[self.constant(gr) for gr in row] for row in self.A_groups]

    @property
    def G0(self) -> list[int]:
        return [self.constant(gr) for gr in self.C_groups]

    def group_constants(self) -> dict:
        out = {f"A{s + 1},{i + 1}": self.constant(gr) for s, row in enumerate(self.A_groups) for i, gr in enumerate(row)}
        out.update({f"C{i + 1}": self.constant(gr) for i, gr in enumerate(self.C_groups)})
        out.update({f"B{i + 1}": self.constant(gr) for i, gr in enumerate(self.B_groups)})
        return out


def build_lrc_sets(zeta: int, k: int, r: int, l_initial: int, l_final: int, field: PrimeField) -> LrcLayout:
    """Coset layout from the primitive root ``beta`` and ``alpha = beta^((p-1)/(k(r+1)))``.

    ``A_{s,i} = {beta^(s-1) alpha^(i-1+jk) : j = 0..r}`` for ``s = 1..zeta0`` and
    ``C_i = beta^zeta0 alpha^(i-1+jk)``. B groups are the first unused
    ``A_{s,i}`` with ``s > zeta``, then ``2 <= s <= zeta`` if more are needed.
    """
    if zeta < 1 or k < 1 or r < 1 or l_final < 1 or l_initial < l_final:
        raise ParameterError("need zeta, k, r, lF >= 1 and lI >= lF")
    if l_final > k:
        raise ParameterError("the coset layout needs lF <= min(k, lI)")
    p = field.p
    order = k * (r + 1)
    if (p - 1) % order:
        raise DivisibilityError(f"k(r+1) = {order} does not divide p - 1 = {p - 1}")
    if p < lrc_min_modulus(zeta, k, r, l_initial):
        raise ParameterError(f"p = {p} is below {lrc_min_modulus(zeta, k, r, l_initial)}")
    zeta0 = max(zeta, _ceil_div(l_initial, k) + 1)
    beta = int(primitive_root(field))
    alpha = pow(beta, (p - 1) // order, p)

    def group(s: int, i: int) -> EvaluationSet:
        shift = pow(beta, s - 1, p)
        return EvaluationSet((shift * pow(alpha, i - 1 + j * k, p) % p for j in range(r + 1)), field)

    A_groups = tuple(tuple(group(s, i) for i in range(1, k + 1)) for s in range(1, zeta + 1))
    C_groups = tuple(group(zeta0 + 1, i) for i in range(1, l_final + 1))
    slots = [(s, i) for s in range(zeta + 1, zeta0 + 1) for i in range(1, k + 1)]
    slots += [(s, i) for s in range(2, zeta + 1) for i in range(1, k + 1)]
    picked = slots[: l_initial - l_final]
    B_groups = tuple(group(s, i) for s, i in picked)
    g = Polynomial.monomial(r + 1, field)
    return LrcLayout(
        field, zeta, k, r, l_initial, l_final, g, A_groups, C_groups, B_groups,
        beta=beta, alpha=alpha, zeta0=zeta0, B_origin=tuple(picked),
    )


def _check_lrc_conditions(M: Matrix, thetas, src_groups, dst_groups, C_groups, basis: XGBasis, s: int):
    """Both conditions for ``M_s``; returns the ``eta`` rows for every ``c_{i,j}``, ``j <= r``."""
    p = basis.field.p
    r = basis.r
    for i, (src, dst) in enumerate(zip(src_groups, dst_groups)):
        for j in range(r + 1):
            lhs = M @ xg_vector(src[j], basis)
            rhs = [thetas[i] * v % p for v in xg_vector(dst[j], basis)]
            if lhs != rhs:
                raise ConditionViolation(
                    f"M_{s} a_({s},{i + 1},{j + 1}) != theta_({s},{i + 1}) a_(1,{i + 1},{j + 1})",
                    (s, i + 1, j + 1),
                )
    cbasis = [xg_vector(c, basis) for gr in C_groups for c in list(gr)[:r]]
    etas = []
    for i, gr in enumerate(C_groups):
        for j in range(r):
            eta = in_span(M @ xg_vector(gr[j], basis), cbasis, basis.field)
            if eta is None:
                raise ConditionViolation(
                    f"M_{s} c_({i + 1},{j + 1}) leaves the span of the c-vectors", (s, i + 1, j + 1)
                )
            etas.append(eta)
    return etas


def build_m_matrix_lrc_groups(dst_groups, src_groups, C_groups, g: Polynomial, r: int, s: int = 2):
    """``M = A diag(theta) B^-1`` on ``x^t1 g^t2`` vectors, mapping ``src`` groups onto ``dst`` groups.

    Columns ``(i-1)r + j`` of ``A`` and ``B`` are the vectors of the first ``r``
    points of group ``i``. Returns ``(thetas, M, etas)``.
    """
    F = g.field
    k = len(dst_groups)
    if len(src_groups) != k:
        raise ParameterError("source and target need the same number of groups")
    basis = XGBasis(g, r, k)
    G_dst = [poly_eval(g, gr[0]) for gr in dst_groups]
    G_src = [poly_eval(g, gr[0]) for gr in src_groups]
    G0 = [poly_eval(g, gr[0]) for gr in C_groups]
    thetas = []
    for gd, gs in zip(G_dst, G_src):
        num = annihilator_value([x for x in G_src + G0 if x != gs], gs, F)
        den = annihilator_value([x for x in G_dst + G0 if x != gd], gd, F)
        if num == 0 or den == 0:
            raise LayoutError("group constants collide, theta is undefined")
        thetas.append(F.div(num, den))
    A = Matrix.from_columns([xg_vector(a, basis) for gr in dst_groups for a in list(gr)[:r]], F)
    B = Matrix.from_columns([xg_vector(b, basis) for gr in src_groups for b in list(gr)[:r]], F)
    D = Matrix.diag([t for t in thetas for _ in range(r)], F)
    M = A @ D @ mat_inverse(B)
    etas = _check_lrc_conditions(M, thetas, src_groups, dst_groups, C_groups, basis, s)
    return thetas, M, etas


def build_m_matrix_lrc(layout: LrcLayout, s: int) -> tuple[list[int], Matrix]:
    """``(theta_{s,.}, M_s)`` for ``2 <= s <= zeta``."""
    if not 2 <= s <= layout.zeta:
        raise ParameterError(f"s must lie in [2, {layout.zeta}]")
    thetas, M, _ = build_m_matrix_lrc_groups(
        layout.A_groups[0], layout.A_groups[s - 1], layout.C_groups, layout.g, layout.r, s
    )
    return thetas, M


@dataclass
class LrcConvertibleCode:
    """Initial/final LRC pair with the conversion matrices.

    Initial coordinates: groups ``A_{1,.}``, ``C``, ``B`` in order; final
    coordinates: ``A_{1,.}, ..., A_{zeta,.}``, ``C``. ``etas[s][i*r + j]``
    expresses ``M_s c_{i,j}`` in the basis ``{c_{i',j'} : j' <= r}`` and
    ``c_weights[s][i] = h_{G \\ G_s}(g(C_i))``.
    """

    layout: LrcLayout
    initial: LrcCode
    final: LrcCode
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
    def r(self) -> int:
        return self.layout.r

    @property
    def field(self) -> PrimeField:
        return self.layout.field

    @property
    def basis(self) -> XGBasis:
        return self.initial.basis

    def check_conditions(self) -> list:
        L = self.layout
        out = []
        for s, (M, th) in enumerate(zip(self.M_matrices, self.thetas), start=1):
            out.append(_check_lrc_conditions(
                M, th, L.A_groups[s - 1], L.A_groups[0], L.C_groups, self.basis, s
            ))
        return out

    def conversion_map(self, messages) -> Polynomial:
        """``T = sum_s (h_{G \\ G_s} o g) * M_s(f_s)`` for basis-coefficient messages."""
        F, L = self.field, self.layout
        G = L.G_sets
        total = Polynomial([], F)
        for s, (msg, M) in enumerate(zip(messages, self.M_matrices)):
            Mf = xg_to_monomial(M.left_mul(list(msg)), self.basis)
            others = [x for t, Gt in enumerate(G) if t != s for x in Gt]
            total = total + compose(annihilator(others, F), L.g) * Mf
        return total

    def convert(self, initials, validate: bool = True):
        return lrc_convert(self, initials, validate)

    def decode_final(self, word) -> list[list[int]]:
        """Recover the source messages: each ``A_s`` block holds ``c_s`` on ``A_1``."""
        if not self.final.contains(word):
            raise NotACodewordError("word is not in the final code")
        block = self.k * (self.r + 1)
        return [
            self.initial.decode_erasures({pos: word[s * block + pos] for pos in range(block)})
            for s in range(self.zeta)
        ]


def build_lrc_convertible(layout: LrcLayout) -> LrcConvertibleCode:
    F, L = layout.field, layout
    k, r = L.k, L.r
    initial = LrcCode(L.initial_groups(), L.g, k, r)
    basis = initial.basis
    Ms, thetas, etas = [], [], []
    for s in range(1, L.zeta + 1):
        if s == 1:
            M, th = Matrix.identity(k * r, F), [1] * k
            eta = _check_lrc_conditions(M, th, L.A_groups[0], L.A_groups[0], L.C_groups, basis, 1)
        else:
            th, M, eta = build_m_matrix_lrc_groups(L.A_groups[0], L.A_groups[s - 1], L.C_groups, L.g, r, s)
        if 0 in th:
            raise ConditionViolation(f"zero theta for s = {s}", (s,))
        Ms.append(M)
        thetas.append(th)
        etas.append(eta)
    G = L.G_sets
    mult, c_weights = [], []
    for s, row in enumerate(L.A_groups):
        others = [x for t, Gt in enumerate(G) if t != s for x in Gt]
        for i, gr in enumerate(row):
            u = F.inv(thetas[s][i] * annihilator_value(others, G[s][i], F))
            mult += [u] * (r + 1)
        c_weights.append([annihilator_value(others, c, F) for c in L.G0])
    mult += [1] * (L.l_final * (r + 1))
    final = LrcCode(L.final_groups(), L.g, L.zeta * k, r, mult)
    return LrcConvertibleCode(L, initial, final, Ms, thetas, etas, c_weights)


def lrc_convert(code: LrcConvertibleCode, initials, validate: bool = True) -> tuple[Codeword, ConversionTrace]:
    """Merge ``zeta`` initial codewords.

    A-blocks are kept verbatim. In each C-group the first ``r`` symbols are
    computed from the initial symbols at the first ``r`` points of every
    C-group; the last symbol is then repaired locally from those ``r`` new
    symbols.
    """
    L, F = code.layout, code.field
    k, r, z, p = L.k, L.r, L.zeta, F.p
    if len(initials) != z:
        raise ParameterError(f"expected {z} initial codewords, got {len(initials)}")
    if validate:
        for s, w in enumerate(initials):
            if not code.initial.contains(w):
                raise NotACodewordError(f"initial word {s + 1} is not a codeword")
    block = k * (r + 1)
    sources = [SourceWord(w) for w in initials]
    target = TargetWord(code.final.n)
    for s, src in enumerate(sources):
        for pos in range(block):
            target.keep(s * block + pos, src, s, pos)
    c_coords = [block + i * (r + 1) + j for i in range(L.l_final) for j in range(r)]
    at_c = [[src.read(pos) for pos in c_coords] for src in sources]
    used = [("initial", s, pos) for s in range(z) for pos in c_coords]
    repaired = []
    for i in range(L.l_final):
        base = z * block + i * (r + 1)
        for j in range(r):
            val = 0
            for s in range(z):
                inner = sum(e * v for e, v in zip(code.etas[s][i * r + j], at_c[s]))
                val += code.c_weights[s][i] * inner
            target.write(base + j, val % p, used)
        last = base + r
        target.write(last, code.final.repair(target, last), [("final", None, base + j) for j in range(r)])
        repaired.append(last)
    word = Codeword(target.symbols(), F, code.final.points.points, code.final.group_of)
    return word, ConversionTrace.from_logs(sources, target, repaired)


def plan_lrc_conversion(zeta: int, k: int, r: int, l_initial: int, l_final: int, field: PrimeField | None = None):
    """Build the convertible LRC, finding the smallest admissible prime if none is given."""
    if field is None:
        field = find_modulus(k * (r + 1), lrc_min_modulus(zeta, k, r, l_initial))
    return build_lrc_convertible(build_lrc_sets(zeta, k, r, l_initial, l_final, field))
