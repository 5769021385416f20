"""Truncated characters of parabolic Verma modules and related identities.

Three independent routes compute ``ch M(lambda, J)``:

* induction: Freudenthal character of the Levi simple times the inverse
  denominator over the roots outside the Levi;
* alternating: signed sum over ``W_J`` of dot-shifted Verma characters;
* Atiyah-Bott: sum over ``W_J`` of the ``w``-transported fraction
  ``e^lambda / prod_{alpha>0} (1 - e^{-alpha})^{mult alpha}``, each factor in
  the highest weight expansion.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .cartan import (
    GCM,
    RootDatum,
    Symmetrizer,
    is_finite_type,
    lattice_points,
    positive_roots,
    real_roots,
    symmetrize,
    try_symmetrize,
)
from .errors import (
    NotDominantIntegral,
    RequiresFiniteType,
    RequiresSymmetrizable,
    ZeroDenominator,
)
from .series import FormalSeries, product
from .weights import _check_integrability, integrability_of_simple
from .weyl import (
    Weight,
    WeylWord,
    act_on_root,
    all_group_elements,
    apply_word,
    dot_action,
    group_elements_bounded,
    is_positive,
    minimal_coset_reps,
    rebase,
)


def _symmetrizer(gcm: GCM) -> Symmetrizer:
    sym = try_symmetrize(gcm)
    if sym is None:
        raise RequiresSymmetrizable("characters need a symmetrizable matrix")
    return sym


class FreudenthalTable:
    """Memoized weight multiplicities of the integrable simple Levi module.

    ``mult(m)`` is the dimension of the ``lambda - m`` weight space of the
    simple module of the Levi on ``J`` with highest weight ``lambda``.
    Offsets are processed by increasing height.
    """

    def __init__(self, gcm: GCM, c, J: Iterable[int], N: int,
                 roots: RootDatum | None = None):
        self.gcm = gcm
        self.c = tuple(Fraction(x) for x in c)
        self.J = frozenset(J)
        for j in sorted(self.J):
            x = self.c[j]
            if x.denominator != 1 or x < 0:
                raise NotDominantIntegral(j, x)
        sym = _symmetrizer(gcm)
        self.d = sym.d
        self.gram = sym.gram(gcm)
        if roots is None or roots.cutoff < N:
            roots = positive_roots(gcm, sym, N)
        self.roots = [(b, k) for b, k in roots.restrict(self.J).mult.items()
                      if sum(b) <= N]
        # (lambda | alpha) and (alpha | alpha) per Levi root
        self._lam = {b: sum(b[i] * self.d[i] * self.c[i] for i in range(len(b)))
                     for b, _ in self.roots}
        self._norm = {b: self.form(b, b) for b, _ in self.roots}
        self._memo: dict = {}

    def form(self, x, y) -> Fraction:
        s = Fraction(0)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    if yj:
                        s += xi * yj * self.gram[i][j]
        return s

    def mult(self, m) -> int:
        m = tuple(int(x) for x in m)
        if any(x < 0 for x in m):
            return 0
        if any(x and i not in self.J for i, x in enumerate(m)):
            return 0
        if not any(m):
            return 1
        if m not in self._memo:
            self._memo[m] = self._compute(m)
        return self._memo[m]

    def _compute(self, m) -> int:
        n = len(m)
        # |lambda+rho|^2 - |lambda+rho-beta|^2 = 2(lambda+rho|beta) - |beta|^2
        lam_rho = sum(m[i] * self.d[i] * (self.c[i] + 1) for i in range(n))
        coeff = 2 * lam_rho - self.form(m, m)
        rhs = Fraction(0)
        for alpha, k_mult in self.roots:
            lam_a = self._lam[alpha]
            m_a = self.form(m, alpha)
            na = self._norm[alpha]
            k = 1
            while True:
                sub = tuple(x - k * a for x, a in zip(m, alpha))
                if any(x < 0 for x in sub):
                    break
                inner = self.mult(sub)
                if inner:
                    rhs += k_mult * (lam_a - m_a + k * na) * inner
                k += 1
        rhs *= 2
        if coeff == 0:
            if rhs == 0:
                return 0
            raise ZeroDenominator(f"vanishing norm difference at offset {m}")
        val = rhs / coeff
        if val.denominator != 1 or val < 0:
            raise ArithmeticError(f"Freudenthal produced {val} at offset {m}")
        return int(val)


def freudenthal_mult(gcm: GCM, c, J: Iterable[int], m) -> int:
    N = max(int(sum(m)), 0)
    return FreudenthalTable(gcm, c, J, N).mult(m)


def freudenthal_character(gcm: GCM, c, J: Iterable[int], N: int,
                          roots: RootDatum | None = None) -> FormalSeries:
    table = FreudenthalTable(gcm, c, J, N, roots)
    coeffs = {}
    for m in lattice_points(gcm.rank, N, sorted(table.J)):
        k = table.mult(m)
        if k:
            coeffs[m] = k
    return FormalSeries(tuple(c), N, coeffs)


def _roots(gcm: GCM, N: int, roots: RootDatum | None) -> RootDatum:
    if roots is not None and roots.cutoff >= N:
        return roots
    return positive_roots(gcm, _symmetrizer(gcm), N)


def verma_denominator_inverse(gcm: GCM, c, N: int, exclude: Iterable[int] = (),
                              roots: RootDatum | None = None) -> FormalSeries:
    """``prod (1 - e^{-alpha})^{-mult alpha}`` over positive roots not supported in ``exclude``."""
    roots = _roots(gcm, N, roots)
    ex = set(exclude)
    factors = []
    for beta, k in roots.mult.items():
        if sum(beta) > N:
            continue
        if all(x == 0 or i in ex for i, x in enumerate(beta)):
            continue
        factors.append(FormalSeries.geometric(c, N, beta, k))
    return product(factors, tuple(c), N)


def ch_parabolic_verma_induction(gcm: GCM, c, J: Iterable[int], N: int,
                                 roots: RootDatum | None = None) -> FormalSeries:
    J = _check_integrability(c, J)
    roots = _roots(gcm, N, roots)
    levi = freudenthal_character(gcm, c, J, N, roots)
    return levi * verma_denominator_inverse(gcm, c, N, J, roots)


def _dot_elements(gcm: GCM, c, J, N):
    # lambda + rho is strictly J-dominant, so the dot orbit has trivial isotropy
    shifted = Weight.at(tuple(Fraction(x) + 1 for x in c))
    return group_elements_bounded(gcm, shifted, J, N, mode="height")


def ch_parabolic_verma_alternating(gcm: GCM, c, J: Iterable[int], N: int,
                                   roots: RootDatum | None = None) -> FormalSeries:
    J = _check_integrability(c, J)
    roots = _roots(gcm, N, roots)
    signed = {}
    for el in _dot_elements(gcm, c, J, N):
        signed[el.offset] = signed.get(el.offset, 0) + (-1) ** el.word.length
    numerator = FormalSeries(tuple(c), N, signed)
    return numerator * verma_denominator_inverse(gcm, c, N, (), roots)


def ch_parabolic_verma_atiyahbott(gcm: GCM, c, J: Iterable[int], N: int,
                                  roots: RootDatum | None = None) -> FormalSeries:
    J = _check_integrability(c, J)
    roots = _roots(gcm, N, roots)
    lam = Weight.at(tuple(c))
    band = [(b, k) for b, k in roots.mult.items() if sum(b) <= N]
    total = FormalSeries(tuple(c), N, {})
    for el in _dot_elements(gcm, c, J, N):
        inv = el.word.inverse()
        factors = []
        shift = [0] * gcm.rank
        sign = 1
        inversions = 0
        for beta, k in band:
            if is_positive(act_on_root(gcm, inv, beta)):
                # beta = w(alpha) with alpha > 0
                factors.append(FormalSeries.geometric(c, N, beta, k))
            else:
                # beta = -w(alpha): (1 - e^{-w alpha})^{-k} = (-1)^k e^{k w alpha} (1 + e^{w alpha} + ...)^k
                inversions += 1
                sign *= (-1) ** k
                shift = [s + k * b for s, b in zip(shift, beta)]
                factors.append(FormalSeries.geometric(c, N, beta, k))
        if inversions < el.word.length:
            # an inverted root lies above the band; the summand vanishes there
            continue
        img = apply_word(gcm, el.word, lam)
        start = tuple(int(a + b) for a, b in zip(img.m, shift))
        term = FormalSeries.monomial(c, N, start, sign)
        total = total + term * product(factors, tuple(c), N)
    return total


def bggl_euler_character(gcm: GCM, c, J_sub: Iterable[int], J: Iterable[int],
                         N: int, L: int | None = None,
                         roots: RootDatum | None = None) -> FormalSeries:
    """``sum_{w} (-1)^{l(w)} ch M(w . lambda, J')`` over minimal coset representatives."""
    J = _check_integrability(c, J)
    J_sub = frozenset(J_sub)
    if not J_sub <= J:
        raise ValueError("need J' contained in J")
    roots = _roots(gcm, N, roots)
    lam = Weight.at(tuple(c))
    total = FormalSeries(tuple(c), N, {})
    for word in minimal_coset_reps(gcm, J_sub, J, L):
        image = dot_action(gcm, word, lam)
        h = sum(image.m)
        if h > N:
            continue
        c2 = rebase(gcm, image).c
        piece = ch_parabolic_verma_induction(gcm, c2, J_sub, int(N - h), roots)
        shifted = {tuple(int(a + b) for a, b in zip(m, image.m)): v
                   for m, v in piece.coeffs.items()}
        total = total + FormalSeries(tuple(c), N, shifted).scale((-1) ** len(word))
    return total


# ---------------------------------------------------------------------------
# finite-type denominator identity over all simple systems

def _laurent_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ea, va in a.items():
        for eb, vb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + va * vb
    return {e: v for e, v in out.items() if v}


def _one_minus(n: int, beta) -> dict:
    return {(0,) * n: 1, tuple(beta): -1}


@dataclass(frozen=True)
class DenominatorCheck:
    holds: bool
    roots: int
    simple_systems: int
    lhs: dict = field(repr=False)
    rhs: dict = field(repr=False)


def denominator_identity(gcm: GCM) -> DenominatorCheck:
    """Compare ``prod_{alpha in Delta} (1 - e^alpha)`` with
    ``sum_pi prod_{beta not in pi} (1 - e^beta)`` as Laurent polynomials."""
    if not is_finite_type(gcm):
        raise RequiresFiniteType("the identity is stated for finite type only")
    n = gcm.rank
    pos = sorted(real_roots(gcm, None))
    delta = pos + [tuple(-x for x in b) for b in pos]
    lhs = {(0,) * n: 1}
    for beta in delta:
        lhs = _laurent_mul(lhs, _one_minus(n, beta))
    systems = {frozenset(el.root_images) for el in all_group_elements(gcm, range(n))}
    rhs: dict = {}
    for pi in sorted(systems, key=sorted):
        term = {(0,) * n: 1}
        for beta in delta:
            if beta not in pi:
                term = _laurent_mul(term, _one_minus(n, beta))
        for e, v in term.items():
            rhs[e] = rhs.get(e, 0) + v
    rhs = {e: v for e, v in rhs.items() if v}
    return DenominatorCheck(lhs == rhs, len(delta), len(systems), lhs, rhs)


def denominator_identity_check(gcm: GCM) -> bool:
    return denominator_identity(gcm).holds


# ---------------------------------------------------------------------------
# rank-2 trivial module with infinite stabilizer

@dataclass(frozen=True)
class Rank2Report:
    cutoff: int
    length: int
    agree: bool
    rows: tuple     # (offset, expected, observed, stabilized_at)

    def to_json(self) -> dict:
        return {
            "cutoff": self.cutoff, "length": self.length, "agree": self.agree,
            "offsets": [{"offset": list(m), "expected": e, "observed": o,
                         "stabilized_at": s} for m, e, o, s in self.rows],
        }


def rank2_trivial_identity(gcm: GCM, N: int, L: int) -> Rank2Report:
    """Partial Weyl-Kac sums for ``L(0)`` against ``1 + sum_{imaginary beta} e^{-beta}``."""
    from .weights import weyl_kac_partial_sweep

    if gcm.rank != 2:
        raise ValueError("rank-2 identity needs a rank-2 matrix")
    roots = positive_roots(gcm, _symmetrizer(gcm), N)
    expected = {(0, 0): 1}
    for beta in roots.imaginary():
        expected[beta] = 1
    sweep = weyl_kac_partial_sweep(gcm, (0, 0), N, L)
    final = sweep[-1]
    rows = []
    agree = True
    for m in lattice_points(2, N):
        obs = final[m]
        stable = L
        while stable > 0 and sweep[stable - 1][m] == obs:
            stable -= 1
        exp = expected.get(m, 0)
        agree = agree and obs == exp
        rows.append((m, exp, obs, stable))
    return Rank2Report(N, L, agree, tuple(rows))
