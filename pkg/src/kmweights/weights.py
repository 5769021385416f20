"""Weight sets of highest weight modules.

Every set is truncated at a height cutoff and stored as offsets below the
highest weight.  The primary route is the integrable slice decomposition;
the orbit route and the signed Weyl-Kac expansion are independent
computations of the same sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .cartan import GCM, lattice_points
from .errors import IntegrabilityTooLarge, InfiniteStabilizer, NotDominantIntegral
from .series import FormalSeries
from .weyl import (
    Weight,
    group_elements_bounded,
    is_dominant,
    is_positive,
    isotropy_is_finite,
    orbit,
)


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def _fmt(c) -> list[str]:
    return [str(_frac(x)) for x in c]


def offset_key(m):
    return (sum(m), tuple(m))


@dataclass(frozen=True)
class WeightSet:
    c: tuple
    offsets: frozenset
    cutoff: int

    def __post_init__(self):
        object.__setattr__(self, "c", tuple(_frac(x) for x in self.c))
        object.__setattr__(self, "offsets",
                           frozenset(tuple(int(x) for x in m) for m in self.offsets))

    def __contains__(self, m):
        return tuple(m) in self.offsets

    def __len__(self):
        return len(self.offsets)

    def __iter__(self):
        return iter(self.sorted_offsets())

    def sorted_offsets(self) -> list:
        return sorted(self.offsets, key=offset_key)

    def truncate(self, N: int) -> "WeightSet":
        return WeightSet(self.c, frozenset(m for m in self.offsets if sum(m) <= N), N)

    def to_json(self) -> dict:
        return {"basepoint": _fmt(self.c), "cutoff": self.cutoff,
                "offsets": [list(m) for m in self.sorted_offsets()]}


@dataclass(frozen=True)
class ModuleSpec:
    c: tuple
    J: frozenset


@dataclass(frozen=True)
class Undetermined:
    """The weights depend on the module, not only on its highest weight and integrability."""

    spec: ModuleSpec
    potential: frozenset
    complete: bool
    reason: str = "diagram not complete"

    def to_json(self) -> dict:
        return {"undetermined": True, "reason": self.reason,
                "lepowsky_complete": self.complete,
                "potential_integrability": sorted(self.potential)}


def _is_nonneg_int(x) -> bool:
    x = _frac(x)
    return x.denominator == 1 and x >= 0


def integrability_of_simple(c) -> frozenset:
    return frozenset(i for i, x in enumerate(c) if _is_nonneg_int(x))


def _check_integrability(c, J) -> frozenset:
    J = frozenset(J)
    if not J <= integrability_of_simple(c):
        bad = sorted(J - integrability_of_simple(c))
        raise IntegrabilityTooLarge(
            f"indices {bad} are not in the integrability of L(lambda)")
    return J


def potential_integrability(spec: ModuleSpec) -> frozenset:
    J = _check_integrability(spec.c, spec.J)
    return integrability_of_simple(spec.c) - J


def _shifted_pairings(gcm: GCM, c, mu) -> tuple:
    return Weight(tuple(c), tuple(mu)).pairings(gcm)


def _levi_member(gcm: GCM, c, J, m) -> bool:
    w = Weight(tuple(c), tuple(m))
    # raising only lowers offsets; once one is negative the dominant
    # representative cannot lie below lambda
    while True:
        for j in J:
            if w.pairing(gcm, j) < 0:
                p = w.pairing(gcm, j)
                mm = list(w.m)
                mm[j] += p
                if mm[j] < 0:
                    return False
                w = Weight(w.c, tuple(mm))
                break
        else:
            break
    supp = [i for i, x in enumerate(w.m) if x]
    return all(any(c[i] != 0 for i in comp) for comp in gcm.components(supp))


def wt_integrable_simple_levi(gcm: GCM, c, J: Iterable[int], N: int) -> WeightSet:
    """Weights of the integrable simple module of the Levi on ``J``.

    ``m`` qualifies when the ``J``-dominant representative of ``lambda - m``
    lies below ``lambda`` and every connected component of the support of
    the difference meets an index where ``lambda`` has nonzero pairing.
    """
    J = tuple(sorted(set(J)))
    for j in J:
        if not _is_nonneg_int(c[j]):
            raise NotDominantIntegral(j, c[j])
    offs = frozenset(m for m in lattice_points(gcm.rank, N, J)
                     if _levi_member(gcm, c, J, m))
    return WeightSet(tuple(c), offs, N)


def integrable_slices(gcm: GCM, c, J: Iterable[int], N: int,
                      levi: Iterable[int] | None = None) -> dict:
    """Slices ``mu -> wt L_J(lambda - mu)`` with offsets measured from ``lambda``."""
    J = _check_integrability(c, J)
    K = frozenset(range(gcm.rank)) if levi is None else frozenset(levi)
    if not J <= K:
        raise ValueError("integrability must lie inside the Levi")
    slices = {}
    for mu in lattice_points(gcm.rank, N, sorted(K - J)):
        c2 = _shifted_pairings(gcm, c, mu)
        piece = wt_integrable_simple_levi(gcm, c2, J, N - sum(mu))
        slices[mu] = WeightSet(
            tuple(c), frozenset(tuple(a + b for a, b in zip(m, mu))
                                for m in piece.offsets), N)
    return slices


def wt_parabolic_verma(gcm: GCM, c, J: Iterable[int], N: int,
                       levi: Iterable[int] | None = None) -> WeightSet:
    """Weights of ``M(lambda, J)``, or of its Levi analogue when ``levi`` is given."""
    out = set()
    for piece in integrable_slices(gcm, c, J, N, levi).values():
        out |= piece.offsets
    return WeightSet(tuple(c), frozenset(out), N)


def wt_slice_decomposition(gcm: GCM, c, J: Iterable[int], J2: Iterable[int],
                           N: int) -> dict:
    """Pieces ``wt M_{l_J2}(lambda - mu, J)`` for ``mu`` supported off ``J2``."""
    J = _check_integrability(c, J)
    J2 = frozenset(J2)
    if not J <= J2:
        raise ValueError("need J contained in J'")
    pieces = {}
    for mu in lattice_points(gcm.rank, N, sorted(set(range(gcm.rank)) - J2)):
        c2 = _shifted_pairings(gcm, c, mu)
        piece = wt_parabolic_verma(gcm, c2, J, N - sum(mu), levi=J2)
        pieces[mu] = WeightSet(
            tuple(c), frozenset(tuple(a + b for a, b in zip(m, mu))
                                for m in piece.offsets), N)
    return pieces


def wt_simple(gcm: GCM, c, N: int) -> WeightSet:
    return wt_parabolic_verma(gcm, c, integrability_of_simple(c), N)


def lepowsky_complete(gcm: GCM, c, J: Iterable[int]) -> bool:
    Jp = sorted(potential_integrability(ModuleSpec(tuple(c), frozenset(J))))
    return all(gcm[j, k] != 0 for j in Jp for k in Jp if j != k)


def wt_highest_weight_module(gcm: GCM, spec: ModuleSpec, N: int):
    """Weights shared by every module with this highest weight and integrability.

    Returns :class:`Undetermined` when the potential integrability is not a
    complete diagram; then different modules have different weights.
    """
    Jp = potential_integrability(spec)
    complete = lepowsky_complete(gcm, spec.c, spec.J)
    if len(Jp) <= 1 or complete:
        return wt_parabolic_verma(gcm, spec.c, spec.J, N)
    return Undetermined(spec, Jp, complete)


def wt_parabolic_via_orbit(gcm: GCM, c, J: Iterable[int], N: int) -> WeightSet:
    """``W_J``-orbits of the ``J``-dominant weights below ``lambda``."""
    J = _check_integrability(c, J)
    lam = Weight.at(tuple(c))
    if not isotropy_is_finite(gcm, lam, J):
        raise InfiniteStabilizer("lambda has infinite isotropy in W_J")
    out = set()
    for m in lattice_points(gcm.rank, N):
        if m in out:
            continue
        nu = Weight(tuple(c), m)
        if is_dominant(gcm, nu, J):
            out |= orbit(gcm, nu, J, N).offsets
    return WeightSet(tuple(c), frozenset(out), N)


def wt_simple_via_orbit(gcm: GCM, c, N: int) -> WeightSet:
    return wt_parabolic_via_orbit(gcm, c, integrability_of_simple(c), N)


def _weyl_kac_term(c, N, el) -> FormalSeries:
    term = FormalSeries.monomial(c, N, el.offset)
    for r in el.root_images:
        if is_positive(r):
            term = term * FormalSeries.geometric(c, N, r)
        else:
            neg = tuple(-x for x in r)
            term = -(term * FormalSeries.geometric(c, N, neg)).shift(neg)
    return term


def weyl_kac_weight_series(gcm: GCM, c, N: int,
                           J: Iterable[int] | None = None) -> FormalSeries:
    """Signed sum over ``W_J`` of ``w(e^lambda / prod_i (1 - e^{-alpha_i}))``.

    Each factor uses the highest weight expansion; only group elements with
    ``height(lambda - w lambda) <= N`` can reach the band.
    """
    J = integrability_of_simple(c) if J is None else _check_integrability(c, J)
    lam = Weight.at(tuple(c))
    total = FormalSeries(tuple(c), N, {})
    for el in group_elements_bounded(gcm, lam, J, N, mode="height"):
        total = total + _weyl_kac_term(c, N, el)
    return total


def weyl_kac_partial_sweep(gcm: GCM, c, N: int, L: int) -> list[FormalSeries]:
    """Partial sums over ``l(w) <= k`` for ``k = 0..L``."""
    J = integrability_of_simple(c)
    lam = Weight.at(tuple(c))
    by_len: dict[int, FormalSeries] = {}
    for el in group_elements_bounded(gcm, lam, J, mode="length", length=L):
        k = el.word.length
        term = _weyl_kac_term(c, N, el)
        by_len[k] = by_len[k] + term if k in by_len else term
    sums = []
    acc = FormalSeries(tuple(c), N, {})
    for k in range(L + 1):
        if k in by_len:
            acc = acc + by_len[k]
        sums.append(acc)
    return sums


def weyl_kac_partial_sums(gcm: GCM, c, N: int, L: int) -> FormalSeries:
    return weyl_kac_partial_sweep(gcm, c, N, L)[-1]
