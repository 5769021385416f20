"""Weights in basepoint-plus-offset coordinates and the Weyl group action.

A :class:`Weight` stores the pairings ``c[i] = <alpha_i^vee, lambda>`` of a
basepoint ``lambda`` and an offset ``m`` meaning ``lambda - sum m_i alpha_i``.
A word ``(i1, ..., ik)`` stands for ``s_i1 ... s_ik`` and acts right to left.

Group elements are keyed by the image of an auxiliary weight whose pairings
are 1 on the subgroup's generators; that weight is regular dominant, so the
key is injective on the subgroup.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .cartan import GCM, DiagramType, classify_subdiagram
from .errors import (
    InfiniteStabilizer,
    NonIntegralPairing,
    NotDominant,
    NotInTitsCone,
)


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or an integer string."""
    return Fraction(text.strip())


@dataclass(frozen=True)
class Weight:
    c: tuple
    m: tuple

    def __post_init__(self):
        if len(self.c) != len(self.m):
            raise ValueError("basepoint and offset have different lengths")
        object.__setattr__(self, "c", tuple(_frac(x) for x in self.c))
        object.__setattr__(self, "m", tuple(_frac(x) for x in self.m))

    @classmethod
    def at(cls, c, m=None) -> "Weight":
        if m is None:
            m = (0,) * len(c)
        return cls(tuple(c), tuple(m))

    @property
    def height(self) -> Fraction:
        return sum(self.m, Fraction(0))

    def pairing(self, gcm: GCM, j: int) -> Fraction:
        return self.c[j] - gcm.coroot_pairing(j, self.m)

    def pairings(self, gcm: GCM) -> tuple:
        return tuple(self.pairing(gcm, j) for j in range(len(self.c)))

    def with_offset(self, m) -> "Weight":
        return Weight(self.c, tuple(m))

    def to_json(self) -> dict:
        return {"c": [str(x) for x in self.c], "m": [str(x) for x in self.m]}

    @classmethod
    def from_json(cls, doc) -> "Weight":
        return cls(tuple(parse_rational(str(x)) for x in doc["c"]),
                   tuple(parse_rational(str(x)) for x in doc["m"]))


def rebase(gcm: GCM, w: Weight) -> Weight:
    """The same weight written as a basepoint with zero offset."""
    return Weight(w.pairings(gcm), (0,) * len(w.c))


@dataclass(frozen=True)
class WeylWord:
    indices: tuple = ()

    @property
    def length(self) -> int:
        return len(self.indices)

    def __len__(self):
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def inverse(self) -> "WeylWord":
        return WeylWord(tuple(reversed(self.indices)))

    def to_json(self) -> list:
        return list(self.indices)


def reflect(gcm: GCM, j: int, w: Weight) -> Weight:
    p = w.pairing(gcm, j)
    if p == 0:
        return w
    m = list(w.m)
    m[j] += p
    return Weight(w.c, tuple(m))


def apply_word(gcm: GCM, word: WeylWord | Sequence[int], w: Weight) -> Weight:
    for j in reversed(tuple(word)):
        w = reflect(gcm, j, w)
    return w


def act_on_root(gcm: GCM, word: WeylWord | Sequence[int], beta: Sequence) -> tuple:
    beta = list(beta)
    for j in reversed(tuple(word)):
        p = gcm.coroot_pairing(j, beta)
        beta[j] -= p
    return tuple(beta)


def is_positive(beta: Sequence) -> bool:
    """Sign test for a root (all coordinates share one sign)."""
    return all(x >= 0 for x in beta) and any(x > 0 for x in beta)


def _is_integer(x) -> bool:
    return _frac(x).denominator == 1


def require_integral(gcm: GCM, w: Weight, J: Iterable[int]) -> None:
    for j in J:
        p = w.pairing(gcm, j)
        if not _is_integer(p):
            raise NonIntegralPairing(j, p)


def is_dominant(gcm: GCM, w: Weight, J: Iterable[int]) -> bool:
    return all(w.pairing(gcm, j) >= 0 for j in J)


def to_dominant(gcm: GCM, w: Weight, J: Iterable[int], max_steps: int = 10_000):
    """Raise ``w`` to the ``J``-dominant chamber.

    Returns ``(dominant, word)`` with ``apply_word(word, w) == dominant``.
    The smallest index with negative pairing is reflected at each step.
    """
    if max_steps < 1:
        raise ValueError("max_steps must be at least 1")
    J = sorted(J)
    applied = []
    for _ in range(max_steps):
        for j in J:
            if w.pairing(gcm, j) < 0:
                w = reflect(gcm, j, w)
                applied.append(j)
                break
        else:
            return w, WeylWord(tuple(reversed(applied)))
    if all(w.pairing(gcm, j) >= 0 for j in J):
        return w, WeylWord(tuple(reversed(applied)))
    raise NotInTitsCone(
        f"no J-dominant weight reached within {max_steps} steps", max_steps)


@dataclass(frozen=True)
class OrbitSlice:
    c: tuple
    offsets: frozenset
    cutoff: int | None
    J: frozenset

    def sorted_offsets(self) -> list:
        return sorted(self.offsets, key=lambda m: (sum(m), m))


def orbit(gcm: GCM, w: Weight, J: Iterable[int], N: int | None,
          max_steps: int = 10_000) -> OrbitSlice:
    """Offsets of the ``W_J``-orbit of ``w`` with height <= ``N``.

    The search starts from the ``J``-dominant representative: along any
    reduced path out of it the height never decreases, so pruning at ``N``
    loses nothing.  ``N=None`` enumerates the whole (finite) orbit.
    """
    J = frozenset(J)
    require_integral(gcm, w, J)
    top, _ = to_dominant(gcm, w, J, max_steps)
    seen = {top.m}
    todo = deque([top])
    while todo:
        x = todo.popleft()
        for j in sorted(J):
            y = reflect(gcm, j, x)
            if N is not None and y.height > N:
                continue
            if y.m not in seen:
                seen.add(y.m)
                todo.append(y)
    offs = frozenset(m for m in seen if N is None or sum(m) <= N)
    return OrbitSlice(w.c, frozenset(tuple(_intify(x) for x in m) for m in offs),
                      N, J)


def _intify(x):
    x = _frac(x)
    return int(x) if x.denominator == 1 else x


def stabilizer_simple_generators(gcm: GCM, w: Weight, J: Iterable[int]) -> frozenset:
    J = frozenset(J)
    if not is_dominant(gcm, w, J):
        raise NotDominant("weight is not J-dominant")
    return frozenset(j for j in J if w.pairing(gcm, j) == 0)


def isotropy_is_finite(gcm: GCM, w: Weight, J: Iterable[int]) -> bool:
    stab = stabilizer_simple_generators(gcm, w, J)
    return classify_subdiagram(gcm, stab) is DiagramType.FINITE


class GroupElement(NamedTuple):
    word: WeylWord
    offset: tuple            # offset of w(lambda) relative to the basepoint
    root_images: tuple       # w(alpha_i) for every i in I


def group_elements_bounded(gcm: GCM, lam: Weight, J: Iterable[int],
                           N: int | None = None, mode: str = "height",
                           length: int | None = None) -> list[GroupElement]:
    """Enumerate elements of ``W_J`` together with their action.

    ``mode="height"``: every ``w`` with ``height(lambda - w lambda) <= N``;
    needs ``lambda`` to be ``J``-dominant with finite isotropy.  Expanding
    only length-increasing edges is exhaustive since along them the pairing
    of ``w lambda`` with the reflected coroot is non-negative.
    ``mode="length"``: every ``w`` with ``l(w) <= length``; ``length=None``
    enumerates a finite ``W_J`` completely.
    """
    J = tuple(sorted(set(J)))
    n = gcm.rank
    if mode == "height":
        if N is None:
            raise ValueError("height mode needs a cutoff N")
        require_integral(gcm, lam, J)
        if not is_dominant(gcm, lam, J):
            raise NotDominant("height-pruned enumeration needs a J-dominant weight")
        if not isotropy_is_finite(gcm, lam, J):
            raise InfiniteStabilizer(
                "the stabilizer of the weight in W_J is infinite")
    elif mode == "length":
        if length is None and classify_subdiagram(gcm, J) is not DiagramType.FINITE:
            raise InfiniteStabilizer("W_J is infinite; give a length bound")
    else:
        raise ValueError(f"unknown enumeration mode {mode!r}")

    aux = Weight(tuple(1 if i in J else 0 for i in range(n)), (0,) * n)
    start_roots = tuple(tuple(1 if k == i else 0 for k in range(n))
                        for i in range(n))
    start = (WeylWord(), lam, aux, start_roots)
    seen = {aux.m}
    out = []
    frontier = [start]
    level = 0
    while frontier:
        nxt = []
        for word, img, key, roots in frontier:
            out.append(GroupElement(word, tuple(_intify(x) for x in img.m), roots))
            if mode == "length" and length is not None and level >= length:
                continue
            for j in J:
                # s_j w is longer than w iff <alpha_j^vee, w(aux)> > 0
                if key.pairing(gcm, j) <= 0:
                    continue
                new_img = reflect(gcm, j, img)
                if mode == "height" and new_img.height > N:
                    continue
                new_key = reflect(gcm, j, key)
                if new_key.m in seen:
                    continue
                seen.add(new_key.m)
                new_roots = tuple(_reflect_vec(gcm, j, r) for r in roots)
                nxt.append((WeylWord((j,) + word.indices), new_img, new_key,
                            new_roots))
        frontier = nxt
        level += 1
    return out


def _reflect_vec(gcm: GCM, j: int, beta):
    p = gcm.coroot_pairing(j, beta)
    if p == 0:
        return beta
    out = list(beta)
    out[j] -= p
    return tuple(out)


def all_group_elements(gcm: GCM, J: Iterable[int]) -> list[GroupElement]:
    """All of a finite ``W_J`` (acting on the zero weight)."""
    n = gcm.rank
    return group_elements_bounded(gcm, Weight((0,) * n, (0,) * n), J,
                                  mode="length", length=None)


def minimal_coset_reps(gcm: GCM, J_sub: Iterable[int], J: Iterable[int],
                       L: int | None = None) -> list[WeylWord]:
    """Minimal length representatives of ``W_J' \\ W_J`` of length <= ``L``.

    ``w`` is minimal in ``W_J' w`` iff ``w(aux)`` is strictly ``J'``-dominant.
    """
    J = set(J)
    J_sub = set(J_sub)
    if not J_sub <= J:
        raise ValueError("J' must be a subset of J")
    n = gcm.rank
    aux = Weight(tuple(1 if i in J else 0 for i in range(n)), (0,) * n)
    reps = []
    for el in group_elements_bounded(gcm, aux, J, mode="length", length=L):
        img = Weight(aux.c, el.offset)
        if all(img.pairing(gcm, j) > 0 for j in J_sub):
            reps.append(el.word)
    return reps


def dot_action(gcm: GCM, word: WeylWord | Sequence[int], w: Weight) -> Weight:
    """``w . mu = w(mu + rho) - rho`` with ``rho`` any weight of pairings 1."""
    shifted = Weight(tuple(x + 1 for x in w.c), w.m)
    used = set(word)
    require_integral(gcm, shifted, used)
    out = apply_word(gcm, word, shifted)
    return Weight(w.c, out.m)
