"""Convex hulls of parabolic Verma weights from their vertex-and-ray presentation.

Everything lives in offset coordinates: the point ``m`` is the weight
``lambda - sum m_i alpha_i``.  The hull of ``M(lambda, J)`` is the convex hull
of the ``W_J``-orbit of ``lambda`` plus the cone on the ``W_J``-images of the
simple roots outside ``J``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .cartan import GCM, DiagramType, classify_subdiagram, is_finite_type, lattice_points
from .errors import RequiresFiniteType, TruncationUncertain
from .lp import is_feasible
from .weights import WeightSet
from .weyl import (
    Weight,
    WeylWord,
    act_on_root,
    group_elements_bounded,
    orbit,
    require_integral,
)


def _num(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else x


def _sort(points):
    return sorted(points, key=lambda p: (sum(p), tuple(p)))


@dataclass(frozen=True)
class HullPresentation:
    c: tuple
    J: frozenset
    vertices: frozenset
    rays: frozenset
    truncated: bool

    def to_json(self) -> dict:
        return {"vertices": [[str(x) for x in v] if any(isinstance(x, Fraction) for x in v)
                             else list(v) for v in _sort(self.vertices)],
                "rays": [list(r) for r in _sort(self.rays)],
                "truncated": self.truncated}


def ray_decomposition(gcm: GCM, c, J: Iterable[int], N: int | None = None) -> HullPresentation:
    """Vertices ``W_J lambda`` and rays ``w(alpha_i)``, ``w in W_J``, ``i`` outside ``J``.

    For finite-type ``J`` the whole orbit is used and the presentation is exact;
    otherwise orbit and group are cut at ``N`` and the result is flagged as
    truncated.
    """
    J = frozenset(J)
    lam = Weight.at(tuple(c))
    require_integral(gcm, lam, J)
    finite = classify_subdiagram(gcm, J) is DiagramType.FINITE
    if not finite and N is None:
        raise ValueError("infinite W_J needs a height cutoff")
    if finite:
        verts = orbit(gcm, lam, J, None).offsets
        elements = group_elements_bounded(gcm, lam, J, mode="length", length=None)
    else:
        verts = orbit(gcm, lam, J, N).offsets
        elements = group_elements_bounded(gcm, lam, J, mode="length", length=N)
    outside = [i for i in range(gcm.rank) if i not in J]
    rays = frozenset(el.root_images[i] for el in elements for i in outside)
    return HullPresentation(tuple(Fraction(x) for x in c), J,
                            frozenset(tuple(_num(x) for x in v) for v in verts),
                            rays, not finite)


def _in_polyhedron(vertices: Sequence, rays: Sequence, point: Sequence) -> bool:
    n = len(point)
    cols = [list(v) + [1] for v in vertices] + [list(r) + [0] for r in rays]
    A = [[col[k] for col in cols] for k in range(n + 1)]
    return is_feasible(A, list(point) + [1])


def _in_cone(rays: Sequence, direction: Sequence) -> bool:
    if not any(direction):
        return True
    if not rays:
        return False
    n = len(direction)
    A = [[r[k] for r in rays] for k in range(n)]
    return is_feasible(A, list(direction))


def hull_contains(h: HullPresentation, m: Sequence) -> bool:
    if h.truncated:
        raise TruncationUncertain(
            "membership cannot be decided from a truncated presentation")
    return _in_polyhedron(_sort(h.vertices), _sort(h.rays), m)


def wt_via_hull(gcm: GCM, c, J: Iterable[int], N: int) -> WeightSet:
    """Integer offsets of height ``<= N`` inside the hull of ``M(lambda, J)``."""
    h = ray_decomposition(gcm, c, J, N)
    if h.truncated:
        raise TruncationUncertain("hull route needs a finite-type integrability")
    verts, rays = _sort(h.vertices), _sort(h.rays)
    offs = frozenset(m for m in lattice_points(gcm.rank, N)
                     if _in_polyhedron(verts, rays, m))
    return WeightSet(tuple(c), offs, N)


@dataclass(frozen=True)
class HullStabilizer:
    generators: frozenset
    elements: tuple       # words of every w in W with w(conv) = conv

    def to_json(self) -> dict:
        return {"generators": sorted(self.generators),
                "elements": [list(w.indices) for w in self.elements]}


def hull_stabilizer(gcm: GCM, h: HullPresentation) -> HullStabilizer:
    """Setwise stabilizer in ``W`` of the polyhedron ``conv(vertices) + cone(rays)``."""
    if not is_finite_type(gcm):
        raise RequiresFiniteType("the stabilizer search enumerates all of W")
    if h.truncated:
        raise TruncationUncertain("presentation is truncated")
    n = gcm.rank
    lam = Weight.at(h.c)
    verts, rays = _sort(h.vertices), _sort(h.rays)
    elements = group_elements_bounded(gcm, lam, range(n), mode="length", length=None)

    def image(el, m):
        out = [Fraction(x) for x in el.offset]
        for i, mi in enumerate(m):
            if mi:
                out = [o + mi * r for o, r in zip(out, el.root_images[i])]
        return out

    def linear(el, r):
        out = [0] * n
        for i, ri in enumerate(r):
            if ri:
                out = [o + ri * x for o, x in zip(out, el.root_images[i])]
        return out

    into = set()
    for el in elements:
        if all(_in_polyhedron(verts, rays, image(el, v)) for v in verts) and \
                all(_in_cone(rays, linear(el, r)) for r in rays):
            into.add(el.root_images)

    def inverse_key(word: WeylWord):
        inv = word.inverse()
        return tuple(act_on_root(gcm, inv, tuple(int(k == i) for k in range(n)))
                     for i in range(n))

    stab = [el.word for el in elements
            if el.root_images in into and inverse_key(el.word) in into]
    gens = frozenset(w.indices[0] for w in stab if w.length == 1)
    return HullStabilizer(gens, tuple(stab))
