"""Generalized Cartan matrices, symmetrizers, diagram types and positive roots.

All arithmetic is exact.  Root-lattice vectors are tuples of ints indexed by
the simple roots; the height of a vector is the sum of its coordinates.
"""

from __future__ import annotations

import enum
import itertools
import json
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import (
    AsymmetricZero,
    DiagonalNotTwo,
    InvalidGCM,
    NotSymmetrizable,
    PositiveOffDiagonal,
    RequiresSymmetrizable,
)


@dataclass(frozen=True)
class GCM:
    """A validated generalized Cartan matrix; ``a[i][j] = <alpha_i^vee, alpha_j>``."""

    matrix: tuple[tuple[int, ...], ...]
    name: str | None = None

    @property
    def rank(self) -> int:
        return len(self.matrix)

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(range(self.rank))

    def __getitem__(self, ij):
        i, j = ij
        return self.matrix[i][j]

    def coroot_pairing(self, j: int, beta: Sequence) -> int | Fraction:
        """Pairing of the simple coroot ``j`` with ``sum beta_i alpha_i``."""
        row = self.matrix[j]
        return sum(row[i] * b for i, b in enumerate(beta) if b)

    def components(self, J: Iterable[int]) -> list[tuple[int, ...]]:
        """Connected components of the Dynkin diagram restricted to ``J``."""
        remaining = set(J)
        comps = []
        while remaining:
            start = min(remaining)
            seen = {start}
            todo = [start]
            while todo:
                i = todo.pop()
                for j in remaining:
                    if j not in seen and self.matrix[i][j] != 0:
                        seen.add(j)
                        todo.append(j)
            remaining -= seen
            comps.append(tuple(sorted(seen)))
        return comps

    def submatrix(self, J: Sequence[int]) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(self.matrix[i][j] for j in J) for i in J)

    def to_json(self) -> dict:
        doc = {"matrix": [list(r) for r in self.matrix]}
        if self.name is not None:
            doc = {"name": self.name, **doc}
        return doc


def validate_gcm(matrix, name: str | None = None) -> GCM:
    rows = [list(r) for r in matrix]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise InvalidGCM("matrix is not square")
    for r in rows:
        for x in r:
            if isinstance(x, bool) or int(x) != x:
                raise InvalidGCM(f"entry {x!r} is not an integer")
    a = tuple(tuple(int(x) for x in r) for r in rows)
    for i in range(n):
        if a[i][i] != 2:
            raise DiagonalNotTwo(f"a[{i}][{i}] = {a[i][i]}, expected 2", i, i)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if a[i][j] > 0:
                raise PositiveOffDiagonal(
                    f"a[{i}][{j}] = {a[i][j]} is positive", i, j)
            if (a[i][j] == 0) != (a[j][i] == 0):
                raise AsymmetricZero(
                    f"a[{i}][{j}] = {a[i][j]} but a[{j}][{i}] = {a[j][i]}", i, j)
    return GCM(a, name)


def gcm_from_json(doc) -> GCM:
    if isinstance(doc, str):
        doc = json.loads(doc)
    return validate_gcm(doc["matrix"], doc.get("name"))


@dataclass(frozen=True)
class Symmetrizer:
    d: tuple[Fraction, ...]

    def gram(self, gcm: GCM) -> tuple[tuple[Fraction, ...], ...]:
        """Symmetric form ``(alpha_i, alpha_j) = d_i a_ij``."""
        n = gcm.rank
        return tuple(tuple(self.d[i] * gcm[i, j] for j in range(n))
                     for i in range(n))


def symmetrize(gcm: GCM) -> Symmetrizer:
    n = gcm.rank
    d: list[Fraction | None] = [None] * n
    for comp in gcm.components(range(n)):
        root = comp[0]
        d[root] = Fraction(1)
        todo = deque([root])
        while todo:
            i = todo.popleft()
            for j in comp:
                if j == i or gcm[i, j] == 0:
                    continue
                # d_i a_ij = d_j a_ji
                want = d[i] * gcm[i, j] / gcm[j, i]
                if d[j] is None:
                    d[j] = want
                    todo.append(j)
                elif d[j] != want:
                    raise NotSymmetrizable(
                        f"inconsistent symmetrizer ratio around nodes {i}, {j}")
        low = min(d[i] for i in comp)
        for i in comp:
            d[i] /= low
    return Symmetrizer(tuple(d))


def try_symmetrize(gcm: GCM) -> Symmetrizer | None:
    try:
        return symmetrize(gcm)
    except NotSymmetrizable:
        return None


class DiagramType(enum.Enum):
    FINITE = "finite"
    AFFINE = "affine"
    INDEFINITE = "indefinite"


def _det(rows) -> Fraction:
    m = [[Fraction(x) for x in r] for r in rows]
    n = len(m)
    det = Fraction(1)
    for k in range(n):
        piv = next((r for r in range(k, n) if m[r][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            det = -det
        det *= m[k][k]
        for r in range(k + 1, n):
            f = m[r][k] / m[k][k]
            if f:
                for c in range(k, n):
                    m[r][c] -= f * m[k][c]
    return det


def _component_type(gcm: GCM, comp: tuple[int, ...]) -> DiagramType:
    # indecomposable GCM: finite iff every principal minor is positive;
    # affine iff det = 0 and every proper principal minor is positive
    proper_ok = True
    for size in range(1, len(comp)):
        for sub in itertools.combinations(comp, size):
            if _det(gcm.submatrix(sub)) <= 0:
                proper_ok = False
                break
        if not proper_ok:
            break
    if not proper_ok:
        return DiagramType.INDEFINITE
    det = _det(gcm.submatrix(comp))
    if det > 0:
        return DiagramType.FINITE
    if det == 0:
        return DiagramType.AFFINE
    return DiagramType.INDEFINITE


def classify_subdiagram(gcm: GCM, J: Iterable[int]) -> DiagramType:
    """Type of the principal submatrix on ``J``.

    A decomposable submatrix is FINITE if every component is, AFFINE if every
    component is finite or affine with at least one affine, else INDEFINITE.
    """
    kinds = [_component_type(gcm, comp) for comp in gcm.components(J)]
    if DiagramType.INDEFINITE in kinds:
        return DiagramType.INDEFINITE
    if DiagramType.AFFINE in kinds:
        return DiagramType.AFFINE
    return DiagramType.FINITE


def is_finite_type(gcm: GCM, J: Iterable[int] | None = None) -> bool:
    if J is None:
        J = gcm.indices
    return classify_subdiagram(gcm, J) is DiagramType.FINITE


# ---------------------------------------------------------------------------
# roots

def height(beta: Sequence) -> int | Fraction:
    return sum(beta)


def root_sort_key(beta: Sequence):
    return (sum(beta), tuple(beta))


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All vectors of ``parts`` non-negative ints summing to ``total``, lex order."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def lattice_points(rank: int, N: int, support: Iterable[int] | None = None):
    """All ``m`` in Z>=0^rank of height <= N, nonzero only on ``support``."""
    if support is None:
        support = range(rank)
    support = sorted(support)
    for h in range(N + 1):
        for comp in compositions(h, len(support)):
            v = [0] * rank
            for i, x in zip(support, comp):
                v[i] = x
            yield tuple(v)


def simple_root(n: int, i: int) -> tuple[int, ...]:
    return tuple(1 if k == i else 0 for k in range(n))


def reflect_root(gcm: GCM, j: int, beta: Sequence) -> tuple:
    p = gcm.coroot_pairing(j, beta)
    if p == 0:
        return tuple(beta)
    out = list(beta)
    out[j] -= p
    return tuple(out)


def real_roots(gcm: GCM, N: int | None) -> frozenset[tuple[int, ...]]:
    """Positive real roots of height <= N by reflection BFS from simple roots.

    Every non-simple positive real root has a simple reflection lowering its
    height, so exploring height-increasing reflections only is exhaustive.
    ``N=None`` is allowed for finite type, where the set is finite.
    """
    n = gcm.rank
    if N is not None and N < 1:
        return frozenset()
    seen = {simple_root(n, i) for i in range(n)}
    todo = deque(seen)
    while todo:
        beta = todo.popleft()
        for j in range(n):
            p = gcm.coroot_pairing(j, beta)
            if p >= 0:
                continue
            nxt = reflect_root(gcm, j, beta)
            if N is not None and sum(nxt) > N:
                continue
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return frozenset(seen)


def _connected_support(gcm: GCM, beta: Sequence[int]) -> bool:
    supp = [i for i, b in enumerate(beta) if b]
    return len(gcm.components(supp)) == 1


@dataclass(frozen=True)
class RootDatum:
    """Positive roots of height <= cutoff with multiplicities."""

    cutoff: int
    mult: dict
    real: frozenset

    def roots(self) -> list[tuple[int, ...]]:
        return sorted(self.mult, key=root_sort_key)

    def is_real(self, beta) -> bool:
        return tuple(beta) in self.real

    def imaginary(self) -> list[tuple[int, ...]]:
        return [b for b in self.roots() if b not in self.real]

    def __len__(self):
        return len(self.mult)

    def __contains__(self, beta):
        return tuple(beta) in self.mult

    def restrict(self, J: Iterable[int]) -> "RootDatum":
        """Roots supported inside ``J`` (the roots of the Levi on ``J``)."""
        J = set(J)
        keep = {b: k for b, k in self.mult.items()
                if all(x == 0 or i in J for i, x in enumerate(b))}
        return RootDatum(self.cutoff, keep, frozenset(self.real & keep.keys()))

    def to_jsonl(self) -> str:
        lines = [json.dumps({"root": list(b), "mult": self.mult[b],
                             "real": b in self.real})
                 for b in self.roots()]
        return "\n".join(lines)


def positive_roots(gcm: GCM, symmetrizer: Symmetrizer | None, N: int) -> RootDatum:
    """Positive roots up to height ``N`` via the Peterson recurrence.

    With ``c_beta = sum_{k>=1} mult(beta/k)/k`` the recurrence reads
    ``(beta|beta - 2 rho) c_beta = sum_{beta'+beta''=beta} (beta'|beta'') c_beta' c_beta''``.
    """
    if symmetrizer is None:
        raise RequiresSymmetrizable(
            "root multiplicities need a symmetrizable matrix")
    if N < 0:
        raise ValueError("height cutoff must be non-negative")
    n = gcm.rank
    g = symmetrizer.gram(gcm)
    d = symmetrizer.d

    def form(x, y):
        s = Fraction(0)
        for i, xi in enumerate(x):
            if xi:
                row = g[i]
                for j, yj in enumerate(y):
                    if yj:
                        s += xi * yj * row[j]
        return s

    c: dict[tuple[int, ...], Fraction] = {}
    mult: dict[tuple[int, ...], int] = {}
    for h in range(1, N + 1):
        for beta in compositions(h, n):
            if h == 1:
                c[beta] = Fraction(1)
                mult[beta] = 1
                continue
            if not _connected_support(gcm, beta):
                continue
            lower = Fraction(0)
            for k in range(2, h + 1):
                if all(b % k == 0 for b in beta):
                    sub = tuple(b // k for b in beta)
                    if sub in mult:
                        lower += Fraction(mult[sub], k)
            coeff = form(beta, beta) - 2 * sum(b * d[i] for i, b in enumerate(beta))
            if coeff == 0:
                # every non-simple positive root has (beta|beta) < 2(rho|beta)
                if lower:
                    c[beta] = lower
                continue
            rhs = Fraction(0)
            for b1, c1 in c.items():
                if sum(b1) >= h:
                    continue
                b2 = tuple(x - y for x, y in zip(beta, b1))
                c2 = c.get(b2)
                if c2:
                    rhs += form(b1, b2) * c1 * c2
            cb = rhs / coeff
            m = cb - lower
            if m.denominator != 1 or m < 0:
                raise ArithmeticError(
                    f"Peterson recurrence produced multiplicity {m} at {beta}")
            if cb:
                c[beta] = cb
            if m:
                mult[beta] = int(m)
    real = real_roots(gcm, N)
    for beta in real:
        if mult.get(beta) != 1:
            raise ArithmeticError(
                f"real root {beta} has Peterson multiplicity {mult.get(beta)}")
    return RootDatum(N, mult, real)
