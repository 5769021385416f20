"""Independent brute-force oracles.

Nothing here imports the library's enumeration code; the oracles work in
fundamental-weight (pairing) coordinates or with explicit matrices.
"""

from fractions import Fraction
from itertools import product


def solve(A, b):
    """Solve ``A x = b`` over the rationals (A invertible)."""
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(A, b)]
    for k in range(n):
        piv = next(r for r in range(k, n) if M[r][k] != 0)
        M[k], M[piv] = M[piv], M[k]
        M[k] = [x / M[k][k] for x in M[k]]
        for r in range(n):
            if r != k and M[r][k]:
                f = M[r][k]
                M[r] = [x - f * y for x, y in zip(M[r], M[k])]
    return [M[r][n] for r in range(n)]


def brute_symmetrizer(a, limit=6):
    """Smallest-denominator search for ``d`` with ``d_i a_ij = d_j a_ji``, min d = 1."""
    n = len(a)
    cands = sorted({Fraction(p, q) for p in range(1, limit + 1) for q in range(1, limit + 1)})
    for d in product(cands, repeat=n):
        if min(d) != 1:
            continue
        if all(d[i] * a[i][j] == d[j] * a[j][i] for i in range(n) for j in range(n)):
            return d
    return None


def cycle_condition(a):
    """Symmetrizability test for a 3-cycle: a01 a12 a20 == a10 a21 a02."""
    return a[0][1] * a[1][2] * a[2][0] == a[1][0] * a[2][1] * a[0][2]


def reflect_pairings(a, j, p):
    pj = p[j]
    return tuple(p[i] - a[i][j] * pj for i in range(len(p)))


def finite_orbit_pairings(a, p, J):
    seen = {tuple(p)}
    todo = [tuple(p)]
    while todo:
        x = todo.pop()
        for j in J:
            y = reflect_pairings(a, j, x)
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def offsets_from_pairings(a, c, pairings):
    """``m`` with ``c - A m = p`` (finite type, A invertible)."""
    return [tuple(int(x) if Fraction(x).denominator == 1 else x
                  for x in solve(a, [ci - pi for ci, pi in zip(c, p)]))
            for p in pairings]


def brute_orbit(a, c, J, N=None):
    offs = offsets_from_pairings(a, c, finite_orbit_pairings(a, c, J))
    return {m for m in offs if N is None or sum(m) <= N}


def reflection_matrix(a, j):
    """Action of ``s_j`` on root-lattice coordinates (columns = images of alpha_i)."""
    n = len(a)
    M = [[int(r == c) for c in range(n)] for r in range(n)]
    for i in range(n):
        M[j][i] -= a[j][i]
    return tuple(tuple(r) for r in M)


def matmul(A, B):
    n = len(A)
    return tuple(tuple(sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n))
                 for i in range(n))


def brute_weyl_group(a, J=None, max_len=None):
    """Map matrix -> length for the subgroup generated by ``s_j, j in J``."""
    n = len(a)
    J = range(n) if J is None else sorted(J)
    ident = tuple(tuple(int(r == c) for c in range(n)) for r in range(n))
    gens = [reflection_matrix(a, j) for j in J]
    lengths = {ident: 0}
    frontier = [ident]
    k = 0
    while frontier and (max_len is None or k < max_len):
        k += 1
        nxt = []
        for g in frontier:
            for s in gens:
                h = matmul(s, g)
                if h not in lengths:
                    lengths[h] = k
                    nxt.append(h)
        frontier = nxt
    return lengths, gens


def brute_coset_reps(a, J_sub, J):
    """Minimal lengths of the right cosets ``W_J' w`` inside a finite ``W_J``."""
    group, _ = brute_weyl_group(a, J)
    sub, _ = brute_weyl_group(a, J_sub)
    seen = set()
    reps = []
    for g in sorted(group, key=lambda x: group[x]):
        if g in seen:
            continue
        coset = {matmul(h, g) for h in sub}
        seen |= coset
        reps.append(min(group[x] for x in coset))
    return sorted(reps)


def weyl_dimension(a, d, c):
    """``prod_{alpha>0} (lambda+rho|alpha)/(rho|alpha)`` for finite type."""
    n = len(a)
    group, _ = brute_weyl_group(a)
    roots = set()
    for g in group:
        for i in range(n):
            col = tuple(g[r][i] for r in range(n))
            if all(x >= 0 for x in col):
                roots.add(col)
    num = Fraction(1)
    for beta in roots:
        top = sum(beta[i] * d[i] * (c[i] + 1) for i in range(n))
        bot = sum(beta[i] * d[i] for i in range(n))
        num *= Fraction(top, 1) / bot
    return num


def kostant_partition(roots_with_mult, m):
    """Number of ways to write ``m`` as a sum of positive roots, roots coloured by multiplicity."""
    items = []
    for beta, k in roots_with_mult:
        items += [beta] * k
    target = tuple(m)
    memo = {}

    def count(idx, rest):
        if not any(rest):
            return 1
        if idx == len(items):
            return 0
        key = (idx, rest)
        if key in memo:
            return memo[key]
        total = 0
        beta = items[idx]
        cur = rest
        while all(x >= 0 for x in cur):
            total += count(idx + 1, cur)
            cur = tuple(x - y for x, y in zip(cur, beta))
        memo[key] = total
        return total

    return count(0, target)


def a1xa1_pbw_witness(N):
    """Weights of ``M(0) / <f_0 f_1 v>`` over A1 x A1, as offsets.

    The f's commute, ``M(0)`` has PBW basis ``f_0^a f_1^b v`` and the submodule
    generated by ``f_0 f_1 v`` is spanned by monomials with ``a, b >= 1``.
    """
    return {(a, b) for a in range(N + 1) for b in range(N + 1)
            if a + b <= N and (a == 0 or b == 0)}


def sl2_string(top, N):
    return {(k,) for k in range(top + 1) if k <= N}
