"""Brute-force oracles, independent of the library's solver paths.

Linear algebra here is a small Gauss-Jordan over ``fractions.Fraction`` and
shares no code with ``polyface.exactlin``.
"""

import random
from fractions import Fraction
from itertools import combinations


def F(a):
    """Plain ``Fraction`` with int parts, whatever rational type comes in."""
    if isinstance(a, int):
        return Fraction(a)
    return Fraction(int(a.numerator), int(a.denominator))


def _solve(A, b, n):
    """A particular solution of ``A x = b`` (free variables 0) or ``None``."""
    rows = [[F(a) for a in r] + [F(v)] for r, v in zip(A, b)]
    piv = []
    top = 0
    for col in range(n):
        src = next((i for i in range(top, len(rows)) if rows[i][col] != 0), None)
        if src is None:
            continue
        rows[top], rows[src] = rows[src], rows[top]
        p = rows[top][col]
        rows[top] = [a / p for a in rows[top]]
        for i in range(len(rows)):
            if i != top and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * c for a, c in zip(rows[i], rows[top])]
        piv.append(col)
        top += 1
    for r in rows[top:]:
        if r[n] != 0:
            return None
    x = [Fraction(0)] * n
    for r, c in zip(rows, piv):
        x[c] = r[n]
    return tuple(x)


def _rank(A, n):
    rows = [[F(a) for a in r] for r in A]
    r = 0
    for col in range(n):
        src = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if src is None:
            continue
        rows[r], rows[src] = rows[src], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col] / rows[r][col]
                rows[i] = [a - f * c for a, c in zip(rows[i], rows[r])]
        r += 1
    return r


def _feasible(rows, x):
    return all(sum(F(a) * xi for a, xi in zip(nrm, x)) >= F(off) for nrm, off in rows)


def vertices(rows, n):
    """Vertices of ``{x : a.x >= b}``: unique solutions of n tight rows that are feasible."""
    out = set()
    for S in combinations(range(len(rows)), n):
        A = [rows[i][0] for i in S]
        if _rank(A, n) != n:
            continue
        x = _solve(A, [rows[i][1] for i in S], n)
        if x is not None and _feasible(rows, x):
            out.add(x)
    return out


def lp_classify(rows, c, n):
    """``("infeasible",)``, ``("unbounded",)`` or ``("optimal", value)``.

    Feasibility and the optimum come from particular solutions of tight
    subsystems of at most ``n`` rows (every minimal face is such an affine
    set); boundedness from a Caratheodory search for ``c`` in the cone of the
    row normals.
    """
    cands = []
    for k in range(0, min(n, len(rows)) + 1):
        for S in combinations(range(len(rows)), k):
            x = _solve([rows[i][0] for i in S], [rows[i][1] for i in S], n)
            if x is not None and _feasible(rows, x):
                cands.append(x)
    if not cands:
        return ("infeasible",)
    c = [F(a) for a in c]
    in_cone = False
    for k in range(0, min(n, len(rows)) + 1):
        for S in combinations(range(len(rows)), k):
            cols = [rows[i][0] for i in S]
            # solve sum_j y_j cols[j] = c
            A = [[cols[j][r] for j in range(k)] for r in range(n)]
            y = _solve(A, c, k) if k else (() if all(a == 0 for a in c) else None)
            if y is None:
                continue
            if k and _rank(cols, n) != k:
                continue
            if all(v >= 0 for v in y):
                in_cone = True
                break
        if in_cone:
            break
    if not in_cone:
        return ("unbounded",)
    return ("optimal", min(sum(a * b for a, b in zip(c, x)) for x in cands))


def exists_lift(rows, x):
    """Whether some ``t`` puts ``(t, x)`` in ``{a.z >= b}`` (1-variable system)."""
    lo, hi = None, None
    for nrm, off in rows:
        a0 = F(nrm[0])
        rest = F(off) - sum(F(a) * xi for a, xi in zip(nrm[1:], x))
        if a0 == 0:
            if rest > 0:
                return False
        elif a0 > 0:
            v = rest / a0
            lo = v if lo is None or v > lo else lo
        else:
            v = rest / a0
            hi = v if hi is None or v < hi else hi
    return lo is None or hi is None or lo <= hi


def faces_by_subsets(base):
    """Every ``P^=(base; I)`` for ``I`` a subset of the base, deduplicated by set equality."""
    from polyface.poly import poly_eq

    out = []
    for k in range(len(base) + 1):
        for I in combinations(range(len(base)), k):
            G = poly_eq(base, I)
            if G.is_empty:
                continue
            if not any(G == H for H in out):
                out.append(G)
    return out


# -- random instances ------------------------------------------------------

def random_rational(rng, lo=-6, hi=6, maxden=3):
    return Fraction(rng.randint(lo, hi), rng.randint(1, maxden))


def random_points(rng, k, d):
    return [tuple(random_rational(rng) for _ in range(d)) for _ in range(k)]


def random_rows(rng, n, m, lo=-5, hi=5, feasible_bias=0.8):
    """Random ``(normal, offset)`` rows; usually feasible at a random point, often degenerate."""
    p = [F(rng.randint(-2, 2)) for _ in range(n)]
    anchored = rng.random() < feasible_bias
    rows = []
    for _ in range(m):
        a = tuple(F(rng.randint(lo, hi)) for _ in range(n))
        if anchored:
            b = sum(x * y for x, y in zip(a, p)) - rng.randint(0, 3)
        else:
            b = F(rng.randint(lo, hi))
        rows.append((a, b))
    return rows


def rng(seed):
    return random.Random(seed)
