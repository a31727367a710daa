"""Exact simplex for ``min c.x  s.t.  A x >= b`` with checkable certificates.

The program is never brought to primal standard form.  Instead the tableau
runs on its dual, ``min -b.y  s.t.  A^T y = c, y >= 0``, which already is in
standard form and has only ``n`` (ambient dimension) rows.  The primal point
is read back from the simplex multipliers.  Two-phase method, Bland's rule in
both phases, so the solver terminates on every input.

Outcomes carry certificates:

* :class:`Infeasible` -- Farkas multipliers ``y >= 0`` with ``y^T A = 0`` and
  ``y.b > 0``.
* :class:`Unbounded` -- a feasible point and a ray ``r`` with ``A r >= 0``
  and ``c.r < 0``.
* :class:`Optimal` -- a point, its value and dual multipliers with zero gap
  and complementary slackness.
"""

from dataclasses import dataclass
from typing import Sequence

from ._scalar import ONE, ZERO, Q
from .exactlin import LinRel, dot, is_zero, vec
from .errors import UsageError


@dataclass(frozen=True)
class LinProgram:
    constraints: tuple  # of LinRel, read as normal.x >= offset
    objective: tuple

    def __post_init__(self):
        object.__setattr__(self, "constraints", tuple(self.constraints))
        object.__setattr__(self, "objective", vec(self.objective))
        n = len(self.objective)
        for e in self.constraints:
            if e.dim != n:
                raise UsageError(f"constraint of dimension {e.dim} in a program of dimension {n}")

    @property
    def dim(self):
        return len(self.objective)


@dataclass(frozen=True)
class Infeasible:
    farkas: tuple


@dataclass(frozen=True)
class Unbounded:
    feasible: tuple
    ray: tuple


@dataclass(frozen=True)
class Optimal:
    point: tuple
    value: object
    dual: tuple


# -- standard-form kernel ---------------------------------------------------

def _pivot(T, rc, r, j):
    prow = T[r]
    inv = ONE / prow[j]
    prow = T[r] = [a * inv for a in prow]
    for i, row in enumerate(T):
        if i != r:
            f = row[j]
            if f != 0:
                T[i] = [a - f * b for a, b in zip(row, prow)]
    f = rc[j]
    if f != 0:
        rc[:] = [a - f * b for a, b in zip(rc, prow)]


def _bland(T, rc, basis, ncols):
    """Iterate until optimal (returns None) or unbounded (returns the column)."""
    while True:
        j = next((k for k in range(ncols) if rc[k] < 0), None)
        if j is None:
            return None
        best = None
        for i, row in enumerate(T):
            a = row[j]
            if a > 0:
                ratio = row[-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return j
        _pivot(T, rc, best[1], j)
        basis[best[1]] = j


def _reduced_costs(T, basis, cost):
    width = len(cost) + 1
    rc = list(cost) + [ZERO]
    for i, row in enumerate(T):
        cb = cost[basis[i]]
        if cb != 0:
            rc = [a - cb * b for a, b in zip(rc, row)]
    return rc[:width]


def simplex_standard(M, rhs, cost):
    """Minimise ``cost.y`` subject to ``M y = rhs`` and ``y >= 0``.

    Returns one of

    * ``("infeasible", pi)`` with ``pi.M_j <= 0`` for every column and ``pi.rhs > 0``;
    * ``("unbounded", y, d)`` with ``y`` feasible, ``M d = 0``, ``d >= 0``, ``cost.d < 0``;
    * ``("optimal", y, pi)`` with ``cost_j - pi.M_j >= 0`` and ``pi.rhs = cost.y``.
    """
    p = len(M)
    q = len(cost)
    signs = [ONE if b >= 0 else -ONE for b in rhs]
    T = []
    for i in range(p):
        s = signs[i]
        art = [ZERO] * p
        art[i] = ONE
        T.append([s * a for a in M[i]] + art + [s * rhs[i]])
    basis = [q + i for i in range(p)]

    phase1 = [ZERO] * q + [ONE] * p
    rc = _reduced_costs(T, basis, phase1)
    _bland(T, rc, basis, q + p)
    if -rc[-1] > 0:
        pi = [signs[k] * (ONE - rc[q + k]) for k in range(p)]
        return ("infeasible", tuple(pi))

    for i in range(p):
        if basis[i] >= q:
            j = next((k for k in range(q) if T[i][k] != 0), None)
            if j is not None:
                _pivot(T, rc, i, j)
                basis[i] = j

    phase2 = [Q(c) for c in cost] + [ZERO] * p
    rc = _reduced_costs(T, basis, phase2)
    col = _bland(T, rc, basis, q)
    y = [ZERO] * q
    for i, b in enumerate(basis):
        if b < q:
            y[b] = T[i][-1]
    if col is not None:
        d = [ZERO] * q
        d[col] = ONE
        for i, b in enumerate(basis):
            if b < q:
                d[b] = -T[i][col]
        return ("unbounded", tuple(y), tuple(d))
    pi = [signs[k] * -rc[q + k] for k in range(p)]
    return ("optimal", tuple(y), tuple(pi))


# -- public API -------------------------------------------------------------

def solve(lp: LinProgram):
    """Solve ``lp`` exactly; see the module docstring for the outcome contracts."""
    rows = lp.constraints
    m, n = len(rows), lp.dim
    keep = []
    for i, e in enumerate(rows):
        if is_zero(e.normal):
            if e.offset > 0:
                farkas = [ZERO] * m
                farkas[i] = ONE
                return Infeasible(tuple(farkas))
        else:
            keep.append(i)

    M = [[rows[i].normal[k] for i in keep] for k in range(n)]
    negb = [-rows[i].offset for i in keep]

    def spread(values):
        full = [ZERO] * m
        for i, v in zip(keep, values):
            full[i] = v
        return tuple(full)

    res = simplex_standard(M, lp.objective, negb)
    if res[0] == "optimal":
        _, y, pi = res
        x = tuple(-a for a in pi)
        dual = spread(y)
        return Optimal(x, sum((d * e.offset for d, e in zip(dual, rows)), ZERO), dual)
    if res[0] == "unbounded":
        return Infeasible(spread(res[2]))

    ray = tuple(-a for a in res[1])
    feas = simplex_standard(M, (ZERO,) * n, negb)
    if feas[0] == "unbounded":
        return Infeasible(spread(feas[2]))
    return Unbounded(tuple(-a for a in feas[2]), ray)


def minimize(constraints: Sequence[LinRel], objective):
    return solve(LinProgram(tuple(constraints), objective))


def feasible_point(constraints: Sequence[LinRel], dim):
    """Some point satisfying all constraints, or ``None``."""
    out = solve(LinProgram(tuple(constraints), (ZERO,) * dim))
    if isinstance(out, Optimal):
        return out.point
    return None


def verify_outcome(lp: LinProgram, out) -> bool:
    """Independent exact check of an outcome's certificate."""
    rows = lp.constraints
    m, n = len(rows), lp.dim
    c = lp.objective

    def feasible(x):
        return len(x) == n and all(dot(e.normal, x) >= e.offset for e in rows)

    if isinstance(out, Infeasible):
        y = out.farkas
        if len(y) != m or any(a < 0 for a in y):
            return False
        for k in range(n):
            if sum((a * e.normal[k] for a, e in zip(y, rows)), ZERO) != 0:
                return False
        return sum((a * e.offset for a, e in zip(y, rows)), ZERO) > 0
    if isinstance(out, Unbounded):
        r = out.ray
        if not feasible(out.feasible) or len(r) != n:
            return False
        return all(dot(e.normal, r) >= 0 for e in rows) and dot(c, r) < 0
    if isinstance(out, Optimal):
        x, y = out.point, out.dual
        if not feasible(x) or len(y) != m or any(a < 0 for a in y):
            return False
        for k in range(n):
            if sum((a * e.normal[k] for a, e in zip(y, rows)), ZERO) != c[k]:
                return False
        if sum((a * e.offset for a, e in zip(y, rows)), ZERO) != out.value:
            return False
        if dot(c, x) != out.value:
            return False
        return all(a == 0 or dot(e.normal, x) == e.offset for a, e in zip(y, rows))
    return False


def outcome_json(out):
    from ._scalar import fmt

    if isinstance(out, Infeasible):
        return {"status": "infeasible", "farkas": [fmt(a) for a in out.farkas]}
    if isinstance(out, Unbounded):
        return {
            "status": "unbounded",
            "feasible": [fmt(a) for a in out.feasible],
            "ray": [fmt(a) for a in out.ray],
        }
    return {
        "status": "optimal",
        "point": [fmt(a) for a in out.point],
        "value": fmt(out.value),
        "dual": [fmt(a) for a in out.dual],
    }
