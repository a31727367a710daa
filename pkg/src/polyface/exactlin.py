"""Exact rational vectors, matrices and linear algebra.

Vectors are tuples of scalars and matrices are tuples of row tuples.  Every
function accepts any sequence of ints/rationals and coerces entries through
:func:`polyface._scalar.scalar`, so callers may pass plain ints or
``Fraction`` values.  Nothing here uses a tolerance.
"""

from math import gcd
from typing import NamedTuple, Sequence

from ._scalar import ONE, ZERO, Q, fmt, scalar
from .errors import UsageError


def vec(entries):
    return tuple(scalar(x) for x in entries)


def mat(rows):
    return tuple(vec(r) for r in rows)


def zeros(n):
    return (ZERO,) * n


def unit(n, i):
    return tuple(ONE if j == i else ZERO for j in range(n))


def dot(u, v):
    if len(u) != len(v):
        raise UsageError(f"dimension mismatch in dot product: {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v)), ZERO)


def vadd(u, v):
    if len(u) != len(v):
        raise UsageError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    if len(u) != len(v):
        raise UsageError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def vscale(t, u):
    return tuple(t * a for a in u)


def is_zero(u):
    return all(a == 0 for a in u)


def matvec(rows, x):
    return tuple(dot(r, x) for r in rows)


def transpose(rows, ncols=None):
    ncols = _ncols(rows, ncols)
    return tuple(tuple(r[j] for r in rows) for j in range(ncols))


def _ncols(rows, ncols):
    if ncols is not None:
        return ncols
    if not rows:
        raise UsageError("column count of an empty matrix must be given explicitly")
    return len(rows[0])


def rref(rows, ncols=None):
    """Reduced row echelon form.

    Returns ``(R, pivots)`` where ``R`` holds only the nonzero rows and
    ``pivots[i]`` is the pivot column of ``R[i]``.  Pivots are chosen as the
    first nonzero entry scanning columns left to right.
    """
    ncols = _ncols(rows, ncols)
    work = [list(map(scalar, r)) for r in rows]
    for r in work:
        if len(r) != ncols:
            raise UsageError("ragged matrix")
    pivots = []
    top = 0
    for col in range(ncols):
        if top == len(work):
            break
        src = next((i for i in range(top, len(work)) if work[i][col] != 0), None)
        if src is None:
            continue
        work[top], work[src] = work[src], work[top]
        prow = work[top]
        inv = ONE / prow[col]
        prow = work[top] = [a * inv for a in prow]
        for i, row in enumerate(work):
            if i != top and row[col] != 0:
                f = row[col]
                work[i] = [a - f * b for a, b in zip(row, prow)]
        pivots.append(col)
        top += 1
    return tuple(tuple(r) for r in work[:top]), tuple(pivots)


def rank(rows, ncols=None):
    if not rows:
        return 0
    return len(rref(rows, ncols)[1])


def kernel_basis(rows, ncols=None):
    """Basis of ``{x : M x = 0}``, one vector per free column in increasing order."""
    ncols = _ncols(rows, ncols)
    R, pivots = rref(rows, ncols) if rows else ((), ())
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [ZERO] * ncols
        v[free] = ONE
        for r, p in zip(R, pivots):
            v[p] = -r[free]
        basis.append(tuple(v))
    return basis


def solve_affine(rows, rhs, ncols=None):
    """Solve ``M x = rhs`` exactly.

    Returns ``None`` when the system is inconsistent, otherwise
    ``(particular, kernel)`` where ``particular`` has zeros at the free
    columns and ``kernel`` is :func:`kernel_basis` of ``M``.
    """
    ncols = _ncols(rows, ncols)
    if len(rhs) != len(rows):
        raise UsageError("right-hand side length differs from row count")
    aug = [tuple(r) + (b,) for r, b in zip(rows, rhs)]
    R, pivots = rref(aug, ncols + 1) if aug else ((), ())
    if pivots and pivots[-1] == ncols:
        return None
    x = [ZERO] * ncols
    for r, p in zip(R, pivots):
        x[p] = r[ncols]
    return tuple(x), kernel_basis(rows, ncols)


def in_span(basis, v):
    """True iff ``v`` is a linear combination of ``basis``."""
    if is_zero(v):
        return True
    if not basis:
        return False
    return rank(list(basis) + [v]) == rank(basis)


class LinRel(NamedTuple):
    """An affine relation ``normal . x (>= or =) offset``."""

    normal: tuple
    offset: object

    @classmethod
    def of(cls, normal, offset):
        return cls(vec(normal), scalar(offset))

    @property
    def dim(self):
        return len(self.normal)

    def value(self, x):
        """Slack ``normal . x - offset``."""
        return dot(self.normal, x) - self.offset

    def __neg__(self):
        return LinRel(tuple(-a for a in self.normal), -self.offset)

    def scale(self, t):
        return LinRel(vscale(t, self.normal), t * self.offset)

    def plus(self, other):
        return LinRel(vadd(self.normal, other.normal), self.offset + other.offset)

    def normalized(self):
        """Positive rescaling to coprime integer entries (the halfspace is unchanged)."""
        entries = self.normal + (self.offset,)
        den = 1
        for a in entries:
            d = int(a.denominator)
            den = den * d // gcd(den, d)
        ints = [int(a * den) for a in entries]
        g = 0
        for a in ints:
            g = gcd(g, a)
        if g == 0:
            return self
        return LinRel(tuple(Q(a // g) for a in ints[:-1]), Q(ints[-1] // g))

    def __str__(self):
        return " ".join(fmt(a) for a in self.normal) + " >= " + fmt(self.offset)


def span_dim(rels):
    """Dimension of the span of ``rels`` viewed as vectors ``(normal | offset)``."""
    rels = list(rels)
    if not rels:
        return 0
    return rank([tuple(e.normal) + (e.offset,) for e in rels])


def lincomb(coeffs: Sequence, rels: Sequence[LinRel]) -> LinRel:
    """``sum_i coeffs[i] * rels[i]`` in the module of relations."""
    if not rels:
        raise UsageError("empty combination has no ambient dimension")
    n = rels[0].dim
    normal = [ZERO] * n
    off = ZERO
    for c, e in zip(coeffs, rels):
        if c == 0:
            continue
        for j, a in enumerate(e.normal):
            normal[j] += c * a
        off += c * e.offset
    return LinRel(tuple(normal), off)
