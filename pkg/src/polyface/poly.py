"""Polyhedra as point sets.

:class:`Poly` wraps an :class:`~polyface.hrep.HPoly` but compares by the set
it describes: ``P == Q`` means equal point sets and ``P <= Q`` means
inclusion, both decided by exact LPs.  Polys are therefore unhashable; use a
:class:`Base` and active index sets where hashable keys are needed.
"""

from dataclasses import dataclass, field
from functools import cached_property

from ._scalar import ONE, ZERO, Q, fmt, parse_rational
from .exactlin import LinRel, dot, unit, vec
from .errors import ParseError, UsageError
from . import hrep as H
from .lp import Infeasible, LinProgram, Optimal, Unbounded, feasible_point, minimize, solve


class Poly:
    """A polyhedron ``{x : A x >= b}`` with set semantics."""

    def __init__(self, hpoly: H.HPoly):
        self.hrep = hpoly
        self.memo = {}

    @property
    def dim(self):
        return self.hrep.dim

    @property
    def rows(self):
        return self.hrep.rows

    @cached_property
    def is_empty(self) -> bool:
        return H.is_empty(self.hrep)

    def __contains__(self, x):
        return H.member(self.hrep, x)

    def __le__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.is_empty or H.subset(self.hrep, other.hrep)

    def __ge__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return other <= self

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self <= other and other <= self

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __lt__(self, other):
        return self <= other and not other <= self

    __hash__ = None

    def __and__(self, other):
        return intersect(self, other)

    def __repr__(self):
        return f"Poly(dim={self.dim}, rows={len(self.rows)})"

    def __str__(self):
        return H.format_hformat(self.hrep)


def poly(dim, rows=()):
    return Poly(H.HPoly(dim, tuple(rows)))


def hs(e: LinRel) -> Poly:
    return Poly(H.HPoly(e.dim, (e,)))


def hp(e: LinRel) -> Poly:
    return Poly(H.HPoly(e.dim, (e, -e)))


def poly0(n) -> Poly:
    return Poly(H.HPoly.empty(n))


def polyT(n) -> Poly:
    return Poly(H.HPoly(n, ()))


def intersect(P: Poly, Q_: Poly) -> Poly:
    if P.dim != Q_.dim:
        raise UsageError(f"dimension mismatch: {P.dim} vs {Q_.dim}")
    return Poly(P.hrep.with_rows(Q_.rows))


# -- bases -------------------------------------------------------------------

@dataclass(frozen=True)
class Base:
    """An indexed finite set of normalised relations (read as inequalities)."""

    ambient: int
    items: tuple = ()

    @classmethod
    def of(cls, rels, ambient=None):
        rels = list(rels)
        if ambient is None:
            if not rels:
                raise UsageError("ambient dimension needed for an empty base")
            ambient = rels[0].dim
        seen = set()
        items = []
        for e in rels:
            e = e.normalized()
            if e.dim != ambient:
                raise UsageError("relation of the wrong dimension in a base")
            if e not in seen:
                seen.add(e)
                items.append(e)
        return cls(ambient, tuple(items))

    @classmethod
    def nonredundant(cls, P: Poly):
        """A non-redundant base of ``P`` (the canonical empty row when ``P`` is empty)."""
        return cls.of(H.remove_redundancy(P.hrep).rows, P.dim)

    def __len__(self):
        return len(self.items)

    def __getitem__(self, i):
        return self.items[i]

    @property
    def indices(self):
        return frozenset(range(len(self.items)))


@dataclass(frozen=True)
class EqSpec:
    base: Base
    eqs: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        eqs = frozenset(self.eqs)
        for i in eqs:
            if not 0 <= i < len(self.base):
                raise UsageError(f"index {i} out of range for a base of size {len(self.base)}")
        object.__setattr__(self, "eqs", eqs)


def poly_of_base(base: Base) -> Poly:
    return Poly(H.HPoly(base.ambient, base.items))


def poly_eq(base, eqs=()) -> Poly:
    """``P(base)`` with the relations indexed by ``eqs`` forced to equality."""
    spec = base if isinstance(base, EqSpec) else EqSpec(base, frozenset(eqs))
    b = spec.base
    extra = tuple(-b.items[i] for i in sorted(spec.eqs))
    return Poly(H.HPoly(b.ambient, b.items + extra))


# -- images and hulls -----------------------------------------------------------

def map_poly(A, P: Poly, threshold=None) -> Poly:
    """Image ``{A x : x in P}``: lift to ``(y, x)``, impose ``y = A x``, drop ``x``."""
    A = [vec(r) for r in A]
    n = P.dim
    k = len(A)
    for r in A:
        if len(r) != n:
            raise UsageError(f"matrix has {len(r)} columns, polyhedron dimension is {n}")
    zk = (ZERO,) * k
    rows = [LinRel(zk + e.normal, e.offset) for e in P.rows]
    for i, r in enumerate(A):
        e = LinRel(unit(k, i) + tuple(-a for a in r), ZERO)
        rows += [e, -e]
    lifted = H.HPoly(k + n, tuple(rows))
    return Poly(H.project_out(lifted, range(k, k + n), threshold))


def _distinct(points):
    seen = set()
    out = []
    for p in points:
        p = vec(p)
        if p not in seen:
            seen.add(p)
            out.append(p)
    return out


def conv(V, dim=None, threshold=None) -> Poly:
    """Convex hull of finitely many points, as the image of the simplex."""
    V = _distinct(V)
    if not V:
        if dim is None:
            raise UsageError("dimension needed for the hull of no points")
        return poly0(dim)
    n = len(V[0])
    if any(len(v) != n for v in V):
        raise UsageError("points of different dimensions")
    if len(V) == 1:
        return pt(V[0])
    p = len(V)
    zn = (ZERO,) * n
    rows = [LinRel(zn + unit(p, i), ZERO) for i in range(p)]
    total = LinRel(zn + (ONE,) * p, ONE)
    rows += [total, -total]
    for k in range(n):
        e = LinRel(unit(n, k) + tuple(-v[k] for v in V), ZERO)
        rows += [e, -e]
    lifted = H.HPoly(n + p, tuple(rows))
    return Poly(H.project_out(lifted, range(n, n + p), threshold))


def pt(x) -> Poly:
    x = vec(x)
    n = len(x)
    rows = []
    for i, a in enumerate(x):
        e = LinRel(unit(n, i), a)
        rows += [e, -e]
    return Poly(H.HPoly(n, tuple(rows)))


def segm(x, y) -> Poly:
    x, y = vec(x), vec(y)
    if len(x) != len(y):
        raise UsageError("dimension mismatch")
    return conv([x, y])


def _simplex_system(V, x):
    """Rows of ``{mu >= 0, sum mu = 1, V mu = x}`` in the variables ``mu``."""
    p = len(V)
    n = len(x)
    rows = [LinRel(unit(p, i), ZERO) for i in range(p)]
    total = LinRel((ONE,) * p, ONE)
    rows += [total, -total]
    for k in range(n):
        e = LinRel(tuple(v[k] for v in V), x[k])
        rows += [e]
    for k in range(n):
        rows += [-LinRel(tuple(v[k] for v in V), x[k])]
    return rows


@dataclass(frozen=True)
class ConvexWitness:
    weights: dict  # point -> positive weight, summing to one

    @property
    def support(self):
        return frozenset(self.weights)

    def combine(self):
        pts = list(self.weights)
        n = len(pts[0])
        return tuple(sum((self.weights[v] * v[k] for v in pts), ZERO) for k in range(n))


def conv_witness(V, x):
    """Convex weights on ``V`` whose barycentre is ``x``, or ``None``."""
    x = vec(x)
    V = _distinct(V)
    if any(len(v) != len(x) for v in V):
        raise UsageError("dimension mismatch")
    mu = feasible_point(_simplex_system(V, x), len(V))
    if mu is None:
        return None
    return ConvexWitness({v: w for v, w in zip(V, mu) if w != 0})


def separation(V, x):
    """A relation ``e`` with ``x`` strictly outside ``hs(e)`` and ``V`` inside.

    ``None`` when ``x`` lies in ``conv(V)``.  Built from the Farkas
    certificate of the weight system used by :func:`conv_witness`.
    """
    x = vec(x)
    n = len(x)
    V = _distinct(V)
    if any(len(v) != n for v in V):
        raise UsageError("dimension mismatch")
    p = len(V)
    out = solve(LinProgram(tuple(_simplex_system(V, x)), (ZERO,) * p))
    if not isinstance(out, Infeasible):
        return None
    y = out.farkas
    a = y[p] - y[p + 1]
    w = [y[p + 2 + k] - y[p + 2 + n + k] for k in range(n)]
    return LinRel(tuple(-c for c in w), a)


def bounded(P: Poly, c) -> bool:
    """True iff ``c.x`` is bounded below on ``P``."""
    return not isinstance(minimize(P.rows, vec(c)), Unbounded)


def compact(P: Poly) -> bool:
    if "compact" not in P.memo:
        n = P.dim
        P.memo["compact"] = P.is_empty or all(
            bounded(P, unit(n, i)) and bounded(P, tuple(-a for a in unit(n, i))) for i in range(n))
    return P.memo["compact"]


# -- V-format text ----------------------------------------------------------

def parse_vformat(text):
    """Parse ``dim <n>`` followed by ``point x1 ... xn`` lines. Returns ``(dim, points)``."""
    dim = None
    points = []
    for lineno, line in enumerate(text.splitlines(), 1):
        toks = list(H._tokens(line))
        if not toks:
            continue
        head, col = toks[0]
        if head == "dim":
            if dim is not None:
                raise ParseError("duplicate 'dim' line", lineno, col)
            if len(toks) != 2 or not toks[1][0].isdigit():
                raise ParseError("expected 'dim <n>'", lineno, col)
            dim = int(toks[1][0])
        elif head == "point":
            if dim is None:
                raise ParseError("'dim' must come before any point", lineno, col)
            if len(toks) != dim + 1:
                raise ParseError(f"expected {dim} coordinates", lineno, col)
            points.append(tuple(H._rational(t, lineno, c) for t, c in toks[1:]))
        else:
            raise ParseError(f"unknown keyword {head!r}", lineno, col)
    if dim is None:
        raise ParseError("missing 'dim' line")
    return dim, points


def format_vformat(dim, points):
    lines = [f"dim {dim}"]
    for p in points:
        lines.append("point " + " ".join(fmt(a) for a in p))
    return "\n".join(lines) + "\n"


def parse_matrix(text):
    """``rows cols`` header then row-major rationals, whitespace separated."""
    toks = []
    for lineno, line in enumerate(text.splitlines(), 1):
        toks += [(t, lineno, c) for t, c in H._tokens(line)]
    if len(toks) < 2:
        raise ParseError("expected a 'rows cols' header")
    try:
        r, c = int(toks[0][0]), int(toks[1][0])
    except ValueError:
        raise ParseError("header must be two integers", toks[0][1], toks[0][2]) from None
    body = toks[2:]
    if len(body) != r * c:
        raise ParseError(f"expected {r * c} entries, found {len(body)}")
    vals = [H._rational(t, ln, col) for t, ln, col in body]
    return tuple(tuple(vals[i * c:(i + 1) * c]) for i in range(r)), c
