"""Active sets, affine hulls, dimension and faces of polyhedra.

Dimensions follow the shifted convention of :func:`polyface.affine.adim`:
``pdim`` is 0 for the empty set, 1 for a point, 2 for a segment, and
``n + 1`` for a full-dimensional polyhedron of R^n.

Faces of ``P`` are enumerated over one fixed non-redundant base of ``P``; a
nonempty face is identified by its maximal active index set over that base.
"""

from dataclasses import dataclass
from functools import cached_property

from ._scalar import ONE, ZERO, Q, fmt
from .affine import EmptyAffine, adim, affine_json, affine_of_rels
from .exactlin import LinRel, dot, rank, unit, vadd, vec
from .errors import UsageError
from .lp import Infeasible, LinProgram, Optimal, Unbounded, minimize, solve
from .poly import Base, Poly, compact, conv, intersect, hp, poly0, poly_eq


def probe(rows, dim, candidates):
    """Find a point of ``{rows}`` and which candidate rows are implicit equalities.

    Solves one homogenised LP in ``(x, lam, t)``::

        max sum t   s.t.  a_i.x - b_i lam - t_i >= 0  (i candidate)
                          a_i.x - b_i lam       >= 0  (otherwise)
                          0 <= t <= 1,  lam >= 1

    Adding ``K (y, 1)`` for any point ``y`` only increases slacks, so at the
    optimum ``t_i > 0`` for every candidate that is not an implicit equality.
    Returns ``None`` if the system is infeasible, else ``(point, implicit)``
    where ``point = x / lam`` is strict on every non-implicit candidate.
    """
    cand = sorted(candidates)
    pos = {i: j for j, i in enumerate(cand)}
    k = len(cand)
    width = dim + 1 + k
    lp_rows = []
    for i, e in enumerate(rows):
        t = [ZERO] * k
        if i in pos:
            t[pos[i]] = -ONE
        lp_rows.append(LinRel(e.normal + (-e.offset,) + tuple(t), ZERO))
    for j in range(k):
        u = unit(width, dim + 1 + j)
        lp_rows.append(LinRel(u, ZERO))
        lp_rows.append(LinRel(tuple(-a for a in u), -ONE))
    lp_rows.append(LinRel(unit(width, dim), ONE))
    obj = (ZERO,) * (dim + 1) + (-ONE,) * k
    out = solve(LinProgram(tuple(lp_rows), obj))
    if not isinstance(out, Optimal):
        return None
    z = out.point
    lam = z[dim]
    point = tuple(a / lam for a in z[:dim])
    implicit = frozenset(i for i in cand if z[dim + 1 + pos[i]] == 0)
    return point, implicit


def _probe_poly(P: Poly):
    if "probe" not in P.memo:
        P.memo["probe"] = probe(P.rows, P.dim, range(len(P.rows)))
    return P.memo["probe"]


def hull(P: Poly):
    """Affine hull of ``P`` (the empty affine space when ``P`` is empty)."""
    if "hull" not in P.memo:
        res = _probe_poly(P)
        if res is None:
            P.memo["hull"] = EmptyAffine(P.dim)
        else:
            P.memo["hull"] = affine_of_rels([P.rows[i] for i in sorted(res[1])], P.dim)
    return P.memo["hull"]


def pdim(P: Poly) -> int:
    return adim(hull(P))


def _affine_in_hp(V, e):
    return dot(e.normal, V.origin) == e.offset and all(dot(e.normal, d) == 0 for d in V.dirs)


def active(base: Base, P: Poly) -> frozenset:
    """Indices ``i`` with ``P`` contained in the hyperplane of ``base[i]``.

    Every index when ``P`` is empty.  A hyperplane contains ``P`` iff it
    contains the affine hull of ``P``, which is what is tested.
    """
    V = hull(P)
    if isinstance(V, EmptyAffine):
        return base.indices
    return frozenset(i for i, e in enumerate(base.items) if _affine_in_hp(V, e))


def relint_pt(P: Poly, base: Base = None):
    """Isobarycentre of one strict point per inactive row of ``base``."""
    if P.is_empty:
        raise UsageError("relint_pt of an empty polyhedron")
    if base is None:
        base = Base.of(P.rows, P.dim)
    act = active(base, P)
    pts = []
    for i, e in enumerate(base.items):
        if i in act:
            continue
        out = minimize(P.rows, tuple(-a for a in e.normal))
        if isinstance(out, Optimal):
            pts.append(out.point)
        else:
            pts.append(vadd(out.feasible, out.ray))
    if not pts:
        return hull(P).origin
    k = Q(len(pts))
    return tuple(sum((p[j] for p in pts), ZERO) / k for j in range(P.dim))


def argmin(P: Poly, c) -> Poly:
    """Face of minimisers of ``c.x`` over ``P`` (``poly0`` if none)."""
    c = vec(c)
    out = minimize(P.rows, c)
    if not isinstance(out, Optimal):
        return poly0(P.dim)
    return intersect(P, hp(LinRel(c, out.value)))


@dataclass(frozen=True, eq=False)
class Face:
    """A face of a polyhedron, described over a fixed base."""

    base: Base
    active: frozenset
    rank: int
    point: tuple = None  # a relative-interior point, None for the empty face

    @property
    def is_empty(self):
        return self.rank == 0

    @property
    def key(self):
        return (self.is_empty, self.active)

    def __eq__(self, other):
        return isinstance(other, Face) and self.base == other.base and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    @cached_property
    def poly(self) -> Poly:
        if self.is_empty:
            return poly0(self.base.ambient)
        return poly_eq(self.base, self.active)

    @cached_property
    def hull(self):
        if self.is_empty:
            return EmptyAffine(self.base.ambient)
        return affine_of_rels([self.base.items[i] for i in sorted(self.active)], self.base.ambient)

    def sort_key(self):
        return (self.rank, sorted(self.active))

    def __repr__(self):
        return f"Face(rank={self.rank}, active={sorted(self.active)})"


def empty_face(base: Base) -> Face:
    return Face(base, base.indices, 0, None)


def face_of_eqs(base: Base, eqs) -> Face:
    """The face ``P^=(base; eqs)``, with its active set closed to the maximal one."""
    eqs = frozenset(eqs)
    rows = base.items + tuple(-base.items[i] for i in sorted(eqs))
    res = probe(rows, base.ambient, [i for i in range(len(base)) if i not in eqs])
    if res is None:
        return empty_face(base)
    point, implicit = res
    act = eqs | implicit
    r = rank([base.items[i].normal for i in act], base.ambient) if act else 0
    return Face(base, act, base.ambient - r + 1, point)


def face_set_over(base: Base):
    """All faces of ``P(base)`` by closing under intersection with base rows.

    Starting from the top face, each face is intersected with the hyperplane
    of every row it does not already satisfy with equality.  Every face is
    an intersection of facets, so the closure reaches all of them.
    """
    bottom = empty_face(base)
    top = face_of_eqs(base, ())
    if top.is_empty:
        return [bottom]
    found = {top.active: top}
    tried = {top.active}
    stack = [top]
    while stack:
        F = stack.pop()
        for e in range(len(base)):
            if e in F.active:
                continue
            J = F.active | {e}
            if J in tried:
                continue
            tried.add(J)
            G = face_of_eqs(base, J)
            if not G.is_empty and G.active not in found:
                found[G.active] = G
                stack.append(G)
    faces = sorted(found.values(), key=Face.sort_key)
    return [bottom] + faces


def face_base(P: Poly) -> Base:
    if "base" not in P.memo:
        P.memo["base"] = Base.nonredundant(P)
    return P.memo["base"]


def face_set(P: Poly):
    """All faces of ``P`` (bottom first, top last, sorted by rank)."""
    if "faces" not in P.memo:
        P.memo["faces"] = face_set_over(face_base(P))
    return P.memo["faces"]


def is_face(F: Poly, P: Poly, base: Base = None) -> bool:
    """Whether ``F`` equals ``P`` with some base rows turned into equalities."""
    if F.is_empty:
        return True
    if base is None:
        base = Base.of(P.rows, P.dim)
    if not F <= P:
        return False
    return F == poly_eq(base, active(base, F))


def facets(P: Poly):
    if P.is_empty:
        raise UsageError("facets of an empty polyhedron")
    base = face_base(P)
    top = face_of_eqs(base, ())
    out = {}
    for e in range(len(base)):
        if e not in top.active:
            G = face_of_eqs(base, top.active | {e})
            out.setdefault(G.active, G)
    return sorted(out.values(), key=Face.sort_key)


def vertex_set(P: Poly):
    """Vertices of ``P``, sorted lexicographically."""
    return sorted(F.point for F in face_set(P) if F.rank == 1)


def minkowski_check(P: Poly) -> bool:
    """``P == conv(vertex_set(P))``; always true for polytopes."""
    if not compact(P):
        raise UsageError("minkowski_check needs a compact polyhedron")
    return P == conv(vertex_set(P), dim=P.dim)


def dim2_segment(P: Poly):
    """Endpoints ``(x, y)`` of a compact ``P`` of dimension 2 (a segment)."""
    if not compact(P) or pdim(P) != 2:
        raise UsageError("dim2_segment needs a compact polyhedron with pdim 2")
    d = hull(P).dirs[0]
    x = minimize(P.rows, d).point
    y = minimize(P.rows, tuple(-a for a in d)).point
    return x, y


def face_json(F: Face, vertices=None):
    out = {"active": sorted(F.active), "rank": F.rank, "hull": affine_json(F.hull)}
    if vertices is not None:
        out["vertices"] = [[fmt(a) for a in v] for v in vertices]
    return out
