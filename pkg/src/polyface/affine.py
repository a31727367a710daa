"""Affine subspaces: empty, or an origin plus a direction basis.

Flats are stored canonically: the direction basis is in reduced row echelon
form and the origin is reduced against it (zero at every pivot coordinate),
so two flats describe the same set iff they compare equal.
"""

from dataclasses import dataclass

from ._scalar import ZERO, fmt
from .exactlin import (LinRel, dot, kernel_basis, rank, rref, solve_affine, vec,
                       vsub)
from .errors import UsageError


class EmptyAffine:
    """The empty affine space (a singleton per ambient dimension)."""

    __slots__ = ("dim",)

    def __init__(self, dim):
        self.dim = dim

    def __eq__(self, other):
        return isinstance(other, EmptyAffine) and other.dim == self.dim

    def __hash__(self):
        return hash(("EmptyAffine", self.dim))

    def __repr__(self):
        return f"EmptyAffine({self.dim})"


@dataclass(frozen=True)
class Flat:
    origin: tuple
    dirs: tuple = ()

    @property
    def dim(self):
        return len(self.origin)


def make_flat(origin, dirs):
    """Canonical :class:`Flat` through ``origin`` spanned by ``dirs``."""
    origin = vec(origin)
    n = len(origin)
    dirs = [vec(d) for d in dirs]
    if not dirs:
        return Flat(origin, ())
    R, pivots = rref(dirs, n)
    o = list(origin)
    for r, p in zip(R, pivots):
        t = o[p]
        if t != 0:
            o = [a - t * b for a, b in zip(o, r)]
    return Flat(tuple(o), R)


def affine_of_rels(rels, dim=None):
    """Solution set of ``{e.normal . x = e.offset : e in rels}``."""
    rels = list(rels)
    if dim is None:
        if not rels:
            raise UsageError("ambient dimension needed for an empty relation set")
        dim = rels[0].dim
    if not rels:
        return make_flat((ZERO,) * dim, kernel_basis((), dim))
    sol = solve_affine([e.normal for e in rels], [e.offset for e in rels], dim)
    if sol is None:
        return EmptyAffine(dim)
    return make_flat(*sol)


def adim(V) -> int:
    """Dimension shifted by one: 0 for the empty space, 1 for a point."""
    if isinstance(V, EmptyAffine):
        return 0
    return len(V.dirs) + 1


def member_affine(V, x) -> bool:
    x = vec(x)
    if len(x) != V.dim:
        raise UsageError("dimension mismatch")
    if isinstance(V, EmptyAffine):
        return False
    d = vsub(x, V.origin)
    if all(a == 0 for a in d):
        return True
    if not V.dirs:
        return False
    return rank(list(V.dirs) + [d]) == len(V.dirs)


def subset_affine(V, W) -> bool:
    if V.dim != W.dim:
        raise UsageError("dimension mismatch")
    if isinstance(V, EmptyAffine):
        return True
    if isinstance(W, EmptyAffine):
        return False
    if not member_affine(W, V.origin):
        return False
    if not V.dirs:
        return True
    return rank(list(W.dirs) + list(V.dirs), V.dim) == len(W.dirs)


def slice_affine_with_hp(V, e: LinRel):
    """``V`` intersected with the hyperplane ``e.normal . x = e.offset``."""
    if e.dim != V.dim:
        raise UsageError("dimension mismatch")
    if isinstance(V, EmptyAffine):
        return V
    # points origin + sum t_i d_i with sum t_i (e.d_i) = e.offset - e.origin
    coeffs = [dot(e.normal, d) for d in V.dirs]
    rhs = e.offset - dot(e.normal, V.origin)
    if all(c == 0 for c in coeffs):
        return V if rhs == 0 else EmptyAffine(V.dim)
    k = next(i for i, c in enumerate(coeffs) if c != 0)
    t = rhs / coeffs[k]
    origin = tuple(o + t * a for o, a in zip(V.origin, V.dirs[k]))
    dirs = []
    for i, d in enumerate(V.dirs):
        if i == k:
            continue
        f = coeffs[i] / coeffs[k]
        dirs.append(tuple(a - f * b for a, b in zip(d, V.dirs[k])))
    return make_flat(origin, dirs)


def flat_rels(V):
    """A set of equality relations whose solution set is ``V``."""
    if isinstance(V, EmptyAffine):
        return [LinRel((ZERO,) * V.dim, ZERO + 1)]
    normals = kernel_basis(V.dirs, V.dim) if V.dirs else kernel_basis((), V.dim)
    return [LinRel(a, dot(a, V.origin)) for a in normals]


def affine_json(V):
    if isinstance(V, EmptyAffine):
        return "empty"
    return {"origin": [fmt(a) for a in V.origin], "dir": [[fmt(a) for a in d] for d in V.dirs]}
