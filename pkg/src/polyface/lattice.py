"""The face lattice as an explicit finite poset.

Order relations are stored as Python-int bitsets: bit ``j`` of ``down[i]``
is set iff face ``j`` lies below face ``i``.
"""

from dataclasses import dataclass, field

from ._scalar import fmt
from .errors import InvariantError, UsageError
from .exactlin import LinRel, dot
from .faces import Face, active, face_base, face_json, face_set, pdim, vertex_set
from .poly import Poly, compact, hp, intersect, separation


def _bits(mask):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


@dataclass(eq=False)
class FaceLattice:
    faces: list
    ranks: list
    down: list
    up: list
    compact: bool = True
    hasse: list = field(default=None)

    def __post_init__(self):
        if self.hasse is None:
            self.hasse = _covers(self.down, self.up)

    def __len__(self):
        return len(self.faces)

    @property
    def bottom(self):
        return 0

    @property
    def top(self):
        return len(self.faces) - 1

    def leq(self, i, j):
        return bool(self.down[j] >> i & 1)

    def lt(self, i, j):
        return i != j and self.leq(i, j)

    def index(self, face: Face):
        for k, F in enumerate(self.faces):
            if F == face:
                return k
        raise KeyError(face)

    def rank_counts(self):
        counts = {}
        for r in self.ranks:
            counts[r] = counts.get(r, 0) + 1
        return dict(sorted(counts.items()))

    def atoms(self):
        return sorted(j for a, j in self.hasse if a == self.bottom)

    def coatoms(self):
        return sorted(a for a, j in self.hasse if j == self.top)


def _covers(down, up):
    n = len(down)
    pairs = []
    for i in range(n):
        above = up[i] & ~(1 << i)
        for j in _bits(above):
            between = down[j] & ~(1 << j) & above
            if not between:
                pairs.append((i, j))
    return sorted(pairs)


def _order_masks(faces):
    n = len(faces)
    down = [0] * n
    for j, G in enumerate(faces):
        m = 0
        for i, F in enumerate(faces):
            if F.is_empty or (not G.is_empty and F.active >= G.active):
                m |= 1 << i
        down[j] = m
    up = [0] * n
    for j in range(n):
        for i in _bits(down[j]):
            up[i] |= 1 << j
    return down, up


def lattice_of_faces(faces, is_compact=True):
    down, up = _order_masks(faces)
    return FaceLattice(list(faces), [F.rank for F in faces], down, up, is_compact)


def build_lattice(P: Poly) -> FaceLattice:
    """Face lattice of ``P`` ordered by inclusion (bottom index 0, top last)."""
    if "lattice" not in P.memo:
        P.memo["lattice"] = lattice_of_faces(face_set(P), compact(P))
    return P.memo["lattice"]


def meet(L: FaceLattice, a, b):
    common = L.down[a] & L.down[b]
    for m in _bits(common):
        if L.down[m] == common:
            return m
    raise InvariantError("no meet: not a lattice")


def join(L: FaceLattice, a, b):
    common = L.up[a] & L.up[b]
    for m in _bits(common):
        if L.up[m] == common:
            return m
    raise InvariantError("no join: not a lattice")


def check_graded(L: FaceLattice) -> bool:
    """Rank strictly increases along the order and by exactly one along covers."""
    for j in range(len(L)):
        for i in _bits(L.down[j]):
            if i != j and not L.ranks[i] < L.ranks[j]:
                return False
    return all(L.ranks[b] - L.ranks[a] == 1 for a, b in L.hasse)


def check_atomistic(L: FaceLattice) -> bool:
    """Every element is the join of the atoms below it."""
    if not L.compact:
        raise UsageError("atomisticity is only guaranteed for compact polyhedra")
    atoms = L.atoms()
    for i in range(len(L)):
        acc = L.bottom
        for a in atoms:
            if L.leq(a, i):
                acc = join(L, acc, a)
        if acc != i:
            return False
    return True


def check_coatomistic(L: FaceLattice) -> bool:
    """Every element above the bottom is the meet of the coatoms above it."""
    coatoms = L.coatoms()
    for i in range(len(L)):
        if i == L.bottom:
            continue
        acc = L.top
        for c in coatoms:
            if L.leq(i, c):
                acc = meet(L, acc, c)
        if acc != i:
            return False
    return True


def interval(L: FaceLattice, lo, hi) -> FaceLattice:
    """Sublattice ``{F : lo <= F <= hi}``, re-ranked so that ``lo`` has rank 0."""
    if not L.leq(lo, hi):
        raise UsageError("interval endpoints are not comparable")
    idx = [k for k in range(len(L)) if L.leq(lo, k) and L.leq(k, hi)]
    pos = {k: n for n, k in enumerate(idx)}

    def restrict(mask):
        out = 0
        for k in _bits(mask):
            if k in pos:
                out |= 1 << pos[k]
        return out

    base = L.ranks[lo]
    return FaceLattice([L.faces[k] for k in idx], [L.ranks[k] - base for k in idx],
                       [restrict(L.down[k]) for k in idx], [restrict(L.up[k]) for k in idx],
                       L.compact)


def check_diamond(L: FaceLattice) -> bool:
    """Every interval of height two has exactly four elements."""
    for j in range(len(L)):
        for i in _bits(L.down[j]):
            if L.ranks[j] - L.ranks[i] == 2:
                if bin(L.up[i] & L.down[j]).count("1") != 4:
                    return False
    return True


def f_vector(L: FaceLattice):
    """Number of faces of each geometric dimension 0, 1, ..., d."""
    top = L.ranks[L.top]
    return [L.ranks.count(r) for r in range(1, top + 1)]


def check_euler(L: FaceLattice) -> bool:
    """Euler-Poincare relation over proper nonempty faces of a polytope."""
    if not L.compact:
        raise UsageError("the Euler relation needs a polytope")
    d = L.ranks[L.top] - 1
    if d < 0:
        raise UsageError("the Euler relation needs a nonempty polytope")
    f = f_vector(L)
    return sum((-1) ** k * f[k] for k in range(d)) == 1 - (-1) ** d


def is_order_isomorphism(L1: FaceLattice, L2: FaceLattice, mapping: dict) -> bool:
    """``mapping`` is a bijection of indices with ``i <= j`` iff ``m(i) <= m(j)``."""
    if sorted(mapping) != list(range(len(L1))) or sorted(mapping.values()) != list(range(len(L2))):
        return False
    for i in range(len(L1)):
        for j in range(len(L1)):
            if L1.leq(i, j) != L2.leq(mapping[i], mapping[j]):
                return False
    return True


@dataclass(eq=False)
class VertexFigure:
    vertex: tuple
    sliced: Poly
    hyperplane: LinRel
    lattice: FaceLattice  # of the original polyhedron
    above: FaceLattice  # the interval [pt v, P]
    sliced_lattice: FaceLattice
    mapping: dict  # index in `above` -> index in `sliced_lattice`

    def is_isomorphism(self):
        return is_order_isomorphism(self.above, self.sliced_lattice, self.mapping)


def vertex_figure(P: Poly, v) -> VertexFigure:
    """Slice ``P`` with a hyperplane strictly separating ``v`` from the other vertices.

    The faces above ``pt v`` correspond to the faces of the slice through
    ``F -> F & hp(e)``.
    """
    if not compact(P):
        raise UsageError("vertex_figure needs a compact polyhedron")
    verts = vertex_set(P)
    v = tuple(v)
    if v not in verts:
        raise UsageError("vertex_figure: the given point is not a vertex")
    if pdim(P) < 2:
        raise UsageError("vertex_figure needs pdim >= 2")
    others = [w for w in verts if w != v]
    e0 = separation(others, v)
    lo = min(dot(e0.normal, w) for w in others)
    e = LinRel(e0.normal, (dot(e0.normal, v) + lo) / 2)
    sliced = intersect(P, hp(e))

    L = build_lattice(P)
    iv = next(k for k, F in enumerate(L.faces) if F.rank == 1 and F.point == v)
    above = interval(L, iv, L.top)
    L2 = build_lattice(sliced)
    base2 = face_base(sliced)
    keys = {F.key: k for k, F in enumerate(L2.faces)}
    mapping = {}
    for k, F in enumerate(above.faces):
        G = intersect(F.poly, hp(e))
        act = active(base2, G)
        mapping[k] = keys[(G.is_empty, act)]
    return VertexFigure(v, sliced, e, L, above, L2, mapping)


# -- output ----------------------------------------------------------------

def face_vertices(L: FaceLattice, k):
    return sorted(L.faces[a].point for a in _bits(L.down[k]) if L.ranks[a] == 1 and L.faces[a].point is not None)


def lattice_json(L: FaceLattice):
    faces = []
    for k, F in enumerate(L.faces):
        faces.append(face_json(F, face_vertices(L, k) if L.compact else None))
    return {"faces": faces, "hasse": [list(p) for p in L.hasse], "bottom": L.bottom, "top": L.top}


def lattice_dot(L: FaceLattice, name="face_lattice"):
    lines = [f"graph {name} {{", "  rankdir=BT;", "  node [shape=box, fontname=\"monospace\"];"]
    by_rank = {}
    for k, r in enumerate(L.ranks):
        by_rank.setdefault(r, []).append(k)
    for r, ks in sorted(by_rank.items()):
        lines.append(f"  subgraph cluster_rank{r} {{")
        lines.append(f"    label=\"rank {r}\"; rank=same; style=dotted;")
        for k in ks:
            verts = face_vertices(L, k)
            label = f"{r}:{len(verts)}"
            if r <= 2 and verts:
                label += "\\n" + " ".join("(" + ",".join(fmt(a) for a in v) + ")" for v in verts)
            lines.append(f"    f{k} [label=\"{label}\"];")
        lines.append("  }")
    for a, b in L.hasse:
        lines.append(f"  f{a} -- f{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
