"""Vertex-edge graphs of polytopes, vertex pivoting and Balinski paths."""

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from ._scalar import ZERO, fmt
from .errors import UsageError
from .exactlin import LinRel, dot, kernel_basis, vec
from .faces import active, argmin, face_base, pdim, vertex_set
from .lattice import _bits, build_lattice
from .poly import Poly, compact, pt


@dataclass(frozen=True)
class VertexGraph:
    vertices: tuple  # sorted lexicographically
    edges: frozenset  # of (i, j) index pairs with i < j

    def index(self, v):
        return self.vertices.index(tuple(v))

    def neighbors(self, v):
        i = self.index(v)
        out = [self.vertices[b if a == i else a] for a, b in self.edges if i in (a, b)]
        return sorted(out)

    def adjacent(self, v, w):
        i, j = sorted((self.index(v), self.index(w)))
        return (i, j) in self.edges

    def edge_points(self):
        return {frozenset((self.vertices[i], self.vertices[j])) for i, j in self.edges}


@dataclass(frozen=True)
class Path:
    start: tuple
    steps: tuple = ()

    @property
    def last(self):
        return self.steps[-1] if self.steps else self.start

    def points(self):
        return (self.start,) + self.steps

    def __len__(self):
        return len(self.steps)


def _require_compact(P, what):
    if not compact(P):
        raise UsageError(f"{what} needs a compact polyhedron")


def adjacency_graph(P: Poly) -> VertexGraph:
    """Vertices of ``P`` and the pairs spanning its edges (rank-2 faces)."""
    _require_compact(P, "adjacency_graph")
    if "graph" not in P.memo:
        L = build_lattice(P)
        verts = tuple(vertex_set(P))
        pos = {v: i for i, v in enumerate(verts)}
        edges = set()
        for k, r in enumerate(L.ranks):
            if r != 2:
                continue
            ends = [L.faces[a].point for a in _bits(L.down[k]) if L.ranks[a] == 1]
            i, j = sorted(pos[v] for v in ends)
            edges.add((i, j))
        P.memo["graph"] = VertexGraph(verts, frozenset(edges))
    return P.memo["graph"]


def improve_step(P: Poly, c, v, graph=None):
    """Lexicographically smallest neighbour ``w`` of ``v`` with ``c.w < c.v``."""
    graph = graph or adjacency_graph(P)
    c, v = vec(c), vec(v)
    if v not in graph.vertices:
        raise UsageError("improve_step: not a vertex")
    cv = dot(c, v)
    better = [w for w in graph.neighbors(v) if dot(c, w) < cv]
    return min(better) if better else None


def improve_path(P: Poly, c, v, graph=None) -> Path:
    """Strictly ``c``-decreasing walk from ``v`` to a vertex of ``argmin(P, c)``."""
    _require_compact(P, "improve_path")
    graph = graph or adjacency_graph(P)
    v = vec(v)
    steps = []
    cur = improve_step(P, c, v, graph)
    while cur is not None:
        steps.append(cur)
        cur = improve_step(P, c, cur, graph)
    return Path(v, tuple(steps))


def connected_path(P: Poly, v, w, graph=None) -> Path:
    """A path from ``v`` to ``w`` in the graph of ``P``.

    Runs :func:`improve_path` for the sum of the base normals active at
    ``w``, whose unique minimiser over ``P`` is ``w``.
    """
    _require_compact(P, "connected_path")
    graph = graph or adjacency_graph(P)
    v, w = vec(v), vec(w)
    for x in (v, w):
        if x not in graph.vertices:
            raise UsageError("connected_path: endpoints must be vertices")
    if v == w:
        return Path(v)
    base = face_base(P)
    act = active(base, pt(w))
    c = tuple(sum((base.items[i].normal[k] for i in act), ZERO) for k in range(P.dim))
    return improve_path(P, c, v, graph)


def subset_hp(W, dim=None) -> LinRel:
    """A hyperplane ``c.x = alpha`` with ``c != 0`` through every point of ``W``."""
    W = [vec(w) for w in W]
    if dim is None:
        if not W:
            raise UsageError("subset_hp needs at least one point")
        dim = len(W[0])
    if not 0 < len(W) <= dim:
        raise UsageError(f"subset_hp needs between 1 and {dim} points, got {len(W)}")
    rows = [w + (-1,) for w in W]
    for z in kernel_basis(rows, dim + 1):
        if any(a != 0 for a in z[:dim]):
            return LinRel(z[:dim], z[dim]).normalized()
    raise AssertionError("unreachable: kernel vectors with c = 0 vanish")


def is_path(graph: VertexGraph, path: Path, avoid=()) -> bool:
    avoid = {vec(a) for a in avoid}
    pts = path.points()
    if any(p in avoid for p in pts):
        return False
    if any(p not in graph.vertices for p in pts):
        return False
    return all(a != b and graph.adjacent(a, b) for a, b in zip(pts, pts[1:]))


def balinski_path(P: Poly, removed, v, w) -> Path:
    """A path from ``v`` to ``w`` avoiding ``n - 1`` removed vertices.

    A hyperplane through ``v`` and the removed vertices is oriented so that
    ``w`` is on its closed lower side and some vertex strictly below.  Both
    ``v`` and ``w`` descend to the optimal face for its normal, where the two
    descents are joined.
    """
    _require_compact(P, "balinski_path")
    n = P.dim
    if pdim(P) != n + 1:
        raise UsageError("balinski_path needs a full-dimensional polytope")
    graph = adjacency_graph(P)
    removed = {vec(r) for r in removed}
    v, w = vec(v), vec(w)
    if not removed <= set(graph.vertices):
        raise UsageError("removed points must be vertices")
    if len(removed) != n - 1:
        raise UsageError(f"exactly {n - 1} vertices must be removed, got {len(removed)}")
    if v not in graph.vertices or w not in graph.vertices or v in removed or w in removed:
        raise UsageError("endpoints must be vertices outside the removed set")
    if v == w:
        return Path(v)
    if not removed:
        return connected_path(P, v, w, graph)

    e = subset_hp([v] + sorted(removed), n)
    if dot(e.normal, w) > e.offset:
        e = -e
    elif dot(e.normal, w) == e.offset:
        z = next(x for x in graph.vertices if dot(e.normal, x) != e.offset)
        if dot(e.normal, z) > e.offset:
            e = -e
    c = e.normal
    p1 = improve_path(P, c, v, graph)
    p2 = improve_path(P, c, w, graph)
    x, y = p1.last, p2.last
    if x == y:
        p3 = Path(x)
    else:
        optimal = P.memo.setdefault("argmin", {})
        if c not in optimal:
            optimal[c] = argmin(P, c)
        p3 = connected_path(optimal[c], x, y)
    back = ((w,) + p2.steps)[:-1]
    return Path(v, p1.steps + p3.steps + tuple(reversed(back)))


def _connected(vertices, edges):
    if not vertices:
        return True
    adj = {u: [] for u in vertices}
    for a, b in edges:
        if a in adj and b in adj:
            adj[a].append(b)
            adj[b].append(a)
    start = next(iter(vertices))
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for x in adj[u]:
            if x not in seen:
                seen.add(x)
                queue.append(x)
    return len(seen) == len(vertices)


def n_connectivity_check(P: Poly) -> bool:
    """Brute force: the graph stays connected after removing any ``n - 1`` vertices."""
    _require_compact(P, "n_connectivity_check")
    n = P.dim
    if pdim(P) != n + 1:
        raise UsageError("n_connectivity_check needs a full-dimensional polytope")
    graph = adjacency_graph(P)
    idx = range(len(graph.vertices))
    for S in combinations(idx, max(n - 1, 0)):
        rest = set(idx) - set(S)
        if not _connected(rest, graph.edges):
            return False
    return True


def graph_json(graph: VertexGraph):
    return {
        "vertices": [[fmt(a) for a in v] for v in graph.vertices],
        "edges": [list(p) for p in sorted(graph.edges)],
    }
