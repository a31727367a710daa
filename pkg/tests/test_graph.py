from itertools import combinations

import pytest

import fixtures as fx
from polyface._scalar import Q
from polyface.errors import UsageError
from polyface.exactlin import dot
from polyface.graph import (Path, adjacency_graph, balinski_path, connected_path, graph_json,
                            improve_path, improve_step, is_path, n_connectivity_check, subset_hp)
from polyface.poly import conv, segm


def test_pentagon_cycle():
    G = adjacency_graph(fx.fig1())
    assert len(G.vertices) == 5 and len(G.edges) == 5
    assert all(len(G.neighbors(v)) == 2 for v in G.vertices)
    assert G.adjacent(fx.qv((2, 1)), fx.qv((1, 3)))
    assert not G.adjacent(fx.qv((2, 1)), fx.qv((8, 6)))


def test_cube_graph():
    G = adjacency_graph(fx.cube())
    assert len(G.edges) == 12
    for v, w in combinations(G.vertices, 2):
        hamming = sum(a != b for a, b in zip(v, w))
        assert G.adjacent(v, w) == (hamming == 1)
    # edges are exactly pairs whose segment is a face
    from polyface.faces import is_face
    for v, w in combinations(G.vertices, 2):
        assert G.adjacent(v, w) == is_face(segm(v, w), fx.cube())


def test_improve_step_tie_break():
    P = fx.cube()
    c = fx.qv((1, 1, 1))
    assert improve_step(P, c, fx.qv((1, 1, 1))) == fx.qv((0, 1, 1))
    assert improve_step(P, c, fx.qv((0, 0, 0))) is None
    with pytest.raises(UsageError):
        improve_step(P, c, fx.qv((0, 0, Q(1, 2))))


def test_improve_path_monotone():
    P = fx.fig2()
    G = adjacency_graph(P)
    c = fx.qv((1, -1, 2))
    for v in G.vertices:
        p = improve_path(P, c, v)
        vals = [dot(c, x) for x in p.points()]
        assert all(a > b for a, b in zip(vals, vals[1:]))
        assert len(p) < len(G.vertices) and is_path(G, p)
        assert dot(c, p.last) == min(dot(c, w) for w in G.vertices)


def test_connected_path_all_pairs():
    for P in (fx.fig1(), fx.fig2(), fx.octahedron()):
        G = adjacency_graph(P)
        for v in G.vertices:
            for w in G.vertices:
                p = connected_path(P, v, w)
                assert p.start == v and p.last == w and is_path(G, p)


def test_subset_hp():
    W = [fx.qv((1, 0, 0)), fx.qv((0, 1, 0))]
    e = subset_hp(W)
    assert any(a != 0 for a in e.normal)
    assert all(dot(e.normal, w) == e.offset for w in W)
    with pytest.raises(UsageError):
        subset_hp([fx.qv((0, 0))] * 3)
    with pytest.raises(UsageError):
        subset_hp([])


def test_balinski_validation():
    P = fx.cube()
    with pytest.raises(UsageError):
        balinski_path(P, [fx.qv((0, 0, 0))], fx.qv((1, 1, 1)), fx.qv((1, 0, 0)))
    with pytest.raises(UsageError):
        balinski_path(P, [fx.qv((0, 0, 0)), fx.qv((0, 0, 1))], fx.qv((0, 0, 0)), fx.qv((1, 0, 0)))
    flat = conv([fx.qv(p) for p in [(0, 0, 0), (1, 0, 0), (0, 1, 0)]])
    with pytest.raises(UsageError):
        balinski_path(flat, [fx.qv((0, 0, 0)), fx.qv((1, 0, 0))], fx.qv((0, 1, 0)), fx.qv((0, 1, 0)))
    with pytest.raises(UsageError):
        adjacency_graph(fx.halfplane())


def test_balinski_separating_pair_on_cube():
    # removing two opposite neighbours of a vertex is the hardest case on the cube
    P = fx.cube()
    G = adjacency_graph(P)
    removed = [fx.qv((1, 0, 0)), fx.qv((0, 1, 1))]
    p = balinski_path(P, removed, fx.qv((0, 0, 0)), fx.qv((1, 1, 1)))
    assert is_path(G, p, removed) and p.last == fx.qv((1, 1, 1))


def test_n_connectivity():
    assert n_connectivity_check(fx.cube()) and n_connectivity_check(fx.octahedron())
    assert n_connectivity_check(fx.fig1())


def test_is_path_rejects():
    G = adjacency_graph(fx.fig1())
    bad = Path(fx.qv((2, 1)), (fx.qv((8, 6)),))
    assert not is_path(G, bad)
    ok = Path(fx.qv((2, 1)), (fx.qv((6, 2)),))
    assert is_path(G, ok) and not is_path(G, ok, [fx.qv((6, 2))])
    assert not is_path(G, Path(fx.qv((2, 1)), (fx.qv((2, 1)),)))


def test_graph_json():
    js = graph_json(adjacency_graph(fx.fig1()))
    assert js["vertices"][0] == ["1", "3"] and len(js["edges"]) == 5
