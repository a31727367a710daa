"""Shared fixture polyhedra (cached so memoised faces are reused across tests)."""

from functools import cache
from pathlib import Path

from polyface import hrep as H
from polyface._scalar import Q
from polyface.exactlin import LinRel
from polyface.poly import Base, Poly, conv, parse_vformat, poly_of_base

DATA = Path(__file__).resolve().parent.parent / "data"

FIG1_VERTICES = {(2, 1), (6, 2), (8, 6), (3, 8), (1, 3)}
FIG2_POINTS = [(0, 0, 0), (0, 0, 2), (0, 2, 0), (0, 2, 2), (3, 1, 1), (-2, 1, 0), (-2, 1, 1)]
CUBE_VERTICES = {(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)}


def qv(v):
    return tuple(Q(a) for a in v)


def rel(normal, offset):
    return LinRel(qv(normal), Q(offset))


@cache
def fig1_base():
    return Base.of(H.parse_hformat((DATA / "fig1.h").read_text()).rows, 2)


@cache
def fig1():
    return poly_of_base(fig1_base())


@cache
def fig2():
    dim, pts = parse_vformat((DATA / "fig2.v").read_text())
    return conv(pts, dim=dim)


@cache
def cube():
    return Poly(H.parse_hformat((DATA / "cube.h").read_text()))


@cache
def octahedron():
    dim, pts = parse_vformat((DATA / "octahedron.v").read_text())
    return conv(pts, dim=dim)


@cache
def square():
    return conv([qv(p) for p in [(0, 0), (1, 0), (0, 1), (1, 1)]], dim=2)


@cache
def simplex3():
    return conv([qv(p) for p in [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]], dim=3)


@cache
def segment():
    return conv([qv((0, 0)), (Q(3, 2), Q(1))], dim=2)


@cache
def halfplane():
    return Poly(H.parse_hformat((DATA / "halfplane.h").read_text()))


def compact_fixtures():
    return {"fig1": fig1(), "fig2": fig2(), "cube": cube(), "octahedron": octahedron(),
            "square": square(), "simplex3": simplex3(), "segment": segment()}
