"""Lemma-level property suites (run alone with ``pytest tests/test_lemmas.py``)."""

import pytest

import fixtures as fx
import lemmas

FIXTURES = ["fig1", "square", "simplex3", "segment", "cube", "octahedron", "fig2"]


@pytest.mark.parametrize("lemma", sorted(lemmas.ALL))
@pytest.mark.parametrize("name", FIXTURES)
def test_lemma(name, lemma):
    P = fx.compact_fixtures()[name]
    check = lemmas.ALL[lemma]
    if lemma == "argmin_faces":
        objectives = [fx.qv(c)[:P.dim] for c in [(1, 0, 0), (0, -1, 2), (1, 1, 1), (0, 0, 0)]]
        assert check(P, objectives)
    else:
        assert check(P)


def test_point_and_segment_dims():
    assert lemmas.point_dims_ok([fx.qv(p) for p in [(0, 0, 0), (1, 2, 3), (1, 2, 4)]])


@pytest.mark.parametrize("name", FIXTURES)
def test_hull_relations_roundtrip(name):
    assert lemmas.hull_of_rels_ok(fx.compact_fixtures()[name])
