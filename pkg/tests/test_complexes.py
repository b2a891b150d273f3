import pytest

from localh.complexes import (SimplicialComplex, canon_face, closed_star,
                              has_trivial_reduced_homology, link,
                              reduced_betti, reduced_betti_all)


TRIFORCE_FACETS = [["a", "b", "c"], ["u", "b", "c"], ["v", "a", "c"],
                   ["w", "a", "b"]]


def test_triforce_f_vector():
    c = SimplicialComplex(TRIFORCE_FACETS)
    assert c.f_vector() == (1, 6, 9, 4)
    assert c.dim == 2


def test_empty_and_point():
    empty = SimplicialComplex([])
    assert empty.faces == frozenset([()])
    assert empty.dim == -1
    point = SimplicialComplex([["x"]])
    assert point.f_vector() == (1, 1)


def test_nonmaximal_facets_absorbed():
    c = SimplicialComplex([["a", "b"], ["a"], ["b", "a"]])
    assert c.facets == (("a", "b"),)


def test_duplicate_vertex_rejected():
    with pytest.raises(ValueError):
        SimplicialComplex([["a", "a"]])


def test_link_of_c():
    c = SimplicialComplex(TRIFORCE_FACETS)
    lk = link(c, ["c"])
    assert set(lk.facets) == {("a", "b"), ("a", "v"), ("b", "u")}
    assert link(c, []) == c
    assert link(c, ["a", "w"]).facets == (("b",),)
    with pytest.raises(ValueError):
        link(c, ["a", "u"])


def test_closed_star():
    c = SimplicialComplex(TRIFORCE_FACETS)
    st = closed_star(c, ["w"])
    assert st.facets == (("a", "b", "w"),)
    assert closed_star(c, []) == c


def test_h_vector_triforce_link():
    c = SimplicialComplex(TRIFORCE_FACETS)
    # path with 4 vertices and 3 edges: h = (1, 2, 0)
    assert link(c, ["c"]).h_vector() == (1, 2, 0)
    assert c.h_vector() == (1, 3, 0, 0)


def test_betti_sphere_and_ball():
    circle = SimplicialComplex([[1, 2], [2, 3], [1, 3]])
    assert reduced_betti(circle) == (0, 1)
    disk = SimplicialComplex([[1, 2, 4], [2, 3, 4], [1, 3, 4]])
    assert has_trivial_reduced_homology(disk)
    two_points = SimplicialComplex([[1], [2]])
    assert reduced_betti(two_points) == (1,)
    empty = SimplicialComplex([])
    assert reduced_betti_all(empty) == {-1: 1}


def test_mixed_vertex_types_sortable():
    c = SimplicialComplex([[1, "a"], [2, "a"]])
    assert canon_face(["a", 1]) in c.faces
