import pytest

from localh import builtin_corpus, builtin_triangulation
from localh.complexes import SimplicialComplex
from localh.fileformat import build_triangulation
from localh.triangulation import (CarrierMap, Triangulation,
                                  ValidationBudgetError, interior_faces,
                                  is_quasi_geometric,
                                  validate_homology_triangulation)


def test_carrier_map_basics(triforce):
    assert triforce.carrier(("a",)) == frozenset({"v", "w"})
    assert triforce.carrier(("a", "b", "c")) == frozenset({"u", "v", "w"})
    assert triforce.is_interior(("a", "b"))
    assert not triforce.is_interior(("a",))
    with pytest.raises(ValueError):
        triforce.carrier(("a", "u"))


def test_invariant_violations():
    c = SimplicialComplex([["x", "y"]])
    with pytest.raises(ValueError):
        # no vertex with carrier {v2}
        Triangulation(c, ["v1", "v2"],
                      CarrierMap({"x": {"v1"}, "y": {"v1"}}))
    with pytest.raises(ValueError):
        # dimension mismatch
        Triangulation(c, ["v1", "v2", "v3"],
                      CarrierMap({"x": {"v1"}, "y": {"v2"}}))


def test_restriction(triforce):
    g = triforce.restriction({"u", "v"})
    assert set(g.facets) == {("c", "u"), ("c", "v")}
    g1 = triforce.restriction({"w"})
    assert g1.facets == (("w",),)


def test_interior_faces(triforce):
    intf = interior_faces(triforce, ())
    assert set(intf.minimal) == {("a", "b"), ("a", "c"), ("b", "c")}
    intf_c = interior_faces(triforce, ("c",))
    assert set(intf_c.minimal) == {("a",), ("b",)}


def test_validation_passes_on_corpus(corpus):
    for name, t in corpus.items():
        report = validate_homology_triangulation(t, mode="full")
        assert report.ok, (name, report.violations)
        ok, witness = is_quasi_geometric(t)
        assert ok, (name, witness)


def test_validation_catches_missing_facet():
    data = builtin_corpus("triforce")
    data["facets"] = [f for f in data["facets"] if set(f) != {"a", "b", "c"}]
    t = build_triangulation(data)
    report = validate_homology_triangulation(t, mode="fast")
    assert not report.ok
    kinds = {v.kind for v in report.violations}
    assert kinds & {"homology", "boundary-sphere", "dimension"}


def test_quasi_geometric_failure():
    t = builtin_triangulation("nonqg-squeezed")
    ok, witness = is_quasi_geometric(t)
    assert not ok
    face, u = witness
    assert face == ("x1", "x2", "x3")
    assert u == ("v1", "v2")


def test_validation_budget():
    t = builtin_triangulation("stellar-interior-3simplex")
    with pytest.raises(ValidationBudgetError):
        validate_homology_triangulation(t, mode="full", ceiling=10)


def test_fast_mode_agrees_with_full(corpus):
    for name, t in corpus.items():
        fast = validate_homology_triangulation(t, mode="fast")
        full = validate_homology_triangulation(t, mode="full")
        assert fast.ok == full.ok, name
