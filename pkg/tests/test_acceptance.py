"""Acceptance suite: one test (and one printed pass/fail line) per criterion.

Run with `pytest -v -s tests/test_acceptance.py` to see the lines; all
quantities are exact integers, so every tolerance is zero.
"""

import json
from contextlib import contextmanager

from localh import face_fixture
from localh.cli import main as cli_main
from localh.complexes import link
from localh.corpus import corpus_faces
from localh.facering import (marriage_check, quotient_dims, sample_lsop,
                             special_supports)
from localh.functorial import (check_functor_composition, check_monotonicity,
                               induced_map, vanishing_structure_audit)
from localh.localmodule import (build_resolution, local_h_incexc,
                                local_module, presentation_J,
                                restricted_standalone, verify_exactness)


@contextmanager
def criterion(num, name):
    try:
        yield
    except BaseException:
        print("ACCEPTANCE %02d %s: FAIL" % (num, name))
        raise
    print("ACCEPTANCE %02d %s: PASS" % (num, name))


def cli_json(capsys, *argv):
    code = cli_main(list(argv))
    out = capsys.readouterr().out
    assert code == 0, argv
    return json.loads(out)


def all_faces(t):
    return corpus_faces(t)


def test_criterion_01_triforce_ground_truth(capsys):
    with criterion(1, "triforce ground truth"):
        p = cli_json(capsys, "local-h", "builtin:triforce", "--face", "",
                     "--method", "both")
        assert p["ell_incexc"] == [0, 0, 0, 0]
        assert p["ell_module"] == [0, 0, 0, 0]
        assert p["agreement"]
        p = cli_json(capsys, "local-h", "builtin:triforce", "--face", "c",
                     "--method", "both")
        assert p["ell_incexc"] == [0, 1, 0]
        assert p["ell_module"] == [0, 1, 0]
        assert p["agreement"]


def test_criterion_02_oracle_equivalence(corpus):
    with criterion(2, "module route == inclusion-exclusion on the corpus"):
        assert len(corpus) >= 10
        for name, t in corpus.items():
            for e in all_faces(t):
                ell_ie = local_h_incexc(t, e)
                lsop = sample_lsop(t, e, 17)
                ell_mod = local_module(t, e, lsop).local_h
                assert tuple(ell_ie) == tuple(ell_mod), (name, e)


def test_criterion_03_symmetry_nonnegativity(corpus):
    with criterion(3, "symmetry and non-negativity of ell"):
        for name, t in corpus.items():
            for e in all_faces(t):
                ell = local_h_incexc(t, e)
                d = t.n - len(e)
                assert len(ell) == d + 1
                for i in range(d + 1):
                    assert ell[i] == ell[d - i], (name, e)
                    assert ell[i] >= 0, (name, e)


def test_criterion_04_cm_consistency(corpus):
    with criterion(4, "quotient dims equal the h-vector"):
        for name, t in corpus.items():
            for e in all_faces(t):
                d = t.n - len(e)
                lk = link(t.complex, e)
                lsop = sample_lsop(t, e, 17)
                dims = quotient_dims(lk, lsop, d + 2)
                h = lk.h_vector()
                padded = tuple(h) + (0,) * (d + 3 - len(h))
                assert dims == padded[: d + 3], (name, e)


def test_criterion_05_resolution_exactness(corpus):
    with criterion(5, "Koszul-type resolution exact in degrees 0..d+2"):
        for name, t in corpus.items():
            for e in all_faces(t):
                lsop = sample_lsop(t, e, 17)
                res = build_resolution(t, e, lsop)
                report = verify_exactness(t, res, lsop)
                assert report.ok, (name, e, report.failures)


def test_criterion_06_presentation_kernel(corpus):
    with criterion(6, "J equals the kernel of I -> R/(theta)"):
        for name, t in corpus.items():
            for e in all_faces(t):
                lsop = sample_lsop(t, e, 17)
                presentation_J(t, e, lsop)  # raises on any mismatch


def _equal_carrier_pairs(t):
    faces = all_faces(t)
    for e in faces:
        ce = t.carrier(e)
        for ep in faces:
            if set(e) < set(ep) and t.carrier(ep) == ce:
                yield e, ep


def test_criterion_07_monotonicity(corpus, triforce):
    with criterion(7, "induced maps surjective when carriers agree"):
        checked = 0
        for name, t in corpus.items():
            for e, ep in _equal_carrier_pairs(t):
                lsop = sample_lsop(t, e, 17)
                phi = induced_map(t, e, ep, lsop, seed=17)
                assert check_monotonicity(phi), (name, e, ep)
                d_p = phi.target.d
                for i in range(d_p + 1):
                    assert phi.source.dims[i] >= phi.target.dims[i]
                checked += 1
        # the triforce pair ({a}, {a,w}) must be among them
        assert (("a",), ("a", "w")) in set(_equal_carrier_pairs(triforce))
        assert checked >= 1
        # and the (empty, {c}) pair is rejected by the precondition
        lsop = sample_lsop(triforce, (), 17)
        phi = induced_map(triforce, (), ("c",), lsop, seed=17)
        try:
            check_monotonicity(phi)
            raise AssertionError("precondition should have been rejected")
        except ValueError:
            pass
        assert phi.source.local_h == (0, 0, 0, 0)
        assert phi.target.local_h == (0, 1, 0)


def test_criterion_08_functoriality(triforce, corpus):
    with criterion(8, "phi'' = phi' o phi and seed-independence"):
        lsop = sample_lsop(triforce, (), 17)
        assert check_functor_composition(triforce, (), ("c",), ("a", "c"),
                                         lsop, seed=17)
        t = corpus["trivial-3"]
        lsop = sample_lsop(t, (), 17)
        assert check_functor_composition(t, (), ("u1",), ("u1", "u2"),
                                         lsop, seed=17)


def test_criterion_09_restricted_fixtures():
    with criterion(9, "hexagonal face fixtures"):
        fx = face_fixture("hexface-vanishing")
        for seed in (5, 6):
            mod = restricted_standalone(fx["ambient"], fx["face_carriers"],
                                        fx["e_carrier"], seed)
            assert mod.m_max == 6
            assert all(v == 0 for v in mod.dims)
        fx = face_fixture("hexface-degree3")
        for seed in (5, 6):
            mod = restricted_standalone(fx["ambient"], fx["face_carriers"],
                                        fx["e_carrier"], seed)
            assert mod.dims[3] >= 1


def test_criterion_10_vanishing_structure(corpus):
    with criterion(10, "U-pyramid and edge-graph audits on the corpus"):
        for name, t in corpus.items():
            for e in all_faces(t):
                # raises VerificationError on any contradiction with the
                # vanishing-structure results
                rep = vanishing_structure_audit(t, e, seed=17)
                if rep.verdict == "vanishing":
                    for a in rep.audits:
                        assert a["ok"], (name, e, a)


def test_criterion_11_lsop_pipeline(corpus):
    with criterion(11, "l.s.o.p. sampling pipeline"):
        for name, t in corpus.items():
            for e in all_faces(t):
                lk = link(t.complex, e)
                ok, witness = marriage_check(special_supports(t, e), lk)
                assert ok, (name, e, witness)
                lsop = sample_lsop(t, e, 17, bound=997, retries=32)
                assert lsop.verified
                ell_a = local_module(t, e, lsop).local_h
                ell_b = local_module(t, e, sample_lsop(t, e, 18)).local_h
                assert ell_a == ell_b, (name, e)


def test_criterion_12_cli_determinism(capsys):
    with criterion(12, "byte-identical CLI output"):
        for argv in (
            ["local-h", "builtin:triforce", "--face", "c", "--seed", "4"],
            ["audit", "builtin:stellar-interior-2simplex", "--face", "",
             "--seed", "4"],
            ["resolution", "builtin:trivial-3", "--face", "u1", "--seed", "4"],
        ):
            outs = set()
            for _ in range(2):
                code = cli_main(list(argv))
                outs.add(capsys.readouterr().out)
                assert code == 0
            assert len(outs) == 1, argv
