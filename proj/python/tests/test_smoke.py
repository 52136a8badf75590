"""Smoke tests for the python bindings: a few end-to-end computations whose
values are pinned by the C++ suites."""

import frobpow as fp


def test_ring_and_groebner():
    R = fp.Ring("GF(7)[x,y,z]/(x^3+y^3+z^3)")
    assert R.p == 7
    assert R.dim() == 2
    I = fp.Ideal(R, ["x^3+y^3+z^3", "x", "y"])
    assert I.groebner() == ["y", "x", "z^3"]
    assert I.normal_form("z^2") == "z^2"
    assert not I.contains("z^2")


def test_colon_length_socle():
    R = fp.Ring("GF(7)[x,y,z]/(x^3+y^3+z^3)")
    I = fp.Ideal(R, ["x", "y"])
    assert I.colon("z^2").groebner() == ["z", "y", "x"]
    m = fp.Ideal(R, ["x", "y", "z"])
    assert m.length() == 1
    assert I.socle() == ["z^2"]
    assert fp.multiplicity(R) == 3


def test_frobenius_closure_witness():
    R = fp.Ring("GF(2)[x,y,z]/(x^3+y^3+z^3)")
    I = fp.Ideal(R, ["x", "y"])
    verdict = fp.frobenius_closure_test(I, "z^2", emax=3)
    assert verdict["status"] == "InFrobeniusClosure"
    assert verdict["witness_q"] == 2


def test_tight_closure_candidate():
    R = fp.Ring("GF(7)[x,y,z]/(x^3+y^3+z^3)")
    I = fp.Ideal(R, ["x", "y"])
    cand = fp.tight_closure_candidate(I, test_element="z", test_power=1, emax=3)
    assert cand["candidate"] == ["y", "x", "z^2"]
    assert not cand["unconditional"]


def test_hilbert_kunz_rows():
    R = fp.Ring("GF(5)[x,y]")
    m = fp.Ideal(R, ["x", "y"])
    table = fp.hilbert_kunz(m, emax=2)
    assert [row["length"] for row in table["rows"]] == [1, 25, 625]
    assert all(row["ratio_num"] == 1 and row["ratio_den"] == 1
               for row in table["rows"])
    csv = fp.hilbert_kunz_csv(m, emax=1)
    assert csv.splitlines()[0] == "e,q,length,ratio_num,ratio_den"


def test_flat_extension_checks():
    R = fp.Ring("GF(3)[x]")
    T = fp.Ring(3, ["y"], ["y^3"])
    X = fp.FlatExtension(R, T, [])
    I = fp.Ideal(R, ["x^2"])
    rep = fp.check_length_identity(X, I, 1, 3)
    assert rep["pass"]
    assert [inst["left"] for inst in rep["instances"]] == ["18", "54", "162"]
    rep2 = fp.check_hk_multiplicativity(X, I, 1, 3)
    assert rep2["pass"]


def test_error_propagation():
    import pytest

    R = fp.Ring("GF(5)[x,y]")
    I = fp.Ideal(R, ["x"])
    with pytest.raises(fp.FrobpowError):
        I.length()


def test_session_reports_validate_against_schema():
    import json
    import pathlib

    jsonschema = __import__("pytest").importorskip("jsonschema")
    root = pathlib.Path(__file__).resolve().parents[2]
    schema = json.loads((root / "docs" / "report_schema.json").read_text())
    code, envelopes = fp.run_session(str(root / "sessions" / "verify_paper.json"))
    assert code == 0
    assert len(envelopes) >= 10
    for env in envelopes:
        jsonschema.validate(env, schema)
    # determinism: rerun gives the identical payload
    code2, envelopes2 = fp.run_session(str(root / "sessions" / "verify_paper.json"))
    assert envelopes == envelopes2
