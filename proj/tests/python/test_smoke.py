import pytest

import newthyper

JACOBI_LIKE = {"source": "family", "params": {"family": "quadratic", "alpha": "1/2", "tau1": "1"}}

EXPLICIT = {
    "source": "explicit",
    "N": 2,
    "lambda": [0, 1, 2, 3, 4, 5, 6],
    "tau": [0, 1, 2, 3, 4, 5, 6],
    "a": [0, 0, 0, 0, 0, 0, 0],
}


def test_construct_shapes():
    out = newthyper.construct(JACOBI_LIKE, n=4)
    assert out["N"] == 4
    assert len(out["polynomials"]) == 5
    assert out["polynomials"][0]["monomial_coeffs"] == ["1"]
    assert out["W"][2][2] == "1"
    assert len(out["recurrence"]["b"]) == 5


def test_verify_passes_on_classical_instance():
    out = newthyper.verify(JACOBI_LIKE, n=4)
    assert out["pass"] is True
    assert out["conditions"]["pass"] is True
    assert out["gram"]["pass"] is True


def test_classify_label():
    out = newthyper.classify(JACOBI_LIKE, n=6)
    assert out["label"] == "Jacobi"
    assert out["spectrum"] == "quadratic"
    assert out["grid"] == "degenerate"


def test_moments_on_explicit_instance():
    out = newthyper.moments(EXPLICIT)
    assert out["c"] == ["1", "-1", "1", "-1", "1"]
    assert out["psi_symmetric"] is True


def test_validate_reports_violations():
    bad = dict(EXPLICIT)
    bad["lambda"] = [0, 1, 1, 3, 4, 5, 6]
    out = newthyper.validate(bad)
    assert out["valid"] is False
    assert "lambda_1 = lambda_2" in out["violations"]


def test_spec_errors_become_value_errors():
    with pytest.raises(ValueError):
        newthyper.construct({"source": "family", "params": {"family": "askey_wilson", "q": "1"}})


def test_accepts_json_strings_directly():
    out = newthyper.classify('{"source": "family", "params": {"family": "linear", "tau1": "1"}}', n=6)
    assert out["label"] == "Laguerre-type"
