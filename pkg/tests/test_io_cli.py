import json
import math

import numpy as np
import pytest

from vurkit import (FileFormatError, InvalidStateError, eigendecompose)
from vurkit.cli import main
from vurkit.fixtures import (PAULI_X, ket00, maximally_mixed, pauli3,
                             qutrit4, singlet)
from vurkit.io import (load_observable, parse_observable, parse_state,
                       serialize_observable, serialize_state)


def _matrix_doc(m):
    return {"matrix": [[[z.real, z.imag] for z in row] for row in np.asarray(m, complex)]}


# --- documents ---------------------------------------------------------------

def test_parse_matrix_document():
    obs = parse_observable(_matrix_doc(PAULI_X))
    assert np.allclose(obs.eigenvalues, [-1.0, 1.0])


def test_parse_rejects_ambiguous_documents():
    with pytest.raises(FileFormatError):
        parse_observable({})
    doc = _matrix_doc(PAULI_X)
    doc["spectral"] = {"eigenvalues": [0.0], "eigenvectors": [[[1.0, 0.0]]]}
    with pytest.raises(FileFormatError):
        parse_observable(doc)


def test_parse_rejects_malformed_matrices():
    with pytest.raises(FileFormatError):
        parse_observable({"matrix": [[[0.0, 0.0]], [[0.0, 0.0], [1.0, 0.0]]]})
    with pytest.raises(FileFormatError):
        parse_observable({"matrix": [[[0.0, 0.0], [math.inf, 0.0]],
                                     [[0.0, 0.0], [0.0, 0.0]]]})
    with pytest.raises(FileFormatError):
        parse_observable({"matrix": [[["x", 0.0], [0.0, 0.0]],
                                     [[0.0, 0.0], [0.0, 0.0]]]})


def test_parse_spectral_document_checks():
    good = serialize_observable(eigendecompose(PAULI_X))
    parsed = parse_observable(good)
    assert np.allclose(parsed.eigenvalues, [-1.0, 1.0])

    bad_order = json.loads(json.dumps(good))
    bad_order["spectral"]["eigenvalues"] = [1.0, -1.0]
    with pytest.raises(FileFormatError, match="ascending"):
        parse_observable(bad_order)

    skewed = json.loads(json.dumps(good))
    skewed["spectral"]["eigenvectors"][0] = [[1.0, 0.0], [0.0, 0.0]]
    skewed["spectral"]["eigenvectors"][1] = [[1.0, 0.0], [0.0, 0.0]]
    with pytest.raises(FileFormatError, match="orthonormal"):
        parse_observable(skewed)


def test_observable_roundtrip_is_exact_for_fixtures():
    for obs in [*pauli3(), *qutrit4()]:
        doc = json.loads(json.dumps(serialize_observable(obs)))
        again = parse_observable(doc)
        assert np.array_equal(again.eigenvalues, obs.eigenvalues)
        assert np.array_equal(again.eigenvectors, obs.eigenvectors)
        # canonical form is a fixed point of serialize
        assert serialize_observable(again) == serialize_observable(obs)


def test_state_roundtrip():
    for state in (singlet(), ket00(), maximally_mixed(4)):
        doc = json.loads(json.dumps(serialize_state(state)))
        again = parse_state(doc)
        assert again.is_pure == state.is_pure
        if state.is_pure:
            assert np.array_equal(again.vector, state.vector)
        else:
            assert np.array_equal(again.matrix, state.matrix)


def test_parse_state_validation():
    with pytest.raises(FileFormatError):
        parse_state({"pure": [[1.0, 0.0]], "density": [[[1.0, 0.0]]]})
    with pytest.raises(InvalidStateError):
        parse_state({"pure": [[1.0, 0.0], [1.0, 0.0]]})
    with pytest.raises(InvalidStateError):
        parse_state({"density": [[[1.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [1.0, 0.0]]]})


def test_load_observable_with_loosened_tolerance(tmp_path):
    near = np.array(PAULI_X, dtype=complex)
    near[0, 1] += 1e-8
    path = tmp_path / "near.json"
    path.write_text(json.dumps(_matrix_doc(near)))
    from vurkit import NotHermitianError
    with pytest.raises(NotHermitianError):
        load_observable(path)
    from vurkit.config import DEFAULT_TOLERANCES, with_overrides
    loose = with_overrides(DEFAULT_TOLERANCES, {"hermiticity": 1e-6})
    obs = load_observable(path, loose)
    assert obs.dim == 2


# --- command line ------------------------------------------------------------

def test_cli_bound_fixed_alpha(capsys):
    code = main(["bound", "pauli3", "--C", "1.3862943611198906", "--alpha", "0.597"])
    out = capsys.readouterr().out
    assert code == 0
    assert "1.724314500" in out


def test_cli_bound_auto_constant_json(capsys):
    code = main(["bound", "qutrit4", "--auto-C", "--alpha", "1.92", "--json"])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["version"]
    payload = doc["payload"]
    assert payload["constant"]["source"] == "wu_mub"
    assert payload["constant"]["value"] == pytest.approx(4 * math.log(2), abs=1e-12)
    assert payload["lower_bound"] == pytest.approx(0.908368013, abs=1e-8)
    assert {"alpha", "constant", "per_operator", "raw_bound", "lower_bound", "clamped"} <= set(payload)
    assert {"beta_star", "max_value", "bracket"} == set(payload["per_operator"][0])


def test_cli_bound_zero_constant(capsys):
    code = main(["bound", "sigma-z", "--C", "0", "--alpha", "1.0"])
    out = capsys.readouterr().out
    assert code == 0
    assert "lower bound = 0.000000000 (clamped: yes)" in out


def test_cli_bound_optimize(capsys):
    code = main(["bound", "pauli3", "--auto-C", "--optimize", "--json"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)["payload"]
    assert 1.7243 <= payload["lower_bound"] <= 2.0


def test_cli_entropic(capsys):
    assert main(["entropic", "sigma-z", "sigma-x"]) == 0
    out = capsys.readouterr().out
    assert "0.707106781" in out and "0.693147181" in out

    assert main(["entropic", "pauli3", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["payload"]["selected"]["source"] == "wu_mub"

    assert main(["entropic", "sigma-z", "sigma-z"]) == 0
    out = capsys.readouterr().out
    assert "selected: C = 0.000000000" in out


def test_cli_oracle(capsys):
    code = main(["oracle", "pauli3", "--restarts", "8", "--seed", "0", "--json"])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["seed"] == 0
    assert doc["payload"]["minimum"] == pytest.approx(2.0, abs=1e-6)
    assert doc["payload"]["restarts_agreeing"] == 8
    assert "pure" in doc["payload"]["argmin_state"]


def test_cli_lur_fixture_state(capsys):
    code = main(["lur", "--state", "singlet", "--pairs", "pauli-pairs", "--auto-C"])
    out = capsys.readouterr().out
    assert code == 0
    assert "verdict: Entangled" in out

    code = main(["lur", "--state", "ket00", "--pairs", "pauli-pairs", "--auto-C", "--json"])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["payload"]["verdict"] == "NotDetected"
    assert doc["payload"]["lhs"] == pytest.approx(4.0, abs=1e-9)


def test_cli_lur_explicit_floors(capsys):
    code = main(["lur", "--state", "mixed2", "--pairs", "sigma-x", "sigma-x",
                 "sigma-y", "sigma-y", "sigma-z", "sigma-z", "--u-a", "1.7", "--u-b", "1.7"])
    out = capsys.readouterr().out
    assert code == 0
    assert "verdict: NotDetected" in out
    assert "6.000000000" in out


def test_cli_continuous(capsys):
    c = repr(1.0 + math.log(math.pi))
    assert main(["continuous", "--C", c, "--alpha", "1"]) == 0
    assert "lower bound = 1.000000000" in capsys.readouterr().out
    assert main(["continuous", "--C", c, "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)["payload"]
    assert payload["alpha_used"] == pytest.approx(1.0, abs=1e-12)
    assert payload["lower_bound"] == pytest.approx(1.0, abs=1e-12)
    assert payload["closed_form_alpha"] is True
    assert main(["continuous", "--C", "1.0"]) == 0
    assert "0.318309886" in capsys.readouterr().out


def test_cli_demo(capsys):
    code = main(["demo", "--seed", "0", "--restarts", "4", "--json"])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["seed"] == 0
    assert doc["payload"]["lur"]["singlet"]["verdict"] == "Entangled"
    assert doc["payload"]["pauli3"]["oracle"]["minimum"] == pytest.approx(2.0, abs=1e-6)


def test_cli_exit_code_parse_failure(capsys):
    code = main(["bound", "does-not-exist.json", "--C", "1", "--alpha", "1"])
    captured = capsys.readouterr()
    assert code == 2
    assert captured.out == ""
    assert "error:" in captured.err


def test_cli_exit_code_bad_json(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    assert main(["bound", str(path), "--C", "1", "--alpha", "1"]) == 2
    assert capsys.readouterr().out == ""


def test_cli_exit_code_dimension_mismatch(capsys):
    code = main(["bound", "sigma-z", "qutrit-sigma0", "--C", "1", "--alpha", "1"])
    assert code == 3
    assert capsys.readouterr().out == ""


def test_cli_exit_code_non_hermitian(tmp_path, capsys):
    path = tmp_path / "skew.json"
    path.write_text(json.dumps({"matrix": [[[0.0, 0.0], [0.0, 1.0]],
                                           [[0.0, 1.0], [0.0, 0.0]]]}))
    assert main(["bound", str(path), "--C", "1", "--alpha", "1"]) == 4
    assert capsys.readouterr().out == ""


def test_cli_exit_code_invalid_state(tmp_path, capsys):
    path = tmp_path / "rho.json"
    path.write_text(json.dumps({"density": [[[1.0, 0.0], [0.0, 0.0]],
                                            [[0.0, 0.0], [1.0, 0.0]]]}))
    assert main(["lur", "--state", str(path), "--pairs", "pauli-pairs", "--auto-C"]) == 5
    assert capsys.readouterr().out == ""


def test_cli_exit_code_bad_alpha(capsys):
    assert main(["continuous", "--C", "1.0", "--alpha", "-1"]) == 6
    capsys.readouterr()
    assert main(["bound", "pauli3", "--C", "1", "--alpha", "-0.5"]) == 6
    assert capsys.readouterr().out == ""


def test_cli_tolerance_override(tmp_path, capsys):
    near = np.array(PAULI_X, dtype=complex)
    near[0, 1] += 1e-8
    path = tmp_path / "near.json"
    path.write_text(json.dumps(_matrix_doc(near)))
    assert main(["bound", str(path), "--C", "1", "--alpha", "1"]) == 4
    capsys.readouterr()
    assert main(["bound", str(path), "--C", "1", "--alpha", "1",
                 "--tol", "hermiticity=1e-6"]) == 0
    capsys.readouterr()
    assert main(["bound", str(path), "--C", "1", "--alpha", "1",
                 "--tol", "bogus=1"]) == 2


def test_cli_json_repeatable_in_process(capsys):
    argv = ["oracle", "qutrit4", "--restarts", "6", "--seed", "11", "--json"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    second = capsys.readouterr().out
    assert first == second
