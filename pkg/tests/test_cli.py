"""
Maxwell Quasi-Trefftz Toolkit - CLI Tests
==========================================

Tests for command dispatch, exit codes and the self-check runner.
"""

import json
import pytest
import sys
import os

# Add src to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from app import main
from bases.spaces import star_complements
from config import EXIT_OK, EXIT_USAGE_ERROR, EXIT_VERIFICATION_FAILED
from data import codec
from diffops.matrices import OpKind, OperatorMatrix
from diffops.operators import matrix_cache
from polyalg.polynomials import CoefficientJet, HomScalarPoly
from selfcheck.suite_runner import SelfCheckRunner


# =============================================================================
# FIXTURES
# =============================================================================

@pytest.fixture
def eps_file(tmp_path):
    """eps = 1 + x1 + x2 x3 written as a jet file."""
    eps = CoefficientJet.from_parts([
        HomScalarPoly.constant(1),
        HomScalarPoly.monomial((1, 0, 0)),
        HomScalarPoly.monomial((0, 1, 1)),
        HomScalarPoly.zero(3),
    ])
    path = tmp_path / "eps.json"
    codec.dump_json(codec.encode_jet(eps), str(path))
    return str(path)


@pytest.fixture
def basis_file(tmp_path, eps_file):
    """A basis file built by the CLI."""
    path = str(tmp_path / "basis.json")
    assert main(["qt", "build", "--p", "3", "--eps", eps_file, "--out", path]) == EXIT_OK
    return path


@pytest.fixture
def corrupted_curl():
    """Replace the cached curl matrix at k = 0 by zeros, restore afterwards."""
    zeros = tuple((0,) * 9 for _ in range(3))
    matrix_cache().inject(("curl", 0), OperatorMatrix(OpKind.CURL, 1, 0, 3, 9, zeros))
    yield
    matrix_cache().clear()


# =============================================================================
# USAGE TESTS
# =============================================================================

class TestUsage:
    """Tests for argument errors."""

    def test_unknown_command(self):
        """Test that an unknown command exits with 2."""
        assert main(["frobnicate"]) == EXIT_USAGE_ERROR

    def test_small_p(self, capsys):
        """Test that p <= 2 exits with 2 and names the constraint."""
        assert main(["qt", "dims", "--p", "2"]) == EXIT_USAGE_ERROR
        assert "p must exceed 2" in capsys.readouterr().err

    def test_missing_input(self, tmp_path):
        """Test that a missing input file exits with 2."""
        missing = str(tmp_path / "nope.json")
        assert main(["qt", "oracle", "--p", "3", "--eps", missing]) == EXIT_USAGE_ERROR

    def test_malformed_input(self, tmp_path, capsys):
        """Test that malformed JSON exits with 2 and names the field."""
        path = tmp_path / "field.json"
        path.write_text(json.dumps([{"degree": 1, "terms": []}]))
        assert main(["helmholtz", "--in", str(path)]) == EXIT_USAGE_ERROR
        assert "error:" in capsys.readouterr().err

    def test_non_utf8_input(self, tmp_path, capsys):
        """Test that a jet file with invalid UTF-8 bytes exits with 2."""
        path = tmp_path / "eps.json"
        path.write_bytes(b'{"max_degree": 0, "parts": [\xff\xfe]}')
        assert main(["qt", "oracle", "--p", "3", "--eps", str(path)]) == EXIT_USAGE_ERROR
        assert "not UTF-8" in capsys.readouterr().err

    def test_basis_degree_mismatch(self, basis_file, eps_file, capsys):
        """Test that an element of the wrong max_degree exits with 2 and names it."""
        payload = codec.load_json(basis_file)
        poly = payload["elements"][1]["poly"]
        poly["max_degree"] = 4
        poly["parts"].append([{"degree": 4, "terms": []} for _ in range(3)])
        codec.dump_json(payload, basis_file)
        assert main(["qt", "verify", "--basis", basis_file, "--eps", eps_file]) == EXIT_USAGE_ERROR
        err = capsys.readouterr().err
        assert "max_degree must equal p" in err
        assert "elements[1].poly.max_degree" in err

    def test_help(self):
        """Test that --help exits with 0."""
        assert main(["--help"]) == EXIT_OK


# =============================================================================
# COMMAND TESTS
# =============================================================================

class TestCommands:
    """Tests for each command's output."""

    def test_dims(self, capsys):
        """Test the dimension report."""
        assert main(["qt", "dims", "--p", "3"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "dim QT_3 = 39" in out
        assert "pw_dimension" in out

    def test_dims_json(self, capsys):
        """Test the JSON dimension report."""
        assert main(["qt", "dims", "--p", "4", "--format", "json"]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["dimension"] == 59
        assert payload["pw_comparison"] == [{"p": 4, "pw_dimension": 70, "qt_dimension": 59}]

    def test_ops_dump(self, capsys):
        """Test the operator matrix dump."""
        assert main(["ops", "dump", "--op", "curl", "--k", "0"]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert (payload["rows"], payload["cols"]) == (3, 9)
        assert payload["op"] == "curl"

    def test_bases_dump(self, capsys):
        """Test the basis dump as a table."""
        assert main(["bases", "dump", "--space", "harm", "--k", "1", "--format", "table"]) == EXIT_OK
        assert "dimension 5" in capsys.readouterr().out

    def test_bases_dump_json(self, capsys):
        """Test that the JSON basis dump decodes to the same basis."""
        assert main(["bases", "dump", "--space", "sol-star", "--k", "2"]) == EXIT_OK
        basis = codec.decode_space_basis(json.loads(capsys.readouterr().out))
        assert basis == star_complements(2)[0]
        assert basis.dimension == 8

    def test_helmholtz(self, tmp_path, capsys):
        """Test the Helmholtz command on (x2, 0, 0)."""
        path = tmp_path / "field.json"
        field = [
            {"degree": 1, "terms": [{"idx": [0, 1, 0], "coef": "1/1"}]},
            {"degree": 1, "terms": []},
            {"degree": 1, "terms": []},
        ]
        path.write_text(json.dumps(field))
        assert main(["helmholtz", "--in", str(path)]) == EXIT_OK
        assert set(json.loads(capsys.readouterr().out)) == {"degree", "F", "G", "H"}

    def test_oracle(self, eps_file, capsys):
        """Test the oracle against the formula."""
        assert main(["qt", "oracle", "--p", "3", "--eps", eps_file, "--curlcurl-only"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "oracle=39 formula=39 MATCH" in out
        assert "pw=48" in out

    def test_build_and_verify(self, basis_file, eps_file, capsys):
        """Test that a built basis verifies."""
        payload = codec.load_json(basis_file)
        assert payload["dimension"] == 39
        assert main(["qt", "verify", "--basis", basis_file, "--eps", eps_file]) == EXIT_OK
        assert "PASS" in capsys.readouterr().out

    def test_build_with_oracle(self, tmp_path, eps_file, capsys):
        """Test that --verify also prints the oracle comparison."""
        out_path = str(tmp_path / "checked.json")
        assert main(["qt", "build", "--p", "3", "--eps", eps_file, "--out", out_path, "--verify", "--jobs", "2"]) == EXIT_OK
        assert "MATCH" in capsys.readouterr().out

    def test_tampered_basis(self, basis_file, eps_file, capsys):
        """Test that a modified coefficient fails verification."""
        payload = codec.load_json(basis_file)
        payload["elements"][0]["poly"]["parts"][0][0]["terms"][0]["coef"] = "2/1"
        codec.dump_json(payload, basis_file)
        assert main(["qt", "verify", "--basis", basis_file, "--eps", eps_file]) == EXIT_VERIFICATION_FAILED
        assert "FAIL qt_3_pi0_0" in capsys.readouterr().out


# =============================================================================
# SELF-CHECK TESTS
# =============================================================================

class TestSelfCheck:
    """Tests for the self-check suites."""

    def test_fast_suites_pass(self):
        """Test that the suites pass on a small range."""
        runner = SelfCheckRunner(max_k=2, max_p=3, seed=1)
        runner.remove_suite("enumerate_vs_oracle")
        report = runner.run()
        assert report.all_passed, report.to_json()
        assert len(report.to_frame()) == 5

    def test_fault_injection(self, corrupted_curl):
        """Test that a corrupted operator matrix fails the exact sequence suite."""
        runner = SelfCheckRunner(max_k=1, max_p=3, seed=1)
        runner.remove_suite("enumerate_vs_oracle")
        report = runner.run()
        by_name = {suite.name: suite for suite in report.suites}
        assert not by_name["exact_sequence"].passed
        assert "rk C_0" in by_name["exact_sequence"].failures
        assert by_name["sign_convention"].passed
        assert not report.all_passed

    def test_cli_reports_failure(self, corrupted_curl, capsys):
        """Test that the CLI exits with 1 when a suite fails."""
        assert main(["selfcheck", "--max-k", "1", "--max-p", "3", "--format", "json"]) == EXIT_VERIFICATION_FAILED
        payload = json.loads(capsys.readouterr().out)
        assert payload["all_passed"] is False


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
