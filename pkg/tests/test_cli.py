"""
Command Line Tests for origami-veech
"""

import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from config import ORIGAMI_DATA_DIR
from veech_cli import EXIT_INPUT_ERROR, EXIT_NOT_CERTIFIED, EXIT_OK, main

D8 = str(ORIGAMI_DATA_DIR / "d8.json")
A5 = str(ORIGAMI_DATA_DIR / "a5.json")
TORUS = str(ORIGAMI_DATA_DIR / "torus.json")


@pytest.fixture
def write_json(tmp_path):
    def _write(name, data):
        path = tmp_path / name
        path.write_text(json.dumps(data) if not isinstance(data, str) else data)
        return str(path)
    return _write


class TestCylindersCommand:
    """Test `cylinders`."""

    def test_d8_report(self, capsys):
        """Two rows w=4 h=1 and the parabolic (1 4; 0 1)."""
        assert main(["cylinders", D8]) == EXIT_OK
        out = capsys.readouterr().out
        assert out.count("w=4 h=1 inverse_modulus=4") == 2
        assert "parabolic = (1 4; 0 1)" in out

    def test_a5_json(self, capsys):
        """Direction (1,-1) of A5 as JSON."""
        assert main(["cylinders", A5, "--m", "1", "--json"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["direction"] == [1, -1]
        assert data["parabolic"] == [[6, 5], [-5, -4]]
        assert {c["w"] for c in data["cylinders"]} == {5}

    def test_vector_direction(self, capsys):
        """--direction takes a primitive vector."""
        assert main(["cylinders", D8, "--direction", "2,3", "--json"]) == EXIT_OK
        assert json.loads(capsys.readouterr().out)["direction"] == [2, 3]


class TestVeechCommand:
    """Test `veech`."""

    def test_torus(self, capsys):
        """The torus has index 1."""
        assert main(["veech", TORUS]) == EXIT_OK
        out = capsys.readouterr().out
        assert "index 1" in out
        assert "level 1" in out

    def test_a5_json(self, capsys):
        """A5 has index 9."""
        assert main(["veech", A5, "--json", "--no-cache"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["index"] == 9
        assert sum(data["cusp_widths"]) == 9

    def test_cache_written(self, capsys, isolated_cache):
        """Without --no-cache the orbit is stored."""
        assert main(["veech", D8]) == EXIT_OK
        assert list(isolated_cache.glob("*.joblib"))

    def test_cached_matches_fresh(self, capsys):
        """D8 reports the same group from the cache and from scratch."""
        assert main(["veech", D8, "--json", "--no-cache"]) == EXIT_OK
        fresh = json.loads(capsys.readouterr().out)
        assert main(["veech", D8, "--json"]) == EXIT_OK
        capsys.readouterr()
        assert main(["veech", D8, "--json"]) == EXIT_OK
        cached = json.loads(capsys.readouterr().out)
        assert fresh["index"] == cached["index"] == 3
        assert fresh == cached


class TestCertifyCommand:
    """Test `certify`."""

    def test_a5(self, capsys, tmp_path):
        """A5 is certified and the certificate is written."""
        output = tmp_path / "a5-certificate.json"
        assert main(["certify", A5, "--output", str(output)]) == EXIT_OK
        assert "certified (proposition): totally non-congruence" in capsys.readouterr().out
        data = json.loads(output.read_text())
        assert [w["p"] for w in data["witnesses"]] == [2, 3, 5]

    def test_d8_not_satisfied(self, capsys):
        """D8 exits 3."""
        assert main(["certify", D8]) == EXIT_NOT_CERTIFIED
        assert "criterion not satisfied" in capsys.readouterr().out

    def test_d8_json(self, capsys):
        assert main(["certify", D8, "--json"]) == EXIT_NOT_CERTIFIED
        assert json.loads(capsys.readouterr().out) == {"certified": False}

    def test_abc_needs_orders(self):
        """--method abc without --abc is an input error."""
        assert main(["certify", A5, "--method", "abc"]) == EXIT_INPUT_ERROR

    def test_families_then_abc(self, capsys, tmp_path):
        """A PSL(2,7) family member certifies with --method abc."""
        path = str(tmp_path / "psl2_7.json")
        assert main(["families", "abc", "--psl", "7", "--abc", "2,3,7", "--output", path]) == EXIT_OK
        assert main(["certify", path, "--method", "abc", "--abc", "2,3,7", "--json"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["method"] == "abc"
        assert [w["p"] for w in data["witnesses"]] == [2, 3, 7]


class TestSurjectivityCommand:
    """Test `surjectivity`."""

    def test_a5_json(self, capsys):
        assert main(["surjectivity", A5, "--max-n", "6", "--json", "--no-cache"]) == EXIT_OK
        rows = json.loads(capsys.readouterr().out)
        assert [r["n"] for r in rows] == [2, 3, 4, 5, 6]
        assert all(r["surjects"] for r in rows)

    def test_report(self, capsys):
        assert main(["surjectivity", TORUS, "--max-n", "12"]) == EXIT_OK
        assert "surjective for all n: True" in capsys.readouterr().out

    def test_empty_sweep(self, capsys):
        """N = 1 gives an empty table."""
        assert main(["surjectivity", D8, "--max-n", "1", "--json"]) == EXIT_OK
        assert json.loads(capsys.readouterr().out) == []


class TestFamiliesCommand:
    """Test `families`."""

    def test_alternating_stdout(self, capsys):
        """Without --output the origami JSON goes to stdout."""
        assert main(["families", "alternating", "5"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["x"] == [[1, 2, 3]]
        assert data["y"] == [[1, 2, 3, 4, 5]]

    def test_dihedral_output(self, tmp_path):
        path = tmp_path / "d10.json"
        assert main(["families", "dihedral", "5", "--output", str(path)]) == EXIT_OK
        assert json.loads(path.read_text())["group"]["degree"] == 5

    def test_alternating_even(self):
        """A4 is not generated by the two cycles."""
        assert main(["families", "alternating", "4"]) == EXIT_INPUT_ERROR

    def test_abc_without_pair(self, capsys, tmp_path):
        """PSL(2,5) has no element of order 7, which is a precondition failure."""
        path = tmp_path / "none.json"
        assert main(["families", "abc", "--psl", "5", "--abc", "2,3,7", "--output", str(path)]) == EXIT_INPUT_ERROR
        assert not path.exists()


class TestInputErrors:
    """Malformed input exits 2."""

    def test_missing_file(self, tmp_path):
        assert main(["veech", str(tmp_path / "missing.json")]) == EXIT_INPUT_ERROR

    def test_invalid_json(self, write_json):
        assert main(["veech", write_json("broken.json", "{not json")]) == EXIT_INPUT_ERROR

    def test_point_out_of_range(self, write_json):
        data = {"group": {"degree": 3, "generators": [[[1, 2, 3]]]}, "x": [[1, 4]], "y": []}
        assert main(["cylinders", write_json("range.json", data)]) == EXIT_INPUT_ERROR

    def test_not_generating(self, write_json):
        """x = r, y = r² in D8."""
        data = {
            "group": {"degree": 4, "generators": [[[1, 2, 3, 4]], [[2, 4]]]},
            "x": [[1, 2, 3, 4]],
            "y": [[1, 3], [2, 4]],
        }
        assert main(["certify", write_json("nongen.json", data)]) == EXIT_INPUT_ERROR

    def test_bad_abc(self, capsys):
        assert main(["certify", A5, "--method", "abc", "--abc", "2,3"]) == EXIT_INPUT_ERROR

    def test_abc_not_pairwise_coprime(self, capsys):
        """(2,4,5) shares the factor 2."""
        assert main(["certify", A5, "--method", "abc", "--abc", "2,4,5"]) == EXIT_INPUT_ERROR
        assert "NotPairwiseCoprimeError" in capsys.readouterr().err
