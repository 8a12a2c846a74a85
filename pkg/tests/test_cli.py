"""Command line tests."""

import argparse
import json

import pytest

from toricdef.presentation.cli import build_parser, main, parse_vector


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestParsing:
    """Argument parsing test cases."""

    def test_parse_vector(self):
        """Test comma-separated vectors."""
        assert parse_vector("1, -2,3") == (1, -2, 3)

    def test_parse_vector_invalid(self):
        """Test non-integers are rejected."""
        with pytest.raises(argparse.ArgumentTypeError):
            parse_vector("1,x")

    def test_output_mode_default(self):
        """Test compact JSON is the default."""
        args = build_parser().parse_args(["hilbert", "--cone", "fixture:square"])
        assert args.pretty is False

    def test_bad_degree_exits_2(self, capsys):
        """Test argparse errors exit with code 2."""
        with pytest.raises(SystemExit) as exc:
            main(["t1", "--cone", "fixture:square", "--degree", "a,b"])
        assert exc.value.code == 2


class TestCommands:
    """Subcommand test cases."""

    def test_hilbert(self, capsys):
        """Test the Hilbert basis report of the quadric cone."""
        code, out, _ = _run(capsys, "hilbert", "--cone", "fixture:square")
        assert code == 0
        report = json.loads(out)
        assert report["command"] == "hilbert"
        assert report["result"]["count"] == 4
        assert [0, 0, 1] not in report["result"]["E"]
        assert len(report["input"]["sha256"]) == 64
        assert report["verified"] is None

    def test_t1(self, capsys):
        """Test T1(-R*) of the quadric cone."""
        code, out, _ = _run(
            capsys, "t1", "--cone", "fixture:square", "--degree", "0,0,1"
        )
        assert code == 0
        result = json.loads(out)["result"]
        assert result["t1_dim"] == 1
        assert len(result["basis"]) == 1

    def test_t2(self, capsys):
        """Test T2(-2R*) of the hexagon cone."""
        code, out, _ = _run(
            capsys, "t2", "--cone", "fixture:hexagon", "--degree", "0,0,2"
        )
        assert code == 0
        result = json.loads(out)["result"]
        assert result["t2_dim"] == 2
        assert result["t2_is_exact"] is True
        assert result["t2_label"] == "T2"
        assert result["span_complex"]["t2_dim"] == 2

    def test_scan(self, capsys):
        """Test the scan of xy = z^4."""
        code, out, _ = _run(capsys, "scan", "--cone", "fixture:a3")
        assert code == 0
        result = json.loads(out)["result"]
        assert result["total_t1"] == 3
        assert result["total_t2"] == 0
        assert result["heuristic_box"] is True

    def test_cup(self, capsys):
        """Test the square of the quadric cone's deformation."""
        code, out, _ = _run(
            capsys,
            "cup",
            "--cone",
            "fixture:square",
            "--degR",
            "0,0,1",
            "--degS",
            "0,0,1",
        )
        assert code == 0
        result = json.loads(out)["result"]
        assert result["degree"] == [0, 0, 2]
        assert result["is_zero"] is True

    def test_cup_index_out_of_range(self, capsys):
        """Test a basis index beyond dim T1 is an input error."""
        code, _, err = _run(
            capsys,
            "cup",
            "--cone",
            "fixture:square",
            "--degR",
            "0,0,1",
            "--degS",
            "0,0,1",
            "--phi-index",
            "5",
        )
        assert code == 2
        assert json.loads(err.strip().splitlines()[-1])["error"] == "schema_error"

    def test_gorenstein(self, capsys):
        """Test the closed forms of the hexagon."""
        code, out, _ = _run(
            capsys, "gorenstein", "--polygon", "fixture:hexagon", "--kmax", "3"
        )
        assert code == 0
        result = json.loads(out)["result"]
        assert result["N"] == 6
        assert result["t1_dim"] == 3
        assert (result["k1"], result["k2"]) == (2, 2)
        assert result["t2_dims"] == {"2": 2, "3": 0}
        assert result["r_star_in_E"] is True
        assert len(result["cup_table"]) == 6
        assert result["verify"] is None

    def test_pretty(self, capsys):
        """Test indented output."""
        code, out, _ = _run(
            capsys, "hilbert", "--cone", "fixture:octant", "--pretty"
        )
        assert code == 0
        assert out.startswith("{\n  ")

    def test_digest_is_stable(self, capsys):
        """Test repeated runs give the same input digest and result."""
        _, first, _ = _run(capsys, "hilbert", "--cone", "fixture:a3")
        _, second, _ = _run(capsys, "hilbert", "--cone", "fixture:a3")
        a, b = json.loads(first), json.loads(second)
        assert a["input"] == b["input"]
        assert a["result"] == b["result"]

    def test_cone_file(self, capsys, tmp_path):
        """Test a cone read from a file."""
        path = tmp_path / "a3.json"
        path.write_text(json.dumps({"rank": 2, "generators": [[1, 0], [1, 4]]}))
        code, out, _ = _run(capsys, "hilbert", "--cone", str(path))
        assert code == 0
        assert json.loads(out)["result"]["E"] == [[0, 1], [1, 0], [4, -1]]


class TestErrors:
    """Exit code test cases."""

    def test_rejected_polygon(self, capsys):
        """Test a non-primitive edge exits with code 2."""
        code, out, err = _run(
            capsys, "gorenstein", "--polygon", "fixture:rectangle_1x3"
        )
        assert code == 2
        assert out == ""
        error = json.loads(err.strip().splitlines()[-1])
        assert error["error"] == "invalid_polygon"
        assert error["message"] == "edge 1 is not primitive"

    def test_missing_file(self, capsys, tmp_path):
        """Test an unreadable cone file exits with code 2."""
        code, _, _ = _run(capsys, "hilbert", "--cone", str(tmp_path / "none.json"))
        assert code == 2

    def test_cup_needs_smooth_codim2(self, capsys):
        """Test the cup product on xy = z^4 is refused."""
        code, _, err = _run(
            capsys, "cup", "--cone", "fixture:a3", "--degR", "1,0", "--degS", "1,0"
        )
        assert code == 2
        error = json.loads(err.strip().splitlines()[-1])
        assert error["error"] == "not_smooth_in_codim_2"


class TestVerifyAll:
    """Acceptance suite test cases."""

    @pytest.mark.slow
    def test_verify_all(self, capsys):
        """Test every built-in check passes with the default seed."""
        code, out, _ = _run(capsys, "verify-all")
        assert code == 0
        report = json.loads(out)
        assert report["verified"] is True
        checks = report["result"]["checks"]
        assert len(checks) == 13
        assert all(check["passed"] for check in checks)
