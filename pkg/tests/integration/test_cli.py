"""
Integration tests for the bcom command line.
"""

import json
from pathlib import Path

import pytest
import yaml

from src.cli import build_parser, main, render, resolve_config
from src.core.simplicial.homology import BettiTable


@pytest.mark.integration
class TestCliHomology:
    """Test suite for the homology command."""

    def test_wedge(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Text output is the Betti tuple."""
        argv = ["homology", "--group", "S3", "--tau", "zmod:2", "--ell", "2", "--max-degree", "3"]
        assert main(argv) == 0  # nosec: B101 # pytest assertion
        assert capsys.readouterr().out == "(1,3,3,3)\n"  # nosec: B101 # pytest assertion

    def test_cyclic_two_csv(self, capsys: pytest.CaptureFixture[str]) -> None:
        """CSV output lists one row per degree."""
        argv = ["homology", "--group", "C2", "--tau", "z", "--ell", "2", "--max-degree", "4"]
        assert main([*argv, "--format", "csv"]) == 0  # nosec: B101 # pytest assertion
        rows = capsys.readouterr().out.splitlines()
        assert rows == ["degree,dim", "0,1", "1,1", "2,1", "3,1", "4,1"]  # nosec: B101

    def test_json_group_file(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """Groups can be read from a JSON multiplication table."""
        path = tmp_path / "c2.json"
        path.write_text(json.dumps({"order": 2, "mul": [[0, 1], [1, 0]], "name": "two"}))
        argv = ["homology", "--group", str(path), "--ell", "2", "--max-degree", "2"]
        assert main([*argv, "--format", "json"]) == 0  # nosec: B101 # pytest assertion
        assert json.loads(capsys.readouterr().out) == {"dims": [1, 1, 1], "ell": 2}  # nosec: B101

    def test_config_file_and_flags(
        self, tmp_path: Path, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """Flags override the YAML run settings."""
        path = tmp_path / "run.yaml"
        path.write_text(yaml.safe_dump({"group": "C3", "tau": "z", "ell": 3, "max_degree": 2}))
        assert main(["--config", str(path), "homology", "--ell", "2"]) == 0  # nosec: B101
        assert capsys.readouterr().out == "(1,0,0)\n"  # nosec: B101 # pytest assertion

    def test_output_and_metrics(
        self, tmp_path: Path, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """--output redirects results and --metrics-file writes counters."""
        output, metrics = tmp_path / "out.txt", tmp_path / "metrics.prom"
        argv = ["--output", str(output), "--metrics-file", str(metrics)]
        argv += ["homology", "--group", "V4", "--tau", "z", "--ell", "2", "--max-degree", "2"]
        assert main(argv) == 0  # nosec: B101 # pytest assertion
        assert capsys.readouterr().out == ""  # nosec: B101 # pytest assertion
        assert output.read_text() == "(1,2,3)\n"  # nosec: B101 # pytest assertion
        assert "bcom_simplices_built_total" in metrics.read_text()  # nosec: B101 # pytest assertion

    def test_repeated_runs_are_identical(
        self, tmp_path: Path, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """The same config produces byte-identical output twice."""
        path = tmp_path / "run.yaml"
        path.write_text(yaml.safe_dump({"group": "Q8", "tau": "z", "ell": 2, "max_degree": 1}))
        outputs = []
        for _ in range(2):
            assert main(["--config", str(path), "decompose", "--format", "json"]) == 0  # nosec
            outputs.append(capsys.readouterr().out)
        assert outputs[0] == outputs[1]  # nosec: B101 # pytest assertion
        assert json.loads(outputs[0])["diagram"]["objects"]  # nosec: B101 # pytest assertion


@pytest.mark.integration
class TestCliOtherCommands:
    """Test suite for compare, decompose, group and verify."""

    def test_compare(self, capsys: pytest.CaptureFixture[str]) -> None:
        """zmod:2 -> z on S3 is not a mod-3 equivalence."""
        argv = ["compare", "--group", "S3", "--from-tau", "zmod:2", "--to-tau", "z"]
        argv += ["--ell", "3", "--max-degree", "2", "--format", "json"]
        assert main(argv) == 0  # nosec: B101 # pytest assertion
        report = json.loads(capsys.readouterr().out)
        assert report["iso"] is False  # nosec: B101 # pytest assertion
        assert report["from_tau"] == "zmod:2"  # nosec: B101 # pytest assertion
        assert "matrices" not in report  # nosec: B101 # pytest assertion

    def test_decompose(self, capsys: pytest.CaptureFixture[str]) -> None:
        """The decomposition report as JSON."""
        argv = ["decompose", "--group", "S3", "--tau", "z", "--ell", "2", "--max-degree", "1"]
        assert main([*argv, "--format", "json"]) == 0  # nosec: B101 # pytest assertion
        report = json.loads(capsys.readouterr().out)
        assert report["iso"] is True  # nosec: B101 # pytest assertion
        assert report["objects"] == 5  # nosec: B101 # pytest assertion

    def test_group(self, capsys: pytest.CaptureFixture[str]) -> None:
        """group emits the multiplication table."""
        assert main(["group", "--group", "C3"]) == 0  # nosec: B101 # pytest assertion
        model = json.loads(capsys.readouterr().out)
        assert model["order"] == 3  # nosec: B101 # pytest assertion
        assert model["mul"][1][2] == 0  # nosec: B101 # pytest assertion

    def test_verify_failure(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """A failing suite exits 4 and still prints the table."""
        path = tmp_path / "verify.yaml"
        path.write_text(yaml.safe_dump({"so3": {"max_n": 2, "expected_components": {2: 3}}}))
        assert main(["verify", "so3", "--suite-config", str(path)]) == 4  # nosec: B101
        out = capsys.readouterr().out
        assert "FAIL" in out  # nosec: B101 # pytest assertion
        assert out.rstrip().endswith("2/3 checks passed")  # nosec: B101 # pytest assertion

    def test_verify_pass(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """A passing suite exits 0."""
        path = tmp_path / "verify.yaml"
        path.write_text(yaml.safe_dump({"so3": {"max_n": 3}}))
        assert main(["verify", "so3", "--suite-config", str(path)]) == 0  # nosec: B101
        assert "6/6 checks passed" in capsys.readouterr().out  # nosec: B101 # pytest assertion


@pytest.mark.integration
class TestCliErrors:
    """Exit codes for invalid input and exceeded caps."""

    def test_unknown_group(self) -> None:
        """Malformed group specs exit 2."""
        assert main(["homology", "--group", "X9", "--ell", "2"]) == 2  # nosec: B101

    def test_composite_ell(self) -> None:
        """Composite primes exit 2."""
        assert main(["homology", "--group", "C2", "--ell", "4"]) == 2  # nosec: B101

    def test_group_cap(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Groups beyond the order cap exit 3."""
        monkeypatch.setenv("BCOM_MAX_GROUP_ORDER", "4")
        assert main(["homology", "--group", "S3", "--ell", "2"]) == 3  # nosec: B101

    def test_malformed_caps(self, tmp_path: Path) -> None:
        """A caps entry that is not a mapping exits 2."""
        path = tmp_path / "run.yaml"
        path.write_text(yaml.safe_dump({"group": "C2", "caps": 5}))
        assert main(["--config", str(path), "homology"]) == 2  # nosec: B101 # pytest assertion


class TestRendering:
    """Test suite for render and resolve_config."""

    def test_render_formats(self) -> None:
        """Tables and mappings in each format."""
        table = BettiTable(ell=2, dims=[1, 3])
        assert render(table, "text") == "(1,3)\n"  # nosec: B101 # pytest assertion
        assert render(table, "csv") == "degree,dim\n0,1\n1,3\n"  # nosec: B101 # pytest assertion
        assert render({"iso": True}, "csv") == "key,value\niso,true\n"  # nosec: B101
        assert render({"iso": True}, "text") == "iso: True\n"  # nosec: B101 # pytest assertion

    def test_resolve_defaults(self) -> None:
        """Without flags the run uses the defaults."""
        config = resolve_config(build_parser().parse_args(["homology"]))
        resolved = (config.group, config.tau, config.ell, config.max_degree)
        assert resolved == ("S3", "z", 2, 2)  # nosec: B101 # pytest assertion
        assert config.output_format == "text"  # nosec: B101 # pytest assertion
