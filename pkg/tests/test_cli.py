"""Test the command-line interface"""

import json
from pathlib import Path

import pytest
from typer.testing import CliRunner

from qbench.cli import EXIT_INVALID, EXIT_VERIFICATION_FAILED, app

runner = CliRunner()


@pytest.fixture
def workdir(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    """Empty working directory with the cache kept inside it"""
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv("QBENCH_CACHE_DIR", str(tmp_path / "cache"))
    return tmp_path


@pytest.fixture
def instance_file(workdir: Path) -> Path:
    """Generated 1/C instance in two dimensions"""
    path = workdir / "instance.json"
    result = runner.invoke(app, ["generate", "--class", "1/C", "--dim", "2", "--index", "4", "--out", str(path)])
    assert result.exit_code == 0, result.output
    return path


def test_version() -> None:
    result = runner.invoke(app, ["version"])
    assert result.exit_code == 0
    assert "qbench v" in result.output


class TestListClasses:
    """Tests for list-classes"""

    def test_all(self) -> None:
        result = runner.invoke(app, ["list-classes"])
        assert result.exit_code == 0
        assert len(result.output.split()) == 54

    def test_group(self) -> None:
        result = runner.invoke(app, ["list-classes", "--group", "separable-aligned"])
        assert result.output.split() == ["1|C", "1|I", "1|J", "2|C", "2|I", "2|J", "3|C", "3|I", "3|J", "4|C", "4|I", "4|J"]

    def test_unknown_group(self) -> None:
        result = runner.invoke(app, ["list-classes", "--group", "spherical"])
        assert result.exit_code == EXIT_INVALID


class TestGenerate:
    """Tests for generate"""

    def test_writes_instance(self, instance_file: Path) -> None:
        document = json.loads(instance_file.read_text(encoding="utf-8"))
        assert document["class_name"] == "1/C"
        assert document["dimension"] == 2
        assert document["s"] == 2.0

    def test_bad_class(self, workdir: Path) -> None:
        result = runner.invoke(app, ["generate", "--class", "0|C"])
        assert result.exit_code == EXIT_INVALID
        assert not (workdir / "instance.json").exists()

    def test_dimension_too_small_for_duplication(self, workdir: Path) -> None:
        result = runner.invoke(app, ["generate", "--class", "3/I", "--dim", "2"])
        assert result.exit_code == EXIT_INVALID


class TestEvaluate:
    """Tests for evaluate"""

    def test_evaluates_points(self, instance_file: Path, workdir: Path) -> None:
        points = workdir / "points.csv"
        points.write_text("x0,x1\n0.0,0.0\n1.0,-1.0\n", encoding="utf-8")
        result = runner.invoke(app, ["evaluate", "--instance", str(instance_file), "--points", str(points)])
        assert result.exit_code == 0, result.output
        lines = result.output.strip().splitlines()
        assert lines[0] == "f1,f2"
        assert len(lines) == 3

    def test_wrong_width(self, instance_file: Path, workdir: Path) -> None:
        points = workdir / "points.csv"
        points.write_text("x0,x1,x2\n0.0,0.0,0.0\n", encoding="utf-8")
        result = runner.invoke(app, ["evaluate", "--instance", str(instance_file), "--points", str(points)])
        assert result.exit_code == EXIT_INVALID


class TestFront:
    """Tests for front"""

    def test_samples(self, instance_file: Path) -> None:
        result = runner.invoke(app, ["front", "--instance", str(instance_file), "--samples", "5"])
        assert result.exit_code == 0, result.output
        lines = result.output.strip().splitlines()
        assert lines[0] == "t,f1,f2"
        assert len(lines) == 6

    def test_mu_distribution(self, instance_file: Path, workdir: Path) -> None:
        out = workdir / "mu.csv"
        result = runner.invoke(app, ["front", "--instance", str(instance_file), "--mu", "4", "--out", str(out)])
        assert result.exit_code == 0, result.output
        assert len(out.read_text(encoding="utf-8").strip().splitlines()) == 5
        assert (workdir / "cache").exists()


class TestVerify:
    """Tests for verify"""

    def test_generated_class(self, workdir: Path) -> None:
        result = runner.invoke(app, ["verify", "--class", "7|I", "--dim", "4", "--index", "2"])
        assert result.exit_code == 0, result.output
        assert "All checks passed" in result.output

    def test_tampered_file(self, instance_file: Path) -> None:
        document = json.loads(instance_file.read_text(encoding="utf-8"))
        document["b1"] = 2.0 * document["a1"] + 1.0
        instance_file.write_text(json.dumps(document), encoding="utf-8")
        result = runner.invoke(app, ["verify", "--instance", str(instance_file)])
        assert result.exit_code == EXIT_VERIFICATION_FAILED
        assert "affine range" in result.output

    def test_bad_class(self, workdir: Path) -> None:
        result = runner.invoke(app, ["verify", "--class", "5-C"])
        assert result.exit_code == EXIT_INVALID

    def test_needs_a_target(self, workdir: Path) -> None:
        result = runner.invoke(app, ["verify"])
        assert result.exit_code == EXIT_INVALID


class TestRunAndAggregate:
    """Tests for run and aggregate"""

    def test_spec_file(self, workdir: Path) -> None:
        spec = workdir / "spec.yaml"
        spec.write_text(
            "classes: ['1|C']\n"
            "dimension: 3\n"
            "index_range: [0, 2]\n"
            "solvers: ['nsga2']\n"
            "solver_config: {population_size: 6, budget: 300}\n"
            "checkpoints: [100, 200, 300]\n",
            encoding="utf-8",
        )
        out = workdir / "results"
        result = runner.invoke(app, ["run", "--spec", str(spec), "--out", str(out)])
        assert result.exit_code == 0, result.output
        assert (out / "runs.csv").exists()
        assert (out / "mu_distributions.json").exists()

        summary = runner.invoke(app, ["aggregate", "--in", str(out), "--group", "shape"])
        assert summary.exit_code == 0, summary.output
        lines = summary.output.strip().splitlines()
        assert lines[0] == "group,solver,evaluations,median,q10,q90,count"
        assert len(lines) == 4

    def test_missing_spec(self, workdir: Path) -> None:
        result = runner.invoke(app, ["run"])
        assert result.exit_code == EXIT_INVALID

    def test_aggregate_missing_input(self, workdir: Path) -> None:
        result = runner.invoke(app, ["aggregate", "--in", str(workdir / "absent")])
        assert result.exit_code == EXIT_INVALID


def test_validate(project_root: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.chdir(project_root)
    result = runner.invoke(app, ["validate"])
    assert result.exit_code == 0, result.output
    assert "preset smoke" in result.output
