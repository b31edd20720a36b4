"""End-to-end runs of the full suites through the CLI and the API."""
import json

import pytest

from src.cli.main import main
from src.cli.runner import RunOptions, plan, run_tasks
from src.cli.schema import parse


@pytest.mark.integration
@pytest.mark.slow
class TestFullSuites:
    """Full `all` suite on the bundled problem files."""

    @pytest.mark.parametrize("name", ["a2.json", "a3rel.json", "kronecker.json"])
    def test_all_suite_passes(self, problems_dir, name):
        problem = parse((problems_dir / name).read_text(encoding="utf-8"))
        result = run_tasks(plan(problem, RunOptions(suite="all", samples=4, seed=1)))
        failed = [f"{r.check_id}: {r.diagnosis}" for r in result.reports if not r.passed]
        assert failed == []
        assert result.exit_code == 0

    def test_runs_are_reproducible(self, problems_dir):
        problem = parse((problems_dir / "a2.json").read_text(encoding="utf-8"))
        options = RunOptions(suite="hrr", samples=4, seed=5)
        first = run_tasks(plan(problem, options)).reports
        second = run_tasks(plan(problem, options)).reports
        assert [r.deterministic() for r in first] == [r.deterministic() for r in second]

    def test_cli_random_all_levels(self, capsys):
        argv = [
            "--log-level", "WARNING", "random", "--algebra", "KR", "--samples", "8",
            "--level", "module", "--level", "bimodule", "--level", "complex", "--level", "bimodule-complex",
            "--format", "json",
        ]
        assert main(argv) == 0
        assert len(json.loads(capsys.readouterr().out)["reports"]) == 8


@pytest.mark.integration
def test_api_verify_problem_file(client, problems_dir):
    document = json.loads((problems_dir / "a2.json").read_text(encoding="utf-8"))
    response = client.post("/verify", json={"problem": document})
    assert response.status_code == 200
    data = response.json()
    assert data["exit_code"] == 0
    assert data["passed"] == data["total"]
