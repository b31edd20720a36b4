"""Tests for check planning and exit-code aggregation."""
from src.cli.runner import RunOptions, Task, plan, random_plan, run_tasks
from src.cli.schema import ProblemFile
from src.core.errors import CapExceeded, InvariantViolation, ValidationError
from src.linalg.field import FieldSpec
from src.verify.identities import VerificationReport


def _report(check_id: str, passed: bool) -> Task:
    return Task(check_id, lambda: [VerificationReport(check_id=check_id, passed=passed)])


def _raising(check_id: str, error: Exception) -> Task:
    def run():
        raise error

    return Task(check_id, run)


def test_exit_codes():
    assert run_tasks([_report("a", True)]).exit_code == 0
    assert run_tasks([_report("a", True), _report("b", False)]).exit_code == 1
    assert run_tasks([_raising("a", InvariantViolation("bad")), _report("b", True)]).exit_code == 1
    result = run_tasks([_report("b", False), _raising("a", CapExceeded(2))], batch_size=1)
    assert result.exit_code == 3
    assert [r.check_id for r in result.reports] == ["a", "b"]
    assert "CapExceeded" in result.reports[0].diagnosis


def test_no_checks_runs_everything(a2):
    problem = ProblemFile(FieldSpec.rationals(), {"A2": a2})
    ids = [t.check_id for t in plan(problem, RunOptions(samples=4))]
    assert "A2/corollary" in ids
    assert "A2/oracle" in ids
    assert any(i.startswith("A2/bimodule-complex.") for i in ids)


def test_suite_prefixes_reports(a2):
    problem = ProblemFile(FieldSpec.rationals(), {"A2": a2})
    result = run_tasks(plan(problem, RunOptions(suite="corollaries")))
    assert result.exit_code == 0
    assert all(r.check_id.startswith("A2/") for r in result.reports)


def test_random_plan_size(a2, kronecker):
    problem = ProblemFile(FieldSpec.rationals(), {"A2": a2, "KR": kronecker})
    assert len(random_plan(problem, RunOptions(samples=5))) == 10


def test_invalid_input_inside_a_check_exits_2():
    result = run_tasks([_report("a", False), _raising("b", ValidationError("checks[0].n", "unknown operand"))])
    assert result.exit_code == 2
    result = run_tasks([_raising("a", CapExceeded(2)), _raising("b", ValidationError("field", "bad"))])
    assert result.exit_code == 3
