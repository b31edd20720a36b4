"""Plan checks for a problem file, run them in batches, and collect the reports."""
import asyncio
from dataclasses import dataclass
from typing import Callable, Optional

from src.algebra.algebra import Algebra
from src.complexes.complex import BimoduleComplex
from src.core.config import settings
from src.core.errors import HRRError, ValidationError
from src.core.logging import logger
from src.cli.schema import CheckSpec, ProblemFile
from src.modules.bimodule import BimoduleHandle
from src.verify.checks import verify
from src.verify.closed_forms import CheckInputs
from src.verify.corollaries import verify_closed_forms, verify_corollaries
from src.verify.corpus import build_inputs, identity_corpus, round_robin_corpus
from src.verify.identities import Flavor, IdentityId, Level, VerificationReport, all_identities
from src.verify.lemmas import verify_alternate_forms, verify_lemma_suite, verify_oracles

SUITES = ("all", "hrr", "lefschetz", "corollaries", "lemmas")


@dataclass
class RunOptions:
    suite: Optional[str] = None
    levels: Optional[list[Level]] = None
    seed: int = settings.seed
    samples: int = settings.samples
    cap: Optional[int] = None


@dataclass
class Task:
    """One unit of work; `run` returns one or more reports."""

    check_id: str
    run: Callable[[], list[VerificationReport]]


@dataclass
class RunResult:
    reports: list[VerificationReport]
    exit_code: int


def _single(identity: IdentityId, a: Algebra, seed: int, check_id: str, cap: Optional[int]) -> Task:
    return Task(check_id, lambda: [verify(identity, build_inputs(identity, a, seed), check_id, cap)])


def _prefixed(name: str, run: Callable[[], list[VerificationReport]]) -> Callable[[], list[VerificationReport]]:
    return lambda: [r.model_copy(update={"check_id": f"{name}/{r.check_id}"}) for r in run()]


def suite_tasks(name: str, a: Algebra, other: Algebra, suite: str, options: RunOptions) -> list[Task]:
    """Tasks of one suite on one algebra; `other` is the second algebra of the tensor lemmas."""
    tasks: list[Task] = []
    flavors = {"hrr": [Flavor.hrr], "lefschetz": [Flavor.lefschetz], "all": list(Flavor)}.get(suite)
    if flavors is not None:
        identities = all_identities(options.levels, flavors)
        for check_id, identity, s in identity_corpus(identities, options.samples, options.seed):
            tasks.append(_single(identity, a, s, f"{name}/{check_id}", options.cap))
    if suite in ("corollaries", "all"):
        tasks.append(Task(f"{name}/corollary", _prefixed(name, lambda: verify_corollaries(a, options.cap))))
        tasks.append(Task(f"{name}/closed", _prefixed(name, lambda: verify_closed_forms(a, options.seed))))
    if suite in ("lemmas", "all"):
        samples, seed = options.samples, options.seed
        tasks.append(Task(f"{name}/lemma", _prefixed(name, lambda: verify_lemma_suite(a, other, samples, seed))))
        tasks.append(Task(f"{name}/alternate", _prefixed(name, lambda: verify_alternate_forms(a, samples, seed))))
        tasks.append(Task(f"{name}/oracle", _prefixed(name, lambda: verify_oracles(a, samples, seed))))
    return tasks


def _operand_algebra(x) -> Algebra:
    if isinstance(x, (BimoduleHandle, BimoduleComplex)):
        return x.right
    return x.algebra


def _check_task(problem: ProblemFile, k: int, spec: CheckSpec, options: RunOptions) -> Task:
    where = f"checks[{k}]"
    try:
        identity = IdentityId.parse(spec.identity)
    except (ValueError, TypeError) as e:
        raise ValidationError(f"{where}.identity", f"not an identity id: {spec.identity!r}") from e
    if spec.m is None:
        raise ValidationError(f"{where}.m", "an identity check needs the operand m")
    m = problem.operand(spec.m, f"{where}.m")
    n = problem.operand(spec.n, f"{where}.n") if spec.n is not None else None
    phi = problem.endomorphism(spec.phi, f"{where}.phi") if spec.phi is not None else None
    psi = problem.endomorphism(spec.psi, f"{where}.psi") if spec.psi is not None else None
    if spec.algebra is not None:
        if spec.algebra not in problem.algebras:
            raise ValidationError(f"{where}.algebra", f"unknown algebra {spec.algebra!r}")
        a = problem.algebras[spec.algebra]
    else:
        a = _operand_algebra(m)
    inputs = CheckInputs(a, m, n, phi, psi)
    check_id = spec.id or f"{identity.key}:{spec.m}" + (f",{spec.n}" if spec.n else "")
    return Task(check_id, lambda: [verify(identity, inputs, check_id, options.cap)])


def plan(problem: ProblemFile, options: RunOptions) -> list[Task]:
    """Tasks for the file's checks, or for `options.suite` on every algebra of the file."""
    names = list(problem.algebras)

    def other(name: str) -> Algebra:
        rest = [x for x in names if x != name]
        return problem.algebras[rest[0] if rest else name]

    if options.suite is not None or not problem.checks:
        suite = options.suite or "all"
        return [t for name in names for t in suite_tasks(name, problem.algebras[name], other(name), suite, options)]

    tasks = []
    for k, spec in enumerate(problem.checks):
        if spec.suite is not None:
            targets = [spec.algebra] if spec.algebra else names
            for name in targets:
                if name not in problem.algebras:
                    raise ValidationError(f"checks[{k}].algebra", f"unknown algebra {name!r}")
                tasks.extend(suite_tasks(name, problem.algebras[name], other(name), spec.suite, options))
        else:
            tasks.append(_check_task(problem, k, spec, options))
    return tasks


def random_plan(problem: ProblemFile, options: RunOptions) -> list[Task]:
    """Exactly `samples` randomized HRR and Lefschetz checks per algebra."""
    identities = all_identities(options.levels or [Level.module], list(Flavor))
    tasks = []
    for name, a in problem.algebras.items():
        for check_id, identity, s in round_robin_corpus(identities, options.samples, options.seed):
            tasks.append(_single(identity, a, s, f"{name}/{check_id}", options.cap))
    return tasks


def _execute(task: Task) -> tuple[list[VerificationReport], Optional[int]]:
    try:
        return task.run(), None
    except HRRError as e:
        logger.error(f"{task.check_id}: {type(e).__name__}: {e}")
        failed = VerificationReport(check_id=task.check_id, passed=False, diagnosis=f"{type(e).__name__}: {e}")
        return [failed], e.exit_code


async def _run_batches(tasks: list[Task], batch_size: int) -> list[tuple[list[VerificationReport], Optional[int]]]:
    results = []
    for i in range(0, len(tasks), batch_size):
        batch = tasks[i : i + batch_size]
        logger.info(f"batch {i // batch_size + 1}/{(len(tasks) + batch_size - 1) // batch_size} ({len(batch)} tasks)")
        results.extend(await asyncio.gather(*[asyncio.to_thread(_execute, t) for t in batch]))
    return results


def run_tasks(tasks: list[Task], batch_size: Optional[int] = None) -> RunResult:
    """Run everything; reports come back sorted by check id.

    The exit code is the most severe outcome: 3 when an engine cap or
    unimodularity error stopped a check, else 2 when a check hit invalid
    input, else 1 for any other error or failed report, else 0.
    """
    batch_size = batch_size or settings.worker_batch_size
    results = asyncio.run(_run_batches(tasks, max(1, batch_size)))
    reports = sorted((r for rs, _ in results for r in rs), key=lambda r: r.check_id)
    codes = [code for _, code in results if code is not None]
    if not all(r.passed for r in reports):
        codes.append(1)
    exit_code = max(codes, default=0)
    logger.info(f"{sum(r.passed for r in reports)}/{len(reports)} checks passed")
    return RunResult(reports, exit_code)


def run(problem: ProblemFile, options: RunOptions) -> RunResult:
    return run_tasks(plan(problem, options))
