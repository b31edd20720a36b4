"""Verification API

This FastAPI application provides endpoints for:
- Health check (`/healthz`)
- Running the checks of a problem document (`/verify`)
- Cartan, Coxeter and homological invariants of its algebras (`/algebras/invariants`)

Request bodies use the same schema as the problem files read by the CLI.
"""
from typing import Literal, Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel

from src.algebra.cartan import ringel_data
from src.cli.runner import RunOptions, plan, run_tasks
from src.cli.schema import ProblemSchema, build_problem
from src.core.config import settings
from src.core.errors import HRRError, ValidationError
from src.core.logging import logger
from src.homology.resolution import global_dimension
from src.linalg.field import FieldSpec
from src.verify.identities import Level, VerificationReport

app = FastAPI(title="Quiver HRR API", version="0.1.0")


class Health(BaseModel):
    status: str


class VerifyRequest(BaseModel):
    problem: ProblemSchema
    suite: Optional[Literal["all", "hrr", "lefschetz", "corollaries", "lemmas"]] = None
    levels: Optional[list[Level]] = None
    seed: int = settings.seed
    samples: int = settings.samples
    max_resolution_length: Optional[int] = None
    field: Optional[str] = None


class VerifyResponse(BaseModel):
    exit_code: int
    passed: int
    total: int
    reports: list[VerificationReport]


class AlgebraInvariants(BaseModel):
    name: str
    vertices: int
    dimension: int
    cartan: list[list[int]]
    cartan_inverse: list[list[int]]
    coxeter: list[list[int]]
    coxeter_trace: int
    global_dimension: Optional[int] = None
    error: Optional[str] = None


def _unprocessable(e: ValidationError) -> HTTPException:
    return HTTPException(status_code=422, detail={"location": e.location, "message": e.message})


def _build(schema: ProblemSchema, field: Optional[str] = None):
    try:
        override = FieldSpec.parse(field) if field else None
    except ValidationError as e:
        raise _unprocessable(e) from e
    except ValueError as e:
        raise _unprocessable(ValidationError("field", str(e))) from e
    try:
        return build_problem(schema, override)
    except ValidationError as e:
        raise _unprocessable(e) from e
    except HRRError as e:
        raise HTTPException(status_code=422, detail={"location": "problem", "message": str(e)}) from e


@app.get("/healthz", response_model=Health)
def healthcheck() -> Health:
    return Health(status="ok")


@app.post("/verify", response_model=VerifyResponse)
def verify_problem(request: VerifyRequest):
    """Run the document's checks, or `suite` on each of its algebras."""
    problem = _build(request.problem, request.field)
    options = RunOptions(
        request.suite, request.levels, request.seed, request.samples, request.max_resolution_length
    )
    try:
        tasks = plan(problem, options)
    except ValidationError as e:
        raise _unprocessable(e) from e
    result = run_tasks(tasks)
    logger.info(f"/verify ran {len(result.reports)} checks, exit code {result.exit_code}")
    return VerifyResponse(
        exit_code=result.exit_code,
        passed=sum(r.passed for r in result.reports),
        total=len(result.reports),
        reports=result.reports,
    )


@app.post("/algebras/invariants", response_model=list[AlgebraInvariants])
def algebra_invariants(problem: ProblemSchema, max_resolution_length: Optional[int] = None):
    """Invariants of every algebra in the document."""
    built = _build(problem)
    out = []
    for name, a in built.algebras.items():
        try:
            data = ringel_data(a)
        except HRRError as e:
            raise HTTPException(status_code=422, detail={"location": f"algebras.{name}", "message": str(e)}) from e
        row = AlgebraInvariants(
            name=name,
            vertices=a.n,
            dimension=a.dim,
            cartan=data.cartan.to_ints(),
            cartan_inverse=data.cartan_inverse.to_ints(),
            coxeter=data.coxeter.to_ints(),
            coxeter_trace=data.coxeter_trace(),
        )
        try:
            row.global_dimension = global_dimension(a, max_resolution_length)
        except HRRError as e:
            row.error = str(e)
        out.append(row)
    return out
