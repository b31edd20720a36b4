#!/usr/bin/env python3
"""Command-line entry point: verify, random and resolve.

Usage:
    python -m src.cli.main verify data/problems/a2.json --suite all --format json
    python -m src.cli.main random --algebra data/problems/a3rel.json --samples 50 --seed 7
    python -m src.cli.main resolve data/problems/a3rel.json --algebra A3R
"""
import argparse
import json
import sys
from pathlib import Path
from typing import Optional

import pandas as pd

from src.algebra.bundled import BUNDLED, bundled_algebra
from src.cli.runner import SUITES, RunOptions, RunResult, plan, random_plan, run_tasks
from src.cli.schema import ProblemFile, parse
from src.core.config import settings
from src.core.errors import HRRError, ValidationError
from src.core.logging import configure_logging, logger
from src.homology.resolution import (
    describe_resolution,
    global_dimension,
    minimal_projective_resolution,
    multiplicity_table,
    resolution_of_regular_bimodule,
    resolution_of_simple,
)
from src.linalg.field import FieldSpec
from src.verify.identities import Level


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quiver-hrr", description="Verify HRR and Lefschetz identities")
    parser.add_argument("--log-level", default=settings.log_level)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--level", choices=[lv.value for lv in Level], action="append",
                       help="restrict randomized identities to a level (repeatable)")
        p.add_argument("--seed", type=int, default=settings.seed)
        p.add_argument("--samples", type=int, default=settings.samples)
        p.add_argument("--max-resolution-length", type=int, default=None)
        p.add_argument("--format", choices=["text", "json"], default="text")
        p.add_argument("--field", default=None, help="override the file's field: Q or Fp:<p>")

    verify = sub.add_parser("verify", help="run the checks of a problem file")
    verify.add_argument("problem")
    verify.add_argument("--suite", choices=SUITES, default=None)
    common(verify)

    rand = sub.add_parser("random", help="seeded randomized HRR and Lefschetz checks")
    rand.add_argument("--algebra", required=True, help="problem file, or a bundled algebra name")
    common(rand)

    resolve = sub.add_parser("resolve", help="print minimal projective resolutions")
    resolve.add_argument("problem")
    resolve.add_argument("--algebra", default=None)
    resolve.add_argument("--module", default=None)
    resolve.add_argument("--max-resolution-length", type=int, default=None)
    resolve.add_argument("--field", default=None)
    return parser


def _field(text: Optional[str]) -> Optional[FieldSpec]:
    if not text:
        return None
    try:
        return FieldSpec.parse(text)
    except ValueError as e:
        raise ValidationError("--field", str(e)) from e


def _bundled_problem(name: str, fld: Optional[FieldSpec]) -> ProblemFile:
    """A problem holding one bundled algebra and nothing else."""
    fld = fld or FieldSpec.parse(settings.field)
    return ProblemFile(fld, {name: bundled_algebra(name, fld)})


def load_problem(path: str, fld: Optional[FieldSpec] = None) -> ProblemFile:
    file = Path(path)
    if not file.exists():
        if path in BUNDLED:
            return _bundled_problem(path, fld)
        raise ValidationError(path, "no such problem file")
    return parse(file.read_text(encoding="utf-8"), fld)


def render_text(result: RunResult) -> str:
    frame = pd.DataFrame(
        [
            {
                "check": r.check_id,
                "lhs": json.dumps(r.lhs) if r.lhs is not None else "-",
                "rhs": json.dumps(r.rhs) if r.rhs is not None else "-",
                "pass": "yes" if r.passed else "NO",
            }
            for r in result.reports
        ],
        columns=["check", "lhs", "rhs", "pass"],
    )
    lines = [frame.to_string(index=False)] if len(frame) else ["no checks"]
    for r in result.reports:
        if r.diagnosis:
            lines.append(f"{r.check_id}: {r.diagnosis}")
    passed = sum(r.passed for r in result.reports)
    lines.append(f"{passed}/{len(result.reports)} passed, exit code {result.exit_code}")
    return "\n".join(lines)


def render_json(result: RunResult) -> str:
    payload = {"exit_code": result.exit_code, "reports": [r.model_dump(mode="json") for r in result.reports]}
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)


def _options(args, suite: Optional[str] = None) -> RunOptions:
    levels = [Level(v) for v in args.level] if args.level else None
    return RunOptions(suite, levels, args.seed, args.samples, args.max_resolution_length)


def _resolve(args) -> int:
    problem = load_problem(args.problem, _field(args.field))
    cap = args.max_resolution_length
    if args.module:
        if args.module not in problem.modules:
            raise ValidationError("--module", f"unknown module {args.module!r}")
        res = minimal_projective_resolution(problem.modules[args.module], cap)
        print(describe_resolution(res))
        print(multiplicity_table(res).to_string())
        return 0
    names = [args.algebra] if args.algebra else list(problem.algebras)
    for name in names:
        if name not in problem.algebras:
            raise ValidationError("--algebra", f"unknown algebra {name!r}")
        a = problem.algebras[name]
        print(f"== {name}: {a.n} vertices, dimension {a.dim}")
        for i in range(a.n):
            print(f"-- simple S_{i + 1}")
            print(describe_resolution(resolution_of_simple(a, i, cap)))
        print("-- A over A^e")
        print(describe_resolution(resolution_of_regular_bimodule(a, cap)))
        print(f"global dimension {global_dimension(a, cap)}")
    return 0


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)
    try:
        if args.command == "resolve":
            return _resolve(args)
        fld = _field(args.field)
        if args.command == "verify":
            problem = load_problem(args.problem, fld)
            tasks = plan(problem, _options(args, args.suite))
        else:
            problem = load_problem(args.algebra, fld)
            tasks = random_plan(problem, _options(args))
    except ValidationError as e:
        logger.error(f"input error at {e.location}: {e.message}")
        print(f"input error at {e.location}: {e.message}", file=sys.stderr)
        return e.exit_code
    except HRRError as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return e.exit_code

    result = run_tasks(tasks)
    print(render_json(result) if args.format == "json" else render_text(result))
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
