#!/usr/bin/env python3
"""Run the pytest suites: unit, integration, or both."""
import argparse
import subprocess
import sys

UNIT_DIRS = [
    "tests/test_linalg", "tests/test_algebra", "tests/test_modules", "tests/test_complexes",
    "tests/test_homology", "tests/test_verify", "tests/test_cli", "tests/test_api",
]
TARGETS = {
    "unit": UNIT_DIRS,
    "integration": ["tests/test_integration"],
    "all": ["tests/"],
}


def build_command(args: argparse.Namespace) -> list[str]:
    """pytest invocation for the parsed options."""
    cmd = [sys.executable, "-m", "pytest", *TARGETS[args.type]]
    deselect = []
    if args.type == "unit":
        deselect.append("not integration")
    if args.fast:
        deselect.append("not slow")
    if deselect:
        cmd += ["-m", " and ".join(deselect)]
    if args.coverage:
        cmd += ["--cov=src", "--cov-report=term-missing"]
    if args.verbose:
        cmd.append("-v")
    if args.seed is not None:
        cmd.append(f"--hypothesis-seed={args.seed}")
    return cmd


def parse_args(argv=None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(description="Run the quiver HRR test suites")
    parser.add_argument("--type", choices=sorted(TARGETS), default="all", help="which suite to run")
    parser.add_argument("--fast", action="store_true", help="deselect tests marked slow")
    parser.add_argument("--coverage", action="store_true", help="report coverage of src/")
    parser.add_argument("--seed", type=int, default=None, help="fix the hypothesis seed")
    parser.add_argument("--verbose", "-v", action="store_true")
    return parser.parse_args(argv)


def main(argv=None) -> int:
    cmd = build_command(parse_args(argv))
    print("$", " ".join(cmd))
    code = subprocess.call(cmd)
    print("tests passed" if code == 0 else f"pytest exited with {code}")
    return code


if __name__ == "__main__":
    sys.exit(main())
