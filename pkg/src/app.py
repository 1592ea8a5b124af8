"""
Maxwell Quasi-Trefftz Toolkit - Command Line
=============================================

Scriptable front end for the library. Stdout carries results, logs go
to stderr.

Commands:
- ops dump        canonical-basis matrix of a graded operator
- bases dump      basis of a homogeneous field space
- helmholtz       Helmholtz decomposition of a field read from JSON
- qt dims         dimension formula and comparison tables
- qt build        certified basis of QT_p written to JSON
- qt verify       residual check of a basis file
- qt oracle       brute-force dimension against the formula
- selfcheck       invariant suites of every module

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

import argparse
import logging
import os
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from config import (
    DEFAULT_OUTPUT_FORMAT,
    EXIT_OK,
    EXIT_USAGE_ERROR,
    EXIT_VERIFICATION_FAILED,
    LOG_DATE_FORMAT,
    LOG_FORMAT,
    LOG_LEVEL,
    MIN_QT_DEGREE,
    OUTPUT_FORMATS,
    SELFCHECK_CONFIG,
)
from errors import ConstructionError, QuasiTrefftzError, SignConventionError, UsageError
from bases.spaces import SpaceTag, space_basis
from data import codec
from diffops.matrices import OpKind
from diffops.operators import assemble_matrix
from helmholtz.decomposition import decompose
from qtrefftz.dimensions import (
    dimension_formula,
    pw_comparison_table,
    pw_dimension,
    scalar_dimension_table,
)
from qtrefftz.enumeration import coefficient_rank, enumerate_basis
from qtrefftz.verification import curlcurl_only_dimension, oracle_dimension, verify
from selfcheck.suite_runner import selfcheck as run_selfcheck
from utils.helpers import Helpers

logger = logging.getLogger(__name__)

DUMPABLE_SPACES = [
    SpaceTag.SOLENOIDAL.value,
    SpaceTag.IRROTATIONAL.value,
    SpaceTag.HARMONIC.value,
    SpaceTag.SOLENOIDAL_STAR.value,
    SpaceTag.IRROTATIONAL_STAR.value,
]


@dataclass
class RunConfig:
    """Validated invocation parameters."""
    subcommand: str
    p: Optional[int] = None
    k: Optional[int] = None
    input_path: Optional[str] = None
    eps_path: Optional[str] = None
    basis_path: Optional[str] = None
    output_path: Optional[str] = None
    output_format: str = DEFAULT_OUTPUT_FORMAT
    verify: bool = False
    seed: Optional[int] = None
    jobs: int = 1
    op: Optional[str] = None
    space: Optional[str] = None
    max_k: Optional[int] = None
    max_p: Optional[int] = None
    curlcurl_only: bool = False

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        subcommand = args.command if args.command in ("helmholtz", "selfcheck") else f"{args.command} {args.action}"
        return cls(
            subcommand=subcommand,
            p=getattr(args, "p", None),
            k=getattr(args, "k", None),
            input_path=getattr(args, "input", None),
            eps_path=getattr(args, "eps", None),
            basis_path=getattr(args, "basis", None),
            output_path=getattr(args, "out", None),
            output_format=getattr(args, "format", DEFAULT_OUTPUT_FORMAT),
            verify=getattr(args, "verify", False),
            seed=getattr(args, "seed", None),
            jobs=getattr(args, "jobs", 1),
            op=getattr(args, "op", None),
            space=getattr(args, "space", None),
            max_k=getattr(args, "max_k", None),
            max_p=getattr(args, "max_p", None),
            curlcurl_only=getattr(args, "curlcurl_only", False),
        )

    def validate(self):
        """Reject bad degrees and paths before any computation."""
        if self.subcommand.startswith("qt") and self.p is not None and self.p < MIN_QT_DEGREE:
            raise UsageError("p must exceed 2")
        if self.k is not None and self.k < 0:
            raise UsageError(f"k must be non-negative, got {self.k}")
        if self.jobs < 1:
            raise UsageError(f"jobs must be at least 1, got {self.jobs}")
        for path in (self.input_path, self.eps_path, self.basis_path):
            if path is not None and not os.path.isfile(path):
                raise UsageError(f"input file not found: {path}")
        if self.output_path is not None:
            directory = os.path.dirname(os.path.abspath(self.output_path))
            if not os.path.isdir(directory):
                raise UsageError(f"output directory does not exist: {directory}")


# =============================================================================
# PARSER
# =============================================================================

def _add_format(parser: argparse.ArgumentParser, default: str = DEFAULT_OUTPUT_FORMAT):
    parser.add_argument("--format", choices=OUTPUT_FORMATS, default=default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qt", description="Exact quasi-Trefftz spaces for curl curl - eps")
    parser.add_argument("--verbose", action="store_true", help="debug logging on stderr")
    commands = parser.add_subparsers(dest="command", required=True)

    ops = commands.add_parser("ops", help="graded operator matrices").add_subparsers(dest="action", required=True)
    ops_dump = ops.add_parser("dump")
    ops_dump.add_argument("--op", choices=[kind.value for kind in OpKind], required=True)
    ops_dump.add_argument("--k", type=int, required=True)
    _add_format(ops_dump, "json")

    bases = commands.add_parser("bases", help="bases of field spaces").add_subparsers(dest="action", required=True)
    bases_dump = bases.add_parser("dump")
    bases_dump.add_argument("--space", choices=DUMPABLE_SPACES, required=True)
    bases_dump.add_argument("--k", type=int, required=True)
    _add_format(bases_dump, "json")

    helmholtz = commands.add_parser("helmholtz", help="Helmholtz decomposition of a field")
    helmholtz.add_argument("--in", dest="input", required=True)
    _add_format(helmholtz, "json")

    qt = commands.add_parser("qt", help="quasi-Trefftz spaces").add_subparsers(dest="action", required=True)
    dims = qt.add_parser("dims")
    dims.add_argument("--p", type=int, required=True)
    _add_format(dims)

    build = qt.add_parser("build")
    build.add_argument("--p", type=int, required=True)
    build.add_argument("--eps", required=True)
    build.add_argument("--out", required=True)
    build.add_argument("--verify", action="store_true", help="also compare with the oracle dimension")
    build.add_argument("--jobs", type=int, default=1)

    check = qt.add_parser("verify")
    check.add_argument("--basis", required=True)
    check.add_argument("--eps", required=True)
    _add_format(check)

    oracle = qt.add_parser("oracle")
    oracle.add_argument("--p", type=int, required=True)
    oracle.add_argument("--eps", required=True)
    oracle.add_argument("--curlcurl-only", dest="curlcurl_only", action="store_true")
    _add_format(oracle)

    selfcheck = commands.add_parser("selfcheck", help="run the invariant suites")
    selfcheck.add_argument("--max-k", dest="max_k", type=int, default=SELFCHECK_CONFIG.max_k)
    selfcheck.add_argument("--max-p", dest="max_p", type=int, default=SELFCHECK_CONFIG.max_p)
    selfcheck.add_argument("--seed", type=int, default=SELFCHECK_CONFIG.seed)
    _add_format(selfcheck)
    return parser


# =============================================================================
# COMMANDS
# =============================================================================

def _emit(text: str):
    sys.stdout.write(text + "\n")


def _ops_dump(config: RunConfig) -> int:
    matrix = assemble_matrix(OpKind(config.op), config.k)
    if config.output_format == "json":
        _emit(codec.dumps_json(matrix.to_json()))
    else:
        _emit(f"{config.op}_{config.k}: {matrix.rows}x{matrix.cols}")
        _emit(Helpers.render_table(Helpers.matrix_frame(matrix.entries)))
    return EXIT_OK


def _bases_dump(config: RunConfig) -> int:
    basis = space_basis(SpaceTag(config.space), config.k)
    if config.output_format == "json":
        _emit(codec.dumps_json(codec.encode_space_basis(basis)))
    else:
        _emit(f"{config.space}_{config.k}: dimension {basis.dimension}")
        for i, vec in enumerate(basis.vectors):
            _emit(f"  [{i}] {Helpers.format_vector(vec)}")
    return EXIT_OK


def _helmholtz(config: RunConfig) -> int:
    field = codec.decode_vector(codec.load_json(config.input_path))
    triple = decompose(field)
    ok = triple.reconstruct() == field and triple.certify()
    if config.output_format == "json":
        _emit(codec.dumps_json(codec.encode_triple(triple)))
    else:
        for label, part in (("F", triple.F), ("G", triple.G), ("H", triple.H)):
            _emit(f"{label} = {Helpers.format_vector(part)}")
    return EXIT_OK if ok else EXIT_VERIFICATION_FAILED


def _qt_dims(config: RunConfig) -> int:
    p = config.p
    if config.output_format == "json":
        scalar = scalar_dimension_table(p)
        payload = {
            "p": p,
            "dimension": dimension_formula(p),
            "pw_comparison": [
                {key: int(value) for key, value in row.items()}
                for row in pw_comparison_table(p).to_dict(orient="records")
            ],
            "scalar_comparison": {
                label: {column: int(scalar.loc[label, column]) for column in scalar.columns}
                for label in scalar.index
            },
        }
        _emit(codec.dumps_json(payload))
        return EXIT_OK
    _emit(f"dim QT_{p} = {dimension_formula(p)}")
    _emit("")
    _emit(Helpers.render_table(pw_comparison_table(p)))
    _emit("")
    _emit(Helpers.render_table(scalar_dimension_table(p), index=True))
    return EXIT_OK


def _qt_build(config: RunConfig) -> int:
    eps = codec.decode_jet(codec.load_json(config.eps_path))
    elements = enumerate_basis(eps, config.p, jobs=config.jobs)
    codec.dump_json(codec.encode_basis_file(config.p, elements), config.output_path)
    _emit(f"built {len(elements)} certified elements of QT_{config.p} -> {config.output_path}")
    if config.verify:
        found = oracle_dimension(eps, config.p)
        expected = dimension_formula(config.p)
        _emit(f"oracle={found} formula={expected} {Helpers.match_label(found, expected)}")
        if found != expected:
            return EXIT_VERIFICATION_FAILED
    return EXIT_OK


def _qt_verify(config: RunConfig) -> int:
    p, entries = codec.decode_basis_file(codec.load_json(config.basis_path))
    if p < MIN_QT_DEGREE:
        raise UsageError("p must exceed 2")
    eps = codec.decode_jet(codec.load_json(config.eps_path))
    failures: List[str] = []
    for name, poly, _ in entries:
        flags = verify(poly, eps, p)
        if not flags.passed:
            failures.append(f"{name}: curlcurl={flags.curlcurl_residual_ok} divergence={flags.divergence_residual_ok}")
    found_rank = coefficient_rank([poly for _, poly, _ in entries], p)
    expected = dimension_formula(p)
    ok = not failures and found_rank == expected
    if config.output_format == "json":
        _emit(codec.dumps_json({
            "p": p, "elements": len(entries), "rank": found_rank,
            "expected": expected, "failures": failures, "passed": ok,
        }))
    else:
        for line in failures:
            _emit(f"FAIL {line}")
        _emit(f"verified {len(entries) - len(failures)}/{len(entries)} elements, "
              f"rank={found_rank} formula={expected} {Helpers.pass_fail(ok)}")
    return EXIT_OK if ok else EXIT_VERIFICATION_FAILED


def _qt_oracle(config: RunConfig) -> int:
    eps = codec.decode_jet(codec.load_json(config.eps_path))
    found = oracle_dimension(eps, config.p)
    expected = dimension_formula(config.p)
    weak = curlcurl_only_dimension(eps, config.p) if config.curlcurl_only else None
    if config.output_format == "json":
        payload = {"p": config.p, "oracle": found, "formula": expected, "match": found == expected}
        if weak is not None:
            payload.update({"curlcurl_only": weak, "pw": pw_dimension(config.p)})
        _emit(codec.dumps_json(payload))
    else:
        _emit(f"oracle={found} formula={expected} {Helpers.match_label(found, expected)}")
        if weak is not None:
            _emit(f"curlcurl_only={weak} pw={pw_dimension(config.p)}")
    return EXIT_OK if found == expected else EXIT_VERIFICATION_FAILED


def _selfcheck(config: RunConfig) -> int:
    report = run_selfcheck(config.max_k, config.max_p, config.seed)
    if config.output_format == "json":
        _emit(codec.dumps_json(report.to_json()))
    else:
        _emit(Helpers.render_table(report.to_frame()))
        for suite in report.suites:
            for failure in suite.failures:
                _emit(f"  {suite.name}: {failure}")
    return EXIT_OK if report.all_passed else EXIT_VERIFICATION_FAILED


COMMANDS = {
    "ops dump": _ops_dump,
    "bases dump": _bases_dump,
    "helmholtz": _helmholtz,
    "qt dims": _qt_dims,
    "qt build": _qt_build,
    "qt verify": _qt_verify,
    "qt oracle": _qt_oracle,
    "selfcheck": _selfcheck,
}


def configure_logging(verbose: bool = False):
    logging.basicConfig(
        level=logging.DEBUG if verbose else LOG_LEVEL,
        format=LOG_FORMAT,
        datefmt=LOG_DATE_FORMAT,
        stream=sys.stderr,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse, validate and dispatch; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE_ERROR

    configure_logging(args.verbose)
    try:
        config = RunConfig.from_args(args)
        config.validate()
        return COMMANDS[config.subcommand](config)
    except (ConstructionError, SignConventionError) as e:
        logger.error(f"verification failed: {e}")
        sys.stderr.write(f"error: {e}\n")
        return EXIT_VERIFICATION_FAILED
    except (QuasiTrefftzError, OSError) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
