"""
Command-line entry point.

Usage:
    python app.py measures FILE [--mu 0,1,0,0] [--probe 1.4]
    python app.py gradient FILE [--which mean] [--mu ...] [--probe ...]
    python app.py check FILE [--seed 0] [--samples N] [--fd-step h] [--momenta K]
    python app.py classify FILE_A FILE_B

Every run writes one JSON document, errors included. Exit codes:
0 success, 2 parse error, 3 degenerate state, 4 unrecognized event.
"""

import argparse
import logging
import sys
from typing import List, Optional

from .commands import GRADIENT_CHOICES, cmd_check, cmd_classify, cmd_gradient, cmd_measures
from .documents import ResultDocument
from .ball_file import input_digest
from ..measures.energy import MorphometricCoefficients
from ..oracles.base_check import CheckContext
from ..utils.config import get_settings
from ..utils.exceptions import (
    BallMorphError,
    DegenerateState,
    GeometryError,
    ParseError,
    UnrecognizedEvent,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DEGENERATE = 3
EXIT_UNRECOGNIZED = 4


class _Parser(argparse.ArgumentParser):
    """Argument errors become ParseError so they end up in the document."""

    def error(self, message):
        raise ParseError(message)


def parse_mu(text: str) -> MorphometricCoefficients:
    try:
        return MorphometricCoefficients.from_sequence(text.split(","))
    except ValueError as exc:
        raise ParseError(f"--mu: {exc}")


def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tolerance", type=float, default=settings.tolerance,
                        help="Degeneracy tolerance (default from BALLMORPH_TOLERANCE)")
    common.add_argument("--log-level", default=settings.log_level,
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    common.add_argument("--output", default=None, help="Write the document here instead of stdout")

    parser = _Parser(prog="ballmorph",
                     description="Weighted intrinsic volumes of unions of balls and their gradients")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    measures = sub.add_parser("measures", parents=[common], help="Volume, area, mean and Gaussian curvature")
    measures.add_argument("file")
    measures.add_argument("--mu", help="Energy coefficients mu0,mu1,mu2,mu3")
    measures.add_argument("--probe", type=float, default=None, help="Add this to every radius")

    gradient = sub.add_parser("gradient", parents=[common], help="Per-ball gradients")
    gradient.add_argument("file")
    gradient.add_argument("--which", default="all", choices=GRADIENT_CHOICES)
    gradient.add_argument("--mu", help="Energy coefficients mu0,mu1,mu2,mu3")
    gradient.add_argument("--probe", type=float, default=None)

    check = sub.add_parser("check", parents=[common], help="Run the oracle checks")
    check.add_argument("file")
    check.add_argument("--seed", type=int, default=settings.seed)
    check.add_argument("--samples", type=int, default=settings.mc_samples)
    check.add_argument("--fd-step", type=float, default=settings.fd_step)
    check.add_argument("--momenta", type=int, default=3)
    check.add_argument("--n-jobs", type=int, default=settings.n_jobs)

    classify = sub.add_parser("classify", parents=[common], help="Classify the event between two states")
    classify.add_argument("file_a")
    classify.add_argument("file_b")
    return parser


def _run(args: argparse.Namespace) -> ResultDocument:
    mu = parse_mu(args.mu) if getattr(args, "mu", None) else None
    if args.command == "measures":
        return cmd_measures(args.file, mu, args.probe, args.tolerance)
    if args.command == "gradient":
        return cmd_gradient(args.file, args.which, mu, args.probe, args.tolerance)
    if args.command == "check":
        context = CheckContext(seed=args.seed, samples=args.samples, fd_step=args.fd_step,
                               momenta=args.momenta, tolerance=args.tolerance, n_jobs=args.n_jobs)
        return cmd_check(args.file, context)
    return cmd_classify(args.file_a, args.file_b, args.tolerance)


def _inputs(args: Optional[argparse.Namespace]) -> List[str]:
    if args is None:
        return []
    return [p for p in (getattr(args, name, None) for name in ("file", "file_a", "file_b")) if p]


def _emit(document: ResultDocument, output: Optional[str]) -> None:
    text = document.to_json()
    if output:
        with open(output, "w") as handle:
            handle.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def main(argv: Optional[List[str]] = None) -> int:
    """Run one command and return its exit code."""
    args = None
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(level=getattr(logging, args.log_level),
                            format='%(levelname)s - %(message)s')
        document = _run(args)
        code = EXIT_OK
    except (ParseError, UnrecognizedEvent, DegenerateState, GeometryError) as exc:
        logger.error(f"{type(exc).__name__}: {exc}")
        document = ResultDocument(getattr(args, "command", None),
                                  input_digest={p: input_digest(p) for p in _inputs(args)})
        if isinstance(exc, ParseError):
            document.fail(exc, line_number=exc.line_number)
            code = EXIT_PARSE
        elif isinstance(exc, UnrecognizedEvent):
            document.fail(exc)
            code = EXIT_UNRECOGNIZED
        else:
            details = {}
            if isinstance(exc, DegenerateState):
                details = {"case_label": exc.case_label, "involved": list(exc.involved)}
                if exc.report is not None:
                    document.degeneracies.append(exc.report)
            document.fail(exc, **details)
            code = EXIT_DEGENERATE
    except BallMorphError as exc:
        logger.error(f"{type(exc).__name__}: {exc}")
        document = ResultDocument(getattr(args, "command", None)).fail(exc)
        code = EXIT_DEGENERATE
    _emit(document, getattr(args, "output", None))
    return code
