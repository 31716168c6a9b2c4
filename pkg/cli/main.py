"""
Argument parsing and dispatch for the symprod command line.

Exit status: 0 on success, 1 on invalid input, 2 when a pair of
partitions could not be separated.
"""

import argparse
import sys
from typing import Any, Dict, List, Optional, TextIO, Tuple

from pydantic import BaseModel

from api import __version__
from api.models.certificates import (
    CertificateModel,
    ClassificationReportModel,
    DistinguishResponse,
)
from api.models.common import OutputEnvelope
from api.models.divisors import (
    ConstituentModel,
    QuotDegreeResponse,
    SlopeResponse,
    ThresholdsResponse,
)
from api.models.invariants import (
    BettiResponse,
    BettiRow,
    PartitionListResponse,
    PoincareResponse,
)
from cli.rendering import render_csv, render_json, render_table
from services.distinguisher import classify_hilbert_schemes, distinguish
from services.ind_divisors import (
    DivisorClassIndex,
    constituent,
    ind_variety_properties,
    slope,
)
from services.partitions import Partition, enumerate_partitions, partition_count
from services.poincare import (
    PoincarePolynomial,
    macdonald_betti,
    multi_sym_poincare,
    multiproj_poincare,
    sym_poincare,
)
from utils.exceptions import (
    CertificateError,
    IndistinguishableError,
    InvalidInputError,
    OutOfRegimeError,
)
from utils.logging import get_logger, setup_logging
from utils.settings import get_settings

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_GAP = 2

# stands in for "--" between the two partitions of `distinguish`
_SEPARATOR = "::"

# (result model, flat rows, extra lines for the human table)
Outcome = Tuple[BaseModel, List[Dict[str, Any]], List[str]]


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors as InvalidInputError."""

    def error(self, message):
        raise InvalidInputError(message)


def _output_flags(default) -> argparse.ArgumentParser:
    parent = _Parser(add_help=False)
    group = parent.add_mutually_exclusive_group()
    group.add_argument("--json", dest="fmt", action="store_const", const="json",
                       default=default, help="canonical JSON tree")
    group.add_argument("--csv", dest="fmt", action="store_const", const="csv",
                       default=default, help="flat CSV table")
    return parent


def build_parser() -> argparse.ArgumentParser:
    # leaf flags are suppressed when absent so they never overwrite a top-level choice
    flags = _output_flags(argparse.SUPPRESS)
    parser = _Parser(
        prog="symprod",
        description="Invariants of symmetric products of curves.",
        parents=[_output_flags("table")],
    )
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("partitions", parents=[flags], help="list partitions of n and p(n)")
    p.add_argument("n", type=int)

    p = sub.add_parser("betti", parents=[flags], help="Macdonald Betti numbers of Sym^n(C)")
    p.add_argument("n", type=int)
    p.add_argument("g", type=int)
    p.add_argument("r", type=int, nargs="?")

    p = sub.add_parser("poincare", help="Poincare polynomial coefficients")
    spaces = p.add_subparsers(dest="space", parser_class=_Parser)
    spaces.required = True
    q = spaces.add_parser("sym", parents=[flags])
    q.add_argument("n", type=int)
    q.add_argument("g", type=int)
    q = spaces.add_parser("multisym", parents=[flags])
    q.add_argument("values", type=int, nargs="+", metavar="PART... G")
    q = spaces.add_parser("multiproj", parents=[flags])
    q.add_argument("dims", type=int, nargs="+")

    p = sub.add_parser("distinguish", parents=[flags], help="certificate for one pair")
    p.add_argument("tokens", nargs="+", metavar="PARTS_A... -- PARTS_B...")
    p.add_argument("--genus", type=int, required=True)

    p = sub.add_parser("classify", parents=[flags], help="classify Hilbert schemes of partitions of n")
    p.add_argument("n", type=int)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--workers", type=int, default=None)

    p = sub.add_parser("divisor", help="higher rank divisor bookkeeping")
    ops = p.add_subparsers(dest="op", parser_class=_Parser)
    ops.required = True
    q = ops.add_parser("slope", parents=[flags])
    q.add_argument("r", type=int)
    q.add_argument("n", type=int)
    q = ops.add_parser("thresholds", parents=[flags])
    q.add_argument("r", type=int)
    q.add_argument("n", type=int)
    q = ops.add_parser("quotdeg", parents=[flags])
    q.add_argument("r", type=int)
    q.add_argument("n", type=int)
    q.add_argument("deg_d", type=int)

    return parser


def _partition_arg(values: List[int], label: str) -> Partition:
    if not values:
        raise InvalidInputError(f"{label} has no parts")
    partition = Partition.canonical(values)
    if list(partition.parts) != list(values):
        logger.warning(f"{label} reordered to canonical form {partition}")
    return partition


def _split_tokens(tokens: List[str]) -> Tuple[List[int], List[int]]:
    if tokens.count(_SEPARATOR) != 1:
        raise InvalidInputError("expected exactly one '--' between the two partitions")
    cut = tokens.index(_SEPARATOR)
    try:
        left = [int(t) for t in tokens[:cut]]
        right = [int(t) for t in tokens[cut + 1:]]
    except ValueError as e:
        raise InvalidInputError(f"malformed integer: {e}")
    return left, right


def _poincare_rows(poly: PoincarePolynomial) -> List[Dict[str, Any]]:
    return [{"degree": k, "coefficient": c} for k, c in enumerate(poly.coeffs)]


def _cmd_partitions(args) -> Outcome:
    partitions = enumerate_partitions(args.n)
    result = PartitionListResponse.from_domain(args.n, partition_count(args.n), partitions)
    rows = [{"index": i, "parts": list(p.parts), "length": p.length} for i, p in enumerate(partitions)]
    return result, rows, [f"p({args.n}) = {result.count}"]


def _cmd_betti(args) -> Outcome:
    poly = sym_poincare(args.n, args.g)
    degrees = [args.r] if args.r is not None else list(range(poly.degree + 1))
    values = [BettiRow(r=r, betti=macdonald_betti(args.n, args.g, r)) for r in degrees]
    result = BettiResponse(n=args.n, genus=args.g, betti=values)
    return result, [row.model_dump() for row in values], []


def _cmd_poincare(args) -> Outcome:
    if args.space == "sym":
        poly = sym_poincare(args.n, args.g)
        result = PoincareResponse.from_domain("sym", [args.n], poly, args.g)
    elif args.space == "multisym":
        if len(args.values) < 2:
            raise InvalidInputError("multisym needs at least one part followed by the genus")
        *parts, genus = args.values
        partition = _partition_arg(parts, "partition")
        poly = multi_sym_poincare(partition, genus)
        result = PoincareResponse.from_domain("multisym", list(partition.parts), poly, genus)
    else:
        dims = sorted(args.dims, reverse=True)
        poly = multiproj_poincare(dims)
        result = PoincareResponse.from_domain("multiproj", dims, poly)
    return result, _poincare_rows(poly), [f"P(x) = {poly}"]


def _cmd_distinguish(args) -> Outcome:
    left, right = _split_tokens(args.tokens)
    a = _partition_arg(left, "first partition")
    b = _partition_arg(right, "second partition")
    cert = distinguish(a, b, args.genus)
    result = DistinguishResponse(
        a=list(a.parts), b=list(b.parts), genus=args.genus,
        certificate=CertificateModel.from_domain(cert),
    )
    row = {"kind": cert.kind.value, "route": cert.route.value, **cert.payload}
    return result, [row], []


def _cmd_classify(args) -> Outcome:
    report = classify_hilbert_schemes(args.n, args.genus, workers=args.workers)
    result = ClassificationReportModel.from_domain(report)
    rows = [
        {
            "index_a": c.index_a,
            "index_b": c.index_b,
            "a": c.a,
            "b": c.b,
            "kind": c.kind,
            "route": c.route,
            "payload": c.payload,
        }
        for c in result.certificates
    ]
    notes = [
        f"classes: {result.count} of p({result.n}) = {result.upper_bound}",
        f"routing: {result.routing}",
        f"digest: {result.digest}",
    ]
    return result, rows, notes


def _cmd_divisor(args) -> Outcome:
    if args.op == "slope":
        s = slope(DivisorClassIndex(args.r, args.n))
        result = SlopeResponse.from_domain(args.r, args.n, s)
    elif args.op == "thresholds":
        result = ThresholdsResponse.from_domain(ind_variety_properties(args.r, args.n))
    else:
        c = ConstituentModel.from_domain(constituent(args.r, args.n, args.deg_d))
        result = QuotDegreeResponse(rank=args.r, degree=args.n, deg_d=args.deg_d, constituent=c)
    row = {}
    for key, value in result.model_dump().items():
        if isinstance(value, dict):
            row.update({f"{key}_{inner}": v for inner, v in value.items()})
        else:
            row[key] = value
    return result, [row], []


_COMMANDS = {
    "partitions": _cmd_partitions,
    "betti": _cmd_betti,
    "poincare": _cmd_poincare,
    "distinguish": _cmd_distinguish,
    "classify": _cmd_classify,
    "divisor": _cmd_divisor,
}


def _command_name(args) -> str:
    if args.command == "poincare":
        return f"poincare {args.space}"
    if args.command == "divisor":
        return f"divisor {args.op}"
    return args.command


def _input_echo(args) -> Dict[str, Any]:
    skip = {"command", "space", "op", "fmt", "tokens", "workers"}
    echo = {key: value for key, value in vars(args).items() if key not in skip}
    if args.command == "distinguish":
        left, right = _split_tokens(args.tokens)
        echo["a"], echo["b"] = left, right
    return echo


def _prepare(argv: List[str]) -> List[str]:
    argv = list(argv)
    if "distinguish" in argv and "--" in argv[argv.index("distinguish"):]:
        argv[argv.index("--", argv.index("distinguish"))] = _SEPARATOR
    return argv


def run(argv: List[str], stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    """
    Execute one subcommand.

    Args:
        argv: Arguments without the program name
        stdout: Output stream (defaults to sys.stdout)
        stderr: Diagnostic stream (defaults to sys.stderr)

    Returns:
        Exit status
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    settings = get_settings()
    setup_logging(settings.log_level, settings.log_file)

    try:
        args = build_parser().parse_args(_prepare(argv))
        result, rows, notes = _COMMANDS[args.command](args)
        envelope = OutputEnvelope(
            command=_command_name(args),
            input=_input_echo(args),
            result=result.model_dump(mode="json"),
            version=__version__,
        )
    except (InvalidInputError, OutOfRegimeError) as e:
        print(f"error: {e}", file=stderr)
        return EXIT_INVALID
    except (IndistinguishableError, CertificateError) as e:
        print(f"gap: {e}", file=stderr)
        return EXIT_GAP
    except SystemExit as e:
        # --help
        return e.code if isinstance(e.code, int) else EXIT_OK

    if args.fmt == "json":
        stdout.write(render_json(envelope))
    elif args.fmt == "csv":
        stdout.write(render_csv(rows))
    else:
        stdout.write(render_table(envelope, rows, notes))
    return EXIT_OK
