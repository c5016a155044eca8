"""Command-line surface: one subcommand per operation, JSON on stdout, errors on stderr with exit code 2."""
import argparse
import json
import logging
import sys
from typing import Callable, Sequence

from pydantic import ValidationError

from app.errors.business_exception import BusinessException, ErrorCodes
from app.schema.search_dto import SearchConfig
from app.service.cyclotomic_service import cyclotomic_service
from app.service.finite_field_service import finite_field_service
from app.service.orbit_service import orbit_service
from app.service.radical_service import radical_service
from app.service.search_service import search_service

_log = logging.getLogger(__name__)

EXIT_ERROR = 2


def _emit(line: str):
    print(line, flush=True)


# region commands

def _search(args: argparse.Namespace):
    options = dict(x_max=args.x_max, y_max=args.y_max, exp_min=args.exp_min, exp_max=args.exp_max,
                   allow_mixed_exponents=args.mixed, top_k=args.top, checkpoint_path=args.checkpoint)
    if args.workers is not None:
        options["worker_count"] = args.workers
    if args.pool_size is not None:
        options["pool_size"] = args.pool_size
    report = search_service.run(SearchConfig(**options), shard_limit=args.shard_limit)
    if not report.completed:
        _log.info(f"search interrupted at {report.shards_completed}/{report.shards_total} shards")
    for result in report.results:
        _emit(result.model_dump_json())


def _check_independence(args: argparse.Namespace):
    elements = [radical_service.parse_radical(token) for token in args.radicals]
    _emit(radical_service.independence_certificate(elements).model_dump_json())
    if args.relation_bound:
        relation = radical_service.numeric_relation_search(elements, args.relation_bound, args.precision_bits)
        _emit(json.dumps({"relation": relation}))


def _degree(args: argparse.Namespace):
    elements = [radical_service.parse_radical(token) for token in args.radicals]
    if args.report:
        _emit(radical_service.degree_report(elements).model_dump_json())
    else:
        _emit(str(radical_service.lattice_degree(elements)))


def _ff_construct(args: argparse.Namespace):
    _emit(finite_field_service.tower_report(args.p, args.u, args.v, verify=args.verify).model_dump_json())


def _orbit(args: argparse.Namespace):
    if args.target is None:
        _emit(str(orbit_service.orbit_closure(args.n, args.d).size))
    else:
        path = orbit_service.constructive_path(args.n, args.d, args.target)
        _emit(" ".join(step.value for step in path.word))


def _vandermonde_check(args: argparse.Namespace):
    sizes = range(1, args.n + 1) if args.all else (args.n,)
    for n in sizes:
        _emit(cyclotomic_service.vandermonde_report(n).model_dump_json())


def _mann_scan(args: argparse.Namespace):
    for s in cyclotomic_service.enumerate_vanishing_sums(args.n, args.coeff_bound, args.max_terms):
        _emit(cyclotomic_service.mann_report(s).model_dump_json())


def _sierpinski(args: argparse.Namespace):
    _emit(str(radical_service.sierpinski_degree(args.n)))


def _guard(args: argparse.Namespace):
    _emit(search_service.exactness_guard(args.x, args.m, args.y, args.n, args.z, args.r).model_dump_json())

# endregion commands


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="radical-independence",
                                     description="Exact linear independence of radicals and related checks.")
    parser.add_argument("--log-level", default=None, help="Override LOG_LEVEL for this run")
    commands = parser.add_subparsers(dest="command", required=True)

    search = commands.add_parser("search", help="Certified near-miss search for x^(1/m) + y^(1/n) = z^(1/r)")
    search.add_argument("--x-max", type=int, required=True)
    search.add_argument("--y-max", type=int, required=True)
    search.add_argument("--exp-min", type=int, default=2)
    search.add_argument("--exp-max", type=int, default=10)
    search.add_argument("--mixed", action="store_true", help="Let m, n, r differ")
    search.add_argument("--top", type=int, default=10)
    search.add_argument("--checkpoint", default=None, help="Checkpoint JSON path")
    search.add_argument("--workers", type=int, default=None)
    search.add_argument("--pool-size", type=int, default=None)
    search.add_argument("--shard-limit", type=int, default=None, help="Stop after this many shards")
    search.set_defaults(handler=_search)

    check = commands.add_parser("check-independence", help="Pairwise certificate for base^(num/den) tokens")
    check.add_argument("radicals", nargs="+")
    check.add_argument("--relation-bound", type=int, default=0, help="Also search integer relations up to this bound")
    check.add_argument("--precision-bits", type=int, default=256)
    check.set_defaults(handler=_check_independence)

    degree = commands.add_parser("degree", help="Degree of Q(x_1, ..., x_r) over Q")
    degree.add_argument("radicals", nargs="+")
    degree.add_argument("--report", action="store_true", help="Print the full degree report")
    degree.set_defaults(handler=_degree)

    ff = commands.add_parser("ff-construct", help="Independent set of GF(p^v) over GF(p^u)")
    ff.add_argument("--p", type=int, required=True)
    ff.add_argument("--u", type=int, required=True)
    ff.add_argument("--v", type=int, required=True)
    ff.add_argument("--verify", action="store_true")
    ff.set_defaults(handler=_ff_construct)

    orbit = commands.add_parser("orbit", help="Orbit of 0 under x -> 1 + d*x and x -> -x in Z_n")
    orbit.add_argument("--n", type=int, required=True)
    orbit.add_argument("--d", type=int, required=True)
    orbit.add_argument("--target", type=int, default=None)
    orbit.set_defaults(handler=_orbit)

    vandermonde = commands.add_parser("vandermonde-check", help="Exact DFT unitarity and |det V|^2 = n^n")
    vandermonde.add_argument("--n", type=int, required=True)
    vandermonde.add_argument("--all", action="store_true", help="Check every size from 1 to n")
    vandermonde.set_defaults(handler=_vandermonde_check)

    mann = commands.add_parser("mann-scan", help="Minimal vanishing sums of n-th roots of unity")
    mann.add_argument("--n", type=int, required=True)
    mann.add_argument("--coeff-bound", type=int, default=1)
    mann.add_argument("--max-terms", type=int, required=True)
    mann.set_defaults(handler=_mann_scan)

    sierpinski = commands.add_parser("sierpinski", help="Degree of Q(2^(1/2), ..., n^(1/n))")
    sierpinski.add_argument("--n", type=int, required=True)
    sierpinski.set_defaults(handler=_sierpinski)

    guard = commands.add_parser("guard", help="Certify x^(1/m) + y^(1/n) - z^(1/r) != 0")
    for name in ("x", "m", "y", "n", "z", "r"):
        guard.add_argument(name, type=int)
    guard.set_defaults(handler=_guard)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.log_level:
        logging.getLogger().setLevel(args.log_level.upper())
    handler: Callable[[argparse.Namespace], None] = args.handler
    try:
        handler(args)
    except BusinessException as e:
        _log.debug(f"{args.command} failed with {e.code.name}: {e.msg}")
        print(json.dumps(e.to_detail()), file=sys.stderr)
        return EXIT_ERROR
    except ValidationError as e:
        error = BusinessException(ErrorCodes.INVALID_INPUT, str(e.errors(include_url=False)))
        print(json.dumps(error.to_detail()), file=sys.stderr)
        return EXIT_ERROR
    return 0
