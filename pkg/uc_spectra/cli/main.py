import argparse
import sys
from pathlib import Path
from typing import List, NoReturn, Optional

from loguru import logger

from uc_spectra import InternalInconsistency, UcSpectraError
from uc_spectra.cli.enumeration import COLUMNS, EnumerationFilter, enumerate_rows
from uc_spectra.cli.render import (
    render_report_csv,
    render_report_table,
    render_rows_csv,
    render_rows_table,
    render_suite,
    to_json,
)
from uc_spectra.cli.report import DEFAULT_MOMENTS, build_report, single_modulus
from uc_spectra.cli.verify import Suite, run_suite
from uc_spectra.logging import configure_json_logging, configure_pretty_logging
from uc_spectra.oracle.concrete import realize_ring
from uc_spectra.oracle.graph import cayley_graph, to_edge_list
from uc_spectra.rings.parser import parse_ring_expr
from uc_spectra.settings import get_settings

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_MISMATCH = 2
EXIT_INTERNAL = 3


class ArgumentParser(argparse.ArgumentParser):
    """Usage errors are input errors, so they exit 1 rather than argparse's 2."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "table"], default=None)
    common.add_argument(
        "--lax", action="store_true", help="Admit local(o,m) descriptors no ring realizes."
    )
    common.add_argument(
        "--oracle", action="store_true", help="Cross-check closed forms by brute force."
    )
    common.add_argument("--max-order", "--max", dest="max_order", type=int, default=None)
    common.add_argument(
        "--workers", type=int, default=None, help="Thread count; defaults to UC_SPECTRA_WORKERS."
    )
    common.add_argument(
        "--seed-free",
        action="store_true",
        help="Accepted for scripts; every computation is deterministic already.",
    )
    common.add_argument("--log-format", choices=["pretty", "json"], default="pretty")
    common.add_argument("--log-level", default=None)
    return common


def build_arg_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = ArgumentParser(
        prog="uc-spectra",
        description="Spectra, Ramanujan verdicts and energies of unitary Cayley graphs.",
    )
    commands = parser.add_subparsers(dest="command", required=True, parser_class=ArgumentParser)

    report = commands.add_parser("report", parents=[common], help="Report on a single ring.")
    report.add_argument("ring_expr", help='e.g. "Z/12", "GF(4) x Z/3", "GF(3)[x]/x^2"')
    report.add_argument("--moments", type=int, default=DEFAULT_MOMENTS, metavar="K")
    report.add_argument("--export-graph", type=Path, default=None, metavar="PATH")
    report.set_defaults(handler=cmd_report)

    enumerate_ = commands.add_parser(
        "enumerate", parents=[common], help="Classify every ring up to an order."
    )
    enumerate_.add_argument(
        "--filter", choices=[f.value for f in EnumerationFilter], default=EnumerationFilter.ALL.value
    )
    enumerate_.add_argument("--zn-only", action="store_true", help="Only the rings Z/n.")
    enumerate_.set_defaults(handler=cmd_enumerate)

    verify = commands.add_parser("verify", parents=[common], help="Run a verification suite.")
    verify.add_argument("--suite", choices=[s.value for s in Suite], default=Suite.ALL.value)
    verify.add_argument(
        "--strict-paper",
        action="store_true",
        help="Treat hyperenergetic corollary disagreements as failures.",
    )
    verify.set_defaults(handler=cmd_verify)
    return parser


def cmd_report(args: argparse.Namespace) -> int:
    spec = parse_ring_expr(args.ring_expr, strict=not args.lax)
    if args.moments < 0:
        raise ValueError(f"--moments must be non-negative, got {args.moments}")
    doc = build_report(
        spec,
        moments=args.moments,
        oracle=args.oracle,
        modulus=single_modulus(args.ring_expr),
    )
    output_format = args.format or "json"
    if output_format == "table":
        sys.stdout.write(render_report_table(doc))
    elif output_format == "csv":
        sys.stdout.write(render_report_csv(doc))
    else:
        sys.stdout.write(to_json(doc.to_json_dict()) + "\n")
    if args.export_graph is not None:
        args.export_graph.write_text(to_edge_list(cayley_graph(realize_ring(spec))))
        logger.info("wrote G_R of {} to {}", doc.ring, args.export_graph)
    if not doc.oracle_ok:
        failed = [check.name for check in doc.oracle or [] if not check.ok]
        logger.error("oracle disagrees with the closed forms on {}", ", ".join(failed))
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    if args.max_order is None:
        raise ValueError("enumerate needs --max-order (or --max)")
    rows = enumerate_rows(
        args.max_order,
        row_filter=EnumerationFilter(args.filter),
        strict=not args.lax,
        zn_only=args.zn_only,
        workers=args.workers,
    )
    output_format = args.format or "csv"
    if output_format == "table":
        sys.stdout.write(render_rows_table(rows, COLUMNS))
    elif output_format == "json":
        sys.stdout.write(to_json(rows) + "\n")
    else:
        sys.stdout.write(render_rows_csv(rows, COLUMNS))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    results = run_suite(
        Suite(args.suite),
        max_order=args.max_order,
        oracle=args.oracle,
        strict=not args.lax,
        strict_paper=args.strict_paper,
        workers=args.workers,
    )
    if args.format == "json":
        sys.stdout.write(to_json([result.to_json_dict() for result in results]) + "\n")
    else:
        for result in results:
            sys.stdout.write(render_suite(result))
    return EXIT_OK if all(result.ok for result in results) else EXIT_MISMATCH


def main(argv: Optional[List[str]] = None) -> int:
    args = build_arg_parser().parse_args(argv)
    level = (args.log_level or get_settings().log_level).upper()
    if args.log_format == "json":
        configure_json_logging(level)
    else:
        configure_pretty_logging(level)

    try:
        return args.handler(args)
    except InternalInconsistency as e:
        logger.exception("internal inconsistency")
        print(f"internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except (UcSpectraError, ValueError) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as e:
        logger.exception("unexpected failure")
        print(f"internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
