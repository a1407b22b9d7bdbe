import argparse
import logging
import sys

from controller.config import CliConfig, Command, OutputFormat
from controller.controller import EXIT_USAGE, Controller
from model.family import FamilyKind
from view.structured.csv_view import CsvView
from view.structured.json_view import JsonView
from view.text.text_view import TextView

VIEWERS = {
    OutputFormat.TEXT: TextView,
    OutputFormat.JSON: JsonView,
    OutputFormat.CSV: CsvView,
}


def build_parser() -> argparse.ArgumentParser:
    """
    Command-line surface.

    Usage:
        python run.py analyze --graph6 "Bg" --alpha 0
        python run.py generate --family extremal --n 8
        python run.py sweep --file connected6.g6 --alpha 0,0.5 --jobs 4
        python run.py verify-theorem --n 6 --family-only
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=[f.value for f in OutputFormat], default="text", help="Report format.")
    common.add_argument("-v", "--verbose", action="store_true", help="Log debug detail to stderr.")
    common.add_argument("-q", "--quiet", action="store_true", help="Log errors only.")

    inputs = argparse.ArgumentParser(add_help=False)
    source = inputs.add_mutually_exclusive_group()
    source.add_argument("--graph6", help="A single graph in graph6 format.")
    source.add_argument("--file", help="File with one graph6 string per line ('-' for stdin).")

    checks = argparse.ArgumentParser(add_help=False)
    checks.add_argument("--alpha", help="Comma separated alpha values (default 0,0.25,0.5,0.75).")
    checks.add_argument("--tol", type=float, help="Relative tolerance (default 1e-9, or DALPHA_TOL).")

    parser = argparse.ArgumentParser(
        description="Generalized distance spectra and the lower bound on Tr_max - mu_alpha."
    )
    commands = parser.add_subparsers(dest="command", required=True)

    commands.add_parser(
        Command.ANALYZE.value, parents=[common, inputs, checks], help="Report distances, transmissions and spectra."
    )

    generate = commands.add_parser(Command.GENERATE.value, parents=[common], help="Emit graph6 lines for a family.")
    generate.add_argument("--family", required=True, choices=[k.label for k in FamilyKind])
    generate.add_argument("--n", type=int, help="Order.")
    generate.add_argument("--parts", help="Part sizes for multipartite, e.g. 1,2,2.")
    generate.add_argument("--graph6", help="Regular base graph for the dvdr family.")
    generate.add_argument("--count", type=int, default=1, help="Samples for the random family.")
    generate.add_argument("--seed", type=int, default=0, help="Seed for the random family.")
    generate.add_argument("--p", type=float, default=0.3, help="Edge probability for the random family.")

    sweep = commands.add_parser(
        Command.SWEEP.value, parents=[common, checks], help="Check the bound on every graph of a graph6 enumeration."
    )
    sweep.add_argument("--file", default="-", help="graph6 enumeration ('-' for stdin).")
    sweep.add_argument("--jobs", type=int, help="Worker processes (default: all cores).")

    verify = commands.add_parser(
        Command.VERIFY_THEOREM.value, parents=[common, checks], help="Run the acceptance checks for one order."
    )
    verify.add_argument("--n", type=int, help="Order.")
    verify.add_argument("--file", help="Enumeration of all connected graphs of order n.")
    verify.add_argument("--family-only", action="store_true", help="Check the extremal family without a file.")
    verify.add_argument("--jobs", type=int, help="Worker processes (default: all cores).")
    return parser


def configure_logging(verbose: bool, quiet: bool):
    level = logging.DEBUG if verbose else logging.ERROR if quiet else logging.WARNING
    logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s")


def main(argv: list[str] | None = None) -> int:
    """
    Entry point for the command line.

    Returns:
        int: 0 on success, 1 when a check failed, 2 for usage, parse or domain errors.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose, args.quiet)

    try:
        config = CliConfig.from_args(args)
        viewer = VIEWERS[config.output_format]()
        return Controller(viewer).run(config)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
