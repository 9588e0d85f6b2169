##
# Licensed under the MIT License.
##
import argparse
import logging
import sys
from typing import List, Optional

from normlab import __version__
from normlab.jobs import COMMANDS, PROFILES, JobSpec, run


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with 1, the input-error code, instead of argparse's 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="normlab",
        description="Integral closures, normalization indices and Hilbert/Sally invariants of ideals.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("-i", "--input", dest="input_path", required=True)
    parser.add_argument("-n", "--power", type=int)
    parser.add_argument("-N", "--table-length", dest="table_length", type=int)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument(
        "--json", dest="output_format", action="store_const", const="json", default="text"
    )
    parser.add_argument("--oracle", action="store_true")
    parser.add_argument("--no-banner", dest="banner", action="store_false")
    parser.add_argument("--profile", choices=PROFILES, default="lenient")
    parser.add_argument("-v", "--verbose", action="store_true")
    parser.add_argument("--version", action="version", version=f"normlab {__version__}")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    job = JobSpec(
        command=args.command,
        input_path=args.input_path,
        power=args.power,
        table_length=args.table_length,
        seed=args.seed,
        output_format=args.output_format,
        oracle=args.oracle,
        banner=args.banner,
        profile=args.profile,
    )
    code, output = run(job)
    print(output, file=sys.stdout if code == 0 else sys.stderr)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
