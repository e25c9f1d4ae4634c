#!/usr/bin/env python3

"""
wildcount CLI
Main command-line interface for last-jump counting
"""

import argparse
import logging
import sys

from ..errors import InvariantViolation, WildcountError
from .commands.asymptotics import AsymptoticsCommand
from .commands.distribution import DistributionCommand
from .commands.doctor import DoctorCommand
from .commands.global_series import GlobalSeriesCommand
from .commands.heisenberg import HeisenbergCommand
from .commands.lastjump import LastjumpCommand
from .utils.banner import print_banner
from .utils.config import WildcountConfig

COMMANDS = {
    "lastjump": LastjumpCommand,
    "distribution": DistributionCommand,
    "heisenberg-table": HeisenbergCommand,
    "global-series": GlobalSeriesCommand,
    "asymptotics": AsymptoticsCommand,
    "doctor": DoctorCommand,
}


def create_parser():
    """Create the main argument parser"""
    parser = argparse.ArgumentParser(
        prog="wildcount",
        description="Last-jump distributions of wildly ramified G-extensions",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  wildcount lastjump tests/data/h1_f9_datum.json
  wildcount distribution --algebra abelian:1 --q 3 --vmax 2
  wildcount heisenberg-table akm --k 1 --q 3 --m 2
  wildcount global-series --algebra abelian:1 --q 3 --nmax 1
  wildcount asymptotics --heisenberg 3,1
  wildcount doctor

Set WILDCOUNT_SCALE_GUARD to override the enumeration guards (expert mode).
        """
    )

    parser.add_argument('--version', action='version',
                        version=f'wildcount {WildcountConfig.VERSION}')
    parser.add_argument('--verbose', '-v', action='store_true', help='Debug logging on stderr')

    subparsers = parser.add_subparsers(dest='command', help='Available commands')
    for command in COMMANDS.values():
        command.register(subparsers)

    return parser


def configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(asctime)s %(name)s %(levelname)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )


def main(argv=None) -> int:
    """Main CLI entry point; returns the process exit code"""
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors and 0 for --help/--version
        return e.code if isinstance(e.code, int) else 2

    configure_logging(args.verbose)

    if not args.command:
        print_banner()
        parser.print_help(sys.stderr)
        return 2

    if args.command == 'doctor':
        print_banner()

    try:
        return COMMANDS[args.command]().execute(args)
    except KeyboardInterrupt:
        print("\n👋 wildcount interrupted by user", file=sys.stderr)
        return 130
    except InvariantViolation as e:
        print(f"❌ Invariant violation: {e}", file=sys.stderr)
        return 1
    except (WildcountError, ValueError) as e:
        print(f"❌ wildcount error: {e}", file=sys.stderr)
        print("🩺 Try running: wildcount doctor", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
