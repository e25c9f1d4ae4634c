"""Base command class for wildcount CLI commands"""

from abc import ABC, abstractmethod
from argparse import ArgumentParser, _SubParsersAction

from ..utils.config import RunConfig


class BaseCommand(ABC):
    """Base class for all wildcount commands"""

    @classmethod
    @abstractmethod
    def register(cls, subparsers: _SubParsersAction) -> ArgumentParser:
        """Register command with argument parser"""

    @abstractmethod
    def execute(self, args) -> int:
        """Execute the command with parsed arguments and return an exit code"""

    def run_config(self, args) -> RunConfig:
        return RunConfig.from_args(args)


def add_field_arguments(parser: ArgumentParser) -> None:
    """--p/--d or --q select the residue field"""
    group = parser.add_argument_group("field")
    group.add_argument("--p", type=int, help="Characteristic (default 3)")
    group.add_argument("--d", type=int, help="Residue field degree over F_p (default 1)")
    group.add_argument("--q", type=int, help="Residue field size, overrides --p/--d")


def add_jobs_argument(parser: ArgumentParser) -> None:
    parser.add_argument("--jobs", type=int, help="Worker processes (default 1, or WILDCOUNT_JOBS)")


def add_run_arguments(parser: ArgumentParser, algebra: bool = True) -> None:
    """Flags shared by the counting commands"""
    if algebra:
        parser.add_argument("--algebra", help='"heisenberg:k", "abelian:n1,n2,..." or a JSON file')
    add_field_arguments(parser)
    parser.add_argument("--format", choices=["csv", "json"], help="Output format (default csv)")
    add_jobs_argument(parser)
    parser.add_argument("--config", help="YAML run configuration; flags override its values")
