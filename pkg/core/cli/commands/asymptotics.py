"""wildcount asymptotics command"""

from tools.asymptotics import heisenberg_constants, main_theorem_constants

from ...errors import DatumError
from ..utils.output import status, write_json
from .base import BaseCommand, add_jobs_argument


class AsymptoticsCommand(BaseCommand):
    """Growth constants A, B, M of the global counts"""

    @classmethod
    def register(cls, subparsers):
        parser = subparsers.add_parser("asymptotics", help="Constants (A, S, B, M) as JSON")
        parser.add_argument("--algebra", help='"heisenberg:k", "abelian:n1,n2,..." or a JSON file')
        parser.add_argument("--p", type=int, help="Characteristic for built-in algebras (default 3)")
        parser.add_argument("--heisenberg", help="p,k for the dedicated Heisenberg table")
        add_jobs_argument(parser)
        parser.add_argument("--config", help="YAML run configuration; flags override its values")
        return parser

    def execute(self, args) -> int:
        config = self.run_config(args)
        if config.heisenberg:
            try:
                p, k = (int(part) for part in config.heisenberg.split(","))
            except ValueError:
                raise DatumError(f"--heisenberg expects p,k, got {config.heisenberg!r}")
            status(f"📈 Heisenberg table for h_{k} at p={p}")
            report = heisenberg_constants(p, k)
        else:
            spec = config.algebra_spec()
            status(f"📈 Main counting table for {spec}")
            report = main_theorem_constants(spec)
        write_json(report.to_json())
        return 0
