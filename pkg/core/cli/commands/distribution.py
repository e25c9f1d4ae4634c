"""wildcount distribution command"""

from ...ramification.counting import jump_distribution
from ...ramification.datum import format_jump
from ..utils.output import jump_columns, status, write_rows
from .base import BaseCommand, add_run_arguments


class DistributionCommand(BaseCommand):
    """Count local data by exact last jump below --vmax"""

    @classmethod
    def register(cls, subparsers):
        parser = subparsers.add_parser("distribution", help="Local last-jump distribution")
        parser.add_argument("--vmax", dest="v_max", help="Count jumps strictly below this rational")
        add_run_arguments(parser)
        return parser

    def execute(self, args) -> int:
        config = self.run_config(args)
        spec, field = config.algebra_spec(), config.field
        status(f"📊 {spec} over F_{field.q}, jumps below {format_jump(config.v_bound)}, {config.jobs} job(s)")
        histogram = jump_distribution(spec, field, config.v_bound, jobs=config.jobs)
        rows = [jump_columns(jump) + [count] for jump, count in histogram.items()]
        write_rows(["jump_num", "jump_den", "count"], rows, config.format)
        return 0
