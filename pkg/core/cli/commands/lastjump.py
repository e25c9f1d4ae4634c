"""wildcount lastjump command"""

import logging
from concurrent.futures import ProcessPoolExecutor

from ...algebra.lie import base_change
from ...errors import InvariantViolation
from ...ramification.datum import format_jump, load_datum
from ...ramification.lastjump import lastjump, lastjump_oracle
from ..utils.output import status, write_json, write_rows
from .base import BaseCommand, add_run_arguments

logger = logging.getLogger(__name__)


class LastjumpCommand(BaseCommand):
    """Compute the last jump of a local datum by J(v) and by the functional oracle"""

    @classmethod
    def register(cls, subparsers):
        parser = subparsers.add_parser("lastjump", help="Last jump of a local datum given as JSON")
        parser.add_argument("datum", help="Datum JSON file")
        parser.add_argument("--method", choices=["auto", "general", "exp-p"], help="J(v) evaluation path")
        add_run_arguments(parser)
        return parser

    def execute(self, args) -> int:
        config = self.run_config(args)
        algebra = base_change(config.algebra_spec(), config.field) if config.algebra else None
        datum = load_datum(args.datum, algebra)
        status(f"🔍 Datum over F_{datum.algebra.field.q} with support {list(datum.keys)}")
        method = config.method or "auto"
        if config.jobs > 1:
            # J(v) and the oracle are independent; run them side by side
            with ProcessPoolExecutor(max_workers=2) as executor:
                jump_future = executor.submit(lastjump, datum, method)
                oracle_future = executor.submit(lastjump_oracle, datum)
                jump, oracle = jump_future.result(), oracle_future.result()
        else:
            jump = lastjump(datum, method)
            oracle = lastjump_oracle(datum)
        if config.format == "json":
            write_json({"lastjump": format_jump(jump), "oracle": format_jump(oracle)})
        else:
            write_rows(["lastjump", "oracle"], [[format_jump(jump), format_jump(oracle)]])
        if jump != oracle:
            raise InvariantViolation(f"J(v) gives {format_jump(jump)} but the oracle gives {format_jump(oracle)}")
        return 0
