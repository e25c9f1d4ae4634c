"""wildcount global-series command"""

from tools.asymptotics import direct_convolution, euler_product

from ..utils.output import jump_columns, status, write_rows
from .base import BaseCommand, add_run_arguments


class GlobalSeriesCommand(BaseCommand):
    """Aut-weighted counts of G-extensions of F_q(T) by global last jump"""

    @classmethod
    def register(cls, subparsers):
        parser = subparsers.add_parser("global-series", help="Global coefficients a_N over F_q(T)")
        parser.add_argument("--nmax", dest="n_max", help="Largest global last jump N")
        parser.add_argument("--method", choices=["euler", "direct"], help="Euler product (default) or place tuples")
        add_run_arguments(parser)
        return parser

    def execute(self, args) -> int:
        config = self.run_config(args)
        spec = config.algebra_spec()
        q = config.field.q
        method = config.method or "euler"
        if method not in ("euler", "direct"):
            raise ValueError(f"Unknown global-series method {method!r}")
        status(f"🌐 {spec} over F_{q}(T), N <= {config.n_max}, {method}")
        build = euler_product if method == "euler" else direct_convolution
        series = build(spec, q, config.n_bound, config.jobs)
        rows = [jump_columns(n) + [a] for n, a in series.items() if a]
        write_rows(["N_num", "N_den", "a_N"], rows, config.format)
        return 0
