"""wildcount heisenberg-table command"""

from tools.heisenberg import AKM_METHODS, a_km, heisenberg_local_small_v, isotropic_count

from ..utils.output import status, write_rows
from .base import BaseCommand, add_run_arguments


class HeisenbergCommand(BaseCommand):
    """Tables for the Heisenberg algebras h_k"""

    @classmethod
    def register(cls, subparsers):
        parser = subparsers.add_parser("heisenberg-table", help="A_{k,m} counts, isotropic subspaces, local counts")
        parser.add_argument("table", choices=["akm", "isotropic", "local"], help="Which table to print")
        parser.add_argument("--k", type=int, help="Heisenberg rank (default 1)")
        parser.add_argument("--m", type=int, help="Largest m to tabulate (default 2)")
        parser.add_argument("--method", choices=list(AKM_METHODS), help="A_{k,m} counter (default brute)")
        add_run_arguments(parser, algebra=False)
        return parser

    def execute(self, args) -> int:
        config = self.run_config(args)
        k = config.k
        if args.table == "isotropic":
            p = config.characteristic
            status(f"🧮 Maximal isotropic subspaces of F_{p}^{2 * k}")
            brute, formula = isotropic_count(p, k)
            write_rows(["p", "k", "brute_force", "formula"], [[p, k, brute, formula]], config.format)
            return 0

        field = config.field
        if args.table == "akm":
            method = config.method or "brute"
            first = k if method == "stable" else 0
            status(f"🧮 A_{{{k},m}}(F_{field.q}) for m = {first}..{config.m} by {method}")
            rows = [[k, m, field.q, a_km(k, m, field, method), method] for m in range(first, config.m + 1)]
            write_rows(["k", "m", "q", "a_km", "method"], rows, config.format)
            return 0

        status(f"🧮 N(< 1 + {field.p}^-m) for h_{k} over F_{field.q}, checked against local enumeration")
        rows = [[k, m, field.q, heisenberg_local_small_v(k, field, m, jobs=config.jobs)] for m in range(config.m + 1)]
        write_rows(["k", "m", "q", "count"], rows, config.format)
        return 0
