"""wildcount doctor command"""

import importlib
import os
import sys

from ...algebra.finite_field import field_new
from ...algebra.lie import heisenberg, validate_spec
from ...config import WildcountConfig
from ...errors import WildcountError
from .base import BaseCommand


class DoctorCommand(BaseCommand):
    """Diagnose the wildcount installation"""

    # import name -> package name
    REQUIRED_PACKAGES = {"yaml": "pyyaml", "sympy": "sympy", "numpy": "numpy"}

    @classmethod
    def register(cls, subparsers):
        parser = subparsers.add_parser("doctor", help="Check dependencies, guards and a smoke computation")
        parser.add_argument("--quick", action="store_true", help="Skip the smoke computation")
        return parser

    def execute(self, args) -> int:
        out = sys.stderr
        print("🩺 wildcount Doctor - Diagnosing system...", file=out)
        print("=" * 50, file=out)

        issues_found = 0
        issues_found += self._check_python_version()
        issues_found += self._check_dependencies()
        issues_found += self._check_scale_guard()
        if not args.quick:
            issues_found += self._check_smoke()

        print("\n" + "=" * 50, file=out)
        if issues_found == 0:
            print("🎉 wildcount is healthy!", file=out)
            return 0
        print(f"⚠️ Found {issues_found} issues.", file=out)
        return 1

    def _check_python_version(self):
        print("🐍 Checking Python version...", file=sys.stderr)
        python_version = sys.version_info
        if python_version < (3, 9):
            print(f"  ❌ Python {python_version.major}.{python_version.minor} is too old (need 3.9+)", file=sys.stderr)
            return 1
        print(f"  ✅ Python {python_version.major}.{python_version.minor}.{python_version.micro}", file=sys.stderr)
        return 0

    def _check_dependencies(self):
        print("📦 Checking dependencies...", file=sys.stderr)
        issues = 0
        for module, package in self.REQUIRED_PACKAGES.items():
            try:
                importlib.import_module(module)
                print(f"  ✅ {package}: Available", file=sys.stderr)
            except ImportError:
                print(f"  ❌ {package}: Missing", file=sys.stderr)
                print(f"     Install with: pip install {package}", file=sys.stderr)
                issues += 1
        return issues

    def _check_scale_guard(self):
        print("📏 Checking scale guards...", file=sys.stderr)
        raw = os.environ.get(WildcountConfig.SCALE_GUARD_ENV)
        try:
            guard = WildcountConfig.scale_guard(WildcountConfig.LOCAL_ENUMERATION_GUARD)
        except WildcountError as e:
            print(f"  ❌ {e}", file=sys.stderr)
            return 1
        if raw:
            print(f"  ⚠️ Expert mode: {WildcountConfig.SCALE_GUARD_ENV}={guard} overrides every guard", file=sys.stderr)
        else:
            print(f"  ✅ Local enumeration guard: {guard}", file=sys.stderr)
        return 0

    def _check_smoke(self):
        print("🧪 Running smoke computation...", file=sys.stderr)
        # imported here so that a broken tools package still lets doctor report the rest
        from tools.asymptotics import heisenberg_constants

        try:
            field = field_new(3, 2)
            if field.trace(field.one) != 2:
                raise WildcountError("Tr_{F_9/F_3}(1) != 2")
            validate_spec(heisenberg(1, 3))
            report = heisenberg_constants(3, 1)
            if (report.A, report.B) != (3, 5):
                raise WildcountError(f"h_1 at p=3 gave A={report.A}, B={report.B}")
        except (WildcountError, ValueError, AssertionError) as e:
            print(f"  ❌ {e}", file=sys.stderr)
            return 1
        print("  ✅ GF(9) trace, h_1 axioms and Heisenberg constants", file=sys.stderr)
        return 0
