"""wildcount configuration constants and scale guards"""

import os

from .errors import WildcountError


class WildcountConfig:
    """wildcount configuration constants and settings"""

    VERSION = "1.0.0"

    ASCII_ART = r"""
            _ _     _                       _
  __      _(_) | __| | ___ ___  _   _ _ __ | |_
  \ \ /\ / / | |/ _` |/ __/ _ \| | | | '_ \| __|
   \ V  V /| | | (_| | (_| (_) | |_| | | | | |_
    \_/\_/ |_|_|\__,_|\___\___/ \__,_|_| |_|\__|

    Last-jump distributions of wildly ramified G-extensions
    """

    # Environment
    SCALE_GUARD_ENV = "WILDCOUNT_SCALE_GUARD"
    JOBS_ENV = "WILDCOUNT_JOBS"

    # Scale guards
    MAX_FIELD_DEGREE = 12
    MAX_ALGEBRA_ORDER = 3 ** 12
    LOCAL_ENUMERATION_GUARD = 10 ** 9
    AKM_GUARD = 10 ** 8
    ISOTROPIC_GUARD = 10 ** 7
    LATTICE_GUARD = 10 ** 5

    # Defaults for CLI runs
    RUN_DEFAULTS = {
        "p": 3,
        "d": 1,
        "v_max": 2,
        "n_max": 1,
        "format": "csv",
        "jobs": 1,
    }

    @classmethod
    def scale_guard(cls, default: int) -> int:
        """Return the guard for one enumeration, honouring the expert override"""
        raw = os.environ.get(cls.SCALE_GUARD_ENV)
        if not raw:
            return default
        try:
            value = int(raw)
        except ValueError:
            raise WildcountError(f"{cls.SCALE_GUARD_ENV} must be a positive integer, got {raw!r}")
        if value <= 0:
            raise WildcountError(f"{cls.SCALE_GUARD_ENV} must be a positive integer, got {raw!r}")
        return value

    @classmethod
    def default_jobs(cls) -> int:
        """Worker count used when the caller does not choose one"""
        raw = os.environ.get(cls.JOBS_ENV)
        if not raw:
            return cls.RUN_DEFAULTS["jobs"]
        try:
            value = int(raw)
        except ValueError:
            raise WildcountError(f"{cls.JOBS_ENV} must be a positive integer, got {raw!r}")
        if value <= 0:
            raise WildcountError(f"{cls.JOBS_ENV} must be a positive integer, got {raw!r}")
        return value
