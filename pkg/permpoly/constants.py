"""Module: Constants"""

import os

# largest field order field_new will construct
ORDER_CAP = 2 ** 24
# exp/log tables are built up to this order
DEFAULT_TABLE_CAP = 2 ** 20
# q^n bound of the reference trace-form computation
DEFAULT_MAX_ORDER = 5000
# prefix length of the batched search prefilter
DEFAULT_PREFILTER = 256

JOBS_ENV = "PERMPOLY_JOBS"
TABLE_CAP_ENV = "PERMPOLY_TABLE_CAP"

SUMMARY_HEAD = 8


def table_cap_from_env() -> int:
    """Function: exp/log table cap, overridable through the environment"""

    raw = os.getenv(TABLE_CAP_ENV)
    if not raw:
        return DEFAULT_TABLE_CAP
    return int(raw)


def jobs_from_env() -> int:
    """Function: default worker count"""

    raw = os.getenv(JOBS_ENV)
    if not raw:
        return 1
    return max(1, int(raw))
