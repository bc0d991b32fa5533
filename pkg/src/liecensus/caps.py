"""Run-time enumeration caps and the failure taxonomy used across the package.

Two kinds of non-success are kept strictly apart: a `RefusalError` means an
enumeration would be too large under the configured caps (the caller gets a
size estimate and can raise the cap), while an `InternalInconsistencyError`
means an exactness guarantee failed and indicates a bug, never bad input.
"""

import os

_DEFAULTS = {
    "group_size": 100_000_000,   # product-group iteration budget (Burnside loops)
    "module_size": 200_000,      # largest module materialised element by element
    "space_size": 2_000_000,     # orbit-space points for explicit orbit listing
    "table_count": 20_000_000,   # oracle bracket-table budget
}


class RefusalError(Exception):
    """An enumeration would exceed a configured cap."""

    def __init__(self, message, estimate=None, cap=None):
        super().__init__(message)
        self.estimate = estimate
        self.cap = cap


class InternalInconsistencyError(Exception):
    """An exactness or divisibility guarantee failed; this is a bug."""


def get_cap(name, override=None):
    if override is not None:
        return int(override)
    env = os.environ.get("PORC_CAP_" + name.upper())
    if env is not None:
        return int(env)
    return _DEFAULTS[name]


def check_cap(name, estimate, override=None, what=""):
    """Raise a RefusalError with guidance if `estimate` exceeds the cap."""
    cap = get_cap(name, override)
    if estimate > cap:
        flag = "--cap-" + name.replace("_", "-")
        raise RefusalError(
            f"{what or name} needs about {estimate} steps, over the cap {cap}; "
            f"raise {flag} or PORC_CAP_{name.upper()} to proceed",
            estimate=estimate,
            cap=cap,
        )
    return cap
