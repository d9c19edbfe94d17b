"""Exception hierarchy shared by all modules."""

import os

#: Guard on every window scan. Overridable through RATLIFF_RUSH_NMAX.
DEFAULT_NMAX = 1_000_000


def nmax():
    return int(os.environ.get("RATLIFF_RUSH_NMAX", DEFAULT_NMAX))


def check_bound(value, what="scan"):
    limit = nmax()
    if abs(value) > limit:
        raise BoundExceeded(f"{what} reaches {value}, beyond N_max={limit}")
    return value


class SemigroupError(ValueError):
    pass


class EmptyGenerators(SemigroupError):
    pass


class GcdNotOne(SemigroupError):
    pass


class BoundExceeded(SemigroupError, OverflowError):
    pass


class NotMember(SemigroupError):
    pass


class NotClosed(SemigroupError):
    pass


class AmbientMismatch(SemigroupError):
    pass


class NotIntegral(SemigroupError):
    pass


class NoStabilization(RuntimeError):
    """A chain that must stabilize did not within its safety cap (a bug)."""


class WindowTooSmall(SemigroupError):
    pass


class IndivisibleApery(RuntimeError):
    pass
