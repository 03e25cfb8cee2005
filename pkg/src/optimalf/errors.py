"""Exceptions raised by the numeric routines.

Validation problems (bad fractions, malformed distributions, unreadable
input files) raise plain ``ValueError``; the classes below mark cases where
a *method* is infeasible for the given instance, so callers can switch to
another route (dynamic program, Monte Carlo) instead of aborting.
"""


class MethodError(RuntimeError):
    """A computation route cannot handle the requested instance."""


class CapExceededError(MethodError):
    """Exhaustive enumeration would exceed the configured path/vector cap."""


class ScalingError(MethodError):
    """Trades admit no exact integer scaling, so sum-based state spaces
    cannot be built."""
