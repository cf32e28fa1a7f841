"""Bracketing bisection.

Bisection is deliberately used instead of derivative or secant methods:
every caller in this package has a guaranteed single sign change over its
bracket, and unconditional robustness matters more than iteration count.
"""

from __future__ import annotations

from typing import Callable

from .errors import BracketError, ConvergenceError


def bisect(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    *,
    xtol: float = 1e-9,
    ftol: float | None = None,
    max_iter: int = 200,
    label: str = "root",
) -> float:
    """Root of f on [lo, hi], which must bracket a sign change.

    Iterates until the bracket is narrower than xtol and, when ftol is
    given, |f(mid)| < ftol as well. Raises BracketError when the endpoints
    do not straddle zero and ConvergenceError on iteration exhaustion.
    """
    if not lo < hi:
        raise ValueError(f"invalid interval [{lo}, {hi}] for {label}")
    flo = f(lo)
    if flo == 0.0:
        return lo
    fhi = f(hi)
    if fhi == 0.0:
        return hi
    if (flo > 0.0) == (fhi > 0.0):
        raise BracketError(
            f"no sign change for {label} on [{lo:g}, {hi:g}]: "
            f"f(lo)={flo:.6g}, f(hi)={fhi:.6g}"
        )
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        fmid = f(mid)
        if fmid == 0.0:
            return mid
        if (fmid > 0.0) == (flo > 0.0):
            lo, flo = mid, fmid
        else:
            hi, fhi = mid, fmid
        if hi - lo < xtol and (ftol is None or abs(fmid) < ftol):
            return 0.5 * (lo + hi)
    raise ConvergenceError(
        f"{label} did not converge in {max_iter} iterations; last bracket [{lo:g}, {hi:g}]"
    )
