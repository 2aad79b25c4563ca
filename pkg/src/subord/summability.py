"""Smoothing means with symbol ``exp(-|eps y|^alpha)`` and their comparison.

For ``f`` with transform ``F``, the mean of order ``alpha`` at scale ``eps``
is the convolution operator

    U[alpha, eps] f  =  inverse transform of  exp(-|eps y|^alpha) F(y).

For ``beta > alpha`` the approximation errors of the two families are
subordinate: ``1 - exp(-|y|^beta)`` factors through ``1 - exp(-|y|^alpha)``
with a bounded-measure ratio, so

    || f - U[beta, eps] f ||_p  <=  C(alpha, beta) || f - U[alpha, eps] f ||_p

for every ``p`` and every ``eps``, with a constant independent of both (the
ratio symbol is invariant under dilation).  This module estimates the
constant, verifies the inequality on a corpus, and materializes the kernels
themselves.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import (
    AllCasesSkippedError,
    InvalidParameterError,
    KernelUnresolvableError,
    NonConvergentError,
)
from .comparison import gw_ratio, gw_symbol
from .fourier_core import FREQUENCY, GridSpec, SampledFunction, forward_ft, inverse_ft, lp_norm
from .measures import WienerEstimate, wiener_norm
from .testkit import TestFunction, materialize, means_suite

__all__ = [
    "gw_kernel",
    "gw_mean",
    "gw_error",
    "gw_constant",
    "GWCase",
    "GWReport",
    "gw_verify",
    "DEFAULT_PAIRS",
    "ORACLE_GRID",
    "ORACLE_OVERSAMPLE",
    "load_pinned_constants",
    "pinned_constant",
    "seed_pinned_constants",
]

#: exponent pairs with pinned reference constants
DEFAULT_PAIRS: tuple[tuple[float, float], ...] = ((0.5, 1.0), (1.0, 2.0), (1.0, 3.0), (2.0, 4.0))

#: reference grid the pinned constants were computed on
ORACLE_GRID = GridSpec(160.0, 2**18)
ORACLE_OVERSAMPLE = 8

#: a kernel narrower than this many nodes is pure aliasing, not a kernel
_MIN_NODES_PER_WIDTH = 4


def _check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not (math.isfinite(alpha) and alpha > 0):
        raise InvalidParameterError(f"order must be finite and positive, got {alpha}")
    return alpha


def _check_eps(eps: float, grid: GridSpec) -> float:
    eps = float(eps)
    if not (math.isfinite(eps) and eps > 0):
        raise InvalidParameterError(f"scale must be finite and positive, got {eps}")
    if eps < _MIN_NODES_PER_WIDTH * grid.dx:
        raise KernelUnresolvableError(
            f"scale {eps} is below {_MIN_NODES_PER_WIDTH} nodes of spacing {grid.dx:.3g}; "
            "the kernel cannot be resolved on this grid")
    return eps


def gw_kernel(alpha: float, eps: float, grid: GridSpec) -> SampledFunction:
    """The smoothing kernel: inverse transform of ``exp(-|eps y|^alpha)``.

    The samples are the grid periodization of the true kernel, so their
    rectangle-rule mass equals the symbol at 0, i.e. exactly 1; a mass off
    by more than ``1e-3`` means the transform itself misfired and raises
    :class:`NonConvergentError`.
    """
    alpha = _check_alpha(alpha)
    eps = _check_eps(eps, grid)
    symbol = np.exp(-np.abs(eps * grid.dual_nodes()) ** alpha).astype(np.complex128)
    kernel = inverse_ft(SampledFunction(grid, symbol, FREQUENCY))
    mass = grid.dx * complex(np.sum(kernel.values))
    if abs(mass - 1.0) > 1e-3:
        raise NonConvergentError(f"kernel mass {mass:.6g} differs from 1 beyond 1e-3")
    return kernel


def gw_mean(f: SampledFunction, alpha: float, eps: float) -> SampledFunction:
    """Apply the mean ``U[alpha, eps]`` to a space-side function."""
    alpha = _check_alpha(alpha)
    eps = _check_eps(eps, f.grid)
    symbol = np.exp(-np.abs(eps * f.grid.dual_nodes()) ** alpha)
    damped = SampledFunction(f.grid, symbol * forward_ft(f).values, FREQUENCY)
    return inverse_ft(damped)


def gw_error(f: SampledFunction, alpha: float, eps: float, p: float) -> float:
    """Approximation error ``|| f - U[alpha, eps] f ||_p``."""
    diff = f - gw_mean(f, alpha, eps)
    return lp_norm(diff, p)


def gw_constant(alpha: float, beta: float, grid: GridSpec,
                oversample: int = 8) -> WienerEstimate:
    """Measure-norm estimate for the error-ratio symbol of the pair.

    This is the constant in the subordination inequality; it does not
    depend on the scale ``eps`` because the ratio symbol is dilation
    invariant.
    """
    return wiener_norm(gw_ratio(alpha, beta), grid, oversample=oversample)


@dataclass(frozen=True)
class GWCase:
    label: str
    eps: float
    p: float
    lhs: float
    rhs: float
    ratio: float
    passed: bool


@dataclass(frozen=True)
class GWReport:
    alpha: float
    beta: float
    constant: float
    estimate: WienerEstimate
    cases: tuple[GWCase, ...]
    worst_ratio: float
    passed: bool


def gw_verify(alpha: float, beta: float, grid: GridSpec,
              suite: Optional[Sequence[TestFunction]] = None,
              eps_values: Sequence[float] = (1.0, 0.5, 0.1),
              p_values: Sequence[float] = (1.0, 2.0, math.inf),
              oversample: int = 8,
              tolerance: float = 1e-2,
              estimate: Optional[WienerEstimate] = None) -> GWReport:
    """Verify the error subordination inequality on a corpus.

    For every test function, scale, and exponent the two approximation
    errors are measured; a case passes when the error of the ``beta`` mean
    is at most ``constant * (1 + tolerance)`` times the error of the
    ``alpha`` mean.  Cases with right-hand side below ``1e-12 * (1 + lhs)``
    are skipped; if nothing remains, :class:`AllCasesSkippedError` is
    raised.  Pass a precomputed ``estimate`` to reuse a constant.
    """
    alpha = _check_alpha(alpha)
    beta = _check_alpha(beta)
    if estimate is None:
        estimate = gw_constant(alpha, beta, grid, oversample=oversample)
    constant = estimate.total
    if suite is None:
        suite = means_suite()
    cases = []
    for fn in suite:
        f = materialize(fn, grid)
        for eps in eps_values:
            for p in p_values:
                lhs = gw_error(f, beta, eps, p)
                rhs = gw_error(f, alpha, eps, p)
                if rhs <= 1e-12 * (1.0 + lhs):
                    continue
                ratio = lhs / rhs
                passed = ratio <= constant * (1.0 + tolerance)
                cases.append(GWCase(label=fn.label, eps=float(eps), p=float(p),
                                    lhs=lhs, rhs=rhs, ratio=ratio, passed=passed))
    if not cases:
        raise AllCasesSkippedError("no verification case had a usable right-hand side")
    worst = max(case.ratio for case in cases)
    return GWReport(alpha=alpha, beta=beta, constant=constant, estimate=estimate,
                    cases=tuple(cases), worst_ratio=worst,
                    passed=all(c.passed for c in cases))


# ---------------------------------------------------------------------------
# pinned reference constants
# ---------------------------------------------------------------------------

def _fixture_path() -> str:
    return os.path.join(os.path.dirname(__file__), "_fixtures", "gw_constants.json")


def _pair_key(alpha: float, beta: float) -> str:
    return f"{alpha:g},{beta:g}"


def load_pinned_constants() -> dict:
    """The reference constants shipped with the package, as a plain dict."""
    with open(_fixture_path(), "r", encoding="utf-8") as fh:
        return json.load(fh)


def pinned_constant(alpha: float, beta: float) -> float:
    """Reference constant for one exponent pair.

    Raises :class:`InvalidParameterError` for pairs without a pinned value.
    """
    data = load_pinned_constants()
    key = _pair_key(float(alpha), float(beta))
    try:
        return float(data["constants"][key])
    except KeyError:
        known = ", ".join(sorted(data["constants"]))
        raise InvalidParameterError(
            f"no pinned constant for pair ({alpha}, {beta}); known pairs: {known}") from None


def seed_pinned_constants(path: Optional[str] = None,
                          pairs: Sequence[tuple[float, float]] = DEFAULT_PAIRS) -> dict:
    """Recompute the reference constants on the oracle grid and write them out.

    Regeneration is deliberately manual (set ``SUBORD_SEED_FIXTURES=1`` when
    running the test suite, or call this directly): the shipped values are
    the baseline that future runs are compared against.
    """
    constants = {}
    for alpha, beta in pairs:
        est = gw_constant(alpha, beta, ORACLE_GRID, oversample=ORACLE_OVERSAMPLE)
        constants[_pair_key(alpha, beta)] = est.total
    data = {
        "grid": {"half_length": ORACLE_GRID.half_length, "size": ORACLE_GRID.size},
        "oversample": ORACLE_OVERSAMPLE,
        "constants": constants,
    }
    out = path or _fixture_path()
    os.makedirs(os.path.dirname(out), exist_ok=True)
    with open(out, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return data
