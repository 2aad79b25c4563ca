"""Comparison principle for convolution operators on the line.

Two Fourier multipliers ``m1`` and ``m2`` satisfy

    || T_{m1} f ||_p  <=  K * || T_{m2} f ||_p      (all p in [1, inf])

whenever the ratio ``psi = m1 / m2`` is the transform of a finite measure
with norm at most ``K`` — the operator comparison is inherited from the
scalar factorization ``m1 = psi * m2``.  This module builds the ratio symbol
(filling removable zeros of the denominator), estimates ``K`` through
:func:`subord.measures.wiener_norm`, and verifies the resulting inequality on
a corpus of test functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import (
    AllCasesSkippedError,
    FillUndefinedError,
    InvalidParameterError,
    NestedZerosViolatedError,
)
from .fourier_core import FREQUENCY, SPACE, GridSpec, SampledFunction, inverse_ft, forward_ft, lp_norm
from .measures import WienerEstimate, wiener_norm
from .testkit import TestFunction, materialize, means_suite

__all__ = [
    "Multiplier",
    "constant",
    "gw_symbol",
    "one_minus_gw_symbol",
    "gw_ratio",
    "gaussian_ft",
    "exp_abs_ft",
    "REGISTRY",
    "named_multiplier",
    "apply_multiplier",
    "ratio_multiplier",
    "ComparisonSetup",
    "setup_comparison",
    "ComparisonCase",
    "ComparisonReport",
    "verify_comparison",
]

#: relative level below which a denominator sample counts as a zero
ZERO_LEVEL = 1e-9


@dataclass(frozen=True, eq=False)
class Multiplier:
    """A frequency symbol ``y -> m(y)``, callable on float arrays.

    ``kind`` records how the symbol was built: ``"registry"`` for closed
    forms, ``"sampled"`` for interpolated data, ``"piecewise"`` for ratio
    symbols with filled zeros, ``"composite"`` for sums and products.
    """

    kind: str
    label: str
    params: dict
    _fn: Callable[[np.ndarray], np.ndarray] = field(repr=False)

    def __call__(self, y) -> np.ndarray:
        y = np.asarray(y, dtype=float)
        return np.asarray(self._fn(y), dtype=np.complex128)

    def on_grid(self, grid: GridSpec) -> SampledFunction:
        """Samples of the symbol on the dual grid."""
        return SampledFunction(grid, self(grid.dual_nodes()), FREQUENCY)

    def _combine(self, other, op, opname: str) -> "Multiplier":
        if isinstance(other, Multiplier):
            f, g = self._fn, other._fn
            fn = lambda y: op(np.asarray(f(y), dtype=np.complex128),
                              np.asarray(g(y), dtype=np.complex128))
            label = f"({self.label}{opname}{other.label})"
        else:
            c = complex(other)
            f = self._fn
            fn = lambda y: op(np.asarray(f(y), dtype=np.complex128), c)
            label = f"({self.label}{opname}{c})"
        return Multiplier(kind="composite", label=label, params={}, _fn=fn)

    def __add__(self, other):
        return self._combine(other, lambda a, b: a + b, "+")

    __radd__ = __add__

    def __mul__(self, other):
        return self._combine(other, lambda a, b: a * b, "*")

    __rmul__ = __mul__


# ---------------------------------------------------------------------------
# registry of closed-form symbols
# ---------------------------------------------------------------------------

def constant(value: complex = 1.0) -> Multiplier:
    """The constant symbol ``m(y) = value``."""
    c = complex(value)
    return Multiplier(
        kind="registry", label=f"constant({c.real:g})" if c.imag == 0 else f"constant({c})",
        params={"value": c},
        _fn=lambda y: np.full(np.asarray(y, dtype=float).shape, c, dtype=np.complex128))


def _check_exponent(alpha: float) -> float:
    alpha = float(alpha)
    if not (math.isfinite(alpha) and alpha > 0):
        raise InvalidParameterError(f"exponent must be finite and positive, got {alpha}")
    return alpha


def gw_symbol(alpha: float) -> Multiplier:
    """``exp(-|y|^alpha)``: the symbol of the generalized smoothing kernel."""
    alpha = _check_exponent(alpha)
    return Multiplier(
        kind="registry", label=f"gw_symbol(alpha={alpha:g})", params={"alpha": alpha},
        _fn=lambda y: np.exp(-np.abs(y) ** alpha).astype(np.complex128))


def one_minus_gw_symbol(alpha: float) -> Multiplier:
    """``1 - exp(-|y|^alpha)``, computed as ``-expm1`` so small ``y`` stay accurate."""
    alpha = _check_exponent(alpha)
    return Multiplier(
        kind="registry", label=f"one_minus_gw_symbol(alpha={alpha:g})",
        params={"alpha": alpha},
        _fn=lambda y: (-np.expm1(-np.abs(y) ** alpha)).astype(np.complex128))


def gw_ratio(alpha: float, beta: float) -> Multiplier:
    """``(1 - exp(-|y|^beta)) / (1 - exp(-|y|^alpha))`` for ``beta > alpha``.

    The singularity at the origin is removable (the ratio behaves like
    ``|y|^(beta-alpha)``), so the symbol is pinned to its limit 0 there.  At
    the far end both numerator and denominator saturate to exactly 1.
    """
    alpha = _check_exponent(alpha)
    beta = _check_exponent(beta)
    if not beta > alpha:
        raise InvalidParameterError(
            f"ratio symbol requires beta > alpha, got alpha={alpha}, beta={beta}")

    def fn(y: np.ndarray) -> np.ndarray:
        ay = np.abs(np.asarray(y, dtype=float))
        num = -np.expm1(-(ay**beta))
        den = -np.expm1(-(ay**alpha))
        out = np.zeros_like(den)
        nz = den != 0.0
        out[nz] = num[nz] / den[nz]
        return out.astype(np.complex128)

    return Multiplier(kind="registry", label=f"gw_ratio(alpha={alpha:g},beta={beta:g})",
                      params={"alpha": alpha, "beta": beta}, _fn=fn)


def gaussian_ft() -> Multiplier:
    """``sqrt(pi) exp(-y^2/4)``: transform of the unit gaussian."""
    return Multiplier(
        kind="registry", label="gaussian_ft", params={},
        _fn=lambda y: (np.sqrt(np.pi) * np.exp(-(np.asarray(y, dtype=float) ** 2) / 4.0)
                       ).astype(np.complex128))


def exp_abs_ft() -> Multiplier:
    """``2 / (1 + y^2)``: transform of ``exp(-|x|)``."""
    return Multiplier(
        kind="registry", label="exp_abs_ft", params={},
        _fn=lambda y: (2.0 / (1.0 + np.asarray(y, dtype=float) ** 2)).astype(np.complex128))


REGISTRY: dict[str, Callable[..., Multiplier]] = {
    "constant": constant,
    "gw_symbol": gw_symbol,
    "one_minus_gw_symbol": one_minus_gw_symbol,
    "gw_ratio": gw_ratio,
    "gaussian_ft": gaussian_ft,
    "exp_abs_ft": exp_abs_ft,
}


def named_multiplier(name: str, **params) -> Multiplier:
    """Build a registry symbol from its name, e.g. for command-line use."""
    if name not in REGISTRY:
        known = ", ".join(sorted(REGISTRY))
        raise InvalidParameterError(f"unknown multiplier {name!r}; known: {known}")
    try:
        return REGISTRY[name](**params)
    except TypeError:
        raise InvalidParameterError(
            f"multiplier {name!r} does not accept parameters {sorted(params)}") from None


# ---------------------------------------------------------------------------
# operators and ratio symbols
# ---------------------------------------------------------------------------

def apply_multiplier(m: Multiplier, f: SampledFunction) -> SampledFunction:
    """The convolution operator with symbol ``m``: multiply the transform."""
    if f.side != SPACE:
        raise InvalidParameterError("apply_multiplier expects a space-side function")
    spectrum = forward_ft(f)
    product = SampledFunction(f.grid, m(f.grid.dual_nodes()) * spectrum.values, FREQUENCY)
    return inverse_ft(product)


def _masked_runs(mask: np.ndarray) -> list[tuple[int, int]]:
    # contiguous [start, stop) runs of True
    runs = []
    idx = np.flatnonzero(mask)
    if idx.size == 0:
        return runs
    start = prev = idx[0]
    for i in idx[1:]:
        if i != prev + 1:
            runs.append((start, prev + 1))
            start = i
        prev = i
    runs.append((start, prev + 1))
    return runs


def ratio_multiplier(numerator: Multiplier, denominator: Multiplier, grid: GridSpec,
                     fill: Optional[complex] = None, ztol: float = ZERO_LEVEL) -> Multiplier:
    """The ratio symbol ``numerator / denominator`` with zeros filled.

    Denominator samples below ``ztol`` times its sup over the dual grid
    count as zeros.  Every zero node must also be a zero of the numerator
    (:class:`NestedZerosViolatedError` otherwise), each contiguous zero run
    must have unmasked neighbors on both sides (:class:`FillUndefinedError`
    otherwise), and the run is filled with the mean of the two neighboring
    ratio values — or with the explicit ``fill`` value when one is given.

    The returned symbol applies the same threshold pointwise wherever it is
    evaluated, so refined grids see the filled value near the zero instead
    of a blown-up quotient.
    """
    y0 = grid.dual_nodes()
    v1 = numerator(y0)
    v2 = denominator(y0)
    sup1 = float(np.abs(v1).max())
    sup2 = float(np.abs(v2).max())
    if sup2 == 0.0:
        raise InvalidParameterError("denominator symbol vanishes identically on the dual grid")
    mask = np.abs(v2) <= ztol * sup2

    fill_centers = np.empty(0)
    fill_values = np.empty(0, dtype=np.complex128)
    if mask.any():
        bad = mask & (np.abs(v1) > ztol * max(sup1, 1e-300))
        if bad.any():
            where = y0[bad]
            raise NestedZerosViolatedError(
                f"denominator {denominator.label} vanishes at y={where[:5]} where "
                f"numerator {numerator.label} does not; no finite ratio exists there")
        runs = _masked_runs(mask)
        centers, values = [], []
        for start, stop in runs:
            if start == 0 or stop == grid.size:
                if fill is None:
                    raise FillUndefinedError(
                        f"zero run of {denominator.label} touches the dual window edge; "
                        "no neighboring ratio values to fill from")
                neighbor_mean = complex(fill)
            elif fill is not None:
                neighbor_mean = complex(fill)
            else:
                left = v1[start - 1] / v2[start - 1]
                right = v1[stop] / v2[stop]
                neighbor_mean = 0.5 * (left + right)
            centers.append(0.5 * (y0[start] + y0[stop - 1]))
            values.append(neighbor_mean)
        fill_centers = np.asarray(centers, dtype=float)
        fill_values = np.asarray(values, dtype=np.complex128)

    threshold = ztol * sup2
    scalar_fill = None if fill is None else complex(fill)
    num_label, den_label = numerator.label, denominator.label

    def fn(y: np.ndarray) -> np.ndarray:
        y = np.asarray(y, dtype=float)
        a = numerator(y)
        b = denominator(y)
        out = np.empty_like(a)
        masked = np.abs(b) <= threshold
        ok = ~masked
        out[ok] = a[ok] / b[ok]
        if masked.any():
            if scalar_fill is not None:
                out[masked] = scalar_fill
            elif fill_centers.size:
                pick = np.abs(y[masked, None] - fill_centers[None, :]).argmin(axis=1)
                out[masked] = fill_values[pick]
            else:
                raise FillUndefinedError(
                    f"{den_label} fell below its zero threshold off the construction "
                    "grid and no fill value is on record")
        return out

    return Multiplier(kind="piecewise", label=f"({num_label})/({den_label})",
                      params={"ztol": ztol}, _fn=fn)


# ---------------------------------------------------------------------------
# comparison setups and verification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ComparisonSetup:
    """A validated comparison ``||T1 f||_p <= constant * ||T2 f||_p``."""

    multiplier1: Multiplier
    multiplier2: Multiplier
    ratio: Multiplier
    estimate: WienerEstimate
    grid: GridSpec

    @property
    def constant(self) -> float:
        return self.estimate.total


def setup_comparison(multiplier1: Multiplier, multiplier2: Multiplier, grid: GridSpec,
                     oversample: int = 8, fill: Optional[complex] = None,
                     const_at_infinity: Optional[complex] = None) -> ComparisonSetup:
    """Build the ratio symbol and estimate the comparison constant."""
    ratio = ratio_multiplier(multiplier1, multiplier2, grid, fill=fill)
    estimate = wiener_norm(ratio, grid, oversample=oversample,
                           const_at_infinity=const_at_infinity)
    return ComparisonSetup(multiplier1=multiplier1, multiplier2=multiplier2,
                           ratio=ratio, estimate=estimate, grid=grid)


@dataclass(frozen=True)
class ComparisonCase:
    label: str
    p: float
    lhs: float
    rhs: float
    ratio: float
    passed: bool


@dataclass(frozen=True)
class ComparisonReport:
    cases: tuple[ComparisonCase, ...]
    constant: float
    worst_ratio: float
    passed: bool


def verify_comparison(setup: ComparisonSetup, suite: Optional[Sequence[TestFunction]] = None,
                      p_values: Sequence[float] = (1.0, 2.0, math.inf),
                      tolerance: float = 1e-2) -> ComparisonReport:
    """Check the comparison inequality on a corpus of test functions.

    For each function and each exponent the two operator outputs are
    compared in norm; a case passes when ``lhs <= constant * rhs * (1 +
    tolerance)``.  Cases whose right side is below ``1e-12 * (1 + lhs)``
    carry no information and are skipped; if every case is skipped,
    :class:`AllCasesSkippedError` is raised.
    """
    if suite is None:
        suite = means_suite()
    grid = setup.grid
    cases = []
    for fn in suite:
        f = materialize(fn, grid)
        out1 = apply_multiplier(setup.multiplier1, f)
        out2 = apply_multiplier(setup.multiplier2, f)
        for p in p_values:
            lhs = lp_norm(out1, p)
            rhs = lp_norm(out2, p)
            if rhs <= 1e-12 * (1.0 + lhs):
                continue
            ratio = lhs / rhs
            passed = ratio <= setup.constant * (1.0 + tolerance)
            cases.append(ComparisonCase(label=fn.label, p=float(p), lhs=lhs, rhs=rhs,
                                        ratio=ratio, passed=passed))
    if not cases:
        raise AllCasesSkippedError("no comparison case had a usable right-hand side")
    worst = max(case.ratio for case in cases)
    return ComparisonReport(cases=tuple(cases), constant=setup.constant,
                            worst_ratio=worst, passed=all(c.passed for c in cases))
