"""Two-sample significance tests and density-plot data.

The Student-t p-value is computed from scratch via the regularized
incomplete beta function (continued fraction, modified Lentz), so the
package needs no statistics dependency. For t >= 0 and df = v,

    P(T > t) = 0.5 * I_x(v/2, 1/2)   with   x = v / (v + t^2)

so the two-tailed p-value is simply I_x(v/2, 1/2) evaluated at |t|.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

_MAX_ITER = 300
_CF_EPS = 1e-16
_FPMIN = 1e-300


def _betacf(a: float, b: float, x: float) -> float:
    """Continued fraction for the incomplete beta (modified Lentz)."""
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _FPMIN:
        d = _FPMIN
    d = 1.0 / d
    h = d
    for m in range(1, _MAX_ITER + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = 1.0 + aa / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = 1.0 + aa / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _CF_EPS:
            return h
    raise ArithmeticError(f"incomplete beta did not converge for a={a}, b={b}, x={x}")


def regularized_incomplete_beta(x: float, a: float, b: float) -> float:
    """I_x(a, b) for a, b > 0 and x in [0, 1], accurate to ~1e-14."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"x must be in [0, 1], got {x}")
    if a <= 0 or b <= 0:
        raise ValueError("a and b must be positive")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 1.0
    ln_front = (
        math.lgamma(a + b)
        - math.lgamma(a)
        - math.lgamma(b)
        + a * math.log(x)
        + b * math.log1p(-x)
    )
    front = math.exp(ln_front)
    # continued fraction converges fast on this side of the mean
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _betacf(a, b, x) / a
    return 1.0 - front * _betacf(b, a, 1.0 - x) / b


def student_t_sf(t: float, df: float) -> float:
    """P(T > t) for Student's t with df degrees of freedom."""
    if math.isnan(t) or math.isnan(df):
        return math.nan
    x = df / (df + t * t)
    tail = 0.5 * regularized_incomplete_beta(x, df / 2.0, 0.5)
    return tail if t >= 0 else 1.0 - tail


class TTestVariant(Enum):
    POOLED = "pooled"
    WELCH = "welch"


class NanPolicy(Enum):
    PROPAGATE = "propagate"
    OMIT = "omit"


@dataclass(frozen=True)
class TTestResult:
    statistic: float
    p_value: float
    df: float
    n_a: int
    n_b: int
    variant: TTestVariant
    nan_policy: NanPolicy


def ttest_two_tailed(
    a: Sequence[float],
    b: Sequence[float],
    variant: TTestVariant = TTestVariant.POOLED,
    nan_policy: NanPolicy = NanPolicy.PROPAGATE,
) -> TTestResult:
    """Independent two-sample t-test, two-tailed.

    POOLED assumes equal variances (df = n_a + n_b - 2); WELCH uses
    per-sample variances with Welch-Satterthwaite degrees of freedom.
    Under PROPAGATE any NaN input yields NaN statistic and p-value; under
    OMIT NaN values are dropped per sample before testing.
    """
    xa = np.asarray(a, dtype=np.float64)
    xb = np.asarray(b, dtype=np.float64)
    if xa.ndim != 1 or xb.ndim != 1:
        raise ValueError("samples must be one-dimensional")

    has_nan = bool(np.isnan(xa).any() or np.isnan(xb).any())
    if nan_policy is NanPolicy.OMIT:
        xa = xa[~np.isnan(xa)]
        xb = xb[~np.isnan(xb)]
        has_nan = False

    n_a, n_b = len(xa), len(xb)
    if n_a < 2 or n_b < 2:
        raise ValueError(
            f"each sample needs at least 2 values after nan handling "
            f"(got {n_a} and {n_b})"
        )

    if variant is TTestVariant.POOLED:
        df = float(n_a + n_b - 2)
    else:
        df = math.nan  # set below from the data

    if has_nan:
        return TTestResult(math.nan, math.nan, df, n_a, n_b, variant, nan_policy)

    mean_a = float(np.mean(xa))
    mean_b = float(np.mean(xb))
    var_a = float(np.var(xa, ddof=1))
    var_b = float(np.var(xb, ddof=1))

    if var_a == 0.0 and var_b == 0.0:
        detail = "equal means" if mean_a == mean_b else "different means"
        raise ValueError(f"both samples have zero variance ({detail}); statistic undefined")

    if variant is TTestVariant.POOLED:
        pooled = ((n_a - 1) * var_a + (n_b - 1) * var_b) / (n_a + n_b - 2)
        se = math.sqrt(pooled * (1.0 / n_a + 1.0 / n_b))
    else:
        sa = var_a / n_a
        sb = var_b / n_b
        se = math.sqrt(sa + sb)
        df = (sa + sb) ** 2 / (sa * sa / (n_a - 1) + sb * sb / (n_b - 1))

    statistic = (mean_a - mean_b) / se
    p_value = 2.0 * student_t_sf(abs(statistic), df)
    p_value = min(p_value, 1.0)
    return TTestResult(statistic, p_value, df, n_a, n_b, variant, nan_policy)


@dataclass(frozen=True)
class DensityEstimate:
    """Histogram-based density: ascending bin edges and per-bin density."""

    bin_edges: tuple[float, ...]
    densities: tuple[float, ...]

    def __post_init__(self):
        edges = self.bin_edges
        if len(edges) != len(self.densities) + 1:
            raise ValueError("need one more edge than density")
        if any(e2 <= e1 for e1, e2 in zip(edges, edges[1:])):
            raise ValueError("bin edges must be strictly ascending")
        if any(d < 0 for d in self.densities):
            raise ValueError("densities must be non-negative")


def density_histogram(values: Sequence[float], bins: int) -> DensityEstimate:
    """Equal-width histogram normalized so the densities integrate to 1.

    A single repeated value gets a unit-width support centered on it; the
    same fallback covers ranges too narrow for finite per-bin densities.
    """
    if bins < 1:
        raise ValueError(f"bins must be >= 1, got {bins}")
    x = np.asarray(values, dtype=np.float64)
    x = x[np.isfinite(x)]
    if x.size == 0:
        raise ValueError("need at least one finite value")
    lo, hi = float(x.min()), float(x.max())
    if (hi - lo) / bins < 1e-300:  # 1/width must stay below the float max
        center = 0.5 * (lo + hi)
        lo, hi = center - 0.5, center + 0.5
    counts, edges = np.histogram(x, bins=bins, range=(lo, hi))
    widths = np.diff(edges)
    densities = counts / (counts.sum() * widths)
    return DensityEstimate(tuple(float(e) for e in edges), tuple(float(d) for d in densities))


def density_to_csv(est: DensityEstimate) -> str:
    """``bin_left,bin_right,density`` rows for external plotting."""
    lines = ["bin_left,bin_right,density"]
    for left, right, dens in zip(est.bin_edges, est.bin_edges[1:], est.densities):
        lines.append(f"{left!r},{right!r},{dens!r}")
    return "".join(line + "\n" for line in lines)
