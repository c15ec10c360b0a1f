"""Float verification of the integral representations.

Everything exact lives elsewhere; this module exists to check that the
integral formulas

    z(n, lam) = (1/pi) * Int_0^pi cos(lam phi) (1 + 2 cos phi)^n dphi
    P(x)      = (1/pi) * Int_0^pi dphi / (1 - x - 2 x cos phi)
    Int_0^pi cos(lam phi) / (1 - 2 b cos phi + b^2) dphi
              = pi b^lam / (1 - b^2)

reproduce the exact numbers to floating tolerance.  All integrands are
smooth and even-periodic, for which the composite trapezoidal rule
converges spectrally under panel doubling, so the rule is deliberately
plain: double panels until two successive estimates agree.

n is capped at 30: the first integrand reaches 3^n, and beyond that a
double carries too few bits for the comparison to mean much.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .triangle import build_triangle

__all__ = [
    "QuadratureResult",
    "QuadratureError",
    "integrate_0_pi",
    "z_by_integral",
    "fourier_decomposition_check",
    "cos_power_expansion",
    "gf_by_integral",
    "b_identity_check",
    "b_reduction_chain_check",
]

MAX_PANELS = 2**20
MIN_TOL = 1e-13


class QuadratureError(RuntimeError):
    """Panel budget exhausted, or a verified identity failed to verify."""


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    abs_error_estimate: float
    panels: int
    converged: bool


def integrate_0_pi(
    f: Callable[[np.ndarray], np.ndarray],
    tol: float = 1e-9,
    max_panels: int = MAX_PANELS,
    base_panels: int = 8,
) -> QuadratureResult:
    """Trapezoidal estimate of Int_0^pi f, panels doubling until the last
    two estimates differ by less than tol (absolute).

    f must accept a numpy array of angles.  Previous function values are
    reused: each doubling only evaluates the new midpoints.  Raises
    QuadratureError if the budget runs out; the integrands this package
    feeds in converge long before that.
    """
    if tol < MIN_TOL:
        raise ValueError(f"tol {tol} below supported minimum {MIN_TOL}")
    if base_panels < 1 or max_panels < 2 * base_panels:
        raise ValueError("need base_panels >= 1 and max_panels >= 2 * base_panels")
    panels = base_panels
    angles = np.linspace(0.0, math.pi, panels + 1)
    values = np.asarray(f(angles), dtype=float)
    estimate = float((math.pi / panels) * (values.sum() - 0.5 * (values[0] + values[-1])))
    while 2 * panels <= max_panels:
        step = math.pi / panels
        midpoints = (np.arange(panels) + 0.5) * step
        refined = 0.5 * estimate + (0.5 * step) * float(
            np.asarray(f(midpoints), dtype=float).sum()
        )
        panels *= 2
        difference = abs(refined - estimate)
        estimate = refined
        if difference < tol:
            return QuadratureResult(estimate, difference, panels, True)
    raise QuadratureError(
        f"no convergence to {tol} within {max_panels} panels (last estimate {estimate})"
    )


def z_by_integral(n: int, lam: int, tol: float = 1e-9) -> QuadratureResult:
    """z(n, lam) as (1/pi) Int_0^pi cos(lam phi) (1 + 2 cos phi)^n dphi.

    The returned value estimates z itself (the 1/pi is applied).  tol is
    relative to the integrand scale 3^n; the integrand is a cosine
    polynomial of degree n + lam, so the trapezoidal sums become exact
    once the panel count clears the degree, and the achieved error is
    roundoff-level.
    """
    if not 0 <= lam <= n <= 30:
        raise ValueError(f"need 0 <= lam <= n <= 30, got lam={lam}, n={n}")
    scale = max(1.0, 3.0**n)

    def f(phi: np.ndarray) -> np.ndarray:
        return np.cos(lam * phi) * (1.0 + 2.0 * np.cos(phi)) ** n

    raw = integrate_0_pi(f, tol=tol * scale)
    return QuadratureResult(
        raw.value / math.pi,
        raw.abs_error_estimate / math.pi,
        raw.panels,
        raw.converged,
    )


def fourier_decomposition_check(
    n: int, tol: float = 1e-9, grid_points: int = 64
) -> bool:
    """Check (1 + 2 cos phi)^n = p(n) + 2 sum_lam z(n, lam) cos(lam phi)
    pointwise on a uniform angle grid.

    The right side is reconstructed from the exact triangle; agreement is
    required to tol relative to the local magnitude (absolute where the
    left side vanishes).
    """
    if not 0 <= n <= 20:
        raise ValueError(f"need 0 <= n <= 20, got {n}")
    if grid_points < 2:
        raise ValueError("need at least two grid points")
    tri = build_triangle(n)
    diag = [tri.coeff(n, n + lam) for lam in range(n + 1)]
    for phi in np.linspace(0.0, math.pi, grid_points):
        lhs = (1.0 + 2.0 * math.cos(phi)) ** n
        terms = [float(diag[0])]
        terms += [2.0 * diag[lam] * math.cos(lam * phi) for lam in range(1, n + 1)]
        rhs = math.fsum(terms)
        if abs(lhs - rhs) > tol * max(1.0, abs(lhs)):
            return False
    return True


def cos_power_expansion(alpha: int) -> list[int]:
    """Integer weights m_j with 2^alpha cos^alpha phi = sum_j m_j cos((alpha - 2j) phi).

    m_j = 2 C(alpha, j), except that the j = alpha/2 entry (the constant
    term, present only for even alpha) is C(alpha, alpha/2) taken once.
    The weights sum to 2^alpha (set phi = 0).
    """
    if alpha < 0:
        raise ValueError(f"alpha must be >= 0, got {alpha}")
    weights = []
    for j in range(alpha // 2 + 1):
        c = 2 * math.comb(alpha, j)
        if alpha == 2 * j:  # cos(0 phi): fold the halves together once
            c //= 2
        weights.append(c)
    return weights


def _closed_P(x: float) -> float:
    return 1.0 / math.sqrt(1.0 - 2.0 * x - 3.0 * x * x)


def gf_by_integral(x: float, tol: float = 1e-9) -> QuadratureResult:
    """P(x) as (1/pi) Int_0^pi dphi / (1 - x - 2 x cos phi), for -1 < x < 1/3.

    Besides the quadrature, the same value is recomputed from the arccos
    antiderivative

        F(phi) = arccos((cos phi - k) / (1 - k cos phi)) / sqrt(1 - k^2),
        k = 2x / (1 - x),

    evaluated at the endpoints, and both are compared against the closed
    form 1 / sqrt(1 - 2x - 3x^2).  Disagreement raises QuadratureError.
    """
    if not -1.0 < x < 1.0 / 3.0:
        raise ValueError(f"need -1 < x < 1/3, got {x}")

    def f(phi: np.ndarray) -> np.ndarray:
        return 1.0 / (1.0 - x - 2.0 * x * np.cos(phi))

    raw = integrate_0_pi(f, tol=tol)
    value = raw.value / math.pi
    closed = _closed_P(x)

    k = 2.0 * x / (1.0 - x)

    def arc(phi: float) -> float:
        return math.acos((math.cos(phi) - k) / (1.0 - k * math.cos(phi)))

    antiderivative = (arc(math.pi) - arc(0.0)) / math.sqrt(1.0 - k * k)
    by_antiderivative = antiderivative / ((1.0 - x) * math.pi)

    if abs(value - closed) > tol * max(1.0, abs(closed)):
        raise QuadratureError(
            f"quadrature {value} vs closed form {closed} at x={x}"
        )
    if abs(by_antiderivative - closed) > 1e-12 * max(1.0, abs(closed)):
        raise QuadratureError(
            f"antiderivative route {by_antiderivative} vs closed form {closed} at x={x}"
        )
    return QuadratureResult(value, raw.abs_error_estimate / math.pi, raw.panels, raw.converged)


def _poisson_integral(b: float, lam: int, tol: float) -> QuadratureResult:
    def f(phi: np.ndarray) -> np.ndarray:
        return np.cos(lam * phi) / (1.0 - 2.0 * b * np.cos(phi) + b * b)

    return integrate_0_pi(f, tol=tol)


def b_identity_check(b: float, lam: int, tol: float = 1e-9) -> bool:
    """Check Int_0^pi cos(lam phi) / (1 - 2b cos phi + b^2) dphi
    equals pi b^lam / (1 - b^2), for 0 < b < 1."""
    if not 0.0 < b < 1.0:
        raise ValueError(f"need 0 < b < 1, got {b}")
    if lam < 0:
        raise ValueError(f"lam must be >= 0, got {lam}")
    closed = math.pi * b**lam / (1.0 - b * b)
    result = _poisson_integral(b, lam, tol / 4.0)
    return abs(result.value - closed) <= tol * max(1.0, abs(closed))


def b_reduction_chain_check(b: float, max_lambda: int, tol: float = 1e-9) -> bool:
    """Check the three-term reduction I(lam+1) = ((1 + b^2)/b) I(lam) - I(lam-1)
    on quadrature values of I(lam) = Int_0^pi cos(lam phi)/(1 - 2b cos phi + b^2).

    Also anchors the chain: I(0) = pi / (1 - b^2) and
    (1 + b^2) I(0) - 2 b I(1) = pi.
    """
    if not 0.0 < b < 1.0:
        raise ValueError(f"need 0 < b < 1, got {b}")
    if max_lambda < 1:
        raise ValueError(f"max_lambda must be >= 1, got {max_lambda}")
    values = [
        _poisson_integral(b, lam, tol / 4.0).value for lam in range(max_lambda + 1)
    ]
    scale = max(1.0, values[0])
    if abs(values[0] - math.pi / (1.0 - b * b)) > tol * scale:
        return False
    if abs((1.0 + b * b) * values[0] - 2.0 * b * values[1] - math.pi) > tol * scale:
        return False
    ratio = (1.0 + b * b) / b
    for lam in range(1, max_lambda):
        predicted = ratio * values[lam] - values[lam - 1]
        if abs(values[lam + 1] - predicted) > tol * max(1.0, ratio) * scale:
            return False
    return True
