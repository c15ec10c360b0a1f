from __future__ import annotations

import math

import numpy as np
import pytest

from trinomial.binomial import char
from trinomial.quadrature import (
    QuadratureError,
    b_identity_check,
    b_reduction_chain_check,
    cos_power_expansion,
    fourier_decomposition_check,
    gf_by_integral,
    integrate_0_pi,
    z_by_integral,
)
from trinomial.triangle import build_triangle


def test_constant_integrates_to_pi() -> None:
    result = integrate_0_pi(lambda phi: np.ones_like(phi), tol=1e-12)
    assert abs(result.value - math.pi) < 1e-12
    assert result.converged


def test_pure_cosines_integrate_to_zero() -> None:
    for m in range(1, 9):
        result = integrate_0_pi(lambda phi, m=m: np.cos(m * phi), tol=1e-12)
        assert abs(result.value) < 1e-12, m


def test_cosine_squared() -> None:
    result = integrate_0_pi(lambda phi: np.cos(2 * phi) ** 2, tol=1e-12)
    assert abs(result.value - math.pi / 2) < 1e-12


def test_tolerance_floor() -> None:
    with pytest.raises(ValueError):
        integrate_0_pi(np.cos, tol=1e-14)


def test_budget_exhaustion_raises() -> None:
    # a peak far too sharp for 64 panels
    def sharp(phi: np.ndarray) -> np.ndarray:
        return 1.0 / (1.000001 - np.cos(phi))

    with pytest.raises(QuadratureError):
        integrate_0_pi(sharp, tol=1e-13 * 10, max_panels=64)


def test_panel_accounting() -> None:
    result = integrate_0_pi(lambda phi: np.ones_like(phi), tol=1e-12, base_panels=4)
    assert result.panels == 8  # converges on the very first doubling
    assert result.abs_error_estimate == 0.0


def test_z_by_integral_matches_exact_small() -> None:
    tri = build_triangle(10)
    for n in range(11):
        for lam in range(n + 1):
            exact = tri.coeff(n, n + lam)
            got = z_by_integral(n, lam).value
            assert abs(got - exact) <= 1e-9 * exact, (n, lam)


def test_z_by_integral_domain() -> None:
    with pytest.raises(ValueError):
        z_by_integral(5, 6)
    with pytest.raises(ValueError):
        z_by_integral(31, 0)
    with pytest.raises(ValueError):
        z_by_integral(4, -1)


def test_gf_by_integral_quarter() -> None:
    result = gf_by_integral(0.25, tol=1e-10)
    assert abs(result.value - 4.0 / math.sqrt(5.0)) < 1e-10


def test_gf_by_integral_sample_points() -> None:
    for x in (-0.9, -0.5, 0.0, 0.1, 0.25, 0.3):
        closed = 1.0 / math.sqrt(1.0 - 2.0 * x - 3.0 * x * x)
        result = gf_by_integral(x, tol=1e-10)
        assert abs(result.value - closed) <= 1e-10 * max(1.0, closed), x


def test_gf_by_integral_domain() -> None:
    for bad in (-1.0, 1.0 / 3.0, 0.5, -2.0):
        with pytest.raises(ValueError):
            gf_by_integral(bad)


def test_b_identity_spot_checks() -> None:
    for lam in range(5):
        assert b_identity_check(0.5, lam)
    assert b_identity_check(0.9, 8)


def test_b_identity_domain() -> None:
    with pytest.raises(ValueError):
        b_identity_check(0.0, 1)
    with pytest.raises(ValueError):
        b_identity_check(1.0, 1)
    with pytest.raises(ValueError):
        b_identity_check(0.5, -1)


def test_b_reduction_chain() -> None:
    assert b_reduction_chain_check(0.3, 6)
    assert b_reduction_chain_check(0.5, 8)
    with pytest.raises(ValueError):
        b_reduction_chain_check(0.3, 0)


def test_cos_power_expansion_small_cases() -> None:
    assert cos_power_expansion(0) == [1]
    assert cos_power_expansion(1) == [2]
    assert cos_power_expansion(2) == [2, 2]
    assert cos_power_expansion(3) == [2, 6]
    assert cos_power_expansion(4) == [2, 8, 6]
    assert cos_power_expansion(5) == [2, 10, 20]
    with pytest.raises(ValueError):
        cos_power_expansion(-1)


def test_cos_power_expansion_weights_sum_to_power_of_two() -> None:
    for alpha in range(21):
        assert sum(cos_power_expansion(alpha)) == 2**alpha


def test_cos_power_expansion_pointwise() -> None:
    # 2^a cos^a phi == sum of the weighted cosines, at angles with nothing
    # special about them
    for alpha in range(9):
        weights = cos_power_expansion(alpha)
        for phi in (0.3, 1.1, 2.9):
            lhs = (2.0 * math.cos(phi)) ** alpha
            rhs = sum(
                w * math.cos((alpha - 2 * j) * phi) for j, w in enumerate(weights)
            )
            assert abs(lhs - rhs) < 1e-12, (alpha, phi)


def test_exact_fourier_reconstruction() -> None:
    """Expanding (1 + 2 cos phi)^n through the binomial theorem and the
    cosine power reduction must reproduce the diagonal coefficients exactly:
    the cos(0) weight is p(n) and the cos(lam phi) weight is 2 z(n, lam).
    Pure integer arithmetic on both sides."""
    tri = build_triangle(18)
    for n in range(19):
        collected = [0] * (n + 1)
        for alpha in range(n + 1):
            c = char(n, alpha)
            for j, w in enumerate(cos_power_expansion(alpha)):
                collected[alpha - 2 * j] += c * w
        assert collected[0] == tri.coeff(n, n)
        for lam in range(1, n + 1):
            assert collected[lam] == 2 * tri.coeff(n, n + lam), (n, lam)


def test_fourier_decomposition_check_range() -> None:
    for n in range(13):
        assert fourier_decomposition_check(n)


def test_fourier_decomposition_domain() -> None:
    with pytest.raises(ValueError):
        fourier_decomposition_check(21)
    with pytest.raises(ValueError):
        fourier_decomposition_check(5, grid_points=1)
