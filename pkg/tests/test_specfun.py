import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vortexoam.errors import DomainError
from vortexoam.specfun import (
    AngularMomentum,
    SphericalPoint,
    assoc_legendre,
    bessel_j,
    hydrogenic_radial,
    spherical_harmonic,
    wigner_3j,
)


# ---------------------------------------------------------------------------
# independent oracles
# ---------------------------------------------------------------------------


def bessel_series_oracle(l, x, terms=80):
    """Plain ascending power series; good to ~1e-14 for x <= 10."""
    term = (0.5 * x) ** l / math.factorial(l)
    total = 0.0
    for k in range(terms):
        total += term
        term *= -(0.25 * x * x) / ((k + 1.0) * (k + l + 1.0))
    return total


def racah_3j_oracle(two_j1, two_j2, two_j3, two_m1, two_m2, two_m3):
    """Direct Racah sum in plain float arithmetic (doubled arguments)."""
    if two_m1 + two_m2 + two_m3 != 0:
        return 0.0
    if not (abs(two_j1 - two_j2) <= two_j3 <= two_j1 + two_j2):
        return 0.0
    f = math.factorial
    j1pj2mj3 = (two_j1 + two_j2 - two_j3) // 2
    j1mm1 = (two_j1 - two_m1) // 2
    j2pm2 = (two_j2 + two_m2) // 2
    delta = math.sqrt(
        f(j1pj2mj3)
        * f((two_j1 - two_j2 + two_j3) // 2)
        * f((-two_j1 + two_j2 + two_j3) // 2)
        / f((two_j1 + two_j2 + two_j3) // 2 + 1)
    )
    norm = math.sqrt(
        f((two_j1 + two_m1) // 2)
        * f(j1mm1)
        * f(j2pm2)
        * f((two_j2 - two_m2) // 2)
        * f((two_j3 + two_m3) // 2)
        * f((two_j3 - two_m3) // 2)
    )
    k_lo = max(0, (two_j2 - two_j3 - two_m1) // 2, (two_j1 - two_j3 + two_m2) // 2)
    k_hi = min(j1pj2mj3, j1mm1, j2pm2)
    total = 0.0
    for k in range(k_lo, k_hi + 1):
        total += (-1.0) ** k / (
            f(k)
            * f(j1pj2mj3 - k)
            * f(j1mm1 - k)
            * f(j2pm2 - k)
            * f((two_j3 - two_j2 + two_m1) // 2 + k)
            * f((two_j3 - two_j1 - two_m2) // 2 + k)
        )
    phase = (-1.0) ** ((two_j1 - two_j2 - two_m3) // 2)
    return phase * delta * norm * total


def sphere_quadrature(f, n_theta=64, n_phi=64):
    """Gauss-Legendre in cos(theta) x midpoint in phi over the unit sphere."""
    nodes, wts = np.polynomial.legendre.leggauss(n_theta)
    theta = np.arccos(nodes)[:, None]
    phi = ((np.arange(n_phi) + 0.5) * (2.0 * math.pi / n_phi))[None, :]
    vals = f(theta, phi)
    return complex(np.sum(vals * wts[:, None]) * (2.0 * math.pi / n_phi))


def simpson_radial(f, a, b, n=4000):
    xs = np.linspace(a, b, 2 * n + 1)
    ys = f(xs)
    h = (b - a) / (2 * n)
    return (h / 3.0) * (ys[0] + ys[-1] + 4.0 * ys[1:-1:2].sum() + 2.0 * ys[2:-1:2].sum())


# ---------------------------------------------------------------------------
# bessel_j
# ---------------------------------------------------------------------------


def test_bessel_at_origin():
    assert bessel_j(0, 0.0) == 1.0
    assert bessel_j(1, 0.0) == 0.0
    assert bessel_j(5, 0.0) == 0.0


def test_bessel_first_zero_from_series_oracle():
    # bisect the series oracle for the first zero of J_0
    a, b = 2.0, 3.0
    assert bessel_series_oracle(0, a) > 0 > bessel_series_oracle(0, b)
    for _ in range(100):
        mid = 0.5 * (a + b)
        if bessel_series_oracle(0, a) * bessel_series_oracle(0, mid) <= 0:
            b = mid
        else:
            a = mid
    zero = 0.5 * (a + b)
    assert zero == pytest.approx(2.404825557695773, abs=1e-12)
    assert abs(bessel_j(0, zero)) < 1e-10


def test_bessel_matches_series_oracle_on_grid():
    # the float series oracle itself is solid only up to x ~ 8 (cancellation)
    for l in (0, 1, 2, 5, 9):
        for x in np.linspace(0.01, 8.0, 40):
            ref = bessel_series_oracle(l, x)
            assert bessel_j(l, x) == pytest.approx(ref, rel=1e-12, abs=1e-14)


def bessel_integral_oracle(l, x, panels=200000):
    """(1/pi) int_0^pi cos(l t - x sin t) dt by midpoint rule.

    All odd endpoint derivatives vanish, so the rule converges spectrally
    once the oscillations are resolved; good to ~1e-14 for x <= 1e3.
    """
    t = (np.arange(panels) + 0.5) * (math.pi / panels)
    return float(np.cos(l * t - x * np.sin(t)).mean())


def test_bessel_large_argument_against_integral_oracle():
    for x in (50.0, 300.0, 999.0):
        for l in (0, 1, 5):
            ref = bessel_integral_oracle(l, x)
            assert bessel_j(l, x) == pytest.approx(ref, rel=1e-12, abs=1e-13)


def test_bessel_large_argument_recurrence_consistency():
    # downward-recurrence values must satisfy the three-term recurrence
    for x in (50.0, 300.0, 999.0):
        for l in (0, 3, 10):
            lhs = bessel_j(l - 1, x) + bessel_j(l + 1, x)
            rhs = 2.0 * l / x * bessel_j(l, x)
            assert lhs == pytest.approx(rhs, abs=1e-10 * max(1.0, abs(bessel_j(l, x))))


def test_bessel_vectorized_matches_scalar():
    # batched evaluation shares one recurrence start order, so agreement is
    # to rounding, not bitwise
    xs = np.array([0.0, 0.5, 3.0, 12.0, 400.0])
    vec = bessel_j(2, xs)
    for x, v in zip(xs, vec):
        assert v == pytest.approx(bessel_j(2, float(x)), rel=1e-13, abs=1e-15)


def test_bessel_rejects_non_finite():
    with pytest.raises(DomainError):
        bessel_j(0, math.nan)
    with pytest.raises(DomainError):
        bessel_j(1, math.inf)


@given(l=st.integers(0, 8), x=st.floats(-40.0, 40.0, allow_nan=False))
@settings(max_examples=60, deadline=None)
def test_bessel_negative_order_reflection(l, x):
    assert bessel_j(-l, x) == pytest.approx((-1.0) ** l * bessel_j(l, x), abs=1e-13)


# ---------------------------------------------------------------------------
# assoc_legendre
# ---------------------------------------------------------------------------


def test_legendre_low_orders():
    assert assoc_legendre(0, 0, 0.3) == 1.0
    for x in (-0.9, 0.0, 0.55):
        assert assoc_legendre(1, 0, x) == pytest.approx(x, abs=1e-15)
    x = 0.5
    assert assoc_legendre(2, 1, x) == pytest.approx(-3.0 * x * math.sqrt(1 - x * x), rel=1e-14)


def test_legendre_negative_m():
    # P_l^{-m} = (-1)^m (l-m)!/(l+m)! P_l^m
    x = 0.37
    for l, m in ((2, 1), (3, 2), (5, 4)):
        expected = (-1.0) ** m * math.factorial(l - m) / math.factorial(l + m) * assoc_legendre(l, m, x)
        assert assoc_legendre(l, -m, x) == pytest.approx(expected, rel=1e-13)


def test_legendre_domain_errors():
    with pytest.raises(DomainError):
        assoc_legendre(2, 1, 1.5)
    with pytest.raises(DomainError):
        assoc_legendre(1, 2, 0.0)


def test_legendre_high_order_stable():
    # recurrence should stay finite and match the Rodrigues parity at l = 50
    val = assoc_legendre(50, 3, 0.2)
    assert math.isfinite(val)
    assert assoc_legendre(50, 3, -0.2) == pytest.approx(-val, rel=1e-10)


# ---------------------------------------------------------------------------
# spherical_harmonic
# ---------------------------------------------------------------------------


def test_harmonic_constant_mode():
    assert spherical_harmonic(0, 0, 0.7, 1.3) == pytest.approx(1.0 / math.sqrt(4 * math.pi))


@given(
    l=st.integers(0, 6),
    data=st.data(),
    theta=st.floats(0.01, math.pi - 0.01),
    phi=st.floats(0.0, 2 * math.pi - 1e-9),
)
@settings(max_examples=100, deadline=None)
def test_harmonic_conjugation_identity(l, data, theta, phi):
    m = data.draw(st.integers(-l, l))
    lhs = (-1.0) ** (l - m) * spherical_harmonic(l, -m, theta, phi)
    rhs = complex(spherical_harmonic(l, m, theta, phi)).conjugate()
    assert lhs == pytest.approx(rhs, abs=1e-12)


def test_harmonic_unit_norm_by_cubature():
    val = sphere_quadrature(
        lambda th, ph: np.abs(spherical_harmonic(2, 1, th, ph)) ** 2
    )
    assert val.real == pytest.approx(1.0, abs=1e-8)
    val = sphere_quadrature(
        lambda th, ph: np.abs(spherical_harmonic(3, -2, th, ph)) ** 2
    )
    assert val.real == pytest.approx(1.0, abs=1e-8)


# ---------------------------------------------------------------------------
# hydrogenic_radial
# ---------------------------------------------------------------------------


def test_radial_normalization_by_simpson():
    for n, l in ((1, 0), (2, 0), (2, 1), (3, 2), (5, 3)):
        val = simpson_radial(
            lambda q: hydrogenic_radial(n, l, q) ** 2 * q**2, 0.0, 60.0 * n / 2
        )
        assert val == pytest.approx(1.0, abs=1e-8)


def test_radial_short_distance_behavior():
    assert hydrogenic_radial(2, 1, 0.0) == 0.0
    assert hydrogenic_radial(3, 2, 0.0) == 0.0
    assert hydrogenic_radial(1, 0, 0.0) == pytest.approx(2.0)


def test_radial_same_l_orthogonality():
    val = simpson_radial(
        lambda q: hydrogenic_radial(2, 0, q) * hydrogenic_radial(3, 0, q) * q**2,
        0.0,
        150.0,
        n=12000,
    )
    assert val == pytest.approx(0.0, abs=1e-8)


def test_radial_invalid_quantum_numbers():
    with pytest.raises(DomainError):
        hydrogenic_radial(1, 1, 0.5)
    with pytest.raises(DomainError):
        hydrogenic_radial(0, 0, 0.5)
    with pytest.raises(DomainError):
        hydrogenic_radial(2, 1, -0.1)


# ---------------------------------------------------------------------------
# wigner_3j
# ---------------------------------------------------------------------------


def test_3j_known_value():
    assert wigner_3j(2, 2, 0, 0, 0, 0) == pytest.approx(-1.0 / math.sqrt(3.0), rel=1e-14)


def test_3j_m_sum_violation_returns_zero():
    assert wigner_3j(2, 2, 2, 2, 2, 2) == 0.0


def test_3j_triangle_violation_returns_zero():
    assert wigner_3j(2, 2, 8, 0, 0, 0) == 0.0


def test_3j_half_integer_parity_zero():
    # j = 3/2 with integer m is inconsistent
    assert wigner_3j(3, 2, 1, 0, 0, 0) == 0.0


def test_3j_negative_j_raises():
    with pytest.raises(DomainError):
        wigner_3j(-2, 2, 2, 0, 0, 0)


def test_3j_against_racah_oracle():
    rng = np.random.default_rng(11)
    checked = 0
    while checked < 120:
        two_j1 = int(rng.integers(0, 9))
        two_j2 = int(rng.integers(0, 9))
        two_j3 = int(rng.integers(abs(two_j1 - two_j2), two_j1 + two_j2 + 1))
        if (two_j1 + two_j2 + two_j3) % 2:
            continue
        two_m1 = int(rng.integers(-two_j1, two_j1 + 1))
        if (two_j1 - two_m1) % 2:
            continue
        two_m2 = int(rng.integers(-two_j2, two_j2 + 1))
        if (two_j2 - two_m2) % 2:
            continue
        two_m3 = -two_m1 - two_m2
        if abs(two_m3) > two_j3:
            continue
        ours = wigner_3j(two_j1, two_j2, two_j3, two_m1, two_m2, two_m3)
        ref = racah_3j_oracle(two_j1, two_j2, two_j3, two_m1, two_m2, two_m3)
        assert ours == pytest.approx(ref, rel=1e-10, abs=1e-13)
        checked += 1


@given(
    two_j1=st.integers(0, 6),
    two_j2=st.integers(0, 6),
    data=st.data(),
)
@settings(max_examples=80, deadline=None)
def test_3j_column_swap_sign(two_j1, two_j2, data):
    two_j3 = data.draw(st.integers(abs(two_j1 - two_j2), two_j1 + two_j2))
    if (two_j1 + two_j2 + two_j3) % 2:
        two_j3 += 1
    if two_j3 > two_j1 + two_j2:
        return
    two_m1 = data.draw(st.integers(-two_j1, two_j1))
    two_m2 = data.draw(st.integers(-two_j2, two_j2))
    if (two_j1 - two_m1) % 2 or (two_j2 - two_m2) % 2:
        return
    two_m3 = -two_m1 - two_m2
    if abs(two_m3) > two_j3:
        return
    swapped = wigner_3j(two_j2, two_j1, two_j3, two_m2, two_m1, two_m3)
    phase = (-1.0) ** ((two_j1 + two_j2 + two_j3) // 2)
    original = wigner_3j(two_j1, two_j2, two_j3, two_m1, two_m2, two_m3)
    assert swapped == pytest.approx(phase * original, abs=1e-14)


# ---------------------------------------------------------------------------
# domain types
# ---------------------------------------------------------------------------


def test_angular_momentum_validation():
    am = AngularMomentum(3, -1)
    assert am.j == 1.5 and am.m == -0.5
    with pytest.raises(DomainError):
        AngularMomentum(2, 3)
    with pytest.raises(DomainError):
        AngularMomentum(2, 1)  # parity mismatch
    with pytest.raises(DomainError):
        AngularMomentum(-2, 0)


def test_spherical_point_validation():
    SphericalPoint(1.0, 0.5, 3.0)
    with pytest.raises(DomainError):
        SphericalPoint(-1.0, 0.5, 3.0)
    with pytest.raises(DomainError):
        SphericalPoint(1.0, 4.0, 3.0)
    with pytest.raises(DomainError):
        SphericalPoint(1.0, 0.5, -0.1)
