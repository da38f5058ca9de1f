import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vortexoam.beams import CylindricalPoint
from vortexoam.errors import DomainError
from vortexoam.matter import (
    PROTON_MASS,
    AtomicSystem,
    BesselProfile,
    ComState,
    CoreState,
    HydrogenicState,
    PhotonOccupation,
    RingGaussianProfile,
    com_wavefunction,
    enumerate_core_states,
    hydrogenic_wavefunction,
)
from vortexoam.specfun import SphericalPoint, bessel_j


def cubature_norm(state, r_max, nr=120, nth=40, nphi=24):
    """Full 3-D norm of a hydrogenic state on a product grid (oracle)."""
    r_nodes, r_wts = np.polynomial.legendre.leggauss(nr)
    rs = 0.5 * r_max * (r_nodes + 1.0)
    rw = 0.5 * r_max * r_wts
    c_nodes, c_wts = np.polynomial.legendre.leggauss(nth)
    thetas = np.arccos(c_nodes)
    phis = (np.arange(nphi) + 0.5) * (2.0 * math.pi / nphi)
    total = 0.0
    for r, wr in zip(rs, rw):
        for th, wt in zip(thetas, c_wts):
            for ph in phis:
                psi = hydrogenic_wavefunction(state, SphericalPoint(r, th, ph))
                total += abs(psi) ** 2 * r * r * wr * wt
    return total * (2.0 * math.pi / nphi)


# ---------------------------------------------------------------------------
# AtomicSystem
# ---------------------------------------------------------------------------


def test_atomic_system_masses():
    sys = AtomicSystem()
    assert sys.total_mass == pytest.approx(1.0 + PROTON_MASS)
    assert sys.reduced_mass == pytest.approx(PROTON_MASS / (1.0 + PROTON_MASS))
    with pytest.raises(DomainError):
        AtomicSystem(m_e=-1.0)


# ---------------------------------------------------------------------------
# HydrogenicState
# ---------------------------------------------------------------------------


def test_hydrogenic_energy():
    assert HydrogenicState(1, 0, 0).energy == pytest.approx(-0.5)
    assert HydrogenicState(2, 1, 0).energy == pytest.approx(-0.125)
    mu = 0.9
    assert HydrogenicState(3, 0, 0, mu=mu).energy == pytest.approx(-mu / 18.0)


def test_hydrogenic_validation():
    for bad in ((0, 0, 0), (2, 2, 0), (2, 1, 2)):
        with pytest.raises(DomainError):
            HydrogenicState(*bad)
    with pytest.raises(DomainError):
        HydrogenicState(1, 0, 0, mu=0.0)


def test_ground_state_isotropy():
    st_ = HydrogenicState(1, 0, 0)
    vals = [
        hydrogenic_wavefunction(st_, SphericalPoint(1.2, th, ph))
        for th, ph in ((0.1, 0.0), (1.5, 2.0), (3.0, 5.5))
    ]
    assert all(v == pytest.approx(vals[0], rel=1e-13) for v in vals)


def test_wavefunction_norm_by_cubature():
    assert cubature_norm(HydrogenicState(1, 0, 0), 30.0) == pytest.approx(1.0, abs=1e-7)
    assert cubature_norm(HydrogenicState(2, 1, 1), 50.0) == pytest.approx(1.0, abs=1e-7)


def test_wavefunction_azimuthal_phase():
    st_ = HydrogenicState(3, 2, -2)
    delta = 0.83
    a = hydrogenic_wavefunction(st_, SphericalPoint(2.0, 1.1, 0.5))
    b = hydrogenic_wavefunction(st_, SphericalPoint(2.0, 1.1, 0.5 + delta))
    assert b == pytest.approx(a * np.exp(1j * st_.m * delta), rel=1e-12)


def test_wavefunction_reduced_mass_scaling():
    # mu-scaling keeps the norm; peak moves to q/mu
    st1 = HydrogenicState(1, 0, 0, mu=1.0)
    st2 = HydrogenicState(1, 0, 0, mu=2.0)
    p = SphericalPoint(0.7, 1.0, 0.0)
    scaled = SphericalPoint(0.35, 1.0, 0.0)
    assert hydrogenic_wavefunction(st2, scaled) == pytest.approx(
        2.0**1.5 * hydrogenic_wavefunction(st1, p), rel=1e-12
    )


# ---------------------------------------------------------------------------
# ComState
# ---------------------------------------------------------------------------


def test_ring_profile_peak_and_norm():
    prof = RingGaussianProfile(rho0=1.8, sigma=0.4)
    rs = np.linspace(0.0, 5.0, 2001)
    vals = prof(rs)
    assert rs[np.argmax(vals)] == pytest.approx(1.8, abs=5e-3)
    norm = 2.0 * math.pi * np.trapezoid(vals**2 * rs, rs)
    assert norm == pytest.approx(1.0, abs=1e-6)


def test_ring_profile_validation():
    with pytest.raises(DomainError):
        RingGaussianProfile(-1.0, 0.5)
    with pytest.raises(DomainError):
        RingGaussianProfile(1.0, 0.0)


def test_com_wavefunction_modulus_independent_of_phi_z():
    state = ComState(K_R=0.3, K_z=1.0, L=2, profile=RingGaussianProfile(1.8, 0.4))
    base = abs(com_wavefunction(state, CylindricalPoint(1.5, 0.0, 0.0)))
    for phi, z in ((0.9, 0.0), (2.0, -4.0), (5.9, 2.5)):
        assert abs(com_wavefunction(state, CylindricalPoint(1.5, phi, z))) == pytest.approx(
            base, rel=1e-12
        )


def test_com_wavefunction_uniform_when_structureless():
    state = ComState(K_R=0.0, K_z=0.0, L=0, profile=RingGaussianProfile(1.8, 0.4))
    a = com_wavefunction(state, CylindricalPoint(1.1, 0.0, 0.0))
    b = com_wavefunction(state, CylindricalPoint(1.1, 2.7, 13.0))
    assert a == pytest.approx(b, rel=1e-13)


def test_com_bessel_profile():
    state = ComState(K_R=0.0, K_z=0.0, L=2, profile=BesselProfile(k_r=1.5))
    val = com_wavefunction(state, CylindricalPoint(2.0, 0.0, 0.0))
    assert val == pytest.approx(bessel_j(2, 3.0), rel=1e-12)
    with pytest.raises(DomainError):
        BesselProfile(k_r=0.0)


def test_com_plane_wave_factor():
    # the literal radial plane-wave factor e^{i K_R rho} is kept
    state = ComState(K_R=0.7, K_z=0.0, L=0, profile=RingGaussianProfile(1.8, 0.4))
    rho = 1.3
    val = com_wavefunction(state, CylindricalPoint(rho, 0.0, 0.0))
    expected = state.profile(rho) * np.exp(1j * 0.7 * rho)
    assert val == pytest.approx(expected, rel=1e-13)


def test_com_k_total():
    state = ComState(K_R=3.0, K_z=4.0, L=0, profile=RingGaussianProfile(1.0, 0.3))
    assert state.k_total == pytest.approx(5.0)
    with pytest.raises(DomainError):
        ComState(K_R=-1.0, K_z=0.0, L=0, profile=RingGaussianProfile(1.0, 0.3))


@given(m=st.integers(-2, 2), delta=st.floats(0.0, 2.0 * math.pi))
@settings(max_examples=40, deadline=None)
def test_com_azimuthal_phase_property(m, delta):
    state = ComState(K_R=0.0, K_z=0.0, L=m, profile=RingGaussianProfile(1.8, 0.4))
    a = com_wavefunction(state, CylindricalPoint(1.5, 0.3, 0.0))
    b = com_wavefunction(state, CylindricalPoint(1.5, 0.3 + delta, 0.0))
    assert b == pytest.approx(a * np.exp(1j * m * delta), rel=1e-11, abs=1e-12)


# ---------------------------------------------------------------------------
# CoreState / PhotonOccupation
# ---------------------------------------------------------------------------


def test_core_state_enumeration_counts():
    assert [s.two_mj for s in enumerate_core_states("2p_half")] == [-1, 1]
    assert len(enumerate_core_states("3d_fivehalf")) == 6
    assert [s.two_mj for s in enumerate_core_states("2p_threehalf")] == [-3, -1, 1, 3]


def test_core_state_validation():
    CoreState("3d_threehalf", 3)
    with pytest.raises(DomainError):
        CoreState("3d_threehalf", 5)
    with pytest.raises(DomainError):
        CoreState("3d_threehalf", 2)  # parity
    with pytest.raises(DomainError):
        CoreState("4f_sevenhalf", 1)
    with pytest.raises(DomainError):
        enumerate_core_states("bogus")


def test_core_state_labels():
    assert CoreState("2p_half", -1).label() == "2p_half(-1/2)"
    assert CoreState("3d_fivehalf", 5).j == 2.5


def test_photon_occupation():
    assert PhotonOccupation(0).n == 0
    with pytest.raises(DomainError):
        PhotonOccupation(-1)
