"""Bessel vortex modes for light and for free electrons.

Atomic units throughout (hbar = m_e = e = 1, c = 1/alpha).  The optical mode
is a transverse electric field E0 * J_l(k_perp*rho) * exp(i(k_z z + l phi
- omega t)) * pol; the electron mode is the same scalar profile with a
normalization constant N in place of E0.  Bessel modes are not square
integrable, so normalization lives on a finite cylinder (R_max, L_z).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .quadrature import Tolerance, integrate_1d
from .specfun import bessel_j

__all__ = [
    "SPEED_OF_LIGHT",
    "VortexBeam",
    "CylindricalPoint",
    "CylinderVolume",
    "ov_field",
    "ov_vector_potential",
    "ev_wavefunction",
    "ev_normalization",
    "helmholtz_residual",
    "azimuthal_oam_eigenvalue",
]

SPEED_OF_LIGHT = 137.035999084  # atomic units (1/alpha)


@dataclass(frozen=True)
class CylindricalPoint:
    rho: float
    phi: float
    z: float

    def __post_init__(self):
        if not (self.rho >= 0.0):
            raise DomainError(f"rho must be >= 0, got {self.rho}")


@dataclass(frozen=True)
class VortexBeam:
    """Bessel mode parameters.

    kind is "optical" or "electron".  omega may be omitted and is then fixed
    by the dispersion relation: omega = c*sqrt(k_perp^2 + k_z^2) for light,
    omega = (k_perp^2 + k_z^2)/2 for a nonrelativistic electron.  amplitude
    is E0 for light and the normalization constant N for electrons.
    """

    kind: str
    l: int
    k_perp: float
    k_z: float
    omega: float | None = None
    amplitude: float = 1.0
    polarization: tuple[float, float, float] = (1.0, 0.0, 0.0)

    def __post_init__(self):
        if self.kind not in ("optical", "electron"):
            raise DomainError(f"unknown beam kind {self.kind!r}")
        if not (self.k_perp > 0.0):
            raise DomainError("k_perp must be > 0")
        k2 = self.k_perp**2 + self.k_z**2
        expected = SPEED_OF_LIGHT * math.sqrt(k2) if self.kind == "optical" else 0.5 * k2
        if self.omega is None:
            object.__setattr__(self, "omega", expected)
        elif abs(self.omega - expected) > 1e-9 * expected:
            raise DomainError(
                f"omega = {self.omega} inconsistent with dispersion ({expected})"
            )
        pol = np.asarray(self.polarization, dtype=float)
        if pol.shape != (3,) or abs(float(pol @ pol) - 1.0) > 1e-9:
            raise DomainError("polarization must be a unit 3-vector")
        object.__setattr__(self, "polarization", tuple(float(c) for c in pol))

    @property
    def k_total(self) -> float:
        return math.hypot(self.k_perp, self.k_z)


@dataclass(frozen=True)
class CylinderVolume:
    """Finite normalization cylinder: radius r_max, axial length l_z."""

    r_max: float
    l_z: float

    def __post_init__(self):
        if not (self.r_max > 0.0 and self.l_z > 0.0):
            raise DomainError("cylinder volume must have r_max > 0 and l_z > 0")

    @classmethod
    def default_for(cls, beam: VortexBeam) -> "CylinderVolume":
        if beam.k_z == 0.0:
            raise DomainError("default l_z = 2*pi/k_z needs k_z != 0; pass l_z explicitly")
        return cls(r_max=20.0 / beam.k_perp, l_z=2.0 * math.pi / abs(beam.k_z))


def _mode_scalar(beam: VortexBeam, rho, phi, z, t: float):
    """Common scalar profile amplitude * J_l(k_perp rho) * phases."""
    return (
        beam.amplitude
        * bessel_j(beam.l, beam.k_perp * np.asarray(rho, dtype=float))
        * np.exp(1j * (beam.k_z * np.asarray(z) + beam.l * np.asarray(phi) - beam.omega * t))
    )


def ov_field(beam: VortexBeam, point: CylindricalPoint, t: float = 0.0) -> np.ndarray:
    """Optical vortex electric field at a point: complex 3-vector."""
    if beam.kind != "optical":
        raise DomainError("ov_field needs an optical beam")
    u = complex(_mode_scalar(beam, point.rho, point.phi, point.z, t))
    return u * np.asarray(beam.polarization, dtype=complex)


def ov_vector_potential(beam: VortexBeam, point: CylindricalPoint, t: float = 0.0) -> np.ndarray:
    """Transverse vector potential A = (-i/omega) * E."""
    return (-1j / beam.omega) * ov_field(beam, point, t)


def ev_wavefunction(beam: VortexBeam, point: CylindricalPoint, t: float = 0.0) -> complex:
    """Electron vortex wavefunction at a point."""
    if beam.kind != "electron":
        raise DomainError("ev_wavefunction needs an electron beam")
    return complex(_mode_scalar(beam, point.rho, point.phi, point.z, t))


def ev_normalization(
    l: int,
    k_perp: float,
    r_max: float,
    l_z: float,
    tol: Tolerance | None = None,
) -> float:
    """N making the mode unit-norm on the cylinder (r_max, l_z).

    N = [2 pi L_z * int_0^Rmax J_l(k_perp rho)^2 rho drho]^(-1/2).
    """
    if not (r_max > 0.0 and l_z > 0.0):
        raise DomainError("degenerate normalization volume")
    if not (k_perp > 0.0):
        raise DomainError("k_perp must be > 0")
    res = integrate_1d(
        lambda rho: bessel_j(l, k_perp * rho) ** 2 * rho, 0.0, r_max, tol
    )
    return 1.0 / math.sqrt(2.0 * math.pi * l_z * res.value.real)


def _mode_cartesian(beam: VortexBeam, x: float, y: float, z: float) -> complex:
    rho = math.hypot(x, y)
    phi = math.atan2(y, x)
    return complex(_mode_scalar(beam, rho, phi, z, 0.0))


def helmholtz_residual(beam: VortexBeam, point: CylindricalPoint, h: float) -> float:
    """Central-difference check that the scalar mode solves (lap + k^2)u = 0.

    Returns |(lap + k^2) u| / |k^2 u| estimated with second-order central
    differences of step h in Cartesian coordinates; expected O(h^2).
    """
    if h <= 0.0:
        raise DomainError("step h must be > 0")
    if beam.l != 0 and point.rho < 10.0 * h:
        raise DomainError(
            "relative residual indeterminate on the vortex core; move >= 10*h off axis"
        )
    x0 = point.rho * math.cos(point.phi)
    y0 = point.rho * math.sin(point.phi)
    z0 = point.z
    u0 = _mode_cartesian(beam, x0, y0, z0)
    lap = 0.0 + 0.0j
    for dx, dy, dz in ((h, 0.0, 0.0), (0.0, h, 0.0), (0.0, 0.0, h)):
        up = _mode_cartesian(beam, x0 + dx, y0 + dy, z0 + dz)
        dn = _mode_cartesian(beam, x0 - dx, y0 - dy, z0 - dz)
        lap += (up - 2.0 * u0 + dn) / (h * h)
    k2 = beam.k_perp**2 + beam.k_z**2
    return abs(lap + k2 * u0) / abs(k2 * u0)


def azimuthal_oam_eigenvalue(
    beam: VortexBeam, point: CylindricalPoint, t: float = 0.0, h: float = 1e-3
) -> complex:
    """(-i d/dphi u) / u by a fourth-order stencil; equals l for a pure mode."""
    vals = [
        complex(_mode_scalar(beam, point.rho, point.phi + k * h, point.z, t))
        for k in (-2, -1, 1, 2)
    ]
    u0 = complex(_mode_scalar(beam, point.rho, point.phi, point.z, t))
    if u0 == 0:
        raise DomainError("mode vanishes at the sample point")
    deriv = (vals[0] - 8.0 * vals[1] + 8.0 * vals[2] - vals[3]) / (12.0 * h)
    return -1j * deriv / u0
