"""Quantum states of the two-particle system.

Internal (electronic-type) motion uses hydrogenic bound states in
reduced-mass-scaled atomic units; the gross motion uses cylindrical
center-of-mass states carrying their own orbital angular momentum L about
the beam axis.  Core/valence states for the L-edge model are labeled by
(shell, m_j) only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .beams import CylindricalPoint
from .errors import DomainError
from .specfun import SphericalPoint, bessel_j, hydrogenic_radial, sph_harm_cs

__all__ = [
    "PROTON_MASS",
    "AtomicSystem",
    "HydrogenicState",
    "RingGaussianProfile",
    "BesselProfile",
    "ComState",
    "CoreState",
    "PhotonOccupation",
    "SHELLS",
    "hydrogenic_wavefunction",
    "com_wavefunction",
    "enumerate_core_states",
]

PROTON_MASS = 1836.15267343  # atomic units


@dataclass(frozen=True)
class AtomicSystem:
    m_e: float = 1.0
    m_p: float = PROTON_MASS

    def __post_init__(self):
        if self.m_e <= 0 or self.m_p <= 0:
            raise DomainError("particle masses must be positive")

    @property
    def total_mass(self) -> float:
        return self.m_e + self.m_p

    @property
    def reduced_mass(self) -> float:
        return self.m_e * self.m_p / (self.m_e + self.m_p)


@dataclass(frozen=True)
class HydrogenicState:
    """Bound state |n, l, m> of the internal motion.

    mu rescales lengths and energies; mu = 1 gives the familiar
    infinite-nuclear-mass values.
    """

    n: int
    l: int
    m: int
    mu: float = 1.0

    def __post_init__(self):
        if self.n < 1 or not (0 <= self.l < self.n) or abs(self.m) > self.l:
            raise DomainError(
                f"invalid hydrogenic quantum numbers n={self.n}, l={self.l}, m={self.m}"
            )
        if self.mu <= 0:
            raise DomainError("reduced mass must be positive")

    @property
    def energy(self) -> float:
        return -self.mu / (2.0 * self.n**2)


def hydrogenic_wavefunction(state: HydrogenicState, point: SphericalPoint) -> complex:
    """psi_{nlm}(q, theta, phi), unit norm over all space."""
    radial = state.mu**1.5 * hydrogenic_radial(state.n, state.l, state.mu * point.r)
    return radial * sph_harm_cs(state.l, state.m, point.theta, point.phi)


@dataclass(frozen=True)
class RingGaussianProfile:
    """exp(-(rho - rho0)^2 / (4 sigma^2)), normalized in the transverse plane:
    2 pi int |R|^2 rho drho = 1 (closed form via erf)."""

    rho0: float
    sigma: float

    def __post_init__(self):
        if self.rho0 < 0 or self.sigma <= 0:
            raise DomainError("ring profile needs rho0 >= 0 and sigma > 0")

    @property
    def norm(self) -> float:
        s, r0 = self.sigma, self.rho0
        i2 = s * s * math.exp(-r0 * r0 / (2 * s * s)) + r0 * s * math.sqrt(
            math.pi / 2.0
        ) * (1.0 + math.erf(r0 / (math.sqrt(2.0) * s)))
        return 1.0 / math.sqrt(2.0 * math.pi * i2)

    def __call__(self, rho):
        rho = np.asarray(rho, dtype=float)
        val = self.norm * np.exp(-((rho - self.rho0) ** 2) / (4.0 * self.sigma**2))
        return float(val) if val.ndim == 0 else val


@dataclass(frozen=True)
class BesselProfile:
    """J_L(k_r * rho) radial eigenfunction alternative; amplitude 1."""

    k_r: float

    def __post_init__(self):
        if self.k_r <= 0:
            raise DomainError("bessel profile needs k_r > 0")


@dataclass(frozen=True)
class ComState:
    """Center-of-mass state: radial profile times plane-wave factors.

    The literal product form R(rho) e^{i K_R rho} e^{i K_z z} e^{i L phi} is
    kept even though e^{i K_R rho} is not a cylindrical eigenfunction; set
    K_R = 0 and use a BesselProfile to recover the textbook eigenmode.
    """

    K_R: float
    K_z: float
    L: int
    profile: RingGaussianProfile | BesselProfile

    def __post_init__(self):
        if self.K_R < 0:
            raise DomainError("K_R must be >= 0")

    @property
    def k_total(self) -> float:
        return math.hypot(self.K_R, self.K_z)

    def radial_value(self, rho):
        if isinstance(self.profile, BesselProfile):
            return bessel_j(self.L, self.profile.k_r * np.asarray(rho, dtype=float))
        return self.profile(rho)


def com_wavefunction(state: ComState, point: CylindricalPoint) -> complex:
    return complex(
        state.radial_value(point.rho)
        * np.exp(1j * (state.K_R * point.rho + state.K_z * point.z + state.L * point.phi))
    )


# shell -> (doubled j, orbital l)
SHELLS = {
    "2p_half": (1, 1),
    "2p_threehalf": (3, 1),
    "3d_threehalf": (3, 2),
    "3d_fivehalf": (5, 2),
}


@dataclass(frozen=True)
class CoreState:
    """jj-coupled core/valence state labeled by shell and doubled m_j."""

    shell: str
    two_mj: int

    def __post_init__(self):
        if self.shell not in SHELLS:
            raise DomainError(f"unknown shell {self.shell!r}")
        two_j = SHELLS[self.shell][0]
        if abs(self.two_mj) > two_j or (two_j - self.two_mj) % 2 != 0:
            raise DomainError(
                f"m_j = {self.two_mj}/2 invalid for shell {self.shell} (j = {two_j}/2)"
            )

    @property
    def two_j(self) -> int:
        return SHELLS[self.shell][0]

    @property
    def j(self) -> float:
        return 0.5 * self.two_j

    @property
    def m_j(self) -> float:
        return 0.5 * self.two_mj

    def label(self) -> str:
        sign = "+" if self.two_mj >= 0 else "-"
        return f"{self.shell}({sign}{abs(self.two_mj)}/2)"


def enumerate_core_states(shell: str) -> list[CoreState]:
    """All 2j+1 states of a shell, m_j ascending."""
    if shell not in SHELLS:
        raise DomainError(f"unknown shell {shell!r}")
    two_j = SHELLS[shell][0]
    return [CoreState(shell, two_mj) for two_mj in range(-two_j, two_j + 1, 2)]


@dataclass(frozen=True)
class PhotonOccupation:
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise DomainError("photon number must be >= 0")
