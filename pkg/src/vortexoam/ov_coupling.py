"""Optical-vortex transition matrix element.

The matrix element factorizes into an internal electric-dipole part and a
center-of-mass/photon part.  The dipole part is computed in spherical
components (q_x +- i q_y)/2 and q_z, each a cached radial integral times an
analytic angular integral; the center-of-mass part combines a photon ladder
factor, a radial overlap against J_l, an exact azimuthal winding delta and a
finite-length axial window replacing the axial momentum delta.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .beams import CylinderVolume, VortexBeam
from .errors import DomainError, NonConvergedError
from .matter import ComState, HydrogenicState, PhotonOccupation
from .quadrature import Tolerance, integrate_1d, integrate_semiinf
from .specfun import bessel_j, hydrogenic_radial, wigner_3j

__all__ = [
    "DipoleMatrixElement",
    "OvTransitionAmplitude",
    "dipole_matrix_element",
    "azimuthal_delta",
    "ov_com_photon_factor",
    "ov_matrix_element",
]


@dataclass(frozen=True)
class DipoleMatrixElement:
    """Spherical dipole components <f| . |i> between hydrogenic states.

    plus  = <(q_x + i q_y)/2>, nonzero only for m' = m + 1
    minus = <(q_x - i q_y)/2>, nonzero only for m' = m - 1
    z     = <q_z>,             nonzero only for m' = m
    All three vanish unless |l' - l| = 1.
    """

    plus: complex
    minus: complex
    z: complex

    def vector(self) -> np.ndarray:
        """Cartesian <(q_x, q_y, q_z)>."""
        qx = self.plus + self.minus
        qy = -1j * (self.plus - self.minus)
        return np.array([qx, qy, self.z])


@lru_cache(maxsize=256)
def _radial_dipole_integral(n_i: int, l_i: int, n_f: int, l_f: int) -> float:
    """int_0^inf R_{nf lf}(q) q R_{ni li}(q) q^2 dq at unit reduced mass."""

    def f(q):
        return hydrogenic_radial(n_f, l_f, q) * hydrogenic_radial(n_i, l_i, q) * q**3

    res = integrate_semiinf(f, Tolerance(1e-12, 1e-11, 48), scale=float(n_i * n_f))
    if not res.converged:
        raise NonConvergedError(
            f"radial dipole integral ({n_i},{l_i})->({n_f},{l_f}) did not converge"
        )
    return res.value.real


def _gaunt_with_dipole(l_f: int, m_f: int, mu_sph: int, l_i: int, m_i: int) -> float:
    """int Y_lf^mf* Y_1^mu Y_li^mi dOmega (Condon-Shortley harmonics)."""
    pref = (-1.0) ** m_f * math.sqrt(
        (2 * l_f + 1) * 3 * (2 * l_i + 1) / (4.0 * math.pi)
    )
    return (
        pref
        * wigner_3j(2 * l_f, 2, 2 * l_i, 0, 0, 0)
        * wigner_3j(2 * l_f, 2, 2 * l_i, -2 * m_f, 2 * mu_sph, 2 * m_i)
    )


def dipole_matrix_element(
    initial: HydrogenicState, final: HydrogenicState
) -> DipoleMatrixElement:
    """Electric-dipole spherical components between two hydrogenic states.

    Forbidden combinations (|dl| != 1 or |dm| > 1) come out as exact zeros,
    not small numbers: the angular factors are Wigner-3j based and vanish
    identically.
    """
    if initial.mu != final.mu:
        raise DomainError("initial and final states must share the reduced mass")
    # q sin(theta) e^{+-i phi} = -+ sqrt(8 pi/3) q Y_1^{+-1};  q cos(theta) = sqrt(4 pi/3) q Y_1^0
    c_trans = 0.5 * math.sqrt(8.0 * math.pi / 3.0)
    c_axial = math.sqrt(4.0 * math.pi / 3.0)
    plus = minus = z = 0.0
    if abs(final.l - initial.l) == 1:
        radial = _radial_dipole_integral(initial.n, initial.l, final.n, final.l)
        radial /= initial.mu
        if final.m == initial.m + 1:
            plus = -c_trans * radial * _gaunt_with_dipole(
                final.l, final.m, +1, initial.l, initial.m
            )
        if final.m == initial.m - 1:
            minus = c_trans * radial * _gaunt_with_dipole(
                final.l, final.m, -1, initial.l, initial.m
            )
        if final.m == initial.m:
            z = c_axial * radial * _gaunt_with_dipole(
                final.l, final.m, 0, initial.l, initial.m
            )
    return DipoleMatrixElement(complex(plus), complex(minus), complex(z))


def azimuthal_delta(winding_sum: int) -> float:
    """Exact azimuthal integral int_0^{2pi} e^{i*winding_sum*phi} dphi."""
    if winding_sum != int(winding_sum):
        raise DomainError("winding_sum must be an integer")
    return 2.0 * math.pi if winding_sum == 0 else 0.0


@dataclass(frozen=True)
class OvTransitionAmplitude:
    """Center-of-mass/photon factor of the optical matrix element.

    amplitude is exactly zero whenever either Kronecker delta fails.  The
    axial momentum delta is softened to the finite-length window
    l_z * sinc(kz_mismatch * l_z / 2); kz_mismatch is reported either way.
    """

    amplitude: complex
    channel: str
    delta_L_satisfied: bool
    delta_n_satisfied: bool
    kz_mismatch: float
    radial_overlap: complex = 0.0
    error_estimate: float = 0.0
    evaluations: int = 0
    converged: bool = True

    def __post_init__(self):
        if (
            not (self.delta_L_satisfied and self.delta_n_satisfied)
            and self.amplitude != 0
        ):
            raise DomainError("amplitude must vanish when a selection delta fails")


def _sinc(x: float) -> float:
    return 1.0 if x == 0.0 else math.sin(x) / x


def com_radial_overlap(
    beam: VortexBeam,
    com_i: ComState,
    com_f: ComState,
    r_max: float,
    tol: Tolerance | None = None,
):
    """int_0^{r_max} R_f*(rho) e^{i(K_R - K_R')rho} J_l(k_perp rho) R_i(rho) rho drho."""
    dk = com_i.K_R - com_f.K_R

    def f(rho):
        return (
            np.conj(com_f.radial_value(rho))
            * bessel_j(beam.l, beam.k_perp * rho)
            * com_i.radial_value(rho)
            * np.exp(1j * dk * rho)
            * rho
        )

    return integrate_1d(f, 0.0, r_max, tol)


def ov_com_photon_factor(
    beam: VortexBeam,
    com_i: ComState,
    com_f: ComState,
    n_i: PhotonOccupation,
    n_f: PhotonOccupation,
    channel: str,
    volume: CylinderVolume | None = None,
    tol: Tolerance | None = None,
) -> OvTransitionAmplitude:
    """<psi_R'; n_f | A(R) | psi_R; n_i> for one ladder channel.

    Absorption: L' = L + l, n_f = n_i - 1, mode amplitude -i E0/omega.
    Emission:   L' = L - l, n_f = n_i + 1, conjugate mode amplitude.
    """
    if beam.kind != "optical":
        raise DomainError("ov_com_photon_factor needs an optical beam")
    if channel not in ("absorption", "emission"):
        raise DomainError(f"unknown channel {channel!r}")
    if volume is None:
        volume = CylinderVolume.default_for(beam)

    if channel == "absorption":
        delta_l_ok = com_f.L == com_i.L + beam.l
        delta_n_ok = n_f.n == n_i.n - 1
        photon = math.sqrt(n_i.n)
        mismatch = com_f.K_z - com_i.K_z - beam.k_z
        mode_amp = -1j * beam.amplitude / beam.omega
        winding = com_i.L - com_f.L + beam.l
    else:
        delta_l_ok = com_f.L == com_i.L - beam.l
        delta_n_ok = n_f.n == n_i.n + 1
        photon = math.sqrt(n_i.n + 1)
        mismatch = com_f.K_z - com_i.K_z + beam.k_z
        mode_amp = 1j * beam.amplitude / beam.omega
        winding = com_i.L - com_f.L - beam.l

    if not (delta_l_ok and delta_n_ok) or photon == 0.0:
        return OvTransitionAmplitude(
            amplitude=0.0,
            channel=channel,
            delta_L_satisfied=delta_l_ok,
            delta_n_satisfied=delta_n_ok,
            kz_mismatch=mismatch,
        )

    overlap = com_radial_overlap(beam, com_i, com_f, volume.r_max, tol)
    window = volume.l_z * _sinc(0.5 * mismatch * volume.l_z)
    amp = mode_amp * photon * azimuthal_delta(winding) * overlap.value * window
    return OvTransitionAmplitude(
        amplitude=amp,
        channel=channel,
        delta_L_satisfied=delta_l_ok,
        delta_n_satisfied=delta_n_ok,
        kz_mismatch=mismatch,
        radial_overlap=overlap.value,
        error_estimate=overlap.error_estimate,
        evaluations=overlap.evaluations,
        converged=overlap.converged,
    )


def ov_matrix_element(
    beam: VortexBeam,
    internal_i: HydrogenicState,
    internal_f: HydrogenicState,
    com_i: ComState,
    com_f: ComState,
    n_i: PhotonOccupation,
    n_f: PhotonOccupation,
    volume: CylinderVolume | None = None,
    tol: Tolerance | None = None,
) -> complex:
    """Full optical-vortex matrix element for one transition.

    i mu (W_f - W_i) * (pol . <d>) * (center-of-mass/photon factor); the
    ladder channel is inferred from the photon numbers, and any photon
    change other than +-1 gives an exact zero.
    """
    dn = n_f.n - n_i.n
    if dn == -1:
        channel = "absorption"
    elif dn == 1:
        channel = "emission"
    else:
        return 0.0 + 0.0j

    dip = dipole_matrix_element(internal_i, internal_f)
    pol_dot_d = complex(np.asarray(beam.polarization, dtype=complex) @ dip.vector())
    if pol_dot_d == 0.0:
        return 0.0 + 0.0j

    com = ov_com_photon_factor(beam, com_i, com_f, n_i, n_f, channel, volume, tol)
    if not com.converged:
        raise NonConvergedError("center-of-mass overlap quadrature did not converge")
    mu = internal_i.mu
    prefactor = 1j * mu * (internal_f.energy - internal_i.energy)
    return prefactor * pol_dot_d * com.amplitude
