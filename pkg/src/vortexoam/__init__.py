"""Orbital-angular-momentum transition matrix elements and selection rules
for Bessel-mode optical and electron vortex beams."""

__version__ = "0.1.0"

from .beams import CylinderVolume, CylindricalPoint, VortexBeam
from .ev_coupling import (
    FixedGeometry,
    IntegratedGeometry,
    angular_oracle,
    ev_matrix_element,
    kernel_coefficients,
    kernel_fg,
    y_alpha,
)
from .ledge import (
    DensityOfStates,
    dichroism,
    edge_rate,
    enumerate_edge_transitions,
    transition_strength,
)
from .matter import (
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
from .ov_coupling import (
    DipoleMatrixElement,
    azimuthal_delta,
    dipole_matrix_element,
    ov_com_photon_factor,
    ov_matrix_element,
)
from .quadrature import IntegrationResult, Tolerance, integrate_1d, integrate_nd, riemann_oracle
from .specfun import (
    AngularMomentum,
    SphericalPoint,
    assoc_legendre,
    bessel_j,
    hydrogenic_radial,
    spherical_harmonic,
    wigner_3j,
)
