"""L2/L3 edge transitions, golden-rule rates and the dichroism signal.

Core and valence states are labeled (shell, m_j) only; the angular part of
each many-electron state is modeled by a single Y_j^{m_j} factor, so the
per-transition strength is the squared Wigner-Eckart m-dependence
|3j(j', 1, j; -m_j', mu, m_j)|^2 times a common (configurable) radial
factor.  A beam with winding +-1 drives m_j' = m_j +- 1; the rate for each
edge is (2 pi / hbar) |C|^2 (or |D|^2) times the density-of-states weighted
strength sum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError
from .ev_coupling import FixedGeometry, IntegratedGeometry, KernelCoefficients, kernel_coefficients
from .matter import SHELLS, CoreState, enumerate_core_states
from .quadrature import Tolerance
from .specfun import wigner_3j

__all__ = [
    "EDGE_SHELLS",
    "EdgeTransition",
    "DensityOfStates",
    "DichroismResult",
    "enumerate_edge_transitions",
    "jj_dipole_strength",
    "transition_strength",
    "edge_rate",
    "dichroism",
    "edge_kernel",
    "selection_rule_kernel",
]

# edge -> (initial shell, final shell); 2p3/2 -> 3d3/2 is triangle-allowed
# but not part of this two-channel model
EDGE_SHELLS = {
    "L2": ("2p_half", "3d_threehalf"),
    "L3": ("2p_threehalf", "3d_fivehalf"),
}


def jj_dipole_strength(
    initial: CoreState, final: CoreState, mu_sph: int, radial_factor: float = 1.0
) -> float:
    """|<j' m_j'| T^1_mu |j m_j>|^2 with the reduced matrix element set to
    radial_factor.  m-sum violations give exact zeros."""
    if mu_sph not in (-1, 0, 1):
        raise DomainError("dipole spherical component must be -1, 0 or +1")
    threej = wigner_3j(
        final.two_j, 2, initial.two_j, -final.two_mj, 2 * mu_sph, initial.two_mj
    )
    return (radial_factor * threej) ** 2


@dataclass(frozen=True)
class EdgeTransition:
    edge: str
    initial: CoreState
    final: CoreState
    beam_l: int
    strength: float

    def __post_init__(self):
        if self.edge not in EDGE_SHELLS:
            raise DomainError(f"unknown edge {self.edge!r}")
        if self.beam_l not in (+1, -1):
            raise DomainError("beam_l must be +1 or -1")
        ishell, fshell = EDGE_SHELLS[self.edge]
        if (self.initial.shell, self.final.shell) != (ishell, fshell):
            raise DomainError(
                f"edge {self.edge} couples {ishell} -> {fshell}, got "
                f"{self.initial.shell} -> {self.final.shell}"
            )
        if self.final.two_mj - self.initial.two_mj != 2 * self.beam_l:
            raise DomainError("transition must satisfy m_j' = m_j + beam_l")
        if self.strength < 0:
            raise DomainError("strength must be >= 0")


def transition_strength(t: EdgeTransition, radial_factor: float = 1.0) -> float:
    """Strength of one edge transition; mirrored pairs are exactly equal."""
    return jj_dipole_strength(t.initial, t.final, t.beam_l, radial_factor)


def enumerate_edge_transitions(beam_l: int, radial_factor: float = 1.0) -> list[EdgeTransition]:
    """All allowed L2/L3 transitions for one beam winding.

    Exactly 2 from L2 and 4 from L3 (the final-shell |m_j'| <= j' cut), in
    (edge, m_j) ascending order.
    """
    if beam_l not in (+1, -1):
        raise DomainError("beam_l must be +1 or -1")
    out = []
    for edge in ("L2", "L3"):
        ishell, fshell = EDGE_SHELLS[edge]
        two_jf = SHELLS[fshell][0]
        for init in enumerate_core_states(ishell):
            two_mj_f = init.two_mj + 2 * beam_l
            if abs(two_mj_f) > two_jf:
                continue
            fin = CoreState(fshell, two_mj_f)
            out.append(
                EdgeTransition(
                    edge=edge,
                    initial=init,
                    final=fin,
                    beam_l=beam_l,
                    strength=jj_dipole_strength(init, fin, beam_l, radial_factor),
                )
            )
    return out


@dataclass(frozen=True)
class DensityOfStates:
    """Non-negative weight per final (shell, doubled m_j)."""

    weights: dict

    def __post_init__(self):
        clean = {}
        for (shell, two_mj), w in self.weights.items():
            CoreState(shell, two_mj)  # validates the label
            if w < 0:
                raise DomainError(f"negative DOS weight for {shell}, m_j={two_mj}/2")
            clean[(shell, int(two_mj))] = float(w)
        object.__setattr__(self, "weights", clean)

    def weight(self, state: CoreState) -> float:
        key = (state.shell, state.two_mj)
        if key not in self.weights:
            raise DomainError(f"DOS entry missing for {state.label()}")
        return self.weights[key]

    @classmethod
    def uniform(cls, value: float = 1.0) -> "DensityOfStates":
        w = {}
        for shell in ("3d_threehalf", "3d_fivehalf"):
            for st in enumerate_core_states(shell):
                w[(shell, st.two_mj)] = value
        return cls(w)

    def mirrored(self) -> "DensityOfStates":
        return DensityOfStates(
            {(shell, -two_mj): w for (shell, two_mj), w in self.weights.items()}
        )

    def scaled(self, c: float) -> "DensityOfStates":
        return DensityOfStates(
            {k: c * w for k, w in self.weights.items()}
        )


def edge_kernel(
    geometry: FixedGeometry | IntegratedGeometry, tol: Tolerance | None = None
) -> KernelCoefficients:
    """Kernel coefficients for the fixed-atom l = +-1 -> l' = 0 channels.

    C is taken from the (l=+1, l'=0) evaluation and D from (l=-1, l'=0), so
    a single object carries the coefficient each beam winding actually uses.
    """
    plus_side = kernel_coefficients(+1, 0, geometry, tol)
    minus_side = kernel_coefficients(-1, 0, geometry, tol)
    return KernelCoefficients(
        C=plus_side.C,
        D=minus_side.D,
        I=plus_side.I,
        kappa=plus_side.kappa,
        lam=plus_side.lam,
        eta=plus_side.eta,
        n=1,
        mode=plus_side.mode,
        y_minus=plus_side.y_minus,
        y_zero=plus_side.y_zero,
        y_plus=plus_side.y_plus,
        error_estimate=plus_side.error_estimate + minus_side.error_estimate,
        converged=plus_side.converged and minus_side.converged,
    )


def selection_rule_kernel() -> KernelCoefficients:
    """|C| = |D| = 1 stand-in for reproducing the table logic alone."""
    return KernelCoefficients(
        C=1.0, D=1.0, I=1.0, kappa=1.0, lam=0.0, eta=1.0, n=1, mode="unit"
    )


def edge_rate(
    edge: str,
    beam_l: int,
    dos: DensityOfStates,
    kernel: KernelCoefficients,
    radial_factor: float = 1.0,
) -> float:
    """(2 pi / hbar) |C or D|^2 * sum_t strength(t) * dos(final).

    Fixed-atom limit (L = L' = 0): the kernel's C drives beam_l = +1 and D
    drives beam_l = -1.
    """
    if edge not in EDGE_SHELLS:
        raise DomainError(f"unknown edge {edge!r}")
    coeff = kernel.C if beam_l == +1 else kernel.D
    total = 0.0
    for t in enumerate_edge_transitions(beam_l, radial_factor):
        if t.edge != edge:
            continue
        total += t.strength * dos.weight(t.final)
    return 2.0 * math.pi * abs(coeff) ** 2 * total


@dataclass(frozen=True)
class DichroismResult:
    gamma_plus: float
    gamma_minus: float
    dichroism: float
    per_edge: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.dichroism != self.gamma_plus - self.gamma_minus:
            raise DomainError("dichroism must equal gamma_plus - gamma_minus")


def dichroism(
    dos: DensityOfStates,
    kernel: KernelCoefficients,
    radial_factor: float = 1.0,
) -> DichroismResult:
    """Total rates for l = +1 and l = -1 over both edges, and the difference.

    Vanishes (to rounding) for an m_j-symmetric density of states whenever
    |C| = |D|; any remaining signal comes from the state occupancies alone.
    """
    per_edge = {}
    gp = gm = 0.0
    for edge in ("L2", "L3"):
        ep = edge_rate(edge, +1, dos, kernel, radial_factor)
        em = edge_rate(edge, -1, dos, kernel, radial_factor)
        per_edge[edge] = {"gamma_plus": ep, "gamma_minus": em, "dichroism": ep - em}
        gp += ep
        gm += em
    return DichroismResult(
        gamma_plus=gp, gamma_minus=gm, dichroism=gp - gm, per_edge=per_edge
    )
