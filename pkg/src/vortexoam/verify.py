"""Invariant suite behind the `verify` subcommand.

One check per documented invariant, each deterministic (fixed seeds, fixed
grids).  Checks return a one-line detail string and raise AssertionError on
violation; run_checks collects (name, passed, detail) triples.
"""

from __future__ import annotations

import math

import numpy as np

from . import beams, ledge, matter, specfun
from .beams import CylindricalPoint, CylinderVolume, VortexBeam
from .ev_coupling import FixedGeometry, angular_oracle, ev_matrix_element, kernel_fg, y_alpha
from .matter import ComState, HydrogenicState, PhotonOccupation, RingGaussianProfile
from .ov_coupling import com_radial_overlap, ov_com_photon_factor, ov_matrix_element
from .quadrature import Tolerance, integrate_1d, riemann_oracle

__all__ = ["run_checks", "CHECKS"]


# ---------------------------------------------------------------------------
# specfun
# ---------------------------------------------------------------------------


def check_bessel_negative_order():
    xs = np.linspace(0.05, 40.0, 37)
    worst = 0.0
    for l in range(0, 7):
        a = specfun.bessel_j(-l, xs)
        b = (-1.0) ** l * specfun.bessel_j(l, xs)
        worst = max(worst, float(np.max(np.abs(a - b))))
    assert worst <= 1e-14, f"negative-order reflection off by {worst:.3e}"
    return f"max |J_-l - (-1)^l J_l| = {worst:.3e}"


def check_bessel_recurrence():
    xs = np.linspace(0.1, 50.0, 83)
    worst = 0.0
    for l in range(1, 9):
        jm = specfun.bessel_j(l - 1, xs)
        j0 = specfun.bessel_j(l, xs)
        jp = specfun.bessel_j(l + 1, xs)
        resid = np.abs(jm + jp - (2.0 * l / xs) * j0)
        bound = 1e-10 * np.maximum(1.0, np.abs(j0))
        worst = max(worst, float(np.max(resid / bound)))
    assert worst <= 1.0, f"recurrence residual exceeds bound by factor {worst:.3f}"
    return f"recurrence residual at {worst:.3e} of the allowed bound"


def check_spherical_harmonic_conjugation():
    rng = np.random.default_rng(2024)
    worst = 0.0
    for _ in range(100):
        l = int(rng.integers(0, 7))
        m = int(rng.integers(-l, l + 1)) if l else 0
        th = float(rng.uniform(0.0, math.pi))
        ph = float(rng.uniform(0.0, 2.0 * math.pi))
        lhs = (-1.0) ** (l - m) * specfun.spherical_harmonic(l, -m, th, ph)
        rhs = np.conj(specfun.spherical_harmonic(l, m, th, ph))
        worst = max(worst, abs(lhs - rhs))
    assert worst <= 1e-12, f"conjugation identity off by {worst:.3e}"
    return f"max pointwise deviation {worst:.3e}"


def check_hydrogenic_radial_orthonormality():
    worst = 0.0
    from .quadrature import integrate_semiinf

    for l in range(0, 5):
        ns = [n for n in range(1, 6) if n > l]
        for i, n1 in enumerate(ns):
            for n2 in ns[i:]:
                val = integrate_semiinf(
                    lambda q: specfun.hydrogenic_radial(n1, l, q)
                    * specfun.hydrogenic_radial(n2, l, q)
                    * q**2,
                    Tolerance(1e-11, 1e-10, 48),
                    scale=float(n1 * n2),
                ).value.real
                target = 1.0 if n1 == n2 else 0.0
                worst = max(worst, abs(val - target))
    assert worst <= 1e-8, f"radial orthonormality off by {worst:.3e}"
    return f"max |<n'l|nl> - delta| = {worst:.3e} (n <= 5)"


def check_wigner3j_orthogonality():
    worst = 0.0
    for two_j1, two_j2, two_j3 in [(2, 2, 2), (2, 2, 4), (4, 2, 6), (3, 2, 5), (3, 3, 4), (5, 4, 3)]:
        for two_m3 in range(-two_j3, two_j3 + 1, 2):
            total = 0.0
            for two_m1 in range(-two_j1, two_j1 + 1, 2):
                two_m2 = -two_m3 - two_m1
                if abs(two_m2) > two_j2:
                    continue
                w = specfun.wigner_3j(two_j1, two_j2, two_j3, two_m1, two_m2, two_m3)
                total += (two_j3 + 1) * w * w
            worst = max(worst, abs(total - 1.0))
    assert worst <= 1e-12, f"3j orthogonality off by {worst:.3e}"
    return f"max |sum - 1| = {worst:.3e}"


# ---------------------------------------------------------------------------
# quadrature
# ---------------------------------------------------------------------------

# (integrand, exact value); all smooth and 2*pi-periodic
_BATTERY = [
    (lambda y: 1.0 / (2.0 - np.cos(y)), 2.0 * math.pi / math.sqrt(3.0)),
    (lambda y: 1.0 / (3.0 + 2.0 * np.cos(y)), 2.0 * math.pi / math.sqrt(5.0)),
    (lambda y: 1.0 / (2.0 + np.cos(y)) ** 2, 4.0 * math.pi / 3.0**1.5),
    (lambda y: np.sin(2.0 * y) ** 2, math.pi),
    (lambda y: np.cos(5.0 * y) ** 2, math.pi),
    (lambda y: np.sin(y) ** 4, 0.75 * math.pi),
    (lambda y: np.cos(y) ** 4, 0.75 * math.pi),
    (lambda y: 1.0 / (5.0 - 4.0 * np.cos(y)), 2.0 * math.pi / 3.0),
    (
        lambda y: np.exp(1j * y) / (2.0 - np.cos(y)),
        2.0 * math.pi * (2.0 - math.sqrt(3.0)) / math.sqrt(3.0),
    ),
    (lambda y: np.sin(y) ** 6, 0.625 * math.pi),
]


def check_quadrature_linearity():
    f = lambda y: 1.0 / (2.0 - np.cos(y))
    g = lambda y: np.exp(1j * y) / (3.0 + 2.0 * np.cos(y))
    alpha, beta = 2.5, -1.25 + 0.5j
    a, b = 0.0, 2.0 * math.pi
    combined = integrate_1d(lambda y: alpha * f(y) + beta * g(y), a, b)
    parts = alpha * integrate_1d(f, a, b).value + beta * integrate_1d(g, a, b).value
    diff = abs(combined.value - parts)
    assert diff <= 1e-9, f"linearity violated by {diff:.3e}"
    return f"|I(af+bg) - aI(f) - bI(g)| = {diff:.3e}"


def check_quadrature_oracle_agreement():
    worst = 0.0
    for f, _ in _BATTERY:
        adaptive = integrate_1d(f, 0.0, 2.0 * math.pi).value
        oracle = riemann_oracle(f, 0.0, 2.0 * math.pi, 10**6)
        worst = max(worst, abs(adaptive - oracle))
    assert worst <= 1e-7, f"adaptive vs Riemann oracle differ by {worst:.3e}"
    return f"max |adaptive - riemann(1e6)| = {worst:.3e}"


def check_quadrature_error_honesty():
    worst = 0.0
    for f, exact in _BATTERY:
        res = integrate_1d(f, 0.0, 2.0 * math.pi)
        true_err = abs(res.value - exact)
        worst = max(worst, true_err / max(10.0 * res.error_estimate, 5e-324))
    assert worst <= 1.0, f"true error exceeds 10x estimate (ratio {worst:.3f})"
    return f"worst true-error / (10 x estimate) = {worst:.3f}"


# ---------------------------------------------------------------------------
# beams
# ---------------------------------------------------------------------------


def check_beam_axis_null():
    worst = 0.0
    for l in (1, 2, 3):
        b = VortexBeam("electron", l=l, k_perp=1.3, k_z=4.0)
        worst = max(worst, abs(beams.ev_wavefunction(b, CylindricalPoint(0.0, 0.3, 0.5))))
    b0 = VortexBeam("electron", l=0, k_perp=1.3, k_z=4.0)
    center = abs(beams.ev_wavefunction(b0, CylindricalPoint(0.0, 0.0, 0.0)))
    ring = max(
        abs(beams.ev_wavefunction(b0, CylindricalPoint(r, 0.0, 0.0)))
        for r in np.linspace(0.2, 6.0, 30)
    )
    assert worst == 0.0, f"vortex core not null: {worst:.3e}"
    assert center > ring, "J_0 mode should peak on axis"
    return f"core amplitude {worst:.1e}; axis peak {center:.6f} > off-axis max {ring:.6f}"


def check_beam_periodicity():
    worst = 0.0
    for l in (1, 2, 5):
        b = VortexBeam("electron", l=l, k_perp=1.0, k_z=2.0)
        for phi in (0.0, 0.7, 3.1):
            u1 = beams.ev_wavefunction(b, CylindricalPoint(1.5, phi, 0.2))
            u2 = beams.ev_wavefunction(b, CylindricalPoint(1.5, phi + 2.0 * math.pi, 0.2))
            worst = max(worst, abs(u1 - u2) / abs(u1))
    assert worst <= 1e-12, f"azimuthal closure off by {worst:.3e}"
    return f"max relative closure defect {worst:.3e}"


def check_beam_oam_eigenvalue():
    worst = 0.0
    for l in (0, 1, 3):
        b = VortexBeam("electron", l=l, k_perp=1.0, k_z=2.0)
        eig = beams.azimuthal_oam_eigenvalue(b, CylindricalPoint(2.0, 0.4, 0.1))
        worst = max(worst, abs(eig - l))
    assert worst <= 1e-8, f"OAM eigenvalue off by {worst:.3e}"
    return f"max |(-i d_phi u)/u - l| = {worst:.3e}"


# ---------------------------------------------------------------------------
# matter
# ---------------------------------------------------------------------------


def check_hydrogenic_state_orthonormality():
    from .quadrature import integrate_semiinf

    worst = 0.0
    # radial factor, same l (the angular factor is checked separately)
    for l in range(0, 3):
        ns = [n for n in range(1, 4) if n > l]
        for i, n1 in enumerate(ns):
            for n2 in ns[i:]:
                val = integrate_semiinf(
                    lambda q: specfun.hydrogenic_radial(n1, l, q)
                    * specfun.hydrogenic_radial(n2, l, q)
                    * q**2,
                    Tolerance(1e-10, 1e-9, 48),
                    scale=float(n1 * n2),
                ).value.real
                worst = max(worst, abs(val - (1.0 if n1 == n2 else 0.0)))
    # angular Gram matrix on a product grid (Gauss-Legendre x trapezoid)
    nodes, wts = np.polynomial.legendre.leggauss(64)
    theta = np.arccos(nodes)
    nphi = 64
    phi = (np.arange(nphi) + 0.5) * (2.0 * math.pi / nphi)
    labels = [(l, m) for l in range(0, 3) for m in range(-l, l + 1)]
    for i, (l1, m1) in enumerate(labels):
        y1 = specfun.sph_harm_cs(l1, m1, theta[:, None], phi[None, :])
        for l2, m2 in labels[i:]:
            y2 = specfun.sph_harm_cs(l2, m2, theta[:, None], phi[None, :])
            gram = np.sum(np.conj(y1) * y2 * wts[:, None]) * (2.0 * math.pi / nphi)
            target = 1.0 if (l1, m1) == (l2, m2) else 0.0
            worst = max(worst, abs(gram - target))
    assert worst <= 1e-7, f"orthonormality off by {worst:.3e}"
    return f"max Gram deviation {worst:.3e} (n <= 3)"


def check_hydrogenic_energy_ordering():
    energies = []
    for n in range(1, 6):
        states = [HydrogenicState(n, l, m) for l in range(n) for m in range(-l, l + 1)]
        levels = {s.energy for s in states}
        assert len(levels) == 1, f"degeneracy broken at n={n}"
        energies.append(states[0].energy)
    assert all(a < b for a, b in zip(energies, energies[1:])), "W(n) not increasing"
    return f"W(1..5) strictly increasing, degenerate in l, m"


def check_core_state_counts():
    for shell, (two_j, _) in matter.SHELLS.items():
        states = matter.enumerate_core_states(shell)
        assert len(states) == two_j + 1, f"{shell}: expected {two_j + 1} states"
        assert [s.two_mj for s in states] == list(range(-two_j, two_j + 1, 2))
    return "2j+1 states per shell, m_j ascending"


# ---------------------------------------------------------------------------
# ov_coupling
# ---------------------------------------------------------------------------


def _ov_scan(l_values, dm_max, dl_max):
    """Scan the optical matrix element; returns (violations, nonzero count)."""
    ring = RingGaussianProfile(rho0=1.8, sigma=0.4)
    pol = (1.0 / math.sqrt(2.0), 0.0, 1.0 / math.sqrt(2.0))
    initial = HydrogenicState(2, 1, 0)
    # n' != 2 keeps W_f != W_i: degenerate pairs are killed by the energy
    # prefactor, which the OAM predicate does not model
    finals = [
        HydrogenicState(n, l, m)
        for n in (1, 3, 4)
        for l in range(0, n)
        for m in range(-l, l + 1)
        if abs(m - initial.m) <= dm_max
    ]
    violations = []
    nonzero = 0
    for lbeam in l_values:
        beam = VortexBeam("optical", l=lbeam, k_perp=1.0, k_z=0.5, polarization=pol)
        volume = CylinderVolume.default_for(beam)
        for dL in range(-dl_max, dl_max + 1):
            com_i = ComState(0.0, 0.0, 0, ring)
            for dn, channel_kz in ((-1, beam.k_z), (+1, -beam.k_z)):
                com_f = ComState(0.0, channel_kz, dL, ring)
                n_i = PhotonOccupation(1)
                n_f = PhotonOccupation(1 + dn)
                for fin in finals:
                    amp = ov_matrix_element(
                        beam, initial, fin, com_i, com_f, n_i, n_f, volume
                    )
                    dm = fin.m - initial.m
                    dl_int = fin.l - initial.l
                    com_ok = (dL == lbeam and dn == -1) or (dL == -lbeam and dn == +1)
                    dip_ok = abs(dl_int) == 1 and abs(dm) <= 1
                    allowed = com_ok and dip_ok
                    if allowed != (abs(amp) > 1e-30):
                        violations.append((lbeam, dL, dn, fin.n, fin.l, fin.m, abs(amp)))
                    if abs(amp) > 1e-30:
                        nonzero += 1
    return violations, nonzero


def check_ov_oam_bookkeeping():
    violations, nonzero = _ov_scan((1,), 2, 2)
    assert not violations, f"selection-rule violations: {violations[:3]}"
    assert nonzero > 0, "scan produced no allowed transitions"
    return f"nonzero set matches predicate exactly ({nonzero} allowed combos)"


def check_ov_azimuthal_delta_bruteforce():
    ring = RingGaussianProfile(rho0=1.8, sigma=0.4)
    beam = VortexBeam("optical", l=1, k_perp=1.0, k_z=0.5)
    volume = CylinderVolume.default_for(beam)
    worst = 0.0
    for dL in (-2, -1, 0, 1, 2):
        com_i = ComState(0.0, 0.0, 0, ring)
        com_f = ComState(0.0, beam.k_z, dL, ring)
        analytic = ov_com_photon_factor(
            beam, com_i, com_f, PhotonOccupation(1), PhotonOccupation(0), "absorption", volume
        ).amplitude
        winding = com_i.L - com_f.L + beam.l
        numeric_delta = riemann_oracle(
            lambda phi: np.exp(1j * winding * phi), 0.0, 2.0 * math.pi, 4096
        )
        overlap = com_radial_overlap(beam, com_i, com_f, volume.r_max).value
        photon = 1.0
        window = volume.l_z
        brute = (-1j * beam.amplitude / beam.omega) * photon * numeric_delta * overlap * window
        worst = max(worst, abs(analytic - brute))
    assert worst <= 1e-10, f"brute-force azimuthal integral differs by {worst:.3e}"
    return f"max |analytic - brute-force| = {worst:.3e}"


def check_ov_hermiticity_pairing():
    ring_a = RingGaussianProfile(rho0=1.8, sigma=0.4)
    ring_b = RingGaussianProfile(rho0=2.4, sigma=0.3)
    beam = VortexBeam("optical", l=1, k_perp=1.0, k_z=0.5)
    volume = CylinderVolume.default_for(beam)
    com_a = ComState(0.0, 0.0, 0, ring_a)
    com_b = ComState(0.0, beam.k_z, 1, ring_b)
    fwd = com_radial_overlap(beam, com_a, com_b, volume.r_max).value
    rev = com_radial_overlap(beam, com_b, com_a, volume.r_max).value
    diff = abs(abs(fwd) - abs(rev))
    assert diff <= 1e-12 * max(abs(fwd), 1.0), f"overlap magnitudes differ by {diff:.3e}"
    return f"| |<f|J_l|i>| - |<i|J_l|f>| | = {diff:.3e}"


# ---------------------------------------------------------------------------
# ev_coupling
# ---------------------------------------------------------------------------


def check_y_reality():
    worst = 0.0
    for n in (0, 1, 2, 3):
        for f_val, g_val in ((1.05, 1.0), (2.0, 1.0), (5.0, 3.0), (10.0, 1.0), (3.0, 0.0)):
            res = integrate_1d(
                lambda y: np.exp(1j * n * y) / (f_val - g_val * np.cos(y)) ** 1.5,
                0.0,
                2.0 * math.pi,
            )
            worst = max(worst, abs(res.value.imag))
    assert worst <= 1e-10, f"imaginary residue {worst:.3e}"
    return f"max |Im Y| = {worst:.3e}"


def check_y_parity():
    worst = 0.0
    for n in (1, 2, 3):
        for f_val, g_val in ((2.0, 1.0), (5.0, 3.0), (10.0, 1.0)):
            worst = max(
                worst, abs(y_alpha(n, f_val, g_val) - y_alpha(-n, f_val, g_val))
            )
    assert worst <= 1e-12, f"parity off by {worst:.3e}"
    return f"max |Y(n) - Y(-n)| = {worst:.3e}"


def check_y_monotonic_in_f():
    for g_val in (0.0, 0.5, 1.0):
        vals = [y_alpha(0, f_val, g_val) for f_val in (1.2, 1.5, 2.0, 3.0, 5.0, 10.0)]
        assert all(a > b for a, b in zip(vals, vals[1:])), f"Y_0 not decreasing at G={g_val}"
    return "Y_0 strictly decreasing in F at fixed G"


def check_kernel_identity():
    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(100):
        rho_v, rho_r = rng.uniform(0.1, 3.0, 2)
        z_v, z_r = rng.uniform(-2.0, 2.0, 2)
        dphi = float(rng.uniform(0.0, 2.0 * math.pi))
        try:
            f_val, g_val = kernel_fg(float(rho_v), float(z_v), float(rho_r), float(z_r))
        except Exception:
            continue
        rebuilt = f_val - g_val * math.cos(dphi)
        direct = (
            (rho_v * math.cos(dphi) - rho_r) ** 2
            + (rho_v * math.sin(dphi)) ** 2
            + (z_v - z_r) ** 2
        )
        worst = max(worst, abs(rebuilt - direct))
    assert worst <= 1e-12, f"kernel identity off by {worst:.3e}"
    return f"max |(F - G cos) - |r_v - R|^2| = {worst:.3e}"


def check_ev_delta_exactness():
    f_val, g_val = 2.0, 1.0
    panels = 128
    allowed_max = 0.0
    for comp, target in (("plus", 1), ("minus", -1), ("z", 0)):
        for dl in range(-2, 3):
            for dL in range(-2, 3):
                if dl + dL == target:
                    allowed_max = max(
                        allowed_max,
                        abs(angular_oracle(dl, 0, dL, 0, comp, f_val, g_val, panels)),
                    )
    worst = 0.0
    for comp, target in (("plus", 1), ("minus", -1), ("z", 0)):
        for dl in range(-2, 3):
            for dL in range(-2, 3):
                if dl + dL != target:
                    worst = max(
                        worst,
                        abs(angular_oracle(dl, 0, dL, 0, comp, f_val, g_val, panels)),
                    )
    ratio = worst / allowed_max
    assert ratio <= 1e-6, f"delta-violating leakage ratio {ratio:.3e}"
    return f"violating/allowed = {ratio:.3e}"


def check_ev_helicity_pairing():
    ring = RingGaussianProfile(rho0=1.8, sigma=0.4)
    com = ComState(0.0, 0.0, 0, ring)
    geo = FixedGeometry(2.0, 1.0)
    bp = VortexBeam("electron", l=+1, k_perp=1.0, k_z=10.0)
    bm = VortexBeam("electron", l=-1, k_perp=1.0, k_z=10.0)
    b0 = VortexBeam("electron", l=0, k_perp=1.0, k_z=10.0)
    up = ev_matrix_element(
        bp, b0, HydrogenicState(2, 1, 0), HydrogenicState(3, 2, 1), com, com, geo
    )
    dn = ev_matrix_element(
        bm, b0, HydrogenicState(2, 1, 0), HydrogenicState(3, 2, -1), com, com, geo
    )
    diff = abs(abs(up.Q) - abs(dn.S))
    assert up.active_channel == "plus" and dn.active_channel == "minus"
    assert diff <= 1e-12, f"|Q(+1)| != |S(-1)| by {diff:.3e}"
    return f"||Q| - |S|| = {diff:.3e}"


# ---------------------------------------------------------------------------
# ledge
# ---------------------------------------------------------------------------


def check_ledge_mirror_sets():
    plus = {
        (t.edge, t.initial.two_mj, t.final.two_mj)
        for t in ledge.enumerate_edge_transitions(+1)
    }
    minus_mirrored = {
        (t.edge, -t.initial.two_mj, -t.final.two_mj)
        for t in ledge.enumerate_edge_transitions(-1)
    }
    assert plus == minus_mirrored, "transition sets are not mirror images"
    return f"{len(plus)} transitions map exactly under m_j -> -m_j"


def check_ledge_mirror_strengths():
    plus = ledge.enumerate_edge_transitions(+1)
    minus = {
        (t.edge, -t.initial.two_mj, -t.final.two_mj): t.strength
        for t in ledge.enumerate_edge_transitions(-1)
    }
    worst = 0.0
    for t in plus:
        worst = max(
            worst, abs(t.strength - minus[(t.edge, t.initial.two_mj, t.final.two_mj)])
        )
    assert worst <= 1e-12, f"mirror strengths differ by {worst:.3e}"
    return f"max strength mismatch {worst:.3e} over all 6 pairs"


def check_dichroism_linearity():
    kernel = ledge.selection_rule_kernel()
    rng = np.random.default_rng(99)
    base = {}
    for shell in ("3d_threehalf", "3d_fivehalf"):
        for st in matter.enumerate_core_states(shell):
            base[(shell, st.two_mj)] = float(rng.uniform(0.0, 2.0))
    dos = ledge.DensityOfStates(base)
    r1 = ledge.dichroism(dos, kernel)
    r2 = ledge.dichroism(dos.scaled(3.5), kernel)
    rm = ledge.dichroism(dos.mirrored(), kernel)
    scale_err = abs(r2.dichroism - 3.5 * r1.dichroism)
    mirror_err = abs(rm.dichroism + r1.dichroism)
    tol = 1e-12 * max(1.0, abs(r1.gamma_plus) + abs(r1.gamma_minus))
    assert scale_err <= tol and mirror_err <= tol, (
        f"linearity {scale_err:.3e}, antisymmetry {mirror_err:.3e}"
    )
    return f"scaling defect {scale_err:.3e}; reflection antisymmetry defect {mirror_err:.3e}"


def check_rates_nonnegative():
    kernel = ledge.selection_rule_kernel()
    rng = np.random.default_rng(5)
    for _ in range(10):
        w = {}
        for shell in ("3d_threehalf", "3d_fivehalf"):
            for st in matter.enumerate_core_states(shell):
                w[(shell, st.two_mj)] = float(rng.uniform(0.0, 1.0))
        dos = ledge.DensityOfStates(w)
        for edge in ("L2", "L3"):
            for bl in (+1, -1):
                rate = ledge.edge_rate(edge, bl, dos, kernel)
                assert rate >= 0.0, f"negative rate {rate}"
    return "all sampled rates >= 0"


# ---------------------------------------------------------------------------
# cli determinism
# ---------------------------------------------------------------------------


def check_cli_determinism():
    from .cli import build_records
    from .config import RunConfig
    from .records import emit

    outs = []
    for _ in range(2):
        cfg = RunConfig.default()
        recs_y = build_records("y-alpha", cfg, {"n": 1, "F": 2.0, "G": 1.0})
        recs_l = build_records("ledge", cfg, {"l": "+1"})
        outs.append(emit(recs_y + recs_l, "json") + emit(recs_l, "csv"))
    assert outs[0] == outs[1], "repeated emission differs"
    return f"repeated record emission is byte-identical ({len(outs[0])} bytes)"


CHECKS = [
    ("specfun.bessel_negative_order", check_bessel_negative_order),
    ("specfun.bessel_recurrence", check_bessel_recurrence),
    ("specfun.spherical_harmonic_conjugation", check_spherical_harmonic_conjugation),
    ("specfun.hydrogenic_radial_orthonormality", check_hydrogenic_radial_orthonormality),
    ("specfun.wigner3j_orthogonality", check_wigner3j_orthogonality),
    ("quadrature.linearity", check_quadrature_linearity),
    ("quadrature.oracle_agreement", check_quadrature_oracle_agreement),
    ("quadrature.error_honesty", check_quadrature_error_honesty),
    ("beams.axis_null", check_beam_axis_null),
    ("beams.azimuthal_periodicity", check_beam_periodicity),
    ("beams.oam_eigenvalue", check_beam_oam_eigenvalue),
    ("matter.hydrogenic_orthonormality", check_hydrogenic_state_orthonormality),
    ("matter.energy_ordering", check_hydrogenic_energy_ordering),
    ("matter.core_state_counts", check_core_state_counts),
    ("ov_coupling.oam_bookkeeping", check_ov_oam_bookkeeping),
    ("ov_coupling.azimuthal_delta_bruteforce", check_ov_azimuthal_delta_bruteforce),
    ("ov_coupling.hermiticity_pairing", check_ov_hermiticity_pairing),
    ("ev_coupling.y_reality", check_y_reality),
    ("ev_coupling.y_parity", check_y_parity),
    ("ev_coupling.y_monotonic", check_y_monotonic_in_f),
    ("ev_coupling.kernel_identity", check_kernel_identity),
    ("ev_coupling.delta_exactness", check_ev_delta_exactness),
    ("ev_coupling.helicity_pairing", check_ev_helicity_pairing),
    ("ledge.mirror_sets", check_ledge_mirror_sets),
    ("ledge.mirror_strengths", check_ledge_mirror_strengths),
    ("ledge.dichroism_linearity", check_dichroism_linearity),
    ("ledge.rates_nonnegative", check_rates_nonnegative),
    ("cli.determinism", check_cli_determinism),
]


def run_checks():
    """Run every invariant check; returns [(name, passed, detail)]."""
    results = []
    for name, fn in CHECKS:
        try:
            detail = fn()
            results.append((name, True, detail))
        except AssertionError as exc:
            results.append((name, False, str(exc)))
        except Exception as exc:  # noqa: BLE001 - survive and report
            results.append((name, False, f"{type(exc).__name__}: {exc}"))
    return results
