"""Weakly dispersive, dissipation-free medium: single-resonance Lorentz
permittivity, the mode condition n(omega) omega = k, the physically
meaningful part w_I of the dispersive energy, and the cutoff-regulated
frequency-derivative remainder W_II.

The Lorentz dielectric is

    eps(omega) = 1 + (eps_bar - 1) / (1 - omega^2/omega0^2),   mu = 1,

valid away from the resonance where neglecting dissipation is legitimate;
real-axis evaluation therefore refuses a window |omega/omega0 - 1| <=
delta around omega0.  On the imaginary axis the same response is smooth
and monotone,

    eps(i zeta) = 1 + (eps_bar - 1) / (1 + zeta^2/omega0^2),

decreasing from eps_bar at zeta = 0 to 1 at high frequency, and all
energy integrals are evaluated there.

Sign/normalization convention for W_II: the frequency prefactor
omega^2/(1 - omega^2/omega0^2)^2 is rotated to zeta^2/(1 + zeta^2/omega0^2)^2
(magnitude) and the rotated spectral density keeps its own (negative)
sign, so the reported W_II is negative like every other energy here.
Only its growth with the cutoff is treated as physically meaningful.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .engine import Tolerance, DEFAULT_TOL, adaptive_quad, find_root
from .matsubara import CavityConfig, EnergyValue
from .green_em import spectral_energy_density

__all__ = [
    "LorentzModel",
    "CutoffSpec",
    "W2CutoffResult",
    "DEFAULT_RESONANCE_HALFWIDTH",
    "eps_of_omega",
    "eps_imag_axis",
    "dispersive_mode_solve",
    "photon_index",
    "w_I_energy",
    "w2_density_cutoff",
]

DEFAULT_RESONANCE_HALFWIDTH = 0.05


@dataclass(frozen=True)
class LorentzModel:
    """Single-resonance nonmagnetic dielectric: static permittivity
    eps_bar >= 1 (eps_bar = 1 is the degenerate vacuum branch) and
    resonance frequency omega0 > 0."""

    eps_bar: float
    omega0: float
    mu: float = 1.0

    def __post_init__(self):
        if self.eps_bar < 1:
            raise ValueError(f"eps_bar must be >= 1, got {self.eps_bar}")
        if not self.omega0 > 0:
            raise ValueError(f"omega0 must be > 0, got {self.omega0}")
        if self.mu != 1.0:
            raise ValueError("only the nonmagnetic case mu = 1 is modelled")


@dataclass(frozen=True)
class CutoffSpec:
    """Hard frequency cutoff for the divergent W_II integral, plus the
    relative half-width of the excluded resonance zone used by any
    real-axis evaluation."""

    omega_max: float
    exclusion_halfwidth: float = DEFAULT_RESONANCE_HALFWIDTH

    def __post_init__(self):
        if not self.omega_max > 0:
            raise ValueError("omega_max must be > 0")
        if not 0 < self.exclusion_halfwidth < 1:
            raise ValueError("exclusion_halfwidth must lie in (0, 1)")


def _eps_real_unguarded(model: LorentzModel, omega: float) -> float:
    return 1.0 + (model.eps_bar - 1.0) / (1.0 - (omega / model.omega0) ** 2)


def eps_of_omega(
    model: LorentzModel,
    omega: float,
    delta: float = DEFAULT_RESONANCE_HALFWIDTH,
) -> float:
    """Real-axis permittivity; rejects the resonance zone
    |omega/omega0 - 1| <= delta where the lossless form is meaningless."""
    if abs(omega / model.omega0 - 1.0) <= delta:
        raise ValueError(
            f"omega={omega} lies within the excluded resonance zone of omega0={model.omega0}"
        )
    return _eps_real_unguarded(model, omega)


def eps_imag_axis(model: LorentzModel, zeta: float) -> float:
    """Permittivity on the imaginary frequency axis, eps(i zeta)."""
    return 1.0 + (model.eps_bar - 1.0) / (1.0 + (zeta / model.omega0) ** 2)


def dispersive_mode_solve(
    model: LorentzModel, k: float, tol: Tolerance = DEFAULT_TOL
) -> float:
    """Solve n(omega) omega = k for the lowest root, always in (0, omega0).

    n(omega) omega is continuous and strictly increasing on (0, omega0),
    vanishing at 0 and diverging at the resonance, so the root exists and
    is unique; it connects continuously to the vacuum branch omega = k as
    eps_bar -> 1 (and for eps_bar = 1 exactly, omega = k is returned).
    """
    if not k > 0:
        raise ValueError(f"wavenumber k must be > 0, got {k}")
    if model.eps_bar == 1.0:
        return k

    def f(w: float) -> float:
        return math.sqrt(_eps_real_unguarded(model, w)) * w - k

    # expand the upper end geometrically toward the resonance until the
    # bracket straddles the root
    hi = model.omega0 * (1.0 - DEFAULT_RESONANCE_HALFWIDTH)
    for _ in range(600):
        if f(hi) > 0:
            break
        hi = model.omega0 - 0.25 * (model.omega0 - hi)
    else:
        raise ValueError(f"could not bracket a mode below omega0 for k={k}")
    root_tol = Tolerance(rel=1e-15, abs=0.0, max_iter=tol.max_iter)
    return find_root(f, (0.0, hi), root_tol)


def _upper_branch_solve(model: LorentzModel, k: float, tol: Tolerance) -> float:
    # root of n(omega) omega = k above the polariton gap, omega > omega0*sqrt(eps_bar),
    # where 0 < eps < 1 and n -> 1 from below at high frequency
    def f(w: float) -> float:
        eps = _eps_real_unguarded(model, w)
        return math.sqrt(max(eps, 0.0)) * w - k

    lo = model.omega0 * math.sqrt(model.eps_bar)
    hi = max(2.0 * lo, 1.5 * k)
    for _ in range(200):
        if f(hi) > 0:
            break
        hi *= 2.0
    else:
        raise ValueError(f"could not bracket the upper photon branch for k={k}")
    root_tol = Tolerance(rel=1e-15, abs=0.0, max_iter=tol.max_iter)
    return find_root(f, (lo, hi), root_tol)


def photon_index(model: LorentzModel, k: float, tol: Tolerance = DEFAULT_TOL) -> float:
    """Effective index n(k) = k/omega(k) on the photon branch: the
    below-resonance root for k <= omega0 and the above-gap root for
    k > omega0.

    This is the branch adiabatically connected to the vacuum photon of
    the same wavenumber when the oscillator coupling is switched off, so
    n(k) -> sqrt(eps_bar) at low k and n(k) -> 1 at high k.  (The
    below-resonance root alone would give n(k) ~ k/omega0 at large k and
    the mode sum would never reduce to its vacuum form.)
    """
    if not k > 0:
        raise ValueError(f"wavenumber k must be > 0, got {k}")
    if model.eps_bar == 1.0:
        return 1.0
    if k <= model.omega0:
        return k / dispersive_mode_solve(model, k, tol)
    return k / _upper_branch_solve(model, k, tol)


def w_I_energy(
    model: LorentzModel, cfg: CavityConfig, tol: Tolerance = DEFAULT_TOL
) -> EnergyValue:
    """Zero-temperature energy with the medium response sampled on the
    imaginary axis: the nondispersive spectral density with
    eps -> eps(i zeta) both in the numerator and inside kappa.

    This is the piece of the dispersive energy free of frequency
    derivatives, i.e. the one that feeds the force.
    """
    if cfg.T != 0:
        raise ValueError("w_I_energy requires T = 0 in the config")
    inner_tol = Tolerance(rel=1e-11, abs=0.0, max_iter=tol.max_iter)
    outer_tol = Tolerance(rel=max(tol.rel, 1e-9), abs=0.0, max_iter=tol.max_iter)
    state = {"ok": True}

    def inner(zeta: float) -> float:
        eps_i = eps_imag_axis(model, zeta)

        def f(k: float) -> float:
            p = spectral_energy_density(k, zeta, cfg, eps=eps_i, mu=1.0)
            return k * (p.electric_half + p.magnetic_half)

        res = adaptive_quad(f, 0.0, math.inf, inner_tol)
        state["ok"] &= res.converged
        return res.value

    outer = adaptive_quad(inner, 0.0, math.inf, outer_tol)
    pref = cfg.a / (2.0 * math.pi**2)
    return EnergyValue(
        pref * outer.value,
        abs(pref) * outer.err_estimate,
        "quadrature",
        outer.converged and state["ok"],
    )


@dataclass(frozen=True)
class W2CutoffResult:
    """Truncated W_II with its divergence diagnostic: the values at
    omega_max, 2*omega_max and 4*omega_max."""

    value: EnergyValue
    scan: tuple[tuple[float, float], ...]


def _w2_transverse_integral(
    zeta: float, eps_i: float, cfg: CavityConfig, tol: Tolerance
) -> float:
    """(1/2pi) int k dk <E^2>_{zeta k} with <E^2> from the rotated
    spectral density at eps(i zeta)."""

    def f(k: float) -> float:
        p = spectral_energy_density(k, zeta, cfg, eps=eps_i, mu=1.0)
        return k * 2.0 * p.electric_half / eps_i

    res = adaptive_quad(f, 0.0, math.inf, tol)
    return res.value / (2.0 * math.pi)


def w2_density_cutoff(
    model: LorentzModel,
    cfg: CavityConfig,
    cut: CutoffSpec,
    tol: Tolerance = DEFAULT_TOL,
) -> W2CutoffResult:
    """Frequency-derivative remainder W_II, truncated at cut.omega_max.

    W_II(L) = (2a(eps_bar-1)/omega0^2) int_0^L (dzeta/2pi)
              zeta^2/(1 + zeta^2/omega0^2)^2 * (1/2pi) int k dk <E^2>,

    returned together with the cutoff scan {L, 2L, 4L} (computed as
    accumulated increments, so the scan is exactly monotone in the
    integral sense).  eps_bar = 1 gives identically zero.
    """
    inner_tol = Tolerance(rel=1e-10, abs=0.0, max_iter=tol.max_iter)
    seg_tol = Tolerance(rel=max(tol.rel, 1e-10), abs=0.0, max_iter=tol.max_iter)
    pref = 2.0 * cfg.a * (model.eps_bar - 1.0) / (model.omega0**2 * 2.0 * math.pi)

    def integrand(zeta: float) -> float:
        w = zeta**2 / (1.0 + (zeta / model.omega0) ** 2) ** 2
        return w * _w2_transverse_integral(zeta, eps_imag_axis(model, zeta), cfg, inner_tol)

    if model.eps_bar == 1.0:
        zero = EnergyValue(0.0, 0.0, "quadrature")
        return W2CutoffResult(zero, tuple((cut.omega_max * 2**j, 0.0) for j in range(3)))

    edges = [0.0] + [cut.omega_max * 2**j for j in range(3)]
    acc = 0.0
    err = 0.0
    ok = True
    scan = []
    for lo, hi in zip(edges[:-1], edges[1:]):
        seg = adaptive_quad(integrand, lo, hi, seg_tol)
        acc += seg.value
        err += seg.err_estimate
        ok &= seg.converged
        scan.append((hi, pref * acc))
    value = EnergyValue(scan[0][1], abs(pref) * err, "quadrature", ok)
    return W2CutoffResult(value, tuple(scan))
