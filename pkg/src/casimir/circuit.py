"""LC-circuit model of the dispersive cavity: a parallel-plate capacitor
filled with a Lorentz dielectric, closed through an external
self-inductance L so stationary oscillations exist (no resistance, since
dissipation is neglected throughout).

The eigenfrequency solves omega = 1/sqrt(L C(omega)) with
C(omega, a) = (A_plate/a) eps(omega), and the time-averaged circuit
energy of a nearly monochromatic oscillation is

    W_circ = (1/(2 omega)) d(omega^2 C)/d omega * phi_sq_bar
           = (C + omega C'/2) phi_sq_bar,

whose capacitor and inductor halves satisfy (1/2) L J^2 = (1/2) C phi^2
at the eigenfrequency.

W_circ/omega is an adiabatic invariant.  For a slow plate displacement
the predicted energy change W_circ * (delta omega/omega), with
delta omega taken from actually re-solving the eigenfrequency at the new
separation, must agree to first order with the thermally insulated
capacitor variation -(1/2) phi_sq_bar (delta C)_static, where the static
variation moves the plates at frozen frequency.  The frequency-derivative
terms cancel between the two sides; that cancellation is the point of the
model (the stress tensor carries no d/d omega terms), and
adiabatic_variation_check exposes both sides for comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .engine import Tolerance, DEFAULT_TOL, find_root
from .dispersion import LorentzModel, DEFAULT_RESONANCE_HALFWIDTH, _eps_real_unguarded

__all__ = ["CircuitSpec", "CircuitEnergy", "eigenfrequency", "circuit_energy",
           "adiabatic_variation_check"]


@dataclass(frozen=True)
class CircuitSpec:
    """Self-inductance L, plate separation a, capacitance scale A_plate
    (so C0(a) = A_plate/a), optional Lorentz dielectric filling, and the
    mean-square potential setting the amplitude."""

    L: float
    a: float = 1.0
    A_plate: float = 1.0
    eps_model: LorentzModel | None = None
    phi_sq_bar: float = 1.0

    def __post_init__(self):
        if not self.L > 0:
            raise ValueError(f"self-inductance must be > 0, got {self.L}")
        if not self.a > 0:
            raise ValueError(f"separation must be > 0, got {self.a}")
        if not self.A_plate > 0:
            raise ValueError(f"A_plate must be > 0, got {self.A_plate}")

    def capacitance(self, omega: float, a: float | None = None) -> float:
        a = self.a if a is None else a
        c0 = self.A_plate / a
        if self.eps_model is None:
            return c0
        return c0 * _eps_real_unguarded(self.eps_model, omega)

    def dC_domega(self, omega: float) -> float:
        if self.eps_model is None:
            return 0.0
        m = self.eps_model
        c0 = self.A_plate / self.a
        return c0 * (m.eps_bar - 1.0) * (2.0 * omega / m.omega0**2) / (
            1.0 - (omega / m.omega0) ** 2
        ) ** 2


@dataclass(frozen=True)
class CircuitEnergy:
    value: float
    omega_star: float
    dC_domega: float


def eigenfrequency(spec: CircuitSpec, tol: Tolerance = DEFAULT_TOL) -> float:
    """Lowest positive root of omega^2 L C(omega) = 1.

    omega^2 L C(omega) is strictly increasing below the resonance, so the
    root is unique there; the bracket stops at omega0(1 - delta) and a
    missing sign change (root pushed into the resonance zone) is an error.
    """

    def f(w: float) -> float:
        return w * w * spec.L * spec.capacitance(w) - 1.0

    if spec.eps_model is None:
        hi = 2.0 / math.sqrt(spec.L * spec.capacitance(0.0))
        for _ in range(200):
            if f(hi) > 0:
                break
            hi *= 2.0
        else:
            raise ValueError("could not bracket the circuit eigenfrequency")
    else:
        hi = spec.eps_model.omega0 * (1.0 - DEFAULT_RESONANCE_HALFWIDTH)
        if f(hi) <= 0:
            raise ValueError(
                "no eigenfrequency below the resonance zone for this L and C"
            )
    root_tol = Tolerance(rel=1e-15, abs=0.0, max_iter=tol.max_iter)
    return find_root(f, (0.0, hi), root_tol)


def circuit_energy(spec: CircuitSpec, tol: Tolerance = DEFAULT_TOL) -> CircuitEnergy:
    """Averaged circuit energy (1/(2 omega)) d(omega^2 C)/d omega * phi^2
    at the solved eigenfrequency, with the capacitance derivative taken
    analytically from the Lorentz form."""
    w = eigenfrequency(spec, tol)
    c = spec.capacitance(w)
    dc = spec.dC_domega(w)
    value = (c + 0.5 * w * dc) * spec.phi_sq_bar
    return CircuitEnergy(value=value, omega_star=w, dC_domega=dc)


def adiabatic_variation_check(
    spec: CircuitSpec, delta_a_rel: float, tol: Tolerance = DEFAULT_TOL
) -> tuple[float, float]:
    """Both sides of the adiabatic energy balance for a -> a(1 + delta).

    lhs: W_circ * delta omega / omega with delta omega from re-solving the
    eigenfrequency at the displaced separation (adiabatic invariance of
    W_circ/omega).
    rhs: -(1/2) phi_sq_bar (delta C)_static with the capacitance varied at
    frozen frequency (insulated-capacitor energy change).

    The two agree to first order in delta; the residual of lhs/rhs - 1 is
    O(delta).
    """
    if not 0 < delta_a_rel < 1:
        raise ValueError("delta_a_rel must lie in (0, 1)")
    w1 = eigenfrequency(spec, tol)
    energy = circuit_energy(spec, tol)
    moved = replace(spec, a=spec.a * (1.0 + delta_a_rel))
    w2 = eigenfrequency(moved, tol)
    lhs = energy.value * (w2 - w1) / w1
    dc_static = spec.capacitance(w1, a=spec.a * (1.0 + delta_a_rel)) - spec.capacitance(w1)
    rhs = -0.5 * spec.phi_sq_bar * dc_static
    return lhs, rhs
