"""Casimir pressure and local energy density between two hyperplanes in D
spacetime dimensions (d = D - 1 spatial), medium of constant index n,
zero temperature.

The (D-2) field polarizations give the pressure as a double integral over
imaginary frequency and transverse momentum,

    P = -(2(D-2)/(2 pi)^d) Omega_{d-2}
        int_0^inf dzeta int_0^inf kappa k^(d-2) dk / (e^(2 kappa a) - 1),

which polar coordinates in the (k, n zeta) plane reduce to the product

    (1/n) int_0^(pi/2) cos^(d-2)theta dtheta
          int_0^inf kappa^d dkappa / (e^(2 kappa a) - 1),

and which has the closed form

    P = -((D-2)(D-1)/n) Gamma(D/2) zeta(D) / ((4 pi)^(D/2) a^D).

The local energy density splits as w = w1 + w2: a uniform part w1 with
P = (D-1) w1 = -d(a w1)/da, and a position-dependent part

    w2(z/a) propto (D/2 - 2) [zeta_H(D, z/a) + zeta_H(D, 1 - z/a)]

that vanishes identically at D = 4, diverges like (z/a)^(-D) at the
walls for D > 4, and in physical variables is independent of the plate
separation, so it never contributes to the force.  The medium enters all
of these densities only through an overall 1/n (replace c by c/n).

``cutoff_mode_energy`` evaluates the raw vacuum-mode sum

    W = (1/n) sum_m int d^(d-1)k/(2 pi)^(d-1) sqrt(k^2 + pi^2 m^2/a^2)

under an exponential regulator e^(-lambda k_total); the value diverges
like lambda^(-D) and is always reported together with lambda and a
lambda-halving scan.  ``dispersive_hyper_energy`` replaces the constant
1/n by 1/n(k) with n(k) from the mode condition n(omega) omega = k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .engine import Tolerance, DEFAULT_TOL, adaptive_quad, sum_series
from .specfun import DimensionD, gamma_fn, riemann_zeta, hurwitz_zeta, solid_angle
from .matsubara import EnergyValue
from .dispersion import LorentzModel, photon_index

__all__ = [
    "HyperConfig",
    "DensityProfile",
    "CutoffEnergyResult",
    "pressure_quadrature",
    "pressure_closed",
    "density_profile",
    "pressure_from_w1",
    "cutoff_mode_energy",
    "dispersive_hyper_energy",
]


@dataclass(frozen=True)
class HyperConfig:
    """Spacetime dimension (int or DimensionD), separation a, index n;
    temperature is fixed at zero."""

    dim: DimensionD
    a: float = 1.0
    n: float = 1.0

    def __post_init__(self):
        if not isinstance(self.dim, DimensionD):
            object.__setattr__(self, "dim", DimensionD(self.dim))
        if not self.a > 0:
            raise ValueError(f"separation a must be > 0, got {self.a}")
        if self.n < 1:
            raise ValueError(f"refractive index n must be >= 1, got {self.n}")

    @property
    def D(self) -> int:
        return self.dim.D

    @property
    def d(self) -> int:
        return self.dim.d


def _pressure_prefactor(cfg: HyperConfig) -> float:
    d = cfg.d
    return -2.0 * (cfg.D - 2) * solid_angle(d - 1) / (2.0 * math.pi) ** d


def pressure_quadrature(
    cfg: HyperConfig, tol: Tolerance = DEFAULT_TOL, route: str = "polar"
) -> EnergyValue:
    """Pressure on a wall by numerical integration.

    route="polar" integrates the angular factor and the radial Bose-type
    integral separately; route="cartesian" does the nested (zeta, k)
    double integral as written.  Both must match pressure_closed.
    """
    d = cfg.d
    pref = _pressure_prefactor(cfg)
    if route == "polar":
        ang = adaptive_quad(lambda t: math.cos(t) ** (d - 2), 0.0, 0.5 * math.pi, tol)
        rad = adaptive_quad(
            lambda k: k**d / math.expm1(2.0 * k * cfg.a) if 2.0 * k * cfg.a < 690.0 else 0.0,
            0.0,
            math.inf,
            tol,
        )
        value = pref / cfg.n * ang.value * rad.value
        err = abs(pref / cfg.n) * (
            abs(ang.value) * rad.err_estimate + abs(rad.value) * ang.err_estimate
        )
        return EnergyValue(value, err, "quadrature", ang.converged and rad.converged)
    if route == "cartesian":
        n2 = cfg.n**2
        inner_tol = Tolerance(rel=min(tol.rel * 1e-2, 1e-12), abs=0.0, max_iter=tol.max_iter)
        state = {"ok": True}

        def inner(zeta: float) -> float:
            def f(k: float) -> float:
                kappa = math.sqrt(k * k + n2 * zeta * zeta)
                arg = 2.0 * kappa * cfg.a
                if arg > 690.0:
                    return 0.0
                return kappa * k ** (d - 2) / math.expm1(arg)

            res = adaptive_quad(f, 0.0, math.inf, inner_tol)
            state["ok"] &= res.converged
            return res.value

        outer = adaptive_quad(inner, 0.0, math.inf, tol)
        return EnergyValue(
            pref * outer.value,
            abs(pref) * outer.err_estimate,
            "quadrature",
            outer.converged and state["ok"],
        )
    raise ValueError(f"unknown route {route!r}")


def pressure_closed(cfg: HyperConfig) -> EnergyValue:
    """Closed-form pressure, no regularization needed."""
    D = cfg.D
    value = (
        -(D - 2)
        * (D - 1)
        / cfg.n
        * gamma_fn(D / 2.0)
        * riemann_zeta(float(D))
        / ((4.0 * math.pi) ** (D / 2.0) * cfg.a**D)
    )
    return EnergyValue(value, abs(value) * 1e-14, "closed_form")


def _w1(cfg: HyperConfig) -> float:
    D = cfg.D
    return (
        -(D - 2)
        * gamma_fn(D / 2.0)
        * riemann_zeta(float(D))
        / ((4.0 * math.pi) ** (D / 2.0) * cfg.a**D * cfg.n)
    )


@dataclass(frozen=True)
class DensityProfile:
    """Energy density across the gap at relative positions u = z/a:
    uniform part w1, anomaly part w2 (zero at D = 4, symmetric in
    u <-> 1-u), and their sum.  The regularized profile is w1 alone."""

    u_grid: tuple[float, ...]
    w1: float
    w2_values: tuple[float, ...]
    total: tuple[float, ...]


def density_profile(cfg: HyperConfig, u_grid) -> DensityProfile:
    """Local energy density w(u) = w1 + w2(u) for u = z/a in (0, 1); D >= 4."""
    D = cfg.D
    if D < 4:
        raise ValueError("density_profile requires D >= 4")
    u_grid = tuple(float(u) for u in u_grid)
    for u in u_grid:
        if not 0.0 < u < 1.0:
            raise ValueError(f"u must lie strictly inside (0, 1), got {u}")
    w1 = _w1(cfg)
    coef = D / 2.0 - 2.0
    if coef == 0.0:
        w2 = tuple(0.0 for _ in u_grid)
    else:
        pref = (
            -(D - 2)
            * gamma_fn(D / 2.0)
            / ((4.0 * math.pi) ** (D / 2.0) * cfg.a**D * cfg.n)
            * coef
        )
        w2 = tuple(
            pref * (hurwitz_zeta(float(D), u) + hurwitz_zeta(float(D), 1.0 - u))
            for u in u_grid
        )
    total = tuple(w1 + x for x in w2)
    return DensityProfile(u_grid=u_grid, w1=w1, w2_values=w2, total=total)


def pressure_from_w1(cfg: HyperConfig) -> tuple[EnergyValue, EnergyValue]:
    """The two density-route pressures: (D-1) w1 and -d(a w1)/da by
    central finite difference.  Both equal pressure_closed."""
    ident = EnergyValue((cfg.D - 1) * _w1(cfg), abs(_w1(cfg)) * 1e-14, "closed_form")

    def a_w1(a: float) -> float:
        return a * _w1(HyperConfig(dim=cfg.dim, a=a, n=cfg.n))

    h = cfg.a * 6.0e-6
    d_h = -(a_w1(cfg.a + h) - a_w1(cfg.a - h)) / (2.0 * h)
    d_h2 = -(a_w1(cfg.a + 0.5 * h) - a_w1(cfg.a - 0.5 * h)) / h
    fd = (4.0 * d_h2 - d_h) / 3.0
    return ident, EnergyValue(fd, abs(d_h2 - d_h) / 3.0 + abs(fd) * 1e-12, "quadrature")


@dataclass(frozen=True)
class CutoffEnergyResult:
    """Regulated mode-sum energy with its lambda-halving divergence scan
    ((lambda, value), (lambda/2, value), (lambda/4, value))."""

    value: EnergyValue
    scan: tuple[tuple[float, float], ...]


def _mode_sum(cfg: HyperConfig, lam: float, tol: Tolerance, n_of_k, m_max=None) -> EnergyValue:
    # sum over m of A_d * int_q^inf (E^2-q^2)^((d-3)/2) E^2 e^(-lam E) / n(E) dE,
    # q = pi m / a, after substituting E = sqrt(k^2 + q^2).
    d = cfg.d
    a_d = solid_angle(d - 1) / (2.0 * math.pi) ** (d - 1)
    quad_tol = Tolerance(rel=min(tol.rel, 1e-11), abs=0.0, max_iter=tol.max_iter)
    power = 0.5 * (d - 3)
    state = {"err": 0.0, "ok": True}

    def term(m: int) -> float:
        q = math.pi * m / cfg.a

        def f(e: float) -> float:
            base = (e * e - q * q) ** power if power != 0.0 else 1.0
            return base * e * e * math.exp(-lam * e) / n_of_k(e)

        res = adaptive_quad(f, q, math.inf, quad_tol)
        state["err"] += res.err_estimate
        state["ok"] &= res.converged
        return res.value

    if m_max is not None:
        total = sum(term(m) for m in range(1, m_max + 1))
        return EnergyValue(a_d * total, a_d * state["err"], "quadrature", state["ok"])
    series = sum_series(term, start=1, tol=tol)
    return EnergyValue(
        a_d * series.value,
        a_d * (series.err_estimate + state["err"]),
        "quadrature",
        series.converged and state["ok"],
    )


def cutoff_mode_energy(
    cfg: HyperConfig, lam: float, tol: Tolerance = DEFAULT_TOL, m_max: int | None = None
) -> CutoffEnergyResult:
    """Exponentially regulated vacuum-mode energy; medium enters only
    through the overall 1/n.  The scan reports the value at lambda,
    lambda/2 and lambda/4 (the ~lambda^(-D) growth is the divergence
    witness)."""
    if not lam > 0:
        raise ValueError(f"cutoff lambda must be > 0, got {lam}")
    values = []
    for scale in (1.0, 0.5, 0.25):
        res = _mode_sum(cfg, lam * scale, tol, lambda e: cfg.n, m_max=m_max)
        values.append((lam * scale, res))
    head = values[0][1]
    return CutoffEnergyResult(head, tuple((l, r.value) for l, r in values))


def dispersive_hyper_energy(
    cfg: HyperConfig,
    model: LorentzModel,
    lam: float,
    tol: Tolerance = DEFAULT_TOL,
    m_max: int | None = None,
) -> EnergyValue:
    """Regulated mode energy with the dispersive photon relation: each
    mode of wavenumber k carries energy k/n(k) with n(k) the photon-branch
    index from n(omega) omega = k.  Approaches cutoff_mode_energy with
    n = 1 as the regulator probes only wavenumbers far above the
    resonance."""
    if not lam > 0:
        raise ValueError(f"cutoff lambda must be > 0, got {lam}")
    if cfg.n != 1.0:
        raise ValueError("dispersive_hyper_energy models the medium via n(k); set n = 1")
    root_tol = Tolerance(rel=1e-13, abs=0.0, max_iter=tol.max_iter)

    def n_of_k(k: float) -> float:
        return photon_index(model, k, root_tol)

    return _mode_sum(cfg, lam, tol, n_of_k, m_max=m_max)
