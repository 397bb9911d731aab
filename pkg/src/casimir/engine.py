"""Generic numerical kernel: adaptive quadrature, series summation,
bracketed root finding, and central finite differences.

Everything here is a pure function of its inputs; there is no shared
mutable state, so all routines are safe to call concurrently.

Semi-infinite integrals are handled by the variable change

    x = lo + t/(1-t),   dx = dt/(1-t)^2,   t in (0, 1),

after which the finite interval is subdivided adaptively with a 15-point
Gauss-Legendre rule on each panel (interior nodes only, so endpoint
singularities of integrable type are never sampled).
"""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

__all__ = [
    "Tolerance",
    "NumericResult",
    "DEFAULT_TOL",
    "adaptive_quad",
    "sum_series",
    "find_root",
    "finite_diff",
]

_EPS = float(np.finfo(float).eps)

# Fixed-order interior rule used on every panel.
_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(15)
_GL_NODES = tuple(float(x) for x in _GL_NODES)
_GL_WEIGHTS = tuple(float(w) for w in _GL_WEIGHTS)


@dataclass(frozen=True)
class Tolerance:
    """Convergence targets shared by the numerical routines.

    rel is a relative tolerance (> 0), abs an absolute floor (>= 0),
    max_iter the iteration budget (>= 1).
    """

    rel: float = 1e-10
    abs: float = 1e-14
    max_iter: int = 10**6

    def __post_init__(self):
        if not self.rel > 0:
            raise ValueError(f"rel tolerance must be > 0, got {self.rel}")
        if self.abs < 0:
            raise ValueError(f"abs tolerance must be >= 0, got {self.abs}")
        if self.max_iter < 1:
            raise ValueError(f"max_iter must be >= 1, got {self.max_iter}")

    def target(self, value: float) -> float:
        return max(self.rel * abs(value), self.abs)


DEFAULT_TOL = Tolerance()


@dataclass(frozen=True)
class NumericResult:
    """Value with an error estimate and convergence bookkeeping.

    When converged is True, err_estimate <= max(rel*|value|, abs) for the
    tolerance the computation ran with.
    """

    value: float
    err_estimate: float
    evaluations: int
    converged: bool

    def __float__(self) -> float:
        return self.value


class _Counter:
    __slots__ = ("n",)

    def __init__(self):
        self.n = 0


def _gl15(f: Callable[[float], float], a: float, b: float, counter: _Counter) -> float:
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    total = 0.0
    for x, w in zip(_GL_NODES, _GL_WEIGHTS):
        fx = f(mid + half * x)
        if fx != fx:  # NaN from the integrand is a hard error
            raise ValueError(f"integrand returned NaN at x={mid + half * x!r}")
        total += w * fx
    counter.n += 15
    return half * total


def adaptive_quad(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: Tolerance = DEFAULT_TOL,
    max_panels: int = 2000,
) -> NumericResult:
    """Integrate f over (lo, hi); hi may be math.inf.

    Globally adaptive bisection: the panel with the largest error estimate
    (|coarse - sum of halves|) is split until the summed estimate meets
    tol.  Non-convergence within max_panels subdivisions is reported via
    converged=False rather than raised; a NaN integrand raises.
    """
    if not lo < hi:
        raise ValueError(f"need lo < hi, got ({lo}, {hi})")
    if math.isinf(lo):
        raise ValueError("lower limit must be finite")

    if math.isinf(hi):
        base = lo

        def g(t: float) -> float:
            u = 1.0 - t
            return f(base + t / u) / (u * u)

        return _adaptive_finite(g, 0.0, 1.0, tol, max_panels)
    return _adaptive_finite(f, lo, hi, tol, max_panels)


def _adaptive_finite(f, a: float, b: float, tol: Tolerance, max_panels: int) -> NumericResult:
    counter = _Counter()
    tie = itertools.count()

    def make_panel(lo, hi, whole=None):
        if whole is None:
            whole = _gl15(f, lo, hi, counter)
        mid = 0.5 * (lo + hi)
        left = _gl15(f, lo, mid, counter)
        right = _gl15(f, mid, hi, counter)
        fine = left + right
        err = abs(whole - fine)
        return (-err, next(tie), lo, hi, fine, left, right)

    heap = [make_panel(a, b)]
    total = heap[0][4]
    total_err = -heap[0][0]

    for _ in range(max_panels):
        if total_err <= tol.target(total):
            return NumericResult(total, total_err, counter.n, True)
        neg_err, _, lo, hi, fine, left, right = heapq.heappop(heap)
        total -= fine
        total_err += neg_err
        mid = 0.5 * (lo + hi)
        for child in (make_panel(lo, mid, whole=left), make_panel(mid, hi, whole=right)):
            heapq.heappush(heap, child)
            total += child[4]
            total_err -= child[0]

    return NumericResult(total, total_err, counter.n, total_err <= tol.target(total))


def sum_series(
    term: Callable[[int], float],
    start: int = 1,
    tol: Tolerance = DEFAULT_TOL,
) -> NumericResult:
    """Sum term(m) for m >= start until the stopping rule holds.

    Stops once |term(m)| < tol.abs and |term(m)| < tol.rel*|partial sum|
    for 3 consecutive terms (guards against plateaus).  Terms are assumed
    eventually monotone decreasing; the error estimate is the remainder
    bound |t| r/(1-r) built from the last term and the observed decay
    ratio r (falling back to |t| when the ratio is not contractive).
    """
    partial = 0.0
    streak = 0
    last = prev = 0.0
    m = start
    for _ in range(tol.max_iter):
        t = term(m)
        if t != t:
            raise ValueError(f"series term returned NaN at m={m}")
        partial += t
        prev, last = last, abs(t)
        # an exactly-zero term (underflowed tail) is below any tolerance
        if last < tol.abs and (last == 0.0 or last < tol.rel * abs(partial)):
            streak += 1
            if streak >= 3:
                err = _tail_bound(last, prev)
                return NumericResult(partial, err, m - start + 1, err <= tol.target(partial))
        else:
            streak = 0
        m += 1
    return NumericResult(partial, _tail_bound(last, prev), m - start, False)


def _tail_bound(last: float, prev: float) -> float:
    if 0.0 < last < prev:
        r = last / prev
        return last * r / (1.0 - r)
    return last


def find_root(
    f: Callable[[float], float],
    bracket: tuple[float, float],
    tol: Tolerance = DEFAULT_TOL,
) -> float:
    """Brent's method on a sign-changing bracket.

    Raises ValueError when f does not change sign over the bracket and
    RuntimeError when tol.max_iter iterations do not shrink the interval
    to 2*eps*|x| + tol.abs (the absolute floor drives the stop, so the
    relative-width condition tol.rel*|x| is met a fortiori for any root
    away from zero).
    """
    a, b = float(bracket[0]), float(bracket[1])
    fa, fb = f(a), f(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if (fa > 0) == (fb > 0):
        raise ValueError(f"bracket ({a}, {b}) does not straddle a root: f={fa}, {fb}")

    c, fc = a, fa
    d = e = b - a
    for _ in range(tol.max_iter):
        if abs(fc) < abs(fb):
            a, b, c = b, c, b
            fa, fb, fc = fb, fc, fb
        tol1 = 2.0 * _EPS * abs(b) + 0.5 * tol.abs
        m = 0.5 * (c - b)
        if abs(m) <= tol1 or fb == 0.0:
            return b
        if abs(e) < tol1 or abs(fa) <= abs(fb):
            d = e = m
        else:
            s = fb / fa
            if a == c:
                p = 2.0 * m * s
                q = 1.0 - s
            else:
                q = fa / fc
                r = fb / fc
                p = s * (2.0 * m * q * (q - r) - (b - a) * (r - 1.0))
                q = (q - 1.0) * (r - 1.0) * (s - 1.0)
            if p > 0:
                q = -q
            else:
                p = -p
            s, e = e, d
            if 2.0 * p < 3.0 * m * q - abs(tol1 * q) and p < abs(0.5 * s * q):
                d = p / q
            else:
                d = e = m
        a, fa = b, fb
        b += d if abs(d) > tol1 else math.copysign(tol1, m)
        fb = f(b)
        if (fb > 0) == (fc > 0):
            c, fc = a, fa
            d = e = b - a
    raise RuntimeError(f"find_root did not converge in {tol.max_iter} iterations")


def finite_diff(f: Callable[[float], float], x: float, h: float) -> float:
    """Central difference (f(x+h) - f(x-h)) / (2h).

    The caller chooses h; for smooth f a reasonable default is
    x * eps**(1/3).  On cubics the truncation error is exactly
    h^2 * f'''(x) / 6.
    """
    if not h > 0:
        raise ValueError(f"step h must be > 0, got {h}")
    return (f(x + h) - f(x - h)) / (2.0 * h)
