"""Center-of-mass states of the 2-D harmonic trap.

The transverse CM wavefunction factorizes as A_{N,M}(r/w_r) e^{iM phi}/sqrt(2pi);
only the radial amplitude lives here -- the azimuthal quantum number enters
the coupling module through a Kronecker delta, and the phi integral is part
of the angular algebra there.  Radial moments are evaluated by Gauss-Laguerre
quadrature after u = x^2, where the integrand is exactly (polynomial) x
u^{a} e^{-u} and the rule is exact at modest node counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import roots_genlaguerre

from .specfun import assoc_laguerre, log_factorial

__all__ = ["CMState", "cm_amplitude", "cm_moment", "cm_energy"]


@dataclass(frozen=True)
class CMState:
    """Trap level |N, M>: N vibrational quanta, projection M, width w_r (au)."""

    N: int
    M: int
    w_r: float

    def __post_init__(self):
        if self.N < abs(self.M):
            raise ValueError(f"need N >= |M|, got N={self.N}, M={self.M}")
        if (self.N - abs(self.M)) % 2:
            raise ValueError(f"N - |M| must be even, got N={self.N}, M={self.M}")
        if self.w_r <= 0:
            raise ValueError(f"trap length must be positive, got {self.w_r}")

    @property
    def n_minus(self) -> int:
        return (self.N - abs(self.M)) // 2

    @property
    def n_plus(self) -> int:
        return (self.N + abs(self.M)) // 2


def _log_norm(s: CMState) -> float:
    # sqrt(2 n-! / n+!); |M| in the radial power keeps M < 0 normalizable
    return 0.5 * (math.log(2.0) + log_factorial(s.n_minus) - log_factorial(s.n_plus))


def cm_amplitude(s: CMState, r_cm: float) -> float:
    """Radial amplitude A_{N,M}(x), x = r_cm/w_r, with int A^2 r dr = 1."""
    if r_cm < 0:
        raise ValueError("radius must be non-negative")
    x = r_cm / s.w_r
    am = abs(s.M)
    if x == 0.0:
        if am > 0:
            return 0.0
        return math.exp(_log_norm(s)) * assoc_laguerre(s.n_minus, 0.0, 0.0) / s.w_r
    return (math.exp(_log_norm(s) + am * math.log(x) - 0.5 * x * x)
            * assoc_laguerre(s.n_minus, float(am), x * x) / s.w_r)


def cm_moment(f: CMState, i: CMState, beta: int) -> float:
    """<f| x^beta |i> over the radial measure x dx (dimensionless; the caller
    owns the azimuthal delta).

    After u = x^2 the integrand is u^{(|Mf|+|Mi|+beta)/2} L_{nf} L_{ni} e^{-u}/2,
    handled exactly by generalized Gauss-Laguerre with the fractional part of
    the power as the weight exponent.
    """
    if beta < 0:
        raise ValueError("moment order must be non-negative")
    if f.w_r != i.w_r:
        raise ValueError(f"trap lengths differ: {f.w_r} vs {i.w_r}")
    a = 0.5 * (abs(f.M) + abs(i.M) + beta)
    npts = f.n_minus + i.n_minus + 2
    u, w = roots_genlaguerre(npts, a)
    lf = np.array([assoc_laguerre(f.n_minus, float(abs(f.M)), ui) for ui in u])
    li = np.array([assoc_laguerre(i.n_minus, float(abs(i.M)), ui) for ui in u])
    norm = math.exp(_log_norm(f) + _log_norm(i))
    return 0.5 * norm * float(np.dot(w, lf * li))


def cm_energy(s: CMState, m_t: float) -> float:
    """Trap level energy (N+1)/(w_r^2 m_t), atomic units."""
    if m_t <= 0:
        raise ValueError(f"total mass must be positive, got {m_t}")
    return (s.N + 1.0) / (s.w_r ** 2 * m_t)
