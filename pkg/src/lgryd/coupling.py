"""Transition channels and Rabi frequencies.

A channel is one term of the quadruple sum over (q, l1, l2, l3) produced by
expanding the beam profile in solid harmonics and translating each one to
CM + electron coordinates: the projections are then pinned by Kronecker
deltas (m1 = sign(l) l1, m2 = l2, m3 = -l3, and M_f taking up the remainder
of the beam OAM), and the radial powers follow as alpha = l1+l2+l3+1 on the
electron and beta = |l|+2q-(l1+l2+l3) on the CM.  The matrix element is
assembled literally as

    E0 * g(l,q) * Gamma(alpha/2) * C-product * <f| r (r/w_r)^{alpha-1} |i>
       * <CM_f| x^beta |CM_i> * (angular bracket) * (fine-structure weight),

with the dipole-limit constant Gamma(alpha/2) kept exactly as the source
formula states it.  A numeric lambda-integral oracle rides along in every
result so the constant can be audited against the exact integral
int_0^1 lambda^{alpha-1} j_p(k lambda r) dlambda at the resonant k (see
docs/AUDIT.md for what that ratio reveals).

The six normalization constants of c_product follow the coordinate split:
the printed index pairs are used in the form that matches the CM-side
harmonics Y^{q-m2}_{q-l2} and Y^{-q-m3}_{q-l3} (two superscript/subscript
slips in the source expression are resolved so its own worked example,
C^1_1 C^0_0 (C^0_0)^4, comes out; the alternatives are identically zero).
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .atom import RydbergState, SpeciesParams, solve_radial
from .beam import BeamSpec, g_coeff, solid_norm
from .cm import CMState, cm_moment
from .specfun import clebsch_gordan, log_gamma, multi_gaunt, spherical_bessel
from .units import FINE_STRUCTURE, rabi_kHz as _to_kHz

__all__ = [
    "StateLabel",
    "Channel",
    "ChannelResult",
    "SweepRow",
    "StateSolver",
    "c_product",
    "enumerate_channels",
    "fine_structure_weight",
    "assemble",
    "lambda_integral_oracle",
    "compute_scenario",
    "sweep_topological_charge",
]

_SPECT = "SPDFGHIKLMNOQRTUV"


def _half(x: float, signed: bool = False) -> str:
    n = round(2 * x)
    return f"{n:+d}/2" if signed else f"{n}/2"


@dataclass(frozen=True, order=True)
class StateLabel:
    """Electronic final-state label (l, j, m_j); prints like D5/2(+3/2)."""

    l: int
    j: float
    m_j: float

    def __post_init__(self):
        if abs(abs(self.j - self.l) - 0.5) > 1e-9:
            raise ValueError(f"|j - l| must be 1/2: l={self.l}, j={self.j}")
        if abs(self.m_j) > self.j + 1e-9:
            raise ValueError(f"|m_j| <= j violated: {self.m_j} > {self.j}")

    @property
    def letter(self) -> str:
        return _SPECT[self.l] if self.l < len(_SPECT) else f"(l={self.l})"

    def __str__(self) -> str:
        return f"{self.letter}{_half(self.j)}({_half(self.m_j, signed=True)})"

    def species(self) -> str:
        """Label without the projection, e.g. D5/2 (aggregate reporting)."""
        return f"{self.letter}{_half(self.j)}"


@dataclass(frozen=True)
class Channel:
    """One (sigma, q, l1, l2, l3) term with its pinned projections and the
    final electronic label it feeds."""

    l: int
    sigma: int
    q: int
    l1: int
    l2: int
    l3: int
    m1: int
    m2: int
    m3: int
    M_i: int
    M_f: int
    final: StateLabel

    def __post_init__(self):
        al = abs(self.l)
        if not (0 <= self.l1 <= al):
            raise ValueError(f"l1 out of range: {self.l1} (|l|={al})")
        if not (0 <= self.l2 <= self.q and 0 <= self.l3 <= self.q):
            raise ValueError(f"l2/l3 out of range: {self.l2},{self.l3} (q={self.q})")
        sign_l = (self.l > 0) - (self.l < 0)
        if self.m1 != sign_l * self.l1:
            raise ValueError(f"m1 must be sign(l)*l1, got {self.m1}")
        if self.m2 != self.l2 or self.m3 != -self.l3:
            raise ValueError(f"(m2, m3) must be (l2, -l3), got ({self.m2}, {self.m3})")
        if self.M_f != self.l - self.m1 - self.m2 - self.m3 + self.M_i:
            raise ValueError("M_f does not close the OAM bookkeeping")
        if self.sigma not in (-1, 0, 1):
            raise ValueError(f"sigma must be -1, 0 or +1, got {self.sigma}")

    @property
    def alpha(self) -> int:
        return self.l1 + self.l2 + self.l3 + 1      # p = 0 throughout

    @property
    def beta(self) -> int:
        return abs(self.l) + 2 * self.q - self.l1 - self.l2 - self.l3

    @property
    def group(self) -> str:
        """Reporting group: pure dipole / vortex-fed / envelope-fed / mixed."""
        if self.l1 == self.l2 == self.l3 == 0:
            return "pure"
        if self.l1 == abs(self.l) and self.l2 == 0 and self.l3 == 0:
            return "via_tc"
        if self.l1 == 0:
            return "via_gt"
        return "other"


@dataclass(frozen=True)
class ChannelResult:
    channel: Channel
    coeff: float          # g(l,q) * Gamma(alpha/2) * C-product * lambda^(alpha-1)
    radial_e: float
    radial_cm: float
    angular: float
    cg_weight: float
    matrix_element: complex
    rabi_kHz: float
    lambda_audit: float   # Gamma(alpha/2) / exact lambda-integral at resonant k
    k_au: float
    closed: bool          # a selection factor vanished; kept for bookkeeping

    @property
    def final_composite(self) -> tuple:
        return (self.channel.final, self.channel.M_f)


def c_product(l: int, q: int, l1: int, l2: int, l3: int,
              m1: int, m2: int, m3: int) -> float:
    """Product of the six solid-harmonic normalization constants attached to
    one channel; 0 when any (rank, projection) pair is out of domain."""
    pairs = (
        (l1, m1), (abs(l) - l1, l - m1),
        (l2, m2), (q - l2, q - m2),
        (l3, m3), (q - l3, -q - m3),
    )
    log_total = 0.0
    for rank, proj in pairs:
        if rank < 0 or abs(proj) > rank:
            return 0.0
        log_total += math.log(solid_norm(rank, proj))
    return math.exp(log_total)


def fine_structure_weight(initial: tuple, final: tuple, orbital_bra_ket: tuple) -> float:
    """Spin-spectator reduction: sum_{m_s} <l_f m_lf, m_s | j_f m_jf> *
    <l_i m_li, m_s | j_i m_ji> for the given orbital projections."""
    l_i, j_i, m_ji = initial
    l_f, j_f, m_jf = final
    m_li, m_lf = orbital_bra_ket
    total = 0.0
    for twice_ms in (-1, 1):
        m_s = twice_ms / 2.0
        total += (clebsch_gordan(l_f, 0.5, m_lf, m_s, j_f, m_jf)
                  * clebsch_gordan(l_i, 0.5, m_li, m_s, j_i, m_ji))
    return total


def _gaunt_factors(ch: Channel) -> list:
    # dipole sigma-harmonic, plane-wave p=0 harmonic, three expansion harmonics
    return [(1, ch.sigma), (0, 0), (ch.l1, ch.m1), (ch.l2, ch.m2), (ch.l3, ch.m3)]


def _angular_and_cg(ch: Channel, l_i: int, j_i: float, m_ji: float):
    """(angular, cg_weight) for the channel.

    General case: sum over the initial m_l decomposition of |j_i m_ji>, each
    term weighted by both Clebsch-Gordan brackets.  When a single m_li
    contributes (any S initial state) the two factors separate cleanly and
    are reported apart; otherwise the contraction lands in `angular` and
    cg_weight is 1 by convention.
    """
    fs = _gaunt_factors(ch)
    dm = ch.sigma + ch.m1 + ch.m2 + ch.m3
    terms = []
    for twice_mli in range(-2 * l_i, 2 * l_i + 1, 2):
        m_li = twice_mli / 2.0
        m_lf = m_li + dm
        if abs(m_lf) > ch.final.l:
            continue
        w = fine_structure_weight((l_i, j_i, m_ji),
                                  (ch.final.l, ch.final.j, ch.final.m_j),
                                  (m_li, m_lf))
        if w == 0.0:
            continue
        g = multi_gaunt(fs, (ch.final.l, round(m_lf)), (l_i, round(m_li)))
        terms.append((w, g))
    if not terms:
        return 0.0, 0.0
    if len(terms) == 1:
        w, g = terms[0]
        return g, w
    return sum(w * g for w, g in terms), 1.0


def enumerate_channels(beam: BeamSpec, initial_e: RydbergState, initial_cm: CMState,
                       final_l_f_max: int = 3, j_policy: str = "stretched",
                       include_elastic: bool = False) -> list[Channel]:
    """All index tuples compatible with the selection deltas, paired with
    every angular-reachable final electronic label; deterministic
    lexicographic order in (q, l1, l2, l3, sigma, l_f, j_f)."""
    if initial_e.m_j is None:
        raise ValueError("initial state needs m_j for channel enumeration")
    if j_policy not in ("stretched", "all"):
        raise ValueError(f"unknown j_policy {j_policy!r}")
    l, sigma = beam.l, beam.sigma
    l_i, j_i, m_ji = initial_e.l, initial_e.j, initial_e.m_j
    M_i = initial_cm.M
    sign_l = (l > 0) - (l < 0)
    out = []
    for q in range(beam.q_max + 1):
        for l1 in range(abs(l) + 1):
            for l2 in range(q + 1):
                for l3 in range(q + 1):
                    m1, m2, m3 = sign_l * l1, l2, -l3
                    M_f = l - m1 - m2 - m3 + M_i
                    m_jf = m_ji + sigma + m1 + m2 + m3
                    parity = (l_i + 1 + l1 + l2 + l3) % 2
                    for l_f in range(final_l_f_max + 1):
                        if l_f % 2 != parity:
                            continue
                        if j_policy == "stretched":
                            j_fs = (l_f + 0.5,)
                        else:
                            j_fs = tuple(j for j in (l_f - 0.5, l_f + 0.5) if j > 0)
                        for j_f in j_fs:
                            if abs(m_jf) > j_f + 1e-9:
                                continue
                            label = StateLabel(l_f, j_f, m_jf)
                            ch = Channel(l=l, sigma=sigma, q=q, l1=l1, l2=l2,
                                         l3=l3, m1=m1, m2=m2, m3=m3,
                                         M_i=M_i, M_f=M_f, final=label)
                            ang, cg = _angular_and_cg(ch, l_i, j_i, m_ji)
                            if ang == 0.0:
                                continue   # angular selection closes this l_f
                            if not include_elastic and l_f == l_i and \
                                    abs(j_f - j_i) < 1e-9 and \
                                    abs(m_jf - m_ji) < 1e-9 and M_f == M_i:
                                continue
                            out.append(ch)
    out.sort(key=lambda c: (c.q, c.l1, c.l2, c.l3, c.sigma,
                            c.final.l, round(2 * c.final.j)))
    return out


def lambda_integral_oracle(exponent: int, p: int, k: float, r: float) -> float:
    """int_0^1 lambda^exponent j_p(k lambda r) dlambda by Gauss-Legendre."""
    if exponent < 0 or p < 0:
        raise ValueError("exponent and p must be non-negative")
    x, w = np.polynomial.legendre.leggauss(64)
    lam = 0.5 * (x + 1.0)
    vals = [li**exponent * spherical_bessel(p, k * li * r) for li in lam]
    return 0.5 * float(np.dot(w, vals))


def assemble(channel: Channel, beam: BeamSpec, psi_i: RydbergState,
             psi_f: RydbergState, cm_i: CMState, cm_f: CMState) -> ChannelResult:
    """Literal per-channel matrix element and Rabi frequency.

    The reported Rabi convention is nu = |<f|H|i>| / h, i.e. the matrix
    element in hartree times E_h/h, in kHz.
    """
    if cm_f.M != channel.M_f:
        raise ValueError(f"final CM projection {cm_f.M} != channel M_f {channel.M_f}")
    if psi_i.m_j is None:
        raise ValueError("initial state needs m_j")
    eps = 1.0 if channel.sigma == beam.sigma else 0.0
    w_r = cm_i.w_r
    al = channel.alpha

    coeff = (g_coeff(channel.l, channel.q, w_r, beam.w0)
             * math.exp(log_gamma(al / 2.0))
             * c_product(channel.l, channel.q, channel.l1, channel.l2,
                         channel.l3, channel.m1, channel.m2, channel.m3)
             * beam.mass_ratio ** (al - 1))
    from .atom import radial_matrix_element
    radial_e = radial_matrix_element(psi_f, psi_i, al, w_r)
    radial_cm = cm_moment(cm_f, cm_i, channel.beta)
    angular, cg = _angular_and_cg(channel, psi_i.l, psi_i.j, psi_i.m_j)

    me = complex(beam.E0 * eps * coeff * radial_e * radial_cm * angular * cg)
    closed = eps == 0.0 or angular == 0.0 or cg == 0.0 or radial_e == 0.0 \
        or radial_cm == 0.0

    # dipole-limit audit: the assembled constant Gamma(alpha/2) against the
    # exact lambda-integral at the resonant wavenumber and <r> of the bra/ket
    k_au = abs(psi_f.energy - psi_i.energy) * FINE_STRUCTURE
    r_char = radial_matrix_element(psi_i, psi_i, 1, w_r)
    exact = lambda_integral_oracle(al - 1, 0, k_au, r_char)
    audit = math.exp(log_gamma(al / 2.0)) / exact if exact else math.inf

    return ChannelResult(channel=channel, coeff=coeff, radial_e=radial_e,
                         radial_cm=radial_cm, angular=angular, cg_weight=cg,
                         matrix_element=me, rabi_kHz=_to_kHz(abs(me)),
                         lambda_audit=audit, k_au=k_au, closed=closed)


class StateSolver:
    """Memoizing wrapper around solve_radial for one species/grid step."""

    def __init__(self, species: SpeciesParams, step: float = 0.01):
        self.species = species
        self.step = step
        self._cache: dict = {}

    def get(self, n: int, l: int, j: float) -> RydbergState:
        key = (n, l, round(2 * j))
        if key not in self._cache:
            from .atom import default_grid
            self._cache[key] = solve_radial(self.species, n, l, j,
                                            grid=default_grid(n, self.step))
        return self._cache[key]


def _minimal_final_cm(cm_i: CMState, M_f: int) -> CMState:
    # lowest N compatible with M_f, preserving the initial radial excitation
    N_f = abs(M_f) + (cm_i.N - abs(cm_i.M))
    return CMState(N_f, M_f, cm_i.w_r)


def compute_scenario(solver: StateSolver, beam: BeamSpec,
                     n: int, l_i: int, j_i: float, m_ji: float,
                     cm_i: CMState, *, final_l_f_max: int = 3,
                     n_final: int | None = None, j_policy: str = "stretched",
                     include_elastic: bool = False) -> list[ChannelResult]:
    """Solve, enumerate and assemble every channel of one beam scenario."""
    psi_i = solver.get(n, l_i, j_i).with_m_j(m_ji)
    # the label-level diagonal is only truly elastic if n does not change
    keep_diag = include_elastic or (n_final is not None and n_final != n)
    channels = enumerate_channels(beam, psi_i, cm_i, final_l_f_max,
                                  j_policy=j_policy,
                                  include_elastic=keep_diag)
    nf = n if n_final is None else n_final
    out = []
    for ch in channels:
        if ch.final.l >= nf:
            continue   # no bound final state under the centrifugal wall
        psi_f = solver.get(nf, ch.final.l, ch.final.j)
        cm_f = _minimal_final_cm(cm_i, ch.M_f)
        out.append(assemble(ch, beam, psi_i, psi_f, cm_i, cm_f))
    return out


class SweepRow(NamedTuple):
    l: int
    kind: str            # channel | group | total | aggregate
    group: str           # channel/group rows; '-' otherwise
    final_state: str
    M_f: int | None
    N_f: int | None
    q: int | None
    rabi_kHz: float


def sweep_topological_charge(l_values: Sequence[int], solver: StateSolver,
                             beam_template: BeamSpec, n: int, l_i: int,
                             j_i: float, m_ji: float, cm_i: CMState,
                             **scenario_kwargs) -> list[SweepRow]:
    """Per-l channel table plus three reductions:

    group      coherent sum of the channels of one reporting group feeding
               one final label (the via-TC / via-GT curves),
    total      coherent sum over everything feeding one final composite
               (electronic label + M_f),
    aggregate  root-sum-square of the totals over the projections of one
               electronic species (how curves collapse when the plot labels
               only, say, D5/2).
    """
    if not l_values:
        raise ValueError("sweep needs at least one l")
    rows: list[SweepRow] = []
    for l in l_values:
        beam = dataclasses.replace(beam_template, l=l)
        results = compute_scenario(solver, beam, n, l_i, j_i, m_ji, cm_i,
                                   **scenario_kwargs)
        groups: dict = {}
        totals: dict = {}
        for res in results:
            ch = res.channel
            N_f = abs(ch.M_f) + (cm_i.N - abs(cm_i.M))
            rows.append(SweepRow(l, "channel", ch.group, str(ch.final),
                                 ch.M_f, N_f, ch.q, res.rabi_kHz))
            gkey = (ch.group, str(ch.final), ch.M_f, N_f)
            groups[gkey] = groups.get(gkey, 0j) + res.matrix_element
            tkey = (str(ch.final), ch.M_f, N_f)
            totals[tkey] = totals.get(tkey, 0j) + res.matrix_element
        for (grp, label, M_f, N_f), me in sorted(groups.items()):
            rows.append(SweepRow(l, "group", grp, label, M_f, N_f, None,
                                 _to_kHz(abs(me))))
        agg: dict = {}
        for (label, M_f, N_f), me in sorted(totals.items()):
            rows.append(SweepRow(l, "total", "-", label, M_f, N_f, None,
                                 _to_kHz(abs(me))))
            species_label = label.split("(")[0]
            agg[species_label] = agg.get(species_label, 0.0) + abs(me) ** 2
        for label, sq in sorted(agg.items()):
            rows.append(SweepRow(l, "aggregate", "-", label, None, None, None,
                                 _to_kHz(math.sqrt(sq))))
    return rows
