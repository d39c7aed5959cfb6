"""Built-in verification suites.

Each suite re-derives a package result by an independent route (closed
forms, quadrature, exact integrals) and reports the worst residual.  These
back the `verify` subcommand; the same checks run with tighter harnesses in
the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .atom import default_grid, load_species, radial_matrix_element, solve_radial
from .beam import BeamSpec, solid_harmonic, translate_solid_harmonic, \
    verify_expansion
from .cm import CMState, cm_moment
from .coupling import lambda_integral_oracle
from .specfun import assoc_laguerre, multi_gaunt, spherical_harmonic, \
    sphere_quadrature


@dataclass
class SuiteReport:
    name: str
    passed: bool
    lines: list

    def render(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        body = "".join(f"    {ln}\n" for ln in self.lines)
        return f"[{status}] {self.name}\n{body}"


def _hydrogen_u(n: int, l: int, r: np.ndarray) -> np.ndarray:
    # closed-form u = r R_nl, pure Coulomb, atomic units
    rho = 2.0 * r / n
    log_norm = 0.5 * (math.log(2.0 / n) * 3 + math.lgamma(n - l)
                      - math.log(2.0 * n) - math.lgamma(n + l + 1))
    lag = np.array([assoc_laguerre(n - l - 1, 2 * l + 1, x) for x in rho])
    return r * np.exp(log_norm - rho / 2.0 + l * np.log(rho)) * lag


def suite_expansion_identity(w0: float = 51022.6, l_values=(-2, -1, 0, 1, 3),
                             q_max: int = 8, n_probes: int = 40,
                             rho_frac: float = 0.3) -> SuiteReport:
    """Truncated solid-harmonic expansion against the closed beam profile."""
    rng = np.random.default_rng(2024)
    worst = 0.0
    for l in l_values:
        beam = BeamSpec(l=l, w0=w0, E0=1.0, sigma=1, q_max=q_max)
        for _ in range(n_probes):
            rho = rho_frac * w0 * math.sqrt(rng.uniform())
            phi = rng.uniform(0.0, 2.0 * math.pi)
            z = w0 * rng.uniform(-0.05, 0.05)
            r = math.hypot(rho, z)
            theta = math.atan2(rho, z)
            chk = verify_expansion(beam, r, theta, phi)
            if chk.relative:
                worst = max(worst, chk.residual)
    ok = worst <= 1e-6
    return SuiteReport("expansion identity", ok,
                       [f"worst relative residual {worst:.3e} "
                        f"(bound 1e-6, q_max={q_max}, rho <= {rho_frac:g} w0)"])


def suite_addition_theorem(l_max: int = 4, n_vectors: int = 25) -> SuiteReport:
    """Solid-harmonic translation against direct evaluation at r_cm + r."""
    rng = np.random.default_rng(7)
    worst = 0.0
    for l in range(l_max + 1):
        for m in range(-l, l + 1):
            for _ in range(n_vectors):
                r_cm = rng.normal(size=3)
                r = rng.normal(size=3)
                direct = solid_harmonic(l, m, r_cm + r)
                total = sum(inner.coefficient * outer.coefficient
                            for inner, outer in
                            translate_solid_harmonic(l, m, r_cm, r))
                scale = max(1.0, abs(direct))
                worst = max(worst, abs(total - direct) / scale)
    ok = worst <= 1e-10
    return SuiteReport("addition theorem", ok,
                       [f"worst residual {worst:.3e} (bound 1e-10, l <= {l_max})"])


def suite_hydrogen_oracle() -> SuiteReport:
    """Numerov solver against closed-form Coulomb wavefunctions."""
    hy = load_species("hydrogen")
    worst_u = 0.0
    for n in range(1, 6):
        for l in range(n):
            st = solve_radial(hy, n, l, l + 0.5, grid=default_grid(n))
            xi = st.grid.xi
            u_num = st.chi * np.sqrt(xi)
            u_ref = _hydrogen_u(n, l, xi * xi)
            if np.dot(u_num, u_ref) < 0:
                u_num = -u_num
            worst_u = max(worst_u, float(np.max(np.abs(u_num - u_ref))))
    s1 = solve_radial(hy, 1, 0, 0.5, grid=default_grid(1))
    p2 = solve_radial(hy, 2, 1, 1.5, grid=default_grid(2))
    dip = radial_matrix_element(p2, s1, 1, 1.0)
    dip_ref = 128.0 * math.sqrt(6.0) / 243.0
    dip_err = abs(abs(dip) - dip_ref) / dip_ref
    ok = worst_u <= 1e-6 and dip_err <= 1e-4
    return SuiteReport("hydrogen oracle", ok,
                       [f"max-norm u error {worst_u:.3e} (bound 1e-6, n <= 5)",
                        f"<2p|r|1s> rel error {dip_err:.3e} (bound 1e-4)"])


def suite_gaunt_quadrature(n_sets: int = 60, max_rank: int = 4) -> SuiteReport:
    """multi_gaunt contractions against band-limited sphere quadrature."""
    rng = np.random.default_rng(11)
    worst = 0.0
    for _ in range(n_sets):
        n_fact = int(rng.integers(1, 4))
        factors = []
        for _ in range(n_fact):
            lf = int(rng.integers(0, max_rank + 1))
            factors.append((lf, int(rng.integers(-lf, lf + 1))))
        lb = int(rng.integers(0, max_rank + 1))
        lk = int(rng.integers(0, max_rank + 1))
        bra = (lb, int(rng.integers(-lb, lb + 1)))
        ket = (lk, int(rng.integers(-lk, lk + 1)))
        alg = multi_gaunt(factors, bra, ket)

        def integrand(th, ph):
            v = spherical_harmonic(*bra, th, ph).conjugate() \
                * spherical_harmonic(*ket, th, ph)
            for lf, mf in factors:
                v *= spherical_harmonic(lf, mf, th, ph)
            return v

        quad = sphere_quadrature(integrand, n_polar=16, n_azimuth=32)
        worst = max(worst, abs(alg - quad))
    ok = worst <= 1e-9
    return SuiteReport("gaunt vs quadrature", ok,
                       [f"worst abs deviation {worst:.3e} "
                        f"(bound 1e-9, {n_sets} random factor sets)"])


def suite_cm_orthonormality(N_max: int = 6) -> SuiteReport:
    """Oscillator overlaps and a ladder of closed-form moments."""
    w_r = 41573.97474176695
    worst = 0.0
    for M in range(-N_max, N_max + 1):
        ns = [N for N in range(abs(M), N_max + 1) if (N - abs(M)) % 2 == 0]
        for Na in ns:
            for Nb in ns:
                ov = cm_moment(CMState(Na, M, w_r), CMState(Nb, M, w_r), 0)
                want = 1.0 if Na == Nb else 0.0
                worst = max(worst, abs(ov - want))
    # stretched ladder <(L,L)| x^L |0,0> = sqrt(L!)
    ladder = 0.0
    for L in range(1, 7):
        got = cm_moment(CMState(L, L, w_r), CMState(0, 0, w_r), L)
        ladder = max(ladder, abs(got - math.sqrt(math.factorial(L))))
    ok = worst <= 1e-10 and ladder <= 1e-8
    return SuiteReport("CM orthonormality", ok,
                       [f"worst overlap deviation {worst:.3e} (bound 1e-10, "
                        f"N <= {N_max})",
                        f"worst ladder-moment deviation {ladder:.3e}"])


def suite_lambda_audit() -> SuiteReport:
    """Exact lambda-integral against the assembled dipole-limit constant."""
    lines = []
    worst = 0.0
    for alpha in (1, 2, 3, 4):
        exact0 = lambda_integral_oracle(alpha - 1, 0, 0.0, 1.0)
        worst = max(worst, abs(exact0 - 1.0 / alpha))
        ratio = math.gamma(alpha / 2.0) / exact0
        lines.append(f"alpha={alpha}: exact integral {exact0:.12f} "
                     f"(= 1/alpha), assembled/exact = {ratio:.6f} "
                     f"(= alpha*Gamma(alpha/2))")
    ok = worst <= 1e-12
    lines.insert(0, f"worst |integral - 1/alpha| {worst:.3e} (bound 1e-12)")
    return SuiteReport("lambda-integral audit", ok, lines)


ALL_SUITES = [suite_expansion_identity, suite_addition_theorem,
              suite_hydrogen_oracle, suite_gaunt_quadrature,
              suite_cm_orthonormality, suite_lambda_audit]


def run_all(suites=None) -> tuple[bool, str]:
    reports = [fn() for fn in (suites or ALL_SUITES)]
    text = "".join(r.render() for r in reports)
    n_ok = sum(r.passed for r in reports)
    text += f"{n_ok}/{len(reports)} suites passed\n"
    return all(r.passed for r in reports), text
