"""Channel enumeration, normalization products and the assembled matrix
element.

Frozen angular brackets below were derived with sympy's exact gaunt
coefficients (pairwise product reduction, exact rationals) — independent of
the package's own multi_gaunt:

    <Y_1^1 | Y_1^1 (Y_0^0)^4 | Y_0^0>                =  1/(32 pi^{5/2})
    <Y_2^2 | Y_1^1 Y_0^0 Y_1^1 (Y_0^0)^2 | Y_0^0>    =  sqrt(30)/(160 pi^{5/2})
    <Y_2^0 | Y_1^1 (Y_0^0)^3 Y_1^{-1} | Y_0^0>       =  sqrt(5)/(160 pi^{5/2})
    <Y_0^0 | Y_1^1 (Y_0^0)^3 Y_1^{-1} | Y_0^0>       = -1/(32 pi^{5/2})
    <Y_3^1 | Y_1^1 (Y_0^0)^4 | Y_0^0>                =  0
"""

import math

import pytest

from lgryd.atom import load_species, solve_radial, default_grid, radial_matrix_element
from lgryd.beam import BeamSpec, g_coeff, solid_norm
from lgryd.cm import CMState, cm_moment
from lgryd.coupling import (Channel, StateLabel, StateSolver, assemble,
                            c_product, compute_scenario, enumerate_channels,
                            fine_structure_weight, lambda_integral_oracle,
                            sweep_topological_charge)
from lgryd.specfun import clebsch_gordan, multi_gaunt
from lgryd.units import rabi_kHz as to_kHz

FOUR_PI = 4.0 * math.pi


# ---------------------------------------------------------------- labels

class TestStateLabel:
    def test_str_forms(self):
        assert str(StateLabel(2, 2.5, 1.5)) == "D5/2(+3/2)"
        assert str(StateLabel(1, 1.5, -0.5)) == "P3/2(-1/2)"
        assert str(StateLabel(0, 0.5, -0.5)) == "S1/2(-1/2)"

    def test_species_drops_projection(self):
        assert StateLabel(2, 2.5, 1.5).species() == "D5/2"

    def test_csv_safe(self):
        assert "," not in str(StateLabel(3, 3.5, -3.5))

    def test_validation(self):
        with pytest.raises(ValueError):
            StateLabel(2, 1.0, 0.5)
        with pytest.raises(ValueError):
            StateLabel(1, 1.5, 2.5)


# ------------------------------------------------------------- c_product

class TestCProduct:
    def test_all_zero_indices(self):
        # six C^0_0 factors, each sqrt(4 pi)
        assert c_product(0, 0, 0, 0, 0, 0, 0, 0) == pytest.approx((FOUR_PI) ** 3,
                                                                  rel=1e-12)

    def test_vortex_transfer_example(self):
        # l=1, q=0, l1=1: C^1_1 C^0_0 (C^0_0)^4
        want = math.sqrt(8.0 * math.pi / 3.0) * FOUR_PI ** 2.5
        assert c_product(1, 0, 1, 0, 0, 1, 0, 0) == pytest.approx(want, rel=1e-12)

    def test_out_of_domain_projection_is_zero(self):
        # m1 = 1 with l1 = 0 leaves |m| > rank in the first factor
        assert c_product(1, 0, 0, 0, 0, 1, 0, 0) == 0.0

    def test_negative_rank_is_zero(self):
        # l2 > q drives the fourth factor's rank negative
        assert c_product(1, 0, 0, 1, 0, 0, 1, 0) == 0.0

    def test_matches_factor_by_factor(self):
        l, q, l1, l2, l3 = 2, 1, 1, 1, 0
        m1, m2, m3 = 1, 1, 0
        pairs = [(l1, m1), (abs(l) - l1, l - m1), (l2, m2), (q - l2, q - m2),
                 (l3, m3), (q - l3, -q - m3)]
        want = math.prod(solid_norm(r, m) for r, m in pairs)
        assert c_product(l, q, l1, l2, l3, m1, m2, m3) == pytest.approx(want,
                                                                        rel=1e-12)

    def test_mirror_symmetry(self):
        # the mirror beam (l -> -l) swaps the two envelope factors, so the
        # partner tuple is (l1, l3, l2) with every projection negated
        for (l, q, l1, l2, l3) in [(1, 0, 1, 0, 0), (1, 1, 0, 1, 0),
                                   (2, 1, 1, 1, 1), (3, 2, 2, 0, 1)]:
            m1, m2, m3 = l1 if l > 0 else -l1, l2, -l3
            a = c_product(l, q, l1, l2, l3, m1, m2, m3)
            b = c_product(-l, q, l1, l3, l2, -m1, l3, -l2)
            assert a == pytest.approx(b, rel=1e-12)


# ------------------------------------------------- fine-structure weight

class TestFineStructureWeight:
    S_HALF = (0, 0.5, -0.5)

    def test_s_to_d_stretched(self):
        w = fine_structure_weight(self.S_HALF, (2, 2.5, 1.5), (0, 2))
        assert w == pytest.approx(1.0 / math.sqrt(5.0), rel=1e-12)

    def test_s_to_d_edge(self):
        w = fine_structure_weight(self.S_HALF, (2, 2.5, -2.5), (0, -2))
        assert w == pytest.approx(1.0, rel=1e-12)

    def test_s_to_p(self):
        w = fine_structure_weight(self.S_HALF, (1, 1.5, 0.5), (0, 1))
        assert w == pytest.approx(1.0 / math.sqrt(3.0), rel=1e-12)

    def test_spin_projection_mismatch_is_zero(self):
        # the only surviving m_s differs between bra and ket
        assert fine_structure_weight(self.S_HALF, (1, 1.5, 1.5), (0, 1)) == 0.0

    def test_matches_direct_cg_sum(self):
        initial, final = (1, 1.5, 0.5), (2, 2.5, 1.5)
        for m_li in (-1, 0, 1):
            m_lf = m_li + 1
            want = sum(clebsch_gordan(2, 0.5, m_lf, ms, 2.5, 1.5)
                       * clebsch_gordan(1, 0.5, m_li, ms, 1.5, 0.5)
                       for ms in (-0.5, 0.5))
            got = fine_structure_weight(initial, final, (m_li, m_lf))
            assert got == pytest.approx(want, abs=1e-14)


# --------------------------------------------------------- lambda oracle

class TestLambdaOracle:
    def test_dipole_limit_monomial(self):
        assert lambda_integral_oracle(0, 0, 0.0, 1.0) == pytest.approx(1.0, abs=1e-14)
        assert lambda_integral_oracle(1, 0, 0.0, 1.0) == pytest.approx(0.5, abs=1e-14)
        assert lambda_integral_oracle(3, 0, 0.0, 5.0) == pytest.approx(0.25, abs=1e-14)

    def test_small_kr_expansion_p0(self):
        # int_0^1 j_0(kr lam) dlam = 1 - (kr)^2/18 + O(kr^4)
        kr = 0.2
        got = lambda_integral_oracle(0, 0, kr, 1.0)
        assert got == pytest.approx(1.0 - kr * kr / 18.0, abs=5e-6)

    def test_small_kr_expansion_p1(self):
        # int_0^1 j_1(kr lam) dlam = kr/6 - (kr)^3/120 + (kr)^5/5040 - ...
        kr = 0.1
        got = lambda_integral_oracle(0, 1, kr, 1.0)
        want = kr / 6.0 - kr ** 3 / 120.0 + kr ** 5 / 5040.0
        assert got == pytest.approx(want, abs=1e-12)

    def test_scale_split_between_k_and_r(self):
        a = lambda_integral_oracle(2, 1, 0.05, 10.0)
        b = lambda_integral_oracle(2, 1, 0.5, 1.0)
        assert a == pytest.approx(b, rel=1e-12)

    def test_validation(self):
        with pytest.raises(ValueError):
            lambda_integral_oracle(-1, 0, 0.0, 1.0)
        with pytest.raises(ValueError):
            lambda_integral_oracle(0, -1, 0.0, 1.0)


# ----------------------------------------------------- channel invariants

def mk_channel(l, sigma, q, l1, l2, l3, M_i, final):
    sign_l = (l > 0) - (l < 0)
    m1, m2, m3 = sign_l * l1, l2, -l3
    return Channel(l=l, sigma=sigma, q=q, l1=l1, l2=l2, l3=l3,
                   m1=m1, m2=m2, m3=m3, M_i=M_i,
                   M_f=l - m1 - m2 - m3 + M_i, final=final)


class TestChannelInvariants:
    def test_alpha_beta(self):
        ch = mk_channel(1, 1, 1, 0, 1, 0, 0, StateLabel(2, 2.5, 1.5))
        assert ch.alpha == 2 and ch.beta == 2

    def test_group_labels(self):
        lbl = StateLabel(2, 2.5, 1.5)
        assert mk_channel(1, 1, 1, 0, 0, 0, 0, StateLabel(1, 1.5, 0.5)).group == "pure"
        assert mk_channel(1, 1, 0, 1, 0, 0, 0, lbl).group == "via_tc"
        assert mk_channel(1, 1, 1, 0, 1, 0, 0, lbl).group == "via_gt"
        assert mk_channel(1, 1, 1, 1, 1, 1, 0, lbl).group == "other"

    def test_delta_violations_raise(self):
        lbl = StateLabel(1, 1.5, 0.5)
        with pytest.raises(ValueError):
            Channel(l=1, sigma=1, q=0, l1=1, l2=0, l3=0, m1=-1, m2=0, m3=0,
                    M_i=0, M_f=2, final=lbl)
        with pytest.raises(ValueError):
            Channel(l=1, sigma=1, q=0, l1=0, l2=0, l3=0, m1=0, m2=0, m3=0,
                    M_i=0, M_f=0, final=lbl)   # M_f must close to l + M_i
        with pytest.raises(ValueError):
            Channel(l=1, sigma=1, q=0, l1=2, l2=0, l3=0, m1=2, m2=0, m3=0,
                    M_i=0, M_f=-1, final=lbl)  # l1 > |l|


# ----------------------------------------------------------- enumeration

RB = load_species("rb")
HY = load_species("hydrogen")


def hydrogen_initial(n=4, m_j=-0.5):
    return solve_radial(HY, n, 0, 0.5, grid=default_grid(n)).with_m_j(m_j)


S_INIT = hydrogen_initial()
CM0 = CMState(0, 0, 41573.97474176695)


def beam_for(l, sigma, q_max=0):
    return BeamSpec(l=l, w0=51022.6, E0=4.6672e-9, sigma=sigma, q_max=q_max)


class TestEnumerateChannels:
    def brief(self, chans):
        return [(c.q, c.l1, c.l2, c.l3, c.M_f, str(c.final)) for c in chans]

    def test_sign_combo_inventories_q0(self):
        # lowest-envelope-order inventory for all four (sign l, sign sigma)
        want = {
            (1, 1): [(0, 0, 0, 0, 1, "P3/2(+1/2)"),
                     (0, 1, 0, 0, 0, "D5/2(+3/2)")],
            (1, -1): [(0, 0, 0, 0, 1, "P3/2(-3/2)"),
                      (0, 1, 0, 0, 0, "D5/2(-1/2)")],
            (-1, 1): [(0, 0, 0, 0, -1, "P3/2(+1/2)"),
                      (0, 1, 0, 0, 0, "D5/2(-1/2)")],
            (-1, -1): [(0, 0, 0, 0, -1, "P3/2(-3/2)"),
                       (0, 1, 0, 0, 0, "D5/2(-5/2)")],
        }
        for (l, sigma), rows in want.items():
            chans = enumerate_channels(beam_for(l, sigma), S_INIT, CM0, 3)
            assert self.brief(chans) == rows, (l, sigma)

    def test_first_envelope_order_count(self):
        chans = enumerate_channels(beam_for(1, 1, q_max=1), S_INIT, CM0, 3)
        assert len(chans) == 13
        # the envelope-fed CM double transfer: beam OAM + one envelope pair
        assert (1, 0, 0, 1, 2, "D5/2(-1/2)") in self.brief(chans)
        # same tuple also feeds an S final with the full 2 units on the CM
        assert (1, 0, 0, 1, 2, "S1/2(-1/2)") in self.brief(chans)

    def test_final_l_cap(self):
        chans = enumerate_channels(beam_for(1, 1, q_max=1), S_INIT, CM0, 2)
        assert len(chans) == 10
        assert all(c.final.l <= 2 for c in chans)

    def test_lexicographic_order(self):
        chans = enumerate_channels(beam_for(1, 1, q_max=2), S_INIT, CM0, 3)
        keys = [(c.q, c.l1, c.l2, c.l3, c.sigma, c.final.l, 2 * c.final.j)
                for c in chans]
        assert keys == sorted(keys)

    def test_oam_conservation_identity(self):
        # m_jf - m_ji + M_f - M_i == l + sigma for every emitted channel
        for l in (-2, -1, 0, 1, 2):
            for sigma in (-1, 0, 1):
                beam = beam_for(l, sigma, q_max=2)
                for cm_i in (CM0, CMState(3, -1, CM0.w_r)):
                    chans = enumerate_channels(beam, S_INIT, CM0 if cm_i is CM0
                                               else cm_i, 3)
                    for c in chans:
                        lhs = (c.final.m_j - S_INIT.m_j) + (c.M_f - c.M_i)
                        assert lhs == l + sigma, c

    def test_elastic_drop(self):
        # l=-1, sigma=+1, l1=1 reaches the initial label with M_f = M_i
        beam = beam_for(-1, 1)
        dropped = enumerate_channels(beam, S_INIT, CM0, 3)
        kept = enumerate_channels(beam, S_INIT, CM0, 3, include_elastic=True)
        assert len(kept) == len(dropped) + 1
        extra = [c for c in kept if c.final.l == 0]
        assert len(extra) == 1 and extra[0].M_f == 0

    def test_j_policy_all(self):
        stretched = enumerate_channels(beam_for(1, 1), S_INIT, CM0, 3)
        both = enumerate_channels(beam_for(1, 1), S_INIT, CM0, 3, j_policy="all")
        assert len(both) > len(stretched)
        assert {round(2 * c.final.j) for c in both} >= {3, 5}
        with pytest.raises(ValueError):
            enumerate_channels(beam_for(1, 1), S_INIT, CM0, 3, j_policy="frobnicate")

    def test_m_j_required(self):
        bare = solve_radial(HY, 4, 0, 0.5, grid=default_grid(4))
        with pytest.raises(ValueError):
            enumerate_channels(beam_for(1, 1), bare, CM0, 3)


# -------------------------------------------------------------- assemble

class TestAssemble:
    def setup_method(self):
        self.solver = StateSolver(HY)
        self.psi_i = self.solver.get(4, 0, 0.5).with_m_j(-0.5)
        self.beam = beam_for(1, 1, q_max=1)

    def test_factorization_wiring(self):
        # every reported factor recomputes independently from the parts
        w_r = CM0.w_r
        chans = enumerate_channels(self.beam, self.psi_i, CM0, 3)
        ch = next(c for c in chans if c.l1 == 1 and c.q == 0)
        psi_f = self.solver.get(4, 2, 2.5)
        cm_f = CMState(0, 0, w_r)
        res = assemble(ch, self.beam, self.psi_i, psi_f, CM0, cm_f)

        coeff = (g_coeff(1, 0, w_r, self.beam.w0) * math.gamma(1.0)
                 * c_product(1, 0, 1, 0, 0, 1, 0, 0))
        ang = multi_gaunt([(1, 1), (0, 0), (1, 1), (0, 0), (0, 0)], (2, 2), (0, 0))
        cg = clebsch_gordan(2, 0.5, 2, -0.5, 2.5, 1.5)
        rad = radial_matrix_element(psi_f, self.psi_i, 2, w_r)
        want = self.beam.E0 * coeff * rad * 1.0 * ang * cg
        assert res.coeff == pytest.approx(coeff, rel=1e-12)
        assert res.radial_e == pytest.approx(rad, rel=1e-12)
        assert res.radial_cm == 1.0
        assert res.angular == pytest.approx(ang, rel=1e-12)
        assert res.cg_weight == pytest.approx(cg, rel=1e-12)
        assert abs(res.matrix_element) == pytest.approx(abs(want), rel=1e-12)
        assert res.rabi_kHz == pytest.approx(to_kHz(abs(want)), rel=1e-12)
        assert not res.closed

    def test_frozen_angular_values(self):
        # sympy-exact brackets (module docstring)
        exact_pure = 1.0 / (32.0 * math.pi ** 2.5)
        exact_tc = math.sqrt(30.0) / (160.0 * math.pi ** 2.5)
        exact_gt0 = math.sqrt(5.0) / (160.0 * math.pi ** 2.5)
        got_pure = multi_gaunt([(1, 1), (0, 0), (0, 0), (0, 0), (0, 0)],
                               (1, 1), (0, 0))
        got_tc = multi_gaunt([(1, 1), (0, 0), (1, 1), (0, 0), (0, 0)],
                             (2, 2), (0, 0))
        got_gt0 = multi_gaunt([(1, 1), (0, 0), (0, 0), (0, 0), (1, -1)],
                              (2, 0), (0, 0))
        assert got_pure == pytest.approx(exact_pure, rel=1e-12)
        assert got_tc == pytest.approx(exact_tc, rel=1e-12)
        assert got_gt0 == pytest.approx(exact_gt0, rel=1e-12)

    def test_cm_projection_mismatch_raises(self):
        chans = enumerate_channels(self.beam, self.psi_i, CM0, 3)
        ch = chans[0]
        psi_f = self.solver.get(4, ch.final.l, ch.final.j)
        with pytest.raises(ValueError):
            assemble(ch, self.beam, self.psi_i, psi_f,
                     CM0, CMState(abs(ch.M_f) + 2, ch.M_f + 1, CM0.w_r))

    def test_zero_field_zero_rabi(self):
        dark = BeamSpec(l=1, w0=self.beam.w0, E0=0.0, sigma=1)
        res = compute_scenario(StateSolver(HY), dark, 4, 0, 0.5, -0.5, CM0)
        assert res and all(r.rabi_kHz == 0.0 for r in res)

    def test_polarization_selector(self):
        # a channel built for the other polarization is closed under this beam
        ch = mk_channel(1, -1, 0, 0, 0, 0, 0, StateLabel(1, 1.5, -1.5))
        psi_f = self.solver.get(4, 1, 1.5)
        res = assemble(ch, self.beam, self.psi_i, psi_f, CM0,
                       CMState(1, 1, CM0.w_r))
        assert res.closed and res.matrix_element == 0

    def test_dipole_limit_audit_exact_for_degenerate_pair(self):
        # hydrogen 4S and 4P are degenerate -> k = 0 -> the audited constant
        # sits at exactly alpha * Gamma(alpha/2) times the true integral
        results = compute_scenario(StateSolver(HY), self.beam, 4, 0, 0.5,
                                   -0.5, CM0)
        for r in results:
            if r.k_au == 0.0:
                al = r.channel.alpha
                want = al * math.gamma(al / 2.0)
                assert r.lambda_audit == pytest.approx(want, rel=1e-12)

    def test_audit_near_dipole_for_rubidium(self):
        solver = StateSolver(RB)
        beam = beam_for(1, 1)
        res = compute_scenario(solver, beam, 60, 0, 0.5, -0.5, CM0)
        pure = next(r for r in res if r.channel.group == "pure")
        # k r_char ~ 1e-4: the exact integral is 1/alpha to ~1e-8
        assert pure.lambda_audit == pytest.approx(math.sqrt(math.pi), rel=1e-6)
        assert pure.k_au > 0


# ---------------------------------------------------- scenario + mirrors

class TestScenario:
    def test_channel_results_complete(self):
        solver = StateSolver(HY)
        res = compute_scenario(solver, beam_for(1, 1, q_max=1), 4, 0, 0.5,
                               -0.5, CM0)
        assert len(res) == 13
        assert all(r.channel.final.l < 4 for r in res)

    def test_mirror_scenario_matches(self):
        # flipping beam OAM, polarization and both initial projections must
        # reproduce every channel magnitude; the mirror partner of tuple
        # (l1, l2, l3) lives at (l1, l3, l2) with its projections negated
        solver = StateSolver(HY)
        a = compute_scenario(solver, beam_for(1, 1, q_max=1), 4, 0, 0.5,
                             -0.5, CM0)
        b = compute_scenario(solver, beam_for(-1, -1, q_max=1), 4, 0, 0.5,
                             0.5, CM0)
        assert len(a) == len(b)
        bmap = {(r.channel.q, r.channel.l1, r.channel.l2, r.channel.l3,
                 r.channel.final.l, r.channel.final.j,
                 r.channel.final.m_j): r for r in b}
        for ra in a:
            ca = ra.channel
            rb = bmap[(ca.q, ca.l1, ca.l3, ca.l2, ca.final.l, ca.final.j,
                       -ca.final.m_j)]
            assert ca.M_f == -rb.channel.M_f
            assert abs(ra.matrix_element) == pytest.approx(
                abs(rb.matrix_element), rel=1e-10)

    def test_n_final_rewires_radial(self):
        solver = StateSolver(HY)
        same = compute_scenario(solver, beam_for(1, 1), 4, 0, 0.5, -0.5, CM0)
        up = compute_scenario(solver, beam_for(1, 1), 4, 0, 0.5, -0.5, CM0,
                              n_final=5)
        assert same[0].radial_e != pytest.approx(up[0].radial_e, rel=1e-3)
        assert all(r.k_au > 0 for r in up)

    def test_unbound_finals_are_skipped(self):
        # at n=3 the l_f=3 channels have no bound final state
        solver = StateSolver(HY)
        res = compute_scenario(solver, beam_for(1, 1, q_max=1), 3, 0, 0.5,
                               -0.5, CM0)
        assert all(r.channel.final.l < 3 for r in res)


# ----------------------------------------------------------------- sweep

class TestSweep:
    def setup_method(self):
        self.solver = StateSolver(HY)
        self.template = beam_for(1, 1, q_max=1)

    def test_row_kinds_and_projection(self):
        rows = sweep_topological_charge([1], self.solver, self.template,
                                        4, 0, 0.5, -0.5, CM0)
        kinds = {r.kind for r in rows}
        assert kinds == {"channel", "group", "total", "aggregate"}
        direct = compute_scenario(self.solver, self.template, 4, 0, 0.5,
                                  -0.5, CM0)
        chan_rows = [r for r in rows if r.kind == "channel"]
        assert len(chan_rows) == len(direct)
        for row, res in zip(chan_rows, direct):
            assert row.rabi_kHz == res.rabi_kHz
            assert row.group == res.channel.group

    def test_group_rows_are_coherent_sums(self):
        rows = sweep_topological_charge([1], self.solver, self.template,
                                        4, 0, 0.5, -0.5, CM0)
        direct = compute_scenario(self.solver, self.template, 4, 0, 0.5,
                                  -0.5, CM0)
        for grow in (r for r in rows if r.kind == "group"):
            me = sum(res.matrix_element for res in direct
                     if res.channel.group == grow.group
                     and str(res.channel.final) == grow.final_state
                     and res.channel.M_f == grow.M_f)
            assert grow.rabi_kHz == pytest.approx(to_kHz(abs(me)), rel=1e-12)

    def test_total_rows_sum_groups_coherently(self):
        rows = sweep_topological_charge([1], self.solver, self.template,
                                        4, 0, 0.5, -0.5, CM0)
        direct = compute_scenario(self.solver, self.template, 4, 0, 0.5,
                                  -0.5, CM0)
        for trow in (r for r in rows if r.kind == "total"):
            me = sum(res.matrix_element for res in direct
                     if str(res.channel.final) == trow.final_state
                     and res.channel.M_f == trow.M_f)
            assert trow.rabi_kHz == pytest.approx(to_kHz(abs(me)), rel=1e-12)

    def test_aggregate_is_rss_of_totals(self):
        rows = sweep_topological_charge([1], self.solver, self.template,
                                        4, 0, 0.5, -0.5, CM0)
        totals = [r for r in rows if r.kind == "total"]
        for arow in (r for r in rows if r.kind == "aggregate"):
            rss = math.sqrt(sum(t.rabi_kHz ** 2 for t in totals
                                if t.final_state.startswith(arow.final_state)))
            assert arow.rabi_kHz == pytest.approx(rss, rel=1e-12)

    def test_multi_l_ordering(self):
        rows = sweep_topological_charge([0, 2], self.solver, self.template,
                                        4, 0, 0.5, -0.5, CM0)
        ls = [r.l for r in rows]
        assert ls == sorted(ls, key=lambda x: [0, 2].index(x))
        assert {r.l for r in rows} == {0, 2}

    def test_empty_sweep_raises(self):
        with pytest.raises(ValueError):
            sweep_topological_charge([], self.solver, self.template,
                                     4, 0, 0.5, -0.5, CM0)


# --------------------------------------------------------- Rb 60S smoke

class TestRb60Smoke:
    def test_q0_channel_pair(self):
        solver = StateSolver(RB)
        res = compute_scenario(solver, beam_for(1, 1), 60, 0, 0.5, -0.5, CM0)
        assert [str(r.channel.final) for r in res] == ["P3/2(+1/2)",
                                                       "D5/2(+3/2)"]
        pure, tc = res
        assert pure.channel.M_f == 1 and tc.channel.M_f == 0
        # wiring against independently tested parts
        w_r = CM0.w_r
        psi_i = solver.get(60, 0, 0.5)
        psi_p = solver.get(60, 1, 1.5)
        want = (4.6672e-9 * g_coeff(1, 0, w_r, 51022.6) * math.sqrt(math.pi)
                * c_product(1, 0, 0, 0, 0, 0, 0, 0)
                * radial_matrix_element(psi_p, psi_i, 1, w_r)
                * cm_moment(CMState(1, 1, w_r), CM0, 1)   # beta = |l| = 1
                * (1.0 / (32.0 * math.pi ** 2.5))
                * (1.0 / math.sqrt(3.0)))
        assert abs(pure.matrix_element) == pytest.approx(abs(want), rel=1e-10)
