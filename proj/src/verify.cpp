/*
   Copyright 2026 The spt-nlcs Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "spt/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "spt/bargmann.hpp"
#include "spt/cstates.hpp"
#include "spt/errors.hpp"
#include "spt/hankel.hpp"
#include "spt/moments.hpp"
#include "spt/oracle.hpp"
#include "spt/quadrature.hpp"
#include "spt/shiftpoly.hpp"
#include "spt/special.hpp"

namespace spt {
namespace {

using nlohmann::json;

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr unsigned kMaxDegree = 256;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

json cjson(Complex z) { return json::array({z.real(), z.imag()}); }

class Recorder {
public:
    explicit Recorder(std::vector<CheckRecord>& out) : out_(out) {}

    void check(std::string name, bool ok, std::string detail, json data = json::object()) {
        out_.push_back({std::move(name), ok ? Status::Pass : Status::Fail, std::move(detail), std::move(data)});
    }
    /// A discrepancy in reference material: WARN when present, PASS when absent.
    void discrepancy(std::string name, bool present, std::string detail, json data = json::object()) {
        out_.push_back({std::move(name), present ? Status::Warn : Status::Pass, std::move(detail), std::move(data)});
    }

private:
    std::vector<CheckRecord>& out_;
};

Rational R(long p, long q = 1) { return {p, q}; }

// --------------------------------------------------------------------------------------------
// tables

void tables_suite(Recorder& rec) {
    const OrthoSystem p = monic_ops(moments_for(SequenceSpec::factorial_squared(), 7), 7);
    const OrthoSystem q = monic_ops(moments_for(SequenceSpec::shifted_factorial_squared(), 6), 6);

    const std::vector<RationalPoly> ref_p = {
        RationalPoly{R(1)},
        RationalPoly{R(0), R(1)},
        RationalPoly{R(-1), R(0), R(1)},
        RationalPoly{R(0), R(-4), R(0), R(1)},
        RationalPoly{R(20, 3), R(0), R(-32, 3), R(0), R(1)},
        RationalPoly{R(0), R(252, 5), R(0), R(-108, 5), R(0), R(1)},
        RationalPoly{R(-4716, 41), R(0), R(9612, 41), R(0), R(-1593, 41), R(0), R(1)},
    };
    const std::vector<RationalPoly> ref_q = {
        RationalPoly{R(1)},
        RationalPoly{R(0), R(1)},
        RationalPoly{R(-4), R(0), R(1)},
        RationalPoly{R(0), R(-9), R(0), R(1)},
        RationalPoly{R(252, 5), R(0), R(-108, 5), R(0), R(1)},
        RationalPoly{R(0), R(1296, 7), R(0), R(-256, 7), R(0), R(1)},
        RationalPoly{R(-21035, 16), R(0), R(37429, 50), R(0), R(-8208, 131), R(0), R(1)},
    };

    const auto compare = [](const OrthoSystem& sys, const std::vector<RationalPoly>& ref, unsigned upto) {
        json rows = json::array();
        bool all = true;
        for (unsigned n = 0; n <= upto; ++n) {
            const bool eq = sys.poly(n) == ref[n];
            all = all && eq;
            rows.push_back({{"n", n}, {"computed", sys.poly(n).str()}, {"reference", ref[n].str()}, {"equal", eq}});
        }
        return std::make_pair(all, rows);
    };

    auto [p_ok, p_rows] = compare(p, ref_p, 6);
    rec.check("gamma0_monic_p0_p6", p_ok, "P_0..P_6 from (n!)^2 moments vs reference list", p_rows);
    auto [q_ok, q_rows] = compare(q, ref_q, 5);
    rec.check("gamma1_monic_q0_q5", q_ok, "Q_0..Q_5 from ((n+1)!)^2 moments vs reference list", q_rows);

    const bool q6_differs = !(q.poly(6) == ref_q[6]);
    rec.discrepancy("gamma1_q6_reference_coefficients", q6_differs,
                    q6_differs ? "tabulated Q_6 disagrees with the exact Hankel solve; exact: " + q.poly(6).str()
                               : "tabulated Q_6 agrees",
                    {{"exact", to_json(q.poly(6))}, {"exact_str", q.poly(6).str()},
                     {"reference_str", ref_q[6].str()},
                     {"x_q6_equals_p7", q.poly(6).shift_up() == p.poly(7)}});

    const bool xi_ok = norm_xi(p, 2) == R(3) && norm_xi(p, 4) == R(656, 3) && norm_xi(p, 6) == R(3681936, 41);
    rec.check("gamma0_norms_xi", xi_ok,
              "xi_2 = " + norm_xi(p, 2).str() + ", xi_4 = " + norm_xi(p, 4).str() + ", xi_6 = " + norm_xi(p, 6).str(),
              {{"xi2", norm_xi(p, 2).str()}, {"xi4", norm_xi(p, 4).str()}, {"xi6", norm_xi(p, 6).str()}});

    // Reference V_n = sqrt(s2) * (c_0 + c_1 x + ...): equal to v_n / sqrt(xi_{2n}) iff
    // c = lead(c) * v_n coefficientwise and s2 lead(c)^2 = 1 / xi_{2n}.
    struct RefV {
        Rational s2;
        RationalPoly c;
    };
    const std::vector<RefV> ref_v = {
        {R(1, 3), RationalPoly{R(-1), R(1)}},
        {R(3, 41), RationalPoly{R(5, 3), R(-8, 3), R(1, 4)}},
        {R(41, 2841), RationalPoly{R(-131, 41), R(267, 41), R(-177, 164), R(1, 36)}},
    };
    bool v_ok = true;
    json v_rows = json::array();
    for (unsigned n = 1; n <= 3; ++n) {
        const NormalizedPoly v = half_line_poly(p, n);
        const RefV& r = ref_v[n - 1];
        const Rational lead = r.c.leading();
        const bool shape = v.monic * lead == r.c;
        const bool scale = r.s2 * lead * lead * v.norm2 == R(1);
        v_ok = v_ok && shape && scale;
        v_rows.push_back({{"n", n}, {"monic", v.monic.str()}, {"norm2", v.norm2.str()}, {"shape", shape}, {"scale", scale}});
    }
    rec.check("half_line_v1_v3", v_ok, "V_1..V_3 agree with the reference forms after cross-multiplication", v_rows);

    const bool a_ok = recurrence_A(p, 1).squared == R(1) && recurrence_A(p, 2).squared == R(3) &&
                      recurrence_A(p, 3).squared == R(20, 3);
    rec.check("gamma0_recurrence_a_squared", a_ok, "A_1^2 = 1, A_2^2 = 3, A_3^2 = 20/3");

    const auto even = [](const MomentSequence& m) {
        json j = json::array();
        for (const auto& v : m.even_moments()) j.push_back(v.str());
        return j;
    };
    const json fs = even(moments_for(SequenceSpec::factorial_squared(), 4));
    const json sfs = even(moments_for(SequenceSpec::shifted_factorial_squared(), 2));
    const json g2 = even(moments_for(SequenceSpec::generalized(R(2)), 2));
    rec.check("moment_providers",
              fs == json({"1", "1", "4", "36", "576"}) && sfs == json({"1", "4", "36"}) && g2 == json({"1", "3", "40"}),
              "(n!)^2, ((n+1)!)^2 and generalized-factorial (gamma = 2) moments",
              {{"factorial_squared", fs}, {"shifted_factorial_squared", sfs}, {"generalized_gamma2", g2}});

    json phi_rows = json::array();
    bool any_mismatch = false;
    for (const auto& r : printed_phi_comparison()) {
        any_mismatch = any_mismatch || !r.equal;
        phi_rows.push_back({{"n", r.n}, {"reference", r.printed}, {"recurrence", r.computed},
                            {"equal", r.equal}, {"leading_ratio", r.leading_ratio}});
    }
    rec.discrepancy("gamma0_phi_reference_table", any_mismatch,
                    "tabulated phi_0..phi_6 (gamma = 0) vs the three-term recurrence; no single rescaling "
                    "reconciles them (see leading_ratio)",
                    phi_rows);
}

// --------------------------------------------------------------------------------------------
// identities

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

void polynomial_identities(Recorder& rec, unsigned N) {
    {
        json rows = json::array();
        bool all = true;
        for (const auto& e : kernel_identity_check(N)) {
            all = all && e.holds;
            rows.push_back({{"n", e.n}, {"holds", e.holds}});
        }
        rec.check("kernel_identity_xq2n_p2n1", all, "x Q_{2n} = P_{2n+1} for n <= " + std::to_string(N), rows);
    }

    const std::vector<SequenceSpec> specs = {SequenceSpec::factorial_squared(), SequenceSpec::shifted_factorial_squared(),
                                             SequenceSpec::generalized(R(2))};
    const unsigned m8 = std::min(N, 8u), m6 = std::min(N, 6u);
    {
        bool ok = true;
        for (const auto& s : specs) {
            const auto mom = moments_for(s, m8);
            const auto sys = monic_ops(mom, m8);
            for (unsigned n = 1; n <= m8; ++n)
                for (unsigned m = 0; m < n; ++m)
                    ok = ok && moment_pairing(mom, sys.poly(n), RationalPoly::monomial(m, R(1))).is_zero();
        }
        rec.check("moment_orthogonality", ok, "<P_n, x^m> = 0 exactly for m < n <= " + std::to_string(m8));
    }
    {
        bool ok = true;
        for (const auto& s : specs) {
            const auto mom = moments_for(s, m6);
            const auto sys = monic_ops(mom, m6);
            for (unsigned n = 0; n <= m6; ++n) {
                ok = ok && monic_poly_by_determinant(mom, n) == sys.poly(n);
                if (n > 0) ok = ok && sys.xi()[n] == hankel_determinant(mom, n) / hankel_determinant(mom, n - 1);
            }
        }
        rec.check("determinant_vs_recursion", ok,
                  "bordered-determinant P_n and Delta_n/Delta_{n-1} match the Chebyshev algorithm, n <= " + std::to_string(m6));
    }
    {
        bool ok = true;
        for (const auto& s : specs) {
            const auto mom = moments_for(s, m6);
            const auto base = monic_ops(mom, m6);
            for (const Rational& c : {R(3), R(1, 7), R(22, 5)}) {
                const auto scaled = monic_ops(mom.scaled(c), m6);
                for (unsigned n = 0; n <= m6; ++n) ok = ok && scaled.poly(n) == base.poly(n);
            }
        }
        rec.check("scale_invariance", ok, "monic polynomials unchanged under mu -> c mu, three sequences, three c");
    }
    {
        const auto q = q_family(N);
        bool ok = true;
        for (unsigned n = 0; n <= N; ++n) ok = ok && q[n].is_monic();
        for (unsigned n = 1; n < N; ++n) {
            const RationalPoly rhs = q[n].shift_up() - q[n - 1] * (R(static_cast<long>(n * n)) / R(2));
            ok = ok && q[n + 1] == rhs;
        }
        rec.check("q_normalized_recurrence", ok, "q_{n+1} = x q_n - (n^2/2) q_{n-1} exactly in Q");
    }
    {
        const unsigned m20 = std::min(N, 20u);
        bool exact = true, parity = true;
        double worst = 0.0;
        for (const RecurrenceFamily& fam : {RecurrenceFamily{ShiftFamily::Gamma0, R(1, 2)},
                                           RecurrenceFamily{ShiftFamily::Gamma1, R(1, 2)},
                                           RecurrenceFamily{ShiftFamily::Sigma, R(1)}}) {
            const auto phi = phi_family(fam, m20 + 1);
            for (unsigned n = 0; n <= m20; ++n) {
                parity = parity && phi[n].degree() == long(n) && phi[n].leading().sign() > 0 &&
                         (n == 0 || phi[n].parity() == (n % 2 == 0 ? 1 : -1));
                Sqrt2Poly rhs = phi[n + 1] * fam.a(n);
                if (n > 0) rhs += phi[n - 1] * fam.b(n);
                exact = exact && phi[n].shift_up() == rhs;
                for (int k = 0; k < 17; ++k) {
                    const double x = -4.0 + 0.5 * k;
                    const double lhs = x * phi[n].eval(x);
                    double r = fam.a(n).to_double() * phi[n + 1].eval(x);
                    if (n > 0) r += fam.b(n).to_double() * phi[n - 1].eval(x);
                    worst = std::max(worst, std::abs(lhs - r) / std::max(1.0, std::abs(lhs)));
                }
            }
        }
        rec.check("shift_family_recurrence", exact && parity && worst < 1e-9,
                  "exact recurrence in Q(sqrt2), degree/parity, grid residual " + fmt(worst),
                  {{"grid_residual", worst}});
    }
    {
        const unsigned m12 = std::min(N, 12u);
        const auto phi0 = phi_family({ShiftFamily::Gamma0, R(1, 2)}, m12);
        const auto phi1 = phi_family({ShiftFamily::Gamma1, R(1, 2)}, m12);
        const PollaczekParams c1{R(1, 2), kPi / 2.0, R(1)}, c0{R(1, 2), kPi / 2.0, R(0)};
        double w_mp = 0.0, w_hyp = 0.0, w_pol = 0.0, w_c0 = 0.0;
        for (double x : {-2.0, -0.5, 0.3, 1.7}) {
            const double u = x / kSqrt2;
            for (unsigned n = 0; n <= m12; ++n) {
                const double ref0 = phi0[n].eval(x);
                const double mp = mp_eval(0.5, u, kPi / 2.0, n);
                const Complex hy = mp_eval_hypergeometric(0.5, u, kPi / 2.0, n);
                w_mp = std::max(w_mp, rel(mp, ref0));
                w_hyp = std::max(w_hyp, std::abs(hy - Complex(ref0)) / std::max(1.0, std::abs(ref0)));
                w_pol = std::max(w_pol, rel(pollaczek_eval(c1, u, n), phi1[n].eval(x)));
                w_c0 = std::max(w_c0, rel(pollaczek_eval(c0, u, n), mp));
            }
        }
        rec.check("meixner_pollaczek_closed_forms", w_mp < 1e-10 && w_hyp < 1e-10,
                  "phi_n^(1/2)(x) vs P_n^(1/2)(x/sqrt2, pi/2) by recurrence (" + fmt(w_mp) + ") and terminating 2F1 (" +
                      fmt(w_hyp) + ")",
                  {{"recurrence", w_mp}, {"hypergeometric", w_hyp}});
        rec.check("pollaczek_families", w_pol < 1e-10 && w_c0 < 1e-12,
                  "c = 1 reproduces the gamma = 1 family (" + fmt(w_pol) + "); c = 0 reduces to Meixner-Pollaczek (" +
                      fmt(w_c0) + ")",
                  {{"c1_vs_gamma1", w_pol}, {"c0_vs_mp", w_c0}});
    }
}

void generating_identities(Recorder& rec) {
    const GeneratingCheck g = mp_generating_check(0.5, 0.0, kPi / 2.0, 0.3);
    const GeneratingCheck g0 = mp_generating_check(0.5, 0.7, kPi / 2.0, 0.0);
    const double ref = 1.0 / std::sqrt(1.09);
    double worst = g.residual;
    for (double x : {-1.3, 0.4, 2.0})
        for (double t : {-0.6, 0.25, 0.8}) worst = std::max(worst, mp_generating_check(0.5, x / kSqrt2, kPi / 2.0, t).residual);
    rec.check("meixner_pollaczek_generating_function",
              worst < 1e-8 && std::abs(g.closed.real() - ref) < 1e-15 && g0.partial == Complex(1.0) && g0.closed == Complex(1.0),
              "partial sums vs closed form, worst residual " + fmt(worst),
              {{"t0.3", {{"partial", cjson(g.partial)}, {"closed", cjson(g.closed)}}}, {"worst", worst}});

    const ArctanIdentity a = arctan_identity(kSqrt2, 0.4);
    const double ad = std::abs(a.power_side - Complex(a.exp_side));
    rec.check("arctan_power_identity", ad < 1e-12, "((1-it)/(1+it))^{iz/2} = exp(z arctan t) at z = sqrt2, t = 0.4: " + fmt(ad),
              {{"power_side", cjson(a.power_side)}, {"exp_side", a.exp_side}});

    double ws = 0.0;
    for (double sigma : {1.0, 1.5, 2.0})
        for (double x : {-1.0, 0.6})
            for (double t : {0.3, -0.7}) ws = std::max(ws, sigma_generating_check(sigma, x, t).residual);
    rec.check("sigma_family_generating_function", ws < 1e-8, "(1+t^2)^{-sigma} exp(sqrt2 x arctan t), worst residual " + fmt(ws));

    double wo = 0.0, wq = 0.0;
    const auto q = q_family(60);
    for (double x : {-1.5, 0.2, 1.1})
        for (double t : {-0.8, 0.3, 0.9}) {
            wo = std::max(wo, std::abs(generating_ode_residual(x, t)) / generating_g(x, t));
            double s = 0.0, tn = 1.0;
            for (unsigned n = 0; n <= 60; ++n) {
                s += q[n].eval(x) * tn;
                tn *= t / (n + 1.0);
            }
            wq = std::max(wq, std::abs(s - generating_g(x, t)));
        }
    rec.check("q_generating_function", wo < 1e-8 && wq < 1e-8,
              "G_x solves (t^2+2)G' + (t-2x)G = 0 (" + fmt(wo) + ") and equals sum q_n t^n/n! (" + fmt(wq) + ")");

    // sum_k t^k/(2tau)_k C_k^tau(y) = Gamma(tau+1/2) e^{yt} (w/2)^{1/2-tau} J_{tau-1/2}(w), w = t sqrt(1-y^2)
    const double tau = 2.0, y = 0.4, t = 0.9;
    double s = 0.0, tk = 1.0;
    for (unsigned k = 0; k <= 80; ++k) {
        s += tk * gegenbauer(k, tau, y);
        tk *= t / (2.0 * tau + k);
    }
    const double w = t * std::sqrt(1.0 - y * y);
    const double closed = std::tgamma(tau + 0.5) * std::exp(y * t) * bessel_j_reduced(tau - 0.5, Complex(w)).real();
    rec.check("gegenbauer_generating_formula", std::abs(s - closed) < 1e-8,
              "Bessel-type generating function at tau = 2, y = 0.4, t = 0.9: " + fmt(std::abs(s - closed)),
              {{"series", s}, {"closed", closed}});

    const double zeta = 0.8;
    const double lhs = hyp1f2(1.0, 2.0, 2.0, zeta * zeta), rhs = (oracle::bessel_i(0.0, 2.0 * zeta) - 1.0) / (zeta * zeta);
    rec.check("hyp1f2_bessel_i0_identity", std::abs(lhs - rhs) < 1e-12,
              "1F2(1;2,2;z^2) = (I_0(2z)-1)/z^2 at z = 0.8: " + fmt(std::abs(lhs - rhs)), {{"lhs", lhs}, {"rhs", rhs}});

    double ww = 0.0;
    for (double x : {0.1, 1.0, 5.0, 20.0})
        ww = std::max(ww, std::abs(bessel_i(0, x) * bessel_k1(x) + bessel_i(1, x) * bessel_k0(x) - 1.0 / x) * x);
    rec.check("bessel_ik_wronskian", ww < 1e-10, "I_0 K_1 + I_1 K_0 = 1/x, worst relative " + fmt(ww));
}

// Relative deviation with a floor of 1e-14 of the grid maximum (the profile vanishes at the walls).
double grid_deviation(const std::function<Complex(double)>& a, const std::function<Complex(double)>& b, double alpha) {
    const double h = kPi / (2.0 * alpha);
    std::vector<Complex> va, vb;
    double scale = 0.0;
    for (int i = 0; i <= 20; ++i) {
        const double t = i == 20 ? h : -h + 2.0 * h * i / 20.0;
        va.push_back(a(t));
        vb.push_back(b(t));
        scale = std::max(scale, std::abs(vb.back()));
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < va.size(); ++i)
        worst = std::max(worst, std::abs(va[i] - vb[i]) / std::max(std::abs(vb[i]), 1e-14 * scale));
    return worst;
}

void coherent_state_identities(Recorder& rec) {
    const CSParams p25{2.5, 2.5, 1.0};
    const Complex z25(0.7, 0.3);
    const double d25 = grid_deviation([&](double t) { return wavefunction_closed(t, z25, p25); },
                                      [&](double t) { return wavefunction_series(t, z25, p25); }, 1.0);
    const CSParams p1{1.0, 1.0, 1.0};
    const Complex z1(1.1, -0.2);
    const double d1 = grid_deviation([&](double t) { return square_well_closed(t, z1, 1.0); },
                                     [&](double t) { return wavefunction_series(t, z1, p1); }, 1.0);
    const double d1b = grid_deviation([&](double t) { return square_well_closed(t, z1, 1.0); },
                                      [&](double t) { return wavefunction_closed(t, z1, p1); }, 1.0);
    rec.check("closed_form_vs_series", d25 < 1e-10 && d1 < 1e-10 && d1b < 1e-10,
              "21-point grid: gamma = 2.5 " + fmt(d25) + ", square well " + fmt(d1) + " (general form at gamma = 1 " + fmt(d1b) + ")",
              {{"gamma2.5", d25}, {"gamma1_series", d1}, {"gamma1_general", d1b}});

    // The literal prefactor 2^{g-1} 1F2^{-1/2} is the correct one divided by sqrt2.
    const double n25 = nlcs_norm(2.5, std::norm(z25));
    const double literal_ratio = std::pow(2.0, 1.5) / std::sqrt(n25 / 2.0) / (std::pow(2.0, 2.5) / std::sqrt(n25));
    rec.discrepancy("closed_form_prefactor", std::abs(literal_ratio - 1.0) > 1e-12,
                    "tabulated prefactor 2^{g-1} (1F2)^{-1/2} is 1/sqrt2 of the unit-norm value 2^{g-1/2} (1F2)^{-1/2}",
                    {{"ratio_tabulated_to_correct", literal_ratio}});

    // Tabulated square-well form: sqrt(alpha/pi) (I_0(2|z| - 1))^{-1/2} e^{conj z sin} sin(conj z cos).
    const double theta = 0.4;
    const Complex zb = std::conj(z1);
    const Complex literal = std::sqrt(1.0 / kPi) / std::sqrt(bessel_i(0, 2.0 * std::abs(z1) - 1.0)) *
                            std::exp(zb * std::sin(theta)) * std::sin(zb * std::cos(theta));
    const Complex correct = square_well_closed(theta, z1, 1.0);
    rec.discrepancy("square_well_closed_form", std::abs(literal - correct) > 1e-12 * std::abs(correct),
                    "tabulated square-well form (I_0(2|z|-1) argument, missing sqrt2 and phase |z|/conj z) vs unit-norm form "
                    "sqrt(2 alpha/pi) (I_0(2|z|)-1)^{-1/2} (|z|/conj z) e^{conj z sin} sin(conj z cos)",
                    {{"theta", theta}, {"tabulated", cjson(literal)}, {"correct", cjson(correct)}});

    {
        const double h = p25.half_width();
        const double edge = std::max(std::abs(wavefunction_closed(h, z25, p25)), std::abs(wavefunction_closed(-h, z25, p25)));
        rec.check("boundary_vanishing", edge < 1e-30, "|<+-pi/(2 alpha)|z>| at gamma = 2.5: " + fmt(edge));
    }

    {
        double worst = 0.0, worst_n = 0.0;
        for (double g : {0.5, 1.0, 2.5})
            for (Complex z : {Complex(0, 0), Complex(0.3, -0.1), Complex(1.5, 2.0), Complex(-4.0, 0.0), Complex(2.0, -3.4)}) {
                const unsigned n = nlcs_truncation(z, g);
                const auto c = nlcs_coefficients(z, g, n);
                double s = 0.0;
                for (const auto& v : c.normalized()) s += std::norm(v);
                worst = std::max(worst, std::abs(s - 1.0));
                if (std::abs(z) <= 3.0 && g >= 1.0) {
                    double raw = 0.0;
                    for (const auto& v : c.raw) raw += std::norm(v);
                    worst_n = std::max(worst_n, std::abs(raw - c.norm) / c.norm);
                }
            }
        rec.check("nlcs_unit_norm", worst < 1e-9 && worst_n < 1e-10,
                  "<z|z> = 1 (" + fmt(worst) + "); sum |c_n|^2 = 2 1F2 (" + fmt(worst_n) + ")");
    }
    {
        const Complex z(0.9, 0.4);
        const double delta = 0.7;
        const auto a = nlcs_coefficients(z, 1.5, 20), b = nlcs_coefficients(z * std::polar(1.0, delta), 1.5, 20);
        double worst = 0.0;
        for (unsigned n = 0; n <= 20; ++n)
            worst = std::max(worst, std::abs(b.raw[n] - std::polar(1.0, -double(n) * delta) * a.raw[n]) / std::abs(a.raw[n]));
        rec.check("phase_covariance", worst < 1e-12, "c_n(z e^{i d}) = e^{-i n d} c_n(z): " + fmt(worst));
    }
    {
        const BarutGirardelloState s = barut_girardello(Complex(1.3, 0.0), R(1), 60);
        double series = 0.0, tn = 1.0;
        for (unsigned n = 0; n <= 60; ++n) {
            series += tn;
            tn *= 1.69 / ((n + 1.0) * (n + 2.0));
        }
        const double id = std::abs(series - s.series_norm) / series;
        rec.check("barut_girardello_normalization", id < 1e-10 && std::abs(s.state_norm() - 1.0) < 1e-10,
                  "sum |z|^{2n}/(n!(2s)_n) = Gamma(2s)|z|^{1-2s} I_{2s-1}(2|z|) at s = 1, |z| = 1.3: " + fmt(id),
                  {{"series", series}, {"bessel_form", s.series_norm}});
        const double tab = s.printed_prefactor * s.printed_prefactor / (s.prefactor * s.prefactor);
        rec.discrepancy("barut_girardello_prefactor", std::abs(tab - 1.0) > 1e-12,
                        "tabulated |z|^{2s-1}/sqrt(I_{2s-1}(2|z|)) gives <z|z> != 1 unless 2s = 1",
                        {{"norm_with_tabulated_prefactor", tab}});
    }
}

void bargmann_identities(Recorder& rec, unsigned N) {
    const unsigned m8 = std::min(N, 8u);
    double worst = 0.0, worst_sin = 0.0, worst_change = 0.0;
    for (double g : {1.0, 2.0, 3.5})
        for (Complex z : {Complex(0.5, 0.0), Complex(1.0, 1.0), Complex(-0.7, 2.0)})
            for (unsigned n = 0; n <= m8; ++n) {
                const double scale = std::sqrt(cs_factorial(n, g)) / std::abs(std::pow(z, n));
                const Complex ph = std::pow(std::conj(z), n) / std::abs(std::pow(z, n));  // conj(z^n)/|z^n|
                const TransformResult c = bargmann_basis(n, z, g, 1.0);
                const TransformResult s = bargmann_basis(n, z, g, 1.0, 128, KernelVariant::Sin);
                worst = std::max(worst, std::abs(c.value * scale * ph - 1.0));
                worst_sin = std::max(worst_sin, std::abs(s.value * scale * ph - 1.0));
                worst_change = std::max(worst_change, c.change);
            }
    rec.check("bargmann_monomial_images", worst < 1e-8,
              "|B[phi_n](z) sqrt(x_n!)/z^n - 1| over n <= " + std::to_string(m8) + ", three gamma, three z: " + fmt(worst),
              {{"worst", worst}, {"node_doubling_change", worst_change}});
    rec.discrepancy("bargmann_sin_kernel_variant", worst_sin > 1e-2,
                    "kernel with J(z sin a t) in place of J(z cos a t) misses the monomial images by " + fmt(worst_sin),
                    {{"worst_sin", worst_sin}});

    // Without the sqrt2 the images come out as z^n / sqrt(2 x_n!); the square-well reduction of the
    // tabulated constant sqrt(alpha/pi)/z is half of the correct 2 sqrt(alpha/pi)/z.
    const double g1_literal = std::sqrt(1.0 / kPi), g1_correct = 2.0 * std::sqrt(1.0 / kPi);
    rec.discrepancy("bargmann_prefactor", true,
                    "tabulated prefactor lacks sqrt2 (images z^n/sqrt(2 x_n!)); square-well constant sqrt(alpha/pi)/z "
                    "should be 2 sqrt(alpha/pi)/z",
                    {{"general_ratio", 1.0 / kSqrt2}, {"square_well_ratio", g1_literal / g1_correct}});

    {
        const CSParams p{2.0, 2.0, 1.0};
        const auto f = [&](double t) { return Complex(eigenfunction(1, t, p), 0.0); };
        const auto g = [&](double t) { return Complex(std::cos(t) * std::cos(t) * std::sin(3.0 * t), 0.0); };
        const Complex a(0.3, -1.2), b(2.0, 0.5), z(0.8, 0.6);
        const Complex lhs = bargmann_transform([&](double t) { return a * f(t) + b * g(t); }, z, 2.0, 1.0).value;
        const Complex rhs = a * bargmann_transform(f, z, 2.0, 1.0).value + b * bargmann_transform(g, z, 2.0, 1.0).value;
        rec.check("bargmann_linearity", std::abs(lhs - rhs) < 1e-12 * std::max(1.0, std::abs(rhs)),
                  "B[a f + b g] = a B[f] + b B[g]: " + fmt(std::abs(lhs - rhs)));
    }
    {
        const KernelEval k1 = reproducing_kernel({1, 1}, {0.3, -0.2}, 2.0), k2 = reproducing_kernel({0.3, -0.2}, {1, 1}, 2.0);
        const double herm = std::abs(k1.value - std::conj(k2.value));
        rec.check("kernel_hermitian", herm < 1e-12 && k1.tail_bound < 1e-14 * std::abs(k1.value),
                  "K(z,w) = conj K(w,z) at gamma = 2: " + fmt(herm), {{"truncation", k1.truncation}, {"tail_bound", k1.tail_bound}});
        const Complex k0 = reproducing_kernel({1.7, -0.4}, {0, 0}, 2.0).value;
        rec.discrepancy("kernel_at_origin", std::abs(k0 - 1.0) > 1e-12,
                        "K(z,0) = 1/x_0! equals 2 with the continuation x_0! = 1/2 that makes N = 2 1F2 exact; "
                        "the convention x_0! = 1 would give 1",
                        {{"value", cjson(k0)}});
    }
    {
        const double g0 = growth_condition({Complex(1.0)}, 2.0);
        const auto coeffs = taylor_coefficients([](Complex z) { return bargmann_basis(2, z, 2.0, 1.0).value; }, 12);
        const double g2 = growth_condition(coeffs, 2.0);
        rec.check("growth_condition", std::abs(g0 - 0.5) < 1e-15 && std::abs(g2 - 1.0) < 1e-8,
                  "delta_{n0} -> " + fmt(g0) + "; coefficients of B[phi_2] -> " + fmt(g2), {{"delta", g0}, {"basis2", g2}});
    }
    {
        const unsigned m6 = std::min(N, 6u);
        double worst_g = 0.0;
        for (double g : {1.0, 2.0}) {
            const auto gram = isometry_gram(g, m6);
            for (unsigned i = 0; i <= m6; ++i)
                for (unsigned j = 0; j <= m6; ++j) worst_g = std::max(worst_g, std::abs(gram[i][j] - (i == j ? 1.0 : 0.0)));
        }
        rec.check("bargmann_isometry", worst_g < 1e-7, "Gram matrix of B[phi_n], n <= " + std::to_string(m6) + ": " + fmt(worst_g));
    }
}

void identities_suite(Recorder& rec, unsigned N) {
    polynomial_identities(rec, N);
    generating_identities(rec);
    coherent_state_identities(rec);
    bargmann_identities(rec, N);
}

// --------------------------------------------------------------------------------------------
// quadrature

void moment_quadrature(Recorder& rec, unsigned N) {
    const auto records_json = [](const std::vector<MomentRecord>& rs, double& worst) {
        json j = json::array();
        for (const auto& r : rs) {
            worst = std::max(worst, r.rel_err);
            j.push_back(to_json(r));
        }
        return j;
    };
    double wm = 0.0;
    const json mj = records_json(mellin_k0_check(std::min(N, 8u)), wm);
    rec.check("mellin_k0_moments", wm < 1e-10, "int_0^inf r^n 4 K_0(2 sqrt r) dr = 2 (n!)^2, worst " + fmt(wm), mj);

    double wi = 0.0;
    json ij = records_json(identity_moment_check(0, std::min(N, 6u)), wi);
    for (auto& r : records_json(identity_moment_check(1, std::min(N, 6u)), wi)) ij.push_back(r);
    rec.check("identity_measure_moments", wi < 1e-10,
              "int |w|^{2n} h_g(|w|^2) d^2w/(2 pi) vs exact, gamma in {0, 1}, worst " + fmt(wi), ij);
    rec.discrepancy("gamma0_measure_mass", true,
                    "the gamma -> 0 limit of the moment formula gives 1 at n = 0, while 4 K_0(2 sqrt r) has mass 2; "
                    "the check uses 2 (n!)^2, consistent with x_0! = 1/2",
                    {{"mass", 2}});

    // Pairings of the (n!)^2 system under 2 K_0(2|t|) |t| dt on the line.
    const unsigned m4 = std::min(N, 4u);
    const OrthoSystem p = monic_ops(moments_for(SequenceSpec::factorial_squared(), 2 * m4), 2 * m4);
    const QuadratureRule line = semi_infinite_panels(60.0, 24, 32);
    double wp = 0.0;
    for (unsigned n = 0; n <= m4; ++n)
        for (unsigned m = 0; m <= m4; ++m) {
            const double v = line.integrate([&](double t) {
                const double w = 2.0 * bessel_k0(2.0 * t) * t;
                return w * (p.poly(n).eval(t) * p.poly(m).eval(t) + p.poly(n).eval(-t) * p.poly(m).eval(-t));
            });
            const double ref = n == m ? p.xi()[n].to_double() : 0.0;
            wp = std::max(wp, std::abs(v - ref) / std::max(1.0, p.xi()[std::max(n, m)].to_double()));
        }
    rec.check("line_weight_orthogonality", wp < 1e-8, "int P_n P_m 2 K_0(2|t|) |t| dt = delta xi_n, n, m <= " +
                                                           std::to_string(m4) + ": " + fmt(wp));

    const unsigned m3 = std::min(N, 3u);
    const OrthoSystem p6 = monic_ops(moments_for(SequenceSpec::factorial_squared(), 2 * m3), 2 * m3);
    const QuadratureRule half = semi_infinite_panels(4000.0, 40, 32);
    double wv = 0.0;
    for (unsigned n = 0; n <= m3; ++n)
        for (unsigned m = 0; m <= m3; ++m) {
            const NormalizedPoly a = half_line_poly(p6, n), b = half_line_poly(p6, m);
            const double v = half.integrate([&](double r) { return r > 0.0 ? dp_weight(r, 2) * a.monic.eval(r) * b.monic.eval(r) : 0.0; }) /
                             std::sqrt(a.norm2.to_double() * b.norm2.to_double());
            wv = std::max(wv, std::abs(v - (n == m ? 1.0 : 0.0)));
        }
    rec.check("half_line_orthonormality", wv < 1e-8, "v_n/sqrt(xi_2n) orthonormal under 2 K_0(2 sqrt r) dr: " + fmt(wv));

    double wd = 0.0;
    for (int k : {1, 2})
        for (unsigned n = 0; n <= 6; ++n) {
            const double v = half.integrate([&](double r) { return r > 0.0 ? std::pow(r, n) * dp_weight(r, k) : 0.0; });
            const double ref = std::pow(std::tgamma(n + 1.0), k);
            wd = std::max(wd, std::abs(v - ref) / ref);
        }
    bool k3_rejected = false;
    try {
        (void)dp_weight(1.0, 3);
    } catch (const UnsupportedError&) {
        k3_rejected = true;
    }
    rec.check("ultra_exponential_weights", wd < 1e-9 && k3_rejected,
              "moments (n!)^k for k = 1, 2 (" + fmt(wd) + "); k = 3 reported unsupported");
}

void eigenfunction_quadrature(Recorder& rec, unsigned N) {
    const unsigned m = std::min(N, 8u);
    json rows = json::array();
    bool ok = true;
    for (double nu : {1.0, 2.0, 3.5}) {
        const CSParams par{nu, nu, 1.0};
        const double h = par.half_width();
        const QuadratureRule rule = gauss_legendre(200, -h, h);
        double worst = 0.0;
        for (unsigned i = 0; i <= m; ++i)
            for (unsigned j = 0; j <= i; ++j) {
                const double v = rule.integrate([&](double t) { return eigenfunction(i, t, par) * eigenfunction(j, t, par); });
                worst = std::max(worst, std::abs(v - (i == j ? 1.0 : 0.0)));
            }
        ok = ok && worst < 1e-8;
        rows.push_back({{"nu", nu}, {"worst", worst}});
    }
    rec.check("eigenfunction_orthonormality", ok, "200-node Gauss-Legendre Gram of phi_n, n <= " + std::to_string(m), rows);

    const unsigned g = std::min(N, 6u);
    const auto gram = pollaczek_gram(g);
    double diag = 0.0, off = 0.0;
    for (unsigned i = 0; i <= g; ++i)
        for (unsigned j = 0; j <= g; ++j) {
            if (i == j) diag = std::max(diag, std::abs(gram[i][j] - 1.0 / kSqrt2));
            else off = std::max(off, std::abs(gram[i][j]));
        }
    double sym = 0.0;
    for (double x : {0.3, 1.5, 4.0, 9.0}) sym = std::max(sym, std::abs(pollaczek_weight(x) - pollaczek_weight(-x)));
    const double w0 = pollaczek_weight(0.0);
    rec.check("pollaczek_weight_orthogonality",
              diag < 1e-8 && off < 1e-8 && sym < 1e-15 && std::abs(w0 - 2.0 / (kPi * kPi)) < 1e-14,
              "phi_n^(1) Gram under omega: diagonal 1/sqrt2 (" + fmt(diag) + "), off-diagonal " + fmt(off) +
                  "; omega even; omega(0) = 2/pi^2",
              {{"omega0", w0}, {"diag", diag}, {"off", off}});

    double change = 0.0;
    for (unsigned n = 0; n <= std::min(N, 8u); ++n) change = std::max(change, bargmann_basis(n, {1.0, 0.5}, 2.0, 1.0).change);
    rec.check("transform_node_doubling", change < 1e-9, "128 vs 256 nodes on B[phi_n](1 + 0.5i): " + fmt(change));

    double wr = 0.0;
    const Complex z(0.6, -0.3);
    for (int gm : {0, 1}) {
        const auto F = [](Complex w) { return 1.0 + 0.5 * w * w - 0.2 * w * w * w; };
        wr = std::max(wr, std::abs(reproduce(F, z, gm) - F(z)) / std::abs(F(z)));
    }
    rec.check("reproducing_property", wr < 1e-5, "int K(z,w) F(w) dnu(w) = F(z), gamma in {0, 1}: " + fmt(wr));

    double we = 0.0;
    for (std::size_t n : {4u, 10u, 32u}) {
        const QuadratureRule r = gauss_legendre(n);
        for (unsigned k = 0; k < 2 * n; ++k) {
            const double v = r.integrate([&](double x) { return std::pow(x, k); });
            we = std::max(we, std::abs(v - (k % 2 ? 0.0 : 2.0 / (k + 1.0))));
        }
    }
    rec.check("gauss_legendre_exactness", we < 1e-13, "n-point rule exact through degree 2n-1: " + fmt(we));
}

// --------------------------------------------------------------------------------------------
// asymptotics

void asymptotics_suite(Recorder& rec, unsigned N) {
    const unsigned n = std::max(N, 12u);
    const auto trend = recurrence_trend(n);
    bool bracket = true, decreasing = true;
    json rows = json::array();
    for (std::size_t i = 0; i < trend.size(); ++i) {
        bracket = bracket && trend[i].a_over_n >= 0.70 && trend[i].a_over_n <= 0.90;
        // Odd and even n alternate around the trend, so the running mean settles only from n = 12 on.
        if (i > 0 && trend[i].n > 12)
            decreasing = decreasing && trend[i].running_mean_deviation <= trend[i - 1].running_mean_deviation;
        rows.push_back({{"n", trend[i].n}, {"a_over_n", trend[i].a_over_n}, {"mean_dev", trend[i].running_mean_deviation}});
    }
    const double last = trend.back().a_over_n;
    rec.check("recurrence_growth_trend", bracket && decreasing,
              "A_n/n in [0.70, 0.90] for 8 <= n <= " + std::to_string(n) + ", mean deviation from pi/4 decreasing for n >= 12; A_" +
                  std::to_string(n) + "/" + std::to_string(n) + " = " + fmt(last),
              rows);
    rec.discrepancy("recurrence_growth_constant", std::abs(last - kPi / 16.0) > std::abs(last - kPi / 4.0),
                    "A_n/n heads toward pi/4 = 0.785, not the tabulated pi/16 = 0.196",
                    {{"last", last}, {"pi_over_4", kPi / 4.0}, {"pi_over_16", kPi / 16.0}});

    // gen_factorial(n, g) / ((2g)^n n!) -> 1/2 for n >= 1; the excess of twice the ratio is ~ (n + n(n-1)/4)/g.
    bool monotone = true, limit = true, bound_holds = true;
    json gf = json::array();
    for (unsigned k = 1; k <= 8; ++k) {
        double prev = std::numeric_limits<double>::infinity();
        for (double g : {10.0, 100.0, 1000.0, 10000.0}) {
            const long double ratio = gen_factorial_float(k, g) / (std::pow(2.0L * g, k) * std::tgamma(k + 1.0L));
            const double dev = static_cast<double>(2.0L * ratio - 1.0L);
            monotone = monotone && dev > 0.0 && dev < prev;
            prev = dev;
            const double model = (k + k * (k - 1) / 4.0) / g;
            if (g >= 1000.0) limit = limit && std::abs(dev - model) < 0.05 * model + 1e-12;
            bound_holds = bound_holds && dev <= 10.0 / g;
            gf.push_back({{"n", k}, {"gamma", g}, {"twice_ratio_minus_1", dev}});
        }
    }
    rec.check("gen_factorial_limit", monotone && limit,
              "gen_factorial(n,g)/((2g)^n n!) decreases to 1/2 with excess (n + n(n-1)/4)/(2g)", gf);
    rec.discrepancy("gen_factorial_bound", !bound_holds,
                    "the ratio tends to 1/2, not 1, and the excess of twice the ratio exceeds 10/g once n >= 5");

    double wh = 0.0;
    for (unsigned k = 1; k <= 5; ++k) {
        const double g = 1e4;
        const double ref = std::pow(2.0 * g, k) * std::tgamma(k + 1.0) / 2.0;
        wh = std::max(wh, std::abs(cs_factorial(k, g) - ref) / ref);
    }
    rec.check("harmonic_limit", wh < 1e-2, "x_n! ~ (2g)^n n!/2 at g = 1e4, n <= 5: " + fmt(wh));

    const unsigned m32 = std::min(std::max(N, 1u), 32u);
    bool g0 = true, g1 = true;
    const auto fs = moments_for(SequenceSpec::factorial_squared(), m32);
    const auto sfs = moments_for(SequenceSpec::shifted_factorial_squared(), m32);
    for (unsigned k = 0; k <= m32; ++k) {
        g0 = g0 && gen_factorial(k, R(0)) == fs.even(k);
        if (k >= 1) g1 = g1 && gen_factorial(k, R(1)) * R(2) == sfs.even(k);
    }
    rec.check("gen_factorial_special_cases", g0 && g1,
              "gamma = 0 gives (n!)^2; gamma = 1 gives ((n+1)!)^2/2 for 1 <= n <= " + std::to_string(m32));
}

using SuiteFn = void (*)(Recorder&, unsigned);

struct SuiteDef {
    std::string_view name;
    unsigned default_n;
    SuiteFn fn;
};

const SuiteDef* find_suite(std::string_view name) {
    static const SuiteDef defs[] = {
        {"asymptotics", 48, asymptotics_suite},
        {"identities", 12, identities_suite},
        {"quadrature", 8,
         [](Recorder& r, unsigned n) {
             moment_quadrature(r, n);
             eigenfunction_quadrature(r, n);
         }},
        {"tables", 0, [](Recorder& r, unsigned) { tables_suite(r); }},
    };
    for (const auto& d : defs)
        if (d.name == name) return &d;
    return nullptr;
}

}  // namespace

std::string_view to_string(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Warn: return "WARN";
        case Status::Fail: return "FAIL";
    }
    return "FAIL";
}

Status SuiteReport::status() const {
    Status s = Status::Pass;
    for (const auto& r : records) s = std::max(s, r.status);
    return s;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"asymptotics", "identities", "quadrature", "tables"};
    return names;
}

SuiteReport run_suite(std::string_view name, const VerifyOptions& options) {
    const SuiteDef* def = find_suite(name);
    if (def == nullptr) throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
    const unsigned n = options.n_max.value_or(def->default_n);
    if (n > kMaxDegree) throw DomainError("n_max " + std::to_string(n) + " exceeds " + std::to_string(kMaxDegree));
    SuiteReport report{std::string(name), {}};
    Recorder rec(report.records);
    try {
        def->fn(rec, n);
    } catch (const std::exception& e) {
        // A throwing check is a failed check, not a crashed run.
        rec.check("suite_aborted", false, e.what());
    }
    return report;
}

std::vector<SuiteReport> run_suites(std::string_view name, const VerifyOptions& options) {
    if (name != "all") return {run_suite(name, options)};
    std::vector<std::future<SuiteReport>> jobs;
    for (const auto& s : suite_names())
        jobs.push_back(std::async(std::launch::async, [&s, &options] { return run_suite(s, options); }));
    std::vector<SuiteReport> out;
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

Status overall(const std::vector<SuiteReport>& reports) {
    Status s = Status::Pass;
    for (const auto& r : reports) s = std::max(s, r.status());
    return s;
}

nlohmann::json to_json(const CheckRecord& r) {
    return {{"check", r.check}, {"status", to_string(r.status)}, {"detail", r.detail}, {"data", r.data}};
}

nlohmann::json to_json(const SuiteReport& r) {
    json records = json::array();
    for (const auto& c : r.records) records.push_back(to_json(c));
    return {{"suite", r.suite}, {"status", to_string(r.status())}, {"records", records}};
}

}  // namespace spt
