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

#include "spt/shiftpoly.hpp"

#include <cmath>
#include <numbers>

#include "spt/errors.hpp"
#include "spt/hankel.hpp"
#include "spt/quadrature.hpp"

namespace spt {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

// k / sqrt2 = (k/2) sqrt2
QSqrt2 over_sqrt2(const Rational& k) { return {Rational(0), k / Rational(2)}; }

}  // namespace

std::string_view to_string(ShiftFamily f) {
    switch (f) {
        case ShiftFamily::Gamma0: return "gamma0";
        case ShiftFamily::Gamma1: return "gamma1";
        case ShiftFamily::Sigma: return "sigma";
    }
    return "unknown";
}

QSqrt2 RecurrenceFamily::a(unsigned n) const {
    const Rational m(static_cast<long>(n));
    return over_sqrt2(kind == ShiftFamily::Gamma1 ? m + 2 : m + 1);
}

QSqrt2 RecurrenceFamily::b(unsigned n) const {
    const Rational m(static_cast<long>(n));
    switch (kind) {
        case ShiftFamily::Gamma0: return over_sqrt2(m);
        case ShiftFamily::Gamma1: return over_sqrt2(m + 1);
        case ShiftFamily::Sigma: return over_sqrt2(m + Rational(2) * sigma - 1);
    }
    return {};
}

std::vector<Sqrt2Poly> phi_family(const RecurrenceFamily& family, unsigned n_max) {
    if (family.kind == ShiftFamily::Sigma && (family.sigma * 2).sign() <= 0)
        throw DomainError("phi_family: sigma must be positive");
    std::vector<Sqrt2Poly> out;
    out.reserve(n_max + 1);
    out.push_back(Sqrt2Poly::constant(QSqrt2(1)));
    for (unsigned n = 0; n < n_max; ++n) {
        Sqrt2Poly next = out[n].shift_up();
        if (n > 0) next -= out[n - 1] * family.b(n);
        out.push_back(next * (QSqrt2(1) / family.a(n)));
    }
    return out;
}

std::vector<RationalPoly> q_family(unsigned n_max) {
    const auto phi = phi_family({ShiftFamily::Gamma0, Rational(1, 2)}, n_max);
    std::vector<RationalPoly> out;
    for (unsigned n = 0; n <= n_max; ++n) {
        const Rational f = factorial(n);
        const Rational p2 = pow(Rational(2), n / 2);
        const QSqrt2 scale = n % 2 == 0 ? QSqrt2(f / p2) : QSqrt2(Rational(0), f / (p2 * 2));
        std::vector<Rational> c;
        const Sqrt2Poly scaled = phi[n] * scale;
        for (const auto& v : scaled.coeffs()) {
            if (!v.is_rational()) throw ExactnessError("q_family: coefficient left Q");
            c.push_back(v.rational_part());
        }
        out.emplace_back(std::move(c));
    }
    return out;
}

double mp_eval(double lambda, double u, double phi, unsigned n) {
    double prev = 0.0, cur = 1.0;
    const double s = std::sin(phi), c = std::cos(phi);
    for (unsigned k = 0; k < n; ++k) {
        const double next = (2.0 * (u * s + (k + lambda) * c) * cur - (k + 2.0 * lambda - 1.0) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

Complex mp_eval_hypergeometric(double lambda, double u, double phi, unsigned n) {
    double pref = 1.0;  // (2 lambda)_n / n!
    for (unsigned k = 0; k < n; ++k) pref *= (2.0 * lambda + k) / (k + 1.0);
    const Complex x = 1.0 - std::polar(1.0, -2.0 * phi);
    return pref * std::polar(1.0, n * phi) *
           hyp2f1_terminating(n, Complex(lambda, u), Complex(2.0 * lambda, 0.0), x);
}

namespace {

// Sums term(n) t^n, stopping after five consecutive negligible terms (or at `terms`).
template <class Term>
GeneratingCheck sum_series(Term&& term, double t, unsigned terms, Complex closed) {
    GeneratingCheck out;
    out.closed = closed;
    out.diverges = std::abs(t) >= 1.0;
    const unsigned cap = terms ? terms : (out.diverges ? 200u : 20000u);
    Complex sum = 0.0;
    double tn = 1.0;
    unsigned quiet = 0, n = 0;
    for (; n <= cap; ++n) {
        const Complex v = term(n) * tn;
        sum += v;
        if (terms == 0 && n >= 10) {
            quiet = std::abs(v) < 1e-18 * std::max(1.0, std::abs(sum)) ? quiet + 1 : 0;
            if (quiet >= 5) break;
        }
        tn *= t;
    }
    out.partial = sum;
    out.terms = std::min(n, cap);
    out.residual = std::abs(out.partial - out.closed);
    return out;
}

}  // namespace

GeneratingCheck mp_generating_check(double lambda, double u, double phi, double t, unsigned terms) {
    const Complex e = std::polar(1.0, phi);
    const Complex closed = std::pow(1.0 - e * t, Complex(-lambda, u)) *
                           std::pow(1.0 - std::conj(e) * t, Complex(-lambda, -u));
    // Run the recurrence alongside the sum instead of restarting it per n.
    double prev = 0.0, cur = 1.0;
    const double s = std::sin(phi), c = std::cos(phi);
    unsigned at = 0;
    auto term = [&](unsigned n) {
        while (at < n) {
            const double next = (2.0 * (u * s + (at + lambda) * c) * cur - (at + 2.0 * lambda - 1.0) * prev) / (at + 1.0);
            prev = cur;
            cur = next;
            ++at;
        }
        return Complex(cur, 0.0);
    };
    return sum_series(term, t, terms, closed);
}

GeneratingCheck sigma_generating_check(double sigma, double x, double t, unsigned terms) {
    if (!(sigma > 0.0)) throw DomainError("sigma_generating_check: sigma must be positive");
    // phi_n^(sigma)(x) = P_n^(sigma)(x/sqrt2, pi/2): reuse the Meixner-Pollaczek sum,
    // but compare against the arctan form.
    auto g = mp_generating_check(sigma, x / kSqrt2, kPi / 2.0, t, terms);
    g.closed = std::pow(1.0 + t * t, -sigma) * std::exp(kSqrt2 * x * std::atan(t));
    g.residual = std::abs(g.partial - g.closed);
    return g;
}

ArctanIdentity arctan_identity(double z, double t) {
    const Complex ratio = Complex(1.0, -t) / Complex(1.0, t);
    return {std::pow(ratio, Complex(0.0, 0.5 * z)), std::exp(z * std::atan(t))};
}

double generating_g(double x, double t) {
    return kSqrt2 / std::sqrt(2.0 + t * t) * std::exp(kSqrt2 * x * std::atan(t / kSqrt2));
}

double generating_ode_residual(double x, double t, double h) {
    const double d = (generating_g(x, t + h) - generating_g(x, t - h)) / (2.0 * h);
    return (t * t + 2.0) * d + (t - 2.0 * x) * generating_g(x, t);
}

void PollaczekParams::validate() const {
    if (!(phi > 0.0 && phi < kPi)) throw DomainError("Pollaczek: phi must lie in (0, pi)");
    const Rational s = Rational(2) * lambda + c;
    const bool first = s.sign() > 0 && c.sign() >= 0;
    const bool second = s >= Rational(1) && c > Rational(-1);
    if (!first && !second) throw DomainError("Pollaczek: need 2lambda+c > 0, c >= 0 or 2lambda+c >= 1, c > -1");
}

double pollaczek_eval(const PollaczekParams& params, double x, unsigned n) {
    params.validate();
    const double lam = params.lambda.to_double(), c = params.c.to_double();
    const double cp = std::cos(params.phi), sp = std::sin(params.phi);
    double prev = 0.0, cur = 1.0;
    for (unsigned k = 0; k < n; ++k) {
        const double next = (2.0 * ((k + lam + c) * cp + x * sp) * cur - (k + 2.0 * lam + c - 1.0) * prev) / (k + c + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

double pollaczek_weight(double x, std::string* warning) {
    if (!std::isfinite(x)) throw DomainError("pollaczek_weight: x must be finite");
    if (warning) {
        warning->clear();
        if (std::abs(x) > 40.0) *warning = "|x| > 40: |Gamma|^2 near underflow, relative accuracy degraded";
    }
    const Complex a(0.5, x / kSqrt2);
    const double g2 = std::exp(2.0 * log_gamma(a + 1.0).real());
    const Complex f = hyp2f1(a, Complex(1.0), a + 1.0, -1.0);
    return g2 / (2.0 * kPi * std::norm(f));
}

std::vector<std::vector<double>> pollaczek_gram(unsigned n_max, double half_width, unsigned nodes) {
    const auto rule = gauss_legendre(nodes, -half_width, half_width);
    const PollaczekParams p{Rational(1, 2), kPi / 2.0, Rational(1)};
    std::vector<std::vector<double>> gram(n_max + 1, std::vector<double>(n_max + 1, 0.0));
    std::vector<double> phi(n_max + 1);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double x = rule.nodes[i];
        const double w = rule.weights[i] * pollaczek_weight(x);
        for (unsigned n = 0; n <= n_max; ++n) phi[n] = pollaczek_eval(p, x / kSqrt2, n);
        for (unsigned m = 0; m <= n_max; ++m)
            for (unsigned n = 0; n <= n_max; ++n) gram[m][n] += w * phi[m] * phi[n];
    }
    return gram;
}

std::vector<RationalPoly> printed_phi_table() {
    const auto r = [](long p, long q = 1) { return Rational(p, q); };
    return {
        RationalPoly{r(1)},
        RationalPoly{r(0), r(2)},
        RationalPoly{r(-1), r(0), r(2)},
        RationalPoly{r(0), r(-8, 3), r(0), r(4)},
        RationalPoly{r(1), r(0), r(-10, 3), r(0), r(2)},
        RationalPoly{r(0), r(46, 15), r(0), r(-16, 5), r(0), r(4, 5)},
        RationalPoly{r(-1), r(0), r(196, 45), r(0), r(-56, 15), r(0), r(4, 15)},
    };
}

std::vector<PrintedPhiRow> printed_phi_comparison() {
    const auto printed = printed_phi_table();
    const auto computed = phi_family({ShiftFamily::Gamma0, Rational(1, 2)},
                                     static_cast<unsigned>(printed.size() - 1));
    std::vector<PrintedPhiRow> out;
    for (unsigned n = 0; n < printed.size(); ++n) {
        PrintedPhiRow row;
        row.n = n;
        row.printed = printed[n].str();
        row.computed = computed[n].str();
        std::vector<QSqrt2> lifted;
        for (const auto& c : printed[n].coeffs()) lifted.emplace_back(c);
        row.equal = Sqrt2Poly(std::move(lifted)) == computed[n];
        row.leading_ratio = printed[n].leading().to_double() / computed[n].leading().to_double();
        out.push_back(std::move(row));
    }
    return out;
}

nlohmann::json to_json(const QSqrt2& v) {
    return nlohmann::json::array({to_json(v.rational_part()), to_json(v.sqrt2_part())});
}

nlohmann::json to_json(const Sqrt2Poly& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
    return {{"degree", p.degree()}, {"coeffs", coeffs}};
}

nlohmann::json family_to_json(const RecurrenceFamily& family, const std::vector<Sqrt2Poly>& polys) {
    nlohmann::json j;
    j["family"] = std::string(to_string(family.kind));
    j["sigma"] = family.sigma.str();
    j["polys"] = nlohmann::json::array();
    for (const auto& p : polys) j["polys"].push_back(to_json(p));
    return j;
}

}  // namespace spt
