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

#include "spt/cstates.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>

#include "spt/errors.hpp"

namespace spt {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr unsigned kMaxTerms = 4096;

// x_n! / x_{n-1}! = n (n+g)(n+2g-1)/(n+g-1); the same expression gives 2(1+g) at n = 1.
double factorial_ratio(unsigned n, double g) {
    const double m = n;
    return m * (m + g) * (m + 2.0 * g - 1.0) / (m + g - 1.0);
}

// Squared normalization of phi_0 and the ratio d_n^2 / d_{n-1}^2.
double d0_squared(double nu, double alpha) {
    return alpha * std::exp(std::lgamma(nu + 1.0) - std::lgamma(nu + 0.5)) / std::sqrt(kPi);
}

double d_ratio(unsigned n, double nu) {
    const double m = n;
    return m * (m + nu) / ((m + nu - 1.0) * (m + 2.0 * nu - 1.0));
}

double clamped_cos(double x) { return std::max(0.0, std::cos(x)); }

}  // namespace

void CSParams::validate() const {
    if (!(gamma > 0.0) || !std::isfinite(gamma)) throw DomainError("gamma must be positive");
    if (!(nu >= 1.0) || !std::isfinite(nu)) throw DomainError("nu must be >= 1");
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("alpha must be positive");
}

double CSParams::half_width() const { return kPi / (2.0 * alpha); }

void CSParams::check_theta(double theta) const {
    // Allow the endpoints to be hit by rounded grid points.
    const double h = half_width() * (1.0 + 4.0 * std::numeric_limits<double>::epsilon());
    if (!(std::abs(theta) <= h)) throw DomainError("theta outside [-pi/(2 alpha), pi/(2 alpha)]");
}

double energy(unsigned n, const CSParams& params) {
    const double k = params.nu + n;
    return 0.5 * params.alpha * params.alpha * k * k;
}

double eigenfunction(unsigned n, double theta, const CSParams& params) {
    params.validate();
    params.check_theta(theta);
    const double nu = params.nu;
    double d2 = d0_squared(nu, params.alpha);
    for (unsigned k = 1; k <= n; ++k) d2 *= d_ratio(k, nu);
    const double c = clamped_cos(params.alpha * theta);
    return std::sqrt(d2) * std::pow(c, nu) * gegenbauer(n, nu, std::sin(params.alpha * theta));
}

double cs_factorial(unsigned n, double gamma) {
    if (!(gamma > 0.0)) throw DomainError("cs_factorial: gamma must be positive");
    double f = 0.5;
    for (unsigned k = 1; k <= n; ++k) f *= factorial_ratio(k, gamma);
    return f;
}

double nlcs_norm(double gamma, double r2) {
    if (!(gamma > 0.0)) throw DomainError("nlcs_norm: gamma must be positive");
    if (r2 < 0.0) throw DomainError("nlcs_norm: |z|^2 must be nonnegative");
    return 2.0 * hyp1f2(gamma, gamma + 1.0, 2.0 * gamma, r2);
}

namespace {

// Partial sums of |z|^{2n}/x_n! with the geometric tail bound after term n.
struct SeriesWalk {
    double r2, gamma;
    unsigned n = 0;
    double term, sum;

    SeriesWalk(double r2_, double g) : r2(r2_), gamma(g), term(2.0), sum(2.0) {}
    void step() {
        ++n;
        term *= r2 / factorial_ratio(n, gamma);
        sum += term;
    }
    [[nodiscard]] double tail() const {
        const double r = r2 / factorial_ratio(n + 1, gamma);
        if (r >= 1.0) return std::numeric_limits<double>::infinity();
        return term * r / (1.0 - r);
    }
};

}  // namespace

unsigned nlcs_truncation(Complex z, double gamma, double rel_tol) {
    if (!(gamma > 0.0)) throw DomainError("nlcs_truncation: gamma must be positive");
    SeriesWalk w(std::norm(z), gamma);
    while (w.tail() > rel_tol * w.sum) {
        if (w.n >= kMaxTerms) throw DomainError("nlcs_truncation: |z| too large");
        w.step();
    }
    return w.n;
}

std::vector<Complex> NLCSCoefficients::normalized() const {
    std::vector<Complex> out(raw);
    const double s = 1.0 / std::sqrt(norm);
    for (auto& c : out) c *= s;
    return out;
}

NLCSCoefficients nlcs_coefficients(Complex z, double gamma, unsigned n_max) {
    if (!(gamma > 0.0)) throw DomainError("nlcs_coefficients: gamma must be positive");
    NLCSCoefficients out;
    out.raw.reserve(n_max + 1);
    const Complex zb = std::conj(z);
    Complex c = std::sqrt(2.0);
    out.raw.push_back(c);
    SeriesWalk w(std::norm(z), gamma);
    for (unsigned n = 1; n <= n_max; ++n) {
        c *= zb / std::sqrt(factorial_ratio(n, gamma));
        out.raw.push_back(c);
        w.step();
    }
    out.tail_bound = w.tail();
    out.norm = nlcs_norm(gamma, std::norm(z));
    return out;
}

NLCSState::NLCSState(CSParams params, Complex z)
    : params_(params), z_(z), norm_(0.0), truncation_(0) {
    params_.validate();
    norm_ = nlcs_norm(params_.gamma, std::norm(z));
    truncation_ = nlcs_truncation(z, params_.gamma);
}

Complex NLCSState::wavefunction(double theta) const {
    return wavefunction_series(theta, z_, params_);
}

Complex wavefunction_series(double theta, Complex z, const CSParams& params) {
    params.validate();
    params.check_theta(theta);
    const double g = params.gamma, nu = params.nu;
    // Amplitudes, not squares, are summed here and |phi_n| grows polynomially in n;
    // tighten the squared-tail bound and keep a few guard terms.
    const unsigned n_max = nlcs_truncation(z, g, 1e-40) + 8;
    const double s = std::sin(params.alpha * theta);
    const double cnu = std::pow(clamped_cos(params.alpha * theta), nu);
    const Complex zb = std::conj(z);

    // Coefficient, eigenfunction normalization and Gegenbauer value advance together.
    Complex c = std::sqrt(2.0);
    double d = std::sqrt(d0_squared(nu, params.alpha));
    double g_prev = 0.0, g_cur = 1.0;
    Complex acc = c * d * g_cur;
    for (unsigned n = 1; n <= n_max; ++n) {
        c *= zb / std::sqrt(factorial_ratio(n, g));
        d *= std::sqrt(d_ratio(n, nu));
        const double m = n - 1;
        const double g_next = (2.0 * s * (m + nu) * g_cur - (m + 2.0 * nu - 1.0) * g_prev) / (m + 1.0);
        g_prev = g_cur;
        g_cur = g_next;
        acc += c * d * g_cur;
    }
    return acc * cnu / std::sqrt(nlcs_norm(g, std::norm(z)));
}

Complex wavefunction_closed(double theta, Complex z, const CSParams& params) {
    params.validate();
    if (params.gamma != params.nu) throw DomainError("closed form requires gamma == nu");
    params.check_theta(theta);
    if (z == Complex(0.0, 0.0)) return wavefunction_series(theta, z, params);
    const double g = params.gamma;
    const double c = clamped_cos(params.alpha * theta);
    const double s = std::sin(params.alpha * theta);
    const Complex zb = std::conj(z);
    // conj(z)^{1/2-g} J_{g-1/2}(conj(z) c) sqrt(c) = 2^{1/2-g} c^g R(conj(z) c), R entire.
    const double pref = std::sqrt(2.0 * params.alpha *
                                  std::exp(std::lgamma(g + 1.0) + std::lgamma(g + 0.5)) /
                                  std::sqrt(kPi));
    return pref / std::sqrt(nlcs_norm(g, std::norm(z))) * std::exp(zb * s) * std::pow(c, g) *
           bessel_j_reduced(g - 0.5, zb * c);
}

Complex square_well_closed(double theta, Complex z, double alpha) {
    const CSParams p{1.0, 1.0, alpha};
    p.validate();
    p.check_theta(theta);
    if (z == Complex(0.0, 0.0)) return wavefunction_series(theta, z, p);
    const double r = std::abs(z);
    const Complex zb = std::conj(z);
    const double c = clamped_cos(alpha * theta);
    return std::sqrt(2.0 * alpha / kPi) / std::sqrt(bessel_i(0.0, 2.0 * r) - 1.0) * (r / zb) *
           std::exp(zb * std::sin(alpha * theta)) * std::sin(zb * c);
}

double BarutGirardelloState::state_norm() const {
    double s = 0.0;
    for (const auto& c : coeffs) s += std::norm(c);
    return prefactor * prefactor * s;
}

BarutGirardelloState barut_girardello(Complex z, const Rational& sigma, unsigned n_max) {
    const Rational two_sigma = sigma * 2;
    if (!two_sigma.is_integer() || two_sigma.sign() <= 0)
        throw DomainError("barut_girardello: 2 sigma must be a positive integer");
    const double k = two_sigma.to_double();
    const double r = std::abs(z);
    BarutGirardelloState out;
    const Complex zb = std::conj(z);
    Complex c = 1.0;
    out.coeffs.push_back(c);
    double term = 1.0;
    for (unsigned n = 1; n <= n_max; ++n) {
        const double step = n * (k + n - 1.0);
        c *= zb / std::sqrt(step);
        term *= r * r / step;
        out.coeffs.push_back(c);
    }
    const double q = r * r / ((n_max + 1.0) * (k + n_max));
    out.tail_bound = q < 1.0 ? term * q / (1.0 - q) : std::numeric_limits<double>::infinity();
    if (r == 0.0) {
        out.series_norm = 1.0;
        out.prefactor = 1.0;
        out.printed_prefactor = k == 1.0 ? 1.0 : 0.0;
        return out;
    }
    const double i = bessel_i(k - 1.0, 2.0 * r);
    out.series_norm = std::exp(std::lgamma(k)) * std::pow(r, 1.0 - k) * i;
    out.prefactor = 1.0 / std::sqrt(out.series_norm);
    out.printed_prefactor = std::pow(r, k - 1.0) / std::sqrt(i);
    return out;
}

void write_wavefunction_csv(std::ostream& os, const NLCSState& state, unsigned points) {
    if (points < 2) throw DomainError("grid needs at least two points");
    const double h = state.params().half_width();
    os << "theta,re,im,abs2\n";
    char buf[160];
    for (unsigned i = 0; i < points; ++i) {
        const double t = i + 1 == points ? h : -h + 2.0 * h * i / (points - 1);
        const Complex psi = state.wavefunction(t);
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", t, psi.real(), psi.imag(),
                      std::norm(psi));
        os << buf;
    }
}

}  // namespace spt
