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

#include "spt/bargmann.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "spt/cstates.hpp"
#include "spt/errors.hpp"
#include "spt/quadrature.hpp"
#include "spt/rational.hpp"

namespace spt {
namespace {

constexpr double kPi = std::numbers::pi;

// x_n! / x_{n-1}!; g = 0 is the (n!)^2 family.
double step_ratio(unsigned n, double g) {
    const double m = n;
    if (g == 0.0) return m * m;
    return m * (m + g) * (m + 2.0 * g - 1.0) / (m + g - 1.0);
}

double first_factorial(double g) { return g == 0.0 ? 1.0 : 0.5; }

double transform_prefactor(double g, double alpha) {
    return std::sqrt(2.0 * alpha * std::exp(std::lgamma(g + 1.0) + std::lgamma(g + 0.5)) /
                     std::sqrt(kPi));
}

using LComplex = std::complex<long double>;

// (w/2)^{-mu} J_mu(w) by its ascending series in long double; beyond the range where
// the series keeps its digits, the double kernel takes over.
LComplex reduced_bessel_ld(long double mu, LComplex w) {
    if (std::abs(w) > 16.0L) {
        const Complex v = bessel_j_reduced(static_cast<double>(mu),
                                           Complex(static_cast<double>(w.real()),
                                                   static_cast<double>(w.imag())));
        return {v.real(), v.imag()};
    }
    const LComplex q = -0.25L * w * w;
    LComplex term = 1.0L / std::tgamma(mu + 1.0L);
    LComplex sum = term;
    for (int k = 1; k < 200; ++k) {
        term *= q / (static_cast<long double>(k) * (mu + k));
        sum += term;
        if (std::abs(term) <= 1e-21L * std::abs(sum)) break;
    }
    return sum;
}

// The transform integrand is evaluated and accumulated in long double: the images of
// high-degree basis vectors at small |z| are many orders below the integrand itself.
Complex integrate_kernel(const std::function<LComplex(long double)>& f, Complex z, double g,
                         double alpha, unsigned nodes, KernelVariant variant) {
    const long double a = alpha;
    const long double h = std::numbers::pi_v<long double> / (2.0L * a);
    const auto rule = gauss_legendre_extended(nodes, -h, h);
    const long double gl = g, mu = gl - 0.5L;
    const LComplex zl(z.real(), z.imag());
    LComplex acc = 0.0L;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const long double t = rule.nodes[i];
        const long double c = std::max(0.0L, std::cos(a * t));
        const long double s = std::sin(a * t);
        LComplex k;
        if (variant == KernelVariant::Cos) {
            k = std::exp(zl * s) * std::pow(c, gl) * reduced_bessel_ld(mu, zl * c);
        } else {
            // (z/2)^{1/2-g} J_mu(z s) sqrt(c) = s^mu R(z s) sqrt(c), s^mu on the principal branch.
            k = std::exp(zl * s) * std::pow(LComplex(s, 0.0L), mu) * reduced_bessel_ld(mu, zl * s) *
                std::sqrt(c);
        }
        acc += rule.weights[i] * k * f(t);
    }
    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

// phi_n^nu(t) in long double (same normalization and recurrence as eigenfunction()).
long double eigenfunction_ld(unsigned n, long double t, long double nu, long double alpha) {
    long double d2 = alpha * std::exp(std::lgamma(nu + 1.0L) - std::lgamma(nu + 0.5L)) /
                     std::sqrt(std::numbers::pi_v<long double>);
    const long double y = std::sin(alpha * t);
    long double prev = 0.0L, cur = 1.0L;
    for (unsigned k = 1; k <= n; ++k) {
        const long double m = k;
        d2 *= m * (m + nu) / ((m + nu - 1.0L) * (m + 2.0L * nu - 1.0L));
        const long double next = (2.0L * y * (m - 1.0L + nu) * cur - (m + 2.0L * nu - 2.0L) * prev) / m;
        prev = cur;
        cur = next;
    }
    const long double c = std::max(0.0L, std::cos(alpha * t));
    return std::sqrt(d2) * std::pow(c, nu) * cur;
}

double rel_err(double numeric, double exact) {
    return std::abs(numeric - exact) / std::max(std::abs(exact), std::numeric_limits<double>::min());
}

TransformResult transform_ld(const std::function<LComplex(long double)>& f, Complex z,
                             double gamma, double alpha, unsigned nodes, KernelVariant variant) {
    if (!(gamma >= 1.0)) throw DomainError("bargmann_transform: gamma must be >= 1");
    if (!(alpha > 0.0)) throw DomainError("bargmann_transform: alpha must be positive");
    if (nodes < 2) throw DomainError("bargmann_transform: need at least two nodes");
    const double p = transform_prefactor(gamma, alpha);
    TransformResult r;
    r.nodes = nodes;
    r.value = p * integrate_kernel(f, z, gamma, alpha, nodes, variant);
    r.doubled = p * integrate_kernel(f, z, gamma, alpha, 2 * nodes, variant);
    r.change = std::abs(r.doubled - r.value) / std::max(1.0, std::abs(r.doubled));
    return r;
}

}  // namespace

TransformResult bargmann_transform(const std::function<Complex(double)>& f, Complex z,
                                   double gamma, double alpha, unsigned nodes,
                                   KernelVariant variant) {
    const auto lifted = [&f](long double t) {
        const Complex v = f(static_cast<double>(t));
        return LComplex(v.real(), v.imag());
    };
    return transform_ld(lifted, z, gamma, alpha, nodes, variant);
}

TransformResult bargmann_basis(unsigned n, Complex z, double gamma, double alpha, unsigned nodes,
                               KernelVariant variant) {
    const CSParams params{gamma, gamma, alpha};
    params.validate();
    const long double nu = gamma, a = alpha;
    return transform_ld([&](long double t) { return LComplex(eigenfunction_ld(n, t, nu, a), 0.0L); },
                        z, gamma, alpha, nodes, variant);
}

KernelEval reproducing_kernel(Complex z, Complex w, double gamma) {
    if (!(gamma >= 0.0)) throw DomainError("reproducing_kernel: gamma must be nonnegative");
    const Complex u = z * std::conj(w);
    const double au = std::abs(u);
    KernelEval out;
    out.gamma = gamma;
    Complex term = 1.0 / first_factorial(gamma);
    out.value = term;
    double mag = std::abs(term);
    for (unsigned n = 1;; ++n) {
        const double q = au / step_ratio(n, gamma);
        const double tail = q < 1.0 ? std::abs(term) * q / (1.0 - q)
                                    : std::numeric_limits<double>::infinity();
        if (tail <= 1e-16 * mag) {
            out.truncation = n - 1;
            out.tail_bound = tail;
            break;
        }
        if (n > 4096) throw DomainError("reproducing_kernel: argument too large");
        term *= u / step_ratio(n, gamma);
        out.value += term;
        mag += std::abs(term);
    }
    return out;
}

double measure_density(int gamma, double r) {
    if (r <= 0.0) throw DomainError("measure_density: r must be positive");
    const double k = bessel_k0(2.0 * std::sqrt(r));
    if (gamma == 0) return 4.0 * k;
    if (gamma == 1) return 2.0 * r * k;
    throw UnsupportedError("measure_density: closed form known only for gamma in {0, 1}");
}

Complex reproduce(const std::function<Complex(Complex)>& F, Complex z, int gamma) {
    if (gamma != 0 && gamma != 1)
        throw UnsupportedError("reproduce: closed-form measure only for gamma in {0, 1}");
    const auto radial = semi_infinite_panels();
    constexpr unsigned kAngles = 48;
    Complex acc = 0.0;
    for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
        const double r = radial.nodes[i];
        Complex ring = 0.0;
        for (unsigned j = 0; j < kAngles; ++j) {
            const Complex w = std::polar(r, 2.0 * kPi * j / kAngles);
            ring += F(w) * std::conj(reproducing_kernel(w, z, gamma).value);
        }
        acc += radial.weights[i] * r * measure_density(gamma, r * r) * ring / double(kAngles);
    }
    return acc;
}

nlohmann::json to_json(const MomentRecord& r) {
    return {{"check", r.check}, {"gamma", r.gamma}, {"n", r.n},
            {"exact", r.exact},  {"numeric", r.numeric}, {"rel_err", r.rel_err}};
}

namespace {

// int_0^inf r^n h(r) dr with r = s^2.
double half_line_moment(unsigned n, const std::function<double(double)>& h) {
    const auto rule = semi_infinite_panels();
    return rule.integrate([&](double s) { return 2.0 * std::pow(s, 2 * n + 1) * h(s * s); });
}

MomentRecord make_record(std::string check, double gamma, unsigned n, const Rational& exact,
                         double numeric) {
    return {std::move(check), gamma, n, exact.str(), numeric, rel_err(numeric, exact.to_double())};
}

}  // namespace

std::vector<MomentRecord> mellin_k0_check(unsigned n_max) {
    std::vector<MomentRecord> out;
    for (unsigned n = 0; n <= n_max; ++n) {
        const double v = half_line_moment(n, [](double r) { return 2.0 * bessel_k0(2.0 * std::sqrt(r)); });
        const Rational f = factorial(n);
        out.push_back(make_record("mellin_k0", 0.0, n, f * f, v));
    }
    return out;
}

std::vector<MomentRecord> identity_moment_check(int gamma, unsigned n_max) {
    if (gamma != 0 && gamma != 1)
        throw UnsupportedError("identity_moment_check: closed-form weight only for gamma in {0, 1}");
    std::vector<MomentRecord> out;
    for (unsigned n = 0; n <= n_max; ++n) {
        const double v = half_line_moment(n, [gamma](double r) { return measure_density(gamma, r); });
        const Rational f = factorial(gamma == 0 ? n : n + 1);
        const Rational exact = gamma == 0 ? Rational(2) * f * f : f * f;
        out.push_back(make_record("identity_moment", gamma, n, exact, v));
    }
    return out;
}

double growth_condition(const std::vector<Complex>& a, double gamma) {
    if (!(gamma > 0.0)) throw DomainError("growth_condition: gamma must be positive");
    double f = 0.5, sum = 0.0;
    for (std::size_t n = 0; n < a.size(); ++n) {
        if (n > 0) f *= step_ratio(static_cast<unsigned>(n), gamma);
        sum += f * std::norm(a[n]);
    }
    return sum;
}

std::vector<Complex> taylor_coefficients(const std::function<Complex(Complex)>& F, unsigned count,
                                         double radius, unsigned samples) {
    if (samples < count) throw DomainError("taylor_coefficients: need samples >= count");
    if (!(radius > 0.0)) throw DomainError("taylor_coefficients: radius must be positive");
    std::vector<Complex> values(samples);
    for (unsigned j = 0; j < samples; ++j) values[j] = F(std::polar(radius, 2.0 * kPi * j / samples));
    std::vector<Complex> out(count);
    for (unsigned k = 0; k < count; ++k) {
        Complex acc = 0.0;
        for (unsigned j = 0; j < samples; ++j)
            acc += values[j] * std::polar(1.0, -2.0 * kPi * double(k) * j / samples);
        out[k] = acc / (double(samples) * std::pow(radius, k));
    }
    return out;
}

std::vector<std::vector<Complex>> isometry_gram(double gamma, unsigned n_max, double alpha,
                                                unsigned nodes) {
    const unsigned count = n_max + 4;
    std::vector<std::vector<Complex>> coeffs;
    for (unsigned n = 0; n <= n_max; ++n)
        coeffs.push_back(taylor_coefficients(
            [&](Complex z) { return bargmann_basis(n, z, gamma, alpha, nodes).value; }, count));
    std::vector<std::vector<Complex>> gram(n_max + 1, std::vector<Complex>(n_max + 1));
    for (unsigned i = 0; i <= n_max; ++i)
        for (unsigned j = 0; j <= n_max; ++j) {
            double f = 0.5;
            Complex acc = 0.0;
            for (unsigned k = 0; k < count; ++k) {
                if (k > 0) f *= step_ratio(k, gamma);
                acc += f * coeffs[i][k] * std::conj(coeffs[j][k]);
            }
            gram[i][j] = acc;
        }
    return gram;
}

}  // namespace spt
