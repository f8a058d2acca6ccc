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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "spt/cstates.hpp"
#include "spt/errors.hpp"
#include "spt/oracle.hpp"
#include "spt/quadrature.hpp"

using namespace spt;

namespace {
constexpr double kPi = std::numbers::pi;

double max_grid_deviation(double gamma, Complex z, bool square_well) {
    const CSParams p{gamma, gamma, 1.0};
    const double h = p.half_width();
    std::vector<Complex> a, b;
    double scale = 0.0;
    for (int i = 0; i <= 20; ++i) {
        const double t = i == 20 ? h : -h + 2.0 * h * i / 20.0;
        a.push_back(square_well ? square_well_closed(t, z, 1.0) : wavefunction_closed(t, z, p));
        b.push_back(wavefunction_series(t, z, p));
        scale = std::max(scale, std::abs(b.back()));
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::abs(a[i] - b[i]) / std::max(std::abs(b[i]), 1e-14 * scale));
    return worst;
}
}  // namespace

TEST_SUITE("cstates") {
    TEST_CASE("parameters") {
        CHECK_THROWS_AS((CSParams{0.0, 1.0, 1.0}.validate()), DomainError);
        CHECK_THROWS_AS((CSParams{1.0, 0.5, 1.0}.validate()), DomainError);
        CHECK_THROWS_AS((CSParams{1.0, 1.0, -1.0}.validate()), DomainError);
        CHECK(CSParams{1.0, 1.0, 2.0}.half_width() == doctest::Approx(kPi / 4.0));
        CHECK_THROWS_AS(eigenfunction(0, 2.0, CSParams{}), DomainError);
    }

    TEST_CASE("energies") {
        CHECK(energy(0, {2.0, 2.0, 1.0}) == doctest::Approx(2.0));
        CHECK(energy(3, {1.0, 1.0, 1.0}) == doctest::Approx(8.0));
    }

    TEST_CASE("eigenfunctions are orthonormal") {
        for (double nu : {1.0, 2.0, 3.5}) {
            const CSParams p{nu, nu, 1.3};
            const auto rule = gauss_legendre(200, -p.half_width(), p.half_width());
            for (unsigned i = 0; i <= 8; ++i)
                for (unsigned j = 0; j <= i; ++j) {
                    const double v = rule.integrate([&](double t) { return eigenfunction(i, t, p) * eigenfunction(j, t, p); });
                    CHECK(std::abs(v - (i == j ? 1.0 : 0.0)) < 1e-8);
                }
        }
        // square well: sqrt(2 alpha/pi) cos(alpha t) at n = 0
        CHECK(eigenfunction(0, 0.3, {1.0, 1.0, 1.0}) == doctest::Approx(std::sqrt(2.0 / kPi) * std::cos(0.3)));
    }

    TEST_CASE("continuation factorial") {
        CHECK(cs_factorial(0, 2.5) == 0.5);
        CHECK(cs_factorial(1, 2.5) == doctest::Approx(0.5 * 2.0 * 3.5));  // x_0! 2(1 + g)
        // x_n!/x_{n-1}! = n (n + g)(n + 2g - 1)/(n + g - 1)
        for (unsigned n = 2; n <= 10; ++n) {
            const double g = 1.7;
            CHECK(cs_factorial(n, g) / cs_factorial(n - 1, g) ==
                  doctest::Approx(n * (n + g) * (n + 2 * g - 1) / (n + g - 1)).epsilon(1e-13));
        }
    }

    TEST_CASE("normalization") {
        CHECK(nlcs_norm(2.0, 0.0) == 2.0);
        for (double g : {1.0, 2.5})
            for (double r : {0.3, 1.5, 3.0}) {
                const auto c = nlcs_coefficients(Complex(r, 0.0), g, nlcs_truncation(Complex(r, 0.0), g));
                double s = 0.0;
                for (const auto& v : c.raw) s += std::norm(v);
                CHECK(std::abs(s - c.norm) < 1e-10 * c.norm);
                CHECK(c.norm == doctest::Approx(2.0 * oracle::hyp1f2(g, g + 1.0, 2.0 * g, r * r)).epsilon(1e-13));
                double u = 0.0;
                for (const auto& v : c.normalized()) u += std::norm(v);
                CHECK(std::abs(u - 1.0) < 1e-12);
            }
        const auto vac = nlcs_coefficients(Complex(0.0), 2.0, 3);
        CHECK(std::abs(vac.normalized()[0]) == doctest::Approx(1.0));
        CHECK(std::abs(vac.normalized()[1]) == 0.0);
    }

    TEST_CASE("closed form agrees with the series") {
        CHECK(max_grid_deviation(2.5, {0.7, 0.3}, false) < 1e-10);
        CHECK(max_grid_deviation(1.0, {1.1, -0.2}, true) < 1e-10);
        CHECK(max_grid_deviation(1.0, {1.1, -0.2}, false) < 1e-10);
        CHECK(max_grid_deviation(3.5, {-2.0, 1.5}, false) < 1e-10);
        CHECK_THROWS_AS(wavefunction_closed(0.1, {1.0, 0.0}, CSParams{2.0, 3.0, 1.0}), DomainError);
    }

    TEST_CASE("vacuum and boundary") {
        const CSParams p{2.0, 2.0, 1.0};
        const NLCSState vac(p, Complex(0.0));
        for (double t : {-1.2, 0.0, 0.9})
            CHECK(std::abs(std::abs(vac.wavefunction(t)) - std::abs(eigenfunction(0, t, p))) < 1e-14);
        CHECK(std::abs(wavefunction_closed(p.half_width(), {0.5, 0.5}, p)) < 1e-14);
    }

    TEST_CASE("Barut-Girardello states") {
        const auto s = barut_girardello(Complex(1.3, 0.0), Rational(1), 60);
        CHECK(s.series_norm == doctest::Approx(oracle::bessel_i(1.0, 2.6) / 1.3).epsilon(1e-14));
        CHECK(s.state_norm() == doctest::Approx(1.0).epsilon(1e-13));
        const auto half = barut_girardello(Complex(0.8, 0.2), Rational(1, 2), 60);
        CHECK(half.printed_prefactor == doctest::Approx(half.prefactor).epsilon(1e-13));
        CHECK_THROWS_AS(barut_girardello(Complex(1.0), Rational(1, 3), 10), DomainError);
    }

    TEST_CASE("csv output") {
        std::ostringstream os;
        write_wavefunction_csv(os, NLCSState({1.0, 1.0, 1.0}, {1.0, 0.0}), 3);
        const std::string s = os.str();
        CHECK(s.rfind("theta,re,im,abs2\n", 0) == 0);
        CHECK(std::count(s.begin(), s.end(), '\n') == 4);
    }
}
