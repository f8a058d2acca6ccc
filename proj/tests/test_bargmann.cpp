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

#include "spt/bargmann.hpp"
#include "spt/cstates.hpp"
#include "spt/errors.hpp"

using namespace spt;

TEST_SUITE("bargmann") {
    TEST_CASE("monomial images") {
        for (double g : {1.0, 2.0, 3.5})
            for (Complex z : {Complex(0.5, 0.0), Complex(1.0, 1.0), Complex(-0.7, 2.0)})
                for (unsigned n = 0; n <= 8; ++n) {
                    const auto r = bargmann_basis(n, z, g, 1.0);
                    const Complex expected = std::pow(z, static_cast<int>(n)) / std::sqrt(cs_factorial(n, g));
                    CHECK(std::abs(r.value / expected - 1.0) < 1e-8);
                    CHECK(r.converged());
                }
    }

    TEST_CASE("sin-argument kernel does not reproduce the images") {
        const Complex z(1.0, 1.0);
        const auto r = bargmann_basis(1, z, 2.0, 1.0, 128, KernelVariant::Sin);
        CHECK(std::abs(r.value / (z / std::sqrt(cs_factorial(1, 2.0))) - 1.0) > 1e-2);
    }

    TEST_CASE("square-well transform of the ground state") {
        // gamma = 1: B[phi_0](z) = 1/sqrt(x_0!) = sqrt2 with x_0! = 1/2
        CHECK(std::abs(bargmann_basis(0, {1.0, 0.0}, 1.0, 1.0).value - std::sqrt(2.0)) < 1e-8);
        CHECK(std::abs(bargmann_basis(0, {1.0, 0.0}, 1.0, 2.5).value - std::sqrt(2.0)) < 1e-8);
    }

    TEST_CASE("domain") {
        CHECK_THROWS_AS(bargmann_basis(0, {1.0, 0.0}, 0.7, 1.0), DomainError);
        CHECK_THROWS_AS(measure_density(2, 1.0), UnsupportedError);
    }

    TEST_CASE("reproducing kernel") {
        const auto k1 = reproducing_kernel({1.0, 1.0}, {0.3, -0.2}, 2.0);
        const auto k2 = reproducing_kernel({0.3, -0.2}, {1.0, 1.0}, 2.0);
        CHECK(std::abs(k1.value - std::conj(k2.value)) < 1e-12);
        // 1/x_0! with the continuation factorial
        CHECK(std::abs(reproducing_kernel({1.0, 1.0}, {0.0, 0.0}, 2.0).value - 2.0) < 1e-15);
        CHECK(std::abs(reproducing_kernel({1.0, 1.0}, {0.0, 0.0}, 0.0).value - 1.0) < 1e-15);
        // diagonal equals the NLCS normalization
        CHECK(reproducing_kernel({0.9, 0.4}, {0.9, 0.4}, 2.5).value.real() ==
              doctest::Approx(nlcs_norm(2.5, std::norm(Complex(0.9, 0.4)))).epsilon(1e-13));
    }

    TEST_CASE("measure moments") {
        for (const auto& r : mellin_k0_check(8)) CHECK(r.rel_err < 1e-6);
        const auto g0 = identity_moment_check(0, 6);
        CHECK(g0[3].exact == "72");
        for (const auto& r : g0) CHECK(r.rel_err < 1e-6);
        const auto g1 = identity_moment_check(1, 6);
        CHECK(g1[0].exact == "1");
        CHECK(g1[0].rel_err < 1e-8);
        for (const auto& r : g1) CHECK(r.rel_err < 1e-6);
        CHECK(to_json(g1[0]).at("check").is_string());
    }

    TEST_CASE("reproducing property") {
        // F = B_1[phi_2], whose image is pinned by the monomial-image test above
        const double x2 = cs_factorial(2, 1.0);
        const auto F = [x2](Complex w) { return w * w / std::sqrt(x2); };
        const Complex z(0.4, 0.3);
        CHECK(std::abs(bargmann_basis(2, z, 1.0, 1.0).value - F(z)) < 1e-10);
        CHECK(std::abs(reproduce(F, z, 1) - F(z)) < 1e-5 * std::abs(F(z)));
        const auto G = [](Complex w) { return 1.0 + w * w * w; };
        CHECK(std::abs(reproduce(G, z, 0) - G(z)) < 1e-5);
    }

    TEST_CASE("growth condition") {
        CHECK(growth_condition({Complex(1.0)}, 2.0) == doctest::Approx(0.5));
        const auto a = taylor_coefficients([](Complex w) { return bargmann_basis(2, w, 2.0, 1.0).value; }, 12);
        CHECK(std::abs(growth_condition(a, 2.0) - 1.0) < 1e-8);
    }

    TEST_CASE("isometry on the basis") {
        const auto G = isometry_gram(3.5, 5);
        for (unsigned i = 0; i <= 5; ++i)
            for (unsigned j = 0; j <= 5; ++j) CHECK(std::abs(G[i][j] - (i == j ? 1.0 : 0.0)) < 1e-7);
    }

    TEST_CASE("linearity") {
        const CSParams p{2.0, 2.0, 1.0};
        const auto f = [&](double t) { return Complex(eigenfunction(3, t, p)); };
        const auto g = [&](double t) { return Complex(std::cos(t) * std::cos(t)); };
        const Complex a(2.0, -1.0), b(0.5, 0.5), z(-0.3, 0.9);
        const Complex lhs = bargmann_transform([&](double t) { return a * f(t) + b * g(t); }, z, 2.0, 1.0).value;
        const Complex rhs = a * bargmann_transform(f, z, 2.0, 1.0).value + b * bargmann_transform(g, z, 2.0, 1.0).value;
        CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(rhs));
    }
}
