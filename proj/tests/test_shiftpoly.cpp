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

#include "spt/errors.hpp"
#include "spt/hankel.hpp"
#include "spt/shiftpoly.hpp"

using namespace spt;

namespace {
constexpr double kPi = std::numbers::pi;
const double kRt2 = std::sqrt(2.0);
Rational R(long p, long q = 1) { return {p, q}; }
QSqrt2 S(long p, long q = 1) { return {Rational(0), Rational(p, q)}; }  // (p/q) sqrt2
}  // namespace

TEST_SUITE("shiftpoly") {
    TEST_CASE("gamma = 0 family from the recurrence") {
        const auto phi = phi_family({ShiftFamily::Gamma0, R(1, 2)}, 4);
        CHECK(phi[0] == Sqrt2Poly{QSqrt2(1)});
        CHECK(phi[1] == Sqrt2Poly{QSqrt2(0), S(1)});
        CHECK(phi[2] == Sqrt2Poly{QSqrt2(R(-1, 2)), QSqrt2(0), QSqrt2(1)});
        // hand unrolling: x phi_2 = (3/sqrt2) phi_3 + (2/sqrt2) phi_1
        CHECK(phi[3] == Sqrt2Poly{QSqrt2(0), S(-5, 6), QSqrt2(0), S(1, 3)});
    }

    TEST_CASE("degree, parity and recurrence residual") {
        for (const auto& fam : {RecurrenceFamily{ShiftFamily::Gamma0, R(1, 2)}, RecurrenceFamily{ShiftFamily::Gamma1, R(1, 2)},
                                RecurrenceFamily{ShiftFamily::Sigma, R(3, 2)}}) {
            const auto phi = phi_family(fam, 21);
            for (unsigned n = 0; n <= 20; ++n) {
                CHECK(phi[n].degree() == long(n));
                CHECK(phi[n].parity() == (n % 2 == 0 ? 1 : -1));
                for (int k = 0; k < 17; ++k) {
                    const double x = -4.0 + 0.5 * k;
                    const double lhs = x * phi[n].eval(x);
                    double rhs = fam.a(n).to_double() * phi[n + 1].eval(x);
                    if (n > 0) rhs += fam.b(n).to_double() * phi[n - 1].eval(x);
                    CHECK(std::abs(lhs - rhs) < 1e-9 * std::max(1.0, std::abs(lhs)));
                }
            }
        }
    }

    TEST_CASE("gamma = 1 recurrence coefficients") {
        const RecurrenceFamily f{ShiftFamily::Gamma1, R(1, 2)};
        CHECK(f.a(3) == S(5, 2));  // (n + 2)/sqrt2
        CHECK(f.b(3) == S(2));     // (n + 1)/sqrt2
    }

    TEST_CASE("Meixner-Pollaczek closed forms") {
        CHECK(mp_eval(0.5, 0.3, kPi / 2.0, 0) == 1.0);
        CHECK(mp_eval(0.5, 1.0 / kRt2, kPi / 2.0, 1) == doctest::Approx(kRt2).epsilon(1e-14));
        const auto phi = phi_family({ShiftFamily::Gamma0, R(1, 2)}, 20);
        for (double x : {-2.0, -0.5, 0.3, 1.7})
            for (unsigned n = 0; n <= 20; ++n) {
                const double r = mp_eval(0.5, x / kRt2, kPi / 2.0, n);
                const Complex h = mp_eval_hypergeometric(0.5, x / kRt2, kPi / 2.0, n);
                CHECK(std::abs(h - Complex(r)) < 1e-10 * std::max(1.0, std::abs(r)));
                if (n <= 12) CHECK(std::abs(phi[n].eval(x) - r) < 1e-10 * std::max(1.0, std::abs(r)));
            }
    }

    TEST_CASE("Pollaczek polynomials") {
        const PollaczekParams c0{R(1, 2), kPi / 2.0, R(0)}, c1{R(1, 2), kPi / 2.0, R(1)};
        const auto phi1 = phi_family({ShiftFamily::Gamma1, R(1, 2)}, 12);
        for (double x : {-1.1, 0.4, 2.2}) {
            for (unsigned n = 0; n <= 10; ++n)
                CHECK(std::abs(pollaczek_eval(c0, x, n) - mp_eval(0.5, x, kPi / 2.0, n)) < 1e-12 * std::max(1.0, std::abs(mp_eval(0.5, x, kPi / 2.0, n))));
            for (unsigned n = 0; n <= 12; ++n) {
                const double v = pollaczek_eval(c1, x / kRt2, n);
                CHECK(std::abs(v - phi1[n].eval(x)) < 1e-10 * std::max(1.0, std::abs(v)));
            }
        }
        CHECK(pollaczek_eval(c1, 0.7, 0) == 1.0);
        CHECK_THROWS_AS((PollaczekParams{R(1, 2), 4.0, R(0)}.validate()), DomainError);
    }

    TEST_CASE("generating functions") {
        const auto g = mp_generating_check(0.5, 0.0, kPi / 2.0, 0.3);
        CHECK(g.closed.real() == doctest::Approx(1.0 / std::sqrt(1.09)).epsilon(1e-15));
        CHECK(g.residual < 1e-8);
        const auto t0 = mp_generating_check(0.5, 0.4, kPi / 2.0, 0.0);
        CHECK(t0.partial == Complex(1.0));
        CHECK(mp_generating_check(0.5, 0.4, kPi / 2.0, 1.2).diverges);
        const auto a = arctan_identity(kRt2, 0.4);
        CHECK(std::abs(a.power_side - Complex(a.exp_side)) < 1e-12);
        CHECK(a.exp_side == doctest::Approx(std::exp(kRt2 * std::atan(0.4))).epsilon(1e-15));
        CHECK(sigma_generating_check(1.5, 0.8, 0.6).residual < 1e-8);
        for (double x : {-1.0, 0.7})
            for (double t : {-0.5, 0.5}) CHECK(std::abs(generating_ode_residual(x, t)) < 1e-8 * generating_g(x, t));
    }

    TEST_CASE("q normalization") {
        const auto q = q_family(12);
        CHECK(q[2] == RationalPoly{R(-1, 2), R(0), R(1)});
        for (unsigned n = 1; n < 12; ++n)
            CHECK(q[n + 1] == q[n].shift_up() - q[n - 1] * R(long(n * n), 2));
    }

    TEST_CASE("omega weight") {
        CHECK(pollaczek_weight(0.0) == doctest::Approx(2.0 / (kPi * kPi)).epsilon(1e-14));
        for (double x : {0.5, 1.5, 3.0}) CHECK(std::abs(pollaczek_weight(x) - pollaczek_weight(-x)) < 1e-12);
        std::string warning;
        (void)pollaczek_weight(45.0, &warning);
        CHECK_FALSE(warning.empty());
        const auto G = pollaczek_gram(6);
        for (unsigned i = 0; i <= 6; ++i)
            for (unsigned j = 0; j <= 6; ++j)
                if (i != j) CHECK(std::abs(G[i][j]) < 1e-6 * G[i][i]);
    }

    TEST_CASE("tabulated phi list is inconsistent") {
        const auto rows = printed_phi_comparison();
        REQUIRE(rows.size() == 7);
        CHECK(rows[0].equal);
        CHECK_FALSE(rows[1].equal);
        CHECK(rows[1].leading_ratio == doctest::Approx(kRt2));
        CHECK(rows[2].leading_ratio != doctest::Approx(rows[1].leading_ratio));
    }

    TEST_CASE("json coefficient pairs") {
        CHECK(to_json(QSqrt2(R(1, 2), R(-3))).dump() == R"([["1","2"],["-3","1"]])");
        const auto j = family_to_json({ShiftFamily::Gamma0, R(1, 2)}, phi_family({ShiftFamily::Gamma0, R(1, 2)}, 2));
        CHECK(j.dump().find("gamma0") != std::string::npos);
    }
}
