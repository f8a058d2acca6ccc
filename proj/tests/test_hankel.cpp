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

#include "spt/errors.hpp"
#include "spt/hankel.hpp"
#include "spt/special.hpp"

using namespace spt;

namespace {

Rational R(long p, long q = 1) { return {p, q}; }

OrthoSystem gamma0(unsigned n) { return monic_ops(moments_for(SequenceSpec::factorial_squared(), n), n); }
OrthoSystem gamma1(unsigned n) { return monic_ops(moments_for(SequenceSpec::shifted_factorial_squared(), n), n); }

}  // namespace

TEST_SUITE("hankel") {
    TEST_CASE("gamma = 0 list") {
        const auto p = gamma0(6);
        CHECK(p.poly(0) == RationalPoly{R(1)});
        CHECK(p.poly(1) == RationalPoly{R(0), R(1)});
        CHECK(p.poly(2) == RationalPoly{R(-1), R(0), R(1)});
        CHECK(p.poly(3) == RationalPoly{R(0), R(-4), R(0), R(1)});
        CHECK(p.poly(4) == RationalPoly{R(20, 3), R(0), R(-32, 3), R(0), R(1)});
        CHECK(p.poly(5) == RationalPoly{R(0), R(252, 5), R(0), R(-108, 5), R(0), R(1)});
        CHECK(p.poly(6) == RationalPoly{R(-4716, 41), R(0), R(9612, 41), R(0), R(-1593, 41), R(0), R(1)});
    }

    TEST_CASE("gamma = 1 list and the exact Q_6") {
        const auto q = gamma1(6);
        CHECK(q.poly(2) == RationalPoly{R(-4), R(0), R(1)});
        CHECK(q.poly(3) == RationalPoly{R(0), R(-9), R(0), R(1)});
        CHECK(q.poly(4) == RationalPoly{R(252, 5), R(0), R(-108, 5), R(0), R(1)});
        CHECK(q.poly(5) == RationalPoly{R(0), R(1296, 7), R(0), R(-256, 7), R(0), R(1)});
        // Tabulated x^6 - 8208/131 x^4 + 37429/50 x^2 - 21035/16 is wrong below the x^4 term.
        CHECK(q.poly(6) == RationalPoly{R(-172224, 131), R(0), R(98064, 131), R(0), R(-8208, 131), R(0), R(1)});
        CHECK_FALSE(q.poly(6) == RationalPoly{R(-21035, 16), R(0), R(37429, 50), R(0), R(-8208, 131), R(0), R(1)});
    }

    TEST_CASE("trivial degrees") {
        for (const auto& spec : {SequenceSpec::factorial_squared(), SequenceSpec::generalized(R(7, 3))}) {
            const auto sys = monic_ops(moments_for(spec, 1), 1);
            CHECK(sys.poly(1) == RationalPoly{R(0), R(1)});
        }
        CHECK(monic_ops(moments_for(SequenceSpec::factorial_squared(), 0), 0).poly(0) == RationalPoly{R(1)});
    }

    TEST_CASE("norms and recurrence coefficients") {
        const auto p = gamma0(6);
        CHECK(norm_xi(p, 2) == R(3));
        CHECK(norm_xi(p, 4) == R(656, 3));
        CHECK(norm_xi(p, 6) == R(3681936, 41));
        CHECK(recurrence_A(p, 1).squared == R(1));
        CHECK(recurrence_A(p, 2).squared == R(3));
        CHECK(recurrence_A(p, 3).squared == R(20, 3));
        CHECK(recurrence_A(p, 2).value == doctest::Approx(std::sqrt(3.0)));
        // beta_n = Delta_n Delta_{n-2} / Delta_{n-1}^2
        const auto& m = p.moments();
        for (unsigned n = 2; n <= 6; ++n)
            CHECK(p.beta()[n] == hankel_determinant(m, n) * hankel_determinant(m, n - 2) /
                                     (hankel_determinant(m, n - 1) * hankel_determinant(m, n - 1)));
    }

    TEST_CASE("half-line polynomials") {
        const auto p = gamma0(6);
        CHECK(half_line_poly(p, 0).monic == RationalPoly{R(1)});
        const auto v1 = half_line_poly(p, 1);
        CHECK(v1.monic == RationalPoly{R(-1), R(1)});
        CHECK(v1.norm2 == R(3));
        const auto v3 = half_line_poly(p, 3);
        CHECK(v3.monic == RationalPoly{R(-4716, 41), R(9612, 41), R(-1593, 41), R(1)});
        // sqrt(41/2841) (x^3/36 - 177/164 x^2 + 267/41 x - 131/41), cross-multiplied
        const RationalPoly ref{R(-131, 41), R(267, 41), R(-177, 164), R(1, 36)};
        CHECK(v3.monic * R(1, 36) == ref);
        CHECK(R(41, 2841) * R(1, 36 * 36) * v3.norm2 == R(1));
    }

    TEST_CASE("kernel identity") {
        for (const auto& e : kernel_identity_check(5)) {
            CHECK(e.holds);
            CHECK(e.lhs == e.rhs);
        }
    }

    TEST_CASE("positivity failure names the degree") {
        // mu_0 = 1, mu_2 = 1, mu_4 = 1/2: Delta_2 = mu_4 mu_0 - mu_2^2 < 0
        MomentSequence bad(SequenceSpec::factorial_squared(), {R(1), R(1), R(1, 2)});
        try {
            (void)monic_ops(bad, 2);
            FAIL("expected PositivityError");
        } catch (const PositivityError& e) {
            CHECK(e.failing_degree() == 2);
        }
    }

    TEST_CASE("moment functional orthogonality") {
        const auto sys = monic_ops(moments_for(SequenceSpec::generalized(R(5, 2)), 7), 7);
        for (unsigned n = 0; n <= 7; ++n)
            for (unsigned k = 0; k <= 7; ++k) {
                const Rational v = moment_pairing(sys.moments(), sys.poly(n), sys.poly(k));
                if (n == k) CHECK(v == sys.xi()[n]);
                else CHECK(v.is_zero());
            }
    }

    TEST_CASE("determinant formula and scale invariance") {
        const auto m = moments_for(SequenceSpec::shifted_factorial_squared(), 5);
        const auto sys = monic_ops(m, 5);
        for (unsigned n = 0; n <= 5; ++n) CHECK(monic_poly_by_determinant(m, n) == sys.poly(n));
        const auto scaled = monic_ops(m.scaled(R(22, 5)), 5);
        for (unsigned n = 0; n <= 5; ++n) CHECK(scaled.poly(n) == sys.poly(n));
    }

    TEST_CASE("ultra-exponential weights") {
        CHECK(dp_weight(1.0, 1) == doctest::Approx(0.36787944117144233).epsilon(1e-15));
        CHECK(dp_weight(0.25, 2) == doctest::Approx(0.8420488764814166).epsilon(1e-14));
        CHECK(dp_weight(4.0, 2) == doctest::Approx(0.02231935217170605).epsilon(1e-13));
        CHECK_THROWS_AS(dp_weight(1.0, 3), UnsupportedError);
    }

    TEST_CASE("growth of A_n") {
        const auto trend = recurrence_trend(48);
        REQUIRE(trend.size() == 41);
        for (const auto& t : trend) {
            CHECK(t.a_over_n > 0.70);
            CHECK(t.a_over_n < 0.90);
        }
        CHECK(trend.back().running_mean_deviation < trend.front().running_mean_deviation);
        CHECK(std::abs(trend.back().a_over_n - 0.7853981633974483) < 0.01);
    }

    TEST_CASE("json dump") {
        const auto j = to_json(gamma0(2));
        CHECK(j.at("polys").size() == 3);
        CHECK(to_json(R(-3, 4)).dump() == R"(["-3","4"])");
    }
}
