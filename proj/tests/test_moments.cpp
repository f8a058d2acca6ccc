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

#include <stdexcept>

#include "spt/errors.hpp"
#include "spt/hankel.hpp"
#include "spt/moments.hpp"
#include "spt/qsqrt2.hpp"
#include "spt/rational.hpp"

using namespace spt;

TEST_SUITE("moments") {
    TEST_CASE("rational literals") {
        CHECK(Rational::parse("5/2") == Rational(5, 2));
        CHECK(Rational::parse(" -3/6 ") == Rational(-1, 2));
        CHECK(Rational::parse("0.25") == Rational(1, 4));
        CHECK(Rational::parse("7") == Rational(7));
        CHECK_THROWS_AS(Rational::parse("1/x"), std::invalid_argument);
        CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    }

    TEST_CASE("Q(sqrt2) arithmetic stays exact") {
        const QSqrt2 s = QSqrt2::sqrt2();
        CHECK(s * s == QSqrt2(2));
        CHECK((QSqrt2(1) + s) * (QSqrt2(1) - s) == QSqrt2(-1));
        CHECK(QSqrt2(1) / s == QSqrt2(Rational(0), Rational(1, 2)));
        CHECK(s.str() == "sqrt2");
    }

    TEST_CASE("x_n sequence") {
        CHECK(x_seq(2, Rational(1)) == Rational(9));
        CHECK(x_seq(0, Rational(5, 2)) == Rational(0));
        CHECK(x_seq(5, Rational(0)) == Rational(25));
        // x_n^g = n (n + g)(n + 2g - 1)/(n + g - 1) at a non-integer g, by hand
        CHECK(x_seq(3, Rational(1, 2)) == Rational(3) * Rational(7, 2) * Rational(3) / Rational(5, 2));
    }

    TEST_CASE("generalized factorial") {
        CHECK(gen_factorial(3, Rational(0)) == Rational(36));
        CHECK(gen_factorial(0, Rational(7)) == Rational(1));
        CHECK(gen_factorial(3, Rational(1)) == Rational(288));
        // brute-force product n! (n + g) (2g+1)(2g+2)...(2g+n-1)
        for (unsigned n = 1; n <= 8; ++n) {
            const Rational g(5, 2);
            Rational p = factorial(n) * (Rational(static_cast<long>(n)) + g);
            for (unsigned k = 1; k < n; ++k) p *= Rational(2) * g + Rational(static_cast<long>(k));
            CHECK(gen_factorial(n, g) == p);
        }
        CHECK(gen_factorial_float(6, 2.5L) == doctest::Approx(gen_factorial(6, Rational(5, 2)).to_double()).epsilon(1e-15));
        CHECK_THROWS_AS(gen_factorial(2, Rational(-1)), DomainError);
    }

    TEST_CASE("pochhammer") {
        CHECK(pochhammer(Rational(3), 2) == Rational(12));
        CHECK(pochhammer(Rational(1), 6) == factorial(6));
        CHECK(pochhammer(Rational(1), 3) == Rational(6));
        CHECK(pochhammer(Rational(9, 4), 0) == Rational(1));
    }

    TEST_CASE("moment providers") {
        const auto to_vec = [](const MomentSequence& m) { return m.even_moments(); };
        CHECK(to_vec(moments_for(SequenceSpec::factorial_squared(), 4)) ==
              std::vector<Rational>{Rational(1), Rational(1), Rational(4), Rational(36), Rational(576)});
        CHECK(to_vec(moments_for(SequenceSpec::shifted_factorial_squared(), 2)) ==
              std::vector<Rational>{Rational(1), Rational(4), Rational(36)});
        CHECK(to_vec(moments_for(SequenceSpec::generalized(Rational(2)), 2)) ==
              std::vector<Rational>{Rational(1), Rational(3), Rational(40)});
        const auto m = moments_for(SequenceSpec::factorial_squared(), 3);
        CHECK(m(3) == Rational(0));
        CHECK(m(6) == Rational(36));
        CHECK(m.scaled(Rational(2)).even(3) == Rational(72));
        CHECK_THROWS((void)m.even(4));
    }

    TEST_CASE("conventions") {
        CHECK(parse_convention("factorial-squared") == Convention::FactorialSquared);
        CHECK(to_string(Convention::GenFactorial) == "gen-factorial");
        CHECK_THROWS(parse_convention("bogus"));
        SequenceSpec bad{Rational(2), Convention::FactorialSquared};
        CHECK_THROWS_AS(bad.validate(), DomainError);
    }

    TEST_CASE("generalized factorial special cases") {
        for (unsigned n = 0; n <= 20; ++n) CHECK(gen_factorial(n, Rational(0)) == pow(factorial(n), 2));
        for (unsigned n = 1; n <= 20; ++n) CHECK(gen_factorial(n, Rational(1)) * Rational(2) == pow(factorial(n + 1), 2));
    }
}
