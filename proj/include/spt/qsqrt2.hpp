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

#ifndef SPT_QSQRT2_HPP
#define SPT_QSQRT2_HPP

#include <cmath>
#include <numbers>
#include <ostream>
#include <string>

#include "spt/errors.hpp"
#include "spt/rational.hpp"

namespace spt {

/// Exact element a + b*sqrt(2) of the quadratic field Q(sqrt 2).
class QSqrt2 {
public:
    QSqrt2() = default;
    QSqrt2(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
    QSqrt2(int a) : a_(a) {}                  // NOLINT(google-explicit-constructor)
    QSqrt2(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static QSqrt2 sqrt2() { return {Rational(0), Rational(1)}; }

    [[nodiscard]] const Rational& rational_part() const { return a_; }
    [[nodiscard]] const Rational& sqrt2_part() const { return b_; }
    [[nodiscard]] bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    [[nodiscard]] bool is_rational() const { return b_.is_zero(); }

    /// Field norm a^2 - 2 b^2; zero only for the zero element.
    [[nodiscard]] Rational norm() const { return a_ * a_ - Rational(2) * b_ * b_; }
    [[nodiscard]] QSqrt2 conjugate() const { return {a_, -b_}; }

    [[nodiscard]] double to_double() const {
        return a_.to_double() + b_.to_double() * std::numbers::sqrt2;
    }

    /// Sign of the real number a + b*sqrt(2), decided exactly.
    [[nodiscard]] int sign() const {
        const int sa = a_.sign(), sb = b_.sign();
        if (sa == 0) return sb;
        if (sb == 0 || sa == sb) return sa;
        // opposite signs: compare a^2 with 2 b^2
        const auto c = a_ * a_ <=> Rational(2) * b_ * b_;
        if (c == 0) return 0;
        return c > 0 ? sa : sb;
    }

    QSqrt2& operator+=(const QSqrt2& o) { a_ += o.a_; b_ += o.b_; return *this; }
    QSqrt2& operator-=(const QSqrt2& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    QSqrt2& operator*=(const QSqrt2& o) {
        Rational a = a_ * o.a_ + Rational(2) * b_ * o.b_;
        Rational b = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(a);
        b_ = std::move(b);
        return *this;
    }
    QSqrt2& operator/=(const QSqrt2& o) {
        const Rational n = o.norm();
        if (n.is_zero()) throw DomainError("QSqrt2: division by zero");
        *this *= o.conjugate();
        a_ /= n;
        b_ /= n;
        return *this;
    }

    friend QSqrt2 operator+(QSqrt2 x, const QSqrt2& y) { return x += y; }
    friend QSqrt2 operator-(QSqrt2 x, const QSqrt2& y) { return x -= y; }
    friend QSqrt2 operator*(QSqrt2 x, const QSqrt2& y) { return x *= y; }
    friend QSqrt2 operator/(QSqrt2 x, const QSqrt2& y) { return x /= y; }
    friend QSqrt2 operator-(const QSqrt2& x) { return {-x.a_, -x.b_}; }
    friend bool operator==(const QSqrt2& x, const QSqrt2& y) = default;

    [[nodiscard]] std::string str() const {
        if (b_.is_zero()) return a_.str();
        std::string s = a_.is_zero() ? std::string() : a_.str() + (b_.sign() > 0 ? "+" : "");
        if (b_ == Rational(1)) return s + "sqrt2";
        if (b_ == Rational(-1)) return s + "-sqrt2";
        return s + b_.str() + "*sqrt2";
    }
    friend std::ostream& operator<<(std::ostream& os, const QSqrt2& x) { return os << x.str(); }

private:
    Rational a_;
    Rational b_;
};

}  // namespace spt

#endif  // SPT_QSQRT2_HPP
