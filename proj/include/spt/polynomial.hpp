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

#ifndef SPT_POLYNOMIAL_HPP
#define SPT_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "spt/qsqrt2.hpp"
#include "spt/rational.hpp"

namespace spt {

/// Dense univariate polynomial over an exact coefficient ring, ascending degree.
/// The coefficient vector never carries trailing zeros; the zero polynomial is empty.
template <class T>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }
    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(T v) { return Polynomial(std::vector<T>{std::move(v)}); }
    static Polynomial monomial(std::size_t degree, T v = T(1)) {
        std::vector<T> c(degree + 1);
        c[degree] = std::move(v);
        return Polynomial(std::move(c));
    }

    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    [[nodiscard]] long degree() const { return static_cast<long>(c_.size()) - 1; }
    [[nodiscard]] const std::vector<T>& coeffs() const { return c_; }
    [[nodiscard]] T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
    [[nodiscard]] T leading() const { return c_.empty() ? T(0) : c_.back(); }
    [[nodiscard]] bool is_monic() const { return !c_.empty() && c_.back() == T(1); }

    /// +1 if only even powers appear, -1 if only odd powers, 0 if mixed (zero counts as even).
    [[nodiscard]] int parity() const {
        bool even = false, odd = false;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k].is_zero()) continue;
            (k % 2 == 0 ? even : odd) = true;
        }
        if (even && odd) return 0;
        return odd ? -1 : 1;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    Polynomial& operator*=(const T& s) {
        for (auto& v : c_) v *= s;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
    friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(c));
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    /// x * p(x).
    [[nodiscard]] Polynomial shift_up() const {
        if (is_zero()) return {};
        std::vector<T> c;
        c.reserve(c_.size() + 1);
        c.emplace_back(0);
        c.insert(c.end(), c_.begin(), c_.end());
        return Polynomial(std::move(c));
    }

    /// q with p(t) = q(t^2); empty when p has an odd term.
    [[nodiscard]] std::optional<Polynomial> even_part_in_square() const {
        if (parity() < 0 && !is_zero()) return std::nullopt;
        std::vector<T> c;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (k % 2 == 1) {
                if (!c_[k].is_zero()) return std::nullopt;
                continue;
            }
            c.push_back(c_[k]);
        }
        return Polynomial(std::move(c));
    }

    /// Horner evaluation in double.
    [[nodiscard]] double eval(double x) const {
        double r = 0.0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + it->to_double();
        return r;
    }

    /// Exact Horner evaluation in the coefficient ring.
    [[nodiscard]] T eval_exact(const T& x) const {
        T r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            r *= x;
            r += *it;
        }
        return r;
    }

    /// Human-readable form, highest degree first, e.g. "x^4 - 32/3*x^2 + 20/3".
    [[nodiscard]] std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {
            const T& v = c_[i];
            if (v.is_zero()) continue;
            std::string term = v.str();
            bool neg = !term.empty() && term[0] == '-' && term.find_first_of("+-", 1) == std::string::npos;
            if (neg) term.erase(0, 1);
            if (term.find_first_of("+-", 1) != std::string::npos) term = "(" + term + ")";
            if (first) os << (neg ? "-" : "");
            else os << (neg ? " - " : " + ");
            first = false;
            if (i == 0) {
                os << term;
                continue;
            }
            if (term != "1") os << term << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<T> c_;
};

using RationalPoly = Polynomial<Rational>;
using Sqrt2Poly = Polynomial<QSqrt2>;

}  // namespace spt

#endif  // SPT_POLYNOMIAL_HPP
