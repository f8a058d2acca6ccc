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

#include "spt/moments.hpp"

#include <cmath>
#include <string>

#include "spt/errors.hpp"

namespace spt {

namespace {

void require_nonnegative(const Rational& gamma) {
    if (gamma.sign() < 0) throw DomainError("gamma must be >= 0, got " + gamma.str());
}

}  // namespace

Rational pochhammer(const Rational& a, unsigned n) {
    Rational r(1);
    for (unsigned k = 0; k < n; ++k) r *= a + Rational(static_cast<long>(k));
    return r;
}

Rational x_seq(unsigned n, const Rational& gamma) {
    require_nonnegative(gamma);
    if (n == 0) return Rational(0);
    if (n == 1) {
        const Rational two_g = Rational(2) * gamma;
        if (!two_g.is_integer())
            throw ExactnessError("x_1 = Gamma(2g+1) is not rational for g = " + gamma.str());
        return factorial(static_cast<unsigned>(two_g.num().get_ui()));
    }
    const Rational nn(static_cast<long>(n));
    return nn * (nn + gamma) * (nn + Rational(2) * gamma - Rational(1)) / (nn + gamma - Rational(1));
}

long double x_seq_float(unsigned n, long double gamma) {
    if (gamma < 0) throw DomainError("gamma must be >= 0");
    if (n == 0) return 0.0L;
    if (n == 1) return std::tgamma(2.0L * gamma + 1.0L);
    const long double nn = n;
    return nn * (nn + gamma) * (nn + 2.0L * gamma - 1.0L) / (nn + gamma - 1.0L);
}

Rational gen_factorial(unsigned n, const Rational& gamma) {
    require_nonnegative(gamma);
    if (n == 0) return Rational(1);
    return factorial(n) * (Rational(static_cast<long>(n)) + gamma) *
           pochhammer(Rational(2) * gamma + Rational(1), n - 1);
}

long double gen_factorial_float(unsigned n, long double gamma) {
    if (gamma < 0) throw DomainError("gamma must be >= 0");
    if (n == 0) return 1.0L;
    long double r = static_cast<long double>(n) + gamma;
    for (unsigned k = 1; k <= n; ++k) r *= k;
    for (unsigned k = 0; k + 1 < n; ++k) r *= 2.0L * gamma + 1.0L + k;
    return r;
}

std::string_view to_string(Convention c) {
    switch (c) {
        case Convention::GenFactorial: return "gen-factorial";
        case Convention::FactorialSquared: return "factorial-squared";
        case Convention::ShiftedFactorialSquared: return "shifted-factorial-squared";
    }
    return "?";
}

Convention parse_convention(std::string_view name) {
    if (name == "gen-factorial") return Convention::GenFactorial;
    if (name == "factorial-squared") return Convention::FactorialSquared;
    if (name == "shifted-factorial-squared") return Convention::ShiftedFactorialSquared;
    throw std::invalid_argument("unknown moment convention: " + std::string(name));
}

void SequenceSpec::validate() const {
    require_nonnegative(gamma);
    if (convention == Convention::FactorialSquared && !gamma.is_zero())
        throw DomainError("factorial-squared moments require gamma = 0");
    if (convention == Convention::ShiftedFactorialSquared && gamma != Rational(1))
        throw DomainError("shifted-factorial-squared moments require gamma = 1");
}

MomentSequence::MomentSequence(SequenceSpec spec, unsigned n_max) : spec_(std::move(spec)) {
    spec_.validate();
    even_.reserve(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) {
        switch (spec_.convention) {
            case Convention::FactorialSquared: {
                const Rational f = factorial(n);
                even_.push_back(f * f);
                break;
            }
            case Convention::ShiftedFactorialSquared: {
                const Rational f = factorial(n + 1);
                even_.push_back(f * f);
                break;
            }
            case Convention::GenFactorial: even_.push_back(gen_factorial(n, spec_.gamma)); break;
        }
    }
}

MomentSequence::MomentSequence(SequenceSpec spec, std::vector<Rational> even_moments)
    : spec_(std::move(spec)), even_(std::move(even_moments)) {
    if (even_.empty()) throw DomainError("moment sequence needs at least mu_0");
}

const Rational& MomentSequence::even(unsigned n) const {
    if (n >= even_.size())
        throw std::out_of_range("mu_" + std::to_string(2 * n) + " not computed (n_max = " +
                                std::to_string(n_max()) + ")");
    return even_[n];
}

Rational MomentSequence::operator()(unsigned k) const {
    if (k % 2 == 1) {
        if (k > max_order()) throw std::out_of_range("moment order out of range");
        return Rational(0);
    }
    return even(k / 2);
}

MomentSequence MomentSequence::scaled(const Rational& c) const {
    if (c.sign() <= 0) throw DomainError("scale factor must be positive");
    std::vector<Rational> m;
    m.reserve(even_.size());
    for (const auto& v : even_) m.push_back(c * v);
    return {spec_, std::move(m)};
}

MomentSequence moments_for(const SequenceSpec& spec, unsigned n_max) {
    return {spec, n_max};
}

}  // namespace spt
