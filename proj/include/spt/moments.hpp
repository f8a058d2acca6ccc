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

#ifndef SPT_MOMENTS_HPP
#define SPT_MOMENTS_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "spt/rational.hpp"

namespace spt {

/// Shifted factorial (a)_n = a(a+1)...(a+n-1), (a)_0 = 1.
Rational pochhammer(const Rational& a, unsigned n);

/// x_n^gamma: x_0 = 0, x_1 = Gamma(2g+1), x_n = n(n+g)(n+2g-1)/(n+g-1) for n >= 2.
/// Exact; throws ExactnessError when n == 1 and 2*gamma is not an integer.
Rational x_seq(unsigned n, const Rational& gamma);

/// Floating counterpart of x_seq, valid for any real gamma >= 0.
long double x_seq_float(unsigned n, long double gamma);

/// Generalized factorial x_n^gamma! = n!(n+g)(2g+1)_{n-1}, with x_0! = 1 by convention.
/// Exact for every rational gamma >= 0.
Rational gen_factorial(unsigned n, const Rational& gamma);

/// Floating counterpart of gen_factorial (same n = 0 convention).
long double gen_factorial_float(unsigned n, long double gamma);

enum class Convention {
    GenFactorial,             ///< mu_{2n} = gen_factorial(n, gamma)
    FactorialSquared,         ///< mu_{2n} = (n!)^2, gamma = 0
    ShiftedFactorialSquared,  ///< mu_{2n} = ((n+1)!)^2, gamma = 1
};

std::string_view to_string(Convention c);
/// Accepts "gen-factorial", "factorial-squared", "shifted-factorial-squared".
Convention parse_convention(std::string_view name);

struct SequenceSpec {
    Rational gamma;
    Convention convention = Convention::GenFactorial;

    /// Throws DomainError if gamma < 0 or the convention/gamma pairing is invalid.
    void validate() const;

    static SequenceSpec factorial_squared() { return {Rational(0), Convention::FactorialSquared}; }
    static SequenceSpec shifted_factorial_squared() {
        return {Rational(1), Convention::ShiftedFactorialSquared};
    }
    static SequenceSpec generalized(Rational gamma) {
        return {std::move(gamma), Convention::GenFactorial};
    }
};

/// Exact even moments mu_0, mu_2, ..., mu_{2 n_max} of a symmetric moment functional.
/// Odd moments are identically zero. Immutable after construction, so concurrent readers are safe.
class MomentSequence {
public:
    MomentSequence(SequenceSpec spec, unsigned n_max);

    /// Moment sequence from explicit even moments (used for scaled copies and tests).
    MomentSequence(SequenceSpec spec, std::vector<Rational> even_moments);

    [[nodiscard]] const SequenceSpec& spec() const { return spec_; }
    /// Largest n with mu_{2n} available.
    [[nodiscard]] unsigned n_max() const { return static_cast<unsigned>(even_.size()) - 1; }
    /// Highest moment order k for which mu_k is available (2 n_max + 1, odd ones being zero).
    [[nodiscard]] unsigned max_order() const { return 2 * n_max() + 1; }

    /// mu_{2n}.
    [[nodiscard]] const Rational& even(unsigned n) const;
    /// mu_k for any k <= max_order().
    [[nodiscard]] Rational operator()(unsigned k) const;
    [[nodiscard]] const std::vector<Rational>& even_moments() const { return even_; }

    /// c * mu for c > 0.
    [[nodiscard]] MomentSequence scaled(const Rational& c) const;

private:
    SequenceSpec spec_;
    std::vector<Rational> even_;
};

/// Builds the provider named by `spec` through degree n_max (mu_{2n}, n <= n_max).
MomentSequence moments_for(const SequenceSpec& spec, unsigned n_max);

}  // namespace spt

#endif  // SPT_MOMENTS_HPP
