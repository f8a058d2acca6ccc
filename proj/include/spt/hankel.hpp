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

#ifndef SPT_HANKEL_HPP
#define SPT_HANKEL_HPP

#include <cstddef>
#include <vector>

#include <json.hpp>

#include "spt/moments.hpp"
#include "spt/polynomial.hpp"
#include "spt/rational.hpp"

namespace spt {

/// Monic orthogonal polynomials of a symmetric moment functional together with
/// their norms xi_n = <P_n, P_n> and recurrence coefficients
/// P_{n+1} = (x - alpha_n) P_n - beta_n P_{n-1}.
class OrthoSystem {
public:
    OrthoSystem(MomentSequence moments, std::vector<RationalPoly> polys, std::vector<Rational> xi,
                std::vector<Rational> alpha, std::vector<Rational> beta);

    [[nodiscard]] const MomentSequence& moments() const { return moments_; }
    [[nodiscard]] unsigned n_max() const { return static_cast<unsigned>(polys_.size()) - 1; }
    [[nodiscard]] const std::vector<RationalPoly>& polys() const { return polys_; }
    [[nodiscard]] const RationalPoly& poly(unsigned n) const;
    [[nodiscard]] const std::vector<Rational>& xi() const { return xi_; }
    [[nodiscard]] const std::vector<Rational>& alpha() const { return alpha_; }
    /// beta[0] = mu_0 by convention; beta[n] = xi_n / xi_{n-1} for n >= 1.
    [[nodiscard]] const std::vector<Rational>& beta() const { return beta_; }

private:
    MomentSequence moments_;
    std::vector<RationalPoly> polys_;
    std::vector<Rational> xi_;
    std::vector<Rational> alpha_;
    std::vector<Rational> beta_;
};

/// Monic orthogonal polynomials P_0..P_{n_max} by the exact Chebyshev algorithm on the moments.
/// Throws PositivityError naming the first degree whose norm is not positive.
OrthoSystem monic_ops(const MomentSequence& moments, unsigned n_max);

/// Hankel determinant Delta_n = det(mu_{i+j})_{0<=i,j<=n}, exact.
Rational hankel_determinant(const MomentSequence& moments, unsigned n);

/// P_n from the bordered Hankel determinant divided by Delta_{n-1}.
RationalPoly monic_poly_by_determinant(const MomentSequence& moments, unsigned n);

/// Moment-functional pairing <p, q> = sum_ij p_i q_j mu_{i+j}.
Rational moment_pairing(const MomentSequence& moments, const RationalPoly& p, const RationalPoly& q);

/// xi_n, the squared norm of P_n.
Rational norm_xi(const OrthoSystem& sys, unsigned n);

struct RecurrenceCoefficient {
    Rational squared;  ///< A_n^2 = beta_n, exact
    double value;      ///< A_n
};

/// A_n of the orthonormal recurrence x Pt_n = A_{n+1} Pt_{n+1} + A_n Pt_{n-1}, n >= 1.
RecurrenceCoefficient recurrence_A(const OrthoSystem& sys, unsigned n);

/// A normalized polynomial kept as an exact pair: monic part and its squared norm.
/// The orthonormal polynomial is monic / sqrt(norm2).
struct NormalizedPoly {
    RationalPoly monic;
    Rational norm2;
};

/// Half-line image v_n with P_{2n}(t) = v_n(t^2); v_n / sqrt(xi_{2n}) are orthonormal on [0, inf).
NormalizedPoly half_line_poly(const OrthoSystem& sys, unsigned n);

struct KernelIdentityEntry {
    unsigned n;
    RationalPoly lhs;  ///< x * Q_{2n}
    RationalPoly rhs;  ///< P_{2n+1}
    bool holds;
};

/// Checks x Q_{2n}(x) = P_{2n+1}(x) for n <= n_max using the (n!)^2 and ((n+1)!)^2 systems.
std::vector<KernelIdentityEntry> kernel_identity_check(unsigned n_max);

/// Ultra-exponential weight for k in {1, 2}: exp(-x) and 2 K_0(2 sqrt x).
double dp_weight(double x, int k);

struct TrendPoint {
    unsigned n;
    double a_over_n;
    double running_mean_deviation;  ///< mean of |A_m/m - pi/4| over 8 <= m <= n
};

/// A_n/n for 8 <= n <= n_max on the (n!)^2 system, exact A_n^2 underneath.
std::vector<TrendPoint> recurrence_trend(unsigned n_max);

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const RationalPoly& p);
/// {"convention","gamma","polys":[{"degree","coeffs"}],"xi":[...],"beta":[...]}.
nlohmann::json to_json(const OrthoSystem& sys);

}  // namespace spt

#endif  // SPT_HANKEL_HPP
