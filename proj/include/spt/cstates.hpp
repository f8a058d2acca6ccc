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

#ifndef SPT_CSTATES_HPP
#define SPT_CSTATES_HPP

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "spt/rational.hpp"
#include "spt/special.hpp"

namespace spt {

/// Parameters of the symmetric Poschl-Teller problem and its coherent states,
/// in units hbar = m* = 1.
struct CSParams {
    double gamma = 1.0;  ///< NLCS parameter, > 0
    double nu = 1.0;     ///< potential strength, > 1 (exactly 1 is the square-well limit)
    double alpha = 1.0;  ///< range parameter, > 0

    /// Throws DomainError on out-of-range parameters.
    void validate() const;
    /// Half-width pi / (2 alpha) of the theta domain.
    [[nodiscard]] double half_width() const;
    /// Throws DomainError when theta lies outside [-pi/(2 alpha), pi/(2 alpha)].
    void check_theta(double theta) const;
};

/// E_n = alpha^2 (nu + n)^2 / 2.
double energy(unsigned n, const CSParams& params);

/// <theta|phi_n^nu>, orthonormal on [-pi/(2 alpha), pi/(2 alpha)].
double eigenfunction(unsigned n, double theta, const CSParams& params);

/// Generalized factorial used by the coherent states: n!(n+g)Gamma(n+2g)/Gamma(2g+1).
/// At n = 0 this is the continuation value 1/2, which makes N_g = 2 1F2 the exact
/// normalization and the closed-form wave function a uniform series.
double cs_factorial(unsigned n, double gamma);

/// N_g(r2) = 2 1F2(g; g+1, 2g; r2).
double nlcs_norm(double gamma, double r2);

/// Smallest truncation N such that the tail of sum |z|^{2n}/x_n! beyond N is below
/// rel_tol times the partial sum.
unsigned nlcs_truncation(Complex z, double gamma, double rel_tol = 1e-16);

struct NLCSCoefficients {
    std::vector<Complex> raw;  ///< conj(z)^n / sqrt(x_n!)
    double norm = 0.0;         ///< N_g(|z|^2) from the 1F2 closed form
    double tail_bound = 0.0;   ///< bound on sum_{n > n_max} |raw_n|^2

    /// raw / sqrt(norm): the expansion coefficients of the unit vector |z; g>.
    [[nodiscard]] std::vector<Complex> normalized() const;
};

NLCSCoefficients nlcs_coefficients(Complex z, double gamma, unsigned n_max);

/// A coherent state |z; gamma, nu> of the symmetric Poschl-Teller oscillator.
class NLCSState {
public:
    NLCSState(CSParams params, Complex z);

    [[nodiscard]] const CSParams& params() const { return params_; }
    [[nodiscard]] Complex z() const { return z_; }
    /// N_g(z conj z); >= 2 with equality iff z = 0.
    [[nodiscard]] double norm() const { return norm_; }
    [[nodiscard]] unsigned truncation() const { return truncation_; }

    /// Wave function <theta|z> summed over the eigenbasis (any gamma, nu).
    [[nodiscard]] Complex wavefunction(double theta) const;

private:
    CSParams params_;
    Complex z_;
    double norm_;
    unsigned truncation_;
};

/// Series form of <theta|z; gamma, nu>.
Complex wavefunction_series(double theta, Complex z, const CSParams& params);

/// Closed form of <theta|z; gamma> for gamma = nu (throws DomainError otherwise):
/// 2^g sqrt(alpha Gamma(g+1) Gamma(g+1/2) / sqrt(pi)) N_g^{-1/2}
///   conj(z)^{1/2-g} exp(conj(z) sin a t) J_{g-1/2}(conj(z) cos a t) sqrt(cos a t).
/// z = 0 is a removable singularity and is routed to the series.
Complex wavefunction_closed(double theta, Complex z, const CSParams& params);

/// gamma = nu = 1 (square well): sqrt(2 alpha/pi) (I_0(2|z|) - 1)^{-1/2} (|z|/conj z)
///   exp(conj(z) sin a t) sin(conj(z) cos a t).
Complex square_well_closed(double theta, Complex z, double alpha);

struct BarutGirardelloState {
    std::vector<Complex> coeffs;  ///< conj(z)^n / sqrt(n! (2 sigma)_n)
    double series_norm = 0.0;     ///< Gamma(2s) |z|^{1-2s} I_{2s-1}(2|z|) (1 at z = 0)
    double prefactor = 0.0;       ///< series_norm^{-1/2}
    double printed_prefactor = 0.0;  ///< |z|^{2s-1} / sqrt(I_{2s-1}(2|z|)), the 2s=1 form
    double tail_bound = 0.0;
    /// prefactor^2 * sum |coeffs|^2.
    [[nodiscard]] double state_norm() const;
};

/// Barut-Girardello coherent state with 2 sigma a positive integer.
BarutGirardelloState barut_girardello(Complex z, const Rational& sigma, unsigned n_max);

/// Writes "theta,re,im,abs2" rows for `points` equispaced theta in the closed domain.
void write_wavefunction_csv(std::ostream& os, const NLCSState& state, unsigned points);

}  // namespace spt

#endif  // SPT_CSTATES_HPP
