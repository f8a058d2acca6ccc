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

#ifndef SPT_SPECIAL_HPP
#define SPT_SPECIAL_HPP

#include <complex>

namespace spt {

using Complex = std::complex<double>;

// Accuracy on the validated domains below is ~1e-13 relative unless noted; the
// contracts asserted by the test suite are 1e-10.

/// log Gamma(z) for z off the nonpositive integers. For Re z >= 1/2 the imaginary
/// part is the continuous branch; left of that only exp(log_gamma) is meaningful.
Complex log_gamma(Complex z);
Complex gamma(Complex z);

/// 1F2(a; b1, b2; x), summed until the tail bound drops below 1e-16 of the partial sum.
double hyp1f2(double a, double b1, double b2, double x);

/// 2F1(a, b; c; x). Terminating when a or b is a nonpositive integer (any x);
/// otherwise |x| <= 1, with x in [-1, -1/2) mapped through the Pfaff/Euler transformation
/// and x = 1 evaluated by Gauss's sum. Nonterminating |x| > 1 throws DomainError.
Complex hyp2f1(Complex a, Complex b, Complex c, double x);

/// Terminating 2F1(-n, b; c; x) for complex x.
Complex hyp2f1_terminating(unsigned n, Complex b, Complex c, Complex x);

/// Bessel J_nu(z), nu >= -1/2, principal branch. Ascending series for |z| <= 12,
/// Hankel asymptotic expansion beyond.
Complex bessel_j(double nu, Complex z);

/// (z/2)^(-nu) J_nu(z), an entire function of z (finite at z = 0).
Complex bessel_j_reduced(double nu, Complex z);

/// True where bessel_j meets its 1e-10 relative bound (ascending series or |z| >= 20).
bool bessel_j_validated(double nu, Complex z);

/// Modified Bessel I_nu(x), nu >= 0, x >= 0.
double bessel_i(double nu, double x);

/// Macdonald function K_tau(x), tau >= 0, x > 0 (Temme series for x < 2, Steed's continued fraction otherwise).
double macdonald_k(double tau, double x);
double bessel_k0(double x);
double bessel_k1(double x);

/// Gegenbauer C_n^nu(y) by the three-term recurrence in n.
double gegenbauer(unsigned n, double nu, double y);

/// Chebyshev U_n(y).
double chebyshev_u(unsigned n, double y);

}  // namespace spt

#endif  // SPT_SPECIAL_HPP
