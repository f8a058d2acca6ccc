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

#ifndef SPT_ORACLE_HPP
#define SPT_ORACLE_HPP

#include <complex>

// Slow arbitrary-precision reference evaluations. Each routine sums a defining
// series in MPFR at oracle::precision_bits() bits and rounds the result to double.
// They share no code with the double-precision kernels they are used to check.
namespace spt::oracle {

/// Working precision in bits: SPT_NLCS_PRECISION if set (clamped to [64, 4096]), else 256.
long precision_bits();

/// K_0(x) from the logarithmic ascending series.
double bessel_k0(double x);

/// I_nu(x) from the ascending series.
double bessel_i(double nu, double x);

/// J_nu(z) from the ascending series, principal branch.
std::complex<double> bessel_j(double nu, std::complex<double> z);

/// 1F2(a; b1, b2; x) from the defining series.
double hyp1f2(double a, double b1, double b2, double x);

/// 2F1(a, b; c; -1) by Euler (repeated-averaging) acceleration of the alternating partial sums.
std::complex<double> hyp2f1_at_minus_one(std::complex<double> a, std::complex<double> b,
                                         std::complex<double> c);

/// Gamma(x) for real x.
double gamma(double x);

}  // namespace spt::oracle

#endif  // SPT_ORACLE_HPP
