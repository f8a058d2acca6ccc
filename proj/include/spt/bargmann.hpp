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

#ifndef SPT_BARGMANN_HPP
#define SPT_BARGMANN_HPP

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "spt/special.hpp"

namespace spt {

/// Which trigonometric factor feeds the Bessel argument of the transform kernel.
/// Cos is correct; Sin is a known-bad variant kept only so the
/// verification report can show that it fails.
enum class KernelVariant { Cos, Sin };

struct TransformResult {
    Complex value;          ///< result with `nodes` Gauss-Legendre nodes
    Complex doubled;        ///< result with 2 * nodes
    double change = 0.0;    ///< |doubled - value| / max(1, |doubled|)
    unsigned nodes = 0;
    [[nodiscard]] bool converged(double tol = 1e-8) const { return change <= tol; }
};

/// B_g[f](z) = sqrt(2 alpha Gamma(g+1) Gamma(g+1/2) / sqrt(pi)) (z/2)^{1/2-g}
///   * int exp(z sin a t) J_{g-1/2}(z cos a t) sqrt(cos a t) f(t) dt  over [-pi/(2a), pi/(2a)].
/// Maps the eigenbasis phi_n^g to z^n / sqrt(x_n!) with x_0! = 1/2. Requires g >= 1.
TransformResult bargmann_transform(const std::function<Complex(double)>& f, Complex z,
                                   double gamma, double alpha, unsigned nodes = 128,
                                   KernelVariant variant = KernelVariant::Cos);

/// Transform of the eigenfunction phi_n^g (nu = g).
TransformResult bargmann_basis(unsigned n, Complex z, double gamma, double alpha,
                               unsigned nodes = 128, KernelVariant variant = KernelVariant::Cos);

struct KernelEval {
    Complex value;
    double gamma = 0.0;
    unsigned truncation = 0;
    double tail_bound = 0.0;  ///< bound on the omitted sum of |z conj w|^n / x_n!
};

/// K(z, w) = sum (z conj w)^n / x_n!. For g > 0 the factorial is the coherent-state one
/// (x_0! = 1/2, so K(z, 0) = 2); g = 0 uses x_n! = (n!)^2.
KernelEval reproducing_kernel(Complex z, Complex w, double gamma);

/// Weight h with int_0^inf r^n h(r) dr = 2 x_n! (exact for g in {0, 1}):
/// h = 4 K_0(2 sqrt r) at g = 0 and 2 r K_0(2 sqrt r) at g = 1.
double measure_density(int gamma, double r);

/// int F(w) conj K(w, z) h(|w|^2) d^2w / (2 pi), for g in {0, 1}.
Complex reproduce(const std::function<Complex(Complex)>& F, Complex z, int gamma);

struct MomentRecord {
    std::string check;
    double gamma = 0.0;
    unsigned n = 0;
    std::string exact;  ///< exact right-hand side as a decimal string
    double numeric = 0.0;
    double rel_err = 0.0;
};

nlohmann::json to_json(const MomentRecord& r);

/// int_0^inf x^n 2 K_0(2 sqrt x) dx against (n!)^2, n = 0..n_max.
std::vector<MomentRecord> mellin_k0_check(unsigned n_max);

/// int_0^inf r^n h(r) dr against 2(n!)^2 (g = 0) or ((n+1)!)^2 (g = 1), n = 0..n_max.
std::vector<MomentRecord> identity_moment_check(int gamma, unsigned n_max);

/// sum_n x_n! |a_n|^2 with the coherent-state factorial (x_0! = 1/2).
double growth_condition(const std::vector<Complex>& a, double gamma);

/// First `count` Taylor coefficients of an entire F from `samples` values on |z| = radius.
std::vector<Complex> taylor_coefficients(const std::function<Complex(Complex)>& F,
                                         unsigned count, double radius = 1.0,
                                         unsigned samples = 64);

/// Gram matrix of {B_g[phi_n]} for n <= n_max under the series inner product
/// sum_k x_k! a_k conj(b_k), with coefficients extracted from the numerical transform.
std::vector<std::vector<Complex>> isometry_gram(double gamma, unsigned n_max,
                                                double alpha = 1.0, unsigned nodes = 128);

}  // namespace spt

#endif  // SPT_BARGMANN_HPP
