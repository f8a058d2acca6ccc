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

#ifndef SPT_SHIFTPOLY_HPP
#define SPT_SHIFTPOLY_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "spt/polynomial.hpp"
#include "spt/qsqrt2.hpp"
#include "spt/rational.hpp"
#include "spt/special.hpp"

namespace spt {

/// Three-term families x phi_n = a_n phi_{n+1} + b_n phi_{n-1}, phi_{-1} = 0, phi_0 = 1.
///   Gamma0: a_n = (n+1)/sqrt2, b_n = n/sqrt2           (x_n = n^2)
///   Gamma1: a_n = (n+2)/sqrt2, b_n = (n+1)/sqrt2       (x_n = (n+1)^2)
///   Sigma:  a_n = (n+1)/sqrt2, b_n = (n+2 sigma-1)/sqrt2 (Meixner-Pollaczek, lambda = sigma)
enum class ShiftFamily { Gamma0, Gamma1, Sigma };

std::string_view to_string(ShiftFamily f);

struct RecurrenceFamily {
    ShiftFamily kind = ShiftFamily::Gamma0;
    Rational sigma = Rational(1, 2);

    [[nodiscard]] QSqrt2 a(unsigned n) const;
    [[nodiscard]] QSqrt2 b(unsigned n) const;
};

/// phi_0 .. phi_{n_max} with exact coefficients in Q(sqrt 2).
std::vector<Sqrt2Poly> phi_family(const RecurrenceFamily& family, unsigned n_max);

/// q_n = n! / 2^{n/2} phi_n of the Gamma0 family; rational and monic.
std::vector<RationalPoly> q_family(unsigned n_max);

/// Meixner-Pollaczek P_n^(lambda)(u, phi) by
/// (n+1) P_{n+1} = 2 [u sin phi + (n+lambda) cos phi] P_n - (n+2 lambda-1) P_{n-1}.
double mp_eval(double lambda, double u, double phi, unsigned n);

/// The same polynomial from (2 lambda)_n / n! e^{i n phi} 2F1(-n, lambda+iu; 2 lambda; 1 - e^{-2 i phi}).
Complex mp_eval_hypergeometric(double lambda, double u, double phi, unsigned n);

struct GeneratingCheck {
    Complex partial;       ///< truncated series
    Complex closed;        ///< closed form
    double residual = 0.0; ///< |partial - closed|
    unsigned terms = 0;
    bool diverges = false; ///< |t| >= 1: outside the disc of convergence, partial sum is meaningless
};

/// sum_n P_n^(lambda)(u, phi) t^n against (1 - e^{i phi} t)^{-lambda+iu} (1 - e^{-i phi} t)^{-lambda-iu}.
/// terms = 0 picks the truncation from the decay of the summands.
GeneratingCheck mp_generating_check(double lambda, double u, double phi, double t, unsigned terms = 0);

/// sum_n phi_n^(sigma)(x) t^n against (1 + t^2)^{-sigma} exp(sqrt2 x arctan t).
GeneratingCheck sigma_generating_check(double sigma, double x, double t, unsigned terms = 0);

/// Both sides of ((1 - it)/(1 + it))^{iz/2} = exp(z arctan t).
struct ArctanIdentity {
    Complex power_side;
    double exp_side = 0.0;
};
ArctanIdentity arctan_identity(double z, double t);

/// G_x(t) = sqrt2 / sqrt(2 + t^2) exp(sqrt2 x arctan(t / sqrt2)) = sum q_n(x) t^n / n!.
double generating_g(double x, double t);

/// (t^2+2) G' + (t-2x) G with G' from central differences of step h.
double generating_ode_residual(double x, double t, double h = 1e-5);

struct PollaczekParams {
    Rational lambda = Rational(1, 2);
    double phi = 1.5707963267948966;
    Rational c = Rational(0);

    /// 0 < phi < pi and either (2 lambda + c > 0, c >= 0) or (2 lambda + c >= 1, c > -1).
    void validate() const;
};

/// P_n^lambda(x; phi, c) by
/// (n+c+1) P_{n+1} = 2 [(n+lambda+c) cos phi + x sin phi] P_n - (n+2 lambda+c-1) P_{n-1}.
double pollaczek_eval(const PollaczekParams& params, double x, unsigned n);

/// Orthogonality weight of phi_n^(1/2,1):
/// (2 pi)^{-1} |Gamma(3/2 + ix/sqrt2)|^2 |2F1(1/2 + ix/sqrt2, 1; 3/2 + ix/sqrt2; -1)|^{-2}.
/// For |x| > 40 |Gamma|^2 is near underflow; `warning`, when given, receives a note.
double pollaczek_weight(double x, std::string* warning = nullptr);

/// Gram matrix of phi_n^(1/2,1), n <= n_max, under pollaczek_weight on [-half_width, half_width].
std::vector<std::vector<double>> pollaczek_gram(unsigned n_max, double half_width = 30.0,
                                             unsigned nodes = 600);

/// The gamma = 0 table as printed alongside the recurrence (phi_0 .. phi_6).
std::vector<RationalPoly> printed_phi_table();

struct PrintedPhiRow {
    unsigned n = 0;
    std::string printed;
    std::string computed;
    bool equal = false;
    double leading_ratio = 0.0;  ///< printed leading coefficient / computed one
};

/// Row-by-row comparison of printed_phi_table() with the Gamma0 recurrence.
std::vector<PrintedPhiRow> printed_phi_comparison();

nlohmann::json to_json(const QSqrt2& v);
nlohmann::json to_json(const Sqrt2Poly& p);
nlohmann::json family_to_json(const RecurrenceFamily& family, const std::vector<Sqrt2Poly>& polys);

}  // namespace spt

#endif  // SPT_SHIFTPOLY_HPP
