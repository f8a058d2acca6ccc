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

#include "spt/hankel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "spt/errors.hpp"
#include "spt/special.hpp"

namespace spt {

OrthoSystem::OrthoSystem(MomentSequence moments, std::vector<RationalPoly> polys,
                         std::vector<Rational> xi, std::vector<Rational> alpha,
                         std::vector<Rational> beta)
    : moments_(std::move(moments)),
      polys_(std::move(polys)),
      xi_(std::move(xi)),
      alpha_(std::move(alpha)),
      beta_(std::move(beta)) {}

const RationalPoly& OrthoSystem::poly(unsigned n) const {
    if (n >= polys_.size())
        throw std::out_of_range("P_" + std::to_string(n) + " not computed (n_max = " +
                                std::to_string(n_max()) + ")");
    return polys_[n];
}

OrthoSystem monic_ops(const MomentSequence& moments, unsigned n_max) {
    if (moments.n_max() < n_max)
        throw std::out_of_range("monic_ops: moments known through mu_" +
                                std::to_string(2 * moments.n_max()) + ", need mu_" +
                                std::to_string(2 * n_max));
    const unsigned top = 2 * n_max + 1;  // highest moment order consumed
    std::vector<Rational> alpha(n_max + 1), beta(n_max + 1), xi(n_max + 1);

    // sigma_{k,l} = <P_k, x^l>; keep two previous rows
    std::vector<Rational> prev2(top + 1), prev(top + 1), cur(top + 1);
    for (unsigned l = 0; l <= top; ++l) prev[l] = moments(l);
    if (prev[0].sign() <= 0) throw PositivityError("mu_0 is not positive", 0);

    xi[0] = prev[0];
    beta[0] = prev[0];
    alpha[0] = prev[1] / prev[0];

    for (unsigned k = 1; k <= n_max; ++k) {
        for (unsigned l = k; l + k <= top; ++l) {
            cur[l] = prev[l + 1] - alpha[k - 1] * prev[l];
            if (k >= 2) cur[l] -= beta[k - 1] * prev2[l];
        }
        if (cur[k].sign() <= 0)
            throw PositivityError("Hankel form not positive definite at degree " + std::to_string(k), k);
        xi[k] = cur[k];
        beta[k] = cur[k] / prev[k - 1];
        alpha[k] = cur[k + 1] / cur[k] - prev[k] / prev[k - 1];
        prev2.swap(prev);
        prev.swap(cur);
    }

    std::vector<RationalPoly> polys;
    polys.reserve(n_max + 1);
    polys.push_back(RationalPoly::constant(Rational(1)));
    if (n_max >= 1) polys.push_back(RationalPoly{-alpha[0], Rational(1)});
    for (unsigned k = 1; k < n_max; ++k) {
        RationalPoly next = polys[k].shift_up() - alpha[k] * polys[k] - beta[k] * polys[k - 1];
        polys.push_back(std::move(next));
    }
    return {moments, std::move(polys), std::move(xi), std::move(alpha), std::move(beta)};
}

namespace {

Rational determinant(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            const Rational f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

}  // namespace

Rational hankel_determinant(const MomentSequence& moments, unsigned n) {
    std::vector<std::vector<Rational>> h(n + 1, std::vector<Rational>(n + 1));
    for (unsigned i = 0; i <= n; ++i)
        for (unsigned j = 0; j <= n; ++j) h[i][j] = moments(i + j);
    return determinant(std::move(h));
}

RationalPoly monic_poly_by_determinant(const MomentSequence& moments, unsigned n) {
    if (n == 0) return RationalPoly::constant(Rational(1));
    const Rational delta = hankel_determinant(moments, n - 1);
    if (delta.sign() <= 0) throw PositivityError("Delta_{n-1} is not positive", n - 1);
    // Expand along the last row (1, x, ..., x^n): coefficient of x^k is the signed minor.
    std::vector<Rational> coeffs(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        std::vector<std::vector<Rational>> minor(n, std::vector<Rational>(n));
        for (unsigned i = 0; i < n; ++i) {
            unsigned cc = 0;
            for (unsigned j = 0; j <= n; ++j) {
                if (j == k) continue;
                minor[i][cc++] = moments(i + j);
            }
        }
        Rational m = determinant(std::move(minor));
        if ((n + k) % 2 == 1) m = -m;
        coeffs[k] = m / delta;
    }
    return RationalPoly(std::move(coeffs));
}

Rational moment_pairing(const MomentSequence& moments, const RationalPoly& p, const RationalPoly& q) {
    Rational s(0);
    const auto& pc = p.coeffs();
    const auto& qc = q.coeffs();
    for (std::size_t i = 0; i < pc.size(); ++i) {
        if (pc[i].is_zero()) continue;
        for (std::size_t j = 0; j < qc.size(); ++j) {
            if (qc[j].is_zero() || (i + j) % 2 == 1) continue;
            s += pc[i] * qc[j] * moments(static_cast<unsigned>(i + j));
        }
    }
    return s;
}

Rational norm_xi(const OrthoSystem& sys, unsigned n) {
    if (n >= sys.xi().size())
        throw std::out_of_range("xi_" + std::to_string(n) + " not computed");
    return sys.xi()[n];
}

RecurrenceCoefficient recurrence_A(const OrthoSystem& sys, unsigned n) {
    if (n == 0 || n >= sys.beta().size())
        throw std::out_of_range("A_" + std::to_string(n) + " not available");
    const Rational& b = sys.beta()[n];
    return {b, std::sqrt(b.to_double())};
}

NormalizedPoly half_line_poly(const OrthoSystem& sys, unsigned n) {
    const auto image = sys.poly(2 * n).even_part_in_square();
    if (!image) throw std::logic_error("P_" + std::to_string(2 * n) + " has an odd term");
    return {*image, sys.xi()[2 * n]};
}

std::vector<KernelIdentityEntry> kernel_identity_check(unsigned n_max) {
    const unsigned degree = 2 * n_max + 1;
    const OrthoSystem p = monic_ops(moments_for(SequenceSpec::factorial_squared(), degree), degree);
    const OrthoSystem q =
        monic_ops(moments_for(SequenceSpec::shifted_factorial_squared(), degree), degree);
    std::vector<KernelIdentityEntry> out;
    for (unsigned n = 0; n <= n_max; ++n) {
        RationalPoly lhs = q.poly(2 * n).shift_up();
        const RationalPoly& rhs = p.poly(2 * n + 1);
        const bool holds = lhs == rhs;
        out.push_back({n, std::move(lhs), rhs, holds});
    }
    return out;
}

double dp_weight(double x, int k) {
    if (!(x > 0.0)) throw DomainError("dp_weight: x must be positive");
    switch (k) {
        case 1: return std::exp(-x);
        case 2: return 2.0 * bessel_k0(2.0 * std::sqrt(x));
        default:
            throw UnsupportedError("dp_weight: k = " + std::to_string(k) +
                                   " is out of scope; only the closed-form weights k = 1 and k = 2 "
                                   "of the ultra-exponential family are built");
    }
}

std::vector<TrendPoint> recurrence_trend(unsigned n_max) {
    const OrthoSystem sys =
        monic_ops(moments_for(SequenceSpec::factorial_squared(), n_max), n_max);
    std::vector<TrendPoint> out;
    double sum = 0.0;
    for (unsigned n = 8; n <= n_max; ++n) {
        const double r = recurrence_A(sys, n).value / n;
        sum += std::abs(r - std::numbers::pi / 4.0);
        out.push_back({n, r, sum / static_cast<double>(n - 7)});
    }
    return out;
}

nlohmann::json to_json(const Rational& r) {
    return nlohmann::json::array({r.num().get_str(), r.den().get_str()});
}

nlohmann::json to_json(const RationalPoly& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (long k = 0; k <= p.degree(); ++k) coeffs.push_back(to_json(p.coeff(static_cast<std::size_t>(k))));
    if (p.is_zero()) coeffs.push_back(to_json(Rational(0)));
    return {{"degree", p.degree()}, {"coeffs", coeffs}};
}

nlohmann::json to_json(const OrthoSystem& sys) {
    nlohmann::json polys = nlohmann::json::array(), xi = nlohmann::json::array(),
                   beta = nlohmann::json::array();
    for (const auto& p : sys.polys()) polys.push_back(to_json(p));
    for (const auto& v : sys.xi()) xi.push_back(to_json(v));
    for (const auto& v : sys.beta()) beta.push_back(to_json(v));
    return {{"convention", std::string(to_string(sys.moments().spec().convention))},
            {"gamma", sys.moments().spec().gamma.str()},
            {"polys", polys},
            {"xi", xi},
            {"beta", beta}};
}

}  // namespace spt
