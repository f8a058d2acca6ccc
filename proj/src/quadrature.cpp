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

#include "spt/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace spt {

namespace {

// Nodes/weights on [-1, 1] by Newton iteration on P_n; results memoized per n.
using Reference = std::pair<std::vector<long double>, std::vector<long double>>;

const Reference& reference_rule(std::size_t n) {
    static std::mutex mutex;
    static std::map<std::size_t, Reference> cache;
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;

    std::vector<long double> x(n), w(n);
    const std::size_t m = (n + 1) / 2;
    for (std::size_t i = 0; i < m; ++i) {
        long double z = std::cos(std::numbers::pi_v<long double> * (i + 0.75L) / (n + 0.5L));
        long double pp = 0.0L;
        for (int it = 0; it < 100; ++it) {
            long double p1 = 1.0L, p2 = 0.0L;
            for (std::size_t j = 1; j <= n; ++j) {
                const long double p3 = p2;
                p2 = p1;
                p1 = ((2.0L * j - 1.0L) * z * p2 - (j - 1.0L) * p3) / j;
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0L);
            const long double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 5e-19L) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = w[n - 1 - i] = 2.0L / ((1.0L - z * z) * pp * pp);
    }
    return cache.emplace(n, std::make_pair(std::move(x), std::move(w))).first->second;
}

}  // namespace

QuadratureRule gauss_legendre(std::size_t n, double a, double b) {
    if (n == 0) throw std::invalid_argument("gauss_legendre: need at least one node");
    const auto& [x, w] = reference_rule(n);
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    for (std::size_t i = 0; i < n; ++i) {
        rule.nodes[i] = static_cast<double>(mid + half * x[i]);
        rule.weights[i] = static_cast<double>(half * w[i]);
    }
    return rule;
}

ExtendedRule gauss_legendre_extended(std::size_t n, long double a, long double b) {
    if (n == 0) throw std::invalid_argument("gauss_legendre: need at least one node");
    const auto& [x, w] = reference_rule(n);
    ExtendedRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const long double half = 0.5L * (b - a), mid = 0.5L * (a + b);
    for (std::size_t i = 0; i < n; ++i) {
        rule.nodes[i] = mid + half * x[i];
        rule.weights[i] = half * w[i];
    }
    return rule;
}

QuadratureRule semi_infinite_panels(double upper, std::size_t panels, std::size_t points_per_panel) {
    if (panels == 0 || !(upper > 0.0)) throw std::invalid_argument("semi_infinite_panels: bad layout");
    QuadratureRule rule;
    rule.domain = DomainTag::SemiInfinitePanels;
    double lo = 0.0;
    double hi = std::ldexp(upper, -static_cast<int>(panels - 1));
    for (std::size_t p = 0; p < panels; ++p) {
        const QuadratureRule g = gauss_legendre(points_per_panel, lo, hi);
        rule.nodes.insert(rule.nodes.end(), g.nodes.begin(), g.nodes.end());
        rule.weights.insert(rule.weights.end(), g.weights.begin(), g.weights.end());
        lo = hi;
        hi *= 2.0;
    }
    return rule;
}

}  // namespace spt
