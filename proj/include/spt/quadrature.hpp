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

#ifndef SPT_QUADRATURE_HPP
#define SPT_QUADRATURE_HPP

#include <cstddef>
#include <functional>
#include <vector>

namespace spt {

enum class DomainTag { FiniteInterval, SemiInfinitePanels };

/// Nodes and positive weights of a quadrature rule.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    DomainTag domain = DomainTag::FiniteInterval;

    template <class F>
    auto integrate(F&& f) const {
        decltype(f(0.0)) sum{};
        for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
        return sum;
    }
};

/// n-point Gauss-Legendre rule on [a, b]; exact for polynomials of degree <= 2n - 1.
QuadratureRule gauss_legendre(std::size_t n, double a = -1.0, double b = 1.0);

/// The same rule carried in long double, for integrands that cancel to far below
/// their own magnitude.
struct ExtendedRule {
    std::vector<long double> nodes;
    std::vector<long double> weights;
};

ExtendedRule gauss_legendre_extended(std::size_t n, long double a = -1.0L, long double b = 1.0L);

/// Composite Gauss-Legendre on [0, upper] with `panels` panels of doubling width,
/// the first of width upper / 2^(panels-1); suited to integrands with an end-point
/// singularity at 0 and exponential decay. The tail beyond `upper` is discarded.
QuadratureRule semi_infinite_panels(double upper = 40.0, std::size_t panels = 16,
                                    std::size_t points_per_panel = 32);

}  // namespace spt

#endif  // SPT_QUADRATURE_HPP
