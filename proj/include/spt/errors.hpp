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

#ifndef SPT_ERRORS_HPP
#define SPT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spt {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An exact result was requested but the value is not rational (e.g. Gamma(2g+1) for 2g not an integer).
class ExactnessError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Hankel form is not positive definite; `failing_degree` is the first degree n with Delta_n <= 0.
class PositivityError : public std::runtime_error {
public:
    PositivityError(const std::string& what, std::size_t failing_degree)
        : std::runtime_error(what), failing_degree_(failing_degree) {}
    [[nodiscard]] std::size_t failing_degree() const noexcept { return failing_degree_; }

private:
    std::size_t failing_degree_;
};

/// Requested feature lies outside what this library implements.
class UnsupportedError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace spt

#endif  // SPT_ERRORS_HPP
