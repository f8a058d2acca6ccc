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

#ifndef SPT_VERIFY_HPP
#define SPT_VERIFY_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace spt {

/// PASS and FAIL are hard verdicts. WARN marks a confirmed discrepancy in reference
/// material (a misprinted coefficient or constant) that the computation supersedes.
enum class Status { Pass, Warn, Fail };

std::string_view to_string(Status s);

struct CheckRecord {
    std::string check;
    Status status = Status::Pass;
    std::string detail;
    nlohmann::json data;  ///< numbers backing the verdict; deterministic for fixed options
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckRecord> records;

    /// Fail if any record fails, else Warn if any warns, else Pass.
    [[nodiscard]] Status status() const;
};

struct VerifyOptions {
    /// Degree bound; each suite has its own default (tables: fixed, identities: 12,
    /// quadrature: 8, asymptotics: 48). Capped at 256.
    std::optional<unsigned> n_max;
};

/// "asymptotics", "identities", "quadrature", "tables".
const std::vector<std::string>& suite_names();

/// Runs one suite; throws std::invalid_argument for an unknown name.
SuiteReport run_suite(std::string_view name, const VerifyOptions& options = {});

/// Runs `name`, or every suite for "all" (concurrently); results ordered by suite name.
std::vector<SuiteReport> run_suites(std::string_view name, const VerifyOptions& options = {});

Status overall(const std::vector<SuiteReport>& reports);

nlohmann::json to_json(const CheckRecord& r);
nlohmann::json to_json(const SuiteReport& r);

}  // namespace spt

#endif  // SPT_VERIFY_HPP
