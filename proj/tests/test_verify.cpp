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

#include <doctest.h>

#include <algorithm>

#include "spt/verify.hpp"

using namespace spt;

namespace {
const CheckRecord* find(const SuiteReport& r, const std::string& name) {
    const auto it = std::find_if(r.records.begin(), r.records.end(), [&](const CheckRecord& c) { return c.check == name; });
    return it == r.records.end() ? nullptr : &*it;
}
}  // namespace

TEST_SUITE("verify") {
    TEST_CASE("tables suite") {
        const auto r = run_suite("tables");
        CHECK(r.status() == Status::Warn);
        const auto* xi = find(r, "gamma0_norms_xi");
        REQUIRE(xi != nullptr);
        CHECK(xi->status == Status::Pass);
        CHECK(xi->detail.find("xi_6 = 3681936/41") != std::string::npos);
        REQUIRE(find(r, "gamma1_q6_reference_coefficients") != nullptr);
        CHECK(find(r, "gamma1_q6_reference_coefficients")->status == Status::Warn);
        CHECK(find(r, "gamma0_phi_reference_table")->status == Status::Warn);
    }

    TEST_CASE("empty-range identities") {
        const auto r = run_suite("identities", {0u});
        CHECK(r.status() != Status::Fail);
    }

    TEST_CASE("unknown suite and degree guard") {
        CHECK_THROWS_AS(run_suite("nope"), std::invalid_argument);
        CHECK_THROWS(run_suite("tables", {257u}));
    }

    TEST_CASE("all suites, ordered and deterministic") {
        const auto a = run_suites("all");
        REQUIRE(a.size() == 4);
        CHECK(a[0].suite == "asymptotics");
        CHECK(a[3].suite == "tables");
        CHECK(overall(a) == Status::Warn);
        for (const auto& s : a)
            for (const auto& c : s.records) CHECK_MESSAGE(c.status != Status::Fail, s.suite << "/" << c.check << ": " << c.detail);
        const auto b = run_suites("all");
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(to_json(a[i]).dump() == to_json(b[i]).dump());
    }

    TEST_CASE("status names") {
        CHECK(to_string(Status::Pass) == "PASS");
        CHECK(to_string(Status::Warn) == "WARN");
        CHECK(to_string(Status::Fail) == "FAIL");
    }
}
