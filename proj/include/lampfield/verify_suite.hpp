/*
   Copyright 2026 The lampfield Authors

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

#ifndef LAMPFIELD_VERIFY_SUITE_HPP
#define LAMPFIELD_VERIFY_SUITE_HPP

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lampfield/linpoly.hpp"

namespace lampfield {

struct Verdict {
    std::string name;
    CheckStatus status = CheckStatus::not_attempted;
    std::string detail;
    std::string counterexample;  // set on fail; enough to rerun the check
    std::chrono::duration<double> elapsed{};
};

enum class Suite { props, conj, orbit_split, chain, tensor, all };
/// "props", "conj-2n-1", "orbit-split", "chain", "tensor", "all".
Suite parse_suite(std::string_view s);
std::string to_string(Suite s);

struct SuiteOptions {
    std::size_t from = 2;
    std::optional<std::size_t> to;  // per-suite default when empty
    VerifyLimits limits;
    OrderOptions order;
    /// Called with each verdict as soon as it is known.
    std::function<void(const Verdict&)> progress;
};

/// Default upper end of the range for a suite.
std::size_t default_to(Suite s);

std::vector<Verdict> run_suite(Suite s, const SuiteOptions& opts);

/// 1 if any check failed, else 2 if any ran out of budget, else 0.
int exit_code(const std::vector<Verdict>& verdicts);

/// "PASS  name  detail (0.12 s)".
std::string format_verdict(const Verdict& v);

}  // namespace lampfield

#endif
