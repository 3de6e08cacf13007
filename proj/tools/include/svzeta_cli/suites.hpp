/* Copyright 2026 The svzeta Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// Verification suites run by `svzeta verify`.

#ifndef SVZETA_CLI_SUITES_HPP
#define SVZETA_CLI_SUITES_HPP

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "svzeta/numerics.hpp"

namespace svzeta::cli {

struct Check {
    std::string suite;
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    // A lower bound: passes when residual > tolerance (used to confirm that
    // something is detected).
    bool at_least = false;

    bool pass() const { return at_least ? residual > tolerance : residual <= tolerance; }
};

nlohmann::json to_json(const Check& c);

// Identities from the embedded table (slow ones only when `slow`), the
// depth-1 values, exact vanishing of zeta_sv(2) and the e1' residual.
std::vector<Check> identities_suite(bool slow, MzvCache* cache);
// Computed dimensions against the embedded table (errata applied), the
// range of the spot identity dim Hsv_N = dim L_{N+2}, and Lyndon counts.
std::vector<Check> dims_suite();
// Boundary values, path independence and behaviour near 1 of the
// single-valued polylogarithms.
std::vector<Check> polylog_suite(MzvCache* cache);

}  // namespace svzeta::cli

#endif  // SVZETA_CLI_SUITES_HPP
