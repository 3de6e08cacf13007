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
// Reference data compiled into the tool from data/*.txt.

#ifndef SVZETA_CLI_DATA_HPP
#define SVZETA_CLI_DATA_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "svzeta/associator.hpp"

namespace svzeta::cli {

std::string_view embedded_dims_table();
std::string_view embedded_sv_identities();

struct DimsErratum {
    std::string row;
    int weight;
    long value;
};

// Rows keyed by name ("dimH", "dimL", "dimHsv", "dimLsv"); entry k-1 is
// weight k.
struct PublishedDims {
    std::map<std::string, std::vector<long>> rows;
    std::vector<DimsErratum> errata;

    // Rows with every erratum applied.
    std::map<std::string, std::vector<long>> corrected() const;
};

// Throws std::runtime_error naming the line on malformed input.
PublishedDims parse_dims_table(std::string_view text);

struct SvIdentity {
    Composition lhs;
    int order;
    double tolerance;  // relative
    bool slow;
    std::vector<ProductTerm> rhs;

    std::string label() const;
};

std::vector<SvIdentity> parse_sv_identities(std::string_view text);

}  // namespace svzeta::cli

#endif  // SVZETA_CLI_DATA_HPP
