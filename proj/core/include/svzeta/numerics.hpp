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
// Floating-point values of multiple zeta values, with a persistent cache.

#ifndef SVZETA_NUMERICS_HPP
#define SVZETA_NUMERICS_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "svzeta/mzv_expr.hpp"
#include "svzeta/words.hpp"

namespace svzeta {

// Raised when a value cannot be certified to the requested error.
struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MzvValue {
    Composition composition;
    double value = 0.0;
    double abs_err = 0.0;
    std::string method;
    long long terms_used = 0;
};

struct ExprValue {
    double value = 0.0;
    double abs_err = 0.0;
};

enum class Backend {
    // Split of the iterated integral at 1/2: zeta(w) = sum_{w=uv} Li_u(1/2)
    // Li_{u'}(1/2) with u' the reversed, letter-swapped v. Geometric
    // convergence; every value is computed to full double precision.
    holder_half,
    // Truncated nested sums with an integral tail bound; cost grows like
    // target_err^{-1/(nr-1)}.
    nested_sum,
};

const char* backend_name(Backend b) noexcept;

/* A thread-safe table of certified values, keyed by composition.
 *
 * File format: one record per line, "n1,...,nr<TAB>value<TAB>abs_err" with
 * 17 significant digits; lines starting with '#' and blank lines are ignored.
 */
class MzvCache {
public:
    struct Record {
        double value;
        double abs_err;
        friend bool operator==(const Record&, const Record&) = default;
    };

    // Throws std::runtime_error naming the line number on a malformed record.
    static MzvCache load(const std::filesystem::path& path);
    // Writes to a temporary file in the same directory, then renames.
    void store(const std::filesystem::path& path) const;

    std::optional<Record> find(const Composition& c) const;
    void insert(const Composition& c, Record r);
    std::size_t size() const;
    std::map<Composition, Record> records() const;

    MzvCache() = default;
    MzvCache(const MzvCache& other);
    MzvCache& operator=(const MzvCache& other);

private:
    mutable std::shared_mutex mutex_;
    std::map<Composition, Record> table_;
};

/* Value of a convergent composition with |value - true| <= abs_err <=
 * target_err. Throws std::invalid_argument for a divergent composition and
 * PrecisionError when the backend cannot reach target_err. If a cache is
 * given, a cached record with abs_err <= target_err is returned as is and new
 * values are inserted.
 */
MzvValue mzv_value(const Composition& c, double target_err, Backend backend = Backend::holder_half,
                   MzvCache* cache = nullptr);

// sum coeff * zeta(w) with the accumulated error bound; throws PrecisionError
// if the bound exceeds target_err.
ExprValue eval_expr(const MzvExpr& a, double target_err, MzvCache* cache = nullptr);

// Li_{n1,...,nr}(1/2) = sum_{0<k1<...<kr} 2^{-kr} / (k1^n1 ... kr^nr), any nr >= 1.
ExprValue polylog_half(const Composition& c);

}  // namespace svzeta

#endif  // SVZETA_NUMERICS_HPP
