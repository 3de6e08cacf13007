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

#ifndef SVZETA_LINEAR_COMBINATION_HPP
#define SVZETA_LINEAR_COMBINATION_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "svzeta/rational.hpp"

namespace svzeta {

/* A finite formal sum of keys with rational coefficients, stored as a vector
 * sorted by key with no zero coefficients. Two combinations are equal iff
 * their term vectors are equal.
 */
template <class Key>
class LinearCombination {
public:
    using Term = std::pair<Key, Rational>;

    LinearCombination() = default;
    LinearCombination(Key key, Rational coeff) {
        if (!coeff.is_zero()) terms_.emplace_back(std::move(key), std::move(coeff));
    }

    // Builds from arbitrary (possibly repeated, unsorted) terms.
    static LinearCombination from_terms(std::vector<Term> raw) {
        std::sort(raw.begin(), raw.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
        LinearCombination out;
        out.terms_.reserve(raw.size());
        for (auto& t : raw) {
            if (!out.terms_.empty() && out.terms_.back().first == t.first) {
                out.terms_.back().second += t.second;
            } else {
                if (!out.terms_.empty() && out.terms_.back().second.is_zero()) out.terms_.pop_back();
                out.terms_.push_back(std::move(t));
            }
        }
        if (!out.terms_.empty() && out.terms_.back().second.is_zero()) out.terms_.pop_back();
        return out;
    }

    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    auto begin() const noexcept { return terms_.begin(); }
    auto end() const noexcept { return terms_.end(); }

    Rational coefficient(const Key& key) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                                   [](const Term& t, const Key& k) { return t.first < k; });
        return it != terms_.end() && it->first == key ? it->second : Rational();
    }

    Rational total_mass() const {
        Rational s;
        for (const auto& t : terms_) s += t.second;
        return s;
    }

    friend LinearCombination operator+(const LinearCombination& a, const LinearCombination& b) {
        return merge(a, b, false);
    }
    friend LinearCombination operator-(const LinearCombination& a, const LinearCombination& b) {
        return merge(a, b, true);
    }
    LinearCombination operator-() const {
        LinearCombination out = *this;
        for (auto& t : out.terms_) t.second = -t.second;
        return out;
    }
    LinearCombination& operator+=(const LinearCombination& rhs) { return *this = *this + rhs; }
    LinearCombination& operator-=(const LinearCombination& rhs) { return *this = *this - rhs; }

    friend LinearCombination operator*(const Rational& q, const LinearCombination& a) {
        if (q.is_zero()) return {};
        LinearCombination out = a;
        for (auto& t : out.terms_) t.second *= q;
        return out;
    }

    friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

private:
    static LinearCombination merge(const LinearCombination& a, const LinearCombination& b, bool subtract) {
        LinearCombination out;
        out.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto i = a.terms_.begin();
        auto j = b.terms_.begin();
        while (i != a.terms_.end() || j != b.terms_.end()) {
            if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
                out.terms_.push_back(*i++);
            } else if (i == a.terms_.end() || j->first < i->first) {
                out.terms_.emplace_back(j->first, subtract ? -j->second : j->second);
                ++j;
            } else {
                Rational c = subtract ? i->second - j->second : i->second + j->second;
                if (!c.is_zero()) out.terms_.emplace_back(i->first, std::move(c));
                ++i;
                ++j;
            }
        }
        return out;
    }

    std::vector<Term> terms_;
};

}  // namespace svzeta

#endif  // SVZETA_LINEAR_COMBINATION_HPP
