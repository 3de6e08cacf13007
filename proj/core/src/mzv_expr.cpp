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

#include "svzeta/mzv_expr.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

#include <nlohmann/json.hpp>

namespace svzeta {

MzvExpr::MzvExpr(const Rational& q) : terms_(Word(), q) {}

MzvExpr MzvExpr::zeta(Word w, Rational coeff) {
    if (!w.empty() && !is_convergent(w))
        throw std::invalid_argument("MzvExpr::zeta: word '" + w.str() + "' is not convergent");
    return MzvExpr(LinearCombination<Word>(w, std::move(coeff)));
}

MzvExpr MzvExpr::zeta(const Composition& c, Rational coeff) { return zeta(word_from_composition(c), std::move(coeff)); }

std::string MzvExpr::str() const {
    if (terms_.is_zero()) return "0";
    std::string s;
    for (const auto& [w, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.str();
        s += "*z(";
        if (!w.empty()) s += composition_from_word(w).str();
        s += ')';
    }
    return s;
}

nlohmann::json MzvExpr::to_json() const {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [w, c] : terms_) {
        const mpq_class q = c.to_mpq();
        nlohmann::json parts = nlohmann::json::array();
        if (!w.empty())
            for (int n : composition_from_word(w).parts) parts.push_back(n);
        out.push_back({{"coeff", q.get_num().get_str() + "/" + q.get_den().get_str()}, {"composition", parts}});
    }
    return out;
}

MzvExpr operator*(const MzvExpr& a, const MzvExpr& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<LinearCombination<Word>::Term> raw;
    for (const auto& [u, cu] : a.terms_) {
        for (const auto& [v, cv] : b.terms_) {
            const Rational c = cu * cv;
            const int weight = u.weight() + v.weight();
            for (const auto& t : *detail::shuffle_terms(u, v))
                raw.emplace_back(Word(t.bits, weight), t.count == 1 ? c : c * Rational(t.count));
        }
    }
    return MzvExpr(LinearCombination<Word>::from_terms(std::move(raw)));
}

MzvExpr mzv_mul(const MzvExpr& a, const MzvExpr& b) { return a * b; }

MzvExpr mzv_from_word_sum(const WordSum& s) {
    for (const auto& t : s)
        if (!t.first.empty() && !is_convergent(t.first))
            throw std::invalid_argument("mzv_from_word_sum: word '" + t.first.str() + "' is not convergent");
    return MzvExpr(s);
}

// ---------------------------------------------------------------------------
// Regularization.
//
// Leading e0's: z(e0^a e1 u) = (-1)^a z(e1 (e0^a sh u)).
// Trailing e1's: z(v e0 e1^b) = (-1)^b z((v sh e1^b) e0).
// Both follow from z being a shuffle homomorphism with z(e0) = z(e1) = 0.

namespace {

std::shared_mutex g_reg_mutex;
std::unordered_map<Word, MzvExpr, WordHash> g_reg_cache;

int leading(Word w, Letter a) {
    int k = 0;
    while (k < w.weight() && w[k] == a) ++k;
    return k;
}

int trailing(Word w, Letter a) {
    int k = 0;
    while (k < w.weight() && w[w.weight() - 1 - k] == a) ++k;
    return k;
}

MzvExpr compute_regularization(Word w) {
    if (w.empty()) return MzvExpr::one();
    if (is_convergent(w)) return MzvExpr::zeta(w);

    const Word e0 = Word::letter(Letter::e0);
    const Word e1 = Word::letter(Letter::e1);

    const int a = leading(w, Letter::e0);
    if (a == w.weight()) return {};
    if (a > 0) {
        const Word rest = w.suffix(w.weight() - a - 1);
        std::vector<LinearCombination<Word>::Term> raw;
        for (const auto& t : *detail::shuffle_terms(Word(0, a), rest))
            raw.emplace_back(e1.concat(Word(t.bits, a + rest.weight())), Rational(t.count));
        const Rational sign = a % 2 ? Rational(-1) : Rational(1);
        MzvExpr out;
        for (const auto& [x, c] : LinearCombination<Word>::from_terms(std::move(raw))) out += (sign * c) * regularize(x);
        return out;
    }

    // Begins with e1 and ends with e1.
    const int b = trailing(w, Letter::e1);
    if (b == w.weight()) return {};
    const Word v = w.prefix(w.weight() - b - 1);
    const Word ones((std::uint64_t{1} << b) - 1, b);
    std::vector<LinearCombination<Word>::Term> raw;
    const Rational sign = b % 2 ? Rational(-1) : Rational(1);
    for (const auto& t : *detail::shuffle_terms(v, ones))
        raw.emplace_back(Word(t.bits, v.weight() + b).concat(e0), sign * Rational(t.count));
    return mzv_from_word_sum(LinearCombination<Word>::from_terms(std::move(raw)));
}

}  // namespace

MzvExpr regularize(Word w) {
    {
        std::shared_lock lock(g_reg_mutex);
        if (auto it = g_reg_cache.find(w); it != g_reg_cache.end()) return it->second;
    }
    MzvExpr value = compute_regularization(w);
    std::unique_lock lock(g_reg_mutex);
    return g_reg_cache.emplace(w, std::move(value)).first->second;
}

MzvExpr reduce_duality(const MzvExpr& a) {
    MzvExpr out;
    for (const auto& [w, c] : a.terms()) out = out + MzvExpr::zeta(std::min(w, w.reversed().swapped()), c);
    return out;
}

void clear_regularize_cache() {
    std::unique_lock lock(g_reg_mutex);
    g_reg_cache.clear();
}

}  // namespace svzeta
