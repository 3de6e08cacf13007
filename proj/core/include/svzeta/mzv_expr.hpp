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
// Formal shuffle-regularized multiple zeta values.

#ifndef SVZETA_MZV_EXPR_HPP
#define SVZETA_MZV_EXPR_HPP

#include <complex>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "svzeta/linear_combination.hpp"
#include "svzeta/words.hpp"

namespace svzeta {

/* A rational linear combination of symbols z(w), w a convergent word or the
 * empty word (the unit). Products expand through the shuffle product,
 * z(u) z(v) = z(u sh v), so the ring is the shuffle algebra on convergent
 * words. No further relations (stuffle, duality) are applied: two expressions
 * that are equal as real numbers may differ as MzvExpr.
 */
class MzvExpr {
public:
    MzvExpr() = default;
    MzvExpr(const Rational& q);  // NOLINT: q * z(empty)

    static MzvExpr one() { return MzvExpr(Rational(1)); }
    // Throws std::invalid_argument unless w is convergent or empty.
    static MzvExpr zeta(Word w, Rational coeff = Rational(1));
    static MzvExpr zeta(const Composition& c, Rational coeff = Rational(1));

    const LinearCombination<Word>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.is_zero(); }
    Rational coefficient(Word w) const { return terms_.coefficient(w); }

    // "2*z(2,2) + 4*z(1,3)", terms ordered by (weight, word); "0" when empty.
    std::string str() const;
    // [{"coeff": "p/q", "composition": [...]}, ...]
    nlohmann::json to_json() const;

    MzvExpr operator-() const { return MzvExpr(-terms_); }
    MzvExpr& operator+=(const MzvExpr& rhs) {
        terms_ += rhs.terms_;
        return *this;
    }
    MzvExpr& operator-=(const MzvExpr& rhs) {
        terms_ -= rhs.terms_;
        return *this;
    }
    friend MzvExpr operator+(const MzvExpr& a, const MzvExpr& b) { return MzvExpr(a.terms_ + b.terms_); }
    friend MzvExpr operator-(const MzvExpr& a, const MzvExpr& b) { return MzvExpr(a.terms_ - b.terms_); }
    friend MzvExpr operator*(const MzvExpr& a, const MzvExpr& b);
    friend MzvExpr operator*(const Rational& q, const MzvExpr& a) { return MzvExpr(q * a.terms_); }
    friend bool operator==(const MzvExpr&, const MzvExpr&) = default;

private:
    explicit MzvExpr(LinearCombination<Word> terms) : terms_(std::move(terms)) {}
    friend MzvExpr mzv_from_word_sum(const WordSum& s);

    LinearCombination<Word> terms_;
};

MzvExpr mzv_mul(const MzvExpr& a, const MzvExpr& b);

// Reads a WordSum supported on convergent (or empty) words as z-symbols.
MzvExpr mzv_from_word_sum(const WordSum& s);

/* The shuffle-regularized symbol z^sh(w) written in the convergent basis,
 * normalized by z^sh(e0) = z^sh(e1) = 0. Memoized; safe for concurrent use.
 */
MzvExpr regularize(Word w);

// Rewrites every symbol z(w) as z(min(w, tau w)), tau = reversal composed
// with e0 <-> e1. Exact by the duality relation z(w) = z(tau w) for
// convergent w; e.g. z(1,2) becomes z(3).
MzvExpr reduce_duality(const MzvExpr& a);
void clear_regularize_cache();

// Conjugation on the coefficient ring: identity on real symbols.
inline const MzvExpr& sigma_on_expr(const MzvExpr& a) { return a; }
inline std::complex<double> sigma_on_expr(std::complex<double> x) { return std::conj(x); }

}  // namespace svzeta

#endif  // SVZETA_MZV_EXPR_HPP
