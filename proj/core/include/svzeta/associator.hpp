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
// The Drinfeld associator Z, Deligne's associator W with W o sigma(Z) = Z,
// and single-valued multiple zeta values as the coefficients of W.

#ifndef SVZETA_ASSOCIATOR_HPP
#define SVZETA_ASSOCIATOR_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "svzeta/numerics.hpp"
#include "svzeta/series.hpp"

namespace svzeta {

enum class AssociatorKind { Z, sigmaZ, W };

// A truncated associator. For floating coefficients, coeff_err[dense index]
// bounds (or for W, estimates) the error of each coefficient and abs_err is
// their maximum; both are empty / 0 for exact rings.
template <CoefficientRing R>
struct Associator {
    AssociatorKind kind;
    NCSeries<R> series;
    double abs_err = 0.0;
    std::vector<double> coeff_err;

    int order() const noexcept { return series.order(); }
    double error_of(Word w) const { return coeff_err.empty() ? abs_err : coeff_err.at(w.dense_index()); }
};

using SymbolicAssociator = Associator<MzvExpr>;
using NumericAssociator = Associator<Complex>;

// Z = sum_w z(w) w with z(w) = regularize(w).
SymbolicAssociator build_Z_symbolic(int order);
// The same coefficients evaluated numerically.
NumericAssociator build_Z_numeric(int order, MzvCache* cache = nullptr);

template <CoefficientRing R>
Associator<R> sigma_Z(const Associator<R>& z) {
    return {AssociatorKind::sigmaZ, sigma_twist(z.series), z.abs_err, z.coeff_err};
}

SymbolicAssociator deligne_W_symbolic(int order);
// W from numeric Z; coefficient errors are estimated by re-solving with Z
// perturbed by its coefficient error bounds.
NumericAssociator deligne_W_numeric(int order, MzvCache* cache = nullptr);

// e1' = W e1 W^{-1}.
template <CoefficientRing R>
NCSeries<R> e1_prime(const NCSeries<R>& w) {
    const int n = w.order();
    return mul(mul(w, NCSeries<R>::letter(Letter::e1, n)), inverse(w));
}

// Z(-e0,-e1') e1' Z(-e0,-e1')^{-1} - Z e1 Z^{-1}, with e1' = W e1 W^{-1}.
template <CoefficientRing R>
NCSeries<R> e1_prime_residual(const NCSeries<R>& z, const NCSeries<R>& w) {
    const int n = z.order();
    const NCSeries<R> e1 = NCSeries<R>::letter(Letter::e1, n);
    const NCSeries<R> zs = substitute_e1(sigma_twist(z), w);
    const NCSeries<R> lhs = mul(mul(zs, e1_prime(w)), inverse(zs));
    return lhs - mul(mul(z, e1), inverse(z));
}

struct SvValue {
    Word word;
    std::optional<MzvExpr> symbolic;
    double numeric = 0.0;
    double abs_err = 0.0;
};

// {"composition": [...], "word": "...", "symbolic": [...] | null,
//  "numeric": x, "abs_err": e}; composition is [] for words starting with e0.
nlohmann::json to_json(const SvValue& v);

// One term c * zeta(c_1) ... zeta(c_k) of an identity's right-hand side.
struct ProductTerm {
    Rational coeff;
    std::vector<Composition> factors;
};

struct IdentityCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;   // |lhs - rhs|
    double relative = 0.0;   // residual / max(|lhs|, |rhs|), or residual if both vanish
    double abs_err = 0.0;    // error budget of the two evaluations
};

/* Lazily built single-valued associators.
 *
 * The numeric W (order numeric_order) is always available; the symbolic W is
 * built only if symbolic_order > 0. Thread-safe.
 */
class SvEngine {
public:
    explicit SvEngine(int numeric_order, int symbolic_order = 0, MzvCache* cache = nullptr);

    int numeric_order() const noexcept { return numeric_order_; }
    int symbolic_order() const noexcept { return symbolic_order_; }

    const NumericAssociator& Z_numeric() const;
    const NumericAssociator& W_numeric() const;
    // nullptr when symbolic_order == 0.
    const SymbolicAssociator* W_symbolic() const;

    // Coefficient of w in W. The symbolic part is present when |w| <= the
    // symbolic order; the numeric error then comes from evaluating it.
    SvValue zeta_sv(Word w) const;
    // Throws std::invalid_argument for divergent compositions and
    // std::out_of_range when the weight exceeds the numeric order.
    SvValue zeta_sv(const Composition& c) const;

    IdentityCheck verify_identity(const Composition& lhs, const std::vector<ProductTerm>& rhs) const;

private:
    int numeric_order_;
    int symbolic_order_;
    MzvCache* cache_;
    mutable std::once_flag numeric_once_, symbolic_once_;
    mutable std::unique_ptr<NumericAssociator> z_numeric_, w_numeric_;
    mutable std::unique_ptr<SymbolicAssociator> w_symbolic_;
};

// Evaluates c * prod zeta(factors) with an error bound.
ExprValue eval_product(const ProductTerm& t, MzvCache* cache = nullptr);

}  // namespace svzeta

#endif  // SVZETA_ASSOCIATOR_HPP
