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

#include "svzeta/associator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <nlohmann/json.hpp>

namespace svzeta {

namespace {

constexpr double kUnbounded = std::numeric_limits<double>::infinity();

}  // namespace

SymbolicAssociator build_Z_symbolic(int order) {
    NCSeries<MzvExpr> z(order);
    for (std::size_t i = 0; i < z.coefficients().size(); ++i)
        z.coefficients()[i] = regularize(Word::from_dense_index(i));
    return {AssociatorKind::Z, std::move(z), 0.0, {}};
}

NumericAssociator build_Z_numeric(int order, MzvCache* cache) {
    NCSeries<Complex> z(order);
    std::vector<double> err(z.coefficients().size(), 0.0);
    for (std::size_t i = 0; i < z.coefficients().size(); ++i) {
        const ExprValue v = eval_expr(regularize(Word::from_dense_index(i)), kUnbounded, cache);
        z.coefficients()[i] = Complex(v.value, 0.0);
        err[i] = v.abs_err;
    }
    const double worst = *std::max_element(err.begin(), err.end());
    return {AssociatorKind::Z, std::move(z), worst, std::move(err)};
}

SymbolicAssociator deligne_W_symbolic(int order) {
    const SymbolicAssociator z = build_Z_symbolic(order);
    return {AssociatorKind::W, ihara_solve(sigma_twist(z.series), z.series), 0.0, {}};
}

namespace {

// Z with every coefficient of weight >= 2 shifted by its error bound (at
// least a few ulps) with a pseudo-random sign pattern.
NCSeries<Complex> perturbed(const NumericAssociator& z, std::uint64_t seed) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    NCSeries<Complex> zp = z.series;
    std::uint64_t state = seed;
    for (std::size_t i = 3; i < zp.coefficients().size(); ++i) {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        const double shift = std::max(z.coeff_err[i], 4.0 * eps * std::abs(zp.coefficients()[i]));
        zp.coefficients()[i] += (state & 1 ? 1.0 : -1.0) * shift;
    }
    return zp;
}

/* The response of the solve to two perturbations of its input measures how
 * input and rounding errors propagate. Each coefficient's estimate is four
 * times the larger response plus a rounding floor relative to the largest
 * coefficient of the same weight.
 */
NumericAssociator solve_W_numeric(const NumericAssociator& z) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    NCSeries<Complex> w = ihara_solve(sigma_twist(z.series), z.series);
    std::vector<double> err(w.coefficients().size(), 0.0);
    for (std::uint64_t seed : {0x2545F4914F6CDD1Dull, 0x9E3779B97F4A7C15ull}) {
        const NCSeries<Complex> zp = perturbed(z, seed);
        const NCSeries<Complex> wp = ihara_solve(sigma_twist(zp), zp);
        for (std::size_t i = 0; i < err.size(); ++i)
            err[i] = std::max(err[i], 4.0 * std::abs(w.coefficients()[i] - wp.coefficients()[i]));
    }
    for (int k = 0; k <= w.order(); ++k) {
        const std::size_t lo = (std::size_t{1} << k) - 1, hi = (std::size_t{1} << (k + 1)) - 1;
        double scale = 1.0;
        for (std::size_t i = lo; i < hi; ++i) scale = std::max(scale, std::abs(w.coefficients()[i]));
        for (std::size_t i = lo; i < hi; ++i) err[i] += 16.0 * eps * scale;
    }
    const double worst = *std::max_element(err.begin(), err.end());
    return {AssociatorKind::W, std::move(w), worst, std::move(err)};
}

}  // namespace

NumericAssociator deligne_W_numeric(int order, MzvCache* cache) { return solve_W_numeric(build_Z_numeric(order, cache)); }

nlohmann::json to_json(const SvValue& v) {
    nlohmann::json parts = nlohmann::json::array();
    if (!v.word.empty() && v.word.front() == Letter::e1)
        for (int n : composition_from_word(v.word).parts) parts.push_back(n);
    nlohmann::json out = {{"composition", parts}, {"word", v.word.str()}};
    out["symbolic"] = v.symbolic ? v.symbolic->to_json() : nlohmann::json(nullptr);
    out["numeric"] = v.numeric;
    out["abs_err"] = v.abs_err;
    return out;
}

ExprValue eval_product(const ProductTerm& t, MzvCache* cache) {
    double value = t.coeff.to_double();
    double err = std::numeric_limits<double>::epsilon() * std::abs(value);
    for (const Composition& c : t.factors) {
        const MzvValue f = mzv_value(c, kUnbounded, Backend::holder_half, cache);
        err = err * (std::abs(f.value) + f.abs_err) + std::abs(value) * f.abs_err;
        value *= f.value;
        err += std::numeric_limits<double>::epsilon() * std::abs(value);
    }
    return {value, err};
}

// ---------------------------------------------------------------------------

SvEngine::SvEngine(int numeric_order, int symbolic_order, MzvCache* cache)
    : numeric_order_(numeric_order), symbolic_order_(symbolic_order), cache_(cache) {
    if (numeric_order < 1) throw std::invalid_argument("SvEngine: numeric order must be >= 1");
    if (symbolic_order < 0) throw std::invalid_argument("SvEngine: symbolic order must be >= 0");
}

const NumericAssociator& SvEngine::Z_numeric() const {
    W_numeric();
    return *z_numeric_;
}

const NumericAssociator& SvEngine::W_numeric() const {
    std::call_once(numeric_once_, [this] {
        z_numeric_ = std::make_unique<NumericAssociator>(build_Z_numeric(numeric_order_, cache_));
        w_numeric_ = std::make_unique<NumericAssociator>(solve_W_numeric(*z_numeric_));
    });
    return *w_numeric_;
}

const SymbolicAssociator* SvEngine::W_symbolic() const {
    if (symbolic_order_ == 0) return nullptr;
    std::call_once(symbolic_once_,
                   [this] { w_symbolic_ = std::make_unique<SymbolicAssociator>(deligne_W_symbolic(symbolic_order_)); });
    return w_symbolic_.get();
}

SvValue SvEngine::zeta_sv(Word w) const {
    if (w.weight() > numeric_order_)
        throw std::out_of_range("zeta_sv: weight " + std::to_string(w.weight()) + " exceeds truncation order " +
                                std::to_string(numeric_order_));
    SvValue out{w, std::nullopt, 0.0, 0.0};
    if (w.weight() <= symbolic_order_) {
        out.symbolic = W_symbolic()->series[w];
        const ExprValue v = eval_expr(*out.symbolic, kUnbounded, cache_);
        out.numeric = v.value;
        out.abs_err = v.abs_err;
    } else {
        const NumericAssociator& wn = W_numeric();
        out.numeric = wn.series[w].real();
        out.abs_err = wn.error_of(w);
    }
    return out;
}

SvValue SvEngine::zeta_sv(const Composition& c) const {
    if (!c.is_convergent()) throw std::invalid_argument("zeta_sv: composition (" + c.str() + ") is not convergent");
    return zeta_sv(word_from_composition(c));
}

IdentityCheck SvEngine::verify_identity(const Composition& lhs, const std::vector<ProductTerm>& rhs) const {
    const SvValue l = zeta_sv(lhs);
    double r = 0.0;
    double rerr = 0.0;
    for (const ProductTerm& t : rhs) {
        const ExprValue v = eval_product(t, cache_);
        r += v.value;
        rerr += v.abs_err + std::numeric_limits<double>::epsilon() * std::abs(r);
    }
    IdentityCheck out;
    out.lhs = l.numeric;
    out.rhs = r;
    out.residual = std::abs(l.numeric - r);
    const double scale = std::max(std::abs(l.numeric), std::abs(r));
    out.relative = scale > 0.0 ? out.residual / scale : out.residual;
    out.abs_err = l.abs_err + rerr;
    return out;
}

}  // namespace svzeta
