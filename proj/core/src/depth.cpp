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

#include "svzeta/depth.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "svzeta/associator.hpp"

namespace svzeta {

DepthPoly::DepthPoly(int depth) : depth_(depth) {
    if (depth < 1) throw std::invalid_argument("DepthPoly: depth must be >= 1");
}

DepthPoly::DepthPoly(int depth, LinearCombination<Monomial> terms) : DepthPoly(depth) {
    for (const auto& [m, c] : terms)
        if (static_cast<int>(m.size()) != depth) throw DepthMismatch("DepthPoly: monomial has the wrong number of variables");
    terms_ = std::move(terms);
}

DepthPoly DepthPoly::constant(int depth, const Rational& c) {
    return DepthPoly(depth, LinearCombination<Monomial>(Monomial(static_cast<std::size_t>(depth), 0), c));
}

DepthPoly DepthPoly::variable(int depth, int i) {
    if (i < 1 || i > depth) throw std::out_of_range("DepthPoly::variable: index out of range");
    Monomial m(static_cast<std::size_t>(depth), 0);
    m[static_cast<std::size_t>(i - 1)] = 1;
    return DepthPoly(depth, LinearCombination<Monomial>(m, Rational(1)));
}

int DepthPoly::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, std::accumulate(m.begin(), m.end(), 0));
    return d;
}

Rational DepthPoly::eval(const std::vector<Rational>& x) const {
    if (static_cast<int>(x.size()) != depth_) throw DepthMismatch("DepthPoly::eval: wrong number of arguments");
    Rational total;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            for (int k = 0; k < m[i]; ++k) t *= x[i];
        total += t;
    }
    return total;
}

DepthPoly DepthPoly::compose(const std::vector<DepthPoly>& args) const {
    if (static_cast<int>(args.size()) != depth_) throw DepthMismatch("DepthPoly::compose: wrong number of arguments");
    const int target = args.front().depth();
    for (const DepthPoly& a : args)
        if (a.depth() != target) throw DepthMismatch("DepthPoly::compose: arguments of different depths");
    DepthPoly out(target);
    for (const auto& [m, c] : terms_) {
        DepthPoly t = constant(target, c);
        for (std::size_t i = 0; i < m.size(); ++i)
            for (int k = 0; k < m[i]; ++k) t = t * args[i];
        out = out + t;
    }
    return out;
}

std::string DepthPoly::str() const {
    if (terms_.is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.str();
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            s += "*x" + std::to_string(i + 1);
            if (m[i] > 1) s += "^" + std::to_string(m[i]);
        }
    }
    return s;
}

namespace {

void require_same_depth(const DepthPoly& a, const DepthPoly& b) {
    if (a.depth() != b.depth()) throw DepthMismatch("DepthPoly: operands have different depths");
}

}  // namespace

DepthPoly operator+(const DepthPoly& a, const DepthPoly& b) {
    require_same_depth(a, b);
    return DepthPoly(a.depth_, a.terms_ + b.terms_);
}

DepthPoly operator-(const DepthPoly& a, const DepthPoly& b) {
    require_same_depth(a, b);
    return DepthPoly(a.depth_, a.terms_ - b.terms_);
}

DepthPoly operator*(const DepthPoly& a, const DepthPoly& b) {
    require_same_depth(a, b);
    std::vector<LinearCombination<Monomial>::Term> raw;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma;
            for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
            raw.emplace_back(std::move(m), ca * cb);
        }
    }
    return DepthPoly(a.depth_, LinearCombination<Monomial>::from_terms(std::move(raw)));
}

DepthPoly operator*(const Rational& q, const DepthPoly& a) { return DepthPoly(a.depth_, q * a.terms_); }

DepthPoly lin_ihara_11(const DepthPoly& f, const DepthPoly& g) {
    if (f.depth() != 1 || g.depth() != 1) throw DepthMismatch("lin_ihara_11: both arguments must have depth 1");
    const DepthPoly x1 = DepthPoly::variable(2, 1), x2 = DepthPoly::variable(2, 2);
    return f.compose({x1}) * g.compose({x2}) + f.compose({x2 - x1}) * (g.compose({x1}) - g.compose({x2}));
}

DepthPoly lin_ihara_12(const DepthPoly& f, const DepthPoly& g) {
    if (f.depth() != 1 || g.depth() != 2) throw DepthMismatch("lin_ihara_12: arguments must have depths 1 and 2");
    const DepthPoly x1 = DepthPoly::variable(3, 1), x2 = DepthPoly::variable(3, 2), x3 = DepthPoly::variable(3, 3);
    return f.compose({x1}) * g.compose({x2, x3}) +
           f.compose({x2 - x1}) * (g.compose({x1, x3}) - g.compose({x2, x3})) +
           f.compose({x3 - x2}) * (g.compose({x1, x2}) - g.compose({x1, x3}));
}

std::vector<Depth1Row> depth1_sv_check(const SvEngine& engine, int n_max) {
    if (n_max > engine.numeric_order())
        throw std::out_of_range("depth1_sv_check: n_max exceeds the associator truncation order");
    std::vector<Depth1Row> rows;
    for (int n = 2; n <= n_max; ++n) {
        const Composition c{n};
        const SvValue sv = engine.zeta_sv(c);
        double expected = 0.0, expected_err = 0.0;
        if (n % 2) {
            const MzvValue z = mzv_value(c, std::numeric_limits<double>::infinity());
            expected = 2.0 * z.value;
            expected_err = 2.0 * z.abs_err;
        }
        rows.push_back({n, sv.numeric, expected, std::abs(sv.numeric - expected), sv.abs_err + expected_err,
                        sv.symbolic.has_value() && sv.symbolic->is_zero()});
    }
    return rows;
}

}  // namespace svzeta
