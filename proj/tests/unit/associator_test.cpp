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

#include <cmath>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "svzeta/associator.hpp"
#include "svzeta/polylog.hpp"
#include "test_support.hpp"

namespace svzeta {
namespace {

using SymS = NCSeries<MzvExpr>;

SymS sym(const char* w, const MzvExpr& c, int order) { return SymS::monomial(Word::parse(w), c, order); }
MzvExpr z(const Composition& c, Rational q = Rational(1)) { return MzvExpr::zeta(c, q); }

SymS reduce(const SymS& s) {
    SymS out(s.order());
    for (std::size_t i = 0; i < s.coefficients().size(); ++i) out.coefficients()[i] = reduce_duality(s.coefficients()[i]);
    return out;
}

TEST(Associator, SymbolicZInLowWeights) {
    const SymbolicAssociator a = build_Z_symbolic(3);
    EXPECT_EQ(a.kind, AssociatorKind::Z);
    const SymS& Z = a.series;
    EXPECT_EQ(Z[Word()], MzvExpr::one());
    EXPECT_TRUE(Z.weight_part(1).is_zero());
    // zeta(2) [e1, e0]
    EXPECT_EQ(Z.weight_part(2), sym("10", z({2}), 3) - sym("01", z({2}), 3));
    // [e1,[e1,e0]] and [e0,[e0,e1]] carry zeta(1,2) and zeta(3) before
    // duality identifies them.
    const SymS e1e1e0 = sym("110", MzvExpr::one(), 3) - sym("101", Rational(2), 3) + sym("011", MzvExpr::one(), 3);
    const SymS e0e0e1 = sym("001", MzvExpr::one(), 3) - sym("010", Rational(2), 3) + sym("100", MzvExpr::one(), 3);
    SymS expected(3);
    for (std::size_t i = 0; i < expected.coefficients().size(); ++i)
        expected.coefficients()[i] =
            z({1, 2}) * e1e1e0.coefficients()[i] + z({3}) * e0e0e1.coefficients()[i];
    EXPECT_EQ(Z.weight_part(3), expected);
    EXPECT_EQ(reduce(Z.weight_part(3)), reduce(expected));
}

TEST(Associator, SymbolicZIsGroupLike) {
    EXPECT_TRUE(is_group_like(build_Z_symbolic(7).series));
}

// Independent route to Z through the polylogarithm: z -> 1 - z maps the KZ
// equation to itself with e0 -> -e1, e1 -> -e0, so L(1 - u) = Z phi(L(u)) for
// that substitution phi, and Z = L(1/2) phi(L(1/2))^{-1}.
TEST(Associator, NumericZMatchesPolylogAtOneHalf) {
    const int n = 6;
    const NumericAssociator zn = build_Z_numeric(n);
    const NCSeries<Complex> l = eval_L(0.5, PathSpec::straight(0.5), n).L;
    NCSeries<Complex> phi(n);
    for (std::size_t i = 0; i < l.coefficients().size(); ++i) {
        const Word w = Word::from_dense_index(i);
        phi[w.swapped()] = (w.weight() % 2 ? -1.0 : 1.0) * l.coefficients()[i];
    }
    EXPECT_LT(max_abs(mul(l, inverse(phi)) - zn.series), 1e-9);
}

TEST(Associator, WLowWeights) {
    const SymbolicAssociator w = deligne_W_symbolic(3);
    EXPECT_EQ(w.kind, AssociatorKind::W);
    EXPECT_TRUE(w.series.weight_part(1).is_zero());
    EXPECT_TRUE(w.series.weight_part(2).is_zero());
    EXPECT_TRUE(w.series[Word::parse("10")].is_zero());
    const SymS z3 = build_Z_symbolic(3).series.weight_part(3);
    EXPECT_EQ(w.series.weight_part(3), Rational(2) * z3);
}

TEST(Associator, SymbolicWSolvesDefiningEquationExactly) {
    for (int n : {4, 6, 8}) {
        const SymS Z = build_Z_symbolic(n).series;
        const SymS W = deligne_W_symbolic(n).series;
        EXPECT_EQ(ihara_act(W, sigma_twist(Z)), Z) << "N=" << n;
        EXPECT_TRUE(is_group_like(W)) << "N=" << n;
    }
}

TEST(Associator, NumericWSolvesDefiningEquation) {
    const SvEngine e(13);
    const NCSeries<Complex> lhs = ihara_act(e.W_numeric().series, sigma_twist(e.Z_numeric().series));
    EXPECT_LT(max_abs(lhs - e.Z_numeric().series), 1e-9);
    EXPECT_LT(group_like_defect(e.W_numeric().series), 1e-8);
}

TEST(Associator, NumericWMatchesSymbolicWithinItsErrorEstimates) {
    const SvEngine e(8, 8);
    const NumericAssociator& wn = e.W_numeric();
    for (int k = 2; k <= 8; ++k)
        for (Word w : words_of_weight(k)) {
            const ExprValue v = eval_expr(e.W_symbolic()->series[w], 1e-12);
            EXPECT_LE(std::abs(wn.series[w].real() - v.value), wn.error_of(w) + v.abs_err) << w.str();
            EXPECT_EQ(wn.series[w].imag(), 0.0);
        }
}

TEST(Associator, SingleZetaValues) {
    const SvEngine e(11);
    for (int n = 1; n <= 5; ++n) {
        const double sv = e.zeta_sv(Composition{2 * n + 1}).numeric;
        const double zeta = mzv_value({2 * n + 1}, 1e-14).value;
        EXPECT_NEAR(sv / zeta, 2.0, 1e-8) << "n=" << n;
    }
    for (int n = 1; n <= 4; ++n) {
        Word w = Word::letter(Letter::e1);
        for (int i = 0; i < 2 * n - 1; ++i) w = w.concat(Word::letter(Letter::e0));
        EXPECT_NEAR(e.W_numeric().series[w].real(), 0.0, 1e-8) << w.str();
    }
}

TEST(Associator, ZetaSvTwoIsSymbolicallyZero) {
    const SvEngine e(4, 4);
    const SvValue v = e.zeta_sv(Composition{2});
    ASSERT_TRUE(v.symbolic.has_value());
    EXPECT_TRUE(v.symbolic->is_zero());
    EXPECT_EQ(v.numeric, 0.0);
    EXPECT_NEAR(e.zeta_sv(Composition{4}).numeric, 0.0, 1e-8);
}

TEST(Associator, ZetaSvFiveThree) {
    const SvEngine e(8);
    const IdentityCheck r = e.verify_identity({5, 3}, {{Rational(14), {{3}, {5}}}});
    EXPECT_LT(r.relative, 1e-8);
    EXPECT_LE(r.residual, r.abs_err + 1e-15);
}

TEST(Associator, ZetaSvErrors) {
    const SvEngine e(4);
    EXPECT_THROW(e.zeta_sv(Composition{2, 1}), std::invalid_argument);
    EXPECT_THROW(e.zeta_sv(Composition{5}), std::out_of_range);
    EXPECT_THROW(SvEngine(0), std::invalid_argument);
}

TEST(Associator, E1PrimeResidual) {
    const SymS e1p = e1_prime(deligne_W_symbolic(3).series);
    EXPECT_EQ(e1p.weight_part(1), sym("1", MzvExpr::one(), 3));
    for (int n : {3, 5, 8}) {
        const SymS r = e1_prime_residual(build_Z_symbolic(n).series, deligne_W_symbolic(n).series);
        EXPECT_TRUE(r.is_zero()) << "N=" << n;
    }
    const SvEngine e(8);
    EXPECT_LT(max_abs(e1_prime_residual(e.Z_numeric().series, e.W_numeric().series)), 1e-8);
}

TEST(Associator, SvValueJson) {
    const SvEngine e(3, 3);
    const nlohmann::json j = to_json(e.zeta_sv(Composition{1, 2}));
    EXPECT_EQ(j["composition"], nlohmann::json::array({1, 2}));
    EXPECT_EQ(j["word"], "110");
    EXPECT_EQ(j["symbolic"][0]["coeff"], "2/1");
    EXPECT_NEAR(j["numeric"].get<double>(), 2 * 1.2020569031595942, 1e-14);
}

}  // namespace
}  // namespace svzeta
