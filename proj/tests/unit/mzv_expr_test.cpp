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

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "svzeta/mzv_expr.hpp"
#include "svzeta/numerics.hpp"
#include "test_support.hpp"

namespace svzeta {
namespace {

using testing::make_rng;
using testing::uniform_int;

MzvExpr z(const Composition& c, Rational q = Rational(1)) { return MzvExpr::zeta(c, q); }

// Regularized value of a sum of words.
MzvExpr regularize_sum(const WordSum& s) {
    MzvExpr out;
    for (const auto& [w, c] : s) out = out + c * regularize(w);
    return out;
}

TEST(MzvMul, Examples) {
    EXPECT_EQ(MzvExpr::one() * z({2}), z({2}));
    EXPECT_EQ(z({2}) * z({2}), z({2, 2}, Rational(2)) + z({1, 3}, Rational(4)));
    const MzvExpr p = z({2}) * z({3});
    Rational mass;
    for (const auto& [w, c] : p.terms()) mass += c;
    EXPECT_EQ(mass, Rational(10));
    EXPECT_EQ(p, z({1, 4}, Rational(6)) + z({2, 3}, Rational(3)) + z({3, 2}));
}

TEST(MzvMul, CommutativeAndAssociative) {
    auto rng = make_rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        const int a = uniform_int(rng, 2, 4), b = uniform_int(rng, 2, 4), c = 2;
        const MzvExpr x = MzvExpr::zeta(testing::random_convergent_word(rng, a), testing::random_rational(rng));
        const MzvExpr y = MzvExpr::zeta(testing::random_convergent_word(rng, b), testing::random_rational(rng));
        const MzvExpr w = MzvExpr::zeta(testing::random_convergent_word(rng, c));
        EXPECT_EQ(x * y, y * x);
        if (a + b + c <= 10) EXPECT_EQ((x * y) * w, x * (y * w));
    }
}

TEST(Regularize, Examples) {
    EXPECT_EQ(regularize(Word::parse("10")), z({2}));
    EXPECT_TRUE(regularize(Word::parse("1")).is_zero());
    EXPECT_TRUE(regularize(Word::parse("0")).is_zero());
    EXPECT_EQ(regularize(Word::parse("01")), z({2}, Rational(-1)));
    EXPECT_EQ(regularize(Word()), MzvExpr::one());
}

TEST(Regularize, IsShuffleHomomorphism) {
    for (int n = 1; n <= 10; ++n)
        for (int a = 1; a < n; ++a) {
            auto rng = make_rng(static_cast<std::uint64_t>(1000 + 16 * n + a));
            for (int trial = 0; trial < 3; ++trial) {
                const Word u = testing::random_word(rng, a), v = testing::random_word(rng, n - a);
                EXPECT_EQ(regularize_sum(shuffle(u, v)), regularize(u) * regularize(v)) << u.str() << " " << v.str();
            }
        }
}

TEST(Regularize, IdentityOnConvergentWords) {
    for (int n = 2; n <= 8; ++n)
        for (Word w : words_of_weight(n))
            if (is_convergent(w)) EXPECT_EQ(regularize(w), MzvExpr::zeta(w));
}

TEST(Regularize, EveryTermIsConvergent) {
    for (Word w : words_of_weight(7))
    {
        const MzvExpr r = regularize(w);
        for (const auto& [u, c] : r.terms()) EXPECT_TRUE(is_convergent(u)) << w.str() << " -> " << u.str();
    }
}

TEST(Sigma, ConjugatesComplexCoefficients) {
    EXPECT_EQ(sigma_on_expr(std::complex<double>(1.0, 2.0)), std::complex<double>(1.0, -2.0));
}

TEST(MzvExpr, ShuffleIdentityHoldsNumerically) {
    const ExprValue lhs = eval_expr(z({2}) * z({2}), 1e-12);
    const ExprValue rhs = eval_expr(z({2, 2}, Rational(2)) + z({1, 3}, Rational(4)), 1e-12);
    const ExprValue z2 = eval_expr(z({2}), 1e-12);
    EXPECT_NEAR(lhs.value, z2.value * z2.value, 2e-9);
    EXPECT_NEAR(rhs.value, z2.value * z2.value, 1e-8);
}

TEST(MzvExpr, Json) {
    const auto j = (z({3, 5}, Rational(3, 7)) + z({2})).to_json();
    ASSERT_EQ(j.size(), 2u);
    EXPECT_EQ(j[0]["coeff"], "1/1");
    EXPECT_EQ(j[0]["composition"], nlohmann::json::array({2}));
    EXPECT_EQ(j[1]["coeff"], "3/7");
    EXPECT_EQ(z({2}, Rational(0)).str(), "0");
}

}  // namespace
}  // namespace svzeta
