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

#include "svzeta/associator.hpp"
#include "svzeta/depth.hpp"
#include "test_support.hpp"

namespace svzeta {
namespace {

using testing::make_rng;
using testing::random_rational;

DepthPoly x(int depth, int i) { return DepthPoly::variable(depth, i); }
DepthPoly c(int depth, long long v) { return DepthPoly::constant(depth, Rational(v)); }

DepthPoly random_poly(testing::Rng& rng, int depth, int max_degree) {
    LinearCombination<Monomial> terms;
    for (int t = 0; t < 4; ++t) {
        Monomial m(static_cast<std::size_t>(depth), 0);
        const int deg = testing::uniform_int(rng, 0, max_degree);
        for (int k = 0; k < deg; ++k) ++m[static_cast<std::size_t>(testing::uniform_int(rng, 0, depth - 1))];
        terms = terms + LinearCombination<Monomial>(m, random_rational(rng));
    }
    return DepthPoly(depth, terms);
}

// Evaluates the displayed formulas at rational points without composing
// polynomials.
Rational ihara_11_at(const DepthPoly& f, const DepthPoly& g, Rational x1, Rational x2) {
    return f.eval({x1}) * g.eval({x2}) + f.eval({x2 - x1}) * (g.eval({x1}) - g.eval({x2}));
}

Rational ihara_12_at(const DepthPoly& f, const DepthPoly& g, Rational x1, Rational x2, Rational x3) {
    return f.eval({x1}) * g.eval({x2, x3}) + f.eval({x2 - x1}) * (g.eval({x1, x3}) - g.eval({x2, x3})) +
           f.eval({x3 - x2}) * (g.eval({x1, x2}) - g.eval({x1, x3}));
}

TEST(DepthPoly, Basics) {
    const DepthPoly p = x(2, 1) * x(2, 2) + c(2, 3);
    EXPECT_EQ(p.degree(), 2);
    EXPECT_EQ(p.eval({Rational(2), Rational(5)}), Rational(13));
    EXPECT_THROW(x(2, 3), std::out_of_range);
    EXPECT_THROW(x(1, 1) + x(2, 1), DepthMismatch);
    EXPECT_THROW(DepthPoly(0), std::invalid_argument);
}

TEST(LinIhara, ElevenExamples) {
    EXPECT_EQ(lin_ihara_11(c(1, 1), c(1, 1)), c(2, 1));
    EXPECT_EQ(lin_ihara_11(x(1, 1), c(1, 1)), x(2, 1));
    const DepthPoly d = x(2, 2) - x(2, 1);
    EXPECT_EQ(lin_ihara_11(x(1, 1), x(1, 1)), x(2, 1) * x(2, 2) - d * d);
    EXPECT_THROW(lin_ihara_11(c(2, 1), c(1, 1)), DepthMismatch);
}

TEST(LinIhara, TwelveExamples) {
    auto rng = make_rng(71);
    const DepthPoly g = random_poly(rng, 2, 4);
    EXPECT_EQ(lin_ihara_12(c(1, 1), g), g.compose({x(3, 1), x(3, 2)}));
    EXPECT_EQ(lin_ihara_12(x(1, 1), c(2, 1)), x(3, 1));
    EXPECT_THROW(lin_ihara_12(c(1, 1), c(1, 1)), DepthMismatch);
}

TEST(LinIhara, MatchesPointwiseEvaluation) {
    auto rng = make_rng(72);
    for (int trial = 0; trial < 30; ++trial) {
        const DepthPoly f = random_poly(rng, 1, 4), g1 = random_poly(rng, 1, 4), g2 = random_poly(rng, 2, 4);
        const DepthPoly p11 = lin_ihara_11(f, g1), p12 = lin_ihara_12(f, g2);
        for (int pt = 0; pt < 3; ++pt) {
            const Rational a = random_rational(rng), b = random_rational(rng), d = random_rational(rng);
            EXPECT_EQ(p11.eval({a, b}), ihara_11_at(f, g1, a, b));
            EXPECT_EQ(p12.eval({a, b, d}), ihara_12_at(f, g2, a, b, d));
        }
    }
}

TEST(LinIhara, Bilinear) {
    auto rng = make_rng(73);
    for (int trial = 0; trial < 30; ++trial) {
        const DepthPoly f = random_poly(rng, 1, 3), f2 = random_poly(rng, 1, 3);
        const DepthPoly g = random_poly(rng, 1, 3), g2 = random_poly(rng, 1, 3), h = random_poly(rng, 2, 3),
                        h2 = random_poly(rng, 2, 3);
        const Rational q = random_rational(rng);
        EXPECT_EQ(lin_ihara_11(q * f + f2, g), q * lin_ihara_11(f, g) + lin_ihara_11(f2, g));
        EXPECT_EQ(lin_ihara_11(f, q * g + g2), q * lin_ihara_11(f, g) + lin_ihara_11(f, g2));
        EXPECT_EQ(lin_ihara_12(q * f + f2, h), q * lin_ihara_12(f, h) + lin_ihara_12(f2, h));
        EXPECT_EQ(lin_ihara_12(f, q * h + h2), q * lin_ihara_12(f, h) + lin_ihara_12(f, h2));
    }
}

// Degrees add for monomial inputs (random coefficients can cancel leading
// terms of sums, so the inputs are single monomials).
TEST(LinIhara, DegreeAdditivity) {
    auto rng = make_rng(74);
    for (int trial = 0; trial < 30; ++trial) {
        const int a = testing::uniform_int(rng, 0, 5), b = testing::uniform_int(rng, 0, 5);
        const int b1 = testing::uniform_int(rng, 0, 3), b2 = testing::uniform_int(rng, 0, 3);
        const DepthPoly f(1, LinearCombination<Monomial>(Monomial{a}, Rational(1 + trial)));
        const DepthPoly g(1, LinearCombination<Monomial>(Monomial{b}, Rational(2)));
        const DepthPoly h(2, LinearCombination<Monomial>(Monomial{b1, b2}, Rational(-3)));
        EXPECT_EQ(lin_ihara_11(f, g).degree(), a + b);
        EXPECT_EQ(lin_ihara_12(f, h).degree(), a + b1 + b2);
    }
}

TEST(Depth1, SingleValuedSingleZetas) {
    const SvEngine e(8, 4);
    const auto rows = depth1_sv_check(e, 8);
    ASSERT_EQ(rows.size(), 7u);
    EXPECT_EQ(rows[0].n, 2);
    EXPECT_TRUE(rows[0].symbolic_zero);
    EXPECT_EQ(rows[0].sv, 0.0);
    for (const Depth1Row& r : rows) {
        EXPECT_LT(r.residual, 1e-8) << "n=" << r.n;
        if (r.n % 2 == 0) EXPECT_EQ(r.expected, 0.0);
    }
    EXPECT_NEAR(rows[1].expected, 2 * 1.2020569031595942854, 1e-14);
    EXPECT_THROW(depth1_sv_check(e, 9), std::out_of_range);
}

}  // namespace
}  // namespace svzeta
