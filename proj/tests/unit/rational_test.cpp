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

#include "svzeta/rational.hpp"
#include "test_support.hpp"

namespace svzeta {
namespace {

TEST(Rational, Normalizes) {
    EXPECT_EQ(Rational(2, 4), Rational(1, 2));
    EXPECT_EQ(Rational(3, -6), Rational(-1, 2));
    EXPECT_EQ(Rational(3, -6).str(), "-1/2");
    EXPECT_EQ(Rational(4, 2).str(), "2");
    EXPECT_THROW(Rational(1, 0), std::domain_error);
    EXPECT_EQ(Rational::parse("-6/4"), Rational(-3, 2));
    EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
}

// Arithmetic checked against GMP rationals, including values that overflow
// 64-bit numerators.
TEST(Rational, MatchesGmpOnRandomChains) {
    auto rng = testing::make_rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        Rational a(1);
        mpq_class ref(1);
        for (int step = 0; step < 30; ++step) {
            const long long p = testing::uniform_int(rng, -1000000, 1000000), q = testing::uniform_int(rng, 1, 1000000);
            const Rational r(p, q);
            mpq_class rq(static_cast<long>(p), static_cast<unsigned long>(q));
            rq.canonicalize();
            switch (testing::uniform_int(rng, 0, 3)) {
            case 0: a += r; ref += rq; break;
            case 1: a -= r; ref -= rq; break;
            case 2: a *= r; ref *= rq; break;
            default:
                if (p != 0) { a = a / r; ref /= rq; }
            }
            ASSERT_EQ(a.to_mpq(), ref);
        }
        EXPECT_EQ(a.sign(), sgn(ref));
    }
}

TEST(Rational, Ordering) {
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_LT(Rational(-1, 2), Rational(-1, 3));
    EXPECT_NEAR(Rational(1, 3).to_double(), 1.0 / 3, 1e-16);
}

}  // namespace
}  // namespace svzeta
