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

#include "svzeta/fmodel.hpp"
#include "svzeta/lyndon.hpp"
#include "svzeta/words.hpp"
#include "test_support.hpp"

namespace svzeta {
namespace {

using testing::brute_force_shuffle;
using testing::make_rng;
using testing::random_word;

WordSum as_sum(const std::map<Word, long>& m) {
    std::vector<WordSum::Term> terms;
    for (const auto& [w, c] : m) terms.emplace_back(w, Rational(c, 1));
    return WordSum::from_terms(std::move(terms));
}

long binomial(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

TEST(Word, ParseAndPrint) {
    const Word w = Word::parse("10010");
    EXPECT_EQ(w.weight(), 5);
    EXPECT_EQ(w.str(), "10010");
    EXPECT_EQ(w[0], Letter::e1);
    EXPECT_EQ(w[1], Letter::e0);
    EXPECT_THROW(Word::parse("102"), std::invalid_argument);
}

TEST(Word, DenseIndexRoundTrip) {
    for (std::size_t i = 0; i < 2047; ++i) EXPECT_EQ(Word::from_dense_index(i).dense_index(), i);
    EXPECT_EQ(Word().dense_index(), 0u);
    EXPECT_EQ(Word::parse("0").dense_index(), 1u);
    EXPECT_EQ(Word::parse("1").dense_index(), 2u);
}

TEST(Shuffle, Examples) {
    EXPECT_EQ(shuffle(Word(), Word::parse("101")), WordSum(Word::parse("101"), Rational(1)));
    EXPECT_EQ(shuffle(Word::parse("0"), Word::parse("1")),
              WordSum(Word::parse("01"), Rational(1)) + WordSum(Word::parse("10"), Rational(1)));
    const WordSum s = shuffle(Word::parse("10"), Word::parse("10"));
    EXPECT_EQ(s, WordSum(Word::parse("1010"), Rational(2)) + WordSum(Word::parse("1100"), Rational(4)));
}

TEST(Shuffle, MatchesBruteForceEnumeration) {
    auto rng = make_rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Word u = random_word(rng, testing::uniform_int(rng, 0, 6));
        const Word v = random_word(rng, testing::uniform_int(rng, 0, 6));
        EXPECT_EQ(shuffle(u, v), as_sum(brute_force_shuffle(u, v))) << u.str() << " sh " << v.str();
    }
}

TEST(Shuffle, CommutativeAndAssociative) {
    auto rng = make_rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const Word u = random_word(rng, testing::uniform_int(rng, 0, 3));
        const Word v = random_word(rng, testing::uniform_int(rng, 0, 3));
        const Word w = random_word(rng, testing::uniform_int(rng, 0, 2));
        EXPECT_EQ(shuffle(u, v), shuffle(v, u));
        const WordSum su(u, Rational(1)), sv(v, Rational(1)), sw(w, Rational(1));
        EXPECT_EQ(shuffle(shuffle(su, sv), sw), shuffle(su, shuffle(sv, sw)));
    }
}

TEST(Shuffle, CoefficientMassIsBinomial) {
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; a + b <= 12; ++b) {
            auto rng = make_rng(static_cast<std::uint64_t>(100 * a + b));
            const Word u = random_word(rng, a), v = random_word(rng, b);
            Rational mass;
            for (const auto& [w, c] : shuffle(u, v)) mass += c;
            EXPECT_EQ(mass, Rational(binomial(a + b, a), 1));
        }
}

TEST(Shuffle, PreservesConvergence) {
    auto rng = make_rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const Word u = testing::random_convergent_word(rng, testing::uniform_int(rng, 2, 5));
        const Word v = testing::random_convergent_word(rng, testing::uniform_int(rng, 2, 5));
        for (const auto& [w, c] : shuffle(u, v)) EXPECT_TRUE(is_convergent(w)) << w.str();
    }
}

TEST(Composition, WordMap) {
    EXPECT_EQ(word_from_composition({2}), Word::parse("10"));
    EXPECT_EQ(word_from_composition({1, 3}), Word::parse("1100"));
    EXPECT_EQ(word_from_composition({3, 5, 3}), Word::parse("10010000100"));
    EXPECT_EQ(composition_from_word(Word::parse("10")), Composition({2}));
    EXPECT_EQ(composition_from_word(Word::parse("1100")), Composition({1, 3}));
    EXPECT_THROW(composition_from_word(Word::parse("01")), std::invalid_argument);
}

TEST(Composition, RoundTripUpToWeight12) {
    for (int n = 1; n <= 12; ++n)
        for (Word w : words_of_weight(n)) {
            if (w.front() != Letter::e1) continue;
            const Composition c = composition_from_word(w);
            EXPECT_EQ(c.weight(), n);
            EXPECT_EQ(word_from_composition(c), w);
            EXPECT_EQ(composition_from_word(word_from_composition(c)), c);
        }
}

TEST(Composition, ParseRejectsGarbage) {
    EXPECT_EQ(Composition::parse("3,5,3"), Composition({3, 5, 3}));
    EXPECT_THROW(Composition::parse("3,,5"), std::invalid_argument);
    EXPECT_THROW(Composition::parse("3,x"), std::invalid_argument);
    EXPECT_THROW(Composition::parse("0"), std::invalid_argument);
}

TEST(Convergence, Examples) {
    EXPECT_TRUE(is_convergent(Word::parse("10")));
    EXPECT_FALSE(is_convergent(Word::parse("1")));
    EXPECT_FALSE(is_convergent(Word()));
    EXPECT_FALSE(is_convergent(Word::parse("01")));
    EXPECT_FALSE(is_convergent(Word::parse("101")));
}

TEST(Deconcatenation, Examples) {
    const auto d = deconcatenations(Word::parse("01"));
    ASSERT_EQ(d.size(), 3u);
    EXPECT_EQ(d[0], std::make_pair(Word(), Word::parse("01")));
    EXPECT_EQ(d[1], std::make_pair(Word::parse("0"), Word::parse("1")));
    EXPECT_EQ(d[2], std::make_pair(Word::parse("01"), Word()));
    EXPECT_EQ(deconcatenations(Word()).size(), 1u);
    EXPECT_EQ(deconcatenations(Word::parse("100")).size(), 4u);
}

TEST(ConvergentCompositions, OrderedByWeightThenLexicographically) {
    const auto cs = convergent_compositions(4);
    const std::vector<Composition> expected = {{2}, {1, 2}, {3}, {1, 1, 2}, {1, 3}, {2, 2}, {4}};
    EXPECT_EQ(cs, expected);
    EXPECT_TRUE(convergent_compositions(1).empty());
}

// Lyndon words by the brute-force definition: strictly smaller than every
// proper rotation.
bool lyndon_oracle(const LetterWord& w) {
    for (std::size_t k = 1; k < w.size(); ++k) {
        LetterWord rot(w.begin() + static_cast<long>(k), w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(k));
        if (!(w < rot)) return false;
    }
    return !w.empty();
}

TEST(Lyndon, Examples) {
    const auto h = WeightedAlphabet::hoffman();
    const auto w3 = lyndon_words(h, 3);
    ASSERT_EQ(w3.size(), 1u);
    EXPECT_EQ(render(h, w3[0]), "3");
    EXPECT_TRUE(lyndon_words(h, 4).empty());
    const auto w11 = lyndon_words(h, 11);
    ASSERT_EQ(w11.size(), 2u);
    EXPECT_EQ(render(h, w11[0]), "3,3,3,2");
    EXPECT_EQ(render(h, w11[1]), "3,2,2,2,2");
}

TEST(Lyndon, AgreesWithRotationDefinition) {
    const auto h = WeightedAlphabet::hoffman();
    for (int n = 1; n <= 16; ++n) {
        std::vector<LetterWord> brute;
        // All words over {0,1} with letter weights {3,2} summing to n.
        std::function<void(LetterWord&, int)> rec = [&](LetterWord& w, int left) {
            if (left == 0) {
                if (lyndon_oracle(w)) brute.push_back(w);
                return;
            }
            for (int a = 0; a < 2; ++a) {
                const int wt = h.letters[static_cast<std::size_t>(a)].weight;
                if (wt > left) continue;
                w.push_back(a);
                rec(w, left - wt);
                w.pop_back();
            }
        };
        LetterWord w;
        rec(w, n);
        auto got = lyndon_words(h, n);
        std::sort(got.begin(), got.end());
        std::sort(brute.begin(), brute.end());
        EXPECT_EQ(got, brute) << "weight " << n;
        for (const auto& x : got) EXPECT_TRUE(is_lyndon(x));
    }
}

TEST(Lyndon, HoffmanCountsMatchGeneratingFunction) {
    const DimTable t = dims(20);
    for (int n = 1; n <= 20; ++n)
        EXPECT_EQ(mpz_class(static_cast<unsigned long>(lyndon_words(WeightedAlphabet::hoffman(), n).size())),
                  t.ell[static_cast<std::size_t>(n)])
            << "weight " << n;
}

// The odd letters f3, f5, ... generate the same algebra apart from f2, so
// their Lyndon counts agree with ell_n except in weight 2.
TEST(Lyndon, OddAlphabetCountsMatchApartFromWeightTwo) {
    const DimTable t = dims(20);
    const auto odd = WeightedAlphabet::odd_f(20);
    for (int n = 1; n <= 20; ++n) {
        const long count = static_cast<long>(lyndon_words(odd, n).size()) + (n == 2 ? 1 : 0);
        EXPECT_EQ(mpz_class(count), t.ell[static_cast<std::size_t>(n)]) << "weight " << n;
    }
}

}  // namespace
}  // namespace svzeta
