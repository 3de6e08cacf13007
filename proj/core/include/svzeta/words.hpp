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
// Words in the two letters e0 = dz/z and e1 = dz/(1-z), their shuffle
// product, and the dictionary between words and compositions.

#ifndef SVZETA_WORDS_HPP
#define SVZETA_WORDS_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "svzeta/linear_combination.hpp"

namespace svzeta {

enum class Letter : std::uint8_t { e0 = 0, e1 = 1 };

/* A word over {e0, e1}, packed into the low `weight` bits of an integer.
 * The first letter is the most significant bit, so for words of equal weight
 * numeric order on the bits is lexicographic order with e0 < e1.
 * Text form is a string of '0'/'1', e.g. e1e0e0 <-> "100".
 */
class Word {
public:
    static constexpr int kMaxWeight = 62;

    constexpr Word() noexcept = default;
    Word(std::uint64_t bits, int weight);

    static Word parse(std::string_view text);
    static Word letter(Letter a) { return Word(static_cast<std::uint64_t>(a), 1); }
    static Word from_dense_index(std::size_t index);

    constexpr int weight() const noexcept { return weight_; }
    constexpr std::uint64_t bits() const noexcept { return bits_; }
    constexpr bool empty() const noexcept { return weight_ == 0; }

    Letter operator[](int i) const noexcept {
        return static_cast<Letter>((bits_ >> (weight_ - 1 - i)) & 1u);
    }
    Letter front() const noexcept { return (*this)[0]; }
    Letter back() const noexcept { return static_cast<Letter>(bits_ & 1u); }

    Word prefix(int length) const;
    Word suffix(int length) const;
    Word concat(Word other) const;
    Word reversed() const;
    // The letter swap e0 <-> e1.
    Word swapped() const;
    int count(Letter a) const noexcept;

    // Position of this word in the dense layout of all words of weight <= N,
    // ordered by weight then lexicographically: 2^weight - 1 + bits.
    std::size_t dense_index() const noexcept { return (std::size_t{1} << weight_) - 1 + bits_; }

    std::string str() const;

    friend constexpr bool operator==(const Word&, const Word&) = default;
    friend constexpr std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
        return a.bits_ <=> b.bits_;
    }

private:
    std::uint64_t bits_ = 0;
    int weight_ = 0;
};

inline Word operator*(Word a, Word b) { return a.concat(b); }

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
        return std::hash<std::uint64_t>{}(w.bits() * 0x9E3779B97F4A7C15ull ^ static_cast<std::uint64_t>(w.weight()));
    }
};

// Number of words of weight <= order.
inline std::size_t dense_size(int order) { return (std::size_t{1} << (order + 1)) - 1; }

/* A tuple (n1, ..., nr) of positive integers; convergent iff nr >= 2.
 * Text form: comma-separated integers, e.g. "3,5,3".
 */
struct Composition {
    std::vector<int> parts;

    Composition() = default;
    Composition(std::initializer_list<int> p);
    explicit Composition(std::vector<int> p);

    static Composition parse(std::string_view text);

    int weight() const noexcept;
    int depth() const noexcept { return static_cast<int>(parts.size()); }
    bool is_convergent() const noexcept { return !parts.empty() && parts.back() >= 2; }
    std::string str() const;

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition&, const Composition&) = default;
};

using WordSum = LinearCombination<Word>;

// All interleavings of u and v, with multiplicity.
WordSum shuffle(Word u, Word v);
// Bilinear extension.
WordSum shuffle(const WordSum& a, const WordSum& b);

// e1 e0^{n1-1} ... e1 e0^{nr-1}
Word word_from_composition(const Composition& c);
// Inverse map; throws std::invalid_argument unless w begins with e1.
Composition composition_from_word(Word w);

// Nonempty, begins with e1 and ends with e0.
bool is_convergent(Word w) noexcept;

// The |w|+1 splits w = uv, from (empty, w) to (w, empty).
std::vector<std::pair<Word, Word>> deconcatenations(Word w);

// All words of the given weight in lexicographic order.
std::vector<Word> words_of_weight(int weight);
// Convergent compositions of weight <= max_weight, ordered by weight then
// lexicographically.
std::vector<Composition> convergent_compositions(int max_weight);

namespace detail {

struct ShuffleTerm {
    std::uint64_t bits;
    std::int64_t count;
};

// Memoized shuffle of two words, as (bits, multiplicity) pairs sorted by bits.
// All terms have weight |u|+|v|. Pairs with |u|+|v| above the cache weight cap
// are computed on demand and not stored. Safe for concurrent use.
std::shared_ptr<const std::vector<ShuffleTerm>> shuffle_terms(Word u, Word v);

}  // namespace detail

void set_shuffle_cache_weight_cap(int cap);
int shuffle_cache_weight_cap();
void clear_shuffle_cache();

}  // namespace svzeta

#endif  // SVZETA_WORDS_HPP
