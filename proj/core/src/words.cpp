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

#include "svzeta/words.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace svzeta {

Word::Word(std::uint64_t bits, int weight) : bits_(bits), weight_(weight) {
    if (weight < 0 || weight > kMaxWeight) throw std::invalid_argument("Word: weight out of range");
    if (weight < 64 && (bits >> weight) != 0) throw std::invalid_argument("Word: bits exceed weight");
}

Word Word::parse(std::string_view text) {
    if (text.size() > static_cast<std::size_t>(kMaxWeight)) throw std::invalid_argument("Word::parse: word too long");
    std::uint64_t bits = 0;
    for (char c : text) {
        if (c != '0' && c != '1') throw std::invalid_argument("Word::parse: expected only '0'/'1' in '" + std::string(text) + "'");
        bits = (bits << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return Word(bits, static_cast<int>(text.size()));
}

Word Word::from_dense_index(std::size_t index) {
    const int weight = std::bit_width(index + 1) - 1;
    return Word(index + 1 - (std::size_t{1} << weight), weight);
}

Word Word::prefix(int length) const {
    if (length < 0 || length > weight_) throw std::out_of_range("Word::prefix");
    return Word(bits_ >> (weight_ - length), length);
}

Word Word::suffix(int length) const {
    if (length < 0 || length > weight_) throw std::out_of_range("Word::suffix");
    return Word(length == 0 ? 0 : bits_ & ((std::uint64_t{1} << length) - 1), length);
}

Word Word::concat(Word other) const {
    if (weight_ + other.weight_ > kMaxWeight) throw std::overflow_error("Word::concat: weight too large");
    return Word((bits_ << other.weight_) | other.bits_, weight_ + other.weight_);
}

Word Word::reversed() const {
    std::uint64_t out = 0;
    std::uint64_t in = bits_;
    for (int i = 0; i < weight_; ++i) {
        out = (out << 1) | (in & 1u);
        in >>= 1;
    }
    return Word(out, weight_);
}

Word Word::swapped() const {
    const std::uint64_t mask = weight_ == 0 ? 0 : (std::uint64_t{1} << weight_) - 1;
    return Word(~bits_ & mask, weight_);
}

int Word::count(Letter a) const noexcept {
    const int ones = std::popcount(bits_);
    return a == Letter::e1 ? ones : weight_ - ones;
}

std::string Word::str() const {
    std::string s(static_cast<std::size_t>(weight_), '0');
    for (int i = 0; i < weight_; ++i)
        if ((*this)[i] == Letter::e1) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

Composition::Composition(std::initializer_list<int> p) : Composition(std::vector<int>(p)) {}

Composition::Composition(std::vector<int> p) : parts(std::move(p)) {
    for (int n : parts)
        if (n < 1) throw std::invalid_argument("Composition: parts must be positive");
}

Composition Composition::parse(std::string_view text) {
    std::vector<int> parts;
    if (text.empty()) return Composition();
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        std::string_view field = text.substr(pos, comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
            throw std::invalid_argument("Composition::parse: malformed '" + std::string(text) + "'");
        parts.push_back(value);
        pos = comma + 1;
    }
    return Composition(std::move(parts));
}

int Composition::weight() const noexcept {
    int w = 0;
    for (int n : parts) w += n;
    return w;
}

std::string Composition::str() const {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts[i]);
    }
    return s;
}

// ---------------------------------------------------------------------------
// Shuffle product

namespace detail {
namespace {

std::vector<ShuffleTerm> compute_shuffle(Word u, Word v) {
    const int n = u.weight() + v.weight();
    const int k = u.weight();
    std::vector<std::uint64_t> codes;
    if (k == 0 || k == n) {
        codes.push_back(k == 0 ? v.bits() : u.bits());
    } else {
        // Enumerate the positions taken by u's letters: all n-bit masks of
        // popcount k (Gosper's hack), merging the two letter streams.
        std::uint64_t mask = (std::uint64_t{1} << k) - 1;
        const std::uint64_t limit = std::uint64_t{1} << n;
        while (mask < limit) {
            std::uint64_t code = 0;
            int iu = k - 1;
            int iv = v.weight() - 1;
            for (int pos = n - 1; pos >= 0; --pos) {
                std::uint64_t bit;
                if ((mask >> pos) & 1u) {
                    bit = (u.bits() >> iu--) & 1u;
                } else {
                    bit = (v.bits() >> iv--) & 1u;
                }
                code = (code << 1) | bit;
            }
            codes.push_back(code);
            const std::uint64_t c = mask & (~mask + 1);
            const std::uint64_t r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    std::sort(codes.begin(), codes.end());
    std::vector<ShuffleTerm> out;
    for (std::uint64_t code : codes) {
        if (!out.empty() && out.back().bits == code)
            ++out.back().count;
        else
            out.push_back({code, 1});
    }
    return out;
}

struct PairKey {
    std::uint64_t ub, vb;
    int uw, vw;
    bool operator==(const PairKey&) const = default;
};

struct PairKeyHash {
    std::size_t operator()(const PairKey& k) const noexcept {
        std::uint64_t h = k.ub * 0x9E3779B97F4A7C15ull;
        h ^= (k.vb + 0x632BE59BD9B4E019ull + (h << 6) + (h >> 2));
        h ^= static_cast<std::uint64_t>(k.uw) << 40 ^ static_cast<std::uint64_t>(k.vw) << 48;
        return std::hash<std::uint64_t>{}(h);
    }
};

std::shared_mutex g_shuffle_mutex;
std::unordered_map<PairKey, std::shared_ptr<const std::vector<ShuffleTerm>>, PairKeyHash> g_shuffle_cache;
std::atomic<int> g_shuffle_cap{16};

}  // namespace

std::shared_ptr<const std::vector<ShuffleTerm>> shuffle_terms(Word u, Word v) {
    if (v < u) std::swap(u, v);
    if (u.weight() + v.weight() > Word::kMaxWeight) throw std::overflow_error("shuffle: weight too large");
    if (u.weight() + v.weight() > g_shuffle_cap.load(std::memory_order_relaxed))
        return std::make_shared<const std::vector<ShuffleTerm>>(compute_shuffle(u, v));

    const PairKey key{u.bits(), v.bits(), u.weight(), v.weight()};
    {
        std::shared_lock lock(g_shuffle_mutex);
        if (auto it = g_shuffle_cache.find(key); it != g_shuffle_cache.end()) return it->second;
    }
    auto value = std::make_shared<const std::vector<ShuffleTerm>>(compute_shuffle(u, v));
    std::unique_lock lock(g_shuffle_mutex);
    auto [it, inserted] = g_shuffle_cache.emplace(key, std::move(value));
    return it->second;
}

}  // namespace detail

void set_shuffle_cache_weight_cap(int cap) { detail::g_shuffle_cap.store(cap); }
int shuffle_cache_weight_cap() { return detail::g_shuffle_cap.load(); }
void clear_shuffle_cache() {
    std::unique_lock lock(detail::g_shuffle_mutex);
    detail::g_shuffle_cache.clear();
}

WordSum shuffle(Word u, Word v) {
    const int weight = u.weight() + v.weight();
    std::vector<WordSum::Term> terms;
    for (const auto& t : *detail::shuffle_terms(u, v)) terms.emplace_back(Word(t.bits, weight), Rational(t.count));
    return WordSum::from_terms(std::move(terms));
}

WordSum shuffle(const WordSum& a, const WordSum& b) {
    std::vector<WordSum::Term> terms;
    for (const auto& [u, cu] : a) {
        for (const auto& [v, cv] : b) {
            const Rational c = cu * cv;
            const int weight = u.weight() + v.weight();
            for (const auto& t : *detail::shuffle_terms(u, v))
                terms.emplace_back(Word(t.bits, weight), c * Rational(t.count));
        }
    }
    return WordSum::from_terms(std::move(terms));
}

Word word_from_composition(const Composition& c) {
    Word w;
    for (int n : c.parts) {
        w = w.concat(Word::letter(Letter::e1));
        w = w.concat(Word(0, n - 1));
    }
    return w;
}

Composition composition_from_word(Word w) {
    if (w.empty() || w.front() != Letter::e1)
        throw std::invalid_argument("composition_from_word: word '" + w.str() + "' does not begin with e1");
    std::vector<int> parts;
    for (int i = 0; i < w.weight(); ++i) {
        if (w[i] == Letter::e1)
            parts.push_back(1);
        else
            ++parts.back();
    }
    return Composition(std::move(parts));
}

bool is_convergent(Word w) noexcept { return !w.empty() && w.front() == Letter::e1 && w.back() == Letter::e0; }

std::vector<std::pair<Word, Word>> deconcatenations(Word w) {
    std::vector<std::pair<Word, Word>> out;
    out.reserve(static_cast<std::size_t>(w.weight()) + 1);
    for (int k = 0; k <= w.weight(); ++k) out.emplace_back(w.prefix(k), w.suffix(w.weight() - k));
    return out;
}

std::vector<Word> words_of_weight(int weight) {
    if (weight < 0 || weight > 30) throw std::invalid_argument("words_of_weight: weight out of range");
    std::vector<Word> out;
    out.reserve(std::size_t{1} << weight);
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << weight); ++b) out.emplace_back(b, weight);
    return out;
}

std::vector<Composition> convergent_compositions(int max_weight) {
    std::vector<Composition> out;
    for (int weight = 2; weight <= max_weight; ++weight) {
        std::vector<Composition> level;
        // Convergent words of this weight: e1 ... e0.
        for (const Word& w : words_of_weight(weight))
            if (is_convergent(w)) level.push_back(composition_from_word(w));
        std::sort(level.begin(), level.end());
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

}  // namespace svzeta
