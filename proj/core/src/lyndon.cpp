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

#include "svzeta/lyndon.hpp"

#include <algorithm>
#include <stdexcept>

namespace svzeta {

WeightedAlphabet WeightedAlphabet::hoffman() { return {{{"3", 3}, {"2", 2}}}; }

WeightedAlphabet WeightedAlphabet::odd_f(int max_weight) {
    WeightedAlphabet a;
    for (int n = 3; n <= max_weight; n += 2) a.letters.push_back({"f" + std::to_string(n), n});
    return a;
}

bool is_lyndon(const LetterWord& w) {
    if (w.empty()) return false;
    for (std::size_t k = 1; k < w.size(); ++k) {
        if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + static_cast<std::ptrdiff_t>(k), w.end()))
            return false;
    }
    return true;
}

namespace {

// Depth-first over letters in alphabet order, so words come out sorted.
void extend(const WeightedAlphabet& alphabet, int remaining, LetterWord& current, std::vector<LetterWord>& out) {
    if (remaining == 0) {
        if (is_lyndon(current)) out.push_back(current);
        return;
    }
    for (std::size_t i = 0; i < alphabet.letters.size(); ++i) {
        const int wt = alphabet.letters[i].weight;
        if (wt > remaining) continue;
        current.push_back(static_cast<int>(i));
        // No letter of a Lyndon word is smaller than its first letter.
        if (current.size() == 1 || current.back() >= current.front()) extend(alphabet, remaining - wt, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<LetterWord> lyndon_words(const WeightedAlphabet& alphabet, int weight) {
    if (weight < 1) throw std::invalid_argument("lyndon_words: weight must be >= 1");
    for (const auto& l : alphabet.letters)
        if (l.weight < 1) throw std::invalid_argument("lyndon_words: letter weights must be positive");
    std::vector<LetterWord> out;
    LetterWord current;
    extend(alphabet, weight, current, out);
    return out;
}

std::string render(const WeightedAlphabet& alphabet, const LetterWord& w, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += sep;
        s += alphabet.letters.at(static_cast<std::size_t>(w[i])).label;
    }
    return s;
}

}  // namespace svzeta
