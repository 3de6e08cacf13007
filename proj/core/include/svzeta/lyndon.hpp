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
// Lyndon words over a finite ordered alphabet whose letters carry weights.

#ifndef SVZETA_LYNDON_HPP
#define SVZETA_LYNDON_HPP

#include <string>
#include <vector>

namespace svzeta {

/* An ordered alphabet. Letter i is smaller than letter j iff i < j; the order
 * is whatever the caller lists, not the numeric order of weights.
 */
struct WeightedAlphabet {
    struct Letter {
        std::string label;
        int weight;
    };
    std::vector<Letter> letters;

    // {3 < 2}: Hoffman's alphabet, letters labelled by their weights.
    static WeightedAlphabet hoffman();
    // {f3 < f5 < f7 < ...}, all odd letters of weight <= max_weight.
    static WeightedAlphabet odd_f(int max_weight);
};

// A word as a sequence of letter indices into a WeightedAlphabet.
using LetterWord = std::vector<int>;

// Strictly smaller than each of its proper nonempty suffixes.
bool is_lyndon(const LetterWord& w);

// All Lyndon words of the given total weight, in lexicographic order
// (a proper prefix sorts first).
std::vector<LetterWord> lyndon_words(const WeightedAlphabet& alphabet, int weight);

std::string render(const WeightedAlphabet& alphabet, const LetterWord& w, const std::string& sep = ",");

}  // namespace svzeta

#endif  // SVZETA_LYNDON_HPP
