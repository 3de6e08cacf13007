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
// The model Hopf algebra Q<f3, f5, f7, ...> (x) Q[f2] and its dimension
// generating functions.

#ifndef SVZETA_FMODEL_HPP
#define SVZETA_FMODEL_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "svzeta/linear_combination.hpp"

namespace svzeta {

/* f_{i1} ... f_{in} f2^k with every i odd and >= 3.
 * Text form: "f3f5", "f3f5f2^2", "1" for the empty word; the parser also
 * takes comma-separated indices, "3,5".
 */
struct FWord {
    std::vector<int> indices;
    int f2_exponent = 0;

    FWord() = default;
    explicit FWord(std::vector<int> idx, int f2 = 0);

    static FWord parse(std::string_view text);

    int weight() const noexcept;
    bool empty() const noexcept { return indices.empty() && f2_exponent == 0; }
    FWord reversed() const;
    std::string str() const;

    friend bool operator==(const FWord&, const FWord&) = default;
    friend auto operator<=>(const FWord&, const FWord&) = default;
};

using FExpr = LinearCombination<FWord>;

// "2*f3f5 + 2*f5f3"; "0" when empty.
std::string render(const FExpr& e);

FWord concat(const FWord& a, const FWord& b);
// Left multiplication of every word by the letter f_a.
FExpr prepend(int a, const FExpr& e);

// The n+1 splits of the odd-letter part; f2^k is attached to the right
// factor, as Delta(f2) = 1 (x) f2.
std::vector<std::pair<FWord, FWord>> deconcat_coproduct(const FWord& w);

// Shuffle of the odd-letter parts; f2 exponents add.
FExpr shuffle(const FWord& u, const FWord& v);

// w -> sum_{uv = w} u sh reversed(v); f2 maps to 0.
FExpr sv_U(const FWord& w);
FExpr sv_U(const FExpr& e);

/* Dimensions for weights 0..max_weight (index = weight):
 *   dim_H   coefficients of 1 / (1 - t^2 - t^3),
 *   ell     defined by prod_{n>=1} (1 - t^n)^{-ell_n} = 1 / (1 - t^2 - t^3),
 *   dim_Hsv coefficients of prod_{n odd} (1 - t^n)^{-ell_n},
 *   dim_Lsv ell_n for odd n, 0 for even n.
 * dim L_N equals ell_N.
 */
struct DimTable {
    int max_weight = 0;
    std::vector<mpz_class> dim_H, ell, dim_Hsv, dim_Lsv;
};

DimTable dims(int max_weight);

// "N,dimH,dimL,dimHsv,dimLsv" followed by rows N = 1..max_weight.
std::string dims_csv(const DimTable& t);

}  // namespace svzeta

#endif  // SVZETA_FMODEL_HPP
