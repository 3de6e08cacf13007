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

#include "svzeta/fmodel.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace svzeta {

namespace {

void check_index(int i) {
    if (i < 3 || i % 2 == 0) throw std::invalid_argument("FWord: index " + std::to_string(i) + " is not odd and >= 3");
}

int parse_int(std::string_view s, std::string_view what) {
    int v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty())
        throw std::invalid_argument("FWord::parse: bad " + std::string(what) + " '" + std::string(s) + "'");
    return v;
}

}  // namespace

FWord::FWord(std::vector<int> idx, int f2) : indices(std::move(idx)), f2_exponent(f2) {
    for (int i : indices) check_index(i);
    if (f2 < 0) throw std::invalid_argument("FWord: negative f2 exponent");
}

FWord FWord::parse(std::string_view text) {
    if (text == "1" || text.empty()) return {};
    std::vector<int> idx;
    int f2 = 0;
    if (text.front() != 'f') {
        std::size_t start = 0;
        while (start <= text.size()) {
            const std::size_t comma = std::min(text.find(',', start), text.size());
            idx.push_back(parse_int(text.substr(start, comma - start), "index"));
            start = comma + 1;
        }
        return FWord(std::move(idx));
    }
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] != 'f') throw std::invalid_argument("FWord::parse: expected 'f' in '" + std::string(text) + "'");
        std::size_t end = pos + 1;
        while (end < text.size() && text[end] >= '0' && text[end] <= '9') ++end;
        const int i = parse_int(text.substr(pos + 1, end - pos - 1), "index");
        if (i == 2) {
            int e = 1;
            if (end < text.size() && text[end] == '^') {
                std::size_t e_end = end + 1;
                while (e_end < text.size() && text[e_end] >= '0' && text[e_end] <= '9') ++e_end;
                e = parse_int(text.substr(end + 1, e_end - end - 1), "exponent");
                end = e_end;
            }
            f2 += e;
        } else {
            idx.push_back(i);
        }
        pos = end;
    }
    return FWord(std::move(idx), f2);
}

int FWord::weight() const noexcept { return std::accumulate(indices.begin(), indices.end(), 0) + 2 * f2_exponent; }

FWord FWord::reversed() const {
    FWord out = *this;
    std::reverse(out.indices.begin(), out.indices.end());
    return out;
}

std::string FWord::str() const {
    if (empty()) return "1";
    std::string s;
    for (int i : indices) s += "f" + std::to_string(i);
    if (f2_exponent == 1) s += "f2";
    if (f2_exponent > 1) s += "f2^" + std::to_string(f2_exponent);
    return s;
}

std::string render(const FExpr& e) {
    if (e.is_zero()) return "0";
    std::string s;
    for (const auto& [w, c] : e) {
        if (!s.empty()) s += " + ";
        s += c.str() + "*" + w.str();
    }
    return s;
}

FWord concat(const FWord& a, const FWord& b) {
    FWord out = a;
    out.indices.insert(out.indices.end(), b.indices.begin(), b.indices.end());
    out.f2_exponent += b.f2_exponent;
    return out;
}

FExpr prepend(int a, const FExpr& e) {
    check_index(a);
    std::vector<FExpr::Term> raw;
    for (const auto& [w, c] : e) raw.emplace_back(concat(FWord({a}), w), c);
    return FExpr::from_terms(std::move(raw));
}

std::vector<std::pair<FWord, FWord>> deconcat_coproduct(const FWord& w) {
    std::vector<std::pair<FWord, FWord>> out;
    const auto n = static_cast<std::ptrdiff_t>(w.indices.size());
    for (std::ptrdiff_t k = 0; k <= n; ++k) {
        FWord left(std::vector<int>(w.indices.begin(), w.indices.begin() + k));
        FWord right(std::vector<int>(w.indices.begin() + k, w.indices.end()), w.f2_exponent);
        out.emplace_back(std::move(left), std::move(right));
    }
    return out;
}

namespace {

void shuffle_into(const std::vector<int>& u, std::size_t i, const std::vector<int>& v, std::size_t j,
                  std::vector<int>& cur, int f2, std::vector<FExpr::Term>& out) {
    if (i == u.size() && j == v.size()) {
        out.emplace_back(FWord(cur, f2), Rational(1));
        return;
    }
    if (i < u.size()) {
        cur.push_back(u[i]);
        shuffle_into(u, i + 1, v, j, cur, f2, out);
        cur.pop_back();
    }
    if (j < v.size()) {
        cur.push_back(v[j]);
        shuffle_into(u, i, v, j + 1, cur, f2, out);
        cur.pop_back();
    }
}

}  // namespace

FExpr shuffle(const FWord& u, const FWord& v) {
    std::vector<FExpr::Term> raw;
    std::vector<int> cur;
    shuffle_into(u.indices, 0, v.indices, 0, cur, u.f2_exponent + v.f2_exponent, raw);
    return FExpr::from_terms(std::move(raw));
}

FExpr sv_U(const FWord& w) {
    if (w.f2_exponent > 0) return {};
    FExpr out;
    for (const auto& [u, v] : deconcat_coproduct(w)) out += shuffle(u, v.reversed());
    return out;
}

FExpr sv_U(const FExpr& e) {
    FExpr out;
    for (const auto& [w, c] : e) out += c * sv_U(w);
    return out;
}

// ---------------------------------------------------------------------------

DimTable dims(int max_weight) {
    if (max_weight < 1) throw std::invalid_argument("dims: max_weight must be >= 1");
    const auto n = static_cast<std::size_t>(max_weight);
    DimTable t;
    t.max_weight = max_weight;

    // P(t) = 1 / (1 - t^2 - t^3).
    std::vector<mpz_class> p(n + 1, 0);
    p[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k >= 2) p[k] += p[k - 2];
        if (k >= 3) p[k] += p[k - 3];
    }
    t.dim_H = p;

    // c_m = [t^m] t P'/P = sum_{d | m} d ell_d. Since 1/P = 1 - t^2 - t^3,
    // t P'/P = -t (1/P)' P = (2 t^2 + 3 t^3) P.
    std::vector<mpz_class> c(n + 1, 0);
    for (std::size_t m = 1; m <= n; ++m) {
        if (m >= 2) c[m] += 2 * p[m - 2];
        if (m >= 3) c[m] += 3 * p[m - 3];
    }
    t.ell.assign(n + 1, 0);
    for (std::size_t m = 1; m <= n; ++m) {
        mpz_class rest = c[m];
        for (std::size_t d = 1; d < m; ++d)
            if (m % d == 0) rest -= static_cast<unsigned long>(d) * t.ell[d];
        if (!mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(m)))
            throw std::logic_error("dims: non-integral Lie dimension");
        t.ell[m] = rest / static_cast<unsigned long>(m);
    }

    // prod_{k odd} (1 - t^k)^{-ell_k}: multiply in one factor 1/(1 - t^k) at a time.
    std::vector<mpz_class> hsv(n + 1, 0);
    hsv[0] = 1;
    for (std::size_t k = 1; k <= n; k += 2) {
        for (mpz_class e = 0; e < t.ell[k]; ++e)
            for (std::size_t m = k; m <= n; ++m) hsv[m] += hsv[m - k];
    }
    t.dim_Hsv = hsv;

    t.dim_Lsv.assign(n + 1, 0);
    for (std::size_t m = 1; m <= n; m += 2) t.dim_Lsv[m] = t.ell[m];
    return t;
}

std::string dims_csv(const DimTable& t) {
    std::string s = "N,dimH,dimL,dimHsv,dimLsv\n";
    for (int k = 1; k <= t.max_weight; ++k) {
        const auto i = static_cast<std::size_t>(k);
        s += std::to_string(k) + "," + t.dim_H[i].get_str() + "," + t.ell[i].get_str() + "," + t.dim_Hsv[i].get_str() +
             "," + t.dim_Lsv[i].get_str() + "\n";
    }
    return s;
}

}  // namespace svzeta
