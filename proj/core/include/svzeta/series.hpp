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
// Truncated non-commutative power series in e0, e1 and the Ihara action.

#ifndef SVZETA_SERIES_HPP
#define SVZETA_SERIES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "svzeta/ring.hpp"
#include "svzeta/words.hpp"

namespace svzeta {

struct TruncationMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/* A formal series sum_w c_w w truncated at weight N.
 *
 * Coefficients of every word of weight <= N are stored densely in the order
 * of Word::dense_index(). Nothing above weight N is stored or consulted.
 * Binary operations require equal truncation orders and throw
 * TruncationMismatch otherwise; re-truncation is always explicit.
 */
template <CoefficientRing R>
class NCSeries {
public:
    using Traits = RingTraits<R>;

    explicit NCSeries(int order) : order_(check_order(order)), coeffs_(dense_size(order), Traits::zero()) {}

    static NCSeries one(int order) {
        NCSeries s(order);
        s.coeffs_[0] = Traits::one();
        return s;
    }
    static NCSeries letter(Letter a, int order) { return monomial(Word::letter(a), Traits::one(), order); }
    static NCSeries monomial(Word w, R c, int order) {
        NCSeries s(order);
        if (w.weight() <= order) s.coeffs_[w.dense_index()] = std::move(c);
        return s;
    }

    int order() const noexcept { return order_; }

    const R& operator[](Word w) const { return coeffs_[checked_index(w)]; }
    R& operator[](Word w) { return coeffs_[checked_index(w)]; }

    std::span<const R> coefficients() const noexcept { return coeffs_; }
    std::span<R> coefficients() noexcept { return coeffs_; }

    // Drops every coefficient above weight new_order (<= order()).
    NCSeries truncated(int new_order) const {
        if (new_order > order_) throw TruncationMismatch("NCSeries::truncated: cannot raise the truncation order");
        NCSeries out(new_order);
        std::copy_n(coeffs_.begin(), out.coeffs_.size(), out.coeffs_.begin());
        return out;
    }
    // Same coefficients, zero above the old order.
    NCSeries extended(int new_order) const {
        if (new_order < order_) throw TruncationMismatch("NCSeries::extended: cannot lower the truncation order");
        NCSeries out(new_order);
        std::copy(coeffs_.begin(), coeffs_.end(), out.coeffs_.begin());
        return out;
    }

    // The homogeneous part of the given weight, as a series of the same order.
    NCSeries weight_part(int weight) const {
        NCSeries out(order_);
        if (weight < 0 || weight > order_) return out;
        const std::size_t lo = (std::size_t{1} << weight) - 1;
        const std::size_t hi = (std::size_t{1} << (weight + 1)) - 1;
        std::copy(coeffs_.begin() + static_cast<std::ptrdiff_t>(lo), coeffs_.begin() + static_cast<std::ptrdiff_t>(hi),
                  out.coeffs_.begin() + static_cast<std::ptrdiff_t>(lo));
        return out;
    }

    NCSeries& operator+=(const NCSeries& rhs) {
        require_same_order(*this, rhs);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
        return *this;
    }
    NCSeries& operator-=(const NCSeries& rhs) {
        require_same_order(*this, rhs);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
        return *this;
    }
    friend NCSeries operator+(NCSeries a, const NCSeries& b) { return a += b; }
    friend NCSeries operator-(NCSeries a, const NCSeries& b) { return a -= b; }
    NCSeries operator-() const {
        NCSeries out(order_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = -coeffs_[i];
        return out;
    }
    friend NCSeries operator*(const Rational& q, const NCSeries& a) {
        NCSeries out(a.order_);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out.coeffs_[i] = Traits::scale(q, a.coeffs_[i]);
        return out;
    }
    friend bool operator==(const NCSeries& a, const NCSeries& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }

    bool is_zero() const {
        for (const R& c : coeffs_)
            if (!Traits::is_zero(c)) return false;
        return true;
    }

    friend void require_same_order(const NCSeries& a, const NCSeries& b) {
        if (a.order_ != b.order_)
            throw TruncationMismatch("NCSeries: truncation orders differ (" + std::to_string(a.order_) + " vs " +
                                     std::to_string(b.order_) + ")");
    }

private:
    static int check_order(int order) {
        if (order < 0 || order > 24) throw std::invalid_argument("NCSeries: truncation order must be in [0, 24]");
        return order;
    }
    std::size_t checked_index(Word w) const {
        if (w.weight() > order_)
            throw std::out_of_range("NCSeries: word '" + w.str() + "' exceeds truncation order " + std::to_string(order_));
        return w.dense_index();
    }

    int order_;
    std::vector<R> coeffs_;
};

namespace detail {

inline std::size_t level_begin(int weight) { return (std::size_t{1} << weight) - 1; }

template <CoefficientRing R>
void require_unit(const NCSeries<R>& a, const char* what) {
    if (!(a[Word()] == RingTraits<R>::one()))
        throw std::invalid_argument(std::string(what) + ": constant coefficient must be 1");
}

// c += a * b, where c has order >= max weight considered; terms of a*b above
// c's order are dropped. a, b, c are dense coefficient arrays of the given
// orders.
template <CoefficientRing R>
void accumulate_product(std::span<const R> a, int a_order, std::span<const R> b, int b_order, std::span<R> c,
                        int c_order) {
    using T = RingTraits<R>;
    for (int wu = 0; wu <= std::min(a_order, c_order); ++wu) {
        const int max_wv = std::min(b_order, c_order - wu);
        for (std::uint64_t ub = 0; ub < (std::uint64_t{1} << wu); ++ub) {
            const R& x = a[level_begin(wu) + ub];
            if (T::is_zero(x)) continue;
            for (int wv = 0; wv <= max_wv; ++wv) {
                const std::size_t out_base = level_begin(wu + wv) + (ub << wv);
                const std::size_t in_base = level_begin(wv);
                for (std::uint64_t vb = 0; vb < (std::uint64_t{1} << wv); ++vb) {
                    const R& y = b[in_base + vb];
                    if (T::is_zero(y)) continue;
                    c[out_base + vb] += x * y;
                }
            }
        }
    }
}

}  // namespace detail

// Concatenation product.
template <CoefficientRing R>
NCSeries<R> mul(const NCSeries<R>& a, const NCSeries<R>& b) {
    require_same_order(a, b);
    NCSeries<R> c(a.order());
    detail::accumulate_product<R>(a.coefficients(), a.order(), b.coefficients(), b.order(), c.coefficients(), c.order());
    return c;
}

template <CoefficientRing R>
NCSeries<R> operator*(const NCSeries<R>& a, const NCSeries<R>& b) {
    return mul(a, b);
}

// Multiplicative inverse of a series with constant term 1.
template <CoefficientRing R>
NCSeries<R> inverse(const NCSeries<R>& a) {
    using T = RingTraits<R>;
    detail::require_unit(a, "inverse");
    const int n = a.order();
    NCSeries<R> b = NCSeries<R>::one(n);
    auto ac = a.coefficients();
    auto bc = b.coefficients();
    // b(w) = -sum_{w = uv, u nonempty} a(u) b(v), by increasing weight.
    for (int m = 1; m <= n; ++m) {
        for (std::uint64_t wb = 0; wb < (std::uint64_t{1} << m); ++wb) {
            R acc = T::zero();
            for (int k = 1; k <= m; ++k) {
                const R& x = ac[detail::level_begin(k) + (wb >> (m - k))];
                if (T::is_zero(x)) continue;
                const std::uint64_t vb = wb & ((std::uint64_t{1} << (m - k)) - 1);
                const R& y = bc[detail::level_begin(m - k) + vb];
                if (T::is_zero(y)) continue;
                acc += x * y;
            }
            bc[detail::level_begin(m) + wb] = -acc;
        }
    }
    return b;
}

// Word reversal, e_{i1}...e_{in} -> e_{in}...e_{i1}.
template <CoefficientRing R>
NCSeries<R> reversed(const NCSeries<R>& a) {
    NCSeries<R> out(a.order());
    for (std::size_t i = 0; i < a.coefficients().size(); ++i) {
        const Word w = Word::from_dense_index(i);
        out[w.reversed()] = a.coefficients()[i];
    }
    return out;
}

// The antipode e_{i1}...e_{in} -> (-1)^n e_{in}...e_{i1}.
template <CoefficientRing R>
NCSeries<R> antipode(const NCSeries<R>& a) {
    NCSeries<R> out(a.order());
    for (std::size_t i = 0; i < a.coefficients().size(); ++i) {
        const Word w = Word::from_dense_index(i);
        out[w.reversed()] = w.weight() % 2 ? -a.coefficients()[i] : a.coefficients()[i];
    }
    return out;
}

// Coefficientwise conjugation.
template <CoefficientRing R>
NCSeries<R> conjugated(const NCSeries<R>& a) {
    NCSeries<R> out(a.order());
    for (std::size_t i = 0; i < a.coefficients().size(); ++i)
        out.coefficients()[i] = RingTraits<R>::conj(a.coefficients()[i]);
    return out;
}

// e_i -> -e_i together with conjugation of coefficients.
template <CoefficientRing R>
NCSeries<R> sigma_twist(const NCSeries<R>& a) {
    NCSeries<R> out(a.order());
    for (std::size_t i = 0; i < a.coefficients().size(); ++i) {
        const Word w = Word::from_dense_index(i);
        R c = RingTraits<R>::conj(a.coefficients()[i]);
        out.coefficients()[i] = w.weight() % 2 ? -c : c;
    }
    return out;
}

// Truncated exponential of a series with zero constant term.
template <CoefficientRing R>
NCSeries<R> exp_series(const NCSeries<R>& x) {
    if (!RingTraits<R>::is_zero(x[Word()])) throw std::invalid_argument("exp_series: constant term must vanish");
    NCSeries<R> out = NCSeries<R>::one(x.order());
    NCSeries<R> power = NCSeries<R>::one(x.order());
    for (int k = 1; k <= x.order(); ++k) {
        power = Rational(1, k) * mul(power, x);
        out += power;
    }
    return out;
}

template <CoefficientRing R>
NCSeries<R> commutator(const NCSeries<R>& a, const NCSeries<R>& b) {
    return mul(a, b) - mul(b, a);
}

/* Group-like test for exact rings: constant term 1 and
 * S(u) S(v) = sum_{x in u sh v} S(x) for all |u| + |v| <= N.
 */
template <ExactRing R>
bool is_group_like(const NCSeries<R>& s) {
    using T = RingTraits<R>;
    if (!(s[Word()] == T::one())) return false;
    const int n = s.order();
    for (int wu = 1; wu <= n / 2; ++wu) {
        for (int wv = wu; wv + wu <= n; ++wv) {
            for (std::uint64_t ub = 0; ub < (std::uint64_t{1} << wu); ++ub) {
                const Word u(ub, wu);
                for (std::uint64_t vb = 0; vb < (std::uint64_t{1} << wv); ++vb) {
                    const Word v(vb, wv);
                    if (wu == wv && vb < ub) continue;
                    R rhs = T::zero();
                    for (const auto& t : *detail::shuffle_terms(u, v)) {
                        const R& c = s[Word(t.bits, wu + wv)];
                        if (!T::is_zero(c)) rhs += T::scale(Rational(t.count), c);
                    }
                    if (!(s[u] * s[v] == rhs)) return false;
                }
            }
        }
    }
    return true;
}

// Largest violation of the shuffle relations (and of S(empty) = 1) for a
// floating-point series.
template <NumericRing R>
double group_like_defect(const NCSeries<R>& s) {
    using T = RingTraits<R>;
    double worst = std::abs(s[Word()] - T::one());
    const int n = s.order();
    for (int wu = 1; wu <= n / 2; ++wu) {
        for (int wv = wu; wv + wu <= n; ++wv) {
            for (std::uint64_t ub = 0; ub < (std::uint64_t{1} << wu); ++ub) {
                const Word u(ub, wu);
                for (std::uint64_t vb = 0; vb < (std::uint64_t{1} << wv); ++vb) {
                    const Word v(vb, wv);
                    if (wu == wv && vb < ub) continue;
                    R rhs = T::zero();
                    for (const auto& t : *detail::shuffle_terms(u, v))
                        rhs += static_cast<double>(t.count) * s[Word(t.bits, wu + wv)];
                    worst = std::max(worst, static_cast<double>(std::abs(s[u] * s[v] - rhs)));
                }
            }
        }
    }
    return worst;
}

template <NumericRing R>
double max_abs(const NCSeries<R>& s) {
    double worst = 0.0;
    for (const R& c : s.coefficients()) worst = std::max(worst, static_cast<double>(std::abs(c)));
    return worst;
}

/* G(e0, A e1 A^{-1}): every e1 in every word of G replaced by the series
 * A e1 A^{-1}, expanded and truncated at the common order.
 *
 * Evaluated Horner-style over prefixes of G's words: with S_p the image of
 * the words of G that start with p (p removed),
 *   S_p = G(p) + e0 S_{p e0} + X S_{p e1},   X = A e1 A^{-1},
 * and S_p only needs order N - |p|. The cost is O(N^2 2^N) ring products.
 */
template <CoefficientRing R>
NCSeries<R> substitute_e1(const NCSeries<R>& g, const NCSeries<R>& a) {
    using T = RingTraits<R>;
    require_same_order(g, a);
    const int n = g.order();
    const NCSeries<R> x = mul(mul(a, NCSeries<R>::letter(Letter::e1, n)), inverse(a));
    auto xc = x.coefficients();

    // Level d holds S_p for all 2^d prefixes p of weight d, each of order n - d.
    std::vector<R> next;  // level d + 1
    for (int d = n; d >= 0; --d) {
        const int ord = n - d;
        const std::size_t width = dense_size(ord);
        std::vector<R> cur(width << d, T::zero());
        for (std::uint64_t pb = 0; pb < (std::uint64_t{1} << d); ++pb) {
            std::span<R> sp(cur.data() + pb * width, width);
            sp[0] = g[Word(pb, d)];
            if (d == n) continue;
            const std::size_t child_width = dense_size(ord - 1);
            std::span<const R> s0(next.data() + (pb << 1) * child_width, child_width);
            std::span<const R> s1(next.data() + ((pb << 1) | 1) * child_width, child_width);
            // e0 * S_{p e0}: shift every word one letter to the right.
            for (std::size_t i = 0; i < child_width; ++i) {
                if (T::is_zero(s0[i])) continue;
                const Word w = Word::from_dense_index(i);
                sp[Word(w.bits(), w.weight() + 1).dense_index()] += s0[i];
            }
            detail::accumulate_product<R>(std::span<const R>(xc.data(), dense_size(ord)), ord, s1, ord - 1, sp, ord);
        }
        next = std::move(cur);
    }
    NCSeries<R> out(n);
    std::copy(next.begin(), next.end(), out.coefficients().begin());
    return out;
}

// F o G = G(e0, F e1 F^{-1}) F.
template <CoefficientRing R>
NCSeries<R> ihara_act(const NCSeries<R>& f, const NCSeries<R>& g) {
    require_same_order(f, g);
    detail::require_unit(f, "ihara_act");
    detail::require_unit(g, "ihara_act");
    return mul(substitute_e1(g, f), f);
}

/* The unique F with F o G = H, from F = G(e0, F e1 F^{-1})^{-1} H solved
 * weight by weight: the weight-k part of the right-hand side only involves F
 * up to weight k - 1.
 */
template <CoefficientRing R>
NCSeries<R> ihara_solve(const NCSeries<R>& g, const NCSeries<R>& h) {
    require_same_order(g, h);
    detail::require_unit(g, "ihara_solve");
    detail::require_unit(h, "ihara_solve");
    const int n = g.order();
    NCSeries<R> f = NCSeries<R>::one(n);
    for (int k = 1; k <= n; ++k) {
        const NCSeries<R> fk = f.truncated(k);
        const NCSeries<R> rhs = mul(inverse(substitute_e1(g.truncated(k), fk)), h.truncated(k));
        const std::size_t lo = detail::level_begin(k);
        const std::size_t hi = detail::level_begin(k + 1);
        for (std::size_t i = lo; i < hi; ++i) f.coefficients()[i] = rhs.coefficients()[i];
    }
    return f;
}

// JSON: {"order": N, "coefficients": {"<word>": <coefficient>, ...}} over
// nonzero coefficients; the empty word is the key "".
nlohmann::json coefficient_to_json(const Rational& c);
nlohmann::json coefficient_to_json(const MzvExpr& c);
nlohmann::json coefficient_to_json(const Complex& c);
nlohmann::json coefficient_to_json(double c);

template <CoefficientRing R>
nlohmann::json to_json(const NCSeries<R>& s) {
    nlohmann::json coeffs = nlohmann::json::object();
    for (std::size_t i = 0; i < s.coefficients().size(); ++i) {
        if (RingTraits<R>::is_zero(s.coefficients()[i])) continue;
        coeffs[Word::from_dense_index(i).str()] = coefficient_to_json(s.coefficients()[i]);
    }
    return {{"order", s.order()}, {"coefficients", coeffs}};
}

extern template class NCSeries<Rational>;
extern template class NCSeries<MzvExpr>;
extern template class NCSeries<Complex>;
extern template class NCSeries<double>;

}  // namespace svzeta

#endif  // SVZETA_SERIES_HPP
