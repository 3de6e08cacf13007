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

#include "svzeta/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace svzeta {

namespace {

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();

// INT64_MIN is excluded from the inline form so negation never overflows.
bool fits_inline(const mpz_class& z) { return mpz_fits_slong_p(z.get_mpz_t()) && z != kMin; }

mpz_class to_mpz(std::int64_t v) {
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
    return z;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

}  // namespace

Rational::Rational(long long num, long long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (num == kMin || den == kMin) {
        *this = from_mpq(mpq_class(to_mpz(num), to_mpz(den)));
        return;
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = gcd64(num, den);
    num_ = g > 1 ? num / g : num;
    den_ = g > 1 ? den / g : den;
}

Rational::Rational(const mpq_class& value) { *this = from_mpq(value); }

Rational Rational::from_mpq(mpq_class value) {
    value.canonicalize();
    Rational r;
    if (fits_inline(value.get_num()) && fits_inline(value.get_den())) {
        r.num_ = value.get_num().get_si();
        r.den_ = value.get_den().get_si();
    } else {
        r.big_ = std::make_shared<const mpq_class>(std::move(value));
    }
    return r;
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("Rational::parse: empty string");
    std::string s(text);
    mpq_class q;
    if (q.set_str(s, 10) != 0 || s.find_first_of(" \t") != std::string::npos)
        throw std::invalid_argument("Rational::parse: malformed rational '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("Rational::parse: zero denominator");
    return from_mpq(std::move(q));
}

bool Rational::is_integer() const noexcept { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const noexcept {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

double Rational::to_double() const {
    if (big_) return big_->get_d();
    if (den_ == 1) return static_cast<double>(num_);
    return static_cast<double>(num_) / static_cast<double>(den_);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(to_mpz(num_), to_mpz(den_));
}

std::string Rational::str() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
    if (big_) return from_mpq(-*big_);
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.den_ == 1 && b.den_ == 1) {
            std::int64_t s;
            if (!__builtin_add_overflow(a.num_, b.num_, &s) && s != kMin) return Rational(s);
        } else {
            // Knuth 4.5.1: reduce with g = gcd(d1, d2) before multiplying out.
            const std::int64_t g = gcd64(a.den_, b.den_);
            const std::int64_t ad = a.den_ / g;
            const std::int64_t bd = b.den_ / g;
            std::int64_t t1, t2, t;
            if (!__builtin_mul_overflow(a.num_, bd, &t1) && !__builtin_mul_overflow(b.num_, ad, &t2) &&
                !__builtin_add_overflow(t1, t2, &t) && t != kMin) {
                const std::int64_t g2 = gcd64(t, g);
                std::int64_t den;
                if (!__builtin_mul_overflow(ad, b.den_ / g2, &den)) {
                    Rational r;
                    r.num_ = t / g2;
                    r.den_ = den;
                    if (r.num_ == 0) r.den_ = 1;
                    return r;
                }
            }
        }
    }
    return Rational::from_mpq(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.num_ == 0 || b.num_ == 0) return Rational();
        const std::int64_t g1 = gcd64(a.num_, b.den_);
        const std::int64_t g2 = gcd64(b.num_, a.den_);
        std::int64_t num, den;
        if (!__builtin_mul_overflow(a.num_ / g1, b.num_ / g2, &num) && num != kMin &&
            !__builtin_mul_overflow(a.den_ / g2, b.den_ / g1, &den)) {
            Rational r;
            r.num_ = num;
            r.den_ = den;
            return r;
        }
    }
    return Rational::from_mpq(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    if (!b.big_) {
        Rational inv;
        inv.num_ = b.num_ < 0 ? -b.den_ : b.den_;
        inv.den_ = b.num_ < 0 ? -b.num_ : b.num_;
        return a * inv;
    }
    return Rational::from_mpq(a.to_mpq() / b.to_mpq());
}

bool operator==(const Rational& a, const Rational& b) {
    // Canonical forms: an inline value never equals a promoted one.
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
}

__extension__ using Int128 = __int128;

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        const Int128 lhs = static_cast<Int128>(a.num_) * b.den_;
        const Int128 rhs = static_cast<Int128>(b.num_) * a.den_;
        return lhs <=> rhs;
    }
    const int c = cmp(a.to_mpq(), b.to_mpq());
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

}  // namespace svzeta
