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
// Exact rational numbers with arbitrary precision.

#ifndef SVZETA_RATIONAL_HPP
#define SVZETA_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace svzeta {

/* An exact rational number.
 *
 * Values whose numerator and denominator fit in a signed 64-bit integer are
 * stored inline; anything larger is promoted to an immutable, shared GMP
 * rational. Every arithmetic result is demoted back to the inline form when it
 * fits, so the common case (small integer coefficients) never allocates.
 *
 * Invariant: den > 0 and gcd(num, den) == 1 in both representations.
 */
class Rational {
public:
    Rational() noexcept = default;
    Rational(long long value) noexcept : num_(value) {}  // NOLINT: implicit by design of a numeric type
    Rational(long long num, long long den);
    explicit Rational(const mpq_class& value);

    // Accepts "p", "-p", "p/q".
    static Rational parse(std::string_view text);

    bool is_zero() const noexcept { return !big_ && num_ == 0; }
    bool is_integer() const noexcept;
    int sign() const noexcept;
    bool is_small() const noexcept { return !big_; }

    double to_double() const;
    mpq_class to_mpq() const;
    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs) { return *this = *this + rhs; }
    Rational& operator-=(const Rational& rhs) { return *this = *this - rhs; }
    Rational& operator*=(const Rational& rhs) { return *this = *this * rhs; }
    Rational& operator/=(const Rational& rhs) { return *this = *this / rhs; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    friend std::ostream& operator<<(std::ostream& os, const Rational& q);

private:
    static Rational from_mpq(mpq_class value);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

Rational abs(const Rational& q);

}  // namespace svzeta

#endif  // SVZETA_RATIONAL_HPP
