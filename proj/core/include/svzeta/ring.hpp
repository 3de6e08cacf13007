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
// The coefficient rings a series may carry, behind one contract.

#ifndef SVZETA_RING_HPP
#define SVZETA_RING_HPP

#include <complex>
#include <concepts>

#include "svzeta/mzv_expr.hpp"
#include "svzeta/rational.hpp"

namespace svzeta {

using Complex = std::complex<double>;

template <class R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
    static constexpr bool exact = true;
    static Rational zero() { return {}; }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& x) { return x.is_zero(); }
    static Rational conj(const Rational& x) { return x; }
    static Rational scale(const Rational& q, const Rational& x) { return q * x; }
};

template <>
struct RingTraits<MzvExpr> {
    static constexpr bool exact = true;
    static MzvExpr zero() { return {}; }
    static MzvExpr one() { return MzvExpr::one(); }
    static bool is_zero(const MzvExpr& x) { return x.is_zero(); }
    static MzvExpr conj(const MzvExpr& x) { return sigma_on_expr(x); }
    static MzvExpr scale(const Rational& q, const MzvExpr& x) { return q * x; }
};

template <>
struct RingTraits<Complex> {
    static constexpr bool exact = false;
    static Complex zero() { return {}; }
    static Complex one() { return {1.0, 0.0}; }
    static bool is_zero(const Complex& x) { return x == Complex{}; }
    static Complex conj(const Complex& x) { return std::conj(x); }
    static Complex scale(const Rational& q, const Complex& x) { return q.to_double() * x; }
};

template <>
struct RingTraits<double> {
    static constexpr bool exact = false;
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static bool is_zero(double x) { return x == 0.0; }
    static double conj(double x) { return x; }
    static double scale(const Rational& q, double x) { return q.to_double() * x; }
};

/* Commutative ring with a conjugation involution and an action of Q.
 * The weight-graded sign action (multiplying the weight-n part by (-1)^n) is
 * built from negation at the series level.
 */
template <class R>
concept CoefficientRing = requires(R& m, const R& a, const R& b, const Rational& q) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { m += a };
    { m -= a };
    { a == b } -> std::convertible_to<bool>;
    { RingTraits<R>::zero() } -> std::convertible_to<R>;
    { RingTraits<R>::one() } -> std::convertible_to<R>;
    { RingTraits<R>::is_zero(a) } -> std::convertible_to<bool>;
    { RingTraits<R>::conj(a) } -> std::convertible_to<R>;
    { RingTraits<R>::scale(q, a) } -> std::convertible_to<R>;
};

template <class R>
concept ExactRing = CoefficientRing<R> && RingTraits<R>::exact;

template <class R>
concept NumericRing = CoefficientRing<R> && !RingTraits<R>::exact;

}  // namespace svzeta

#endif  // SVZETA_RING_HPP
