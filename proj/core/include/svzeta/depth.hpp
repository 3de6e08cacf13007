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
// Depth-graded generating polynomials and the linearized Ihara operator in
// its two lowest cases.

#ifndef SVZETA_DEPTH_HPP
#define SVZETA_DEPTH_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "svzeta/linear_combination.hpp"

namespace svzeta {

class SvEngine;

struct DepthMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using Monomial = std::vector<int>;  // exponents of x1..xr

/* A polynomial over Q in the commuting variables x1..xr. */
class DepthPoly {
public:
    explicit DepthPoly(int depth);
    DepthPoly(int depth, LinearCombination<Monomial> terms);

    static DepthPoly constant(int depth, const Rational& c);
    // x_i, 1 <= i <= depth.
    static DepthPoly variable(int depth, int i);

    int depth() const noexcept { return depth_; }
    const LinearCombination<Monomial>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.is_zero(); }
    // Total degree; -1 for the zero polynomial.
    int degree() const;

    Rational eval(const std::vector<Rational>& x) const;
    // Substitutes x_i -> args[i-1], each a polynomial of a common depth.
    DepthPoly compose(const std::vector<DepthPoly>& args) const;

    std::string str() const;

    friend DepthPoly operator+(const DepthPoly& a, const DepthPoly& b);
    friend DepthPoly operator-(const DepthPoly& a, const DepthPoly& b);
    friend DepthPoly operator*(const DepthPoly& a, const DepthPoly& b);
    friend DepthPoly operator*(const Rational& q, const DepthPoly& a);
    friend bool operator==(const DepthPoly&, const DepthPoly&) = default;

private:
    int depth_;
    LinearCombination<Monomial> terms_;
};

// f(x1) g(x2) + f(x2 - x1) (g(x1) - g(x2)).
DepthPoly lin_ihara_11(const DepthPoly& f, const DepthPoly& g);
// f(x1) g(x2,x3) + f(x2 - x1) (g(x1,x3) - g(x2,x3)) + f(x3 - x2) (g(x1,x2) - g(x1,x3)).
DepthPoly lin_ihara_12(const DepthPoly& f, const DepthPoly& g);

struct Depth1Row {
    int n;
    double sv;          // numeric zeta_sv(n)
    double expected;    // (1 - (-1)^n) zeta(n)
    double residual;
    double abs_err;
    bool symbolic_zero; // exact vanishing of the symbolic coefficient, when available
};

// Rows for n = 2..n_max.
std::vector<Depth1Row> depth1_sv_check(const SvEngine& engine, int n_max);

}  // namespace svzeta

#endif  // SVZETA_DEPTH_HPP
