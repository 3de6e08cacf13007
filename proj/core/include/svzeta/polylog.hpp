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
// Multiple polylogarithms from the KZ equation and their single-valued
// versions.
//
// Conventions. L(z) = sum_w L_w(z) w solves dL/dz = L (e0/z + e1/(1-z)) and
// equals exp(e0 log z) h(z) near 0 with h holomorphic, h(0) = 1. The last
// letter of w is the outermost integration, so L_{e1 e0^{n-1}}(z) = Li_n(z)
// and L_w(1) = zeta(w) for convergent w.

#ifndef SVZETA_POLYLOG_HPP
#define SVZETA_POLYLOG_HPP

#include <stdexcept>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "svzeta/series.hpp"

namespace svzeta {

struct PathError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IntegrationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* A piecewise-linear path leaving the tangential base point at 0 in the
 * direction +1. vertices = {0, p1, ..., z} with p1 real in (0, 1); no later
 * segment may come within 1e-13 of 0 or 1.
 */
struct PathSpec {
    std::vector<Complex> vertices;

    Complex end() const { return vertices.back(); }
    // Throws PathError on an invalid path.
    void validate() const;

    // A path homotopic to the straight segment [0, z] when z is off the real
    // half-lines (-inf, 0] and [1, inf); those are reached through the upper
    // half-plane.
    static PathSpec straight(Complex z);
    // Leaves along [0, 1/2], winds once counter-clockwise around 1, then once
    // counter-clockwise around 0, then goes to z.
    static PathSpec detour(Complex z);
};

struct IntegratorOptions {
    double rtol = 1e-12;
    double atol = 1e-13;
    long max_steps = 2'000'000;
};

struct PolylogFrame {
    Complex z;
    int order;
    NCSeries<Complex> L;
};

// Throws PathError if z is 0 or 1 or the path does not end at z, and
// IntegrationError if the step-size control fails.
PolylogFrame eval_L(Complex z, const PathSpec& path, int order, const IntegratorOptions& opts = {});

// Rev(conj L)(e0, e1') L with e1' = W e1 W^{-1}, for the L of a frame.
// w must have order >= the frame's order.
NCSeries<Complex> single_valued(const PolylogFrame& frame, const NCSeries<Complex>& w);

// The single-valued series at z along PathSpec::straight(z).
NCSeries<Complex> eval_svL(Complex z, int order, const NCSeries<Complex>& w, const IntegratorOptions& opts = {});

// |svL_w computed along path_a - the same along path_b|.
double check_single_valued(Word word, Complex z, const PathSpec& path_a, const PathSpec& path_b,
                           const NCSeries<Complex>& w, const IntegratorOptions& opts = {});
// The same difference for the plain L_w (nonzero under nontrivial monodromy).
double check_plain_multivalued(Word word, Complex z, const PathSpec& path_a, const PathSpec& path_b,
                               const IntegratorOptions& opts = {});

// {"word": "...", "z": [re, im], "value": [re, im]}
nlohmann::json polylog_json(Word word, Complex z, Complex value);

}  // namespace svzeta

#endif  // SVZETA_POLYLOG_HPP
