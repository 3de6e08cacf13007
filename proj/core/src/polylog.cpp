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

#include "svzeta/polylog.hpp"

#include <array>
#include <cmath>

#include <nlohmann/json.hpp>

namespace svzeta {

namespace {

constexpr double kMinDistance = 1e-13;
constexpr double kMaxFirstVertex = 0.75;

using State = std::vector<Complex>;

double distance_to_segment(Complex p, Complex a, Complex b) {
    const Complex d = b - a;
    const double len2 = std::norm(d);
    if (len2 == 0.0) return std::abs(p - a);
    const double t = std::clamp(((p - a) * std::conj(d)).real() / len2, 0.0, 1.0);
    return std::abs(p - (a + t * d));
}

// h(p) = sum_n h_n p^n, where h_0 = 1 and
//   (n+1) h_{n+1} + e0 h_{n+1} - h_{n+1} e0 = (h_0 + ... + h_n) e1.
State h_series(double p, int order) {
    const std::size_t size = dense_size(order);
    State partial(size), value(size), x(size), rhs(size);
    partial[0] = value[0] = 1.0;
    double pn = 1.0;
    int quiet = 0;
    for (int n = 0;; ++n) {
        if (n > 5000) throw IntegrationError("eval_L: power series at the base point did not converge");
        std::fill(rhs.begin(), rhs.end(), Complex{});
        for (std::size_t i = 0; i < size; ++i) {
            const Word w = Word::from_dense_index(i);
            if (w.weight() < order) rhs[w.concat(Word::letter(Letter::e1)).dense_index()] = partial[i];
        }
        // Weight-increasing solve: the commutator with e0 raises weight by 1.
        for (std::size_t i = 0; i < size; ++i) {
            const Word w = Word::from_dense_index(i);
            Complex acc = rhs[i];
            if (!w.empty() && w.front() == Letter::e0) acc -= x[w.suffix(w.weight() - 1).dense_index()];
            if (!w.empty() && w.back() == Letter::e0) acc += x[w.prefix(w.weight() - 1).dense_index()];
            x[i] = acc / static_cast<double>(n + 1);
        }
        pn *= p;
        double step = 0.0, scale = 1.0;
        for (std::size_t i = 0; i < size; ++i) {
            partial[i] += x[i];
            value[i] += pn * x[i];
            step = std::max(step, std::abs(pn * x[i]));
            scale = std::max(scale, std::abs(value[i]));
        }
        quiet = step < 1e-19 * scale ? quiet + 1 : 0;
        if (n > order && quiet >= 3) break;
    }
    return value;
}

// L * (e0 a + e1 b): shifts every word right by one letter.
void kz_rhs(const State& l, Complex a, Complex b, State& out, int order) {
    out[0] = 0.0;
    for (int k = 0; k < order; ++k) {
        const std::size_t lo = (std::size_t{1} << k) - 1;
        const std::size_t hi = (std::size_t{1} << (k + 1)) - 1;
        for (std::size_t i = lo; i < (std::size_t{1} << (k + 1)) - 1; ++i) {
            const std::uint64_t bits = i - lo;
            out[hi + (bits << 1)] = l[i] * a;
            out[hi + ((bits << 1) | 1)] = l[i] * b;
        }
    }
}

// Dormand-Prince 5(4) along the segment from `from` to `to`.
void integrate_segment(State& y, Complex from, Complex to, int order, const IntegratorOptions& opts, long& steps) {
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                            a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                            e6 = 22.0 / 525, e7 = -1.0 / 40;

    const Complex dz = to - from;
    const std::size_t n = y.size();
    auto f = [&](double t, const State& s, State& out) {
        const Complex z = from + t * dz;
        kz_rhs(s, dz / z, dz / (1.0 - z), out, order);
    };
    std::array<State, 7> k;
    for (auto& v : k) v.assign(n, Complex{});
    State tmp(n), y5(n);

    double t = 0.0;
    // Initial step from the distance of the segment to the singular points.
    double h = std::min(0.05, 0.1 * std::min(std::abs(from), std::abs(1.0 - from)) / std::max(std::abs(dz), 1e-300));
    f(0.0, y, k[0]);
    while (t < 1.0) {
        if (++steps > opts.max_steps) throw IntegrationError("eval_L: step budget exhausted");
        h = std::min(h, 1.0 - t);
        auto stage = [&](State& out, double ct, std::initializer_list<std::pair<double, int>> terms) {
            for (std::size_t i = 0; i < n; ++i) {
                Complex acc = y[i];
                for (const auto& [a, j] : terms) acc += h * a * k[static_cast<std::size_t>(j)][i];
                tmp[i] = acc;
            }
            f(t + ct * h, tmp, out);
        };
        stage(k[1], c2, {{a21, 0}});
        stage(k[2], c3, {{a31, 0}, {a32, 1}});
        stage(k[3], c4, {{a41, 0}, {a42, 1}, {a43, 2}});
        stage(k[4], c5, {{a51, 0}, {a52, 1}, {a53, 2}, {a54, 3}});
        stage(k[5], 1.0, {{a61, 0}, {a62, 1}, {a63, 2}, {a64, 3}, {a65, 4}});
        for (std::size_t i = 0; i < n; ++i)
            y5[i] = y[i] + h * (b1 * k[0][i] + b3 * k[2][i] + b4 * k[3][i] + b5 * k[4][i] + b6 * k[5][i]);
        f(t + h, y5, k[6]);
        double err = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const Complex e =
                h * (e1 * k[0][i] + e3 * k[2][i] + e4 * k[3][i] + e5 * k[4][i] + e6 * k[5][i] + e7 * k[6][i]);
            const double sc = opts.atol + opts.rtol * std::max(std::abs(y[i]), std::abs(y5[i]));
            err = std::max(err, std::abs(e) / sc);
        }
        if (err <= 1.0) {
            t += h;
            y.swap(y5);
            k[0].swap(k[6]);
        }
        const double factor = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
        h *= factor;
        if (t + h == t) throw IntegrationError("eval_L: step size underflow");
    }
}

}  // namespace

void PathSpec::validate() const {
    if (vertices.size() < 2) throw PathError("PathSpec: need at least two vertices");
    if (vertices[0] != Complex{}) throw PathError("PathSpec: path must start at the base point 0");
    const Complex p1 = vertices[1];
    if (p1.imag() != 0.0 || !(p1.real() > 0.0) || p1.real() > kMaxFirstVertex)
        throw PathError("PathSpec: first segment must run along the positive real axis to a point in (0, 0.75]");
    for (std::size_t i = 2; i < vertices.size(); ++i) {
        const Complex a = vertices[i - 1], b = vertices[i];
        if (distance_to_segment(0.0, a, b) < kMinDistance || distance_to_segment(1.0, a, b) < kMinDistance)
            throw PathError("PathSpec: segment passes through a singular point");
    }
}

PathSpec PathSpec::straight(Complex z) {
    if (z.imag() == 0.0) {
        const double x = z.real();
        if (x > 0.0 && x <= 0.5) return {{0.0, z}};
        if (x > 0.5 && x < 1.0) return {{0.0, 0.5, z}};
        if (x >= 1.0) return {{0.0, 0.5, Complex(1.0, 0.5), z}};
        return {{0.0, 0.5, Complex(0.0, 0.5), z}};
    }
    return {{0.0, 0.5, z}};
}

PathSpec PathSpec::detour(Complex z) {
    PathSpec p{{0.0, 0.5, Complex(1.0, -0.5), 1.5, Complex(1.0, 0.5), 0.5, Complex(0.0, 0.5), -0.5,
                Complex(0.0, -0.5), 0.5}};
    if (z != 0.5) p.vertices.push_back(z);
    return p;
}

PolylogFrame eval_L(Complex z, const PathSpec& path, int order, const IntegratorOptions& opts) {
    if (z == Complex{} || z == Complex(1.0))
        throw PathError("eval_L: z must avoid the singular points 0 and 1");
    path.validate();
    if (std::abs(path.end() - z) > 1e-15 * std::max(1.0, std::abs(z)))
        throw PathError("eval_L: path does not end at z");

    const double p1 = path.vertices[1].real();
    NCSeries<Complex> h(order);
    {
        State hv = h_series(p1, order);
        std::copy(hv.begin(), hv.end(), h.coefficients().begin());
    }
    NCSeries<Complex> e0log(order);
    if (order >= 1) e0log[Word::letter(Letter::e0)] = std::log(p1);
    NCSeries<Complex> l = mul(exp_series(e0log), h);

    State y(l.coefficients().begin(), l.coefficients().end());
    long steps = 0;
    for (std::size_t i = 2; i < path.vertices.size(); ++i)
        integrate_segment(y, path.vertices[i - 1], path.vertices[i], order, opts, steps);
    std::copy(y.begin(), y.end(), l.coefficients().begin());
    return {z, order, std::move(l)};
}

NCSeries<Complex> single_valued(const PolylogFrame& frame, const NCSeries<Complex>& w) {
    if (w.order() < frame.order) throw TruncationMismatch("single_valued: W truncated below the frame order");
    const NCSeries<Complex> wt = w.truncated(frame.order);
    return mul(substitute_e1(reversed(conjugated(frame.L)), wt), frame.L);
}

NCSeries<Complex> eval_svL(Complex z, int order, const NCSeries<Complex>& w, const IntegratorOptions& opts) {
    return single_valued(eval_L(z, PathSpec::straight(z), order, opts), w);
}

double check_single_valued(Word word, Complex z, const PathSpec& path_a, const PathSpec& path_b,
                           const NCSeries<Complex>& w, const IntegratorOptions& opts) {
    const int n = word.weight();
    const Complex a = single_valued(eval_L(z, path_a, n, opts), w)[word];
    const Complex b = single_valued(eval_L(z, path_b, n, opts), w)[word];
    return std::abs(a - b);
}

double check_plain_multivalued(Word word, Complex z, const PathSpec& path_a, const PathSpec& path_b,
                               const IntegratorOptions& opts) {
    const int n = word.weight();
    return std::abs(eval_L(z, path_a, n, opts).L[word] - eval_L(z, path_b, n, opts).L[word]);
}

nlohmann::json polylog_json(Word word, Complex z, Complex value) {
    return {{"word", word.str()}, {"z", {z.real(), z.imag()}}, {"value", {value.real(), value.imag()}}};
}

}  // namespace svzeta
