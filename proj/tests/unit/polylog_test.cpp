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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "svzeta/associator.hpp"
#include "svzeta/polylog.hpp"

namespace svzeta {
namespace {

using std::numbers::pi;
constexpr Complex I(0.0, 1.0);
constexpr double kCatalan = 0.915965594177219015054603514932;

// Li_n(z) = sum z^k / k^n for |z| < 1.
Complex li_series(int n, Complex z) {
    Complex sum = 0.0, zk = 1.0;
    for (int k = 1; k < 4000; ++k) {
        zk *= z;
        sum += zk / std::pow(static_cast<double>(k), n);
        if (std::abs(zk) < 1e-18) break;
    }
    return sum;
}

// Composite Simpson rule for the integral of f along the segment [a, b].
template <class F>
Complex simpson(F f, Complex a, Complex b, int panels = 2000) {
    const Complex h = (b - a) / static_cast<double>(2 * panels);
    Complex s = f(a) + f(b);
    for (int i = 1; i < 2 * panels; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + static_cast<double>(i) * h);
    return s * h / 3.0;
}

const NCSeries<Complex>& W(int order) {
    static const SvEngine engine(8);
    static const NCSeries<Complex> w8 = engine.W_numeric().series;
    static std::map<int, NCSeries<Complex>> cache;
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, w8.truncated(order)).first;
    return it->second;
}

TEST(EvalL, WeightOneCoefficients) {
    for (Complex z : {Complex(0.3, 0.4), Complex(-0.6, 0.1), Complex(0.5, 0.0), Complex(1.7, 0.8)}) {
        const NCSeries<Complex> L = eval_L(z, PathSpec::straight(z), 1).L;
        EXPECT_LT(std::abs(L[Word::parse("0")] - std::log(z)), 1e-11) << z;
        // -log(1 - z) by quadrature of dt / (1 - t) along the same path.
        const auto path = PathSpec::straight(z).vertices;
        Complex q = -std::log(1.0 - path[1]);
        for (std::size_t i = 2; i < path.size(); ++i)
            q += simpson([](Complex t) { return 1.0 / (1.0 - t); }, path[i - 1], path[i]);
        EXPECT_LT(std::abs(L[Word::parse("1")] - q), 1e-10) << z;
    }
    EXPECT_NEAR(eval_L(0.5, PathSpec::straight(0.5), 1).L[Word::parse("1")].real(), std::log(2.0), 1e-12);
}

TEST(EvalL, ClassicalPolylogarithms) {
    for (Complex z : {Complex(0.1, 0.0), Complex(0.3, 0.4), Complex(-0.5, 0.2)}) {
        const NCSeries<Complex> L = eval_L(z, PathSpec::straight(z), 4).L;
        EXPECT_LT(std::abs(L[Word::parse("10")] - li_series(2, z)), 1e-10) << z;
        EXPECT_LT(std::abs(L[Word::parse("100")] - li_series(3, z)), 1e-10) << z;
        EXPECT_LT(std::abs(L[Word::parse("1000")] - li_series(4, z)), 1e-10) << z;
        // Li_{1,1}(z) = log(1 - z)^2 / 2.
        const Complex l1 = std::log(1.0 - z);
        EXPECT_LT(std::abs(L[Word::parse("11")] - l1 * l1 / 2.0), 1e-10) << z;
    }
}

TEST(EvalL, GroupLike) {
    for (Complex z : {Complex(0.3, 0.4), Complex(2.0, -1.0)})
        EXPECT_LT(group_like_defect(eval_L(z, PathSpec::straight(z), 6).L), 1e-8);
}

TEST(EvalL, RejectsBadInput) {
    EXPECT_THROW(eval_L(1.0, PathSpec::straight(0.5), 2), PathError);
    EXPECT_THROW(eval_L(0.0, PathSpec::straight(0.5), 2), PathError);
    EXPECT_THROW(eval_L(0.3, PathSpec::straight(0.5), 2), PathError);
    EXPECT_THROW(eval_L(2.0, PathSpec{{0.0, 0.5, 2.0}}, 2), PathError);
    EXPECT_THROW(eval_L(0.5, PathSpec{{0.1, 0.5}}, 2), PathError);
    EXPECT_THROW(eval_L(Complex(0.5, 1.0), PathSpec{{0.0, 0.9, Complex(0.5, 1.0)}}, 2), PathError);
}

TEST(SvL, WeightOneBoundaryValues) {
    for (Complex z : {Complex(0.3, 0.4), Complex(-0.7, 0.2), Complex(2.1, -0.5), Complex(0.9, 0.0)}) {
        const NCSeries<Complex> sv = eval_svL(z, 1, W(1));
        EXPECT_LT(std::abs(sv[Word::parse("0")] - std::log(std::norm(z))), 1e-9) << z;
        EXPECT_LT(std::abs(sv[Word::parse("1")] + std::log(std::norm(1.0 - z))), 1e-9) << z;
    }
}

// The Bloch-Wigner function D(z) = Im Li2(z) + arg(1 - z) log|z| equals
// Im svL_{e1e0}(z) / 2.
TEST(SvL, BlochWigner) {
    for (Complex z : {Complex(0.3, 0.4), Complex(-0.5, 0.2), Complex(0.2, -0.6)}) {
        const double d = li_series(2, z).imag() + std::arg(1.0 - z) * std::log(std::abs(z));
        EXPECT_NEAR(eval_svL(z, 2, W(2))[Word::parse("10")].imag(), 2.0 * d, 1e-10) << z;
    }
    EXPECT_NEAR(eval_svL(I, 2, W(2))[Word::parse("10")].imag(), 2.0 * kCatalan, 1e-10);
}

TEST(SvL, HomotopicPathsAgree) {
    const Complex z(0.3, 0.4);
    const PathSpec a = PathSpec::straight(z), b{{0.0, 0.25, Complex(0.25, 0.6), z}};
    for (int k = 1; k <= 4; ++k)
        for (Word w : words_of_weight(k)) EXPECT_LT(check_single_valued(w, z, a, b, W(k)), 1e-9) << w.str();
}

TEST(SvL, DetourLeavesSvLInvariant) {
    const Complex z(0.5, 0.5);
    const Word w = Word::parse("10");
    EXPECT_LT(check_single_valued(w, z, PathSpec::straight(z), PathSpec::detour(z), W(2)), 1e-6);
    EXPECT_GT(check_plain_multivalued(w, z, PathSpec::straight(z), PathSpec::detour(z)), 1e-3);
}

TEST(SvL, PathIndependenceUpToWeightFour) {
    for (Complex z : {Complex(0.3, 0.4), Complex(-0.8, -0.3), Complex(1.6, 0.7)}) {
        const NCSeries<Complex> a = single_valued(eval_L(z, PathSpec::straight(z), 4), W(4));
        const NCSeries<Complex> b = single_valued(eval_L(z, PathSpec::detour(z), 4), W(4));
        EXPECT_LT(max_abs(a - b), 1e-6) << z;
    }
}

// Around 0 the plain L_{e0} gains 2 pi i; around 1, L_{e1} = -log(1 - z)
// gains -2 pi i.
TEST(EvalL, MonodromyOfWeightOneCoefficients) {
    const Complex z(0.5, 0.5);
    const NCSeries<Complex> a = eval_L(z, PathSpec::straight(z), 1).L;
    const NCSeries<Complex> b = eval_L(z, PathSpec::detour(z), 1).L;
    EXPECT_LT(std::abs(b[Word::parse("0")] - a[Word::parse("0")] - 2.0 * pi * I), 1e-9);
    EXPECT_LT(std::abs(b[Word::parse("1")] - a[Word::parse("1")] + 2.0 * pi * I), 1e-9);
}

// d svL / dz = svL (e0 / z + e1 / (1 - z)), with the Wirtinger derivative
// taken by central differences.
TEST(SvL, HolomorphicKZEquation) {
    constexpr int n = 4;
    constexpr double h = 1e-4;
    for (double theta : {0.7, 2.0, 4.1}) {
        const Complex z = 0.5 * std::exp(I * theta);
        auto sv = [&](Complex p) { return eval_svL(p, n, W(n)); };
        const NCSeries<Complex> dx = sv(z + h) - sv(z - h);
        const NCSeries<Complex> dy = sv(z + I * h) - sv(z - I * h);
        NCSeries<Complex> form(n);
        form[Word::parse("0")] = 1.0 / z;
        form[Word::parse("1")] = 1.0 / (1.0 - z);
        const NCSeries<Complex> rhs = mul(sv(z), form);
        double worst = 0.0;
        for (std::size_t i = 0; i < rhs.coefficients().size(); ++i) {
            const Complex dz = (dx.coefficients()[i] - I * dy.coefficients()[i]) / (4.0 * h);
            worst = std::max(worst, std::abs(dz - rhs.coefficients()[i]));
        }
        EXPECT_LT(worst, 1e-6) << "theta=" << theta;
    }
}

// svL_w(1 - eps) - W_w vanishes like eps (2 log eps)^(k-1) / (k-1)! for a
// convergent word of weight k.
TEST(SvL, ApproachesWNearOneAtTheExpectedRate) {
    constexpr int n = 5;
    std::vector<double> previous(n + 1, std::numeric_limits<double>::infinity());
    for (double eps : {1e-3, 1e-5, 1e-7, 1e-9}) {
        const NCSeries<Complex> sv = eval_svL(1.0 - eps, n, W(n));
        for (int k = 2; k <= n; ++k) {
            double gap = 0.0;
            for (Word w : words_of_weight(k))
                if (is_convergent(w)) gap = std::max(gap, std::abs(sv[w] - W(n)[w]));
            const double bound = eps * std::pow(2.0 * std::abs(std::log(eps)), k - 1) / std::tgamma(k) + 1e-9;
            EXPECT_LT(gap, 4.0 * bound) << "eps=" << eps << " weight " << k;
            EXPECT_LT(gap, previous[static_cast<std::size_t>(k)]) << "eps=" << eps << " weight " << k;
            previous[static_cast<std::size_t>(k)] = gap;
        }
    }
}

TEST(Polylog, Json) {
    const nlohmann::json j = polylog_json(Word::parse("10"), Complex(0.5, 0.0), Complex(1.0, 2.0));
    EXPECT_EQ(j["word"], "10");
    EXPECT_EQ(j["z"], nlohmann::json::array({0.5, 0.0}));
    EXPECT_EQ(j["value"], nlohmann::json::array({1.0, 2.0}));
}

}  // namespace
}  // namespace svzeta
