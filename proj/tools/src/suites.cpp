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

#include "svzeta_cli/suites.hpp"

#include <cmath>
#include <map>
#include <memory>

#include <nlohmann/json.hpp>

#include "svzeta/associator.hpp"
#include "svzeta/depth.hpp"
#include "svzeta/fmodel.hpp"
#include "svzeta/lyndon.hpp"
#include "svzeta/polylog.hpp"
#include "svzeta_cli/data.hpp"

namespace svzeta::cli {

nlohmann::json to_json(const Check& c) {
    return {{"suite", c.suite},
            {"name", c.name},
            {"residual", c.residual},
            {"tolerance", c.tolerance},
            {"kind", c.at_least ? "at_least" : "at_most"},
            {"pass", c.pass()}};
}

std::vector<Check> identities_suite(bool slow, MzvCache* cache) {
    const std::string suite = "paper-identities";
    std::vector<Check> out;
    std::map<int, std::unique_ptr<SvEngine>> engines;
    auto engine = [&](int order) -> const SvEngine& {
        auto& e = engines[order];
        if (!e) e = std::make_unique<SvEngine>(order, 0, cache);
        return *e;
    };

    for (const SvIdentity& id : parse_sv_identities(embedded_sv_identities())) {
        if (id.slow && !slow) continue;
        const IdentityCheck r = engine(id.order).verify_identity(id.lhs, id.rhs);
        out.push_back({suite, id.label() + " relative residual, N=" + std::to_string(id.order), r.relative,
                       id.tolerance});
    }

    for (const Depth1Row& row : depth1_sv_check(engine(11), 11))
        out.push_back({suite, "zeta_sv(" + std::to_string(row.n) + ") - (1-(-1)^n) zeta(n)", row.residual, 1e-8});

    const SvEngine exact(2, 2, cache);
    out.push_back({suite, "zeta_sv(2) symbolic coefficient (nonzero terms)",
                   static_cast<double>(exact.zeta_sv(Composition{2}).symbolic->terms().size()), 0.0});

    const SvEngine& e10 = engine(10);
    out.push_back({suite, "e1' fixed point max-norm residual, N=10",
                   max_abs(e1_prime_residual(e10.Z_numeric().series, e10.W_numeric().series)), 1e-8});
    return out;
}

std::vector<Check> dims_suite() {
    const std::string suite = "dims";
    constexpr int kWeight = 20;
    const DimTable t = dims(kWeight);
    const auto published = parse_dims_table(embedded_dims_table()).corrected();
    const std::map<std::string, const std::vector<mpz_class>*> computed = {
        {"dimH", &t.dim_H}, {"dimL", &t.ell}, {"dimHsv", &t.dim_Hsv}, {"dimLsv", &t.dim_Lsv}};

    std::vector<Check> out;
    for (const auto& [name, row] : published) {
        int mismatches = 0;
        for (int n = 1; n <= kWeight; ++n)
            if ((*computed.at(name))[static_cast<std::size_t>(n)] != row.at(static_cast<std::size_t>(n - 1))) ++mismatches;
        out.push_back({suite, name + " N=1..20 mismatching cells", static_cast<double>(mismatches), 0.0});
    }

    int holds = 0, fails_above = 0;
    for (int n = 2; n <= 12; ++n)
        if (t.dim_Hsv[static_cast<std::size_t>(n)] != t.ell[static_cast<std::size_t>(n + 2)]) ++holds;
    for (int n = 13; n + 2 <= kWeight; ++n)
        if (t.dim_Hsv[static_cast<std::size_t>(n)] != t.ell[static_cast<std::size_t>(n + 2)]) ++fails_above;
    out.push_back({suite, "dimHsv_N = dimL_{N+2} for N=2..12 (violations)", static_cast<double>(holds), 0.0});
    out.push_back({suite, "dimHsv_N = dimL_{N+2} for N=13..18 (violations)", static_cast<double>(fails_above), 0.0,
                   true});

    int lyndon_mismatches = 0;
    const WeightedAlphabet hoffman = WeightedAlphabet::hoffman();
    for (int n = 1; n <= kWeight; ++n)
        if (mpz_class(static_cast<unsigned long>(lyndon_words(hoffman, n).size())) != t.ell[static_cast<std::size_t>(n)])
            ++lyndon_mismatches;
    out.push_back({suite, "Lyndon words over {3<2} vs ell_n, n=1..20 (mismatches)",
                   static_cast<double>(lyndon_mismatches), 0.0});
    return out;
}

std::vector<Check> polylog_suite(MzvCache* cache) {
    const std::string suite = "polylog";
    constexpr int kOrder = 4;
    const SvEngine engine(6, 0, cache);
    const NCSeries<Complex>& w = engine.W_numeric().series;
    const Word e0 = Word::letter(Letter::e0), e1 = Word::letter(Letter::e1);

    std::vector<Check> out;
    double boundary = 0.0;
    for (Complex z : {Complex(0.3, 0.4), Complex(-0.7, 0.2), Complex(2.1, -0.5)}) {
        const NCSeries<Complex> sv = eval_svL(z, 1, w);
        boundary = std::max(boundary, std::abs(sv[e0] - std::log(std::norm(z))));
        boundary = std::max(boundary, std::abs(sv[e1] + std::log(std::norm(1.0 - z))));
    }
    out.push_back({suite, "svL_e0 = log|z|^2 and svL_e1 = -log|1-z|^2 at 3 points", boundary, 1e-9});

    // The Bloch-Wigner dilogarithm D(z) = Im Li2(z) + arg(1-z) log|z| is
    // half of Im svL_{e1e0}; D(i) is Catalan's constant.
    constexpr double kCatalan = 0.915965594177219015054603514932;
    const Complex li2 = eval_svL(Complex(0.0, 1.0), 2, w)[Word::parse("10")];
    out.push_back({suite, "Im svL_{e1e0}(i) = 2 Catalan", std::abs(li2.imag() - 2.0 * kCatalan), 1e-9});

    const Complex z(0.3, 0.4);
    const PathSpec straight = PathSpec::straight(z), detour = PathSpec::detour(z);
    const NCSeries<Complex> sv_a = single_valued(eval_L(z, straight, kOrder), w);
    const NCSeries<Complex> sv_b = single_valued(eval_L(z, detour, kOrder), w);
    const NCSeries<Complex> l_a = eval_L(z, straight, kOrder).L, l_b = eval_L(z, detour, kOrder).L;
    out.push_back({suite, "svL path independence, weight <= 4, winding detour", max_abs(sv_a - sv_b), 1e-6});
    out.push_back({suite, "plain L monodromy detected, weight <= 4, winding detour", max_abs(l_a - l_b), 1e-3, true});

    // svL_w(1 - eps) - W_w decays like eps log(eps)^(|w|-1); eps = 1e-9 keeps
    // the weight-4 gap near 1e-5.
    const Complex near1(1.0 - 1e-9, 0.0);
    const NCSeries<Complex> sv1 = eval_svL(near1, kOrder, w);
    double gap = 0.0;
    for (int k = 2; k <= kOrder; ++k)
        for (Word u : words_of_weight(k))
            if (is_convergent(u)) gap = std::max(gap, std::abs(sv1[u] - w[u]));
    out.push_back({suite, "svL_w(1-1e-9) vs W_w, convergent w of weight <= 4", gap, 1e-4});
    return out;
}

}  // namespace svzeta::cli
