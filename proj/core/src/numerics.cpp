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

#include "svzeta/numerics.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace svzeta {

namespace {

using Real = long double;

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr Real kLongEps = std::numeric_limits<Real>::epsilon();

// Outer cutoff for sums at 1/2. The tail is below 1e-27 for depth <= 13.
constexpr int kHalfCutoff = 120;
// Largest outer cutoff the nested-sum backend will try.
constexpr long long kNestedBudget = 50'000'000;

void require_convergent(const Composition& c) {
    if (!c.is_convergent())
        throw std::invalid_argument("mzv_value: composition (" + c.str() + ") is not convergent");
}

// Sum over 0<k1<...<kr<=K of x^{kr} / prod k_i^{n_i}, inner sums exact.
Real nested_sum(const std::vector<int>& parts, long long cutoff, Real x) {
    std::vector<Real> prev(static_cast<std::size_t>(cutoff) + 1, 1.0L);  // S_0(k) = 1
    std::vector<Real> cur(prev.size());
    Real total = 0.0L;
    const std::size_t r = parts.size();
    for (std::size_t i = 0; i < r; ++i) {
        const bool outer = i + 1 == r;
        cur[0] = 0.0L;
        Real xp = 1.0L;
        for (long long j = 1; j <= cutoff; ++j) {
            Real term = prev[static_cast<std::size_t>(j - 1)] * std::pow(static_cast<Real>(j), -parts[i]);
            if (outer) {
                xp *= x;
                term *= xp;
            }
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + term;
        }
        std::swap(prev, cur);
        total = prev[static_cast<std::size_t>(cutoff)];
    }
    return total;
}

Real half_tail_bound(const std::vector<int>& parts, int cutoff) {
    const int m = static_cast<int>(parts.size()) - 1;
    const int n = parts.back();
    const Real j = cutoff + 1;
    const Real b = std::pow(1.0L + std::log(j), m) * std::pow(2.0L, -j) / std::pow(j, n);
    const Real rho = 0.5L * std::pow((1.0L + std::log(j + 1)) / (1.0L + std::log(j)), m);
    return 10.0L * b / (1.0L - rho);
}

ExprValue compute_polylog_half(const Composition& c) {
    const Real v = nested_sum(c.parts, kHalfCutoff, 0.5L);
    const Real rounding = 4.0L * kHalfCutoff * static_cast<Real>(c.depth() + 1) * kLongEps * v;
    const Real err = half_tail_bound(c.parts, kHalfCutoff) + rounding;
    const double out = static_cast<double>(v);
    return {out, static_cast<double>(err) + kEps * std::abs(out)};
}

// Process-wide memo of certified values keyed by word.
struct Memo {
    std::shared_mutex mutex;
    std::unordered_map<Word, ExprValue, WordHash> table;

    template <class F>
    ExprValue get(Word w, F&& compute) {
        {
            std::shared_lock lock(mutex);
            if (auto it = table.find(w); it != table.end()) return it->second;
        }
        const ExprValue v = compute();
        std::unique_lock lock(mutex);
        return table.emplace(w, v).first->second;
    }
};

Memo& polylog_memo() {
    static Memo m;
    return m;
}
Memo& zeta_memo() {
    static Memo m;
    return m;
}

ExprValue polylog_half_word(Word u) {
    if (u.empty()) return {1.0, 0.0};
    return polylog_memo().get(u, [&] { return compute_polylog_half(composition_from_word(u)); });
}

// All factors are positive, so the sum has no cancellation.
ExprValue zeta_half(Word w) {
    return zeta_memo().get(w, [&] {
        Real total = 0.0L;
        Real err = 0.0L;
        const int n = w.weight();
        for (int k = 0; k <= n; ++k) {
            const ExprValue a = polylog_half_word(w.prefix(k));
            const ExprValue b = polylog_half_word(w.suffix(n - k).reversed().swapped());
            const Real ab = static_cast<Real>(a.value) * b.value;
            total += ab;
            err += static_cast<Real>(a.value) * b.abs_err + static_cast<Real>(b.value) * a.abs_err +
                   static_cast<Real>(a.abs_err) * b.abs_err + 2.0L * kEps * ab;
        }
        err += (n + 2) * kLongEps * total;
        const double out = static_cast<double>(total);
        return ExprValue{out, static_cast<double>(err) + kEps * std::abs(out)};
    });
}

// Integral of (1 + ln x)^m x^{-n} over [K, inf) for n >= 2.
Real power_log_tail(int m, int n, Real k) {
    const int s = n - 1;
    const Real l = 1.0L + std::log(k);
    Real sum = 0.0L;
    Real falling = 1.0L;  // m! / (m - i)!
    for (int i = 0; i <= m; ++i) {
        sum += falling * std::pow(l, m - i) / std::pow(static_cast<Real>(s), i + 1);
        falling *= static_cast<Real>(m - i);
    }
    return std::pow(k, -s) * sum;
}

MzvValue compute_nested(const Composition& c, double target_err) {
    const int m = c.depth() - 1;
    const int n = c.parts.back();
    long long cutoff = 1024;
    auto bound = [&](long long k) {
        // The summand bound is decreasing beyond K only once n (1 + ln K) > m.
        if (n * (1.0L + std::log(static_cast<Real>(k))) <= m) return std::numeric_limits<Real>::infinity();
        return 10.0L * power_log_tail(m, n, static_cast<Real>(k));
    };
    while (bound(cutoff) > 0.5L * target_err) {
        if (cutoff > kNestedBudget / 2) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%g", target_err);
            throw PrecisionError(std::string("mzv_value: nested-sum backend cannot reach ") + buf + " for (" +
                                 c.str() + ") within its iteration budget");
        }
        cutoff *= 2;
    }
    const Real v = nested_sum(c.parts, cutoff, 1.0L);
    const Real err = bound(cutoff) + 4.0L * static_cast<Real>(cutoff) * c.depth() * kLongEps * v;
    const double out = static_cast<double>(v);
    return {c, out, static_cast<double>(err) + kEps * std::abs(out), backend_name(Backend::nested_sum),
            cutoff * c.depth()};
}

}  // namespace

const char* backend_name(Backend b) noexcept {
    switch (b) {
        case Backend::holder_half: return "holder-half";
        case Backend::nested_sum: return "nested-sum";
    }
    return "unknown";
}

ExprValue polylog_half(const Composition& c) {
    if (c.parts.empty()) return {1.0, 0.0};
    return polylog_half_word(word_from_composition(c));
}

MzvValue mzv_value(const Composition& c, double target_err, Backend backend, MzvCache* cache) {
    require_convergent(c);
    if (!(target_err > 0.0)) throw std::invalid_argument("mzv_value: target error must be positive");
    if (cache)
        if (auto r = cache->find(c); r && r->abs_err <= target_err) return {c, r->value, r->abs_err, "cache", 0};

    MzvValue out;
    if (backend == Backend::holder_half) {
        const ExprValue v = zeta_half(word_from_composition(c));
        out = {c, v.value, v.abs_err, backend_name(backend), 2LL * kHalfCutoff * (c.weight() + 1)};
    } else {
        out = compute_nested(c, target_err);
    }
    if (out.abs_err > target_err)
        throw PrecisionError("mzv_value: (" + c.str() + ") certified only to " + std::to_string(out.abs_err) +
                             ", requested " + std::to_string(target_err));
    if (cache) cache->insert(c, {out.value, out.abs_err});
    return out;
}

ExprValue eval_expr(const MzvExpr& a, double target_err, MzvCache* cache) {
    Real total = 0.0L;
    Real err = 0.0L;
    Real mass = 0.0L;
    for (const auto& [w, q] : a.terms()) {
        const Real c = q.to_double();
        ExprValue v{1.0, 0.0};
        if (!w.empty()) {
            const Composition comp = composition_from_word(w);
            std::optional<MzvCache::Record> hit;
            if (cache) hit = cache->find(comp);
            if (hit) {
                v = {hit->value, hit->abs_err};
            } else {
                v = zeta_half(w);
                if (cache) cache->insert(comp, {v.value, v.abs_err});
            }
        }
        total += c * v.value;
        err += std::abs(c) * v.abs_err + kEps * std::abs(c * v.value);
        mass += std::abs(c * v.value);
    }
    err += (a.terms().size() + 1) * kLongEps * mass;
    const double out = static_cast<double>(total);
    const ExprValue result{out, static_cast<double>(err) + kEps * std::abs(out)};
    if (result.abs_err > target_err)
        throw PrecisionError("eval_expr: certified only to " + std::to_string(result.abs_err) + ", requested " +
                             std::to_string(target_err));
    return result;
}

// ---------------------------------------------------------------------------
// Cache.

MzvCache::MzvCache(const MzvCache& other) {
    std::shared_lock lock(other.mutex_);
    table_ = other.table_;
}

MzvCache& MzvCache::operator=(const MzvCache& other) {
    if (this == &other) return *this;
    auto copy = other.records();
    std::unique_lock lock(mutex_);
    table_ = std::move(copy);
    return *this;
}

std::optional<MzvCache::Record> MzvCache::find(const Composition& c) const {
    std::shared_lock lock(mutex_);
    if (auto it = table_.find(c); it != table_.end()) return it->second;
    return std::nullopt;
}

void MzvCache::insert(const Composition& c, Record r) {
    std::unique_lock lock(mutex_);
    auto [it, inserted] = table_.emplace(c, r);
    if (!inserted && r.abs_err < it->second.abs_err) it->second = r;
}

std::size_t MzvCache::size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
}

std::map<Composition, MzvCache::Record> MzvCache::records() const {
    std::shared_lock lock(mutex_);
    return table_;
}

namespace {

bool parse_double(const std::string& s, double& out) {
    if (s.empty()) return false;
    errno = 0;
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return errno == 0 && end == s.c_str() + s.size();
}

std::string format17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

MzvCache MzvCache::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open cache file '" + path.string() + "'");
    MzvCache cache;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        auto fail = [&](const std::string& why) {
            return std::runtime_error("cache file '" + path.string() + "' line " + std::to_string(lineno) + ": " +
                                      why);
        };
        const auto t1 = line.find('\t');
        const auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
        if (t2 == std::string::npos || line.find('\t', t2 + 1) != std::string::npos)
            throw fail("expected three tab-separated fields");
        Composition c;
        try {
            c = Composition::parse(line.substr(0, t1));
        } catch (const std::exception& e) {
            throw fail(e.what());
        }
        if (!c.is_convergent()) throw fail("composition is not convergent");
        Record r{};
        if (!parse_double(line.substr(t1 + 1, t2 - t1 - 1), r.value)) throw fail("bad value");
        if (!parse_double(line.substr(t2 + 1), r.abs_err) || !(r.abs_err > 0.0)) throw fail("bad abs_err");
        cache.table_[c] = r;
    }
    return cache;
}

void MzvCache::store(const std::filesystem::path& path) const {
    const auto snapshot = records();
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write cache file '" + tmp.string() + "'");
        out << "# composition\tvalue\tabs_err\n";
        for (const auto& [c, r] : snapshot) out << c.str() << '\t' << format17(r.value) << '\t' << format17(r.abs_err) << '\n';
        if (!out.flush()) throw std::runtime_error("write failed for '" + tmp.string() + "'");
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace svzeta
