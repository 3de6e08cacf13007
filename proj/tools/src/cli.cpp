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

#include "svzeta_cli/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "svzeta/associator.hpp"
#include "svzeta/fmodel.hpp"
#include "svzeta/lyndon.hpp"
#include "svzeta/polylog.hpp"
#include "svzeta_cli/suites.hpp"

namespace svzeta::cli {

namespace {

constexpr int kSymbolicOrder = 11;
constexpr int kSlowSymbolicOrder = 13;

enum class Format { text, csv, json };

struct Config {
    double prec = 1e-9;
    std::string cache_path;
    Format format = Format::text;
    bool slow = false;
};

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string err_str(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

std::string csv_row(std::initializer_list<std::string> fields) {
    std::string s;
    for (const std::string& f : fields) {
        if (!s.empty()) s += ',';
        s += csv_field(f);
    }
    return s + "\r\n";
}

std::string render_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------

std::string cmd_sv_table(const Config& cfg, int weight, int order, MzvCache* cache) {
    if (order == 0) order = weight;
    if (weight > order)
        throw std::invalid_argument("sv-table: --weight " + std::to_string(weight) + " exceeds --order " +
                                    std::to_string(order));
    std::vector<SvValue> rows;
    if (weight >= 2) {
        const int symbolic = std::min(weight, cfg.slow ? kSlowSymbolicOrder : kSymbolicOrder);
        const SvEngine engine(order, symbolic, cache);
        for (const Composition& c : convergent_compositions(weight)) {
            SvValue v = engine.zeta_sv(c);
            if (!(v.abs_err <= cfg.prec))
                throw PrecisionError("sv-table: zeta_sv(" + c.str() + ") error estimate " + err_str(v.abs_err) +
                                     " exceeds --prec " + err_str(cfg.prec));
            rows.push_back(std::move(v));
        }
    }

    std::string out;
    switch (cfg.format) {
    case Format::json: {
        nlohmann::json arr = nlohmann::json::array();
        for (const SvValue& v : rows) arr.push_back(to_json(v));
        return render_json(arr);
    }
    case Format::csv:
        out = csv_row({"composition", "word", "numeric", "abs_err", "symbolic"});
        for (const SvValue& v : rows)
            out += csv_row({composition_from_word(v.word).str(), v.word.str(), num(v.numeric), num(v.abs_err),
                            v.symbolic ? v.symbolic->str() : ""});
        return out;
    case Format::text:
        for (const SvValue& v : rows) {
            out += "zeta_sv(" + composition_from_word(v.word).str() + ") = " + num(v.numeric) + " +/- " +
                   err_str(v.abs_err);
            if (v.symbolic) out += "  = " + v.symbolic->str();
            out += "\n";
        }
        return out;
    }
    return out;
}

std::string cmd_mzv(const Config& cfg, const std::string& text, const std::string& backend, MzvCache* cache) {
    const Composition c = Composition::parse(text);
    if (!c.is_convergent()) throw std::invalid_argument("mzv: composition (" + c.str() + ") is not convergent");
    const Backend b = backend == "nested-sum" ? Backend::nested_sum : Backend::holder_half;
    const MzvValue v = mzv_value(c, cfg.prec, b, cache);
    switch (cfg.format) {
    case Format::json:
        return render_json(nlohmann::json::array(
            {{{"composition", c.parts}, {"value", v.value}, {"abs_err", v.abs_err}}}));
    case Format::csv:
        return csv_row({"composition", "value", "abs_err"}) + csv_row({c.str(), num(v.value), num(v.abs_err)});
    case Format::text:
        return "zeta(" + c.str() + ") = " + num(v.value) + " +/- " + err_str(v.abs_err) + "\n";
    }
    return {};
}

std::string cmd_lyndon(const Config& cfg, int weight, const std::string& alphabet) {
    const bool odd = alphabet == "odd";
    const WeightedAlphabet a = odd ? WeightedAlphabet::odd_f(std::max(weight, 3)) : WeightedAlphabet::hoffman();
    std::vector<std::string> words;
    for (const LetterWord& w : lyndon_words(a, weight)) words.push_back(render(a, w, odd ? "" : ","));
    std::string out;
    switch (cfg.format) {
    case Format::json:
        return render_json(words);
    case Format::csv:
        out = csv_row({"word"});
        for (const std::string& w : words) out += csv_row({w});
        return out;
    case Format::text:
        for (const std::string& w : words) out += w + "\n";
        return out;
    }
    return out;
}

std::string cmd_fsv(const Config& cfg, const std::string& text) {
    const FWord w = FWord::parse(text);
    const std::string sv = render(sv_U(w));
    switch (cfg.format) {
    case Format::json:
        return render_json(nlohmann::json::array({{{"input", w.str()}, {"sv", sv}}}));
    case Format::csv:
        return csv_row({"input", "sv"}) + csv_row({w.str(), sv});
    case Format::text:
        return sv + "\n";
    }
    return {};
}

std::string cmd_polylog(const Config& cfg, const std::string& text, double re, double im, bool sv, MzvCache* cache) {
    const Word w = Word::parse(text);
    const Complex z(re, im);
    const int order = w.weight();
    Complex value;
    if (sv) {
        const SvEngine engine(std::max(order, 1), 0, cache);
        value = eval_svL(z, order, engine.W_numeric().series)[w];
    } else {
        value = eval_L(z, PathSpec::straight(z), order).L[w];
    }
    switch (cfg.format) {
    case Format::json:
        return render_json(nlohmann::json::array({polylog_json(w, z, value)}));
    case Format::csv:
        return csv_row({"word", "z_re", "z_im", "re", "im"}) +
               csv_row({w.str(), num(re), num(im), num(value.real()), num(value.imag())});
    case Format::text:
        return num(value.real()) + " " + num(value.imag()) + "\n";
    }
    return {};
}

std::string cmd_dims(const Config& cfg, int weight) {
    const DimTable t = dims(weight);
    if (cfg.format != Format::json) return dims_csv(t);
    nlohmann::json arr = nlohmann::json::array();
    for (int n = 1; n <= weight; ++n) {
        const auto i = static_cast<std::size_t>(n);
        arr.push_back({{"N", n},
                       {"dimH", t.dim_H[i].get_str()},
                       {"dimL", t.ell[i].get_str()},
                       {"dimHsv", t.dim_Hsv[i].get_str()},
                       {"dimLsv", t.dim_Lsv[i].get_str()}});
    }
    return render_json(arr);
}

std::string cmd_verify(const Config& cfg, const std::string& suite, MzvCache* cache, bool& all_pass) {
    std::vector<Check> checks;
    auto append = [&](std::vector<Check> more) { checks.insert(checks.end(), more.begin(), more.end()); };
    if (suite == "paper-identities" || suite == "all") append(identities_suite(cfg.slow, cache));
    if (suite == "dims" || suite == "all") append(dims_suite());
    if (suite == "polylog" || suite == "all") append(polylog_suite(cache));

    all_pass = true;
    for (const Check& c : checks) all_pass = all_pass && c.pass();

    std::string out;
    switch (cfg.format) {
    case Format::json: {
        nlohmann::json arr = nlohmann::json::array();
        for (const Check& c : checks) arr.push_back(to_json(c));
        return render_json(arr);
    }
    case Format::csv:
        out = csv_row({"suite", "name", "residual", "tolerance", "kind", "pass"});
        for (const Check& c : checks)
            out += csv_row({c.suite, c.name, num(c.residual), num(c.tolerance), c.at_least ? "at_least" : "at_most",
                            c.pass() ? "true" : "false"});
        return out;
    case Format::text:
        for (const Check& c : checks)
            out += std::string(c.pass() ? "PASS" : "FAIL") + "  " + c.suite + ": " + c.name +
                   "  residual=" + err_str(c.residual) + (c.at_least ? "  required > " : "  tolerance=") +
                   err_str(c.tolerance) + "\n";
        out += all_pass ? "all checks passed\n" : "some checks FAILED\n";
        return out;
    }
    return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Single-valued multiple zeta values and polylogarithms"};
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    app.add_option("--prec", cfg.prec, "Target absolute error of numeric values")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--cache", cfg.cache_path, "MZV value cache file (default: $SVZETA_CACHE)");
    app.add_option("--format", cfg.format, "Output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Format>{{"text", Format::text}, {"csv", Format::csv}, {"json", Format::json}}))
        ->default_str("text");
    app.add_flag("--slow", cfg.slow, "Enable weight-13 symbolic computations and checks");

    std::function<std::string(MzvCache*)> action;
    bool verify_pass = true;

    int weight = 8, order = 0;
    auto* sv_table = app.add_subcommand("sv-table", "Single-valued MZVs of all convergent compositions up to a weight");
    sv_table->add_option("--weight", weight, "Maximal weight")->check(CLI::Range(0, 24))->capture_default_str();
    sv_table->add_option("--order", order, "Truncation order of the associator (default: the weight)")
        ->check(CLI::Range(1, 24));
    sv_table->callback([&] { action = [&](MzvCache* c) { return cmd_sv_table(cfg, weight, order, c); }; });

    std::string suite;
    auto* verify = app.add_subcommand("verify", "Run a verification suite; exit 1 if any check fails");
    verify->add_option("suite", suite, "Suite name")
        ->required()
        ->check(CLI::IsMember({"paper-identities", "dims", "polylog", "all"}));
    verify->callback([&] { action = [&](MzvCache* c) { return cmd_verify(cfg, suite, c, verify_pass); }; });

    std::string comp, backend = "holder-half";
    auto* mzv = app.add_subcommand("mzv", "Numeric multiple zeta value of a composition such as 3,5");
    mzv->add_option("composition", comp, "Comma-separated composition")->required();
    mzv->add_option("--backend", backend, "Evaluation method")
        ->check(CLI::IsMember({"holder-half", "nested-sum"}))
        ->capture_default_str();
    mzv->callback([&] { action = [&](MzvCache* c) { return cmd_mzv(cfg, comp, backend, c); }; });

    int lyndon_weight = 0;
    std::string alphabet = "hoffman";
    auto* lyndon = app.add_subcommand("lyndon", "Lyndon words of a given weight");
    lyndon->add_option("weight", lyndon_weight, "Weight")->required()->check(CLI::Range(0, 40));
    lyndon->add_option("--alphabet", alphabet, "hoffman = {3<2}, odd = {f3<f5<...}")
        ->check(CLI::IsMember({"hoffman", "odd"}))
        ->capture_default_str();
    lyndon->callback([&] { action = [&](MzvCache*) { return cmd_lyndon(cfg, lyndon_weight, alphabet); }; });

    std::string fword;
    auto* fsv = app.add_subcommand("fsv", "The single-valued map on an f-alphabet word such as f3f5 or 3,5");
    fsv->add_option("word", fword, "f-alphabet word")->required();
    fsv->callback([&] { action = [&](MzvCache*) { return cmd_fsv(cfg, fword); }; });

    std::string pword;
    double re = 0.0, im = 0.0;
    bool sv = false;
    auto* polylog = app.add_subcommand("polylog", "Coefficient of a word (e.g. 10 for e1e0) in L(z)");
    polylog->add_option("word", pword, "Word in the letters 0 and 1")->required();
    polylog->add_option("re", re, "Real part of z")->required();
    polylog->add_option("im", im, "Imaginary part of z")->required();
    polylog->add_flag("--sv", sv, "Single-valued version");
    polylog->callback([&] { action = [&](MzvCache* c) { return cmd_polylog(cfg, pword, re, im, sv, c); }; });

    int dims_weight = 20;
    auto* dims_cmd = app.add_subcommand("dims", "Dimension table as CSV");
    dims_cmd->add_option("--weight", dims_weight, "Maximal weight")->check(CLI::Range(1, 200))->capture_default_str();
    dims_cmd->callback([&] { action = [&](MzvCache*) { return cmd_dims(cfg, dims_weight); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, d;
        const int code = app.exit(e, o, d);
        out << o.str();
        err << d.str();
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        std::string path = cfg.cache_path;
        if (path.empty())
            if (const char* env = std::getenv("SVZETA_CACHE")) path = env;
        MzvCache cache;
        if (!path.empty() && std::filesystem::exists(path)) cache = MzvCache::load(path);
        const std::string text = action(path.empty() ? nullptr : &cache);
        if (!path.empty()) cache.store(path);
        out << text;
        return verify_pass ? kExitOk : kExitCheckFailed;
    } catch (const std::exception& e) {
        err << "svzeta: " << e.what() << "\n";
        return kExitError;
    }
}

}  // namespace svzeta::cli
