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

#include "svzeta_cli/data.hpp"

#include <sstream>
#include <stdexcept>

namespace svzeta::cli {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) return out;
        start = pos + 1;
    }
}

[[noreturn]] void bad_line(const char* what, int line) {
    throw std::runtime_error(std::string(what) + ": malformed line " + std::to_string(line));
}

template <class F>
void for_each_line(std::string_view text, F&& f) {
    std::istringstream in{std::string(text)};
    std::string line;
    for (int n = 1; std::getline(in, line); ++n) {
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        f(t, n);
    }
}

}  // namespace

std::map<std::string, std::vector<long>> PublishedDims::corrected() const {
    auto out = rows;
    for (const DimsErratum& e : errata) out.at(e.row).at(static_cast<std::size_t>(e.weight - 1)) = e.value;
    return out;
}

PublishedDims parse_dims_table(std::string_view text) {
    PublishedDims d;
    for_each_line(text, [&](const std::string& line, int n) {
        std::istringstream in(line);
        std::string kind, row;
        if (!(in >> kind >> row)) bad_line("dims table", n);
        if (kind == "row") {
            std::vector<long> values;
            for (long v; in >> v;) values.push_back(v);
            if (!in.eof() || values.empty()) bad_line("dims table", n);
            d.rows[row] = std::move(values);
        } else if (kind == "erratum") {
            DimsErratum e{row, 0, 0};
            if (!(in >> e.weight >> e.value)) bad_line("dims table", n);
            auto it = d.rows.find(row);
            if (it == d.rows.end() || e.weight < 1 || e.weight > static_cast<int>(it->second.size()))
                bad_line("dims table", n);
            d.errata.push_back(e);
        } else {
            bad_line("dims table", n);
        }
    });
    return d;
}

std::string SvIdentity::label() const { return "zeta_sv(" + lhs.str() + ")"; }

std::vector<SvIdentity> parse_sv_identities(std::string_view text) {
    std::vector<SvIdentity> out;
    for_each_line(text, [&](const std::string& line, int n) {
        const auto fields = split(line, '|');
        if (fields.size() != 5) bad_line("identities", n);
        try {
            SvIdentity id{Composition::parse(fields[0]), std::stoi(fields[1]), std::stod(fields[2]),
                          fields[3] == "slow", {}};
            if (fields[3] != "slow" && fields[3] != "fast") bad_line("identities", n);
            std::istringstream terms(fields[4]);
            for (std::string term; terms >> term;) {
                const auto colon = term.find(':');
                if (colon == std::string::npos) bad_line("identities", n);
                ProductTerm t{Rational::parse(term.substr(0, colon)), {}};
                for (const std::string& f : split(std::string_view(term).substr(colon + 1), '*'))
                    t.factors.push_back(Composition::parse(f));
                id.rhs.push_back(std::move(t));
            }
            if (id.rhs.empty()) bad_line("identities", n);
            out.push_back(std::move(id));
        } catch (const std::invalid_argument&) {
            bad_line("identities", n);
        }
    });
    return out;
}

}  // namespace svzeta::cli
