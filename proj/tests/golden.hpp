/*
   Copyright 2026 The lampfield Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Reference rows of the t(n) table, stored in golden/table1.txt, and the
// rule for comparing a computed row against one.

#ifndef LAMPFIELD_TESTS_GOLDEN_HPP
#define LAMPFIELD_TESTS_GOLDEN_HPP

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lampfield/table.hpp"

namespace golden {

struct Row {
    std::size_t n;
    lampfield::Natural t, u_over_t;
    std::vector<std::string> factors;  // may contain "..." elisions
};

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    return out;
}

inline std::vector<Row> load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<Row> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto cols = split(line, '|');
        if (cols.size() != 4) throw std::runtime_error("bad golden line: " + line);
        rows.push_back({std::stoul(cols[0]), lampfield::Natural::parse(cols[1]), lampfield::Natural::parse(cols[2]),
                        split(cols[3], ';')});
    }
    return rows;
}

inline std::vector<std::size_t> term_exponents(const std::string& terms) {
    std::vector<std::size_t> out;
    for (std::string t : split(terms, '+')) {
        t.erase(0, t.find_first_not_of(' '));
        t.erase(t.find_last_not_of(' ') + 1);
        if (t.empty()) continue;
        if (t == "1") out.push_back(0);
        else if (t == "X") out.push_back(1);
        else out.push_back(std::stoul(t.substr(2)));
    }
    return out;
}

/// "X^21 + X^19 + ... + X^3 + 1" fixes the degree, the leading terms and
/// the trailing terms; the middle is unknown.
inline bool matches_elided(const lampfield::Poly2& f, const std::string& text) {
    const auto dots = text.find("...");
    const auto head = term_exponents(text.substr(0, dots));
    const auto tail = term_exponents(text.substr(dots + 3));
    const auto e = f.exponents();
    if (head.empty() || f.degree() != static_cast<std::int64_t>(head[0])) return false;
    if (e.size() < head.size() + tail.size()) return false;
    return std::equal(head.begin(), head.end(), e.begin()) && std::equal(tail.rbegin(), tail.rend(), e.rbegin());
}

/// Empty when the computed row agrees, otherwise a description of the mismatch.
inline std::string compare(const lampfield::TableRow& r, const Row& g) {
    using lampfield::Poly2;
    const std::string at = "n=" + std::to_string(g.n) + ": ";
    if (r.n != g.n) return at + "row for n=" + std::to_string(r.n);
    if (!r.t) return at + "t missing (" + r.blocked + ")";
    if (*r.t != g.t) return at + "t=" + r.t->to_string() + ", want " + g.t.to_string();
    if (*r.u_over_t != g.u_over_t) return at + "u/t=" + r.u_over_t->to_string() + ", want " + g.u_over_t.to_string();
    if (r.factors.product() != lampfield::phi(r.n)) return at + "factors do not multiply back";
    if (r.factors.count_with_multiplicity() != g.factors.size()) return at + "factor count differs";
    std::vector<Poly2> remaining;
    for (const auto& pf : r.factors.factors()) remaining.push_back(pf.poly);
    for (const auto& text : g.factors) {
        auto it = text.find("...") == std::string::npos
                      ? std::find(remaining.begin(), remaining.end(), lampfield::parse_poly(text))
                      : std::find_if(remaining.begin(), remaining.end(),
                                     [&](const Poly2& f) { return matches_elided(f, text); });
        if (it == remaining.end()) return at + "no computed factor matches " + text;
        remaining.erase(it);
    }
    return {};
}

}  // namespace golden

#endif
