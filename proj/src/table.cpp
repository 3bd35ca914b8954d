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

#include "lampfield/table.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lampfield {

TableFormat parse_table_format(std::string_view s) {
    if (s == "text") return TableFormat::text;
    if (s == "csv") return TableFormat::csv;
    if (s == "json") return TableFormat::json;
    throw std::invalid_argument("unknown table format '" + std::string(s) + "'");
}

std::vector<TableRow> build_table(std::size_t from, std::size_t to, RingCatalog& catalog,
                                  const std::function<void(const TableRow&)>& progress) {
    if (from < 2 || from > to) throw std::invalid_argument("table: need 2 <= from <= to");
    std::vector<TableRow> rows;
    for (std::size_t n = from; n <= to; ++n) {
        TableRow row;
        row.n = n;
        try {
            RingSummary s = catalog.summary(n);
            row.factors = std::move(s.factors);
            row.u_over_t = s.u / s.t;
            row.t = std::move(s.t);
        } catch (const FactoringBudgetExceeded& e) {
            row.factors = factor(phi(n), catalog.options().factor);
            row.blocked = e.what();
        }
        if (progress) progress(row);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string render_table(const std::vector<TableRow>& rows, TableFormat fmt) {
    switch (fmt) {
        case TableFormat::text: return render_text(rows);
        case TableFormat::csv: return render_csv(rows);
        case TableFormat::json: return render_json(rows);
    }
    return {};
}

namespace {

std::string opt_text(const std::optional<Natural>& v) { return v ? v->to_string() : "?"; }

}  // namespace

std::string render_text(const std::vector<TableRow>& rows) {
    const std::string hn = "n", ht = "t(n)", hu = "u(n)/t(n)", hf = "X^n + X + 1 (mod 2)";
    std::size_t wn = hn.size(), wt = ht.size(), wu = hu.size();
    for (const auto& r : rows) {
        wn = std::max(wn, std::to_string(r.n).size());
        wt = std::max(wt, opt_text(r.t).size());
        wu = std::max(wu, opt_text(r.u_over_t).size());
    }
    auto pad_left = [](const std::string& s, std::size_t w) { return std::string(w - s.size(), ' ') + s; };
    std::ostringstream os;
    os << pad_left(hn, wn) << "  " << pad_left(ht, wt) << "  " << pad_left(hu, wu) << "  " << hf << '\n';
    for (const auto& r : rows) {
        os << pad_left(std::to_string(r.n), wn) << "  " << pad_left(opt_text(r.t), wt) << "  "
           << pad_left(opt_text(r.u_over_t), wu) << "  " << r.factorization() << '\n';
    }
    return os.str();
}

std::string render_csv(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "n,t,u_over_t,factorization\n";
    for (const auto& r : rows) {
        os << r.n << ',' << (r.t ? r.t->to_string() : "") << ',' << (r.u_over_t ? r.u_over_t->to_string() : "")
           << ',' << r.factorization() << '\n';
    }
    return os.str();
}

std::string render_json(const std::vector<TableRow>& rows) {
    nlohmann::ordered_json out;
    out["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json row;
        row["n"] = r.n;
        row["t"] = r.t ? nlohmann::ordered_json(r.t->to_string()) : nlohmann::ordered_json(nullptr);
        row["u_over_t"] = r.u_over_t ? nlohmann::ordered_json(r.u_over_t->to_string()) : nlohmann::ordered_json(nullptr);
        auto& fs = row["factors"] = nlohmann::ordered_json::array();
        for (const auto& f : r.factors.factors()) fs.push_back({{"poly", format(f.poly)}, {"multiplicity", f.multiplicity}});
        if (!r.blocked.empty()) row["blocked"] = r.blocked;
        out["rows"].push_back(std::move(row));
    }
    return out.dump(2) + '\n';
}

std::vector<TableRow> parse_json_table(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("table JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array())
        throw std::invalid_argument("table JSON: expected an object with a \"rows\" array");
    std::vector<TableRow> rows;
    try {
        for (const auto& jr : doc["rows"]) {
            TableRow r;
            r.n = jr.at("n").get<std::size_t>();
            if (!jr.at("t").is_null()) r.t = Natural::parse(jr["t"].get<std::string>());
            if (!jr.at("u_over_t").is_null()) r.u_over_t = Natural::parse(jr["u_over_t"].get<std::string>());
            std::vector<PolyFactor> fs;
            for (const auto& jf : jr.at("factors"))
                fs.push_back({parse_poly(jf.at("poly").get<std::string>()), jf.at("multiplicity").get<unsigned>()});
            r.factors = Factorization(std::move(fs));
            if (jr.contains("blocked")) r.blocked = jr["blocked"].get<std::string>();
            rows.push_back(std::move(r));
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("table JSON: ") + e.what());
    }
    return rows;
}

std::vector<TableRow> parse_csv_table(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != "n,t,u_over_t,factorization")
        throw std::invalid_argument("table CSV: missing header n,t,u_over_t,factorization");
    std::vector<TableRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::size_t c1 = line.find(','), c2 = line.find(',', c1 + 1), c3 = line.find(',', c2 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos || c3 == std::string::npos)
            throw std::invalid_argument("table CSV: expected four fields in '" + line + "'");
        TableRow r;
        r.n = static_cast<std::size_t>(std::stoull(line.substr(0, c1)));
        const std::string t = line.substr(c1 + 1, c2 - c1 - 1), u = line.substr(c2 + 1, c3 - c2 - 1);
        if (!t.empty()) r.t = Natural::parse(t);
        if (!u.empty()) r.u_over_t = Natural::parse(u);
        r.factors = parse_factorization(line.substr(c3 + 1));
        rows.push_back(std::move(r));
    }
    return rows;
}

Factorization parse_factorization(std::string_view text) {
    std::vector<PolyFactor> fs;
    if (text.empty() || text.front() != '(') {
        fs.push_back({parse_poly(text), 1});
        return Factorization(std::move(fs));
    }
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] != '(') throw PolyParseError("expected '('", i);
        const std::size_t close = text.find(')', i);
        if (close == std::string_view::npos) throw PolyParseError("unbalanced '('", i);
        PolyFactor f{parse_poly(text.substr(i + 1, close - i - 1)), 1};
        i = close + 1;
        if (i < text.size() && text[i] == '^') {
            const std::size_t start = ++i;
            unsigned m = 0;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') m = m * 10 + static_cast<unsigned>(text[i++] - '0');
            if (i == start || m == 0) throw PolyParseError("bad multiplicity", start);
            f.multiplicity = m;
        }
        fs.push_back(std::move(f));
    }
    return Factorization(std::move(fs));
}

}  // namespace lampfield
