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

// lampfield command-line front end.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "lampfield/factor.hpp"
#include "lampfield/lampring.hpp"
#include "lampfield/table.hpp"
#include "lampfield/verify_suite.hpp"

namespace {

using namespace lampfield;

constexpr int kUsageError = 64;

struct Globals {
    std::uint64_t seed = 0;
    std::uint64_t budget = FactorBudget{}.rho_iterations;
    std::optional<std::uint64_t> cap;
    std::string format = "text";

    OrderOptions order() const {
        OrderOptions o;
        o.factor.seed = seed;
        o.budget.rho_iterations = budget;
        return o;
    }
};

int cmd_table(const Globals& g, std::size_t from, std::size_t to) {
    const TableFormat fmt = parse_table_format(g.format);
    if (from < 2 || from > to) throw std::invalid_argument("table: need 2 <= FROM <= TO");
    RingCatalog catalog(g.order());
    bool blocked = false;
    auto rows = build_table(from, to, catalog, [&](const TableRow& r) {
        std::cerr << "n=" << r.n << (r.blocked.empty() ? "" : " (budget exceeded)") << '\n';
        blocked |= !r.blocked.empty();
    });
    std::cout << render_table(rows, fmt);
    return blocked ? 2 : 0;
}

int cmd_render(const Globals& g, const std::string& path) {
    const TableFormat fmt = parse_table_format(g.format);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    auto rows = first != std::string::npos && text[first] == '{' ? parse_json_table(text) : parse_csv_table(text);
    std::cout << render_table(rows, fmt);
    return 0;
}

int cmd_t(const Globals& g, std::size_t n) {
    std::cout << t_of_n(n, g.order()) << '\n';
    return 0;
}

int cmd_simulate(const Globals& g, std::size_t n) {
    const std::uint64_t cap = g.cap.value_or(1'000'000'000);
    if (auto p = lamp_period(n, cap)) {
        std::cout << *p << '\n';
        return 0;
    }
    std::cerr << "lampfield: no return to all-on within " << cap << " steps\n";
    return 2;
}

int cmd_factor(const Globals& g, const std::string& arg) {
    Poly2 f;
    if (arg.rfind("phi:", 0) == 0) {
        const std::string num = arg.substr(4);
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("factor: expected phi:N with decimal N");
        const auto n = std::stoull(num);
        if (n < 2) throw std::invalid_argument("factor: phi:N needs N >= 2");
        f = phi(n);
    } else {
        f = parse_poly(arg);
    }
    if (f.is_zero()) throw std::invalid_argument("factor: zero polynomial");
    FactorOptions opts;
    opts.seed = g.seed;
    std::cout << factor(f, opts).to_string() << '\n';
    return 0;
}

int cmd_orbits(const Globals& g, std::size_t n) {
    if (n < 2) throw std::invalid_argument("orbits: need N >= 2");
    const std::uint64_t cap = g.cap.value_or(std::uint64_t{1} << 30);
    if (auto p = orbit_profile(n, cap)) {
        std::cout << p->to_string() << '\n';
        return 0;
    }
    std::cerr << "lampfield: 2^" << n << " elements exceed the cap of " << cap << " bits\n";
    return 2;
}

int cmd_verify(const Globals& g, const std::string& suite, std::size_t from, std::optional<std::size_t> to) {
    SuiteOptions opts;
    opts.from = from;
    opts.to = to;
    opts.order = g.order();
    if (g.cap) opts.limits.orbit_cap_bits = *g.cap;
    opts.progress = [](const Verdict& v) { std::cerr << "  " << v.name << ": " << to_string(v.status) << '\n'; };
    const auto verdicts = run_suite(parse_suite(suite), opts);
    for (const auto& v : verdicts) std::cout << format_verdict(v) << '\n';
    return exit_code(verdicts);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lampfield: GF(2) trinomials X^n + X + 1 and the lamp automaton"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--seed", g.seed, "EDF random seed")->envname("LAMPFIELD_SEED");
    app.add_option("--budget", g.budget, "Pollard rho iteration budget")->envname("LAMPFIELD_BUDGET");
    app.add_option("--cap", g.cap, "simulation step cap / orbit memory cap in bits")->envname("LAMPFIELD_CAP");
    app.add_option("--format", g.format, "table format: text, csv, json")
        ->envname("LAMPFIELD_FORMAT")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    std::function<int()> run;
    std::size_t from = 2, to = 2, n = 2;
    std::optional<std::size_t> verify_to;
    std::string text;

    auto* table = app.add_subcommand("table", "t(n) table for FROM..TO");
    table->add_option("FROM", from)->required();
    table->add_option("TO", to)->required();
    table->callback([&] { run = [&] { return cmd_table(g, from, to); }; });

    auto* sim = app.add_subcommand("simulate", "run the lamp automaton until all lamps are on again");
    sim->add_option("N", n)->required()->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
    sim->callback([&] { run = [&] { return cmd_simulate(g, n); }; });

    auto* tc = app.add_subcommand("t", "order of X in R_N");
    tc->add_option("N", n)->required()->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
    tc->callback([&] { run = [&] { return cmd_t(g, n); }; });

    auto* fc = app.add_subcommand("factor", "factor a polynomial literal or phi:N");
    fc->add_option("POLY", text, "polynomial literal or phi:N")->required();
    fc->callback([&] { run = [&] { return cmd_factor(g, text); }; });

    auto* oc = app.add_subcommand("orbits", "multiply-by-X orbit lengths in R_N");
    oc->add_option("N", n)->required()->check(CLI::Range(std::size_t{2}, std::size_t{40}));
    oc->callback([&] { run = [&] { return cmd_orbits(g, n); }; });

    auto* vc = app.add_subcommand("verify", "run a verification suite");
    vc->add_option("SUITE", text, "props, conj-2n-1, orbit-split, chain, tensor, all")
        ->required()
        ->check(CLI::IsMember({"props", "conj-2n-1", "orbit-split", "chain", "tensor", "all"}));
    vc->add_option("--from", from, "first n")->check(CLI::PositiveNumber);
    vc->add_option("--to", verify_to, "last n (chain: max degree)");
    vc->callback([&] { run = [&] { return cmd_verify(g, text, from, verify_to); }; });

    auto* rc = app.add_subcommand("render", "re-render a JSON or CSV table");
    rc->add_option("FILE", text)->required();
    rc->callback([&] { run = [&] { return cmd_render(g, text); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        return run();
    } catch (const FactoringBudgetExceeded& e) {
        std::cerr << "lampfield: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "lampfield: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "lampfield: " << e.what() << '\n';
        return 1;
    }
}
