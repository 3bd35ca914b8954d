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

#include "lampfield/verify_suite.hpp"

#include <bit>
#include <cstdio>
#include <stdexcept>

namespace lampfield {

Suite parse_suite(std::string_view s) {
    if (s == "props") return Suite::props;
    if (s == "conj-2n-1") return Suite::conj;
    if (s == "orbit-split") return Suite::orbit_split;
    if (s == "chain") return Suite::chain;
    if (s == "tensor") return Suite::tensor;
    if (s == "all") return Suite::all;
    throw std::invalid_argument("unknown suite '" + std::string(s) + "'");
}

std::string to_string(Suite s) {
    switch (s) {
        case Suite::props: return "props";
        case Suite::conj: return "conj-2n-1";
        case Suite::orbit_split: return "orbit-split";
        case Suite::chain: return "chain";
        case Suite::tensor: return "tensor";
        case Suite::all: return "all";
    }
    return "?";
}

std::size_t default_to(Suite s) {
    switch (s) {
        case Suite::props: return 64;
        case Suite::conj: return 9;
        case Suite::orbit_split: return 12;
        case Suite::chain: return 127;
        case Suite::tensor: return 12;
        case Suite::all: return 0;
    }
    return 0;
}

namespace {

using Clock = std::chrono::steady_clock;

class Runner {
   public:
    explicit Runner(const SuiteOptions& opts) : opts_(opts), catalog_(opts.order) {}

    template <class F>
    void check(std::string name, F&& body) {
        Verdict v;
        v.name = std::move(name);
        const auto start = Clock::now();
        try {
            body(v);
        } catch (const FactoringBudgetExceeded& e) {
            v.status = CheckStatus::budget_exceeded;
            v.detail = e.what();
        } catch (const std::exception& e) {
            v.status = CheckStatus::fail;
            v.detail = std::string("error: ") + e.what();
            if (v.counterexample.empty()) v.counterexample = v.name;
        }
        v.elapsed = Clock::now() - start;
        if (opts_.progress) opts_.progress(v);
        out_.push_back(std::move(v));
    }

    void props(std::size_t from, std::size_t to) {
        for (std::size_t n = std::max<std::size_t>(from, 2); n <= to; ++n) {
            const bool pow2 = std::has_single_bit(n);
            const bool pow2_plus1 = n >= 3 && std::has_single_bit(n - 1);
            if (!pow2 && !pow2_plus1) continue;
            check("closed-form t(" + std::to_string(n) + ")", [&](Verdict& v) {
                const Natural want = *closed_form_t(n);
                const Natural got = catalog_.t(n);
                v.status = got == want ? CheckStatus::pass : CheckStatus::fail;
                v.detail = "t = " + got.to_string() + (pow2 ? ", n^2 - 1 = " : ", n^2 - n + 1 = ") + want.to_string();
                if (v.status == CheckStatus::fail) v.counterexample = "n=" + std::to_string(n);
            });
            check("splitting-degree " + std::to_string(n), [&](Verdict& v) {
                const bool ok = splitting_degree_check(n, opts_.order.factor);
                v.status = ok ? CheckStatus::pass : CheckStatus::fail;
                v.detail = "factor degrees " + degree_list(catalog_.summary(n).factors);
                if (!ok) v.counterexample = "n=" + std::to_string(n);
            });
        }
    }

    void conj(std::size_t from, std::size_t to) {
        for (std::size_t n = std::max<std::size_t>(from, 2); n <= to; ++n) {
            std::optional<ConjVerdict> cv;
            check("divisibility 2^" + std::to_string(n) + "-1", [&](Verdict& v) {
                cv = conj_equal_check(n, catalog_, opts_.limits);
                if (cv->kind == ConjVerdict::Kind::budget_exceeded && !cv->t_n) {
                    v.status = CheckStatus::budget_exceeded;
                } else {
                    v.status = cv->divides ? CheckStatus::pass : CheckStatus::fail;
                    if (!cv->divides) v.counterexample = "n=" + std::to_string(n);
                }
                v.detail = cv->t_n ? "t(n) = " + cv->t_n->to_string() : cv->detail;
            });
            check("equality t(2^" + std::to_string(n) + "-1)", [&](Verdict& v) {
                if (!cv) {
                    v.status = CheckStatus::not_attempted;
                    return;
                }
                v.detail = to_string(cv->kind);
                if (!cv->detail.empty()) v.detail += ": " + cv->detail;
                switch (cv->kind) {
                    case ConjVerdict::Kind::verified: v.status = CheckStatus::pass; break;
                    case ConjVerdict::Kind::divisibility_only: v.status = CheckStatus::not_attempted; break;
                    case ConjVerdict::Kind::budget_exceeded: v.status = CheckStatus::budget_exceeded; break;
                    case ConjVerdict::Kind::refuted:
                        v.status = CheckStatus::fail;
                        v.counterexample = "n=" + std::to_string(n);
                        break;
                }
            });
        }
    }

    void orbit_split(std::size_t from, std::size_t to) {
        for (std::size_t n = std::max<std::size_t>(from, 2); n <= to; ++n)
            check("orbit-split " + std::to_string(n), [&](Verdict& v) { take(v, orbit_split_check(n, opts_.limits), n); });
    }

    void tensor(std::size_t from, std::size_t to) {
        for (std::size_t n = std::max<std::size_t>(from, 2); n <= to; ++n)
            check("tensor " + std::to_string(n),
                  [&](Verdict& v) { take(v, cor_tensor_check(n, catalog_, opts_.limits), n); });
    }

    void chain(std::size_t max_degree) {
        std::vector<ChainEntry> entries;
        try {
            entries = primitivity_chain_check(max_degree, opts_.order.budget);
        } catch (const std::exception& e) {
            check("chain", [&](Verdict& v) {
                v.status = CheckStatus::fail;
                v.detail = std::string("error: ") + e.what();
                v.counterexample = "max_degree=" + std::to_string(max_degree);
            });
            return;
        }
        for (const auto& e : entries) {
            check("chain Phi_" + e.n.to_string(), [&](Verdict& v) {
                v.status = e.status;
                v.detail = e.status == CheckStatus::not_attempted
                               ? "past degree limit " + std::to_string(max_degree)
                               : std::string(e.irreducible ? "irreducible" : "reducible") +
                                     (e.primitive ? ", primitive" : ", not primitive") +
                                     (e.certificate.empty() ? "" : " (" + e.certificate + ")");
                if (e.status == CheckStatus::fail) v.counterexample = "n=" + e.n.to_string();
            });
        }
    }

    std::vector<Verdict> take_results() { return std::move(out_); }

   private:
    static std::string degree_list(const Factorization& f) {
        std::string s;
        for (const auto& p : f.factors()) {
            for (unsigned m = 0; m < p.multiplicity; ++m) {
                if (!s.empty()) s += ',';
                s += std::to_string(p.poly.degree());
            }
        }
        return s;
    }

    static void take(Verdict& v, const CheckReport& r, std::size_t n) {
        v.status = r.status;
        v.detail = r.detail;
        if (r.status == CheckStatus::fail) v.counterexample = "n=" + std::to_string(n);
    }

    const SuiteOptions& opts_;
    RingCatalog catalog_;
    std::vector<Verdict> out_;
};

}  // namespace

std::vector<Verdict> run_suite(Suite s, const SuiteOptions& opts) {
    Runner r(opts);
    auto upto = [&](Suite which) { return opts.to.value_or(default_to(which)); };
    if (s == Suite::props || s == Suite::all) r.props(opts.from, upto(Suite::props));
    if (s == Suite::conj || s == Suite::all) r.conj(opts.from, upto(Suite::conj));
    if (s == Suite::orbit_split || s == Suite::all) r.orbit_split(opts.from, upto(Suite::orbit_split));
    if (s == Suite::tensor || s == Suite::all) r.tensor(opts.from, upto(Suite::tensor));
    if (s == Suite::chain) r.chain(upto(Suite::chain));
    if (s == Suite::all) r.chain(default_to(Suite::chain));
    return r.take_results();
}

int exit_code(const std::vector<Verdict>& verdicts) {
    bool budget = false;
    for (const auto& v : verdicts) {
        if (v.status == CheckStatus::fail) return 1;
        budget |= v.status == CheckStatus::budget_exceeded;
    }
    return budget ? 2 : 0;
}

std::string format_verdict(const Verdict& v) {
    std::string tag;
    switch (v.status) {
        case CheckStatus::pass: tag = "PASS"; break;
        case CheckStatus::fail: tag = "FAIL"; break;
        case CheckStatus::budget_exceeded: tag = "BUDGET"; break;
        case CheckStatus::not_attempted: tag = "SKIP"; break;
    }
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2f s", v.elapsed.count());
    std::string line = tag + "  " + v.name;
    if (!v.detail.empty()) line += "  " + v.detail;
    if (!v.counterexample.empty()) line += "  [counterexample " + v.counterexample + "]";
    return line + " (" + secs + ")";
}

}  // namespace lampfield
