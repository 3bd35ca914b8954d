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

#include <cctype>
#include <string>
#include <vector>

#include "lampfield/poly2.hpp"

namespace lampfield {

PolyParseError::PolyParseError(const std::string& what, std::size_t pos)
    : std::invalid_argument(what + " at position " + std::to_string(pos)), pos_(pos) {}

std::string format(const Poly2& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const std::size_t e : f.exponents()) {
        if (!out.empty()) out += " + ";
        if (e == 0)
            out += '1';
        else if (e == 1)
            out += 'X';
        else
            out += "X^" + std::to_string(e);
    }
    return out;
}

namespace {

// Exponents above this are rejected rather than allocated.
constexpr std::size_t kMaxParsedExponent = std::size_t{1} << 36;

class PolyParser {
   public:
    explicit PolyParser(std::string_view s) : s_(s) {}

    Poly2 run() {
        skip_spaces();
        if (at_end()) throw PolyParseError("empty polynomial", pos_);
        if (peek() == '0') {
            ++pos_;
            skip_spaces();
            if (!at_end()) throw PolyParseError("unexpected text after '0'", pos_);
            return {};
        }
        std::vector<std::size_t> exps;
        for (;;) {
            exps.push_back(term());
            skip_spaces();
            if (at_end()) break;
            if (peek() != '+') throw PolyParseError("expected '+'", pos_);
            ++pos_;
            skip_spaces();
        }
        return Poly2::from_exponents(exps);
    }

   private:
    std::string_view s_;
    std::size_t pos_ = 0;

    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void skip_spaces() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    std::size_t term() {
        if (at_end()) throw PolyParseError("expected a term", pos_);
        if (peek() == '1') {
            ++pos_;
            if (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
                throw PolyParseError("constant terms other than 1 are not allowed", pos_ - 1);
            return 0;
        }
        if (peek() != 'X') throw PolyParseError("expected '1' or 'X'", pos_);
        ++pos_;
        if (at_end() || peek() != '^') return 1;
        ++pos_;
        const std::size_t start = pos_;
        std::size_t e = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            e = e * 10 + static_cast<std::size_t>(peek() - '0');
            if (e > kMaxParsedExponent) throw PolyParseError("exponent too large", start);
            ++pos_;
        }
        if (pos_ == start) throw PolyParseError("expected exponent after '^'", pos_);
        return e;
    }
};

}  // namespace

Poly2 parse_poly(std::string_view text) { return PolyParser(text).run(); }

}  // namespace lampfield
