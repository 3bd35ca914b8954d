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

#include "lampfield/natural.hpp"

#include <ostream>
#include <stdexcept>

namespace lampfield {

Natural::Natural(Storage v) : v_(std::move(v)) {
    if (v_.sign() < 0) throw std::domain_error("Natural: negative value");
}

Natural Natural::parse(std::string_view decimal) {
    if (decimal.empty()) throw std::invalid_argument("Natural: empty string");
    Storage v = 0;
    for (const char c : decimal) {
        if (c < '0' || c > '9')
            throw std::invalid_argument("Natural: not a decimal digit in '" + std::string(decimal) + "'");
        v = v * 10 + (c - '0');
    }
    return Natural(std::move(v));
}

Natural Natural::pow2(unsigned k) {
    Storage v = 1;
    v <<= k;
    return Natural(std::move(v));
}

Natural Natural::mersenne(unsigned k) { return pow2(k) - Natural(1); }

unsigned Natural::bit_length() const noexcept {
    if (v_.is_zero()) return 0;
    return static_cast<unsigned>(boost::multiprecision::msb(v_)) + 1;
}

std::uint64_t Natural::to_u64() const {
    if (!fits_u64()) throw std::overflow_error("Natural: value exceeds 64 bits");
    return v_.convert_to<std::uint64_t>();
}

std::string Natural::to_string() const { return v_.str(); }

Natural& Natural::operator-=(const Natural& o) {
    if (v_ < o.v_) throw std::domain_error("Natural: subtraction underflow");
    v_ -= o.v_;
    return *this;
}

Natural& Natural::operator/=(const Natural& o) {
    if (o.v_.is_zero()) throw std::domain_error("Natural: division by zero");
    v_ /= o.v_;
    return *this;
}

Natural& Natural::operator%=(const Natural& o) {
    if (o.v_.is_zero()) throw std::domain_error("Natural: division by zero");
    v_ %= o.v_;
    return *this;
}

Natural gcd(const Natural& a, const Natural& b) {
    return Natural(boost::multiprecision::gcd(a.raw(), b.raw()));
}

Natural lcm(const Natural& a, const Natural& b) {
    if (a.is_zero() || b.is_zero()) return Natural(0);
    return a / gcd(a, b) * b;
}

Natural mul_mod(const Natural& a, const Natural& b, const Natural& m) {
    return Natural(Natural::Storage(a.raw() * b.raw() % m.raw()));
}

Natural pow_mod(const Natural& base, const Natural& e, const Natural& m) {
    if (m.is_zero()) throw std::domain_error("pow_mod: zero modulus");
    return Natural(boost::multiprecision::powm(base.raw(), e.raw(), m.raw()));
}

Natural lcm_nat(std::span<const Natural> values) {
    Natural acc(1);
    for (const auto& v : values) {
        if (v.is_zero()) throw std::domain_error("lcm_nat: zero argument");
        acc = lcm(acc, v);
    }
    return acc;
}

std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.to_string(); }

}  // namespace lampfield
