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

#ifndef LAMPFIELD_NATURAL_HPP
#define LAMPFIELD_NATURAL_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace lampfield {

/// Arbitrary-precision nonnegative integer.
///
/// Subtraction that would go negative throws std::domain_error, so every
/// value observed through this type is a natural number.
class Natural {
   public:
    using Storage = boost::multiprecision::cpp_int;

    Natural() = default;
    Natural(std::uint64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    explicit Natural(Storage v);

    /// Parses a decimal string; throws std::invalid_argument on bad input.
    static Natural parse(std::string_view decimal);
    /// 2^k.
    static Natural pow2(unsigned k);
    /// 2^k - 1.
    static Natural mersenne(unsigned k);

    bool is_zero() const noexcept { return v_.is_zero(); }
    bool is_one() const noexcept { return v_ == 1; }
    bool is_even() const noexcept { return !boost::multiprecision::bit_test(v_, 0); }

    /// Number of significant bits; 0 for zero.
    unsigned bit_length() const noexcept;
    bool bit(unsigned i) const noexcept { return boost::multiprecision::bit_test(v_, i); }

    bool fits_u64() const noexcept { return bit_length() <= 64; }
    /// Throws std::overflow_error when the value exceeds 64 bits.
    std::uint64_t to_u64() const;

    std::string to_string() const;
    const Storage& raw() const noexcept { return v_; }

    Natural& operator+=(const Natural& o) { v_ += o.v_; return *this; }
    Natural& operator-=(const Natural& o);
    Natural& operator*=(const Natural& o) { v_ *= o.v_; return *this; }
    Natural& operator/=(const Natural& o);
    Natural& operator%=(const Natural& o);
    Natural& operator<<=(unsigned k) { v_ <<= k; return *this; }
    Natural& operator>>=(unsigned k) { v_ >>= k; return *this; }

    friend Natural operator+(Natural a, const Natural& b) { return a += b; }
    friend Natural operator-(Natural a, const Natural& b) { return a -= b; }
    friend Natural operator*(Natural a, const Natural& b) { return a *= b; }
    friend Natural operator/(Natural a, const Natural& b) { return a /= b; }
    friend Natural operator%(Natural a, const Natural& b) { return a %= b; }
    friend Natural operator<<(Natural a, unsigned k) { return a <<= k; }
    friend Natural operator>>(Natural a, unsigned k) { return a >>= k; }

    friend bool operator==(const Natural& a, const Natural& b) noexcept { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) noexcept {
        const int c = a.v_.compare(b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

   private:
    Storage v_;
};

Natural gcd(const Natural& a, const Natural& b);
Natural lcm(const Natural& a, const Natural& b);
/// (a * b) mod m, m > 0.
Natural mul_mod(const Natural& a, const Natural& b, const Natural& m);
/// base^e mod m, m > 0.
Natural pow_mod(const Natural& base, const Natural& e, const Natural& m);

/// Least common multiple of a list; the empty list gives 1.
Natural lcm_nat(std::span<const Natural> values);

std::ostream& operator<<(std::ostream& os, const Natural& n);

}  // namespace lampfield

#endif
