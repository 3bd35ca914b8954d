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

#ifndef LAMPFIELD_POLY2_HPP
#define LAMPFIELD_POLY2_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lampfield/natural.hpp"

namespace lampfield {

using Word = std::uint64_t;
inline constexpr unsigned kWordBits = 64;

/// Dense polynomial over GF(2). Bit i of the word sequence is the
/// coefficient of X^i; words are little-endian.
///
/// Canonical form: the top word is nonzero (no slack words), so the
/// zero polynomial has no words at all and degree() is O(1).
class Poly2 {
   public:
    /// Zero polynomial.
    Poly2() = default;

    explicit Poly2(std::vector<Word> words);
    static Poly2 from_u64(Word bits);
    static Poly2 monomial(std::size_t e);
    static Poly2 from_exponents(std::initializer_list<std::size_t> exps);
    static Poly2 from_exponents(std::span<const std::size_t> exps);
    static Poly2 one() { return from_u64(1); }
    static Poly2 x() { return from_u64(2); }

    /// -1 for the zero polynomial.
    std::int64_t degree() const noexcept;
    bool is_zero() const noexcept { return w_.empty(); }
    bool is_one() const noexcept { return w_.size() == 1 && w_[0] == 1; }
    bool coeff(std::size_t i) const noexcept {
        return i / kWordBits < w_.size() && ((w_[i / kWordBits] >> (i % kWordBits)) & 1);
    }
    std::size_t term_count() const noexcept;
    /// Exponents with nonzero coefficient, descending.
    std::vector<std::size_t> exponents() const;

    std::span<const Word> words() const noexcept { return w_; }
    std::size_t word_count() const noexcept { return w_.size(); }
    /// Low 64 coefficients; throws std::overflow_error if degree >= 64.
    Word to_u64() const;

    friend bool operator==(const Poly2&, const Poly2&) = default;
    /// Order by degree, then by coefficient pattern read as a binary number.
    friend std::strong_ordering operator<=>(const Poly2& a, const Poly2& b) noexcept;

   private:
    std::vector<Word> w_;
    void trim() noexcept;
};

/// Domain errors raised by GF(2)[X] routines.
class PolyDomainError : public std::domain_error {
    using std::domain_error::domain_error;
};

/// Malformed polynomial text; position() is the byte offset of the problem.
class PolyParseError : public std::invalid_argument {
   public:
    PolyParseError(const std::string& what, std::size_t pos);
    std::size_t position() const noexcept { return pos_; }

   private:
    std::size_t pos_;
};

/// X^n + X + 1, n >= 2.
Poly2 phi(std::size_t n);

Poly2 add(const Poly2& f, const Poly2& g);
Poly2 mul(const Poly2& f, const Poly2& g);
/// f^2 by bit interleaving.
Poly2 square(const Poly2& f);
Poly2 shift_left(const Poly2& f, std::size_t k);
Poly2 shift_right(const Poly2& f, std::size_t k);

struct DivRem {
    Poly2 quotient;
    Poly2 remainder;
};
DivRem div_rem(const Poly2& f, const Poly2& g);
Poly2 rem(const Poly2& f, const Poly2& g);
Poly2 quo(const Poly2& f, const Poly2& g);

Poly2 gcd(Poly2 f, Poly2 g);

struct ExtGcd {
    Poly2 gcd;
    Poly2 alpha;
    Poly2 beta;
};
/// alpha*f + beta*g = gcd(f, g) with minimal-degree cofactors.
ExtGcd ext_gcd(const Poly2& f, const Poly2& g);

Poly2 derivative(const Poly2& f);

/// base^e mod m by square-and-multiply; deg m >= 1.
Poly2 pow_mod(const Poly2& base, const Natural& e, const Poly2& m);

/// g with g^2 = f, or nullopt when f has an odd-degree term.
std::optional<Poly2> square_root(const Poly2& f);

/// Descending powers, " + " separated, e.g. "X^2 + X + 1"; "0" for zero.
std::string format(const Poly2& f);
/// Accepts `0` or terms `1`, `X`, `X^k` joined by `+` in any order.
/// Repeated terms cancel, as they would in a sum over GF(2).
Poly2 parse_poly(std::string_view text);

inline Poly2 operator+(const Poly2& a, const Poly2& b) { return add(a, b); }
inline Poly2 operator*(const Poly2& a, const Poly2& b) { return mul(a, b); }
inline Poly2 operator%(const Poly2& a, const Poly2& b) { return rem(a, b); }
inline Poly2 operator/(const Poly2& a, const Poly2& b) { return quo(a, b); }

namespace detail {
// Word-level kernels, shared with Modulus.
void mul_words(std::span<const Word> a, std::span<const Word> b, std::span<Word> out);
void square_words(std::span<const Word> a, std::span<Word> out);
void xor_shifted(std::vector<Word>& acc, std::span<const Word> src, std::size_t shift);
std::int64_t words_degree(std::span<const Word> w) noexcept;
}  // namespace detail

}  // namespace lampfield

#endif
