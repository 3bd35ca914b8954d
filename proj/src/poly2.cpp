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

#include <algorithm>
#include <bit>
#include <cstring>

#include "lampfield/poly2.hpp"

namespace lampfield {

namespace detail {

std::int64_t words_degree(std::span<const Word> w) noexcept {
    for (std::size_t i = w.size(); i-- > 0;) {
        if (w[i]) return static_cast<std::int64_t>(i * kWordBits + (kWordBits - 1 - std::countl_zero(w[i])));
    }
    return -1;
}

void xor_shifted(std::vector<Word>& acc, std::span<const Word> src, std::size_t shift) {
    if (src.empty()) return;
    const std::size_t ws = shift / kWordBits;
    const unsigned bs = shift % kWordBits;
    const std::size_t need = ws + src.size() + (bs ? 1 : 0);
    if (acc.size() < need) acc.resize(need, 0);
    Word* out = acc.data() + ws;
    if (bs == 0) {
        for (std::size_t i = 0; i < src.size(); ++i) out[i] ^= src[i];
    } else {
        Word carry = 0;
        for (std::size_t i = 0; i < src.size(); ++i) {
            out[i] ^= (src[i] << bs) | carry;
            carry = src[i] >> (kWordBits - bs);
        }
        out[src.size()] ^= carry;
    }
}

}  // namespace detail

Poly2::Poly2(std::vector<Word> words) : w_(std::move(words)) { trim(); }

void Poly2::trim() noexcept {
    while (!w_.empty() && w_.back() == 0) w_.pop_back();
}

Poly2 Poly2::from_u64(Word bits) { return Poly2(std::vector<Word>{bits}); }

Poly2 Poly2::monomial(std::size_t e) {
    std::vector<Word> w(e / kWordBits + 1, 0);
    w.back() = Word{1} << (e % kWordBits);
    return Poly2(std::move(w));
}

Poly2 Poly2::from_exponents(std::initializer_list<std::size_t> exps) {
    return from_exponents(std::span<const std::size_t>(exps.begin(), exps.size()));
}

Poly2 Poly2::from_exponents(std::span<const std::size_t> exps) {
    std::vector<Word> w;
    for (const std::size_t e : exps) {
        if (w.size() <= e / kWordBits) w.resize(e / kWordBits + 1, 0);
        w[e / kWordBits] ^= Word{1} << (e % kWordBits);
    }
    return Poly2(std::move(w));
}

std::int64_t Poly2::degree() const noexcept {
    if (w_.empty()) return -1;
    return static_cast<std::int64_t>((w_.size() - 1) * kWordBits + (kWordBits - 1 - std::countl_zero(w_.back())));
}

std::size_t Poly2::term_count() const noexcept {
    std::size_t c = 0;
    for (const Word w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::vector<std::size_t> Poly2::exponents() const {
    std::vector<std::size_t> out;
    for (std::size_t i = w_.size(); i-- > 0;) {
        Word w = w_[i];
        while (w) {
            const unsigned b = kWordBits - 1 - static_cast<unsigned>(std::countl_zero(w));
            out.push_back(i * kWordBits + b);
            w &= ~(Word{1} << b);
        }
    }
    return out;
}

Word Poly2::to_u64() const {
    if (w_.size() > 1) throw std::overflow_error("Poly2::to_u64: degree exceeds 63");
    return w_.empty() ? 0 : w_[0];
}

std::strong_ordering operator<=>(const Poly2& a, const Poly2& b) noexcept {
    if (a.w_.size() != b.w_.size()) return a.w_.size() <=> b.w_.size();
    for (std::size_t i = a.w_.size(); i-- > 0;) {
        if (a.w_[i] != b.w_[i]) return a.w_[i] <=> b.w_[i];
    }
    return std::strong_ordering::equal;
}

Poly2 phi(std::size_t n) {
    if (n < 2) throw PolyDomainError("phi: n must be at least 2");
    return Poly2::from_exponents({n, 1, 0});
}

Poly2 add(const Poly2& f, const Poly2& g) {
    const auto a = f.words();
    const auto b = g.words();
    std::vector<Word> out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] ^= b[i];
    return Poly2(std::move(out));
}

Poly2 mul(const Poly2& f, const Poly2& g) {
    if (f.is_zero() || g.is_zero()) return {};
    std::vector<Word> out(f.word_count() + g.word_count(), 0);
    detail::mul_words(f.words(), g.words(), out);
    return Poly2(std::move(out));
}

Poly2 square(const Poly2& f) {
    if (f.is_zero()) return {};
    std::vector<Word> out(2 * f.word_count(), 0);
    detail::square_words(f.words(), out);
    return Poly2(std::move(out));
}

Poly2 shift_left(const Poly2& f, std::size_t k) {
    std::vector<Word> out;
    detail::xor_shifted(out, f.words(), k);
    return Poly2(std::move(out));
}

Poly2 shift_right(const Poly2& f, std::size_t k) {
    const auto src = f.words();
    const std::size_t ws = k / kWordBits;
    const unsigned bs = k % kWordBits;
    if (ws >= src.size()) return {};
    std::vector<Word> out(src.size() - ws, 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        Word v = src[i + ws] >> bs;
        if (bs && i + ws + 1 < src.size()) v |= src[i + ws + 1] << (kWordBits - bs);
        out[i] = v;
    }
    return Poly2(std::move(out));
}

namespace {

// Reduces r (in place) modulo g, recording quotient bits when q is given.
void long_divide(std::vector<Word>& r, const Poly2& g, std::vector<Word>* q) {
    const std::int64_t dg = g.degree();
    std::int64_t dr = detail::words_degree(r);
    while (dr >= dg) {
        const auto s = static_cast<std::size_t>(dr - dg);
        if (q) (*q)[s / kWordBits] |= Word{1} << (s % kWordBits);
        detail::xor_shifted(r, g.words(), s);
        dr = detail::words_degree(std::span<const Word>(r.data(), static_cast<std::size_t>(dr) / kWordBits + 1));
    }
}

}  // namespace

DivRem div_rem(const Poly2& f, const Poly2& g) {
    if (g.is_zero()) throw PolyDomainError("div_rem: division by zero polynomial");
    if (f.degree() < g.degree()) return {Poly2{}, f};
    std::vector<Word> r(f.words().begin(), f.words().end());
    std::vector<Word> q(static_cast<std::size_t>(f.degree() - g.degree()) / kWordBits + 1, 0);
    long_divide(r, g, &q);
    return {Poly2(std::move(q)), Poly2(std::move(r))};
}

Poly2 rem(const Poly2& f, const Poly2& g) {
    if (g.is_zero()) throw PolyDomainError("rem: division by zero polynomial");
    if (f.degree() < g.degree()) return f;
    std::vector<Word> r(f.words().begin(), f.words().end());
    long_divide(r, g, nullptr);
    return Poly2(std::move(r));
}

Poly2 quo(const Poly2& f, const Poly2& g) { return div_rem(f, g).quotient; }

Poly2 gcd(Poly2 f, Poly2 g) {
    if (f.is_zero() && g.is_zero()) throw PolyDomainError("gcd: both arguments are zero");
    std::vector<Word> a(f.words().begin(), f.words().end());
    std::vector<Word> b(g.words().begin(), g.words().end());
    std::int64_t da = detail::words_degree(a);
    std::int64_t db = detail::words_degree(b);
    if (da < db) {
        std::swap(a, b);
        std::swap(da, db);
    }
    while (db >= 0) {
        while (da >= db) {
            detail::xor_shifted(a, std::span<const Word>(b.data(), static_cast<std::size_t>(db) / kWordBits + 1),
                                static_cast<std::size_t>(da - db));
            da = detail::words_degree(std::span<const Word>(a.data(), static_cast<std::size_t>(da) / kWordBits + 1));
        }
        std::swap(a, b);
        std::swap(da, db);
    }
    a.resize(static_cast<std::size_t>(da) / kWordBits + 1);
    return Poly2(std::move(a));
}

ExtGcd ext_gcd(const Poly2& f, const Poly2& g) {
    if (f.is_zero() && g.is_zero()) throw PolyDomainError("ext_gcd: both arguments are zero");
    Poly2 r0 = f, r1 = g;
    Poly2 s0 = Poly2::one(), s1{};
    Poly2 t0{}, t1 = Poly2::one();
    while (!r1.is_zero()) {
        auto [q, r] = div_rem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly2 s2 = s0 + q * s1;
        Poly2 t2 = t0 + q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    return {std::move(r0), std::move(s0), std::move(t0)};
}

Poly2 derivative(const Poly2& f) {
    constexpr Word kOdd = 0xAAAAAAAAAAAAAAAAULL;
    const auto src = f.words();
    std::vector<Word> odd(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) odd[i] = src[i] & kOdd;
    return shift_right(Poly2(std::move(odd)), 1);
}

namespace {

// Gathers the even-indexed bits of w into the low 32 bits.
Word compress_even(Word w) noexcept {
    w &= 0x5555555555555555ULL;
    w = (w | (w >> 1)) & 0x3333333333333333ULL;
    w = (w | (w >> 2)) & 0x0F0F0F0F0F0F0F0FULL;
    w = (w | (w >> 4)) & 0x00FF00FF00FF00FFULL;
    w = (w | (w >> 8)) & 0x0000FFFF0000FFFFULL;
    w = (w | (w >> 16)) & 0x00000000FFFFFFFFULL;
    return w;
}

}  // namespace

std::optional<Poly2> square_root(const Poly2& f) {
    constexpr Word kOdd = 0xAAAAAAAAAAAAAAAAULL;
    const auto src = f.words();
    for (const Word w : src)
        if (w & kOdd) return std::nullopt;
    std::vector<Word> out((src.size() + 1) / 2, 0);
    for (std::size_t i = 0; i < src.size(); ++i) out[i / 2] |= compress_even(src[i]) << (32 * (i % 2));
    return Poly2(std::move(out));
}

}  // namespace lampfield
