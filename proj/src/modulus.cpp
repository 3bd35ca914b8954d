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

#include "lampfield/modulus.hpp"

#include <algorithm>

namespace lampfield {

namespace {

constexpr std::size_t kSparseMaxTerms = 16;
constexpr std::size_t kSparseMinGap = 8;

Word extract_bits(std::span<const Word> w, std::size_t pos, unsigned len) {
    const std::size_t wi = pos / kWordBits;
    const unsigned bi = pos % kWordBits;
    Word v = w[wi] >> bi;
    if (bi && wi + 1 < w.size()) v |= w[wi + 1] << (kWordBits - bi);
    return len == kWordBits ? v : (v & ((Word{1} << len) - 1));
}

void xor_bits(std::vector<Word>& w, std::size_t pos, Word v) {
    const std::size_t wi = pos / kWordBits;
    const unsigned bi = pos % kWordBits;
    w[wi] ^= v << bi;
    if (bi && wi + 1 < w.size()) w[wi + 1] ^= v >> (kWordBits - bi);
}

}  // namespace

Modulus::Modulus(Poly2 m) : m_(std::move(m)), k_(0), sparse_(false) {
    if (m_.degree() < 1) throw PolyDomainError("Modulus: modulus must have degree at least 1");
    k_ = static_cast<std::size_t>(m_.degree());
    auto exps = m_.exponents();
    low_terms_.assign(exps.begin() + 1, exps.end());
    const std::size_t gap = low_terms_.empty() ? k_ : k_ - low_terms_.front();
    sparse_ = exps.size() <= kSparseMaxTerms && gap >= std::min(kSparseMinGap, k_);
    if (sparse_) {
        chunk_bits_ = static_cast<unsigned>(std::min<std::size_t>(kWordBits, gap));
    } else {
        mu_ = quo(Poly2::monomial(2 * k_), m_);
    }
}

void Modulus::reduce_sparse(std::vector<Word>& w) const {
    std::int64_t d = detail::words_degree(w);
    const auto k = static_cast<std::int64_t>(k_);
    while (d >= k) {
        const std::int64_t lo = std::max(k, d - static_cast<std::int64_t>(chunk_bits_) + 1);
        const auto len = static_cast<unsigned>(d - lo + 1);
        const auto ulo = static_cast<std::size_t>(lo);
        const Word c = extract_bits(w, ulo, len);
        xor_bits(w, ulo, c);
        // chunk_bits_ <= gap keeps every target strictly below lo.
        for (const std::size_t e : low_terms_) xor_bits(w, ulo - k_ + e, c);
        d = detail::words_degree(std::span<const Word>(w.data(), static_cast<std::size_t>(d) / kWordBits + 1));
    }
}

Poly2 Modulus::reduce_barrett(const Poly2& f) const {
    // Exact for deg f < 2k: floor((f div X^k) * mu / X^k) is the quotient.
    const Poly2 q = shift_right(lampfield::mul(shift_right(f, k_), mu_), k_);
    return add(f, lampfield::mul(q, m_));
}

Poly2 Modulus::reduce(const Poly2& f) const {
    if (f.degree() < static_cast<std::int64_t>(k_)) return f;
    if (sparse_) {
        std::vector<Word> w(f.words().begin(), f.words().end());
        reduce_sparse(w);
        return Poly2(std::move(w));
    }
    if (f.degree() < static_cast<std::int64_t>(2 * k_)) return reduce_barrett(f);
    return rem(f, m_);
}

Poly2 Modulus::mul(const Poly2& a, const Poly2& b) const {
    return reduce(lampfield::mul(reduce(a), reduce(b)));
}

Poly2 Modulus::square(const Poly2& a) const { return reduce(lampfield::square(reduce(a))); }

Poly2 Modulus::frobenius(Poly2 a, std::size_t times) const {
    a = reduce(a);
    for (std::size_t i = 0; i < times; ++i) a = reduce(lampfield::square(a));
    return a;
}

Poly2 Modulus::pow(const Poly2& base, const Natural& e) const {
    const Poly2 b = reduce(base);
    Poly2 r = reduce(Poly2::one());
    for (unsigned i = e.bit_length(); i-- > 0;) {
        r = reduce(lampfield::square(r));
        if (e.bit(i)) r = reduce(lampfield::mul(r, b));
    }
    return r;
}

Poly2 pow_mod(const Poly2& base, const Natural& e, const Poly2& m) {
    if (m.degree() < 1) throw PolyDomainError("pow_mod: modulus must have degree at least 1");
    return Modulus(m).pow(base, e);
}

}  // namespace lampfield
