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

// Carry-less multiplication kernels: a 64x64 word product (PCLMULQDQ when
// the CPU has it, otherwise a 4-bit windowed software routine), schoolbook
// accumulation, and Karatsuba above LAMPFIELD_KARATSUBA_WORDS.

#include <algorithm>
#include <array>
#include <vector>

#include "lampfield/poly2.hpp"

#if defined(LAMPFIELD_HAVE_PCLMUL)
#include <wmmintrin.h>
#endif

#ifndef LAMPFIELD_KARATSUBA_WORDS
#define LAMPFIELD_KARATSUBA_WORDS 32
#endif

namespace lampfield::detail {

namespace {

using u128 = unsigned __int128;
constexpr std::size_t kKaratsubaWords = LAMPFIELD_KARATSUBA_WORDS;

inline u128 clmul_soft(Word a, Word b) noexcept {
    std::array<u128, 16> tbl{};
    for (unsigned i = 1; i < 16; ++i) {
        tbl[i] = (i & 1) ? (tbl[i - 1] ^ static_cast<u128>(b)) : (tbl[i / 2] << 1);
    }
    u128 r = 0;
    for (int k = 15; k >= 0; --k) {
        r = (r << 4) ^ tbl[(a >> (4 * k)) & 0xF];
    }
    return r;
}

void schoolbook_soft(const Word* a, std::size_t na, const Word* b, std::size_t nb, Word* out) {
    std::fill(out, out + na + nb, Word{0});
    for (std::size_t i = 0; i < na; ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < nb; ++j) {
            const u128 p = clmul_soft(a[i], b[j]);
            out[i + j] ^= static_cast<Word>(p);
            out[i + j + 1] ^= static_cast<Word>(p >> 64);
        }
    }
}

#if defined(LAMPFIELD_HAVE_PCLMUL)
void schoolbook_hw(const Word* a, std::size_t na, const Word* b, std::size_t nb, Word* out) {
    std::fill(out, out + na + nb, Word{0});
    for (std::size_t i = 0; i < na; ++i) {
        if (!a[i]) continue;
        const __m128i va = _mm_set_epi64x(0, static_cast<long long>(a[i]));
        for (std::size_t j = 0; j < nb; ++j) {
            const __m128i vb = _mm_set_epi64x(0, static_cast<long long>(b[j]));
            const __m128i p = _mm_clmulepi64_si128(va, vb, 0x00);
            out[i + j] ^= static_cast<Word>(_mm_cvtsi128_si64(p));
            out[i + j + 1] ^= static_cast<Word>(_mm_cvtsi128_si64(_mm_srli_si128(p, 8)));
        }
    }
}
#endif

using Kernel = void (*)(const Word*, std::size_t, const Word*, std::size_t, Word*);

Kernel pick_kernel() {
#if defined(LAMPFIELD_HAVE_PCLMUL)
    __builtin_cpu_init();
    if (__builtin_cpu_supports("pclmul")) return schoolbook_hw;
#endif
    return schoolbook_soft;
}

const Kernel kSchoolbook = pick_kernel();

// out[0, na + nb) receives a*b.
void mul_rec(const Word* a, std::size_t na, const Word* b, std::size_t nb, Word* out) {
    if (na < nb) {
        std::swap(a, b);
        std::swap(na, nb);
    }
    if (nb == 0) {
        std::fill(out, out + na, Word{0});
        return;
    }
    if (nb < kKaratsubaWords) {
        kSchoolbook(a, na, b, nb, out);
        return;
    }
    const std::size_t h = (na + 1) / 2;
    if (nb <= h) {
        // Unbalanced: slice a into nb-word pieces.
        std::fill(out, out + na + nb, Word{0});
        std::vector<Word> tmp(2 * nb);
        for (std::size_t off = 0; off < na; off += nb) {
            const std::size_t len = std::min(nb, na - off);
            mul_rec(a + off, len, b, nb, tmp.data());
            for (std::size_t i = 0; i < len + nb; ++i) out[off + i] ^= tmp[i];
        }
        return;
    }
    const std::size_t na1 = na - h;
    const std::size_t nb1 = nb - h;
    // p0 -> out[0, 2h), p2 -> out[2h, na + nb)
    mul_rec(a, h, b, h, out);
    mul_rec(a + h, na1, b + h, nb1, out + 2 * h);

    std::vector<Word> scratch(4 * h);
    Word* as = scratch.data();
    Word* bs = as + h;
    Word* pm = bs + h;
    for (std::size_t i = 0; i < h; ++i) {
        as[i] = a[i] ^ (i < na1 ? a[h + i] : 0);
        bs[i] = b[i] ^ (i < nb1 ? b[h + i] : 0);
    }
    mul_rec(as, h, bs, h, pm);
    for (std::size_t i = 0; i < 2 * h; ++i) pm[i] ^= out[i];
    for (std::size_t i = 0; i < na1 + nb1; ++i) pm[i] ^= out[2 * h + i];
    for (std::size_t i = 0; i < 2 * h; ++i) out[h + i] ^= pm[i];
}

constexpr std::array<std::uint16_t, 256> make_spread_table() {
    std::array<std::uint16_t, 256> t{};
    for (unsigned v = 0; v < 256; ++v) {
        std::uint16_t s = 0;
        for (unsigned b = 0; b < 8; ++b)
            if (v & (1u << b)) s = static_cast<std::uint16_t>(s | (1u << (2 * b)));
        t[v] = s;
    }
    return t;
}

constexpr auto kSpread = make_spread_table();

inline Word spread32(std::uint32_t x) noexcept {
    return Word{kSpread[x & 0xFF]} | (Word{kSpread[(x >> 8) & 0xFF]} << 16) |
           (Word{kSpread[(x >> 16) & 0xFF]} << 32) | (Word{kSpread[x >> 24]} << 48);
}

}  // namespace

void mul_words(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) {
    std::fill(out.begin(), out.end(), Word{0});
    if (a.empty() || b.empty()) return;
    mul_rec(a.data(), a.size(), b.data(), b.size(), out.data());
}

void square_words(std::span<const Word> a, std::span<Word> out) {
    std::fill(out.begin(), out.end(), Word{0});
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[2 * i] = spread32(static_cast<std::uint32_t>(a[i]));
        out[2 * i + 1] = spread32(static_cast<std::uint32_t>(a[i] >> 32));
    }
}

}  // namespace lampfield::detail
