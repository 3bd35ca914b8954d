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

#ifndef LAMPFIELD_MODULUS_HPP
#define LAMPFIELD_MODULUS_HPP

#include <cstddef>
#include <vector>

#include "lampfield/natural.hpp"
#include "lampfield/poly2.hpp"

namespace lampfield {

/// Precomputed reduction context for arithmetic in GF(2)[X]/(m).
///
/// Sparse moduli (few terms, wide gap below the leading term) reduce a
/// chunk of up to 64 high bits at a time by XOR-ing it onto the lower
/// terms. Everything else uses Barrett reduction with mu = X^(2k) div m.
class Modulus {
   public:
    /// deg m >= 1, otherwise PolyDomainError.
    explicit Modulus(Poly2 m);

    const Poly2& poly() const noexcept { return m_; }
    std::size_t degree() const noexcept { return k_; }
    bool is_sparse() const noexcept { return sparse_; }

    Poly2 reduce(const Poly2& f) const;
    Poly2 mul(const Poly2& a, const Poly2& b) const;
    Poly2 square(const Poly2& a) const;
    /// a^(2^times).
    Poly2 frobenius(Poly2 a, std::size_t times) const;
    Poly2 pow(const Poly2& base, const Natural& e) const;

   private:
    Poly2 m_;
    std::size_t k_;
    bool sparse_;
    std::vector<std::size_t> low_terms_;  // exponents of m below k, descending
    unsigned chunk_bits_ = 0;
    Poly2 mu_;

    void reduce_sparse(std::vector<Word>& w) const;
    Poly2 reduce_barrett(const Poly2& f) const;
};

}  // namespace lampfield

#endif
