/*
   Copyright 2026 The ramcount Authors

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

#ifndef RAMCOUNT_FIELD_HPP
#define RAMCOUNT_FIELD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace ramcount {

/// Element of F_{p^k}: the integer sum c_i p^i of its coordinates over F_p in
/// the basis 1, y, ..., y^{k-1}. Only meaningful together with its field.
struct Elem {
    std::uint32_t v = 0;
    friend constexpr bool operator==(Elem, Elem) = default;
    friend constexpr auto operator<=>(Elem, Elem) = default;
};

bool is_prime(long long n) noexcept;

/// F_{p^k} = F_p[y]/(m(y)) with m the lexicographically least monic
/// irreducible polynomial of degree k. Cheap to copy (shared tables).
class FiniteField {
  public:
    /// Throws std::invalid_argument for p not an odd prime, k < 1, or q > 2^24.
    FiniteField(int p, int k = 1);

    int characteristic() const noexcept;
    int extension_degree() const noexcept;
    std::uint32_t order() const noexcept;
    /// Coefficients of the modulus, low degree first, length k + 1.
    const std::vector<std::uint32_t>& modulus() const noexcept;

    Elem zero() const noexcept { return Elem{0}; }
    Elem one() const noexcept { return Elem{1}; }
    Elem from_int(long long n) const noexcept;
    /// The element with index i in [0, q).
    Elem element(std::uint32_t i) const;
    /// A primitive element (generator of the multiplicative group).
    Elem generator() const noexcept;

    Elem add(Elem a, Elem b) const noexcept;
    Elem sub(Elem a, Elem b) const noexcept;
    Elem neg(Elem a) const noexcept;
    Elem mul(Elem a, Elem b) const noexcept;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const;
    Elem pow(Elem a, std::uint64_t n) const noexcept;
    Elem frobenius(Elem a) const noexcept;
    Elem pth_root(Elem a) const noexcept;

    std::string format(Elem a) const;
    Elem parse(std::string_view s) const;

    friend bool operator==(const FiniteField& a, const FiniteField& b) noexcept;

  private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

/// Throws std::invalid_argument("field mismatch") unless a == b.
void require_same_field(const FiniteField& a, const FiniteField& b);

}  // namespace ramcount

#endif
