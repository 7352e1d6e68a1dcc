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

#ifndef RAMCOUNT_SCHUBERT_HPP
#define RAMCOUNT_SCHUBERT_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace ramcount {

/// Two-row partition (a, b) with d - 1 >= a >= b >= 0, a Schubert class on
/// the Grassmannian of pencils of degree-d polynomials.
struct SchubertClass {
    int a = 0;
    int b = 0;
    friend auto operator<=>(const SchubertClass&, const SchubertClass&) = default;
};

using ClassSum = std::map<SchubertClass, std::uint64_t>;

/// Multiplies by the special class (e - 1, 0); requires 1 <= e <= d.
ClassSum pieri_multiply(const ClassSum& s, int e, int d);

/// Coefficient of the point class (d - 1, d - 1) in the product of the
/// special classes (e_i - 1, 0). When steps is given it receives the partial
/// products after each factor.
std::uint64_t intersection_number(int d, std::span<const int> orders, std::vector<ClassSum>* steps = nullptr);

}  // namespace ramcount

#endif
