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

#include "ramcount/schubert.hpp"

#include <algorithm>
#include <stdexcept>

namespace ramcount {

ClassSum pieri_multiply(const ClassSum& s, int e, int d) {
    if (d < 1 || e < 1 || e > d) throw std::invalid_argument("special class order out of range");
    const int k = e - 1;
    ClassSum out;
    for (const auto& [cls, coeff] : s) {
        if (cls.a > d - 1 || cls.b < 0 || cls.a < cls.b) throw std::invalid_argument("class outside the box");
        if (coeff == 0) continue;
        // a' + b' = a + b + k with d - 1 >= a' >= a >= b' >= b.
        for (int b2 = cls.b; b2 <= cls.a; ++b2) {
            const int a2 = cls.a + cls.b + k - b2;
            if (a2 < cls.a || a2 > d - 1) continue;
            std::uint64_t& slot = out[SchubertClass{a2, b2}];
            if (__builtin_add_overflow(slot, coeff, &slot)) throw std::overflow_error("Schubert coefficient exceeds 64 bits");
        }
    }
    return out;
}

std::uint64_t intersection_number(int d, std::span<const int> orders, std::vector<ClassSum>* steps) {
    long long codim = 0;
    for (int e : orders) {
        if (e < 1 || e > d) throw std::invalid_argument("ramification order outside [1, d]");
        codim += e - 1;
    }
    if (codim != 2LL * (d - 1)) throw std::invalid_argument("codimensions are not complementary");
    ClassSum s{{SchubertClass{0, 0}, 1}};
    for (int e : orders) {
        s = pieri_multiply(s, e, d);
        if (steps) steps->push_back(s);
    }
    auto it = s.find(SchubertClass{d - 1, d - 1});
    return it == s.end() ? 0 : it->second;
}

}  // namespace ramcount
