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

#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "ramcount/schubert.hpp"

using namespace ramcount;

namespace {

// Pieri by exhaustive search over every pair in the box.
ClassSum pieri_by_search(const ClassSum& s, int e, int d) {
    ClassSum out;
    for (const auto& [c, k] : s)
        for (int a2 = 0; a2 <= d - 1; ++a2)
            for (int b2 = 0; b2 <= a2; ++b2)
                if (a2 + b2 == c.a + c.b + e - 1 && a2 >= c.a && c.a >= b2 && b2 >= c.b) out[{a2, b2}] += k;
    return out;
}

}  // namespace

TEST_CASE("Pieri products in G(1,3)") {
    const ClassSum id{{{0, 0}, 1}};
    CHECK(pieri_multiply(id, 2, 3) == ClassSum{{{1, 0}, 1}});
    CHECK(pieri_multiply(ClassSum{{{1, 0}, 1}}, 2, 3) == (ClassSum{{{2, 0}, 1}, {{1, 1}, 1}}));
    // (1,1) times the class of order 3 has no admissible pair in the box.
    CHECK(pieri_multiply(ClassSum{{{1, 1}, 1}}, 3, 3) == pieri_by_search(ClassSum{{{1, 1}, 1}}, 3, 3));
    CHECK(pieri_multiply(ClassSum{{{1, 1}, 1}}, 3, 3).empty());
    CHECK_THROWS(pieri_multiply(id, 0, 3));
    CHECK_THROWS(pieri_multiply(id, 4, 3));
}

TEST_CASE("Pieri agrees with exhaustive search") {
    for (int d = 1; d <= 8; ++d) {
        std::vector<ClassSum> frontier{ClassSum{{{0, 0}, 1}}};
        for (int step = 0; step < 3; ++step)
            for (int e = 1; e <= d; ++e) {
                const ClassSum next = pieri_multiply(frontier.back(), e, d);
                REQUIRE(next == pieri_by_search(frontier.back(), e, d));
                if (e == std::min(d, 2)) frontier.push_back(next);
            }
    }
}

TEST_CASE("intersection numbers") {
    CHECK(intersection_number(3, std::vector<int>{2, 2, 3}) == 1);
    CHECK(intersection_number(3, std::vector<int>{2, 2, 2, 2}) == 2);
    CHECK(intersection_number(4, std::vector<int>{2, 2, 3, 3}) == 2);
    CHECK_THROWS(intersection_number(3, std::vector<int>{2, 2, 2}));
    std::vector<ClassSum> steps;
    intersection_number(3, std::vector<int>{2, 2, 2, 2}, &steps);
    REQUIRE(steps.size() == 4);
    CHECK(steps.back() == ClassSum{{{2, 2}, 2}});
}

TEST_CASE("three-point intersection numbers are 1") {
    for (int d = 1; d <= 8; ++d)
        for (int e1 = 1; e1 <= d; ++e1)
            for (int e2 = 1; e2 <= d; ++e2) {
                const int e3 = 2 * d - 2 - (e1 - 1) - (e2 - 1) + 1;
                if (e3 < 1 || e3 > d) continue;
                CHECK(intersection_number(d, std::vector<int>{e1, e2, e3}) == 1);
            }
}

TEST_CASE("order independence and tableau counts") {
    for (int d = 2; d <= 6; ++d) {
        // All profiles with n <= 6 and orders in [2, d].
        std::vector<int> cur;
        std::function<void(int, int)> rec = [&](int lo, int left) {
            if (left == 0) {
                if (cur.size() < 3 || cur.size() > 6) return;
                const auto v = intersection_number(d, cur);
                REQUIRE(v == oracle::two_row_kostka(d, cur));
                std::vector<ClassSum> steps;
                intersection_number(d, cur, &steps);
                for (const auto& [c, k] : steps.back()) CHECK((c.a == d - 1 && c.b == d - 1));
                std::vector<int> perm = cur;
                while (std::next_permutation(perm.begin(), perm.end())) REQUIRE(intersection_number(d, perm) == v);
                return;
            }
            for (int e = lo; e <= d && e - 1 <= left; ++e) {
                cur.push_back(e);
                rec(e, left - (e - 1));
                cur.pop_back();
            }
        };
        rec(2, 2 * d - 2);
    }
}
