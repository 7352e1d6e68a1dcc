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
#include <functional>

#include "oracles.hpp"
#include "ramcount/counting.hpp"
#include "ramcount/pencil.hpp"
#include "ramcount/schubert.hpp"

using namespace ramcount;

namespace {

const Characteristic kInf = Characteristic::infinite();
Characteristic pr(int p) { return Characteristic::prime(p); }

// Every nondecreasing profile with orders in [1, d_max] and n orders that
// satisfies the parity condition.
void for_profiles(int n, int e_max, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int lo) {
        if (static_cast<int>(cur.size()) == n) {
            int total = 0;
            for (int e : cur) total += e - 1;
            if (total % 2 == 0) fn(cur);
            return;
        }
        for (int e = lo; e <= e_max; ++e) {
            cur.push_back(e);
            rec(e);
            cur.pop_back();
        }
    };
    rec(1);
}

}  // namespace

TEST_CASE("characteristic parsing") {
    CHECK(parse_characteristic("inf").is_infinite());
    CHECK(parse_characteristic("7").value() == 7);
    CHECK_THROWS(parse_characteristic("2"));
    CHECK_THROWS(parse_characteristic("15"));
    CHECK_THROWS(parse_characteristic("x"));
    CHECK_THROWS(Characteristic::infinite().value());
}

TEST_CASE("profile validation and classes") {
    const RamProfile a = validate_profile({2, 2, 3}, pr(7));
    CHECK(a.d == 3);
    CHECK(a.char_class == CharClass::High);
    const RamProfile b = validate_profile({2, 2, 2, 2}, pr(3));
    CHECK(b.d == 3);
    CHECK(b.char_class == CharClass::Mid);
    CHECK_THROWS_AS(validate_profile({2, 2, 2}, pr(5)), std::invalid_argument);
    CHECK_THROWS_AS(validate_profile({}, pr(5)), std::invalid_argument);
    CHECK_THROWS_AS(validate_profile({0, 2, 2, 2}, pr(5)), std::invalid_argument);
    const RamProfile c = validate_profile({3, 3, 3}, pr(3));
    CHECK(c.wild);
    CHECK(c.char_class == CharClass::Low);
    CHECK(validate_profile({2, 2, 2, 2}, kInf).char_class == CharClass::High);
}

TEST_CASE("three-point count") {
    CHECK(n_three(2, 2, 3, pr(5)) == 1);
    CHECK(n_three(2, 2, 3, pr(3)) == 0);
    CHECK(n_three(1, 2, 2, pr(5)) == 1);
    std::string why;
    CHECK(n_three(2, 2, 2, pr(5), &why) == 0);
    CHECK(why == "odd total ramification");
    CHECK(n_three(1, 1, 5, pr(7), &why) == 0);
    CHECK(why == "order exceeds degree");
}

TEST_CASE("degenerate three-point profiles agree with the linear solver") {
    // e = 1 entries: the condition is vacuous and the solver still decides.
    // The closed rule needs two orders below p (or d < p).
    for (int p : {3, 5, 7}) {
        const FiniteField f(p, 2);
        for (int d = 1; d <= 5; ++d)
            for (int e1 = 1; e1 <= d; ++e1)
                for (int e2 = 1; e2 <= d; ++e2) {
                    const int e3 = 2 * d - 2 - (e1 - 1) - (e2 - 1) + 1;
                    if (e3 < 1 || e3 > d) continue;
                    if (d >= p && (e1 < p) + (e2 < p) + (e3 < p) < 2) continue;
                    const ThreePointSolution s = solve_three_point(d, e1, e2, e3, f);
                    const int n = n_three(e1, e2, e3, pr(p));
                    REQUIRE(s.m == 0);
                    CHECK((s.separable ? 1 : 0) == n);
                }
    }
}

TEST_CASE("closed three-point rule outside its hypotheses") {
    // Only one order below p: x^4 is separable in characteristic 3 and is the
    // unique solution, yet the closed rule gives 0.
    const ThreePointSolution s = solve_three_point(4, 1, 4, 4, FiniteField(3, 2));
    CHECK(s.m == 0);
    CHECK(s.separable);
    CHECK(n_three(1, 4, 4, pr(3)) == 0);
    CHECK(validate_profile({1, 4, 4}, pr(3)).char_class == CharClass::Low);
}

TEST_CASE("recursion examples") {
    CHECK(count({2, 2, 2, 2}, pr(3)).value == 1u);
    CHECK(count({2, 2, 2, 2}, pr(5)).value == 2u);
    CHECK(count({2, 2, 2, 2}, kInf).value == 2u);
    CHECK(count({2, 2, 3, 3}, kInf).value == 2u);
    CHECK(count({2, 3, 3, 4}, pr(5)).value == 1u);
    CHECK(count({2, 3, 3, 4}, pr(5)).value == n_four_closed(std::vector<int>{2, 3, 3, 4}, pr(5)));
    const CountResult low = count({6, 6, 3}, pr(5));
    CHECK(low.profile.char_class == CharClass::Low);
    CHECK_FALSE(low.value);
    const CountResult wild = count({3, 3, 3}, pr(3));
    CHECK(wild.value == 0u);
    CHECK(wild.reason == "wild excluded");
    const CountResult big = count({1, 1, 1, 5}, pr(7));
    CHECK(big.value == 0u);
}

TEST_CASE("recursion trace follows the summation range") {
    const CountResult r = count({2, 2, 2, 2}, pr(5));
    // d = 3, e_{n-1} = e_n = 2: d' runs over [2, min(3, 5 + 3 - 4)] = [2, 3].
    REQUIRE(r.trace.size() == 2);
    CHECK(r.trace[0].dprime == 2);
    CHECK(r.trace[0].e == 1);
    CHECK(r.trace[1].dprime == 3);
    CHECK(r.trace[1].e == 3);
    const CountResult q = count({2, 2, 2, 2}, pr(3));
    REQUIRE(q.trace.size() == 1);
    CHECK(q.trace[0].dprime == 2);
}

TEST_CASE("closed form for four points") {
    CHECK(n_four_closed(std::vector<int>{2, 2, 2, 2}, pr(3)) == 1u);
    CHECK(n_four_closed(std::vector<int>{2, 2, 2, 2}, pr(7)) == 2u);
    CHECK(n_four_closed(std::vector<int>{2, 3, 3, 4}, pr(5)) == 1u);
    CHECK_FALSE(n_four_closed(std::vector<int>{2, 2, 3, 5}, pr(5)));
    CHECK_THROWS(n_four_closed(std::vector<int>{2, 2, 2}, pr(5)));
}

TEST_CASE("involution reduction") {
    const RamProfile a = validate_profile({2, 2, 2, 2}, pr(5));
    const RamProfile b = involution_reduce(a, 0, 1);
    CHECK(b.orders == std::vector<int>{3, 3, 2, 2});
    CHECK(b.d == 4);
    CHECK(involution_reduce(b, 0, 1).orders == a.orders);
    CHECK_THROWS(involution_reduce(validate_profile({2, 2, 2, 2}, kInf), 0, 1));
    CHECK_THROWS(involution_reduce(a, 0, 7));
    CHECK_THROWS(involution_reduce(validate_profile({2, 2, 6, 6, 6, 6}, pr(5)), 0, 2));
}

TEST_CASE("recursion is symmetric under permutations") {
    CountMemo memo;
    for (int n = 3; n <= 6; ++n)
        for_profiles(n, 10, [&](const std::vector<int>& base) {
            int total = 0;
            for (int e : base) total += e - 1;
            const int d = total / 2 + 1;
            if (d > 10) return;
            for (int p : {3, 5, 7, 11, 13, 17, 19, 23}) {
                const RamProfile prof = validate_profile(base, pr(p));
                if (prof.char_class == CharClass::Low || prof.oversize) continue;
                const auto ref = n_gen_recursive(prof, nullptr).value;
                std::vector<int> perm = base;
                int checked = 0;
                while (std::next_permutation(perm.begin(), perm.end()) && checked < 12) {
                    ++checked;
                    REQUIRE(n_gen_recursive(validate_profile(perm, pr(p)), &memo).value == ref);
                }
            }
        });
}

TEST_CASE("high characteristic counts do not depend on p") {
    for (int n = 3; n <= 6; ++n)
        for_profiles(n, 8, [&](const std::vector<int>& orders) {
            const RamProfile zero = validate_profile(orders, kInf);
            if (zero.oversize || zero.d > 8) return;
            const auto ref = n_gen_recursive(zero).value;
            for (int p : {11, 13, 17, 19, 23})
                if (p > zero.d) REQUIRE(count(orders, pr(p)).value == ref);
        });
}

TEST_CASE("characteristic zero recursion matches tableau counts") {
    for (int n = 3; n <= 5; ++n)
        for_profiles(n, 6, [&](const std::vector<int>& orders) {
            const RamProfile zero = validate_profile(orders, kInf);
            if (zero.oversize || zero.d > 6) return;
            REQUIRE(count(orders, kInf).value == oracle::two_row_kostka(zero.d, orders));
        });
}

TEST_CASE("memo table is consistent with fresh evaluation") {
    CountMemo memo;
    for (int rep = 0; rep < 2; ++rep)
        for_profiles(5, 6, [&](const std::vector<int>& orders) {
            const RamProfile prof = validate_profile(orders, pr(7));
            if (prof.char_class == CharClass::Low || prof.oversize) return;
            REQUIRE(n_gen_recursive(prof, &memo).value == n_gen_recursive(prof, nullptr).value);
        });
    CHECK(memo.size() > 0);
}
