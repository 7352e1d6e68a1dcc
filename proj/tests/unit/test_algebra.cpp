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

#include <random>

#include "oracles.hpp"
#include "ramcount/bipoly.hpp"
#include "ramcount/linalg.hpp"
#include "ramcount/poly.hpp"

using namespace ramcount;

namespace {

Poly P(const FiniteField& f, std::initializer_list<long long> c) { return Poly::from_ints(f, c); }

}  // namespace

TEST_CASE("field construction rejects p = 2, composites and huge orders") {
    CHECK_THROWS_AS(FiniteField(2), std::invalid_argument);
    CHECK_THROWS_AS(FiniteField(9), std::invalid_argument);
    CHECK_THROWS_AS(FiniteField(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(FiniteField(3, 20), std::invalid_argument);
}

TEST_CASE("field modulus is the least irreducible polynomial") {
    for (auto [p, k] : std::vector<std::pair<int, int>>{{3, 2}, {5, 2}, {7, 2}, {3, 3}, {3, 4}, {5, 3}}) {
        const FiniteField f(p, k);
        std::vector<int> m(f.modulus().begin(), f.modulus().end());
        CHECK(oracle::irreducible_over_prime_field(p, m));
        // Every monic polynomial that sorts earlier (compare from the top
        // coefficient down) is reducible.
        std::vector<int> cand(static_cast<std::size_t>(k) + 1, 0);
        cand[k] = 1;
        long long total = 1;
        for (int i = 0; i < k; ++i) total *= p;
        for (long long idx = 0; idx < total; ++idx) {
            long long r = idx;
            for (int i = 0; i < k; ++i) {
                cand[i] = static_cast<int>(r % p);
                r /= p;
            }
            // idx enumerates (c_{k-1}, ..., c_0) lexicographically.
            if (cand == m) break;
            CHECK_FALSE(oracle::irreducible_over_prime_field(p, cand));
        }
    }
    CHECK(FiniteField(3, 2).modulus() == std::vector<std::uint32_t>{1, 0, 1});
}

TEST_CASE("field multiplication matches schoolbook arithmetic") {
    for (auto [p, k] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {5, 2}, {3, 3}, {7, 2}}) {
        const FiniteField f(p, k);
        for (std::uint32_t a = 0; a < f.order(); ++a)
            for (std::uint32_t b = 0; b < f.order(); ++b) {
                REQUIRE(f.mul(Elem{a}, Elem{b}) == oracle::mul(f, Elem{a}, Elem{b}));
            }
        for (std::uint32_t a = 1; a < f.order(); ++a) {
            CHECK(f.mul(Elem{a}, f.inv(Elem{a})) == f.one());
            CHECK(f.frobenius(f.pth_root(Elem{a})) == Elem{a});
        }
        CHECK_THROWS(f.inv(f.zero()));
    }
}

TEST_CASE("field generator has full order") {
    const FiniteField f(5, 2);
    const Elem g = f.generator();
    std::set<std::uint32_t> seen;
    Elem x = f.one();
    for (std::uint32_t i = 0; i + 1 < f.order(); ++i) {
        seen.insert(x.v);
        x = f.mul(x, g);
    }
    CHECK(seen.size() == f.order() - 1);
}

TEST_CASE("element text format round trips") {
    const FiniteField f9(3, 2);
    for (std::uint32_t a = 0; a < 9; ++a) CHECK(f9.parse(f9.format(Elem{a})) == Elem{a});
    CHECK(f9.format(Elem{3}) == "10");  // the class of y
    const FiniteField f5(5);
    CHECK(f5.parse("-1") == Elem{4});
    CHECK_THROWS(f5.parse("5"));
    CHECK_THROWS(f9.parse("3"));
}

TEST_CASE("polynomial arithmetic examples") {
    const FiniteField f5(5), f3(3);
    CHECK(P(f5, {1, 1}) * P(f5, {-1, 1}) == P(f5, {4, 0, 1}));
    const DivRem qr = divrem(P(f3, {0, 0, 0, 1}), P(f3, {-1, 1}));
    CHECK(qr.quot == P(f3, {1, 1, 1}));
    CHECK(qr.rem == P(f3, {1}));
    CHECK(P(f5, {0, 0, 2, 1}) + P(f5, {1, 2}) == P(f5, {1, 2, 2, 1}));
    CHECK(to_string(P(f5, {0, 2, 1})) == "0,2,1");
    CHECK(parse_poly(f5, "0,2,1") == P(f5, {0, 2, 1}));
    CHECK(to_string(Poly(f5)) == "0");
    CHECK_FALSE(Poly(f5).degree().has_value());
    CHECK_THROWS_AS(Poly(f5).deg(), std::domain_error);
}

TEST_CASE("gcd with Bezout data") {
    const FiniteField f5(5), f3(3), f7(7);
    {
        const Bezout b = gcd_bezout(P(f5, {0, 0, 1}), P(f5, {0, 0, 0, 1}));
        CHECK(b.g == P(f5, {0, 0, 1}));
    }
    {
        const Poly a = P(f3, {0, 0, 0, 1}), c = P(f3, {-1, 1});
        const Bezout b = gcd_bezout(a, c);
        CHECK(b.g == P(f3, {1}));
        CHECK(b.u * a + b.v * c == P(f3, {1}));
    }
    {
        const Bezout b = gcd_bezout(Poly(f7), P(f7, {2, 1}));
        CHECK(b.g == P(f7, {2, 1}));
        CHECK(b.u.is_zero());
        CHECK(b.v == P(f7, {1}));
    }
    CHECK_THROWS(gcd_bezout(Poly(f7), Poly(f7)));
}

TEST_CASE("valuations") {
    const FiniteField f5(5), f3(3);
    CHECK(valuation(P(f5, {0, 0, -1, 1}), f5.zero()) == 2);
    CHECK(valuation(P(f5, {-1, 3, -3, 1}), f5.one()) == 3);
    CHECK(valuation(P(f3, {-1, 0, 0, 1}), f3.one()) == 3);
    CHECK_THROWS(valuation(Poly(f5), f5.one()));
}

TEST_CASE("inseparable polynomials and p-th roots") {
    const FiniteField f3(3);
    CHECK(is_inseparable(P(f3, {0, 0, 0, 1})));
    CHECK(pth_root(P(f3, {0, 0, 0, 1})) == P(f3, {0, 1}));
    const Poly f = P(f3, {1, 0, 0, 2, 0, 0, 1});
    CHECK(is_inseparable(f));
    CHECK(pth_root(f) == P(f3, {1, 2, 1}));
    CHECK_FALSE(is_inseparable(P(f3, {0, 1, 0, 1})));
    CHECK_THROWS(pth_root(P(f3, {0, 1, 0, 1})));
}

TEST_CASE("inseparable Bezout identity") {
    const FiniteField f3(3);
    const Poly one = P(f3, {1});
    {
        const Poly a = P(f3, {0, 0, 0, 1});
        const InseparableBezout h = bezout_inseparable(a, one);
        CHECK(a * h.h2 - one * h.h1 == one);
    }
    {
        const Poly a = P(f3, {0, 0, 0, 1}), b = P(f3, {1, 0, 0, 1});
        const InseparableBezout h = bezout_inseparable(a, b);
        CHECK(a * h.h2 - b * h.h1 == one);
        CHECK(h.h1.derivative().is_zero());
        CHECK(h.h2.derivative().is_zero());
    }
    CHECK_THROWS(bezout_inseparable(P(f3, {0, 0, 0, 1}), P(f3, {0, 0, 0, 1})));
    CHECK_THROWS(bezout_inseparable(P(f3, {0, 1}), P(f3, {1})));
}

TEST_CASE("polynomial ring properties on random inputs") {
    std::mt19937_64 rng(7);
    for (auto [p, k] : std::vector<std::pair<int, int>>{{3, 1}, {5, 1}, {3, 2}, {7, 1}}) {
        const FiniteField f(p, k);
        for (int trial = 0; trial < 200; ++trial) {
            const Poly a = oracle::random_poly(f, static_cast<int>(rng() % 6), rng);
            const Poly b = oracle::random_poly(f, static_cast<int>(rng() % 6), rng);
            const Poly c = oracle::random_poly(f, static_cast<int>(rng() % 6), rng);
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE(a * (b + c) == a * b + a * c);
            const DivRem qr = divrem(a, b);
            REQUIRE(qr.quot * b + qr.rem == a);
            REQUIRE(qr.rem.degree().value_or(-1) < b.deg());
            const Elem x = Elem{static_cast<std::uint32_t>(rng() % f.order())};
            REQUIRE(valuation(a * b, x) == valuation(a, x) + valuation(b, x));
            REQUIRE(valuation(a, x) == oracle::vanishing_order(a, x));
            const Bezout g = gcd_bezout(a, b);
            REQUIRE(g.u * a + g.v * b == g.g);
            REQUIRE(divrem(a, g.g).rem.is_zero());
            REQUIRE(g.g.lead() == f.one());
            REQUIRE(pth_root(frobenius_power(a)) == a);
        }
        // Random coprime inseparable pairs.
        int tested = 0;
        for (int trial = 0; trial < 400 && tested < 100; ++trial) {
            const Poly a = inflate(oracle::random_poly(f, 1 + static_cast<int>(rng() % 3), rng));
            const Poly b = inflate(oracle::random_poly(f, 1 + static_cast<int>(rng() % 3), rng));
            if (gcd(a, b).deg() > 0) continue;
            ++tested;
            const InseparableBezout h = bezout_inseparable(a, b);
            REQUIRE(a * h.h2 - b * h.h1 == Poly::constant(f, f.one()));
            REQUIRE(h.h1.derivative().is_zero());
            REQUIRE(h.h2.derivative().is_zero());
        }
        CHECK(tested > 20);
    }
}

TEST_CASE("rational roots with multiplicity") {
    const FiniteField f5(5);
    const auto roots = rational_roots(P(f5, {0, 0, -1, 1}) * P(f5, {2, 0, 1}));  // x^2 (x - 1)(x^2 + 2)
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == std::make_pair(Elem{0}, 2));
    CHECK(roots[1] == std::make_pair(Elem{1}, 1));
}

TEST_CASE("matrix rank and nullspace") {
    const FiniteField f5(5);
    Matrix m(f5, 2, 3);
    m.at(0, 0) = Elem{1};
    m.at(0, 1) = Elem{2};
    m.at(1, 0) = Elem{2};
    m.at(1, 1) = Elem{4};
    m.at(1, 2) = Elem{1};
    CHECK(m.rank() == 2);
    const auto ns = m.nullspace();
    REQUIRE(ns.size() == 1);
    for (int r = 0; r < 2; ++r) {
        Elem s = f5.zero();
        for (int c = 0; c < 3; ++c) s = f5.add(s, f5.mul(m.at(r, c), ns[0][static_cast<std::size_t>(c)]));
        CHECK(s == f5.zero());
    }
}

TEST_CASE("bivariate polynomials") {
    const FiniteField f3(3);
    const BiPoly f = parse_bipoly(f3, "[(0),(0,1),(1)]");  // t x + x^2
    CHECK(to_string(f) == "[(0),(0,1),(1)]");
    CHECK(f.x_degree() == 2);
    CHECK(f.at_t(f3.one()) == P(f3, {0, 1, 1}));
    CHECK(f.special_fiber() == P(f3, {0, 0, 1}));
    CHECK(f.t_valuation() == 0);
    const BiPoly g = parse_bipoly(f3, "[(0,0,1),(0,1)]");  // t^2 + t x
    CHECK(g.t_valuation() == 1);
    CHECK(to_string(g.divide_t_power(1)) == "[(0,1),(1)]");
    CHECK_THROWS(g.divide_t_power(2));
    CHECK(g.divide_t_power(1).multiply_t_power(1) == g);
    CHECK(to_string(BiPoly(f3)) == "[(0)]");
    CHECK_THROWS(parse_bipoly(f3, "(0),(1)"));
}

TEST_CASE("resultant detects common factors over k(t)") {
    const FiniteField f5(5);
    // (x + t)(x + 1) and (x + t): common factor.
    const BiPoly a = parse_bipoly(f5, "[(0,1),(1,1),(1)]");
    const BiPoly b = parse_bipoly(f5, "[(0,1),(1)]");
    CHECK(resultant_x(a, b).is_zero());
    // x^2 + t and x + 1: resultant 1 + t.
    const BiPoly c = parse_bipoly(f5, "[(0,1),(0),(1)]");
    const BiPoly d = parse_bipoly(f5, "[(1),(1)]");
    CHECK(resultant_x(c, d) == P(f5, {1, 1}));
    // Agrees with specialization on a random sample: Res(t=c) = Res(F(c), G(c)) when degrees hold.
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Poly> fc, gc;
        for (int i = 0; i < 3; ++i) fc.push_back(oracle::random_poly(f5, 1, rng));
        for (int i = 0; i < 2; ++i) gc.push_back(oracle::random_poly(f5, 1, rng));
        const BiPoly F(f5, fc), G(f5, gc);
        const Poly r = resultant_x(F, G);
        for (std::uint32_t t = 0; t < 5; ++t) {
            const Poly ft = F.at_t(Elem{t}), gt = G.at_t(Elem{t});
            if (ft.degree() != 2 || gt.degree() != 1) continue;
            const bool coprime = gcd(ft, gt).deg() == 0;
            CHECK(coprime == (r.eval(Elem{t}).v != 0));
        }
    }
}

TEST_CASE("section shift measures order along a moving point") {
    const FiniteField f5(5);
    // W = (x - t)^2 (x + 1): order 2 along x = t, 0 along x = 1.
    const BiPoly w = parse_bipoly(f5, "[(0,0,1),(0,-2,1),(1,-2),(1)]");
    CHECK(x_low_order(shift_to_section(w, P(f5, {0, 1}), P(f5, {1}))) == 2);
    CHECK(x_low_order(shift_to_section(w, P(f5, {1}), P(f5, {1}))) == 0);
    CHECK(x_low_order(shift_to_section(w, P(f5, {-1}), P(f5, {1}))) == 1);
}
