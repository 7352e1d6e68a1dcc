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

// Independent reference computations used as expected values in the tests.
// They favour brute force over cleverness and share no code paths with the
// library beyond the basic field and polynomial types.

#ifndef RAMCOUNT_TESTS_ORACLES_HPP
#define RAMCOUNT_TESTS_ORACLES_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ramcount/field.hpp"
#include "ramcount/pencil.hpp"
#include "ramcount/poly.hpp"
#include "ramcount/ratmap.hpp"

namespace oracle {

using namespace ramcount;

/// Coordinates of a field element over F_p, low degree first.
inline std::vector<int> digits(const FiniteField& f, Elem a) {
    std::vector<int> d(static_cast<std::size_t>(f.extension_degree()));
    std::uint32_t v = a.v;
    for (auto& x : d) {
        x = static_cast<int>(v % static_cast<std::uint32_t>(f.characteristic()));
        v /= static_cast<std::uint32_t>(f.characteristic());
    }
    return d;
}

inline Elem from_digits(const FiniteField& f, const std::vector<int>& d) {
    std::uint32_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * static_cast<std::uint32_t>(f.characteristic()) + static_cast<std::uint32_t>(d[i]);
    return Elem{v};
}

/// Schoolbook product of coordinate vectors reduced by the field modulus.
inline Elem mul(const FiniteField& f, Elem a, Elem b) {
    const int p = f.characteristic(), k = f.extension_degree();
    const auto da = digits(f, a), db = digits(f, b);
    std::vector<int> prod(static_cast<std::size_t>(2 * k - 1), 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    const auto& m = f.modulus();
    for (int i = 2 * k - 2; i >= k; --i) {
        const int c = prod[i];
        if (!c) continue;
        for (int j = 0; j <= k; ++j) prod[i - k + j] = ((prod[i - k + j] - c * static_cast<int>(m[j])) % p + p) % p;
    }
    prod.resize(static_cast<std::size_t>(k));
    return from_digits(f, prod);
}

/// Monic polynomial over F_p (coefficients low first) has no monic factor of
/// degree 1..deg/2, by trial division.
inline bool irreducible_over_prime_field(int p, const std::vector<int>& m) {
    const int n = static_cast<int>(m.size()) - 1;
    for (int d = 1; d <= n / 2; ++d) {
        std::vector<int> g(static_cast<std::size_t>(d) + 1, 0);
        g[d] = 1;
        long long total = 1;
        for (int i = 0; i < d; ++i) total *= p;
        for (long long idx = 0; idx < total; ++idx) {
            long long r = idx;
            for (int i = 0; i < d; ++i) {
                g[i] = static_cast<int>(r % p);
                r /= p;
            }
            std::vector<int> rem = m;
            for (int i = n; i >= d; --i) {
                const int c = rem[i];
                if (!c) continue;
                for (int j = 0; j <= d; ++j) rem[i - d + j] = ((rem[i - d + j] - c * g[j]) % p + p) % p;
            }
            bool zero = true;
            for (int i = 0; i < d; ++i) zero = zero && rem[i] == 0;
            if (zero) return false;
        }
    }
    return true;
}

/// Order of vanishing at a by repeated synthetic division.
inline int vanishing_order(const Poly& f, Elem a) {
    const FiniteField& fld = f.field();
    std::vector<Elem> c(f.coeffs().begin(), f.coeffs().end());
    int m = 0;
    while (!c.empty()) {
        std::vector<Elem> q(c.size() - 1, fld.zero());
        Elem carry = fld.zero();
        for (std::size_t i = c.size(); i-- > 0;) {
            const Elem v = fld.add(c[i], fld.mul(carry, a));
            if (i == 0) {
                if (v.v != 0) return m;
            } else {
                q[i - 1] = v;
            }
            carry = v;
        }
        c = q;
        while (!c.empty() && c.back().v == 0) c.pop_back();
        ++m;
    }
    return m;
}

/// Characteristic-zero count as the number of semistandard tableaux of
/// rectangular shape 2 x (d-1) with content (e_i - 1), by listing both rows.
inline std::uint64_t two_row_kostka(int d, const std::vector<int>& orders) {
    const int n = static_cast<int>(orders.size());
    const int len = d - 1;
    std::vector<std::vector<int>> rows;
    std::vector<int> cur;
    std::function<void(int)> gen = [&](int lo) {
        if (static_cast<int>(cur.size()) == len) {
            rows.push_back(cur);
            return;
        }
        for (int v = lo; v < n; ++v) {
            cur.push_back(v);
            gen(v);
            cur.pop_back();
        }
    };
    gen(0);
    std::uint64_t count = 0;
    for (const auto& top : rows)
        for (const auto& bottom : rows) {
            bool ok = true;
            for (int i = 0; i < len && ok; ++i) ok = top[i] < bottom[i];
            if (!ok) continue;
            std::vector<int> content(static_cast<std::size_t>(n), 0);
            for (int v : top) ++content[v];
            for (int v : bottom) ++content[v];
            for (int i = 0; i < n && ok; ++i) ok = content[i] == orders[i] - 1;
            if (ok) ++count;
        }
    return count;
}

/// (q^{d+1} - 1)(q^d - 1) / ((q^2 - 1)(q - 1)).
inline std::uint64_t gaussian_pencils(int d, std::uint64_t q) {
    std::uint64_t a = 1, b = 1;
    for (int i = 0; i <= d; ++i) a *= q;
    for (int i = 0; i < d; ++i) b *= q;
    return (a - 1) * (b - 1) / ((q * q - 1) * (q - 1));
}

/// Order of vanishing of a degree <= d polynomial at infinity.
inline int order_at(const Poly& f, const ProjPoint& pt, int d) {
    if (f.is_zero()) return 1 << 20;
    if (pt.is_infinity()) return d - f.deg();
    return vanishing_order(f, pt.value());
}

/// Pencils with nonzero Wronskian meeting the conditions, by enumerating every ordered
/// pair of polynomials and testing all members (a F + b G) of its span.
inline std::uint64_t census_by_pairs(int d, const std::vector<std::pair<ProjPoint, int>>& conds, const FiniteField& fld) {
    const std::uint32_t q = fld.order();
    std::vector<Poly> all;
    std::uint64_t n = 1;
    for (int i = 0; i <= d; ++i) n *= q;
    for (std::uint64_t idx = 0; idx < n; ++idx) {
        std::vector<Elem> c;
        std::uint64_t r = idx;
        for (int i = 0; i <= d; ++i) {
            c.push_back(Elem{static_cast<std::uint32_t>(r % q)});
            r /= q;
        }
        all.emplace_back(fld, c);
    }
    std::set<std::string> seen;
    std::uint64_t separable = 0;
    for (const Poly& f : all)
        for (const Poly& g : all) {
            if (f.is_zero() || g.is_zero()) continue;
            bool dependent = false;
            for (std::uint32_t s = 0; s < q && !dependent; ++s) dependent = (f - g.scaled(Elem{s})).is_zero();
            if (dependent) continue;
            const std::string key = to_string(Pencil::from_polys(f, g, d));
            if (!seen.insert(key).second) continue;
            bool meets = true;
            for (const auto& [pt, e] : conds) {
                bool hit = false;
                // Members up to scale: g, and f + s g.
                hit = order_at(g, pt, d) >= e;
                for (std::uint32_t s = 0; s < q && !hit; ++s) hit = order_at(f + g.scaled(Elem{s}), pt, d) >= e;
                meets = meets && hit;
            }
            if (!meets) continue;
            if (!(f.derivative() * g - f * g.derivative()).is_zero()) ++separable;
        }
    return separable;
}

/// Random polynomial of degree exactly deg (monic if requested).
inline Poly random_poly(const FiniteField& fld, int deg, std::mt19937_64& rng, bool monic = false) {
    std::vector<Elem> c;
    for (int i = 0; i <= deg; ++i) c.push_back(Elem{static_cast<std::uint32_t>(rng() % fld.order())});
    if (monic) c.back() = fld.one();
    while (c.back().v == 0) c.back() = Elem{static_cast<std::uint32_t>(rng() % fld.order())};
    return Poly(fld, c);
}

}  // namespace oracle

#endif
