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

#ifndef RAMCOUNT_POLY_HPP
#define RAMCOUNT_POLY_HPP

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ramcount/field.hpp"

namespace ramcount {

/// Dense univariate polynomial over a finite field, low degree first, with no
/// trailing zeros. The zero polynomial has no coefficients.
class Poly {
  public:
    explicit Poly(FiniteField field);
    Poly(FiniteField field, std::vector<Elem> coeffs);

    static Poly constant(const FiniteField& field, Elem c);
    static Poly monomial(const FiniteField& field, Elem c, int n);
    static Poly x(const FiniteField& field);
    /// Coefficients given as integers, reduced into the prime field.
    static Poly from_ints(const FiniteField& field, std::initializer_list<long long> coeffs);

    const FiniteField& field() const noexcept { return field_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// nullopt for the zero polynomial.
    std::optional<int> degree() const noexcept;
    /// Degree of a nonzero polynomial; throws std::domain_error on zero.
    int deg() const;
    Elem coeff(int i) const noexcept;
    Elem lead() const;
    std::span<const Elem> coeffs() const noexcept { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(Elem c) const;
    Poly shifted(int n) const;  // times x^n

    Elem eval(Elem a) const noexcept;
    Poly derivative() const;
    Poly monic() const;
    /// f(x + a).
    Poly taylor_shift(Elem a) const;
    /// x^n f(1/x); requires deg f <= n.
    Poly reversed(int n) const;
    /// sum f_i (a x + b)^i (c x + d)^{n - i}; requires deg f <= n.
    Poly substitute_mobius(Elem a, Elem b, Elem c, Elem d, int n) const;

    friend bool operator==(const Poly& a, const Poly& b);

  private:
    void trim();
    FiniteField field_;
    std::vector<Elem> c_;
};

struct DivRem {
    Poly quot;
    Poly rem;
};

DivRem divrem(const Poly& a, const Poly& b);
/// Exact quotient; throws std::domain_error when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);

struct Bezout {
    Poly g;
    Poly u;
    Poly v;
};

/// g = gcd(a, b) monic with u a + v b = g.
Bezout gcd_bezout(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b);

/// Largest m with (x - a)^m dividing f; throws on the zero polynomial.
int valuation(const Poly& f, Elem a);
/// Largest m with x^m dividing f; throws on the zero polynomial.
int low_order(const Poly& f);

bool is_inseparable(const Poly& f);
/// g with g(x^p) = f up to coefficient p-th roots, so that g^p = f.
Poly pth_root(const Poly& f);
/// g^p = sum frob(g_i) x^{ip}.
Poly frobenius_power(const Poly& g);
/// sum f_{ip} x^i, coefficients untouched; requires f in k[x^p].
Poly deflate(const Poly& f);
/// sum g_i x^{ip}.
Poly inflate(const Poly& g);

struct InseparableBezout {
    Poly h1;
    Poly h2;
};

/// H1, H2 in k[x^p] with A H2 - B H1 = 1, for coprime A, B in k[x^p].
InseparableBezout bezout_inseparable(const Poly& a, const Poly& b);

/// Rational roots with multiplicity, in increasing element order.
std::vector<std::pair<Elem, int>> rational_roots(const Poly& f);

/// "c0,c1,...", zero polynomial as "0".
std::string to_string(const Poly& f);
Poly parse_poly(const FiniteField& field, std::string_view text);

}  // namespace ramcount

#endif
