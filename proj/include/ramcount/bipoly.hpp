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

#ifndef RAMCOUNT_BIPOLY_HPP
#define RAMCOUNT_BIPOLY_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ramcount/poly.hpp"

namespace ramcount {

/// Polynomial in x whose coefficients are polynomials in a parameter t.
class BiPoly {
  public:
    explicit BiPoly(FiniteField field);
    /// coeffs[i] is the t-polynomial multiplying x^i.
    BiPoly(FiniteField field, std::vector<Poly> coeffs);
    /// Constant in t.
    static BiPoly from_x(const Poly& f);
    /// Constant in x.
    static BiPoly from_t(const Poly& c);

    const FiniteField& field() const noexcept { return field_; }
    bool is_zero() const noexcept { return c_.empty(); }
    std::optional<int> x_degree() const noexcept;
    Poly coeff(int i) const;
    const std::vector<Poly>& coeffs() const noexcept { return c_; }

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator-() const;
    BiPoly operator*(const BiPoly& o) const;

    BiPoly derivative_x() const;
    /// The x-polynomial obtained by setting t = c.
    Poly at_t(Elem c) const;
    Poly special_fiber() const { return at_t(field_.zero()); }
    /// Largest s with t^s dividing every coefficient; throws on zero.
    int t_valuation() const;
    BiPoly divide_t_power(int s) const;
    BiPoly multiply_t_power(int s) const;

    friend bool operator==(const BiPoly& a, const BiPoly& b);

  private:
    void trim();
    FiniteField field_;
    std::vector<Poly> c_;
};

/// "[(c00,c01,...),(c10,...),...]": x-coefficients as t-polynomials.
std::string to_string(const BiPoly& f);
BiPoly parse_bipoly(const FiniteField& field, std::string_view text);

/// F_x G - F G_x.
BiPoly wronskian_x(const BiPoly& f, const BiPoly& g);

/// Resultant in x, a polynomial in t; nonzero iff f, g are coprime over the
/// field of rational functions in t. Requires f, g nonzero.
Poly resultant_x(const BiPoly& f, const BiPoly& g);

/// D^n W(y + N/D) with n = deg_x W, as a polynomial in y; its order at
/// y = 0 is the order of W along the section x = N/D.
BiPoly shift_to_section(const BiPoly& w, const Poly& num, const Poly& den);

/// Lowest x-power with a nonzero coefficient; throws on zero.
int x_low_order(const BiPoly& f);

}  // namespace ramcount

#endif
