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

#include "ramcount/bipoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace ramcount {

BiPoly::BiPoly(FiniteField field) : field_(std::move(field)) {}

BiPoly::BiPoly(FiniteField field, std::vector<Poly> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    for (const Poly& c : c_) require_same_field(field_, c.field());
    trim();
}

BiPoly BiPoly::from_x(const Poly& f) {
    std::vector<Poly> c;
    for (Elem a : f.coeffs()) c.push_back(Poly::constant(f.field(), a));
    return BiPoly(f.field(), std::move(c));
}

BiPoly BiPoly::from_t(const Poly& c) { return BiPoly(c.field(), {c}); }

void BiPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::optional<int> BiPoly::x_degree() const noexcept {
    if (c_.empty()) return std::nullopt;
    return static_cast<int>(c_.size()) - 1;
}

Poly BiPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Poly(field_);
    return c_[static_cast<std::size_t>(i)];
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    require_same_field(field_, o.field_);
    std::vector<Poly> r(std::max(c_.size(), o.c_.size()), Poly(field_));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    return BiPoly(field_, std::move(r));
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator-() const {
    std::vector<Poly> r;
    r.reserve(c_.size());
    for (const Poly& c : c_) r.push_back(-c);
    return BiPoly(field_, std::move(r));
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    require_same_field(field_, o.field_);
    if (is_zero() || o.is_zero()) return BiPoly(field_);
    std::vector<Poly> r(c_.size() + o.c_.size() - 1, Poly(field_));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return BiPoly(field_, std::move(r));
}

BiPoly BiPoly::derivative_x() const {
    std::vector<Poly> r;
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i].scaled(field_.from_int(static_cast<long long>(i))));
    return BiPoly(field_, std::move(r));
}

Poly BiPoly::at_t(Elem c) const {
    std::vector<Elem> r;
    r.reserve(c_.size());
    for (const Poly& a : c_) r.push_back(a.eval(c));
    return Poly(field_, std::move(r));
}

int BiPoly::t_valuation() const {
    if (is_zero()) throw std::domain_error("t-valuation of the zero polynomial");
    int s = -1;
    for (const Poly& c : c_) {
        if (c.is_zero()) continue;
        const int v = low_order(c);
        s = s < 0 ? v : std::min(s, v);
    }
    return s;
}

BiPoly BiPoly::divide_t_power(int s) const {
    if (s < 0) throw std::invalid_argument("negative power of t");
    std::vector<Poly> r;
    r.reserve(c_.size());
    for (const Poly& c : c_) {
        if (c.is_zero()) {
            r.push_back(c);
            continue;
        }
        if (low_order(c) < s) throw std::domain_error("t-power does not divide");
        const auto cs = c.coeffs();
        r.emplace_back(field_, std::vector<Elem>(cs.begin() + s, cs.end()));
    }
    return BiPoly(field_, std::move(r));
}

BiPoly BiPoly::multiply_t_power(int s) const {
    if (s < 0) throw std::invalid_argument("negative power of t");
    std::vector<Poly> r;
    r.reserve(c_.size());
    for (const Poly& c : c_) r.push_back(c.shifted(s));
    return BiPoly(field_, std::move(r));
}

bool operator==(const BiPoly& a, const BiPoly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

std::string to_string(const BiPoly& f) {
    if (f.is_zero()) return "[(0)]";
    std::string s = "[";
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i) s += ',';
        s += '(' + to_string(f.coeffs()[i]) + ')';
    }
    return s + ']';
}

BiPoly parse_bipoly(const FiniteField& field, std::string_view text) {
    auto strip = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    text = strip(text);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw std::invalid_argument("bivariate polynomial must look like [(c00,c01),(c10)]");
    text = strip(text.substr(1, text.size() - 2));
    std::vector<Poly> c;
    while (!text.empty()) {
        if (text.front() != '(') throw std::invalid_argument("expected '(' in bivariate polynomial");
        const std::size_t close = text.find(')');
        if (close == std::string_view::npos) throw std::invalid_argument("unbalanced '(' in bivariate polynomial");
        c.push_back(parse_poly(field, text.substr(1, close - 1)));
        text = strip(text.substr(close + 1));
        if (!text.empty()) {
            if (text.front() != ',') throw std::invalid_argument("expected ',' in bivariate polynomial");
            text = strip(text.substr(1));
        }
    }
    return BiPoly(field, std::move(c));
}

BiPoly wronskian_x(const BiPoly& f, const BiPoly& g) { return f.derivative_x() * g - f * g.derivative_x(); }

Poly resultant_x(const BiPoly& f, const BiPoly& g) {
    if (f.is_zero() || g.is_zero()) throw std::domain_error("resultant with the zero polynomial");
    const FiniteField& fld = f.field();
    const int m = *f.x_degree();
    const int n = *g.x_degree();
    const int size = m + n;
    if (size == 0) return Poly::constant(fld, fld.one());
    // Sylvester matrix, then fraction-free (Bareiss) elimination over k[t].
    std::vector<std::vector<Poly>> a(static_cast<std::size_t>(size), std::vector<Poly>(static_cast<std::size_t>(size), Poly(fld)));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) a[r][r + m - i] = f.coeff(i);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) a[n + r][r + n - i] = g.coeff(i);
    bool negate = false;
    Poly prev = Poly::constant(fld, fld.one());
    for (int k = 0; k < size - 1; ++k) {
        if (a[k][k].is_zero()) {
            int swap = -1;
            for (int r = k + 1; r < size; ++r)
                if (!a[r][k].is_zero()) {
                    swap = r;
                    break;
                }
            if (swap < 0) return Poly(fld);
            std::swap(a[k], a[swap]);
            negate = !negate;
        }
        for (int i = k + 1; i < size; ++i) {
            for (int j = k + 1; j < size; ++j) a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
            a[i][k] = Poly(fld);
        }
        prev = a[k][k];
    }
    Poly det = a[size - 1][size - 1];
    return negate ? -det : det;
}

BiPoly shift_to_section(const BiPoly& w, const Poly& num, const Poly& den) {
    require_same_field(w.field(), num.field());
    require_same_field(w.field(), den.field());
    if (den.is_zero()) throw std::invalid_argument("section with zero denominator");
    if (w.is_zero()) return w;
    const FiniteField& fld = w.field();
    const int n = *w.x_degree();
    // x = y + N/D: D^n W = sum w_i (D y + N)^i D^{n-i}.
    const BiPoly lin(fld, {num, den});
    const BiPoly dd = BiPoly::from_t(den);
    std::vector<BiPoly> lin_pow{BiPoly::from_t(Poly::constant(fld, fld.one()))};
    std::vector<BiPoly> den_pow{lin_pow.front()};
    for (int i = 1; i <= n; ++i) {
        lin_pow.push_back(lin_pow.back() * lin);
        den_pow.push_back(den_pow.back() * dd);
    }
    BiPoly out(fld);
    for (int i = 0; i <= n; ++i) {
        if (w.coeff(i).is_zero()) continue;
        out = out + BiPoly::from_t(w.coeff(i)) * lin_pow[static_cast<std::size_t>(i)] *
                        den_pow[static_cast<std::size_t>(n - i)];
    }
    return out;
}

int x_low_order(const BiPoly& f) {
    if (f.is_zero()) throw std::domain_error("order of the zero polynomial");
    for (int i = 0;; ++i)
        if (!f.coeff(i).is_zero()) return i;
}

}  // namespace ramcount
