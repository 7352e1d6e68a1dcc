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

#include "ramcount/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace ramcount {

Poly::Poly(FiniteField field) : field_(std::move(field)) {}

Poly::Poly(FiniteField field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    for (Elem e : c_)
        if (e.v >= field_.order()) throw std::invalid_argument("coefficient outside field");
    trim();
}

Poly Poly::constant(const FiniteField& field, Elem c) { return Poly(field, {c}); }

Poly Poly::monomial(const FiniteField& field, Elem c, int n) {
    if (n < 0) throw std::invalid_argument("negative exponent");
    std::vector<Elem> v(static_cast<std::size_t>(n) + 1, field.zero());
    v.back() = c;
    return Poly(field, std::move(v));
}

Poly Poly::x(const FiniteField& field) { return monomial(field, field.one(), 1); }

Poly Poly::from_ints(const FiniteField& field, std::initializer_list<long long> coeffs) {
    std::vector<Elem> v;
    v.reserve(coeffs.size());
    for (long long c : coeffs) v.push_back(field.from_int(c));
    return Poly(field, std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back().v == 0) c_.pop_back();
}

std::optional<int> Poly::degree() const noexcept {
    if (c_.empty()) return std::nullopt;
    return static_cast<int>(c_.size()) - 1;
}

int Poly::deg() const {
    if (c_.empty()) throw std::domain_error("degree of the zero polynomial");
    return static_cast<int>(c_.size()) - 1;
}

Elem Poly::coeff(int i) const noexcept {
    if (i < 0 || static_cast<std::size_t>(i) >= c_.size()) return Elem{0};
    return c_[static_cast<std::size_t>(i)];
}

Elem Poly::lead() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
    require_same_field(field_, o.field_);
    std::vector<Elem> r(std::max(c_.size(), o.c_.size()), field_.zero());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_.add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
    return Poly(field_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    require_same_field(field_, o.field_);
    std::vector<Elem> r(std::max(c_.size(), o.c_.size()), field_.zero());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_.sub(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
    return Poly(field_, std::move(r));
}

Poly Poly::operator-() const {
    std::vector<Elem> r(c_);
    for (auto& e : r) e = field_.neg(e);
    return Poly(field_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    require_same_field(field_, o.field_);
    if (c_.empty() || o.c_.empty()) return Poly(field_);
    std::vector<Elem> r(c_.size() + o.c_.size() - 1, field_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].v == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = field_.add(r[i + j], field_.mul(c_[i], o.c_[j]));
    }
    return Poly(field_, std::move(r));
}

Poly Poly::scaled(Elem c) const {
    std::vector<Elem> r(c_);
    for (auto& e : r) e = field_.mul(e, c);
    return Poly(field_, std::move(r));
}

Poly Poly::shifted(int n) const {
    if (n < 0) throw std::invalid_argument("negative shift");
    if (c_.empty()) return *this;
    std::vector<Elem> r(static_cast<std::size_t>(n), field_.zero());
    r.insert(r.end(), c_.begin(), c_.end());
    return Poly(field_, std::move(r));
}

Elem Poly::eval(Elem a) const noexcept {
    Elem r = field_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = field_.add(field_.mul(r, a), *it);
    return r;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly(field_);
    std::vector<Elem> r(c_.size() - 1, field_.zero());
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = field_.mul(field_.from_int(static_cast<long long>(i)), c_[i]);
    return Poly(field_, std::move(r));
}

Poly Poly::monic() const { return scaled(field_.inv(lead())); }

Poly Poly::taylor_shift(Elem a) const {
    // Horner with (x + a) in place of x.
    Poly r(field_);
    const Poly xa(field_, {a, field_.one()});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * xa + constant(field_, *it);
    return r;
}

Poly Poly::reversed(int n) const {
    if (!c_.empty() && deg() > n) throw std::invalid_argument("reversal degree below polynomial degree");
    std::vector<Elem> r(static_cast<std::size_t>(n) + 1, field_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r[static_cast<std::size_t>(n) - i] = c_[i];
    return Poly(field_, std::move(r));
}

Poly Poly::substitute_mobius(Elem a, Elem b, Elem c, Elem d, int n) const {
    if (!c_.empty() && deg() > n) throw std::invalid_argument("substitution degree below polynomial degree");
    const Poly num(field_, {b, a});
    const Poly den(field_, {d, c});
    std::vector<Poly> den_pow{constant(field_, field_.one())};
    for (int i = 1; i <= n; ++i) den_pow.push_back(den_pow.back() * den);
    Poly r(field_);
    Poly num_pow = constant(field_, field_.one());
    for (int i = 0; i <= n; ++i) {
        const Elem ci = coeff(i);
        if (ci.v != 0) r = r + (num_pow * den_pow[static_cast<std::size_t>(n - i)]).scaled(ci);
        num_pow = num_pow * num;
    }
    return r;
}

bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

DivRem divrem(const Poly& a, const Poly& b) {
    require_same_field(a.field(), b.field());
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    const FiniteField& f = a.field();
    if (a.is_zero() || a.deg() < b.deg()) return {Poly(f), a};
    std::vector<Elem> rem(a.coeffs().begin(), a.coeffs().end());
    const int db = b.deg();
    std::vector<Elem> quot(static_cast<std::size_t>(a.deg() - db) + 1, f.zero());
    const Elem lead_inv = f.inv(b.lead());
    for (int i = a.deg(); i >= db; --i) {
        const Elem c = f.mul(rem[static_cast<std::size_t>(i)], lead_inv);
        quot[static_cast<std::size_t>(i - db)] = c;
        if (c.v == 0) continue;
        for (int j = 0; j <= db; ++j) {
            auto& slot = rem[static_cast<std::size_t>(i - db + j)];
            slot = f.sub(slot, f.mul(c, b.coeff(j)));
        }
    }
    rem.resize(static_cast<std::size_t>(db));
    return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

Bezout gcd_bezout(const Poly& a, const Poly& b) {
    require_same_field(a.field(), b.field());
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
    const FiniteField& f = a.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(f, f.one()), s1(f);
    Poly t0(f), t1 = Poly::constant(f, f.one());
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const Elem li = f.inv(r0.lead());
    return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

Poly gcd(const Poly& a, const Poly& b) { return gcd_bezout(a, b).g; }

int valuation(const Poly& f, Elem a) {
    if (f.is_zero()) throw std::domain_error("valuation of the zero polynomial");
    const FiniteField& fld = f.field();
    std::vector<Elem> c(f.coeffs().begin(), f.coeffs().end());
    int m = 0;
    while (c.size() > 1) {
        // Synthetic division by (x - a).
        std::vector<Elem> q(c.size() - 1, fld.zero());
        Elem carry = fld.zero();
        for (std::size_t i = c.size(); i-- > 1;) {
            carry = fld.add(fld.mul(carry, a), c[i]);
            q[i - 1] = carry;
        }
        const Elem remainder = fld.add(fld.mul(carry, a), c[0]);
        if (remainder.v != 0) break;
        c = std::move(q);
        ++m;
    }
    return m;
}

int low_order(const Poly& f) {
    if (f.is_zero()) throw std::domain_error("valuation of the zero polynomial");
    int m = 0;
    while (f.coeff(m).v == 0) ++m;
    return m;
}

bool is_inseparable(const Poly& f) { return f.derivative().is_zero(); }

Poly deflate(const Poly& f) {
    if (!is_inseparable(f)) throw std::invalid_argument("polynomial is not in k[x^p]");
    const int p = f.field().characteristic();
    std::vector<Elem> r;
    for (std::size_t i = 0; i < f.coeffs().size(); i += static_cast<std::size_t>(p)) r.push_back(f.coeffs()[i]);
    return Poly(f.field(), std::move(r));
}

Poly inflate(const Poly& g) {
    const int p = g.field().characteristic();
    if (g.is_zero()) return g;
    std::vector<Elem> r(static_cast<std::size_t>(g.deg()) * static_cast<std::size_t>(p) + 1, g.field().zero());
    for (std::size_t i = 0; i < g.coeffs().size(); ++i) r[i * static_cast<std::size_t>(p)] = g.coeffs()[i];
    return Poly(g.field(), std::move(r));
}

Poly pth_root(const Poly& f) {
    Poly g = deflate(f);
    std::vector<Elem> r(g.coeffs().begin(), g.coeffs().end());
    for (auto& e : r) e = f.field().pth_root(e);
    return Poly(f.field(), std::move(r));
}

Poly frobenius_power(const Poly& g) {
    std::vector<Elem> r(g.coeffs().begin(), g.coeffs().end());
    for (auto& e : r) e = g.field().frobenius(e);
    return inflate(Poly(g.field(), std::move(r)));
}

InseparableBezout bezout_inseparable(const Poly& a, const Poly& b) {
    require_same_field(a.field(), b.field());
    if (!is_inseparable(a) || !is_inseparable(b)) throw std::invalid_argument("bezout_inseparable needs inputs in k[x^p]");
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("inputs not coprime");
    const auto [g, u, v] = gcd_bezout(deflate(a), deflate(b));
    if (g.deg() != 0) throw std::invalid_argument("inputs not coprime");
    // u a' + v b' = 1 with a = a'(x^p), b = b'(x^p).
    return {-inflate(v), inflate(u)};
}

std::vector<std::pair<Elem, int>> rational_roots(const Poly& f) {
    if (f.is_zero()) throw std::domain_error("roots of the zero polynomial");
    std::vector<std::pair<Elem, int>> out;
    const FiniteField& fld = f.field();
    if (f.deg() == 0) return out;
    int found = 0;
    for (std::uint32_t i = 0; i < fld.order() && found < f.deg(); ++i) {
        const Elem a{i};
        if (f.eval(a).v != 0) continue;
        const int m = valuation(f, a);
        out.emplace_back(a, m);
        found += m;
    }
    return out;
}

std::string to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i) s.push_back(',');
        s += f.field().format(f.coeffs()[i]);
    }
    return s;
}

Poly parse_poly(const FiniteField& field, std::string_view text) {
    std::vector<Elem> c;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        std::string_view tok = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        c.push_back(field.parse(tok));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Poly(field, std::move(c));
}

}  // namespace ramcount
