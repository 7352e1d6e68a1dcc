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

#include "ramcount/ratmap.hpp"

#include <stdexcept>

#include "ramcount/linalg.hpp"

namespace ramcount {

Elem ProjPoint::value() const {
    if (inf_) throw std::logic_error("infinity has no finite coordinate");
    return a_;
}

std::string format_point(const FiniteField& field, const ProjPoint& p) {
    return p.is_infinity() ? std::string("inf") : field.format(p.value());
}

ProjPoint parse_point(const FiniteField& field, std::string_view text) {
    if (text == "inf" || text == "Inf" || text == "INF") return ProjPoint::infinity();
    return ProjPoint::finite(field.parse(text));
}

int Divisor::degree() const {
    int total = 0;
    for (const auto& [pt, m] : points) total += m;
    if (residual) total += residual->deg();
    return total;
}

namespace {

int max_degree(const Poly& f, const Poly& g) {
    const int df = f.degree().value_or(-1);
    const int dg = g.degree().value_or(-1);
    return std::max(df, dg);
}

// Index at the finite point a of the pencil-map F/G (F, G coprime at a).
int local_index(const Poly& f, const Poly& g, Elem a) {
    const Elem ga = g.eval(a);
    if (ga.v == 0) return valuation(g, a);
    const Elem fa = f.eval(a);
    return valuation(f.scaled(ga) - g.scaled(fa), a);
}

Divisor divisor_of(const Poly& f) {
    Divisor div;
    if (f.is_zero()) throw std::domain_error("divisor of the zero polynomial");
    Poly rest = f;
    for (const auto& [a, m] : rational_roots(f)) {
        div.points[ProjPoint::finite(a)] = m;
        for (int i = 0; i < m; ++i) rest = exact_div(rest, Poly(f.field(), {f.field().neg(a), f.field().one()}));
    }
    if (rest.deg() > 0) div.residual = rest.monic();
    return div;
}

}  // namespace

RatMap::Built RatMap::create(const Poly& f, const Poly& g) {
    require_same_field(f.field(), g.field());
    if (f.is_zero() && g.is_zero()) throw std::invalid_argument("zero pair does not define a map");
    const Poly c = gcd(f, g);
    Poly f1 = exact_div(f, c);
    Poly g1 = exact_div(g, c);
    const int d = max_degree(f1, g1);
    if (d < 1) throw std::invalid_argument("constant map");
    const bool f_leads = !f1.is_zero() && f1.deg() >= g1.degree().value_or(-1);
    const Elem s = f.field().inv(f_leads ? f1.lead() : g1.lead());
    Divisor base;
    if (c.deg() > 0) base = divisor_of(c);
    return Built{RatMap(f1.scaled(s), g1.scaled(s), d), std::move(base)};
}

RatMap RatMap::from(const Poly& f, const Poly& g) { return create(f, g).map; }

ProjPoint RatMap::operator()(const ProjPoint& p) const {
    const FiniteField& fld = field();
    if (!p.is_infinity()) {
        const Elem ga = g_.eval(p.value());
        if (ga.v == 0) return ProjPoint::infinity();
        return ProjPoint::finite(fld.div(f_.eval(p.value()), ga));
    }
    const int df = f_.degree().value_or(-1);
    const int dg = g_.degree().value_or(-1);
    if (df > dg) return ProjPoint::infinity();
    if (df < dg) return ProjPoint::finite(fld.zero());
    return ProjPoint::finite(fld.div(f_.lead(), g_.lead()));
}

std::string to_string(const RatMap& f) { return to_string(f.numerator()) + "/" + to_string(f.denominator()); }

RatMap parse_ratmap(const FiniteField& field, std::string_view text) {
    const std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) return RatMap::from(parse_poly(field, text), Poly::constant(field, field.one()));
    return RatMap::from(parse_poly(field, text.substr(0, slash)), parse_poly(field, text.substr(slash + 1)));
}

Poly wronskian(const Poly& f, const Poly& g) { return f.derivative() * g - f * g.derivative(); }

Poly wronskian(const RatMap& f) { return wronskian(f.numerator(), f.denominator()); }

bool is_separable(const RatMap& f) { return !wronskian(f).is_zero(); }

int ram_index(const RatMap& f, const ProjPoint& p) {
    if (!p.is_infinity()) return local_index(f.numerator(), f.denominator(), p.value());
    const int d = f.degree();
    return local_index(f.numerator().reversed(d), f.denominator().reversed(d), f.field().zero());
}

Different different_divisor(const RatMap& f) {
    const Poly w = wronskian(f);
    if (w.is_zero()) throw std::invalid_argument("different of an inseparable map");
    const int p = f.field().characteristic();
    const int d = f.degree();
    Different out;
    out.divisor = divisor_of(w);
    auto audit_point = [&](const ProjPoint& pt, int m) {
        const int e = ram_index(f, pt);
        if (e % p == 0) {
            out.wild.push_back({pt, e, m});
        } else if (m != e - 1) {
            throw std::logic_error("tame point with different multiplicity other than e - 1");
        }
    };
    for (const auto& [pt, m] : out.divisor.points) audit_point(pt, m);
    const Poly w_inf = wronskian(f.numerator().reversed(d), f.denominator().reversed(d));
    const int m_inf = low_order(w_inf);
    if (m_inf > 0) {
        out.divisor.points[ProjPoint::infinity()] = m_inf;
        audit_point(ProjPoint::infinity(), m_inf);
    }
    if (out.divisor.degree() != 2 * d - 2) throw std::logic_error("Riemann-Hurwitz audit failed");
    return out;
}

Mobius Mobius::make(const FiniteField& field, Elem a, Elem b, Elem c, Elem d) {
    if (field.sub(field.mul(a, d), field.mul(b, c)).v == 0) throw std::invalid_argument("singular Mobius matrix");
    return Mobius{a, b, c, d};
}

ProjPoint Mobius::apply(const FiniteField& field, const ProjPoint& p) const {
    if (p.is_infinity()) {
        if (c.v == 0) return ProjPoint::infinity();
        return ProjPoint::finite(field.div(a, c));
    }
    const Elem x = p.value();
    const Elem den = field.add(field.mul(c, x), d);
    if (den.v == 0) return ProjPoint::infinity();
    return ProjPoint::finite(field.div(field.add(field.mul(a, x), b), den));
}

Mobius Mobius::inverse(const FiniteField& field) const { return Mobius{d, field.neg(b), field.neg(c), a}; }

RatMap mobius_act(const RatMap& f, const Mobius& m, Side side) {
    const FiniteField& fld = f.field();
    Mobius::make(fld, m.a, m.b, m.c, m.d);
    const Poly& F = f.numerator();
    const Poly& G = f.denominator();
    if (side == Side::Image) return RatMap::from(F.scaled(m.a) + G.scaled(m.b), F.scaled(m.c) + G.scaled(m.d));
    const int n = f.degree();
    return RatMap::from(F.substitute_mobius(m.a, m.b, m.c, m.d, n), G.substitute_mobius(m.a, m.b, m.c, m.d, n));
}

InvolutionResult involution_transform(const RatMap& f, const ProjPoint& p1, const ProjPoint& p2) {
    const FiniteField& fld = f.field();
    const int p = fld.characteristic();
    if (p1 == p2) throw std::invalid_argument("involution needs two distinct points");
    if (!is_separable(f)) throw std::invalid_argument("involution needs a separable map");
    const int e1 = ram_index(f, p1);
    const int e2 = ram_index(f, p2);
    if (e1 >= p || e2 >= p) throw std::invalid_argument("ramification index at a chosen point is not below p");
    if (f(p1) == f(p2)) throw std::invalid_argument("chosen points share their image");
    if (!different_divisor(f).wild.empty()) throw std::invalid_argument("map has wild ramification");

    std::optional<Mobius> norm;
    RatMap g = f;
    ProjPoint q1 = p1, q2 = p2;
    if (p1.is_infinity() || p2.is_infinity() || ram_index(f, ProjPoint::infinity()) > 1) {
        for (std::uint32_t i = 0; i < fld.order() && !norm; ++i) {
            const ProjPoint u = ProjPoint::finite(Elem{i});
            if (u == p1 || u == p2 || ram_index(f, u) != 1) continue;
            norm = Mobius::make(fld, Elem{i}, fld.one(), fld.one(), fld.zero());
        }
        if (!norm) throw std::invalid_argument("no unramified rational point available to move to infinity");
        g = mobius_act(f, *norm, Side::Domain);
        const Mobius back = norm->inverse(fld);
        q1 = back.apply(fld, p1);
        q2 = back.apply(fld, p2);
    }

    const ProjPoint c1 = g(q1), c2 = g(q2);
    Mobius n{};
    if (c1.is_infinity()) {
        n = Mobius::make(fld, fld.zero(), fld.one(), fld.one(), fld.neg(c2.value()));
    } else if (c2.is_infinity()) {
        n = Mobius::make(fld, fld.one(), fld.neg(c1.value()), fld.zero(), fld.one());
    } else {
        n = Mobius::make(fld, fld.one(), fld.neg(c1.value()), fld.one(), fld.neg(c2.value()));
    }
    const RatMap h = mobius_act(g, n, Side::Image);

    Poly lin1(fld, {fld.neg(q1.value()), fld.one()});
    Poly lin2(fld, {fld.neg(q2.value()), fld.one()});
    Poly pow1 = Poly::constant(fld, fld.one()), pow2 = pow1;
    for (int i = 0; i < p; ++i) {
        pow1 = pow1 * lin1;
        pow2 = pow2 * lin2;
    }
    RatMap hat = RatMap::from(pow2 * h.numerator(), pow1 * h.denominator());
    if (norm) hat = mobius_act(hat, norm->inverse(fld), Side::Domain);
    return {hat, norm};
}

std::vector<std::vector<Elem>> pencil_rows(const Poly& f, const Poly& g, int d) {
    require_same_field(f.field(), g.field());
    if (max_degree(f, g) > d) throw std::invalid_argument("pencil member exceeds the degree bound");
    Matrix m(f.field(), 2, d + 1);
    for (int i = 0; i <= d; ++i) {
        m.at(0, i) = f.coeff(i);
        m.at(1, i) = g.coeff(i);
    }
    if (m.rref().size() != 2) throw std::invalid_argument("polynomials do not span a pencil");
    return {m.row(0), m.row(1)};
}

bool equivalent(const RatMap& f, const RatMap& g) {
    if (!(f.field() == g.field()) || f.degree() != g.degree()) return false;
    return pencil_rows(f.numerator(), f.denominator(), f.degree()) ==
           pencil_rows(g.numerator(), g.denominator(), g.degree());
}

}  // namespace ramcount
