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

#include "ramcount/degeneration.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace ramcount {

namespace {

Poly one_poly(const FiniteField& f) { return Poly::constant(f, f.one()); }

std::string trim(std::string s) {
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
}

std::string strip_parens(const std::string& s) {
    const std::string t = trim(s);
    if (t.size() >= 2 && t.front() == '(' && t.back() == ')') return t.substr(1, t.size() - 2);
    return t;
}

// Slices in t: result[j] is the x-polynomial multiplying t^j.
std::vector<Poly> t_slices(const BiPoly& f) {
    const FiniteField& fld = f.field();
    std::size_t depth = 0;
    for (const Poly& c : f.coeffs()) depth = std::max(depth, c.coeffs().size());
    std::vector<std::vector<Elem>> rows(depth, std::vector<Elem>(f.coeffs().size(), fld.zero()));
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        const auto cs = f.coeffs()[i].coeffs();
        for (std::size_t j = 0; j < cs.size(); ++j) rows[j][i] = cs[j];
    }
    std::vector<Poly> out;
    for (auto& r : rows) out.emplace_back(fld, std::move(r));
    return out;
}

BiPoly from_t_slices(const FiniteField& fld, const std::vector<Poly>& slices) {
    std::size_t width = 0;
    for (const Poly& s : slices) width = std::max(width, s.coeffs().size());
    std::vector<std::vector<Elem>> cols(width, std::vector<Elem>(slices.size(), fld.zero()));
    for (std::size_t j = 0; j < slices.size(); ++j) {
        const auto cs = slices[j].coeffs();
        for (std::size_t i = 0; i < cs.size(); ++i) cols[i][j] = cs[i];
    }
    std::vector<Poly> c;
    for (auto& col : cols) c.emplace_back(fld, std::move(col));
    return BiPoly(fld, std::move(c));
}

BiPoly scalar(const FiniteField& fld, Elem c) { return BiPoly::from_t(Poly::constant(fld, c)); }

bool proportional(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return true;
    return a.scaled(b.lead()) == b.scaled(a.lead());
}

int deg_or(const Poly& f, int fallback) { return f.degree().value_or(fallback); }

// Index at infinity of the pair (F, G); common finite factors do not matter.
int index_at_infinity(const Poly& f, const Poly& g) {
    const FiniteField& fld = f.field();
    const int df = deg_or(f, -1), dg = deg_or(g, -1);
    if (df > dg) return df - dg;
    if (df < dg) return dg - df;
    const Poly h = f - g.scaled(fld.div(f.lead(), g.lead()));
    if (h.is_zero()) throw std::invalid_argument("constant map");
    return dg - h.deg();
}

}  // namespace

Section Section::infinity(const FiniteField& field, int order) {
    Section s{true, Poly(field), one_poly(field), order};
    return s;
}

Section Section::rational(const Poly& num, const Poly& den, int order) {
    require_same_field(num.field(), den.field());
    const FiniteField& fld = num.field();
    if (den.is_zero()) throw std::invalid_argument("section with zero denominator");
    Section s{false, num, den, order};
    if (num.is_zero()) {
        s.den = one_poly(fld);
    } else {
        const Poly g = gcd(num, den);
        s.num = exact_div(num, g);
        s.den = exact_div(den, g);
    }
    const Elem inv = fld.inv(s.den.lead());
    s.num = s.num.scaled(inv);
    s.den = s.den.scaled(inv);
    if (s.den.eval(fld.zero()).v == 0) throw std::invalid_argument("section has a pole at t = 0");
    return s;
}

Section Section::constant(const FiniteField& field, Elem a, int order) {
    return rational(Poly::constant(field, a), one_poly(field), order);
}

ProjPoint Section::at(Elem t) const {
    if (at_infinity) return ProjPoint::infinity();
    const FiniteField& fld = num.field();
    const Elem d = den.eval(t);
    if (d.v == 0) return ProjPoint::infinity();
    return ProjPoint::finite(fld.div(num.eval(t), d));
}

std::string format_section_point(const Section& s) {
    if (s.at_infinity) return "inf";
    if (s.den == one_poly(s.den.field())) return "(" + to_string(s.num) + ")";
    return "(" + to_string(s.num) + ")/(" + to_string(s.den) + ")";
}

Section parse_section(const FiniteField& field, const std::string& point, int order) {
    const std::string text = trim(point);
    if (text == "inf" || text == "Inf" || text == "INF") return Section::infinity(field, order);
    const std::size_t slash = text.find('/');
    if (slash == std::string::npos) return Section::rational(parse_poly(field, strip_parens(text)), one_poly(field), order);
    return Section::rational(parse_poly(field, strip_parens(text.substr(0, slash))),
                             parse_poly(field, strip_parens(text.substr(slash + 1))), order);
}

MapFamily::MapFamily(FiniteField fld, BiPoly f, BiPoly g, std::vector<Section> secs)
    : field(std::move(fld)), F(std::move(f)), G(std::move(g)), sections(std::move(secs)) {
    require_same_field(field, F.field());
    require_same_field(field, G.field());
    if (F.is_zero() && G.is_zero()) throw std::invalid_argument("zero pair does not define a family");
    for (const Section& s : sections) require_same_field(field, s.num.field());
}

int MapFamily::degree() const { return std::max(F.x_degree().value_or(0), G.x_degree().value_or(0)); }

RatMap::Built MapFamily::fiber(Elem t) const { return RatMap::create(F.at_t(t), G.at_t(t)); }

bool generic_fiber_ok(const MapFamily& fam) {
    if (fam.F.is_zero() || fam.G.is_zero()) return false;
    if (fam.wronskian().is_zero()) return false;
    return !resultant_x(fam.F, fam.G).is_zero();
}

MapFamily mobius_domain(const MapFamily& fam, const Mobius& m) {
    const FiniteField& fld = fam.field;
    const int n = fam.degree();
    auto move = [&](const BiPoly& f) {
        std::vector<Poly> sl = t_slices(f);
        for (Poly& s : sl) s = s.substitute_mobius(m.a, m.b, m.c, m.d, n);
        return from_t_slices(fld, sl);
    };
    const Mobius inv = m.inverse(fld);
    std::vector<Section> secs;
    for (const Section& s : fam.sections) {
        if (s.at_infinity) {
            if (inv.c.v == 0) {
                secs.push_back(Section::infinity(fld, s.order));
            } else {
                secs.push_back(Section::constant(fld, fld.div(inv.a, inv.c), s.order));
            }
            continue;
        }
        const Poly num = s.num.scaled(inv.a) + s.den.scaled(inv.b);
        const Poly den = s.num.scaled(inv.c) + s.den.scaled(inv.d);
        if (den.is_zero()) {
            secs.push_back(Section::infinity(fld, s.order));
        } else {
            secs.push_back(Section::rational(num, den, s.order));
        }
    }
    return MapFamily(fld, move(fam.F), move(fam.G), std::move(secs));
}

int normalize_special_fiber(MapFamily& fam) {
    const FiniteField& fld = fam.field;
    if (fam.wronskian().is_zero()) throw std::invalid_argument("family with inseparable generic fiber");
    int removed = 0;
    const int s = std::min(fam.F.is_zero() ? 1 << 30 : fam.F.t_valuation(), fam.G.is_zero() ? 1 << 30 : fam.G.t_valuation());
    if (s > 0) {
        fam.F = fam.F.divide_t_power(s);
        fam.G = fam.G.divide_t_power(s);
        removed += 2 * s;
    }
    while (true) {
        Poly f0 = fam.F.special_fiber();
        Poly g0 = fam.G.special_fiber();
        if (!proportional(f0, g0)) return removed;
        if (g0.is_zero()) {
            std::swap(fam.F, fam.G);
            std::swap(f0, g0);
        }
        const Elem c = f0.is_zero() ? fld.zero() : fld.div(f0.lead(), g0.lead());
        fam.F = fam.F - scalar(fld, c) * fam.G;
        if (fam.F.is_zero()) throw std::invalid_argument("family of constant maps");
        const int r = fam.F.t_valuation();
        fam.F = fam.F.divide_t_power(r);
        removed += r;
    }
}

TransformStep insep_limit_transform(const MapFamily& input) {
    MapFamily fam = input;
    const BiPoly w_in = input.wronskian();
    if (w_in.is_zero()) throw std::invalid_argument("family with inseparable generic fiber");
    const int before = w_in.t_valuation();
    normalize_special_fiber(fam);
    const FiniteField& fld = fam.field;
    const Poly f0 = fam.F.special_fiber();
    const Poly g0 = fam.G.special_fiber();
    if (!wronskian(f0, g0).is_zero()) throw std::invalid_argument("special fiber is already separable");

    const Poly g = gcd(f0, g0);
    const Poly fb = exact_div(f0, g);
    const Poly gb = exact_div(g0, g);
    const InseparableBezout hb = bezout_inseparable(fb, gb);

    const BiPoly x = fam.F * BiPoly::from_x(gb) - fam.G * BiPoly::from_x(fb);
    if (x.is_zero()) throw std::invalid_argument("family does not move with t");
    const int s = x.t_valuation();
    if (s < 1) throw std::logic_error("limit transform: combination does not vanish at t = 0");
    const BiPoly ft = x.divide_t_power(s);
    const BiPoly gt = fam.F * BiPoly::from_x(hb.h2) - fam.G * BiPoly::from_x(hb.h1);

    const BiPoly w_old = fam.wronskian();
    const BiPoly w_new = wronskian_x(ft, gt);
    if (!(w_new.multiply_t_power(s) == w_old)) throw std::logic_error("limit transform: Wronskian identity failed");
    const BiPoly xs = ft.multiply_t_power(s);
    if (!(fam.F == BiPoly::from_x(-hb.h1) * xs + BiPoly::from_x(fb) * gt) ||
        !(fam.G == BiPoly::from_x(-hb.h2) * xs + BiPoly::from_x(gb) * gt))
        throw std::logic_error("limit transform: cross-divisibility identity failed");
    if (resultant_x(ft, gt).is_zero()) throw std::logic_error("limit transform: coprimality lost");

    TransformStep step{MapFamily(fld, ft, gt, fam.sections), before, w_new.t_valuation(), 0};
    step.t_power = step.valuation_before - step.valuation_after;
    return step;
}

TameReduction tame_at_infinity_reduce(const Poly& f_in, const Poly& g_in) {
    require_same_field(f_in.field(), g_in.field());
    const FiniteField& fld = f_in.field();
    const int p = fld.characteristic();
    const Poly w0 = wronskian(f_in, g_in);
    if (w0.is_zero()) throw std::invalid_argument("tame reduction of an inseparable map");
    TameReduction r{f_in, g_in, 0, false};
    const int limit = 4 * (deg_or(f_in, 0) + deg_or(g_in, 0)) + 8;
    for (int iter = 0;; ++iter) {
        if (iter > limit) throw std::logic_error("tame reduction did not terminate");
        const int df = deg_or(r.F, -1), dg = deg_or(r.G, -1);
        if (df <= dg) {
            const Elem c = df == dg ? fld.div(r.F.lead(), r.G.lead()) : fld.zero();
            const Poly h = r.F - r.G.scaled(c);
            if (h.is_zero()) throw std::invalid_argument("constant map");
            if ((dg - h.deg()) % p != 0) break;
            r.F = r.G;
            r.G = h;
            r.swapped = !r.swapped;
            continue;
        }
        if ((df - dg) % p != 0) break;
        r.F = r.F - r.G.scaled(fld.div(r.F.lead(), r.G.lead())).shifted(df - dg);
        ++r.subtractions;
    }
    const Poly w1 = wronskian(r.F, r.G);
    if (!(w1 == (r.swapped ? -w0 : w0))) throw std::logic_error("tame reduction changed the affine different");
    return r;
}

HypothesisReport check_limit_hypotheses(const MapFamily& fam) {
    HypothesisReport rep;
    const FiniteField& fld = fam.field;
    const int p = fld.characteristic();
    const BiPoly w = fam.wronskian();
    if (w.is_zero()) {
        rep.failures.push_back("generic fiber is inseparable");
        return rep;
    }
    if (fam.F.is_zero() || fam.G.is_zero() || resultant_x(fam.F, fam.G).is_zero())
        rep.failures.push_back("generic fiber has a common factor");
    const int d = fam.degree();
    int total = 0;
    for (std::size_t i = 0; i < fam.sections.size(); ++i) {
        const Section& s = fam.sections[i];
        const std::string tag = "section " + std::to_string(i);
        total += s.order - 1;
        if (s.at_infinity) {
            rep.failures.push_back(tag + " is at infinity");
            continue;
        }
        if (s.order < 2) rep.failures.push_back(tag + " is unramified");
        if (s.order >= p) rep.failures.push_back(tag + " has order " + std::to_string(s.order) + " >= p");
        const int ord = x_low_order(shift_to_section(w, s.num, s.den));
        if (ord != s.order - 1)
            rep.failures.push_back(tag + " has different order " + std::to_string(ord) + ", expected " +
                                   std::to_string(s.order - 1));
        for (std::size_t j = 0; j < i; ++j) {
            const Section& o = fam.sections[j];
            if (!o.at_infinity && o.num == s.num && o.den == s.den)
                rep.failures.push_back(tag + " repeats section " + std::to_string(j));
        }
    }
    if (total != 2 * d - 2)
        rep.failures.push_back("sections carry ramification " + std::to_string(total) + ", expected " +
                               std::to_string(2 * d - 2));
    if (2 * d - 2 - *w.x_degree() != 0) rep.failures.push_back("generic fiber is ramified at infinity");

    int collisions = 0;
    for (std::size_t i = 0; i < fam.sections.size(); ++i)
        for (std::size_t j = i + 1; j < fam.sections.size(); ++j) {
            const Section& a = fam.sections[i];
            const Section& b = fam.sections[j];
            if (a.at_infinity || b.at_infinity || !(a.at_zero() == b.at_zero())) continue;
            ++collisions;
            rep.collision = std::make_pair(i, j);
            if (a.order + b.order >= p)
                rep.failures.push_back("colliding sections " + std::to_string(i) + ", " + std::to_string(j) +
                                       " have e + e' >= p");
        }
    if (collisions > 1) rep.failures.push_back("more than one collision at t = 0");
    rep.ok = rep.failures.empty();
    return rep;
}

LimitReport analyze_limit(const MapFamily& fam) {
    if (!generic_fiber_ok(fam)) throw std::invalid_argument("generic fiber must be separable with coprime F, G");
    LimitReport r;
    r.d = fam.degree();
    r.p = fam.field.characteristic();
    const HypothesisReport hyp = check_limit_hypotheses(fam);
    r.hypotheses_ok = hyp.ok;
    for (const std::string& f : hyp.failures) r.warnings.push_back("hypothesis: " + f);

    MapFamily cur = fam;
    r.valuations.push_back(fam.wronskian().t_valuation());
    normalize_special_fiber(cur);
    while (wronskian(cur.F.special_fiber(), cur.G.special_fiber()).is_zero()) {
        const TransformStep step = insep_limit_transform(cur);
        if (step.valuation_after >= step.valuation_before)
            throw std::logic_error("limit transform did not lower the t-valuation of W");
        cur = step.family;
        normalize_special_fiber(cur);
        r.valuations.push_back(cur.wronskian().t_valuation());
        ++r.iterations;
    }
    if (r.iterations == 0) {
        r.separable_limit = true;
        r.limit_F = cur.F.special_fiber();
        r.limit_G = cur.G.special_fiber();
        r.limit_map = RatMap::from(*r.limit_F, *r.limit_G);
        return r;
    }

    const TameReduction tame = tame_at_infinity_reduce(cur.F.special_fiber(), cur.G.special_fiber());
    r.limit_F = tame.F;
    r.limit_G = tame.G;
    r.d_tilde = std::max(deg_or(tame.F, 0), deg_or(tame.G, 0));
    r.d0 = tame.G.deg();
    r.e_infinity = index_at_infinity(tame.F, tame.G);
    r.m = r.d - *r.d0;
    const RatMap::Built built = RatMap::create(tame.F, tame.G);
    r.limit_map = built.map;
    const int base = built.base_points.degree();
    int b = 0;
    if (hyp.collision) {
        const ProjPoint meet = fam.sections[hyp.collision->first].at_zero();
        const auto it = built.base_points.points.find(meet);
        if (it != built.base_points.points.end()) b = it->second;
    }
    r.b = b;
    if (base > b) r.warnings.push_back("base points away from the collision: " + std::to_string(base - b));
    r.epsilon = r.limit_map->degree() - (r.d + *r.m - 1 - b);

    std::vector<std::string> violations;
    if (*r.d_tilde != r.d + *r.m - 1) violations.push_back("degree of the limit is not d + m - 1");
    if (*r.e_infinity != 2 * *r.m - 1) violations.push_back("index at infinity is not 2m - 1");
    if (*r.m < r.p || *r.m > r.d) violations.push_back("m outside [p, d]");
    if (hyp.collision) {
        const int sum = fam.sections[hyp.collision->first].order + fam.sections[hyp.collision->second].order;
        if (2 * b >= sum - 1) violations.push_back("base multiplicity 2b >= e + e' - 1");
    }
    if (hyp.ok) {
        if (!violations.empty()) {
            std::string msg = "limit identities failed:";
            for (const auto& v : violations) msg += " " + v + ";";
            throw std::logic_error(msg);
        }
        r.limit_case = hyp.collision ? "ii" : "i";
    } else {
        for (const auto& v : violations) r.warnings.push_back(v);
    }
    return r;
}

MapFamily pathology_family(const RatMap& f) {
    const FiniteField& fld = f.field();
    const int p = fld.characteristic();
    const Poly& F = f.numerator();
    const Poly& G = f.denominator();
    if (deg_or(F, -1) <= deg_or(G, -1)) throw std::invalid_argument("map must send infinity to infinity");
    const int e = F.deg() - G.deg();
    if (e <= p || e % p == 0) throw std::invalid_argument("index at infinity must exceed p and be prime to p");
    const Different diff = different_divisor(f);
    if (diff.divisor.residual) throw std::invalid_argument("ramification is not rational over the field");
    std::vector<Section> secs{Section::infinity(fld, e)};
    for (const auto& [pt, mult] : diff.divisor.points) {
        if (pt.is_infinity()) continue;
        const int ef = ram_index(f, pt);
        if (ef >= p) throw std::invalid_argument("finite ramification orders must be below p");
        secs.push_back(Section::constant(fld, pt.value(), ef));
    }
    const BiPoly Ft = BiPoly::from_x(F) - BiPoly::from_x(G.shifted(p)).multiply_t_power(1);
    return MapFamily(fld, Ft, BiPoly::from_x(G), std::move(secs));
}

WildAudit wild_different_audit(const RatMap& f) {
    const FiniteField& fld = f.field();
    const int p = fld.characteristic();
    const int d = f.degree();
    WildAudit a;
    a.index = ram_index(f, ProjPoint::infinity());
    const Poly w = wronskian(f);
    if (w.is_zero()) throw std::invalid_argument("audit of an inseparable map");
    a.different_at_infinity = low_order(wronskian(f.numerator().reversed(d), f.denominator().reversed(d)));
    a.applies = a.index % p == 0 && a.index / p > 1;
    a.reduced_index = a.index;
    a.reduced_degree = d;
    if (!a.applies) return a;
    a.m = a.index / p;
    a.bound = 2 * (a.m - 1) * p;
    const TameReduction t = tame_at_infinity_reduce(f.numerator(), f.denominator());
    const RatMap g = RatMap::from(t.F, t.G);
    a.reduced_index = ram_index(g, ProjPoint::infinity());
    a.reduced_degree = g.degree();
    a.holds = a.reduced_index >= p || a.different_at_infinity > a.bound;
    return a;
}

PerturbationReport inseparable_perturbations(const RatMap& f, std::uint64_t budget) {
    const FiniteField& fld = f.field();
    const int p = fld.characteristic();
    if (f.denominator().deg() != 0) throw std::invalid_argument("perturbations need a polynomial map");
    const Poly P = f.numerator().scaled(fld.inv(f.denominator().lead()));
    const int d = P.deg();
    const Different diff = different_divisor(f);
    if (diff.divisor.residual) throw std::invalid_argument("ramification is not rational over the field");

    PerturbationReport rep;
    for (const auto& [pt, mult] : diff.divisor.points) rep.ramification.emplace_back(pt, ram_index(f, pt));
    for (int e = p; e < d; e += p) rep.exponents.push_back(e);
    const std::uint64_t q = fld.order();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < rep.exponents.size(); ++i) {
        if (total > budget / q) throw BudgetExceeded("perturbation space exceeds the budget");
        total *= q;
    }
    if (total > budget) throw BudgetExceeded("perturbation space exceeds the budget");
    rep.candidates = total;

    std::vector<std::uint32_t> digits(rep.exponents.size(), 0);
    for (std::uint64_t n = 0; n < total; ++n) {
        std::vector<Elem> c(static_cast<std::size_t>(d), fld.zero());
        for (std::size_t i = 0; i < digits.size(); ++i) c[static_cast<std::size_t>(rep.exponents[i])] = fld.element(digits[i]);
        const Poly g(fld, std::move(c));
        const Poly h = P + g;
        bool ok = true;
        for (const auto& [pt, e] : rep.ramification) {
            if (pt.is_infinity()) continue;  // deg g < d keeps the index d there
            const Elem a = pt.value();
            if (valuation(h - Poly::constant(fld, h.eval(a)), a) != e) {
                ok = false;
                break;
            }
        }
        if (ok) rep.admissible.push_back(g);
        for (std::size_t i = 0; i < digits.size(); ++i) {
            if (++digits[i] < q) break;
            digits[i] = 0;
        }
    }
    std::uint64_t count = rep.admissible.size();
    int dim = 0;
    while (count > 1 && count % q == 0) {
        count /= q;
        ++dim;
    }
    if (count == 1) rep.dimension = dim;
    return rep;
}

}  // namespace ramcount
