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

#include "ramcount/report.hpp"

#include <stdexcept>
#include <string>

namespace ramcount {

namespace {

template <class T>
Json opt(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

Json points_json(const FiniteField& field, std::span<const ProjPoint> pts) {
    Json a = Json::array();
    for (const ProjPoint& p : pts) a.push_back(format_point(field, p));
    return a;
}

}  // namespace

Json field_json(const FiniteField& field) {
    std::string modulus;
    for (std::size_t i = 0; i < field.modulus().size(); ++i) {
        if (i) modulus += ',';
        modulus += std::to_string(field.modulus()[i]);
    }
    return Json{{"p", field.characteristic()}, {"k", field.extension_degree()}, {"q", field.order()}, {"modulus", modulus}};
}

Json divisor_json(const FiniteField& field, const Divisor& d) {
    Json pts = Json::array();
    for (const auto& [pt, m] : d.points) pts.push_back(Json{{"point", format_point(field, pt)}, {"multiplicity", m}});
    Json j{{"points", pts}, {"degree", d.degree()}};
    j["residual"] = d.residual ? Json(to_string(*d.residual)) : Json(nullptr);
    return j;
}

Json count_json(const CountResult& r) {
    Json j{{"schema", "ramcount.count/1"},
           {"orders", r.profile.orders},
           {"p", r.profile.p.to_string()},
           {"d", r.profile.d},
           {"class", to_string(r.profile.char_class)}};
    j["count"] = opt(r.value);
    Json trace = Json::array();
    for (const CountStep& s : r.trace) trace.push_back(Json{{"dprime", s.dprime}, {"e", s.e}, {"value", s.value}});
    j["trace"] = trace;
    if (!r.reason.empty()) j["reason"] = r.reason;
    return j;
}

Json schubert_json(int d, std::span<const int> orders, std::uint64_t value, const std::vector<ClassSum>& steps) {
    Json expansion = Json::array();
    for (const ClassSum& s : steps) {
        Json terms = Json::array();
        for (const auto& [cls, c] : s) terms.push_back(Json{{"a", cls.a}, {"b", cls.b}, {"coeff", c}});
        expansion.push_back(terms);
    }
    return Json{{"schema", "ramcount.schubert/1"},
                {"d", d},
                {"orders", std::vector<int>(orders.begin(), orders.end())},
                {"value", value},
                {"expansion", expansion}};
}

Json three_point_json(const FiniteField& field, int d, int e1, int e2, int e3, const ThreePointSolution& s, int expected) {
    Json j{{"schema", "ramcount.solve3/1"}, {"field", field_json(field)}, {"d", d}, {"orders", {e1, e2, e3}},
           {"points", {"0", "inf", "1"}}, {"m", s.m}};
    j["pencil"] = s.pencil ? Json(to_string(*s.pencil)) : Json(nullptr);
    j["map"] = s.map ? Json(to_string(*s.map)) : Json(nullptr);
    j["separable"] = s.separable;
    j["n_three"] = expected;
    j["consistent"] = (s.m == 0 && s.separable) == (expected == 1);
    return j;
}

Json census_json(const FiniteField& field, int d, std::span<const Assignment> assignments, const CensusReport& r) {
    Json assign = Json::array();
    for (const Assignment& a : assignments) assign.push_back(Json{{"point", format_point(field, a.point)}, {"order", a.order}});
    Json witnesses = Json::array();
    for (const Witness& w : r.witnesses) {
        witnesses.push_back(Json{{"pencil", to_string(w.pencil)},
                                 {"map", to_string(w.map)},
                                 {"images", points_json(field, w.images)},
                                 {"exact", w.exact},
                                 {"distinct_images", w.distinct_images}});
    }
    return Json{{"schema", "ramcount.census/1"},
                {"field", field_json(field)},
                {"d", d},
                {"assignments", assign},
                {"total", r.total},
                {"satisfying", r.satisfying},
                {"separable", r.separable},
                {"inseparable", r.inseparable},
                {"with_base_points", r.with_base_points},
                {"audit_failures", r.audit_failures},
                {"shared_images", r.shared_images},
                {"witnesses", witnesses}};
}

Json family_json(const MapFamily& fam) {
    Json secs = Json::array();
    for (const Section& s : fam.sections) secs.push_back(Json{{"point", format_section_point(s)}, {"order", s.order}});
    return Json{{"p", fam.field.characteristic()},
                {"k", fam.field.extension_degree()},
                {"F", to_string(fam.F)},
                {"G", to_string(fam.G)},
                {"sections", secs}};
}

MapFamily family_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("family must be a JSON object");
    for (const char* key : {"p", "F", "G"})
        if (!j.contains(key)) throw std::invalid_argument(std::string("family is missing \"") + key + "\"");
    const FiniteField field(j.at("p").get<int>(), j.value("k", 1));
    std::vector<Section> secs;
    if (j.contains("sections")) {
        for (const Json& s : j.at("sections")) {
            secs.push_back(parse_section(field, s.at("point").get<std::string>(), s.at("order").get<int>()));
        }
    }
    return MapFamily(field, parse_bipoly(field, j.at("F").get<std::string>()),
                     parse_bipoly(field, j.at("G").get<std::string>()), std::move(secs));
}

Json transform_json(const TransformStep& step) {
    const MapFamily& fam = step.family;
    Json j{{"schema", "ramcount.transform/1"},
           {"family", family_json(fam)},
           {"valuation_before", step.valuation_before},
           {"valuation_after", step.valuation_after},
           {"t_power", step.t_power}};
    const Poly f0 = fam.F.special_fiber(), g0 = fam.G.special_fiber();
    j["special_fiber"] = to_string(f0) + "/" + to_string(g0);
    j["special_fiber_separable"] = !wronskian(f0, g0).is_zero();
    return j;
}

Json limit_json(const FiniteField& field, const LimitReport& r) {
    Json j{{"schema", "ramcount.limit/1"},
           {"field", field_json(field)},
           {"d", r.d},
           {"separable_limit", r.separable_limit},
           {"iterations", r.iterations},
           {"valuations", r.valuations},
           {"hypotheses_ok", r.hypotheses_ok}};
    j["case"] = r.limit_case.empty() ? Json(nullptr) : Json(r.limit_case);
    j["m"] = opt(r.m);
    j["b"] = opt(r.b);
    j["d_tilde"] = opt(r.d_tilde);
    j["d0"] = opt(r.d0);
    j["e_infinity"] = opt(r.e_infinity);
    j["epsilon"] = opt(r.epsilon);
    j["limit_pair"] = r.limit_F ? Json(to_string(*r.limit_F) + "/" + to_string(*r.limit_G)) : Json(nullptr);
    j["limit_map"] = r.limit_map ? Json(to_string(*r.limit_map)) : Json(nullptr);
    j["warnings"] = r.warnings;
    return j;
}

Json wild_audit_json(const WildAudit& a) {
    return Json{{"applies", a.applies},
                {"index", a.index},
                {"m", a.m},
                {"different_at_infinity", a.different_at_infinity},
                {"bound", a.bound},
                {"reduced_index", a.reduced_index},
                {"reduced_degree", a.reduced_degree},
                {"holds", a.holds}};
}

Json perturbation_json(const FiniteField& field, const PerturbationReport& r) {
    Json ram = Json::array();
    for (const auto& [pt, e] : r.ramification) ram.push_back(Json{{"point", format_point(field, pt)}, {"index", e}});
    Json adm = Json::array();
    for (const Poly& g : r.admissible) adm.push_back(to_string(g));
    Json j{{"exponents", r.exponents}, {"ramification", ram}, {"candidates", r.candidates}, {"admissible", adm}};
    j["dimension"] = opt(r.dimension);
    return j;
}

}  // namespace ramcount
