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

#include "ramcount/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "ramcount/report.hpp"

namespace ramcount {

namespace {

constexpr std::uint64_t kDefaultSeed = 1;

struct Options {
    std::string p;
    std::optional<int> k;
    std::optional<int> d;
    std::string orders;
    std::string points;
    std::uint64_t seed = kDefaultSeed;
    std::string format;
    std::optional<std::uint64_t> budget;
    std::string family;
    bool analyze = false;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        while (!cur.empty() && cur.front() == ' ') cur.erase(cur.begin());
        while (!cur.empty() && cur.back() == ' ') cur.pop_back();
        out.push_back(cur);
    }
    return out;
}

int parse_int(const std::string& s, const char* what) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("bad ") + what + " '" + s + "'");
    }
    if (pos != s.size()) throw std::invalid_argument(std::string("bad ") + what + " '" + s + "'");
    return v;
}

std::vector<int> parse_orders(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("--orders is required");
    std::vector<int> out;
    for (const std::string& tok : split(s, ',')) out.push_back(parse_int(tok, "order"));
    return out;
}

Characteristic require_p(const Options& o) {
    if (o.p.empty()) throw std::invalid_argument("--p is required");
    return parse_characteristic(o.p);
}

int prime_p(const Options& o) {
    const Characteristic c = require_p(o);
    if (c.is_infinite()) throw std::invalid_argument("this command needs a finite characteristic");
    return c.value();
}

int degree_from(const std::vector<int>& orders, const std::optional<int>& d) {
    long long total = 0;
    for (int e : orders) total += e - 1;
    if (total % 2 != 0) throw std::invalid_argument("total ramification sum(e_i - 1) is odd");
    const int derived = static_cast<int>(total / 2 + 1);
    if (d && *d != derived)
        throw std::invalid_argument("--d " + std::to_string(*d) + " does not match the orders (degree " +
                                    std::to_string(derived) + ")");
    return derived;
}

std::string format_or(const Options& o, const std::string& fallback, std::initializer_list<const char*> allowed) {
    const std::string f = o.format.empty() ? fallback : o.format;
    for (const char* a : allowed)
        if (f == a) return f;
    throw std::invalid_argument("unsupported --format '" + f + "' for this command");
}

Json read_json_file(const std::string& path) {
    if (path.empty()) throw std::invalid_argument("--family is required");
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open family file '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(std::string("family file is not JSON: ") + e.what());
    }
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_count(const Options& o, std::ostream& out) {
    const CountResult r = count(parse_orders(o.orders), require_p(o));
    if (format_or(o, "json", {"json", "text"}) == "text") {
        out << (r.value ? std::to_string(*r.value) : std::string("unknown")) << '\n';
    } else {
        emit(out, count_json(r));
    }
    return kExitOk;
}

int cmd_schubert(const Options& o, std::ostream& out) {
    const std::vector<int> orders = parse_orders(o.orders);
    const int d = degree_from(orders, o.d);
    std::vector<ClassSum> steps;
    const std::uint64_t v = intersection_number(d, orders, &steps);
    if (format_or(o, "json", {"json", "text"}) == "text") {
        out << v << '\n';
    } else {
        emit(out, schubert_json(d, orders, v, steps));
    }
    return kExitOk;
}

int cmd_solve3(const Options& o, std::ostream& out) {
    const std::vector<int> orders = parse_orders(o.orders);
    if (orders.size() != 3) throw std::invalid_argument("solve3 needs exactly three orders");
    const int p = prime_p(o);
    const int d = degree_from(orders, o.d);
    const FiniteField field(p, o.k.value_or(2));
    const ThreePointSolution s = solve_three_point(d, orders[0], orders[1], orders[2], field);
    const int expected = n_three(orders[0], orders[1], orders[2], Characteristic::prime(p));
    if (format_or(o, "json", {"json", "text"}) == "text") {
        out << "m=" << s.m << " separable=" << (s.separable ? "true" : "false") << " n_three=" << expected << '\n';
    } else {
        emit(out, three_point_json(field, d, orders[0], orders[1], orders[2], s, expected));
    }
    return kExitOk;
}

int cmd_search(const Options& o, std::ostream& out) {
    const std::vector<int> orders = parse_orders(o.orders);
    const int p = prime_p(o);
    const int d = degree_from(orders, o.d);
    const FiniteField field(p, o.k.value_or(1));
    std::vector<ProjPoint> pts;
    if (o.points.empty()) {
        pts = sample_general_points(static_cast<int>(orders.size()), field, o.seed);
    } else {
        for (const std::string& tok : split(o.points, ',')) pts.push_back(parse_point(field, tok));
    }
    if (pts.size() != orders.size()) throw std::invalid_argument("--points and --orders differ in length");
    std::vector<Assignment> assign;
    for (std::size_t i = 0; i < pts.size(); ++i) assign.push_back({pts[i], orders[i]});
    CensusOptions copt;
    copt.budget = resolve_budget(o.budget);
    const CensusReport rep = count_maps_bruteforce(d, assign, field, copt);
    const CountResult formula = count(orders, Characteristic::prime(p));
    if (format_or(o, "json", {"json", "text"}) == "text") {
        out << "separable=" << rep.separable << " n_gen=" << (formula.value ? std::to_string(*formula.value) : "unknown")
            << '\n';
        return kExitOk;
    }
    Json j = census_json(field, d, assign, rep);
    j["seed"] = o.points.empty() ? Json(o.seed) : Json(nullptr);
    j["n_gen"] = formula.value ? Json(*formula.value) : Json(nullptr);
    emit(out, j);
    return kExitOk;
}

int cmd_family(const Options& o, std::ostream& out) {
    const int p = o.p.empty() ? 3 : prime_p(o);
    const FiniteField field(p, o.k.value_or(2));
    RatMap f = RatMap::from(Poly::monomial(field, field.one(), p + 2) + Poly::x(field), Poly::constant(field, field.one()));
    if (!o.family.empty()) {
        const Json j = read_json_file(o.family);
        if (!j.contains("map")) throw std::invalid_argument("family file needs a \"map\" entry F/G");
        f = parse_ratmap(field, j.at("map").get<std::string>());
    }
    const MapFamily fam = pathology_family(f);
    if (field.order() > resolve_budget(o.budget)) throw BudgetExceeded("field larger than the budget");
    Json members = Json::array();
    std::set<std::string> pencils;
    std::optional<Json> first_divisor;
    bool identical = true;
    for (std::uint32_t i = 0; i < field.order(); ++i) {
        const Elem t = field.element(i);
        const RatMap m = fam.fiber(t).map;
        const Different diff = different_divisor(m);
        const Json div = divisor_json(field, diff.divisor);
        if (!first_divisor) first_divisor = div;
        identical = identical && div == *first_divisor;
        const Pencil pen = Pencil::from_polys(m.numerator(), m.denominator(), m.degree());
        pencils.insert(to_string(pen));
        members.push_back(Json{{"t", field.format(t)}, {"map", to_string(m)}, {"pencil", to_string(pen)}, {"divisor", div}});
    }
    if (format_or(o, "json", {"json", "text"}) == "text") {
        out << "members=" << field.order() << " distinct_pencils=" << pencils.size()
            << " identical_divisors=" << (identical ? "true" : "false") << '\n';
        return kExitOk;
    }
    emit(out, Json{{"schema", "ramcount.family/1"},
                   {"field", field_json(field)},
                   {"map", to_string(f)},
                   {"family", family_json(fam)},
                   {"members", members},
                   {"distinct_pencils", pencils.size()},
                   {"identical_divisors", identical}});
    return kExitOk;
}

int cmd_transform(const Options& o, std::ostream& out) {
    const MapFamily fam = family_from_json(read_json_file(o.family));
    format_or(o, "json", {"json"});
    if (o.analyze) {
        emit(out, limit_json(fam.field, analyze_limit(fam)));
    } else {
        emit(out, transform_json(insep_limit_transform(fam)));
    }
    return kExitOk;
}

std::string csv_quote(const std::vector<int>& orders) {
    std::string s = "\"";
    for (std::size_t i = 0; i < orders.size(); ++i) s += (i ? "," : "") + std::to_string(orders[i]);
    return s + "\"";
}

int cmd_table(const Options& o, std::ostream& out) {
    std::vector<Characteristic> ps;
    for (const std::string& tok : split(o.p.empty() ? "3,5,7,11,13,inf" : o.p, ',')) ps.push_back(parse_characteristic(tok));
    const int d_max = o.d.value_or(6);
    if (d_max < 2) throw std::invalid_argument("--d must be at least 2");
    const std::vector<TableRow> rows = build_table(ps, d_max);
    if (rows.size() > resolve_budget(o.budget)) throw BudgetExceeded("table exceeds the budget");
    if (format_or(o, "csv", {"csv", "json", "text"}) == "json") {
        Json a = Json::array();
        for (const TableRow& r : rows) {
            Json j{{"orders", r.orders}, {"p", r.p.to_string()}, {"d", r.d}, {"class", to_string(r.char_class)}};
            j["count"] = r.count ? Json(*r.count) : Json("unknown");
            j["closed_form"] = r.closed_form ? Json(*r.closed_form) : Json(nullptr);
            j["schubert"] = r.schubert;
            j["match"] = r.match ? Json(*r.match) : Json(nullptr);
            j["reason"] = r.reason;
            a.push_back(j);
        }
        emit(out, Json{{"schema", "ramcount.table/1"}, {"rows", a}});
    } else {
        out << table_csv(rows);
    }
    return kExitOk;
}

}  // namespace

std::uint64_t resolve_budget(std::optional<std::uint64_t> flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("RAMCOUNT_BUDGET"); env && *env) {
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(env, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("bad RAMCOUNT_BUDGET '") + env + "'");
        }
        if (pos != std::string(env).size()) throw std::invalid_argument(std::string("bad RAMCOUNT_BUDGET '") + env + "'");
        return v;
    }
    return kDefaultBudget;
}

std::vector<TableRow> build_table(std::span<const Characteristic> ps, int d_max) {
    std::vector<Characteristic> chars(ps.begin(), ps.end());
    std::stable_sort(chars.begin(), chars.end(), [](Characteristic a, Characteristic b) {
        if (a.is_infinite() != b.is_infinite()) return b.is_infinite();
        return !a.is_infinite() && a.value() < b.value();
    });
    chars.erase(std::unique(chars.begin(), chars.end()), chars.end());

    std::vector<TableRow> rows;
    for (int d = 2; d <= d_max; ++d) {
        // Nondecreasing orders in [2, d] with sum(e - 1) = 2d - 2, grouped by length.
        std::vector<std::vector<int>> profiles;
        std::vector<int> cur;
        std::function<void(int, int)> grow = [&](int lo, int left) {
            if (left == 0) {
                if (cur.size() >= 3) profiles.push_back(cur);
                return;
            }
            for (int e = lo; e <= d && e - 1 <= left; ++e) {
                cur.push_back(e);
                grow(e, left - (e - 1));
                cur.pop_back();
            }
        };
        grow(2, 2 * d - 2);
        std::stable_sort(profiles.begin(), profiles.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
        for (const auto& orders : profiles) {
            const std::uint64_t schub = intersection_number(d, orders);
            for (Characteristic p : chars) {
                const CountResult r = count(orders, p);
                TableRow row;
                row.orders = orders;
                row.p = p;
                row.d = d;
                row.char_class = r.profile.char_class;
                row.count = r.value;
                row.schubert = schub;
                row.reason = r.reason;
                if (orders.size() == 4 && !r.profile.wild) row.closed_form = n_four_closed(orders, p);
                if (r.value) {
                    bool any = false, ok = true;
                    if (row.closed_form) {
                        any = true;
                        ok = ok && *row.closed_form == *r.value;
                    }
                    if (p.is_infinite()) {
                        any = true;
                        ok = ok && schub == *r.value;
                    }
                    if (any) row.match = ok;
                }
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

std::string table_csv(std::span<const TableRow> rows) {
    std::ostringstream s;
    s << "# schema=ramcount.table/1\n";
    s << "orders,p,d,class,count,closed_form,schubert,match,reason\n";
    for (const TableRow& r : rows) {
        s << csv_quote(r.orders) << ',' << r.p.to_string() << ',' << r.d << ',' << to_string(r.char_class) << ',';
        s << (r.count ? std::to_string(*r.count) : std::string("unknown")) << ',';
        s << (r.closed_form ? std::to_string(*r.closed_form) : std::string()) << ',';
        s << r.schubert << ',';
        s << (r.match ? (*r.match ? "true" : "false") : "") << ',';
        s << r.reason << '\n';
    }
    return s.str();
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Count and construct rational maps with prescribed ramification", "ramcount"};
    app.require_subcommand(1);
    Options o;
    std::string budget_text;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--p", o.p, "characteristic: odd prime or inf (table: comma list)");
        sub->add_option("--k", o.k, "extension degree of the field");
        sub->add_option("--d", o.d, "degree (table: maximum degree)");
        sub->add_option("--orders", o.orders, "ramification orders, comma separated");
        sub->add_option("--points", o.points, "points of P^1, comma separated, inf allowed");
        sub->add_option("--seed", o.seed, "seed for sampling general points");
        sub->add_option("--format", o.format, "json, csv or text");
        sub->add_option("--budget", budget_text, "enumeration budget (overrides RAMCOUNT_BUDGET)");
        sub->add_option("--family", o.family, "path to a family JSON file");
    };
    std::vector<std::pair<CLI::App*, std::function<int(const Options&, std::ostream&)>>> commands;
    auto add = [&](const char* name, const char* help, std::function<int(const Options&, std::ostream&)> fn) {
        CLI::App* sub = app.add_subcommand(name, help);
        add_common(sub);
        commands.emplace_back(sub, std::move(fn));
        return sub;
    };
    add("count", "closed-form count of separable maps for general points", cmd_count);
    add("schubert", "Schubert intersection number in characteristic zero", cmd_schubert);
    add("solve3", "solve the three-point problem at 0, inf, 1", cmd_solve3);
    add("search", "brute-force census of pencils over a finite field", cmd_search);
    add("family", "pathology family with constant ramification", cmd_family);
    CLI::App* transform = add("transform", "inseparable-limit transform of a family", cmd_transform);
    transform->add_flag("--analyze", o.analyze, "iterate to a separable limit and report invariants");
    add("table", "CSV table of counts with cross-checks", cmd_table);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalid;
    }
    try {
        if (!budget_text.empty()) {
            std::size_t pos = 0;
            o.budget = std::stoull(budget_text, &pos);
            if (pos != budget_text.size()) throw std::invalid_argument("bad --budget");
        }
        for (auto& [sub, fn] : commands)
            if (sub->parsed()) return fn(o, out);
        err << "no command given\n";
        return kExitInvalid;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::domain_error& e) {
        err << "invalid input: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::out_of_range& e) {
        err << "invalid input: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const Json::exception& e) {
        err << "invalid input: " << e.what() << '\n';
        return kExitInvalid;
    }
}

}  // namespace ramcount
