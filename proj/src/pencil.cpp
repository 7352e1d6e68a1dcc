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

#include "ramcount/pencil.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include "ramcount/linalg.hpp"

namespace ramcount {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("pencil count exceeds 64 bits");
    return r;
}

std::uint64_t checked_pow(std::uint64_t q, int n) {
    std::uint64_t r = 1;
    for (int i = 0; i < n; ++i) r = checked_mul(r, q);
    return r;
}

// Binomial coefficients C(j, k) reduced mod p, for j, k <= n.
std::vector<std::vector<long long>> binomials_mod(int n, int p) {
    std::vector<std::vector<long long>> c(static_cast<std::size_t>(n) + 1, std::vector<long long>(static_cast<std::size_t>(n) + 1, 0));
    for (int j = 0; j <= n; ++j) {
        c[static_cast<std::size_t>(j)][0] = 1;
        for (int k = 1; k <= j; ++k)
            c[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
                (c[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)] +
                 (k <= j - 1 ? c[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k)] : 0)) % p;
    }
    return c;
}

// Row-major e x (d + 1) matrix taking a coefficient vector to its first e
// Taylor coefficients at the point (top e coefficients at infinity).
std::vector<Elem> taylor_matrix(const FiniteField& field, int d, const ProjPoint& pt, int e) {
    std::vector<Elem> t(static_cast<std::size_t>(e) * static_cast<std::size_t>(d + 1), field.zero());
    auto at = [&](int k, int j) -> Elem& { return t[static_cast<std::size_t>(k * (d + 1) + j)]; };
    if (pt.is_infinity()) {
        for (int k = 0; k < e; ++k) at(k, d - k) = field.one();
        return t;
    }
    const auto binom = binomials_mod(d, field.characteristic());
    const Elem a = pt.value();
    for (int k = 0; k < e; ++k)
        for (int j = k; j <= d; ++j)
            at(k, j) = field.mul(field.from_int(binom[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]),
                                 field.pow(a, static_cast<std::uint64_t>(j - k)));
    return t;
}

void apply_taylor(const FiniteField& field, const std::vector<Elem>& t, int e, int d, const Elem* r, Elem* out) {
    for (int k = 0; k < e; ++k) {
        Elem s = field.zero();
        const Elem* row = t.data() + static_cast<std::ptrdiff_t>(k) * (d + 1);
        for (int j = 0; j <= d; ++j)
            if (r[j].v != 0 && row[j].v != 0) s = field.add(s, field.mul(row[j], r[j]));
        out[k] = s;
    }
}

bool proportional(const FiniteField& field, const Elem* u, const Elem* v, int e) {
    for (int a = 0; a < e; ++a)
        for (int b = a + 1; b < e; ++b)
            if (field.mul(u[a], v[b]) != field.mul(u[b], v[a])) return false;
    return true;
}

// Odometer over the free coordinates of one echelon row.
struct RowCursor {
    std::vector<int> free;
    std::vector<Elem> row;
    std::uint32_t q;

    void set_index(std::uint64_t idx) {
        for (int pos : free) {
            row[static_cast<std::size_t>(pos)] = Elem{static_cast<std::uint32_t>(idx % q)};
            idx /= q;
        }
    }
    void next() {
        for (int pos : free) {
            auto& c = row[static_cast<std::size_t>(pos)];
            if (c.v + 1 < q) {
                c.v += 1;
                return;
            }
            c.v = 0;
        }
    }
};

RowCursor make_row(int d, int pivot, int skip, std::uint32_t q) {
    RowCursor cur{{}, std::vector<Elem>(static_cast<std::size_t>(d) + 1, Elem{0}), q};
    cur.row[static_cast<std::size_t>(pivot)] = Elem{1};
    for (int c = pivot + 1; c <= d; ++c)
        if (c != skip) cur.free.push_back(c);
    return cur;
}

}  // namespace

std::string to_string(const Pencil& v) { return to_string(v.first()) + "/" + to_string(v.second()); }

Pencil Pencil::from_polys(const Poly& f, const Poly& g, int d) {
    auto rows = pencil_rows(f, g, d);
    return Pencil(Poly(f.field(), std::move(rows[0])), Poly(f.field(), std::move(rows[1])), d);
}

std::uint64_t pencil_count(int d, std::uint64_t q) {
    if (d < 1) throw std::invalid_argument("pencils need degree bound at least 1");
    std::uint64_t total = 0;
    for (int i = 0; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) {
            const std::uint64_t term = checked_pow(q, (d - i - 1) + (d - j));
            if (__builtin_add_overflow(total, term, &total)) throw std::overflow_error("pencil count exceeds 64 bits");
        }
    return total;
}

void for_each_pencil(int d, const FiniteField& field, std::uint64_t budget, const std::function<void(const Pencil&)>& visit) {
    const std::uint64_t total = pencil_count(d, field.order());
    if (total > budget)
        throw BudgetExceeded("enumeration of " + std::to_string(total) + " pencils exceeds budget " + std::to_string(budget));
    const std::uint32_t q = field.order();
    for (int i = 0; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) {
            RowCursor r1 = make_row(d, i, j, q);
            const std::uint64_t n1 = checked_pow(q, static_cast<int>(r1.free.size()));
            for (std::uint64_t a = 0; a < n1; ++a, r1.next()) {
                RowCursor r2 = make_row(d, j, -1, q);
                const std::uint64_t n2 = checked_pow(q, static_cast<int>(r2.free.size()));
                for (std::uint64_t b = 0; b < n2; ++b, r2.next())
                    visit(Pencil::from_polys(Poly(field, r1.row), Poly(field, r2.row), d));
            }
        }
}

std::vector<Pencil> enumerate_pencils(int d, const FiniteField& field, std::uint64_t budget) {
    std::vector<Pencil> out;
    for_each_pencil(d, field, budget, [&](const Pencil& v) { out.push_back(v); });
    return out;
}

bool schubert_condition(const Pencil& v, const ProjPoint& p, int e) {
    const int d = v.degree_bound();
    if (e < 1 || e > d) throw std::invalid_argument("condition order outside [1, d]");
    const FiniteField& field = v.field();
    const auto t = taylor_matrix(field, d, p, e);
    std::vector<Elem> r1(static_cast<std::size_t>(d) + 1), r2(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        r1[static_cast<std::size_t>(i)] = v.first().coeff(i);
        r2[static_cast<std::size_t>(i)] = v.second().coeff(i);
    }
    std::vector<Elem> u1(static_cast<std::size_t>(e)), u2(static_cast<std::size_t>(e));
    apply_taylor(field, t, e, d, r1.data(), u1.data());
    apply_taylor(field, t, e, d, r2.data(), u2.data());
    return proportional(field, u1.data(), u2.data(), e);
}

ThreePointSolution solve_three_point(int d, int e1, int e2, int e3, const FiniteField& field) {
    for (int e : {e1, e2, e3})
        if (e < 1 || e > d) throw std::invalid_argument("ramification order outside [1, d]");
    if (e1 + e2 + e3 - 3 != 2 * d - 2) throw std::invalid_argument("orders do not satisfy sum(e_i - 1) = 2d - 2");
    const int nf = d - e1 + 1;
    const int ng = d - e2 + 1;
    const auto binom = binomials_mod(d, field.characteristic());
    // Unknowns: F_{e1..d}, then G_{0..d-e2}; rows: Taylor coefficients of F - G at 1.
    Matrix m(field, e3, nf + ng);
    for (int k = 0; k < e3; ++k) {
        for (int j = e1; j <= d; ++j)
            m.at(k, j - e1) = field.from_int(j >= k ? binom[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] : 0);
        for (int j = 0; j <= d - e2; ++j)
            m.at(k, nf + j) = field.neg(field.from_int(j >= k ? binom[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] : 0));
    }
    const auto kernel = m.nullspace();
    ThreePointSolution out;
    out.m = static_cast<int>(kernel.size()) - 1;
    if (out.m != 0) return out;
    std::vector<Elem> fc(static_cast<std::size_t>(d) + 1, field.zero()), gc(static_cast<std::size_t>(d) + 1, field.zero());
    for (int j = e1; j <= d; ++j) fc[static_cast<std::size_t>(j)] = kernel[0][static_cast<std::size_t>(j - e1)];
    for (int j = 0; j <= d - e2; ++j) gc[static_cast<std::size_t>(j)] = kernel[0][static_cast<std::size_t>(nf + j)];
    const Poly f(field, fc), g(field, gc);
    out.pencil = Pencil::from_polys(f, g, d);
    out.map = RatMap::from(f, g);
    out.separable = !wronskian(f, g).is_zero();
    return out;
}

namespace {

struct WorkItem {
    int i;
    int j;
    std::uint64_t lo;
    std::uint64_t hi;
};

void classify_survivor(const FiniteField& field, int d, std::span<const Assignment> asg, const std::vector<Elem>& r1,
                       const std::vector<Elem>& r2, CensusReport& rep) {
    const Poly a(field, r1), b(field, r2);
    ++rep.satisfying;
    const bool base = gcd(a, b).deg() > 0 || (a.degree().value_or(-1) < d && b.degree().value_or(-1) < d);
    if (base) ++rep.with_base_points;
    if (wronskian(a, b).is_zero()) {
        ++rep.inseparable;
        return;
    }
    ++rep.separable;
    RatMap map = RatMap::from(a, b);
    Witness w{Pencil::from_polys(a, b, d), map, {}, map.degree() == d, true};
    std::set<ProjPoint> seen;
    for (const auto& s : asg) {
        if (ram_index(map, s.point) != s.order) w.exact = false;
        const ProjPoint img = map(s.point);
        if (!seen.insert(img).second) w.distinct_images = false;
        w.images.push_back(img);
    }
    if (!w.exact) ++rep.audit_failures;
    if (!w.distinct_images) ++rep.shared_images;
    rep.witnesses.push_back(std::move(w));
}

}  // namespace

CensusReport count_maps_bruteforce(int d, std::span<const Assignment> assignments, const FiniteField& field,
                                   const CensusOptions& options) {
    if (d < 1) throw std::invalid_argument("degree must be at least 1");
    long long total_ram = 0;
    std::set<ProjPoint> pts;
    for (const auto& s : assignments) {
        if (s.order < 1 || s.order > d) throw std::invalid_argument("ramification order outside [1, d]");
        if (!s.point.is_infinity() && s.point.value().v >= field.order()) throw std::invalid_argument("point outside field");
        if (!pts.insert(s.point).second) throw std::invalid_argument("repeated point in assignment");
        total_ram += s.order - 1;
    }
    if (total_ram != 2LL * (d - 1)) throw std::invalid_argument("orders do not satisfy sum(e_i - 1) = 2d - 2");

    CensusReport report;
    report.total = pencil_count(d, field.order());
    if (report.total > options.budget)
        throw BudgetExceeded("enumeration of " + std::to_string(report.total) + " pencils exceeds budget " +
                             std::to_string(options.budget));
    const std::uint32_t q = field.order();

    struct Cond {
        std::vector<Elem> t;
        int e;
        int offset;
    };
    std::vector<Cond> conds;
    int width = 0;
    for (const auto& s : assignments) {
        if (s.order < 2) continue;
        conds.push_back({taylor_matrix(field, d, s.point, s.order), s.order, width});
        width += s.order;
    }

    // Taylor data of every second row, per pivot column.
    std::vector<std::vector<Elem>> second(static_cast<std::size_t>(d) + 1);
    for (int j = 1; j <= d; ++j) {
        RowCursor r2 = make_row(d, j, -1, q);
        const std::uint64_t n2 = checked_pow(q, static_cast<int>(r2.free.size()));
        auto& table = second[static_cast<std::size_t>(j)];
        table.resize(static_cast<std::size_t>(n2) * static_cast<std::size_t>(width));
        for (std::uint64_t b = 0; b < n2; ++b, r2.next())
            for (const auto& c : conds)
                apply_taylor(field, c.t, c.e, d, r2.row.data(), table.data() + b * static_cast<std::uint64_t>(width) + c.offset);
    }

    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    std::vector<WorkItem> items;
    for (int i = 0; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) {
            const std::uint64_t n1 = checked_pow(q, d - i - 1);
            const std::uint64_t chunk = std::max<std::uint64_t>(1, n1 / (4ULL * threads));
            for (std::uint64_t lo = 0; lo < n1; lo += chunk) items.push_back({i, j, lo, std::min(n1, lo + chunk)});
        }

    std::vector<CensusReport> partial(items.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto worker = [&]() {
        try {
            std::vector<Elem> u1(static_cast<std::size_t>(width));
            for (std::size_t idx = next++; idx < items.size(); idx = next++) {
                const WorkItem& it = items[idx];
                CensusReport& rep = partial[idx];
                RowCursor r1 = make_row(d, it.i, it.j, q);
                r1.set_index(it.lo);
                const auto& table = second[static_cast<std::size_t>(it.j)];
                const std::uint64_t n2_rows = checked_pow(q, d - it.j);
                for (std::uint64_t a = it.lo; a < it.hi; ++a, r1.next()) {
                    for (const auto& c : conds) apply_taylor(field, c.t, c.e, d, r1.row.data(), u1.data() + c.offset);
                    for (std::uint64_t b = 0; b < n2_rows; ++b) {
                        bool ok = true;
                        for (const auto& c : conds) {
                            const Elem* v = table.data() + b * static_cast<std::uint64_t>(width) + c.offset;
                            if (!proportional(field, u1.data() + c.offset, v, c.e)) {
                                ok = false;
                                break;
                            }
                        }
                        if (!ok) continue;
                        RowCursor r2 = make_row(d, it.j, -1, q);
                        r2.set_index(b);
                        classify_survivor(field, d, assignments, r1.row, r2.row, rep);
                    }
                }
            }
        } catch (...) {
            std::lock_guard lock(failure_mu);
            if (!failure) failure = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);

    for (auto& rep : partial) {
        report.satisfying += rep.satisfying;
        report.separable += rep.separable;
        report.inseparable += rep.inseparable;
        report.with_base_points += rep.with_base_points;
        report.audit_failures += rep.audit_failures;
        report.shared_images += rep.shared_images;
        for (auto& w : rep.witnesses)
            if (report.witnesses.size() < options.max_witnesses) report.witnesses.push_back(std::move(w));
    }
    return report;
}

std::vector<ProjPoint> sample_general_points(int n, const FiniteField& field, std::uint64_t seed,
                                             std::span<const PointPredicate> forbidden, const SampleOptions& options) {
    if (n < 1) throw std::invalid_argument("need at least one point");
    const std::uint64_t q = field.order();
    if (q < static_cast<std::uint64_t>(options.min_order_factor) * static_cast<std::uint64_t>(n))
        throw std::invalid_argument("field of order " + std::to_string(q) + " too small for " + std::to_string(n) +
                                    " general points");
    const std::uint64_t range = q + (options.allow_infinity ? 1 : 0);
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
        std::vector<ProjPoint> pts;
        std::set<ProjPoint> seen;
        while (static_cast<int>(pts.size()) < n) {
            const std::uint64_t r = rng() % range;
            const ProjPoint pt = r == q ? ProjPoint::infinity() : ProjPoint::finite(Elem{static_cast<std::uint32_t>(r)});
            if (seen.insert(pt).second) pts.push_back(pt);
        }
        bool rejected = false;
        for (const auto& pred : forbidden)
            if (pred(pts)) {
                rejected = true;
                break;
            }
        if (!rejected) return pts;
    }
    throw std::runtime_error("rejection budget exhausted while sampling general points");
}

}  // namespace ramcount
