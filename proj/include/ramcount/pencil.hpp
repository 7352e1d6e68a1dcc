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

#ifndef RAMCOUNT_PENCIL_HPP
#define RAMCOUNT_PENCIL_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramcount/ratmap.hpp"

namespace ramcount {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

class BudgetExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Two-dimensional space of polynomials of degree <= d, stored as its reduced
/// row echelon basis (pivot = lowest nonzero coefficient).
class Pencil {
  public:
    /// Throws std::invalid_argument when f, g are dependent or exceed degree d.
    static Pencil from_polys(const Poly& f, const Poly& g, int d);

    int degree_bound() const noexcept { return d_; }
    const FiniteField& field() const noexcept { return first_.field(); }
    const Poly& first() const noexcept { return first_; }
    const Poly& second() const noexcept { return second_; }

    friend bool operator==(const Pencil& a, const Pencil& b) {
        return a.d_ == b.d_ && a.first_ == b.first_ && a.second_ == b.second_;
    }

  private:
    Pencil(Poly f, Poly g, int d) : first_(std::move(f)), second_(std::move(g)), d_(d) {}
    Poly first_;
    Poly second_;
    int d_;
};

/// "row1/row2" in the polynomial text format.
std::string to_string(const Pencil& v);

/// Number of pencils in degree <= d over F_q; throws std::overflow_error.
std::uint64_t pencil_count(int d, std::uint64_t q);

/// Calls visit on every pencil exactly once; throws BudgetExceeded when the
/// count exceeds budget.
void for_each_pencil(int d, const FiniteField& field, std::uint64_t budget, const std::function<void(const Pencil&)>& visit);
std::vector<Pencil> enumerate_pencils(int d, const FiniteField& field, std::uint64_t budget = kDefaultBudget);

/// Whether the pencil contains a nonzero member vanishing to order >= e at p
/// (at infinity: degree <= d - e). Requires 1 <= e <= d.
bool schubert_condition(const Pencil& v, const ProjPoint& p, int e);

struct ThreePointSolution {
    /// Projective dimension of the solution space.
    int m = 0;
    std::optional<Pencil> pencil;
    std::optional<RatMap> map;
    bool separable = false;
};

/// Maps ramified to order e1 at 0, e2 at infinity, e3 at 1.
ThreePointSolution solve_three_point(int d, int e1, int e2, int e3, const FiniteField& field);

struct Assignment {
    ProjPoint point;
    int order;
};

struct CensusOptions {
    std::uint64_t budget = kDefaultBudget;
    /// 0 picks the hardware concurrency.
    unsigned threads = 0;
    std::size_t max_witnesses = 1000;
};

struct Witness {
    Pencil pencil;
    RatMap map;
    std::vector<ProjPoint> images;
    /// Ramification is exactly the assigned order at every point.
    bool exact = false;
    bool distinct_images = false;
};

struct CensusReport {
    std::uint64_t total = 0;
    /// Pencils meeting every Schubert condition.
    std::uint64_t satisfying = 0;
    std::uint64_t separable = 0;
    std::uint64_t inseparable = 0;
    std::uint64_t with_base_points = 0;
    /// Separable pencils whose exact orders differ from the assignment.
    std::uint64_t audit_failures = 0;
    /// Separable pencils sending two assigned points to one image.
    std::uint64_t shared_images = 0;
    /// Separable pencils in enumeration order, capped by max_witnesses.
    std::vector<Witness> witnesses;
};

/// Requires distinct points, orders in [1, d] and sum(e_i - 1) = 2d - 2.
CensusReport count_maps_bruteforce(int d, std::span<const Assignment> assignments, const FiniteField& field,
                                   const CensusOptions& options = {});

using PointPredicate = std::function<bool(std::span<const ProjPoint>)>;

struct SampleOptions {
    /// Require q >= factor * n.
    int min_order_factor = 4;
    int max_attempts = 10000;
    bool allow_infinity = true;
};

/// n distinct seeded random points of P^1(F_q) for which no predicate holds.
std::vector<ProjPoint> sample_general_points(int n, const FiniteField& field, std::uint64_t seed,
                                             std::span<const PointPredicate> forbidden = {},
                                             const SampleOptions& options = {});

}  // namespace ramcount

#endif
