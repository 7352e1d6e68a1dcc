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

#ifndef RAMCOUNT_RATMAP_HPP
#define RAMCOUNT_RATMAP_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ramcount/poly.hpp"

namespace ramcount {

/// A point of P^1 over the field: finite value or infinity.
class ProjPoint {
  public:
    static ProjPoint finite(Elem a) noexcept { return ProjPoint(false, a); }
    static ProjPoint infinity() noexcept { return ProjPoint(true, Elem{0}); }

    bool is_infinity() const noexcept { return inf_; }
    /// The finite coordinate; throws std::logic_error at infinity.
    Elem value() const;

    // Finite points ordered by element index, infinity last.
    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
    friend std::strong_ordering operator<=>(const ProjPoint& a, const ProjPoint& b) noexcept {
        if (a.inf_ != b.inf_) return a.inf_ ? std::strong_ordering::greater : std::strong_ordering::less;
        return a.a_.v <=> b.a_.v;
    }

  private:
    ProjPoint(bool inf, Elem a) noexcept : inf_(inf), a_(a) {}
    bool inf_;
    Elem a_;
};

std::string format_point(const FiniteField& field, const ProjPoint& p);
ProjPoint parse_point(const FiniteField& field, std::string_view text);

/// Effective divisor: rational points with multiplicity plus the part
/// supported at closed points of higher degree, kept as a monic polynomial.
struct Divisor {
    std::map<ProjPoint, int> points;
    std::optional<Poly> residual;

    int degree() const;
    friend bool operator==(const Divisor&, const Divisor&) = default;
};

/// Degree-d self-map of P^1 as a coprime pair (F, G) up to common scalar,
/// normalized so the leading coefficient of the higher-degree member (F on
/// ties) is 1.
class RatMap {
  public:
    struct Built;
    /// Cancels common factors; throws on the zero pair or a constant map.
    static Built create(const Poly& f, const Poly& g);
    /// create(f, g).map
    static RatMap from(const Poly& f, const Poly& g);

    const Poly& numerator() const noexcept { return f_; }
    const Poly& denominator() const noexcept { return g_; }
    const FiniteField& field() const noexcept { return f_.field(); }
    int degree() const noexcept { return d_; }

    ProjPoint operator()(const ProjPoint& p) const;

    friend bool operator==(const RatMap& a, const RatMap& b) { return a.f_ == b.f_ && a.g_ == b.g_; }

  private:
    RatMap(Poly f, Poly g, int d) : f_(std::move(f)), g_(std::move(g)), d_(d) {}
    Poly f_;
    Poly g_;
    int d_;
};

struct RatMap::Built {
    RatMap map;
    /// Common factor that was cancelled, as a divisor on the affine line.
    Divisor base_points;
};

std::string to_string(const RatMap& f);
RatMap parse_ratmap(const FiniteField& field, std::string_view text);

Poly wronskian(const Poly& f, const Poly& g);
Poly wronskian(const RatMap& f);
bool is_separable(const RatMap& f);
int ram_index(const RatMap& f, const ProjPoint& p);

struct WildPoint {
    ProjPoint point;
    int index;
    int wronskian_valuation;
};

struct Different {
    /// Wronskian valuations at every point, e - 1 at tame points.
    Divisor divisor;
    /// Points with p | e, whose valuations are not e - 1.
    std::vector<WildPoint> wild;
};

/// Throws std::invalid_argument for inseparable input and std::logic_error
/// when the total is not 2d - 2.
Different different_divisor(const RatMap& f);

/// Invertible 2x2 matrix acting by x -> (a x + b)/(c x + d).
struct Mobius {
    Elem a, b, c, d;

    /// Throws std::invalid_argument when singular.
    static Mobius make(const FiniteField& field, Elem a, Elem b, Elem c, Elem d);
    ProjPoint apply(const FiniteField& field, const ProjPoint& p) const;
    Mobius inverse(const FiniteField& field) const;
};

enum class Side { Image, Domain };

/// Image side: (aF + bG, cF + dG). Domain side: f o M.
RatMap mobius_act(const RatMap& f, const Mobius& m, Side side);

struct InvolutionResult {
    RatMap map;
    /// Domain change applied so that neither point nor infinity was in the way;
    /// the returned map is already expressed in the original coordinate.
    std::optional<Mobius> normalization;
};

/// Ramification e1, e2 < p at p1, p2 becomes p - e1, p - e2; other indices
/// are kept and the degree changes by p - e1 - e2.
InvolutionResult involution_transform(const RatMap& f, const ProjPoint& p1, const ProjPoint& p2);

/// Row-reduced 2 x (d + 1) coefficient matrix of span{F, G}, d = max degree.
std::vector<std::vector<Elem>> pencil_rows(const Poly& f, const Poly& g, int d);
/// Same pencil, i.e. equal up to automorphism of the image.
bool equivalent(const RatMap& f, const RatMap& g);

}  // namespace ramcount

#endif
