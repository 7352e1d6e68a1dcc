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

#ifndef RAMCOUNT_DEGENERATION_HPP
#define RAMCOUNT_DEGENERATION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramcount/bipoly.hpp"
#include "ramcount/pencil.hpp"
#include "ramcount/ratmap.hpp"

namespace ramcount {

/// A marked point moving with t: infinity, or num(t)/den(t) with den(0) != 0.
struct Section {
    bool at_infinity = false;
    Poly num;
    Poly den;
    int order = 1;

    static Section infinity(const FiniteField& field, int order);
    /// Reduces num/den and makes den monic; throws std::invalid_argument when
    /// den(0) = 0 after reduction.
    static Section rational(const Poly& num, const Poly& den, int order);
    static Section constant(const FiniteField& field, Elem a, int order);

    ProjPoint at(Elem t) const;
    ProjPoint at_zero() const { return at(num.field().zero()); }
};

/// "inf", "(n0,n1,...)" or "(n0,...)/(d0,...)".
std::string format_section_point(const Section& s);
Section parse_section(const FiniteField& field, const std::string& point, int order);

/// One-parameter family t -> F(x, t)/G(x, t) with marked sections.
struct MapFamily {
    FiniteField field;
    BiPoly F;
    BiPoly G;
    std::vector<Section> sections;

    MapFamily(FiniteField field, BiPoly F, BiPoly G, std::vector<Section> sections = {});

    /// max(deg_x F, deg_x G).
    int degree() const;
    BiPoly wronskian() const { return wronskian_x(F, G); }
    /// The map at parameter t; throws when the fiber degenerates to a constant.
    RatMap::Built fiber(Elem t) const;
};

/// Coprime over k(t) and separable.
bool generic_fiber_ok(const MapFamily& fam);

/// f o M in the domain, sections moved by the inverse of M.
MapFamily mobius_domain(const MapFamily& fam, const Mobius& m);

/// Removes t-powers and image-side constant combinations until the special
/// fiber is a nonconstant map; returns the number of t-powers removed from W.
int normalize_special_fiber(MapFamily& fam);

struct TransformStep {
    MapFamily family;
    /// t-valuation of W before and after; the drop is the removed t-power.
    int valuation_before = 0;
    int valuation_after = 0;
    int t_power = 0;
};

/// One step of the limit transform for a family whose special fiber (after
/// normalize_special_fiber) is an inseparable nonconstant map. Asserts the
/// Wronskian identity and the cross-divisibility identities.
TransformStep insep_limit_transform(const MapFamily& fam);

struct TameReduction {
    Poly F;
    Poly G;
    int subtractions = 0;
    bool swapped = false;
};

/// Lowers a wild index at infinity by subtracting multiples of x^e G; the
/// Wronskian is unchanged up to sign, so the affine different is too.
TameReduction tame_at_infinity_reduce(const Poly& f, const Poly& g);

struct HypothesisReport {
    bool ok = false;
    std::vector<std::string> failures;
    /// Indices of the two sections meeting at t = 0, if any.
    std::optional<std::pair<std::size_t, std::size_t>> collision;
};

/// Checks that sections are finite with orders below p, cover the whole
/// generic different, and meet pairwise at t = 0 at most once with
/// e_j + e_j' < p.
HypothesisReport check_limit_hypotheses(const MapFamily& fam);

struct LimitReport {
    int d = 0;
    int p = 0;
    bool separable_limit = false;
    int iterations = 0;
    /// t-valuation of W at the start and after each step.
    std::vector<int> valuations;
    bool hypotheses_ok = false;
    std::vector<std::string> warnings;
    std::optional<int> m;
    std::optional<int> b;
    std::optional<int> d_tilde;
    std::optional<int> d0;
    std::optional<int> e_infinity;
    std::optional<int> epsilon;
    /// "i" (no collision) or "ii" (one collision); empty when the hypotheses fail.
    std::string limit_case;
    /// Special fiber after the transform and tame reduction, uncancelled.
    std::optional<Poly> limit_F;
    std::optional<Poly> limit_G;
    std::optional<RatMap> limit_map;
};

/// Iterates the limit transform to a separable special fiber and reports the
/// invariants. With the hypotheses in force a failed identity throws
/// std::logic_error; otherwise failures become warnings.
LimitReport analyze_limit(const MapFamily& fam);

/// For a map with f(infinity) = infinity wildly ramified there (index prime to
/// p and above p after normalization), the family F - t x^p G together with its
/// rational ramification sections.
MapFamily pathology_family(const RatMap& f);

struct WildAudit {
    /// Index at infinity is m p with m > 1.
    bool applies = false;
    int index = 0;
    int m = 0;
    int different_at_infinity = 0;
    int bound = 0;
    int reduced_index = 0;
    int reduced_degree = 0;
    /// Reduced index >= p, or the different exceeds 2(m-1)p.
    bool holds = true;
};

WildAudit wild_different_audit(const RatMap& f);

struct PerturbationReport {
    std::vector<int> exponents;
    /// Ramification points and indices of f, all rational.
    std::vector<std::pair<ProjPoint, int>> ramification;
    std::uint64_t candidates = 0;
    std::vector<Poly> admissible;
    /// log_q of the admissible count when it is a power of q.
    std::optional<int> dimension;
};

/// Inseparable g = sum c_i x^{ip}, ip < deg f, with f + g ramified exactly as
/// f at every ramification point of f. Requires a polynomial f whose
/// ramification is rational.
PerturbationReport inseparable_perturbations(const RatMap& f, std::uint64_t budget = kDefaultBudget);

}  // namespace ramcount

#endif
