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

#ifndef RAMCOUNT_REPORT_HPP
#define RAMCOUNT_REPORT_HPP

// JSON views of the library results. Every document carries a versioned
// "schema" field; integers are exact and there is no floating point.

#include <cstdint>
#include <span>
#include <vector>

#include <json.hpp>

#include "ramcount/counting.hpp"
#include "ramcount/degeneration.hpp"
#include "ramcount/pencil.hpp"
#include "ramcount/schubert.hpp"

namespace ramcount {

using Json = nlohmann::ordered_json;

Json field_json(const FiniteField& field);
Json divisor_json(const FiniteField& field, const Divisor& d);

Json count_json(const CountResult& r);
Json schubert_json(int d, std::span<const int> orders, std::uint64_t value, const std::vector<ClassSum>& steps);
Json three_point_json(const FiniteField& field, int d, int e1, int e2, int e3, const ThreePointSolution& s, int expected);
Json census_json(const FiniteField& field, int d, std::span<const Assignment> assignments, const CensusReport& r);

Json family_json(const MapFamily& fam);
/// {"p", "k", "F", "G", "sections": [{"point", "order"}]}; F and G use the
/// bivariate text format, points the section format.
MapFamily family_from_json(const Json& j);

Json transform_json(const TransformStep& step);
Json limit_json(const FiniteField& field, const LimitReport& r);
Json wild_audit_json(const WildAudit& a);
Json perturbation_json(const FiniteField& field, const PerturbationReport& r);

}  // namespace ramcount

#endif
