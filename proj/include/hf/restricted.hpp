// Copyright 2026 The hassefactor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file restricted.hpp
 * @brief Search for monic factors H = T^r + sum b_i T^i of G with b_i in
 * prescribed finite-dimensional k-spaces, and the factorisation drivers
 * built on it.
 *
 * The search expands G at a place, forms the Wronskian of the candidate
 * monomials h_ij t^i and t^r, and eliminates over S_q[T]/(G). Full-rank
 * summands certify that no such factor has a root there; corank-one
 * summands yield a kernel vector of constants from which H is read off.
 * Every reported factor is verified by exact division in K[T].
 */

#ifndef HF_RESTRICTED_HPP
#define HF_RESTRICTED_HPP

#include <optional>
#include <string>
#include <vector>

#include "hf/bounds.hpp"
#include "hf/elim.hpp"

namespace hf {

struct FoundFactor {
  TPoly h;                       // coefficients over `field`
  FieldPtr field;                // k, or the residue extension the constants live in
  std::string field_of_definition;
  std::vector<std::string> path; // summand path in the split tree
  std::vector<Fe> constants;     // u_ij in column order, t^r coordinate last
  FieldPtr constants_field;      // residue field of the local ring they came from
};

struct LeafRecord {
  std::vector<std::string> path;
  std::size_t rank = 0;
  std::size_t cols = 0;
  bool reduced = false;  // columns were dropped after a rank deficit
  /// full_rank, factor, rejected, spurious, no_normalized_solution or deferred.
  /// A spurious kernel vector vanishes only to the truncation order.
  std::string status;
  std::string detail;
};

struct FactorReport {
  enum class Outcome { NoFactorCertificate, FactorsFound, Deferred };
  Outcome outcome = Outcome::NoFactorCertificate;
  std::vector<FoundFactor> factors;
  std::vector<LeafRecord> leaves;
  PlaceData place;
  int delta = 0;
  std::size_t q = 0;
  std::size_t initial_q = 0;  // q before escalation; equals q if none happened
  std::size_t m = 0;
  std::size_t s = 0;  // deg G
  std::vector<std::string> trace;

  /// Every leaf of the original column set has full rank.
  bool all_full_rank() const;
  /// No leaf was reduced, deferred, spurious or without a normalized solution.
  bool conclusive() const;
};

const char* to_string(FactorReport::Outcome o);

struct SearchOptions {
  bool over_k_only = true;
  std::size_t q_override = 0;  // 0: smallest power of p above max(m, delta)
  std::uint64_t seed = 0;      // residue factorisation
};

/// Checks r < s, 1 in V_0 (moved to the front), and independence of each V_i.
/// Throws InvalidSubspace or InvalidArgument.
SubspaceSpec normalize_spec(const TPoly& g, SubspaceSpec spec);

/// Denominators of the basis elements, for place selection.
std::vector<Poly> space_denominators(const SubspaceSpec& spec);

/// Runs the search at q above max(m, delta). If a summand is inconclusive
/// there, reruns once at q above max(m, s * delta), where a constant kernel
/// vector always comes from a true factor. A q_override disables this.
/// Throws PlaceInvalid and the separability errors.
FactorReport restricted_factor(const TPoly& g, const SubspaceSpec& spec, const PlaceData& place,
                               const SearchOptions& opts = {});

/// Reruns on exact quotients until nothing new is found; factors over k only.
std::vector<TPoly> collect_all_restricted_factors(const TPoly& g, const SubspaceSpec& spec, const PlaceData& place,
                                                  std::uint64_t seed = 0);

/// Coordinates of f in span(basis) over f's field, if it lies there.
std::optional<std::vector<Fe>> span_coordinates(const RatFunc& f, const std::vector<RatFunc>& basis);

/// Product of the distinct Frobenius conjugates of h over k, with
/// coefficients brought down to k.
TPoly norm_to_k(const TPoly& h, const FieldPtr& k);

struct Factorization {
  std::vector<TPoly> factors;  // monic irreducible over K, sorted
  std::vector<FactorReport> reports;
};

/// Complete factorisation of a monic separable G over K = k(x). The place,
/// if given, is used for every run (it stays admissible for divisors of G).
Factorization factor_over_K(const TPoly& g, std::uint64_t seed = 0, const std::optional<PlaceData>& place = {});

struct IrreducibilityResult {
  bool absolutely_irreducible = false;
  std::optional<FoundFactor> witness;
  std::vector<FactorReport> reports;
};

/// Absolute irreducibility: true iff every summand at every r <= s/2 has
/// full rank on the default spaces. The witness is the least factor found.
IrreducibilityResult absolutely_irreducible(const TPoly& g, std::uint64_t seed = 0,
                                            const std::optional<PlaceData>& place = {});

/// Roots of G in span_k(basis).
std::vector<RatFunc> roots_in_span(const TPoly& g, const std::vector<RatFunc>& basis, std::uint64_t seed = 0,
                                   const std::optional<PlaceData>& place = {});

/// Sorting key used for factor lists.
bool tpoly_less(const TPoly& a, const TPoly& b);

}  // namespace hf

#endif  // HF_RESTRICTED_HPP
