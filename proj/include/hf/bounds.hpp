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
 * @file bounds.hpp
 * @brief Pole bounds for factor coefficients, the truncation order, default
 * coefficient spaces, and the choice of an expansion point.
 *
 * Places of k(x) are the monic irreducibles of k[x] plus the place at
 * infinity. For a root t of G, the pole order of t at a place P is at most
 * mu_P = max(0, max_i -v_P(a_i)/(s - i)); a monic factor of degree r has
 * coefficients b_j with pole order at most (r - j) mu_P.
 */

#ifndef HF_BOUNDS_HPP
#define HF_BOUNDS_HPP

#include <cstdint>
#include <vector>

#include "hf/poly.hpp"

namespace hf {

/// Coefficient spaces V_0..V_{r-1} for monic factors of degree r.
struct SubspaceSpec {
  std::size_t r = 1;
  std::vector<std::vector<RatFunc>> spaces;

  std::size_t m() const;
};

struct PlaceData {
  FieldPtr k;      // constant field
  FieldPtr ell;    // k(alpha)
  Fe alpha;
  Poly minpoly;    // minimal polynomial of alpha over k, in x
  std::uint32_t degree = 1;
};

struct BoundsReport {
  int delta = 0;
  std::vector<int> degree_bounds;  // pole order at infinity allowed for each b_j
  std::size_t m = 0;
  std::size_t q = 0;
};

/// Valuations on k(x).
int valuation_at(const RatFunc& f, const Poly& place);
int valuation_at_infinity(const RatFunc& f);

/// -r times the degree-weighted sum over places of min(0, min_i v(a_i)/(s-i)),
/// rounded up.
int compute_delta(const TPoly& g, std::size_t r);

/// A pole bound for sum_ij u_ij h_ij t^i with the given spaces; equals
/// compute_delta when every h_ij obeys the coefficient bounds.
int delta_for_spaces(const TPoly& g, const SubspaceSpec& spec);

/// Riemann-Roch bases from the coefficient bounds; 1 comes first in V_0.
SubspaceSpec default_subspaces(const TPoly& g, std::size_t r);

BoundsReport bounds_report(const TPoly& g, const SubspaceSpec& spec);

/// First admissible expansion point: k in the order 0, 1, w, w^2, ... for a
/// primitive w, then the elements of degree exactly e over k of F_{|k|^e},
/// e = 2, 3, ..., in encoding order. `avoid` lists further denominators
/// (of coefficient-space elements) that must not vanish there.
PlaceData find_place(const TPoly& g, const std::vector<Poly>& avoid = {});

/// Builds place data for alpha in ell (an extension of k in the tower).
PlaceData make_place(const FieldPtr& k, const FieldPtr& ell, Fe alpha);

/// Throws PlaceInvalid unless the denominators and disc(G) are nonzero at alpha.
void check_place(const TPoly& g, const PlaceData& place, const std::vector<Poly>& avoid = {});

}  // namespace hf

#endif  // HF_BOUNDS_HPP
