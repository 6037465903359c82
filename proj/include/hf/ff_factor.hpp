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
 * @file ff_factor.hpp
 * @brief Factorisation of univariate polynomials over finite fields.
 *
 * Squarefree decomposition, distinct-degree splitting and Cantor-Zassenhaus
 * equal-degree splitting with a seeded generator. Over fields of at most 32
 * elements linear factors are peeled off by trying every root first.
 */

#ifndef HF_FF_FACTOR_HPP
#define HF_FF_FACTOR_HPP

#include <cstdint>
#include <vector>

#include "hf/poly.hpp"

namespace hf {

struct FactorMult {
  Poly factor;  // monic irreducible
  int mult = 1;
};

/// Irreducible factors of f / lc(f), sorted by degree then coefficients.
/// Throws ZeroPolynomial.
std::vector<FactorMult> factor_over_ff(const Poly& f, std::uint64_t seed = 0);

/// Squarefree decomposition f / lc(f) = prod g_i^i (g_i squarefree, coprime).
std::vector<FactorMult> squarefree_decomposition(const Poly& f);

/// Rabin's test; requires deg f >= 1.
bool is_irreducible_ff(const Poly& f);

/// Roots of f in its coefficient field, sorted by encoding.
std::vector<Fe> roots_over_ff(const Poly& f, std::uint64_t seed = 0);

}  // namespace hf

#endif  // HF_FF_FACTOR_HPP
