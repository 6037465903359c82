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
 * @file brute.hpp
 * @brief Exhaustive reference searches for monic factors with polynomial
 * coefficients, used as ground truth by the tests.
 *
 * Candidates are enumerated one x-adic digit at a time, lexicographically
 * by element index; a branch is abandoned as soon as H fails to divide G
 * modulo x^(j+1). Survivors are confirmed by exact division in K[T].
 */

#ifndef HF_BRUTE_HPP
#define HF_BRUTE_HPP

#include <cstdint>
#include <vector>

#include "hf/poly.hpp"

namespace hf {

inline constexpr std::uint64_t kOracleNodeLimit = 10'000'000;

/// Monic degree-r divisors of G with deg b_i <= bounds[i]. G must have
/// polynomial coefficients. Throws SearchSpaceTooLarge past the node limit.
std::vector<TPoly> oracle_factor(const TPoly& g, std::size_t r, const std::vector<int>& bounds);

/// Monic irreducible factors of G over K, by repeatedly taking the least
/// degree divisor within the coefficient degree bounds.
std::vector<TPoly> oracle_factorization(const TPoly& g);

/// No proper divisor over F_{|k|^e}(x) for any e <= max_ext (0 means deg G).
bool oracle_absolute_irreducible(const TPoly& g, std::uint32_t max_ext = 0);

}  // namespace hf

#endif  // HF_BRUTE_HPP
