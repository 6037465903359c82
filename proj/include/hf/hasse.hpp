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
 * @file hasse.hpp
 * @brief Hasse derivatives on S_q[T]/(G), Wronskian matrices, and the
 * Wronskian independence test over K.
 *
 * D^(i) acts on S_q through X -> X + e and on t through the implicit relation
 * D^(i)(G(t)) = 0, which determines D^(i)(t) once D^(b)(t) for b < i is known
 * because the coefficient of the unknown is G'(t), a unit when G0 is
 * squarefree.
 */

#ifndef HF_HASSE_HPP
#define HF_HASSE_HPP

#include <optional>
#include <string>
#include <vector>

#include "hf/artin.hpp"

namespace hf {

class DerivTable {
 public:
  /// Powers t^j are tabulated for j <= max(max_power, deg G).
  /// Throws NonUnitDerivativePivot if G'(t) is not a unit.
  static DerivTable build(const ArtinRingPtr& ring, std::size_t max_power = 0);

  const ArtinRingPtr& ring() const { return ring_; }
  std::size_t q() const { return ring_->q(); }
  std::size_t max_power() const { return p_.size() - 1; }
  /// D^(b)(t^j).
  const ArtinElem& power(std::size_t j, std::size_t b) const { return p_[j][b]; }
  const ArtinElem& deriv_inverse() const { return gp_inv_; }
  /// Checks D^(i)(G(t)) = 0 for all i < q.
  bool certificate_holds() const;

 private:
  ArtinRingPtr ring_;
  std::vector<std::vector<ArtinElem>> p_;
  ArtinElem gp_inv_;
};

/// D^(i)(e) by the Leibniz rule over the coefficients of e in t.
ArtinElem hasse_of_element(const DerivTable& table, std::size_t i, const ArtinElem& e);

/// One column of the Wronskian: the element h * t^power with h in S_q.
struct PhiEntry {
  std::vector<Fe> h;
  std::size_t power = 0;
  std::string label;
};

struct WronskianMatrix {
  ArtinRingPtr ring;
  std::vector<std::vector<ArtinElem>> rows;  // q rows, one entry per column
  std::vector<std::string> labels;

  std::size_t num_rows() const { return rows.size(); }
  std::size_t num_cols() const { return labels.size(); }
};

/// M[l][c] = D^(l)(h_c t^{power_c}) for l < q.
WronskianMatrix build_wronskian(const DerivTable& table, const std::vector<PhiEntry>& phi);

/// D^(i) of a polynomial or rational function in x.
Poly poly_hasse(std::size_t i, const Poly& a);
RatFunc ratfunc_hasse(std::size_t i, const RatFunc& f);

struct WronskianRank {
  std::size_t rank = 0;
  std::vector<std::size_t> orders;  // derivative orders that raised the rank
};

/// Rank over K of (D^(i)(f_j)) over orders i <= cap. The default cap is the
/// largest degree among L f_j with L the lcm of the denominators, beyond
/// which every row vanishes after clearing denominators.
WronskianRank wronskian_rank_over_K(const std::vector<RatFunc>& f, std::optional<std::size_t> order_cap = {});

}  // namespace hf

#endif  // HF_HASSE_HPP
