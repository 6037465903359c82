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
 * @file elim.hpp
 * @brief Gaussian elimination over S_q[T]/(G) that splits the ring when a
 * pivot candidate is a zero divisor.
 *
 * Each leaf of the split tree carries its own ring, the Wronskian matrix
 * rebuilt in that ring, the reduced row echelon form and the row operations
 * that produced it. Operations performed before a split are replayed on the
 * rebuilt matrix of each summand.
 */

#ifndef HF_ELIM_HPP
#define HF_ELIM_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hf/hasse.hpp"

namespace hf {

using Matrix = std::vector<std::vector<ArtinElem>>;

struct RowOp {
  enum class Kind { Swap, Scale, AddMul };
  Kind kind = Kind::Swap;
  std::size_t a = 0, b = 0;  // Swap: a <-> b; Scale: a *= c; AddMul: a -= c * b
  ArtinElem c;
};

struct Leaf {
  ArtinRingPtr ring;
  WronskianMatrix matrix;
  Matrix echelon;
  std::vector<RowOp> ops;
  std::vector<std::size_t> pivots;  // column of each pivot row, in row order

  std::size_t rank() const { return pivots.size(); }
};

struct EliminationOutcome {
  std::vector<Leaf> leaves;
  std::vector<std::string> trace;  // JSON lines
};

using MatrixBuilder = std::function<WronskianMatrix(const ArtinRingPtr&)>;

/// Eliminates m; `rebuild` recomputes the matrix in a split summand. Throws
/// SplitDepthExceeded if more than max_leaves leaves arise.
EliminationOutcome eliminate(const WronskianMatrix& m, const MatrixBuilder& rebuild, std::size_t max_leaves);

/// Convenience: builds the table and matrix for phi in any ring.
MatrixBuilder phi_builder(std::vector<PhiEntry> phi);

/// Applies row operations (projected into the rows' ring) in place.
void apply_ops(Matrix& rows, const std::vector<RowOp>& ops);
/// The product of the leaf's row operations as a matrix.
Matrix transform_of(const Leaf& leaf);
Matrix mat_mul(const Matrix& a, const Matrix& b);

struct LeafSolution {
  ArtinRingPtr ring;
  WronskianMatrix matrix;
  std::optional<std::vector<ArtinElem>> u;  // empty: no solution with u_norm = 1
};

/// Kernel vector of a rank-(cols - 1) leaf with coordinate `normalize_column`
/// equal to 1, splitting further if that coordinate is a zero divisor.
/// Throws RankMismatch.
std::vector<LeafSolution> solve_rank_m(const Leaf& leaf, std::size_t normalize_column);

}  // namespace hf

#endif  // HF_ELIM_HPP
