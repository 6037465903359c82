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

#include "hf/elim.hpp"

#include <algorithm>

#include "json.hpp"

namespace hf {

namespace {

struct State {
  ArtinRingPtr ring;
  WronskianMatrix matrix;
  Matrix cur;
  std::vector<RowOp> ops;
  std::vector<std::size_t> pivots;
  std::size_t row = 0, col = 0;
};

std::vector<RowOp> project_ops(const std::vector<RowOp>& ops, const ArtinRingPtr& target) {
  std::vector<RowOp> out = ops;
  for (RowOp& op : out) {
    if (op.kind != RowOp::Kind::Swap) op.c = op.c.project(target);
  }
  return out;
}

WronskianMatrix project_matrix(const WronskianMatrix& m, const ArtinRingPtr& target) {
  WronskianMatrix out;
  out.ring = target;
  out.labels = m.labels;
  for (const auto& row : m.rows) {
    std::vector<ArtinElem> r;
    for (const ArtinElem& e : row) r.push_back(e.project(target));
    out.rows.push_back(std::move(r));
  }
  return out;
}

Matrix project_rows(const Matrix& m, const ArtinRingPtr& target) {
  Matrix out;
  for (const auto& row : m) {
    std::vector<ArtinElem> r;
    for (const ArtinElem& e : row) r.push_back(e.project(target));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

void apply_ops(Matrix& rows, const std::vector<RowOp>& ops) {
  for (const RowOp& op : ops) {
    switch (op.kind) {
      case RowOp::Kind::Swap:
        std::swap(rows[op.a], rows[op.b]);
        break;
      case RowOp::Kind::Scale:
        for (ArtinElem& e : rows[op.a]) e = e * op.c;
        break;
      case RowOp::Kind::AddMul:
        for (std::size_t j = 0; j < rows[op.a].size(); ++j) {
          if (rows[op.b][j].is_zero()) continue;
          rows[op.a][j] = rows[op.a][j] - op.c * rows[op.b][j];
        }
        break;
    }
  }
}

Matrix transform_of(const Leaf& leaf) {
  const std::size_t n = leaf.matrix.num_rows();
  Matrix t(n, std::vector<ArtinElem>(n, ArtinElem(leaf.ring)));
  for (std::size_t i = 0; i < n; ++i) t[i][i] = ArtinElem::one(leaf.ring);
  apply_ops(t, leaf.ops);
  return t;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.empty() || b.empty()) return {};
  const ArtinRingPtr& ring = b[0][0].ring();
  Matrix out(a.size(), std::vector<ArtinElem>(b[0].size(), ArtinElem(ring)));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] = out[i][j] + a[i][k] * b[k][j];
    }
  }
  return out;
}

MatrixBuilder phi_builder(std::vector<PhiEntry> phi) {
  return [phi = std::move(phi)](const ArtinRingPtr& ring) {
    std::size_t top = 0;
    for (const PhiEntry& e : phi) top = std::max(top, e.power);
    return build_wronskian(DerivTable::build(ring, top), phi);
  };
}

EliminationOutcome eliminate(const WronskianMatrix& m, const MatrixBuilder& rebuild, std::size_t max_leaves) {
  EliminationOutcome out;
  std::vector<State> work;
  work.push_back({m.ring, m, m.rows, {}, {}, 0, 0});
  std::size_t live = 1;
  const std::size_t nrows = m.num_rows(), ncols = m.num_cols();

  while (!work.empty()) {
    State st = std::move(work.back());
    work.pop_back();
    bool split = false;
    while (st.row < nrows && st.col < ncols) {
      std::optional<std::size_t> pivot;
      std::optional<Poly> witness;
      InvertResult inv;
      for (std::size_t r = st.row; r < nrows; ++r) {
        InvertResult res = try_invert(st.cur[r][st.col]);
        if (res.kind == InvertResult::Kind::Inverse) {
          pivot = r;
          inv = std::move(res);
          break;
        }
        if (res.kind == InvertResult::Kind::ZeroDivisor && !res.nilpotent && !witness) witness = res.witness;
      }
      if (pivot) {
        std::vector<RowOp> step;
        if (*pivot != st.row) step.push_back({RowOp::Kind::Swap, *pivot, st.row, {}});
        step.push_back({RowOp::Kind::Scale, st.row, 0, inv.inverse});
        apply_ops(st.cur, step);
        st.ops.insert(st.ops.end(), step.begin(), step.end());
        for (std::size_t r = 0; r < nrows; ++r) {
          if (r == st.row || st.cur[r][st.col].is_zero()) continue;
          const RowOp op{RowOp::Kind::AddMul, r, st.row, st.cur[r][st.col]};
          apply_ops(st.cur, {op});
          st.ops.push_back(op);
        }
        st.pivots.push_back(st.col);
        ++st.row;
        ++st.col;
        continue;
      }
      if (witness) {
        if (live + 1 > max_leaves) {
          throw Error(ErrorKind::SplitDepthExceeded, "elimination produced more than " + std::to_string(max_leaves) + " summands");
        }
        ++live;
        const SplitRings sp = hensel_split(st.ring, *witness);
        out.trace.push_back(nlohmann::json{{"event", "split"},
                                           {"pivot_column", st.col},
                                           {"H0", witness->to_string()},
                                           {"depth", st.ring->path().size()}}
                                .dump());
        // E first so that the H summand is processed next.
        for (const ArtinRingPtr& child : {sp.e_ring, sp.h_ring}) {
          State c;
          c.ring = child;
          c.matrix = rebuild(child);
          c.cur = c.matrix.rows;
          c.ops = project_ops(st.ops, child);
          apply_ops(c.cur, c.ops);
          c.pivots = st.pivots;
          c.row = st.row;
          c.col = st.col;
          work.push_back(std::move(c));
        }
        split = true;
        break;
      }
      ++st.col;
    }
    if (split) continue;
    out.trace.push_back(nlohmann::json{{"event", "leaf"},
                                       {"rank", st.pivots.size()},
                                       {"pivots", st.pivots},
                                       {"path", st.ring->path()}}
                            .dump());
    out.leaves.push_back({st.ring, std::move(st.matrix), std::move(st.cur), std::move(st.ops), std::move(st.pivots)});
  }
  return out;
}

std::vector<LeafSolution> solve_rank_m(const Leaf& leaf, std::size_t normalize_column) {
  const std::size_t ncols = leaf.matrix.num_cols();
  if (leaf.rank() + 1 != ncols) throw Error(ErrorKind::RankMismatch, "leaf rank is not one less than the column count");
  std::size_t free_col = 0;
  while (std::find(leaf.pivots.begin(), leaf.pivots.end(), free_col) != leaf.pivots.end()) ++free_col;

  std::vector<ArtinElem> u(ncols, ArtinElem(leaf.ring));
  u[free_col] = ArtinElem::one(leaf.ring);
  for (std::size_t k = 0; k < leaf.pivots.size(); ++k) u[leaf.pivots[k]] = -leaf.echelon[k][free_col];

  // Rows below the rank may still hold entries in the free column.
  for (const auto& row : leaf.echelon) {
    ArtinElem acc(leaf.ring);
    for (std::size_t j = 0; j < ncols; ++j) acc = acc + row[j] * u[j];
    if (!acc.is_zero()) return {{leaf.ring, leaf.matrix, std::nullopt}};
  }

  const InvertResult res = try_invert(u[normalize_column]);
  if (res.kind == InvertResult::Kind::Inverse) {
    for (ArtinElem& e : u) e = e * res.inverse;
    return {{leaf.ring, leaf.matrix, std::move(u)}};
  }
  if (res.kind == InvertResult::Kind::Zero || res.nilpotent) return {{leaf.ring, leaf.matrix, std::nullopt}};

  const SplitRings sp = hensel_split(leaf.ring, res.witness);
  std::vector<LeafSolution> out;
  for (const ArtinRingPtr& child : {sp.h_ring, sp.e_ring}) {
    Leaf c;
    c.ring = child;
    c.matrix = project_matrix(leaf.matrix, child);
    c.echelon = project_rows(leaf.echelon, child);
    c.ops = project_ops(leaf.ops, child);
    c.pivots = leaf.pivots;
    auto sub = solve_rank_m(c, normalize_column);
    out.insert(out.end(), std::make_move_iterator(sub.begin()), std::make_move_iterator(sub.end()));
  }
  return out;
}

}  // namespace hf
