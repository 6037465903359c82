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

#include "hf/restricted.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "hf/ff_factor.hpp"

namespace hf {

namespace {

constexpr const char* kOutsideK = "constants lie outside the constant field";

struct Column {
  std::size_t power = 0;
  RatFunc h;
  std::string label;
};

std::vector<Column> columns_of(const SubspaceSpec& spec) {
  std::vector<Column> cols;
  for (std::size_t i = 0; i < spec.spaces.size(); ++i) {
    for (const RatFunc& h : spec.spaces[i]) {
      std::string label = "[" + h.to_string() + "]";
      if (i > 0) label += "t^" + std::to_string(i);
      cols.push_back({i, h, std::move(label)});
    }
  }
  const FieldPtr& k = spec.spaces.front().front().field();
  cols.push_back({spec.r, RatFunc::constant(k, k->one()), "t^" + std::to_string(spec.r)});
  return cols;
}

std::string gf_spec(std::uint32_t p, std::uint32_t d) {
  return d == 1 ? "GF(" + std::to_string(p) + ")" : "GF(" + std::to_string(p) + "^" + std::to_string(d) + ")";
}

RatFunc map_coeffs(const RatFunc& f, const FieldPtr& target, const std::function<Fe(Fe)>& fn) {
  auto map_poly = [&](const Poly& a) {
    std::vector<Fe> c;
    for (Fe v : a.coeffs()) c.push_back(fn(v));
    return Poly(target, std::move(c));
  };
  return RatFunc(map_poly(f.num()), map_poly(f.den()));
}

TPoly map_coeffs(const TPoly& h, const FieldPtr& target, const std::function<Fe(Fe)>& fn) {
  std::vector<RatFunc> c;
  for (const RatFunc& a : h.coeffs()) c.push_back(map_coeffs(a, target, fn));
  return TPoly(target, std::move(c));
}

bool fits_spaces(const TPoly& h, const SubspaceSpec& spec) {
  if (h.degree() != static_cast<int>(spec.r) || !h.is_monic()) return false;
  for (std::size_t i = 0; i < spec.r; ++i) {
    if (!span_coordinates(h.coeff(i), spec.spaces[i])) return false;
  }
  return true;
}

class Search {
 public:
  Search(const TPoly& g, const SubspaceSpec& spec, const PlaceData& place, const SearchOptions& opts,
         FactorReport& report)
      : g_(g), spec_(spec), place_(place), opts_(opts), rep_(report), all_(columns_of(spec)) {}

  void run(const ArtinRingPtr& ring, std::vector<std::size_t> cols, bool reduced) {
    std::vector<PhiEntry> phi;
    for (std::size_t c : cols) phi.push_back({ring->s().expand(all_[c].h), all_[c].power, all_[c].label});
    const MatrixBuilder build = phi_builder(phi);
    EliminationOutcome out = eliminate(build(ring), build, ring->degree());
    for (auto& line : out.trace) rep_.trace.push_back(std::move(line));

    const std::size_t n = cols.size();
    for (const Leaf& leaf : out.leaves) {
      if (leaf.rank() == n) {
        record(leaf.ring, leaf.rank(), n, reduced, "full_rank", "");
      } else if (leaf.rank() + 1 == n) {
        for (const LeafSolution& sol : solve_rank_m(leaf, n - 1)) {
          if (!sol.u) {
            record(sol.ring, leaf.rank(), n, reduced, "no_normalized_solution", "");
          } else {
            read_off(sol, cols, leaf.rank(), reduced);
          }
        }
      } else if (n > 2) {
        // Drop the last coefficient column ahead of t^r and retry on this summand.
        std::vector<std::size_t> fewer = cols;
        fewer.erase(fewer.end() - 2);
        run(leaf.ring, std::move(fewer), true);
      } else {
        record(leaf.ring, leaf.rank(), n, reduced, "deferred", "rank below the column count minus one");
      }
    }
  }

 private:
  void record(const ArtinRingPtr& ring, std::size_t rank, std::size_t cols, bool reduced, std::string status,
              std::string detail) {
    rep_.leaves.push_back({ring->path(), rank, cols, reduced, std::move(status), std::move(detail)});
  }

  void read_off(const LeafSolution& sol, const std::vector<std::size_t>& cols, std::size_t rank, bool reduced) {
    const ArtinRingPtr& ring = sol.ring;
    const std::vector<ArtinElem>& u = *sol.u;
    const DerivTable table = DerivTable::build(ring);
    for (const ArtinElem& e : u) {
      for (std::size_t i = 1; i < ring->q(); ++i) {
        if (!hasse_of_element(table, i, e).is_zero()) {
          record(ring, rank, cols.size(), reduced, "spurious", "kernel vector is not constant");
          return;
        }
      }
    }
    std::vector<Poly> factors;
    for (const FactorMult& fm : factor_over_ff(ring->g0(), opts_.seed)) factors.push_back(fm.factor);
    std::size_t found = 0;
    bool spurious = false;
    std::string why;
    for (const LocalRing& local : decompose_to_locals(ring, factors)) {
      std::vector<Fe> c;
      for (const ArtinElem& e : u) c.push_back(constant_of(e.project(local.ring), local));
      std::string reason;
      if (auto f = reconstruct(local.residue.field, c, cols, reason)) {
        f->path = ring->path();
        add_factor(std::move(*f));
        ++found;
      } else if (!spurious) {
        why = reason;
        spurious = reason != std::string(kOutsideK);
      }
    }
    if (found > 0) {
      record(ring, rank, cols.size(), reduced, "factor", spurious ? "spurious: " + why : "");
    } else {
      record(ring, rank, cols.size(), reduced, spurious ? "spurious" : "rejected", why);
    }
  }

  std::optional<FoundFactor> reconstruct(const FieldPtr& big, const std::vector<Fe>& c,
                                         const std::vector<std::size_t>& cols, std::string& reason) const {
    const FieldPtr& k = place_.k;
    std::uint32_t deg = k->degree();
    for (Fe a : c) deg = std::lcm(deg, big->element_degree(a));
    const bool down = deg == k->degree();
    const FieldPtr f = down ? k : big;
    std::vector<RatFunc> b(spec_.r, RatFunc(f));
    for (std::size_t j = 0; j + 1 < cols.size(); ++j) {
      const Column& col = all_[cols[j]];
      const Fe cj = down ? big->project_to_subfield(c[j], *k) : c[j];
      b[col.power] = b[col.power] + col.h.embed_into(f).scaled(cj);
    }
    if (!c.empty() && c.back() != big->one()) {
      reason = "normalized coordinate is not one";
      return std::nullopt;
    }
    b.push_back(RatFunc::constant(f, f->one()));
    const TPoly h(f, b);
    if (!tpoly_divrem(g_.embed_into(f), h).second.is_zero()) {
      reason = "candidate does not divide G";
      return std::nullopt;
    }
    if (opts_.over_k_only && !down) {
      reason = kOutsideK;
      return std::nullopt;
    }
    // Independent membership check over the field the coefficients live in.
    for (std::size_t i = 0; i < spec_.r; ++i) {
      std::vector<RatFunc> basis;
      for (const RatFunc& v : spec_.spaces[i]) basis.push_back(v.embed_into(f));
      if (!span_coordinates(h.coeff(i), basis)) {
        reason = "coefficient outside its space";
        return std::nullopt;
      }
    }
    return FoundFactor{h, f, gf_spec(k->characteristic(), deg), {}, c, big};
  }

  void add_factor(FoundFactor f) {
    for (const FoundFactor& o : rep_.factors) {
      if (o.field->size() == f.field->size() && o.h == f.h) return;
    }
    rep_.factors.push_back(std::move(f));
  }

  const TPoly& g_;
  const SubspaceSpec& spec_;
  const PlaceData& place_;
  const SearchOptions& opts_;
  FactorReport& rep_;
  std::vector<Column> all_;
};

}  // namespace

bool FactorReport::conclusive() const {
  return std::none_of(leaves.begin(), leaves.end(), [](const LeafRecord& l) {
    return l.reduced || l.status == "spurious" || l.status == "deferred" || l.status == "no_normalized_solution" ||
           l.detail.rfind("spurious", 0) == 0;
  });
}

bool FactorReport::all_full_rank() const {
  return std::all_of(leaves.begin(), leaves.end(),
                     [](const LeafRecord& l) { return l.status == "full_rank" && !l.reduced; });
}

const char* to_string(FactorReport::Outcome o) {
  switch (o) {
    case FactorReport::Outcome::NoFactorCertificate: return "NoFactorCertificate";
    case FactorReport::Outcome::FactorsFound: return "FactorsFound";
    case FactorReport::Outcome::Deferred: return "Deferred";
  }
  return "?";
}

bool tpoly_less(const TPoly& a, const TPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.to_string() < b.to_string();
}

SubspaceSpec normalize_spec(const TPoly& g, SubspaceSpec spec) {
  const int s = g.degree();
  if (spec.r == 0 || static_cast<int>(spec.r) >= s) {
    throw Error(ErrorKind::InvalidArgument, "factor degree r must satisfy 1 <= r < deg G");
  }
  if (spec.spaces.size() != spec.r) {
    throw Error(ErrorKind::InvalidSubspace, "expected " + std::to_string(spec.r) + " coefficient spaces");
  }
  for (const auto& v : spec.spaces) {
    for (const RatFunc& h : v) {
      if (h.is_zero()) throw Error(ErrorKind::InvalidSubspace, "zero basis element");
      if (h.field() != g.field()) throw Error(ErrorKind::InvalidSubspace, "basis element over another field");
    }
  }
  auto& v0 = spec.spaces.front();
  const auto one = std::find_if(v0.begin(), v0.end(), [](const RatFunc& h) { return h.is_one(); });
  if (one == v0.end()) throw Error(ErrorKind::InvalidSubspace, "V_0 must contain 1");
  std::rotate(v0.begin(), one, one + 1);
  for (std::size_t i = 0; i < spec.r; ++i) {
    const auto& v = spec.spaces[i];
    if (!v.empty() && wronskian_rank_over_K(v).rank != v.size()) {
      throw Error(ErrorKind::InvalidSubspace, "basis of V_" + std::to_string(i) + " is linearly dependent over k");
    }
  }
  return spec;
}

std::vector<Poly> space_denominators(const SubspaceSpec& spec) {
  std::vector<Poly> out;
  for (const auto& v : spec.spaces) {
    for (const RatFunc& h : v) {
      if (h.den().degree() > 0) out.push_back(h.den());
    }
  }
  return out;
}

namespace {

void search_at(const TPoly& g, const SubspaceSpec& spec, const SearchOptions& opts, FactorReport& rep) {
  const PlaceData& place = rep.place;
  const SeriesRingPtr series = SeriesRing::make(place.k, place.ell, place.alpha, rep.q);
  const ArtinRingPtr ring = ArtinRing::from_tpoly(series, g);
  std::vector<std::size_t> cols(spec.m() + 1);
  std::iota(cols.begin(), cols.end(), 0);
  Search(g, spec, place, opts, rep).run(ring, std::move(cols), false);

  if (!rep.factors.empty()) {
    rep.outcome = FactorReport::Outcome::FactorsFound;
  } else if (std::any_of(rep.leaves.begin(), rep.leaves.end(),
                         [](const LeafRecord& l) { return l.status == "deferred"; })) {
    rep.outcome = FactorReport::Outcome::Deferred;
  }
}

}  // namespace

FactorReport restricted_factor(const TPoly& g, const SubspaceSpec& spec_in, const PlaceData& place,
                               const SearchOptions& opts) {
  make_separable_check(g);
  const SubspaceSpec spec = normalize_spec(g, spec_in);
  check_place(g, place, space_denominators(spec));
  const BoundsReport b = bounds_report(g, spec);
  const std::uint32_t p = g.field()->characteristic();

  FactorReport rep;
  rep.place = place;
  rep.delta = b.delta;
  rep.m = b.m;
  rep.q = b.q;
  rep.s = static_cast<std::size_t>(g.degree());
  if (opts.q_override != 0) {
    if (smallest_power_above(p, opts.q_override - 1) != opts.q_override ||
        opts.q_override <= std::max<std::size_t>(b.m, b.delta)) {
      throw Error(ErrorKind::InvalidArgument, "q must be a power of the characteristic above max(m, delta)");
    }
    rep.q = opts.q_override;
  }
  rep.initial_q = rep.q;
  search_at(g, spec, opts, rep);
  if (opts.q_override != 0 || rep.conclusive()) return rep;

  // Delta bounds pole degrees on K; on the curve of a root they grow by up to s.
  const std::size_t sound = smallest_power_above(p, std::max<std::size_t>(b.m, rep.s * b.delta));
  if (sound <= rep.q) return rep;
  FactorReport again;
  again.place = place;
  again.delta = b.delta;
  again.m = b.m;
  again.s = rep.s;
  again.q = sound;
  again.initial_q = rep.q;
  search_at(g, spec, opts, again);
  return again;
}

std::vector<TPoly> collect_all_restricted_factors(const TPoly& g, const SubspaceSpec& spec_in,
                                                  const PlaceData& place, std::uint64_t seed) {
  const SubspaceSpec spec = normalize_spec(g, spec_in);
  std::vector<TPoly> out;
  TPoly cur = g;
  while (true) {
    if (cur.degree() <= static_cast<int>(spec.r)) {
      if (fits_spaces(cur, spec)) out.push_back(cur);
      break;
    }
    const FactorReport rep = restricted_factor(cur, spec, place, {true, 0, seed});
    bool progress = false;
    for (const FoundFactor& f : rep.factors) {
      auto [quo, rem] = tpoly_divrem(cur, f.h);
      if (!rem.is_zero()) continue;
      out.push_back(f.h);
      cur = quo;
      progress = true;
    }
    if (!progress) break;
  }
  std::sort(out.begin(), out.end(), tpoly_less);
  return out;
}

std::optional<std::vector<Fe>> span_coordinates(const RatFunc& f, const std::vector<RatFunc>& basis) {
  const std::size_t n = basis.size();
  if (n == 0) {
    if (f.is_zero()) return std::vector<Fe>{};
    return std::nullopt;
  }
  const FieldPtr& F = basis.front().field();
  Poly lcm = f.is_zero() ? Poly::constant(F, F->one()) : f.den();
  for (const RatFunc& h : basis) lcm = exact_div(lcm * h.den(), gcd(lcm, h.den()));

  std::vector<Poly> cols;
  for (const RatFunc& h : basis) cols.push_back(exact_div(lcm, h.den()) * h.num());
  const Poly rhs = f.is_zero() ? Poly(F) : exact_div(lcm, f.den()) * f.num();
  int rows = rhs.degree() + 1;
  for (const Poly& c : cols) rows = std::max(rows, c.degree() + 1);

  // Augmented system, reduced row echelon form.
  std::vector<std::vector<Fe>> a(rows, std::vector<Fe>(n + 1));
  for (int i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = cols[j].coeff(i);
    a[i][n] = rhs.coeff(i);
  }
  std::vector<int> pivot_col;
  int row = 0;
  for (std::size_t c = 0; c < n && row < rows; ++c) {
    int piv = -1;
    for (int i = row; i < rows; ++i) {
      if (a[i][c] != Fe{}) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(a[row], a[piv]);
    const Fe inv = F->inv(a[row][c]);
    for (auto& v : a[row]) v = F->mul(v, inv);
    for (int i = 0; i < rows; ++i) {
      if (i == row || a[i][c] == Fe{}) continue;
      const Fe m = a[i][c];
      for (std::size_t j = 0; j <= n; ++j) a[i][j] = F->sub(a[i][j], F->mul(m, a[row][j]));
    }
    pivot_col.push_back(static_cast<int>(c));
    ++row;
  }
  for (int i = row; i < rows; ++i) {
    if (a[i][n] != Fe{}) return std::nullopt;
  }
  std::vector<Fe> x(n);
  for (int i = 0; i < row; ++i) x[pivot_col[i]] = a[i][n];
  return x;
}

TPoly norm_to_k(const TPoly& h, const FieldPtr& k) {
  const FieldPtr& f = h.field();
  if (f.get() == k.get()) return h;
  const std::uint32_t e = k->degree();
  auto frob = [&](Fe a) { return f->frobenius_power(a, e); };
  TPoly prod = h, conj = map_coeffs(h, f, frob);
  while (!(conj == h)) {
    prod = prod * conj;
    conj = map_coeffs(conj, f, frob);
  }
  return map_coeffs(prod, k, [&](Fe a) { return f->project_to_subfield(a, *k); });
}

Factorization factor_over_K(const TPoly& g, std::uint64_t seed, const std::optional<PlaceData>& fixed) {
  make_separable_check(g);
  const FieldPtr& k = g.field();
  Factorization out;
  std::vector<TPoly> todo{g};
  while (!todo.empty()) {
    TPoly cur = std::move(todo.back());
    todo.pop_back();
    if (cur.degree() == 1) {
      out.factors.push_back(cur);
      continue;
    }
    if (cur.has_constant_coefficients()) {
      std::vector<Fe> c;
      for (const RatFunc& a : cur.coeffs()) c.push_back(a.num().coeff(0));
      for (const FactorMult& fm : factor_over_ff(Poly(k, c, 'T'), seed)) {
        out.factors.push_back(TPoly::from_constant_poly(fm.factor));
      }
      continue;
    }
    // At the least r with an absolute factor, every factor found is
    // absolutely irreducible, so its norm is irreducible over K.
    bool split = false;
    const PlaceData place = fixed ? *fixed : find_place(cur);
    for (std::size_t r = 1; 2 * r <= static_cast<std::size_t>(cur.degree()) && !split; ++r) {
      FactorReport rep = restricted_factor(cur, default_subspaces(cur, r), place, {false, 0, seed});
      TPoly rest = cur;
      for (const FoundFactor& f : rep.factors) {
        const TPoly n = norm_to_k(f.h, k);
        auto [quo, rem] = tpoly_divrem(rest, n);
        if (!rem.is_zero()) continue;
        out.factors.push_back(n);
        rest = quo;
        split = true;
      }
      out.reports.push_back(std::move(rep));
      if (split && rest.degree() > 0) todo.push_back(rest);
    }
    if (!split) out.factors.push_back(cur);
  }
  std::sort(out.factors.begin(), out.factors.end(), tpoly_less);
  return out;
}

IrreducibilityResult absolutely_irreducible(const TPoly& g, std::uint64_t seed, const std::optional<PlaceData>& fixed) {
  make_separable_check(g);
  IrreducibilityResult res;
  res.absolutely_irreducible = true;
  if (g.degree() <= 1) return res;
  const PlaceData place = fixed ? *fixed : find_place(g);
  for (std::size_t r = 1; 2 * r <= static_cast<std::size_t>(g.degree()); ++r) {
    FactorReport rep = restricted_factor(g, default_subspaces(g, r), place, {false, 0, seed});
    const bool full = rep.all_full_rank();
    if (!full && !rep.factors.empty()) {
      res.witness = *std::min_element(rep.factors.begin(), rep.factors.end(),
                                      [](const FoundFactor& a, const FoundFactor& b) { return tpoly_less(a.h, b.h); });
    }
    res.reports.push_back(std::move(rep));
    if (!full) {
      res.absolutely_irreducible = false;
      break;
    }
  }
  return res;
}

std::vector<RatFunc> roots_in_span(const TPoly& g, const std::vector<RatFunc>& basis, std::uint64_t seed,
                                   const std::optional<PlaceData>& fixed) {
  make_separable_check(g);
  if (g.degree() == 1) {
    const RatFunc root = -g.coeff(0);
    if (span_coordinates(root, basis)) return {root};
    return {};
  }
  SubspaceSpec spec{1, {basis}};
  spec = normalize_spec(g, spec);
  const PlaceData place = fixed ? *fixed : find_place(g, space_denominators(spec));
  std::vector<RatFunc> roots;
  for (const TPoly& f : collect_all_restricted_factors(g, spec, place, seed)) roots.push_back(-f.coeff(0));
  return roots;
}

}  // namespace hf
