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

#include "hf/bounds.hpp"

#include <algorithm>
#include <numeric>

#include "hf/ff_factor.hpp"
#include "hf/series.hpp"

namespace hf {

namespace {

// Nonnegative rationals are all we need.
struct Frac {
  std::int64_t n = 0, d = 1;
};

Frac make_frac(std::int64_t n, std::int64_t d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  return {n / g, d / g};
}

bool operator<(Frac a, Frac b) { return a.n * b.d < b.n * a.d; }
Frac operator+(Frac a, Frac b) { return make_frac(a.n * b.d + b.n * a.d, a.d * b.d); }
Frac operator*(std::int64_t k, Frac a) { return make_frac(k * a.n, a.d); }

std::int64_t ceil_frac(Frac a) {
  if (a.n >= 0) return (a.n + a.d - 1) / a.d;
  return -((-a.n) / a.d);
}

struct Place {
  Poly p;  // empty for infinity
  int deg = 1;
  bool infinite() const { return p.is_zero(); }
};

int val(const RatFunc& f, const Place& pl) {
  return pl.infinite() ? valuation_at_infinity(f) : valuation_at(f, pl.p);
}

void add_places_of(const Poly& den, std::vector<Place>& places) {
  if (den.degree() <= 0) return;
  for (const FactorMult& fm : factor_over_ff(den)) {
    const bool seen = std::any_of(places.begin(), places.end(), [&](const Place& p) { return p.p == fm.factor; });
    if (!seen) places.push_back({fm.factor, fm.factor.degree()});
  }
}

// Infinity first, then finite places from the coefficient denominators.
std::vector<Place> places_of(const TPoly& g) {
  std::vector<Place> places{{Poly(), 1}};
  for (int i = 0; i < g.degree(); ++i) add_places_of(g.coeff(i).den(), places);
  return places;
}

// Pole-order bound of a root t at the place.
Frac mu(const TPoly& g, const Place& pl) {
  const int s = g.degree();
  Frac best{0, 1};
  for (int i = 0; i < s; ++i) {
    if (g.coeff(i).is_zero()) continue;
    const Frac c = make_frac(-val(g.coeff(i), pl), s - i);
    if (best < c) best = c;
  }
  return best;
}

Fe eval_in(const Poly& p, const FieldPtr& ell, Fe a) { return p.embed_into(ell).eval(a); }

bool admissible(const TPoly& g, const RatFunc& disc, const std::vector<Poly>& avoid, const FieldPtr& ell, Fe a) {
  for (int i = 0; i <= g.degree(); ++i) {
    if (eval_in(g.coeff(i).den(), ell, a) == Fe{}) return false;
  }
  for (const Poly& d : avoid) {
    if (eval_in(d, ell, a) == Fe{}) return false;
  }
  return eval_in(disc.num(), ell, a) != Fe{} && eval_in(disc.den(), ell, a) != Fe{};
}

std::uint32_t degree_over(const Field& ell, const Field& k, Fe a) {
  const std::uint32_t da = ell.element_degree(a), dk = k.degree();
  return std::lcm(da, dk) / dk;
}

}  // namespace

std::size_t SubspaceSpec::m() const {
  std::size_t total = 0;
  for (const auto& v : spaces) total += v.size();
  return total;
}

int valuation_at(const RatFunc& f, const Poly& place) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "valuation of zero");
  return valuation(f.num(), place) - valuation(f.den(), place);
}

int valuation_at_infinity(const RatFunc& f) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "valuation of zero");
  return f.den().degree() - f.num().degree();
}

int compute_delta(const TPoly& g, std::size_t r) {
  Frac sum{0, 1};
  for (const Place& pl : places_of(g)) sum = sum + static_cast<std::int64_t>(pl.deg) * mu(g, pl);
  return static_cast<int>(ceil_frac(static_cast<std::int64_t>(r) * sum));
}

int delta_for_spaces(const TPoly& g, const SubspaceSpec& spec) {
  std::vector<Place> places = places_of(g);
  for (const auto& v : spec.spaces) {
    for (const RatFunc& h : v) add_places_of(h.den(), places);
  }
  Frac sum{0, 1};
  for (const Place& pl : places) {
    const Frac m = mu(g, pl);
    // The t^r column carries pole order r mu.
    Frac w = static_cast<std::int64_t>(spec.r) * m;
    for (std::size_t i = 0; i < spec.spaces.size(); ++i) {
      for (const RatFunc& h : spec.spaces[i]) {
        if (h.is_zero()) continue;
        const Frac c = make_frac(-val(h, pl) * m.d + static_cast<std::int64_t>(i) * m.n, m.d);
        if (w < c) w = c;
      }
    }
    sum = sum + static_cast<std::int64_t>(pl.deg) * w;
  }
  return static_cast<int>(ceil_frac(sum));
}

SubspaceSpec default_subspaces(const TPoly& g, std::size_t r) {
  const FieldPtr& k = g.field();
  const std::vector<Place> places = places_of(g);
  SubspaceSpec spec;
  spec.r = r;
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<RatFunc> basis;
    const std::int64_t rj = static_cast<std::int64_t>(r - j);
    for (const Place& pl : places) {
      const std::int64_t e = ceil_frac(rj * mu(g, pl));
      if (pl.infinite()) {
        for (std::int64_t i = 0; i <= e; ++i) basis.emplace_back(Poly::monomial(k, k->one(), i));
        continue;
      }
      Poly pe = Poly::constant(k, k->one());
      for (std::int64_t ex = 1; ex <= e; ++ex) {
        pe = pe * pl.p;
        for (int i = 0; i < pl.deg; ++i) basis.emplace_back(Poly::monomial(k, k->one(), i), pe);
      }
    }
    spec.spaces.push_back(std::move(basis));
  }
  return spec;
}

BoundsReport bounds_report(const TPoly& g, const SubspaceSpec& spec) {
  BoundsReport rep;
  rep.delta = delta_for_spaces(g, spec);
  const Place inf{Poly(), 1};
  const Frac m = mu(g, inf);
  for (std::size_t j = 0; j < spec.r; ++j) {
    rep.degree_bounds.push_back(static_cast<int>(ceil_frac(static_cast<std::int64_t>(spec.r - j) * m)));
  }
  rep.m = spec.m();
  rep.q = smallest_power_above(g.field()->characteristic(), std::max<std::size_t>(rep.m, rep.delta));
  return rep;
}

PlaceData make_place(const FieldPtr& k, const FieldPtr& ell, Fe alpha) {
  if (!ell->is_ancestor(*k)) throw Error(ErrorKind::PlaceInvalid, "residue field must extend the constant field");
  PlaceData pd;
  pd.k = k;
  pd.ell = ell;
  pd.alpha = alpha;
  pd.degree = degree_over(*ell, *k, alpha);
  // Product over the conjugates alpha^(|k|^i).
  Poly mp = Poly::constant(ell, ell->one());
  Fe c = alpha;
  for (std::uint32_t i = 0; i < pd.degree; ++i) {
    mp = mp * Poly::linear_root(ell, c);
    c = ell->pow(c, k->size());
  }
  std::vector<Fe> coeffs;
  for (Fe a : mp.coeffs()) coeffs.push_back(ell->project_to_subfield(a, *k));
  pd.minpoly = Poly(k, coeffs);
  return pd;
}

void check_place(const TPoly& g, const PlaceData& place, const std::vector<Poly>& avoid) {
  if (!admissible(g, discriminant(g), avoid, place.ell, place.alpha)) {
    throw Error(ErrorKind::PlaceInvalid, "expansion point " + place.ell->format(place.alpha) +
                                             " meets a pole or a root of the discriminant");
  }
}

PlaceData find_place(const TPoly& g, const std::vector<Poly>& avoid) {
  const FieldPtr& k = g.field();
  const RatFunc disc = discriminant(g);
  if (disc.is_zero()) throw Error(ErrorKind::Inseparable, "discriminant vanishes");
  if (admissible(g, disc, avoid, k, k->zero())) return make_place(k, k, k->zero());
  Fe w = k->one();
  for (std::uint32_t i = 0; i + 1 < k->size(); ++i) {
    if (admissible(g, disc, avoid, k, w)) return make_place(k, k, w);
    w = k->mul(w, k->primitive());
  }
  for (std::uint32_t e = 2;; ++e) {
    const FieldPtr ell = Field::extension_of(k, e);
    for (std::uint32_t idx = 0; idx < ell->size(); ++idx) {
      const Fe a = ell->element(idx);
      if (degree_over(*ell, *k, a) != e) continue;
      if (admissible(g, disc, avoid, ell, a)) return make_place(k, ell, a);
    }
  }
}

}  // namespace hf
