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

#include <random>

#include "doctest.h"
#include "hf/hasse.hpp"
#include "hf/parse.hpp"

using namespace hf;

namespace {

const char* kWorkedG = "T^4 + (x+1)*T^3 + (x^2+1)*T^2 + (x^3+x^2+1)*T + (x^2+x)";

ArtinElem from_series(const ArtinRingPtr& r, std::vector<int> c) {
  std::vector<Fe> v;
  c.resize(r->q());
  for (int x : c) v.push_back(r->s().f().from_int(x));
  return ArtinElem::scalar(r, v);
}

ArtinElem expand_tpoly(const ArtinRingPtr& r, const TPoly& p) {
  std::vector<Fe> b;
  for (int j = 0; j <= p.degree(); ++j) {
    const auto e = r->s().expand(p.coeff(j));
    b.insert(b.end(), e.begin(), e.end());
  }
  return ArtinElem::from_blocks(r, b);
}

ArtinElem random_elem(const ArtinRingPtr& r, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, r->s().f().size() - 1);
  std::vector<Fe> v(r->elem_size());
  for (auto& c : v) c = Fe{d(rng)};
  return ArtinElem(r, v);
}

// Random monic G over k(x) with polynomial coefficients whose specialisation
// at alpha is squarefree.
ArtinRingPtr random_ring(const SeriesRingPtr& s, std::size_t n, std::mt19937& rng) {
  auto k = s->base();
  std::uniform_int_distribution<std::uint32_t> d(0, k->size() - 1);
  for (;;) {
    std::vector<RatFunc> c;
    for (std::size_t j = 0; j < n; ++j) c.emplace_back(Poly(k, {Fe{d(rng)}, Fe{d(rng)}, Fe{d(rng)}}));
    c.push_back(RatFunc::constant(k, k->one()));
    const TPoly g(k, c);
    auto r = ArtinRing::from_tpoly(s, g);
    if (gcd(r->g0(), r->g0().derivative()).degree() == 0) return r;
  }
}

}  // namespace

TEST_CASE("derivatives of t in the split example ring") {
  auto f2 = Field::prime(2);
  auto s = SeriesRing::make(f2, f2, f2->one(), 4);
  auto r = ArtinRing::from_tpoly(s, parse_tpoly(f2, "T^2+T+x^2+x"));
  const DerivTable tab = DerivTable::build(r);
  CHECK(tab.power(1, 1).is_one());
  CHECK(tab.power(1, 2).is_zero());
  CHECK(tab.power(1, 3).is_zero());
  CHECK(tab.certificate_holds());
  CHECK(hasse_of_element(tab, 1, ArtinElem::t(r)).is_one());
  CHECK(hasse_of_element(tab, 1, from_series(r, {1, 1})).is_one());
  CHECK_THROWS_AS(hasse_of_element(tab, 4, ArtinElem::t(r)), Error);
}

TEST_CASE("constant-coefficient G has no derivatives of t") {
  auto f3 = Field::prime(3);
  auto s = SeriesRing::make(f3, f3, f3->zero(), 9);
  auto r = ArtinRing::from_tpoly(s, parse_tpoly(f3, "T^3 + 2*T + 1"));
  const DerivTable tab = DerivTable::build(r);
  for (std::size_t i = 1; i < 9; ++i) CHECK(tab.power(1, i).is_zero());
  for (std::size_t i = 1; i < 9; ++i) CHECK(hasse_of_element(tab, i, ArtinElem::one(r).scaled(f3->from_int(2))).is_zero());
}

TEST_CASE("second derivative of t for the worked example before splitting") {
  auto f2 = Field::prime(2);
  auto s = SeriesRing::make(f2, f2, f2->one(), 4);
  const TPoly g = parse_tpoly(f2, kWorkedG);
  auto r = ArtinRing::from_tpoly(s, g);
  const DerivTable tab = DerivTable::build(r);
  const ArtinElem j = expand_tpoly(r, parse_tpoly(f2, "x*T^5 + (x^2+x)*T^4 + x^5*T + x^6 + x^5"));
  const ArtinElem gi = tab.deriv_inverse();
  CHECK(tab.power(1, 2) == j * gi * gi * gi);
  // D(t) = -G_x(t)/G'(t) with G_x the x-derivative of the coefficients.
  const ArtinElem gx = expand_tpoly(r, parse_tpoly(f2, "T^3 + x^2*T + 1"));
  CHECK(tab.power(1, 1) == -(gx * gi));
}

TEST_CASE("Wronskian of (1, x, t) in the split ring") {
  auto f2 = Field::prime(2);
  auto s = SeriesRing::make(f2, f2, f2->one(), 4);
  auto r = ArtinRing::from_tpoly(s, parse_tpoly(f2, "T^2+T+x^2+x"));
  const DerivTable tab = DerivTable::build(r);
  std::vector<PhiEntry> phi = {
      {s->expand(parse_ratfunc(f2, "1")), 0, "1"},
      {s->expand(parse_ratfunc(f2, "x")), 0, "x"},
      {s->expand(parse_ratfunc(f2, "1")), 1, "t"},
  };
  const WronskianMatrix m = build_wronskian(tab, phi);
  REQUIRE(m.num_rows() == 4);
  REQUIRE(m.num_cols() == 3);
  const ArtinElem one = ArtinElem::one(r), zero(r);
  CHECK(m.rows[0][0] == one);
  CHECK(m.rows[0][1] == from_series(r, {1, 1}));
  CHECK(m.rows[0][2] == ArtinElem::t(r));
  CHECK(m.rows[1][0] == zero);
  CHECK(m.rows[1][1] == one);
  CHECK(m.rows[1][2] == one);
  for (std::size_t l = 2; l < 4; ++l) {
    for (std::size_t c = 0; c < 3; ++c) CHECK(m.rows[l][c].is_zero());
  }
  const WronskianMatrix single = build_wronskian(tab, {phi[0]});
  CHECK(single.rows[0][0] == one);
  CHECK(single.rows[1][0].is_zero());
  CHECK_THROWS_AS(build_wronskian(tab, {phi[0], phi[0]}), Error);
}

TEST_CASE("Leibniz and composition laws on ring elements") {
  std::mt19937 rng(17);
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 4}, {2, 8}, {3, 9}}) {
    auto f = Field::prime(p);
    auto s = SeriesRing::make(f, f, f->one(), q);
    const LucasBinomial binom(p);
    for (int it = 0; it < 4; ++it) {
      auto r = random_ring(s, 3, rng);
      const DerivTable tab = DerivTable::build(r, 4);
      CHECK(tab.certificate_holds());
      // Row recurrence on powers.
      for (std::size_t j = 2; j <= 4; ++j) {
        for (std::size_t b = 0; b < static_cast<std::size_t>(q); ++b) {
          ArtinElem acc(r);
          for (std::size_t c = 0; c <= b; ++c) acc = acc + tab.power(1, c) * tab.power(j - 1, b - c);
          CHECK(tab.power(j, b) == acc);
        }
      }
      const ArtinElem u = random_elem(r, rng), v = random_elem(r, rng);
      for (std::size_t i = 0; i < static_cast<std::size_t>(q); ++i) {
        ArtinElem acc(r);
        for (std::size_t a = 0; a <= i; ++a) acc = acc + hasse_of_element(tab, a, u) * hasse_of_element(tab, i - a, v);
        CHECK(hasse_of_element(tab, i, u * v) == acc);
        for (std::size_t j = 0; i + j < static_cast<std::size_t>(q); ++j) {
          const ArtinElem lhs = hasse_of_element(tab, i, hasse_of_element(tab, j, u));
          const ArtinElem rhs = hasse_of_element(tab, i + j, u).scaled(f->from_int(binom(i + j, j)));
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("Wronskian rank over K: examples") {
  auto f2 = Field::prime(2);
  auto rank = [&](const char* b) { return wronskian_rank_over_K(parse_basis(f2, b)); };
  CHECK(rank("1, x").rank == 2);
  CHECK(rank("1, x, x+1").rank == 2);
  const WronskianRank w = rank("1, x^2, x^4");
  CHECK(w.rank == 3);
  CHECK(w.orders == std::vector<std::size_t>{0, 2, 4});
  // The classical Wronskian (orders 0, 1, 2) sees only rank 2.
  CHECK(wronskian_rank_over_K(parse_basis(f2, "1, x^2, x^4"), 2).rank == 2);
}

TEST_CASE("Wronskian rank matches the rank of planted coefficient matrices") {
  std::mt19937 rng(23);
  for (auto f : {Field::prime(2), Field::prime(3)}) {
    const auto g = parse_basis(f, "1, x, 1/(x+1), x^3, x/(x^2+x+1)");
    std::uniform_int_distribution<std::uint32_t> d(0, f->size() - 1);
    for (int it = 0; it < 40; ++it) {
      const std::size_t nf = 1 + it % 5;
      std::vector<std::vector<Fe>> coef(nf, std::vector<Fe>(g.size()));
      std::vector<RatFunc> fs;
      for (auto& row : coef) {
        RatFunc acc(f);
        for (std::size_t k = 0; k < g.size(); ++k) {
          row[k] = Fe{d(rng)};
          acc = acc + g[k].scaled(row[k]);
        }
        fs.push_back(acc);
      }
      // Rank of coef over k by plain elimination.
      std::size_t rk = 0;
      for (std::size_t col = 0; col < g.size() && rk < nf; ++col) {
        std::size_t piv = rk;
        while (piv < nf && coef[piv][col] == Fe{}) ++piv;
        if (piv == nf) continue;
        std::swap(coef[piv], coef[rk]);
        const Fe inv = f->inv(coef[rk][col]);
        for (std::size_t i = 0; i < nf; ++i) {
          if (i == rk || coef[i][col] == Fe{}) continue;
          const Fe c = f->mul(coef[i][col], inv);
          for (std::size_t k = 0; k < g.size(); ++k) coef[i][k] = f->sub(coef[i][k], f->mul(c, coef[rk][k]));
        }
        ++rk;
      }
      CHECK(wronskian_rank_over_K(fs).rank == rk);
    }
  }
}
