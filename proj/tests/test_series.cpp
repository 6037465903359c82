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
#include "hf/parse.hpp"
#include "hf/series.hpp"

using namespace hf;

namespace {

Series make(const SeriesRingPtr& s, std::initializer_list<int> c) {
  std::vector<Fe> v;
  for (int x : c) v.push_back(s->f().from_int(x));
  return Series(s, v);
}

Series random_series(const SeriesRingPtr& s, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, s->f().size() - 1);
  std::vector<Fe> v(s->q());
  for (auto& c : v) c = Fe{d(rng)};
  return Series(s, v);
}

}  // namespace

TEST_CASE("Lucas binomials") {
  LucasBinomial b2(2), b3(3);
  CHECK(b2(2, 1) == 0);
  CHECK(b2(3, 2) == 1);
  CHECK(b3(9, 3) == 0);
  CHECK(b3(10, 1) == 1);
  // Compare with Pascal's triangle mod 5.
  LucasBinomial b5(5);
  std::vector<std::vector<int>> pascal(60, std::vector<int>(60, 0));
  for (int n = 0; n < 60; ++n) {
    pascal[n][0] = 1;
    for (int k = 1; k <= n; ++k) pascal[n][k] = (pascal[n - 1][k - 1] + pascal[n - 1][k]) % 5;
    for (int k = 0; k <= n; ++k) CHECK(b5(n, k) == static_cast<std::uint32_t>(pascal[n][k]));
  }
  CHECK(smallest_power_above(2, 2) == 4);
  CHECK(smallest_power_above(2, 1) == 2);
  CHECK(smallest_power_above(3, 9) == 27);
}

TEST_CASE("series arithmetic examples over F2, q = 4") {
  auto f2 = Field::prime(2);
  auto s = SeriesRing::make(f2, f2, f2->one(), 4);
  CHECK(make(s, {1, 1}) * make(s, {1, 1, 1, 1}) == make(s, {1}));
  CHECK(series_inv(make(s, {1})) == make(s, {1}));
  CHECK_THROWS_AS(series_inv(make(s, {0, 1})), Error);
}

TEST_CASE("Hasse derivative examples") {
  auto f2 = Field::prime(2);
  auto s = SeriesRing::make(f2, f2, f2->zero(), 4);
  CHECK(series_hasse(1, Series::uniformizer_power(s, 2)).is_zero());
  CHECK(series_hasse(2, Series::uniformizer_power(s, 3)) == Series::uniformizer_power(s, 1));
  const Series a = make(s, {1, 0, 1, 1});
  CHECK(series_hasse(0, a) == a);
  CHECK_THROWS_AS(series_hasse(4, a), Error);
}

TEST_CASE("expansion at a place") {
  auto f2 = Field::prime(2);
  auto s = SeriesRing::make(f2, f2, f2->one(), 4);
  CHECK(expand_at_place(parse_ratfunc(f2, "x^2+x"), s) == make(s, {0, 1, 1}));
  CHECK(expand_at_place(parse_ratfunc(f2, "1"), s) == make(s, {1}));
  auto s0 = SeriesRing::make(f2, f2, f2->zero(), 4);
  CHECK_THROWS_AS(expand_at_place(parse_ratfunc(f2, "1/x"), s0), Error);
  // 1/(1+X) at alpha = 0 with x = X.
  CHECK(expand_at_place(parse_ratfunc(f2, "1/(x+1)"), s0) == make(s0, {1, 1, 1, 1}));
}

TEST_CASE("expansion into an extension residue field") {
  auto f2 = Field::prime(2);
  auto f4 = Field::extension_of(f2, 2);
  const Fe w = f4->generator();
  auto s = SeriesRing::make(f2, f4, w, 8);
  // x^2 + x + 1 vanishes at w, so its expansion has zero constant term.
  const Series e = expand_at_place(parse_ratfunc(f2, "x^2+x+1"), s);
  CHECK(e.coeff(0) == Fe{});
  CHECK(e.coeff(1) != Fe{});  // simple root
}

TEST_CASE("Leibniz and composition rules on random series") {
  std::mt19937 rng(2024);
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 4}, {2, 8}, {3, 9}, {5, 25}}) {
    auto f = Field::prime(p);
    auto s = SeriesRing::make(f, f, f->zero(), q);
    LucasBinomial binom(p);
    for (int it = 0; it < 40; ++it) {
      const Series u = random_series(s, rng), v = random_series(s, rng);
      const Series uv = u * v;
      for (int i = 0; i < q; ++i) {
        Series sum(s);
        for (int j = 0; j <= i; ++j) sum = sum + series_hasse(j, u) * series_hasse(i - j, v);
        CHECK(series_hasse(i, uv) == sum);
      }
      for (int i = 0; i < q; ++i) {
        for (int j = 0; i + j < q; ++j) {
          Series lhs = series_hasse(i, series_hasse(j, u));
          const Series dij = series_hasse(i + j, u);
          std::vector<Fe> rhs(dij.coeffs().begin(), dij.coeffs().end());
          s->scale(rhs, f->from_int(binom(i + j, j)));
          CHECK(lhs == Series(s, rhs));
        }
      }
    }
  }
}

TEST_CASE("inversion and expansion homomorphism properties") {
  std::mt19937 rng(99);
  auto f3 = Field::prime(3);
  auto s = SeriesRing::make(f3, f3, f3->from_int(2), 9);
  for (int it = 0; it < 200; ++it) {
    Series a = random_series(s, rng);
    if (!a.is_unit()) continue;
    CHECK(series_inv(a) * a == Series::constant(s, f3->one()));
  }
  const std::vector<const char*> fs = {"x^2+1", "(x+1)/(x^2+x+1)", "x^3/(x+2)", "1/(x^2+x+2)", "2x+1"};
  for (const char* a : fs) {
    for (const char* b : fs) {
      const RatFunc ra = parse_ratfunc(f3, a), rb = parse_ratfunc(f3, b);
      const Series ea = expand_at_place(ra, s), eb = expand_at_place(rb, s);
      CHECK(expand_at_place(ra * rb, s) == ea * eb);
      CHECK(expand_at_place(ra + rb, s) == ea + eb);
    }
  }
}
