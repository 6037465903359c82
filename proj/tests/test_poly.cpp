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
#include "hf/poly.hpp"

using namespace hf;

namespace {

const char* kWorkedG = "T^4 + (x+1)*T^3 + (x^2+1)*T^2 + (x^3+x^2+1)*T + (x^2+x)";

Poly px(const FieldPtr& f, std::string_view s) {
  RatFunc r = parse_ratfunc(f, s);
  REQUIRE(r.is_poly());
  return r.num();
}

Poly random_poly(const FieldPtr& f, std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<std::uint32_t> coef(0, f->size() - 1);
  std::uniform_int_distribution<int> deg(-1, max_deg);
  const int d = deg(rng);
  std::vector<Fe> c;
  for (int i = 0; i <= d; ++i) c.push_back(Fe{coef(rng)});
  return Poly(f, c);
}

}  // namespace

TEST_CASE("gcd and divrem examples over F2") {
  auto f = Field::prime(2);
  const Poly a = px(f, "x^4+x"), b = px(f, "x^2+x");
  CHECK(gcd(a, b) == b);
  auto [q, r] = divrem(b, px(f, "x"));
  CHECK(q == px(f, "x+1"));
  CHECK(r.is_zero());
  CHECK(gcd(px(f, "x^2+1"), Poly(f)) == px(f, "x^2+1"));
  CHECK_THROWS_AS(divrem(a, Poly(f)), Error);
}

TEST_CASE("divrem and xgcd properties on random pairs") {
  std::mt19937 rng(7);
  for (auto f : {Field::prime(2), Field::prime(3), Field::galois(2, 2), Field::prime(5)}) {
    for (int it = 0; it < 500; ++it) {
      const Poly a = random_poly(f, rng, 8), b = random_poly(f, rng, 5);
      if (!b.is_zero()) {
        auto [q, r] = divrem(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
      }
      const Xgcd g = xgcd(a, b);
      CHECK(g.u * a + g.v * b == g.g);
      if (!g.g.is_zero()) CHECK(g.g.is_monic());
    }
  }
}

TEST_CASE("rational function arithmetic") {
  auto f = Field::prime(2);
  const RatFunc r = parse_ratfunc(f, "x^2+x");
  CHECK(r.eval(f->one()) == f->zero());
  const RatFunc inv_x = parse_ratfunc(f, "1/x");
  CHECK((inv_x + inv_x).is_zero());
  const RatFunc red = parse_ratfunc(f, "(x+1)/(x^2+1)");
  CHECK(red == RatFunc(px(f, "1"), px(f, "x+1")));
  CHECK_THROWS_AS(inv_x.eval(f->zero()), Error);
}

TEST_CASE("rational function canonical form agrees with cross-multiplication") {
  std::mt19937 rng(11);
  auto f = Field::prime(3);
  for (int it = 0; it < 300; ++it) {
    Poly a = random_poly(f, rng, 3), b = random_poly(f, rng, 3), c = random_poly(f, rng, 2);
    if (b.is_zero() || c.is_zero()) continue;
    const RatFunc r1(a * c, b * c), r2(a, b);
    CHECK(r1 == r2);
    const Poly d = random_poly(f, rng, 3);
    if (d.is_zero()) continue;
    const RatFunc r3(d, b);
    CHECK((r3 == r2) == (d * b == a * b));
  }
}

TEST_CASE("tpoly division with the worked example") {
  auto f = Field::prime(2);
  const TPoly g = parse_tpoly(f, kWorkedG);
  const TPoly h = parse_tpoly(f, "T^2+T+x^2+x");
  auto [q, r] = tpoly_divrem(g, h);
  CHECK(q == parse_tpoly(f, "T^2 + x*T + 1"));
  CHECK(r.is_zero());
  auto [q2, r2] = tpoly_divrem(g, g);
  CHECK(q2 == parse_tpoly(f, "1"));
  CHECK(r2.is_zero());
  auto [q3, r3] = tpoly_divrem(parse_tpoly(f, "T+x+1"), parse_tpoly(f, "T+x"));
  CHECK(r3 == parse_tpoly(f, "1"));
}

TEST_CASE("discriminants and the separability check") {
  auto f = Field::prime(2);
  CHECK(discriminant(parse_tpoly(f, "T^2+T+x")) == RatFunc::constant(f, f->one()));
  CHECK(discriminant(parse_tpoly(f, "T^2+x")).is_zero());
  const RatFunc d = discriminant(parse_tpoly(f, kWorkedG));
  CHECK_FALSE(d.is_zero());
  CHECK(d.eval(f->one()) != f->zero());
  CHECK_NOTHROW(make_separable_check(parse_tpoly(f, kWorkedG)));

  auto expect_kind = [](const TPoly& g, ErrorKind k) {
    try {
      make_separable_check(g);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == k);
    }
  };
  expect_kind(parse_tpoly(f, "T^2 + x*T"), ErrorKind::ZeroConstantTerm);
  expect_kind(parse_tpoly(f, "x*T^2 + 1"), ErrorKind::NotMonic);
  auto f3 = Field::prime(3);
  expect_kind(parse_tpoly(f3, "T^3 - x"), ErrorKind::Inseparable);
}

TEST_CASE("discriminant vanishes exactly when gcd(G, G') is nonconstant") {
  std::mt19937 rng(3);
  for (auto f : {Field::prime(2), Field::prime(3)}) {
    std::uniform_int_distribution<std::uint32_t> coef(0, f->size() - 1);
    for (int it = 0; it < 120; ++it) {
      const int s = 3 + it % 2;
      std::vector<RatFunc> c;
      for (int i = 0; i < s; ++i) {
        std::vector<Fe> nc;
        for (int j = 0; j < 2; ++j) nc.push_back(Fe{coef(rng)});
        c.push_back(RatFunc(Poly(f, nc)));
      }
      c.push_back(RatFunc::constant(f, f->one()));
      const TPoly g(f, c);
      const bool disc_zero = discriminant(g).is_zero();
      const TPoly gg = tpoly_gcd(g, g.derivative());
      CHECK(disc_zero == (gg.degree() != 0));
    }
  }
}

TEST_CASE("parser round trip and errors") {
  auto f4 = Field::galois(2, 2);
  const TPoly g = parse_tpoly(f4, "T^2 + (z*x + 1)*T + x/(x+z)");
  CHECK(parse_tpoly(f4, g.to_string()) == g);
  auto f2 = Field::prime(2);
  CHECK(parse_tpoly(f2, kWorkedG).to_string() == "T^4 + (x + 1)*T^3 + (x^2 + 1)*T^2 + (x^3 + x^2 + 1)*T + x^2 + x");
  CHECK_THROWS_AS(parse_tpoly(f2, "T/T"), Error);
  CHECK_THROWS_AS(parse_tpoly(f2, "T^"), Error);
  CHECK_THROWS_AS(parse_tpoly(f2, "z*T"), Error);
  CHECK_THROWS_AS(parse_tpoly(f2, "x/0"), Error);
  CHECK(parse_tpoly(f2, "2x + 3T") == parse_tpoly(f2, "T"));
  const auto basis = parse_basis(f2, "1, x, (x^2+1)/(x+1)");
  REQUIRE(basis.size() == 3);
  CHECK(basis[2] == parse_ratfunc(f2, "x+1"));
}

TEST_CASE("residue extension realises l[T]/(F)") {
  auto f2 = Field::prime(2);
  const Poly t2t1 = Poly(f2, {f2->one(), f2->one(), f2->one()}, 'T');
  const ResidueExtension ext = residue_extension(t2t1);
  CHECK(ext.field->size() == 4);
  CHECK(t2t1.embed_into(ext.field).eval(ext.t_image) == Fe{});
  const ResidueExtension lin = residue_extension(Poly(f2, {f2->one(), f2->one()}, 'T'));
  CHECK(lin.field.get() == f2.get());
  CHECK(lin.t_image == f2->one());
}
