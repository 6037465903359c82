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
#include "hf/artin.hpp"
#include "hf/parse.hpp"

using namespace hf;

namespace {

// Blocks from a table of small integers, one row per power of T.
std::vector<Fe> blocks(const SeriesRingPtr& s, std::vector<std::vector<int>> rows) {
  std::vector<Fe> out;
  for (auto& r : rows) {
    r.resize(s->q());
    for (int c : r) out.push_back(s->f().from_int(c));
  }
  return out;
}

ArtinElem random_elem(const ArtinRingPtr& r, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, r->s().f().size() - 1);
  std::vector<Fe> v(r->elem_size());
  for (auto& c : v) c = Fe{d(rng)};
  return ArtinElem(r, v);
}

}  // namespace

TEST_CASE("multiplication in the worked-example quotient") {
  auto f2 = Field::prime(2);
  auto s = SeriesRing::make(f2, f2, f2->one(), 4);
  // T^2 + T + X^2 + X.
  auto r = ArtinRing::make(s, blocks(s, {{0, 1, 1}, {1}, {1}}));
  const ArtinElem t = ArtinElem::t(r);
  CHECK(t * t == ArtinElem(r, blocks(s, {{0, 1, 1}, {1}})));
  CHECK((t * t).to_string() == "t + X + X^2");

  const InvertResult inv = try_invert(t);
  CHECK(inv.kind == InvertResult::Kind::ZeroDivisor);
  CHECK(inv.witness == Poly(f2, {Fe{}, f2->one()}, 'T'));
  CHECK_FALSE(inv.nilpotent);
  CHECK(try_invert(ArtinElem(r)).kind == InvertResult::Kind::Zero);

  const ArtinElem x = ArtinElem::scalar(r, std::vector<Fe>{Fe{}, f2->one(), Fe{}, Fe{}});
  const InvertResult nil = try_invert(x);
  CHECK(nil.kind == InvertResult::Kind::ZeroDivisor);
  CHECK(nil.nilpotent);
}

TEST_CASE("Hensel split of T^2 + T + X^2 + X") {
  auto f2 = Field::prime(2);
  auto s = SeriesRing::make(f2, f2, f2->one(), 4);
  auto r = ArtinRing::make(s, blocks(s, {{0, 1, 1}, {1}, {1}}));
  const SplitRings sp = hensel_split(r, Poly(f2, {f2->one(), f2->one()}, 'T'));
  CHECK(sp.h_ring->modulus() == blocks(s, {{1, 1}, {1}}));
  CHECK(sp.e_ring->modulus() == blocks(s, {{0, 1}, {1}}));
  CHECK(sp.h_ring->path().back() == "H0=T + 1");
  CHECK_THROWS_AS(hensel_split(r, Poly(f2, {f2->one(), Fe{}, f2->one()}, 'T')), Error);
}

TEST_CASE("the worked example expands and splits at alpha = 1") {
  auto f2 = Field::prime(2);
  auto s = SeriesRing::make(f2, f2, f2->one(), 4);
  const TPoly g = parse_tpoly(f2, "T^4 + (x+1)*T^3 + (x^2+1)*T^2 + (x^3+x^2+1)*T + (x^2+x)");
  auto r = ArtinRing::from_tpoly(s, g);
  CHECK(r->g0() == Poly(f2, {Fe{}, f2->one(), Fe{}, Fe{}, f2->one()}, 'T'));
  // G0 = T^4 + T = T (T + 1) (T^2 + T + 1).
  const SplitRings sp = hensel_split(r, Poly(f2, {Fe{}, f2->one()}, 'T'));
  CHECK(sp.h_ring->degree() == 1);
  CHECK(sp.e_ring->degree() == 3);
}

TEST_CASE("local rings of T (T^2 + T + 1) have residue fields F2 and F4") {
  auto f2 = Field::prime(2);
  auto s = SeriesRing::make(f2, f2, f2->zero(), 4);
  auto r = ArtinRing::make(s, blocks(s, {{0}, {1}, {1}, {1}}));
  const auto locals = decompose_to_locals(
      r, {Poly(f2, {Fe{}, f2->one()}, 'T'), Poly(f2, {f2->one(), f2->one(), f2->one()}, 'T')});
  REQUIRE(locals.size() == 2);
  CHECK(locals[0].residue.field->size() == 2);
  CHECK(locals[1].residue.field->size() == 4);
  const ArtinElem t = ArtinElem::t(r);
  CHECK(constant_of(t.project(locals[0].ring), locals[0]) == Fe{});
  const Fe w = constant_of(t.project(locals[1].ring), locals[1]);
  const Field& f4 = *locals[1].residue.field;
  CHECK(f4.add(f4.add(f4.mul(w, w), w), f4.one()) == Fe{});
  CHECK_THROWS_AS(decompose_to_locals(r, {Poly(f2, {Fe{}, f2->one()}, 'T')}), Error);
}

TEST_CASE("try_invert agrees with exhaustive search in a small ring") {
  auto f2 = Field::prime(2);
  auto s = SeriesRing::make(f2, f2, f2->zero(), 2);
  for (const auto& mod : std::vector<std::vector<std::vector<int>>>{
           {{1, 1}, {1}, {1}}, {{0, 1}, {1, 1}, {1}}, {{1}, {0}, {1}}}) {
    auto r = ArtinRing::make(s, blocks(s, mod));
    std::vector<ArtinElem> all;
    for (std::uint32_t m = 0; m < 16; ++m) {
      std::vector<Fe> v(4);
      for (int i = 0; i < 4; ++i) v[i] = Fe{(m >> i) & 1u};
      all.emplace_back(r, v);
    }
    for (const ArtinElem& a : all) {
      bool unit = false;
      for (const ArtinElem& b : all) unit = unit || (a * b).is_one();
      const InvertResult res = try_invert(a);
      CHECK((res.kind == InvertResult::Kind::Inverse) == unit);
      if (unit) CHECK((a * res.inverse).is_one());
      if (res.kind == InvertResult::Kind::ZeroDivisor) {
        // The witness divides both G0 and the residue of a.
        CHECK(divrem(r->g0(), res.witness).second.is_zero());
        CHECK(divrem(a.residue(), res.witness).second.is_zero());
      }
    }
  }
}

TEST_CASE("projections to split rings are ring homomorphisms") {
  std::mt19937 rng(5);
  auto f3 = Field::prime(3);
  auto s = SeriesRing::make(f3, f3, f3->from_int(1), 9);
  for (int it = 0; it < 20; ++it) {
    // Random monic modulus of degree 4 whose reduction is T (T + 1) (T^2 + 1) + X * noise.
    std::uniform_int_distribution<std::uint32_t> d(0, 2);
    std::vector<std::vector<int>> rows = {{0}, {1}, {1}, {1}, {1}};
    for (int j = 0; j < 4; ++j) {
      rows[j].resize(9);
      for (int k = 1; k < 9; ++k) rows[j][k] = static_cast<int>(d(rng));
    }
    auto r = ArtinRing::make(s, blocks(s, rows));
    const Poly t0(f3, {Fe{}, f3->one()}, 'T');
    const Poly t1(f3, {f3->one(), f3->one()}, 'T');
    const Poly t2(f3, {f3->one(), Fe{}, f3->one()}, 'T');
    REQUIRE(r->g0() == t0 * t1 * t2);
    const auto locals = decompose_to_locals(r, {t0, t1, t2});
    std::size_t deg = 0;
    for (const auto& l : locals) deg += l.ring->degree();
    CHECK(deg == 4);
    for (int k = 0; k < 5; ++k) {
      const ArtinElem a = random_elem(r, rng), b = random_elem(r, rng);
      for (const auto& l : locals) {
        CHECK((a * b).project(l.ring) == a.project(l.ring) * b.project(l.ring));
        CHECK((a + b).project(l.ring) == a.project(l.ring) + b.project(l.ring));
      }
      const InvertResult ia = try_invert(a);
      if (ia.kind == InvertResult::Kind::Inverse) CHECK((a * ia.inverse).is_one());
    }
  }
}
