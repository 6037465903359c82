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

#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "hf/parse.hpp"
#include "hf/restricted.hpp"

using namespace hf;

namespace {

const char* kWorkedG = "T^4 + (x+1)*T^3 + (x^2+1)*T^2 + (x^3+x^2+1)*T + (x^2+x)";

std::set<std::string> strings_of(const std::vector<TPoly>& v) {
  std::set<std::string> out;
  for (const auto& f : v) out.insert(f.to_string());
  return out;
}

RatFunc eval_at(const TPoly& g, const RatFunc& x) {
  RatFunc acc(g.field());
  for (int i = g.degree(); i >= 0; --i) acc = acc * x + g.coeff(i);
  return acc;
}

// All rho in span_k(1, x, ..., x^deg) with G(rho) = 0, by enumeration.
std::set<std::string> brute_roots(const TPoly& g, int deg) {
  const FieldPtr& k = g.field();
  std::size_t total = 1;
  for (int i = 0; i <= deg; ++i) total *= k->size();
  std::set<std::string> out;
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::vector<Fe> c;
    std::size_t v = idx;
    for (int i = 0; i <= deg; ++i, v /= k->size()) c.push_back(k->element(static_cast<std::uint32_t>(v % k->size())));
    const RatFunc rho{Poly(k, c)};
    if (eval_at(g, rho).is_zero()) out.insert(rho.to_string());
  }
  return out;
}

Poly random_poly(std::mt19937& rng, const FieldPtr& k, int deg) {
  std::uniform_int_distribution<std::uint32_t> d(0, k->size() - 1);
  std::vector<Fe> c;
  for (int i = 0; i <= deg; ++i) c.push_back(Fe{d(rng)});
  return Poly(k, c);
}

bool separable_ok(const TPoly& g) {
  try {
    make_separable_check(g);
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

TEST_CASE("worked example finds both linear factors") {
  auto f2 = Field::prime(2);
  const TPoly g = parse_tpoly(f2, kWorkedG);
  const SubspaceSpec spec{1, {parse_basis(f2, "1, x")}};
  const PlaceData place = make_place(f2, f2, f2->one());
  const FactorReport rep = restricted_factor(g, spec, place);
  CHECK(rep.outcome == FactorReport::Outcome::FactorsFound);
  CHECK(rep.delta == 1);
  CHECK(rep.m == 2);
  CHECK(rep.q == 4);
  REQUIRE_FALSE(rep.trace.empty());
  CHECK(rep.trace.front().find("\"H0\":\"T^2 + T\"") != std::string::npos);
  for (const FoundFactor& f : rep.factors) {
    CHECK(f.field.get() == f2.get());
    CHECK(f.field_of_definition == "GF(2)");
    CHECK(tpoly_divrem(g, f.h).second.is_zero());
    CHECK(f.constants.back() == f.constants_field->one());
  }
  const std::set<std::string> want{parse_tpoly(f2, "T+x").to_string(), parse_tpoly(f2, "T+x+1").to_string()};
  std::vector<TPoly> got;
  for (const auto& f : rep.factors) got.push_back(f.h);
  for (const auto& s : strings_of(got)) CHECK(want.count(s) == 1);

  CHECK(strings_of(collect_all_restricted_factors(g, spec, place)) == want);
}

TEST_CASE("constant coefficients unravel to the base case") {
  auto f2 = Field::prime(2);
  const TPoly g = parse_tpoly(f2, "T^2+T+1");
  const SubspaceSpec spec{1, {parse_basis(f2, "1")}};
  const PlaceData place = find_place(g);

  const FactorReport over_k = restricted_factor(g, spec, place, {true});
  CHECK(over_k.outcome == FactorReport::Outcome::NoFactorCertificate);
  for (const LeafRecord& l : over_k.leaves) CHECK(l.rank == 1);
  CHECK_FALSE(over_k.all_full_rank());

  const FactorReport absolute = restricted_factor(g, spec, place, {false});
  CHECK(absolute.outcome == FactorReport::Outcome::FactorsFound);
  // One local ring, residue field F4: one of the two conjugate roots.
  REQUIRE(absolute.factors.size() == 1);
  for (const FoundFactor& f : absolute.factors) {
    CHECK(f.field->size() == 4);
    CHECK(f.field_of_definition == "GF(2^2)");
    CHECK(tpoly_divrem(g.embed_into(f.field), f.h).second.is_zero());
  }
  CHECK(collect_all_restricted_factors(g, spec, place).empty());
}

TEST_CASE("quadratic factors of the worked example") {
  auto f2 = Field::prime(2);
  const TPoly g = parse_tpoly(f2, kWorkedG);
  const SubspaceSpec spec = default_subspaces(g, 2);
  CHECK(spec.spaces[0] == parse_basis(f2, "1, x, x^2"));
  const FactorReport rep = restricted_factor(g, spec, find_place(g));
  const std::set<std::string> allowed{parse_tpoly(f2, "T^2+T+x^2+x").to_string(),
                                      parse_tpoly(f2, "T^2+x*T+1").to_string()};
  CHECK_FALSE(rep.factors.empty());
  for (const FoundFactor& f : rep.factors) {
    CHECK(allowed.count(f.h.to_string()) == 1);
    CHECK(tpoly_divrem(g, f.h).second.is_zero());
  }
  CHECK(rep.leaves.size() <= 4);
  for (const auto& s : strings_of(collect_all_restricted_factors(g, spec, find_place(g)))) CHECK(allowed.count(s) == 1);
}

TEST_CASE("input contract") {
  auto f2 = Field::prime(2);
  const TPoly g = parse_tpoly(f2, kWorkedG);
  const PlaceData one = make_place(f2, f2, f2->one());
  auto kind_of = [&](const SubspaceSpec& s, const PlaceData& p) {
    try {
      restricted_factor(g, s, p);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  CHECK(kind_of({1, {parse_basis(f2, "x")}}, one) == ErrorKind::InvalidSubspace);
  CHECK(kind_of({1, {parse_basis(f2, "1, x, x+1")}}, one) == ErrorKind::InvalidSubspace);
  CHECK(kind_of({1, {parse_basis(f2, "1, 1/(x+1)")}}, one) == ErrorKind::PlaceInvalid);
  CHECK(kind_of({1, {parse_basis(f2, "1, x")}}, make_place(f2, f2, Fe{})) == ErrorKind::PlaceInvalid);
  CHECK_THROWS_AS(normalize_spec(g, {4, {{}, {}, {}, {}}}), Error);
  // 1 moves to the front.
  CHECK(normalize_spec(g, {1, {parse_basis(f2, "x, 1")}}).spaces[0] == parse_basis(f2, "1, x"));
}

TEST_CASE("span coordinates and norms") {
  auto f3 = Field::prime(3);
  const auto basis = parse_basis(f3, "1, x, 1/(x+1)");
  const auto c = span_coordinates(parse_ratfunc(f3, "2 + x + 2/(x+1)"), basis);
  REQUIRE(c.has_value());
  CHECK(*c == std::vector<Fe>{f3->from_int(2), f3->one(), f3->from_int(2)});
  CHECK_FALSE(span_coordinates(parse_ratfunc(f3, "x^2"), basis).has_value());
  CHECK(span_coordinates(RatFunc(f3), basis).has_value());

  auto f2 = Field::prime(2);
  auto f4 = Field::extension_of(f2, 2);
  const Fe z = f4->generator();
  const TPoly lin(f4, {RatFunc::constant(f4, z), RatFunc::constant(f4, f4->one())});
  CHECK(norm_to_k(lin, f2) == parse_tpoly(f2, "T^2+T+1"));
  const TPoly xz(f4, {RatFunc(Poly(f4, {z, f4->one()})), RatFunc::constant(f4, f4->one())});
  CHECK(norm_to_k(xz, f2) == parse_tpoly(f2, "T^2 + T + x^2 + x + 1"));
}

TEST_CASE("factorisation over K") {
  auto f2 = Field::prime(2);
  const Factorization fac = factor_over_K(parse_tpoly(f2, kWorkedG));
  CHECK(strings_of(fac.factors) == strings_of({parse_tpoly(f2, "T+x"), parse_tpoly(f2, "T+x+1"),
                                               parse_tpoly(f2, "T^2+x*T+1")}));
  CHECK(factor_over_K(parse_tpoly(f2, "T^2+T+1")).factors.size() == 1);
  CHECK(factor_over_K(parse_tpoly(f2, "T^2+T+x^2+x+1")).factors.size() == 1);

  std::mt19937 rng(31);
  for (auto k : {Field::prime(2), Field::prime(3)}) {
    for (int it = 0; it < 12; ++it) {
      TPoly g = TPoly::constant(RatFunc::constant(k, k->one()));
      for (int deg : {1, 2}) {
        std::vector<RatFunc> c;
        for (int i = 0; i < deg; ++i) c.emplace_back(random_poly(rng, k, 2));
        c.push_back(RatFunc::constant(k, k->one()));
        g = g * TPoly(k, c);
      }
      if (!separable_ok(g)) continue;
      const Factorization f = factor_over_K(g);
      TPoly prod = TPoly::constant(RatFunc::constant(k, k->one()));
      for (const TPoly& h : f.factors) prod = prod * h;
      CHECK(prod == g);
      CHECK(f.factors.size() >= 2);
    }
  }
}

TEST_CASE("absolute irreducibility") {
  auto f2 = Field::prime(2);
  const IrreducibilityResult a = absolutely_irreducible(parse_tpoly(f2, "T^2+T+1"));
  CHECK_FALSE(a.absolutely_irreducible);
  REQUIRE(a.witness.has_value());
  CHECK(a.witness->field->size() == 4);
  CHECK(absolutely_irreducible(parse_tpoly(f2, "T^2+x*T+1")).absolutely_irreducible);
  CHECK(absolutely_irreducible(parse_tpoly(f2, "T+x")).absolutely_irreducible);
  // Irreducible over F2(x) but a norm from F4(x).
  CHECK_FALSE(absolutely_irreducible(parse_tpoly(f2, "T^2 + T + x^2 + x + 1")).absolutely_irreducible);
}

TEST_CASE("roots in a span agree with enumeration") {
  std::mt19937 rng(77);
  for (auto k : {Field::prime(2), Field::prime(3)}) {
    const auto basis = parse_basis(k, "1, x, x^2");
    int checked = 0;
    for (int it = 0; it < 40 && checked < 12; ++it) {
      const RatFunc rho{random_poly(rng, k, 2)};
      std::vector<RatFunc> c{RatFunc(random_poly(rng, k, 3)), RatFunc(random_poly(rng, k, 1)),
                             RatFunc::constant(k, k->one())};
      const TPoly g = TPoly(k, {-rho, RatFunc::constant(k, k->one())}) * TPoly(k, c);
      if (!separable_ok(g)) continue;
      ++checked;
      std::set<std::string> got;
      for (const RatFunc& r : roots_in_span(g, basis)) got.insert(r.to_string());
      CHECK(got == brute_roots(g, 2));
      CHECK(got.count(rho.to_string()) == 1);
    }
    CHECK(checked >= 6);
  }
}

TEST_CASE("truncation order escalates past a spurious kernel vector") {
  auto f2 = Field::prime(2);
  const TPoly g = parse_tpoly(f2, "T^3 + x^2*T^2 + T + 1");
  const SubspaceSpec spec{1, {parse_basis(f2, "1, x, x^2")}};
  const PlaceData place = make_place(f2, f2, Fe{});
  // At q = 4 a constant kernel vector survives whose candidate does not divide G.
  const FactorReport low = restricted_factor(g, spec, place, {false, 4});
  CHECK_FALSE(low.conclusive());
  const FactorReport rep = restricted_factor(g, spec, place, {false});
  CHECK(rep.initial_q == 4);
  CHECK(rep.q == 8);
  CHECK(rep.conclusive());
  CHECK(rep.factors.empty());
  const FactorReport over_k = restricted_factor(g, spec, place);
  CHECK(over_k.q == 8);
  CHECK(over_k.all_full_rank());
  CHECK(absolutely_irreducible(g).absolutely_irreducible);
}
