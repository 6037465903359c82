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

#include "hf/ff_factor.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace hf {

namespace {

constexpr std::uint32_t kPeelLimit = 32;

Poly var_poly(const Poly& like) { return Poly::monomial(like.field(), like.field()->one(), 1, like.var()); }

Poly one_poly(const Poly& like) { return Poly::constant(like.field(), like.field()->one(), like.var()); }

// f(T) = g(T^p) -> g^(1/p) coefficientwise.
Poly pth_root_poly(const Poly& f) {
  const Field& k = *f.field();
  const std::size_t p = k.characteristic();
  std::vector<Fe> c;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) c.push_back(k.pth_root(f.coeff(i)));
  return Poly(f.field(), std::move(c), f.var());
}

// T^(Q^e) mod f by repeated Q-th powering.
Poly frobenius_power_of_t(const Poly& f, std::size_t e) {
  Poly h = divrem(var_poly(f), f).second;
  for (std::size_t i = 0; i < e; ++i) h = powmod(h, f.field()->size(), f);
  return h;
}

void equal_degree(const Poly& g, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const Field& k = *g.field();
  const std::uint64_t qsize = k.size();
  std::uniform_int_distribution<std::uint32_t> coef(0, static_cast<std::uint32_t>(qsize - 1));
  for (;;) {
    std::vector<Fe> c(g.degree());
    for (auto& x : c) x = Fe{coef(rng)};
    const Poly a(g.field(), c, g.var());
    if (a.degree() < 1) continue;
    Poly b;
    if (k.characteristic() == 2) {
      // Trace to F2 of a over the degree-d extension.
      const std::size_t m = static_cast<std::size_t>(k.degree()) * static_cast<std::size_t>(d);
      Poly term = a, acc = a;
      for (std::size_t i = 1; i < m; ++i) {
        term = powmod(term, 2, g);
        acc = acc + term;
      }
      b = acc;
    } else {
      // a^((Q^d - 1)/2) = (prod_i a^(Q^i))^((Q - 1)/2).
      Poly ai = a, norm = one_poly(g);
      for (int i = 0; i < d; ++i) {
        norm = divrem(norm * ai, g).second;
        ai = powmod(ai, qsize, g);
      }
      b = powmod(norm, (qsize - 1) / 2, g) - one_poly(g);
    }
    const Poly h = gcd(b, g);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree(h, d, rng, out);
      equal_degree(exact_div(g, h), d, rng, out);
      return;
    }
  }
}

// Factors of a monic squarefree polynomial.
std::vector<Poly> factor_squarefree(Poly f, std::mt19937_64& rng) {
  std::vector<Poly> out;
  const Field& k = *f.field();
  if (k.size() <= kPeelLimit) {
    for (std::uint32_t v = 0; v < k.size() && f.degree() > 0; ++v) {
      if (f.eval(Fe{v}) != Fe{}) continue;
      const Poly lin = Poly::linear_root(f.field(), Fe{v}, f.var());
      out.push_back(lin);
      f = exact_div(f, lin);
    }
  }
  Poly h = divrem(var_poly(f), f.degree() > 0 ? f : one_poly(f)).second;
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = powmod(h, k.size(), f);
    const Poly g = gcd(h - var_poly(f), f);
    if (g.degree() > 0) {
      equal_degree(g, d, rng, out);
      f = exact_div(f, g);
      h = divrem(h, f).second;
    }
  }
  if (f.degree() > 0) out.push_back(f);
  return out;
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().rbegin(), a.coeffs().rend(), b.coeffs().rbegin(), b.coeffs().rend());
}

}  // namespace

std::vector<FactorMult> squarefree_decomposition(const Poly& f_in) {
  if (f_in.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "cannot factor the zero polynomial");
  const Poly f = f_in.monic();
  std::vector<FactorMult> out;
  if (f.degree() <= 0) return out;
  const int p = static_cast<int>(f.field()->characteristic());
  Poly c = gcd(f, f.derivative());
  Poly w = exact_div(f, c);
  for (int i = 1; w.degree() > 0; ++i) {
    const Poly y = gcd(w, c);
    const Poly z = exact_div(w, y);
    if (z.degree() > 0) out.push_back({z, i});
    w = y;
    c = exact_div(c, y);
  }
  if (c.degree() > 0) {
    for (const FactorMult& fm : squarefree_decomposition(pth_root_poly(c))) out.push_back({fm.factor, fm.mult * p});
  }
  return out;
}

std::vector<FactorMult> factor_over_ff(const Poly& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<FactorMult> out;
  for (const FactorMult& sq : squarefree_decomposition(f)) {
    for (const Poly& g : factor_squarefree(sq.factor, rng)) out.push_back({g, sq.mult});
  }
  std::sort(out.begin(), out.end(), [](const FactorMult& a, const FactorMult& b) {
    if (a.factor == b.factor) return a.mult < b.mult;
    return poly_less(a.factor, b.factor);
  });
  // Merge repeated irreducibles from different squarefree layers.
  std::vector<FactorMult> merged;
  for (const FactorMult& fm : out) {
    if (!merged.empty() && merged.back().factor == fm.factor) {
      merged.back().mult += fm.mult;
    } else {
      merged.push_back(fm);
    }
  }
  return merged;
}

bool is_irreducible_ff(const Poly& f_in) {
  if (f_in.degree() < 1) throw Error(ErrorKind::InvalidArgument, "irreducibility needs positive degree");
  const Poly f = f_in.monic();
  const std::size_t n = static_cast<std::size_t>(f.degree());
  const Poly t = divrem(var_poly(f), f).second;
  if (!(frobenius_power_of_t(f, n) == t)) return false;
  for (std::uint64_t rho : prime_factors(n)) {
    const Poly h = frobenius_power_of_t(f, n / rho);
    if (gcd(h - t, f).degree() != 0) return false;
  }
  return true;
}

std::vector<Fe> roots_over_ff(const Poly& f, std::uint64_t seed) {
  std::vector<Fe> roots;
  for (const FactorMult& fm : factor_over_ff(f, seed)) {
    if (fm.factor.degree() == 1) roots.push_back(f.field()->neg(fm.factor.coeff(0)));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace hf
