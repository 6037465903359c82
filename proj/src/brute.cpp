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

#include "hf/brute.hpp"

#include <algorithm>

namespace hf {

namespace {

using Digits = std::vector<std::vector<Fe>>;  // [coefficient][power of x]

class Enumerator {
 public:
  Enumerator(const TPoly& g, std::size_t r, const std::vector<int>& bounds)
      : f_(g.field()), g_(g), r_(r), bounds_(bounds), h_(r) {
    depth_ = 0;
    for (int b : bounds) depth_ = std::max(depth_, b + 1);
    for (std::size_t i = 0; i < r; ++i) h_[i].assign(depth_, Fe{});
    const int s = g.degree();
    gs_.resize(s + 1);
    for (int d = 0; d <= s; ++d) {
      gs_[d].assign(depth_, Fe{});
      const Poly& num = g.coeff(d).num();
      for (int j = 0; j < depth_; ++j) gs_[d][j] = num.coeff(j);
    }
  }

  std::vector<TPoly> run() {
    level(0);
    return std::move(found_);
  }

 private:
  void level(int j) {
    if (j == depth_) {
      accept();
      return;
    }
    digit(j, 0);
  }

  // Chooses the x^j digit of coefficients i, i+1, ...
  void digit(int j, std::size_t i) {
    if (i == r_) {
      if (++nodes_ > kOracleNodeLimit) throw Error(ErrorKind::SearchSpaceTooLarge, "oracle search exceeds its limit");
      if (divides_mod(j + 1)) level(j + 1);
      return;
    }
    if (bounds_[i] < j) {
      digit(j, i + 1);
      return;
    }
    for (std::uint32_t v = 0; v < f_->size(); ++v) {
      h_[i][j] = f_->element(v);
      digit(j, i + 1);
    }
    h_[i][j] = Fe{};
  }

  // G mod H vanishes modulo x^len.
  bool divides_mod(int len) const {
    const int s = static_cast<int>(gs_.size()) - 1;
    Digits rem(s + 1);
    for (int d = 0; d <= s; ++d) rem[d].assign(gs_[d].begin(), gs_[d].begin() + len);
    for (int d = s; d >= static_cast<int>(r_); --d) {
      const std::vector<Fe> c = rem[d];
      for (std::size_t i = 0; i < r_; ++i) {
        std::vector<Fe>& out = rem[d - r_ + i];
        for (int a = 0; a < len; ++a) {
          if (c[a] == Fe{}) continue;
          for (int b = 0; a + b < len; ++b) out[a + b] = f_->sub(out[a + b], f_->mul(c[a], h_[i][b]));
        }
      }
      rem[d].assign(len, Fe{});
    }
    for (std::size_t i = 0; i < r_; ++i) {
      for (int a = 0; a < len; ++a) {
        if (rem[i][a] != Fe{}) return false;
      }
    }
    return true;
  }

  void accept() {
    std::vector<RatFunc> c;
    for (std::size_t i = 0; i < r_; ++i) c.emplace_back(Poly(f_, h_[i]));
    c.push_back(RatFunc::constant(f_, f_->one()));
    TPoly h(f_, std::move(c));
    if (tpoly_divrem(g_, h).second.is_zero()) found_.push_back(std::move(h));
  }

  FieldPtr f_;
  const TPoly& g_;
  std::size_t r_;
  std::vector<int> bounds_;
  Digits h_;
  Digits gs_;
  int depth_ = 0;
  std::uint64_t nodes_ = 0;
  std::vector<TPoly> found_;
};

void require_polynomial(const TPoly& g) {
  if (!g.is_monic()) throw Error(ErrorKind::NotMonic, "oracle needs a monic polynomial");
  if (!g.has_polynomial_coefficients()) {
    throw Error(ErrorKind::InvalidArgument, "oracle needs polynomial coefficients in x");
  }
}

// ceil((r - j) * max_i deg(a_i) / (s - i)) for each j < r.
std::vector<int> degree_bounds(const TPoly& g, std::size_t r) {
  const int s = g.degree();
  std::int64_t num = 0, den = 1;
  for (int i = 0; i < s; ++i) {
    const int d = g.coeff(i).num().degree();
    if (d > 0 && d * den > num * (s - i)) {
      num = d;
      den = s - i;
    }
  }
  std::vector<int> out;
  for (std::size_t j = 0; j < r; ++j) {
    const std::int64_t n = static_cast<std::int64_t>(r - j) * num;
    out.push_back(static_cast<int>((n + den - 1) / den));
  }
  return out;
}

}  // namespace

std::vector<TPoly> oracle_factor(const TPoly& g, std::size_t r, const std::vector<int>& bounds) {
  require_polynomial(g);
  if (bounds.size() != r) throw Error(ErrorKind::InvalidArgument, "one degree bound per coefficient");
  if (r == 0 || static_cast<int>(r) > g.degree()) return {};
  if (static_cast<int>(r) == g.degree()) return {g};
  std::vector<TPoly> out = Enumerator(g, r, bounds).run();
  std::sort(out.begin(), out.end(), [](const TPoly& a, const TPoly& b) { return a.to_string() < b.to_string(); });
  return out;
}

std::vector<TPoly> oracle_factorization(const TPoly& g) {
  require_polynomial(g);
  std::vector<TPoly> out;
  TPoly cur = g;
  while (cur.degree() > 0) {
    bool split = false;
    for (std::size_t r = 1; 2 * r <= static_cast<std::size_t>(cur.degree()) && !split; ++r) {
      const std::vector<TPoly> f = oracle_factor(cur, r, degree_bounds(cur, r));
      if (f.empty()) continue;
      // A least-degree divisor is irreducible.
      out.push_back(f.front());
      cur = tpoly_divrem(cur, f.front()).first;
      split = true;
    }
    if (!split) {
      out.push_back(cur);
      break;
    }
  }
  std::sort(out.begin(), out.end(), [](const TPoly& a, const TPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.to_string() < b.to_string();
  });
  return out;
}

bool oracle_absolute_irreducible(const TPoly& g, std::uint32_t max_ext) {
  require_polynomial(g);
  const std::size_t s = static_cast<std::size_t>(g.degree());
  if (max_ext == 0) max_ext = static_cast<std::uint32_t>(s);
  for (std::size_t r = 1; 2 * r <= s; ++r) {
    const std::vector<int> bounds = degree_bounds(g, r);
    // A least-degree absolute factor and its e conjugates over k are
    // distinct divisors of G, so e * r <= s.
    const std::uint32_t top = std::min<std::uint32_t>(max_ext, static_cast<std::uint32_t>(s / r));
    for (std::uint32_t e = 1; e <= top; ++e) {
      const FieldPtr f = e == 1 ? g.field() : Field::extension_of(g.field(), e);
      if (!oracle_factor(g.embed_into(f), r, bounds).empty()) return false;
    }
  }
  return true;
}

}  // namespace hf
