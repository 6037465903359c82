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

#include "hf/hasse.hpp"

#include <algorithm>

namespace hf {

namespace {

ArtinElem times_t(const ArtinElem& e) {
  const std::size_t q = e.ring()->q();
  std::vector<Fe> shifted(e.data().size() + q);
  std::copy(e.data().begin(), e.data().end(), shifted.begin() + q);
  return ArtinElem::from_blocks(e.ring(), std::move(shifted));
}

// D^(a)(c) for a < q of one series.
std::vector<std::vector<Fe>> all_hasse(const SeriesRing& s, std::span<const Fe> c) {
  std::vector<std::vector<Fe>> out(s.q(), std::vector<Fe>(s.q()));
  for (std::size_t a = 0; a < s.q(); ++a) s.hasse(out[a], c, a);
  return out;
}

// Sum over a + b = i of D^(a)(coefficient of t^j) * D^(b)(t^j), over j <= n.
ArtinElem modulus_hasse(const DerivTable& table, const std::vector<std::vector<std::vector<Fe>>>& da, std::size_t i) {
  ArtinElem acc(table.ring());
  for (std::size_t j = 0; j < da.size(); ++j) {
    for (std::size_t a = 0; a <= i; ++a) {
      if (table.ring()->s().is_zero(da[j][a])) continue;
      acc = acc + table.power(j, i - a).scaled(da[j][a]);
    }
  }
  return acc;
}

std::vector<std::vector<std::vector<Fe>>> modulus_derivs(const ArtinRing& ring) {
  std::vector<std::vector<std::vector<Fe>>> da;
  for (std::size_t j = 0; j <= ring.degree(); ++j) da.push_back(all_hasse(ring.s(), ring.modulus_coeff(j)));
  return da;
}

}  // namespace

DerivTable DerivTable::build(const ArtinRingPtr& ring, std::size_t max_power) {
  const SeriesRing& s = ring->s();
  const Field& f = s.f();
  const std::size_t n = ring->degree(), q = ring->q();
  const std::size_t top = std::max(max_power, n);

  DerivTable tab;
  tab.ring_ = ring;

  std::vector<Fe> gp_blocks(n * q);
  for (std::size_t j = 1; j <= n; ++j) {
    auto c = ring->modulus_coeff(j);
    const Fe jj = f.from_int(static_cast<std::int64_t>(j));
    for (std::size_t k = 0; k < q; ++k) gp_blocks[(j - 1) * q + k] = f.mul(c[k], jj);
  }
  const InvertResult inv = try_invert(ArtinElem(ring, std::move(gp_blocks)));
  if (inv.kind != InvertResult::Kind::Inverse) {
    throw Error(ErrorKind::NonUnitDerivativePivot, "G'(t) is not a unit in " + ring->g0().to_string());
  }
  tab.gp_inv_ = inv.inverse;

  tab.p_.assign(top + 1, std::vector<ArtinElem>(q, ArtinElem(ring)));
  tab.p_[0][0] = ArtinElem::one(ring);
  for (std::size_t j = 1; j <= top; ++j) tab.p_[j][0] = times_t(tab.p_[j - 1][0]);

  const auto da = modulus_derivs(*ring);
  for (std::size_t i = 1; i < q; ++i) {
    // Everything except the terms carrying the unknown D^(i)(t).
    for (std::size_t j = 2; j <= top; ++j) {
      ArtinElem acc = times_t(tab.p_[j - 1][i]);
      for (std::size_t c = 1; c < i; ++c) {
        if (tab.p_[1][c].is_zero() || tab.p_[j - 1][i - c].is_zero()) continue;
        acc = acc + tab.p_[1][c] * tab.p_[j - 1][i - c];
      }
      tab.p_[j][i] = std::move(acc);
    }
    const ArtinElem rest = modulus_hasse(tab, da, i);
    const ArtinElem d1 = -(rest * tab.gp_inv_);
    tab.p_[1][i] = d1;
    if (d1.is_zero()) continue;
    for (std::size_t j = 2; j <= top; ++j) {
      tab.p_[j][i] = tab.p_[j][i] + (d1 * tab.p_[j - 1][0]).scaled(f.from_int(static_cast<std::int64_t>(j)));
    }
  }
  if (!tab.certificate_holds()) {
    throw Error(ErrorKind::NonUnitDerivativePivot, "derivative table fails D(G(t)) = 0");
  }
  return tab;
}

bool DerivTable::certificate_holds() const {
  const auto da = modulus_derivs(*ring_);
  for (std::size_t i = 0; i < q(); ++i) {
    if (!modulus_hasse(*this, da, i).is_zero()) return false;
  }
  return true;
}

ArtinElem hasse_of_element(const DerivTable& table, std::size_t i, const ArtinElem& e) {
  if (e.ring() != table.ring()) throw Error(ErrorKind::RingMismatch, "element not in the table's ring");
  if (i >= table.q()) throw Error(ErrorKind::OrderOutOfRange, "Hasse order must be below q");
  const SeriesRing& s = table.ring()->s();
  ArtinElem acc(table.ring());
  std::vector<Fe> buf(s.q());
  for (std::size_t j = 0; j < table.ring()->degree(); ++j) {
    for (std::size_t a = 0; a <= i; ++a) {
      s.hasse(buf, e.coeff(j), a);
      if (s.is_zero(buf)) continue;
      acc = acc + table.power(j, i - a).scaled(buf);
    }
  }
  return acc;
}

WronskianMatrix build_wronskian(const DerivTable& table, const std::vector<PhiEntry>& phi) {
  const SeriesRing& s = table.ring()->s();
  const std::size_t q = table.q();
  WronskianMatrix m;
  m.ring = table.ring();
  m.rows.assign(q, std::vector<ArtinElem>(phi.size(), ArtinElem(table.ring())));
  for (std::size_t c = 0; c < phi.size(); ++c) {
    const PhiEntry& e = phi[c];
    if (e.power > table.max_power()) throw Error(ErrorKind::InvalidArgument, "power of t beyond the table");
    if (std::find(m.labels.begin(), m.labels.end(), e.label) != m.labels.end()) {
      throw Error(ErrorKind::InvalidArgument, "duplicate column label " + e.label);
    }
    m.labels.push_back(e.label);
    std::vector<Fe> h = e.h;
    h.resize(q);
    const auto dh = all_hasse(s, h);
    for (std::size_t l = 0; l < q; ++l) {
      ArtinElem acc(table.ring());
      for (std::size_t a = 0; a <= l; ++a) {
        if (s.is_zero(dh[a])) continue;
        const ArtinElem& pw = table.power(e.power, l - a);
        if (pw.is_zero()) continue;
        acc = acc + pw.scaled(dh[a]);
      }
      m.rows[l][c] = std::move(acc);
    }
  }
  return m;
}

Poly poly_hasse(std::size_t i, const Poly& a) {
  if (a.degree() < static_cast<int>(i)) return Poly(a.field(), {}, a.var());
  const Field& f = *a.field();
  const LucasBinomial binom(f.characteristic());
  std::vector<Fe> c(a.coeffs().size() - i);
  for (std::size_t n = i; n < a.coeffs().size(); ++n) {
    const std::uint32_t b = binom(n, i);
    if (b != 0) c[n - i] = f.mul(a.coeff(n), f.from_int(b));
  }
  return Poly(a.field(), std::move(c), a.var());
}

namespace {

// D^(0..i)(f) using D^(i)(a) = sum over c of D^(c)(b) D^(i-c)(f) for f = a/b.
std::vector<RatFunc> ratfunc_hasse_upto(std::size_t i, const RatFunc& f) {
  std::vector<RatFunc> out;
  const RatFunc den(f.den());
  const RatFunc den_inv = den.inv();
  for (std::size_t k = 0; k <= i; ++k) {
    RatFunc v(poly_hasse(k, f.num()));
    for (std::size_t c = 1; c <= k; ++c) {
      const Poly dc = poly_hasse(c, f.den());
      if (dc.is_zero()) continue;
      v = v - RatFunc(dc) * out[k - c];
    }
    out.push_back(v * den_inv);
  }
  return out;
}

}  // namespace

RatFunc ratfunc_hasse(std::size_t i, const RatFunc& f) { return ratfunc_hasse_upto(i, f).back(); }

WronskianRank wronskian_rank_over_K(const std::vector<RatFunc>& f, std::optional<std::size_t> order_cap) {
  WronskianRank res;
  if (f.empty()) return res;
  std::size_t cap = 0;
  if (order_cap) {
    cap = *order_cap;
  } else {
    Poly l = f[0].den();
    for (const RatFunc& g : f) l = exact_div(l * g.den(), gcd(l, g.den()));
    for (const RatFunc& g : f) {
      if (g.is_zero()) continue;
      cap = std::max<std::size_t>(cap, g.num().degree() + l.degree() - g.den().degree());
    }
  }
  std::vector<std::vector<RatFunc>> derivs;
  for (const RatFunc& g : f) derivs.push_back(ratfunc_hasse_upto(cap, g));

  // Echelon basis of accepted rows, each normalised at its pivot column.
  std::vector<std::pair<std::size_t, std::vector<RatFunc>>> basis;
  for (std::size_t i = 0; i <= cap && basis.size() < f.size(); ++i) {
    std::vector<RatFunc> row;
    for (const auto& d : derivs) row.push_back(d[i]);
    for (const auto& [piv, b] : basis) {
      if (row[piv].is_zero()) continue;
      const RatFunc c = row[piv];
      for (std::size_t j = 0; j < row.size(); ++j) row[j] = row[j] - c * b[j];
    }
    auto it = std::find_if(row.begin(), row.end(), [](const RatFunc& r) { return !r.is_zero(); });
    if (it == row.end()) continue;
    const std::size_t piv = static_cast<std::size_t>(it - row.begin());
    const RatFunc inv = row[piv].inv();
    for (auto& r : row) r = r * inv;
    basis.emplace_back(piv, std::move(row));
    res.orders.push_back(i);
  }
  res.rank = basis.size();
  return res;
}

}  // namespace hf
