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

#include "hf/artin.hpp"

#include <algorithm>
#include <sstream>

namespace hf {

namespace {

// Polynomials in T over S_q as flat block vectors. The zero polynomial has no
// blocks.
using Blocks = std::vector<Fe>;

std::span<Fe> block(Blocks& v, std::size_t q, std::size_t j) { return {v.data() + j * q, q}; }
std::span<const Fe> block(const Blocks& v, std::size_t q, std::size_t j) { return {v.data() + j * q, q}; }

void trim(const SeriesRing& s, Blocks& v) {
  const std::size_t q = s.q();
  while (!v.empty() && s.is_zero(block(std::as_const(v), q, v.size() / q - 1))) v.resize(v.size() - q);
}

Blocks sp_add(const SeriesRing& s, Blocks a, const Blocks& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t j = 0; j < b.size() / s.q(); ++j) s.add_to(block(a, s.q(), j), block(b, s.q(), j));
  trim(s, a);
  return a;
}

Blocks sp_sub(const SeriesRing& s, Blocks a, const Blocks& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t j = 0; j < b.size() / s.q(); ++j) s.sub_from(block(a, s.q(), j), block(b, s.q(), j));
  trim(s, a);
  return a;
}

Blocks sp_mul(const SeriesRing& s, const Blocks& a, const Blocks& b) {
  const std::size_t q = s.q();
  if (a.empty() || b.empty()) return {};
  const std::size_t na = a.size() / q, nb = b.size() / q;
  Blocks out((na + nb - 1) * q);
  for (std::size_t i = 0; i < na; ++i) {
    if (s.is_zero(block(a, q, i))) continue;
    for (std::size_t j = 0; j < nb; ++j) s.mul_acc(block(out, q, i + j), block(a, q, i), block(b, q, j));
  }
  trim(s, out);
  return out;
}

// Division by a polynomial whose leading block is exactly 1.
std::pair<Blocks, Blocks> sp_divrem_monic(const SeriesRing& s, Blocks a, const Blocks& b) {
  const std::size_t q = s.q();
  const std::size_t nb = b.size() / q;
  if (a.size() / q < nb) return {{}, std::move(a)};
  const std::size_t na = a.size() / q;
  Blocks quot((na - nb + 1) * q);
  for (std::size_t i = na; i-- > nb - 1;) {
    const std::size_t k = i - (nb - 1);
    std::vector<Fe> c(block(std::as_const(a), q, i).begin(), block(std::as_const(a), q, i).end());
    std::copy(c.begin(), c.end(), block(quot, q, k).begin());
    if (s.is_zero(c)) continue;
    for (std::size_t j = 0; j < nb; ++j) s.mul_sub(block(a, q, k + j), c, block(b, q, j));
  }
  a.resize((nb - 1) * q);
  trim(s, a);
  trim(s, quot);
  return {std::move(quot), std::move(a)};
}

Blocks lift(const SeriesRing& s, const Poly& p) {
  const std::size_t q = s.q();
  const Poly e = p.embed_into(s.ell());
  Blocks out(e.coeffs().size() * q);
  for (std::size_t j = 0; j < e.coeffs().size(); ++j) out[j * q] = e.coeff(j);
  return out;
}

Blocks one_blocks(const SeriesRing& s) {
  Blocks v(s.q());
  v[0] = s.f().one();
  return v;
}

}  // namespace

ArtinRingPtr ArtinRing::make(SeriesRingPtr series, std::vector<Fe> modulus, std::vector<std::string> path) {
  const std::size_t q = series->q();
  if (modulus.size() % q != 0 || modulus.size() < 2 * q) {
    throw Error(ErrorKind::InvalidArgument, "modulus must have positive degree");
  }
  const std::size_t n = modulus.size() / q - 1;
  std::span<const Fe> lead(modulus.data() + n * q, q);
  if (lead[0] != series->f().one() || !std::all_of(lead.begin() + 1, lead.end(), [](Fe c) { return c == Fe{}; })) {
    throw Error(ErrorKind::NotMonic, "modulus must be monic");
  }
  auto r = std::shared_ptr<ArtinRing>(new ArtinRing());
  std::vector<Fe> c0(n + 1);
  for (std::size_t j = 0; j <= n; ++j) c0[j] = modulus[j * q];
  r->g0_ = Poly(series->ell(), std::move(c0), 'T');
  r->series_ = std::move(series);
  r->n_ = n;
  r->modulus_ = std::move(modulus);
  r->path_ = std::move(path);
  return r;
}

ArtinRingPtr ArtinRing::from_tpoly(SeriesRingPtr series, const TPoly& g) {
  if (!g.is_monic()) throw Error(ErrorKind::NotMonic, "G must be monic in T");
  const std::size_t q = series->q();
  std::vector<Fe> m((g.degree() + 1) * q);
  for (int j = 0; j <= g.degree(); ++j) {
    const std::vector<Fe> e = series->expand(g.coeff(j));
    std::copy(e.begin(), e.end(), m.begin() + j * q);
  }
  return make(std::move(series), std::move(m));
}

std::span<const Fe> ArtinRing::modulus_coeff(std::size_t j) const { return {modulus_.data() + j * q(), q()}; }

std::vector<Fe> ArtinRing::reduce(std::vector<Fe> poly) const {
  const std::size_t qq = q();
  const std::size_t blocks = poly.size() / qq;
  for (std::size_t i = blocks; i-- > n_;) {
    std::span<const Fe> top(poly.data() + i * qq, qq);
    if (series_->is_zero(top)) continue;
    std::vector<Fe> c(top.begin(), top.end());
    for (std::size_t j = 0; j < n_; ++j) {
      series_->mul_sub(std::span<Fe>(poly.data() + (i - n_ + j) * qq, qq), c, modulus_coeff(j));
    }
  }
  poly.resize(n_ * qq);
  return poly;
}

void ArtinRing::mul(std::span<Fe> out, std::span<const Fe> a, std::span<const Fe> b) const {
  const std::size_t qq = q();
  std::vector<Fe> prod((2 * n_ - 1) * qq);
  for (std::size_t i = 0; i < n_; ++i) {
    std::span<const Fe> ai = a.subspan(i * qq, qq);
    if (series_->is_zero(ai)) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      series_->mul_acc(std::span<Fe>(prod.data() + (i + j) * qq, qq), ai, b.subspan(j * qq, qq));
    }
  }
  const std::vector<Fe> r = reduce(std::move(prod));
  std::copy(r.begin(), r.end(), out.begin());
}

ArtinElem::ArtinElem(ArtinRingPtr ring) : ring_(std::move(ring)), data_(ring_->elem_size()) {}

ArtinElem::ArtinElem(ArtinRingPtr ring, std::vector<Fe> data) : ring_(std::move(ring)), data_(std::move(data)) {
  if (data_.size() != ring_->elem_size()) throw Error(ErrorKind::InvalidArgument, "element size mismatch");
}

ArtinElem ArtinElem::one(ArtinRingPtr ring) {
  ArtinElem e(std::move(ring));
  e.data_[0] = e.ring_->s().f().one();
  return e;
}

ArtinElem ArtinElem::t(ArtinRingPtr ring) {
  std::vector<Fe> b(2 * ring->q());
  b[ring->q()] = ring->s().f().one();
  return from_blocks(std::move(ring), std::move(b));
}

ArtinElem ArtinElem::scalar(ArtinRingPtr ring, std::span<const Fe> series) {
  ArtinElem e(std::move(ring));
  std::copy(series.begin(), series.end(), e.data_.begin());
  return e;
}

ArtinElem ArtinElem::from_blocks(ArtinRingPtr ring, std::vector<Fe> blocks) {
  if (blocks.size() % ring->q() != 0) throw Error(ErrorKind::InvalidArgument, "partial block");
  if (blocks.size() < ring->elem_size()) blocks.resize(ring->elem_size());
  std::vector<Fe> r = ring->reduce(std::move(blocks));
  return ArtinElem(std::move(ring), std::move(r));
}

std::span<const Fe> ArtinElem::coeff(std::size_t j) const { return {data_.data() + j * ring_->q(), ring_->q()}; }

bool ArtinElem::is_zero() const { return ring_->s().is_zero(data_); }

bool ArtinElem::is_one() const { return *this == one(ring_); }

Poly ArtinElem::residue() const {
  std::vector<Fe> c(ring_->degree());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = data_[j * ring_->q()];
  return Poly(ring_->s().ell(), std::move(c), 'T');
}

void ArtinElem::check_same(const ArtinElem& b) const {
  if (ring_ != b.ring_) throw Error(ErrorKind::RingMismatch, "elements belong to different rings");
}

ArtinElem ArtinElem::operator+(const ArtinElem& b) const {
  check_same(b);
  ArtinElem r = *this;
  const Field& f = ring_->s().f();
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = f.add(r.data_[i], b.data_[i]);
  return r;
}

ArtinElem ArtinElem::operator-(const ArtinElem& b) const {
  check_same(b);
  ArtinElem r = *this;
  const Field& f = ring_->s().f();
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = f.sub(r.data_[i], b.data_[i]);
  return r;
}

ArtinElem ArtinElem::operator-() const {
  ArtinElem r = *this;
  for (auto& c : r.data_) c = ring_->s().f().neg(c);
  return r;
}

ArtinElem ArtinElem::operator*(const ArtinElem& b) const {
  check_same(b);
  ArtinElem r(ring_);
  ring_->mul(r.data_, data_, b.data_);
  return r;
}

ArtinElem ArtinElem::scaled(std::span<const Fe> series) const {
  ArtinElem r(ring_);
  const std::size_t q = ring_->q();
  for (std::size_t j = 0; j < ring_->degree(); ++j) {
    ring_->s().mul_acc(std::span<Fe>(r.data_.data() + j * q, q), coeff(j), series);
  }
  return r;
}

ArtinElem ArtinElem::scaled(Fe c) const {
  ArtinElem r = *this;
  ring_->s().scale(r.data_, c);
  return r;
}

ArtinElem ArtinElem::project(const ArtinRingPtr& target) const {
  if (target->series() != ring_->series()) throw Error(ErrorKind::RingMismatch, "projection changes the series ring");
  return from_blocks(target, data_);
}

std::string ArtinElem::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = ring_->degree(); j-- > 0;) {
    if (ring_->s().is_zero(coeff(j))) continue;
    const Series c(ring_->series(), std::vector<Fe>(coeff(j).begin(), coeff(j).end()));
    const std::string cs = c.to_string();
    if (!first) os << " + ";
    first = false;
    if (j == 0) {
      os << cs;
      continue;
    }
    if (cs != "1") os << (cs.find(' ') != std::string::npos ? "(" + cs + ")" : cs) << "*";
    os << "t";
    if (j > 1) os << "^" << j;
  }
  if (first) os << "0";
  return os.str();
}

InvertResult try_invert(const ArtinElem& a) {
  InvertResult res;
  if (a.is_zero()) return res;
  const ArtinRingPtr& ring = a.ring();
  const Poly a0 = a.residue();
  const Xgcd g = xgcd(a0, ring->g0());
  if (g.g.degree() > 0) {
    res.kind = InvertResult::Kind::ZeroDivisor;
    res.witness = g.g.with_var('T');
    res.nilpotent = g.g.degree() == ring->g0().degree();
    return res;
  }
  // u a0 = 1 mod (X, G); lift by w <- w (2 - a w).
  const Poly u0 = divrem(g.u, ring->g0()).second;
  ArtinElem w = ArtinElem::from_blocks(ring, lift(ring->s(), u0.with_var('T')));
  const ArtinElem two = ArtinElem::one(ring).scaled(ring->s().f().from_int(2));
  for (std::size_t prec = 1; prec < ring->q(); prec *= 2) w = w * (two - a * w);
  if (!(a * w).is_one()) throw Error(ErrorKind::ZeroInversion, "inverse lift failed to verify");
  res.kind = InvertResult::Kind::Inverse;
  res.inverse = std::move(w);
  return res;
}

SplitRings hensel_split(const ArtinRingPtr& ring, const Poly& h0_in) {
  const SeriesRing& s = ring->s();
  const Poly h0 = h0_in.embed_into(s.ell()).with_var('T');
  if (!h0.is_monic() || h0.degree() < 1 || h0.degree() >= static_cast<int>(ring->degree())) {
    throw Error(ErrorKind::BadFactorization, "split factor must be monic of intermediate degree");
  }
  auto [e0, rem] = divrem(ring->g0(), h0);
  if (!rem.is_zero()) throw Error(ErrorKind::BadFactorization, h0.to_string() + " does not divide G0");
  const Xgcd bez = xgcd(e0, h0);
  if (bez.g.degree() != 0) throw Error(ErrorKind::NotCoprime, "split factors are not coprime");

  // Quadratic lifting of f = g h with s g + t h = 1; g lifts E0, h lifts H0.
  const Blocks& f = ring->modulus();
  Blocks g = lift(s, e0), h = lift(s, h0), sc = lift(s, bez.u), tc = lift(s, bez.v);
  trim(s, sc);
  trim(s, tc);
  const Blocks one = one_blocks(s);
  for (std::size_t prec = 1; prec < s.q(); prec *= 2) {
    const Blocks e = sp_sub(s, f, sp_mul(s, g, h));
    auto [qq, r] = sp_divrem_monic(s, sp_mul(s, sc, e), h);
    const Blocks g2 = sp_add(s, sp_add(s, g, sp_mul(s, tc, e)), sp_mul(s, qq, g));
    const Blocks h2 = sp_add(s, h, r);
    const Blocks b = sp_sub(s, sp_add(s, sp_mul(s, sc, g2), sp_mul(s, tc, h2)), one);
    auto [c, d] = sp_divrem_monic(s, sp_mul(s, sc, b), h2);
    sc = sp_sub(s, sc, d);
    tc = sp_sub(s, sp_sub(s, tc, sp_mul(s, tc, b)), sp_mul(s, c, g2));
    g = g2;
    h = h2;
  }
  Blocks check = sp_mul(s, g, h);
  Blocks ff = f;
  trim(s, ff);
  if (check != ff) throw Error(ErrorKind::BadFactorization, "Hensel lift does not reproduce the modulus");

  std::vector<std::string> hp = ring->path(), ep = ring->path();
  hp.push_back("H0=" + h0.to_string());
  ep.push_back("E0=" + e0.with_var('T').to_string());
  return {ArtinRing::make(ring->series(), std::move(h), std::move(hp)),
          ArtinRing::make(ring->series(), std::move(g), std::move(ep))};
}

std::vector<LocalRing> decompose_to_locals(const ArtinRingPtr& ring, const std::vector<Poly>& factors) {
  if (factors.empty()) throw Error(ErrorKind::BadFactorization, "no factors given");
  Poly prod = Poly::constant(ring->s().ell(), ring->s().f().one(), 'T');
  std::vector<Poly> fs;
  for (const Poly& p : factors) {
    const Poly pe = p.embed_into(ring->s().ell()).with_var('T');
    if (!pe.is_monic()) throw Error(ErrorKind::BadFactorization, "factors must be monic");
    fs.push_back(pe);
    prod = prod * pe;
  }
  if (!(prod == ring->g0())) throw Error(ErrorKind::BadFactorization, "factors do not multiply to G0");
  std::vector<LocalRing> out;
  ArtinRingPtr cur = ring;
  for (std::size_t i = 0; i + 1 < fs.size(); ++i) {
    SplitRings sp = hensel_split(cur, fs[i]);
    out.push_back({sp.h_ring, fs[i], residue_extension(fs[i])});
    cur = sp.e_ring;
  }
  out.push_back({cur, fs.back(), residue_extension(fs.back())});
  return out;
}

Fe constant_of(const ArtinElem& u, const LocalRing& local) {
  if (u.ring() != local.ring) throw Error(ErrorKind::RingMismatch, "element is not in this local ring");
  const Poly r = divrem(u.residue(), local.factor).second;
  return r.embed_into(local.residue.field).eval(local.residue.t_image);
}

}  // namespace hf
