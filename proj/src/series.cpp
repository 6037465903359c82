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

#include "hf/series.hpp"

#include <algorithm>
#include <sstream>

namespace hf {

LucasBinomial::LucasBinomial(std::uint32_t p) : p_(p), fact_(p), inv_fact_(p) {
  fact_[0] = 1;
  for (std::uint32_t i = 1; i < p; ++i) fact_[i] = static_cast<std::uint32_t>(std::uint64_t{fact_[i - 1]} * i % p);
  for (std::uint32_t i = 0; i < p; ++i) {
    std::uint64_t r = 1, b = fact_[i], e = p - 2;
    if (p == 2) {
      r = 1;
    } else {
      while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
      }
    }
    inv_fact_[i] = static_cast<std::uint32_t>(r);
  }
}

std::uint32_t LucasBinomial::operator()(std::uint64_t n, std::uint64_t k) const {
  if (k > n) return 0;
  std::uint64_t r = 1;
  while (k > 0 || n > 0) {
    const std::uint64_t nd = n % p_, kd = k % p_;
    if (kd > nd) return 0;
    r = r * fact_[nd] % p_ * inv_fact_[kd] % p_ * inv_fact_[nd - kd] % p_;
    n /= p_;
    k /= p_;
  }
  return static_cast<std::uint32_t>(r);
}

std::size_t smallest_power_above(std::uint32_t p, std::size_t n) {
  std::size_t q = 1;
  while (q <= n) q *= p;
  return q;
}

SeriesRing::SeriesRing(FieldPtr base, FieldPtr ell, Fe alpha, std::size_t q)
    : base_(std::move(base)), ell_(std::move(ell)), alpha_(alpha), q_(q), binom_(ell_->characteristic()) {}

SeriesRingPtr SeriesRing::make(FieldPtr base, FieldPtr ell, Fe alpha, std::size_t q) {
  if (q == 0) throw Error(ErrorKind::InvalidArgument, "truncation order must be positive");
  if (!ell->is_ancestor(*base)) throw Error(ErrorKind::FieldMismatch, "residue field must extend the constant field");
  return SeriesRingPtr(new SeriesRing(std::move(base), std::move(ell), alpha, q));
}

void SeriesRing::add_to(std::span<Fe> out, std::span<const Fe> a) const {
  for (std::size_t i = 0; i < q_; ++i) out[i] = ell_->add(out[i], a[i]);
}

void SeriesRing::sub_from(std::span<Fe> out, std::span<const Fe> a) const {
  for (std::size_t i = 0; i < q_; ++i) out[i] = ell_->sub(out[i], a[i]);
}

void SeriesRing::mul_acc(std::span<Fe> out, std::span<const Fe> a, std::span<const Fe> b) const {
  const Field& f = *ell_;
  for (std::size_t i = 0; i < q_; ++i) {
    if (a[i] == Fe{}) continue;
    for (std::size_t j = 0; i + j < q_; ++j) {
      if (b[j] == Fe{}) continue;
      out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
    }
  }
}

void SeriesRing::mul_sub(std::span<Fe> out, std::span<const Fe> a, std::span<const Fe> b) const {
  const Field& f = *ell_;
  for (std::size_t i = 0; i < q_; ++i) {
    if (a[i] == Fe{}) continue;
    const Fe na = f.neg(a[i]);
    for (std::size_t j = 0; i + j < q_; ++j) {
      if (b[j] == Fe{}) continue;
      out[i + j] = f.add(out[i + j], f.mul(na, b[j]));
    }
  }
}

void SeriesRing::scale(std::span<Fe> out, Fe s) const {
  for (auto& c : out) c = ell_->mul(c, s);
}

void SeriesRing::hasse(std::span<Fe> out, std::span<const Fe> a, std::size_t i) const {
  if (i >= q_) throw Error(ErrorKind::OrderOutOfRange, "Hasse order must be below q");
  for (std::size_t n = 0; n < q_; ++n) out[n] = Fe{};
  for (std::size_t n = i; n < q_; ++n) {
    if (a[n] == Fe{}) continue;
    const std::uint32_t c = binom_(n, i);
    if (c != 0) out[n - i] = ell_->mul(a[n], ell_->from_int(c));
  }
}

bool SeriesRing::is_zero(std::span<const Fe> a) const {
  for (Fe c : a) {
    if (c != Fe{}) return false;
  }
  return true;
}

std::vector<Fe> SeriesRing::expand_poly(const Poly& p) const {
  const Poly lifted = p.embed_into(ell_);
  std::vector<Fe> acc(q_);
  const Field& f = *ell_;
  // Horner in x = alpha + X.
  for (std::size_t k = lifted.coeffs().size(); k-- > 0;) {
    for (std::size_t i = q_; i-- > 0;) {
      Fe v = f.mul(acc[i], alpha_);
      if (i > 0) v = f.add(v, acc[i - 1]);
      acc[i] = v;
    }
    acc[0] = f.add(acc[0], lifted.coeff(k));
  }
  return acc;
}

std::vector<Fe> SeriesRing::expand(const RatFunc& r) const {
  std::vector<Fe> num = expand_poly(r.num());
  if (r.den().is_one()) return num;
  const std::vector<Fe> den = expand_poly(r.den());
  if (den[0] == Fe{}) {
    throw Error(ErrorKind::NotIntegralAtPlace, r.to_string() + " has a pole at the expansion point");
  }
  std::vector<Fe> inv(q_), out(q_);
  inverse(inv, den);
  mul_acc(out, num, inv);
  return out;
}

void SeriesRing::inverse(std::span<Fe> out, std::span<const Fe> a) const {
  if (a[0] == Fe{}) throw Error(ErrorKind::NonUnitSeries, "series with zero constant term is not invertible");
  const Field& f = *ell_;
  std::vector<Fe> w(q_), aw(q_), corr(q_);
  w[0] = f.inv(a[0]);
  // w <- w (2 - a w), valid to twice the precision each round.
  for (std::size_t prec = 1; prec < q_;) {
    const std::size_t next = std::min(2 * prec, q_);
    std::fill(aw.begin(), aw.end(), Fe{});
    for (std::size_t i = 0; i < next; ++i) {
      if (a[i] == Fe{}) continue;
      for (std::size_t j = 0; i + j < next; ++j) aw[i + j] = f.add(aw[i + j], f.mul(a[i], w[j]));
    }
    // aw = 1 + e with e = O(X^prec); w <- w - w e.
    aw[0] = f.sub(aw[0], f.one());
    std::fill(corr.begin(), corr.end(), Fe{});
    for (std::size_t i = prec; i < next; ++i) {
      if (aw[i] == Fe{}) continue;
      for (std::size_t j = 0; i + j < next; ++j) corr[i + j] = f.add(corr[i + j], f.mul(aw[i], w[j]));
    }
    for (std::size_t i = prec; i < next; ++i) w[i] = f.sub(w[i], corr[i]);
    prec = next;
  }
  std::copy(w.begin(), w.end(), out.begin());
}

Series::Series(SeriesRingPtr ring) : ring_(std::move(ring)), c_(ring_->q()) {}

Series::Series(SeriesRingPtr ring, std::vector<Fe> c) : ring_(std::move(ring)), c_(std::move(c)) {
  c_.resize(ring_->q());
}

Series Series::constant(SeriesRingPtr ring, Fe c) {
  Series s(std::move(ring));
  s.c_[0] = c;
  return s;
}

Series Series::uniformizer_power(SeriesRingPtr ring, std::size_t n) {
  Series s(std::move(ring));
  if (n < s.c_.size()) s.c_[n] = s.ring_->f().one();
  return s;
}

bool Series::is_zero() const { return ring_->is_zero(c_); }

Series Series::operator+(const Series& b) const {
  Series r = *this;
  ring_->add_to(r.c_, b.c_);
  return r;
}

Series Series::operator-(const Series& b) const {
  Series r = *this;
  ring_->sub_from(r.c_, b.c_);
  return r;
}

Series Series::operator*(const Series& b) const {
  Series r(ring_);
  ring_->mul_acc(r.c_, c_, b.c_);
  return r;
}

std::string Series::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == Fe{}) continue;
    if (!first) os << " + ";
    first = false;
    const std::string s = ring_->f().format(c_[i]);
    if (i == 0) {
      os << s;
      continue;
    }
    if (c_[i] != ring_->f().one()) os << (s.find(' ') != std::string::npos ? "(" + s + ")" : s) << "*";
    os << "X";
    if (i > 1) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

Series series_inv(const Series& a) {
  Series out(a.ring());
  std::vector<Fe> buf(a.ring()->q());
  a.ring()->inverse(buf, a.coeffs());
  return Series(a.ring(), std::move(buf));
}

Series series_hasse(std::size_t i, const Series& a) {
  std::vector<Fe> buf(a.ring()->q());
  a.ring()->hasse(buf, a.coeffs(), i);
  return Series(a.ring(), std::move(buf));
}

Series expand_at_place(const RatFunc& r, const SeriesRingPtr& ring) { return Series(ring, ring->expand(r)); }

}  // namespace hf
