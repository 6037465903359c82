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

/**
 * @file series.hpp
 * @brief The truncated expansion ring S_q = l[X]/(X^q) at a degree-one place.
 *
 * A SeriesRing fixes the residue field l, the truncation order q (a power of
 * the characteristic) and the expansion point alpha of x, so X = x - alpha is
 * the uniformizer. Rational functions of K = k(x) integral at alpha map into
 * S_q by Taylor shifting.
 *
 * The raw span kernels are what the Artinian layer builds on; Series is the
 * value-type wrapper used at module boundaries and in tests.
 */

#ifndef HF_SERIES_HPP
#define HF_SERIES_HPP

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hf/poly.hpp"

namespace hf {

/// Binomial coefficients modulo a prime via Lucas' theorem.
class LucasBinomial {
 public:
  explicit LucasBinomial(std::uint32_t p);
  std::uint32_t operator()(std::uint64_t n, std::uint64_t k) const;

 private:
  std::uint32_t p_;
  std::vector<std::uint32_t> fact_, inv_fact_;
};

class SeriesRing;
using SeriesRingPtr = std::shared_ptr<const SeriesRing>;

class SeriesRing {
 public:
  /// base: the constant field k of K; ell: residue field containing k (an
  /// extension in the tower, or k itself); alpha in ell.
  static SeriesRingPtr make(FieldPtr base, FieldPtr ell, Fe alpha, std::size_t q);

  const FieldPtr& base() const { return base_; }
  const FieldPtr& ell() const { return ell_; }
  const Field& f() const { return *ell_; }
  Fe alpha() const { return alpha_; }
  std::size_t q() const { return q_; }
  const LucasBinomial& binomial() const { return binom_; }

  // Span kernels; all spans have length q unless stated.
  void add_to(std::span<Fe> out, std::span<const Fe> a) const;
  void sub_from(std::span<Fe> out, std::span<const Fe> a) const;
  /// out += a * b mod X^q (out must not alias a or b).
  void mul_acc(std::span<Fe> out, std::span<const Fe> a, std::span<const Fe> b) const;
  /// out -= a * b mod X^q.
  void mul_sub(std::span<Fe> out, std::span<const Fe> a, std::span<const Fe> b) const;
  void scale(std::span<Fe> out, Fe s) const;
  /// out = D^(i)(a).
  void hasse(std::span<Fe> out, std::span<const Fe> a, std::size_t i) const;
  bool is_zero(std::span<const Fe> a) const;
  /// out = 1/a by Newton iteration with precision doubling; throws NonUnitSeries.
  void inverse(std::span<Fe> out, std::span<const Fe> a) const;

  /// Image of r under x -> alpha + X; throws NotIntegralAtPlace.
  std::vector<Fe> expand(const RatFunc& r) const;
  /// Image of a polynomial over (an ancestor of) ell under x -> alpha + X.
  std::vector<Fe> expand_poly(const Poly& p) const;

 private:
  SeriesRing(FieldPtr base, FieldPtr ell, Fe alpha, std::size_t q);
  FieldPtr base_, ell_;
  Fe alpha_;
  std::size_t q_;
  LucasBinomial binom_;
};

class Series {
 public:
  Series() = default;
  explicit Series(SeriesRingPtr ring);  // zero
  Series(SeriesRingPtr ring, std::vector<Fe> c);

  static Series constant(SeriesRingPtr ring, Fe c);
  /// X^n.
  static Series uniformizer_power(SeriesRingPtr ring, std::size_t n);

  const SeriesRingPtr& ring() const { return ring_; }
  std::span<const Fe> coeffs() const { return c_; }
  Fe coeff(std::size_t i) const { return c_[i]; }
  bool is_zero() const;
  bool is_unit() const { return c_[0] != Fe{}; }

  Series operator+(const Series& b) const;
  Series operator-(const Series& b) const;
  Series operator*(const Series& b) const;
  friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

  std::string to_string() const;

 private:
  SeriesRingPtr ring_;
  std::vector<Fe> c_;
};

/// Newton inversion with precision doubling; throws NonUnitSeries.
Series series_inv(const Series& a);
/// D^(i)(a), 0 <= i < q; throws OrderOutOfRange.
Series series_hasse(std::size_t i, const Series& a);
Series expand_at_place(const RatFunc& r, const SeriesRingPtr& ring);

/// Smallest power of p strictly greater than n.
std::size_t smallest_power_above(std::uint32_t p, std::size_t n);

}  // namespace hf

#endif  // HF_SERIES_HPP
