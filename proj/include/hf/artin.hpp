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
 * @file artin.hpp
 * @brief The Artinian ring S_q[T]/(G(T)) and its splittings.
 *
 * Elements are stored flat: the coefficient of t^j X^k sits at index
 * j*q + k. Rings are immutable; splitting a ring along a coprime
 * factorisation of its reduction G0 = G mod X produces two new rings whose
 * moduli multiply to the parent's modulus exactly, and an element of the
 * parent maps to a child by reduction modulo the child's modulus.
 */

#ifndef HF_ARTIN_HPP
#define HF_ARTIN_HPP

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hf/series.hpp"

namespace hf {

class ArtinRing;
using ArtinRingPtr = std::shared_ptr<const ArtinRing>;

class ArtinRing {
 public:
  /// modulus: deg+1 blocks of length q, leading block must equal 1.
  static ArtinRingPtr make(SeriesRingPtr series, std::vector<Fe> modulus, std::vector<std::string> path = {});
  /// Expands a monic G in K[T] at the series ring's place.
  static ArtinRingPtr from_tpoly(SeriesRingPtr series, const TPoly& g);

  const SeriesRingPtr& series() const { return series_; }
  const SeriesRing& s() const { return *series_; }
  std::size_t q() const { return series_->q(); }
  std::size_t degree() const { return n_; }
  std::size_t elem_size() const { return n_ * series_->q(); }
  /// Block j of the modulus (j = 0..degree).
  std::span<const Fe> modulus_coeff(std::size_t j) const;
  const std::vector<Fe>& modulus() const { return modulus_; }
  /// The modulus reduced at X = 0, a polynomial over l in T.
  const Poly& g0() const { return g0_; }
  const std::vector<std::string>& path() const { return path_; }

  // Kernels on flat elements of elem_size().
  void mul(std::span<Fe> out, std::span<const Fe> a, std::span<const Fe> b) const;
  /// Reduces a polynomial of any number of blocks modulo the modulus.
  std::vector<Fe> reduce(std::vector<Fe> poly) const;

 private:
  ArtinRing() = default;
  SeriesRingPtr series_;
  std::size_t n_ = 0;
  std::vector<Fe> modulus_;
  Poly g0_;
  std::vector<std::string> path_;
};

class ArtinElem {
 public:
  ArtinElem() = default;
  explicit ArtinElem(ArtinRingPtr ring);  // zero
  ArtinElem(ArtinRingPtr ring, std::vector<Fe> data);

  static ArtinElem one(ArtinRingPtr ring);
  /// Image of T.
  static ArtinElem t(ArtinRingPtr ring);
  /// A series as a scalar (constant in T).
  static ArtinElem scalar(ArtinRingPtr ring, std::span<const Fe> series);
  /// Sum_j c_j T^j with c_j given as polynomial blocks; reduced.
  static ArtinElem from_blocks(ArtinRingPtr ring, std::vector<Fe> blocks);

  const ArtinRingPtr& ring() const { return ring_; }
  std::span<const Fe> data() const { return data_; }
  std::span<Fe> mutable_data() { return data_; }
  /// Series coefficient of t^j.
  std::span<const Fe> coeff(std::size_t j) const;
  bool is_zero() const;
  bool is_one() const;
  /// Reduction at X = 0 as a polynomial over l in T.
  Poly residue() const;

  ArtinElem operator+(const ArtinElem& b) const;
  ArtinElem operator-(const ArtinElem& b) const;
  ArtinElem operator-() const;
  ArtinElem operator*(const ArtinElem& b) const;
  ArtinElem scaled(std::span<const Fe> series) const;
  ArtinElem scaled(Fe c) const;
  /// Image in a ring whose modulus divides this ring's modulus.
  ArtinElem project(const ArtinRingPtr& target) const;

  friend bool operator==(const ArtinElem& a, const ArtinElem& b) { return a.data_ == b.data_; }

  std::string to_string() const;

 private:
  void check_same(const ArtinElem& b) const;
  ArtinRingPtr ring_;
  std::vector<Fe> data_;
};

struct InvertResult {
  enum class Kind { Inverse, ZeroDivisor, Zero };
  Kind kind = Kind::Zero;
  ArtinElem inverse;   // Kind::Inverse
  Poly witness;        // Kind::ZeroDivisor: H0 = gcd(G0, a mod X)
  bool nilpotent = false;  // witness == G0 with a != 0
};

/// Total over the three outcomes: unit, zero divisor with a gcd witness, zero.
InvertResult try_invert(const ArtinElem& a);

struct SplitRings {
  ArtinRingPtr h_ring;  // modulus lifts H0
  ArtinRingPtr e_ring;  // modulus lifts G0 / H0
};

/// Lifts G0 = H0 * E0 to G = H * E over S_q (quadratic Hensel lifting).
SplitRings hensel_split(const ArtinRingPtr& ring, const Poly& h0);

struct LocalRing {
  ArtinRingPtr ring;
  Poly factor;            // irreducible factor of G0 over l
  ResidueExtension residue;  // l_e = l[T]/(factor)
};

/// One local ring per irreducible factor; `factors` must multiply to G0.
std::vector<LocalRing> decompose_to_locals(const ArtinRingPtr& ring, const std::vector<Poly>& factors);

/// The residue of u in the local ring, read in l_e.
Fe constant_of(const ArtinElem& u, const LocalRing& local);

}  // namespace hf

#endif  // HF_ARTIN_HPP
