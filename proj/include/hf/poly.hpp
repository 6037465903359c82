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

#ifndef HF_POLY_HPP
#define HF_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "hf/field.hpp"

namespace hf {

/// Dense univariate polynomial over a Field, coefficients low-to-high.
/// The zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(FieldPtr f, char var = 'x') : f_(std::move(f)), var_(var) {}
  Poly(FieldPtr f, std::vector<Fe> c, char var = 'x');

  static Poly constant(FieldPtr f, Fe c, char var = 'x');
  static Poly monomial(FieldPtr f, Fe c, std::size_t n, char var = 'x');
  /// X - a.
  static Poly linear_root(FieldPtr f, Fe a, char var = 'x');

  const FieldPtr& field() const { return f_; }
  char var() const { return var_; }
  Poly with_var(char v) const { Poly r = *this; r.var_ = v; return r; }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Fe lc() const { return c_.empty() ? Fe{} : c_.back(); }
  Fe coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Fe{}; }
  const std::vector<Fe>& coeffs() const { return c_; }
  bool is_one() const { return c_.size() == 1 && c_[0] == Fe{1}; }
  bool is_monic() const { return !c_.empty() && c_.back() == Fe{1}; }

  Poly operator+(const Poly& b) const;
  Poly operator-(const Poly& b) const;
  Poly operator-() const;
  Poly operator*(const Poly& b) const;
  Poly scaled(Fe s) const;
  Poly shifted(std::size_t n) const;  // multiply by var^n
  Poly monic() const;
  Poly derivative() const;
  Fe eval(Fe a) const;
  /// Maps coefficients from an ancestor field into `target`.
  Poly embed_into(const FieldPtr& target) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  std::string to_string() const;

 private:
  void trim();
  FieldPtr f_;
  std::vector<Fe> c_;
  char var_ = 'x';
};

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
struct Xgcd {
  Poly g, u, v;  // u a + v b = g, g monic
};
Xgcd xgcd(const Poly& a, const Poly& b);
Poly powmod(const Poly& base, std::uint64_t e, const Poly& mod);
/// Exact division; throws BadFactorization if the remainder is nonzero.
Poly exact_div(const Poly& a, const Poly& b);
/// Multiplicity of the irreducible `p` in `a` (a != 0).
int valuation(Poly a, const Poly& p);

/// Element of K = k(x): num/den with gcd 1 and den monic.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(const FieldPtr& f);  // zero
  explicit RatFunc(Poly num);
  RatFunc(Poly num, Poly den);

  static RatFunc constant(const FieldPtr& f, Fe c);
  static RatFunc x(const FieldPtr& f);

  const FieldPtr& field() const { return num_.field(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_poly() const { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.degree() <= 0; }

  RatFunc operator+(const RatFunc& b) const;
  RatFunc operator-(const RatFunc& b) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& b) const;
  RatFunc operator/(const RatFunc& b) const;
  RatFunc inv() const;
  RatFunc scaled(Fe s) const;
  /// Throws PoleAtPoint when den(a) = 0.
  Fe eval(Fe a) const;
  RatFunc embed_into(const FieldPtr& target) const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  void normalize();
  Poly num_, den_;
};

/// Polynomial in T with coefficients in K = k(x).
class TPoly {
 public:
  TPoly() = default;
  explicit TPoly(FieldPtr f) : f_(std::move(f)) {}
  TPoly(FieldPtr f, std::vector<RatFunc> c);

  static TPoly constant(const RatFunc& c);
  static TPoly t(const FieldPtr& f);
  /// Lifts a polynomial in T over k (constant coefficients).
  static TPoly from_constant_poly(const Poly& p);

  const FieldPtr& field() const { return f_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const RatFunc& coeff(std::size_t i) const { return c_[i]; }
  RatFunc coeff_or_zero(std::size_t i) const;
  const std::vector<RatFunc>& coeffs() const { return c_; }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  /// All coefficients in k.
  bool has_constant_coefficients() const;
  /// All coefficients in k[x].
  bool has_polynomial_coefficients() const;

  TPoly operator+(const TPoly& b) const;
  TPoly operator-(const TPoly& b) const;
  TPoly operator-() const;
  TPoly operator*(const TPoly& b) const;
  TPoly scaled(const RatFunc& s) const;
  TPoly derivative() const;
  TPoly monic() const;
  TPoly embed_into(const FieldPtr& target) const;
  /// Specialises x = a (a in an extension of the coefficient field).
  Poly specialize(const FieldPtr& target, Fe a) const;

  friend bool operator==(const TPoly& a, const TPoly& b) { return a.c_ == b.c_; }

  std::string to_string() const;

 private:
  void trim();
  FieldPtr f_;
  std::vector<RatFunc> c_;
};

std::pair<TPoly, TPoly> tpoly_divrem(const TPoly& a, const TPoly& b);
TPoly tpoly_gcd(const TPoly& a, const TPoly& b);
/// Classical Euclidean resultant over K.
RatFunc resultant(const TPoly& a, const TPoly& b);
/// (-1)^{s(s-1)/2} Res(G, G') / lc(G).
RatFunc discriminant(const TPoly& g);
/// Throws NotMonic, Inseparable or ZeroConstantTerm.
void make_separable_check(const TPoly& g);

/// l[T]/(F) for irreducible F over l, realised inside an extension field.
ResidueExtension residue_extension(const Poly& irreducible);

}  // namespace hf

#endif  // HF_POLY_HPP
