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
 * @file field.hpp
 * @brief Finite fields F_{p^d} as single quotients F_p[z]/(m(z)).
 *
 * Every field is represented directly over its prime field; tower structure
 * (k inside l inside l_e) is tracked only as embedding data: a child field
 * remembers its parent and the image of the parent's generator. Elements are
 * small integers encoding the coefficient vector in base p, so a FieldElem is
 * a plain value and all arithmetic goes through the owning Field.
 *
 * Multiplication uses exp/log tables built from a primitive element, which
 * bounds the field size (kMaxFieldSize). That is ample at desk scale.
 */

#ifndef HF_FIELD_HPP
#define HF_FIELD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hf/error.hpp"

namespace hf {

/// Largest characteristic accepted.
inline constexpr std::uint32_t kMaxCharacteristic = 1u << 16;
/// Largest field cardinality p^d for which tables are built.
inline constexpr std::uint32_t kMaxFieldSize = 1u << 20;

/// Element of some Field. The encoding is sum_i c_i p^i for the coefficient
/// vector (c_0, ..., c_{d-1}) of the element as a polynomial in z.
struct Fe {
  std::uint32_t v = 0;
  friend constexpr auto operator<=>(Fe, Fe) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Counts base-field operations performed on the current thread.
std::uint64_t field_op_count();
void reset_field_op_count();

class Field : public std::enable_shared_from_this<Field> {
 public:
  /// F_p itself.
  static FieldPtr prime(std::uint32_t p);
  /// F_p[z]/(modulus); modulus is monic irreducible, low-to-high coefficients.
  static FieldPtr from_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);
  /// F_{p^d} with the lexicographically first irreducible modulus.
  static FieldPtr galois(std::uint32_t p, std::uint32_t d);
  /// Parses "GF(p)" or "GF(p^d)".
  static FieldPtr parse_spec(std::string_view spec);

  /// Degree-e extension of `parent`, built as F_{p^{d e}} with the
  /// lexicographically first modulus, embedding parent's generator at the
  /// first root (in encoding order) of parent's modulus.
  static FieldPtr extension_of(const FieldPtr& parent, std::uint32_t e);
  /// Same, but with an explicitly supplied child field that has no parent yet.
  static FieldPtr attach(const FieldPtr& parent, const FieldPtr& child_template);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return d_; }
  std::uint32_t size() const { return size_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  std::string spec() const;

  Fe zero() const { return Fe{0}; }
  Fe one() const { return Fe{1}; }
  /// The class of z (equals the integer p mod p when d == 1).
  Fe generator() const;
  /// A primitive element (generator of the multiplicative group).
  Fe primitive() const { return Fe{exp_.empty() ? 1u : exp_[1]}; }
  Fe from_int(std::int64_t n) const;
  Fe from_coeffs(const std::vector<std::uint32_t>& c) const;
  std::vector<std::uint32_t> coeffs(Fe a) const;
  /// The element with encoding `index` (enumeration order).
  Fe element(std::uint32_t index) const { return Fe{index}; }

  Fe add(Fe a, Fe b) const;
  Fe sub(Fe a, Fe b) const;
  Fe neg(Fe a) const;
  Fe mul(Fe a, Fe b) const;
  Fe inv(Fe a) const;
  Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }
  Fe pow(Fe a, std::uint64_t e) const;
  /// a^{p^e}.
  Fe frobenius_power(Fe a, std::uint32_t e) const;
  /// Multiplicative order-based p-th root.
  Fe pth_root(Fe a) const;
  /// Degree of the smallest subfield F_{p^f} containing a.
  std::uint32_t element_degree(Fe a) const;

  // Tower.
  const FieldPtr& parent() const { return parent_; }
  bool is_ancestor(const Field& other) const;  // other is this or an ancestor
  /// Maps a from the ancestor field into this one.
  Fe embed_from(const Field& ancestor, Fe a) const;
  /// True iff a lies in the image of `sub` (an ancestor).
  bool is_in_subfield(Fe a, const Field& sub) const;
  /// Preimage of a in `sub`; throws NotInSubfield.
  Fe project_to_subfield(Fe a, const Field& sub) const;

  std::string format(Fe a) const;
  /// Parses a polynomial expression in z with integer coefficients.
  Fe parse(std::string_view text) const;

 private:
  Field() = default;
  void build_tables();
  Fe mul_slow(Fe a, Fe b) const;

  std::uint32_t p_ = 2;
  std::uint32_t d_ = 1;
  std::uint32_t size_ = 2;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;   // exp_[i] = g^i, length size_-1 (doubled)
  std::vector<std::uint32_t> log_;   // log_[a], a != 0
  std::vector<std::uint32_t> pw_;    // p^i

  FieldPtr parent_;
  std::vector<std::uint32_t> embed_;     // parent element -> this
  std::vector<std::int32_t> unembed_;    // this -> parent element or -1
};

/// Monic degree-d irreducible over F_p, first in enumeration order (the
/// lower coefficients read as a base-p integer, constant term least
/// significant). Returned low-to-high, length d+1.
std::vector<std::uint32_t> find_irreducible(std::uint32_t p, std::uint32_t d);

/// Trial-division irreducibility test over F_p.
bool is_irreducible_prime_field(std::uint32_t p, const std::vector<std::uint32_t>& f);

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// The residue field l[T]/(F) of an irreducible F over l, realised as an
/// extension of l together with the image of T.
struct ResidueExtension {
  FieldPtr field;
  Fe t_image;
};

}  // namespace hf

#endif  // HF_FIELD_HPP
