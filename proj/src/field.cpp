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

#include "hf/field.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

namespace hf {

namespace {

thread_local std::uint64_t g_ops = 0;

using Coeffs = std::vector<std::uint32_t>;

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic m over F_p.
Coeffs prime_rem(Coeffs a, const Coeffs& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint64_t c = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * m[i]) % p);
    }
    trim(a);
  }
  return a;
}

}  // namespace

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroInversion: return "ZeroInversion";
    case ErrorKind::NotInSubfield: return "NotInSubfield";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case ErrorKind::PoleAtPoint: return "PoleAtPoint";
    case ErrorKind::NonUnitSeries: return "NonUnitSeries";
    case ErrorKind::OrderOutOfRange: return "OrderOutOfRange";
    case ErrorKind::NotIntegralAtPlace: return "NotIntegralAtPlace";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::BadFactorization: return "BadFactorization";
    case ErrorKind::NonUnitDerivativePivot: return "NonUnitDerivativePivot";
    case ErrorKind::SplitDepthExceeded: return "SplitDepthExceeded";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::PlaceInvalid: return "PlaceInvalid";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::Inseparable: return "Inseparable";
    case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::InvalidSubspace: return "InvalidSubspace";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::uint64_t field_op_count() { return g_ops; }
void reset_field_op_count() { g_ops = 0; }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_irreducible_prime_field(std::uint32_t p, const std::vector<std::uint32_t>& f_in) {
  Coeffs f = f_in;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  // Make monic.
  std::uint64_t lc = f.back();
  std::uint64_t lc_inv = 1;
  for (std::uint32_t e = p - 2; e > 0; --e) lc_inv = lc_inv * lc % p;
  if (p == 2) lc_inv = 1;
  for (auto& c : f) c = static_cast<std::uint32_t>(c * lc_inv % p);
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (std::size_t dd = 1; dd <= deg / 2; ++dd) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < dd; ++i) count *= p;
    for (std::uint64_t n = 0; n < count; ++n) {
      Coeffs g(dd + 1);
      std::uint64_t t = n;
      for (std::size_t i = 0; i < dd; ++i) {
        g[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      g[dd] = 1;
      if (prime_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> find_irreducible(std::uint32_t p, std::uint32_t d) {
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "find_irreducible needs d >= 1");
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < d; ++i) count *= p;
  for (std::uint64_t n = 0; n < count; ++n) {
    Coeffs g(d + 1);
    std::uint64_t t = n;
    for (std::uint32_t i = 0; i < d; ++i) {
      g[i] = static_cast<std::uint32_t>(t % p);
      t /= p;
    }
    g[d] = 1;
    if (is_irreducible_prime_field(p, g)) return g;
  }
  throw Error(ErrorKind::InvalidArgument, "no irreducible polynomial found");
}

FieldPtr Field::prime(std::uint32_t p) { return from_modulus(p, {0, 1}); }

FieldPtr Field::galois(std::uint32_t p, std::uint32_t d) {
  return from_modulus(p, find_irreducible(p, d));
}

FieldPtr Field::from_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p) || p > kMaxCharacteristic) {
    throw Error(ErrorKind::InvalidArgument, "characteristic must be a prime <= 65536");
  }
  trim(modulus);
  if (modulus.size() < 2 || modulus.back() != 1) {
    throw Error(ErrorKind::InvalidArgument, "field modulus must be monic of degree >= 1");
  }
  if (!is_irreducible_prime_field(p, modulus)) {
    throw Error(ErrorKind::InvalidArgument, "field modulus is reducible");
  }
  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  f->d_ = static_cast<std::uint32_t>(modulus.size() - 1);
  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i < f->d_; ++i) {
    f->pw_.push_back(static_cast<std::uint32_t>(size));
    size *= p;
    if (size > kMaxFieldSize) {
      throw Error(ErrorKind::FieldTooLarge, "field larger than " + std::to_string(kMaxFieldSize));
    }
  }
  f->size_ = static_cast<std::uint32_t>(size);
  f->modulus_ = std::move(modulus);
  f->build_tables();
  return f;
}

FieldPtr Field::parse_spec(std::string_view spec) {
  std::string s;
  for (char c : spec) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.size() < 5 || s.substr(0, 3) != "GF(" || s.back() != ')') {
    throw Error(ErrorKind::ParseError, "field spec must look like GF(p) or GF(p^d): " + std::string(spec));
  }
  const std::string body = s.substr(3, s.size() - 4);
  const auto caret = body.find('^');
  try {
    std::size_t used = 0;
    const unsigned long p = std::stoul(body.substr(0, caret), &used);
    if (used != body.substr(0, caret).size()) throw std::invalid_argument("p");
    unsigned long d = 1;
    if (caret != std::string::npos) {
      const std::string ds = body.substr(caret + 1);
      d = std::stoul(ds, &used);
      if (used != ds.size()) throw std::invalid_argument("d");
    }
    if (d == 0) throw std::invalid_argument("d");
    return galois(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(d));
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::ParseError, "bad field spec: " + std::string(spec));
  } catch (const std::out_of_range&) {
    throw Error(ErrorKind::ParseError, "bad field spec: " + std::string(spec));
  }
}

std::string Field::spec() const {
  if (d_ == 1) return "GF(" + std::to_string(p_) + ")";
  return "GF(" + std::to_string(p_) + "^" + std::to_string(d_) + ")";
}

Fe Field::mul_slow(Fe a, Fe b) const {
  const Coeffs ca = coeffs(a), cb = coeffs(b);
  Coeffs prod(2 * d_, 0);
  for (std::uint32_t i = 0; i < d_; ++i) {
    for (std::uint32_t j = 0; j < d_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % p_);
    }
  }
  return from_coeffs(prime_rem(prod, modulus_, p_));
}

void Field::build_tables() {
  if (d_ == 1) return;  // prime field multiplies directly
  const std::uint32_t n = size_ - 1;
  const auto factors = prime_factors(n);
  for (std::uint32_t cand = 2; cand < size_; ++cand) {
    bool primitive = true;
    for (auto r : factors) {
      // cand^(n/r) via slow multiplication
      Fe acc{1}, base{cand};
      std::uint64_t e = n / r;
      while (e) {
        if (e & 1) acc = mul_slow(acc, base);
        base = mul_slow(base, base);
        e >>= 1;
      }
      if (acc.v == 1) {
        primitive = false;
        break;
      }
    }
    if (!primitive) continue;
    exp_.assign(2 * n, 0);
    log_.assign(size_, 0);
    Fe x{1};
    for (std::uint32_t i = 0; i < n; ++i) {
      exp_[i] = x.v;
      exp_[i + n] = x.v;
      log_[x.v] = i;
      x = mul_slow(x, Fe{cand});
    }
    return;
  }
  throw Error(ErrorKind::InvalidArgument, "no primitive element found");
}

Fe Field::generator() const {
  if (d_ == 1) return Fe{0};
  return Fe{p_};
}

Fe Field::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Fe{static_cast<std::uint32_t>(r)};
}

Fe Field::from_coeffs(const std::vector<std::uint32_t>& c) const {
  std::uint32_t v = 0;
  for (std::size_t i = 0; i < c.size() && i < d_; ++i) v += (c[i] % p_) * pw_[i];
  return Fe{v};
}

std::vector<std::uint32_t> Field::coeffs(Fe a) const {
  Coeffs c(d_);
  std::uint32_t v = a.v;
  for (std::uint32_t i = 0; i < d_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

Fe Field::add(Fe a, Fe b) const {
  ++g_ops;
  if (p_ == 2) return Fe{a.v ^ b.v};
  if (d_ == 1) {
    const std::uint32_t s = a.v + b.v;
    return Fe{s >= p_ ? s - p_ : s};
  }
  std::uint32_t out = 0, x = a.v, y = b.v;
  for (std::uint32_t i = 0; i < d_; ++i) {
    std::uint32_t s = x % p_ + y % p_;
    if (s >= p_) s -= p_;
    out += s * pw_[i];
    x /= p_;
    y /= p_;
  }
  return Fe{out};
}

Fe Field::neg(Fe a) const {
  if (p_ == 2) return a;
  if (d_ == 1) return Fe{a.v == 0 ? 0 : p_ - a.v};
  std::uint32_t out = 0, x = a.v;
  for (std::uint32_t i = 0; i < d_; ++i) {
    const std::uint32_t c = x % p_;
    out += (c == 0 ? 0 : p_ - c) * pw_[i];
    x /= p_;
  }
  return Fe{out};
}

Fe Field::sub(Fe a, Fe b) const { return add(a, neg(b)); }

Fe Field::mul(Fe a, Fe b) const {
  ++g_ops;
  if (a.v == 0 || b.v == 0) return Fe{0};
  if (d_ == 1) return Fe{static_cast<std::uint32_t>(std::uint64_t{a.v} * b.v % p_)};
  return Fe{exp_[log_[a.v] + log_[b.v]]};
}

Fe Field::inv(Fe a) const {
  ++g_ops;
  if (a.v == 0) throw Error(ErrorKind::ZeroInversion, "inverse of zero in " + spec());
  if (d_ == 1) {
    // Fermat.
    std::uint64_t r = 1, b = a.v, e = p_ - 2;
    while (e) {
      if (e & 1) r = r * b % p_;
      b = b * b % p_;
      e >>= 1;
    }
    return Fe{static_cast<std::uint32_t>(r)};
  }
  const std::uint32_t n = size_ - 1;
  return Fe{exp_[(n - log_[a.v]) % n]};
}

Fe Field::pow(Fe a, std::uint64_t e) const {
  Fe r = one(), b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

Fe Field::frobenius_power(Fe a, std::uint32_t e) const {
  for (std::uint32_t i = 0; i < e % d_; ++i) a = pow(a, p_);
  return a;
}

Fe Field::pth_root(Fe a) const { return frobenius_power(a, d_ - 1); }

std::uint32_t Field::element_degree(Fe a) const {
  for (std::uint32_t f = 1; f <= d_; ++f) {
    if (d_ % f == 0 && frobenius_power(a, f) == a) return f;
  }
  return d_;
}

FieldPtr Field::attach(const FieldPtr& parent, const FieldPtr& child_template) {
  if (parent->characteristic() != child_template->characteristic() ||
      child_template->degree() % parent->degree() != 0) {
    throw Error(ErrorKind::FieldMismatch, parent->spec() + " does not embed in " + child_template->spec());
  }
  auto child = std::shared_ptr<Field>(new Field(*child_template));
  child->parent_ = parent;
  // Image of the parent's generator: first root of the parent's modulus.
  const auto& pm = parent->modulus();
  std::int64_t root = -1;
  if (parent->degree() == 1) {
    root = 0;  // prime field: identity on F_p, no generator to place
  } else {
    for (std::uint32_t c = 0; c < child->size_; ++c) {
      Fe acc{0};
      for (std::size_t i = pm.size(); i-- > 0;) {
        acc = child->add(child->mul(acc, Fe{c}), child->from_int(pm[i]));
      }
      if (acc.v == 0) {
        root = c;
        break;
      }
    }
  }
  if (root < 0) throw Error(ErrorKind::FieldMismatch, "no embedding found");
  child->embed_.assign(parent->size(), 0);
  child->unembed_.assign(child->size_, -1);
  for (std::uint32_t a = 0; a < parent->size(); ++a) {
    Fe img{0};
    if (parent->degree() == 1) {
      img = child->from_int(a);
    } else {
      const auto c = parent->coeffs(Fe{a});
      for (std::size_t i = c.size(); i-- > 0;) {
        img = child->add(child->mul(img, Fe{static_cast<std::uint32_t>(root)}), child->from_int(c[i]));
      }
    }
    child->embed_[a] = img.v;
    child->unembed_[img.v] = static_cast<std::int32_t>(a);
  }
  return child;
}

FieldPtr Field::extension_of(const FieldPtr& parent, std::uint32_t e) {
  if (e == 0) throw Error(ErrorKind::InvalidArgument, "extension degree must be >= 1");
  return attach(parent, galois(parent->characteristic(), parent->degree() * e));
}

bool Field::is_ancestor(const Field& other) const {
  for (const Field* f = this; f != nullptr; f = f->parent_.get()) {
    if (f == &other) return true;
  }
  return false;
}

Fe Field::embed_from(const Field& ancestor, Fe a) const {
  if (&ancestor == this) return a;
  if (!parent_) throw Error(ErrorKind::FieldMismatch, ancestor.spec() + " is not an ancestor of " + spec());
  const Fe up = parent_->embed_from(ancestor, a);
  return Fe{embed_[up.v]};
}

bool Field::is_in_subfield(Fe a, const Field& sub) const {
  if (!is_ancestor(sub)) throw Error(ErrorKind::FieldMismatch, sub.spec() + " is not a subfield in the tower");
  const std::uint32_t e = sub.degree();
  return frobenius_power(a, e) == a;
}

Fe Field::project_to_subfield(Fe a, const Field& sub) const {
  if (&sub == this) return a;
  if (!is_ancestor(sub)) throw Error(ErrorKind::FieldMismatch, sub.spec() + " is not a subfield in the tower");
  const std::int32_t up = unembed_[a.v];
  if (up < 0) throw Error(ErrorKind::NotInSubfield, format(a) + " is not in " + sub.spec());
  return parent_->project_to_subfield(Fe{static_cast<std::uint32_t>(up)}, sub);
}

std::string Field::format(Fe a) const {
  if (d_ == 1) return std::to_string(a.v);
  const auto c = coeffs(a);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c[i];
      continue;
    }
    if (c[i] != 1) os << c[i] << "*";
    os << "z";
    if (i > 1) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

namespace {

class ElemParser {
 public:
  ElemParser(const Field& f, std::string_view s) : f_(f), s_(s) {}

  Fe run() {
    Fe v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw Error(ErrorKind::ParseError, why + " in field element '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Fe expr() {
    Fe v;
    if (eat('-')) {
      v = f_.neg(term());
    } else {
      eat('+');
      v = term();
    }
    for (;;) {
      if (eat('+')) {
        v = f_.add(v, term());
      } else if (eat('-')) {
        v = f_.sub(v, term());
      } else {
        return v;
      }
    }
  }
  Fe term() {
    Fe v = factor();
    for (;;) {
      if (eat('*')) {
        v = f_.mul(v, factor());
      } else if (eat('/')) {
        v = f_.div(v, factor());
      } else {
        skip();
        if (pos_ < s_.size() && (s_[pos_] == 'z' || s_[pos_] == '(')) {
          v = f_.mul(v, factor());
        } else {
          return v;
        }
      }
    }
  }
  Fe factor() {
    Fe base = atom();
    if (eat('^')) {
      skip();
      std::uint64_t e = 0;
      bool any = false;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        e = e * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0');
        any = true;
      }
      if (!any) fail("exponent expected");
      return f_.pow(base, e);
    }
    return base;
  }
  Fe atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Fe v = expr();
      if (!eat(')')) fail("')' expected");
      return v;
    }
    if (c == 'z') {
      ++pos_;
      if (f_.degree() == 1) fail("generator z used in a prime field");
      return f_.generator();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t n = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        n = (n * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0')) % f_.characteristic();
      }
      return f_.from_int(static_cast<std::int64_t>(n));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const Field& f_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Fe Field::parse(std::string_view text) const { return ElemParser(*this, text).run(); }

}  // namespace hf
