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

#include "hf/poly.hpp"

#include <sstream>

namespace hf {

namespace {

void require_same(const FieldPtr& a, const FieldPtr& b) {
  if (a.get() != b.get()) throw Error(ErrorKind::FieldMismatch, "operands live in different fields");
}

// "c" for a coefficient in front of a monomial; parenthesised if composite.
std::string coeff_prefix(const Field& f, Fe c) {
  if (c == f.one()) return "";
  std::string s = f.format(c);
  if (s.find_first_of("+ ") != std::string::npos) s = "(" + s + ")";
  return s + "*";
}

}  // namespace

// ---------------------------------------------------------------- Poly

Poly::Poly(FieldPtr f, std::vector<Fe> c, char var) : f_(std::move(f)), c_(std::move(c)), var_(var) { trim(); }

Poly Poly::constant(FieldPtr f, Fe c, char var) { return Poly(std::move(f), {c}, var); }

Poly Poly::monomial(FieldPtr f, Fe c, std::size_t n, char var) {
  std::vector<Fe> v(n + 1);
  v[n] = c;
  return Poly(std::move(f), std::move(v), var);
}

Poly Poly::linear_root(FieldPtr f, Fe a, char var) {
  const Fe na = f->neg(a);
  return Poly(f, {na, f->one()}, var);
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == Fe{}) c_.pop_back();
}

Poly Poly::operator+(const Poly& b) const {
  if (is_zero()) return b.with_var(var_);
  if (b.is_zero()) return *this;
  require_same(f_, b.f_);
  std::vector<Fe> r(std::max(c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f_->add(coeff(i), b.coeff(i));
  return Poly(f_, std::move(r), var_);
}

Poly Poly::operator-() const {
  std::vector<Fe> r(c_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f_->neg(c_[i]);
  return Poly(f_, std::move(r), var_);
}

Poly Poly::operator-(const Poly& b) const {
  if (b.is_zero()) return *this;
  return *this + (-b);
}

Poly Poly::operator*(const Poly& b) const {
  if (is_zero() || b.is_zero()) return Poly(f_ ? f_ : b.f_, var_);
  require_same(f_, b.f_);
  std::vector<Fe> r(c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == Fe{}) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      r[i + j] = f_->add(r[i + j], f_->mul(c_[i], b.c_[j]));
    }
  }
  return Poly(f_, std::move(r), var_);
}

Poly Poly::scaled(Fe s) const {
  std::vector<Fe> r(c_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f_->mul(c_[i], s);
  return Poly(f_, std::move(r), var_);
}

Poly Poly::shifted(std::size_t n) const {
  if (is_zero()) return *this;
  std::vector<Fe> r(n, Fe{});
  r.insert(r.end(), c_.begin(), c_.end());
  return Poly(f_, std::move(r), var_);
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(f_->inv(lc()));
}

Poly Poly::derivative() const {
  std::vector<Fe> r;
  for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(f_->mul(c_[i], f_->from_int(static_cast<std::int64_t>(i))));
  return Poly(f_, std::move(r), var_);
}

Fe Poly::eval(Fe a) const {
  Fe acc{};
  for (std::size_t i = c_.size(); i-- > 0;) acc = f_->add(f_->mul(acc, a), c_[i]);
  return acc;
}

Poly Poly::embed_into(const FieldPtr& target) const {
  if (target.get() == f_.get()) return *this;
  std::vector<Fe> r(c_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = target->embed_from(*f_, c_[i]);
  return Poly(target, std::move(r), var_);
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == Fe{}) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      const std::string s = f_->format(c_[i]);
      os << (s.find_first_of("+ ") != std::string::npos && c_.size() > 1 ? "(" + s + ")" : s);
      continue;
    }
    os << coeff_prefix(*f_, c_[i]) << var_;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZeroPoly, "division by the zero polynomial");
  const FieldPtr& f = b.field();
  if (a.is_zero() || a.degree() < b.degree()) return {Poly(f, a.var()), a};
  require_same(a.field(), f);
  std::vector<Fe> r = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<Fe> q(r.size() - db);
  const Fe inv_lc = f->inv(b.lc());
  for (std::size_t k = r.size(); k-- > db;) {
    const Fe c = f->mul(r[k], inv_lc);
    q[k - db] = c;
    if (c == Fe{}) continue;
    for (std::size_t i = 0; i <= db; ++i) {
      r[k - db + i] = f->sub(r[k - db + i], f->mul(c, b.coeff(i)));
    }
  }
  r.resize(db);
  return {Poly(f, std::move(q), a.var()), Poly(f, std::move(r), a.var())};
}

Poly gcd(const Poly& a0, const Poly& b0) {
  Poly a = a0, b = b0;
  while (!b.is_zero()) {
    Poly r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Xgcd xgcd(const Poly& a, const Poly& b) {
  const FieldPtr& f = a.field() ? a.field() : b.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(f, f->one(), a.var()), s1(f, a.var());
  Poly t0(f, a.var()), t1 = Poly::constant(f, f->one(), a.var());
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Fe inv = f->inv(r0.lc());
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& mod) {
  const FieldPtr& f = mod.field();
  Poly r = Poly::constant(f, f->one(), mod.var());
  Poly b = divrem(base, mod).second;
  r = divrem(r, mod).second;
  while (e) {
    if (e & 1) r = divrem(r * b, mod).second;
    e >>= 1;
    if (e) b = divrem(b * b, mod).second;
  }
  return r;
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw Error(ErrorKind::BadFactorization, b.to_string() + " does not divide " + a.to_string());
  return q;
}

int valuation(Poly a, const Poly& p) {
  int n = 0;
  for (;;) {
    auto [q, r] = divrem(a, p);
    if (!r.is_zero()) return n;
    a = std::move(q);
    ++n;
  }
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(const FieldPtr& f) : num_(f), den_(Poly::constant(f, f->one())) {}

RatFunc::RatFunc(Poly num) : num_(num.with_var('x')), den_(Poly::constant(num.field(), num.field()->one())) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(num.with_var('x')), den_(den.with_var('x')) { normalize(); }

RatFunc RatFunc::constant(const FieldPtr& f, Fe c) { return RatFunc(Poly::constant(f, c)); }

RatFunc RatFunc::x(const FieldPtr& f) { return RatFunc(Poly::monomial(f, f->one(), 1)); }

void RatFunc::normalize() {
  if (den_.is_zero()) throw Error(ErrorKind::DivisionByZeroPoly, "rational function with zero denominator");
  const FieldPtr f = den_.field();
  if (num_.is_zero()) {
    num_ = Poly(f);
    den_ = Poly::constant(f, f->one());
    return;
  }
  Poly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
  const Fe lc = den_.lc();
  if (lc != f->one()) {
    const Fe inv = f->inv(lc);
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFunc RatFunc::operator+(const RatFunc& b) const {
  if (is_zero()) return b;
  if (b.is_zero()) return *this;
  if (den_ == b.den_) return RatFunc(num_ + b.num_, den_);
  return RatFunc(num_ * b.den_ + b.num_ * den_, den_ * b.den_);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator-(const RatFunc& b) const { return *this + (-b); }

RatFunc RatFunc::operator*(const RatFunc& b) const {
  if (is_zero()) return *this;
  if (b.is_zero()) return b;
  if (is_poly() && b.is_poly()) return RatFunc(num_ * b.num_);
  return RatFunc(num_ * b.num_, den_ * b.den_);
}

RatFunc RatFunc::inv() const {
  if (is_zero()) throw Error(ErrorKind::ZeroInversion, "inverse of the zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::operator/(const RatFunc& b) const { return *this * b.inv(); }

RatFunc RatFunc::scaled(Fe s) const {
  if (s == Fe{}) return RatFunc(field());
  RatFunc r = *this;
  r.num_ = r.num_.scaled(s);
  return r;
}

Fe RatFunc::eval(Fe a) const {
  const Fe d = den_.eval(a);
  if (d == Fe{}) throw Error(ErrorKind::PoleAtPoint, to_string() + " has a pole at the evaluation point");
  return field()->div(num_.eval(a), d);
}

RatFunc RatFunc::embed_into(const FieldPtr& target) const {
  RatFunc r;
  r.num_ = num_.embed_into(target);
  r.den_ = den_.embed_into(target);
  return r;
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  auto wrap = [](const Poly& p) {
    const std::string s = p.to_string();
    return s.find_first_of("+ *^") != std::string::npos ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

// ---------------------------------------------------------------- TPoly

TPoly::TPoly(FieldPtr f, std::vector<RatFunc> c) : f_(std::move(f)), c_(std::move(c)) { trim(); }

void TPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

TPoly TPoly::constant(const RatFunc& c) { return TPoly(c.field(), {c}); }

TPoly TPoly::t(const FieldPtr& f) {
  return TPoly(f, {RatFunc(f), RatFunc::constant(f, f->one())});
}

TPoly TPoly::from_constant_poly(const Poly& p) {
  std::vector<RatFunc> c;
  for (Fe a : p.coeffs()) c.push_back(RatFunc::constant(p.field(), a));
  return TPoly(p.field(), std::move(c));
}

RatFunc TPoly::coeff_or_zero(std::size_t i) const { return i < c_.size() ? c_[i] : RatFunc(f_); }

bool TPoly::has_constant_coefficients() const {
  for (const auto& a : c_) {
    if (!a.is_constant()) return false;
  }
  return true;
}

bool TPoly::has_polynomial_coefficients() const {
  for (const auto& a : c_) {
    if (!a.is_poly()) return false;
  }
  return true;
}

TPoly TPoly::operator+(const TPoly& b) const {
  std::vector<RatFunc> r(std::max(c_.size(), b.c_.size()), RatFunc(f_ ? f_ : b.f_));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff_or_zero(i) + b.coeff_or_zero(i);
  return TPoly(f_ ? f_ : b.f_, std::move(r));
}

TPoly TPoly::operator-() const {
  std::vector<RatFunc> r;
  for (const auto& a : c_) r.push_back(-a);
  return TPoly(f_, std::move(r));
}

TPoly TPoly::operator-(const TPoly& b) const { return *this + (-b); }

TPoly TPoly::operator*(const TPoly& b) const {
  if (is_zero() || b.is_zero()) return TPoly(f_ ? f_ : b.f_);
  std::vector<RatFunc> r(c_.size() + b.c_.size() - 1, RatFunc(f_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * b.c_[j];
  }
  return TPoly(f_, std::move(r));
}

TPoly TPoly::scaled(const RatFunc& s) const {
  std::vector<RatFunc> r;
  for (const auto& a : c_) r.push_back(a * s);
  return TPoly(f_, std::move(r));
}

TPoly TPoly::derivative() const {
  std::vector<RatFunc> r;
  for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i].scaled(f_->from_int(static_cast<std::int64_t>(i))));
  return TPoly(f_, std::move(r));
}

TPoly TPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(c_.back().inv());
}

TPoly TPoly::embed_into(const FieldPtr& target) const {
  if (target.get() == f_.get()) return *this;
  std::vector<RatFunc> r;
  for (const auto& a : c_) r.push_back(a.embed_into(target));
  return TPoly(target, std::move(r));
}

Poly TPoly::specialize(const FieldPtr& target, Fe a) const {
  std::vector<Fe> r;
  for (const auto& c : c_) r.push_back(c.embed_into(target).eval(a));
  return Poly(target, std::move(r), 'T');
}

std::string TPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const RatFunc& c = c_[i];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string s = c.to_string();
    if (i == 0) {
      os << s;
      continue;
    }
    if (!c.is_one()) {
      if (s.find_first_of("+ /") != std::string::npos) s = "(" + s + ")";
      os << s << "*";
    }
    os << "T";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::pair<TPoly, TPoly> tpoly_divrem(const TPoly& a, const TPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZeroPoly, "division by the zero polynomial in K[T]");
  const FieldPtr f = b.field();
  if (a.degree() < b.degree()) return {TPoly(f), a};
  std::vector<RatFunc> r = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<RatFunc> q(r.size() - db, RatFunc(f));
  const RatFunc inv_lc = b.coeffs().back().inv();
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k].is_zero()) continue;
    const RatFunc c = b.is_monic() ? r[k] : r[k] * inv_lc;
    q[k - db] = c;
    for (std::size_t i = 0; i <= db; ++i) {
      if (!b.coeff(i).is_zero()) r[k - db + i] = r[k - db + i] - c * b.coeff(i);
    }
  }
  r.resize(db, RatFunc(f));
  return {TPoly(f, std::move(q)), TPoly(f, std::move(r))};
}

TPoly tpoly_gcd(const TPoly& a0, const TPoly& b0) {
  TPoly a = a0, b = b0;
  while (!b.is_zero()) {
    TPoly r = tpoly_divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RatFunc resultant(const TPoly& a0, const TPoly& b0) {
  const FieldPtr f = a0.field();
  if (a0.is_zero() || b0.is_zero()) return RatFunc(f);
  TPoly a = a0, b = b0;
  RatFunc acc = RatFunc::constant(f, f->one());
  for (;;) {
    const int da = a.degree(), db = b.degree();
    if (db == 0) {
      RatFunc r = acc;
      for (int i = 0; i < da; ++i) r = r * b.coeff(0);
      return r;
    }
    TPoly r = tpoly_divrem(a, b).second;
    if (r.is_zero()) return RatFunc(f);
    const int dr = r.degree();
    if ((da % 2 == 1) && (db % 2 == 1)) acc = -acc;
    for (int i = 0; i < da - dr; ++i) acc = acc * b.coeffs().back();
    a = std::move(b);
    b = std::move(r);
  }
}

RatFunc discriminant(const TPoly& g) {
  const FieldPtr f = g.field();
  const int s = g.degree();
  if (s < 1) throw Error(ErrorKind::InvalidArgument, "discriminant needs degree >= 1");
  RatFunc r = resultant(g, g.derivative());
  if (static_cast<long>(s) * (s - 1) / 2 % 2 == 1) r = -r;
  return r / g.coeffs().back();
}

void make_separable_check(const TPoly& g) {
  if (g.degree() < 1 || !g.is_monic()) {
    throw Error(ErrorKind::NotMonic, "input polynomial must be monic in T of degree >= 1");
  }
  if (g.coeff(0).is_zero()) {
    throw Error(ErrorKind::ZeroConstantTerm, "input polynomial must satisfy G(0) != 0");
  }
  if (discriminant(g).is_zero()) {
    throw Error(ErrorKind::Inseparable, "input polynomial must be separable (nonzero discriminant)");
  }
}

ResidueExtension residue_extension(const Poly& irreducible) {
  const FieldPtr& ell = irreducible.field();
  const int e = irreducible.degree();
  if (e < 1) throw Error(ErrorKind::InvalidArgument, "residue extension needs a nonconstant modulus");
  if (e == 1) {
    const Poly m = irreducible.monic();
    return {ell, ell->neg(m.coeff(0))};
  }
  FieldPtr big = Field::extension_of(ell, static_cast<std::uint32_t>(e));
  const Poly lifted = irreducible.embed_into(big);
  for (std::uint32_t c = 0; c < big->size(); ++c) {
    if (lifted.eval(Fe{c}) == Fe{}) return {big, Fe{c}};
  }
  throw Error(ErrorKind::BadFactorization, "no root of " + irreducible.to_string() + " in its splitting extension");
}

}  // namespace hf
