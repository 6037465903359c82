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

#include "hf/parse.hpp"

#include <cctype>
#include <string>

namespace hf {

namespace {

class ExprParser {
 public:
  ExprParser(FieldPtr f, std::string_view s) : f_(std::move(f)), s_(s) {}

  TPoly run() {
    TPoly v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::ParseError,
                why + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
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
  bool starts_atom() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return c == '(' || c == 'x' || c == 'T' || c == 'z' || std::isdigit(static_cast<unsigned char>(c));
  }

  TPoly expr() {
    TPoly v;
    if (eat('-')) {
      v = -term();
    } else {
      eat('+');
      v = term();
    }
    for (;;) {
      if (eat('+')) {
        v = v + term();
      } else if (eat('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  TPoly term() {
    TPoly v = power();
    for (;;) {
      if (eat('*')) {
        v = v * power();
      } else if (eat('/')) {
        const std::size_t at = pos_;
        TPoly d = power();
        if (d.degree() != 0) {
          pos_ = at;
          fail(d.is_zero() ? "division by zero" : "division by an expression involving T");
        }
        v = v.scaled(d.coeff(0).inv());
      } else if (starts_atom()) {
        v = v * power();
      } else {
        return v;
      }
    }
  }

  TPoly power() {
    TPoly base = atom();
    if (!eat('^')) return base;
    skip();
    std::uint64_t e = 0;
    bool any = false;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      e = e * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0');
      any = true;
      if (e > 100000) fail("exponent too large");
    }
    if (!any) fail("exponent expected");
    TPoly r = TPoly::constant(RatFunc::constant(f_, f_->one()));
    while (e) {
      if (e & 1) r = r * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return r;
  }

  TPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      TPoly v = expr();
      if (!eat(')')) fail("')' expected");
      return v;
    }
    if (c == 'x') {
      ++pos_;
      return TPoly::constant(RatFunc::x(f_));
    }
    if (c == 'T') {
      ++pos_;
      return TPoly::t(f_);
    }
    if (c == 'z') {
      ++pos_;
      if (f_->degree() == 1) fail("generator z used over a prime field");
      return TPoly::constant(RatFunc::constant(f_, f_->generator()));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t n = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        n = (n * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0')) % f_->characteristic();
      }
      return TPoly::constant(RatFunc::constant(f_, f_->from_int(static_cast<std::int64_t>(n))));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  FieldPtr f_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

TPoly parse_tpoly(const FieldPtr& field, std::string_view text) { return ExprParser(field, text).run(); }

RatFunc parse_ratfunc(const FieldPtr& field, std::string_view text) {
  TPoly p = parse_tpoly(field, text);
  if (p.degree() > 0) throw Error(ErrorKind::ParseError, "T not allowed in '" + std::string(text) + "'");
  return p.coeff_or_zero(0);
}

std::vector<RatFunc> parse_basis(const FieldPtr& field, std::string_view text) {
  std::vector<RatFunc> out;
  std::size_t start = 0, depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')' && depth > 0) --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      out.push_back(parse_ratfunc(field, text.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace hf
