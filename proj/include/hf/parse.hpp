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

#ifndef HF_PARSE_HPP
#define HF_PARSE_HPP

#include <string_view>
#include <vector>

#include "hf/poly.hpp"

namespace hf {

/// Parses an expression over the variables x, T and the field generator z.
/// Operators: + - * / ^ and parentheses; juxtaposition multiplies ("2x",
/// "(x+1)T"). Division is only allowed by T-free nonzero expressions.
TPoly parse_tpoly(const FieldPtr& field, std::string_view text);

/// Parses an element of K = k(x); rejects any occurrence of T.
RatFunc parse_ratfunc(const FieldPtr& field, std::string_view text);

/// Comma-separated list of rational functions, e.g. "1, x, x^2".
std::vector<RatFunc> parse_basis(const FieldPtr& field, std::string_view text);

}  // namespace hf

#endif  // HF_PARSE_HPP
