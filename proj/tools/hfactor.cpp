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

// hfactor: factor polynomials over F_q(x) from the command line.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hf/brute.hpp"
#include "hf/parse.hpp"
#include "hf/restricted.hpp"
#include "json.hpp"

using json = nlohmann::json;
using namespace hf;

namespace {

struct Input {
  FieldPtr field;
  TPoly g;
  std::string text;
};

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  const auto e = s.find_last_not_of(" \t\r\n");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

// "field: GF(p^d)" then "G = <expr>".
Input read_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::string line, field_spec, expr;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("field:", 0) == 0) {
      field_spec = trim(line.substr(6));
    } else if (line.rfind("G", 0) == 0 && line.find('=') != std::string::npos) {
      expr = trim(line.substr(line.find('=') + 1));
    } else {
      throw Error(ErrorKind::ParseError, "unexpected line in input file: " + line);
    }
  }
  if (field_spec.empty() || expr.empty()) throw Error(ErrorKind::ParseError, "input file needs 'field:' and 'G =' lines");
  const FieldPtr f = Field::parse_spec(field_spec);
  return {f, parse_tpoly(f, expr), expr};
}

// alpha=<element>@GF(p^e), the residue field an extension of k.
PlaceData parse_place(const std::string& text, const FieldPtr& k) {
  const auto eq = text.find('='), at = text.find('@');
  if (text.rfind("alpha", 0) != 0 || eq == std::string::npos || at == std::string::npos || at < eq) {
    throw Error(ErrorKind::ParseError, "place must look like alpha=<element>@GF(p^e)");
  }
  const FieldPtr spec = Field::parse_spec(trim(text.substr(at + 1)));
  if (spec->characteristic() != k->characteristic() || spec->degree() % k->degree() != 0) {
    throw Error(ErrorKind::PlaceInvalid, spec->spec() + " does not extend " + k->spec());
  }
  const std::uint32_t e = spec->degree() / k->degree();
  const FieldPtr ell = e == 1 ? k : Field::extension_of(k, e);
  return make_place(k, ell, ell->parse(trim(text.substr(eq + 1, at - eq - 1))));
}

// "1,x;1" -> V_0 = {1, x}, V_1 = {1}.
std::vector<std::vector<RatFunc>> parse_spaces(const FieldPtr& f, const std::string& text) {
  std::vector<std::vector<RatFunc>> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    part = trim(part);
    out.push_back(part.empty() ? std::vector<RatFunc>{} : parse_basis(f, part));
  }
  return out;
}

json place_json(const PlaceData& p) {
  return {{"alpha", p.ell->format(p.alpha)}, {"field", p.ell->spec()}, {"degree", p.degree}};
}

json report_json(const FactorReport& rep, std::size_t r) {
  json leaves = json::array();
  for (const LeafRecord& l : rep.leaves) {
    leaves.push_back({{"path", l.path}, {"rank", l.rank}, {"columns", l.cols}, {"reduced", l.reduced},
                      {"status", l.status}, {"detail", l.detail}});
  }
  return {{"kind", "elimination"}, {"r", r},         {"outcome", to_string(rep.outcome)},
          {"delta", rep.delta},    {"q", rep.q},     {"initial_q", rep.initial_q}, {"m", rep.m},
          {"leaves", leaves}};
}

json factor_json(const FoundFactor& f) {
  return {{"poly", f.h.to_string()},
          {"field", f.field->spec()},
          {"field_of_definition", f.field_of_definition},
          {"summand_path", f.path}};
}

json k_factor_json(const TPoly& h) {
  return {{"poly", h.to_string()},
          {"field", h.field()->spec()},
          {"field_of_definition", h.field()->spec()},
          {"summand_path", json::array()}};
}

std::string path_text(const std::vector<std::string>& path) {
  std::string s;
  for (const auto& p : path) s += (s.empty() ? "" : " / ") + p;
  return s.empty() ? "root" : s;
}

void print_trace(const std::vector<FactorReport>& reports) {
  for (const auto& rep : reports) {
    for (const auto& line : rep.trace) std::cerr << line << "\n";
  }
}

struct Options {
  std::string mode = "factor";
  std::string field, poly, input, place, spaces;
  std::size_t r = 1;
  bool trace = false, as_json = false;
  std::uint64_t seed = 0;
};

int run(const Options& o) {
  Input in;
  if (!o.input.empty()) {
    in = read_input_file(o.input);
  } else {
    if (o.field.empty() || o.poly.empty()) throw Error(ErrorKind::InvalidArgument, "give --field and --poly, or --input");
    in.field = Field::parse_spec(o.field);
    in.g = parse_tpoly(in.field, o.poly);
    in.text = o.poly;
  }
  const TPoly& g = in.g;
  make_separable_check(g);

  json out{{"input", g.to_string()}, {"field", in.field->spec()}, {"mode", o.mode}};
  std::ostringstream text;
  text << "field: " << in.field->spec() << "\ninput: " << g.to_string() << "\nmode: " << o.mode << "\n";
  std::optional<PlaceData> fixed;
  if (!o.place.empty()) fixed = parse_place(o.place, in.field);

  auto show_place = [&](const PlaceData& p) {
    out["place"] = place_json(p);
    text << "place: alpha = " << p.ell->format(p.alpha) << " in " << p.ell->spec() << "\n";
  };
  auto show_bounds = [&](const std::vector<FactorReport>& reps) {
    out["delta"] = reps.empty() ? json(nullptr) : json(reps.front().delta);
    out["q"] = reps.empty() ? json(nullptr) : json(reps.front().q);
    if (!reps.empty()) {
      const hf::FactorReport& r0 = reps.front();
      text << "delta: " << r0.delta << "  q: " << r0.q;
      if (r0.initial_q != r0.q) text << " (raised from " << r0.initial_q << ")";
      text << "\n";
    }
  };

  json certs = json::array();
  json factors = json::array();

  if (o.mode == "factor") {
    if (g.degree() > 1 && !g.has_constant_coefficients()) {
      if (!fixed) fixed = find_place(g);
      check_place(g, *fixed);
      show_place(*fixed);
    }
    const Factorization fac = factor_over_K(g, o.seed, fixed);
    show_bounds(fac.reports);
    TPoly prod = TPoly::constant(RatFunc::constant(in.field, in.field->one()));
    for (const TPoly& h : fac.factors) prod = prod * h;
    if (!(prod == g)) throw std::logic_error("factor product does not reproduce the input");
    for (const TPoly& h : fac.factors) {
      factors.push_back(k_factor_json(h));
      text << "factor: " << h.to_string() << "\n";
    }
    for (std::size_t i = 0; i < fac.reports.size(); ++i) certs.push_back(report_json(fac.reports[i], 0));
    certs.push_back({{"kind", "product"}, {"factors", fac.factors.size()}, {"verified", true}});
    text << "certificate: product of " << fac.factors.size() << " factors equals the input\n";
    if (o.trace) print_trace(fac.reports);
  } else if (o.mode == "irreducible") {
    if (g.degree() > 1) {
      if (!fixed) fixed = find_place(g);
      check_place(g, *fixed);
      show_place(*fixed);
    }
    const IrreducibilityResult res = absolutely_irreducible(g, o.seed, fixed);
    show_bounds(res.reports);
    out["absolutely_irreducible"] = res.absolutely_irreducible;
    text << "absolutely irreducible: " << (res.absolutely_irreducible ? "yes" : "no") << "\n";
    if (res.witness) {
      factors.push_back(factor_json(*res.witness));
      out["witness"] = factor_json(*res.witness);
      text << "witness: " << res.witness->h.to_string() << "  (over " << res.witness->field_of_definition;
      if (res.witness->field->spec() != res.witness->field_of_definition) {
        text << ", written in " << res.witness->field->spec();
      }
      text << ")\n";
    }
    for (std::size_t i = 0; i < res.reports.size(); ++i) certs.push_back(report_json(res.reports[i], i + 1));
    if (o.trace) print_trace(res.reports);
  } else if (o.mode == "roots") {
    const auto spaces = parse_spaces(in.field, o.spaces.empty() ? "1" : o.spaces);
    if (spaces.size() != 1) throw Error(ErrorKind::InvalidSubspace, "roots mode takes one space");
    if (g.degree() > 1) {
      const SubspaceSpec spec = normalize_spec(g, {1, spaces});
      if (!fixed) fixed = find_place(g, space_denominators(spec));
      check_place(g, *fixed, space_denominators(spec));
      show_place(*fixed);
    }
    json roots = json::array();
    for (const RatFunc& rho : roots_in_span(g, spaces[0], o.seed, fixed)) {
      roots.push_back(rho.to_string());
      factors.push_back(k_factor_json(TPoly(in.field, {-rho, RatFunc::constant(in.field, in.field->one())})));
      text << "root: " << rho.to_string() << "\n";
    }
    out["roots"] = roots;
  } else if (o.mode == "restricted") {
    const SubspaceSpec spec = normalize_spec(g, {o.r, parse_spaces(in.field, o.spaces.empty() ? "1" : o.spaces)});
    if (!fixed) fixed = find_place(g, space_denominators(spec));
    show_place(*fixed);
    const FactorReport rep = restricted_factor(g, spec, *fixed, {true, 0, o.seed});
    show_bounds({rep});
    out["outcome"] = to_string(rep.outcome);
    text << "outcome: " << to_string(rep.outcome) << "\n";
    for (const FoundFactor& f : rep.factors) {
      factors.push_back(factor_json(f));
      text << "factor: " << f.h.to_string() << "  [" << path_text(f.path) << "]\n";
    }
    for (const LeafRecord& l : rep.leaves) {
      text << "leaf [" << path_text(l.path) << "]: rank " << l.rank << " of " << l.cols << ", " << l.status;
      if (!l.detail.empty()) text << " (" << l.detail << ")";
      text << "\n";
    }
    certs.push_back(report_json(rep, o.r));
    if (o.trace) print_trace({rep});
  } else if (o.mode == "oracle") {
    const std::vector<TPoly> fac = oracle_factorization(g);
    for (const TPoly& h : fac) {
      factors.push_back(k_factor_json(h));
      text << "factor: " << h.to_string() << "\n";
    }
    const bool abs_irr = oracle_absolute_irreducible(g);
    out["absolutely_irreducible"] = abs_irr;
    text << "absolutely irreducible: " << (abs_irr ? "yes" : "no") << "\n";
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown mode " + o.mode);
  }

  out["factors"] = factors;
  out["certificates"] = certs;
  if (o.as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << text.str();
  }
  return 0;
}

std::string assumption_text(ErrorKind k) {
  switch (k) {
    case ErrorKind::Inseparable: return "G must be separable (nonzero discriminant)";
    case ErrorKind::ZeroConstantTerm: return "G must have a nonzero constant term";
    case ErrorKind::NotMonic: return "G must be monic in T";
    case ErrorKind::ParseError: return "input could not be parsed";
    case ErrorKind::PlaceInvalid: return "the expansion point must avoid poles and discriminant zeros";
    case ErrorKind::InvalidSubspace: return "coefficient spaces must be independent and V_0 must contain 1";
    case ErrorKind::InvalidArgument: return "invalid argument";
    default: return "input contract violated";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Factor polynomials over F_q(x) with Hasse-derivative Wronskians"};
  Options o;
  app.add_option("--mode", o.mode, "factor | irreducible | roots | restricted | oracle")
      ->check(CLI::IsMember({"factor", "irreducible", "roots", "restricted", "oracle"}));
  app.add_option("--field", o.field, "constant field, e.g. GF(2) or GF(3^2)");
  app.add_option("--poly", o.poly, "monic polynomial in T with coefficients in k(x)");
  app.add_option("--input", o.input, "file with 'field: GF(p^d)' and 'G = <expr>' lines");
  app.add_option("--place", o.place, "expansion point alpha=<element>@GF(p^e)");
  app.add_option("--r", o.r, "factor degree for restricted mode");
  app.add_option("--spaces,--space", o.spaces, "bases, elements separated by ',' and spaces by ';'");
  app.add_flag("--trace", o.trace, "write the elimination trace (JSON lines) to stderr");
  app.add_flag("--json", o.as_json, "print JSON");
  app.add_option("--seed", o.seed, "seed for residue factorisation");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    return run(o);
  } catch (const Error& e) {
    std::cerr << "error: " << assumption_text(e.kind()) << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
