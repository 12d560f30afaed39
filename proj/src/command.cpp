#include "dress/command.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "dress/certificate.hpp"
#include "dress/expression.hpp"
#include "dress/factorization.hpp"
#include "dress/ideals.hpp"
#include "dress/laurent.hpp"
#include "dress/number_rings.hpp"

namespace dress {

namespace {

using nlohmann::json;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Invocation {
  std::vector<std::string> operands;
  std::map<std::string, std::string> options;
};

// Handlers fill the result and return true for a positive answer.
using Handler = std::function<bool(const Invocation&, json&)>;

const std::map<std::string, bool>& known_options() {
  // name -> takes a value
  static const std::map<std::string, bool> opts{
      {"--json", false}, {"--form", true}, {"--base", true}, {"--order", true}, {"--precision", true}};
  return opts;
}

Invocation split_args(const std::vector<std::string>& args, bool& json_output) {
  Invocation inv;
  for (std::size_t i = 1; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a.rfind("--", 0) != 0) {
      inv.operands.push_back(a);
      continue;
    }
    std::string name = a;
    std::optional<std::string> value;
    if (auto eq = a.find('='); eq != std::string::npos) {
      name = a.substr(0, eq);
      value = a.substr(eq + 1);
    }
    auto it = known_options().find(name);
    if (it == known_options().end()) throw UsageError("unknown flag " + name);
    if (!it->second) {
      if (value) throw UsageError("flag " + name + " takes no value");
      json_output = true;
      continue;
    }
    if (!value) {
      if (i + 1 >= args.size()) throw UsageError("flag " + name + " needs a value");
      value = args[++i];
    }
    inv.options[name] = *value;
  }
  return inv;
}

void require_operands(const Invocation& inv, std::size_t n) {
  if (inv.operands.size() != n) {
    throw UsageError("expected " + std::to_string(n) + " operand(s), got " + std::to_string(inv.operands.size()));
  }
}

RationalFunction parse_rf(const std::string& text) {
  Expression e = parse_expression(text);
  if (e.is_matrix()) throw UsageError("expected a rational function, got a matrix: " + text);
  return std::get<RationalFunction>(e.value);
}

Polynomial parse_poly(const std::string& text) {
  RationalFunction r = parse_rf(text);
  if (!r.is_polynomial()) throw UsageError("expected a polynomial: " + text);
  return r.num();
}

Rational parse_constant(const std::string& text) {
  Polynomial p = parse_poly(text);
  if (!p.is_constant()) throw UsageError("expected a rational number: " + text);
  return p.coeff(0);
}

DressElement parse_element(const std::string& text) { return DressElement::from(parse_rf(text)); }

Mat2 parse_mat(const std::string& text) {
  Expression e = parse_expression(text);
  if (!e.is_matrix()) throw UsageError("expected a matrix [[a, b], [c, d]]: " + text);
  const auto& m = std::get<RfMatrix>(e.value).entries;
  return Mat2::from(m[0], m[1], m[2], m[3]);
}

std::string str(const DressElement& e) { return to_string(e.value()); }

int integer_option(const Invocation& inv, const std::string& name) {
  auto it = inv.options.find(name);
  if (it == inv.options.end()) throw UsageError("missing " + name);
  try {
    std::size_t used = 0;
    int v = std::stoi(it->second, &used);
    if (used != it->second.size()) throw UsageError("malformed " + name);
    return v;
  } catch (const std::logic_error&) {
    throw UsageError("malformed " + name);
  }
}

json factorization_json(const Factorization& f) {
  json factors = json::array();
  for (const auto& m : f.factors) factors.push_back(to_string(m));
  return {{"target", to_string(f.target)},
          {"factors", factors},
          {"verified", verify_factorization(f).passed},
          {"count", f.factors.size()}};
}

std::string_view failure_name(VerificationFailure f) {
  switch (f) {
    case VerificationFailure::None: return "none";
    case VerificationFailure::EntryNotInRing: return "entry-not-in-ring";
    case VerificationFailure::NotIdempotent: return "not-idempotent";
    case VerificationFailure::ProductMismatch: return "product-mismatch";
  }
  return "?";
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"member",
       [](const Invocation& inv, json& out) {
         require_operands(inv, 1);
         RationalFunction r = parse_rf(inv.operands[0]);
         auto failure = membership_failure(r);
         out = {{"value", to_string(r)}, {"member", !failure}, {"reason", nullptr}};
         if (failure) out["reason"] = std::string(to_string(*failure));
         return !failure;
       }},
      {"unit",
       [](const Invocation& inv, json& out) {
         require_operands(inv, 1);
         RationalFunction r = parse_rf(inv.operands[0]);
         bool u = is_unit(r);
         out = {{"value", to_string(r)}, {"unit", u}};
         return u;
       }},
      {"gamma",
       [](const Invocation& inv, json& out) {
         require_operands(inv, 1);
         Polynomial p = parse_poly(inv.operands[0]);
         bool g = is_gamma(p);
         out = {{"value", to_string(p)}, {"gamma", g}};
         return g;
       }},
      {"gamma-plus",
       [](const Invocation& inv, json& out) {
         require_operands(inv, 1);
         Polynomial p = parse_poly(inv.operands[0]);
         bool g = is_gamma_plus(p);
         out = {{"value", to_string(p)}, {"gamma_plus", g}};
         return g;
       }},
      {"sign-at-roots",
       [](const Invocation& inv, json& out) {
         require_operands(inv, 2);
         Polynomial q = parse_poly(inv.operands[0]);
         Polynomial p = parse_poly(inv.operands[1]);
         SignPattern s = sign_at_roots(q, p);
         out = {{"q", to_string(q)}, {"p", to_string(p)}, {"pattern", std::string(to_string(s))}};
         return true;
       }},
      {"principal",
       [](const Invocation& inv, json& out) {
         require_operands(inv, 2);
         PrincipalityReport rep = analyze_principality(parse_element(inv.operands[0]), parse_element(inv.operands[1]));
         out = {{"principal", rep.principal},
                {"s", rep.s},
                {"M", to_string(rep.gcd_part)},
                {"fprime", to_string(rep.fprime)},
                {"gprime", to_string(rep.gprime)},
                {"denominator", to_string(rep.denominator)},
                {"generator", nullptr},
                {"expansion", nullptr}};
         if (rep.generator) out["generator"] = str(*rep.generator);
         if (rep.expansion) out["expansion"] = {str(rep.expansion->first), str(rep.expansion->second)};
         return rep.principal;
       }},
      {"square-ideal",
       [](const Invocation& inv, json& out) {
         if (inv.operands.empty()) throw UsageError("expected at least one generator");
         std::vector<DressElement> gens;
         json shown = json::array();
         for (const auto& t : inv.operands) {
           gens.push_back(parse_element(t));
           shown.push_back(str(gens.back()));
         }
         DressElement s = ideal_square(IdealGens(std::move(gens)));
         out = {{"generators", shown}, {"square_generator", str(s)}, {"unit", is_unit(s)}};
         return true;
       }},
      {"inverse-ideal",
       [](const Invocation& inv, json& out) {
         require_operands(inv, 2);
         DressElement a = parse_element(inv.operands[0]);
         DressElement b = parse_element(inv.operands[1]);
         IdealInverse r = ideal_inverse(a, b);
         RationalFunction witness = a.value() * r.first + b.value() * r.second;
         out = {{"inverse", {to_string(r.first), to_string(r.second)}},
                {"s", str(r.certificate)},
                {"witness", to_string(witness)}};
         return true;
       }},
      {"factor",
       [](const Invocation& inv, json& out) {
         require_operands(inv, 1);
         Mat2 m = parse_mat(inv.operands[0]);
         if (!m.has_zero_second_row()) throw UsageError("factor expects a matrix of the form [[p, q], [0, 0]]");
         out = factorization_json(factor_row_matrix(m.a, m.b));
         return true;
       }},
      {"verify",
       [](const Invocation& inv, json& out) {
         if (inv.operands.empty()) throw UsageError("expected a target matrix followed by factors");
         Factorization f{parse_mat(inv.operands[0]), {}};
         for (std::size_t i = 1; i < inv.operands.size(); ++i) f.factors.push_back(parse_mat(inv.operands[i]));
         VerificationReport rep = verify_factorization(f);
         out = {{"verified", rep.passed},
                {"failure", rep.passed ? json(nullptr) : json(std::string(failure_name(rep.failure)))},
                {"index", rep.passed ? json(nullptr) : json(rep.index)},
                {"count", f.factors.size()}};
         return rep.passed;
       }},
      {"certificate",
       [](const Invocation& inv, json& out) {
         require_operands(inv, 2);
         Polynomial x = parse_poly(inv.operands[0]);
         Polynomial y = parse_poly(inv.operands[1]);
         std::string form = inv.options.count("--form") != 0 ? inv.options.at("--form") : "a";
         if (form != "a" && form != "b") throw UsageError("--form must be a or b");
         PositivityCertificate c = form == "a" ? positivity_certificate(x, y) : positivity_certificate_b(x, y);
         out = {{"form", form == "a" ? "x^2 + y*beta" : "x*beta + y^2"},
                {"beta", to_string(c.beta)},
                {"delta", to_string(c.delta)},
                {"scale", to_string(c.scale)},
                {"base", to_string(c.base)}};
         return true;
       }},
      {"zs-member",
       [](const Invocation& inv, json& out) {
         require_operands(inv, 1);
         Rational q = parse_constant(inv.operands[0]);
         bool m = zs_member(q);
         out = {{"value", to_string(q)}, {"member", m}};
         return m;
       }},
      {"zs-gcd",
       [](const Invocation& inv, json& out) {
         require_operands(inv, 2);
         ZSGcd g = zs_gcd(parse_constant(inv.operands[0]), parse_constant(inv.operands[1]));
         out = {{"g", to_string(g.g)}, {"u", to_string(g.u)}, {"v", to_string(g.v)}};
         return true;
       }},
      {"laurent-member",
       [](const Invocation& inv, json& out) {
         auto base_it = inv.options.find("--base");
         if (base_it == inv.options.end()) throw UsageError("missing --base (real or rational)");
         LaurentBase base;
         if (base_it->second == "real") {
           base = LaurentBase::RealHenselian;
         } else if (base_it->second == "rational") {
           base = LaurentBase::RationalHenselian;
         } else {
           throw UsageError("--base must be real or rational");
         }
         int order = integer_option(inv, "--order");
         int precision = integer_option(inv, "--precision");
         std::vector<Rational> coeffs;
         for (const auto& t : inv.operands) coeffs.push_back(parse_constant(t));
         TruncLaurent s(order, std::move(coeffs), precision, base);
         bool m = laurent_member(s);
         out = {{"order", s.order()}, {"precision", s.precision()}, {"member", m}};
         return m;
       }},
      {"stable-witness",
       [](const Invocation& inv, json& out) {
         require_operands(inv, 1);
         DressElement z = parse_element(inv.operands[0]);
         StableRangeEvidence ev = stable_range_witness_check(z);
         auto sign_text = [](int s) { return s > 0 ? "+" : s < 0 ? "-" : "0"; };
         out = {{"z", str(z)},
                {"comaximal", ev.pair_is_comaximal},
                {"f1", to_string(ev.f1)},
                {"sign_at_1", sign_text(ev.sign_at_one)},
                {"sign_at_minus_1", sign_text(ev.sign_at_minus_one)},
                {"non_unit", ev.non_unit}};
         return ev.non_unit;
       }},
  };
  return table;
}

}  // namespace

std::string usage() {
  return "usage: dressring <command> <operands...> [--json]\n"
         "\n"
         "  member EXPR                  membership in D\n"
         "  unit EXPR                    unit of D\n"
         "  gamma POLY                   no real roots\n"
         "  gamma-plus POLY              positive everywhere\n"
         "  sign-at-roots Q P            signs of Q at the real roots of P\n"
         "  principal A B                principality of (A, B) with generator\n"
         "  square-ideal A [B ...]       generator s of J^2\n"
         "  inverse-ideal A B            inverse (A/s, B/s) with s = A^2 + B^2\n"
         "  factor MATRIX                idempotent factors of [[p, q], [0, 0]]\n"
         "  verify TARGET F1 ... Fn      check F1 * ... * Fn = TARGET\n"
         "  certificate X Y [--form a|b] positivity certificate for (X, Y)\n"
         "  zs-member Q                  membership in Z_S\n"
         "  zs-gcd A B                   generator of (A, B) in Z_S\n"
         "  laurent-member C0 C1 ... --base real|rational --order K --precision N\n"
         "  stable-witness Z             sign evidence that a + b Z is not a unit\n"
         "\n"
         "exit status: 0 yes, 1 no, 2 error\n";
}

Report execute(const std::vector<std::string>& args) {
  Report rep;
  rep.command = args.empty() ? "" : args[0];
  for (const auto& a : args) {
    if (a == "--json") rep.json_output = true;
  }
  try {
    if (args.empty()) throw UsageError("missing command");
    auto it = handlers().find(args[0]);
    if (it == handlers().end()) throw UsageError("unknown command '" + args[0] + "'");
    Invocation inv = split_args(args, rep.json_output);
    json result;
    bool positive = it->second(inv, result);
    rep.ok = true;
    rep.result = std::move(result);
    rep.exit_code = positive ? 0 : 1;
  } catch (const HypothesisNotMet& e) {
    rep.ok = false;
    rep.error = e.what();
    rep.exit_code = 1;
  } catch (const std::exception& e) {
    rep.ok = false;
    rep.error = e.what();
    rep.exit_code = 2;
  }
  return rep;
}

json to_json(const Report& r) {
  return {{"ok", r.ok},
          {"command", r.command},
          {"result", r.error ? json(nullptr) : r.result},
          {"error", r.error ? json(*r.error) : json(nullptr)}};
}

std::string render(const Report& r) {
  if (r.json_output) return to_json(r).dump() + "\n";
  std::ostringstream os;
  if (r.error) {
    os << r.command << ": error: " << *r.error << "\n";
    return os.str();
  }
  for (const auto& [key, value] : r.result.items()) {
    os << key << ": ";
    if (value.is_string()) {
      os << value.get<std::string>();
    } else if (value.is_array()) {
      for (std::size_t i = 0; i < value.size(); ++i) {
        os << (i == 0 ? "" : "\n  ") << (value[i].is_string() ? value[i].get<std::string>() : value[i].dump());
      }
    } else {
      os << value.dump();
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace dress
