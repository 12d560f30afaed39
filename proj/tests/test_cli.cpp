#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cli_support.hpp"
#include "dress/errors.hpp"
#include "dress/expression.hpp"

using namespace dress;
using nlohmann::json;
using testing_support::Gen;

namespace {

const Polynomial X = Polynomial::x();

Report run(std::vector<std::string> args) {
  args.push_back("--json");
  Report r = execute(args);
  CHECK(testing_support::schema_violation(to_json(r)) == "");
  return r;
}

}  // namespace

TEST_SUITE("parser") {
  TEST_CASE("rational function") {
    Expression e = parse_expression("X/(X^2+1)");
    REQUIRE_FALSE(e.is_matrix());
    const auto& r = std::get<RationalFunction>(e.value);
    CHECK(r.num() == X);
    CHECK(r.den() == X * X + 1);
  }
  TEST_CASE("matrix") {
    Expression e = parse_expression("[[X/(X^2+1), (X+1)/(X^2+1)],[0,0]]");
    REQUIRE(e.is_matrix());
    const auto& m = std::get<RfMatrix>(e.value);
    CHECK(m.entries[1] == RationalFunction::normalize(X + 1, X * X + 1));
    CHECK(m.entries[3].is_zero());
  }
  TEST_CASE("syntax error carries the offset") {
    try {
      (void)parse_expression("1/(X^2-");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.offset() == 7);
    }
    CHECK_THROWS_AS(parse_expression("X +* 2"), ParseError);
    CHECK_THROWS_AS(parse_expression("[[1, 2], [3]]"), ParseError);
    CHECK_THROWS_AS(parse_expression("X^-1"), ParseError);
    CHECK_THROWS_AS(parse_expression("2 3"), ParseError);
  }
  TEST_CASE("division by zero is an evaluation error") {
    CHECK_THROWS_AS(parse_expression("1/(X - X)"), EvaluationError);
  }
  TEST_CASE("precedence and associativity") {
    auto value = [](const char* t) { return std::get<RationalFunction>(parse_expression(t).value); };
    CHECK(value("8/4/2") == RationalFunction(1));
    CHECK(value("2-3-4") == RationalFunction(-5));
    CHECK(value("-X^2") == RationalFunction(-(X * X)));
    CHECK(value("2*X^2^2") == RationalFunction(2 * X.pow(4)));
    CHECK(value("  3 / 6 ") == RationalFunction(Rational(1, 2)));
  }
  TEST_CASE("property: print and reparse is a fixed point") {
    Gen g(7001);
    int done = 0;
    for (int i = 0; done < 500; ++i) {
      std::string text = testing_support::random_expression(g, 4);
      std::optional<Expression> e;
      try {
        e = parse_expression(text);
      } catch (const EvaluationError&) {
        continue;
      }
      std::string printed = to_string(e->value);
      Expression again = parse_expression(printed);
      CHECK(again.value == e->value);
      CHECK(to_string(again.value) == printed);
      ++done;
    }
  }
  TEST_CASE("matrices round-trip") {
    Expression e = parse_expression("[[X/(X^2+1), -(1/2)],[X^2/(X^2+X+1), 0]]");
    std::string printed = to_string(e.value);
    CHECK(printed == "[[(X)/(X^2 + 1), -(1/2)], [(X^2)/(X^2 + X + 1), 0]]");
    CHECK(parse_expression(printed).value == e.value);
  }
}

TEST_SUITE("commands") {
  TEST_CASE("member") {
    Report r = run({"member", "X/(X^2+1)"});
    CHECK(r.ok);
    CHECK(r.exit_code == 0);
    CHECK(r.result["member"] == true);
    Report no = run({"member", "1/(X^2-1)"});
    CHECK(no.exit_code == 1);
    CHECK(no.result["reason"] == "denominator has real roots");
  }
  TEST_CASE("principal with odd s") {
    Report r = run({"principal", "1/(X^2+1)", "X/(X^2+1)"});
    CHECK(r.ok);
    CHECK(r.exit_code == 1);
    CHECK(r.result["principal"] == false);
    CHECK(r.result["s"] == 1);
    CHECK(r.result["generator"].is_null());
  }
  TEST_CASE("principal with even s") {
    Report r = run({"principal", "X/(X^2+1)^2", "X^3/(X^2+1)^2"});
    CHECK(r.exit_code == 0);
    CHECK(r.result["generator"] == "(X)/(X^2 + 1)");
  }
  TEST_CASE("factor produces four verified factors that re-verify") {
    Report r = run({"factor", "[[X/(X^2+1),(X+1)/(X^2+1)],[0,0]]"});
    REQUIRE(r.ok);
    CHECK(r.exit_code == 0);
    CHECK(r.result["count"] == 4);
    CHECK(r.result["verified"] == true);
    std::vector<std::string> args{"verify", r.result["target"].get<std::string>()};
    for (const auto& f : r.result["factors"]) args.push_back(f.get<std::string>());
    Report v = run(args);
    CHECK(v.exit_code == 0);
    CHECK(v.result["verified"] == true);
  }
  TEST_CASE("verify reports the first failure") {
    Report v = run({"verify", "[[1,0],[0,0]]", "[[2,0],[0,0]]"});
    CHECK(v.exit_code == 1);
    CHECK(v.result["failure"] == "not-idempotent");
    CHECK(v.result["index"] == 0);
    Report m = run({"verify", "[[1,1],[0,0]]", "[[1,0],[0,0]]"});
    CHECK(m.result["failure"] == "product-mismatch");
  }
  TEST_CASE("factor outside the hypotheses is a negative answer") {
    Report r = run({"factor", "[[(X^2-1)/(X^2+1)^2, (X^3-4*X)/(X^2+1)^2],[0,0]]"});
    CHECK_FALSE(r.ok);
    CHECK(r.exit_code == 1);
  }
  TEST_CASE("negative operands are not flags") {
    Report r = run({"gamma", "-X^2-1"});
    CHECK(r.ok);
    CHECK(r.result["gamma"] == true);
    Report plus = run({"gamma-plus", "-X^2-1"});
    CHECK(plus.exit_code == 1);
  }
  TEST_CASE("errors use exit code 2") {
    CHECK(run({"frobnicate", "X"}).exit_code == 2);
    CHECK(run({"member", "1/(X^2-"}).exit_code == 2);
    CHECK(run({"member", "X", "--bogus"}).exit_code == 2);
    CHECK(run({"member"}).exit_code == 2);
    CHECK(run({"member", "1/0"}).exit_code == 2);
    CHECK(run({"member", "[[1,0],[0,0]]"}).exit_code == 2);
    CHECK(run({"laurent-member", "1", "--base", "complex", "--order", "0", "--precision", "2"}).exit_code == 2);
    CHECK(run({"laurent-member", "0", "--base", "real", "--order", "0", "--precision", "1"}).exit_code == 2);
  }
  TEST_CASE("every subcommand emits a schema-conformant report") {
    const std::vector<std::vector<std::string>> calls{
        {"member", "X/(X^2+1)"},
        {"unit", "(X^2+1)/(X^2+2)"},
        {"gamma", "X^2+1"},
        {"gamma-plus", "X^2+X+1"},
        {"sign-at-roots", "X+1", "X^2-X"},
        {"principal", "1/(X^2+1)", "X/(X^2+1)"},
        {"square-ideal", "1/(X^2+1)", "X/(X^2+1)"},
        {"inverse-ideal", "1/(X^2+1)", "X/(X^2+1)"},
        {"factor", "[[X/(X^2+1),(X+1)/(X^2+1)],[0,0]]"},
        {"verify", "[[1,0],[0,0]]", "[[1,0],[0,0]]"},
        {"certificate", "X", "X+1"},
        {"certificate", "X+1", "X", "--form", "b"},
        {"zs-member", "1/5"},
        {"zs-gcd", "6", "9"},
        {"laurent-member", "1/5", "2", "1", "--base", "rational", "--order", "0", "--precision", "3"},
        {"laurent-member", "1", "1", "--base=real", "--order=-1", "--precision=3"},
        {"stable-witness", "X/(X^2+1)"},
    };
    for (const auto& c : calls) {
      CAPTURE(c.front());
      Report r = run(c);
      CHECK(r.ok);
      CHECK(r.command == c.front());
      CHECK(r.exit_code != 2);
    }
  }
  TEST_CASE("specific payloads") {
    CHECK(run({"sign-at-roots", "X", "X^2-1"}).result["pattern"] == "mixed");
    CHECK(run({"square-ideal", "X/(X^2+1)", "(X^2-1)/(X^2+1)"}).result["unit"] == true);
    CHECK(run({"inverse-ideal", "1/(X^2+1)", "X/(X^2+1)"}).result["witness"] == "1");
    Report c = run({"certificate", "X", "X+1"});
    Polynomial beta = std::get<RationalFunction>(parse_expression(c.result["beta"].get<std::string>()).value).num();
    CHECK(is_gamma_plus(X * X + (X + 1) * beta));
    CHECK(run({"zs-member", "3/7"}).exit_code == 1);
    CHECK(run({"zs-gcd", "6", "9"}).result["g"] == "3");
    Report l = run({"laurent-member", "1/3", "1", "--base", "rational", "--order", "0", "--precision", "2"});
    CHECK(l.exit_code == 1);
    Report w = run({"stable-witness", "0"});
    CHECK(w.result["sign_at_1"] == "+");
    CHECK(w.result["sign_at_minus_1"] == "-");
    CHECK(w.result["comaximal"] == true);
  }
  TEST_CASE("human-readable rendering") {
    Report r = execute({"member", "X/(X^2+1)"});
    CHECK_FALSE(r.json_output);
    CHECK(render(r).find("member: true") != std::string::npos);
    Report e = execute({"member", "1/(X^2-"});
    CHECK(render(e).find("error") != std::string::npos);
  }
}
