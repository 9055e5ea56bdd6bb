// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Exit status is nonzero when any criterion fails.
#include <iostream>

#include "cli.hpp"
#include "colombeau/expr.hpp"
#include "criteria.hpp"
#include "random_values.hpp"

namespace {

using colombeau::testkit::CriterionResult;

CriterionResult cli_conformance() {
  using namespace colombeau;
  CriterionResult r{12, "CLI conformance", "exact, byte-identical", true, ""};
  long checks = 0, failures = 0;
  std::string first;
  auto check = [&](bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures++ == 0) first = what;
  };

  testkit::Sampler s(1012);
  for (int i = 0; i < 500; ++i) {
    Value v;
    if (i % 4 == 3) {
      v = s.quaternion();
    } else {
      testkit::Shape shape;
      shape.field = i % 4 == 2 ? Field::Complex : Field::Real;
      GenNumber x = s.gen_number(shape);
      if (i % 5 == 0) x += chi(s.index_set(false), shape.field) * GenNumber::big_o(s.uniform(0, 6)).to_field(shape.field);
      v = x;
    }
    const std::string text = to_string(v);
    bool same = false;
    try {
      const Value back = evaluate(text);
      same = back.index() == v.index() && to_string(back) == text &&
             (std::holds_alternative<GenNumber>(v) ? as_scalar(back) == as_scalar(v)
                                                   : as_quaternion(back) == as_quaternion(v));
    } catch (const std::exception&) {
    }
    check(same, "round trip of " + text);
  }

  struct Example {
    std::vector<std::string> args;
    std::string expected;
  };
  const std::vector<Example> examples{
      {{"classify", "chi{m=2;T=[0];N=0}", "--json"},
       "{\n  \"command\": \"classify\",\n  \"input\": \"chi{m=2;T=[0];N=0}\",\n  \"kind\": \"zero_divisor\",\n"
       "  \"witness\": \"chi{m=2;T=[1];N=0}\"\n}\n"},
      {{"norm", "alpha(2)", "--json"},
       "{\n  \"command\": \"norm\",\n  \"input\": \"alpha(2)\",\n  \"valuation\": \"2\",\n  \"exact\": true,\n"
       "  \"display\": \"0.135335\"\n}\n"},
  };
  for (const auto& ex : examples) {
    const auto a = cli::run(ex.args), b = cli::run(ex.args);
    check(a.exit_code == 0 && a.out == ex.expected && a.out == b.out, ex.args.front() + " report");
  }
  const std::vector<std::string> eval_args{"eval", "--expr", "alpha(1)+alpha(1)", "--json"};
  const auto e1 = cli::run(eval_args), e2 = cli::run(eval_args);
  check(e1.exit_code == 0 && e1.out.find("\"value\": \"2*eps^(1)\"") != std::string::npos && e1.out == e2.out,
        "eval report");

  const auto self = cli::run({"selftest"});
  check(self.exit_code == 0 && self.out.find("FAIL") == std::string::npos, "selftest");

  r.passed = failures == 0;
  r.detail = std::to_string(checks) + " checks, " + std::to_string(failures) + " failures";
  if (failures) r.detail += "; first: " + first;
  return r;
}

}  // namespace

int main() {
  bool all = true;
  auto report = [&](const CriterionResult& r) {
    all = all && r.passed;
    std::cout << colombeau::testkit::format(r) << std::endl;
  };
  for (int id = 1; id <= colombeau::testkit::kLibraryCriteria; ++id) report(colombeau::testkit::run_criterion(id));
  report(cli_conformance());
  std::cout << (all ? "all criteria passed" : "some criteria FAILED") << std::endl;
  return all ? 0 : 1;
}
