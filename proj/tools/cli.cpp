#include "cli.hpp"

#include <CLI11.hpp>
#include <boost/algorithm/string/trim.hpp>
#include <functional>
#include <regex>
#include <sstream>

#include "colombeau/error.hpp"
#include "colombeau/expr.hpp"
#include "colombeau/holo.hpp"
#include "colombeau/ideals.hpp"
#include "colombeau/polyann.hpp"
#include "config.hpp"
#include "criteria.hpp"
#include "json_io.hpp"

namespace colombeau::cli {

namespace {

struct Settings {
  Rational window = kDefaultWindow;
  std::vector<Rational> verify_n = kDefaultVerifyN;
};

// Thrown for bad flags and values; exit code 1.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string trimmed(std::string s) {
  boost::trim(s);
  return s;
}

Json rationals(const std::vector<Rational>& qs) {
  Json out = Json::array();
  for (const auto& q : qs) out.push_back(to_string(q));
  return out;
}

std::string_view tristate_name(Tristate t) {
  switch (t) {
    case Tristate::Yes: return "yes";
    case Tristate::No: return "no";
    default: return "indeterminate";
  }
}

Json classification(const Classification& c) {
  Json j;
  j["kind"] = kind_name(c);
  if (const auto* u = std::get_if<Unit<GenNumber>>(&c)) j["inverse"] = to_string(u->inverse);
  if (const auto* z = std::get_if<ZeroDivisor>(&c)) j["witness"] = to_string(z->witness);
  return j;
}

Json classification(const QuatClassification& c) {
  Json j;
  j["kind"] = kind_name(c);
  if (const auto* u = std::get_if<Unit<GenQuaternion>>(&c)) j["inverse"] = to_string(u->inverse);
  if (const auto* z = std::get_if<ZeroDivisor>(&c)) j["witness"] = to_string(z->witness);
  return j;
}

Valuation valuation_of(const Value& v) {
  if (const auto* x = std::get_if<GenNumber>(&v)) return valuation(*x);
  return qvaluation(std::get<GenQuaternion>(v));
}

void merge(Json& into, const Json& from) {
  for (const auto& [k, v] : from.items()) into[k] = v;
}

std::vector<Value> values(const std::string& list, const Settings& s) {
  std::vector<Value> out;
  for (const auto& item : split_top_level(list, ';')) out.push_back(evaluate(trimmed(item), s.window));
  return out;
}

MultiPoly parse_multipoly(const std::string& text, std::size_t nvars, const Settings& s) {
  static const std::regex variable(R"(x([0-9]+)(\^([0-9]+))?)");
  MultiPoly f(nvars);
  for (const auto& term : split_top_level(text, ',')) {
    GenNumber coeff = 1;
    Exponents e(nvars);
    for (const auto& raw : split_top_level(term, '*')) {
      const std::string factor = trimmed(raw);
      std::smatch m;
      if (std::regex_match(factor, m, variable)) {
        const auto index = std::stoul(m[1]);
        if (index == 0 || index > nvars)
          throw Error(ErrorKind::InvalidArgument, "variable " + factor + " outside x1..x" + std::to_string(nvars));
        e[index - 1] += m[3].matched ? static_cast<unsigned>(std::stoul(m[3])) : 1u;
      } else {
        auto [a, b] = std::pair{coeff, as_scalar(evaluate(factor, s.window))};
        if (a.field() != b.field()) {
          a = a.to_field(Field::Complex);
          b = b.to_field(Field::Complex);
        }
        coeff = a * b;
      }
    }
    f = padd(f, MultiPoly::monomial(nvars, coeff, std::move(e)));
  }
  return f;
}

Json ideal_report(const std::string& mode, const std::string& gens_text, const std::string& elem_text,
                  const Settings& s) {
  const auto gens = values(gens_text, s);
  Json j;
  j["command"] = "ideal " + mode;
  j["input"] = {{"gens", split_top_level(gens_text, ';')}};
  if (!elem_text.empty()) j["input"]["elem"] = elem_text;
  const bool quaternionic =
      std::any_of(gens.begin(), gens.end(), [](const Value& v) { return std::holds_alternative<GenQuaternion>(v); });
  std::optional<Value> elem;
  if (!elem_text.empty()) elem = evaluate(elem_text, s.window);
  if (quaternionic) {
    std::vector<GenQuaternion> qs;
    for (const auto& g : gens) qs.push_back(as_quaternion(g));
    const QuatFgIdeal I(qs);
    const auto N = norm_ideal(I);
    Json norms = Json::array();
    for (const auto& g : N.generators()) norms.push_back(to_string(g));
    j["norm_ideal"] = norms;
    j["support"] = N.support().to_string();
    j["annihilator"] = to_string(quat_annihilator(I));
    j["dense_algebraic"] = quat_is_dense(I);
    j["whole_ring"] = is_whole_ring(N);
    if (elem) {
      // An exact quaternion ideal equals H n(I), since g conj(g) lies in it.
      bool member = true;
      const GenQuaternion y = as_quaternion(*elem);
      for (const auto& c : y.components()) member = member && contains(N, c);
      j["member"] = member;
    }
  } else {
    std::vector<GenNumber> xs;
    for (const auto& g : gens) xs.push_back(as_scalar(g));
    const FgIdeal I(xs);
    j["support"] = I.support().to_string();
    j["annihilator"] = to_string(annihilator_idempotent(I));
    j["dense_algebraic"] = is_dense(I);
    j["whole_ring"] = is_whole_ring(I);
    if (elem) j["member"] = contains(I, as_scalar(*elem));
  }
  return j;
}

Json holo_report(const std::string& poly_text, const std::string& at_text, const Settings& s) {
  std::vector<GenNumber> coeffs;
  for (const auto& v : values(poly_text, s)) coeffs.push_back(as_scalar(v));
  const GenPolynomial f(coeffs);
  const GenNumber z0 = as_scalar(evaluate(at_text, s.window));
  Json j;
  j["command"] = "holo check";
  j["input"] = {{"poly", split_top_level(poly_text, ';')}, {"at", at_text}};
  Json cf = Json::array();
  const auto ideal = cf_ideal(f, z0);
  for (const auto& g : ideal.generators()) cf.push_back(to_string(g));
  j["cf_ideal"] = cf;
  const auto verdict = identity_check(f, z0, s.verify_n);
  if (const auto* cx = std::get_if<Counterexample>(&verdict)) {
    j["dense"] = false;
    j["verdict"] = "counterexample";
    j["idempotent"] = to_string(cx->idempotent);
    j["sequence"] = cx->sequence;
    j["verified_n"] = rationals(cx->verified_n);
    Json vals = Json::array();
    for (const auto& n : cx->verified_n) {
      const auto step = cx->idempotent * alpha(n).to_field(cx->idempotent.field());
      vals.push_back({{"n", to_string(n)}, {"valuation", to_string(valuation(step))}});
    }
    j["valuations"] = vals;
  } else {
    j["dense"] = true;
    j["verdict"] = "dense_necessary_condition_only";
    j["idempotent"] = nullptr;
    j["verified_n"] = Json::array();
    j["valuations"] = Json::array();
  }
  if (f.degree() <= 2) {
    const auto q = quadratic_unique_solution_check(f, z0);
    j["quadratic"] = to_string(q.verdict);
    if (q.ratio_valuation) j["ratio_valuation"] = to_string(*q.ratio_valuation);
    if (q.idempotent) j["quadratic_idempotent"] = to_string(*q.idempotent);
  }
  return j;
}

std::string human(const Json& report) {
  std::string out;
  for (const auto& [k, v] : report.items()) {
    if (k == "command") continue;
    out += k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
  }
  return out;
}

Json error_report(std::string_view category, const Error& e) {
  Json j;
  j["error"] = category;
  j["kind"] = kind_name(e.kind());
  j["detail"] = e.what();
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
    j["offset"] = pe->offset();
    j["expected"] = pe->expected();
  }
  return j;
}

Rational positive_rational(const std::string& text, const char* flag) {
  try {
    Rational q = parse_rational(text);
    if (sgn(q) > 0) return q;
  } catch (const Error&) {
  }
  throw UsageError(std::string(flag) + " needs a positive rational, got '" + text + "'");
}

}  // namespace

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> out(1);
  int depth = 0;
  for (char c : text) {
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == sep && depth == 0) {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  for (auto& s : out) boost::trim(s);
  return out;
}

Outcome run(const std::vector<std::string>& args) {
  CLI::App app{"Exact arithmetic with Colombeau generalized numbers and quaternions", "colombeau"};
  app.fallthrough();
  app.require_subcommand(1);
  std::string window_text, config_path, verify_text;
  bool json = false;
  app.add_option("--window", window_text, "Truncation window W for inverses and square roots (default 16)");
  app.add_flag("--json", json, "Print the JSON report");
  app.add_option("--config", config_path, "key=value file with default_window and verify_n_list");
  app.add_option("--verify-n", verify_text, "Comma-separated n for counterexample checks (default 1,2,5,16)");

  std::string expr, expr2, mode, gens, elem, poly, at = "0";
  std::size_t nvars = 1;
  std::function<Json(const Settings&)> action;

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate an expression");
  eval_cmd->add_option("expr,--expr", expr, "Expression")->required();
  eval_cmd->callback([&] {
    action = [&](const Settings& s) {
      const Value v = evaluate(expr, s.window);
      Json j;
      j["command"] = "eval";
      j["input"] = expr;
      j["value"] = to_string(v);
      j["type"] = std::holds_alternative<GenNumber>(v) ? "scalar" : "quaternion";
      j["structure"] = to_json(v);
      return j;
    };
  });

  auto* classify_cmd = app.add_subcommand("classify", "Unit / zero-divisor classification");
  classify_cmd->add_option("expr", expr, "Expression")->required();
  classify_cmd->callback([&] {
    action = [&](const Settings& s) {
      const Value v = evaluate(expr, s.window);
      Json j;
      j["command"] = "classify";
      j["input"] = expr;
      if (const auto* x = std::get_if<GenNumber>(&v)) {
        merge(j, classification(classify(*x, s.window)));
      } else {
        merge(j, classification(qclassify(std::get<GenQuaternion>(v), s.window)));
      }
      return j;
    };
  });

  auto* norm_cmd = app.add_subcommand("norm", "Sharp valuation and norm e^-V");
  norm_cmd->add_option("expr", expr, "Expression")->required();
  norm_cmd->callback([&] {
    action = [&](const Settings& s) {
      Json j;
      j["command"] = "norm";
      j["input"] = expr;
      merge(j, to_json(valuation_of(evaluate(expr, s.window))));
      return j;
    };
  });

  auto* dist_cmd = app.add_subcommand("dist", "Sharp distance between two values");
  dist_cmd->add_option("a", expr, "Expression")->required();
  dist_cmd->add_option("b", expr2, "Expression")->required();
  dist_cmd->callback([&] {
    action = [&](const Settings& s) {
      Json j;
      j["command"] = "dist";
      j["input"] = {expr, expr2};
      const std::string diff = "(" + expr + ") - (" + expr2 + ")";
      merge(j, to_json(valuation_of(evaluate(diff, s.window))));
      return j;
    };
  });

  auto* order_cmd = app.add_subcommand("order", "q-positivity of a, or of a - b");
  order_cmd->add_option("a", expr, "Expression")->required();
  order_cmd->add_option("b", expr2, "Expression");
  order_cmd->callback([&] {
    action = [&](const Settings& s) {
      Json j;
      j["command"] = "order";
      const std::string text = expr2.empty() ? expr : "(" + expr + ") - (" + expr2 + ")";
      j["input"] = expr2.empty() ? Json(expr) : Json({expr, expr2});
      j["qpositive"] = tristate_name(is_qpositive(as_scalar(evaluate(text, s.window))));
      return j;
    };
  });

  auto* quat_cmd = app.add_subcommand("quat", "Quaternion report");
  quat_cmd->add_option("expr", expr, "Expression")->required();
  quat_cmd->callback([&] {
    action = [&](const Settings& s) {
      const GenQuaternion x = as_quaternion(evaluate(expr, s.window));
      Json j;
      j["command"] = "quat";
      j["input"] = expr;
      j["value"] = to_string(x);
      j["norm_sq"] = to_string(norm_sq(x));
      merge(j, classification(qclassify(x, s.window)));
      const auto v = qvaluation(x);
      j["valuation"] = to_string(v);
      j["display"] = display_norm(v);
      j["idempotent"] = x.is_exact() ? Json(is_idempotent(x)) : Json(nullptr);
      return j;
    };
  });

  auto* ideal_cmd = app.add_subcommand("ideal", "Finitely generated ideals");
  ideal_cmd->add_option("mode", mode, "dense | ann | member | whole")
      ->required()
      ->check(CLI::IsMember({"dense", "ann", "member", "whole"}));
  ideal_cmd->add_option("--gens", gens, "Generators separated by ';'")->required();
  ideal_cmd->add_option("--elem", elem, "Element for membership");
  ideal_cmd->callback([&] {
    if (mode == "member" && elem.empty()) throw CLI::RequiredError("--elem");
    action = [&](const Settings& s) { return ideal_report(mode, gens, elem, s); };
  });

  auto* holo_cmd = app.add_subcommand("holo", "Identity-theorem checks for generalized polynomials");
  auto* check_cmd = holo_cmd->add_subcommand("check", "Check the coefficient ideal at a point");
  holo_cmd->require_subcommand(1);
  check_cmd->fallthrough();
  check_cmd->add_option("--poly", poly, "Coefficients a0;a1;... ")->required();
  check_cmd->add_option("--at", at, "Base point z0 (default 0)");
  check_cmd->callback([&] {
    action = [&](const Settings& s) { return holo_report(poly, at, s); };
  });

  auto* polyann_cmd = app.add_subcommand("polyann", "Constant annihilators of multivariate polynomials");
  polyann_cmd->add_option("--vars", nvars, "Number of variables")->required()->check(CLI::Range(1, 16));
  polyann_cmd->add_option("--poly", poly, "Terms (c)*x1^a*x2^b separated by ','")->required();
  polyann_cmd->callback([&] {
    action = [&](const Settings& s) {
      const auto f = parse_multipoly(poly, nvars, s);
      const auto b = ann_constant(f);
      Json j;
      j["command"] = "polyann";
      j["input"] = {{"vars", nvars}, {"poly", poly}};
      j["poly"] = to_string(f);
      j["annihilator"] = to_string(b);
      j["nonzero_annihilator"] = b != GenNumber();
      j["verified"] = verify_annihilator(f, b, 20);
      return j;
    };
  });

  bool selftest = false;
  auto* selftest_cmd = app.add_subcommand("selftest", "Run the library acceptance criteria");
  selftest_cmd->callback([&] { selftest = true; });

  std::vector<const char*> argv{"colombeau"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {code == 0 ? kExitOk : kExitUsage, out.str(), err.str()};
  }

  Settings settings;
  try {
    if (!config_path.empty()) {
      const Config cfg = load_config(config_path);
      if (cfg.default_window) settings.window = *cfg.default_window;
      if (cfg.verify_n_list) settings.verify_n = *cfg.verify_n_list;
    }
    if (!window_text.empty()) settings.window = positive_rational(window_text, "--window");
    if (!verify_text.empty()) settings.verify_n = parse_rational_list(verify_text);
    if (sgn(settings.window) <= 0) throw UsageError("window must be positive");
  } catch (const std::invalid_argument& e) {
    return {kExitUsage, "", std::string("usage error: ") + e.what() + "\n"};
  }

  if (selftest) {
    Json results = Json::array();
    bool all = true;
    std::string text;
    for (const auto& r : testkit::run_library_criteria()) {
      all = all && r.passed;
      text += testkit::format(r) + "\n";
      results.push_back(
          {{"id", r.id}, {"name", r.name}, {"tolerance", r.tolerance}, {"passed", r.passed}, {"detail", r.detail}});
    }
    Json j;
    j["command"] = "selftest";
    j["criteria"] = results;
    j["passed"] = all;
    return {all ? kExitOk : kExitComputation, json ? j.dump(2) + "\n" : text, ""};
  }

  try {
    const Json report = action(settings);
    return {kExitOk, json ? report.dump(2) + "\n" : human(report), ""};
  } catch (const Error& e) {
    const Json report = error_report("computation_error", e);
    if (json) return {kExitComputation, report.dump(2) + "\n", ""};
    return {kExitComputation, "", "error (" + std::string(kind_name(e.kind())) + "): " + e.what() + "\n"};
  }
}

}  // namespace colombeau::cli
