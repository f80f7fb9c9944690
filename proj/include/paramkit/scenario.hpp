#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "paramkit/session.hpp"

#ifndef PARAMKIT_SCENARIO_DIR
#define PARAMKIT_SCENARIO_DIR "scenarios"
#endif

namespace paramkit {

/// One parsed `expect <op> <args...> = <value> # [tag]` line.
struct Expectation {
  std::string op;
  std::vector<std::string> args;
  std::string expected;
  std::string tag;  // PAPER, TRIVIAL or DERIVED
  std::size_t line = 0;
};

struct ScenarioCheck {
  Expectation expectation;
  std::string actual;
  bool passed = false;
};

struct ConfigReport {
  std::string label;  // e.g. "char=2 order=lex"
  std::vector<std::string> warnings;
  std::vector<ScenarioCheck> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const ScenarioCheck& c) { return c.passed; });
  }
};

struct ScenarioReport {
  std::string name;
  std::vector<ConfigReport> configs;

  bool passed() const {
    return std::all_of(configs.begin(), configs.end(), [](const ConfigReport& c) { return c.passed(); });
  }
  std::size_t check_count() const {
    std::size_t n = 0;
    for (const auto& c : configs) n += c.checks.size();
    return n;
  }
};

namespace detail {

// Whitespace-separated tokens; parentheses group.
inline std::vector<std::string> split_args(std::string_view s, std::size_t line) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) parse_fail("unbalanced ')' in expectation", line);
    if (depth == 0 && std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (depth != 0) parse_fail("unbalanced '(' in expectation", line);
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace detail

inline Expectation parse_expectation(const Located& src) {
  using detail::parse_fail;
  const std::string& t = src.text;
  const auto hash = t.find('#');
  if (hash == std::string::npos) parse_fail("expectation without a source tag", src.line);
  const std::string tag_text = detail::trim(std::string_view(t).substr(hash + 1));
  Expectation e;
  e.line = src.line;
  for (const char* tag : {"PAPER", "TRIVIAL", "DERIVED"}) {
    if (tag_text.rfind(std::string("[") + tag + "]", 0) == 0) e.tag = tag;
  }
  if (e.tag.empty()) parse_fail("source tag must be [PAPER], [TRIVIAL] or [DERIVED]", src.line);
  const std::string_view body = std::string_view(t).substr(0, hash);
  const auto eq = body.rfind('=');
  if (eq == std::string_view::npos) parse_fail("expectation without '= <value>'", src.line);
  auto lhs = detail::split_args(body.substr(0, eq), src.line);
  e.expected = detail::trim(body.substr(eq + 1));
  if (lhs.empty()) parse_fail("expectation without an operation", src.line);
  if (e.expected.empty()) parse_fail("expectation without a value", src.line);
  e.op = lhs.front();
  e.args.assign(lhs.begin() + 1, lhs.end());
  return e;
}

namespace detail {

template <CoefficientField F>
class ExpectationRunner {
 public:
  explicit ExpectationRunner(const Session<F>& s) : s_(s), pres_(s.presentation()) {}

  ScenarioCheck run(const Expectation& e) {
    ScenarioCheck c{e, "", false};
    try {
      c.passed = evaluate(e, c.actual);
    } catch (const Error& err) {
      c.actual = "error:" + std::string(err.code_name());
      c.passed = e.expected == c.actual;
    }
    return c;
  }

 private:
  bool evaluate(const Expectation& e, std::string& actual) {
    const auto& a = e.args;
    const std::string& op = e.op;
    check_arity(e);
    if (op == "sopcheck") return boolean(e, is_sop(seq(a[0])), actual);
    if (op == "limclose") {
      return ideal_value(e, limit_closure(seq(a[0])).closure, actual);
    }
    if (op == "tstar") {
      return integer(e, limit_closure(seq(a[0])).stabilized_at, actual);
    }
    if (op == "mc") {
      const auto r = monomial_conjecture_check(seq(a[0]));
      actual = r.violated_at ? "violated" : "holds";
      return actual == e.expected;
    }
    if (op == "map5") return boolean(e, map5_test(seq(a[0]), seq(a[1]), matrix(a[2])), actual);
    if (op == "map1") return boolean(e, map1_lim_test(seq(a[0]), seq(a[1]), matrix(a[2])), actual);
    if (op == "map2") {
      const auto stages = map2_stage_test(seq(a[0]), seq(a[1]), count(a[2]));
      for (std::size_t i = 0; i < stages.size(); ++i) {
        actual += (i ? ", " : "");
        actual += stages[i].injective ? "true" : "false";
      }
      return normalize_list(e.expected) == normalize_list(actual);
    }
    if (op == "colon") {
      const Ideal<F> I = ideal(a[0]);
      if (s_.has_sequence(a[1]) || a[1].front() == '(') return ideal_value(e, colon(I, ideal(a[1])), actual);
      return ideal_value(e, colon(I, elem(a[1])), actual);
    }
    if (op == "intersect") {
      return ideal_value(e, intersect(ideal(a[0]), ideal(a[1])), actual);
    }
    if (op == "saturate") {
      return ideal_value(e, saturate(ideal(a[0]), elem(a[1])), actual);
    }
    if (op == "dim") {
      return integer(e, dimension(ideal(a[0])).dim, actual);
    }
    if (op == "length") {
      return integer(e, length(ideal(a[0])), actual);
    }
    if (op == "socle") {
      return ideal_value(e, socle(ideal(a[0])), actual);
    }
    if (op == "regseq") {
      const auto r = is_regular_sequence(seq(a[0]));
      actual = r.regular ? "true" : "false:" + std::to_string(*r.first_failure);
      return actual == e.expected;
    }
    if (op == "koszul") {
      (void)koszul_complex(seq(a[0]));  // verifies d^2 = 0
      actual = "ok";
      return actual == e.expected;
    }
    if (op == "chainmap") return boolean(e, chain_map_check(seq(a[0]), seq(a[1]), matrix(a[2])), actual);
    if (op == "detcor") {
      return boolean(e, detcor_check(seq(a[0]), matrix(a[1]), matrix(a[2]), seq(a[3])), actual);
    }
    if (op == "det") {
      const auto d = determinant(matrix(a[0]));
      actual = render(d);
      return is_zero_in(d - s_.parse(e.expected), pres_);
    }
    if (op == "lift") {
      require_lift(seq(a[1]), seq(a[0]), lift_matrix(seq(a[0]), seq(a[1])));
      actual = "ok";
      return actual == e.expected;
    }
    if (op == "member") return boolean(e, ideal_member(elem(a[0]), ideal(a[1])).member, actual);
    if (op == "equal") return boolean(e, ideal_equal(ideal(a[0]), ideal(a[1])), actual);
    if (op == "cmprobe") {
      const std::size_t trials = a.size() > 0 ? count(a[0]) : 10;
      const std::uint64_t seed = a.size() > 1 ? count(a[1]) : 0;
      const auto r = cm_probe(pres_, trials, seed);
      if (r.verdict == CMVerdict::NotCM) {
        // Re-verify the certificate independently of the probe.
        const auto lim = limit_closure(*r.sop).closure;
        const bool sound = ideal_member(*r.witness, lim).member && !ideal_member(*r.witness, r.sop->ideal()).member;
        actual = sound ? "notcm" : "bad-certificate";
      } else {
        actual = "cm-consistent";
      }
      return actual == e.expected;
    }
    if (op == "zerocolon") {
      const std::size_t trials = a.size() > 1 ? count(a[1]) : 10;
      const std::uint64_t seed = a.size() > 2 ? count(a[2]) : 0;
      actual = zero_colon_probe(pres_, elem(a[0]), trials, seed).found ? "hit" : "nohit";
      return actual == e.expected;
    }
    throw Error(ErrorCode::UnknownCommand, "unknown expectation '" + op + "'");
  }

  static std::uint64_t count(const std::string& s) {
    if (s.empty() || s.size() > 18 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw Error(ErrorCode::ParseError, "expected a non-negative integer, got '" + s + "'");
    }
    return std::stoull(s);
  }

  static void check_arity(const Expectation& e) {
    struct Arity {
      const char* op;
      std::size_t min, max;
    };
    static constexpr Arity table[] = {
        {"sopcheck", 1, 1}, {"limclose", 1, 1}, {"tstar", 1, 1},    {"mc", 1, 1},       {"map5", 3, 3},
        {"map1", 3, 3},     {"map2", 3, 3},     {"colon", 2, 2},    {"intersect", 2, 2}, {"saturate", 2, 2},
        {"dim", 1, 1},      {"length", 1, 1},   {"socle", 1, 1},    {"regseq", 1, 1},   {"koszul", 1, 1},
        {"chainmap", 3, 3}, {"detcor", 4, 4},   {"det", 1, 1},      {"lift", 2, 2},     {"member", 2, 2},
        {"equal", 2, 2},    {"cmprobe", 0, 2},  {"zerocolon", 1, 3},
    };
    for (const auto& t : table) {
      if (e.op != t.op) continue;
      if (e.args.size() < t.min || e.args.size() > t.max) {
        throw Error(ErrorCode::ParseError, "wrong number of arguments for '" + e.op + "'", e.line, 0);
      }
      return;
    }
    throw Error(ErrorCode::UnknownCommand, "unknown expectation '" + e.op + "'", e.line, 0);
  }

  bool boolean(const Expectation& e, bool v, std::string& actual) {
    actual = v ? "true" : "false";
    return actual == e.expected;
  }

  bool integer(const Expectation& e, std::uint64_t v, std::string& actual) {
    actual = std::to_string(v);
    return actual == e.expected;
  }

  bool ideal_value(const Expectation& e, const Ideal<F>& got, std::string& actual) {
    actual = describe(got);
    return ideal_equal(got, ideal(e.expected));
  }

  static std::string normalize_list(const std::string& s) {
    std::string out;
    for (char c : s) {
      if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    }
    return out;
  }

  std::string describe(const Ideal<F>& I) const {
    std::string out = "(";
    bool first = true;
    for (const auto& g : *I.groebner_basis()) {
      if (!first) out += ", ";
      first = false;
      out += render(g.reorder(pres_->ambient()));
    }
    return out + ")";
  }

  ElementSequence<F> seq(const std::string& arg) const {
    if (s_.has_sequence(arg)) return s_.sequence(arg);
    return ElementSequence<F>(pres_, list(arg));
  }

  Ideal<F> ideal(const std::string& arg) const {
    if (s_.has_sequence(arg)) return s_.sequence(arg).ideal();
    return Ideal<F>(pres_, list(arg));
  }

  const CoeffMatrix<F>& matrix(const std::string& arg) const { return s_.matrix(arg); }

  Polynomial<F> elem(const std::string& arg) const { return s_.parse(arg); }

  // "(p, q, ...)" or "()"; a bare identifier that is not a sequence is an error.
  std::vector<Polynomial<F>> list(const std::string& arg) const {
    if (arg.size() < 2 || arg.front() != '(' || arg.back() != ')') {
      throw Error(ErrorCode::UnknownName, "'" + arg + "' is neither a sequence name nor a (...) list");
    }
    const std::string inner = arg.substr(1, arg.size() - 2);
    std::vector<Polynomial<F>> out;
    if (trim(inner).empty()) return out;
    for (const auto& item : split_top(inner, 0, inner.size(), 0)) out.push_back(s_.parse(item.text));
    return out;
  }

  const Session<F>& s_;
  PresentationPtr<F> pres_;
};

}  // namespace detail

/// Runs every expectation of a scenario source under each declared config
/// (the file's own characteristic with grevlex when none is declared).
inline ScenarioReport run_scenario_source(const std::string& name, std::string_view text,
                                          std::optional<std::uint64_t> budget = std::nullopt) {
  const SessionSource src = parse_session_source(text);
  std::vector<Expectation> expectations;
  for (const auto& e : src.expects) expectations.push_back(parse_expectation(e));
  std::vector<ConfigLine> configs = src.configs;
  if (configs.empty()) configs.push_back(ConfigLine{*src.characteristic, "grevlex", 0});

  ScenarioReport report{name, {}};
  for (const auto& cfg : configs) {
    ConfigReport cr;
    cr.label = "char=" + std::to_string(cfg.characteristic) + " order=" + cfg.order;
    AnySession session = build_session(src, cfg.characteristic, order_from_name(cfg.order));
    std::visit(
        [&](const auto& s) {
          if (budget) s.presentation()->set_budget(*budget);
          cr.warnings = s.warnings();
          detail::ExpectationRunner runner(s);
          for (const auto& e : expectations) cr.checks.push_back(runner.run(e));
        },
        session);
    report.configs.push_back(std::move(cr));
  }
  return report;
}

inline std::filesystem::path default_scenario_dir() {
  if (const char* env = std::getenv("PARAMKIT_SCENARIO_DIR")) return env;
  return PARAMKIT_SCENARIO_DIR;
}

/// Registered scenario names (file stems of *.scn), sorted.
inline std::vector<std::string> list_scenarios(const std::filesystem::path& dir = default_scenario_dir()) {
  std::vector<std::string> names;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
    if (entry.path().extension() == ".scn") names.push_back(entry.path().stem().string());
  }
  std::sort(names.begin(), names.end());
  return names;
}

inline std::string read_text_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read '" + p.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Runs a registered scenario by name, or a scenario file given by path.
inline ScenarioReport run_scenario(const std::string& name_or_path,
                                   const std::filesystem::path& dir = default_scenario_dir(),
                                   std::optional<std::uint64_t> budget = std::nullopt) {
  std::filesystem::path p = dir / (name_or_path + ".scn");
  if (!std::filesystem::is_regular_file(p)) {
    p = name_or_path;
    if (p.extension() != ".scn" || !std::filesystem::is_regular_file(p)) {
      throw Error(ErrorCode::UnknownScenario, "no scenario named '" + name_or_path + "'");
    }
  }
  return run_scenario_source(p.stem().string(), read_text_file(p), budget);
}

}  // namespace paramkit
