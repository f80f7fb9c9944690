// paramkit command-line front end.
//
//   paramkit <command> [options] <input file>
//   paramkit scenario <name | path.scn> [--all] [--list]
//
// Exit status: 0 success, 1 a yes/no command answered "no", 2 error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "paramkit/paramkit.hpp"

using json = nlohmann::ordered_json;
using namespace paramkit;

namespace {

const std::set<std::string> kCommands = {
    "sopcheck", "limclose", "mc",     "drtest", "map5",   "map1",   "map2",    "koszul",   "detcor",    "lift",
    "colon",    "intersect", "dim",   "length", "socle",  "regseq", "cmprobe", "frobcert", "zerocolon", "scenario"};

// Commands whose verdict is a yes/no answer; "no" exits with 1.
const std::set<std::string> kYesNo = {"sopcheck", "mc",     "drtest",  "map5",     "map1",     "map2",
                                      "detcor",   "regseq", "cmprobe", "zerocolon", "scenario"};

struct Options {
  std::string command;
  std::string input;
  std::string seq, x, y, a, b, ideal, ideal2, f, u, c, z;
  std::string q;
  std::uint64_t t = 0;
  std::uint64_t tmax = 16;
  std::uint64_t window = 2;
  std::uint64_t stages = 3;
  std::uint64_t trials = 10;
  std::uint64_t seed = 0;
  std::uint32_t ell = 1;
  std::string order = "grevlex";
  bool json = false;
  bool no_homog_warning = false;
  bool all = false;
  bool list = false;
};

struct Outcome {
  std::optional<bool> verdict;
  json result = json::object();
  std::string text;
};

Error missing(const std::string& opt, const std::string& cmd) {
  return Error(ErrorCode::InvalidArgument, "'" + cmd + "' needs " + opt);
}

const std::string& need(const std::string& v, const char* opt, const Options& o) {
  if (v.empty()) throw missing(opt, o.command);
  return v;
}

std::vector<std::uint64_t> q_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::size_t i = 0;
  while (i <= text.size()) {
    const auto j = std::min(text.find(',', i), text.size());
    const std::string item = text.substr(i, j - i);
    if (item.empty() || item.size() > 18 || item.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorCode::ParseError, "--q expects comma-separated positive integers");
    }
    out.push_back(std::stoull(item));
    i = j + 1;
  }
  return out;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::optional<std::uint64_t> budget_from_env() {
  const char* env = std::getenv("PARAMKIT_BUDGET");
  if (!env || !*env) return std::nullopt;
  const std::string s(env);
  if (s.size() > 18 || s.find_first_not_of("0123456789") != std::string::npos) {
    throw Error(ErrorCode::InvalidArgument, "PARAMKIT_BUDGET must be a positive integer");
  }
  const auto v = std::stoull(s);
  if (v == 0) throw Error(ErrorCode::InvalidArgument, "PARAMKIT_BUDGET must be a positive integer");
  return v;
}

template <CoefficientField F>
class Runner {
 public:
  Runner(const Session<F>& s, const Options& o) : s_(s), o_(o), pres_(s.presentation()) {
    lim_.t_max = o.tmax;
    lim_.window = o.window;
  }

  Outcome run() {
    const std::string& c = o_.command;
    if (c == "sopcheck") return sopcheck();
    if (c == "limclose") return limclose();
    if (c == "mc") return mc();
    if (c == "drtest") return drtest();
    if (c == "map5") return map5();
    if (c == "map1") return map1();
    if (c == "map2") return map2();
    if (c == "koszul") return koszul();
    if (c == "detcor") return detcor();
    if (c == "lift") return lift();
    if (c == "colon") return colon_cmd();
    if (c == "intersect") return intersect_cmd();
    if (c == "dim") return dim();
    if (c == "length") return length_cmd();
    if (c == "socle") return socle_cmd();
    if (c == "regseq") return regseq();
    if (c == "cmprobe") return cmprobe();
    if (c == "frobcert") return frobcert();
    if (c == "zerocolon") return zerocolon();
    throw Error(ErrorCode::UnknownCommand, "unknown command '" + c + "'");
  }

 private:
  // --- argument resolution ---

  std::vector<Polynomial<F>> list(const std::string& arg) const {
    std::string inner = arg;
    if (inner.size() >= 2 && inner.front() == '(' && inner.back() == ')') inner = inner.substr(1, inner.size() - 2);
    std::vector<Polynomial<F>> out;
    if (inner.find_first_not_of(" \t") == std::string::npos) return out;
    for (const auto& item : detail::split_top(inner, 0, inner.size(), 0)) out.push_back(s_.parse(item.text));
    return out;
  }

  ElementSequence<F> seq(const std::string& arg) const {
    if (s_.has_sequence(arg)) return s_.sequence(arg);
    return ElementSequence<F>(pres_, list(arg));
  }

  Ideal<F> ideal(const std::string& arg) const {
    if (arg.empty()) return Ideal<F>::zero(pres_);
    return seq(arg).ideal();
  }

  std::optional<CoeffMatrix<F>> matrix(const std::string& arg) const {
    if (arg.empty()) return std::nullopt;
    return s_.matrix(arg);
  }

  // --- rendering ---

  std::string poly(const Polynomial<F>& p) const { return render(p.reorder(pres_->ambient())); }

  json poly_list(const std::vector<Polynomial<F>>& ps) const {
    json a = json::array();
    for (const auto& p : ps) a.push_back(poly(p));
    return a;
  }

  json ideal_json(const Ideal<F>& I) const { return poly_list(*I.groebner_basis()); }

  std::string ideal_text(const Ideal<F>& I) const {
    std::string out = "(";
    bool first = true;
    for (const auto& g : *I.groebner_basis()) {
      out += (first ? "" : ", ") + poly(g);
      first = false;
    }
    return out + ")";
  }

  json matrix_json(const CoeffMatrix<F>& m) const {
    json rows = json::array();
    for (const auto& r : m.to_rows()) rows.push_back(poly_list(r));
    return rows;
  }

  std::string matrix_text(const CoeffMatrix<F>& m) const {
    std::string out = "[";
    const auto rows = m.to_rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      out += i ? ", [" : "[";
      for (std::size_t j = 0; j < rows[i].size(); ++j) out += (j ? ", " : "") + poly(rows[i][j]);
      out += "]";
    }
    return out + "]";
  }

  json lim_json(const LimitClosureResult<F>& r) const {
    return json{{"closure", ideal_json(r.closure)},
                {"stabilized_at", r.stabilized_at},
                {"stages_checked", r.stages_checked},
                {"window", r.verified_window}};
  }

  // --- commands ---

  Outcome sopcheck() {
    const auto r = sop_report(seq(need(o_.seq, "--seq", o_)));
    Outcome out;
    out.verdict = r.sop;
    out.result = {{"sop", r.sop}, {"ring_dim", r.ring_dim}};
    out.result["quotient_dim"] = r.quotient_dim ? json(*r.quotient_dim) : json(nullptr);
    out.result["diagnostic"] = r.diagnostic;
    out.text = "sop: " + yes_no(r.sop) + "\ndim S = " + std::to_string(r.ring_dim) + "\n";
    if (r.quotient_dim) out.text += "dim S/(seq) = " + std::to_string(*r.quotient_dim) + "\n";
    if (!r.diagnostic.empty()) out.text += r.diagnostic + "\n";
    return out;
  }

  Outcome limclose() {
    const auto r = limit_closure(seq(need(o_.seq, "--seq", o_)), lim_);
    Outcome out;
    out.result = lim_json(r);
    out.text = "closure: " + ideal_text(r.closure) + "\nt* = " + std::to_string(r.stabilized_at) +
               " (stages checked: " + std::to_string(r.stages_checked) + ")\n";
    if (o_.t > 0) {
      const auto stage = lim_stage(seq(o_.seq), o_.t);
      out.result["stage"] = {{"t", o_.t}, {"ideal", ideal_json(stage)}};
      out.text += "stage " + std::to_string(o_.t) + ": " + ideal_text(stage) + "\n";
    }
    return out;
  }

  Outcome mc() {
    const auto r = monomial_conjecture_check(seq(need(o_.seq, "--seq", o_)), o_.tmax);
    Outcome out;
    out.verdict = !r.violated_at.has_value();
    out.result = {{"holds", !r.violated_at}, {"holds_up_to", r.holds_up_to}};
    out.result["violated_at"] = r.violated_at ? json(*r.violated_at) : json(nullptr);
    out.text = r.violated_at ? "violated at t = " + std::to_string(*r.violated_at) + "\n"
                             : "holds for t <= " + std::to_string(r.holds_up_to) + "\n";
    return out;
  }

  CoeffMatrix<F> lift_or_given(const ElementSequence<F>& x, const ElementSequence<F>& y) const {
    if (auto m = matrix(o_.a)) return *m;
    return lift_matrix(y, x);
  }

  Outcome map5() {
    const auto x = seq(need(o_.x, "--x", o_));
    const auto y = seq(need(o_.y, "--y", o_));
    const auto a = lift_or_given(x, y);
    const auto r = map5_report(x, y, a);
    Outcome out;
    out.verdict = r.injective;
    out.result = {{"injective", r.injective}, {"A", matrix_json(a)}, {"det", poly(r.det)}, {"colon", ideal_json(r.colon)}};
    out.text = "map R/(x) -> R/(y) by det A = " + poly(r.det) + "\n(y) : det A = " + ideal_text(r.colon) +
               "\ninjective: " + yes_no(r.injective) + "\n";
    return out;
  }

  Outcome map1() {
    const auto x = seq(need(o_.x, "--x", o_));
    const auto y = seq(need(o_.y, "--y", o_));
    const auto a = lift_or_given(x, y);
    const auto r = map1_report(x, y, a, lim_);
    Outcome out;
    out.verdict = r.injective;
    out.result = {{"injective", r.injective},  {"A", matrix_json(a)},         {"det", poly(r.det)},
                  {"x_lim", lim_json(r.x_lim)}, {"y_lim", lim_json(r.y_lim)}};
    out.text = "det A = " + poly(r.det) + "\n(x)^lim = " + ideal_text(r.x_lim.closure) +
               "\n(y)^lim = " + ideal_text(r.y_lim.closure) + "\ninjective: " + yes_no(r.injective) + "\n";
    return out;
  }

  json stages_json(const std::vector<Map2Stage<F>>& stages) const {
    json a = json::array();
    for (const auto& s : stages) {
      a.push_back({{"n", s.lift.n}, {"s", s.lift.s}, {"B", matrix_json(s.lift.b)}, {"injective", s.injective}});
    }
    return a;
  }

  std::string stages_text(const std::vector<Map2Stage<F>>& stages) const {
    std::string out;
    for (const auto& s : stages) {
      out += "stage n = " + std::to_string(s.lift.n) + ", s = " + std::to_string(s.lift.s) +
             ": injective " + yes_no(s.injective) + "\n";
    }
    return out;
  }

  Outcome map2() {
    const auto stages = map2_stage_test(seq(need(o_.x, "--x", o_)), seq(need(o_.y, "--y", o_)), o_.stages, lim_);
    bool all = true;
    for (const auto& s : stages) all = all && s.injective;
    Outcome out;
    out.verdict = all;
    out.result = {{"all_injective", all}, {"stages", stages_json(stages)}};
    out.text = stages_text(stages);
    return out;
  }

  Outcome drtest() {
    DROptions opts;
    opts.stages = o_.stages;
    opts.lim = lim_;
    const auto r = dr_test(seq(need(o_.x, "--x", o_)), seq(need(o_.y, "--y", o_)), matrix(o_.a), opts);
    Outcome out;
    out.verdict = r.consistent();
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}});
    out.result = {{"x_is_sop", r.x_is_sop},
                  {"y_is_sop", r.y_is_sop},
                  {"A", matrix_json(r.a)},
                  {"det", poly(r.det_a)},
                  {"map5_injective", r.map5_injective},
                  {"map1_injective", r.map1_injective},
                  {"map2_stages", stages_json(r.map2_stages)},
                  {"checks", checks},
                  {"consistent", r.consistent()}};
    out.text = "x sop: " + yes_no(r.x_is_sop) + "\ny sop: " + yes_no(r.y_is_sop) + "\nA = " + matrix_text(r.a) +
               "\ndet A = " + poly(r.det_a) + "\nmap5 injective: " + yes_no(r.map5_injective) +
               "\nmap1 injective: " + yes_no(r.map1_injective) + "\n" + stages_text(r.map2_stages);
    for (const auto& c : r.checks) out.text += "check " + c.name + ": " + (c.passed ? "ok" : "FAILED") + "\n";
    return out;
  }

  Outcome koszul() {
    const auto kc = koszul_complex(seq(need(o_.seq, "--seq", o_)));
    Outcome out;
    json diffs = json::array();
    for (std::size_t k = 1; k <= kc.length(); ++k) {
      diffs.push_back({{"k", k}, {"matrix", matrix_json(kc.differential(k))}});
      out.text += "d_" + std::to_string(k) + " = " + matrix_text(kc.differential(k)) + "\n";
    }
    out.result = {{"length", kc.length()}, {"differentials", diffs}, {"d_squared_zero", true}};
    out.text += "d^2 = 0: true\n";
    return out;
  }

  Outcome detcor() {
    const auto x = seq(need(o_.x, "--x", o_));
    const auto y = seq(need(o_.y, "--y", o_));
    const auto a = s_.matrix(need(o_.a, "--A", o_));
    const auto b = s_.matrix(need(o_.b, "--B", o_));
    const bool ok = detcor_check(y, a, b, x);
    Outcome out;
    out.verdict = ok;
    out.result = {{"holds", ok}, {"det_A", poly(determinant(a))}, {"det_B", poly(determinant(b))}};
    out.text = "(y1...yd)^d (det A - det B) in (y)^[d+1]: " + yes_no(ok) + "\n";
    return out;
  }

  Outcome lift() {
    const auto x = seq(need(o_.x, "--x", o_));
    const auto y = seq(need(o_.y, "--y", o_));
    const auto a = lift_matrix(y, x);
    Outcome out;
    out.result = {{"A", matrix_json(a)}, {"det", poly(determinant(a))}};
    out.text = "A = " + matrix_text(a) + "\ndet A = " + poly(determinant(a)) + "\n";
    return out;
  }

  Outcome ideal_outcome(const Ideal<F>& I, const std::string& label) {
    Outcome out;
    out.result = {{"ideal", ideal_json(I)}};
    out.text = label + ideal_text(I) + "\n";
    return out;
  }

  Outcome colon_cmd() {
    const auto I = ideal(need(o_.ideal, "--ideal", o_));
    if (!o_.f.empty()) return ideal_outcome(colon(I, s_.parse(o_.f)), "I : f = ");
    return ideal_outcome(colon(I, ideal(need(o_.ideal2, "--f or --ideal2", o_))), "I : K = ");
  }

  Outcome intersect_cmd() {
    return ideal_outcome(intersect(ideal(need(o_.ideal, "--ideal", o_)), ideal(need(o_.ideal2, "--ideal2", o_))),
                         "I intersect K = ");
  }

  Outcome dim() {
    const auto r = dimension(ideal(o_.ideal));
    Outcome out;
    json w = json::array();
    std::string names;
    for (auto i : r.witness) {
      w.push_back(pres_->ambient()->variables()[i]);
      names += (names.empty() ? "" : " ") + pres_->ambient()->variables()[i];
    }
    out.result = {{"dim", r.dim}, {"independent_vars", w}};
    out.text = "dim = " + std::to_string(r.dim) + "\nindependent variables: {" + names + "}\n";
    return out;
  }

  Outcome length_cmd() {
    const auto n = length(ideal(o_.ideal));
    Outcome out;
    out.result = {{"length", n}};
    out.text = "length = " + std::to_string(n) + "\n";
    return out;
  }

  Outcome socle_cmd() { return ideal_outcome(socle(ideal(o_.ideal)), "I : m = "); }

  Outcome regseq() {
    const auto r = is_regular_sequence(seq(need(o_.seq, "--seq", o_)));
    Outcome out;
    out.verdict = r.regular;
    out.result = {{"regular", r.regular}};
    out.result["first_failure"] = r.first_failure ? json(*r.first_failure) : json(nullptr);
    out.text = "regular: " + yes_no(r.regular) + "\n";
    if (r.first_failure) out.text += "fails at element " + std::to_string(*r.first_failure) + "\n";
    return out;
  }

  Outcome cmprobe() {
    const auto r = cm_probe(pres_, o_.trials, o_.seed, o_.ell, lim_);
    Outcome out;
    const bool cm = r.verdict == CMVerdict::CMConsistent;
    out.verdict = cm;
    out.result = {{"verdict", cm ? "CMConsistent" : "NotCM"}, {"tested", r.tested}, {"seed", o_.seed}};
    out.result["sop"] = r.sop ? poly_list(r.sop->entries()) : json(nullptr);
    out.result["witness"] = r.witness ? json(poly(*r.witness)) : json(nullptr);
    out.text = "verdict: " + std::string(cm ? "CMConsistent" : "NotCM") + " (" + std::to_string(r.tested) +
               " sops tested, seed " + std::to_string(o_.seed) + ")\n";
    if (r.sop) {
      out.text += "sop: " + ideal_text(Ideal<F>(pres_, r.sop->entries())) + "\n";
      out.text += "witness in (x)^lim outside (x): " + poly(*r.witness) + "\n";
    }
    return out;
  }

  Outcome frobcert() {
    const auto qs = q_list(need(o_.q, "--q", o_));
    const auto x = seq(need(o_.x, "--x", o_));
    const auto y = seq(need(o_.y, "--y", o_));
    const auto a = lift_or_given(x, y);
    const auto rows = frobenius_certificate_check(s_.parse(need(o_.c, "--c", o_)), s_.parse(need(o_.z, "--z", o_)),
                                                  x, y, a, qs);
    Outcome out;
    json jr = json::array();
    for (const auto& r : rows) {
      json row = {{"q", r.q}, {"det_identity", r.det_identity}, {"hypothesis", r.hypothesis}};
      row["conclusion"] = r.conclusion ? json(*r.conclusion) : json(nullptr);
      jr.push_back(row);
      out.text += "q = " + std::to_string(r.q) + ": det identity " + yes_no(r.det_identity) + ", hypothesis " +
                  yes_no(r.hypothesis);
      if (r.conclusion) out.text += ", conclusion " + yes_no(*r.conclusion);
      out.text += "\n";
    }
    out.result = {{"rows", jr}};
    return out;
  }

  Outcome zerocolon() {
    const auto r = zero_colon_probe(pres_, s_.parse(need(o_.u, "--u", o_)), o_.trials, o_.seed, o_.ell);
    Outcome out;
    out.verdict = r.found.has_value();
    out.result = {{"annihilator", ideal_json(r.annihilator)}, {"tested", r.tested}, {"seed", o_.seed}};
    out.result["sop"] = r.found ? poly_list(r.found->entries()) : json(nullptr);
    out.text = "0 : u = " + ideal_text(r.annihilator) + "\n";
    out.text += r.found ? "sop containing it: " + ideal_text(Ideal<F>(pres_, r.found->entries())) + "\n"
                        : "no sampled sop contains it (" + std::to_string(r.tested) + " tested)\n";
    return out;
  }

  const Session<F>& s_;
  const Options& o_;
  PresentationPtr<F> pres_;
  LimitClosureOptions lim_;
};

int emit(const Options& o, const Outcome& out, const json& header, const std::vector<std::string>& warnings) {
  if (o.json) {
    json doc = header;
    doc["warnings"] = warnings;
    doc["verdict"] = out.verdict ? json(*out.verdict) : json(nullptr);
    doc["result"] = out.result;
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& w : warnings) std::cerr << "WARNING: " << w << "\n";
    std::cout << out.text;
  }
  if (out.verdict && !*out.verdict && kYesNo.count(o.command)) return 1;
  return 0;
}

int run_scenarios(const Options& o, std::optional<std::uint64_t> budget) {
  std::vector<std::string> names;
  if (o.list || o.all) {
    names = list_scenarios();
    if (o.list) {
      Outcome out;
      out.result = {{"scenarios", names}};
      for (const auto& n : names) out.text += n + "\n";
      return emit(o, out, json{{"command", "scenario"}}, {});
    }
  } else {
    names.push_back(need(o.input, "a scenario name", o));
  }
  Outcome out;
  json reports = json::array();
  bool all_pass = true;
  for (const auto& n : names) {
    const auto rep = run_scenario(n, default_scenario_dir(), budget);
    all_pass = all_pass && rep.passed();
    json configs = json::array();
    out.text += "scenario " + rep.name + ": " + (rep.passed() ? "PASS" : "FAIL") + " (" +
                std::to_string(rep.check_count()) + " checks)\n";
    for (const auto& cfg : rep.configs) {
      json checks = json::array();
      out.text += "  [" + cfg.label + "] " + (cfg.passed() ? "pass" : "FAIL") + "\n";
      for (const auto& c : cfg.checks) {
        std::string args;
        for (const auto& a : c.expectation.args) args += " " + a;
        checks.push_back({{"op", c.expectation.op},
                          {"args", c.expectation.args},
                          {"expected", c.expectation.expected},
                          {"actual", c.actual},
                          {"tag", c.expectation.tag},
                          {"line", c.expectation.line},
                          {"passed", c.passed}});
        if (!c.passed) {
          out.text += "    line " + std::to_string(c.expectation.line) + ": " + c.expectation.op + args +
                      "\n      expected " + c.expectation.expected + "\n      actual   " + c.actual + "\n";
        }
      }
      configs.push_back({{"config", cfg.label}, {"passed", cfg.passed()}, {"checks", checks}});
    }
    reports.push_back({{"name", rep.name}, {"passed", rep.passed()}, {"configs", configs}});
  }
  out.verdict = all_pass;
  out.result = {{"scenarios", reports}};
  return emit(o, out, json{{"command", "scenario"}}, {});
}

int fail(bool as_json, const Error& e) {
  if (as_json) {
    json err = {{"code", std::string(e.code_name())}, {"message", e.what()}};
    if (e.has_position()) {
      err["line"] = e.line();
      err["column"] = e.column();
    }
    std::cout << json{{"error", err}}.dump(2) << "\n";
  } else {
    std::cerr << "error [" << e.code_name() << "]";
    if (e.has_position()) std::cerr << " at " << e.line() << ":" << e.column();
    std::cerr << ": " << e.what() << "\n";
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  bool as_json = false;
  for (int i = 1; i < argc; ++i) as_json = as_json || std::string(argv[i]) == "--json";

  Options o;
  CLI::App app{"Systems of parameters, limit closure and Koszul data over polynomial quotient rings"};
  app.add_option("command", o.command, "sopcheck limclose mc drtest map5 map1 map2 koszul detcor lift colon "
                                       "intersect dim length socle regseq cmprobe frobcert zerocolon scenario")
      ->required();
  app.add_option("input", o.input, "input file (scenario name or path for 'scenario')");
  app.add_option("--seq", o.seq, "sequence: a name from the file or a list such as \"(x, y^2)\"");
  app.add_option("--x", o.x, "sequence x");
  app.add_option("--y", o.y, "sequence y");
  app.add_option("--A", o.a, "matrix name with y = A x (default: computed lift)");
  app.add_option("--B", o.b, "second lift matrix name");
  app.add_option("--ideal", o.ideal, "ideal: sequence name or list (default: zero ideal)");
  app.add_option("--ideal2", o.ideal2, "second ideal");
  app.add_option("--f", o.f, "polynomial");
  app.add_option("--u", o.u, "polynomial");
  app.add_option("--c", o.c, "Frobenius multiplier c");
  app.add_option("--z", o.z, "Frobenius element z");
  app.add_option("--q", o.q, "comma-separated powers q = p^e, e.g. 2,4,8");
  app.add_option("--t", o.t, "limclose: also print stage t");
  app.add_option("--tmax", o.tmax, "largest limit-closure stage")->capture_default_str();
  app.add_option("--window", o.window, "stable stages required")->capture_default_str();
  app.add_option("--stages", o.stages, "map2 stages N")->capture_default_str();
  app.add_option("--trials", o.trials, "sampling attempts")->capture_default_str();
  app.add_option("--seed", o.seed, "sampling seed")->capture_default_str();
  app.add_option("--ell", o.ell, "sample inside m^ell")->capture_default_str();
  app.add_option("--order", o.order, "grevlex or lex")->capture_default_str();
  app.add_flag("--json", o.json, "machine-readable output");
  app.add_flag("--no-homog-warning", o.no_homog_warning, "suppress homogeneity warnings");
  app.add_flag("--all", o.all, "scenario: run every registered scenario");
  app.add_flag("--list", o.list, "scenario: list registered scenarios");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(as_json, Error(ErrorCode::ParseError, e.what()));
  }

  try {
    if (!kCommands.count(o.command)) throw Error(ErrorCode::UnknownCommand, "unknown command '" + o.command + "'");
    const auto budget = budget_from_env();
    if (o.command == "scenario") return run_scenarios(o, budget);

    if (o.input.empty()) throw Error(ErrorCode::InvalidArgument, "no input file given");
    const SessionSource src = parse_session_source(read_text_file(o.input));
    AnySession session = build_session(src, *src.characteristic, order_from_name(o.order));
    return std::visit(
        [&](const auto& s) {
          if (budget) s.presentation()->set_budget(*budget);
          Runner runner(s, o);
          const Outcome out = runner.run();
          const json header = {{"command", o.command},
                               {"ring", s.name()},
                               {"characteristic", s.presentation()->characteristic()},
                               {"order", o.order}};
          std::vector<std::string> warnings;
          if (!o.no_homog_warning) warnings = s.warnings();
          return emit(o, out, header, warnings);
        },
        session);
  } catch (const Error& e) {
    return fail(as_json, e);
  } catch (const std::bad_alloc&) {
    return fail(as_json, Error(ErrorCode::BudgetExceeded, "out of memory"));
  }
}
