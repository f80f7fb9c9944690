#pragma once

#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "paramkit/criteria.hpp"
#include "paramkit/parser.hpp"

namespace paramkit {

/// A piece of source text with its 1-based position in the file.
struct Located {
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

struct NamedList {
  std::string name;
  std::size_t line = 0;
  std::vector<Located> items;
};

struct NamedMatrix {
  std::string name;
  std::size_t line = 0;
  std::vector<std::vector<Located>> rows;
};

/// `config char=<c> order=<o>` line of a scenario file.
struct ConfigLine {
  std::uint32_t characteristic = 0;
  std::string order = "grevlex";
  std::size_t line = 0;
};

/// Input file contents before any polynomial is parsed.
struct SessionSource {
  std::string ring_name;
  std::optional<std::uint32_t> characteristic;
  std::vector<std::string> vars;
  std::vector<Located> quotient;
  std::vector<NamedList> sequences;
  std::vector<NamedMatrix> matrices;
  std::vector<ConfigLine> configs;
  std::vector<Located> expects;  // full text after `expect`, tag included
};

namespace detail {

inline bool is_ident(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

[[noreturn]] inline void parse_fail(const std::string& msg, std::size_t line, std::size_t col = 0) {
  throw Error(ErrorCode::ParseError, msg, line, col);
}

inline std::size_t skip_ws(std::string_view s, std::size_t i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

inline Located trimmed(std::string_view s, std::size_t begin, std::size_t end, std::size_t line) {
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return Located{std::string(s.substr(begin, end - begin)), line, begin + 1};
}

// Splits s[begin, end) at top-level commas (outside parentheses and brackets).
inline std::vector<Located> split_top(std::string_view s, std::size_t begin, std::size_t end, std::size_t line) {
  std::vector<Located> out;
  int depth = 0;
  std::size_t start = begin;
  for (std::size_t i = begin; i < end; ++i) {
    const char c = s[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(trimmed(s, start, i, line));
      start = i + 1;
    }
  }
  out.push_back(trimmed(s, start, end, line));
  for (const auto& item : out) {
    if (item.text.empty()) parse_fail("empty list entry", line, item.column);
  }
  return out;
}

inline std::vector<std::vector<Located>> parse_matrix_body(std::string_view s, std::size_t begin, std::size_t line) {
  std::size_t i = skip_ws(s, begin);
  if (i >= s.size() || s[i] != '[') parse_fail("matrix must start with '['", line, i + 1);
  ++i;
  std::vector<std::vector<Located>> rows;
  while (true) {
    i = skip_ws(s, i);
    if (i >= s.size() || s[i] != '[') parse_fail("expected '[' opening a matrix row", line, i + 1);
    const std::size_t row_begin = ++i;
    int depth = 0;
    while (i < s.size() && !(s[i] == ']' && depth == 0)) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')') --depth;
      ++i;
    }
    if (i >= s.size()) parse_fail("unterminated matrix row", line, row_begin);
    rows.push_back(split_top(s, row_begin, i, line));
    i = skip_ws(s, i + 1);
    if (i < s.size() && s[i] == ',') {
      ++i;
      continue;
    }
    if (i < s.size() && s[i] == ']') {
      ++i;
      break;
    }
    parse_fail("expected ',' or ']' in matrix", line, i + 1);
  }
  i = skip_ws(s, i);
  if (i != s.size()) parse_fail("trailing text after matrix", line, i + 1);
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) parse_fail("matrix rows have different lengths", line);
  }
  return rows;
}

// `<name> = <body>`; returns the name and the offset of the body.
inline std::pair<std::string, std::size_t> parse_binding(std::string_view s, std::size_t begin, std::size_t line) {
  const std::size_t eq = s.find('=', begin);
  if (eq == std::string_view::npos) parse_fail("expected '<name> = ...'", line, begin + 1);
  Located name = trimmed(s, begin, eq, line);
  if (!is_ident(name.text)) parse_fail("invalid name '" + name.text + "'", line, name.column);
  return {name.text, eq + 1};
}

inline std::uint32_t parse_char(std::string_view text, std::size_t line, std::size_t col) {
  if (text.empty() || text.size() > 10) parse_fail("invalid characteristic", line, col);
  std::uint64_t v = 0;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) parse_fail("invalid characteristic", line, col);
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  if (v != 0 && (v >= (std::uint64_t{1} << 31) || !PrimeField::is_prime(static_cast<std::uint32_t>(v)))) {
    parse_fail("characteristic must be 0 or a prime below 2^31", line, col);
  }
  return static_cast<std::uint32_t>(v);
}

}  // namespace detail

/// Parses the line-oriented input format. Polynomials are kept as located text.
inline SessionSource parse_session_source(std::string_view text) {
  using namespace detail;
  SessionSource src;
  std::vector<std::string> names;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

    const std::size_t kw_begin = skip_ws(raw, 0);
    std::size_t kw_end = kw_begin;
    while (kw_end < raw.size() && std::isalpha(static_cast<unsigned char>(raw[kw_end]))) ++kw_end;
    const std::string keyword(raw.substr(kw_begin, kw_end - kw_begin));

    if (keyword == "expect") {
      Located e = trimmed(raw, kw_end, raw.size(), line_no);
      if (e.text.empty()) parse_fail("empty expect line", line_no, kw_begin + 1);
      src.expects.push_back(std::move(e));
      continue;
    }
    std::string_view line = raw.substr(0, raw.find('#'));
    if (skip_ws(line, 0) == line.size()) continue;
    if (keyword.empty()) parse_fail("expected a directive", line_no, kw_begin + 1);
    const bool need_vars = keyword == "quotient" || keyword == "seq" || keyword == "matrix";
    if (need_vars && src.vars.empty()) parse_fail("'" + keyword + "' before 'vars'", line_no, kw_begin + 1);

    if (keyword == "ring") {
      Located name = trimmed(line, kw_end, line.size(), line_no);
      if (!src.ring_name.empty()) parse_fail("duplicate 'ring' line", line_no, kw_begin + 1);
      if (!is_ident(name.text)) parse_fail("invalid ring name", line_no, name.column);
      src.ring_name = name.text;
    } else if (keyword == "char") {
      Located v = trimmed(line, kw_end, line.size(), line_no);
      if (src.characteristic) parse_fail("duplicate 'char' line", line_no, kw_begin + 1);
      src.characteristic = parse_char(v.text, line_no, v.column);
    } else if (keyword == "vars") {
      if (!src.vars.empty()) parse_fail("duplicate 'vars' line", line_no, kw_begin + 1);
      std::istringstream in{std::string(line.substr(kw_end))};
      std::string v;
      while (in >> v) {
        if (!is_ident(v)) parse_fail("invalid variable name '" + v + "'", line_no);
        for (const auto& w : src.vars) {
          if (w == v) parse_fail("duplicate variable '" + v + "'", line_no);
        }
        src.vars.push_back(v);
      }
      if (src.vars.empty()) parse_fail("'vars' needs at least one variable", line_no, kw_end + 1);
      if (src.vars.size() + 1 > kMaxVariables) parse_fail("too many variables", line_no, kw_end + 1);
    } else if (keyword == "quotient") {
      if (!src.quotient.empty()) parse_fail("duplicate 'quotient' line", line_no, kw_begin + 1);
      if (skip_ws(line, kw_end) == line.size()) continue;
      src.quotient = split_top(line, kw_end, line.size(), line_no);
    } else if (keyword == "seq" || keyword == "matrix") {
      auto [name, body] = parse_binding(line, kw_end, line_no);
      for (const auto& n : names) {
        if (n == name) parse_fail("name '" + name + "' is already defined", line_no);
      }
      names.push_back(name);
      if (keyword == "seq") {
        src.sequences.push_back({name, line_no, split_top(line, body, line.size(), line_no)});
      } else {
        src.matrices.push_back({name, line_no, parse_matrix_body(line, body, line_no)});
      }
    } else if (keyword == "config") {
      ConfigLine cfg;
      cfg.line = line_no;
      cfg.characteristic = src.characteristic.value_or(0);
      std::istringstream in{std::string(line.substr(kw_end))};
      std::string kv;
      while (in >> kv) {
        const auto eq = kv.find('=');
        const std::string key = kv.substr(0, eq);
        const std::string value = eq == std::string::npos ? "" : kv.substr(eq + 1);
        if (key == "char") {
          cfg.characteristic = parse_char(value, line_no, 0);
        } else if (key == "order" && (value == "grevlex" || value == "lex")) {
          cfg.order = value;
        } else {
          parse_fail("invalid config entry '" + kv + "'", line_no);
        }
      }
      src.configs.push_back(cfg);
    } else {
      parse_fail("unknown directive '" + keyword + "'", line_no, kw_begin + 1);
    }
  }
  if (src.ring_name.empty()) parse_fail("missing 'ring' line", line_no);
  if (!src.characteristic) parse_fail("missing 'char' line", line_no);
  if (src.vars.empty()) parse_fail("missing 'vars' line", line_no);
  return src;
}

inline MonomialOrder order_from_name(const std::string& name) {
  if (name == "grevlex") return MonomialOrder::grevlex();
  if (name == "lex") return MonomialOrder::lex();
  throw Error(ErrorCode::InvalidArgument, "unknown monomial order '" + name + "'");
}

/// A loaded input file over a concrete field.
template <CoefficientField F>
class Session {
 public:
  static Session build(const SessionSource& src, F field, MonomialOrder order = MonomialOrder::grevlex()) {
    Session s;
    s.source_ = src;
    auto ring = make_ring(std::move(field), src.vars);
    std::vector<Polynomial<F>> quotient;
    for (const auto& q : src.quotient) quotient.push_back(parse_polynomial(q.text, ring, q.line, q.column));
    s.pres_ = RingPresentation<F>::create(ring, std::move(quotient), order);
    for (std::size_t i = 0; i < s.pres_->quotient_gens().size(); ++i) {
      if (!s.pres_->quotient_gens()[i].is_homogeneous()) {
        s.warnings_.push_back("quotient generator " + std::to_string(i + 1) +
                              " is not homogeneous; results describe the global quotient and may "
                              "differ from the local ring at the origin");
      }
    }
    for (const auto& nl : src.sequences) {
      std::vector<Polynomial<F>> entries;
      for (const auto& e : nl.items) entries.push_back(parse_polynomial(e.text, ring, e.line, e.column));
      for (std::size_t i = 0; i < entries.size(); ++i) {
        if (!entries[i].is_homogeneous()) {
          s.warnings_.push_back("entry " + std::to_string(i + 1) + " of sequence '" + nl.name +
                                "' is not homogeneous; local-ring semantics are not guaranteed");
        }
      }
      s.sequences_.emplace_back(nl.name, ElementSequence<F>(s.pres_, std::move(entries)));
    }
    for (const auto& nm : src.matrices) {
      std::vector<std::vector<Polynomial<F>>> rows;
      for (const auto& r : nm.rows) {
        rows.emplace_back();
        for (const auto& e : r) rows.back().push_back(parse_polynomial(e.text, ring, e.line, e.column));
      }
      s.matrices_.emplace_back(nm.name, CoeffMatrix<F>(s.pres_, rows));
    }
    return s;
  }

  const std::string& name() const { return source_.ring_name; }
  const PresentationPtr<F>& presentation() const { return pres_; }
  const SessionSource& source() const { return source_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  const std::vector<std::pair<std::string, ElementSequence<F>>>& sequences() const { return sequences_; }
  const std::vector<std::pair<std::string, CoeffMatrix<F>>>& matrices() const { return matrices_; }

  bool has_sequence(std::string_view n) const { return find(sequences_, n) != nullptr; }
  bool has_matrix(std::string_view n) const { return find(matrices_, n) != nullptr; }

  const ElementSequence<F>& sequence(std::string_view n) const {
    if (auto* p = find(sequences_, n)) return *p;
    throw Error(ErrorCode::UnknownName, "no sequence named '" + std::string(n) + "'");
  }
  const CoeffMatrix<F>& matrix(std::string_view n) const {
    if (auto* p = find(matrices_, n)) return *p;
    throw Error(ErrorCode::UnknownName, "no matrix named '" + std::string(n) + "'");
  }

  Polynomial<F> parse(std::string_view text) const { return parse_polynomial(text, pres_->ambient()); }

  /// Re-emits the session in the input format. Configs and expectations are kept verbatim.
  std::string render() const {
    std::string out = "ring " + name() + "\n";
    out += "char " + std::to_string(pres_->characteristic()) + "\n";
    out += "vars";
    for (const auto& v : pres_->ambient()->variables()) out += " " + v;
    out += "\n";
    if (!pres_->quotient_gens().empty()) out += "quotient " + join(pres_->quotient_gens()) + "\n";
    for (const auto& [n, s] : sequences_) out += "seq " + n + " = " + join(s.entries()) + "\n";
    for (const auto& [n, m] : matrices_) {
      out += "matrix " + n + " = [";
      const auto rows = m.to_rows();
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out += ", ";
        out += "[" + join(rows[i]) + "]";
      }
      out += "]\n";
    }
    for (const auto& c : source_.configs) {
      out += "config char=" + std::to_string(c.characteristic) + " order=" + c.order + "\n";
    }
    for (const auto& e : source_.expects) out += "expect " + e.text + "\n";
    return out;
  }

 private:
  template <class T>
  static const T* find(const std::vector<std::pair<std::string, T>>& v, std::string_view n) {
    for (const auto& [k, val] : v) {
      if (k == n) return &val;
    }
    return nullptr;
  }

  static std::string join(const std::vector<Polynomial<F>>& ps) {
    std::string out;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (i) out += ", ";
      out += paramkit::render(ps[i]);
    }
    return out;
  }

  SessionSource source_;
  PresentationPtr<F> pres_;
  std::vector<std::string> warnings_;
  std::vector<std::pair<std::string, ElementSequence<F>>> sequences_;
  std::vector<std::pair<std::string, CoeffMatrix<F>>> matrices_;
};

using AnySession = std::variant<Session<Rationals>, Session<PrimeField>>;

/// Builds a session over the field named by `characteristic`.
inline AnySession build_session(const SessionSource& src, std::uint32_t characteristic,
                                MonomialOrder order = MonomialOrder::grevlex()) {
  if (characteristic == 0) return Session<Rationals>::build(src, Rationals{}, order);
  return Session<PrimeField>::build(src, PrimeField(characteristic), order);
}

inline AnySession load_session(std::string_view text, MonomialOrder order = MonomialOrder::grevlex()) {
  const SessionSource src = parse_session_source(text);
  return build_session(src, *src.characteristic, order);
}

/// Same presentation, same names, and entrywise identical polynomials.
template <CoefficientField F>
bool same_session(const Session<F>& a, const Session<F>& b) {
  if (a.name() != b.name() || !a.presentation()->same_as(*b.presentation())) return false;
  if (a.sequences().size() != b.sequences().size() || a.matrices().size() != b.matrices().size()) return false;
  for (std::size_t i = 0; i < a.sequences().size(); ++i) {
    const auto& [na, sa] = a.sequences()[i];
    const auto& [nb, sb] = b.sequences()[i];
    if (na != nb || sa.entries() != sb.entries()) return false;
  }
  for (std::size_t i = 0; i < a.matrices().size(); ++i) {
    const auto& [na, ma] = a.matrices()[i];
    const auto& [nb, mb] = b.matrices()[i];
    if (na != nb || ma.to_rows() != mb.to_rows()) return false;
  }
  return true;
}

}  // namespace paramkit
