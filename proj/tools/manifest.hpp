#pragma once

#include <cctype>
#include <charconv>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "casorati/casorati.hpp"

namespace casorati::cli {

/// Parse failure with the manifest line (1-based; 0 for JSON input) and field.
class manifest_error : public argument_error {
 public:
  manifest_error(std::size_t line, const std::string& field, const std::string& what)
      : argument_error(format(line, field, what)), line_(line), field_(field), reason_(what) {}
  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }
  const std::string& reason() const { return reason_; }

 private:
  static std::string format(std::size_t line, const std::string& field, const std::string& what) {
    std::string loc = line ? "line " + std::to_string(line) : "manifest";
    if (!field.empty()) loc += ", field '" + field + "'";
    return loc + ": " + what;
  }
  std::size_t line_;
  std::string field_;
  std::string reason_;
};

/// Exact decimal or fraction: "3", "-1/2", "0.125", "2.5e-3".
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw argument_error("empty number");
  if (s.find('/') != std::string::npos) return Rational::parse(s);
  std::size_t pos = 0;
  bool neg = false;
  if (s[pos] == '+' || s[pos] == '-') neg = s[pos++] == '-';
  std::string digits;
  long scale = 0;
  bool seen_dot = false, any = false;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      any = true;
      if (seen_dot) --scale;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  if (!any) throw argument_error("not a number: '" + s + "'");
  if (pos < s.size()) {
    if (s[pos] != 'e' && s[pos] != 'E') throw argument_error("not a number: '" + s + "'");
    long e = 0;
    auto rest = s.substr(pos + 1);
    auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), e);
    if (ec != std::errc{} || p != rest.data() + rest.size() || rest.empty())
      throw argument_error("bad exponent in '" + s + "'");
    scale += e;
  }
  Rational r{BigInt(digits, 10)};
  r *= pow(Rational(10), scale);
  return neg ? -r : r;
}

/// Same grammar as parse_rational; decimals are rounded to nearest, which
/// mpq_get_d (truncating) does not do.
inline double parse_real(const std::string& s) {
  if (s.find('/') != std::string::npos) return parse_rational(s).to_double();
  parse_rational(s);  // validates
  const char* b = s.data() + (s.front() == '+' ? 1 : 0);
  double v = 0.0;
  auto [p, ec] = std::from_chars(b, s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) throw argument_error("not a number: '" + s + "'");
  return v;
}

/// "1.5", "-2i", "1+2i", "(0.5-0.25i)", "i".
inline Complex parse_complex(std::string s) {
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.empty()) throw argument_error("empty complex number");
  if (s.back() != 'i') return {parse_real(s), 0.0};
  std::string body = s.substr(0, s.size() - 1);
  // split at the last sign that is not an exponent sign or leading sign
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;)
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  auto imag_of = [](const std::string& t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_real(t);
  };
  if (split == std::string::npos) return {0.0, imag_of(body)};
  return {parse_real(body.substr(0, split)), imag_of(body.substr(split))};
}

struct GridSpec {
  Rational start, stop;
  std::size_t count = 0;

  template <Field F>
  std::vector<F> points() const {
    std::vector<F> out;
    for (std::size_t i = 0; i < count; ++i) {
      Rational x = count == 1 ? start
                              : start + (stop - start) * Rational(static_cast<long>(i)) /
                                            Rational(static_cast<long>(count - 1));
      out.push_back(field_traits<F>::from_rational(x));
    }
    return out;
  }
};

struct Manifest {
  std::string field = "exact";
  std::vector<BasisFunction> members;
  std::vector<std::size_t> member_lines;
  std::optional<GridSpec> grid;

  bool exact() const { return field == "exact"; }

  template <Field F>
  FunctionFamily<F> family() const {
    if (members.empty()) throw manifest_error(0, "member", "no members");
    if constexpr (field_traits<F>::exact) {
      for (std::size_t i = 0; i < members.size(); ++i)
        if (!supports_exact(members[i]))
          throw manifest_error(member_lines[i], "field", describe(members[i]) + " needs 'field float'");
    }
    return FunctionFamily<F>(members);
  }
};

namespace detail {

using Fields = std::map<std::string, std::string>;

inline std::string take(Fields& f, const std::string& key, std::size_t line, const char* dflt = nullptr) {
  auto it = f.find(key);
  if (it == f.end()) {
    if (dflt) return dflt;
    throw manifest_error(line, key, "missing");
  }
  std::string v = it->second;
  f.erase(it);
  return v;
}

template <class Fn>
auto field_value(std::size_t line, const std::string& key, const std::string& raw, Fn fn) {
  try {
    return fn(raw);
  } catch (const manifest_error&) {
    throw;
  } catch (const std::exception& e) {
    throw manifest_error(line, key, e.what());
  }
}

inline unsigned take_k(Fields& f, std::size_t line) {
  auto raw = take(f, "k", line, "0");
  return field_value(line, "k", raw, [](const std::string& s) {
    unsigned v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) throw argument_error("expected a non-negative integer");
    return v;
  });
}

inline Complex take_complex(Fields& f, const std::string& key, std::size_t line, const char* dflt = nullptr) {
  auto raw = take(f, key, line, dflt);
  return field_value(line, key, raw, parse_complex);
}

inline BasisFunction make_member(const std::string& kind, Fields f, std::size_t line) {
  BasisFunction out;
  if (kind == "monomial") {
    out = monomial(take_k(f, line));
  } else if (kind == "poly") {
    auto raw = take(f, "p", line);
    out = poly(field_value(line, "p", raw, [](const std::string& s) { return Polynomial::parse(s); }));
  } else if (kind == "binomexp") {
    unsigned k = take_k(f, line);
    Complex a = take_complex(f, "a", line);
    out = field_value(line, "a", "", [&](const std::string&) { return binom_exp(k, a); });
  } else if (kind == "exppoly") {
    unsigned k = take_k(f, line);
    out = exp_poly(k, take_complex(f, "m", line));
  } else if (kind == "exptrig") {
    unsigned k = take_k(f, line);
    Complex m = take_complex(f, "m", line, "0");
    auto om = take(f, "omega", line);
    double omega = field_value(line, "omega", om, parse_real);
    auto ph = take(f, "phase", line);
    if (ph != "cos" && ph != "sin") throw manifest_error(line, "phase", "expected cos or sin, got '" + ph + "'");
    out = exp_trig(k, m, omega, ph == "cos" ? TrigPhase::cos : TrigPhase::sin);
  } else if (kind == "hyperbolic") {
    unsigned k = take_k(f, line);
    Complex m = take_complex(f, "m", line);
    auto ph = take(f, "phase", line);
    if (ph != "cosh" && ph != "sinh") throw manifest_error(line, "phase", "expected cosh or sinh, got '" + ph + "'");
    out = hyperbolic(k, m, ph == "cosh" ? HypPhase::cosh : HypPhase::sinh);
  } else if (kind == "tabulated") {
    auto name = take(f, "name", line);
    if (name != "ln") throw manifest_error(line, "name", "unknown tabulated function '" + name + "' (known: ln)");
    out = tabulated_ln();
  } else {
    throw manifest_error(line, "kind",
                         "unknown member kind '" + kind +
                             "' (monomial, poly, binomexp, exppoly, exptrig, hyperbolic, tabulated)");
  }
  if (!f.empty()) throw manifest_error(line, f.begin()->first, "unexpected field for " + kind);
  return out;
}

inline GridSpec make_grid(Fields f, std::size_t line) {
  GridSpec g;
  auto s = take(f, "start", line);
  g.start = field_value(line, "start", s, parse_rational);
  auto e = take(f, "stop", line);
  g.stop = field_value(line, "stop", e, parse_rational);
  auto c = take(f, "count", line);
  g.count = field_value(line, "count", c, [](const std::string& v) {
    std::size_t n = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
    if (ec != std::errc{} || p != v.data() + v.size() || n == 0) throw argument_error("expected a positive integer");
    return n;
  });
  if (!f.empty()) throw manifest_error(line, f.begin()->first, "unexpected field for grid");
  return g;
}

inline void set_field(Manifest& m, const std::string& v, std::size_t line) {
  if (v != "exact" && v != "float") throw manifest_error(line, "field", "expected exact or float, got '" + v + "'");
  m.field = v;
}

inline std::string json_scalar(const nlohmann::json& v, const std::string& key) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) {
    std::ostringstream os;
    os.precision(17);
    os << v.get<double>();
    return os.str();
  }
  throw manifest_error(0, key, "expected a number or string");
}

inline Fields json_fields(const nlohmann::json& obj, const char* skip) {
  if (!obj.is_object()) throw manifest_error(0, skip, "expected an object");
  Fields f;
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (it.key() != skip) f[it.key()] = json_scalar(it.value(), it.key());
  return f;
}

}  // namespace detail

/// Line-oriented manifest. Blank lines and '#' comments are ignored.
///   field exact|float
///   member <kind> key=value ...
///   grid start=<q> stop=<q> count=<n>
inline Manifest parse_manifest_text(std::istream& in) {
  Manifest m;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string& head = tok[0];
    if (head == "field") {
      if (tok.size() != 2) throw manifest_error(line, "field", "expected 'field exact' or 'field float'");
      detail::set_field(m, tok[1], line);
      continue;
    }
    detail::Fields f;
    std::size_t first = head == "member" ? 2 : 1;
    if (head == "member" && tok.size() < 2) throw manifest_error(line, "kind", "missing member kind");
    for (std::size_t i = first; i < tok.size(); ++i) {
      auto eq = tok[i].find('=');
      if (eq == std::string::npos || eq == 0)
        throw manifest_error(line, tok[i], "expected key=value");
      std::string key = tok[i].substr(0, eq);
      if (f.count(key)) throw manifest_error(line, key, "given twice");
      f[key] = tok[i].substr(eq + 1);
    }
    if (head == "member") {
      m.members.push_back(detail::make_member(tok[1], std::move(f), line));
      m.member_lines.push_back(line);
    } else if (head == "grid") {
      if (m.grid) throw manifest_error(line, "grid", "given twice");
      m.grid = detail::make_grid(std::move(f), line);
    } else {
      throw manifest_error(line, head, "unknown directive (field, member, grid)");
    }
  }
  if (m.members.empty()) throw manifest_error(line, "member", "manifest has no members");
  return m;
}

/// The same content as a JSON object:
///   {"field": "float", "members": [{"kind": "exppoly", "k": 1, "m": 2}],
///    "grid": {"start": 0, "stop": 4, "count": 9}}
inline Manifest parse_manifest_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw manifest_error(0, "", "expected a JSON object");
  Manifest m;
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (it.key() != "field" && it.key() != "members" && it.key() != "grid")
      throw manifest_error(0, it.key(), "unknown key (field, members, grid)");
  if (doc.contains("field")) {
    if (!doc["field"].is_string()) throw manifest_error(0, "field", "expected a string");
    detail::set_field(m, doc["field"].get<std::string>(), 0);
  }
  if (!doc.contains("members") || !doc["members"].is_array())
    throw manifest_error(0, "members", "expected an array of members");
  std::size_t idx = 0;
  for (const auto& entry : doc["members"]) {
    ++idx;
    if (!entry.is_object() || !entry.contains("kind") || !entry["kind"].is_string())
      throw manifest_error(0, "members[" + std::to_string(idx) + "].kind", "missing");
    try {
      m.members.push_back(detail::make_member(entry["kind"].get<std::string>(), detail::json_fields(entry, "kind"), 0));
    } catch (const manifest_error& e) {
      throw manifest_error(0, "members[" + std::to_string(idx) + "]." + e.field(), e.reason());
    }
    m.member_lines.push_back(0);
  }
  if (m.members.empty()) throw manifest_error(0, "members", "manifest has no members");
  if (doc.contains("grid")) m.grid = detail::make_grid(detail::json_fields(doc["grid"], ""), 0);
  return m;
}

/// JSON when the first non-blank character is '{', line format otherwise.
inline Manifest parse_manifest(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw manifest_error(0, "", std::string("invalid JSON: ") + e.what());
    }
    return parse_manifest_json(doc);
  }
  std::istringstream is(text);
  return parse_manifest_text(is);
}

}  // namespace casorati::cli
