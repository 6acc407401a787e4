#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "casorati/casorati.hpp"

namespace casorati::cli {

inline std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string fmt(const Complex& z) {
  if (z.imag() == 0.0) return fmt(z.real());
  std::string im = fmt(std::abs(z.imag()));
  return fmt(z.real()) + (z.imag() < 0 ? "-" : "+") + im + "i";
}

inline std::string fmt(const Rational& r) { return r.str(); }
inline std::string fmt(bool b) { return b ? "true" : "false"; }

/// Key-value report. Tables print as indexed keys, or as CSV blocks when
/// `csv` is set. Output order is insertion order.
class Report {
 public:
  struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
  };

  explicit Report(std::string command) { put("command", std::move(command)); }

  void put(const std::string& key, std::string value) { entries_.emplace_back(key, std::move(value)); }
  template <class T>
  void put(const std::string& key, const T& value) {
    put(key, fmt(value));
  }
  void warn(std::string message) { warnings_.push_back(std::move(message)); }
  Table& table(std::string name, std::vector<std::string> columns) {
    tables_.push_back({std::move(name), std::move(columns), {}});
    return tables_.back();
  }

  void write(std::ostream& os, bool csv) const {
    for (const auto& [k, v] : entries_) os << k << ": " << v << '\n';
    os << "warnings: " << warnings_.size() << '\n';
    for (std::size_t i = 0; i < warnings_.size(); ++i) os << "warning." << (i + 1) << ": " << warnings_[i] << '\n';
    for (const auto& t : tables_) {
      if (csv) {
        os << "\n# " << t.name << '\n';
        os << join(t.columns, ",") << '\n';
        for (const auto& r : t.rows) os << join(r, ",") << '\n';
      } else {
        for (std::size_t i = 0; i < t.rows.size(); ++i) {
          os << t.name << '.' << (i + 1) << ':';
          for (std::size_t c = 0; c < t.columns.size(); ++c) os << ' ' << t.columns[c] << '=' << t.rows[i][c];
          os << '\n';
        }
      }
    }
  }

 private:
  static std::string join(const std::vector<std::string>& xs, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) out += sep;
      out += xs[i];
    }
    return out;
  }

  std::vector<std::pair<std::string, std::string>> entries_;
  std::vector<std::string> warnings_;
  std::vector<Table> tables_;
};

}  // namespace casorati::cli
