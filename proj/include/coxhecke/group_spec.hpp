#pragma once

// Text specs for groups, diagram automorphisms and words.
//   group: NAME RANK | I2(m) | spec x spec | matrix:path.json
//   delta: comma-separated 0-based generator images, e.g. "1,0"
//   word:  1-based generators joined by dots, "e" for the identity

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "coxhecke/coxeter_group.hpp"
#include "coxhecke/coxeter_matrix.hpp"
#include "coxhecke/delta.hpp"
#include "coxhecke/errors.hpp"

namespace coxhecke {

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

inline int parseInt(std::string_view s, std::string_view what) {
  const std::string t = trim(s);
  if (t.empty() || t.size() > 9) fail(ErrorKind::ParseError, "bad " + std::string(what) + ": '" + t + "'");
  int v = 0;
  std::size_t i = 0;
  bool neg = false;
  if (t[0] == '-') {
    neg = true;
    i = 1;
  }
  if (i == t.size()) fail(ErrorKind::ParseError, "bad " + std::string(what) + ": '" + t + "'");
  for (; i < t.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) fail(ErrorKind::ParseError, "bad " + std::string(what) + ": '" + t + "'");
    v = v * 10 + (t[i] - '0');
  }
  return neg ? -v : v;
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.emplace_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

inline CoxeterMatrix parseSingleType(const std::string& t) {
  if (t.rfind("I2(", 0) == 0) {
    if (t.back() != ')') fail(ErrorKind::ParseError, "unterminated I2(m): '" + t + "'");
    return types::I2(parseInt(std::string_view(t).substr(3, t.size() - 4), "dihedral order"));
  }
  if (t.size() < 2 || !std::isalpha(static_cast<unsigned char>(t[0])))
    fail(ErrorKind::ParseError, "unrecognized group type '" + t + "'");
  const char name = static_cast<char>(std::toupper(static_cast<unsigned char>(t[0])));
  const int n = parseInt(std::string_view(t).substr(1), "rank");
  switch (name) {
    case 'A': return types::A(n);
    case 'B':
    case 'C': return types::B(n);
    case 'D': return types::D(n);
    case 'E': return types::E(n);
    case 'F':
      if (n != 4) fail(ErrorKind::ParseError, "F_n exists only for n = 4");
      return types::F4();
    case 'G':
      if (n != 2) fail(ErrorKind::ParseError, "G_n exists only for n = 2");
      return types::G2();
    case 'H': return types::H(n);
    default: fail(ErrorKind::ParseError, "unrecognized group type '" + t + "'");
  }
}

}  // namespace detail

/// Coxeter matrix from {"size": n, "m": [[...]]}; 0 stands for infinity and
/// is rejected by validation.
inline CoxeterMatrix matrixFromJson(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("size") || !j.contains("m"))
    fail(ErrorKind::ParseError, "matrix JSON needs keys 'size' and 'm'");
  if (!j["size"].is_number_integer() || !j["m"].is_array()) fail(ErrorKind::ParseError, "malformed matrix JSON");
  const int n = j["size"].get<int>();
  std::vector<std::vector<int>> rows;
  for (const auto& r : j["m"]) {
    if (!r.is_array()) fail(ErrorKind::ParseError, "matrix rows must be arrays");
    std::vector<int> row;
    for (const auto& x : r) {
      if (!x.is_number_integer()) fail(ErrorKind::ParseError, "matrix entries must be integers");
      row.push_back(x.get<int>());
    }
    rows.push_back(std::move(row));
  }
  if (static_cast<int>(rows.size()) != n) fail(ErrorKind::InvalidMatrix, "'size' disagrees with the number of rows");
  CoxeterMatrix m = CoxeterMatrix::fromRows(rows);
  m.validate();
  return m;
}

inline CoxeterMatrix matrixFromFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open matrix file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("matrix file is not valid JSON: ") + e.what());
  }
  return matrixFromJson(j);
}

/// Group spec to Coxeter matrix; products are block-diagonal in the order written.
inline CoxeterMatrix parseGroupSpec(std::string_view spec) {
  const std::string s = detail::trim(spec);
  if (s.rfind("matrix:", 0) == 0) return matrixFromFile(s.substr(7));
  if (s.empty()) fail(ErrorKind::ParseError, "empty group spec");
  std::optional<CoxeterMatrix> acc;
  for (const auto& part : detail::split(s, 'x')) {
    const std::string t = detail::trim(part);
    if (t.empty()) fail(ErrorKind::ParseError, "empty factor in group spec '" + s + "'");
    CoxeterMatrix m = detail::parseSingleType(t);
    acc = acc ? acc->directSum(m) : m;
  }
  acc->validate();
  return *acc;
}

/// Named types that need --slow on the command line.
inline bool isSlowSpec(std::string_view spec) {
  for (const auto& part : detail::split(detail::trim(spec), 'x')) {
    const std::string t = detail::trim(part);
    if (t == "H4" || t == "E7" || t == "E8") return true;
  }
  return false;
}

inline std::vector<int> parseDeltaSpec(std::string_view spec) {
  std::vector<int> out;
  for (const auto& part : detail::split(spec, ',')) out.push_back(detail::parseInt(part, "generator image"));
  return out;
}

/// Identity when spec is empty; otherwise validated against the group.
inline DeltaAut deltaFromSpec(const GroupPtr& g, std::string_view spec) {
  if (detail::trim(spec).empty()) return DeltaAut::identity(g);
  return DeltaAut(g, parseDeltaSpec(spec));
}

inline std::string formatWord(const Word& word) {
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(word[i] + 1);
  }
  return out;
}

inline std::string formatElement(const CoxeterGroup& g, Index w) { return formatWord(g.reducedWord(w)); }

/// Inverse of formatWord; also accepts the empty string for e. The result
/// is 0-based and need not be reduced.
inline Word parseWord(std::string_view text, int rank) {
  const std::string t = detail::trim(text);
  if (t.empty() || t == "e") return {};
  Word out;
  for (const auto& part : detail::split(t, '.')) {
    const int s = detail::parseInt(part, "generator");
    if (s < 1 || s > rank) fail(ErrorKind::ParseError, "generator " + detail::trim(part) + " out of range 1.." + std::to_string(rank));
    out.push_back(s - 1);
  }
  return out;
}

inline std::string formatSubset(GenSubset J) {
  std::string out = "{";
  bool first = true;
  for (int s : J.members()) {
    if (!first) out += ',';
    out += std::to_string(s + 1);
    first = false;
  }
  return out + "}";
}

}  // namespace coxhecke
