#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace puro {

/// Monomial in a fixed ambient number of variables, stored as its exponent
/// vector.  The total degree is cached.  Equality is exponent-vector
/// equality; the canonical total order is (degree, then lex on exponents),
/// which makes iteration over order ideals deterministic.
class Monomial {
 public:
  Monomial() = default;

  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
    degree_ = 0;
    for (int e : exps_) {
      if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
      degree_ += e;
    }
  }

  static Monomial unit(int ambient) { return Monomial(std::vector<int>(ambient, 0)); }

  /// x_i^k in the given ambient (0-based variable index).
  static Monomial power(int ambient, int var, int k) {
    std::vector<int> e(ambient, 0);
    e.at(var) = k;
    return Monomial(std::move(e));
  }

  int ambient() const { return static_cast<int>(exps_.size()); }
  int degree() const { return degree_; }
  int exp(int i) const { return exps_[i]; }
  const std::vector<int>& exps() const { return exps_; }

  bool divides(const Monomial& other) const {
    if (ambient() != other.ambient()) return false;
    for (int i = 0; i < ambient(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& rhs) const {
    if (ambient() != rhs.ambient())
      throw std::invalid_argument("Monomial product: ambient mismatch");
    std::vector<int> e(exps_);
    for (int i = 0; i < ambient(); ++i) e[i] += rhs.exps_[i];
    return Monomial(std::move(e));
  }

  /// Same exponents in a larger ambient (new variables get exponent 0).
  Monomial widened(int new_ambient) const {
    if (new_ambient < ambient())
      throw std::invalid_argument("Monomial::widened: ambient shrinks");
    std::vector<int> e(exps_);
    e.resize(new_ambient, 0);
    return Monomial(std::move(e));
  }

  /// Same exponents placed at an offset inside a larger ambient.
  Monomial shifted(int new_ambient, int offset) const {
    if (offset < 0 || offset + ambient() > new_ambient)
      throw std::invalid_argument("Monomial::shifted: out of range");
    std::vector<int> e(new_ambient, 0);
    for (int i = 0; i < ambient(); ++i) e[offset + i] = exps_[i];
    return Monomial(std::move(e));
  }

  bool operator==(const Monomial& rhs) const { return exps_ == rhs.exps_; }
  bool operator!=(const Monomial& rhs) const { return !(*this == rhs); }

  /// (degree, then lex on exponents).
  bool operator<(const Monomial& rhs) const {
    if (degree_ != rhs.degree_) return degree_ < rhs.degree_;
    return exps_ < rhs.exps_;
  }

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

/// Contraction by x_i: decrements exponent i, or yields nothing when the
/// exponent already vanishes (the inverse-system zero case).
inline std::optional<Monomial> contract(const Monomial& m, int i) {
  if (i < 0 || i >= m.ambient()) throw std::out_of_range("contract: variable index");
  if (m.exp(i) == 0) return std::nullopt;
  std::vector<int> e(m.exps());
  --e[i];
  return Monomial(std::move(e));
}

/// Text form "x1^2*x3" (1-based variables, exponent 1 left implicit,
/// unit monomial printed "1").
inline std::string format_monomial(const Monomial& m) {
  std::string out;
  for (int i = 0; i < m.ambient(); ++i) {
    int e = m.exp(i);
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i + 1);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

/// Bracket form "[2,0,1]" carrying the ambient explicitly.
inline std::string format_monomial_bracket(const Monomial& m) {
  std::string out = "[";
  for (int i = 0; i < m.ambient(); ++i) {
    if (i) out += ",";
    out += std::to_string(m.exp(i));
  }
  return out + "]";
}

/// Parses "x1^2*x3", "[2,0,1]" or "1".  For the variable form the ambient is
/// the largest index mentioned unless a larger one is forced via `ambient`.
inline Monomial parse_monomial(const std::string& text, int ambient = 0) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("parse_monomial: empty");

  std::vector<int> exps;
  if (s.front() == '[') {
    if (s.back() != ']') throw std::invalid_argument("parse_monomial: unterminated '['");
    std::string body = s.substr(1, s.size() - 2);
    std::size_t start = 0;
    while (start <= body.size()) {
      std::size_t comma = body.find(',', start);
      std::string tok = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (tok.empty()) throw std::invalid_argument("parse_monomial: empty bracket entry");
      std::size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size() || v < 0) throw std::invalid_argument("parse_monomial: bad exponent '" + tok + "'");
      exps.push_back(v);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  } else if (s == "1") {
    exps.assign(std::max(ambient, 0), 0);
  } else {
    std::size_t pos = 0;
    while (pos < s.size()) {
      if (s[pos] != 'x') throw std::invalid_argument("parse_monomial: expected 'x' in '" + text + "'");
      ++pos;
      std::size_t len = 0;
      int var = std::stoi(s.substr(pos), &len);
      if (len == 0 || var < 1) throw std::invalid_argument("parse_monomial: bad variable index");
      pos += len;
      int e = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        e = std::stoi(s.substr(pos), &len);
        if (len == 0 || e < 1) throw std::invalid_argument("parse_monomial: bad exponent");
        pos += len;
      }
      if (static_cast<int>(exps.size()) < var) exps.resize(var, 0);
      exps[var - 1] += e;
      if (pos < s.size()) {
        if (s[pos] != '*') throw std::invalid_argument("parse_monomial: expected '*'");
        ++pos;
        if (pos == s.size()) throw std::invalid_argument("parse_monomial: trailing '*'");
      }
    }
  }
  if (static_cast<int>(exps.size()) < ambient) exps.resize(ambient, 0);
  return Monomial(std::move(exps));
}

}  // namespace puro
