#pragma once

#include "kostantq/numeric.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace kostantq {

/// Univariate polynomial in q with exact integer coefficients.
/// Zero coefficients are never stored.
class QPolynomial {
 public:
  using Terms = std::map<int, BigInt>;

  QPolynomial() = default;
  QPolynomial(long constant) { add_term(0, BigInt(constant)); }  // NOLINT(google-explicit-constructor)

  static QPolynomial monomial(int exponent, const BigInt& coeff = 1) {
    QPolynomial p;
    p.add_term(exponent, coeff);
    return p;
  }

  /// (q - 1)^m.
  static QPolynomial q_minus_one_pow(unsigned m) {
    QPolynomial p;
    for (unsigned j = 0; j <= m; ++j) {
      BigInt c = binomial(m, j);
      if ((m - j) % 2) c = -c;
      p.add_term(static_cast<int>(j), c);
    }
    return p;
  }

  void add_term(int exponent, const BigInt& coeff) {
    if (exponent < 0) throw std::invalid_argument("negative q-exponent");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

  BigInt coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  BigInt evaluate(const BigInt& q) const {
    BigInt acc = 0;
    int e = degree();
    for (; e >= 0; --e) acc = acc * q + coeff(e);
    return acc;
  }

  QPolynomial& operator+=(const QPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  QPolynomial& operator-=(const QPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    QPolynomial r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  friend QPolynomial operator*(const BigInt& s, const QPolynomial& p) {
    QPolynomial r;
    if (s == 0) return r;
    for (const auto& [e, c] : p.terms_) r.terms_.emplace(e, s * c);
    return r;
  }

  bool operator==(const QPolynomial& o) const { return terms_ == o.terms_; }

  /// Descending powers, e.g. "2q^3 + q^2 - q + 1"; "0" for zero.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const int e = it->first;
      BigInt c = it->second;
      if (first) {
        if (c < 0) {
          out += "-";
          c = -c;
        }
      } else {
        out += c < 0 ? " - " : " + ";
        if (c < 0) c = -c;
      }
      first = false;
      if (e == 0) {
        out += c.str();
        continue;
      }
      if (c != 1) out += c.str();
      out += "q";
      if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
  }

 private:
  Terms terms_;
};

}  // namespace kostantq
