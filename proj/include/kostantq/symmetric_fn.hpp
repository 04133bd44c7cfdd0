#pragma once

// Exact polynomial characters of gl_k: Schur polynomials by tableau
// enumeration and by the ratio of alternants, the twisted characters
// s_{lambda-delta} s_delta, coefficient extraction, specialization of the last
// variable and the dual Pieri rule. Everything here is used as an oracle for
// the alternating-sum formulas of multiplicity.hpp.

#include "kostantq/error.hpp"
#include "kostantq/lie_core.hpp"
#include "kostantq/numeric.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kostantq {

/// Weakly decreasing list of nonnegative parts of fixed length (zero parts
/// allowed).
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw DomainError("partition has a negative part");
      if (i && parts_[i - 1] < parts_[i]) throw DomainError("partition parts must be weakly decreasing");
    }
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  static Partition from_weight(const Weight& w) { return Partition(w.coords()); }
  /// delta = (k-1, ..., 1, 0).
  static Partition delta(std::size_t k) {
    std::vector<int> p(k);
    for (std::size_t i = 0; i < k; ++i) p[i] = static_cast<int>(k - 1 - i);
    return Partition(std::move(p));
  }

  std::size_t size() const { return parts_.size(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  std::size_t length() const {
    return static_cast<std::size_t>(std::count_if(parts_.begin(), parts_.end(), [](int p) { return p > 0; }));
  }
  bool is_strict() const {
    for (std::size_t i = 1; i < parts_.size(); ++i)
      if (parts_[i - 1] <= parts_[i]) return false;
    return true;
  }

  /// Same partition with exactly k parts; fails if more than k are nonzero.
  Partition padded(std::size_t k) const {
    if (length() > k)
      throw DomainError("partition " + to_string() + " has more than " + std::to_string(k) + " parts");
    std::vector<int> p(parts_.begin(), parts_.begin() + std::min(k, parts_.size()));
    p.resize(k, 0);
    return Partition(std::move(p));
  }

  Weight to_weight() const { return Weight(parts_); }
  std::string to_string() const { return format_weight(Weight(parts_)); }

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// lambda - delta for a strict partition with k parts.
inline Partition shift_down(const Partition& lambda) {
  std::vector<int> p(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i)
    p[i] = lambda[i] - static_cast<int>(lambda.size() - 1 - i);
  return Partition(std::move(p));
}

/// Finitely supported map from exponent vectors in k variables to integers.
class CharacterPoly {
 public:
  using Exponent = std::vector<int>;
  using Terms = std::map<Exponent, BigInt>;

  CharacterPoly() = default;
  explicit CharacterPoly(std::size_t num_vars) : nvars_(num_vars) {}

  static CharacterPoly constant(std::size_t num_vars, const BigInt& c) {
    CharacterPoly p(num_vars);
    p.add_term(Exponent(num_vars, 0), c);
    return p;
  }
  static CharacterPoly monomial(Exponent e, const BigInt& c = 1) {
    CharacterPoly p(e.size());
    p.add_term(std::move(e), c);
    return p;
  }
  /// x_i (0-based index).
  static CharacterPoly variable(std::size_t num_vars, std::size_t i) {
    Exponent e(num_vars, 0);
    e[i] = 1;
    return monomial(std::move(e));
  }

  std::size_t num_vars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }

  void add_term(Exponent e, const BigInt& c) {
    if (e.size() != nvars_) throw std::invalid_argument("exponent length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BigInt coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  /// Lexicographically largest monomial (x_1 > x_2 > ...). Requires nonzero.
  const Terms::value_type& leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return *terms_.rbegin();
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
  }

  BigInt evaluate_at_ones() const {
    BigInt s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  /// Variable i is renamed to perm[i].
  CharacterPoly permuted(const std::vector<int>& perm) const {
    CharacterPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
      Exponent f(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) f[perm[i]] = e[i];
      out.add_term(std::move(f), c);
    }
    return out;
  }

  bool is_symmetric() const {
    for (std::size_t i = 0; i + 1 < nvars_; ++i) {
      std::vector<int> perm(nvars_);
      std::iota(perm.begin(), perm.end(), 0);
      std::swap(perm[i], perm[i + 1]);
      if (permuted(perm) != *this) return false;
    }
    return true;
  }

  CharacterPoly& operator+=(const CharacterPoly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  CharacterPoly& operator-=(const CharacterPoly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend CharacterPoly operator+(CharacterPoly a, const CharacterPoly& b) { return a += b; }
  friend CharacterPoly operator-(CharacterPoly a, const CharacterPoly& b) { return a -= b; }
  friend CharacterPoly operator*(const BigInt& s, const CharacterPoly& p) {
    CharacterPoly r(p.nvars_);
    if (s == 0) return r;
    for (const auto& [e, c] : p.terms_) r.terms_.emplace(e, s * c);
    return r;
  }
  friend CharacterPoly operator*(const CharacterPoly& a, const CharacterPoly& b) {
    a.check_vars(b);
    CharacterPoly r(a.nvars_);
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }

  bool operator==(const CharacterPoly&) const = default;

  /// Graded-lex order: higher total degree first, then lexicographically
  /// larger exponent first. "x1^2 + 2x1x2 + x2^2".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const Terms::value_type*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
      const int da = std::accumulate(a->first.begin(), a->first.end(), 0);
      const int db = std::accumulate(b->first.begin(), b->first.end(), 0);
      if (da != db) return da > db;
      return a->first > b->first;
    });
    std::string out;
    bool first = true;
    for (const auto* t : order) {
      BigInt c = t->second;
      if (first) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      first = false;
      if (c < 0) c = -c;
      std::string mono;
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (t->first[i] == 0) continue;
        mono += "x" + std::to_string(i + 1);
        if (t->first[i] > 1) mono += "^" + std::to_string(t->first[i]);
      }
      if (mono.empty())
        out += c.str();
      else
        out += (c == 1 ? std::string() : c.str()) + mono;
    }
    return out;
  }

 private:
  void check_vars(const CharacterPoly& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
  }
  std::size_t nvars_ = 0;
  Terms terms_;
};

/// Exact quotient P / D by multivariate division in lex order; throws
/// std::logic_error if D does not divide P.
inline CharacterPoly divide_exact(CharacterPoly P, const CharacterPoly& D) {
  const auto& [lead_exp, lead_coeff] = D.leading_term();
  CharacterPoly Q(P.num_vars());
  while (!P.is_zero()) {
    const auto [pe, pc] = P.leading_term();
    CharacterPoly::Exponent e(P.num_vars());
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] = pe[i] - lead_exp[i];
      if (e[i] < 0) throw std::logic_error("inexact polynomial division");
    }
    if (pc % lead_coeff != 0) throw std::logic_error("inexact polynomial division");
    const CharacterPoly step = CharacterPoly::monomial(e, pc / lead_coeff);
    Q += step;
    P -= step * D;
  }
  return Q;
}

/// s_lambda(x_1..x_k) as the tableau generating function: the coefficient of
/// x^beta counts semistandard tableaux of shape lambda and content beta.
inline CharacterPoly schur(const Partition& lambda_in, std::size_t k) {
  const Partition lambda = lambda_in.padded(k);
  const std::size_t rows = lambda.length();
  std::vector<int> col_height(rows ? lambda[0] : 0, 0);
  for (std::size_t r = 0; r < rows; ++r)
    for (int c = 0; c < lambda[r]; ++c) ++col_height[c];

  std::vector<std::vector<int>> grid(rows);
  for (std::size_t r = 0; r < rows; ++r) grid[r].assign(lambda[r], 0);
  std::vector<int> content(k, 0);
  std::map<std::vector<int>, std::uint64_t> counts;

  auto fill = [&](auto&& self, std::size_t r, int c) -> void {
    if (r == rows) {
      ++counts[content];
      return;
    }
    if (c == lambda[r]) {
      self(self, r + 1, 0);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, grid[r][c - 1]);
    if (r > 0) lo = std::max(lo, grid[r - 1][c] + 1);
    const int hi = static_cast<int>(k) - (col_height[c] - 1 - static_cast<int>(r));
    for (int v = lo; v <= hi; ++v) {
      grid[r][c] = v;
      ++content[v - 1];
      self(self, r, c + 1);
      --content[v - 1];
    }
  };
  fill(fill, 0, 0);

  CharacterPoly s(k);
  for (const auto& [e, n] : counts) s.add_term(e, BigInt(n));
  return s;
}

/// Alternant a_mu = sum_w sign(w) x^{w(mu)}.
inline CharacterPoly alternant(const std::vector<int>& exponents) {
  const std::size_t k = exponents.size();
  CharacterPoly a(k);
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    const WeylElement w(perm);
    a.add_term(w.act(Weight(exponents)).coords(), BigInt(w.sign()));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return a;
}

/// s_lambda = a_{lambda+delta} / a_delta.
inline CharacterPoly schur_via_alternants(const Partition& lambda_in, std::size_t k) {
  const Partition lambda = lambda_in.padded(k);
  const Partition delta = Partition::delta(k);
  std::vector<int> shifted(k);
  for (std::size_t i = 0; i < k; ++i) shifted[i] = lambda[i] + delta[i];
  return divide_exact(alternant(shifted), alternant(delta.parts()));
}

/// e_m(x_1..x_k).
inline CharacterPoly elementary(int m, std::size_t k) {
  CharacterPoly e(k);
  if (m < 0 || static_cast<std::size_t>(m) > k) return e;
  std::vector<int> mask(k, 0);
  std::fill(mask.begin(), mask.begin() + m, 1);
  // prev_permutation from the lexicographically largest 0/1 vector.
  do {
    e.add_term(mask, 1);
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return e;
}

/// Caches Schur polynomials by (partition, variable count). Not synchronized.
class SchurCache {
 public:
  const CharacterPoly& schur(const Partition& lambda, std::size_t k) {
    const Partition p = lambda.padded(k);
    auto key = std::make_pair(p.parts(), k);
    auto it = schur_.find(key);
    if (it == schur_.end()) it = schur_.emplace(std::move(key), kostantq::schur(p, k)).first;
    return it->second;
  }

  /// s_{lambda-delta} s_delta.
  const CharacterPoly& twisted(const Partition& lambda, std::size_t k) {
    const Partition p = lambda.padded(k);
    if (!p.is_strict())
      throw DomainError("twisted character needs a strict partition, got " + p.to_string());
    auto key = p.parts();
    auto it = twisted_.find(key);
    if (it == twisted_.end())
      it = twisted_.emplace(std::move(key), schur(shift_down(p), k) * schur(Partition::delta(k), k))
               .first;
    return it->second;
  }

 private:
  std::map<std::pair<std::vector<int>, std::size_t>, CharacterPoly> schur_;
  std::map<std::vector<int>, CharacterPoly> twisted_;
};

/// chi~_lambda = s_{lambda-delta}(x_1..x_k) s_delta(x_1..x_k), lambda strict.
inline CharacterPoly twisted_character(const Partition& lambda, std::size_t k) {
  SchurCache cache;
  return cache.twisted(lambda, k);
}

/// Coefficient of x^beta; 0 for absent or negative exponents.
inline BigInt weight_coeff(const CharacterPoly& chi, const Weight& beta) {
  if (beta.size() != chi.num_vars()) throw std::invalid_argument("weight length mismatch");
  for (std::size_t i = 0; i < beta.size(); ++i)
    if (beta[i] < 0) return 0;
  return chi.coeff(beta.coords());
}

/// Splits chi by the exponent of x_k: grade e maps to the coefficient of x_k^e,
/// a polynomial in x_1..x_{k-1}. Summing the grades gives chi at x_k = 1.
inline std::map<int, CharacterPoly> specialize_last(const CharacterPoly& chi) {
  const std::size_t k = chi.num_vars();
  if (k < 2) throw std::invalid_argument("specialization needs at least two variables");
  std::map<int, CharacterPoly> graded;
  for (const auto& [e, c] : chi.terms()) {
    auto it = graded.try_emplace(e.back(), CharacterPoly(k - 1)).first;
    it->second.add_term(CharacterPoly::Exponent(e.begin(), e.end() - 1), c);
  }
  if (graded.empty()) graded.emplace(0, CharacterPoly(k - 1));
  return graded;
}

/// chi at x_k = 1.
inline CharacterPoly set_last_to_one(const CharacterPoly& chi) {
  CharacterPoly out(chi.num_vars() - 1);
  for (auto& [grade, p] : specialize_last(chi)) out += p;
  return out;
}

/// Partitions nu obtained from mu by adding a vertical strip of m boxes
/// within the first k rows, in decreasing lexicographic order.
inline std::vector<Partition> dual_pieri(const Partition& mu_in, int m, std::size_t k) {
  const Partition mu = mu_in.padded(k);
  std::vector<Partition> out;
  if (m < 0 || static_cast<std::size_t>(m) > k) return out;
  std::vector<int> add(k, 0);
  std::fill(add.begin(), add.begin() + m, 1);
  do {
    std::vector<int> nu(k);
    bool ok = true;
    for (std::size_t i = 0; i < k; ++i) {
      nu[i] = mu[i] + add[i];
      if (i && nu[i] > nu[i - 1]) {
        ok = false;
        break;
      }
    }
    if (ok) out.emplace_back(std::move(nu));
  } while (std::prev_permutation(add.begin(), add.end()));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// Coefficients of a symmetric polynomial in the Schur basis, found by
/// repeatedly removing the lex-leading monomial. Throws if f is not symmetric.
inline std::map<Partition, BigInt> schur_expand(CharacterPoly f, SchurCache& cache) {
  std::map<Partition, BigInt> out;
  const std::size_t k = f.num_vars();
  while (!f.is_zero()) {
    const auto [e, c] = f.leading_term();
    if (!std::is_sorted(e.begin(), e.end(), std::greater<>()))
      throw DomainError("polynomial is not symmetric");
    Partition lead(e);
    f -= c * cache.schur(lead, k);
    out[lead] += c;
  }
  return out;
}

/// Coefficients of f in the basis of twisted characters chi~_nu (nu strict).
/// Throws if f is not in their span.
inline std::map<Partition, BigInt> twisted_expand(CharacterPoly f, SchurCache& cache) {
  std::map<Partition, BigInt> out;
  const std::size_t k = f.num_vars();
  while (!f.is_zero()) {
    const auto [e, c] = f.leading_term();
    if (!std::is_sorted(e.begin(), e.end(), std::greater<>()))
      throw DomainError("polynomial is not symmetric");
    Partition lead(e);
    if (!lead.is_strict())
      throw DomainError("polynomial is not a combination of twisted characters");
    f -= c * cache.twisted(lead, k);
    out[lead] += c;
  }
  return out;
}

}  // namespace kostantq
