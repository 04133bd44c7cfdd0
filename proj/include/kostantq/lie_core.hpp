#pragma once

// Type-A root data in gl_k coordinates.
//
// Weights of A_n are integer vectors of length k = n+1 in the basis e_1..e_k
// of the diagonal torus of gl_k. The positive roots are e_i - e_j (i < j),
// the simple roots e_i - e_{i+1}. The Weyl vector is stored as the partition
// delta = (n, n-1, ..., 1, 0) rather than the traceless half-sum of positive
// roots. The two differ by a multiple of (1, ..., 1), which is fixed by every
// Weyl element, and every alternating sum in this library is evaluated on a
// difference w(lambda) - nu of two weights of equal trace, so all formulas
// are unchanged by the shift.

#include "kostantq/error.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kostantq {

/// Integer weight in e-coordinates.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<int> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<int> coords) : coords_(coords) {}

  static Weight zero(std::size_t k) { return Weight(std::vector<int>(k, 0)); }

  std::size_t size() const { return coords_.size(); }
  int operator[](std::size_t i) const { return coords_[i]; }
  int& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<int>& coords() const { return coords_; }

  long trace() const { return std::accumulate(coords_.begin(), coords_.end(), 0L); }

  Weight& operator+=(const Weight& o) {
    check_same_size(o);
    for (std::size_t i = 0; i < size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    check_same_size(o);
    for (std::size_t i = 0; i < size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int s, Weight a) {
    for (auto& c : a.coords_) c *= s;
    return a;
  }

  auto operator<=>(const Weight&) const = default;
  bool operator==(const Weight&) const = default;

 private:
  void check_same_size(const Weight& o) const {
    if (o.size() != size())
      throw std::invalid_argument("weight dimension mismatch");
  }
  std::vector<int> coords_;
};

/// Coordinates a_1..a_n of a root-lattice vector in the simple-root basis.
using SimpleCoords = std::vector<int>;

/// Serialized form "3,1,0".
inline std::string format_weight(const Weight& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

inline std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) throw std::invalid_argument("empty integer list");
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view field =
        text.substr(pos, comma == std::string_view::npos ? text.size() - pos : comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    if (field.empty()) throw std::invalid_argument("empty field in '" + std::string(text) + "'");
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(std::string(field), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer: '" + std::string(field) + "'");
    }
    if (used != field.size())
      throw std::invalid_argument("not an integer: '" + std::string(field) + "'");
    if (value < -1000000 || value > 1000000)
      throw std::invalid_argument("integer out of range: '" + std::string(field) + "'");
    out.push_back(static_cast<int>(value));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

inline Weight parse_weight(std::string_view text) { return Weight(parse_int_list(text)); }

/// Weakly decreasing e-coordinates.
inline bool is_dominant(const Weight& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] < v[i]) return false;
  return true;
}

/// lambda - rho dominant, i.e. strictly decreasing e-coordinates.
inline bool is_strictly_dominant(const Weight& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] <= v[i]) return false;
  return true;
}

/// Partial sums a_i = v_1 + ... + v_i, i = 1..n. Requires trace 0.
inline SimpleCoords to_root_coords(const Weight& v) {
  if (v.size() < 2) throw std::invalid_argument("weight needs at least two coordinates");
  if (v.trace() != 0)
    throw DomainError("weight " + format_weight(v) + " has nonzero coordinate sum");
  SimpleCoords a(v.size() - 1);
  int run = 0;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    run += v[i];
    a[i] = run;
  }
  return a;
}

/// sum_i a_i alpha_i in e-coordinates.
inline Weight from_root_coords(const SimpleCoords& a) {
  std::vector<int> c(a.size() + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    c[i] += a[i];
    c[i + 1] -= a[i];
  }
  return Weight(std::move(c));
}

/// True when every simple-root coordinate is nonnegative (trace must be 0).
inline bool in_root_cone(const Weight& v) {
  int run = 0;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    run += v[i];
    if (run < 0) return false;
  }
  return true;
}

/// Positive roots e_i - e_j of A_n in lexicographic (i, j) order.
inline std::vector<Weight> positive_roots(int n) {
  if (n < 1) throw DomainError("rank must be at least 1");
  const std::size_t k = static_cast<std::size_t>(n) + 1;
  std::vector<Weight> roots;
  roots.reserve(k * (k - 1) / 2);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      Weight r = Weight::zero(k);
      r[i] = 1;
      r[j] = -1;
      roots.push_back(std::move(r));
    }
  return roots;
}

class RootSystemA {
 public:
  explicit RootSystemA(int n) : n_(n), positive_(kostantq::positive_roots(n)) {
    const std::size_t k = size_k();
    for (std::size_t i = 0; i + 1 < k; ++i) {
      Weight s = Weight::zero(k);
      s[i] = 1;
      s[i + 1] = -1;
      simple_.push_back(std::move(s));
    }
    std::vector<int> rho(k);
    for (std::size_t i = 0; i < k; ++i) rho[i] = static_cast<int>(k - 1 - i);
    rho_ = Weight(std::move(rho));
    for (const auto& r : positive_) positive_simple_.push_back(to_root_coords(r));
  }

  int rank() const { return n_; }
  std::size_t size_k() const { return static_cast<std::size_t>(n_) + 1; }
  std::size_t num_positive() const { return positive_.size(); }

  const std::vector<Weight>& positive_roots() const { return positive_; }
  const std::vector<Weight>& simple_roots() const { return simple_; }
  /// Columns of the root matrix: each positive root in simple-root coordinates.
  const std::vector<SimpleCoords>& positive_roots_simple() const { return positive_simple_; }
  /// delta = (n, ..., 1, 0).
  const Weight& rho() const { return rho_; }

  void check_weight(const Weight& v) const {
    if (v.size() != size_k())
      throw std::invalid_argument("weight " + format_weight(v) + " has " +
                                  std::to_string(v.size()) + " coordinates, expected " +
                                  std::to_string(size_k()));
  }

 private:
  int n_;
  std::vector<Weight> positive_;
  std::vector<Weight> simple_;
  std::vector<SimpleCoords> positive_simple_;
  Weight rho_;
};

/// Element of S_k acting on e-coordinates: (w.v)[perm[i]] = v[i].
class WeylElement {
 public:
  explicit WeylElement(std::vector<int> perm) : perm_(std::move(perm)) {
    std::vector<bool> seen(perm_.size(), false);
    for (int p : perm_) {
      if (p < 0 || static_cast<std::size_t>(p) >= perm_.size() || seen[p])
        throw std::invalid_argument("not a permutation");
      seen[p] = true;
    }
    length_ = 0;
    for (std::size_t i = 0; i < perm_.size(); ++i)
      for (std::size_t j = i + 1; j < perm_.size(); ++j)
        if (perm_[i] > perm_[j]) ++length_;
  }

  static WeylElement identity(std::size_t k) {
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    return WeylElement(std::move(p));
  }

  const std::vector<int>& perm() const { return perm_; }
  std::size_t degree() const { return perm_.size(); }
  /// Number of inversions.
  int length() const { return length_; }
  int sign() const { return (length_ % 2) ? -1 : 1; }

  /// (this o other)(i) = this(other(i)).
  WeylElement compose(const WeylElement& other) const {
    if (other.degree() != degree()) throw std::invalid_argument("Weyl element degree mismatch");
    std::vector<int> p(degree());
    for (std::size_t i = 0; i < degree(); ++i) p[i] = perm_[other.perm_[i]];
    return WeylElement(std::move(p));
  }

  Weight act(const Weight& v) const {
    if (v.size() != degree())
      throw std::invalid_argument("Weyl element of degree " + std::to_string(degree()) +
                                  " applied to weight of dimension " + std::to_string(v.size()));
    std::vector<int> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[perm_[i]] = v[i];
    return Weight(std::move(out));
  }

  bool operator==(const WeylElement& o) const { return perm_ == o.perm_; }

 private:
  std::vector<int> perm_;
  int length_ = 0;
};

inline Weight act(const WeylElement& w, const Weight& v) { return w.act(v); }

/// Lazy range over S_{n+1} in lexicographic order of permutations.
class WeylGroup {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = WeylElement;
    using difference_type = std::ptrdiff_t;
    using pointer = const WeylElement*;
    using reference = WeylElement;

    iterator() = default;
    explicit iterator(std::size_t k) : perm_(k), done_(false) {
      std::iota(perm_.begin(), perm_.end(), 0);
    }
    WeylElement operator*() const { return WeylElement(perm_); }
    iterator& operator++() {
      if (!std::next_permutation(perm_.begin(), perm_.end())) done_ = true;
      return *this;
    }
    void operator++(int) { ++*this; }
    bool operator==(const iterator& o) const {
      if (done_ || o.done_) return done_ == o.done_;
      return perm_ == o.perm_;
    }

   private:
    std::vector<int> perm_;
    bool done_ = true;
  };

  explicit WeylGroup(int n) : k_(static_cast<std::size_t>(n) + 1) {
    if (n < 1) throw DomainError("rank must be at least 1");
  }
  iterator begin() const { return iterator(k_); }
  iterator end() const { return iterator(); }

  std::vector<WeylElement> elements() const { return {begin(), end()}; }
  std::size_t order() const {
    std::size_t f = 1;
    for (std::size_t i = 2; i <= k_; ++i) f *= i;
    return f;
  }

 private:
  std::size_t k_;
};

inline WeylGroup weyl_group(int n) { return WeylGroup(n); }

}  // namespace kostantq
