#pragma once

// Lattice points of Q_mu = { k in N^N : sum_alpha k_alpha alpha = mu } and the
// partition functions built on them:
//   K(mu)      number of points,
//   K_q(mu)    sum over points of q^(number of nonzero k_alpha),
//   Khat_q(mu) sum over points of q^(sum k_alpha),
//   P(nu)      points with every k_alpha in {0, 1},
//   K_J(mu)    points supported on the roots in J.

#include "kostantq/error.hpp"
#include "kostantq/lie_core.hpp"
#include "kostantq/numeric.hpp"
#include "kostantq/qpolynomial.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kostantq {

/// Subset of positive-root indices (bit i set = root i of the fixed order).
class RootSubset {
 public:
  constexpr RootSubset() = default;
  constexpr explicit RootSubset(std::uint64_t bits) : bits_(bits) {}

  static RootSubset all(std::size_t n_roots) {
    if (n_roots > 63) throw DomainError("too many roots for a subset mask");
    return RootSubset((std::uint64_t{1} << n_roots) - 1);
  }
  static RootSubset of(std::initializer_list<std::size_t> indices) {
    std::uint64_t b = 0;
    for (auto i : indices) b |= std::uint64_t{1} << i;
    return RootSubset(b);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
  int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < 64; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

  auto operator<=>(const RootSubset&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Multiplicities k_alpha indexed by the positive-root order of the system.
struct RootCombination {
  std::vector<int> k;

  int nonzero_count() const {
    return static_cast<int>(std::count_if(k.begin(), k.end(), [](int x) { return x > 0; }));
  }
  int total() const { return std::accumulate(k.begin(), k.end(), 0); }
  bool operator==(const RootCombination&) const = default;
  auto operator<=>(const RootCombination&) const = default;
};

/// Nonnegative integer solutions of sum_j k_j c_j = b for a fixed list of
/// nonnegative, nonzero integer columns c_j.
///
/// Depth-first over columns in height-descending order. Each column's
/// multiplicity is bounded by the remaining budget in its support, and a
/// branch is cut as soon as some coordinate still owes a positive amount that
/// no later column can supply. A trailing run of distinct unit columns is
/// solved directly, so for root systems containing the simple roots the
/// search only branches over the non-simple roots.
class ColumnSystem {
 public:
  explicit ColumnSystem(std::vector<std::vector<int>> columns, std::size_t dimension)
      : columns_(std::move(columns)), dim_(dimension) {
    for (const auto& c : columns_) {
      if (c.size() != dim_) throw std::invalid_argument("column dimension mismatch");
      if (std::any_of(c.begin(), c.end(), [](int x) { return x < 0; }) ||
          std::all_of(c.begin(), c.end(), [](int x) { return x == 0; }))
        throw std::invalid_argument("columns must be nonnegative and nonzero");
    }
    order_.resize(columns_.size());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return height(columns_[a]) > height(columns_[b]);
    });

    // Trailing distinct unit columns.
    unit_tail_ = order_.size();
    std::vector<bool> used(dim_, false);
    unit_coord_.assign(order_.size(), -1);
    while (unit_tail_ > 0) {
      const auto& c = columns_[order_[unit_tail_ - 1]];
      int coord = unit_coordinate(c);
      if (coord < 0 || used[coord]) break;
      used[coord] = true;
      unit_coord_[unit_tail_ - 1] = coord;
      --unit_tail_;
    }

    covered_from_.assign(order_.size() + 1, std::vector<bool>(dim_, false));
    for (std::size_t p = order_.size(); p-- > 0;) {
      covered_from_[p] = covered_from_[p + 1];
      const auto& c = columns_[order_[p]];
      for (std::size_t i = 0; i < dim_; ++i)
        if (c[i] > 0) covered_from_[p][i] = true;
    }
  }

  std::size_t num_columns() const { return columns_.size(); }
  std::size_t dimension() const { return dim_; }

  /// Calls visit(std::span<const int> k) once per solution, k in column order.
  template <class Visit>
  void for_each_solution(const std::vector<int>& target, Visit&& visit) const {
    if (target.size() != dim_) throw std::invalid_argument("target dimension mismatch");
    if (std::any_of(target.begin(), target.end(), [](int x) { return x < 0; })) return;
    for (std::size_t i = 0; i < dim_; ++i)
      if (target[i] > 0 && !covered_from_[0][i]) return;
    std::vector<int> remainder = target;
    std::vector<int> k(columns_.size(), 0);
    search(0, remainder, k, visit);
  }

 private:
  static int height(const std::vector<int>& c) { return std::accumulate(c.begin(), c.end(), 0); }
  static int unit_coordinate(const std::vector<int>& c) {
    int coord = -1;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      if (c[i] != 1 || coord >= 0) return -1;
      coord = static_cast<int>(i);
    }
    return coord;
  }

  template <class Visit>
  void search(std::size_t pos, std::vector<int>& remainder, std::vector<int>& k,
              Visit& visit) const {
    if (pos == unit_tail_) {
      // Remaining coordinates must be exactly absorbed by the unit columns.
      for (std::size_t p = pos; p < order_.size(); ++p) k[order_[p]] = 0;
      std::vector<bool> absorbed(dim_, false);
      for (std::size_t p = pos; p < order_.size(); ++p) {
        const int coord = unit_coord_[p];
        absorbed[coord] = true;
        k[order_[p]] = remainder[coord];
      }
      for (std::size_t i = 0; i < dim_; ++i)
        if (!absorbed[i] && remainder[i] != 0) return;
      visit(std::span<const int>(k));
      return;
    }
    const auto& col = columns_[order_[pos]];
    int bound = -1;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (col[i] == 0) continue;
      const int b = remainder[i] / col[i];
      bound = (bound < 0) ? b : std::min(bound, b);
    }
    const auto& covered = covered_from_[pos + 1];
    for (int m = 0; m <= bound; ++m) {
      bool feasible = true;
      for (std::size_t i = 0; i < dim_; ++i)
        if (remainder[i] > 0 && !covered[i]) {
          feasible = false;
          break;
        }
      if (feasible) {
        k[order_[pos]] = m;
        search(pos + 1, remainder, k, visit);
      }
      for (std::size_t i = 0; i < dim_; ++i) remainder[i] -= col[i];
    }
    for (std::size_t i = 0; i < dim_; ++i) remainder[i] += (bound + 1) * col[i];
    k[order_[pos]] = 0;
  }

  std::vector<std::vector<int>> columns_;
  std::size_t dim_;
  std::vector<std::size_t> order_;
  std::size_t unit_tail_ = 0;
  std::vector<int> unit_coord_;
  std::vector<std::vector<bool>> covered_from_;
};

namespace detail {

inline ColumnSystem root_columns(const RootSystemA& rs, RootSubset subset) {
  std::vector<std::vector<int>> cols;
  for (std::size_t i = 0; i < rs.num_positive(); ++i)
    if (subset.contains(i)) cols.push_back(rs.positive_roots_simple()[i]);
  return ColumnSystem(std::move(cols), static_cast<std::size_t>(rs.rank()));
}

inline SimpleCoords checked_root_coords(const RootSystemA& rs, const Weight& mu) {
  rs.check_weight(mu);
  return to_root_coords(mu);
}

// Solution counts are accumulated in 64-bit words: the enumeration visits
// every solution individually, so the word cannot overflow in feasible time.
template <class Grade>
QPolynomial graded_count(const RootSystemA& rs, const Weight& mu, Grade grade) {
  const auto target = checked_root_coords(rs, mu);
  const ColumnSystem sys = root_columns(rs, RootSubset::all(rs.num_positive()));
  std::map<int, std::uint64_t> counts;
  sys.for_each_solution(target, [&](std::span<const int> k) { ++counts[grade(k)]; });
  QPolynomial p;
  for (const auto& [e, c] : counts) p.add_term(e, BigInt(c));
  return p;
}

}  // namespace detail

/// All points of Q_mu, k indexed by rs.positive_roots() order, sorted.
inline std::vector<RootCombination> enumerate_Q(const RootSystemA& rs, const Weight& mu) {
  const auto target = detail::checked_root_coords(rs, mu);
  const ColumnSystem sys = detail::root_columns(rs, RootSubset::all(rs.num_positive()));
  std::vector<RootCombination> out;
  sys.for_each_solution(target, [&](std::span<const int> k) {
    out.push_back(RootCombination{std::vector<int>(k.begin(), k.end())});
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline BigInt kostant(const RootSystemA& rs, const Weight& mu) {
  const auto target = detail::checked_root_coords(rs, mu);
  const ColumnSystem sys = detail::root_columns(rs, RootSubset::all(rs.num_positive()));
  std::uint64_t count = 0;
  sys.for_each_solution(target, [&](std::span<const int>) { ++count; });
  return BigInt(count);
}

/// K_q(mu): points graded by the number of distinct roots used.
inline QPolynomial kostant_q(const RootSystemA& rs, const Weight& mu) {
  return detail::graded_count(rs, mu, [](std::span<const int> k) {
    return static_cast<int>(std::count_if(k.begin(), k.end(), [](int x) { return x > 0; }));
  });
}

/// Lusztig's Khat_q(mu): points graded by the total number of roots.
inline QPolynomial kostant_q_classical(const RootSystemA& rs, const Weight& mu) {
  return detail::graded_count(rs, mu, [](std::span<const int> k) {
    return std::accumulate(k.begin(), k.end(), 0);
  });
}

/// P(nu): number of subsets of positive roots summing to nu.
inline BigInt subset_sum_P(const RootSystemA& rs, const Weight& nu) {
  SimpleCoords remainder = detail::checked_root_coords(rs, nu);
  const auto& roots = rs.positive_roots_simple();
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (std::any_of(remainder.begin(), remainder.end(), [](int x) { return x < 0; })) return;
    if (i == roots.size()) {
      if (std::all_of(remainder.begin(), remainder.end(), [](int x) { return x == 0; })) ++count;
      return;
    }
    self(self, i + 1);
    for (std::size_t c = 0; c < remainder.size(); ++c) remainder[c] -= roots[i][c];
    self(self, i + 1);
    for (std::size_t c = 0; c < remainder.size(); ++c) remainder[c] += roots[i][c];
  };
  rec(rec, 0);
  return BigInt(count);
}

/// K_J with memoization keyed by (J, mu). Not synchronized: use one instance
/// per thread.
class RestrictedKostant {
 public:
  explicit RestrictedKostant(const RootSystemA& rs) : rs_(rs) {}

  BigInt operator()(RootSubset J, const Weight& mu) {
    const auto target = detail::checked_root_coords(rs_, mu);
    if (J.bits() >> rs_.num_positive())
      throw std::invalid_argument("root subset refers to nonexistent roots");
    auto key = std::make_pair(J.bits(), target);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    BigInt value;
    if (J.empty()) {
      value = std::all_of(target.begin(), target.end(), [](int x) { return x == 0; }) ? 1 : 0;
    } else {
      const ColumnSystem sys = detail::root_columns(rs_, J);
      std::uint64_t count = 0;
      sys.for_each_solution(target, [&](std::span<const int>) { ++count; });
      value = count;
    }
    memo_.emplace(std::move(key), value);
    return value;
  }

  std::size_t cache_size() const { return memo_.size(); }

 private:
  const RootSystemA& rs_;
  std::map<std::pair<std::uint64_t, SimpleCoords>, BigInt> memo_;
};

inline BigInt kostant_restricted(const RootSystemA& rs, RootSubset J, const Weight& mu) {
  RestrictedKostant k(rs);
  return k(J, mu);
}

/// K_q(mu) = sum_{I subset [N]} (q-1)^|I| sum_{J subset I} (-1)^|J| K_{[N]\J}(mu).
/// Supported for rank <= 3 (3^N subset pairs).
inline QPolynomial kq_inclusion_exclusion(const RootSystemA& rs, const Weight& mu,
                                          RestrictedKostant* cache = nullptr) {
  if (rs.rank() > 3)
    throw DomainError("inclusion-exclusion route supports rank <= 3, got " +
                      std::to_string(rs.rank()));
  RestrictedKostant local(rs);
  RestrictedKostant& K = cache ? *cache : local;
  const std::uint64_t full = RootSubset::all(rs.num_positive()).bits();

  std::vector<BigInt> complement_value(full + 1);
  for (std::uint64_t J = 0; J <= full; ++J) complement_value[J] = K(RootSubset(full & ~J), mu);

  QPolynomial result;
  for (std::uint64_t I = 0; I <= full; ++I) {
    BigInt inner = 0;
    // Submasks J of I, including 0.
    for (std::uint64_t J = I;; J = (J - 1) & I) {
      if (std::popcount(J) % 2)
        inner -= complement_value[J];
      else
        inner += complement_value[J];
      if (J == 0) break;
    }
    if (inner != 0)
      result += inner * QPolynomial::q_minus_one_pow(static_cast<unsigned>(std::popcount(I)));
  }
  return result;
}

}  // namespace kostantq
