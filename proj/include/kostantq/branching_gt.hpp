#pragma once

// Restriction of V~_lambda from gl_k to gl_{k-1}, and twisted Gelfand-Tsetlin
// diagrams: chains of strict partitions lambda^(1) < ... < lambda^(k) = lambda,
// consecutive rows interlacing. A diagram D spans a subspace of dimension
// 2^nabla(D) inside one weight space.
//
// Diagrams are stored top row first (rows[0] = lambda). Enumeration order is
// lexicographic top-down with larger entries first.

#include "kostantq/error.hpp"
#include "kostantq/lie_core.hpp"
#include "kostantq/numeric.hpp"
#include "kostantq/symmetric_fn.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace kostantq {

/// mu_1 >= gamma_1 >= mu_2 >= ... >= gamma_{m-1} >= mu_m.
inline bool interlaces(const Partition& gamma, const Partition& mu) {
  if (gamma.size() + 1 != mu.size())
    throw std::invalid_argument("interlacing needs lengths m-1 and m");
  for (std::size_t i = 0; i < gamma.size(); ++i)
    if (!(mu[i] >= gamma[i] && gamma[i] >= mu[i + 1])) return false;
  return true;
}

/// Number of i with mu_i > gamma_i > mu_{i+1}.
inline int nabla(const Partition& mu, const Partition& gamma) {
  if (!interlaces(gamma, mu))
    throw DomainError(gamma.to_string() + " does not interlace " + mu.to_string());
  int count = 0;
  for (std::size_t i = 0; i < gamma.size(); ++i)
    if (mu[i] > gamma[i] && gamma[i] > mu[i + 1]) ++count;
  return count;
}

struct BranchTerm {
  Partition nu;
  BigInt coefficient;  // 2^nabla(lambda, nu)
  bool operator==(const BranchTerm&) const = default;
};

namespace detail {

inline Partition checked_strict(const Partition& lambda, std::size_t k) {
  if (lambda.size() != k)
    throw std::invalid_argument("partition " + lambda.to_string() + " does not have " +
                                std::to_string(k) + " parts");
  if (!lambda.is_strict()) throw DomainError("partition " + lambda.to_string() + " is not strict");
  return lambda;
}

/// Calls f(row) for every strict row of length m-1 interlacing `upper`,
/// larger entries first.
template <class F>
void for_each_strict_interlacing(const std::vector<int>& upper, F&& f) {
  const std::size_t len = upper.size() - 1;
  std::vector<int> row(len);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == len) {
      f(row);
      return;
    }
    int hi = upper[i];
    if (i > 0) hi = std::min(hi, row[i - 1] - 1);
    for (int v = hi; v >= upper[i + 1]; --v) {
      row[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

inline int row_nabla(const std::vector<int>& upper, const std::vector<int>& lower) {
  int count = 0;
  for (std::size_t i = 0; i < lower.size(); ++i)
    if (upper[i] > lower[i] && lower[i] > upper[i + 1]) ++count;
  return count;
}

}  // namespace detail

/// Res V~_lambda = sum over strict nu interlacing lambda of 2^nabla(lambda,nu) V~_nu.
inline std::vector<BranchTerm> branch(const Partition& lambda_in, std::size_t k) {
  const Partition lambda = detail::checked_strict(lambda_in, k);
  if (k < 2) throw std::invalid_argument("branching needs k >= 2");
  std::vector<BranchTerm> out;
  detail::for_each_strict_interlacing(lambda.parts(), [&](const std::vector<int>& row) {
    out.push_back(BranchTerm{Partition(row), pow2(static_cast<unsigned>(detail::row_nabla(lambda.parts(), row)))});
  });
  return out;
}

class GTDiagram {
 public:
  GTDiagram() = default;
  /// rows[0] is the top row of length k, rows[k-1] has one entry.
  explicit GTDiagram(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {}

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  std::size_t size_k() const { return rows_.size(); }

  /// Row lambda^(m), the one with m entries.
  const std::vector<int>& level(std::size_t m) const { return rows_[rows_.size() - m]; }

  /// Strict rows of lengths k, k-1, ..., 1 with consecutive rows interlacing.
  bool is_valid() const {
    const std::size_t k = rows_.size();
    for (std::size_t r = 0; r < k; ++r) {
      const auto& row = rows_[r];
      if (row.size() != k - r) return false;
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j] < 0) return false;
        if (j && row[j - 1] <= row[j]) return false;
      }
      if (r + 1 < k) {
        const auto& below = rows_[r + 1];
        if (below.size() + 1 != row.size()) return false;
        for (std::size_t j = 0; j < below.size(); ++j)
          if (!(row[j] >= below[j] && below[j] >= row[j + 1])) return false;
      }
    }
    return true;
  }

  /// Sum of nabla over consecutive row pairs.
  int nabla_total() const {
    int t = 0;
    for (std::size_t r = 0; r + 1 < rows_.size(); ++r) t += detail::row_nabla(rows_[r], rows_[r + 1]);
    return t;
  }

  bool operator==(const GTDiagram&) const = default;
  auto operator<=>(const GTDiagram&) const = default;

 private:
  std::vector<std::vector<int>> rows_;
};

/// Calls f(const GTDiagram&) for every twisted GT diagram with top row lambda.
template <class F>
void for_each_gt(const Partition& lambda_in, std::size_t k, F&& f) {
  const Partition lambda = detail::checked_strict(lambda_in, k);
  std::vector<std::vector<int>> rows;
  rows.push_back(lambda.parts());
  auto rec = [&](auto&& self) -> void {
    if (rows.back().size() == 1) {
      f(GTDiagram(rows));
      return;
    }
    const std::vector<int> upper = rows.back();
    detail::for_each_strict_interlacing(upper, [&](const std::vector<int>& row) {
      rows.push_back(row);
      self(self);
      rows.pop_back();
    });
  };
  rec(rec);
}

inline std::vector<GTDiagram> enumerate_gt(const Partition& lambda, std::size_t k) {
  std::vector<GTDiagram> out;
  for_each_gt(lambda, k, [&](const GTDiagram& d) { out.push_back(d); });
  return out;
}

/// beta_m = |lambda^(m)| - |lambda^(m-1)|.
inline Weight gt_weight(const GTDiagram& d) {
  const std::size_t k = d.size_k();
  std::vector<int> beta(k);
  int previous = 0;
  for (std::size_t m = 1; m <= k; ++m) {
    const auto& row = d.level(m);
    const int sum = std::accumulate(row.begin(), row.end(), 0);
    beta[m - 1] = sum - previous;
    previous = sum;
  }
  return Weight(std::move(beta));
}

/// dim V~_lambda = sum_D 2^nabla(D).
inline BigInt twisted_dim_via_gt(const Partition& lambda, std::size_t k) {
  BigInt total = 0;
  for_each_gt(lambda, k, [&](const GTDiagram& d) { total += pow2(static_cast<unsigned>(d.nabla_total())); });
  return total;
}

/// m~_lambda(beta) = sum of 2^nabla(D) over diagrams with row sums
/// |lambda^(m)| = beta_1 + ... + beta_m. Rows whose sum cannot match are
/// discarded before descending further.
inline BigInt twisted_mult_via_gt(const Partition& lambda_in, std::size_t k, const Weight& beta) {
  const Partition lambda = detail::checked_strict(lambda_in, k);
  if (beta.size() != k) throw std::invalid_argument("weight length mismatch");
  std::vector<long> row_sum(k + 1, 0);
  for (std::size_t m = 1; m <= k; ++m) row_sum[m] = row_sum[m - 1] + beta[m - 1];
  if (row_sum[k] != lambda.weight()) return 0;

  BigInt total = 0;
  auto rec = [&](auto&& self, const std::vector<int>& upper, int nab) -> void {
    const std::size_t m = upper.size() - 1;
    if (m == 0) {
      total += pow2(static_cast<unsigned>(nab));
      return;
    }
    detail::for_each_strict_interlacing(upper, [&](const std::vector<int>& row) {
      if (std::accumulate(row.begin(), row.end(), 0L) != row_sum[m]) return;
      self(self, row, nab + detail::row_nabla(upper, row));
    });
  };
  rec(rec, lambda.parts(), 0);
  return total;
}

/// sum_D 2^nabla(D) x^{gt_weight(D)}; equals chi~_lambda.
inline CharacterPoly gt_character(const Partition& lambda, std::size_t k) {
  CharacterPoly chi(k);
  for_each_gt(lambda, k, [&](const GTDiagram& d) {
    chi.add_term(gt_weight(d).coords(), pow2(static_cast<unsigned>(d.nabla_total())));
  });
  return chi;
}

}  // namespace kostantq
