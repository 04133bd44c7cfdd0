#pragma once

// Weyl alternating sums for the twisted representations
//   V~_lambda = V_{lambda-rho} (x) V_rho,   lambda strictly dominant,
// together with the classical Kostant formula and the decomposition of
// V~_lambda into irreducibles.
//
// Routes that go through symmetric_fn.hpp (the *_via_* functions and the
// fallback in decompose_twisted) need polynomial weights, i.e. strict
// partitions with nonnegative parts. The alternating sums accept any strictly
// dominant integer weight.

#include "kostantq/error.hpp"
#include "kostantq/lie_core.hpp"
#include "kostantq/numeric.hpp"
#include "kostantq/parallel.hpp"
#include "kostantq/partition_fn.hpp"
#include "kostantq/symmetric_fn.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace kostantq {

/// Highest weight -> multiplicity, all multiplicities positive.
using DecompositionTable = std::map<Weight, BigInt>;

/// K_2(mu) = K_q(mu) at q = 2, memoized by mu. Vanishes off the root cone.
/// Not synchronized: one instance per thread.
class K2Table {
 public:
  explicit K2Table(const RootSystemA& rs) : rs_(rs) {}

  BigInt operator()(const Weight& mu) {
    if (!in_root_cone(mu)) return 0;
    auto it = memo_.find(mu);
    if (it != memo_.end()) return it->second;
    BigInt v = kostant_q(rs_, mu).evaluate(2);
    memo_.emplace(mu, v);
    return v;
  }

 private:
  const RootSystemA& rs_;
  std::map<Weight, BigInt> memo_;
};

namespace detail {

inline void require_strictly_dominant(const Weight& w, const char* name) {
  if (!is_strictly_dominant(w))
    throw DomainError(std::string(name) + " = " + format_weight(w) + " is not strictly dominant");
}

inline void require_same_trace(const Weight& a, const Weight& b) {
  if (a.trace() != b.trace())
    throw DomainError("trace mismatch: " + format_weight(a) + " vs " + format_weight(b));
}

/// Strict partition view of a strictly dominant weight with nonnegative parts.
inline Partition polynomial_weight(const Weight& w, const char* name) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] < 0)
      throw DomainError(std::string(name) + " = " + format_weight(w) +
                        " has a negative part; the character route needs a partition");
  return Partition::from_weight(w);
}

inline std::vector<std::pair<Weight, int>> signed_orbit(const RootSystemA& rs, const Weight& v) {
  std::vector<std::pair<Weight, int>> orbit;
  for (const auto& w : weyl_group(rs.rank())) orbit.emplace_back(w.act(v), w.sign());
  return orbit;
}

}  // namespace detail

/// m~_lambda(nu) = sum_w (-1)^|w| K_2(w(lambda) - nu).
inline BigInt twisted_weight_multiplicity(const RootSystemA& rs, const Weight& lambda,
                                          const Weight& nu, K2Table& k2) {
  rs.check_weight(lambda);
  rs.check_weight(nu);
  detail::require_strictly_dominant(lambda, "lambda");
  detail::require_same_trace(lambda, nu);
  BigInt total = 0;
  for (const auto& w : weyl_group(rs.rank())) {
    const Weight diff = w.act(lambda) - nu;
    if (!in_root_cone(diff)) continue;
    const BigInt term = k2(diff);
    if (w.sign() > 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

inline BigInt twisted_weight_multiplicity(const RootSystemA& rs, const Weight& lambda,
                                          const Weight& nu) {
  K2Table k2(rs);
  return twisted_weight_multiplicity(rs, lambda, nu, k2);
}

/// Every weight of V~_lambda with its multiplicity, from the alternating sum
/// alone. Candidates are the same-trace vectors with entries in
/// [lambda_k, lambda_1], which contain the convex hull of the orbit of lambda.
inline std::map<Weight, BigInt> twisted_weight_table(const RootSystemA& rs, const Weight& lambda) {
  rs.check_weight(lambda);
  detail::require_strictly_dominant(lambda, "lambda");
  const std::size_t k = rs.size_k();
  const int lo = lambda[k - 1];
  const int hi = lambda[0];
  const long trace = lambda.trace();
  K2Table k2(rs);
  std::map<Weight, BigInt> table;
  std::vector<int> v(k, lo);
  auto rec = [&](auto&& self, std::size_t i, long partial) -> void {
    const long left = static_cast<long>(k - i);
    if (partial + left * lo > trace || partial + left * hi < trace) return;
    if (i + 1 == k) {
      v[i] = static_cast<int>(trace - partial);
      const Weight nu(v);
      BigInt m = twisted_weight_multiplicity(rs, lambda, nu, k2);
      if (m != 0) table.emplace(nu, std::move(m));
      return;
    }
    for (int x = lo; x <= hi; ++x) {
      v[i] = x;
      self(self, i + 1, partial + x);
    }
  };
  rec(rec, 0, 0);
  return table;
}

/// sum_sigma (-1)^|sigma| K(sigma(lambda+rho) - (mu+rho)).
inline BigInt classical_weight_multiplicity(const RootSystemA& rs, const Weight& lambda,
                                            const Weight& mu) {
  rs.check_weight(lambda);
  rs.check_weight(mu);
  if (!is_dominant(lambda))
    throw DomainError("lambda = " + format_weight(lambda) + " is not dominant");
  detail::require_same_trace(lambda, mu);
  const Weight shifted = lambda + rs.rho();
  const Weight target = mu + rs.rho();
  BigInt total = 0;
  for (const auto& s : weyl_group(rs.rank())) {
    const Weight diff = s.act(shifted) - target;
    if (!in_root_cone(diff)) continue;
    const BigInt term = kostant(rs, diff);
    if (s.sign() > 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

/// N~_{lambda mu}^nu = sum_{w, s} (-1)^{|w s|} K_2(w(lambda) + s(mu) - nu).
/// The outer sum over w is evaluated in parallel (KOSTANTQ_THREADS).
inline BigInt twisted_tensor_multiplicity(const RootSystemA& rs, const Weight& lambda,
                                          const Weight& mu, const Weight& nu) {
  rs.check_weight(lambda);
  rs.check_weight(mu);
  rs.check_weight(nu);
  detail::require_strictly_dominant(lambda, "lambda");
  detail::require_strictly_dominant(mu, "mu");
  detail::require_strictly_dominant(nu, "nu");
  if (lambda.trace() + mu.trace() != nu.trace())
    throw DomainError("trace mismatch: |lambda| + |mu| != |nu|");

  const auto lambda_orbit = detail::signed_orbit(rs, lambda);
  const auto mu_orbit = detail::signed_orbit(rs, mu);
  return parallel_sum<BigInt>(lambda_orbit.size(), [&](std::size_t i) {
    K2Table k2(rs);
    const auto& [wl, wsign] = lambda_orbit[i];
    const Weight base = wl - nu;
    BigInt acc = 0;
    for (const auto& [smu, ssign] : mu_orbit) {
      const Weight diff = base + smu;
      if (!in_root_cone(diff)) continue;
      const BigInt term = k2(diff);
      if (wsign * ssign > 0)
        acc += term;
      else
        acc -= term;
    }
    return acc;
  });
}

/// N~_{lambda mu}^nu = sum_beta N^beta_{lambda-rho, rho} N^{nu-rho}_{beta, mu-rho},
/// with the classical coefficients N read off Schur expansions.
inline BigInt twisted_tensor_via_irreducibles(const RootSystemA& rs, const Weight& lambda,
                                              const Weight& mu, const Weight& nu,
                                              SchurCache& cache) {
  rs.check_weight(lambda);
  rs.check_weight(mu);
  rs.check_weight(nu);
  detail::require_strictly_dominant(lambda, "lambda");
  detail::require_strictly_dominant(mu, "mu");
  detail::require_strictly_dominant(nu, "nu");
  if (lambda.trace() + mu.trace() != nu.trace())
    throw DomainError("trace mismatch: |lambda| + |mu| != |nu|");
  const std::size_t k = rs.size_k();
  const Partition lam = detail::polynomial_weight(lambda, "lambda");
  const Partition m = detail::polynomial_weight(mu, "mu");
  const Partition n = detail::polynomial_weight(nu, "nu");
  const Partition target = shift_down(n);
  const Partition mu_low = shift_down(m);

  const auto first =
      schur_expand(cache.schur(shift_down(lam), k) * cache.schur(Partition::delta(k), k), cache);
  BigInt total = 0;
  for (const auto& [beta, n_beta] : first) {
    const auto second = schur_expand(cache.schur(beta, k) * cache.schur(mu_low, k), cache);
    auto it = second.find(target);
    if (it != second.end()) total += n_beta * it->second;
  }
  return total;
}

inline BigInt twisted_tensor_via_irreducibles(const RootSystemA& rs, const Weight& lambda,
                                              const Weight& mu, const Weight& nu) {
  SchurCache cache;
  return twisted_tensor_via_irreducibles(rs, lambda, mu, nu, cache);
}

/// Full decomposition of V~_lambda (x) V~_mu into twisted representations via
/// the alternating sum, over all strict nu with nonnegative parts,
/// |nu| = |lambda| + |mu| and nu_1 <= lambda_1 + mu_1.
inline DecompositionTable twisted_tensor_table(const RootSystemA& rs, const Weight& lambda,
                                               const Weight& mu) {
  rs.check_weight(lambda);
  rs.check_weight(mu);
  detail::require_strictly_dominant(lambda, "lambda");
  detail::require_strictly_dominant(mu, "mu");
  detail::polynomial_weight(lambda, "lambda");
  detail::polynomial_weight(mu, "mu");
  const std::size_t k = rs.size_k();
  const long total = lambda.trace() + mu.trace();
  const int top = lambda[0] + mu[0];
  DecompositionTable table;
  std::vector<int> nu(k);
  auto rec = [&](auto&& self, std::size_t i, int bound, long partial) -> void {
    const int remaining_parts = static_cast<int>(k - i);
    if (i == k) {
      if (partial != total) return;
      BigInt c = twisted_tensor_multiplicity(rs, lambda, mu, Weight(nu));
      if (c != 0) table.emplace(Weight(nu), std::move(c));
      return;
    }
    // Strict parts: the remaining ones are at least remaining_parts-1, ..., 0.
    for (int x = bound; x >= remaining_parts - 1; --x) {
      const long min_rest = static_cast<long>(remaining_parts - 1) * (remaining_parts - 2) / 2;
      if (partial + x + min_rest > total) continue;
      nu[i] = x;
      self(self, i + 1, x - 1, partial + x);
    }
  };
  rec(rec, 0, top, 0);
  return table;
}

/// dim V_{lambda-rho} * dim V_rho, each by evaluating the Schur polynomial at
/// all ones. Weights with negative parts are shifted by a multiple of
/// (1, ..., 1), which does not change dimensions.
inline BigInt twisted_dimension(const RootSystemA& rs, const Weight& lambda) {
  rs.check_weight(lambda);
  detail::require_strictly_dominant(lambda, "lambda");
  const std::size_t k = rs.size_k();
  std::vector<int> shifted(k);
  for (std::size_t i = 0; i < k; ++i) shifted[i] = lambda[i] - lambda[k - 1];
  const Partition p(shifted);
  return schur(shift_down(p), k).evaluate_at_ones() *
         schur(Partition::delta(k), k).evaluate_at_ones();
}

struct TwistedDecomposition {
  DecompositionTable table;
  /// True when every lambda - alpha_I is dominant, so that table[mu] = P(lambda - mu).
  bool subset_formula_holds = true;
  /// Subsets I whose lambda_I = lambda - alpha_I fails dominance.
  std::vector<RootSubset> non_dominant;
};

/// V~_lambda = sum_mu P(lambda - mu) V_mu over mu = lambda - alpha_I when every
/// lambda_I is dominant. Otherwise the failing subsets are reported and the
/// table is the true decomposition read off the Schur expansion of
/// chi~_lambda.
inline TwistedDecomposition decompose_twisted(const RootSystemA& rs, const Weight& lambda) {
  rs.check_weight(lambda);
  detail::require_strictly_dominant(lambda, "lambda");
  const std::size_t N = rs.num_positive();
  if (N > 24) throw DomainError("subset enumeration supports at most 24 positive roots");
  const auto& roots = rs.positive_roots();

  TwistedDecomposition out;
  std::map<Weight, std::uint64_t> counts;
  for (std::uint64_t I = 0; I < (std::uint64_t{1} << N); ++I) {
    Weight mu = lambda;
    for (std::size_t i = 0; i < N; ++i)
      if ((I >> i) & 1u) mu -= roots[i];
    if (!is_dominant(mu)) out.non_dominant.emplace_back(I);
    ++counts[mu];
  }
  out.subset_formula_holds = out.non_dominant.empty();
  if (out.subset_formula_holds) {
    for (const auto& [mu, c] : counts) out.table.emplace(mu, BigInt(c));
    return out;
  }
  SchurCache cache;
  const Partition p = detail::polynomial_weight(lambda, "lambda");
  for (const auto& [part, c] : schur_expand(cache.twisted(p, rs.size_k()), cache))
    out.table.emplace(part.to_weight(), c);
  return out;
}

}  // namespace kostantq
