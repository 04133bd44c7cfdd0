#pragma once

// Vector-partition-function view of K_q for A_n.
//
// M = M_{A_n} has the positive roots in simple-root coordinates as columns.
// Its bases are the invertible n x n column submatrices; the chamber complex
// is the common refinement of the base cones tau_sigma = pos(M_sigma). A point
// b of pos(M) is located in that complex by solving M_sigma x = b for every
// base: b is interior to tau_sigma if x > 0, on its boundary if x >= 0 with
// some zero, outside otherwise. For boundary points the zero pattern of x
// records which face of tau_sigma contains b, so equal signatures mean equal
// relatively open cells.
//
// On each cell K_q is a polynomial in the a-coordinates with coefficients in
// Q[q]. fit_chamber_polynomial interpolates it exactly on a lattice grid
// inside the cell and validates the result on held-out lattice points.

#include "kostantq/error.hpp"
#include "kostantq/exact_linalg.hpp"
#include "kostantq/lie_core.hpp"
#include "kostantq/numeric.hpp"
#include "kostantq/partition_fn.hpp"
#include "kostantq/qpolynomial.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kostantq {

/// Integer d x N matrix stored by columns.
class RootMatrix {
 public:
  RootMatrix(std::size_t rows, std::vector<std::vector<int>> columns)
      : rows_(rows), columns_(std::move(columns)) {
    for (const auto& c : columns_)
      if (c.size() != rows_) throw std::invalid_argument("column length mismatch");
  }
  static RootMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    if (rows.empty()) throw std::invalid_argument("empty matrix");
    std::vector<std::vector<int>> cols(rows[0].size(), std::vector<int>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols.size()) throw std::invalid_argument("ragged matrix");
      for (std::size_t j = 0; j < cols.size(); ++j) cols[j][i] = rows[i][j];
    }
    return RootMatrix(rows.size(), std::move(cols));
  }

  std::size_t num_rows() const { return rows_; }
  std::size_t num_columns() const { return columns_.size(); }
  int entry(std::size_t i, std::size_t j) const { return columns_[j][i]; }
  const std::vector<int>& column(std::size_t j) const { return columns_[j]; }
  const std::vector<std::vector<int>>& columns() const { return columns_; }

  std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> r(rows_, std::vector<int>(columns_.size()));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < columns_.size(); ++j) r[i][j] = columns_[j][i];
    return r;
  }

  Matrix<BigInt> submatrix(const std::vector<std::size_t>& cols) const {
    Matrix<BigInt> m(rows_, std::vector<BigInt>(cols.size()));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) m[i][j] = columns_[cols[j]][i];
    return m;
  }

  std::size_t rank() const {
    Matrix<Rational> m(rows_, std::vector<Rational>(columns_.size()));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < columns_.size(); ++j) m[i][j] = columns_[j][i];
    return kostantq::rank(std::move(m));
  }

  bool operator==(const RootMatrix&) const = default;

 private:
  std::size_t rows_;
  std::vector<std::vector<int>> columns_;
};

/// M_{A_n}: column j is positive root j in simple-root coordinates.
inline RootMatrix root_matrix(int n) {
  const RootSystemA rs(n);
  return RootMatrix(static_cast<std::size_t>(n), rs.positive_roots_simple());
}

/// Every maximal minor lies in {0, 1, -1}. Requires full row rank.
inline bool is_unimodular(const RootMatrix& M) {
  const std::size_t d = M.num_rows();
  if (M.rank() != d) throw DomainError("unimodularity needs a full-rank matrix");
  bool ok = true;
  for_each_combination(M.num_columns(), d, [&](const std::vector<std::size_t>& cols) {
    if (!ok) return;
    const BigInt det = determinant(M.submatrix(cols));
    if (det != 0 && det != 1 && det != -1) ok = false;
  });
  return ok;
}

/// Column subsets of size d with nonzero determinant, lexicographic.
inline std::vector<std::vector<std::size_t>> bases(const RootMatrix& M) {
  std::vector<std::vector<std::size_t>> out;
  for_each_combination(M.num_columns(), M.num_rows(), [&](const std::vector<std::size_t>& cols) {
    if (determinant(M.submatrix(cols)) != 0) out.push_back(cols);
  });
  return out;
}

enum class Membership { interior, boundary, outside };

inline const char* to_string(Membership m) {
  switch (m) {
    case Membership::interior: return "interior";
    case Membership::boundary: return "boundary";
    case Membership::outside: return "outside";
  }
  return "?";
}

struct SignatureEntry {
  Membership membership = Membership::outside;
  /// Bit j set when the j-th base column has a positive coefficient.
  std::uint32_t support = 0;
  auto operator<=>(const SignatureEntry&) const = default;
  bool operator==(const SignatureEntry&) const = default;
};

using Signature = std::vector<SignatureEntry>;
using RationalPoint = std::vector<Rational>;

inline RationalPoint to_rational(const std::vector<int>& p) { return RationalPoint(p.begin(), p.end()); }

/// Polynomial in the a-coordinates with coefficients in Q[q]:
/// a-exponent vector -> (q-exponent -> coefficient).
class ChamberPolynomial {
 public:
  using AExponent = std::vector<int>;
  using QCoeffs = std::map<int, Rational>;

  ChamberPolynomial() = default;
  explicit ChamberPolynomial(std::size_t num_vars) : nvars_(num_vars) {}

  std::size_t num_vars() const { return nvars_; }
  const std::map<AExponent, QCoeffs>& terms() const { return terms_; }

  void add(const AExponent& a, int q_exponent, const Rational& c) {
    if (a.size() != nvars_) throw std::invalid_argument("a-exponent length mismatch");
    if (c == 0) return;
    auto& qc = terms_[a];
    auto [it, inserted] = qc.try_emplace(q_exponent, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) qc.erase(it);
    }
    if (qc.empty()) terms_.erase(a);
  }

  QCoeffs evaluate(const std::vector<int>& a) const {
    if (a.size() != nvars_) throw std::invalid_argument("point length mismatch");
    QCoeffs out;
    for (const auto& [e, qc] : terms_) {
      Rational mono = 1;
      for (std::size_t i = 0; i < nvars_; ++i)
        for (int p = 0; p < e[i]; ++p) mono *= a[i];
      for (const auto& [qe, c] : qc) {
        out[qe] += mono * c;
        if (out[qe] == 0) out.erase(qe);
      }
    }
    return out;
  }

  /// Value at an integer point as a QPolynomial; throws if not integral.
  QPolynomial evaluate_integral(const std::vector<int>& a) const {
    QPolynomial p;
    for (const auto& [qe, c] : evaluate(a)) {
      if (boost::multiprecision::denominator(c) != 1)
        throw std::logic_error("chamber polynomial takes a non-integer value");
      p.add_term(qe, boost::multiprecision::numerator(c));
    }
    return p;
  }

  int a_degree() const {
    int d = -1;
    for (const auto& [e, qc] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
  }
  int q_degree() const {
    int d = -1;
    for (const auto& [e, qc] : terms_)
      if (!qc.empty()) d = std::max(d, qc.rbegin()->first);
    return d;
  }

  /// Variable i renamed to perm[i].
  ChamberPolynomial permuted(const std::vector<int>& perm) const {
    ChamberPolynomial out(nvars_);
    for (const auto& [e, qc] : terms_) {
      AExponent f(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) f[perm[i]] = e[i];
      for (const auto& [qe, c] : qc) out.add(f, qe, c);
    }
    return out;
  }

  bool operator==(const ChamberPolynomial&) const = default;

  /// Grouped by descending q-power: "(a2 - 1)q^3 + 2q^2".
  std::string to_string() const {
    std::map<int, std::map<AExponent, Rational>, std::greater<>> by_q;
    for (const auto& [e, qc] : terms_)
      for (const auto& [qe, c] : qc) by_q[qe][e] = c;
    if (by_q.empty()) return "0";
    std::string out;
    bool first_q = true;
    for (const auto& [qe, poly] : by_q) {
      std::string coeff = format_a_poly(poly);
      const bool compound = poly.size() > 1;
      const bool negative_simple = !compound && coeff[0] == '-';
      const bool leading = first_q;
      if (!first_q) out += negative_simple ? " - " : " + ";
      if (!first_q && negative_simple) coeff.erase(0, 1);
      first_q = false;
      if (qe == 0) {
        out += compound && !leading ? "(" + coeff + ")" : coeff;
        continue;
      }
      if (compound)
        out += "(" + coeff + ")";
      else if (coeff != "1")
        out += coeff == "-1" ? "-" : coeff;
      out += "q";
      if (qe > 1) out += "^" + std::to_string(qe);
    }
    return out;
  }

 private:
  static std::string format_a_poly(const std::map<AExponent, Rational>& poly) {
    std::string out;
    bool first = true;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
      Rational c = it->second;
      const bool neg = c < 0;
      if (neg) c = -c;
      if (first)
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < it->first.size(); ++i) {
        if (it->first[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "a" + std::to_string(i + 1);
        if (it->first[i] > 1) mono += "^" + std::to_string(it->first[i]);
      }
      const std::string cs = kostantq::to_string(c);
      if (mono.empty())
        out += cs;
      else
        out += (cs == "1" ? std::string() : cs + "*") + mono;
    }
    return out;
  }

  std::size_t nvars_ = 0;
  std::map<AExponent, QCoeffs> terms_;
};

struct Chamber {
  Signature signature;
  /// Sampled points of the relatively open cell (lattice points in practice).
  std::vector<RationalPoint> representatives;
  /// Dimension of the cell (rank of the representatives).
  std::size_t dimension = 0;
  std::optional<ChamberPolynomial> fitted;
};

class ChamberComplex {
 public:
  explicit ChamberComplex(RootMatrix M) : M_(std::move(M)), bases_(kostantq::bases(M_)) {
    if (M_.rank() != M_.num_rows()) throw DomainError("chamber complex needs a full-rank matrix");
    for (const auto& b : bases_) {
      Matrix<Rational> sub(M_.num_rows(), std::vector<Rational>(b.size()));
      for (std::size_t i = 0; i < M_.num_rows(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) sub[i][j] = M_.entry(i, b[j]);
      inverses_.push_back(*inverse(sub));
    }
  }

  const RootMatrix& matrix() const { return M_; }
  const std::vector<std::vector<std::size_t>>& bases() const { return bases_; }
  std::size_t dimension() const { return M_.num_rows(); }

  /// Membership of the point in every base cone; throws if outside pos(M).
  Signature signature(const RationalPoint& point) const {
    if (point.size() != dimension()) throw std::invalid_argument("point dimension mismatch");
    Signature sig;
    sig.reserve(bases_.size());
    bool somewhere = false;
    for (const auto& inv : inverses_) {
      SignatureEntry entry;
      bool negative = false;
      bool zero = false;
      for (std::size_t j = 0; j < inv.size(); ++j) {
        Rational x = 0;
        for (std::size_t i = 0; i < point.size(); ++i) x += inv[j][i] * point[i];
        if (x < 0)
          negative = true;
        else if (x == 0)
          zero = true;
        else
          entry.support |= std::uint32_t{1} << j;
      }
      if (negative) {
        entry.membership = Membership::outside;
        entry.support = 0;
      } else {
        entry.membership = zero ? Membership::boundary : Membership::interior;
        somewhere = true;
      }
      sig.push_back(entry);
    }
    if (!somewhere) throw DomainError("point lies outside the cone spanned by the columns");
    return sig;
  }

  bool in_cone(const RationalPoint& point) const {
    try {
      signature(point);
      return true;
    } catch (const DomainError&) {
      return false;
    }
  }

  /// Groups the lattice points of [0, box]^d that lie in pos(M) by cell.
  /// Full-dimensional cells come first, then by signature.
  std::vector<Chamber> discover(int box) const {
    const std::size_t d = dimension();
    std::map<Signature, Chamber> cells;
    std::vector<int> p(d, 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == d) {
        const RationalPoint rp = to_rational(p);
        if (!in_cone(rp)) return;
        const Signature sig = signature(rp);
        auto& c = cells[sig];
        c.signature = sig;
        c.representatives.push_back(rp);
        return;
      }
      for (int v = 0; v <= box; ++v) {
        p[i] = v;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
    std::vector<Chamber> out;
    for (auto& [sig, c] : cells) {
      Matrix<Rational> m(c.representatives.begin(), c.representatives.end());
      c.dimension = kostantq::rank(m);
      out.push_back(std::move(c));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const Chamber& a, const Chamber& b) { return a.dimension > b.dimension; });
    return out;
  }

  /// The discovered cell containing the point, with the point as its first
  /// representative.
  Chamber cell_of(const std::vector<int>& point, int box) const {
    const Signature sig = signature(to_rational(point));
    for (auto& c : discover(box)) {
      if (c.signature != sig) continue;
      auto it = std::find(c.representatives.begin(), c.representatives.end(), to_rational(point));
      if (it != c.representatives.end()) c.representatives.erase(it);
      c.representatives.insert(c.representatives.begin(), to_rational(point));
      return c;
    }
    Chamber c;
    c.signature = sig;
    c.representatives.push_back(to_rational(point));
    bool nonzero = std::any_of(point.begin(), point.end(), [](int x) { return x != 0; });
    c.dimension = nonzero ? 1 : 0;
    return c;
  }

 private:
  RootMatrix M_;
  std::vector<std::vector<std::size_t>> bases_;
  std::vector<Matrix<Rational>> inverses_;
};

inline Signature signature(const RootMatrix& M, const RationalPoint& point) {
  return ChamberComplex(M).signature(point);
}

namespace detail {

using RationalPoly = std::map<std::vector<int>, Rational>;

inline RationalPoly poly_mul(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto& slot = r[e];
      slot += ca * cb;
      if (slot == 0) r.erase(e);
    }
  return r;
}

inline std::vector<int> integral_point(const RationalPoint& p) {
  BigInt l = 1;
  for (const auto& x : p) {
    const BigInt den = boost::multiprecision::denominator(x);
    l = l / boost::multiprecision::gcd(l, den) * den;
  }
  std::vector<int> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Rational v = p[i] * Rational(l);
    out[i] = static_cast<int>(boost::multiprecision::numerator(v));
  }
  return out;
}

}  // namespace detail

using CellValue = std::function<QPolynomial(const SimpleCoords&)>;

/// Exact interpolation of `value` on the relative interior of a cell.
///
/// With v_1..v_r linearly independent lattice points of the cell (r its
/// dimension) and p0 = v_1 + ... + v_r, the grid p0 + sum t_i v_i,
/// t in [0, degree]^r, lies in the relatively open cell; the tensor-degree
/// interpolant in t is rewritten in the first r a-coordinates that
/// parameterize the cell. Every other sampled point of the cell and a few
/// points beyond the grid are then checked; any mismatch throws FitError.
inline ChamberPolynomial fit_cell_polynomial(const ChamberComplex& cx, const Chamber& cell,
                                             const CellValue& value, int degree) {
  const std::size_t n = cx.dimension();
  if (cell.representatives.empty()) throw FitError("cell has no sample points");

  std::vector<std::vector<int>> points;
  for (const auto& r : cell.representatives) {
    if (cx.signature(r) != cell.signature)
      throw FitError("sample " + format_weight(Weight(detail::integral_point(r))) +
                     " lies in another cell: the samples straddle a wall");
    points.push_back(detail::integral_point(r));
  }
  std::vector<std::vector<int>> by_size = points;
  std::stable_sort(by_size.begin(), by_size.end(), [](const auto& a, const auto& b) {
    return std::accumulate(a.begin(), a.end(), 0) < std::accumulate(b.begin(), b.end(), 0);
  });
  std::vector<std::vector<int>> basis;
  for (const auto& p : by_size) {
    Matrix<Rational> m;
    for (const auto& b : basis) m.push_back(to_rational(b));
    m.push_back(to_rational(p));
    if (rank(m) == m.size()) basis.push_back(p);
    if (basis.size() == n) break;
  }
  const std::size_t r = basis.size();

  ChamberPolynomial poly(n);
  if (r == 0) {
    const QPolynomial v = value(std::vector<int>(n, 0));
    for (const auto& [qe, c] : v.terms())
      poly.add(std::vector<int>(n, 0), qe, Rational(c));
    return poly;
  }

  std::vector<int> p0(n, 0);
  for (const auto& b : basis)
    for (std::size_t i = 0; i < n; ++i) p0[i] += b[i];
  auto grid_point = [&](const std::vector<int>& t) {
    std::vector<int> a = p0;
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t i = 0; i < n; ++i) a[i] += t[j] * basis[j][i];
    return a;
  };

  // Tensor grid and its Vandermonde system, one right-hand side per q-power.
  const std::size_t side = static_cast<std::size_t>(degree) + 1;
  std::size_t count = 1;
  for (std::size_t j = 0; j < r; ++j) count *= side;
  std::vector<std::vector<int>> grid(count, std::vector<int>(r));
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::size_t rem = idx;
    for (std::size_t j = 0; j < r; ++j) {
      grid[idx][j] = static_cast<int>(rem % side);
      rem /= side;
    }
  }
  std::vector<QPolynomial> values;
  int max_q = -1;
  for (const auto& t : grid) {
    const auto a = grid_point(t);
    if (cx.signature(to_rational(a)) != cell.signature)
      throw FitError("interpolation grid leaves the cell at " + format_weight(Weight(a)));
    values.push_back(value(a));
    max_q = std::max(max_q, values.back().degree());
  }
  if (max_q >= 0) {
    Matrix<Rational> A(count, std::vector<Rational>(count));
    for (std::size_t row = 0; row < count; ++row)
      for (std::size_t col = 0; col < count; ++col) {
        Rational v = 1;
        for (std::size_t j = 0; j < r; ++j)
          for (int p = 0; p < grid[col][j]; ++p) v *= grid[row][j];
        A[row][col] = v;
      }
    Matrix<Rational> B(count, std::vector<Rational>(static_cast<std::size_t>(max_q) + 1));
    for (std::size_t row = 0; row < count; ++row)
      for (int qe = 0; qe <= max_q; ++qe) B[row][qe] = Rational(values[row].coeff(qe));
    const auto solved = solve(std::move(A), std::move(B));
    if (!solved) throw FitError("singular interpolation system");

    // Coordinates S parameterizing the cell, and t = W (a_S - p0_S).
    std::vector<std::size_t> coords;
    Matrix<Rational> W;
    for_each_combination(n, r, [&](const std::vector<std::size_t>& s) {
      if (!coords.empty()) return;
      Matrix<Rational> VS(r, std::vector<Rational>(r));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) VS[i][j] = basis[j][s[i]];
      if (auto inv = inverse(VS)) {
        coords = s;
        W = *inv;
      }
    });
    std::vector<detail::RationalPoly> t_of_a(r);
    for (std::size_t j = 0; j < r; ++j) {
      Rational shift = 0;
      for (std::size_t i = 0; i < r; ++i) {
        std::vector<int> e(n, 0);
        e[coords[i]] = 1;
        if (W[j][i] != 0) t_of_a[j][e] += W[j][i];
        shift -= W[j][i] * p0[coords[i]];
      }
      if (shift != 0) t_of_a[j][std::vector<int>(n, 0)] += shift;
    }
    // Powers t_j^p for p = 0..degree.
    std::vector<std::vector<detail::RationalPoly>> powers(r);
    for (std::size_t j = 0; j < r; ++j) {
      powers[j].push_back(detail::RationalPoly{{std::vector<int>(n, 0), Rational(1)}});
      for (int p = 1; p <= degree; ++p) powers[j].push_back(detail::poly_mul(powers[j].back(), t_of_a[j]));
    }
    for (std::size_t col = 0; col < count; ++col) {
      bool any = false;
      for (int qe = 0; qe <= max_q; ++qe) any = any || (*solved)[col][qe] != 0;
      if (!any) continue;
      detail::RationalPoly mono{{std::vector<int>(n, 0), Rational(1)}};
      for (std::size_t j = 0; j < r; ++j) mono = detail::poly_mul(mono, powers[j][grid[col][j]]);
      for (const auto& [e, c] : mono)
        for (int qe = 0; qe <= max_q; ++qe)
          if ((*solved)[col][qe] != 0) poly.add(e, qe, c * (*solved)[col][qe]);
    }
  }

  // Held-out validation.
  std::vector<std::vector<int>> checks = points;
  checks.push_back(grid_point(std::vector<int>(r, degree + 1)));
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<int> t(r, 1);
    t[j] = degree + 2;
    checks.push_back(grid_point(t));
  }
  for (const auto& a : checks) {
    if (cx.signature(to_rational(a)) != cell.signature) continue;
    if (poly.evaluate_integral(a) != value(a))
      throw FitError("fitted polynomial disagrees at " + format_weight(Weight(a)) +
                     ": the samples straddle a wall");
  }
  return poly;
}

/// K_q on one cell of the chamber complex of A_n. Degree <= C(n,2) in the
/// a-coordinates and <= C(n+1,2) in q are checked; violations throw FitError.
inline ChamberPolynomial fit_chamber_polynomial(const ChamberComplex& cx, const Chamber& cell,
                                                const RootSystemA& rs) {
  const int n = rs.rank();
  if (cx.dimension() != static_cast<std::size_t>(n)) throw std::invalid_argument("rank mismatch");
  const int a_bound = n * (n - 1) / 2;
  const int q_bound = n * (n + 1) / 2;
  ChamberPolynomial p = fit_cell_polynomial(
      cx, cell, [&](const SimpleCoords& a) { return kostant_q(rs, from_root_coords(a)); }, a_bound);
  if (p.a_degree() > a_bound || p.q_degree() > q_bound)
    throw FitError("fitted polynomial exceeds the degree bounds");
  return p;
}

/// A_2 cell label: 1, 2 (open chambers a1 > a2, a1 < a2), 3 (ray a1 = a2),
/// 4 (ray of alpha_1), 5 (ray of alpha_2), 6 (origin), 0 outside the cone.
inline int a2_cell(const SimpleCoords& a) {
  if (a.size() != 2) throw std::invalid_argument("A2 point needs two coordinates");
  const int a1 = a[0];
  const int a2 = a[1];
  if (a1 < 0 || a2 < 0) return 0;
  if (a1 == 0 && a2 == 0) return 6;
  if (a2 == 0) return 4;
  if (a1 == 0) return 5;
  if (a1 > a2) return 1;
  if (a1 < a2) return 2;
  return 3;
}

/// Closed form of K_q on A_2 for mu = (mu_1, mu_2, mu_3) of trace 0.
inline QPolynomial a2_closed_form(const Weight& mu) {
  if (mu.size() != 3) throw std::invalid_argument("A2 weight needs three coordinates");
  const SimpleCoords a = to_root_coords(mu);
  const int mu1 = mu[0];
  const int mu12 = mu[0] + mu[1];
  switch (a2_cell(a)) {
    case 1: return QPolynomial::monomial(3, mu12 - 1) + QPolynomial::monomial(2, 2);
    case 2: return QPolynomial::monomial(3, mu1 - 1) + QPolynomial::monomial(2, 2);
    case 3:
      return QPolynomial::monomial(3, mu1 - 1) + QPolynomial::monomial(2) + QPolynomial::monomial(1);
    case 4:
    case 5: return QPolynomial::monomial(1);
    case 6: return QPolynomial(1);
    default: return QPolynomial();
  }
}

struct CoarseningCell {
  Signature signature;
  std::size_t dimension = 0;
  std::size_t points_checked = 0;
  bool consistent = false;
  std::optional<ChamberPolynomial> polynomial;
  std::string detail;
};

struct CoarseningReport {
  RootSubset subset;
  std::vector<CoarseningCell> cells;
  bool passed() const {
    return std::all_of(cells.begin(), cells.end(), [](const CoarseningCell& c) { return c.consistent; });
  }
};

/// Checks that K_J is a single polynomial on each cell of C_n: the sample
/// points are grouped by their C_n signature and K_J is fitted and validated
/// per group.
inline CoarseningReport coarsening_witness(const RootSystemA& rs, RootSubset J,
                                           const std::vector<SimpleCoords>& samples) {
  const int n = rs.rank();
  if (n != 2 && n != 3) throw DomainError("coarsening witness supports rank 2 or 3");
  const ChamberComplex cx(root_matrix(n));
  std::map<Signature, Chamber> groups;
  for (const auto& a : samples) {
    const RationalPoint p = to_rational(a);
    if (!cx.in_cone(p)) continue;
    const Signature sig = cx.signature(p);
    auto& c = groups[sig];
    c.signature = sig;
    c.representatives.push_back(p);
  }
  RestrictedKostant K(rs);
  const CellValue value = [&](const SimpleCoords& a) { return QPolynomial::monomial(0, K(J, from_root_coords(a))); };
  CoarseningReport report;
  report.subset = J;
  for (auto& [sig, c] : groups) {
    Matrix<Rational> m(c.representatives.begin(), c.representatives.end());
    c.dimension = rank(m);
    CoarseningCell cell;
    cell.signature = sig;
    cell.dimension = c.dimension;
    cell.points_checked = c.representatives.size();
    try {
      cell.polynomial = fit_cell_polynomial(cx, c, value, n * (n - 1) / 2);
      cell.consistent = true;
    } catch (const FitError& e) {
      cell.detail = e.what();
    }
    report.cells.push_back(std::move(cell));
  }
  return report;
}

inline CoarseningReport coarsening_witness(const RootSystemA& rs, RootSubset J, int box) {
  std::vector<SimpleCoords> samples;
  const std::size_t d = static_cast<std::size_t>(rs.rank());
  std::vector<int> p(d, 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == d) {
      samples.push_back(p);
      return;
    }
    for (int v = 0; v <= box; ++v) {
      p[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return coarsening_witness(rs, J, samples);
}

}  // namespace kostantq
