#include "kostantq/chamber.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace kostantq;

namespace {

ChamberPolynomial a2_poly(std::initializer_list<std::tuple<std::vector<int>, int, int>> terms) {
  ChamberPolynomial p(2);
  for (const auto& [e, qe, c] : terms) p.add(e, qe, c);
  return p;
}

const Chamber& cell_containing(const std::vector<Chamber>& cells, const ChamberComplex& cx, std::vector<int> a) {
  const Signature sig = cx.signature(to_rational(a));
  for (const auto& c : cells)
    if (c.signature == sig) return c;
  throw std::logic_error("no such cell");
}

}  // namespace

TEST(RootMatrix, Shapes) {
  EXPECT_EQ(root_matrix(1).rows(), (std::vector<std::vector<int>>{{1}}));
  EXPECT_EQ(root_matrix(2).rows(), (std::vector<std::vector<int>>{{1, 1, 0}, {0, 1, 1}}));
  const RootMatrix m3 = root_matrix(3);
  ASSERT_EQ(m3.num_rows(), 3u);
  ASSERT_EQ(m3.num_columns(), 6u);
  for (const auto& c : m3.columns()) {
    // Consecutive ones: a run of 1s and nothing else.
    const auto first = std::find(c.begin(), c.end(), 1);
    const auto last = std::find(first, c.end(), 0);
    EXPECT_TRUE(std::all_of(first, last, [](int x) { return x == 1; }));
    EXPECT_TRUE(std::all_of(last, c.end(), [](int x) { return x == 0; }));
    EXPECT_TRUE(std::all_of(c.begin(), first, [](int x) { return x == 0; }));
    EXPECT_NE(first, c.end());
  }
  EXPECT_EQ(m3.rank(), 3u);
}

TEST(Determinant, MatchesCofactorExpansion) {
  const std::vector<std::vector<int>> m{{2, -1, 0, 3}, {1, 1, 4, 0}, {0, 2, -3, 1}, {5, 0, 1, -2}};
  Matrix<BigInt> b(4, std::vector<BigInt>(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) b[i][j] = m[i][j];
  EXPECT_EQ(determinant(b), oracle::cofactor_det(m));
}

TEST(Unimodular, RootMatricesAndCounterexample) {
  for (int n = 1; n <= 4; ++n) EXPECT_TRUE(is_unimodular(root_matrix(n))) << n;
  EXPECT_FALSE(is_unimodular(RootMatrix::from_rows({{1, 1}, {-1, 1}})));
}

TEST(Unimodular, MinorsMatchCofactorOracle) {
  const RootMatrix M = root_matrix(4);
  for_each_combination(M.num_columns(), 4, [&](const std::vector<std::size_t>& cols) {
    std::vector<std::vector<int>> sub(4, std::vector<int>(4));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) sub[i][j] = M.entry(i, cols[j]);
    const BigInt d = oracle::cofactor_det(sub);
    EXPECT_TRUE(d == 0 || d == 1 || d == -1);
  });
}

TEST(Bases, Counts) {
  EXPECT_EQ(bases(root_matrix(1)).size(), 1u);
  EXPECT_EQ(bases(root_matrix(2)).size(), 3u);
  std::size_t independent = 0;
  const RootMatrix M = root_matrix(3);
  for_each_combination(6, 3, [&](const std::vector<std::size_t>& cols) {
    std::vector<std::vector<int>> sub(3, std::vector<int>(3));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) sub[i][j] = M.entry(i, cols[j]);
    if (oracle::cofactor_det(sub) != 0) ++independent;
  });
  EXPECT_EQ(bases(M).size(), independent);
  EXPECT_EQ(independent, 16u);
}

TEST(Signature, A2Examples) {
  const ChamberComplex cx(root_matrix(2));
  // Bases in order: {a1, a1+a2}, {a1, a2}, {a1+a2, a2}.
  const Signature s21 = cx.signature(to_rational({2, 1}));
  EXPECT_EQ(s21[0].membership, Membership::interior);
  EXPECT_EQ(s21[1].membership, Membership::interior);
  EXPECT_EQ(s21[2].membership, Membership::outside);

  const Signature s11 = cx.signature(to_rational({1, 1}));
  EXPECT_EQ(s11[0].membership, Membership::boundary);
  EXPECT_EQ(s11[1].membership, Membership::interior);
  EXPECT_EQ(s11[2].membership, Membership::boundary);

  const Signature s12 = cx.signature(to_rational({1, 2}));
  EXPECT_EQ(s12[0].membership, Membership::outside);
  EXPECT_EQ(s12[1].membership, Membership::interior);
  EXPECT_EQ(s12[2].membership, Membership::interior);

  EXPECT_THROW(cx.signature(to_rational({-1, 1})), DomainError);
  EXPECT_EQ(signature(root_matrix(2), to_rational({2, 1})), s21);
}

TEST(Signature, RationalPointsAndScaling) {
  const ChamberComplex cx(root_matrix(3));
  for (const auto& c : cx.discover(4)) {
    if (c.dimension == 0) continue;
    for (const auto& p : c.representatives)
      for (int s = 2; s <= 5; ++s) {
        RationalPoint scaled = p;
        for (auto& x : scaled) x *= s;
        EXPECT_EQ(cx.signature(scaled), c.signature);
        RationalPoint shrunk = p;
        for (auto& x : shrunk) x /= s;
        EXPECT_EQ(cx.signature(shrunk), c.signature);
      }
  }
}

TEST(Discover, A2CellStructure) {
  const ChamberComplex cx(root_matrix(2));
  const auto cells = cx.discover(6);
  ASSERT_EQ(cells.size(), 6u);
  std::map<std::size_t, int> by_dim;
  for (const auto& c : cells) ++by_dim[c.dimension];
  EXPECT_EQ(by_dim, (std::map<std::size_t, int>{{0, 1}, {1, 3}, {2, 2}}));
  for (const auto& c : cells) {
    std::set<int> labels;
    for (const auto& p : c.representatives) labels.insert(a2_cell(detail::integral_point(p)));
    EXPECT_EQ(labels.size(), 1u);
  }
}

TEST(Discover, A3HasSevenTopChambers) {
  const ChamberComplex cx(root_matrix(3));
  const auto cells = cx.discover(6);
  EXPECT_EQ(std::count_if(cells.begin(), cells.end(), [](const Chamber& c) { return c.dimension == 3; }), 7);
}

TEST(FitChamberPolynomial, A2MatchesClosedForms) {
  const RootSystemA rs(2);
  const ChamberComplex cx(root_matrix(2));
  const auto cells = cx.discover(6);
  // (a2 - 1)q^3 + 2q^2 on tau1 (a1 > a2), the mirror on tau2.
  const ChamberPolynomial tau1 = a2_poly({{{0, 1}, 3, 1}, {{0, 0}, 3, -1}, {{0, 0}, 2, 2}});
  const ChamberPolynomial tau2 = a2_poly({{{1, 0}, 3, 1}, {{0, 0}, 3, -1}, {{0, 0}, 2, 2}});
  const ChamberPolynomial tau3 = a2_poly({{{1, 0}, 3, 1}, {{0, 0}, 3, -1}, {{0, 0}, 2, 1}, {{0, 0}, 1, 1}});
  const ChamberPolynomial ray = a2_poly({{{0, 0}, 1, 1}});
  const ChamberPolynomial origin = a2_poly({{{0, 0}, 0, 1}});

  const auto f1 = fit_chamber_polynomial(cx, cell_containing(cells, cx, {2, 1}), rs);
  EXPECT_EQ(f1, tau1);
  EXPECT_EQ(f1.to_string(), "(a2 - 1)q^3 + 2q^2");
  const auto f2 = fit_chamber_polynomial(cx, cell_containing(cells, cx, {1, 2}), rs);
  EXPECT_EQ(f2, tau2);
  EXPECT_EQ(f2.to_string(), "(a1 - 1)q^3 + 2q^2");
  EXPECT_EQ(f1.permuted({1, 0}), f2);
  // On the diagonal both coordinates agree, so the fit is expressed in a1.
  EXPECT_EQ(fit_chamber_polynomial(cx, cell_containing(cells, cx, {1, 1}), rs), tau3);
  EXPECT_EQ(fit_chamber_polynomial(cx, cell_containing(cells, cx, {1, 0}), rs), ray);
  EXPECT_EQ(fit_chamber_polynomial(cx, cell_containing(cells, cx, {0, 1}), rs), ray);
  EXPECT_EQ(fit_chamber_polynomial(cx, cell_containing(cells, cx, {0, 0}), rs), origin);
  for (const auto& c : cells) {
    const auto p = fit_chamber_polynomial(cx, c, rs);
    EXPECT_LE(p.a_degree(), 1);
    EXPECT_LE(p.q_degree(), 3);
  }
}

TEST(FitChamberPolynomial, A3DegreeBoundsAndHeldOutValues) {
  const RootSystemA rs(3);
  const ChamberComplex cx(root_matrix(3));
  for (const auto& c : cx.discover(5)) {
    const auto p = fit_chamber_polynomial(cx, c, rs);
    EXPECT_LE(p.a_degree(), 3);
    EXPECT_LE(p.q_degree(), 6);
    for (const auto& r : c.representatives) {
      const auto a = detail::integral_point(r);
      std::vector<int> far = a;
      for (auto& x : far) x *= 3;
      EXPECT_EQ(p.evaluate_integral(far), kostant_q(rs, from_root_coords(far)));
    }
  }
}

TEST(FitCellPolynomial, StraddlingSampleIsReported) {
  const RootSystemA rs(2);
  const ChamberComplex cx(root_matrix(2));
  const auto cells = cx.discover(6);
  Chamber mixed = cell_containing(cells, cx, {2, 1});
  // Smuggle a point of the other open chamber into the sample.
  mixed.representatives.push_back(to_rational({1, 5}));
  EXPECT_THROW(fit_chamber_polynomial(cx, mixed, rs), FitError);
}

TEST(A2ClosedForm, Examples) {
  EXPECT_EQ(a2_closed_form(Weight{2, -1, -1}).to_string(), "2q^2");
  EXPECT_EQ(a2_closed_form(Weight{1, 0, -1}).to_string(), "q^2 + q");
  EXPECT_EQ(a2_closed_form(Weight{1, -1, 0}).to_string(), "q");
  EXPECT_EQ(a2_closed_form(Weight{0, 1, -1}).to_string(), "q");
  EXPECT_EQ(a2_closed_form(Weight{0, 0, 0}).to_string(), "1");
  EXPECT_EQ(a2_closed_form(Weight{-1, 1, 0}).to_string(), "0");
  EXPECT_THROW(a2_closed_form(Weight{1, 0, 0}), DomainError);
  EXPECT_THROW(a2_closed_form(Weight{1, -1}), std::invalid_argument);
}

TEST(A2ClosedForm, ExhaustiveGridMatchesEnumeration) {
  const RootSystemA rs(2);
  std::map<int, int> hits;
  for (int m1 = -15; m1 <= 15; ++m1)
    for (int m2 = -15; m2 <= 15; ++m2) {
      const int m3 = -m1 - m2;
      if (m3 < -15 || m3 > 15) continue;
      const Weight mu{m1, m2, m3};
      EXPECT_EQ(a2_closed_form(mu), kostant_q(rs, mu)) << format_weight(mu);
      ++hits[a2_cell(to_root_coords(mu))];
    }
  for (int cell = 0; cell <= 6; ++cell) EXPECT_GT(hits[cell], 0) << cell;
}

TEST(CoarseningWitness, A2Subsets) {
  const RootSystemA rs(2);
  const auto all = coarsening_witness(rs, RootSubset::all(3), 6);
  EXPECT_TRUE(all.passed());
  for (const auto& c : all.cells) {
    if (c.dimension == 2) {
      EXPECT_EQ(c.polynomial->a_degree(), 1);
    }
  }

  const auto only_a1 = coarsening_witness(rs, RootSubset::of({0}), 6);
  EXPECT_TRUE(only_a1.passed());
  for (int a1 = 0; a1 <= 6; ++a1)
    for (int a2 = 0; a2 <= 6; ++a2)
      EXPECT_EQ(kostant_restricted(rs, RootSubset::of({0}), from_root_coords({a1, a2})), a2 == 0 ? 1 : 0);

  const auto simple = coarsening_witness(rs, RootSubset::of({0, 2}), 6);
  EXPECT_TRUE(simple.passed());
  for (const auto& c : simple.cells) EXPECT_EQ(c.polynomial->to_string(), "1");
}

TEST(CoarseningWitness, A3EverySubsetIsPolynomialOnCells) {
  const RootSystemA rs(3);
  for (std::uint64_t J = 0; J < 64; J += 7) EXPECT_TRUE(coarsening_witness(rs, RootSubset(J), 4).passed()) << J;
  EXPECT_THROW(coarsening_witness(RootSystemA(4), RootSubset(), 2), DomainError);
}

TEST(ChamberPolynomialText, Formatting) {
  EXPECT_EQ(ChamberPolynomial(2).to_string(), "0");
  ChamberPolynomial p(2);
  p.add({1, 1}, 0, Rational(1, 2));
  p.add({0, 0}, 0, -3);
  EXPECT_EQ(p.to_string(), "1/2*a1*a2 - 3");
  EXPECT_EQ(p.evaluate_integral({2, 3}), QPolynomial(0));
  EXPECT_THROW(p.evaluate_integral({1, 1}), std::logic_error);
}
