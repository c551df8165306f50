#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "eccspec/linalg.hpp"
#include "oracles.hpp"

using namespace eccspec;

namespace {

IntMatrix p4_ecc() { return IntMatrix{{0, 0, 2, 3}, {0, 0, 0, 2}, {2, 0, 0, 0}, {3, 2, 0, 0}}; }

IntMatrix k_minus_i(std::size_t n) { return IntMatrix::all_ones(n) - IntMatrix::identity(n); }

std::vector<double> eigenvalues_desc(const IntMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = m(i, j).get_d();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace

TEST(BareissRank, Examples) {
  EXPECT_EQ(bareiss_rank(IntMatrix::all_ones(3)), 1u);
  EXPECT_EQ(bareiss_rank(p4_ecc() + IntMatrix::identity(4)), 3u);
  EXPECT_EQ(bareiss_rank(IntMatrix(0)), 0u);
  EXPECT_EQ(bareiss_rank(IntMatrix(3)), 0u);
}

TEST(BareissRank, MatchesRationalElimination) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng() % 8;
    IntMatrix m = oracle::random_symmetric(rng, n, -2, 2);
    // Force some rank deficiency by copying rows and columns.
    if (n >= 3 && t % 3 == 0) {
      for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = m(0, j) + m(1, j);
      for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = m(i, 0) + m(i, 1);
    }
    EXPECT_EQ(bareiss_rank(m), oracle::rank(m)) << m.to_string();
  }
}

TEST(BareissRank, LargeEntriesUseBignums) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 2 + rng() % 6;
    IntMatrix m = oracle::random_symmetric(rng, n, -1'000'000'000'000L, 1'000'000'000'000L);
    if (t % 2 == 0) {
      for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = m(0, j) * 3;
    }
    EXPECT_EQ(bareiss_rank(m), oracle::rank(m));
    EXPECT_EQ(determinant(m), oracle::leibniz_det(m));
  }
}

TEST(Determinant, MatchesLeibniz) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 6;
    const IntMatrix m = oracle::random_symmetric(rng, n, -5, 5);
    EXPECT_EQ(determinant(m), oracle::leibniz_det(m));
  }
  EXPECT_EQ(determinant(IntMatrix(0)), 1);
}

TEST(Berkowitz, Examples) {
  EXPECT_EQ(berkowitz_charpoly(k_minus_i(3)), IntPolynomial({-2, -3, 0, 1}));
  EXPECT_EQ(berkowitz_charpoly(p4_ecc()), IntPolynomial({16, 0, -17, 0, 1}));
  const IntMatrix c4{{0, 0, 2, 0}, {0, 0, 0, 2}, {2, 0, 0, 0}, {0, 2, 0, 0}};
  EXPECT_EQ(berkowitz_charpoly(c4), IntPolynomial({16, 0, -8, 0, 1}));
  EXPECT_EQ(berkowitz_charpoly(IntMatrix(1)), IntPolynomial({0, 1}));
}

TEST(Berkowitz, MatchesFaddeevLeVerrier) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 7;
    const IntMatrix m = oracle::random_symmetric(rng, n, -4, 4);
    EXPECT_EQ(berkowitz_charpoly(m), IntPolynomial(oracle::charpoly(m))) << m.to_string();
  }
  for (int t = 0; t < 20; ++t) {
    const IntMatrix m = oracle::random_symmetric(rng, 5, -3'000'000'000L, 3'000'000'000L);
    EXPECT_EQ(berkowitz_charpoly(m), IntPolynomial(oracle::charpoly(m)));
  }
}

TEST(Inertia, Examples) {
  EXPECT_EQ(inertia_at(p4_ecc(), Rational(0)), (Inertia{2, 0, 2}));
  EXPECT_EQ(inertia_at(k_minus_i(5), Rational(-1)), (Inertia{1, 4, 0}));
  EXPECT_EQ(inertia_at(p4_ecc(), Rational(-100)), (Inertia{4, 0, 0}));
  EXPECT_EQ(inertia_at(p4_ecc(), Rational(4)), (Inertia{0, 1, 3}));
  EXPECT_THROW(inertia_at(IntMatrix{{0, 1}, {0, 0}}, Rational(0)), std::invalid_argument);
}

TEST(Inertia, MatchesFloatingEigenvalues) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> shift(-40, 40);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng() % 9;
    const IntMatrix m = oracle::random_symmetric(rng, n, -3, 3);
    const Rational c(shift(rng), 4);
    const auto ev = eigenvalues_desc(m);
    const double cd = c.get_d();
    if (std::any_of(ev.begin(), ev.end(), [&](double x) { return std::abs(x - cd) < 1e-6; })) continue;
    Inertia expected;
    for (double x : ev) (x > cd ? expected.n_plus : expected.n_minus)++;
    EXPECT_EQ(inertia_at(m, c), expected) << m.to_string() << " at " << c.get_str();
  }
}

TEST(Inertia, ZeroCountMatchesRank) {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 8;
    const IntMatrix m = oracle::random_symmetric(rng, n, -2, 2);
    for (long c = -2; c <= 2; ++c) {
      EXPECT_EQ(inertia_at(m, Rational(c)).n_zero, n - oracle::rank(m.shifted(1, c)));
    }
  }
}

TEST(EigenvalueBracket, CertifiesIntegers) {
  const Interval top = eigenvalue_bracket(p4_ecc(), 1);
  EXPECT_TRUE(top.is_point());
  EXPECT_EQ(top.lo, 4);
  const Interval mid = eigenvalue_bracket(k_minus_i(5), 3);
  EXPECT_TRUE(mid.is_point());
  EXPECT_EQ(mid.lo, -1);
  EXPECT_THROW(eigenvalue_bracket(p4_ecc(), 0), std::out_of_range);
  EXPECT_THROW(eigenvalue_bracket(p4_ecc(), 5), std::out_of_range);
}

TEST(EigenvalueBracket, IrrationalRoot) {
  // K4 v 2K1: the second eigenvalue is (5 - sqrt(33))/2.
  IntMatrix m(6);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      if (i != j) m(i, j) = (i >= 4 && j >= 4) ? 2 : 1;
    }
  }
  const Interval b = eigenvalue_bracket(m, 2);
  EXPECT_FALSE(b.is_point());
  EXPECT_LE(b.width(), default_bracket_width());
  EXPECT_GT(b.lo, -1);
  EXPECT_LT(b.hi, 0);
  const IntPolynomial q({-2, -5, 1});
  EXPECT_LT(q.sign_at(b.lo) * q.sign_at(b.hi), 0);
  EXPECT_TRUE(b.contains(Rational((5 - std::sqrt(33.0)) / 2)));
}

TEST(EigenvalueBracket, ContainsFloatingEigenvalues) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 7;
    const IntMatrix m = oracle::random_symmetric(rng, n, -3, 3);
    const auto ev = eigenvalues_desc(m);
    for (std::size_t i = 1; i <= n; ++i) {
      const Interval b = eigenvalue_bracket(m, i);
      EXPECT_LE(b.lo.get_d() - 1e-9, ev[i - 1]);
      EXPECT_GE(b.hi.get_d() + 1e-9, ev[i - 1]);
    }
  }
}

TEST(EigenvalueMultiplicity, Examples) {
  EXPECT_EQ(eigenvalue_multiplicity(k_minus_i(5), Rational(-1)), 4u);
  EXPECT_EQ(eigenvalue_multiplicity(p4_ecc(), Rational(-1)), 1u);
  EXPECT_EQ(eigenvalue_multiplicity(p4_ecc(), Rational(1, 2)), 0u);
  const IntMatrix half{{1, 1}, {1, 0}};
  EXPECT_EQ(eigenvalue_multiplicity(half, Rational(1, 2)), 0u);
  EXPECT_EQ(eigenvalue_multiplicity(IntMatrix{{0, 1}, {1, 0}}.shifted(2, 0), Rational(2)), 1u);
}

TEST(CompareEigenvalues, ExactTiesAndOrder) {
  EXPECT_EQ(compare_eigenvalues(p4_ecc(), 2, p4_ecc(), 2), 0);
  EXPECT_EQ(compare_eigenvalues(p4_ecc(), 1, p4_ecc(), 2), 1);
  EXPECT_EQ(compare_eigenvalues(p4_ecc(), 4, k_minus_i(5), 5), -1);
  // sqrt(2) from two different matrices.
  const IntMatrix a{{0, 1}, {1, 0}};
  const IntMatrix r2{{1, 1}, {1, -1}};
  EXPECT_EQ(compare_eigenvalues(a, 1, r2, 1), -1);
  const IntMatrix s{{0, 1, 0}, {1, 0, 1}, {0, 1, 0}};
  EXPECT_EQ(compare_eigenvalues(s, 1, r2, 1), 0);
}
