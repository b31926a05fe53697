#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "hlq/bivariate.hpp"
#include "hlq/errors.hpp"
#include "hlq/evaluate.hpp"
#include "hlq/hall_littlewood.hpp"
#include "hlq/macdonald.hpp"
#include "hlq/partition.hpp"
#include "hlq/pochhammer.hpp"

using namespace hlq;

namespace {

// Schur function at a point: sum over SSYT of shape lambda with entries 1..n.
Rational schur_by_tableaux(const Partition& lambda, const std::vector<Rational>& x) {
  const int n = static_cast<int>(x.size());
  const int rows = lambda.length();
  std::vector<std::vector<int>> t(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i) t[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(lambda.part(static_cast<std::size_t>(i + 1))));
  Rational total = 0;
  std::function<void(int, int)> fill = [&](int r, int c) {
    if (r == rows) {
      Rational w = 1;
      for (const auto& row : t) {
        for (int v : row) w *= x[static_cast<std::size_t>(v - 1)];
      }
      total += w;
      return;
    }
    auto& row = t[static_cast<std::size_t>(r)];
    if (c == static_cast<int>(row.size())) {
      fill(r + 1, 0);
      return;
    }
    const int lo_row = c > 0 ? row[static_cast<std::size_t>(c - 1)] : 1;
    const int lo_col = r > 0 ? t[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1 : 1;
    for (int v = std::max(lo_row, lo_col); v <= n; ++v) {
      row[static_cast<std::size_t>(c)] = v;
      fill(r, c + 1);
    }
  };
  fill(0, 0);
  return total;
}

// Monomial symmetric function: distinct rearrangements of lambda padded to n.
Rational monomial_symmetric(const Partition& lambda, const std::vector<Rational>& x) {
  const int n = static_cast<int>(x.size());
  if (lambda.length() > n) return 0;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < lambda.length(); ++i) e[static_cast<std::size_t>(i)] = lambda.part(static_cast<std::size_t>(i + 1));
  std::sort(e.begin(), e.end());
  Rational total = 0;
  do {
    Rational w = 1;
    for (int i = 0; i < n; ++i) w *= pow(x[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(i)]);
    total += w;
  } while (std::next_permutation(e.begin(), e.end()));
  return total;
}

MultiSeries at_q(const MultiSeries& f, const Rational& q) {
  // Keeps x symbolic: coefficients replaced by their value at q (must be integral).
  MultiSeries out = f.zero_like();
  for (const auto& [m, c] : f.terms()) {
    const Rational v = c.evaluate(q);
    EXPECT_EQ(v.get_den(), 1);
    out.add_term(m, LaurentQ(Integer(v.get_num())));
  }
  return out;
}

std::vector<Rational> sample_x(PointSampler& s, int n) {
  std::vector<Rational> x;
  for (int i = 0; i < n; ++i) x.push_back(s.next());
  return x;
}

}  // namespace

TEST(HallLittlewood, BranchingMatchesSymmetrization) {
  for (int n = 1; n <= 4; ++n) {
    const int max_w = n <= 3 ? 6 : 4;
    const auto table = hl_P_table(VarSet::first(n), max_w);
    for (const auto& l : enumerate_up_to(max_w)) {
      if (l.length() > n) {
        EXPECT_EQ(table.count(l), 0u) << l.to_string();
        continue;
      }
      const auto sym = hl_P_symmetrization(l, n);
      ASSERT_EQ(table.count(l), 1u) << l.to_string();
      EXPECT_EQ(table.at(l).terms(), sym.terms()) << l.to_string() << " n=" << n;
    }
  }
}

TEST(HallLittlewood, DivideByDifference) {
  const int n = 2;
  const auto x = MultiSeries::variable(n, 0);
  const auto y = MultiSeries::variable(n, 1);
  const auto f = x * x * x - y * y * y;
  EXPECT_EQ(divide_by_difference(f, 0, 1), x * x + x * y + y * y);
  EXPECT_THROW(divide_by_difference(x * x + y, 0, 1), NotExact);
}

TEST(HallLittlewood, QZeroIsSchur) {
  PointSampler s(99);
  for (int n = 1; n <= 4; ++n) {
    const auto table = hl_P_table(VarSet::first(n), 5);
    for (const auto& [l, p] : table) {
      const auto p0 = at_q(p, 0);
      for (int it = 0; it < 3; ++it) {
        const auto x = sample_x(s, n);
        EXPECT_EQ(p0.evaluate(x, 0), schur_by_tableaux(l, x)) << l.to_string();
      }
    }
  }
}

TEST(HallLittlewood, QOneIsMonomial) {
  PointSampler s(100);
  for (int n = 1; n <= 4; ++n) {
    const auto table = hl_P_table(VarSet::first(n), 5);
    for (const auto& [l, p] : table) {
      const auto x = sample_x(s, n);
      EXPECT_EQ(p.evaluate(x, 1), monomial_symmetric(l, x)) << l.to_string();
    }
  }
}

TEST(HallLittlewood, QIsBTimesP) {
  for (const auto& l : enumerate_up_to(4)) {
    const auto p = hl_P(l, 3);
    const auto q = hl_Q(l, 3);
    EXPECT_EQ(q, p.scaled(b_lambda(l))) << l.to_string();
  }
}

TEST(HallLittlewood, PrincipalSpecialization) {
  for (int n = 1; n <= 4; ++n) {
    const auto table = hl_P_table(VarSet::first(n), 6);
    for (const auto& [l, p] : table) {
      auto f = p;
      for (int i = 0; i < n; ++i) f = f.var_specialized_to_q_power(i, i);
      const auto value = f.coeff(Monomial{});
      EXPECT_EQ(RationalQ(value), spec_principal_P(l, n)) << l.to_string();
    }
  }
  // z = q shift multiplies by q^{|lambda|}.
  const Partition l{2, 1};
  EXPECT_EQ(spec_principal_P(l, 3, 1), spec_principal_P(l, 3) * RationalQ(LaurentQ::q_power(3)));
  // Infinite alphabet: Q_lambda(1,q,q^2,...) = q^{n(lambda)}.
  for (const auto& mu : enumerate_up_to(5)) {
    EXPECT_EQ(spec_principal_Q_infinite(mu), LaurentQ::q_power(n_stat(mu)));
  }
}

TEST(HallLittlewood, ValuesMatchSeries) {
  const std::vector<Rational> x{Rational(1, 2), Rational(-2, 3), Rational(3, 5)};
  const Rational q(2, 7);
  const auto values = hl_P_values(x, q, 3);
  const auto table = hl_P_table(VarSet::first(3), 9);
  for (const auto& [l, v] : values) {
    ASSERT_LE(l.largest(), 3);
    const auto it = table.find(l);
    const Rational expect = it == table.end() ? Rational(0) : it->second.evaluate(x, q);
    EXPECT_EQ(v, expect) << l.to_string();
  }
  EXPECT_EQ(values.size(), 20u);  // partitions in a 3x3 box
}

TEST(HallLittlewood, BLambda) {
  EXPECT_EQ(b_lambda(Partition()), LaurentQ(1));
  EXPECT_EQ(b_lambda(Partition({2, 2, 1})), qpoch(2) * qpoch(1));
  EXPECT_EQ(b_lambda(Partition({1, 1, 1})), qpoch(3));
}

TEST(HallLittlewood, SingleVariableSkew) {
  // phi b_mu = psi b_lambda.
  for (const auto& l : enumerate_up_to(7)) {
    for (const auto& mu : strips_under(l)) {
      EXPECT_EQ(phi_coeff(l, mu) * b_lambda(mu), psi_coeff(l, mu) * b_lambda(l))
          << l.to_string() << "/" << mu.to_string();
      const auto p = skew_P_single(l, mu);
      const auto q = skew_Q_single(l, mu);
      EXPECT_TRUE(p.nonzero);
      EXPECT_EQ(p.coeff, psi_coeff(l, mu));
      EXPECT_EQ(q.coeff, phi_coeff(l, mu));
      EXPECT_EQ(p.boxes, l.weight() - mu.weight());
    }
  }
  EXPECT_FALSE(skew_P_single(Partition({2, 2}), Partition()).nonzero);
  EXPECT_THROW(psi_coeff(Partition({2, 2}), Partition()), std::invalid_argument);
}

TEST(HallLittlewood, SkewTableSumsToFull) {
  // P_lambda(x, y) = sum_mu P_mu(x) P_{lambda/mu}(y).
  const int n = 4;
  VarSet first{n, {0, 1}, kUnbounded, {}};
  VarSet second{n, {2, 3}, kUnbounded, {}};
  const auto px = hl_P_table(first, 4);
  const auto full = hl_P_table(VarSet::first(n), 4);
  for (const auto& [l, pl] : full) {
    MultiSeries sum = pl.zero_like();
    for (const auto& [mu, pm] : px) {
      if (!l.contains(mu)) continue;
      sum += pm * skew_P(l, mu, second);
    }
    EXPECT_EQ(sum, pl) << l.to_string();
  }
}

TEST(Macdonald, CPrimeAtQZero) {
  for (const auto& l : enumerate_up_to(6)) EXPECT_EQ(macdonald_cprime(l).at_q_zero(), LaurentQ(1));
}

TEST(Macdonald, PsiPhiReduceAtQZero) {
  // At q = 0, psi(q,t) -> psi(t) and phi(q,t) -> phi(t).
  for (const auto& l : enumerate_up_to(6)) {
    for (const auto& mu : strips_under(l)) {
      const auto [pn, pd] = macdonald_psi(l, mu).at_q_zero();
      EXPECT_EQ(RationalQ(pn, pd), RationalQ(psi_coeff(l, mu))) << l.to_string() << "/" << mu.to_string();
      const auto [fn, fd] = macdonald_phi(l, mu).at_q_zero();
      EXPECT_EQ(RationalQ(fn, fd), RationalQ(phi_coeff(l, mu))) << l.to_string() << "/" << mu.to_string();
    }
  }
}

TEST(Macdonald, InvertedPhiDoesNotReduce) {
  bool some_differ = false;
  for (const auto& l : enumerate_up_to(4)) {
    for (const auto& mu : strips_under(l)) {
      const auto [n, d] = macdonald_phi_inverted(l, mu).at_q_zero();
      some_differ = some_differ || !(RationalQ(n, d) == RationalQ(phi_coeff(l, mu)));
    }
  }
  EXPECT_TRUE(some_differ);
}

TEST(Macdonald, ArmsAndLegs) {
  const Partition l{4, 2, 1};
  const auto s = square_data(l, 1, 2);
  EXPECT_EQ(s.arm, 2);
  EXPECT_EQ(s.leg, 1);
  EXPECT_THROW(square_data(l, 2, 3), std::invalid_argument);
  EXPECT_EQ(macdonald_b(l, 3, 3), BiRational(BiPoly(1)));
}

TEST(Bivariate, Arithmetic) {
  const auto a = BiPoly::one_minus(1, 2);
  const auto b = BiPoly::monomial(3, 0, 1) + BiPoly(1);
  const Rational q(2, 3), t(-1, 4);
  EXPECT_EQ((a * b).evaluate(q, t), a.evaluate(q, t) * b.evaluate(q, t));
  const BiRational r(a, b);
  EXPECT_EQ((r * BiRational(b)), BiRational(a));
  EXPECT_EQ((r + r).evaluate(q, t), 2 * r.evaluate(q, t));
  EXPECT_THROW(BiRational(a, BiPoly()), DenominatorZero);
}
