#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "hlq/errors.hpp"
#include "hlq/evaluate.hpp"
#include "hlq/laurent.hpp"
#include "hlq/partition.hpp"
#include "hlq/pochhammer.hpp"
#include "hlq/rational.hpp"
#include "hlq/series.hpp"

using namespace hlq;

namespace {

LaurentQ random_laurent(std::mt19937& rng, int lo, int hi) {
  std::uniform_int_distribution<int> c(-5, 5);
  std::vector<Integer> v;
  for (int e = lo; e <= hi; ++e) v.emplace_back(c(rng));
  return LaurentQ::from_coeffs(lo, v);
}

LaurentQ random_poly_nonzero_const(std::mt19937& rng, int deg) {
  auto f = random_laurent(rng, 1, deg);
  return f + LaurentQ(1);
}

// Number of permutations of the multiset 0^{n-m} 1^m by inversions.
std::vector<long long> inversion_counts(int n, int m) {
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  for (int i = n - m; i < n; ++i) w[static_cast<std::size_t>(i)] = 1;
  std::vector<long long> count(static_cast<std::size_t>(m * (n - m) + 1), 0);
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) inv += w[static_cast<std::size_t>(i)] > w[static_cast<std::size_t>(j)];
    }
    ++count[static_cast<std::size_t>(inv)];
  } while (std::next_permutation(w.begin(), w.end()));
  return count;
}

}  // namespace

TEST(LaurentQ, CanonicalForm) {
  const auto f = LaurentQ::from_coeffs(-2, {0, 0, 3, 0, 1, 0});
  EXPECT_EQ(f.min_exp(), 0);
  EXPECT_EQ(f.max_exp(), 2);
  EXPECT_EQ(f, LaurentQ(3) + LaurentQ::q_power(2));
  EXPECT_TRUE(LaurentQ::from_coeffs(3, {0, 0}).is_zero());
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_EQ(LaurentQ::one_minus_q_power(3), LaurentQ(1) - LaurentQ::q_power(3));
}

TEST(LaurentQ, RingLaws) {
  std::mt19937 rng(11);
  for (int it = 0; it < 50; ++it) {
    const auto a = random_laurent(rng, -3, 4);
    const auto b = random_laurent(rng, -2, 5);
    const auto c = random_laurent(rng, 0, 3);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + (-a), LaurentQ());
    const Rational q(3, 7);
    EXPECT_EQ((a * b).evaluate(q), a.evaluate(q) * b.evaluate(q));
  }
}

TEST(LaurentQ, ShiftInvertSubstitute) {
  const auto f = LaurentQ(1) + LaurentQ::monomial(2, 1) - LaurentQ::q_power(3);
  EXPECT_EQ(f.shifted(-2).min_exp(), -2);
  EXPECT_EQ(f.inverted().evaluate(Rational(2)), f.evaluate(Rational(1, 2)));
  EXPECT_EQ(f.power_substituted(3).evaluate(Rational(2)), f.evaluate(Rational(8)));
  EXPECT_EQ(f.truncated_above(1), LaurentQ(1) + LaurentQ::monomial(2, 1));
  EXPECT_THROW((void)LaurentQ::q_power(-1).evaluate(Rational(0)), DenominatorZero);
}

TEST(LaurentQ, InverseTruncated) {
  std::mt19937 rng(5);
  for (int it = 0; it < 30; ++it) {
    const auto f = random_poly_nonzero_const(rng, 5).shifted(it % 3 - 1);
    const int m = f.min_exp();
    const auto g = inverse_truncated(f, 12);
    const auto prod = mul_truncated(f, g, 12 + m);
    EXPECT_EQ(prod.truncated_above(12 + m), LaurentQ(1)) << f.to_string();
  }
  // 1/(1-q) = sum q^k.
  const auto geo = inverse_truncated(LaurentQ::one_minus_q_power(1), 6);
  for (int k = 0; k <= 6; ++k) EXPECT_EQ(geo.coeff(k), 1);
}

TEST(LaurentQ, DivideExact) {
  std::mt19937 rng(3);
  for (int it = 0; it < 30; ++it) {
    const auto a = random_laurent(rng, -2, 4);
    auto b = random_laurent(rng, 0, 3);
    if (b.is_zero()) continue;
    EXPECT_EQ(divide_exact(a * b, b), a);
  }
  EXPECT_THROW(divide_exact(LaurentQ(1), LaurentQ(2)), NotExact);
  EXPECT_THROW(divide_exact(LaurentQ::one_minus_q_power(3), LaurentQ::one_minus_q_power(2)), NotExact);
}

TEST(LaurentQ, PolyGcd) {
  const auto a = LaurentQ::one_minus_q_power(6);
  const auto b = LaurentQ::one_minus_q_power(4);
  const auto g = poly_gcd(a, b);
  // gcd(1-q^6, 1-q^4) = +-(1-q^2).
  EXPECT_TRUE(g == LaurentQ::one_minus_q_power(2) || g == -LaurentQ::one_minus_q_power(2));
}

TEST(RationalQ, CanonicalForm) {
  const RationalQ r(LaurentQ::one_minus_q_power(4), LaurentQ::one_minus_q_power(2));
  EXPECT_TRUE(r.is_polynomial());
  EXPECT_EQ(r.as_laurent(), LaurentQ(1) + LaurentQ::q_power(2));
  const RationalQ s(LaurentQ::q_power(2), LaurentQ::q_power(5));
  EXPECT_EQ(s.numerator(), LaurentQ(1));
  EXPECT_EQ(s.denominator(), LaurentQ::q_power(3));
  EXPECT_EQ(s.as_laurent(), LaurentQ::q_power(-3));
  EXPECT_THROW(RationalQ(LaurentQ(1), LaurentQ()), DenominatorZero);
  const RationalQ neg(LaurentQ(1), LaurentQ(-2));
  EXPECT_EQ(neg, RationalQ(LaurentQ(-1), LaurentQ(2)));
  EXPECT_THROW((void)RationalQ(LaurentQ(1), LaurentQ::one_minus_q_power(1)).as_laurent(), NotExact);
}

TEST(RationalQ, FieldLaws) {
  std::mt19937 rng(17);
  const Rational q(2, 5);
  for (int it = 0; it < 25; ++it) {
    const RationalQ a(random_poly_nonzero_const(rng, 3), random_poly_nonzero_const(rng, 2));
    const RationalQ b(random_poly_nonzero_const(rng, 2), random_poly_nonzero_const(rng, 3));
    EXPECT_EQ((a + b) - b, a);
    EXPECT_EQ((a * b) / b, a);
    EXPECT_EQ((a + b).evaluate(q), a.evaluate(q) + b.evaluate(q));
    EXPECT_EQ((a / b).evaluate(q), a.evaluate(q) / b.evaluate(q));
  }
}

TEST(QSeries, CapsTrackProducts) {
  const QSeries f(LaurentQ(1) + LaurentQ::q_power(1), 5);
  const QSeries g = QSeries(LaurentQ::q_power(2));
  EXPECT_EQ((f * g).cap(), 7);
  EXPECT_EQ((f + QSeries(LaurentQ(1))).cap(), 5);
  EXPECT_TRUE(QSeries(LaurentQ(3)).is_exact());
  const QSeries h(LaurentQ(1), 4);
  EXPECT_EQ((f * h).cap(), 4);
  EXPECT_EQ(f.truncated(2).cap(), 2);
  EXPECT_EQ(f.truncated(9).cap(), 5);
}

TEST(QSeries, InverseOfEuler) {
  // 1/(q;q)_inf against the partition counts.
  const auto euler = qpoch_infinite(1, 1, 25);
  const auto inv = euler.inverse();
  for (int n = 0; n <= 25; ++n) {
    EXPECT_EQ(inv.coeff(n), static_cast<long>(enumerate_partitions(n).size())) << n;
  }
  EXPECT_GE(inv.cap(), 25);
}

TEST(QSeries, PentagonalNumberTheorem) {
  const auto euler = qpoch_infinite(1, 1, 40);
  for (int n = 0; n <= 40; ++n) {
    long expect = 0;
    for (int k = -10; k <= 10; ++k) {
      if (k * (3 * k - 1) / 2 == n) expect = (k % 2 == 0) ? 1 : -1;
    }
    EXPECT_EQ(euler.coeff(n), expect) << n;
  }
}

TEST(MultiSeries, RingLaws) {
  const int n = 3;
  const auto x = MultiSeries::variable(n, 0, 5);
  const auto y = MultiSeries::variable(n, 1, 5);
  const auto z = MultiSeries::variable(n, 2, 5);
  const auto qx = x.scaled(LaurentQ::q_power(1));
  const auto a = x + y.scaled(LaurentQ(2)) + MultiSeries::constant(n, 1, 5);
  const auto b = qx * y - z + MultiSeries::constant(n, LaurentQ::q_power(-1), 5);
  const auto c = z * z + x;
  EXPECT_EQ(a * b, b * a);
  EXPECT_EQ((a * b) * c, a * (b * c));
  EXPECT_EQ(a * (b + c), a * b + a * c);
  const std::vector<Rational> pt{Rational(1, 3), Rational(-2, 7), Rational(3, 11)};
  const Rational q(5, 3);
  EXPECT_EQ((a * b).evaluate(pt, q), a.evaluate(pt, q) * b.evaluate(pt, q));
  for (const auto& [m, coeff] : (a * b * c).truncated(2).terms()) EXPECT_LE(m.degree(), 2);
}

TEST(MultiSeries, InverseIsTwoSided) {
  const int n = 2;
  const int cutoff = 6;
  auto f = MultiSeries::constant(n, 1, cutoff);
  f -= MultiSeries::variable(n, 0, cutoff).scaled(LaurentQ::q_power(1));
  f += MultiSeries::variable(n, 1, cutoff) * MultiSeries::variable(n, 0, cutoff);
  f -= MultiSeries::variable(n, 1, cutoff).scaled(LaurentQ(3) + LaurentQ::q_power(2));
  const auto g = series_inverse(f);
  EXPECT_EQ(f * g, MultiSeries::constant(n, 1, cutoff));
  EXPECT_EQ(g * f, MultiSeries::constant(n, 1, cutoff));
}

TEST(MultiSeries, InverseNeedsTruncation) {
  auto f = MultiSeries::constant(1, 1) - MultiSeries::variable(1, 0);
  EXPECT_ANY_THROW(series_inverse(f));
}

TEST(MultiSeries, SpecializeAndScale) {
  const int n = 2;
  const auto x = MultiSeries::variable(n, 0);
  const auto y = MultiSeries::variable(n, 1);
  const auto f = x * x * y + x.scaled(LaurentQ(3));
  const auto g = f.var_scaled_by_q(0, 2);
  const std::vector<Rational> pt{Rational(2, 3), Rational(-5, 2)};
  const Rational q(3, 4);
  EXPECT_EQ(g.evaluate(pt, q), f.evaluate(std::vector<Rational>{pt[0] * q * q, pt[1]}, q));
  const auto h = f.var_specialized_to_q_power(0, 1);
  EXPECT_EQ(h.evaluate(pt, q), f.evaluate(std::vector<Rational>{q, pt[1]}, q));
  EXPECT_EQ(f.coefficient_of(0, 2), y);
}

TEST(Pochhammer, FiniteAndReciprocal) {
  EXPECT_EQ(qpoch(0), LaurentQ(1));
  EXPECT_EQ(qpoch(3), LaurentQ::one_minus_q_power(1) * LaurentQ::one_minus_q_power(2) *
                          LaurentQ::one_minus_q_power(3));
  EXPECT_THROW(qpoch(-1), std::invalid_argument);
  EXPECT_TRUE(qpoch_reciprocal(-2).is_zero());
  EXPECT_EQ(qpoch_reciprocal(2) * RationalQ(qpoch(2)), RationalQ(1));
  // (a;q)_{-m} (aq^{-m};q)_m = 1.
  const LaurentQ a = LaurentQ::q_power(5);
  for (int m = 1; m <= 4; ++m) {
    EXPECT_EQ(qpoch_rational(a, -m) * RationalQ(qpoch(a.shifted(-m), m)), RationalQ(1));
  }
  const Rational q(2, 3);
  EXPECT_EQ(qpoch_value(Rational(q * q * q * q * q), q, -3),
            qpoch_rational(a, -3).evaluate(q));
  EXPECT_EQ(qpoch_reciprocal_value(q, -1), 0);
  EXPECT_THROW(qpoch_value(Rational(q), q, -1), DenominatorZero);
}

TEST(Pochhammer, QBinomialPascalAndInversions) {
  for (int n = 0; n <= 10; ++n) {
    for (int m = -1; m <= n + 1; ++m) {
      const auto b = qbinom(n, m);
      if (m < 0 || m > n) {
        EXPECT_TRUE(b.is_zero());
        continue;
      }
      if (n >= 1 && m >= 1) {
        EXPECT_EQ(b, qbinom(n - 1, m - 1) + qbinom(n - 1, m).shifted(m));
        EXPECT_EQ(b, qbinom(n - 1, m - 1).shifted(n - m) + qbinom(n - 1, m));
      }
      const auto counts = inversion_counts(n, m);
      for (std::size_t k = 0; k < counts.size(); ++k) EXPECT_EQ(b.coeff(static_cast<int>(k)), static_cast<long>(counts[k]));
      EXPECT_EQ(qbinom_value(n, m, Rational(3, 2)), b.evaluate(Rational(3, 2)));
    }
  }
  EXPECT_EQ(qbinom_base(4, 2, 3), qbinom(4, 2).power_substituted(3));
}

TEST(Pochhammer, ReciprocalSeries) {
  const auto s = qpoch_reciprocal_series(3, 15);
  // Partitions into parts <= 3.
  for (int k = 0; k <= 15; ++k) {
    EXPECT_EQ(s.coeff(k), static_cast<long>(enumerate_partitions(k, {.max_length = std::nullopt, .max_part = 3}).size()));
  }
  EXPECT_TRUE(qpoch_reciprocal_series(-1, 5).value().is_zero());
}

TEST(Pochhammer, EtaQuotientMatchesStepProducts) {
  const int N = 30;
  const auto a = eta_quotient(5, {{1, -1}, {4, -1}}, N);
  const auto b = (qpoch_infinite_step(1, 5, N) * qpoch_infinite_step(4, 5, N)).inverse(N);
  for (int k = 0; k <= N; ++k) EXPECT_EQ(a.coeff(k), b.coeff(k)) << k;
  // Partitions into parts = +-1 mod 5, counted directly.
  for (int k = 0; k <= 20; ++k) {
    long c = 0;
    for (const auto& l : enumerate_partitions(k)) {
      bool ok = true;
      for (int i = 1; i <= l.length(); ++i) {
        const int r = l.part(static_cast<std::size_t>(i)) % 5;
        ok = ok && (r == 1 || r == 4);
      }
      c += ok;
    }
    EXPECT_EQ(a.coeff(k), c) << k;
  }
}

TEST(Evaluate, SamplerIsDeterministic) {
  PointSampler a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 20; ++i) {
    const auto x = a.next();
    EXPECT_EQ(x, b.next());
    EXPECT_NE(x, 0);
    EXPECT_NE(abs(x), 1);
    differs = differs || x != c.next();
  }
  EXPECT_TRUE(differs);
  EXPECT_THROW(checked_div(Rational(1), Rational(0)), DenominatorZero);
  EXPECT_EQ(pow(Rational(2, 3), -2), Rational(9, 4));
}
