#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "hlq/errors.hpp"
#include "hlq/identities.hpp"
#include "identities_common.hpp"

namespace hlq {

namespace {

std::string shift_string(const Shift3& k) {
  return "(" + std::to_string(k[0]) + "," + std::to_string(k[1]) + "," + std::to_string(k[2]) + ")";
}

Json shift_json(const Shift3& k) { return Json::array({k[0], k[1], k[2]}); }

/// Left and right side of the two-parameter Bailey-type identity at a point.
std::pair<Rational, Rational> bl_values(int M1, int M2, const Rational& a, const Rational& b, const Rational& q) {
  const Rational aq = a * q;
  const Rational bq = b * q;
  const Rational abq = a * b * q;
  Rational lhs = 0;
  for (int r1 = 0; r1 <= M1; ++r1) {
    for (int r2 = 0; r2 <= M2; ++r2) {
      Rational t = pow(a, r1) * pow(b, r2) * pow(q, r1 * r1 - r1 * r2 + r2 * r2);
      t *= qpoch_reciprocal_value(q, M1 - r1) * qpoch_reciprocal_value(q, M2 - r2);
      t *= qpoch_value(abq, q, r1 + r2);
      const Rational den = qpoch_value(q, q, r1) * qpoch_value(aq, q, r1) * qpoch_value(abq, q, r1) *
                           qpoch_value(q, q, r2) * qpoch_value(bq, q, r2) * qpoch_value(abq, q, r2);
      lhs += checked_div(t, den);
    }
  }
  const Rational den = qpoch_value(q, q, M1) * qpoch_value(aq, q, M1) * qpoch_value(abq, q, M1) *
                       qpoch_value(q, q, M2) * qpoch_value(bq, q, M2) * qpoch_value(abq, q, M2);
  return {lhs, checked_div(qpoch_value(abq, q, M1 + M2), den)};
}

/// The shifted display. With `support` the sum runs over every r_i where
/// 1/(q;q)_{r_1+k_3} and 1/(q;q)_{r_2-k_1} are nonzero, else from r_i = 0.
std::pair<Rational, Rational> type2_values(int M1, int M2, const Shift3& k, const Rational& a, const Rational& b,
                                           const Rational& q, bool support) {
  const auto [k1, k2, k3] = k;
  const Rational aq = a * q;
  const Rational bq = b * q;
  const Rational abq = a * b * q;
  Rational lhs = 0;
  const int lo1 = support ? std::min(0, -k3) : 0;
  const int lo2 = support ? std::min(0, k1) : 0;
  for (int r1 = lo1; r1 <= M1; ++r1) {
    for (int r2 = lo2; r2 <= M2; ++r2) {
      Rational t = pow(a, r1) * pow(b, r2) * pow(q, r1 * r1 - r1 * r2 + r2 * r2);
      t *= qpoch_reciprocal_value(q, M1 - r1) * qpoch_reciprocal_value(q, M2 - r2);
      t *= qpoch_value(abq, q, r1 + r2);
      t *= qpoch_reciprocal_value(q, r1 + k3) * qpoch_reciprocal_value(q, r2 - k1);
      if (t == 0) continue;
      const Rational den = qpoch_value(aq, q, r1 + k2) * qpoch_value(abq, q, r1 + k1) * qpoch_value(bq, q, r2 - k2) *
                           qpoch_value(abq, q, r2 - k3);
      lhs += checked_div(t, den);
    }
  }
  Rational rhs = pow(a, k1 + k2) * pow(b, k1) * pow(q, (k1 * k1 + k2 * k2 + k3 * k3) / 2);
  rhs *= qpoch_value(abq, q, M1 + M2);
  rhs *= qpoch_reciprocal_value(q, M1 + k3) * qpoch_reciprocal_value(q, M2 - k1);
  if (rhs != 0) {
    rhs = checked_div(rhs, qpoch_value(aq, q, M1 + k2) * qpoch_value(abq, q, M1 + k1) * qpoch_value(bq, q, M2 - k2) *
                               qpoch_value(abq, q, M2 - k3));
  }
  return {lhs, rhs};
}

template <typename F>
void sample_points(Comparator& cmp, const std::string& label, std::uint64_t seed, int points, F&& eval) {
  PointSampler sampler(seed);
  int done = 0;
  int attempts = 0;
  while (done < points) {
    if (++attempts > 50 * points + 100) throw Error("too many degenerate evaluation points");
    const RationalPoint pt = sampler.sample({"a", "b", "q"});
    try {
      const auto [l, r] = eval(pt["a"], pt["b"], pt["q"]);
      cmp.value(label + " at " + pt.to_string(), l, r);
      ++done;
    } catch (const DenominatorZero&) {
      continue;
    }
  }
}

MultiSeries pochhammer_series(const MultiSeries& a, int n) {
  if (n >= 0) return qpoch_at(a, n);
  throw std::invalid_argument("negative index in series strategy");
}

}  // namespace

VerifyReport verify_bailey_BL(int M1, int M2, const std::string& strategy, std::uint64_t seed, int points) {
  Stopwatch clock;
  Comparator cmp;
  Json bounds = Json::object();
  if (strategy == "random_points") {
    sample_points(cmp, "point", seed, points, [&](const Rational& a, const Rational& b, const Rational& q) {
      return bl_values(M1, M2, a, b, q);
    });
    bounds["strategy"] = strategy;
  } else if (strategy == "series") {
    // Expansion in (a, b) with q-series coefficients.
    const int deg = M1 + M2 + 1;
    const int N = 12 + 2 * (M1 + M2);
    const MultiSeries ring(2, kUnbounded, {deg, deg});
    auto mono = [&](int i, int j, int e) {
      return ring.monomial_like(Monomial::unit(0, i) * Monomial::unit(1, j), LaurentQ::q_power(e));
    };
    const MultiSeries one = ring.constant_like(1);
    const MultiSeries aq = mono(1, 0, 1);
    const MultiSeries bq = mono(0, 1, 1);
    const MultiSeries abq = mono(1, 1, 1);
    auto side = [&](int m1, int m2) {
      MultiSeries den = one.scaled(qpoch(m1) * qpoch(m2));
      den *= pochhammer_series(aq, m1) * pochhammer_series(abq, m1);
      den *= pochhammer_series(bq, m2) * pochhammer_series(abq, m2);
      return pochhammer_series(abq, m1 + m2) * series_inverse(den, N);
    };
    MultiSeries lhs = ring.zero_like().with_q_cap(N);
    for (int r1 = 0; r1 <= M1; ++r1) {
      for (int r2 = 0; r2 <= M2; ++r2) {
        const MultiSeries c = mono(r1, r2, r1 * r1 - r1 * r2 + r2 * r2)
                                  .scaled(QSeries(inverse_truncated(qpoch(M1 - r1) * qpoch(M2 - r2), N), N));
        lhs += c * side(r1, r2);
      }
    }
    cmp.series("coefficient", lhs, side(M1, M2), std::vector<std::string>{"a", "b"}, N);
    bounds = {{"strategy", strategy}, {"a_degree", deg}, {"b_degree", deg}, {"q_max", N}};
  } else {
    throw std::invalid_argument("unknown strategy '" + strategy + "' (random_points or series)");
  }
  return finish_report("bl.bailey", {{"M1", M1}, {"M2", M2}, {"strategy", strategy}}, cmp, bounds, clock, seed);
}

VerifyReport verify_bailey_type2(int M1, int M2, const Shift3& k, std::uint64_t seed, int points,
                                 const std::string& range) {
  if (k[0] + k[1] + k[2] != 0) throw std::invalid_argument("shifts must sum to zero");
  if (range != "support" && range != "printed") throw std::invalid_argument("range must be support or printed");
  Stopwatch clock;
  Comparator cmp;
  sample_points(cmp, "k=" + shift_string(k), seed, points, [&](const Rational& a, const Rational& b, const Rational& q) {
    return type2_values(M1, M2, k, a, b, q, range == "support");
  });
  return finish_report("bl.type2", {{"M1", M1}, {"M2", M2}, {"k", shift_json(k)}, {"range", range}}, cmp,
                       {{"strategy", "random_points"}}, clock, seed);
}

VerifyReport verify_bailey_type2_range(int M1, int M2, int k_max, std::uint64_t seed, int points,
                                       const std::string& range) {
  Stopwatch clock;
  Comparator cmp;
  for (const auto& k : detail::zero_sum_triples(k_max)) {
    cmp.absorb(verify_bailey_type2(M1, M2, k, seed, points, range));
  }
  return finish_report("bl.type2", {{"M1", M1}, {"M2", M2}, {"k_max", k_max}, {"range", range}}, cmp,
                       {{"strategy", "random_points"}, {"points_per_shift", points}}, clock, seed);
}

namespace {

RationalQ drie_lhs(int M1, int M2, const Shift3& k) {
  RationalQ total;
  for (int r1 = 0; r1 <= M1; ++r1) {
    for (int r2 = 0; r2 <= M2; ++r2) {
      LaurentQ num = LaurentQ::q_power(r1 * r1 - r1 * r2 + r2 * r2);
      for (int i = 0; i < 3; ++i) num *= qbinom(r1 + r2, r1 + k[static_cast<std::size_t>(i)]);
      if (num.is_zero()) continue;
      const LaurentQ s = qpoch(r1 + r2);
      total += RationalQ(num, qpoch(M1 - r1) * qpoch(M2 - r2) * s * s);
    }
  }
  return total;
}

RationalQ drie_rhs(int M1, int M2, const Shift3& k) {
  const int sq = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
  LaurentQ num = LaurentQ::q_power(sq / 2);
  for (int i = 0; i < 3; ++i) num *= qbinom(M1 + M2, M1 + k[static_cast<std::size_t>(i)]);
  const LaurentQ s = qpoch(M1 + M2);
  return RationalQ(num, s * s);
}

}  // namespace

std::pair<Rational, Rational> bailey_type2_point(int M1, int M2, const Shift3& k, const Rational& a, const Rational& b,
                                                 const Rational& q, const std::string& range) {
  if (range != "support" && range != "printed") throw std::invalid_argument("range must be support or printed");
  return type2_values(M1, M2, k, a, b, q, range == "support");
}

std::pair<RationalQ, RationalQ> drie_sides(int M1, int M2, const Shift3& k) {
  return {drie_lhs(M1, M2, k), drie_rhs(M1, M2, k)};
}

VerifyReport verify_drie(int M1, int M2, const Shift3& k) {
  if (k[0] + k[1] + k[2] != 0) throw std::invalid_argument("shifts must sum to zero");
  Stopwatch clock;
  Comparator cmp;
  cmp.rational_q("k=" + shift_string(k), drie_lhs(M1, M2, k), drie_rhs(M1, M2, k));
  return finish_report("bl.drie", {{"M1", M1}, {"M2", M2}, {"k", shift_json(k)}}, cmp,
                       {{"exact", "rational functions in q"}}, clock);
}

VerifyReport verify_drie_range(int M1, int M2, int k_max) {
  Stopwatch clock;
  Comparator cmp;
  for (const auto& k : detail::zero_sum_triples(k_max)) {
    cmp.rational_q("k=" + shift_string(k), drie_lhs(M1, M2, k), drie_rhs(M1, M2, k));
  }
  return finish_report("bl.drie", {{"M1", M1}, {"M2", M2}, {"k_max", k_max}}, cmp,
                       {{"exact", "rational functions in q"}}, clock);
}

namespace {

enum class EulerForm { kStandard, kInverse, kSeed, kDoubled };

/// Sum over k1 + k2 + k3 = 0 and w in S3 of the signed products.
LaurentQ euler_sum(int M1, int M2, EulerForm form) {
  const int total = M1 + M2;
  const int bound = (total + 2) / 3 + 1;
  LaurentQ sum;
  for (const auto& k : detail::zero_sum_triples(bound)) {
    const long long sq = 1LL * k[0] * k[0] + 1LL * k[1] * k[1] + 1LL * k[2] * k[2];
    for (const auto& w : detail::permutations3()) {
      // Twice the exponent, halved at the end.
      long long twice = 0;
      switch (form) {
        case EulerForm::kStandard:
        case EulerForm::kDoubled:
          twice = 3 * sq;
          break;
        case EulerForm::kInverse:
          twice = -3 * sq;
          break;
        case EulerForm::kSeed:
          twice = 0;
          break;
      }
      LaurentQ prod(w.sign);
      for (int i = 0; i < 3; ++i) {
        const long long ki = k[static_cast<std::size_t>(i)];
        const long long wi = w.w[static_cast<std::size_t>(i)];
        const long long d = 3 * ki - wi + (i + 1);
        switch (form) {
          case EulerForm::kStandard:
            twice += d * d - 2 * wi * ki;
            break;
          case EulerForm::kInverse:
            twice += d * d + 2 * wi * ki;
            break;
          case EulerForm::kSeed:
            twice += d * d;
            break;
          case EulerForm::kDoubled:
            twice += 2 * (d * d - wi * ki);
            break;
        }
        prod *= qbinom(total, M1 + static_cast<int>(d));
        if (prod.is_zero()) break;
      }
      if (prod.is_zero()) continue;
      if (twice % 2 != 0) throw NotExact("odd doubled exponent in A2 Euler sum");
      sum += prod.shifted(static_cast<int>(twice / 2));
    }
  }
  return sum;
}

void check_euler_variant(const std::string& v) {
  if (v != "standard" && v != "q_inverse" && v != "modulus3n_seed") {
    throw std::invalid_argument("unknown variant '" + v + "' (standard, q_inverse or modulus3n_seed)");
  }
}

void euler_into(Comparator& cmp, int M1, int M2, const std::string& variant) {
  const std::string at = "M=(" + std::to_string(M1) + "," + std::to_string(M2) + ")";
  const int total = M1 + M2;
  if (variant == "standard") {
    cmp.laurent(at, euler_sum(M1, M2, EulerForm::kStandard), qbinom(total, M1));
  } else if (variant == "q_inverse") {
    const LaurentQ printed = euler_sum(M1, M2, EulerForm::kInverse);
    cmp.laurent(at, printed, qbinom(total, M1).shifted(2 * M1 * M2));
    // Literal q -> 1/q of the standard sum, up to the factor from the binomials.
    cmp.laurent(at + " literal substitution", printed,
                euler_sum(M1, M2, EulerForm::kStandard).inverted().shifted(3 * M1 * M2));
  } else {
    cmp.laurent(at, euler_sum(M1, M2, EulerForm::kSeed), qbinom_base(total, M1, 3));
  }
}

}  // namespace

VerifyReport verify_euler_a2(int M1, int M2, const std::string& variant) {
  check_euler_variant(variant);
  Stopwatch clock;
  Comparator cmp;
  euler_into(cmp, M1, M2, variant);
  return finish_report("euler.a2", {{"M1", M1}, {"M2", M2}, {"variant", variant}}, cmp,
                       {{"exact", "Laurent polynomials in q"}}, clock);
}

VerifyReport verify_euler_a2_range(int max_M, const std::string& variant) {
  check_euler_variant(variant);
  Stopwatch clock;
  Comparator cmp;
  for (int M1 = 0; M1 <= max_M; ++M1) {
    for (int M2 = 0; M2 <= max_M; ++M2) euler_into(cmp, M1, M2, variant);
  }
  return finish_report("euler.a2", {{"max_M", max_M}, {"variant", variant}}, cmp,
                       {{"exact", "Laurent polynomials in q"}}, clock);
}

namespace {

void it1_into(Comparator& cmp, int M1, int M2) {
  const LaurentQ lhs = euler_sum(M1, M2, EulerForm::kDoubled);
  RationalQ rhs;
  const LaurentQ s = qpoch(M1 + M2);
  for (int r1 = 0; r1 <= M1; ++r1) {
    for (int r2 = 0; r2 <= M2; ++r2) {
      const LaurentQ num = LaurentQ::q_power(r1 * r1 - r1 * r2 + r2 * r2) * s * s;
      rhs += RationalQ(num, qpoch(M1 - r1) * qpoch(M2 - r2) * qpoch(r1) * qpoch(r2) * qpoch(r1 + r2));
    }
  }
  cmp.rational_q("M=(" + std::to_string(M1) + "," + std::to_string(M2) + ")", RationalQ(lhs), rhs);
}

}  // namespace

VerifyReport verify_it1(int M1, int M2) {
  Stopwatch clock;
  Comparator cmp;
  it1_into(cmp, M1, M2);
  return finish_report("euler.it1", {{"M1", M1}, {"M2", M2}}, cmp, {{"exact", "rational functions in q"}}, clock);
}

VerifyReport verify_it1_range(int max_M) {
  Stopwatch clock;
  Comparator cmp;
  for (int M1 = 0; M1 <= max_M; ++M1) {
    for (int M2 = 0; M2 <= max_M; ++M2) it1_into(cmp, M1, M2);
  }
  return finish_report("euler.it1", {{"max_M", max_M}}, cmp, {{"exact", "rational functions in q"}}, clock);
}

}  // namespace hlq
