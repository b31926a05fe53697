#include <cstdlib>
#include <functional>
#include <stdexcept>

#include "hlq/identities.hpp"
#include "identities_common.hpp"

namespace hlq {

namespace {

/// q^e num / den through q^N; den must have constant term +-1.
LaurentQ term_through(long long e, const LaurentQ& num, const LaurentQ& den, int N) {
  if (e > N) return {};
  const int rest = N - static_cast<int>(e);
  return mul_truncated(num, inverse_truncated(den, rest), rest).shifted(static_cast<int>(e));
}

LaurentQ qpoch_inf(int N) { return qpoch_infinite(1, 1, N).value(); }

MultiSeries ab_ring(int deg_a, int deg_b) { return MultiSeries(2, kUnbounded, {deg_a, deg_b}); }

Monomial ab(int i, int j) { return Monomial::unit(0, i) * Monomial::unit(1, j); }

const std::vector<std::string> kAB{"a", "b"};

}  // namespace

MultiSeries pps_lhs_series(int n, int m, int deg_a, int deg_b, int N) {
  MultiSeries out = ab_ring(deg_a, deg_b).with_q_cap(N);
  for (int i = 0; i <= deg_a; ++i) {
    for (const auto& l : enumerate_partitions(i, {.max_length = n, .max_part = std::nullopt})) {
      const Partition lc = l.conjugate();
      for (int j = 0; j <= deg_b; ++j) {
        for (const auto& mu : enumerate_partitions(j, {.max_length = m, .max_part = std::nullopt})) {
          const Partition mc = mu.conjugate();
          const long long e = dot(lc, lc) + dot(mc, mc) - dot(lc, mc);
          const LaurentQ den = qpoch(n - l.length()) * qpoch(m - mu.length()) * b_lambda(l) * b_lambda(mu);
          out.add_term(ab(i, j), term_through(e, 1, den, N));
        }
      }
    }
  }
  return out;
}

MultiSeries bounded_R_series(int M1, int M2, int deg_a, int deg_b, int N) {
  MultiSeries out = ab_ring(deg_a, deg_b).with_q_cap(N);
  const auto ls = enumerate_up_to(deg_a, {.max_length = M1, .max_part = std::nullopt});
  const auto ms = enumerate_up_to(deg_b, {.max_length = M2, .max_part = std::nullopt});
  for (const auto& l : ls) {
    for (const auto& mu : ms) {
      // (1/2) sum C_ij <l_i', l_j'> for the A2 Cartan matrix.
      const Partition l1 = l.conjugate();
      const Partition l2 = mu.conjugate();
      const long long e = (2 * dot(l1, l1) + 2 * dot(l2, l2) - 2 * dot(l1, l2)) / 2;
      LaurentQ den = qpoch(M1 - l.length()) * b_lambda(l);
      den *= qpoch(M2 - mu.length()) * b_lambda(mu);
      out.add_term(ab(l.weight(), mu.weight()), term_through(e, 1, den, N));
    }
  }
  return out;
}

VerifyReport verify_cor4(int n, int m, int deg_a, int deg_b, int N) {
  Stopwatch clock;
  Comparator cmp;
  const MultiSeries lhs = pps_lhs_series(n, m, deg_a, deg_b, N);
  const MultiSeries ring = ab_ring(deg_a, deg_b);
  const MultiSeries aq = ring.monomial_like(ab(1, 0), LaurentQ::q_power(1));
  const MultiSeries bq = ring.monomial_like(ab(0, 1), LaurentQ::q_power(1));
  const MultiSeries abq = ring.monomial_like(ab(1, 1), LaurentQ::q_power(1));
  MultiSeries den = ring.constant_like(qpoch(n) * qpoch(m));
  den *= qpoch_at(aq, n) * qpoch_at(abq, n);
  den *= qpoch_at(bq, m) * qpoch_at(abq, m);
  const MultiSeries rhs = qpoch_at(abq, n + m) * series_inverse(den, N);
  cmp.series("coefficient", lhs, rhs, kAB, N);
  TruncationPlan plan;
  plan.q_min = 0;
  plan.q_max = N;
  plan.max_weights = {deg_a, deg_b};
  plan.note = "each (a,b)-coefficient is a finite sum of q-series with nonnegative exponents";
  return finish_report("cor4.pps", {{"n", n}, {"m", m}, {"deg_a", deg_a}, {"deg_b", deg_b}, {"N", N}}, cmp,
                       plan.to_json(), clock);
}

VerifyReport verify_hua(int rank, int deg, int N) {
  if (rank < 1 || rank > 4) throw std::invalid_argument("hua: rank must be 1..4");
  Stopwatch clock;
  Comparator cmp;
  const std::vector<int> caps(static_cast<std::size_t>(rank), deg);
  MultiSeries lhs = MultiSeries(rank, kUnbounded, caps).with_q_cap(N);

  struct Entry {
    Partition conj;
    int weight;
    LaurentQ inv_b;
  };
  std::vector<Entry> parts;
  for (const auto& l : enumerate_up_to(deg)) parts.push_back({l.conjugate(), l.weight(), inverse_truncated(b_lambda(l), N)});

  std::vector<const Entry*> chosen(static_cast<std::size_t>(rank));
  std::function<void(int)> walk = [&](int level) {
    if (level == rank) {
      long long e = 0;
      Monomial mono;
      LaurentQ value(1);
      for (int i = 0; i < rank; ++i) {
        const auto& c = chosen[static_cast<std::size_t>(i)]->conj;
        e += dot(c, c);
        if (i + 1 < rank) e -= dot(c, chosen[static_cast<std::size_t>(i + 1)]->conj);
        mono.e[static_cast<std::size_t>(i)] = static_cast<std::int16_t>(chosen[static_cast<std::size_t>(i)]->weight);
      }
      if (e > N) return;
      for (int i = 0; i < rank; ++i) value = mul_truncated(value, chosen[static_cast<std::size_t>(i)]->inv_b, N);
      lhs.add_term(mono, mul_truncated(value, 1, N - static_cast<int>(e)).shifted(static_cast<int>(e)));
      return;
    }
    for (const auto& p : parts) {
      chosen[static_cast<std::size_t>(level)] = &p;
      walk(level + 1);
    }
  };
  walk(0);

  const MultiSeries ring(rank, kUnbounded, caps);
  MultiSeries rhs = ring.constant_like(1);
  for (int i = 0; i < rank; ++i) {
    for (int j = i; j < rank; ++j) {
      Monomial root;
      for (int k = i; k <= j; ++k) root.e[static_cast<std::size_t>(k)] = 1;
      rhs *= series_inverse(qpoch_infinite_at(ring.monomial_like(root, LaurentQ::q_power(1)), N));
    }
  }
  cmp.series("coefficient", lhs, rhs, detail::var_names("a", rank), N);

  if (rank == 2) {
    // a1 = a2 = 1 in the conjugated form against 1/(q;q)_inf^3.
    Comparator sub;
    const auto ps = enumerate_by_norm(2LL * N);
    LaurentQ sum;
    for (const auto& l : ps) {
      const long long nl = dot(l, l);
      const LaurentQ inv_l = inverse_truncated(b_lambda(l.conjugate()), N);
      for (const auto& mu : ps) {
        if (nl + dot(mu, mu) > 2LL * N) continue;
        const long long e = nl + dot(mu, mu) - dot(l, mu);
        if (e > N) continue;
        const int rest = N - static_cast<int>(e);
        sum += mul_truncated(inv_l, inverse_truncated(b_lambda(mu.conjugate()), rest), rest).shifted(static_cast<int>(e));
      }
    }
    const LaurentQ p = qpoch_inf(N);
    const LaurentQ rhs3 = inverse_truncated(mul_truncated(mul_truncated(p, p, N), p, N), N);
    sub.laurent("a=1 specialization", sum.truncated_above(N), rhs3, N, true);
    cmp.absorb(finish_report("hua.a_equals_one", {{"N", N}}, sub, Json::object(), clock));
  }

  TruncationPlan plan;
  plan.q_min = 0;
  plan.q_max = N;
  plan.max_weights = caps;
  plan.note = "the Cartan form is positive definite, so each a-coefficient is a finite sum; terms with exponent > N dropped";
  return finish_report("hua", {{"rank", rank}, {"deg", deg}, {"N", N}}, cmp, plan.to_json(), clock);
}

VerifyReport verify_lemma_inv(int M1, int M2, int deg_a, int deg_b, int N) {
  Stopwatch clock;
  Comparator cmp;
  MultiSeries lhs = ab_ring(deg_a, deg_b).with_q_cap(N);
  for (int r1 = 0; r1 <= M1; ++r1) {
    for (int r2 = 0; r2 <= M2; ++r2) {
      const MultiSeries R = bounded_R_series(r1, r2, deg_a, deg_b, N);
      MultiSeries factor = R.zero_like();
      const long long e = 1LL * r1 * r1 - 1LL * r1 * r2 + 1LL * r2 * r2;
      factor.add_term(ab(r1, r2), term_through(e, 1, qpoch(M1 - r1) * qpoch(M2 - r2), N));
      if (factor.is_zero()) continue;
      lhs += factor * R;
    }
  }
  const MultiSeries rhs = bounded_R_series(M1, M2, deg_a, deg_b, N);
  cmp.series("coefficient", lhs, rhs, kAB, N);
  // R_(M1,M2) is also the left side of the bounded two-parameter sum.
  cmp.series("R_M vs bounded sum", rhs, pps_lhs_series(M1, M2, deg_a, deg_b, N), kAB, N);
  TruncationPlan plan;
  plan.q_min = 0;
  plan.q_max = N;
  plan.max_weights = {deg_a, deg_b};
  plan.note = "finite sums of q-series with nonnegative exponents";
  return finish_report("lemma.inv", {{"M1", M1}, {"M2", M2}, {"deg_a", deg_a}, {"deg_b", deg_b}, {"N", N}}, cmp,
                       plan.to_json(), clock);
}

VerifyReport verify_rr_classical(int N) {
  Stopwatch clock;
  Comparator cmp;
  LaurentQ s1;
  LaurentQ s2;
  for (int n = 0; 1LL * n * n <= N; ++n) {
    s1 += term_through(1LL * n * n, 1, qpoch(n), N);
    s2 += term_through(1LL * n * (n + 1), 1, qpoch(n), N);
  }
  cmp.qseries("first", QSeries(s1, N), eta_quotient(5, {{1, -1}, {4, -1}}, N), N);
  cmp.qseries("second", QSeries(s2, N), eta_quotient(5, {{2, -1}, {3, -1}}, N), N);
  TruncationPlan plan;
  plan.q_min = 0;
  plan.q_max = N;
  plan.note = "summands with n^2 > N start above q^N";
  return finish_report("rr.classical", {{"N", N}}, cmp, plan.to_json(), clock);
}

QSeries rr_a2_e1(int N) {
  LaurentQ sum;
  for (int n1 = 0; 1LL * n1 * n1 <= 2LL * N; ++n1) {
    for (int n2 = 0; 1LL * n1 * n1 + 1LL * n2 * n2 <= 2LL * N; ++n2) {
      const long long e = 1LL * n1 * n1 - 1LL * n1 * n2 + 1LL * n2 * n2;
      sum += term_through(e, 1, qpoch(n1) * qpoch(n2) * qpoch(n1 + n2), N);
    }
  }
  return QSeries(mul_truncated(qpoch_inf(N), sum, N), N);
}

VerifyReport verify_rr_a2(int N) {
  Stopwatch clock;
  Comparator cmp;
  const QSeries e1 = rr_a2_e1(N);
  LaurentQ e2;
  for (int n1 = 0; 1LL * n1 * n1 <= 2LL * N; ++n1) {
    for (int n2 = 0; n2 <= 2 * n1 && 1LL * n1 * n1 + 1LL * n2 * n2 <= 2LL * N; ++n2) {
      const long long e = 1LL * n1 * n1 - 1LL * n1 * n2 + 1LL * n2 * n2;
      e2 += term_through(e, qbinom(2 * n1, n2), qpoch(n1), N);
    }
  }
  const QSeries e3 = eta_quotient(7, {{1, -2}, {3, -1}, {4, -1}, {6, -2}}, N);
  cmp.qseries("E1 vs E2", e1, QSeries(e2, N), N);
  cmp.qseries("E2 vs E3", QSeries(e2, N), e3, N);
  cmp.qseries("E1 vs E3", e1, e3, N);
  TruncationPlan plan;
  plan.q_min = 0;
  plan.q_max = N;
  plan.note = "n1^2 - n1 n2 + n2^2 >= (n1^2 + n2^2)/2, so pairs with n1^2 + n2^2 > 2N start above q^N";
  return finish_report("rr.a2", {{"N", N}}, cmp, plan.to_json(), clock);
}

namespace {

/// Family left side through q^N.
LaurentQ family_lhs(int n, const std::string& variant, int N) {
  const auto ps = enumerate_by_norm(2LL * N, {.max_length = n - 1, .max_part = std::nullopt});
  LaurentQ sum;
  for (const auto& l : ps) {
    const long long nl = dot(l, l);
    const LaurentQ bl = b_lambda(l.conjugate());
    const int a = l.part(static_cast<std::size_t>(n - 1));
    for (const auto& mu : ps) {
      const long long nm = dot(mu, mu);
      if (nl + nm > 2LL * N) continue;
      const int b = mu.part(static_cast<std::size_t>(n - 1));
      long long e = nl + nm - dot(l, mu);
      LaurentQ num(1);
      LaurentQ den = bl * b_lambda(mu.conjugate()) * qpoch(a + b);
      if (variant == "3n-1") {
        e += 2LL * a * b;
      } else if (variant == "3n") {
        num = qpoch(a) * qpoch(b) * qbinom_base(a + b, a, 3);
        den *= qpoch(a + b);
      }
      sum += term_through(e, num, den, N);
    }
  }
  return sum.truncated_above(N);
}

void check_variant(const std::string& variant) {
  if (variant != "3n+1" && variant != "3n-1" && variant != "3n") {
    throw std::invalid_argument("unknown modulus variant '" + variant + "' (3n+1, 3n-1 or 3n)");
  }
}

}  // namespace

QSeries modulus_family_rhs(int n, const std::string& variant, int N) {
  check_variant(variant);
  if (n < 2) throw std::invalid_argument("modulus family needs n >= 2");
  std::vector<int> starts;
  int p = 0;
  if (variant == "3n+1") {
    p = 3 * n + 1;
    starts = {n, n, n + 1, 2 * n, 2 * n + 1, 2 * n + 1, 3 * n + 1, 3 * n + 1};
  } else if (variant == "3n-1") {
    p = 3 * n - 1;
    starts = {n - 1, n, n, 2 * n - 1, 2 * n - 1, 2 * n, 3 * n - 1, 3 * n - 1};
  } else {
    p = 3 * n;
    starts = {n, n, n, 2 * n, 2 * n, 2 * n, 3 * n, 3 * n};
  }
  QSeries prod(LaurentQ(1), N);
  for (int s : starts) prod *= qpoch_infinite_step(s, p, N);
  const QSeries inf = qpoch_infinite(1, 1, N);
  return prod * (inf * inf * inf).inverse(N);
}

VerifyReport verify_modulus_family(int n, const std::string& variant, int N) {
  check_variant(variant);
  Stopwatch clock;
  Comparator cmp;
  const QSeries lhs(family_lhs(n, variant, N), N);
  const QSeries rhs = modulus_family_rhs(n, variant, N);
  cmp.qseries("sum vs product", lhs, rhs, N);
  if (n == 2 && variant == "3n+1") {
    const QSeries inf = qpoch_infinite(1, 1, N);
    cmp.qseries("(q;q)_inf * sum vs modulus-7 E1", inf * lhs, rr_a2_e1(N), N);
    cmp.qseries("(q;q)_inf * product vs modulus-7 E3", inf * rhs,
                eta_quotient(7, {{1, -2}, {3, -1}, {4, -1}, {6, -2}}, N), N);
  }
  TruncationPlan plan;
  plan.q_min = 0;
  plan.q_max = N;
  plan.note = "<l,l> + <m,m> - <l,m> >= (<l,l> + <m,m>)/2 and the extra factors have nonnegative exponents";
  return finish_report("family." + variant, {{"n", n}, {"N", N}}, cmp, plan.to_json(), clock);
}

namespace {

/// The specialized theta sum over k1 + k2 + k3 = 0 through q^N, with p = 3n+1.
LaurentQ macdonald_theta(int n, int N, int& shells) {
  const int p = 3 * n + 1;
  LaurentQ sum;
  for (int B = 0;; ++B) {
    // On shell max|k_i| = B: sum k^2 >= 3B^2/2, |sum i k_i| <= 6B and each
    // factor exponent is >= -2pB.
    const long long lower = (9LL * p * B * B) / 4 - 6LL * B - 6LL * p * B;
    if (B > 0 && lower > N) {
      shells = B;
      break;
    }
    for (const auto& k : detail::zero_sum_triples(B)) {
      if (std::max({std::abs(k[0]), std::abs(k[1]), std::abs(k[2])}) != B) continue;
      const long long sq = 1LL * k[0] * k[0] + 1LL * k[1] * k[1] + 1LL * k[2] * k[2];
      const long long e = 3LL * p * sq / 2 - (1LL * k[0] + 2LL * k[1] + 3LL * k[2]);
      LaurentQ f = LaurentQ::q_power(static_cast<int>(e));
      for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
          f *= LaurentQ::one_minus_q_power(n * (j - i) + p * (k[static_cast<std::size_t>(j)] - k[static_cast<std::size_t>(i)]));
        }
      }
      sum += f;
    }
  }
  return sum.truncated_above(N);
}

}  // namespace

VerifyReport verify_vandermonde() {
  Stopwatch clock;
  Comparator cmp;
  MultiSeries lhs(3);
  for (const auto& w : detail::permutations3()) {
    Monomial m;
    for (int i = 0; i < 3; ++i) m.e[static_cast<std::size_t>(i)] = static_cast<std::int16_t>(i + 1 - w.w[static_cast<std::size_t>(i)]);
    lhs.add_term(m, w.sign);
  }
  MultiSeries rhs = MultiSeries::constant(3, 1);
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      Monomial m;
      m.e[static_cast<std::size_t>(i)] = -1;
      m.e[static_cast<std::size_t>(j)] = 1;
      rhs *= MultiSeries::constant(3, 1) - rhs.monomial_like(m, 1);
    }
  }
  cmp.series("coefficient", lhs, rhs, detail::var_names("x", 3));
  return finish_report("vandermonde.a2", Json::object(), cmp, {{"exact", "Laurent polynomial in x1, x2, x3"}}, clock);
}

VerifyReport verify_macdonald_a2(int N, int n) {
  if (n < 2) throw std::invalid_argument("macdonald.a2 needs n >= 2");
  Stopwatch clock;
  Comparator cmp;
  const int p = 3 * n + 1;
  int shells = 0;
  const LaurentQ theta = macdonald_theta(n, N, shells);
  QSeries prod = qpoch_infinite_step(p, p, N);
  prod *= qpoch_infinite_step(p, p, N);
  for (int d : {1, 1, 2}) {
    prod *= qpoch_infinite_step(n * d, p, N);
    prod *= qpoch_infinite_step(p - n * d, p, N);
  }
  cmp.qseries("theta sum vs product", QSeries(theta, N), prod, N);
  const QSeries inf = qpoch_infinite(1, 1, N);
  cmp.qseries("theta sum vs (q;q)^3 * bounded-length sum", QSeries(theta, N),
              inf * inf * inf * QSeries(family_lhs(n, "3n+1", N), N), N);
  cmp.absorb(verify_vandermonde());
  TruncationPlan plan;
  plan.q_min = 0;
  plan.q_max = N;
  plan.note = "shells max|k_i| = B are summed until (9p/4)B^2 - 6B - 6pB exceeds N; summed shells: " +
              std::to_string(shells);
  return finish_report("macdonald.a2", {{"N", N}, {"n", n}}, cmp, plan.to_json(), clock);
}

}  // namespace hlq
