#include <algorithm>
#include <numeric>

#include "hlq/identities.hpp"
#include "identities_common.hpp"

namespace hlq {

using detail::block;
using detail::concat;
using detail::var_names;

namespace {

std::vector<int> range_of(int first, int count) {
  std::vector<int> v(static_cast<std::size_t>(count));
  std::iota(v.begin(), v.end(), first);
  return v;
}

Json pid_bounds(int D, const std::string& note) {
  TruncationPlan plan;
  plan.x_degree = D;
  plan.q_min = -(D * D) / 4;
  plan.max_weights = {D, D};
  plan.note = note;
  return plan.to_json();
}

const char* kHomogeneous =
    "P_lambda is homogeneous of degree |lambda|, so every monomial of total degree <= D comes only from "
    "pairs with |lambda| + |mu| <= D; all such pairs are summed, hence every compared coefficient is final. "
    "<lambda',mu'> <= |lambda||mu| <= D^2/4 bounds the most negative q-power.";

}  // namespace

VerifyReport verify_main(int n, int m, int D) {
  Stopwatch clock;
  Comparator cmp;
  const int N = n + m;
  const auto x = block(N, 0, n, D);
  const auto y = block(N, n, m, D);
  const MultiSeries lhs = detail::pid_pair_sum(hl_P_table(x, D), hl_P_table(y, D));
  const MultiSeries one = x.one();
  const MultiSeries rhs = detail::geometric_product(one, range_of(0, N)) *
                          detail::pair_product(one, x.indices, y.indices);
  const auto names = concat(var_names("x", n), var_names("y", m));
  cmp.series("coefficient", lhs, rhs, names);
  return finish_report("pid.main", {{"n", n}, {"m", m}, {"D", D}}, cmp, pid_bounds(D, kHomogeneous), clock);
}

VerifyReport verify_npsum(int n, int D) {
  Stopwatch clock;
  Comparator cmp;
  const auto x = VarSet::first(n, D);
  MultiSeries lhs = x.one().zero_like();
  for (const auto& [l, v] : hl_P_table(x, D)) lhs += v.scaled(LaurentQ::q_power(static_cast<int>(n_stat(l))));
  const MultiSeries rhs = detail::geometric_product(x.one(), x.indices);
  cmp.series("coefficient", lhs, rhs, var_names("x", n));
  TruncationPlan plan;
  plan.x_degree = D;
  plan.q_min = 0;
  plan.max_weights = {D};
  plan.note = "homogeneity: degree-d terms come from |lambda| = d only";
  return finish_report("hl.npsum", {{"n", n}, {"D", D}}, cmp, plan.to_json(), clock);
}

VerifyReport verify_cor1(const Partition& nu, int n, int m, int D) {
  Stopwatch clock;
  Comparator cmp;
  const int N = n + m;
  const auto x = block(N, 0, n, D);
  const auto y = block(N, n, m, D);
  // P_{lambda/nu} has degree |lambda| - |nu|.
  const MultiSeries lhs = detail::pid_pair_sum(skew_P_table(nu, x, D + nu.weight()), hl_P_table(y, D));
  const MultiSeries one = x.one();
  MultiSeries ysum = one.zero_like();
  for (const auto& [l, v] : hl_P_table(y, D)) {
    ysum += v.scaled(LaurentQ::q_power(static_cast<int>(detail::pid_exponent(l, nu))));
  }
  const MultiSeries rhs = ysum * detail::geometric_product(one, x.indices) *
                          detail::pair_product(one, x.indices, y.indices);
  cmp.series("coefficient", lhs, rhs, concat(var_names("x", n), var_names("y", m)));
  return finish_report("cor1.pidskew", {{"nu", nu.to_string()}, {"n", n}, {"m", m}, {"D", D}}, cmp,
                       pid_bounds(D + nu.weight(), kHomogeneous), clock);
}

VerifyReport verify_cor2(const Partition& nu, const Partition& eta, int n, int m, int D) {
  Stopwatch clock;
  Comparator cmp;
  const int N = n + m;
  const auto x = block(N, 0, n, D);
  const auto y = block(N, n, m, D);
  const MultiSeries one = x.one();

  const MultiSeries lhs =
      detail::pid_pair_sum(skew_P_table(nu, x, D + nu.weight()), skew_P_table(eta, y, D + eta.weight()));

  MultiSeries sum = one.zero_like();
  for (const auto& [mu, qv] : skew_Q_down_table(eta, x)) {
    // Q_{eta/mu}(x/q): every x-variable carries q^{-1}.
    MultiSeries shifted = qv;
    for (int v : x.indices) shifted = shifted.var_scaled_by_q(v, -1);
    for (const auto& [l, pv] : skew_P_table(mu, y, D + mu.weight())) {
      sum += (shifted * pv).scaled(LaurentQ::q_power(static_cast<int>(detail::pid_exponent(l, nu))));
    }
  }
  const MultiSeries rhs = sum * detail::geometric_product(one, x.indices) *
                          detail::pair_product(one, x.indices, y.indices);
  cmp.series("coefficient", lhs, rhs, concat(var_names("x", n), var_names("y", m)));
  return finish_report("cor2.skew",
                       {{"nu", nu.to_string()}, {"eta", eta.to_string()}, {"n", n}, {"m", m}, {"D", D}}, cmp,
                       pid_bounds(D + std::max(nu.weight(), eta.weight()), kHomogeneous), clock);
}

VerifyReport verify_cor3(int j, int n, int D) {
  Stopwatch clock;
  Comparator cmp;
  const auto x = VarSet::first(n, D);
  const MultiSeries one = x.one();
  MultiSeries lhs = one.zero_like();
  for (const auto& [l, v] : hl_P_table(x, D)) {
    long long e = n_stat(l);
    for (int c = 1; c <= j; ++c) e -= l.column(c);
    lhs += v.scaled(LaurentQ::q_power(static_cast<int>(e)));
  }

  // Q_(k)(x) = [t^k] prod (1 - q x_i t)/(1 - x_i t), in a ring with t last.
  const int t = n;
  const MultiSeries one_t = MultiSeries::constant(n + 1, 1, 2 * D);
  MultiSeries gen = one_t;
  for (int i = 0; i < n; ++i) {
    const Monomial xt = Monomial::unit(i) * Monomial::unit(t);
    gen *= one_t - one_t.monomial_like(xt, LaurentQ::q_power(1));
    gen *= series_inverse(one_t - one_t.monomial_like(xt, 1));
  }
  const std::vector<int> back = range_of(0, n);
  MultiSeries linear = one;
  for (int k = 1; k <= j && k <= D; ++k) {
    const MultiSeries qk = gen.coefficient_of(t, k).embedded(n, back, D);
    cmp.series("Q_(" + std::to_string(k) + ") vs (1-q)P_(" + std::to_string(k) + ")", qk,
               hl_P(Partition{k}, x).scaled(LaurentQ::one_minus_q_power(1)), var_names("x", n));
    linear += qk.scaled(LaurentQ::q_power(-k));
  }
  const MultiSeries rhs = linear * detail::geometric_product(one, x.indices);
  cmp.series("coefficient", lhs, rhs, var_names("x", n));
  TruncationPlan plan;
  plan.x_degree = D;
  plan.q_min = -j * D;
  plan.max_weights = {D};
  plan.note = "homogeneity: degree-d terms come from |lambda| = d only";
  return finish_report("cor3.linear", {{"j", j}, {"n", n}, {"D", D}}, cmp, plan.to_json(), clock);
}

namespace {

RationalQ hall_lhs(int k, int j, int n) {
  RationalQ total;
  for (const auto& l : enumerate_partitions(k)) {
    if (l.largest() > n) continue;  // 1/(q;q)_{n - lambda_1} = 0
    long long e = dot(l, l);
    for (int i = 1; i <= j; ++i) e -= l.part(static_cast<std::size_t>(i));
    const LaurentQ num = LaurentQ::q_power(static_cast<int>(e)) * qpoch(n);
    total += RationalQ(num, qpoch(n - l.largest()) * b_lambda(l.conjugate()));
  }
  return total;
}

RationalQ hall_rhs(int k, int j, int n) {
  return RationalQ(qbinom(n + k - 1, k) - LaurentQ::one_minus_q_power(n) * qbinom(n + k - j - 1, k - j - 1));
}

}  // namespace

VerifyReport verify_hall(int k, int j, int n) {
  Stopwatch clock;
  Comparator cmp;
  cmp.rational_q("k=" + std::to_string(k) + " j=" + std::to_string(j) + " n=" + std::to_string(n),
                 hall_lhs(k, j, n), hall_rhs(k, j, n));
  Json bounds = {{"exact", "rational functions in q"}};
  return finish_report("hall.finite", {{"k", k}, {"j", j}, {"n", n}}, cmp, bounds, clock);
}

VerifyReport verify_hall_range(int k_max, int n_max) {
  Stopwatch clock;
  Comparator cmp;
  for (int k = 0; k <= k_max; ++k) {
    for (int j = 0; j <= k; ++j) {
      for (int n = 0; n <= n_max; ++n) {
        cmp.rational_q("k=" + std::to_string(k) + " j=" + std::to_string(j) + " n=" + std::to_string(n),
                       hall_lhs(k, j, n), hall_rhs(k, j, n));
      }
    }
  }
  Json bounds = {{"k_max", k_max}, {"n_max", n_max}, {"exact", "rational functions in q"}};
  return finish_report("hall.finite", {{"k_max", k_max}, {"n_max", n_max}}, cmp, bounds, clock);
}

VerifyReport verify_hall_limit(int k_max) {
  Stopwatch clock;
  Comparator cmp;
  for (int k = 0; k <= k_max; ++k) {
    for (int j = 0; j <= k; ++j) {
      RationalQ lhs;
      for (const auto& l : enumerate_partitions(k)) {
        long long e = dot(l, l);
        for (int i = 1; i <= j; ++i) e -= l.part(static_cast<std::size_t>(i));
        lhs += RationalQ(LaurentQ::q_power(static_cast<int>(e)), b_lambda(l.conjugate()));
      }
      const RationalQ rhs = qpoch_reciprocal(k) - qpoch_reciprocal(k - j - 1);
      cmp.rational_q("k=" + std::to_string(k) + " j=" + std::to_string(j), lhs, rhs);
    }
  }
  Json bounds = {{"k_max", k_max}, {"exact", "rational functions in q"}};
  return finish_report("hall.limit", {{"k_max", k_max}}, cmp, bounds, clock);
}

VerifyReport verify_cauchy(int n, int m, int D) {
  Stopwatch clock;
  Comparator cmp;
  const int N = n + m;
  const auto x = block(N, 0, n, D);
  const auto y = block(N, n, m, D);
  const auto ty = hl_P_table(y, D / 2);
  MultiSeries lhs = x.one().zero_like();
  for (const auto& [l, pv] : hl_P_table(x, D / 2)) {
    auto it = ty.find(l);
    if (it == ty.end()) continue;
    lhs += pv * it->second.scaled(b_lambda(l));
  }
  const MultiSeries rhs = detail::cauchy_product(x.one(), x.indices, y.indices);
  cmp.series("coefficient", lhs, rhs, concat(var_names("x", n), var_names("y", m)));
  TruncationPlan plan;
  plan.x_degree = D;
  plan.q_min = 0;
  plan.max_weights = {D / 2};
  plan.note = "P_lambda(x)Q_lambda(y) has degree 2|lambda|";
  return finish_report("hl.cauchy", {{"n", n}, {"m", m}, {"D", D}}, cmp, plan.to_json(), clock);
}

VerifyReport verify_skew_cauchy(const Partition& mu, const Partition& nu, int n, int m, int D) {
  Stopwatch clock;
  Comparator cmp;
  const int N = n + m;
  const auto x = block(N, 0, n, D);
  const auto y = block(N, n, m, D);
  const MultiSeries one = x.one();
  // |lambda - mu| + |lambda - nu| <= D.
  const int max_w = (D + mu.weight() + nu.weight()) / 2;
  MultiSeries lhs = one.zero_like();
  for (const auto& [l, pv] : skew_P_table(mu, x, max_w)) {
    if (!l.contains(nu)) continue;
    const auto down = skew_Q_down_table(l, y);
    auto it = down.find(nu);
    if (it != down.end()) lhs += pv * it->second;
  }
  MultiSeries sum = one.zero_like();
  const auto qdown = skew_Q_down_table(mu, y);
  for (const auto& [l, qv] : qdown) {
    if (!nu.contains(l)) continue;
    sum += skew_P(nu, l, x) * qv;
  }
  const MultiSeries rhs = sum * detail::cauchy_product(one, x.indices, y.indices);
  cmp.series("coefficient", lhs, rhs, concat(var_names("x", n), var_names("y", m)));
  TruncationPlan plan;
  plan.x_degree = D;
  plan.q_min = 0;
  plan.max_weights = {max_w};
  plan.note = "left terms have degree |lambda-mu| + |lambda-nu|, so |lambda| <= (D + |mu| + |nu|)/2";
  return finish_report("hl.scauchy", {{"mu", mu.to_string()}, {"nu", nu.to_string()}, {"n", n}, {"m", m}, {"D", D}},
                       cmp, plan.to_json(), clock);
}

VerifyReport verify_sqspec(const Partition& mu, int n, int D) {
  Stopwatch clock;
  Comparator cmp;
  const auto x = VarSet::first(n, D);
  MultiSeries lhs = x.one().zero_like();
  for (const auto& [l, v] : skew_P_table(mu, x, D + mu.weight())) {
    lhs += v.scaled(LaurentQ::q_power(static_cast<int>(n_stat(l))));
  }
  const MultiSeries rhs =
      detail::geometric_product(x.one(), x.indices).scaled(LaurentQ::q_power(static_cast<int>(n_stat(mu))));
  cmp.series("coefficient", lhs, rhs, var_names("x", n));
  TruncationPlan plan;
  plan.x_degree = D;
  plan.q_min = 0;
  plan.max_weights = {D + mu.weight()};
  plan.note = "P_{lambda/mu} has degree |lambda| - |mu|";
  return finish_report("hl.sqspec", {{"mu", mu.to_string()}, {"n", n}, {"D", D}}, cmp, plan.to_json(), clock);
}

VerifyReport verify_rec(int n, int m, int D) {
  Stopwatch clock;
  Comparator cmp;
  const int N = n + m + 1;
  const int z = n + m;
  const auto x = block(N, 0, n, D);
  const auto y = block(N, n, m, D);
  const auto yz = block(N, n, m + 1, D);
  const MultiSeries one = x.one();
  const MultiSeries lhs = detail::pid_pair_sum(hl_P_table(x, D), hl_P_table(yz, D));
  const MultiSeries base = detail::pid_pair_sum(hl_P_table(x, D), hl_P_table(y, D));
  const MultiSeries rhs =
      base * detail::geometric_product(one, {z}) * detail::pair_product(one, x.indices, {z});
  cmp.series("coefficient", lhs, rhs, concat(concat(var_names("x", n), var_names("y", m)), {"z"}));
  return finish_report("proof.rec", {{"n", n}, {"m", m}, {"D", D}}, cmp, pid_bounds(D, kHomogeneous), clock);
}

MultiSeries ansum_series(const std::vector<int>& vars_per_level, int D) {
  const int levels = static_cast<int>(vars_per_level.size());
  const int N = std::accumulate(vars_per_level.begin(), vars_per_level.end(), 0);
  std::vector<PartitionTable> tables;
  int first = 0;
  for (int v : vars_per_level) {
    tables.push_back(hl_P_table(block(N, first, v, D), D));
    first += v;
  }
  // Fold from the last level: acc[l] = sum over deeper levels given lambda^(i) = l.
  std::map<Partition, MultiSeries> acc{{Partition(), MultiSeries::constant(N, 1, D)}};
  for (int i = levels - 1; i >= 0; --i) {
    std::map<Partition, MultiSeries> next;
    for (const auto& [l, pv] : tables[static_cast<std::size_t>(i)]) {
      MultiSeries s = pv.zero_like();
      for (const auto& [below, av] : acc) {
        const long long e = n_stat(l) - dot(l.conjugate(), below.conjugate());
        s += av.scaled(LaurentQ::q_power(static_cast<int>(e)));
      }
      next.emplace(l, pv * s);
    }
    acc.swap(next);
  }
  MultiSeries total = MultiSeries::constant(N, 0, D);
  for (const auto& [l, v] : acc) total += v;
  return total;
}

}  // namespace hlq
