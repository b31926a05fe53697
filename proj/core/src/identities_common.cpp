#include "identities_common.hpp"

#include <cstdlib>

namespace hlq::detail {

MultiSeries pid_pair_sum(const PartitionTable& x, const PartitionTable& y) {
  MultiSeries total;
  bool first = true;
  for (const auto& [l, xv] : x) {
    for (const auto& [m, yv] : y) {
      MultiSeries term = (xv * yv).scaled(LaurentQ::q_power(static_cast<int>(pid_exponent(l, m))));
      if (first) {
        total = term.zero_like();
        first = false;
      }
      total += term;
    }
  }
  return total;
}

MultiSeries geometric_product(const MultiSeries& one, const std::vector<int>& vars) {
  MultiSeries r = one;
  for (int v : vars) r *= series_inverse(one - MultiSeries(one).monomial_like(Monomial::unit(v), 1));
  return r;
}

MultiSeries pair_product(const MultiSeries& one, const std::vector<int>& xs, const std::vector<int>& ys) {
  MultiSeries r = one;
  for (int i : xs) {
    for (int j : ys) {
      const Monomial m = Monomial::unit(i) * Monomial::unit(j);
      r *= one - one.monomial_like(m, 1);
      r *= series_inverse(one - one.monomial_like(m, LaurentQ::q_power(-1)));
    }
  }
  return r;
}

MultiSeries cauchy_product(const MultiSeries& one, const std::vector<int>& xs, const std::vector<int>& ys) {
  MultiSeries r = one;
  for (int i : xs) {
    for (int j : ys) {
      const Monomial m = Monomial::unit(i) * Monomial::unit(j);
      r *= one - one.monomial_like(m, LaurentQ::q_power(1));
      r *= series_inverse(one - one.monomial_like(m, 1));
    }
  }
  return r;
}

std::vector<Shift3> zero_sum_triples(int bound) {
  std::vector<Shift3> out;
  for (int a = -bound; a <= bound; ++a) {
    for (int b = -bound; b <= bound; ++b) {
      const int c = -a - b;
      if (std::abs(c) <= bound) out.push_back({a, b, c});
    }
  }
  return out;
}

const std::vector<Perm3>& permutations3() {
  static const std::vector<Perm3> perms{
      {{1, 2, 3}, 1}, {{1, 3, 2}, -1}, {{2, 1, 3}, -1}, {{2, 3, 1}, 1}, {{3, 1, 2}, 1}, {{3, 2, 1}, -1},
  };
  return perms;
}

}  // namespace hlq::detail
