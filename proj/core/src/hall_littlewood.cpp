#include "hlq/hall_littlewood.hpp"

#include <algorithm>
#include <stdexcept>

#include "hlq/errors.hpp"
#include "hlq/evaluate.hpp"
#include "hlq/pochhammer.hpp"

namespace hlq {

namespace {

std::vector<int> strip_columns(const Partition& lambda, const Partition& mu) {
  if (!is_horizontal_strip(lambda, mu)) {
    throw std::invalid_argument(lambda.to_string() + " / " + mu.to_string() + " is not a horizontal strip");
  }
  // theta'_j for j = 1..lambda_1 + 1 (index 0 unused).
  std::vector<int> theta(static_cast<std::size_t>(lambda.largest() + 2), 0);
  for (int j = 1; j <= lambda.largest() + 1; ++j) {
    theta[static_cast<std::size_t>(j)] = lambda.column(j) - mu.column(j);
  }
  return theta;
}

void add_scaled(MultiSeries& target, const MultiSeries& source, const Monomial& mono, const LaurentQ& c) {
  for (const auto& [m, v] : source.terms()) target.add_term(m * mono, v * c);
}

MultiSeries& slot(PartitionTable& table, const Partition& key, const VarSet& vars) {
  auto it = table.find(key);
  if (it == table.end()) {
    it = table.emplace(key, MultiSeries(vars.num_vars, vars.cutoff, vars.var_caps)).first;
  }
  return it->second;
}

void drop_zeros(PartitionTable& table) {
  for (auto it = table.begin(); it != table.end();) it = it->second.is_zero() ? table.erase(it) : std::next(it);
}

}  // namespace

LaurentQ b_lambda(const Partition& lambda) {
  LaurentQ b(1);
  for (int i = 1; i <= lambda.largest(); ++i) b *= qpoch(multiplicity(lambda, i));
  return b;
}

LaurentQ psi_coeff(const Partition& lambda, const Partition& mu) {
  const auto theta = strip_columns(lambda, mu);
  LaurentQ r(1);
  for (int j = 1; j + 1 < static_cast<int>(theta.size()); ++j) {
    if (theta[static_cast<std::size_t>(j)] == 0 && theta[static_cast<std::size_t>(j + 1)] == 1) {
      r *= LaurentQ::one_minus_q_power(multiplicity(mu, j));
    }
  }
  return r;
}

LaurentQ phi_coeff(const Partition& lambda, const Partition& mu) {
  const auto theta = strip_columns(lambda, mu);
  LaurentQ r(1);
  for (int i = 1; i + 1 < static_cast<int>(theta.size()); ++i) {
    if (theta[static_cast<std::size_t>(i)] == 1 && theta[static_cast<std::size_t>(i + 1)] == 0) {
      r *= LaurentQ::one_minus_q_power(multiplicity(lambda, i));
    }
  }
  return r;
}

SkewTerm skew_P_single(const Partition& lambda, const Partition& mu) {
  if (!is_horizontal_strip(lambda, mu)) return {};
  return {true, psi_coeff(lambda, mu), lambda.weight() - mu.weight()};
}

SkewTerm skew_Q_single(const Partition& lambda, const Partition& mu) {
  if (!is_horizontal_strip(lambda, mu)) return {};
  return {true, phi_coeff(lambda, mu), lambda.weight() - mu.weight()};
}

VarSet VarSet::first(int n, int cutoff) {
  VarSet v;
  v.num_vars = n;
  v.cutoff = cutoff;
  for (int i = 0; i < n; ++i) v.indices.push_back(i);
  return v;
}

MultiSeries VarSet::one() const { return MultiSeries::constant(num_vars, 1, cutoff, var_caps); }

PartitionTable skew_P_table(const Partition& mu, const VarSet& vars, int max_weight) {
  PartitionTable table;
  if (mu.weight() > max_weight) return table;
  table.emplace(mu, vars.one());
  for (int var : vars.indices) {
    PartitionTable next;
    for (const auto& [nu, value] : table) {
      for (int b = 0; nu.weight() + b <= max_weight; ++b) {
        if (vars.cutoff != kUnbounded && b > vars.cutoff) break;
        const Monomial mono = Monomial::unit(var, b);
        for (const auto& lambda : strips_over(nu, b)) {
          add_scaled(slot(next, lambda, vars), value, mono, psi_coeff(lambda, nu));
        }
      }
    }
    drop_zeros(next);
    table.swap(next);
  }
  return table;
}

PartitionTable hl_P_table(const VarSet& vars, int max_weight) { return skew_P_table(Partition(), vars, max_weight); }

PartitionTable skew_Q_down_table(const Partition& lambda, const VarSet& vars) {
  PartitionTable table;
  table.emplace(lambda, vars.one());
  for (int var : vars.indices) {
    PartitionTable next;
    for (const auto& [kappa, value] : table) {
      for (const auto& nu : strips_under(kappa)) {
        const Monomial mono = Monomial::unit(var, kappa.weight() - nu.weight());
        add_scaled(slot(next, nu, vars), value, mono, phi_coeff(kappa, nu));
      }
    }
    drop_zeros(next);
    table.swap(next);
  }
  return table;
}

MultiSeries skew_P(const Partition& lambda, const Partition& mu, const VarSet& vars) {
  MultiSeries zero(vars.num_vars, vars.cutoff, vars.var_caps);
  if (!lambda.contains(mu)) return zero;
  // Only chains ending inside lambda matter; prune by containment.
  PartitionTable table;
  table.emplace(mu, vars.one());
  for (int var : vars.indices) {
    PartitionTable next;
    for (const auto& [nu, value] : table) {
      for (int b = 0; nu.weight() + b <= lambda.weight(); ++b) {
        const Monomial mono = Monomial::unit(var, b);
        for (const auto& kappa : strips_over(nu, b)) {
          if (!lambda.contains(kappa)) continue;
          add_scaled(slot(next, kappa, vars), value, mono, psi_coeff(kappa, nu));
        }
      }
    }
    drop_zeros(next);
    table.swap(next);
  }
  auto it = table.find(lambda);
  return it == table.end() ? zero : it->second;
}

MultiSeries hl_P(const Partition& lambda, const VarSet& vars) { return skew_P(lambda, Partition(), vars); }

MultiSeries hl_P(const Partition& lambda, int n, int cutoff) { return hl_P(lambda, VarSet::first(n, cutoff)); }

MultiSeries hl_Q(const Partition& lambda, int n, int cutoff) { return hl_P(lambda, n, cutoff).scaled(b_lambda(lambda)); }

MultiSeries divide_by_difference(const MultiSeries& f, int a, int b) {
  MultiSeries rest = f;
  MultiSeries quotient = f.zero_like();
  while (!rest.is_zero()) {
    // Peel off the term of largest x_a-degree.
    auto best = rest.terms().begin();
    for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it) {
      if (it->first[a] > best->first[a]) best = it;
    }
    const Monomial m = best->first;
    const LaurentQ c = best->second;
    if (m[a] <= 0) throw NotExact("symmetrization did not cancel to a polynomial");
    Monomial down = m;
    down.e[static_cast<std::size_t>(a)] = static_cast<std::int16_t>(m[a] - 1);
    quotient.add_term(down, c);
    rest.add_term(m, -c);
    Monomial swapped = down;
    swapped.e[static_cast<std::size_t>(b)] = static_cast<std::int16_t>(down[b] + 1);
    rest.add_term(swapped, c);
  }
  return quotient;
}

MultiSeries hl_P_symmetrization(const Partition& lambda, int n) {
  MultiSeries total(n);
  if (lambda.length() > n) return total;
  std::vector<int> alpha(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < lambda.length(); ++i) alpha[static_cast<std::size_t>(i)] = lambda.part(static_cast<std::size_t>(i + 1));
  std::sort(alpha.begin(), alpha.end());
  const LaurentQ q = LaurentQ::q_power(1);
  do {
    Monomial m;
    for (int i = 0; i < n; ++i) m.e[static_cast<std::size_t>(i)] = static_cast<std::int16_t>(alpha[static_cast<std::size_t>(i)]);
    MultiSeries term = MultiSeries(n).monomial_like(m, 1);
    // Vandermonde-cleared factor for every pair i < j.
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const int ai = alpha[static_cast<std::size_t>(i)];
        const int aj = alpha[static_cast<std::size_t>(j)];
        MultiSeries g(n);
        if (ai > aj) {
          g.add_term(Monomial::unit(i), 1);
          g.add_term(Monomial::unit(j), -q);
        } else if (ai < aj) {
          g.add_term(Monomial::unit(j), -1);
          g.add_term(Monomial::unit(i), q);
        } else {
          g.add_term(Monomial::unit(i), 1);
          g.add_term(Monomial::unit(j), -1);
        }
        term = term * g;
      }
    }
    total += term;
  } while (std::next_permutation(alpha.begin(), alpha.end()));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) total = divide_by_difference(total, i, j);
  }
  return total;
}

RationalQ spec_principal_P(const Partition& lambda, int n, int z_shift) {
  if (lambda.length() > n) return RationalQ(0);
  const LaurentQ num = LaurentQ::q_power(static_cast<int>(n_stat(lambda)) + z_shift * lambda.weight()) * qpoch(n);
  return RationalQ(num, qpoch(n - lambda.length()) * b_lambda(lambda));
}

LaurentQ spec_principal_Q_infinite(const Partition& lambda) { return LaurentQ::q_power(static_cast<int>(n_stat(lambda))); }

std::map<Partition, Rational> hl_P_values(const std::vector<Rational>& x, const Rational& q, int max_part) {
  std::map<Partition, Rational> table{{Partition(), Rational(1)}};
  const auto n = static_cast<int>(x.size());
  for (int v = 0; v < n; ++v) {
    std::map<Partition, Rational> next;
    std::vector<Rational> powers{1};
    for (int b = 1; b <= max_part; ++b) powers.push_back(powers.back() * x[static_cast<std::size_t>(v)]);
    for (const auto& [nu, value] : table) {
      for (int b = 0; b <= max_part; ++b) {
        for (const auto& lambda : strips_over(nu, b)) {
          if (lambda.largest() > max_part) continue;
          next[lambda] += value * psi_coeff(lambda, nu).evaluate(q) * powers[static_cast<std::size_t>(b)];
        }
      }
    }
    table.swap(next);
  }
  return table;
}

}  // namespace hlq
