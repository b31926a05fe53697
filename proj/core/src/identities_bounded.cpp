#include <functional>
#include <stdexcept>

#include "hlq/errors.hpp"
#include "hlq/identities.hpp"
#include "hlq/macdonald.hpp"
#include "identities_common.hpp"

namespace hlq {

namespace {

using Sides = std::pair<Rational, Rational>;

void sample(Comparator& cmp, const std::string& label, const std::vector<std::string>& names, std::uint64_t seed,
            int points, const std::function<Sides(const RationalPoint&)>& eval) {
  PointSampler sampler(seed);
  int done = 0;
  int attempts = 0;
  while (done < points) {
    if (++attempts > 50 * points + 100) throw Error("too many degenerate evaluation points");
    const RationalPoint pt = sampler.sample(names);
    try {
      const auto [l, r] = eval(pt);
      cmp.value(label + " at " + pt.to_string(), l, r);
      ++done;
    } catch (const DenominatorZero&) {
    }
  }
}

long long binom2(long long r) { return r * (r - 1) / 2; }

}  // namespace

VerifyReport verify_npsom2(int n, int D, const std::string& variant) {
  if (variant != "q0" && variant != "full") throw std::invalid_argument("npsom2 variant must be q0 or full");
  Stopwatch clock;
  Comparator cmp;
  Json bounds = {{"variant", variant}};
  if (variant == "q0") {
    for (const auto& l : enumerate_up_to(D)) {
      cmp.laurent("c'(0,t) lambda=" + l.to_string(), macdonald_cprime(l).at_q_zero(), LaurentQ(1), kExact, true);
    }
    cmp.absorb(verify_npsum(n, D));
    bounds["x_degree"] = D;
  } else {
    bounds["note"] = "Macdonald P is not implemented; only the q = 0 reduction is checked";
  }
  return finish_report("s6.npsom2", {{"n", n}, {"D", D}, {"variant", variant}}, cmp, bounds, clock);
}

namespace {

BiRational qt_lhs(const Partition& mu, int j) {
  BiRational s = BiPoly();
  for (const auto& nu : strips_over(mu, j)) {
    BiRational t(BiPoly::monomial(1, 0, static_cast<int>(n_stat(nu))), macdonald_cprime(nu));
    s += t * macdonald_psi(nu, mu);
  }
  return s;
}

BiRational qt_rhs(const Partition& mu, int j) {
  BiPoly den = macdonald_cprime(mu);
  for (int i = 1; i <= j; ++i) den *= BiPoly::one_minus(i, 0);
  return {BiPoly::monomial(1, 0, static_cast<int>(n_stat(mu))), den};
}

void psiqt_into(Comparator& cmp, const Partition& mu, int j, std::uint64_t seed, int points) {
  const std::string tag = "mu=" + mu.to_string() + " z^" + std::to_string(j);
  const BiRational lhs = qt_lhs(mu, j);
  const BiRational rhs = qt_rhs(mu, j);
  sample(cmp, tag, {"q", "t"}, seed, points, [&](const RationalPoint& pt) {
    return Sides{lhs.evaluate(pt["q"], pt["t"]), rhs.evaluate(pt["q"], pt["t"])};
  });
  if (mu.weight() <= 2) {
    const bool same = lhs == rhs;
    cmp.integer(tag + " as rational functions", same ? 1 : 0, 1);
  }
  // q = 0: psi(q,t) becomes psi(t).
  for (const auto& nu : strips_over(mu, j)) {
    const auto [num, den] = macdonald_psi(nu, mu).at_q_zero();
    cmp.laurent(tag + " psi(0,t) nu=" + nu.to_string(), num, psi_coeff(nu, mu) * den);
  }
}

}  // namespace

VerifyReport verify_psiqt(const Partition& mu, int j, std::uint64_t seed, int points) {
  Stopwatch clock;
  Comparator cmp;
  psiqt_into(cmp, mu, j, seed, points);
  return finish_report("s6.psiqt", {{"mu", mu.to_string()}, {"j", j}, {"points", points}}, cmp,
                       {{"strategy", "random_points"}, {"points", points}}, clock, seed);
}

VerifyReport verify_psiqt_range(int max_weight, int max_j, std::uint64_t seed, int points) {
  Stopwatch clock;
  Comparator cmp;
  for (const auto& mu : enumerate_up_to(max_weight)) {
    for (int j = 0; j <= max_j; ++j) psiqt_into(cmp, mu, j, seed, points);
    // phi(q,t) is used nowhere else; its q = 0 value is pinned here.
    for (const auto& nu : strips_under(mu)) {
      const auto [num, den] = macdonald_phi(mu, nu).at_q_zero();
      cmp.laurent("phi(0,t) " + mu.to_string() + "/" + nu.to_string(), num, phi_coeff(mu, nu) * den);
    }
  }
  return finish_report("s6.psiqt", {{"max_weight", max_weight}, {"max_j", max_j}, {"points", points}}, cmp,
                       {{"strategy", "random_points"}, {"points", points}, {"z_degree", max_j}}, clock, seed);
}

namespace {

/// q^{|l|+n(l)}/b_l(q), the value of P_l(q, q^2, ...), through q^prec.
QSeries principal_infinite(const Partition& l, int prec) {
  QSeries s(1);
  for (int i = 1; i <= l.largest(); ++i) {
    const int m = multiplicity(l, i);
    if (m > 0) s *= qpoch_reciprocal_series(m, prec);
  }
  return s.shifted(l.weight() + static_cast<int>(n_stat(l)));
}

long long chain_exponent(const std::vector<Partition>& ls) {
  long long e = 0;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    e += n_stat(ls[i]);
    if (i + 1 < ls.size()) e -= dot(ls[i].conjugate(), ls[i + 1].conjugate());
  }
  return e;
}

/// Monomial in the given variables, each to the power `power`.
Monomial product_of(const std::vector<int>& vars, int power = 1) {
  Monomial m;
  for (int v : vars) m = m * Monomial::unit(v, power);
  return m;
}

MultiSeries inverse_poch_inf(const MultiSeries& one, const Monomial& m, int N) {
  return series_inverse(qpoch_infinite_at(one.monomial_like(m, LaurentQ::q_power(1)), N));
}

/// 1/(1 - c m).
MultiSeries inverse_linear(const MultiSeries& one, const Monomial& m, const LaurentQ& c) {
  return series_inverse(one - one.monomial_like(m, c));
}

/// Chained sum where some levels are generic alphabets (a table) and the
/// rest are principal specializations a^{|l|} P_l(q, q^2, ...).
struct Level {
  const PartitionTable* table = nullptr;
  int var = -1;
};

MultiSeries chained_sum(const MultiSeries& one, const std::vector<Level>& levels, int D, int N) {
  MultiSeries total = one.zero_like();
  std::vector<Partition> chosen;
  std::function<void(std::size_t, int, MultiSeries, int)> walk = [&](std::size_t i, int left, MultiSeries acc,
                                                                       int shift) {
    if (i == levels.size()) {
      const long long e = chain_exponent(chosen);
      MultiSeries term = acc;
      QSeries scal = QSeries(LaurentQ::q_power(static_cast<int>(e)));
      const int prec = N - static_cast<int>(e) - shift;
      for (std::size_t j = 0; j < levels.size(); ++j) {
        if (levels[j].table == nullptr) scal *= principal_infinite(chosen[j], std::max(prec, 0));
      }
      total += term.scaled(scal);
      return;
    }
    const Level& L = levels[i];
    if (L.table != nullptr) {
      for (const auto& [l, v] : *L.table) {
        if (l.weight() > left) continue;
        chosen.push_back(l);
        walk(i + 1, left - l.weight(), acc * v, shift);
        chosen.pop_back();
      }
    } else {
      for (const auto& l : enumerate_up_to(left)) {
        chosen.push_back(l);
        walk(i + 1, left - l.weight(), acc * one.monomial_like(Monomial::unit(L.var, l.weight()), 1),
             shift + l.weight() + static_cast<int>(n_stat(l)));
        chosen.pop_back();
      }
    }
  };
  walk(0, D, one, 0);
  return total;
}

}  // namespace

VerifyReport verify_an_extension(int rank, int D, int N) {
  if (rank < 2 || rank > 4) throw std::invalid_argument("an_extension: rank must be 2..4");
  Stopwatch clock;
  Comparator cmp;
  const int n = rank;
  // x1 x2 | a_2 .. a_{n-1} | y1 y2
  const int nv = n + 2;
  auto a = [&](int i) { return i; };  // a_i sits at index i for 2 <= i <= n-1
  const std::vector<int> xs{0, 1};
  const std::vector<int> ys{n, n + 1};
  const auto xv = detail::block(nv, 0, 2, D);
  const auto yv = detail::block(nv, n, 2, D);
  const MultiSeries one = xv.one();
  const PartitionTable tx = hl_P_table(xv, D);
  const PartitionTable ty = hl_P_table(yv, D);
  std::vector<Level> levels{{&tx, -1}};
  for (int i = 2; i <= n - 1; ++i) levels.push_back({nullptr, a(i)});
  levels.push_back({&ty, -1});
  const MultiSeries lhs = chained_sum(one, levels, D, N);

  const int Nr = N + D;
  MultiSeries rhs = one;
  for (int i = 2; i <= n - 1; ++i) {
    for (int j = i; j <= n - 1; ++j) {
      std::vector<int> root;
      for (int l = i; l <= j; ++l) root.push_back(a(l));
      rhs *= inverse_poch_inf(one, product_of(root), Nr);
    }
  }
  for (int j = 1; j <= n - 1; ++j) {
    std::vector<int> left;
    for (int l = 2; l <= j; ++l) left.push_back(a(l));
    std::vector<int> right;
    for (int l = n - j + 1; l <= n - 1; ++l) right.push_back(a(l));
    for (int x : xs) rhs *= inverse_linear(one, product_of(left) * Monomial::unit(x), 1);
    for (int y : ys) rhs *= inverse_linear(one, product_of(right) * Monomial::unit(y), 1);
  }
  std::vector<int> middle;
  for (int l = 2; l <= n - 1; ++l) middle.push_back(a(l));
  for (int x : xs) {
    for (int y : ys) {
      const Monomial m = product_of(middle) * Monomial::unit(x) * Monomial::unit(y);
      rhs *= one - one.monomial_like(m, 1);
      rhs *= inverse_linear(one, m, LaurentQ::q_power(-1));
    }
  }
  auto names = detail::concat({"x1", "x2"}, detail::var_names("a", n - 2, 2));
  names = detail::concat(names, {"y1", "y2"});
  cmp.series("coefficient", lhs, rhs, names, N);
  TruncationPlan plan;
  plan.x_degree = D;
  plan.q_max = N;
  plan.note = "total degree in x, y and a_i; homogeneous in the partition weights";
  return finish_report("s6.an_extension", {{"rank", rank}, {"D", D}, {"N", N}}, cmp, plan.to_json(), clock);
}

VerifyReport verify_a3_isolated(int D, int N) {
  Stopwatch clock;
  Comparator cmp;
  // a, b, x1, x2
  const int nv = 4;
  const auto xv = detail::block(nv, 2, 2, D);
  const MultiSeries one = xv.one();
  const PartitionTable tx = hl_P_table(xv, D);
  const MultiSeries lhs = chained_sum(one, {{nullptr, 0}, {&tx, -1}, {nullptr, 1}}, D, N);

  const int Nr = N + D;
  MultiSeries rhs = inverse_poch_inf(one, Monomial::unit(0), Nr) * inverse_poch_inf(one, Monomial::unit(1), Nr);
  const Monomial ab = Monomial::unit(0) * Monomial::unit(1);
  for (int x = 2; x <= 3; ++x) {
    const Monomial X = Monomial::unit(x);
    rhs *= one - one.monomial_like(ab * X * X, 1);
    rhs *= inverse_linear(one, X, 1);
    rhs *= inverse_linear(one, Monomial::unit(0) * X, 1);
    rhs *= inverse_linear(one, Monomial::unit(1) * X, 1);
    rhs *= inverse_linear(one, ab * X, 1);
  }
  const Monomial xx = ab * Monomial::unit(2) * Monomial::unit(3);
  rhs *= one - one.monomial_like(xx, 1);
  rhs *= inverse_linear(one, xx, LaurentQ::q_power(-1));
  cmp.series("coefficient", lhs, rhs, std::vector<std::string>{"a", "b", "x1", "x2"}, N);
  TruncationPlan plan;
  plan.x_degree = D;
  plan.q_max = N;
  return finish_report("s6.a3_isolated", {{"D", D}, {"N", N}}, cmp, plan.to_json(), clock);
}

namespace {

/// prod_{i<j} (1 - q x_i x_j)/(1 - x_i x_j) at a point.
Rational pair_factor(const std::vector<Rational>& x, const Rational& q) {
  Rational r = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) r *= checked_div(1 - q * x[i] * x[j], 1 - x[i] * x[j]);
  }
  return r;
}

Rational big_phi(const std::vector<Rational>& x, const Rational& q) {
  Rational r = pair_factor(x, q);
  for (const auto& v : x) r *= checked_div(1, 1 - v);
  return r;
}

Rational big_psi(const std::vector<Rational>& x, const Rational& q) {
  Rational r = pair_factor(x, q);
  for (const auto& v : x) r *= checked_div(1, 1 - v * v);
  return r;
}

std::vector<Rational> point_x(const RationalPoint& pt, int n) {
  std::vector<Rational> x;
  for (int i = 1; i <= n; ++i) x.push_back(pt["x" + std::to_string(i)]);
  return x;
}

/// Sum over sign vectors eps of F(x^eps) * prod x_i^{power(eps_i)}.
template <class F>
Rational sign_sum(const std::vector<Rational>& x, const Rational& q, int k, int flipped_power, F&& f) {
  const int n = static_cast<int>(x.size());
  Rational total = 0;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<Rational> xe = x;
    Rational mono = 1;
    for (int i = 0; i < n; ++i) {
      if (mask & (1 << i)) {
        xe[static_cast<std::size_t>(i)] = checked_div(1, x[static_cast<std::size_t>(i)]);
        mono *= pow(x[static_cast<std::size_t>(i)], flipped_power);
      }
    }
    total += f(xe, q) * pow(mono, k);
  }
  return total;
}

bool all_even(const Partition& l) {
  for (int p : l.parts()) {
    if (p % 2 != 0) return false;
  }
  return true;
}

}  // namespace

VerifyReport verify_stem(int n, int k_max, std::uint64_t seed, int points) {
  if (n < 1 || n > 4) throw std::invalid_argument("stem: n must be 1..4");
  Stopwatch clock;
  Comparator cmp;
  auto names = detail::var_names("x", n);
  names.emplace_back("q");
  for (int k = 0; k <= k_max; ++k) {
    const std::string tag = "u^" + std::to_string(k);
    sample(cmp, "even parts " + tag, names, seed + static_cast<std::uint64_t>(k), points, [&](const RationalPoint& pt) {
      const auto x = point_x(pt, n);
      Rational l = 0;
      for (const auto& [lam, v] : hl_P_values(x, pt["q"], 2 * k)) {
        if (all_even(lam)) l += v;
      }
      // x^{1 - eps}: exponent 2 where eps_i = -1.
      return Sides{l, sign_sum(x, pt["q"], k, 2, big_psi)};
    });
    sample(cmp, "all parts " + tag, names, seed + 1000 + static_cast<std::uint64_t>(k), points,
           [&](const RationalPoint& pt) {
             const auto x = point_x(pt, n);
             Rational l = 0;
             for (const auto& [lam, v] : hl_P_values(x, pt["q"], k)) l += v;
             // x^{(1 - eps)/2}: exponent 1 where eps_i = -1.
             return Sides{l, sign_sum(x, pt["q"], k, 1, big_phi)};
           });
  }
  // Unbounded forms as truncated series.
  const int D = 6;
  const auto xv = VarSet::first(n, D);
  const MultiSeries one = xv.one();
  MultiSeries all = one.zero_like();
  MultiSeries even = one.zero_like();
  for (const auto& [l, v] : hl_P_table(xv, D)) {
    all += v;
    if (all_even(l)) even += v;
  }
  MultiSeries pairs = one;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Monomial m = Monomial::unit(i) * Monomial::unit(j);
      pairs *= one - one.monomial_like(m, LaurentQ::q_power(1));
      pairs *= inverse_linear(one, m, 1);
    }
  }
  MultiSeries squares = pairs;
  for (int i = 0; i < n; ++i) squares *= inverse_linear(one, Monomial::unit(i, 2), 1);
  const auto xn = detail::var_names("x", n);
  cmp.series("sum of all P", all, detail::geometric_product(one, xv.indices) * pairs, xn);
  cmp.series("sum of even P", even, squares, xn);
  return finish_report("s6.stem", {{"n", n}, {"k_max", k_max}, {"points", points}}, cmp,
                       {{"strategy", "random_points"}, {"points", points}, {"series_x_degree", D}}, clock, seed);
}

namespace {

/// Bounded principal sum: sum over l_1 <= k, l(l) <= n of
/// z^{|l|} q^{2n(l)} (q;q)_n / ((q;q)_{n-l(l)} b_l), as a z-series.
MultiSeries bounded_principal_lhs(const MultiSeries& one, int n, int k) {
  MultiSeries s = one.zero_like();
  for (const auto& l : enumerate_up_to(n * k, {.max_length = n, .max_part = k})) {
    const LaurentQ c = divide_exact(qpoch(n), qpoch(n - l.length()) * b_lambda(l));
    s += one.monomial_like(Monomial::unit(0, l.weight()), c.shifted(2 * static_cast<int>(n_stat(l))));
  }
  return s;
}

/// The alternating right side shared by both principal forms.
MultiSeries alternating_rhs(const MultiSeries& one, int n, int k) {
  MultiSeries s = one.zero_like();
  const MultiSeries zq = one.monomial_like(Monomial::unit(0), LaurentQ::q_power(-1));
  for (int r = 0; r <= n; ++r) {
    MultiSeries t = one.monomial_like(Monomial::unit(0, (k + 1) * r),
                                      qbinom(n, r).shifted(static_cast<int>((2 * k + 3) * binom2(r))));
    if (r % 2 == 1) t = -t;
    t *= one - one.monomial_like(Monomial::unit(0), LaurentQ::q_power(2 * r - 1));
    t *= qpoch_at(zq, r);
    t *= series_inverse(qpoch_at(zq, n + r + 1));
    s += t;
  }
  return s;
}

}  // namespace

VerifyReport verify_st(int n, int k, int Dz) {
  Stopwatch clock;
  Comparator cmp;
  const MultiSeries one = MultiSeries::constant(1, 1, Dz);
  cmp.series("coefficient", bounded_principal_lhs(one, n, k), alternating_rhs(one, n, k), std::vector<std::string>{"z"});
  return finish_report("s6.st", {{"n", n}, {"k", k}, {"Dz", Dz}}, cmp,
                       {{"z_degree", Dz}, {"exact", "Laurent polynomial z-coefficients"}}, clock);
}

namespace {

/// Coefficient of u^k in the subset-sum side at exact x, q.
Rational subset_side(const std::vector<Rational>& x, const Rational& q, int k) {
  const int n = static_cast<int>(x.size());
  Rational total = 0;
  for (int mask = 0; mask < (1 << n); ++mask) {
    const int size = __builtin_popcount(static_cast<unsigned>(mask));
    Rational xI = 1;
    Rational a = 1;
    for (int i = 0; i < n; ++i) {
      const Rational& xi = x[static_cast<std::size_t>(i)];
      if (mask & (1 << i)) {
        xI *= xi;
        a *= checked_div(1, 1 - checked_div(1, xi) * pow(q, 1 - size));
        for (int j = 0; j < n; ++j) {
          if (!(mask & (1 << j))) {
            const Rational& xj = x[static_cast<std::size_t>(j)];
            a *= checked_div(xi - q * xj, xi - xj);
          }
        }
      } else {
        a *= checked_div(1, 1 - xi * pow(q, size));
      }
    }
    total += a * pow(pow(q, static_cast<int>(binom2(size))) * xI, k);
  }
  return total;
}

Rational bounded_nsum_value(const std::vector<Rational>& x, const Rational& q, int k) {
  Rational l = 0;
  for (const auto& [lam, v] : hl_P_values(x, q, k)) l += pow(q, static_cast<int>(n_stat(lam))) * v;
  return l;
}

}  // namespace

VerifyReport verify_thmpf(int n, int k_max, std::uint64_t seed, int points) {
  if (n < 1 || n > 5) throw std::invalid_argument("thmpf: n must be 1..5");
  Stopwatch clock;
  Comparator cmp;
  auto names = detail::var_names("x", n);
  names.emplace_back("q");
  for (int k = 0; k <= k_max; ++k) {
    sample(cmp, "u^" + std::to_string(k), names, seed + static_cast<std::uint64_t>(k), points,
           [&](const RationalPoint& pt) {
             const auto x = point_x(pt, n);
             return Sides{bounded_nsum_value(x, pt["q"], k), subset_side(x, pt["q"], k)};
           });
  }
  return finish_report("s6.thmpf", {{"n", n}, {"k_max", k_max}, {"points", points}}, cmp,
                       {{"strategy", "random_points"}, {"points", points}}, clock, seed);
}

VerifyReport verify_st2(int n, int k, int Dz) {
  Stopwatch clock;
  Comparator cmp;
  const MultiSeries one = MultiSeries::constant(1, 1, Dz);
  MultiSeries lhs = one.zero_like();
  for (const auto& l : enumerate_up_to(n * k, {.max_length = n, .max_part = k})) {
    const LaurentQ spec = spec_principal_P(l, n).as_laurent();
    lhs += one.monomial_like(Monomial::unit(0, l.weight()), spec.shifted(static_cast<int>(n_stat(l))));
  }
  const MultiSeries rhs = alternating_rhs(one, n, k);
  const std::vector<std::string> z{"z"};
  cmp.series("coefficient", lhs, rhs, z);
  cmp.series("same left side as the even-part form", lhs, bounded_principal_lhs(one, n, k), z);
  // Subset form of the bounded sum at x_i = z q^{i-1}, and the prefix-set
  // form it collapses to.
  sample(cmp, "subset form", {"z", "q"}, kDefaultSeed, kDefaultPoints, [&](const RationalPoint& pt) {
    const Rational& zz = pt["z"];
    const Rational& q = pt["q"];
    std::vector<Rational> x;
    for (int i = 0; i < n; ++i) x.push_back(zz * pow(q, i));
    Rational prefix = 0;
    for (int r = 0; r <= n; ++r) {
      Rational t = qbinom_value(n, r, q) * pow(pow(zz, r) * pow(q, 2 * static_cast<int>(binom2(r))), k);
      t = checked_div(t, qpoch_value(checked_div(pow(q, 2 - 2 * r), zz), q, r));
      t = checked_div(t, qpoch_value(zz * pow(q, 2 * r), q, n - r));
      prefix += t;
    }
    const Rational subset = subset_side(x, q, k);
    if (subset != prefix) return Sides{subset, prefix};
    return Sides{bounded_nsum_value(x, q, k), subset};
  });
  return finish_report("s6.st2", {{"n", n}, {"k", k}, {"Dz", Dz}}, cmp,
                       {{"z_degree", Dz}, {"points", kDefaultPoints}}, clock);
}

VerifyReport verify_fulman(int k, int z_power, int N) {
  if (z_power < 1) throw std::invalid_argument("fulman: z must be q^s with s >= 1");
  Stopwatch clock;
  Comparator cmp;
  const int s = z_power;
  QSeries lhs = QSeries(LaurentQ(), N);
  for (const auto& l : enumerate_up_to(N / s, {.max_length = std::nullopt, .max_part = k})) {
    const int e = 2 * static_cast<int>(n_stat(l)) + s * l.weight();
    if (e > N) continue;
    QSeries t(LaurentQ::q_power(e));
    for (int i = 1; i <= k; ++i) {
      const int m = multiplicity(l, i);
      if (m > 0) t *= qpoch_reciprocal_series(m, N);
    }
    lhs += t;
  }
  // The r = 0 term has (1 - z/q)/(z/q;q)_{n+1} = 1/(z;q)_n, and for r >= 1
  // (z/q;q)_r/(z/q;q)_{n+r+1} = 1/(z q^{r-1};q)_{n+1}; then n -> infinity.
  QSeries rhs = qpoch_infinite_step(s, 1, N).inverse(N);
  for (int r = 1;; ++r) {
    const long long e = static_cast<long long>(s) * (k + 1) * r + (2LL * k + 3) * binom2(r);
    if (e > N) break;
    QSeries t(LaurentQ::q_power(static_cast<int>(e)) * LaurentQ::one_minus_q_power(s + 2 * r - 1));
    t *= qpoch_reciprocal_series(r, N);
    t *= qpoch_infinite_step(s + r - 1, 1, N).inverse(N);
    rhs += r % 2 == 1 ? -t : t;
  }
  cmp.qseries("coefficient", lhs, rhs, N);
  if (k == 1 && (s == 1 || s == 2)) {
    const QSeries prod = s == 1 ? eta_quotient(5, {{1, -1}, {4, -1}}, N) : eta_quotient(5, {{2, -1}, {3, -1}}, N);
    cmp.qseries("modulus 5 product", lhs, prod, N);
  }
  TruncationPlan plan;
  plan.q_min = 0;
  plan.q_max = N;
  return finish_report("s6.fulman", {{"k", k}, {"z_power", s}, {"N", N}}, cmp, plan.to_json(), clock);
}

}  // namespace hlq
