#include <stdexcept>

#include "hlq/identities.hpp"
#include "identities_common.hpp"

namespace hlq {

VerifyReport verify_phipsi_example() {
  Stopwatch clock;
  Comparator cmp;
  const Partition lambda{5, 3, 2, 2};
  const Partition mu{3, 3, 2};
  cmp.integer("horizontal strip", is_horizontal_strip(lambda, mu) ? 1 : 0, 1, false);
  cmp.laurent("phi", phi_coeff(lambda, mu), LaurentQ::one_minus_q_power(2) * LaurentQ::one_minus_q_power(1));
  cmp.laurent("psi", psi_coeff(lambda, mu), LaurentQ::one_minus_q_power(2));
  return finish_report("hl.phipsi", {{"lambda", lambda.to_string()}, {"mu", mu.to_string()}}, cmp,
                       {{"exact", "polynomials in q"}}, clock);
}

namespace {

std::string zdeg(int j) { return "z^" + std::to_string(j); }

void psiphi_into(Comparator& cmp, const Partition& lambda, const Partition& mu, int Dz) {
  const std::string tag = "lambda=" + lambda.to_string() + " mu=" + mu.to_string() + " ";
  const Partition lc = lambda.conjugate();
  const Partition mc = mu.conjugate();
  std::vector<LaurentQ> lhs(static_cast<std::size_t>(Dz + 1));
  for (int j = 0; j <= Dz; ++j) {
    for (const auto& nu : strips_over(mu, j)) {
      const long long e = n_stat(lambda) + n_stat(nu) - dot(lc, nu.conjugate());
      lhs[static_cast<std::size_t>(j)] += psi_coeff(nu, mu).shifted(static_cast<int>(e));
    }
  }
  // Right side: 1/(1-z) turns the finite sum into prefix sums.
  std::vector<LaurentQ> finite(static_cast<std::size_t>(Dz + 1));
  for (const auto& nu : strips_under(lambda)) {
    const int d = lambda.weight() - nu.weight();
    if (d > Dz) continue;
    const long long e = n_stat(mu) + n_stat(nu) - dot(mc, nu.conjugate()) - d;
    finite[static_cast<std::size_t>(d)] += phi_coeff(lambda, nu).shifted(static_cast<int>(e));
  }
  LaurentQ running;
  for (int j = 0; j <= Dz; ++j) {
    running += finite[static_cast<std::size_t>(j)];
    cmp.laurent(tag + zdeg(j), lhs[static_cast<std::size_t>(j)], running);
  }
}

}  // namespace

VerifyReport verify_psiphi(const Partition& lambda, const Partition& mu, int Dz) {
  Stopwatch clock;
  Comparator cmp;
  psiphi_into(cmp, lambda, mu, Dz);
  return finish_report("proof.psiphi", {{"lambda", lambda.to_string()}, {"mu", mu.to_string()}, {"Dz", Dz}}, cmp,
                       {{"z_degree", Dz}, {"exact", "Laurent polynomial z-coefficients"}}, clock);
}

VerifyReport verify_psiphi_range(int max_weight, int Dz) {
  Stopwatch clock;
  Comparator cmp;
  const auto ps = enumerate_up_to(max_weight);
  for (const auto& lambda : ps) {
    for (const auto& mu : ps) psiphi_into(cmp, lambda, mu, Dz);
  }
  return finish_report("proof.psiphi", {{"max_weight", max_weight}, {"Dz", Dz}}, cmp,
                       {{"z_degree", Dz}, {"pairs", ps.size() * ps.size()}}, clock);
}

namespace {

/// Left side z-coefficients: strips over mu with the column prefix fixed.
std::vector<LaurentQ> strip_sum(const Partition& mu, const std::optional<StripMask>& omega, int Dz) {
  std::vector<LaurentQ> out(static_cast<std::size_t>(Dz + 1));
  for (int j = 0; j <= Dz; ++j) {
    for (const auto& l : strips_over(mu, j, omega)) {
      out[static_cast<std::size_t>(j)] += psi_coeff(l, mu).shifted(static_cast<int>(n_stat(l)));
    }
  }
  return out;
}

void lemma41_into(Comparator& cmp, const Partition& mu, const StripMask& omega, int Dz) {
  const std::string tag = "mu=" + mu.to_string() + " omega=" + omega.to_string() + " ";
  const int k = omega.size();
  const Partition mc = mu.conjugate();
  long long e = n_stat(mu);
  for (int i = 1; i <= k; ++i) e += static_cast<long long>(mc.part(static_cast<std::size_t>(i))) * omega[i];
  LaurentQ A = LaurentQ::q_power(static_cast<int>(e));
  for (int j : omega.ascents()) A *= LaurentQ::one_minus_q_power(multiplicity(mu, j));
  const LaurentQ c = omega[k] == 0 ? LaurentQ::q_power(mc.part(static_cast<std::size_t>(k))) : LaurentQ();
  const auto lhs = strip_sum(mu, omega, Dz);
  for (int j = 0; j <= Dz; ++j) {
    LaurentQ rhs;
    if (j == omega.ones()) rhs = A;
    if (j > omega.ones()) rhs = A * (LaurentQ(1) - c);
    cmp.laurent(tag + zdeg(j), lhs[static_cast<std::size_t>(j)], rhs);
  }
}

void knul_into(Comparator& cmp, const Partition& mu, int Dz) {
  const auto lhs = strip_sum(mu, std::nullopt, Dz);
  for (int j = 0; j <= Dz; ++j) {
    cmp.laurent("unconstrained mu=" + mu.to_string() + " " + zdeg(j), lhs[static_cast<std::size_t>(j)],
                LaurentQ::q_power(static_cast<int>(n_stat(mu))));
  }
}

void komegaeen_into(Comparator& cmp, const Partition& mu, int Dz) {
  const auto lhs = strip_sum(mu, StripMask({1}), Dz);
  for (int j = 0; j <= Dz; ++j) {
    const LaurentQ rhs = j == 0 ? LaurentQ() : LaurentQ::q_power(static_cast<int>(n_stat(mu)) + mu.column(1));
    cmp.laurent("first column mu=" + mu.to_string() + " " + zdeg(j), lhs[static_cast<std::size_t>(j)], rhs);
  }
}

}  // namespace

VerifyReport verify_lemma41(const Partition& mu, const StripMask& omega, int Dz) {
  if (omega.size() < 1) throw std::invalid_argument("mask must have length >= 1");
  Stopwatch clock;
  Comparator cmp;
  lemma41_into(cmp, mu, omega, Dz);
  return finish_report("proof.lemma41", {{"mu", mu.to_string()}, {"omega", omega.to_string()}, {"Dz", Dz}}, cmp,
                       {{"z_degree", Dz}}, clock);
}

VerifyReport verify_lemma41_range(int max_weight, int max_mask, int Dz) {
  Stopwatch clock;
  Comparator cmp;
  long long cases = 0;
  for (const auto& mu : enumerate_up_to(max_weight)) {
    knul_into(cmp, mu, Dz);
    komegaeen_into(cmp, mu, Dz);
    for (int k = 1; k <= max_mask; ++k) {
      for (const auto& omega : StripMask::all(k)) {
        lemma41_into(cmp, mu, omega, Dz);
        ++cases;
      }
    }
  }
  return finish_report("proof.lemma41", {{"max_weight", max_weight}, {"max_mask", max_mask}, {"Dz", Dz}}, cmp,
                       {{"z_degree", Dz}, {"cases", cases}}, clock);
}

namespace {

// Variables: a_i -> index i-1, b_i -> index k + i - 1 (i = 1..k+1).
struct AbRing {
  int k;
  int num_vars() const { return 2 * k + 1; }
  int a(int i) const { return i - 1; }
  int b(int i) const { return k + i - 1; }
  MultiSeries one() const { return MultiSeries::constant(num_vars(), 1); }
  MultiSeries ratio(int num, int den, long c = 1) const {
    Monomial m = Monomial::unit(num) * Monomial::unit(den, -1);
    return one().monomial_like(m, c);
  }
  std::vector<std::string> names() const {
    auto v = detail::concat(detail::var_names("a", k), detail::var_names("b", k + 1));
    return v;
  }
};

long long pell(int k) {
  long long prev = 1;
  long long cur = 2;
  for (int i = 1; i < k; ++i) {
    const long long next = 2 * cur + prev;
    prev = cur;
    cur = next;
  }
  return k == 0 ? 1 : cur;
}

void ab_into(Comparator& cmp, int k, bool with_k) {
  const AbRing R{k};
  MultiSeries lhs = R.one().zero_like();
  MultiSeries rhs = R.one().zero_like();
  long long lhs_terms = 0;
  long long rhs_terms = 0;
  for (const auto& w : StripMask::all(k)) {
    MultiSeries t = R.one();
    for (int i = 1; i <= k; ++i) {
      if (w[i] == 1) t *= R.ratio(R.a(i), R.b(i));
    }
    const auto J = w.ascents();
    for (int j : J) t *= R.one() - R.ratio(R.a(j), R.a(j + 1));
    lhs_terms += 1LL << J.size();
    if (with_k && w[k] == 0) t *= R.one() - R.ratio(R.a(k), R.b(k + 1));
    lhs += t;

    MultiSeries s = R.one();
    for (int i = 1; i <= k; ++i) {
      if (w[i] == 1) s *= R.ratio(R.a(i), R.b(i));
    }
    auto I = w.descents();
    if (with_k && w[k] == 1) I.push_back(k);
    for (int i : I) s *= R.one() - R.ratio(R.b(i), R.b(i + 1));
    rhs_terms += 1LL << (with_k ? w.descents().size() : I.size());
    rhs += s;
  }
  const std::string tag = "k=" + std::to_string(k);
  cmp.series(tag, lhs, rhs, R.names());
  if (!with_k) {
    cmp.integer(tag + " left term count", lhs_terms, pell(k));
    cmp.integer(tag + " right term count", rhs_terms, pell(k));
  }
}

}  // namespace

VerifyReport verify_ab2(int k, const std::string& convention) {
  if (k < 1 || k > 7) throw std::invalid_argument("ab2: k must be 1..7");
  if (convention != "without" && convention != "with_k_in_I") {
    throw std::invalid_argument("unknown convention '" + convention + "' (without or with_k_in_I)");
  }
  Stopwatch clock;
  Comparator cmp;
  ab_into(cmp, k, convention == "with_k_in_I");
  return finish_report("proof.ab2", {{"k", k}, {"convention", convention}}, cmp,
                       {{"exact", "Laurent polynomials in a_i, b_i"}}, clock);
}

VerifyReport verify_ab2_range(int k_max) {
  Stopwatch clock;
  Comparator cmp;
  for (int k = 1; k <= k_max; ++k) {
    ab_into(cmp, k, false);
    ab_into(cmp, k, true);
  }
  // The two smallest cases written out.
  const AbRing r1{1};
  cmp.series("k=1 value", [&] {
    MultiSeries f = r1.one();
    f.add_term(Monomial::unit(r1.a(1)) * Monomial::unit(r1.b(1), -1), 1);
    return f;
  }(), [&] {
    MultiSeries f = r1.one().zero_like();
    for (const auto& w : StripMask::all(1)) f += w[1] ? r1.ratio(r1.a(1), r1.b(1)) : r1.one();
    return f;
  }(), r1.names());
  const AbRing r2{2};
  MultiSeries expect = r2.one() + r2.ratio(r2.a(1), r2.b(1)) + r2.ratio(r2.a(2), r2.b(2)) - r2.ratio(r2.a(1), r2.b(2));
  expect += r2.ratio(r2.a(1), r2.b(1)) * r2.ratio(r2.a(2), r2.b(2));
  MultiSeries left = r2.one() + r2.ratio(r2.a(1), r2.b(1)) +
                     r2.ratio(r2.a(2), r2.b(2)) * (r2.one() - r2.ratio(r2.a(1), r2.a(2))) +
                     r2.ratio(r2.a(1), r2.b(1)) * r2.ratio(r2.a(2), r2.b(2));
  MultiSeries right = r2.one() + r2.ratio(r2.a(1), r2.b(1)) * (r2.one() - r2.ratio(r2.b(1), r2.b(2))) +
                      r2.ratio(r2.a(2), r2.b(2)) + r2.ratio(r2.a(1), r2.b(1)) * r2.ratio(r2.a(2), r2.b(2));
  cmp.series("k=2 left expansion", left, expect, r2.names());
  cmp.series("k=2 right expansion", right, expect, r2.names());
  cmp.integer("term count k=1", pell(1), 2);
  cmp.integer("term count k=2", pell(2), 5);
  return finish_report("proof.ab2", {{"k_max", k_max}}, cmp, {{"exact", "Laurent polynomials in a_i, b_i"}}, clock);
}

}  // namespace hlq
