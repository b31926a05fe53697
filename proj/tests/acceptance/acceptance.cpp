// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.

#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "hlq/hall_littlewood.hpp"
#include "hlq/identities.hpp"
#include "hlq/partition.hpp"
#include "hlq/pochhammer.hpp"
#include "hlq/suite.hpp"

using namespace hlq;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;
};

class Criterion {
 public:
  Criterion(int number, std::string title, long long limit_ms)
      : number_(number), title_(std::move(title)), limit_ms_(limit_ms) {}

  // A degenerate case (every comparison is 1 = 1) is accepted when
  // allow_trivial is set, and reported as such.
  void add(const VerifyReport& r, bool allow_trivial = false) {
    ++count_;
    if (r.passed()) return;
    if (allow_trivial && r.status == Status::kInconclusive && !r.first_mismatch) {
      out_.notes.push_back("trivial " + r.identity_id + " " + r.params.dump());
      return;
    }
    out_.ok = false;
    std::string what = to_string(r.status) + " " + r.identity_id + " " + r.params.dump();
    if (r.first_mismatch) what += " at " + r.first_mismatch->where;
    out_.notes.push_back(what);
  }
  void check(bool cond, const std::string& what) {
    ++count_;
    if (!cond) {
      out_.ok = false;
      out_.notes.push_back(what);
    }
  }

  bool finish() {
    const long long ms = clock_.elapsed_ms();
    const bool in_time = ms <= limit_ms_;
    const bool ok = out_.ok && in_time;
    std::cout << (ok ? "PASS" : "FAIL") << "  [" << number_ << "] " << title_ << "  (" << count_ << " checks, " << ms
              << " ms";
    if (!in_time) std::cout << ", limit " << limit_ms_ << " ms";
    std::cout << ")\n";
    for (const auto& n : out_.notes) std::cout << "      " << n << "\n";
    std::cout.flush();
    return ok;
  }

 private:
  int number_;
  std::string title_;
  long long limit_ms_;
  int count_ = 0;
  Outcome out_;
  Stopwatch clock_;
};

constexpr long long kSec = 1000;

bool strip_coefficients() {
  Criterion c(1, "strip coefficients phi and psi for (5,3,2,2)/(3,3,2)", 1 * kSec);
  c.add(verify_phipsi_example());
  const Partition l{5, 3, 2, 2}, mu{3, 3, 2};
  c.check(phi_coeff(l, mu) == LaurentQ::one_minus_q_power(2) * LaurentQ::one_minus_q_power(1), "phi value");
  c.check(psi_coeff(l, mu) == LaurentQ::one_minus_q_power(2), "psi value");
  return c.finish();
}

bool two_alphabet_sum() {
  Criterion c(2, "two-alphabet sum, (n,m,D) = (2,2,6) and (3,2,5)", 120 * kSec);
  c.add(verify_main(2, 2, 6));
  c.add(verify_main(3, 2, 5));
  return c.finish();
}

bool skew_and_linear_sums() {
  Criterion c(3, "skew and linear-term skew_and_linear_sums; finite q-series identity k,n <= 5", 60 * kSec);
  const std::vector<Partition> small{Partition(), Partition({1}), Partition({2}), Partition({1, 1})};
  for (const auto& nu : small) {
    c.add(verify_cor1(nu, 2, 2, 4));
    for (const auto& eta : small) c.add(verify_cor2(nu, eta, 2, 2, 4));
  }
  for (int j = 0; j <= 2; ++j) c.add(verify_cor3(j, 2, 5));
  c.add(verify_hall_range(5, 5));
  return c.finish();
}

bool bounded_pps() {
  Criterion c(4, "bounded two-parameter sum, degrees <= 5, N = 30", 120 * kSec);
  for (auto [n, m] : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {3, 2}}) {
    c.add(verify_cor4(n, m, 5, 5, 30), n == 0 && m == 0);
  }
  return c.finish();
}

bool bailey() {
  Criterion c(5, "Bailey-type finite identities at 20 points; a = b = 1 form with |k_i| <= 3", 120 * kSec);
  for (auto [M1, M2] : std::vector<std::pair<int, int>>{{0, 0}, {1, 1}, {2, 1}, {2, 2}, {3, 2}}) {
    c.add(verify_bailey_BL(M1, M2, "random_points", kDefaultSeed, 20));
    c.add(verify_bailey_type2_range(M1, M2, 2, kDefaultSeed, 20));
    c.add(verify_drie_range(M1, M2, 3), M1 == 0 && M2 == 0);
  }
  return c.finish();
}

bool euler() {
  Criterion c(6, "A2 Euler-type sum M <= 6 in three variants; iterated sum M <= 4", 120 * kSec);
  for (const char* v : {"standard", "q_inverse", "modulus3n_seed"}) c.add(verify_euler_a2_range(6, v));
  c.add(verify_it1_range(4));
  return c.finish();
}

bool rogers_ramanujan() {
  Criterion c(7, "modulus-7 A2 series to q^60, modulus-5 pair to q^60, families n = 2,3 to q^40", 300 * kSec);
  c.add(verify_rr_a2(60));
  c.add(verify_rr_classical(60));
  for (const char* v : {"3n+1", "3n-1", "3n"}) {
    for (int n = 2; n <= 3; ++n) c.add(verify_modulus_family(n, v, 40));
  }
  const auto e1 = rr_a2_e1(40);
  const auto fam = modulus_family_rhs(2, "3n+1", 40) * qpoch_infinite(1, 1, 40);
  bool same = true;
  for (int k = 0; k <= 40; ++k) same = same && e1.coeff(k) == fam.coeff(k);
  c.check(same, "n = 2, 3n+1 family differs from the modulus-7 series");
  return c.finish();
}

bool root_systems() {
  Criterion c(8, "root-system sums rank <= 3; A2 theta specialization to q^80; Vandermonde", 120 * kSec);
  for (int rank = 1; rank <= 3; ++rank) c.add(verify_hua(rank, 4, 20));
  c.add(verify_macdonald_a2(80, 2));
  c.add(verify_vandermonde());
  return c.finish();
}

bool proof_layer() {
  Criterion c(9, "strip identities weight <= 4 / 5 with masks <= 3; a,b identity k <= 6", 120 * kSec);
  c.add(verify_psiphi_range(4, 4));
  c.add(verify_lemma41_range(5, 3, 4));
  c.add(verify_ab2_range(6));
  return c.finish();
}

bool macdonald_and_bounded() {
  Criterion c(10, "(q,t) strip sum, bounded sums, principal specializations, infinite-n limit, A_n chains",
              300 * kSec);
  c.add(verify_psiqt_range(3, 4, kDefaultSeed, 20));
  for (int n = 1; n <= 4; ++n) c.add(verify_thmpf(n, 4, kDefaultSeed, 20));
  for (int n = 1; n <= 3; ++n) c.add(verify_stem(n, 3, kDefaultSeed, 20));
  for (int n = 1; n <= 4; ++n) {
    for (int k = 1; k <= 3; ++k) {
      c.add(verify_st(n, k, 6));
      c.add(verify_st2(n, k, 6));
    }
  }
  for (int k = 1; k <= 3; ++k) {
    c.add(verify_fulman(k, 1, 30));
    c.add(verify_fulman(k, 2, 30));
  }
  for (int rank = 2; rank <= 4; ++rank) c.add(verify_an_extension(rank, 4, 15));
  c.add(verify_a3_isolated(4, 15));
  return c.finish();
}

bool library_properties() {
  Criterion c(11, "library properties and the quick suite", 300 * kSec);
  for (const auto& l : enumerate_up_to(10)) {
    c.check(l.conjugate().conjugate() == l, "conjugate involution " + l.to_string());
    c.check(n_stat(l) == n_stat_by_columns(l), "n(lambda) two ways " + l.to_string());
  }
  for (int n = 1; n <= 4; ++n) {
    const int w = n <= 3 ? 6 : 5;
    const auto table = hl_P_table(VarSet::first(n), w);
    for (const auto& l : enumerate_up_to(w)) {
      if (l.length() > n) continue;
      const auto it = table.find(l);
      c.check(it != table.end() && it->second.terms() == hl_P_symmetrization(l, n).terms(),
              "branching vs symmetrization " + l.to_string() + " n=" + std::to_string(n));
    }
  }
  c.add(verify_cauchy(2, 2, 6));
  c.add(verify_skew_cauchy(Partition({1}), Partition({1}), 2, 2, 4));
  c.add(verify_skew_cauchy(Partition({1, 1}), Partition({2}), 2, 2, 4));
  {
    const auto x = MultiSeries::variable(2, 0, 5);
    const auto y = MultiSeries::variable(2, 1, 5);
    const auto a = MultiSeries::constant(2, 1, 5) - x.scaled(LaurentQ::q_power(1)) + y * x;
    const auto b = y.scaled(LaurentQ(2)) - MultiSeries::constant(2, LaurentQ::q_power(-1), 5);
    c.check(a * b == b * a, "series commutativity");
    c.check(a * (a + b) == a * a + a * b, "series distributivity");
    c.check(a * series_inverse(a) == MultiSeries::constant(2, 1, 5), "series inverse");
  }
  for (int n = 1; n <= 12; ++n) {
    for (int m = 1; m <= n; ++m) {
      c.check(qbinom(n, m) == qbinom(n - 1, m - 1) + qbinom(n - 1, m).shifted(m), "q-Pascal");
    }
  }
  {
    const auto inv = qpoch_infinite(1, 1, 30).inverse();
    bool ok = true;
    for (int k = 0; k <= 30; ++k) ok = ok && inv.coeff(k) == static_cast<long>(enumerate_partitions(k).size());
    c.check(ok, "1/(q;q)_inf against partition counts");
  }
  const auto suite = run_suite("quick");
  for (const auto& r : suite.reports) c.add(r);
  return c.finish();
}

}  // namespace

int main() {
  const std::vector<std::function<bool()>> criteria{strip_coefficients, two_alphabet_sum, skew_and_linear_sums, bounded_pps,
                                                    bailey,            euler,        rogers_ramanujan,
                                                    root_systems,      proof_layer,  macdonald_and_bounded,
                                                    library_properties};
  int failed = 0;
  for (const auto& f : criteria) failed += f() ? 0 : 1;
  std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
