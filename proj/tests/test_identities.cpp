#include <gtest/gtest.h>

#include <utility>
#include <vector>

#include "hlq/catalog.hpp"
#include "hlq/errors.hpp"
#include "hlq/identities.hpp"
#include "hlq/pochhammer.hpp"
#include "hlq/report.hpp"

using namespace hlq;

namespace {

void expect_pass(const VerifyReport& r) {
  EXPECT_EQ(r.status, Status::kPass) << r.to_text();
}

}  // namespace

TEST(Identities, EveryQuickEntryPasses) {
  for (const auto& e : catalog()) {
    const auto r = run_entry(e, e.quick);
    EXPECT_EQ(r.identity_id, e.id);
    expect_pass(r);
  }
}

TEST(Identities, PartitionSumsSmall) {
  expect_pass(verify_main(1, 1, 5));
  expect_pass(verify_main(2, 1, 4));
  expect_pass(verify_npsum(3, 5));
  expect_pass(verify_cor1(Partition({2, 1}), 2, 1, 4));
  expect_pass(verify_cor2(Partition({1}), Partition(), 2, 0, 4));
  expect_pass(verify_cor3(2, 2, 4));
  expect_pass(verify_hall(3, 1, 2));
  expect_pass(verify_hall_limit(3));
  expect_pass(verify_cauchy(2, 1, 4));
  expect_pass(verify_skew_cauchy(Partition({1}), Partition(), 2, 2, 4));
  expect_pass(verify_sqspec(Partition({1, 1}), 2, 5));
  expect_pass(verify_rec(1, 1, 4));
}

TEST(Identities, QSeriesSmall) {
  expect_pass(verify_cor4(1, 0, 3, 3, 12));
  expect_pass(verify_hua(1, 3, 10));
  expect_pass(verify_lemma_inv(2, 1, 3, 3, 10));
  expect_pass(verify_rr_classical(25));
  expect_pass(verify_rr_a2(25));
  expect_pass(verify_macdonald_a2(20, 2));
  expect_pass(verify_vandermonde());
  for (const char* v : {"3n+1", "3n-1", "3n"}) expect_pass(verify_modulus_family(2, v, 20));
}

TEST(Identities, BaileySmall) {
  expect_pass(verify_bailey_BL(2, 1, "random_points", kDefaultSeed, 5));
  expect_pass(verify_bailey_BL(1, 1, "series"));
  expect_pass(verify_bailey_type2_range(2, 1, 1, kDefaultSeed, 4));
  expect_pass(verify_drie(2, 2, {1, -1, 0}));
  for (const char* v : {"standard", "q_inverse", "modulus3n_seed"}) expect_pass(verify_euler_a2(2, 1, v));
  expect_pass(verify_it1_range(2));
}

TEST(Identities, ProofIdentitiesSmall) {
  expect_pass(verify_phipsi_example());
  expect_pass(verify_psiphi(Partition({2, 1}), Partition({1}), 3));
  expect_pass(verify_lemma41(Partition({2, 1}), StripMask::parse("01"), 4));
  expect_pass(verify_ab2(2, "without"));
  expect_pass(verify_ab2(2, "with_k_in_I"));
}

TEST(Identities, BoundedAndMacdonaldSmall) {
  expect_pass(verify_npsom2(2, 4, "q0"));
  EXPECT_EQ(verify_npsom2(2, 4, "full").status, Status::kInconclusive);
  expect_pass(verify_psiqt(Partition({1}), 2, kDefaultSeed, 4));
  expect_pass(verify_an_extension(2, 3, 8));
  expect_pass(verify_stem(2, 2, kDefaultSeed, 4));
  expect_pass(verify_st(2, 1, 4));
  expect_pass(verify_thmpf(2, 2, kDefaultSeed, 4));
  expect_pass(verify_st2(2, 1, 4));
  expect_pass(verify_fulman(1, 1, 15));
}

TEST(Identities, PrintedType2RangeFailsForPositiveThirdShift) {
  // Starting r_1 at 0 loses the terms with -k_3 <= r_1 < 0.
  EXPECT_EQ(verify_bailey_type2(2, 2, {-1, 0, 1}, kDefaultSeed, 4, "printed").status, Status::kFail);
  EXPECT_EQ(verify_bailey_type2(2, 2, {-1, 0, 1}, kDefaultSeed, 4, "support").status, Status::kPass);
  EXPECT_EQ(verify_bailey_type2(2, 2, {0, 1, -1}, kDefaultSeed, 4, "printed").status, Status::kPass);
}

TEST(Identities, A2SumEqualsFirstModulusFamilyMember) {
  const int N = 40;
  const auto e1 = rr_a2_e1(N);
  const auto fam = modulus_family_rhs(2, "3n+1", N) * qpoch_infinite(1, 1, N);
  for (int k = 0; k <= N; ++k) EXPECT_EQ(e1.coeff(k), fam.coeff(k)) << k;
}

TEST(Identities, DoublingTheOrderIsConsistent) {
  const auto a = rr_a2_e1(30);
  const auto b = rr_a2_e1(60);
  for (int k = 0; k <= 30; ++k) EXPECT_EQ(a.coeff(k), b.coeff(k)) << k;
  expect_pass(verify_rr_a2(30));
  expect_pass(verify_rr_a2(60));
}

TEST(Identities, BoundedSumEqualsRExpansion) {
  EXPECT_EQ(pps_lhs_series(0, 0, 3, 3, 10).terms().size(), 1u);
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 0}, {1, 1}, {2, 1}, {2, 2}}) {
    const auto lhs = pps_lhs_series(n, m, 4, 4, 15);
    const auto r = bounded_R_series(n, m, 4, 4, 15);
    Comparator cmp;
    cmp.series("R", lhs, r);
    EXPECT_EQ(cmp.status(), Status::kPass) << n << "," << m;
  }
}

TEST(Identities, UnitFormIsBaileyAtOne) {
  // Nonzero shifts put (q^0;q)_m factors in the general display at a = b = 1.
  PointSampler s(5);
  const Shift3 zero{0, 0, 0};
  for (auto [M1, M2] : std::vector<std::pair<int, int>>{{0, 0}, {1, 1}, {2, 1}, {2, 2}, {3, 2}}) {
    const auto [lhs, rhs] = drie_sides(M1, M2, zero);
    for (int it = 0; it < 3; ++it) {
      const Rational q = s.next();
      const auto [bl, br] = bailey_type2_point(M1, M2, zero, 1, 1, q);
      EXPECT_EQ(lhs.evaluate(q), bl);
      EXPECT_EQ(rhs.evaluate(q), br);
    }
  }
  EXPECT_THROW(bailey_type2_point(2, 1, {1, -1, 0}, 1, 1, Rational(1, 3)), DenominatorZero);
}

TEST(Identities, ReportsAreDeterministic) {
  for (const char* id : {"pid.main", "bl.bailey", "s6.stem", "rr.a2"}) {
    const auto& e = find_entry(id);
    const auto a = run_entry(e, e.quick, 1234);
    const auto b = run_entry(e, e.quick, 1234);
    EXPECT_EQ(a.to_json(false).dump(), b.to_json(false).dump()) << id;
  }
}

TEST(Comparator, NegativeControls) {
  {
    Comparator cmp;
    cmp.laurent("x", LaurentQ(1) + LaurentQ::q_power(2), LaurentQ(1) + LaurentQ::q_power(3));
    EXPECT_TRUE(cmp.failed());
    EXPECT_EQ(cmp.status(), Status::kFail);
  }
  {
    // Perturb one coefficient of a true identity.
    const int N = 30;
    auto rhs = modulus_family_rhs(2, "3n+1", N) * qpoch_infinite(1, 1, N);
    rhs += QSeries(LaurentQ::q_power(17));
    Comparator cmp;
    cmp.qseries("e1", rr_a2_e1(N), rhs, N);
    ASSERT_TRUE(cmp.failed());
    EXPECT_NE(cmp.mismatch()->where.find("17"), std::string::npos) << cmp.mismatch()->where;
  }
  {
    // Beyond the certified cap nothing is compared.
    Comparator cmp;
    cmp.qseries("cap", QSeries(LaurentQ(1) + LaurentQ::q_power(1), 1), QSeries(LaurentQ(1) + LaurentQ::q_power(1) +
                                                                                LaurentQ::q_power(5)));
    EXPECT_FALSE(cmp.failed());
    EXPECT_EQ(cmp.status(), Status::kPass);
  }
  {
    Comparator cmp;
    cmp.value("v", Rational(1, 3), Rational(1, 3));
    EXPECT_EQ(cmp.status(), Status::kPass);
    cmp.value("v", Rational(1, 3), Rational(2, 3));
    EXPECT_EQ(cmp.status(), Status::kFail);
  }
}

TEST(Comparator, ConstantOnlyIsInconclusive) {
  Comparator cmp;
  cmp.laurent("one", LaurentQ(1), LaurentQ(1), kExact, true);
  EXPECT_EQ(cmp.status(), Status::kInconclusive);
  Comparator empty;
  EXPECT_EQ(empty.status(), Status::kInconclusive);
}

TEST(Comparator, SeriesMismatchNamesMonomial) {
  const auto x = MultiSeries::variable(2, 0, 4);
  const auto y = MultiSeries::variable(2, 1, 4);
  Comparator cmp;
  const std::vector<std::string> names{"x", "y"};
  cmp.series("s", x * y + x, x * y + x.scaled(LaurentQ(2)), names);
  ASSERT_TRUE(cmp.failed());
  EXPECT_NE(cmp.mismatch()->where.find("x"), std::string::npos);
}
