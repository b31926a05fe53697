#include "hlq/catalog.hpp"

#include <charconv>
#include <sstream>

#include "hlq/identities.hpp"
#include "hlq/partition.hpp"

namespace hlq {

namespace {

int I(const Json& p, const char* k) { return p.at(k).get<int>(); }
std::string S(const Json& p, const char* k) { return p.at(k).get<std::string>(); }
Partition P(const Json& p, const char* k) { return Partition::parse(S(p, k)); }
bool has(const Json& p, const char* k) { return p.contains(k); }

std::optional<long long> parse_int(std::string_view s) {
  long long v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return v;
}

Shift3 parse_shift(const std::string& text) {
  Shift3 k{};
  std::stringstream ss(text);
  std::string item;
  int i = 0;
  while (std::getline(ss, item, ',')) {
    const auto v = parse_int(item);
    if (!v || i >= 3) throw UsageError("shift must be three integers such as 1,-1,0: '" + text + "'");
    k[static_cast<std::size_t>(i++)] = static_cast<int>(*v);
  }
  if (i != 3) throw UsageError("shift must be three integers such as 1,-1,0: '" + text + "'");
  if (k[0] + k[1] + k[2] != 0) throw UsageError("shift entries must sum to zero: '" + text + "'");
  return k;
}

std::vector<Json> pairs_json(std::initializer_list<std::pair<int, int>> ps, const char* a, const char* b, Json base) {
  std::vector<Json> out;
  for (auto [x, y] : ps) {
    Json j = base;
    j[a] = x;
    j[b] = y;
    out.push_back(j);
  }
  return out;
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> c;
  auto add = [&](CatalogEntry e) { c.push_back(std::move(e)); };

  // Hall-Littlewood partition sums.
  add({"hl.phipsi", "Strip coefficients phi and psi for (5,3,2,2)/(3,3,2)", "hallittlewood", Json::object(),
       Json::object(), {}, Json::object(), {Json::object()},
       [](const Json&, std::uint64_t) { return verify_phipsi_example(); }});
  add({"pid.main", "Two-alphabet q^{n(l)+n(m)-<l',m'>} sum as a product", "partition sums",
       {{"n", 2}, {"m", 2}, {"D", 6}}, Json::object(), {}, {{"n", 2}, {"m", 2}, {"D", 4}},
       {{{"n", 2}, {"m", 2}, {"D", 6}}, {{"n", 3}, {"m", 2}, {"D", 5}}},
       [](const Json& p, std::uint64_t) { return verify_main(I(p, "n"), I(p, "m"), I(p, "D")); }});
  add({"hl.npsum", "Single-alphabet q^{n(l)} sum", "partition sums", {{"n", 3}, {"D", 6}}, Json::object(), {},
       {{"n", 2}, {"D", 4}}, {{{"n", 3}, {"D", 6}}, {{"n", 4}, {"D", 5}}},
       [](const Json& p, std::uint64_t) { return verify_npsum(I(p, "n"), I(p, "D")); }});
  add({"cor1.pidskew", "Two-alphabet sum skewed in the first alphabet", "partition sums",
       {{"nu", "1"}, {"n", 2}, {"m", 2}, {"D", 4}}, Json::object(), {"nu"},
       {{"nu", "1"}, {"n", 2}, {"m", 1}, {"D", 3}},
       {{{"nu", "1"}, {"n", 2}, {"m", 2}, {"D", 4}},
        {{"nu", "2"}, {"n", 2}, {"m", 2}, {"D", 4}},
        {{"nu", "1,1"}, {"n", 2}, {"m", 2}, {"D", 4}}},
       [](const Json& p, std::uint64_t) { return verify_cor1(P(p, "nu"), I(p, "n"), I(p, "m"), I(p, "D")); }});
  {
    std::vector<Json> full;
    for (const char* nu : {"", "1", "2", "1,1"}) {
      for (const char* eta : {"", "1", "2", "1,1"}) full.push_back({{"nu", nu}, {"eta", eta}, {"n", 2}, {"m", 2}, {"D", 4}});
    }
    add({"cor2.skew", "Sum skewed in both alphabets with Q_{eta/mu}(x/q)", "partition sums",
         {{"nu", "1"}, {"eta", "1"}, {"n", 2}, {"m", 2}, {"D", 4}}, Json::object(), {"nu", "eta"},
         {{"nu", "1"}, {"eta", "1"}, {"n", 2}, {"m", 1}, {"D", 3}}, full,
         [](const Json& p, std::uint64_t) {
           return verify_cor2(P(p, "nu"), P(p, "eta"), I(p, "n"), I(p, "m"), I(p, "D"));
         }});
  }
  add({"cor3.linear", "Sum with a linear column term in the exponent", "partition sums", {{"j", 1}, {"n", 2}, {"D", 5}},
       Json::object(), {}, {{"j", 1}, {"n", 2}, {"D", 3}},
       {{{"j", 0}, {"n", 2}, {"D", 5}}, {{"j", 1}, {"n", 2}, {"D", 5}}, {{"j", 2}, {"n", 2}, {"D", 5}}},
       [](const Json& p, std::uint64_t) { return verify_cor3(I(p, "j"), I(p, "n"), I(p, "D")); }});
  add({"hall.finite", "Finite q-series identity for Q_(k) type sums", "partition sums", {{"k_max", 5}, {"n_max", 5}},
       {{"k", 1}, {"j", 0}, {"n", 1}}, {}, {{"k_max", 3}, {"n_max", 3}}, {{{"k_max", 5}, {"n_max", 5}}},
       [](const Json& p, std::uint64_t) {
         if (has(p, "k")) return verify_hall(I(p, "k"), has(p, "j") ? I(p, "j") : 0, has(p, "n") ? I(p, "n") : 1);
         return verify_hall_range(I(p, "k_max"), I(p, "n_max"));
       }});
  add({"hall.limit", "Infinite-n form of the finite identity", "partition sums", {{"k_max", 5}}, Json::object(), {},
       {{"k_max", 3}}, {{{"k_max", 6}}},
       [](const Json& p, std::uint64_t) { return verify_hall_limit(I(p, "k_max")); }});
  add({"hl.cauchy", "Cauchy identity for P and Q", "hallittlewood", {{"n", 2}, {"m", 2}, {"D", 6}}, Json::object(), {},
       {{"n", 2}, {"m", 2}, {"D", 4}}, {{{"n", 2}, {"m", 2}, {"D", 6}}, {{"n", 3}, {"m", 2}, {"D", 5}}},
       [](const Json& p, std::uint64_t) { return verify_cauchy(I(p, "n"), I(p, "m"), I(p, "D")); }});
  add({"hl.scauchy", "Skew Cauchy identity", "hallittlewood",
       {{"mu", "1"}, {"nu", "1"}, {"n", 2}, {"m", 2}, {"D", 4}}, Json::object(), {"mu", "nu"},
       {{"mu", "1"}, {"nu", "1"}, {"n", 2}, {"m", 1}, {"D", 3}},
       {{{"mu", "1"}, {"nu", "1"}, {"n", 2}, {"m", 2}, {"D", 4}},
        {{"mu", "2"}, {"nu", "1"}, {"n", 2}, {"m", 2}, {"D", 4}},
        {{"mu", "1,1"}, {"nu", "2"}, {"n", 2}, {"m", 2}, {"D", 4}}},
       [](const Json& p, std::uint64_t) {
         return verify_skew_cauchy(P(p, "mu"), P(p, "nu"), I(p, "n"), I(p, "m"), I(p, "D"));
       }});
  add({"hl.sqspec", "Skew q^{n(l)} sum over l containing mu", "partition sums", {{"mu", "2,1"}, {"n", 2}, {"D", 6}},
       Json::object(), {"mu"}, {{"mu", "1"}, {"n", 2}, {"D", 4}},
       {{{"mu", "2,1"}, {"n", 2}, {"D", 6}}, {{"mu", "1,1"}, {"n", 3}, {"D", 5}}},
       [](const Json& p, std::uint64_t) { return verify_sqspec(P(p, "mu"), I(p, "n"), I(p, "D")); }});
  add({"proof.rec", "Adding one variable to the second alphabet", "proof", {{"n", 2}, {"m", 1}, {"D", 5}},
       Json::object(), {}, {{"n", 2}, {"m", 1}, {"D", 3}}, {{{"n", 2}, {"m", 1}, {"D", 5}}, {{"n", 2}, {"m", 2}, {"D", 4}}},
       [](const Json& p, std::uint64_t) { return verify_rec(I(p, "n"), I(p, "m"), I(p, "D")); }});

  // q-series.
  add({"cor4.pps", "Bounded two-parameter sum as a Pochhammer quotient", "q-series",
       {{"n", 2}, {"m", 1}, {"deg_a", 5}, {"deg_b", 5}, {"N", 30}}, Json::object(), {},
       {{"n", 1}, {"m", 1}, {"deg_a", 3}, {"deg_b", 3}, {"N", 15}},
       pairs_json({{1, 0}, {1, 1}, {2, 1}, {2, 2}, {3, 2}}, "n", "m", {{"deg_a", 5}, {"deg_b", 5}, {"N", 30}}),
       [](const Json& p, std::uint64_t) {
         return verify_cor4(I(p, "n"), I(p, "m"), I(p, "deg_a"), I(p, "deg_b"), I(p, "N"));
       }});
  add({"hua", "Root-system sum over A_rank against 1/(a^alpha q;q)_inf", "q-series",
       {{"rank", 2}, {"deg", 4}, {"N", 20}}, Json::object(), {}, {{"rank", 2}, {"deg", 3}, {"N", 12}},
       {{{"rank", 1}, {"deg", 4}, {"N", 20}}, {{"rank", 2}, {"deg", 4}, {"N", 20}}, {{"rank", 3}, {"deg", 4}, {"N", 20}}},
       [](const Json& p, std::uint64_t) { return verify_hua(I(p, "rank"), I(p, "deg"), I(p, "N")); }});
  add({"lemma.inv", "Invariance of the bounded rank-2 sum", "q-series",
       {{"M1", 2}, {"M2", 1}, {"deg_a", 4}, {"deg_b", 4}, {"N", 20}}, Json::object(), {},
       {{"M1", 1}, {"M2", 1}, {"deg_a", 3}, {"deg_b", 3}, {"N", 12}},
       pairs_json({{1, 1}, {2, 1}, {2, 2}}, "M1", "M2", {{"deg_a", 4}, {"deg_b", 4}, {"N", 20}}),
       [](const Json& p, std::uint64_t) {
         return verify_lemma_inv(I(p, "M1"), I(p, "M2"), I(p, "deg_a"), I(p, "deg_b"), I(p, "N"));
       }});
  add({"rr.classical", "Both modulus-5 sum/product identities", "q-series", {{"N", 60}}, Json::object(), {},
       {{"N", 30}}, {{{"N", 60}}}, [](const Json& p, std::uint64_t) { return verify_rr_classical(I(p, "N")); }});
  add({"rr.a2", "A2 modulus-7 series in three forms", "q-series", {{"N", 60}}, Json::object(), {}, {{"N", 30}},
       {{{"N", 60}}}, [](const Json& p, std::uint64_t) { return verify_rr_a2(I(p, "N")); }});
  add({"macdonald.a2", "A2 theta sum against its product, specialized", "q-series", {{"N", 80}, {"n", 2}},
       Json::object(), {}, {{"N", 40}, {"n", 2}}, {{{"N", 80}, {"n", 2}}, {{"N", 60}, {"n", 3}}},
       [](const Json& p, std::uint64_t) { return verify_macdonald_a2(I(p, "N"), I(p, "n")); }});
  add({"vandermonde.a2", "Three-variable Vandermonde as a signed sum", "q-series", Json::object(), Json::object(), {},
       Json::object(), {Json::object()}, [](const Json&, std::uint64_t) { return verify_vandermonde(); }});
  for (const char* v : {"3n+1", "3n-1", "3n"}) {
    const std::string variant = v;
    add({std::string("family.") + v, std::string("Modulus ") + v + " family of A2 sum/product identities",
         "q-series", {{"n", 2}, {"N", 40}}, Json::object(), {}, {{"n", 2}, {"N", 20}},
         {{{"n", 2}, {"N", 40}}, {{"n", 3}, {"N", 40}}},
         [variant](const Json& p, std::uint64_t) { return verify_modulus_family(I(p, "n"), variant, I(p, "N")); }});
  }

  // Bailey-type finite identities.
  add({"bl.bailey", "A2 Bailey-type finite identity", "bailey",
       {{"M1", 2}, {"M2", 1}, {"strategy", "random_points"}, {"points", kDefaultPoints}}, Json::object(), {},
       {{"M1", 1}, {"M2", 1}, {"strategy", "random_points"}, {"points", 5}},
       pairs_json({{0, 0}, {1, 1}, {2, 1}, {2, 2}, {3, 2}}, "M1", "M2",
                  {{"strategy", "random_points"}, {"points", kDefaultPoints}}),
       [](const Json& p, std::uint64_t seed) {
         return verify_bailey_BL(I(p, "M1"), I(p, "M2"), S(p, "strategy"), seed, I(p, "points"));
       }});
  add({"bl.type2", "Shifted type-II Bailey display", "bailey",
       {{"M1", 2}, {"M2", 1}, {"k_max", 2}, {"points", kDefaultPoints}, {"range", "support"}}, {{"k", "0,0,0"}}, {},
       {{"M1", 1}, {"M2", 1}, {"k_max", 1}, {"points", 3}, {"range", "support"}},
       pairs_json({{0, 0}, {1, 1}, {2, 1}, {2, 2}, {3, 2}}, "M1", "M2",
                  {{"k_max", 2}, {"points", kDefaultPoints}, {"range", "support"}}),
       [](const Json& p, std::uint64_t seed) {
         if (has(p, "k")) {
           return verify_bailey_type2(I(p, "M1"), I(p, "M2"), parse_shift(S(p, "k")), seed, I(p, "points"),
                                      S(p, "range"));
         }
         return verify_bailey_type2_range(I(p, "M1"), I(p, "M2"), I(p, "k_max"), seed, I(p, "points"), S(p, "range"));
       }});
  add({"bl.drie", "a = b = 1 shifted identity as rational functions", "bailey", {{"M1", 2}, {"M2", 1}, {"k_max", 3}},
       {{"k", "0,0,0"}}, {}, {{"M1", 1}, {"M2", 1}, {"k_max", 1}},
       pairs_json({{1, 1}, {2, 1}, {2, 2}, {3, 2}}, "M1", "M2", {{"k_max", 3}}),
       [](const Json& p, std::uint64_t) {
         if (has(p, "k")) return verify_drie(I(p, "M1"), I(p, "M2"), parse_shift(S(p, "k")));
         return verify_drie_range(I(p, "M1"), I(p, "M2"), I(p, "k_max"));
       }});
  add({"euler.a2", "A2 Euler-type finite sum", "bailey", {{"max_M", 6}, {"variant", "standard"}},
       {{"M1", 0}, {"M2", 0}}, {}, {{"max_M", 3}, {"variant", "standard"}},
       {{{"max_M", 6}, {"variant", "standard"}},
        {{"max_M", 6}, {"variant", "q_inverse"}},
        {{"max_M", 6}, {"variant", "modulus3n_seed"}}},
       [](const Json& p, std::uint64_t) {
         if (has(p, "M1") || has(p, "M2")) {
           return verify_euler_a2(has(p, "M1") ? I(p, "M1") : 0, has(p, "M2") ? I(p, "M2") : 0, S(p, "variant"));
         }
         return verify_euler_a2_range(I(p, "max_M"), S(p, "variant"));
       }});
  add({"euler.it1", "Iterated finite sum", "bailey", {{"max_M", 4}}, {{"M1", 0}, {"M2", 0}}, {}, {{"max_M", 2}},
       {{{"max_M", 4}}},
       [](const Json& p, std::uint64_t) {
         if (has(p, "M1") || has(p, "M2")) return verify_it1(has(p, "M1") ? I(p, "M1") : 0, has(p, "M2") ? I(p, "M2") : 0);
         return verify_it1_range(I(p, "max_M"));
       }});

  // Proof layer.
  add({"proof.psiphi", "Strips over mu against strips under lambda, per z-degree", "proof",
       {{"max_weight", 4}, {"Dz", 4}}, {{"lambda", ""}, {"mu", ""}}, {"lambda", "mu"}, {{"max_weight", 2}, {"Dz", 3}},
       {{{"max_weight", 4}, {"Dz", 4}}},
       [](const Json& p, std::uint64_t) {
         if (has(p, "lambda") || has(p, "mu")) {
           return verify_psiphi(has(p, "lambda") ? P(p, "lambda") : Partition(), has(p, "mu") ? P(p, "mu") : Partition(),
                                I(p, "Dz"));
         }
         return verify_psiphi_range(I(p, "max_weight"), I(p, "Dz"));
       }});
  add({"proof.lemma41", "Strip sums with fixed leading column increments", "proof",
       {{"max_weight", 5}, {"max_mask", 3}, {"Dz", 4}}, {{"mu", ""}, {"omega", "1"}}, {"mu"},
       {{"max_weight", 3}, {"max_mask", 2}, {"Dz", 3}}, {{{"max_weight", 5}, {"max_mask", 3}, {"Dz", 4}}},
       [](const Json& p, std::uint64_t) {
         if (has(p, "mu") || has(p, "omega")) {
           return verify_lemma41(has(p, "mu") ? P(p, "mu") : Partition(),
                                 StripMask::parse(has(p, "omega") ? S(p, "omega") : "1"), I(p, "Dz"));
         }
         return verify_lemma41_range(I(p, "max_weight"), I(p, "max_mask"), I(p, "Dz"));
       }});
  add({"proof.ab2", "Ascent/descent identity in a_i, b_i with Pell term counts", "proof", {{"k_max", 6}},
       {{"k", 1}, {"convention", "without"}}, {}, {{"k_max", 3}}, {{{"k_max", 6}}},
       [](const Json& p, std::uint64_t) {
         if (has(p, "k")) return verify_ab2(I(p, "k"), has(p, "convention") ? S(p, "convention") : "without");
         return verify_ab2_range(I(p, "k_max"));
       }});

  // Macdonald-side and bounded sums.
  add({"s6.npsom2", "Macdonald c'-weighted sum, q = 0 reduction", "bounded", {{"n", 2}, {"D", 5}, {"variant", "q0"}},
       Json::object(), {}, {{"n", 2}, {"D", 4}, {"variant", "q0"}}, {{{"n", 3}, {"D", 5}, {"variant", "q0"}}},
       [](const Json& p, std::uint64_t) { return verify_npsom2(I(p, "n"), I(p, "D"), S(p, "variant")); }});
  add({"s6.psiqt", "(q,t) strip sum with psi(q,t) and c'", "bounded",
       {{"max_weight", 3}, {"max_j", 4}, {"points", kDefaultPoints}}, {{"mu", ""}, {"j", 0}}, {"mu"},
       {{"max_weight", 2}, {"max_j", 2}, {"points", 3}}, {{{"max_weight", 3}, {"max_j", 4}, {"points", kDefaultPoints}}},
       [](const Json& p, std::uint64_t seed) {
         if (has(p, "mu") || has(p, "j")) {
           return verify_psiqt(has(p, "mu") ? P(p, "mu") : Partition(), has(p, "j") ? I(p, "j") : 0, seed,
                               I(p, "points"));
         }
         return verify_psiqt_range(I(p, "max_weight"), I(p, "max_j"), seed, I(p, "points"));
       }});
  add({"s6.an_extension", "Specialized A_rank chain with two generic alphabets", "bounded",
       {{"rank", 3}, {"D", 4}, {"N", 15}}, Json::object(), {}, {{"rank", 3}, {"D", 3}, {"N", 10}},
       {{{"rank", 2}, {"D", 4}, {"N", 15}}, {{"rank", 3}, {"D", 4}, {"N", 15}}, {{"rank", 4}, {"D", 4}, {"N", 15}}},
       [](const Json& p, std::uint64_t) { return verify_an_extension(I(p, "rank"), I(p, "D"), I(p, "N")); }});
  add({"s6.a3_isolated", "A3 chain with both outer alphabets specialized", "bounded", {{"D", 4}, {"N", 15}},
       Json::object(), {}, {{"D", 3}, {"N", 10}}, {{{"D", 4}, {"N", 15}}},
       [](const Json& p, std::uint64_t) { return verify_a3_isolated(I(p, "D"), I(p, "N")); }});
  add({"s6.stem", "Bounded sums of P_{2l} and P_l over sign vectors", "bounded",
       {{"n", 3}, {"k_max", 3}, {"points", kDefaultPoints}}, Json::object(), {},
       {{"n", 2}, {"k_max", 2}, {"points", 3}},
       {{{"n", 1}, {"k_max", 4}, {"points", kDefaultPoints}},
        {{"n", 2}, {"k_max", 4}, {"points", kDefaultPoints}},
        {{"n", 3}, {"k_max", 3}, {"points", kDefaultPoints}}},
       [](const Json& p, std::uint64_t seed) {
         return verify_stem(I(p, "n"), I(p, "k_max"), seed, I(p, "points"));
       }});
  {
    std::vector<Json> full;
    for (int n = 1; n <= 4; ++n) {
      for (int k = 1; k <= 3; ++k) full.push_back({{"n", n}, {"k", k}, {"Dz", 6}});
    }
    add({"s6.st", "Principal specialization of the bounded even-part sum", "bounded", {{"n", 3}, {"k", 2}, {"Dz", 6}},
         Json::object(), {}, {{"n", 2}, {"k", 1}, {"Dz", 4}}, full,
         [](const Json& p, std::uint64_t) { return verify_st(I(p, "n"), I(p, "k"), I(p, "Dz")); }});
    add({"s6.st2", "Principal specialization of the bounded q^{n(l)} sum", "bounded",
         {{"n", 3}, {"k", 2}, {"Dz", 6}}, Json::object(), {}, {{"n", 2}, {"k", 1}, {"Dz", 4}}, full,
         [](const Json& p, std::uint64_t) { return verify_st2(I(p, "n"), I(p, "k"), I(p, "Dz")); }});
  }
  add({"s6.thmpf", "Bounded q^{n(l)} sum as a sum over subsets", "bounded",
       {{"n", 3}, {"k_max", 4}, {"points", kDefaultPoints}}, Json::object(), {},
       {{"n", 2}, {"k_max", 2}, {"points", 3}},
       {{{"n", 1}, {"k_max", 4}, {"points", kDefaultPoints}},
        {{"n", 2}, {"k_max", 4}, {"points", kDefaultPoints}},
        {{"n", 3}, {"k_max", 4}, {"points", kDefaultPoints}},
        {{"n", 4}, {"k_max", 4}, {"points", kDefaultPoints}}},
       [](const Json& p, std::uint64_t seed) {
         return verify_thmpf(I(p, "n"), I(p, "k_max"), seed, I(p, "points"));
       }});
  {
    std::vector<Json> full;
    for (int k = 1; k <= 3; ++k) {
      for (int s = 1; s <= 2; ++s) full.push_back({{"k", k}, {"z_power", s}, {"N", 30}});
    }
    add({"s6.fulman", "Infinite-n bounded sum at z = q^s", "bounded", {{"k", 1}, {"z_power", 1}, {"N", 30}},
         Json::object(), {}, {{"k", 1}, {"z_power", 2}, {"N", 20}}, full,
         [](const Json& p, std::uint64_t) { return verify_fulman(I(p, "k"), I(p, "z_power"), I(p, "N")); }});
  }
  return c;
}

void check_value(const CatalogEntry& e, const std::string& key, const Json& v) {
  for (const auto& pk : e.partition_keys) {
    if (pk == key) {
      try {
        Partition::parse(v.get<std::string>());
      } catch (const std::invalid_argument& ex) {
        throw UsageError("bad partition for " + key + ": " + ex.what());
      }
    }
  }
  if (key == "omega") {
    try {
      StripMask::parse(v.get<std::string>());
    } catch (const std::invalid_argument& ex) {
      throw UsageError(std::string("bad mask: ") + ex.what());
    }
  }
  if (key == "k" && v.is_string()) parse_shift(v.get<std::string>());
}

const Json* expected_type(const CatalogEntry& e, const std::string& key) {
  if (e.defaults.contains(key)) return &e.defaults.at(key);
  if (e.optional.contains(key)) return &e.optional.at(key);
  return nullptr;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry& find_entry(const std::string& id) {
  for (const auto& e : catalog()) {
    if (e.id == id) return e;
  }
  throw UsageError("unknown identity '" + id + "' (see `hlq list`)");
}

Json coerce_param(const CatalogEntry& e, const std::string& key, const std::string& text) {
  const Json* t = expected_type(e, key);
  if (t == nullptr) throw UsageError("identity " + e.id + " has no parameter '" + key + "'");
  if (t->is_number_integer()) {
    const auto v = parse_int(text);
    if (!v) throw UsageError("parameter " + key + " expects an integer, got '" + text + "'");
    return *v;
  }
  return text;
}

Json resolve_params(const CatalogEntry& e, const Json& overrides) {
  Json p = e.defaults;
  for (const auto& [key, v] : overrides.items()) {
    const Json* t = expected_type(e, key);
    if (t == nullptr) throw UsageError("identity " + e.id + " has no parameter '" + key + "'");
    if (t->is_number_integer() != v.is_number_integer() || t->is_string() != v.is_string()) {
      throw UsageError("parameter " + key + " has the wrong type");
    }
    check_value(e, key, v);
    p[key] = v;
  }
  return p;
}

VerifyReport run_entry(const CatalogEntry& e, const Json& overrides, std::uint64_t seed) {
  const Json p = resolve_params(e, overrides);
  VerifyReport r = e.run(p, seed);
  r.identity_id = e.id;
  r.seed = seed;
  return r;
}

}  // namespace hlq
