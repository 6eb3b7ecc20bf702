#include <fstream>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "caforge/ca_search.hpp"
#include "caforge/poly_io.hpp"
#include "caforge/reports.hpp"
#include "caforge/rng.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace caforge;
using tu::U;

namespace {

nlohmann::json load_golden(const std::string& name) {
  std::ifstream in(std::string(CA_FORGE_GOLDEN_DIR) + "/" + name);
  REQUIRE_MESSAGE(in.good(), "missing golden file ", name);
  return nlohmann::json::parse(in);
}

nlohmann::json plain(const ordered_json& j) {
  return nlohmann::json::parse(j.dump());
}

}  // namespace

TEST_CASE("hypothesis and pure-power classification") {
  Field q = Field::rationals();
  CAReport pure = ca_check(U("X^4 - 8*X^3 + 24*X^2 - 32*X + 16", q));  // (X-2)^4
  CHECK(pure.satisfies_hypothesis);
  CHECK(pure.is_pure_power);
  CHECK_FALSE(pure.is_counterexample);
  REQUIRE(pure.gcd_degrees.size() == 3);
  for (long d : pure.gcd_degrees) CHECK(d >= 1);

  CAReport generic = ca_check(U("X^3 + X + 1", q));
  CHECK_FALSE(generic.satisfies_hypothesis);
  CHECK_FALSE(generic.is_counterexample);

  Field f2 = Field::prime(2);
  CAReport cx = ca_check(U("X^3 + X", f2));
  CHECK(cx.satisfies_hypothesis);
  CHECK_FALSE(cx.is_pure_power);
  CHECK(cx.is_counterexample);
  CHECK(cx.gcd_degrees == std::vector<long>{2, 1});

  CAReport cx2 = ca_check(U("X^3 + X^2", f2));
  CHECK(cx2.is_counterexample);

  Field f3 = Field::prime(3);
  CAReport frob = ca_check(U("X^3", f3));
  CHECK(frob.satisfies_hypothesis);
  CHECK(frob.is_pure_power);
  CHECK_FALSE(frob.is_counterexample);
  CAReport shifted = ca_check(U("X^3 + 2", f3));  // (X - 1)^3 in F_3
  CHECK(shifted.is_pure_power);

  CHECK_THROWS_AS(ca_check(U("2*X^2", q)), std::invalid_argument);
  CHECK_THROWS_AS(ca_check(U("X + 1", q)), std::invalid_argument);
}

TEST_CASE("weighted canonicalization") {
  std::vector<std::uint32_t> y{0, 1};
  CHECK(weighted_canonical(y, 2) == y);

  Rng rng(100);
  for (int it = 0; it < 200; ++it) {
    std::uint32_t p = std::vector<std::uint32_t>{3, 5, 7}[rng.below(3)];
    int len = static_cast<int>(rng.int_in(1, 4));
    std::vector<std::uint32_t> v;
    for (int i = 0; i < len; ++i)
      v.push_back(static_cast<std::uint32_t>(rng.below(p)));
    std::vector<std::uint32_t> canon = weighted_canonical(v, p);
    CHECK(weighted_canonical(canon, p) == canon);

    std::uint32_t lam = 1 + static_cast<std::uint32_t>(rng.below(p - 1));
    std::vector<std::uint32_t> scaled;
    std::uint64_t pw = 1;
    for (int i = 0; i < len; ++i) {
      pw = pw * lam % p;
      scaled.push_back(static_cast<std::uint32_t>(
          pw * v[static_cast<std::size_t>(i)] % p));
    }
    CHECK(weighted_canonical(scaled, p) == canon);
  }
}

TEST_CASE("orbit enumeration of the coefficient-side loci") {
  using Pts = std::vector<std::vector<std::uint32_t>>;
  Pts census = enumerate_xn_points(3, 5, 0);
  Pts expect{{0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}, {1, 3}, {1, 4}};
  CHECK(census == expect);

  CHECK(enumerate_xn_points(3, 2, 2) == Pts{{0, 1}, {1, 0}});
  CHECK(enumerate_xn_points(3, 3, 2).empty());
  CHECK(enumerate_xn_points(3, 5, 2).empty());
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u})
    CHECK(enumerate_xn_points(2, p, 1).empty());

  CHECK_THROWS_AS(enumerate_xn_points(3, 5, 3), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_xn_points(3, 5, -1), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_xn_points(3, 4, 0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_xn_points(9, 5, 0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_xn_points(3, 101, 2, 10), BudgetError);
}

TEST_CASE("exhaustive scans and cross-validation") {
  SearchResult r32 = search_counterexamples(3, 2);
  CHECK(r32.scanned == 4);
  CHECK(r32.cross_validated);
  REQUIRE(r32.counterexamples.size() == 2);
  std::set<std::string> polys;
  for (const CAReport& c : r32.counterexamples) {
    CHECK(c.is_counterexample);
    polys.insert(serialize(c.f));
  }
  CHECK(polys == std::set<std::string>{"X^3 + X", "X^3 + X^2"});

  CHECK(search_counterexamples(3, 3).counterexamples.empty());
  CHECK(search_counterexamples(3, 5).counterexamples.empty());
  CHECK(search_counterexamples(3, 3).cross_validated);

  SearchResult r43 = search_counterexamples(4, 3);
  CHECK(r43.scanned == 27);
  CHECK(r43.cross_validated);
  std::set<std::string> p43;
  for (const CAReport& c : r43.counterexamples) p43.insert(serialize(c.f));
  CHECK(p43 == std::set<std::string>{"X^4 + X", "X^4 + 2*X", "X^4 + X^3",
                                     "X^4 + 2*X^3"});

  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    SearchResult r = search_counterexamples(2, p);
    CHECK(r.counterexamples.empty());
    CHECK(r.cross_validated);
  }

  CHECK_THROWS_AS(search_counterexamples(3, 101, 100), BudgetError);
}

TEST_CASE("scan reports match the golden records") {
  CHECK(plain(report_json(search_counterexamples(3, 2))) ==
        load_golden("search_n3_p2.json"));
  CHECK(plain(report_json(search_counterexamples(3, 3))) ==
        load_golden("search_n3_p3.json"));
  CHECK(plain(report_json(search_counterexamples(3, 5))) ==
        load_golden("search_n3_p5.json"));
  CHECK(plain(report_json(search_counterexamples(4, 3))) ==
        load_golden("search_n4_p3.json"));
  CHECK(plain(points_json(enumerate_xn_points(3, 5, 0))) ==
        load_golden("points_n3_p5_l0.json"));
  CHECK(plain(report_json(bad_prime_scan(3, 7))) ==
        load_golden("badprimes_n3.json"));
}

TEST_CASE("bad prime scan aggregates per-prime scans") {
  BadPrimeScan s = bad_prime_scan(3, 7);
  CHECK(s.n == 3);
  CHECK(s.pmax == 7);
  REQUIRE(s.entries.size() == 4);
  CHECK(s.entries[0].p == 2);
  CHECK(s.entries[0].count == 2);
  CHECK(s.entries[1].count == 0);
  CHECK(s.entries[2].count == 0);
  CHECK(s.entries[3].count == 0);
  for (const auto& e : s.entries) {
    CHECK_FALSE(e.skipped);
    CHECK(e.cross_validated);
  }

  BadPrimeScan tight = bad_prime_scan(3, 7, 30);
  bool any_skipped = false;
  for (const auto& e : tight.entries) {
    if (e.skipped) any_skipped = true;
  }
  CHECK(any_skipped);
}

TEST_CASE("regularity sweeps over index tuples") {
  SweepReport rq = tuple_regularity_sweep(3, 2, Field::rationals());
  CHECK(rq.kind == "regseq");
  CHECK(rq.results.size() == 9);
  CHECK(rq.all_regular);
  CHECK_FALSE(rq.any_budget);
  for (const TupleResult& t : rq.results) {
    CHECK(t.outcome == TupleOutcome::regular);
    CHECK(t.dimension == 0);
  }

  SweepReport r2 = tuple_regularity_sweep(3, 2, Field::prime(2));
  CHECK_FALSE(r2.all_regular);
  int bad = 0;
  for (const TupleResult& t : r2.results)
    if (t.outcome == TupleOutcome::non_regular) ++bad;
  CHECK(bad > 0);

  CHECK(tuple_regularity_sweep(3, 2, Field::prime(3)).all_regular);
  CHECK(tuple_regularity_sweep(3, 2, Field::prime(5)).all_regular);

  SweepReport rl1 = tuple_regularity_sweep(4, 1, Field::rationals());
  CHECK(rl1.results.size() == 4);
  CHECK(rl1.all_regular);
}

TEST_CASE("deformed systems keep the parameter line") {
  SweepReport m2 = mainprop_verify(2);
  CHECK(m2.kind == "mainprop");
  CHECK(m2.results.size() == 2);
  CHECK(m2.all_regular);
  for (const TupleResult& t : m2.results) CHECK(t.dimension == 1);

  SweepReport m3 = mainprop_verify(3);
  CHECK(m3.results.size() == 9);
  CHECK(m3.all_regular);
}

TEST_CASE("fiber specializations of the deformation") {
  Field q = Field::rationals();
  auto c = [&](long num, long den) {
    return Coeff::from_int(q, num) / Coeff::from_int(q, den);
  };
  FiberScanReport f = fiber_scan(3, {1, 2},
                                 {c(0, 1), c(1, 2), c(2, 3), c(1, 1)});
  REQUIRE(f.fibers.size() == 4);
  CHECK(f.fibers[0].dimension == 0);
  CHECK_FALSE(f.fibers[0].singular);
  CHECK(f.fibers[1].dimension == 1);
  CHECK(f.fibers[1].singular);
  CHECK(f.fibers[2].dimension == 0);
  CHECK(f.fibers[3].dimension == 0);

  FiberScanReport g = fiber_scan(3, {3, 3}, {c(1, 2)});
  CHECK(g.fibers[0].dimension == 0);
  CHECK_FALSE(g.fibers[0].singular);

  FiberScanReport h = fiber_scan(4, {1, 1, 1},
                                 {c(0, 1), c(2, 3), c(3, 5), c(-1, 3), c(1, 2)});
  CHECK(h.fibers[0].dimension == 0);
  CHECK(h.fibers[1].dimension == 0);
  CHECK(h.fibers[2].dimension == 0);
  CHECK(h.fibers[3].dimension == 0);
  CHECK(h.fibers[4].dimension == 1);
  CHECK(h.fibers[4].singular);
}

TEST_CASE("arithmetic marker values") {
  CHECK(q_value(1) == 1);
  CHECK(q_value(2) == 2);
  CHECK(q_value(4) == 4);
  CHECK(q_value(6) == 6);
  CHECK(q_value(7) == 7);
  CHECK(q_value(3) == 3);
  CHECK(q_value(12) == 11);
  CHECK(q_value(15) == 14);
}

TEST_CASE("length ladder verification") {
  JcReport j = jc_lower_bound(4, 3, Field::rationals());
  CHECK(j.n == 4);
  CHECK(j.q == 4);
  CHECK(j.verified == 3);
  CHECK_FALSE(j.failure_found);
  CHECK_FALSE(j.budget_hit);

  JcReport capped = jc_lower_bound(4, 9, Field::rationals());
  CHECK(capped.lmax == 3);
  CHECK(capped.verified == 3);

  JcReport bad = jc_lower_bound(3, 2, Field::prime(2));
  CHECK(bad.failure_found);
  CHECK(bad.verified < 2);
}

TEST_CASE("reports are deterministic") {
  std::string a = report_json(search_counterexamples(3, 5)).dump(2);
  std::string b = report_json(search_counterexamples(3, 5)).dump(2);
  CHECK(a == b);

  std::string s1 = report_json(tuple_regularity_sweep(3, 2, Field::rationals())).dump(2);
  std::string s2 = report_json(tuple_regularity_sweep(3, 2, Field::rationals())).dump(2);
  CHECK(s1 == s2);
}
