#include <catch_amalgamated.hpp>

#include "twogen/verifier.hpp"

using namespace twogen;

TEST_CASE("divisors and Sylow counts") {
  CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(1) == std::vector<std::uint64_t>{1});
  CHECK(sylow_count_candidates(12, 2) == std::vector<std::uint64_t>{1, 3});
  CHECK(sylow_count_candidates(12, 3) == std::vector<std::uint64_t>{1, 4});
  CHECK(sylow_count_candidates(63, 7) == std::vector<std::uint64_t>{1});
  CHECK(sylow_count_candidates(60, 5) == std::vector<std::uint64_t>{1, 6});
  CHECK(forced_normal_sylow_prime(factorize(63)) == 7);
  CHECK(forced_normal_sylow_prime(factorize(12)) == 0);
  CHECK(forced_normal_sylow_prime(factorize(36)) == 0);
  CHECK(forced_normal_sylow_prime(factorize(20)) == 5);
  CHECK(forced_normal_sylow_prime(factorize(18)) == 3);
}

TEST_CASE("full catalogs have the known number of groups") {
  // Numbers of isomorphism classes of groups of these orders.
  const std::pair<std::uint64_t, std::size_t> known[] = {{1, 1},  {2, 1},  {4, 2},  {9, 2},  {12, 5},
                                                         {15, 1}, {18, 5}, {20, 5}, {21, 2}, {28, 4},
                                                         {44, 4}, {50, 5}, {63, 4}, {75, 3}, {147, 6}};
  for (auto [n, count] : known) {
    const Catalog cat = catalog(n);
    INFO("order " << n << ": " << cat.basis);
    CHECK(cat.completeness == Completeness::Full);
    CHECK(cat.entries.size() == count);
    for (const auto& e : cat.entries) {
      CHECK(e.group.order() == n);
      CHECK(validate(e.group).ok);
    }
    for (std::size_t i = 1; i < cat.entries.size(); ++i)
      CHECK(cat.entries[i - 1].group.recipe() < cat.entries[i].group.recipe());
  }
}

TEST_CASE("d = 3 groups in full catalogs") {
  auto count_three = [](std::uint64_t n) {
    std::size_t k = 0;
    for (const auto& e : catalog(n).entries) k += e.d_min >= 3;
    return k;
  };
  CHECK(count_three(18) == 1);
  CHECK(count_three(50) == 1);
  // order 147: the scalar action and the (w, w^2) action share spectrum and
  // center; only d separates them
  CHECK(count_three(147) == 1);
  CHECK(count_three(63) == 0);
  CHECK(count_three(75) == 0);
}

TEST_CASE("sample catalogs") {
  const Catalog c16 = catalog(16);
  CHECK(c16.completeness == Completeness::Sample);
  bool has_rank_four = false;
  for (const auto& e : c16.entries) has_rank_four = has_rank_four || e.d_min == 4;
  CHECK(has_rank_four);

  const Catalog c60 = catalog(60);
  CHECK(c60.completeness == Completeness::Sample);
  bool has_psl = false;
  for (const auto& e : c60.entries) has_psl = has_psl || e.group.recipe() == "psl2:5";
  CHECK(has_psl);

  CHECK(catalog(36).completeness == Completeness::Sample);
  CHECK(catalog(40, {0, 4}).entries.size() <= 4);
}

TEST_CASE("verify_order") {
  const auto r12 = verify_order(12);
  CHECK(r12.predicate_verdict);
  CHECK(r12.oracle_verdict);
  CHECK(r12.completeness == Completeness::Full);
  CHECK(r12.agree);
  CHECK(r12.groups.size() == 5);

  const auto r18 = verify_order(18);
  CHECK_FALSE(r18.predicate_verdict);
  CHECK_FALSE(r18.oracle_verdict);
  CHECK(r18.failure_reason == FailureReason{FailureKind::BadPair, 3, 2});
  CHECK(r18.agree);

  const auto r75 = verify_order(75);
  CHECK(r75.predicate_verdict);
  CHECK(r75.oracle_verdict);
  CHECK(r75.agree);

  const auto r16 = verify_order(16);
  CHECK(r16.completeness == Completeness::Sample);
  CHECK_FALSE(r16.oracle_verdict);
  CHECK(r16.agree);
}

TEST_CASE("verify_range") {
  const auto one = verify_range(1, 1);
  REQUIRE(one.reports.size() == 1);
  CHECK(one.full_agreements == 1);
  CHECK(one.ok());

  const auto sixteen = verify_range(16, 16);
  CHECK(sixteen.sample_checks == 1);
  CHECK(sixteen.refuted == std::vector<std::uint64_t>{16});

  const auto low = verify_range(1, 60);
  CHECK(low.ok());
  CHECK(low.refuted == std::vector<std::uint64_t>{8, 16, 18, 24, 27, 32, 36, 40, 48, 50, 54, 56});
  CHECK(low.full_agreements + low.sample_checks == 60);

  CHECK_THROWS_AS(verify_range(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(verify_range(5, 3), std::invalid_argument);
}

TEST_CASE("full tiers up to 200 match the predicate exactly") {
  std::size_t full = 0;
  for (std::uint64_t n = 1; n <= 200; ++n) {
    const auto r = verify_order(n);
    INFO("order " << n);
    REQUIRE(r.agree);
    if (r.completeness != Completeness::Full) continue;
    ++full;
    REQUIRE(r.predicate_verdict == r.oracle_verdict);
  }
  CHECK(full > 100);
}

TEST_CASE("budget exhaustion degrades to a sample") {
  const Catalog cat = catalog(196, {1, 96});
  CHECK(cat.budget_exhausted);
  CHECK(cat.completeness == Completeness::Sample);
  CHECK(cat.basis.find("budget exhausted") != std::string::npos);
  const auto r = verify_order(196, {1, 96});
  CHECK(r.completeness == Completeness::Sample);
  CHECK(r.agree);
}
