#include <catch_amalgamated.hpp>

#include <numeric>
#include <tuple>

#include "oracles.hpp"
#include "twogen/constructions.hpp"
#include "twogen/group.hpp"
#include "twogen/recipe.hpp"
#include "twogen/verifier.hpp"

using namespace twogen;

namespace {

Group from_rows(const std::vector<std::vector<std::uint16_t>>& rows) {
  std::vector<std::uint16_t> table;
  for (const auto& r : rows) table.insert(table.end(), r.begin(), r.end());
  return Group(rows.size(), table, "raw");
}

const char* const kSmallRecipes[] = {
    "cyclic:1",   "cyclic:2", "cyclic:6",    "elab:2:2",   "elab:2:3",   "elab:3:2",    "d:3",
    "d:4",        "d:6",      "dic:2",       "dic:3",      "a4",         "witness:3:2", "meta:3:4:2",
    "meta:7:3:2", "d:5*cyclic:2", "elab:2:2*cyclic:3", "cubewit:2:16", "cubewit:2:24", "elab:2:4",
    "cyclic:2*cyclic:4*cyclic:2"};

}  // namespace

TEST_CASE("validate accepts constructed groups") {
  for (const char* r : kSmallRecipes) {
    const Group g = build_from_recipe(r);
    INFO(r);
    CHECK(validate(g).ok);
    CHECK(validate_exhaustive(g).ok);
  }
}

TEST_CASE("validate rejects a non-associative loop") {
  // Latin square with identity 0 where every element squares to 0; a group of
  // order 5 has no involutions, so this cannot be associative.
  const Group loop = from_rows({{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}});
  const auto light = validate(loop);
  const auto full = validate_exhaustive(loop);
  CHECK_FALSE(light.ok);
  CHECK_FALSE(full.ok);
  CHECK(light.diagnostic.find("associativity") != std::string::npos);
}

TEST_CASE("validate rejects broken tables") {
  const Group good = cyclic(4);
  std::vector<std::uint16_t> t(good.table().begin(), good.table().end());
  std::swap(t[1 * 4 + 1], t[1 * 4 + 2]);  // row 1 still a permutation, columns are not
  CHECK_FALSE(validate(Group(4, t, "raw")).ok);

  // identity not in position 0
  const Group shifted = from_rows({{1, 0}, {0, 1}});
  CHECK_FALSE(validate(shifted).ok);

  CHECK_THROWS_AS(Group(2, {0, 1, 1}, "raw"), std::invalid_argument);
  CHECK_THROWS_AS(Group(2, {0, 1, 1, 2}, "raw"), std::invalid_argument);
}

TEST_CASE("Light's test agrees with the exhaustive check on every loop of order 5 and 6") {
  // Reduced Latin squares are exactly the loops with identity 0. Labelled
  // groups among them: 4!/|Aut Z5| = 6 for n = 5, 5!/2 + 5!/6 = 80 for n = 6.
  for (auto [n, groups, loops] : {std::tuple<std::size_t, int, int>{5, 6, 56}, {6, 80, 9408}}) {
    std::vector<std::uint16_t> t(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) t[i] = t[i * n] = static_cast<std::uint16_t>(i);
    int seen = 0, associative = 0;
    auto fill = [&](auto&& self, std::size_t cell) -> void {
      if (cell == n * n) {
        const Group g(n, t, "raw");
        const bool ok = validate(g).ok;
        REQUIRE(ok == validate_exhaustive(g).ok);
        ++seen;
        associative += ok;
        return;
      }
      const std::size_t r = cell / n, c = cell % n;
      if (r == 0 || c == 0) return self(self, cell + 1);
      for (std::uint16_t v = 0; v < n; ++v) {
        bool clash = false;
        for (std::size_t k = 0; k < c && !clash; ++k) clash = t[r * n + k] == v;
        for (std::size_t k = 0; k < r && !clash; ++k) clash = t[k * n + c] == v;
        if (clash) continue;
        t[r * n + c] = v;
        self(self, cell + 1);
      }
    };
    fill(fill, 0);
    CHECK(seen == loops);
    CHECK(associative == groups);
  }
}

TEST_CASE("closure matches the naive fixpoint") {
  for (const char* r : kSmallRecipes) {
    const Group g = build_from_recipe(r);
    INFO(r);
    for (Elem a = 0; a < g.order(); a += 3)
      for (Elem b = 0; b < g.order(); b += 5) {
        const auto got = closure(g, {a, b});
        const auto want = oracle::closure(g, {a, b});
        REQUIRE(std::vector<Elem>(want.begin(), want.end()) == got);
      }
  }
  CHECK(closure(cyclic(6), {}) == std::vector<Elem>{0});
  CHECK_THROWS_AS(closure(cyclic(6), {6}), std::out_of_range);
}

TEST_CASE("element orders and spectra") {
  for (const char* r : kSmallRecipes) {
    const Group g = build_from_recipe(r);
    INFO(r);
    CHECK(order_spectrum(g) == oracle::spectrum(g));
    const auto orders = element_orders(g);
    for (Elem a = 0; a < g.order(); ++a) REQUIRE(orders[a] == element_order(g, a));
  }
  CHECK(spectrum_to_string(order_spectrum(build_from_recipe("d:3"))) == "{1:1,2:3,3:2}");
  CHECK_THROWS_AS(element_order(cyclic(3), 3), std::out_of_range);
}

TEST_CASE("d_min agrees with the unpruned search") {
  for (const char* r : kSmallRecipes) {
    const Group g = build_from_recipe(r);
    INFO(r);
    const unsigned want = oracle::d(g);
    CHECK(d_min(g, false) == want);
    if (is_cube_free(factorize(g.order()))) CHECK(d_min(g, true) == want);
  }
}

TEST_CASE("d_min on catalog groups up to order 24") {
  for (std::uint64_t n = 1; n <= 24; ++n)
    for (const auto& e : catalog(n).entries) {
      INFO(e.group.recipe());
      REQUIRE(e.d_min == oracle::d(e.group));
    }
}

TEST_CASE("d_min of larger known groups") {
  CHECK(d_min(elementary_abelian(2, 5), false) == 5);
  CHECK(d_min(elementary_abelian(3, 3), false) == 3);
  CHECK(d_min(witness_p2q(7, 3), false) == 3);
  CHECK(d_min(psl2(7), false) == 2);
  CHECK(d_min(cyclic(1)) == 0);
  CHECK(d_min(cyclic(97)) == 1);
}

TEST_CASE("abelianization rank") {
  CHECK(abelianization_rank(elementary_abelian(2, 3)) == 3);
  CHECK(abelianization_rank(alternating4()) == 1);
  CHECK(abelianization_rank(psl2(5)) == 0);
  CHECK(abelianization_rank(witness_p2q(3, 2)) == 1);
}

TEST_CASE("center and normality") {
  CHECK(center_size(build_from_recipe("d:4")) == 2);
  CHECK(center_size(build_from_recipe("dic:2")) == 2);
  CHECK(center_size(alternating4()) == 1);
  CHECK(center_size(cyclic(9)) == 9);
  const Group s3 = build_from_recipe("d:3");
  const auto rotations = closure(s3, {1});
  CHECK(rotations.size() == 3);
  CHECK(is_normal_subgroup(s3, rotations));
  Elem reflection = 0;
  for (Elem x = 1; x < s3.order(); ++x)
    if (element_order(s3, x) == 2) reflection = x;
  CHECK_FALSE(is_normal_subgroup(s3, closure(s3, {reflection})));
}

TEST_CASE("generating graph matches brute force") {
  for (const char* r : kSmallRecipes) {
    const Group g = build_from_recipe(r);
    INFO(r);
    CHECK(generating_graph(g).edges == oracle::generating_pairs(g));
  }
  const auto z5 = generating_graph(cyclic(5));
  CHECK(z5.edges.size() == 10);
  CHECK(generating_graph(elementary_abelian(2, 3)).edges.empty());
}

TEST_CASE("direct products") {
  const Group s3 = build_from_recipe("d:3");
  const Group z4 = cyclic(4);
  const Group g = direct_product(s3, z4);
  CHECK(g.order() == 24);
  CHECK(g.recipe() == "d:3*cyclic:4");
  CHECK(validate(g).ok);

  // element orders of (a, b) are lcm(|a|, |b|)
  OrderSpectrum want;
  for (auto [oa, ca] : order_spectrum(s3))
    for (auto [ob, cb] : order_spectrum(z4)) want[std::lcm(oa, ob)] += ca * cb;
  CHECK(order_spectrum(g) == want);

  CHECK(d_min(direct_product(cyclic(2), cyclic(2)), false) == 2);
  CHECK(d_min(direct_product(witness_p2q(3, 2), cyclic(5)), false) == 3);
}

TEST_CASE("size cap") {
  CHECK(max_group_order() == kDefaultMaxOrder);
  CHECK_THROWS_AS(cyclic(kDefaultMaxOrder + 1), SizeCapError);
  CHECK_NOTHROW(cyclic(kDefaultMaxOrder));
}
