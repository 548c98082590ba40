#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "twogen/constructions.hpp"
#include "twogen/recipe.hpp"

using namespace twogen;

namespace {

// Count of M in GL(2, p) with M^k = I, by direct matrix arithmetic.
std::size_t count_matrices_with_power_one(std::uint64_t p, std::uint64_t k) {
  std::size_t count = 0;
  for (std::uint64_t a = 0; a < p; ++a)
    for (std::uint64_t b = 0; b < p; ++b)
      for (std::uint64_t c = 0; c < p; ++c)
        for (std::uint64_t d = 0; d < p; ++d) {
          if ((a * d + p * p - b * c) % p == 0) continue;
          std::uint64_t x = 1, y = 0, z = 0, w = 1;
          for (std::uint64_t i = 0; i < k; ++i) {
            const std::uint64_t nx = (x * a + y * c) % p, ny = (x * b + y * d) % p;
            const std::uint64_t nz = (z * a + w * c) % p, nw = (z * b + w * d) % p;
            x = nx, y = ny, z = nz, w = nw;
          }
          if (x == 1 && y == 0 && z == 0 && w == 1) ++count;
        }
  return count;
}

}  // namespace

TEST_CASE("cyclic and elementary abelian groups") {
  CHECK(cyclic(7).order() == 7);
  CHECK(order_spectrum(cyclic(6)) == OrderSpectrum{{1, 1}, {2, 1}, {3, 2}, {6, 2}});
  CHECK(order_spectrum(elementary_abelian(3, 2)) == OrderSpectrum{{1, 1}, {3, 8}});
  CHECK(elementary_abelian(2, 3).recipe() == "elab:2:3");
  CHECK_THROWS_AS(elementary_abelian(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(cyclic(0), std::invalid_argument);
}

TEST_CASE("semidirect product uses phi at h1 inverse") {
  // Z_7 x| Z_3 with the generator acting by x -> 2x.
  const Group n = cyclic(7), h = cyclic(3);
  const Elem gen = 1;
  const Permutation image = unit_automorphism(7, 2);
  const auto phi = action_from_generator_images(h, n, std::span<const Elem>(&gen, 1),
                                                std::span<const Permutation>(&image, 1), "2");
  REQUIRE(phi);
  const Group g = semidirect_product(n, h, *phi);
  CHECK(g.order() == 21);
  CHECK(g.recipe() == "sdp(cyclic:7;cyclic:3;2)");
  CHECK(validate_exhaustive(g).ok);
  // (n1, h1)(n2, h2) = (n1 + u^{-h1} n2, h1 + h2) with u = 2, u^{-1} = 4 mod 7
  for (Elem x = 0; x < 21; ++x)
    for (Elem y = 0; y < 21; ++y) {
      const std::uint64_t n1 = x % 7, h1 = x / 7, n2 = y % 7, h2 = y / 7;
      std::uint64_t scale = 1;
      for (std::uint64_t i = 0; i < h1; ++i) scale = scale * 4 % 7;
      const std::uint64_t want = (n1 + scale * n2) % 7 + 7 * ((h1 + h2) % 3);
      REQUIRE(g.mul(x, y) == want);
    }
  CHECK(order_spectrum(g) == OrderSpectrum{{1, 1}, {3, 14}, {7, 6}});
}

TEST_CASE("check_action rejects bad actions") {
  const Group n = cyclic(5), h = cyclic(2);
  Action bad{2, 5, {detail::identity_permutation(5), {0, 2, 3, 4, 1}}, ""};
  CHECK_THROWS_AS(semidirect_product(n, h, bad), std::invalid_argument);  // not an automorphism
  Action wrong_size{3, 5, {}, ""};
  CHECK_THROWS_AS(semidirect_product(n, h, wrong_size), std::invalid_argument);
  // x -> 2x has order 4, so it cannot be the image of an involution
  Action not_hom{2, 5, {detail::identity_permutation(5), unit_automorphism(5, 2)}, ""};
  CHECK_THROWS_AS(semidirect_product(n, h, not_hom), std::invalid_argument);
}

TEST_CASE("non-commuting images are refused") {
  const Group s3 = build_from_recipe("d:3");
  const Group v4 = elementary_abelian(2, 2);
  const auto gens = standard_generators(s3);
  const auto autos = automorphisms_of_order_dividing(v4, 6);
  REQUIRE(autos.size() == 6);  // all of GL(2, 2)
  std::size_t homs = 0, accepted = 0;
  for (const auto& a : autos)
    for (const auto& b : autos) {
      std::vector<Permutation> images{a.perm};
      if (gens.size() == 2) images.push_back(b.perm);
      auto phi = action_from_generator_images(s3, v4, gens, images);
      if (!phi) continue;
      ++homs;
      try {
        check_action(v4, s3, *phi);
        ++accepted;
      } catch (const std::invalid_argument&) {
      }
    }
  REQUIRE(gens.size() == 2);
  // Hom(S3, S3): trivial, 3 onto order-2 subgroups, 6 automorphisms.
  CHECK(homs == 10);
  CHECK(accepted == 4);
  CHECK(enumerate_actions(s3, v4).size() == 4);
}

TEST_CASE("action counts") {
  CHECK(enumerate_actions_cyclic(3, cyclic(7)).size() == 3);
  const auto on_z25 = enumerate_actions_cyclic(3, cyclic(25));
  CHECK(on_z25.size() == 1);
  CHECK(on_z25[0].is_trivial());
  CHECK(enumerate_actions_cyclic(3, elementary_abelian(5, 2)).size() == 21);
  CHECK(enumerate_actions_cyclic(2, elementary_abelian(5, 2)).size() == 32);
  for (auto [p, q] : {std::pair<std::uint64_t, std::uint64_t>{3, 2}, {5, 2}, {7, 3}, {5, 3}, {3, 4}}) {
    INFO(p << " " << q);
    CHECK(enumerate_actions_cyclic(q, elementary_abelian(p, 2)).size() == count_matrices_with_power_one(p, q));
  }
  CHECK(enumerate_actions_cyclic(2, cyclic(8)).size() == 4);
}

TEST_CASE("p^2 q witnesses") {
  for (auto [p, q] : {std::pair<std::uint64_t, std::uint64_t>{3, 2}, {5, 2}, {7, 3}, {13, 3}}) {
    const Group g = witness_p2q(p, q);
    INFO(g.recipe());
    CHECK(g.recipe() == "witness:" + std::to_string(p) + ":" + std::to_string(q));
    CHECK(validate(g).ok);
    CHECK(order_spectrum(g) == OrderSpectrum{{1, 1}, {p, p * p - 1}, {q, p * p * (q - 1)}});
    CHECK(d_min(g, false) == 3);
    // The action is scalar, so every subgroup of the Sylow p-subgroup is normal.
    std::vector<Elem> sylow;
    for (Elem x = 0; x < p * p; ++x) sylow.push_back(x);
    CHECK(is_normal_subgroup(g, sylow));
    for (Elem x = 1; x < p * p; ++x) REQUIRE(is_normal_subgroup(g, closure(g, {x})));
  }
  CHECK_THROWS_AS(witness_p2q(5, 3), std::invalid_argument);
  CHECK_THROWS_AS(witness_p2q(9, 2), std::invalid_argument);
}

TEST_CASE("cube witnesses") {
  const Group g = cube_witness(2, 24);
  CHECK(g.order() == 24);
  CHECK(g.recipe() == "cubewit:2:24");
  CHECK(d_min(g, false) == 3);
  CHECK(d_min(cube_witness(3, 27), false) == 3);
  CHECK(d_min(cube_witness(2, 40), false) == 3);
  CHECK_THROWS_AS(cube_witness(2, 12), std::invalid_argument);
}

TEST_CASE("metacyclic, dihedral, dicyclic") {
  const Group m = metacyclic(7, 3, 2);
  CHECK(validate(m).ok);
  CHECK(is_normal_subgroup(m, closure(m, {1})));
  CHECK(closure(m, {1}).size() == 7);
  CHECK_THROWS_AS(metacyclic(7, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(metacyclic(6, 2, 2), std::invalid_argument);

  for (std::uint64_t n : {3, 4, 5, 6, 9}) {
    const Group d = dihedral(n);
    INFO(n);
    CHECK(d.order() == 2 * n);
    CHECK(validate(d).ok);
    CHECK(d_min(d, false) == 2);
    CHECK(order_spectrum(d)[2] == (n % 2 ? n : n + 1));
  }

  const Group q8 = dicyclic(2);
  CHECK(validate_exhaustive(q8).ok);
  CHECK(order_spectrum(q8) == OrderSpectrum{{1, 1}, {2, 1}, {4, 6}});
  const Group dic3 = dicyclic(3);
  CHECK(validate_exhaustive(dic3).ok);
  CHECK(order_spectrum(dic3) == order_spectrum(metacyclic(3, 4, 2)));
  CHECK(order_spectrum(dic3) == OrderSpectrum{{1, 1}, {2, 1}, {3, 2}, {4, 6}, {6, 2}});
}

TEST_CASE("alternating group A4") {
  const Group a4 = alternating4();
  CHECK(validate_exhaustive(a4).ok);
  CHECK(order_spectrum(a4) == OrderSpectrum{{1, 1}, {2, 3}, {3, 8}});
  CHECK(center_size(a4) == 1);
  CHECK(d_min(a4, false) == 2);
}

TEST_CASE("PSL(2, p)") {
  for (auto [p, order] : {std::pair<std::uint64_t, std::size_t>{5, 60}, {7, 168}, {13, 1092}}) {
    const Group g = psl2(p);
    INFO(p);
    CHECK(g.order() == order);
    CHECK(validate(g).ok);
    CHECK(center_size(g) == 1);
    CHECK(abelianization_rank(g) == 0);
  }
  CHECK(order_spectrum(psl2(5)) == OrderSpectrum{{1, 1}, {2, 15}, {3, 20}, {5, 24}});
  CHECK(order_spectrum(psl2(7)) == OrderSpectrum{{1, 1}, {2, 21}, {3, 56}, {4, 42}, {7, 48}});
  CHECK(d_min(psl2(13), false) == 2);
  CHECK_THROWS_AS(psl2(3), std::invalid_argument);
  CHECK_THROWS_AS(psl2(9), std::invalid_argument);
}

TEST_CASE("order 12 catalog") {
  const auto groups = order12_catalog();
  REQUIRE(groups.size() == 5);
  std::set<OrderSpectrum> spectra;
  for (const auto& g : groups) {
    CHECK(validate_exhaustive(g).ok);
    spectra.insert(order_spectrum(g));
    CHECK(d_min(g, false) == oracle::d(g));
  }
  CHECK(spectra.size() == 5);
}

TEST_CASE("trivial action gives the direct product") {
  for (auto [n, h] : {std::pair<const char*, const char*>{"cyclic:7", "cyclic:3"},
                      {"elab:3:2", "cyclic:4"},
                      {"elab:2:2", "d:3"},
                      {"cyclic:9", "elab:2:2"}}) {
    const Group gn = build_from_recipe(n), gh = build_from_recipe(h);
    const auto actions = enumerate_actions(gh, gn);
    const auto trivial = std::find_if(actions.begin(), actions.end(), [](const Action& a) { return a.is_trivial(); });
    REQUIRE(trivial != actions.end());
    CHECK(std::count_if(actions.begin(), actions.end(), [](const Action& a) { return a.is_trivial(); }) == 1);
    CHECK(semidirect_product(gn, gh, *trivial) == direct_product(gn, gh));
  }
}

TEST_CASE("only the trivial action when q divides neither p - 1 nor p + 1") {
  for (auto [p, q] : {std::pair<std::uint64_t, std::uint64_t>{3, 5}, {5, 7}, {7, 5}, {11, 7}, {13, 11}, {2, 5}}) {
    INFO(p << " " << q);
    const auto actions = enumerate_actions_cyclic(q, elementary_abelian(p, 2));
    REQUIRE(actions.size() == 1);
    CHECK(actions[0].is_trivial());
  }
}
