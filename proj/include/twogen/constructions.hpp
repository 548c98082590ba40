#pragma once

// Builders for concrete groups: cyclic and elementary abelian groups,
// semidirect products from explicit actions, the d = 3 witnesses, split
// metacyclic groups, dihedral/dicyclic groups, A4, PSL(2, p).

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "twogen/arith.hpp"
#include "twogen/group.hpp"

namespace twogen {

/// A permutation of a group's elements.
using Permutation = std::vector<Elem>;

/// Homomorphism from an acting group H (elements 0..acting_order-1) into
/// Aut(N); maps[h] is the automorphism assigned to h.
struct Action {
  std::size_t acting_order = 1;
  std::size_t target_order = 1;
  std::vector<Permutation> maps;
  /// Generator images in recipe syntax ("u" units, "a/b/c/d" matrices);
  /// empty when the action was built by hand.
  std::string descriptor;

  bool is_trivial() const {
    for (const auto& m : maps)
      for (Elem x = 0; x < m.size(); ++x)
        if (m[x] != x) return false;
    return true;
  }
};

inline Group cyclic(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("cyclic: n must be positive");
  check_order_cap(n, "cyclic:" + std::to_string(n));
  return Group::tabulate(n, "cyclic:" + std::to_string(n),
                         [n](Elem a, Elem b) { return static_cast<Elem>((a + b) % n); });
}

/// (Z_p)^k; element x has coordinates x_i = (x / p^i) mod p.
inline Group elementary_abelian(std::uint64_t p, unsigned k) {
  if (!is_prime(p)) throw std::invalid_argument("elementary_abelian: p must be prime");
  if (k == 0) throw std::invalid_argument("elementary_abelian: k must be positive");
  const std::string recipe = "elab:" + std::to_string(p) + ":" + std::to_string(k);
  std::uint64_t n = 1;
  for (unsigned i = 0; i < k; ++i) {
    n *= p;
    check_order_cap(n, recipe);
  }
  return Group::tabulate(n, recipe, [p, k](Elem a, Elem b) {
    Elem result = 0;
    Elem scale = 1;
    for (unsigned i = 0; i < k; ++i) {
      result += static_cast<Elem>(((a % p) + (b % p)) % p) * scale;
      a /= static_cast<Elem>(p);
      b /= static_cast<Elem>(p);
      scale *= static_cast<Elem>(p);
    }
    return result;
  });
}

namespace detail {

inline Permutation compose(const Permutation& f, const Permutation& g) {
  Permutation out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) out[x] = f[g[x]];
  return out;
}

inline Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<Elem>(i);
  return p;
}

inline bool is_automorphism(const Group& n, const Permutation& m) {
  if (m.size() != n.order()) return false;
  std::vector<char> hit(n.order(), 0);
  for (Elem x : m) {
    if (x >= n.order() || hit[x]) return false;
    hit[x] = 1;
  }
  for (Elem a = 0; a < n.order(); ++a)
    for (Elem b = 0; b < n.order(); ++b)
      if (m[n.mul(a, b)] != n.mul(m[a], m[b])) return false;
  return true;
}

}  // namespace detail

/// Checks the Action laws against N and H: maps[0] is the identity, each map is
/// an automorphism of N, maps[h1 h2] = maps[h1] o maps[h2], and the images
/// commute pairwise (the product rule below uses phi at h1^{-1}, which is a
/// homomorphism in h only when the images commute). Throws on failure.
inline void check_action(const Group& n, const Group& h, const Action& phi) {
  if (phi.acting_order != h.order() || phi.maps.size() != h.order())
    throw std::invalid_argument("action: acting order does not match H");
  if (phi.target_order != n.order()) throw std::invalid_argument("action: target order does not match N");
  if (phi.maps[0] != detail::identity_permutation(n.order()))
    throw std::invalid_argument("action: identity of H must act trivially");
  for (std::size_t j = 0; j < h.order(); ++j)
    if (!detail::is_automorphism(n, phi.maps[j]))
      throw std::invalid_argument("action: map " + std::to_string(j) + " is not an automorphism of N");
  for (Elem j1 = 0; j1 < h.order(); ++j1)
    for (Elem j2 = 0; j2 < h.order(); ++j2) {
      const auto& m1 = phi.maps[j1];
      const auto& m2 = phi.maps[j2];
      const auto& m12 = phi.maps[h.mul(j1, j2)];
      for (Elem x = 0; x < n.order(); ++x) {
        if (m12[x] != m1[m2[x]])
          throw std::invalid_argument("action: homomorphism law fails at (" + std::to_string(j1) + "," +
                                      std::to_string(j2) + ")");
        if (m1[m2[x]] != m2[m1[x]])
          throw std::invalid_argument("action: images of " + std::to_string(j1) + " and " +
                                      std::to_string(j2) + " do not commute");
      }
    }
}

/// N x| H on pairs (a, b) encoded a + |N| b, multiplied as
/// (n1, h1)(n2, h2) = (n1 * phi_{h1^{-1}}(n2), h1 h2).
inline Group semidirect_product(const Group& n, const Group& h, const Action& phi) {
  check_order_cap(static_cast<std::uint64_t>(n.order()) * h.order(), "semidirect_product");
  check_action(n, h, phi);
  const std::size_t nn = n.order();
  std::string recipe = "sdp(" + n.recipe() + ";" + h.recipe() + ";" + phi.descriptor + ")";
  return Group::tabulate(nn * h.order(), std::move(recipe), [&](Elem x, Elem y) {
    const Elem n1 = x % nn, h1 = static_cast<Elem>(x / nn);
    const Elem n2 = y % nn, h2 = static_cast<Elem>(y / nn);
    const Elem a = n.mul(n1, phi.maps[h.inverse(h1)][n2]);
    return a + static_cast<Elem>(nn) * h.mul(h1, h2);
  });
}

/// Shapes of N for which automorphisms are enumerated: Z_m via units, and
/// Z_p x Z_p via 2x2 matrices over F_p.
struct TargetShape {
  enum class Kind { Cyclic, PlaneOverFp } kind;
  std::uint64_t modulus;  // m for Z_m, p for Z_p x Z_p
};

inline TargetShape target_shape(const Group& n) {
  const std::string& r = n.recipe();
  auto fields = [&](std::size_t from) {
    std::vector<std::uint64_t> out;
    std::size_t pos = from;
    while (pos <= r.size()) {
      const auto end = std::min(r.find(':', pos), r.size());
      const std::string tok = r.substr(pos, end - pos);
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) return std::vector<std::uint64_t>{};
      out.push_back(std::stoull(tok));
      pos = end + 1;
    }
    return out;
  };
  if (r.rfind("cyclic:", 0) == 0) {
    if (auto f = fields(7); f.size() == 1) return {TargetShape::Kind::Cyclic, f[0]};
  } else if (r.rfind("elab:", 0) == 0) {
    if (auto f = fields(5); f.size() == 2 && f[1] == 1) return {TargetShape::Kind::Cyclic, f[0]};
    else if (f.size() == 2 && f[1] == 2) return {TargetShape::Kind::PlaneOverFp, f[0]};
  }
  throw std::invalid_argument("actions: unsupported target group '" + r +
                              "' (expected cyclic:m, elab:p:1 or elab:p:2)");
}

using Matrix2 = std::array<std::uint64_t, 4>;  // row-major [[a, b], [c, d]]

inline Matrix2 matrix_mul(const Matrix2& x, const Matrix2& y, std::uint64_t p) {
  return {(x[0] * y[0] + x[1] * y[2]) % p, (x[0] * y[1] + x[1] * y[3]) % p,
          (x[2] * y[0] + x[3] * y[2]) % p, (x[2] * y[1] + x[3] * y[3]) % p};
}

inline Matrix2 matrix_pow(Matrix2 m, std::uint64_t k, std::uint64_t p) {
  Matrix2 r{1, 0, 0, 1};
  while (k > 0) {
    if (k & 1) r = matrix_mul(r, m, p);
    m = matrix_mul(m, m, p);
    k >>= 1;
  }
  return r;
}

/// x -> u x on Z_m.
inline Permutation unit_automorphism(std::uint64_t m, std::uint64_t u) {
  Permutation perm(m);
  for (std::uint64_t x = 0; x < m; ++x) perm[x] = static_cast<Elem>(detail::mul_mod(u, x, m));
  return perm;
}

/// Column-vector action of M on Z_p x Z_p, element x0 + p x1.
inline Permutation matrix_automorphism(std::uint64_t p, const Matrix2& m) {
  Permutation perm(p * p);
  for (std::uint64_t x1 = 0; x1 < p; ++x1)
    for (std::uint64_t x0 = 0; x0 < p; ++x0) {
      const std::uint64_t y0 = (m[0] * x0 + m[1] * x1) % p;
      const std::uint64_t y1 = (m[2] * x0 + m[3] * x1) % p;
      perm[x0 + p * x1] = static_cast<Elem>(y0 + p * y1);
    }
  return perm;
}

inline std::string matrix_text(const Matrix2& m) {
  return std::to_string(m[0]) + "/" + std::to_string(m[1]) + "/" + std::to_string(m[2]) + "/" +
         std::to_string(m[3]);
}

/// An automorphism of a supported target together with its recipe text.
struct AutomorphismChoice {
  std::string text;
  Permutation perm;
};

/// Automorphisms alpha of N with alpha^k = 1, ordered lexicographically by
/// unit value or matrix entries. Matrices are found by brute force over all
/// of F_p^{2x2}.
inline std::vector<AutomorphismChoice> automorphisms_of_order_dividing(const Group& n, std::uint64_t k) {
  const TargetShape shape = target_shape(n);
  std::vector<AutomorphismChoice> out;
  if (shape.kind == TargetShape::Kind::Cyclic) {
    const std::uint64_t m = shape.modulus;
    if (m == 1) {
      out.push_back({"1", detail::identity_permutation(1)});
      return out;
    }
    for (std::uint64_t u = 1; u < m; ++u)
      if (std::gcd(u, m) == 1 && detail::pow_mod(u, k, m) == 1)
        out.push_back({std::to_string(u), unit_automorphism(m, u)});
    return out;
  }
  const std::uint64_t p = shape.modulus;
  const Matrix2 id{1, 0, 0, 1};
  Matrix2 m{};
  for (m[0] = 0; m[0] < p; ++m[0])
    for (m[1] = 0; m[1] < p; ++m[1])
      for (m[2] = 0; m[2] < p; ++m[2])
        for (m[3] = 0; m[3] < p; ++m[3]) {
          if ((m[0] * m[3] + p * p - m[1] * m[2] % p) % p == 0) continue;
          if (matrix_pow(m, k, p) == id) out.push_back({matrix_text(m), matrix_automorphism(p, m)});
        }
  return out;
}

/// Extends generator images to a map H -> Aut(N) along the Cayley graph of H.
/// Returns nullopt when the images do not define a homomorphism.
inline std::optional<Action> action_from_generator_images(const Group& h, const Group& n,
                                                          std::span<const Elem> gens,
                                                          std::span<const Permutation> images,
                                                          std::string descriptor = {}) {
  if (gens.size() != images.size()) throw std::invalid_argument("action: one image per generator required");
  Action phi;
  phi.acting_order = h.order();
  phi.target_order = n.order();
  phi.descriptor = std::move(descriptor);
  phi.maps.assign(h.order(), Permutation{});
  phi.maps[0] = detail::identity_permutation(n.order());
  std::vector<Elem> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Elem x = queue[i];
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const Elem y = h.mul(x, gens[g]);
      Permutation image = detail::compose(phi.maps[x], images[g]);
      if (phi.maps[y].empty()) {
        phi.maps[y] = std::move(image);
        queue.push_back(y);
      } else if (phi.maps[y] != image) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != h.order()) throw std::invalid_argument("action: generators do not generate H");
  return phi;
}

/// Every homomorphism H -> Aut(N) with pairwise commuting images, for N one of
/// Z_m, Z_p, Z_p x Z_p. Images are assigned to standard_generators(H) and
/// enumerated lexicographically (the trivial action is first only for cyclic N).
inline std::vector<Action> enumerate_actions(const Group& h, const Group& n) {
  const auto gens = standard_generators(h);
  std::vector<std::vector<AutomorphismChoice>> choices;
  for (Elem g : gens) choices.push_back(automorphisms_of_order_dividing(n, element_order(h, g)));

  std::vector<Action> out;
  if (gens.empty()) {
    Action trivial{1, n.order(), {detail::identity_permutation(n.order())}, ""};
    out.push_back(std::move(trivial));
    return out;
  }
  std::vector<std::size_t> index(gens.size(), 0);
  std::vector<Permutation> images(gens.size());
  for (const auto& c : choices)
    if (c.empty()) return out;
  while (true) {
    bool commute = true;
    std::string descriptor;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      images[i] = choices[i][index[i]].perm;
      descriptor += (i ? "," : "") + choices[i][index[i]].text;
    }
    for (std::size_t i = 0; i < gens.size() && commute; ++i)
      for (std::size_t j = i + 1; j < gens.size() && commute; ++j)
        commute = detail::compose(images[i], images[j]) == detail::compose(images[j], images[i]);
    if (commute) {
      if (auto phi = action_from_generator_images(h, n, gens, images, descriptor)) out.push_back(std::move(*phi));
    }
    std::size_t pos = gens.size();
    while (pos > 0) {
      --pos;
      if (++index[pos] < choices[pos].size()) break;
      index[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

/// All homomorphisms Z_q -> Aut(N), N in {Z_m, Z_p x Z_p}.
inline std::vector<Action> enumerate_actions_cyclic(std::uint64_t q, const Group& n) {
  return enumerate_actions(cyclic(q), n);
}

inline std::uint64_t smallest_unit_of_order(std::uint64_t q, std::uint64_t p) {
  for (std::uint64_t a = 2; a < p; ++a) {
    if (detail::pow_mod(a, q, p) != 1) continue;
    std::uint64_t order = 1;
    for (std::uint64_t x = a; x != 1; x = detail::mul_mod(x, a, p)) ++order;
    if (order == q) return a;
  }
  throw std::invalid_argument("no unit of order " + std::to_string(q) + " modulo " + std::to_string(p));
}

/// (Z_p x Z_p) x| Z_q with z acting as the scalar a^z, a of order q in Z_p^*.
/// Requires q | (p - 1); the result has d = 3.
inline Group witness_p2q(std::uint64_t p, std::uint64_t q) {
  if (!is_prime(p) || !is_prime(q)) throw std::invalid_argument("witness_p2q: p and q must be prime");
  if ((p - 1) % q != 0)
    throw std::invalid_argument("witness_p2q: " + std::to_string(q) + " does not divide " + std::to_string(p) +
                                " - 1");
  const std::string recipe = "witness:" + std::to_string(p) + ":" + std::to_string(q);
  check_order_cap(p * p * q, recipe);
  const std::uint64_t a = smallest_unit_of_order(q, p);
  const Group plane = elementary_abelian(p, 2);
  const Group acting = cyclic(q);
  const Elem gen = 1;
  const Permutation image = matrix_automorphism(p, {a, 0, 0, a});
  auto phi = action_from_generator_images(acting, plane, std::span<const Elem>(&gen, 1),
                                          std::span<const Permutation>(&image, 1), matrix_text({a, 0, 0, a}));
  Group g = semidirect_product(plane, acting, *phi);
  g.set_recipe(recipe);
  return g;
}

/// (Z_p)^3 x Z_{n/p^3}; d >= 3.
inline Group cube_witness(std::uint64_t p, std::uint64_t n) {
  if (!is_prime(p)) throw std::invalid_argument("cube_witness: p must be prime");
  const std::uint64_t cube = p * p * p;
  if (n == 0 || n % cube != 0)
    throw std::invalid_argument("cube_witness: " + std::to_string(p) + "^3 does not divide " + std::to_string(n));
  const std::string recipe = "cubewit:" + std::to_string(p) + ":" + std::to_string(n);
  check_order_cap(n, recipe);
  Group g = n == cube ? elementary_abelian(p, 3) : direct_product(elementary_abelian(p, 3), cyclic(n / cube));
  g.set_recipe(recipe);
  return g;
}

/// <a, b | a^m = b^h = 1, b^{-1} a b = a^r>, realized as Z_m x| Z_h with the
/// generator of Z_h acting by x -> r x; element a^i b^j is i + m j.
inline Group metacyclic(std::uint64_t m, std::uint64_t h, std::uint64_t r) {
  if (m == 0 || h == 0) throw std::invalid_argument("metacyclic: m and h must be positive");
  const std::string recipe = "meta:" + std::to_string(m) + ":" + std::to_string(h) + ":" + std::to_string(r);
  check_order_cap(m * h, recipe);
  const std::uint64_t rr = r % m;
  if (std::gcd(rr, m) != 1 || detail::pow_mod(rr, h, m) != 1 % m)
    throw std::invalid_argument("metacyclic: r^h is not 1 mod m for " + recipe);
  const Group base = cyclic(m);
  const Group acting = cyclic(h);
  const Elem gen = h > 1 ? 1 : 0;
  const Permutation image = unit_automorphism(m, rr);
  std::optional<Action> phi;
  if (h == 1) {
    phi = Action{1, m, {detail::identity_permutation(m)}, ""};
  } else {
    phi = action_from_generator_images(acting, base, std::span<const Elem>(&gen, 1),
                                       std::span<const Permutation>(&image, 1), std::to_string(rr));
  }
  Group g = semidirect_product(base, acting, *phi);
  g.set_recipe(recipe);
  return g;
}

/// Dihedral group of order 2n.
inline Group dihedral(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("dihedral: n must be positive");
  Group g = metacyclic(n, 2, n - 1);
  g.set_recipe("d:" + std::to_string(n));
  return g;
}

/// Dicyclic group of order 4n: <a, x | a^{2n} = 1, x^2 = a^n, x^{-1} a x = a^{-1}>,
/// element a^i x^j encoded i + 2n j.
inline Group dicyclic(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("dicyclic: n must be positive");
  const std::string recipe = "dic:" + std::to_string(n);
  check_order_cap(4 * n, recipe);
  const std::uint64_t m = 2 * n;
  return Group::tabulate(4 * n, recipe, [m, n](Elem x, Elem y) {
    const std::uint64_t i = x % m, j = x / m, k = y % m, l = y / m;
    if (j == 0) return static_cast<Elem>((i + k) % m + m * l);
    if (l == 0) return static_cast<Elem>((i + m - k) % m + m);
    return static_cast<Elem>((i + m - k + n) % m);
  });
}

/// A4 as (Z_2 x Z_2) x| Z_3 with the generator acting by [[0,1],[1,1]].
inline Group alternating4() {
  const Group plane = elementary_abelian(2, 2);
  const Group acting = cyclic(3);
  const Matrix2 m{0, 1, 1, 1};
  const Elem gen = 1;
  const Permutation image = matrix_automorphism(2, m);
  auto phi = action_from_generator_images(acting, plane, std::span<const Elem>(&gen, 1),
                                          std::span<const Permutation>(&image, 1), matrix_text(m));
  Group g = semidirect_product(plane, acting, *phi);
  g.set_recipe("a4");
  return g;
}

/// PSL(2, p) as the permutation group of the projective line 0, ..., p-1, inf
/// generated by x -> x + 1 and x -> -1/x, elements in breadth-first order.
inline Group psl2(std::uint64_t p) {
  if (!is_prime(p) || p < 5) throw std::invalid_argument("psl2: p must be a prime >= 5");
  const std::string recipe = "psl2:" + std::to_string(p);
  const std::uint64_t expected = p * (p * p - 1) / 2;
  check_order_cap(expected, recipe);
  using Perm = std::vector<std::uint16_t>;
  const std::size_t points = p + 1;
  const auto inf = static_cast<std::uint16_t>(p);
  Perm shift(points), invert(points);
  for (std::uint64_t x = 0; x < p; ++x) {
    shift[x] = static_cast<std::uint16_t>((x + 1) % p);
    invert[x] = x == 0 ? inf : static_cast<std::uint16_t>((p - detail::pow_mod(x, p - 2, p)) % p);
  }
  shift[inf] = inf;
  invert[inf] = 0;

  auto compose = [](const Perm& a, const Perm& b) {  // (a b)(x) = a(b(x))
    Perm out(b.size());
    for (std::size_t x = 0; x < b.size(); ++x) out[x] = a[b[x]];
    return out;
  };
  Perm identity(points);
  for (std::size_t x = 0; x < points; ++x) identity[x] = static_cast<std::uint16_t>(x);
  std::map<Perm, Elem> index{{identity, 0}};
  std::vector<Perm> elements{identity};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const Perm* gen : {&shift, &invert}) {
      Perm next = compose(elements[i], *gen);
      if (index.emplace(next, static_cast<Elem>(elements.size())).second) {
        elements.push_back(std::move(next));
        if (elements.size() > expected)
          throw std::logic_error("psl2: closure exceeded the expected order");
      }
    }
  }
  if (elements.size() != expected) throw std::logic_error("psl2: closure has unexpected order");
  return Group::tabulate(expected, recipe,
                         [&](Elem a, Elem b) { return index.at(compose(elements[a], elements[b])); });
}

/// The five groups of order 12: Z12, Z2 x Z2 x Z3, A4, D6, Z3 x| Z4.
inline std::vector<Group> order12_catalog() {
  std::vector<Group> out;
  out.push_back(cyclic(12));
  out.push_back(direct_product(elementary_abelian(2, 2), cyclic(3)));
  out.push_back(alternating4());
  out.push_back(dihedral(6));
  out.push_back(metacyclic(3, 4, 2));
  return out;
}

}  // namespace twogen
