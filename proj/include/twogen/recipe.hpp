#pragma once

// Recipe strings name a construction and rebuild it:
//
//   cyclic:n  elab:p:k  meta:m:h:r  witness:p:q  cubewit:p:n  psl2:p  a4
//   d:n (dihedral, order 2n)  dic:n (dicyclic, order 4n)
//   A*B                      direct product
//   (A)                      grouping
//   sdp(N;H;i1,i2,...)       semidirect product; i_k is the image of the k-th
//                            standard generator of H, a unit "u" when N is
//                            cyclic, a matrix "a/b/c/d" when N is elab:p:2

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "twogen/constructions.hpp"

namespace twogen {

class RecipeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

class RecipeParser {
 public:
  explicit RecipeParser(std::string_view text) : text_(text) {}

  Group parse() {
    Group g = expr();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw RecipeError("recipe '" + std::string(text_) + "' at " + std::to_string(pos_) + ": " + what);
  }

  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::uint64_t number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 18) fail("number too large");
    return std::stoull(std::string(text_.substr(start, pos_ - start)));
  }

  std::string name() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::vector<std::uint64_t> args() {
    std::vector<std::uint64_t> out;
    while (peek(':')) {
      ++pos_;
      out.push_back(number());
    }
    return out;
  }

  Group expr() {
    Group g = term();
    while (peek('*')) {
      ++pos_;
      g = direct_product(g, term());
    }
    return g;
  }

  Group term() {
    if (peek('(')) {
      ++pos_;
      Group g = expr();
      expect(')');
      return g;
    }
    const std::size_t start = pos_;
    const std::string id = name();
    if (id == "sdp") return semidirect();
    const auto a = args();
    auto need = [&](std::size_t count) {
      if (a.size() != count) {
        pos_ = start;
        fail("'" + id + "' takes " + std::to_string(count) + " argument(s)");
      }
    };
    try {
      if (id == "cyclic") return need(1), cyclic(a[0]);
      if (id == "elab") return need(2), elementary_abelian(a[0], static_cast<unsigned>(a[1]));
      if (id == "meta") return need(3), metacyclic(a[0], a[1], a[2]);
      if (id == "witness") return need(2), witness_p2q(a[0], a[1]);
      if (id == "cubewit") return need(2), cube_witness(a[0], a[1]);
      if (id == "psl2") return need(1), psl2(a[0]);
      if (id == "a4") return need(0), alternating4();
      if (id == "d") return need(1), dihedral(a[0]);
      if (id == "dic") return need(1), dicyclic(a[0]);
    } catch (const RecipeError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      pos_ = start;
      fail(e.what());
    }
    pos_ = start;
    fail(id.empty() ? "expected a group" : "unknown construction '" + id + "'");
  }

  Permutation image(const Group& n) {
    const TargetShape shape = target_shape(n);
    if (shape.kind == TargetShape::Kind::Cyclic) {
      const std::uint64_t u = number();
      if (std::gcd(u, shape.modulus) != 1 && shape.modulus != 1) fail("image is not a unit");
      return unit_automorphism(shape.modulus, u % shape.modulus);
    }
    Matrix2 m{};
    for (std::size_t i = 0; i < 4; ++i) {
      if (i) expect('/');
      m[i] = number() % shape.modulus;
    }
    return matrix_automorphism(shape.modulus, m);
  }

  Group semidirect() {
    expect('(');
    const std::size_t n_start = pos_;
    Group n = expr();
    const std::string n_text(text_.substr(n_start, pos_ - n_start));
    expect(';');
    Group h = expr();
    expect(';');
    const std::size_t images_start = pos_;
    std::vector<Permutation> images;
    try {
      if (!peek(')')) {
        images.push_back(image(n));
        while (peek(',')) {
          ++pos_;
          images.push_back(image(n));
        }
      }
    } catch (const RecipeError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
    const std::string descriptor(text_.substr(images_start, pos_ - images_start));
    expect(')');
    const auto gens = standard_generators(h);
    if (gens.size() != images.size())
      fail("H has " + std::to_string(gens.size()) + " standard generator(s), got " +
           std::to_string(images.size()) + " image(s)");
    auto phi = action_from_generator_images(h, n, gens, images, descriptor);
    if (!phi) fail("generator images do not define a homomorphism");
    try {
      return semidirect_product(n, h, *phi);
    } catch (const SizeCapError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Builds the group a recipe describes. Throws RecipeError on malformed input
/// and SizeCapError when the order exceeds max_group_order().
inline Group build_from_recipe(std::string_view recipe) { return detail::RecipeParser(recipe).parse(); }

}  // namespace twogen
