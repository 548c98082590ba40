#pragma once

// Finite groups as explicit Cayley tables over elements 0..n-1 (identity 0),
// with subgroup closure, element orders, the minimal generating number d(G)
// and the generating graph.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "twogen/arith.hpp"

namespace twogen {

using Elem = std::uint32_t;
using OrderSpectrum = std::map<std::uint64_t, std::uint64_t>;

inline constexpr std::size_t kDefaultMaxOrder = 4096;
inline constexpr std::size_t kHardMaxOrder = 65535;  // 16-bit table entries

class SizeCapError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Largest group order for which a Cayley table is built. Overridable through
/// the TWOGEN_MAX_ORDER environment variable, never above kHardMaxOrder.
inline std::size_t max_group_order() {
  if (const char* env = std::getenv("TWOGEN_MAX_ORDER")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return std::min<std::size_t>(v, kHardMaxOrder);
  }
  return kDefaultMaxOrder;
}

inline void check_order_cap(std::uint64_t n, const std::string& what) {
  if (n > max_group_order())
    throw SizeCapError(what + ": order " + std::to_string(n) + " exceeds size cap " +
                       std::to_string(max_group_order()));
}

class Group {
 public:
  Group() : Group(1, {0}, "cyclic:1") {}

  /// Wraps a raw row-major table. Only shape and range are checked here; the
  /// group laws are checked by validate().
  Group(std::size_t order, std::vector<std::uint16_t> table, std::string recipe)
      : order_(order), table_(std::move(table)), recipe_(std::move(recipe)) {
    if (order_ == 0) throw std::invalid_argument("Group: order must be positive");
    check_order_cap(order_, "Group");
    if (table_.size() != order_ * order_) throw std::invalid_argument("Group: table size mismatch");
    for (auto v : table_)
      if (v >= order_) throw std::invalid_argument("Group: table entry out of range");
    inverse_.assign(order_, static_cast<std::uint16_t>(order_));
    for (std::size_t a = 0; a < order_; ++a) {
      for (std::size_t b = 0; b < order_; ++b) {
        if (table_[a * order_ + b] == 0) {
          inverse_[a] = static_cast<std::uint16_t>(b);
          break;
        }
      }
    }
  }

  /// Builds the table from a multiplication callback on element indices.
  template <class Mul>
  static Group tabulate(std::size_t order, std::string recipe, Mul&& mul) {
    check_order_cap(order, recipe.empty() ? "Group" : recipe);
    std::vector<std::uint16_t> table(order * order);
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b)
        table[a * order + b] = static_cast<std::uint16_t>(mul(static_cast<Elem>(a), static_cast<Elem>(b)));
    return Group(order, std::move(table), std::move(recipe));
  }

  std::size_t order() const { return order_; }
  Elem identity() const { return 0; }
  Elem mul(Elem a, Elem b) const { return table_[a * order_ + b]; }
  /// Right inverse of a, or order() when the table has none.
  Elem inverse(Elem a) const { return inverse_[a]; }

  Elem pow(Elem a, std::uint64_t k) const {
    Elem result = 0;
    Elem base = a;
    while (k > 0) {
      if (k & 1) result = mul(result, base);
      base = mul(base, base);
      k >>= 1;
    }
    return result;
  }

  std::span<const std::uint16_t> table() const { return table_; }
  const std::string& recipe() const { return recipe_; }
  void set_recipe(std::string r) { recipe_ = std::move(r); }

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != order_) throw std::invalid_argument("Group: label count mismatch");
    labels_ = std::move(labels);
  }

  friend bool operator==(const Group& a, const Group& b) {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

 private:
  std::size_t order_;
  std::vector<std::uint16_t> table_;
  std::vector<std::uint16_t> inverse_;
  std::string recipe_;
  std::vector<std::string> labels_;
};

/// Fixed-size membership set over 0..n-1.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  bool contains(Elem x) const { return (words_[x >> 6] >> (x & 63)) & 1u; }
  void insert(Elem x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }
  std::size_t universe() const { return n_; }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  struct Hash {
    std::size_t operator()(const ElementSet& s) const {
      std::uint64_t h = 1469598103934665603ull;
      for (auto w : s.words_) {
        h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      }
      return static_cast<std::size_t>(h);
    }
  };

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Reusable work-list closure over one group.
class ClosureEngine {
 public:
  explicit ClosureEngine(const Group& g) : g_(&g), members_(g.order()) { list_.reserve(g.order()); }

  /// Subgroup generated by gens; returns its size. members() holds the result.
  std::size_t run(std::span<const Elem> gens) {
    members_.clear();
    list_.clear();
    members_.insert(0);
    list_.push_back(0);
    for (std::size_t i = 0; i < list_.size(); ++i) {
      const Elem x = list_[i];
      for (Elem s : gens) {
        const Elem y = g_->mul(x, s);
        if (!members_.contains(y)) {
          members_.insert(y);
          list_.push_back(y);
        }
      }
    }
    return list_.size();
  }

  const ElementSet& members() const { return members_; }
  std::span<const Elem> elements() const { return list_; }

 private:
  const Group* g_;
  ElementSet members_;
  std::vector<Elem> list_;
};

/// Smallest subgroup containing s, as a sorted element list.
inline std::vector<Elem> closure(const Group& g, std::span<const Elem> s) {
  for (Elem x : s)
    if (x >= g.order()) throw std::out_of_range("closure: element out of range");
  ClosureEngine engine(g);
  [[maybe_unused]] const std::size_t size = engine.run(s);
  assert(g.order() % size == 0);  // Lagrange
  std::vector<Elem> out(engine.elements().begin(), engine.elements().end());
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Elem> closure(const Group& g, std::initializer_list<Elem> s) {
  return closure(g, std::span<const Elem>(s.begin(), s.size()));
}

struct Validation {
  bool ok = true;
  std::string diagnostic;
  explicit operator bool() const { return ok; }
};

namespace detail {

inline Validation check_loop_laws(const Group& g) {
  const std::size_t n = g.order();
  for (Elem a = 0; a < n; ++a) {
    if (g.mul(0, a) != a || g.mul(a, 0) != a)
      return {false, "identity law fails at element " + std::to_string(a)};
  }
  std::vector<std::uint32_t> seen(n, 0);
  std::uint32_t stamp = 0;
  for (Elem a = 0; a < n; ++a) {
    ++stamp;
    for (Elem b = 0; b < n; ++b) {
      const Elem c = g.mul(a, b);
      if (seen[c] == stamp) return {false, "row " + std::to_string(a) + " is not a permutation"};
      seen[c] = stamp;
    }
  }
  for (Elem b = 0; b < n; ++b) {
    ++stamp;
    for (Elem a = 0; a < n; ++a) {
      const Elem c = g.mul(a, b);
      if (seen[c] == stamp) return {false, "column " + std::to_string(b) + " is not a permutation"};
      seen[c] = stamp;
    }
  }
  for (Elem a = 0; a < n; ++a) {
    const Elem inv = g.inverse(a);
    if (inv >= n || g.mul(a, inv) != 0 || g.mul(inv, a) != 0)
      return {false, "inverse law fails at element " + std::to_string(a)};
  }
  return {};
}

}  // namespace detail

/// Greedy generating set: scan elements in index order and keep each one not
/// already in the span of those kept.
inline std::vector<Elem> standard_generators(const Group& g) {
  std::vector<Elem> gens;
  ClosureEngine engine(g);
  std::size_t size = engine.run(gens);
  for (Elem x = 1; x < g.order() && size < g.order(); ++x) {
    if (engine.members().contains(x)) continue;
    gens.push_back(x);
    size = engine.run(gens);
  }
  return gens;
}

/// Full group-law check. Associativity uses Light's test over a generating
/// set: in a Latin square with identity, the elements a satisfying
/// (xa)y = x(ay) for all x, y form a subloop, so checking generators suffices.
inline Validation validate(const Group& g) {
  if (auto v = detail::check_loop_laws(g); !v) return v;
  const std::size_t n = g.order();
  for (Elem a : standard_generators(g)) {
    for (Elem x = 0; x < n; ++x) {
      const Elem xa = g.mul(x, a);
      for (Elem y = 0; y < n; ++y) {
        if (g.mul(xa, y) != g.mul(x, g.mul(a, y)))
          return {false, "associativity fails at (" + std::to_string(x) + "," + std::to_string(a) + "," +
                             std::to_string(y) + ")"};
      }
    }
  }
  return {};
}

/// Same laws, associativity over all n^3 triples.
inline Validation validate_exhaustive(const Group& g) {
  if (auto v = detail::check_loop_laws(g); !v) return v;
  const std::size_t n = g.order();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = g.mul(a, b);
      for (Elem c = 0; c < n; ++c)
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c)))
          return {false, "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                             std::to_string(c) + ")"};
    }
  return {};
}

inline std::uint64_t element_order(const Group& g, Elem a) {
  if (a >= g.order()) throw std::out_of_range("element_order: element out of range");
  std::uint64_t s = 1;
  for (Elem x = a; x != 0; x = g.mul(x, a)) ++s;
  return s;
}

inline std::vector<std::uint64_t> element_orders(const Group& g) {
  std::vector<std::uint64_t> orders(g.order(), 0);
  orders[0] = 1;
  for (Elem a = 1; a < g.order(); ++a) {
    if (orders[a] != 0) continue;
    const std::uint64_t k = element_order(g, a);
    // ord(a^j) = k / gcd(j, k)
    Elem x = a;
    for (std::uint64_t j = 1; j < k; ++j, x = g.mul(x, a))
      if (orders[x] == 0) orders[x] = k / std::gcd(j, k);
  }
  return orders;
}

inline OrderSpectrum order_spectrum(const Group& g) {
  OrderSpectrum spec;
  for (auto o : element_orders(g)) ++spec[o];
  return spec;
}

inline std::string spectrum_to_string(const OrderSpectrum& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& [order, count] : s) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(order) + ":" + std::to_string(count);
  }
  return out + "}";
}

inline std::size_t center_size(const Group& g) {
  std::size_t count = 0;
  for (Elem z = 0; z < g.order(); ++z) {
    bool central = true;
    for (Elem x = 0; x < g.order() && central; ++x) central = g.mul(z, x) == g.mul(x, z);
    if (central) ++count;
  }
  return count;
}

inline bool is_normal_subgroup(const Group& g, std::span<const Elem> subgroup) {
  ElementSet members(g.order());
  for (Elem h : subgroup) members.insert(h);
  for (Elem x = 0; x < g.order(); ++x) {
    const Elem xi = g.inverse(x);
    for (Elem h : subgroup)
      if (!members.contains(g.mul(g.mul(xi, h), x))) return false;
  }
  return true;
}

/// One generator per maximal cyclic subgroup. Any generating k-set can be
/// replaced element-wise by these, so d(G) is attained over them.
inline std::vector<Elem> maximal_cyclic_representatives(const Group& g) {
  const auto orders = element_orders(g);
  std::vector<Elem> by_order(g.order());
  std::iota(by_order.begin(), by_order.end(), Elem{0});
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Elem a, Elem b) { return orders[a] > orders[b]; });
  ElementSet covered(g.order());
  std::vector<Elem> reps;
  for (Elem a : by_order) {
    if (covered.contains(a)) continue;
    reps.push_back(a);
    Elem x = a;
    for (std::uint64_t j = 0; j < orders[a]; ++j, x = g.mul(x, a)) covered.insert(x);
  }
  return reps;
}

/// Rank of the abelianization G/G'; a lower bound for d(G), exact for abelian G.
inline unsigned abelianization_rank(const Group& g) {
  const std::size_t n = g.order();
  std::vector<Elem> commutators;
  ElementSet seen(n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem c = g.mul(g.mul(g.inverse(a), g.inverse(b)), g.mul(a, b));
      if (!seen.contains(c)) {
        seen.insert(c);
        commutators.push_back(c);
      }
    }
  ClosureEngine engine(g);
  const std::size_t derived = engine.run(commutators);
  const ElementSet& in_derived = engine.members();
  const Factorization f = factorize(n / derived);
  unsigned rank = 0;
  for (const auto& pp : f.factors) {
    // |{a in G/G' : a^p = 1}| = p^rank_p
    std::size_t count = 0;
    for (Elem x = 0; x < n; ++x)
      if (in_derived.contains(g.pow(x, pp.prime))) ++count;
    std::size_t omega = count / derived;
    unsigned r = 0;
    while (omega > 1) {
      omega /= pp.prime;
      ++r;
    }
    rank = std::max(rank, r);
  }
  return rank;
}

namespace detail {

// Is there a generating set of size k drawn from reps? Depth-first over
// subgroups, skipping redundant additions and subgroups already expanded at
// the same depth. Every rep is tried from every subgroup, so dedup is exact.
inline bool generated_by_k(const Group& g, std::span<const Elem> reps, unsigned k) {
  const std::size_t n = g.order();
  ClosureEngine engine(g);
  std::vector<std::unordered_set<ElementSet, ElementSet::Hash>> visited(k + 1);
  std::vector<Elem> gens;

  auto dfs = [&](auto&& self, const ElementSet& current) -> bool {
    const unsigned depth = static_cast<unsigned>(gens.size());
    if (depth == k) return false;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if (current.contains(reps[i])) continue;
      gens.push_back(reps[i]);
      const std::size_t size = engine.run(gens);
      if (size == n) return true;
      ElementSet next = engine.members();
      if (depth + 1 < k && visited[depth + 1].insert(next).second) {
        if (self(self, next)) return true;
      }
      gens.pop_back();
    }
    return false;
  };
  ElementSet trivial(n);
  trivial.insert(0);
  return dfs(dfs, trivial);
}

}  // namespace detail

/// Size of a minimum generating set, d(G); d(trivial) = 0. With
/// assume_cube_free_cap set and n cube-free, a failed pair search returns 3
/// without searching triples (every group of cube-free order has d <= 3).
inline unsigned d_min(const Group& g, bool assume_cube_free_cap = true) {
  const std::size_t n = g.order();
  if (n == 1) return 0;
  const auto reps = maximal_cyclic_representatives(g);
  if (reps.size() == 1) return 1;
  const unsigned lower = std::max(2u, abelianization_rank(g));
  if (lower <= 2) {
    ClosureEngine engine(g);
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j) {
        const Elem pair[2] = {reps[i], reps[j]};
        if (engine.run(pair) == n) return 2;
      }
    if (assume_cube_free_cap && is_cube_free(factorize(n))) return 3;
  }
  for (unsigned k = std::max(3u, lower);; ++k)
    if (detail::generated_by_k(g, reps, k)) return k;
}

struct GeneratingGraph {
  std::size_t order = 0;
  std::vector<std::pair<Elem, Elem>> edges;  // a < b, lexicographic
};

/// All unordered pairs {a, b}, a != b, with <a, b> = G.
inline GeneratingGraph generating_graph(const Group& g) {
  const std::size_t n = g.order();
  GeneratingGraph graph{n, {}};
  if (n == 1) return graph;
  if (maximal_cyclic_representatives(g).size() > 1 && abelianization_rank(g) > 2) return graph;

  // <a, b> depends only on <a> and <b>: classify elements by cyclic subgroup.
  const auto orders = element_orders(g);
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> cyc_id(n, kUnset);
  std::vector<Elem> cyc_gen;
  for (Elem a = 0; a < n; ++a) {
    if (cyc_id[a] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(cyc_gen.size());
    cyc_gen.push_back(a);
    Elem x = a;
    for (std::uint64_t j = 1; j <= orders[a]; ++j, x = g.mul(x, a))
      if (std::gcd(j, orders[a]) == 1) cyc_id[x] = id;
  }
  const std::size_t c = cyc_gen.size();
  std::vector<std::uint8_t> generates(c * c, 0);
  ClosureEngine engine(g);
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = i; j < c; ++j) {
      const Elem pair[2] = {cyc_gen[i], cyc_gen[j]};
      const std::uint8_t full = engine.run(pair) == n ? 1 : 0;
      generates[i * c + j] = generates[j * c + i] = full;
    }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (generates[cyc_id[a] * c + cyc_id[b]]) graph.edges.emplace_back(a, b);
  return graph;
}

/// G x H with (a, b) encoded as a + |G| * b.
inline Group direct_product(const Group& g, const Group& h) {
  const std::size_t gn = g.order();
  check_order_cap(static_cast<std::uint64_t>(gn) * h.order(), "direct_product");
  return Group::tabulate(gn * h.order(), g.recipe() + "*" + h.recipe(), [&](Elem x, Elem y) {
    const Elem a = g.mul(x % gn, y % gn);
    const Elem b = h.mul(static_cast<Elem>(x / gn), static_cast<Elem>(y / gn));
    return a + static_cast<Elem>(gn) * b;
  });
}

}  // namespace twogen
