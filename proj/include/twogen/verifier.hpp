#pragma once

// Cross-check of the arithmetic predicate against explicit groups: build a
// catalog of groups of order n, compute d(G) for each, and compare
// "every d <= 2" with is_two_generated_number(n).
//
// A catalog is Full when the construction provably reaches every isomorphism
// type of order n:
//   n = 1, p, p^2                 by the classification of those orders;
//   n = 12                        the five groups of order 12;
//   cube-free n = r^a s^b with a Sylow r-subgroup forced normal by Sylow
//   counting (the only divisor of n / r^a that is 1 mod r is 1)
//                                 every G is S_r x| S_s (coprime, so split),
//                                 and all S_r, S_s shapes and all actions
//                                 S_s -> Aut(S_r) are enumerated.
// Anything else is a Sample: witnesses, abelian groups, split metacyclic
// groups, dihedral/dicyclic groups, Sylow towers and PSL(2, p) x L shapes.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "twogen/arith.hpp"
#include "twogen/constructions.hpp"
#include "twogen/group.hpp"

namespace twogen {

enum class Completeness { Full, Sample };

inline const char* to_string(Completeness c) { return c == Completeness::Full ? "FULL" : "SAMPLE"; }

struct CatalogOptions {
  /// Wall-clock budget per order in milliseconds; 0 means unlimited. When it
  /// runs out the catalog stops growing and is reported as a Sample.
  std::uint64_t budget_ms = 0;
  /// Maximum number of candidate groups built for a Sample catalog.
  std::size_t sample_limit = 96;
};

struct CatalogEntry {
  Group group;
  unsigned d_min = 0;
  OrderSpectrum spectrum;
  std::size_t center = 0;
};

struct Catalog {
  std::uint64_t n = 1;
  std::vector<CatalogEntry> entries;  // sorted by recipe
  Completeness completeness = Completeness::Sample;
  std::string basis;
  bool budget_exhausted = false;
};

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  const Factorization f = factorize(n);
  std::vector<std::uint64_t> out{1};
  for (const auto& pp : f.factors) {
    const std::size_t base = out.size();
    std::uint64_t power = 1;
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Values of n_r (number of Sylow r-subgroups) allowed by Sylow's theorems:
/// divisors of n / r^a congruent to 1 mod r.
inline std::vector<std::uint64_t> sylow_count_candidates(std::uint64_t n, std::uint64_t r) {
  std::uint64_t m = n;
  while (m % r == 0) m /= r;
  std::vector<std::uint64_t> out;
  for (std::uint64_t d : divisors(m))
    if (d % r == 1 % r) out.push_back(d);
  return out;
}

/// Largest prime whose Sylow subgroup is normal in every group of order n,
/// or 0 when counting alone does not force one.
inline std::uint64_t forced_normal_sylow_prime(const Factorization& f) {
  for (const auto& pp : f.factors) {
    const auto candidates = sylow_count_candidates(f.n, pp.prime);
    if (candidates.size() == 1) return pp.prime;
  }
  return 0;
}

namespace detail {

class CatalogBuilder {
 public:
  CatalogBuilder(const CatalogOptions& options)
      : options_(options), start_(std::chrono::steady_clock::now()) {}

  bool out_of_time() {
    if (options_.budget_ms == 0) return false;
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    if (elapsed > std::chrono::milliseconds(options_.budget_ms)) exhausted_ = true;
    return exhausted_;
  }

  bool exhausted() const { return exhausted_; }

  Catalog build(std::uint64_t n) {
    check_order_cap(n, "catalog");
    Catalog cat;
    cat.n = n;
    const Factorization f = factorize(n);
    std::vector<Group> candidates;
    if (full_candidates(f, candidates, cat.basis)) {
      cat.completeness = Completeness::Full;
    } else {
      candidates.clear();
      sample_candidates(f, candidates);
      cat.completeness = Completeness::Sample;
      cat.basis = "sample: witnesses, abelian, metacyclic, dihedral/dicyclic, Sylow towers, PSL(2,p) x L";
    }
    if (exhausted_) {
      cat.completeness = Completeness::Sample;
      cat.budget_exhausted = true;
      cat.basis += " (budget exhausted)";
    }
    cat.entries = summarize(std::move(candidates));
    return cat;
  }

 private:
  // Distinct by (spectrum, center, d); order by recipe.
  static std::vector<CatalogEntry> summarize(std::vector<Group> groups) {
    std::vector<CatalogEntry> out;
    std::set<std::tuple<OrderSpectrum, std::size_t, unsigned>> seen;
    for (auto& g : groups) {
      CatalogEntry e;
      e.spectrum = order_spectrum(g);
      e.center = center_size(g);
      e.d_min = d_min(g, true);
      if (!seen.emplace(e.spectrum, e.center, e.d_min).second) continue;
      e.group = std::move(g);
      out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(),
              [](const CatalogEntry& a, const CatalogEntry& b) { return a.group.recipe() < b.group.recipe(); });
    return out;
  }

  static std::vector<Group> sylow_shapes(std::uint64_t p, unsigned e) {
    std::vector<Group> out;
    out.push_back(cyclic(ipow(p, e)));
    if (e == 2) out.push_back(elementary_abelian(p, 2));
    return out;
  }

  bool full_candidates(const Factorization& f, std::vector<Group>& out, std::string& basis) {
    if (f.n == 1) {
      out.push_back(cyclic(1));
      basis = "trivial group";
      return true;
    }
    if (!is_cube_free(f) || f.num_primes() > 2) return false;
    if (f.num_primes() == 1) {
      out = sylow_shapes(f.factors[0].prime, f.factors[0].exponent);
      basis = f.factors[0].exponent == 1 ? "order p: cyclic" : "order p^2: Z_{p^2}, Z_p x Z_p";
      return true;
    }
    if (f.n == 12) {
      out = order12_catalog();
      basis = "order 12: the five groups";
      return true;
    }
    const std::uint64_t r = forced_normal_sylow_prime(f);
    if (r == 0) return false;
    const PrimePower normal = f.factors[0].prime == r ? f.factors[0] : f.factors[1];
    const PrimePower other = f.factors[0].prime == r ? f.factors[1] : f.factors[0];
    for (const Group& n : sylow_shapes(normal.prime, normal.exponent)) {
      for (const Group& h : sylow_shapes(other.prime, other.exponent)) {
        for (const Action& phi : enumerate_actions(h, n)) {
          if (out_of_time()) return true;
          out.push_back(semidirect_product(n, h, phi));
        }
      }
    }
    basis = "normal Sylow " + std::to_string(r) + "-subgroup (n_" + std::to_string(r) +
            " = 1 forced): S_" + std::to_string(r) + " x| S_" + std::to_string(other.prime) +
            " over all actions; split by coprimality";
    return true;
  }

  bool room(const std::vector<Group>& out) { return out.size() < options_.sample_limit && !out_of_time(); }

  static std::vector<std::vector<unsigned>> partitions(unsigned e, unsigned max_part) {
    if (e == 0) return {{}};
    std::vector<std::vector<unsigned>> out;
    for (unsigned part = std::min(e, max_part); part >= 1; --part)
      for (auto rest : partitions(e - part, part)) {
        rest.insert(rest.begin(), part);
        out.push_back(std::move(rest));
      }
    return out;
  }

  void abelian_groups(const Factorization& f, std::vector<Group>& out) {
    std::vector<std::vector<Group>> per_prime;
    for (const auto& pp : f.factors) {
      std::vector<Group> shapes;
      for (const auto& parts : partitions(pp.exponent, pp.exponent)) {
        std::optional<Group> g;
        for (unsigned part : parts) {
          Group c = cyclic(ipow(pp.prime, part));
          g = g ? direct_product(*g, c) : c;
        }
        shapes.push_back(std::move(*g));
      }
      per_prime.push_back(std::move(shapes));
    }
    std::vector<std::size_t> idx(per_prime.size(), 0);
    while (room(out)) {
      Group g = cyclic(1);
      bool first = true;
      for (std::size_t i = 0; i < per_prime.size(); ++i) {
        g = first ? per_prime[i][idx[i]] : direct_product(g, per_prime[i][idx[i]]);
        first = false;
      }
      out.push_back(std::move(g));
      std::size_t pos = per_prime.size();
      while (pos > 0) {
        --pos;
        if (++idx[pos] < per_prime[pos].size()) break;
        idx[pos] = 0;
        if (pos == 0) return;
      }
      if (per_prime.empty()) return;
    }
  }

  void witnesses(const Factorization& f, std::vector<Group>& out) {
    for (auto it = f.factors.rbegin(); it != f.factors.rend(); ++it)
      if (it->exponent >= 3) out.push_back(cube_witness(it->prime, f.n));
    for (auto it = f.factors.rbegin(); it != f.factors.rend(); ++it) {
      if (it->exponent < 2) continue;
      const std::uint64_t p = it->prime;
      for (const auto& qq : f.factors) {
        const std::uint64_t q = qq.prime;
        if (q >= p || (p - 1) % q != 0) continue;
        const std::uint64_t rest = f.n / (p * p * q);
        Group w = witness_p2q(p, q);
        out.push_back(rest == 1 ? std::move(w) : direct_product(w, cyclic(rest)));
      }
    }
  }

  void metacyclic_groups(std::uint64_t n, std::vector<Group>& out) {
    for (std::uint64_t m : divisors(n)) {
      const std::uint64_t h = n / m;
      if (m < 3 || h < 2) continue;
      // One r per cyclic subgroup <r> of U(m) with r^h = 1, r != 1.
      std::set<std::vector<std::uint64_t>> subgroups;
      for (std::uint64_t r = 2; r < m && room(out); ++r) {
        if (std::gcd(r, m) != 1 || detail::pow_mod(r, h, m) != 1) continue;
        std::vector<std::uint64_t> powers;
        for (std::uint64_t x = r; x != 1; x = detail::mul_mod(x, r, m)) powers.push_back(x);
        std::sort(powers.begin(), powers.end());
        if (subgroups.insert(powers).second) out.push_back(metacyclic(m, h, r));
      }
    }
  }

  // S_{p1} x| H for the largest prime p1 and H from the catalog of n / p1^e.
  void towers(const Factorization& f, std::vector<Group>& out) {
    if (f.num_primes() < 2) return;
    const PrimePower top = f.factors[0];
    if (top.exponent > 2) return;
    const std::uint64_t rest = f.n / ipow(top.prime, top.exponent);
    const Catalog sub = sub_catalog(rest);
    for (const Group& n : sylow_shapes(top.prime, top.exponent)) {
      for (const auto& entry : sub.entries) {
        const Group& h = entry.group;
        const auto gens = standard_generators(h);
        std::size_t combos = 1;
        for (Elem g : gens) combos *= automorphisms_of_order_dividing(n, element_order(h, g)).size();
        if (combos > 4096) continue;
        for (const Action& phi : enumerate_actions(h, n)) {
          if (!room(out)) return;
          out.push_back(semidirect_product(n, h, phi));
        }
      }
    }
  }

  void psl_shapes(std::uint64_t n, std::vector<Group>& out) {
    for (std::uint64_t p = 5;; ++p) {
      if (!is_prime(p)) continue;
      const std::uint64_t order = p * (p * p - 1) / 2;
      if (order > n || order > max_group_order()) return;
      if (n % order != 0) continue;
      const Group simple = psl2(p);
      for (const auto& entry : sub_catalog(n / order).entries) {
        if (!room(out)) return;
        out.push_back(n == order ? simple : direct_product(simple, entry.group));
        if (n == order) break;
      }
    }
  }

  void sample_candidates(const Factorization& f, std::vector<Group>& out) {
    witnesses(f, out);
    abelian_groups(f, out);
    if (f.n % 2 == 0 && f.n >= 6 && room(out)) out.push_back(dihedral(f.n / 2));
    if (f.n % 4 == 0 && f.n >= 8 && room(out)) out.push_back(dicyclic(f.n / 4));
    metacyclic_groups(f.n, out);
    towers(f, out);
    psl_shapes(f.n, out);
  }

  const Catalog& sub_catalog(std::uint64_t m) {
    auto it = cache_.find(m);
    if (it == cache_.end()) it = cache_.emplace(m, build(m)).first;
    return it->second;
  }

  CatalogOptions options_;
  std::chrono::steady_clock::time_point start_;
  bool exhausted_ = false;
  std::map<std::uint64_t, Catalog> cache_;
};

}  // namespace detail

/// Groups of order n from the construction toolkit, one per distinct
/// (spectrum, center size, d) label, with the completeness tier.
inline Catalog catalog(std::uint64_t n, const CatalogOptions& options = {}) {
  if (n == 0) throw std::invalid_argument("catalog: n must be positive");
  return detail::CatalogBuilder(options).build(n);
}

struct GroupSummary {
  std::string recipe;
  unsigned d_min = 0;
  OrderSpectrum spectrum;
  std::size_t center = 0;
};

struct VerificationReport {
  std::uint64_t n = 1;
  bool predicate_verdict = true;
  FailureReason failure_reason;
  std::vector<GroupSummary> groups;
  bool oracle_verdict = true;
  Completeness completeness = Completeness::Sample;
  /// Full: predicate == oracle. Sample: the oracle refutes nothing the
  /// predicate accepts (oracle false implies predicate false).
  bool agree = true;
  std::string basis;
};

inline VerificationReport verify_order(std::uint64_t n, const CatalogOptions& options = {}) {
  VerificationReport report;
  report.n = n;
  const ClassificationRecord record = classify(n);
  report.predicate_verdict = record.two_generated_number;
  report.failure_reason = record.failure_reason;
  Catalog cat = catalog(n, options);
  report.completeness = cat.completeness;
  report.basis = cat.basis;
  for (auto& e : cat.entries) {
    if (e.d_min > 2) report.oracle_verdict = false;
    report.groups.push_back({e.group.recipe(), e.d_min, std::move(e.spectrum), e.center});
  }
  report.agree = report.completeness == Completeness::Full
                     ? report.predicate_verdict == report.oracle_verdict
                     : report.oracle_verdict || !report.predicate_verdict;
  return report;
}

struct RangeSummary {
  std::vector<VerificationReport> reports;
  std::size_t full_agreements = 0;
  std::size_t full_disagreements = 0;
  std::size_t sample_checks = 0;
  std::size_t sample_violations = 0;
  std::vector<std::uint64_t> refuted;  // orders with an explicit d >= 3 group

  bool ok() const { return full_disagreements == 0 && sample_violations == 0; }
};

inline RangeSummary verify_range(std::uint64_t lo, std::uint64_t hi, const CatalogOptions& options = {}) {
  if (lo == 0 || lo > hi) throw std::invalid_argument("verify_range: need 1 <= lo <= hi");
  check_order_cap(hi, "verify_range");
  RangeSummary summary;
  for (std::uint64_t n = lo; n <= hi; ++n) {
    VerificationReport r = verify_order(n, options);
    if (r.completeness == Completeness::Full) {
      ++(r.agree ? summary.full_agreements : summary.full_disagreements);
    } else {
      ++summary.sample_checks;
      if (!r.agree) ++summary.sample_violations;
    }
    if (!r.oracle_verdict) summary.refuted.push_back(n);
    summary.reports.push_back(std::move(r));
  }
  return summary;
}

}  // namespace twogen
