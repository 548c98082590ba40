#pragma once

// End-to-end acceptance checks. Each criterion runs at its pinned tolerance
// and time limit and reports one pass/fail line.

#include <chrono>
#include <cstdint>
#include <functional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "twogen/arith.hpp"
#include "twogen/constructions.hpp"
#include "twogen/group.hpp"
#include "twogen/recipe.hpp"
#include "twogen/verifier.hpp"

namespace twogen {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0;
  std::string detail;
};

namespace detail {

class Check {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 8) failures_.push_back(what);
    passed_ = passed_ && ok;
  }
  bool passed() const { return passed_; }
  std::string detail() const {
    std::string out;
    for (const auto& f : failures_) out += (out.empty() ? "" : "; ") + f;
    return out;
  }

 private:
  bool passed_ = true;
  std::vector<std::string> failures_;
};

inline CriterionResult run_criterion(int id, std::string name, double limit_seconds,
                                     const std::function<void(Check&)>& body) {
  Check check;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(check);
  } catch (const std::exception& e) {
    check.require(false, std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds > limit_seconds) {
    std::ostringstream msg;
    msg << "took " << seconds << " s, limit " << limit_seconds << " s";
    check.require(false, msg.str());
  }
  return {id, std::move(name), check.passed(), seconds, check.detail()};
}

inline bool has_order(const OrderSpectrum& s, std::uint64_t order) { return s.count(order) > 0; }

}  // namespace detail

inline std::vector<CriterionResult> run_acceptance() {
  using detail::Check;
  std::vector<CriterionResult> results;

  results.push_back(detail::run_criterion(1, "predicate fidelity on anchor orders", 1e-3, [](Check& c) {
    const std::pair<std::uint64_t, bool> anchors[] = {{4, true},  {8, false},  {12, true}, {16, false},
                                                      {18, false}, {30, true}, {75, true}, {147, false}};
    for (auto [n, expected] : anchors)
      c.require(classify(n).two_generated_number == expected, "n=" + std::to_string(n));
  }));

  results.push_back(detail::run_criterion(2, "unified rule == theorem split for n <= 10^6", 10.0, [](Check& c) {
    const SpfSieve sieve(1'000'000);
    for (std::uint64_t n = 1; n <= 1'000'000; ++n) {
      const Factorization f = sieve.factorize(n);
      if (is_two_generated_number(f) != is_two_generated_by_theorem_split(f)) c.require(false, "n=" + std::to_string(n));
    }
  }));

  results.push_back(detail::run_criterion(3, "p^2 q witnesses: d = 3, exact spectrum, no order pq", 30.0, [](Check& c) {
    const std::pair<std::uint64_t, std::uint64_t> pairs[] = {{3, 2}, {5, 2}, {7, 2}, {7, 3}, {13, 3}, {11, 5}};
    for (auto [p, q] : pairs) {
      const std::string tag = "witness:" + std::to_string(p) + ":" + std::to_string(q);
      const Group g = witness_p2q(p, q);
      c.require(g.order() == p * p * q && g.order() <= 605, tag + " order");
      c.require(d_min(g, false) == 3, tag + " d_min");
      const OrderSpectrum expected{{1, 1}, {p, p * p - 1}, {q, p * p * (q - 1)}};
      const OrderSpectrum spectrum = order_spectrum(g);
      c.require(spectrum == expected, tag + " spectrum " + spectrum_to_string(spectrum));
      c.require(!detail::has_order(spectrum, p * q), tag + " has an element of order pq");
    }
  }));

  results.push_back(detail::run_criterion(4, "positive p^2 q: every action gives d <= 2", 120.0, [](Check& c) {
    const std::pair<std::uint64_t, std::uint64_t> pairs[] = {{5, 3}, {7, 5}, {11, 3}, {13, 5}};
    for (auto [p, q] : pairs) {
      const std::string tag = std::to_string(p) + "^2*" + std::to_string(q);
      const Group acting = cyclic(q);
      const Group cyc = cyclic(p * p);
      const auto cyclic_actions = enumerate_actions_cyclic(q, cyc);
      c.require(cyclic_actions.size() == 1 && cyclic_actions[0].is_trivial(), tag + " Z_{p^2} admits a nontrivial action");
      for (const Group& target : {cyc, elementary_abelian(p, 2)})
        for (const Action& phi : enumerate_actions_cyclic(q, target)) {
          const Group g = semidirect_product(target, acting, phi);
          c.require(d_min(g, true) <= 2, tag + " " + g.recipe());
        }
    }
  }));

  results.push_back(detail::run_criterion(5, "order 12: five groups, distinct spectra, d <= 2, associative", 60.0, [](Check& c) {
    const auto groups = order12_catalog();
    c.require(groups.size() == 5, "catalog size " + std::to_string(groups.size()));
    std::set<OrderSpectrum> spectra;
    for (const Group& g : groups) {
      c.require(g.order() == 12, g.recipe() + " order");
      c.require(validate_exhaustive(g).ok, g.recipe() + " fails validation");
      c.require(d_min(g, false) <= 2, g.recipe() + " d_min");
      spectra.insert(order_spectrum(g));
    }
    c.require(spectra.size() == 5, "spectra not pairwise distinct");
  }));

  results.push_back(detail::run_criterion(6, "p q^2 catalogs: only 50 has a d = 3 group", 60.0, [](Check& c) {
    for (std::uint64_t n : {20, 44, 50, 63}) {
      const Catalog cat = catalog(n);
      bool has_three = false;
      for (const auto& e : cat.entries) has_three = has_three || e.d_min >= 3;
      c.require(has_three == (n == 50), "order " + std::to_string(n));
      c.require(has_three == !classify(n).two_generated_number, "predicate mismatch at " + std::to_string(n));
    }
  }));

  results.push_back(detail::run_criterion(7, "cube-free orders <= 200: d <= 3 by exhaustive search", 300.0, [](Check& c) {
    for (std::uint64_t n = 1; n <= 200; ++n) {
      if (!is_cube_free(factorize(n))) continue;
      for (const auto& e : catalog(n).entries) {
        const unsigned d = d_min(e.group, false);
        c.require(d <= 3, e.group.recipe() + " d=" + std::to_string(d));
      }
    }
  }));

  results.push_back(detail::run_criterion(8, "coprime direct products: d(GxH) = max", 60.0, [](Check& c) {
    const std::pair<const char*, const char*> pairs[] = {
        {"witness:3:2", "cyclic:5"}, {"a4", "cyclic:5"},      {"elab:3:2", "cyclic:2"},   {"meta:7:3:2", "elab:2:2"},
        {"d:5", "cyclic:3"},         {"elab:2:3", "cyclic:3"}, {"witness:5:2", "cyclic:3"}, {"elab:3:3", "elab:2:2"},
        {"psl2:5", "cyclic:7"},      {"dic:3", "cyclic:5"},    {"cyclic:4", "cyclic:9"},    {"elab:5:2", "meta:3:4:2"}};
    bool saw_witness = false;
    for (auto [a, b] : pairs) {
      const Group g = build_from_recipe(a);
      const Group h = build_from_recipe(b);
      const unsigned expected = std::max(d_min(g, false), d_min(h, false));
      const unsigned got = d_min(direct_product(g, h), false);
      c.require(got == expected, std::string(a) + "*" + b);
      if (std::string(a) == "witness:3:2") {
        saw_witness = true;
        c.require(got == 3, "witness:3:2*cyclic:5 should have d = 3");
      }
    }
    c.require(saw_witness, "witness pair missing");
  }));

  results.push_back(detail::run_criterion(9, "PSL(2,5) and PSL(2,7) are 2-generated", 60.0, [](Check& c) {
    for (auto [p, order] : {std::pair<std::uint64_t, std::size_t>{5, 60}, {7, 168}}) {
      const Group g = psl2(p);
      c.require(g.order() == order, "psl2:" + std::to_string(p) + " order");
      c.require(d_min(g, false) == 2, "psl2:" + std::to_string(p) + " d_min");
    }
  }));

  results.push_back(detail::run_criterion(10, "verify-range 1..60", 300.0, [](Check& c) {
    const RangeSummary summary = verify_range(1, 60);
    c.require(summary.full_disagreements == 0, std::to_string(summary.full_disagreements) + " FULL disagreements");
    c.require(summary.sample_violations == 0, std::to_string(summary.sample_violations) + " sample violations");
    const std::set<std::uint64_t> refuted(summary.refuted.begin(), summary.refuted.end());
    for (std::uint64_t n : {8, 16, 18, 24, 50, 54}) c.require(refuted.count(n) == 1, "order " + std::to_string(n) + " not refuted");
  }));

  results.push_back(detail::run_criterion(11, "generating graph nonempty iff d <= 2", 300.0, [](Check& c) {
    for (std::uint64_t n = 1; n <= 100; ++n)
      for (const auto& e : catalog(n).entries) {
        const bool nonempty = !generating_graph(e.group).edges.empty();
        c.require(nonempty == (e.d_min <= 2 && n >= 2), e.group.recipe());
      }
    for (std::uint64_t p : {2, 3, 5, 7, 11})
      c.require(generating_graph(cyclic(p)).edges.size() == p * (p - 1) / 2, "Z_" + std::to_string(p));
  }));

  results.push_back(detail::run_criterion(12, "P-number hierarchy for n <= 10^5", 10.0, [](Check& c) {
    const SpfSieve sieve(100'000);
    for (std::uint64_t n = 1; n <= 100'000; ++n) {
      const ClassificationRecord r = classify(sieve.factorize(n));
      const std::string tag = "n=" + std::to_string(n);
      c.require(!r.cyclic_number || r.abelian_number, tag + " cyclic => abelian");
      c.require(!r.abelian_number || r.nilpotent_number, tag + " abelian => nilpotent");
      c.require(!r.abelian_number || r.two_generated_number, tag + " abelian => two-generated");
      c.require(r.cyclic_number == euler_phi_coprime(sieve.factorize(n)), tag + " cyclic <=> gcd(n, phi(n)) = 1");
    }
  }));

  return results;
}

/// Prints one line per criterion; returns true when all pass.
inline bool report_acceptance(const std::vector<CriterionResult>& results, std::ostream& out) {
  bool all = true;
  for (const auto& r : results) {
    out << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << "  (" << r.seconds << " s)";
    if (!r.detail.empty()) out << "  -- " << r.detail;
    out << "\n";
    all = all && r.passed;
  }
  return all;
}

}  // namespace twogen
