// twogen: classify 2-generated numbers and check them against explicit groups.
//
// Exit codes: 0 success, 1 domain-level negative (e.g. no witness exists, or a
// verification disagreement), 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "twogen/twogen.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

using twogen::Json;

bool write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    return false;
  }
  out << contents;
  return static_cast<bool>(out);
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

void print_record(const twogen::ClassificationRecord& r) {
  std::cout << "n: " << r.n << "\n"
            << "cube_free: " << yes_no(r.cube_free) << "\n"
            << "square_free: " << yes_no(r.square_free) << "\n"
            << "nilpotent_factorization: " << yes_no(r.nilpotent_factorization) << "\n"
            << "cyclic_number: " << yes_no(r.cyclic_number) << "\n"
            << "abelian_number: " << yes_no(r.abelian_number) << "\n"
            << "nilpotent_number: " << yes_no(r.nilpotent_number) << "\n"
            << "two_generated: " << yes_no(r.two_generated_number) << "\n"
            << "reason: " << r.failure_reason.to_string() << "\n";
}

void print_report(const twogen::VerificationReport& r) {
  std::cout << "order " << r.n << ": predicate " << yes_no(r.predicate_verdict) << ", oracle "
            << yes_no(r.oracle_verdict) << ", " << twogen::to_string(r.completeness) << ", "
            << (r.agree ? "agree" : "DISAGREE") << "\n";
  std::cout << "  basis: " << r.basis << "\n";
  for (const auto& g : r.groups)
    std::cout << "  d=" << g.d_min << "  " << g.recipe << "  " << twogen::spectrum_to_string(g.spectrum) << "\n";
}

bool passes_filter(const twogen::ClassificationRecord& r, const std::string& filter) {
  if (filter == "two-gen") return r.two_generated_number;
  if (filter == "cyclic") return r.cyclic_number;
  if (filter == "abelian") return r.abelian_number;
  if (filter == "nilpotent") return r.nilpotent_number;
  if (filter == "cube-free") return r.cube_free;
  if (filter == "square-free") return r.square_free;
  return true;
}

/// Recipe of a group with d >= 3 and order n, matching the failure reason.
std::string witness_recipe(const twogen::ClassificationRecord& r) {
  using twogen::FailureKind;
  if (r.failure_reason.kind == FailureKind::NotCubeFree)
    return "cubewit:" + std::to_string(r.failure_reason.p) + ":" + std::to_string(r.n);
  const std::uint64_t p = r.failure_reason.p, q = r.failure_reason.q;
  const std::uint64_t rest = r.n / (p * p * q);
  std::string recipe = "witness:" + std::to_string(p) + ":" + std::to_string(q);
  if (rest > 1) recipe += "*cyclic:" + std::to_string(rest);
  return recipe;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-generated numbers: arithmetic classification and group-theoretic verification"};
  app.require_subcommand(1);

  std::uint64_t classify_n = 0;
  bool classify_json = false;
  auto* classify_cmd = app.add_subcommand("classify", "Print every P-number verdict for n");
  classify_cmd->add_option("n", classify_n, "Positive integer")->required()->check(CLI::PositiveNumber);
  classify_cmd->add_flag("--json", classify_json, "Emit a JSON record");

  std::uint64_t list_max = 0;
  std::string list_filter = "two-gen";
  bool list_negate = false, list_csv = false;
  auto* list_cmd = app.add_subcommand("list", "List n <= max passing a predicate");
  list_cmd->add_option("--max", list_max, "Upper bound")->required()->check(CLI::PositiveNumber);
  list_cmd->add_option("--filter", list_filter, "Predicate")
      ->check(CLI::IsMember({"two-gen", "cyclic", "abelian", "nilpotent", "cube-free", "square-free"}));
  list_cmd->add_flag("--negate", list_negate, "Keep the numbers that fail the predicate");
  list_cmd->add_flag("--csv", list_csv, "Emit CSV with every verdict");

  std::uint64_t witness_n = 0;
  auto* witness_cmd = app.add_subcommand("witness", "Build a group of order n with no 2-element generating set");
  witness_cmd->add_option("n", witness_n, "Positive integer")->required()->check(CLI::PositiveNumber);

  std::string group_query, group_recipe, dot_file, out_file;
  bool group_json = false;
  auto* group_cmd = app.add_subcommand("group", "Inspect a group given by recipe");
  group_cmd->add_option("query", group_query, "dmin | spectrum | graph | table")
      ->required()
      ->check(CLI::IsMember({"dmin", "spectrum", "graph", "table"}));
  group_cmd->add_option("recipe", group_recipe, "Recipe, e.g. witness:7:3 or d:6*cyclic:5")->required();
  group_cmd->add_option("--dot", dot_file, "Write the generating graph as DOT");
  group_cmd->add_option("--out", out_file, "Write the Cayley table document (JSON)");
  group_cmd->add_flag("--json", group_json, "Emit JSON");

  std::uint64_t verify_n = 0, budget_ms = 0;
  bool verify_json = false;
  auto* verify_cmd = app.add_subcommand("verify", "Check the predicate against a catalog of groups of order n");
  verify_cmd->add_option("n", verify_n, "Group order")->required()->check(CLI::PositiveNumber);
  verify_cmd->add_option("--budget-ms", budget_ms, "Per-order time budget (0 = none)");
  verify_cmd->add_flag("--json", verify_json, "Emit the report as JSON");

  std::uint64_t range_lo = 0, range_hi = 0;
  auto* range_cmd = app.add_subcommand("verify-range", "Verify every order in [lo, hi]");
  range_cmd->add_option("lo", range_lo)->required()->check(CLI::PositiveNumber);
  range_cmd->add_option("hi", range_hi)->required()->check(CLI::PositiveNumber);
  range_cmd->add_option("--budget-ms", budget_ms, "Per-order time budget (0 = none)");
  range_cmd->add_flag("--json", verify_json, "Emit one JSON report per line");

  auto* selftest_cmd = app.add_subcommand("selftest", "Run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*classify_cmd) {
      const auto record = twogen::classify(classify_n);
      if (classify_json)
        std::cout << twogen::to_json(record).dump() << "\n";
      else
        print_record(record);
      return kOk;
    }

    if (*list_cmd) {
      const twogen::SpfSieve sieve(list_max);
      if (list_csv)
        std::cout << "n,cube_free,square_free,cyclic,abelian,nilpotent,two_generated,reason\n";
      for (std::uint64_t n = 1; n <= list_max; ++n) {
        const auto r = twogen::classify(sieve.factorize(n));
        if (passes_filter(r, list_filter) == list_negate) continue;
        if (list_csv) {
          std::cout << n << "," << r.cube_free << "," << r.square_free << "," << r.cyclic_number << ","
                    << r.abelian_number << "," << r.nilpotent_number << "," << r.two_generated_number << ","
                    << r.failure_reason.to_string() << "\n";
        } else {
          std::cout << n << "\n";
        }
      }
      return kOk;
    }

    if (*witness_cmd) {
      const auto record = twogen::classify(witness_n);
      if (record.two_generated_number) {
        std::cout << witness_n << " is 2-generated: no group of this order needs three generators\n";
        return kNegative;
      }
      const std::string recipe = witness_recipe(record);
      const twogen::Group g = twogen::build_from_recipe(recipe);
      std::cout << "reason: " << record.failure_reason.to_string() << "\n"
                << "recipe: " << recipe << "\n"
                << "order: " << g.order() << "\n"
                << "d: " << twogen::d_min(g, false) << "\n"
                << "spectrum: " << twogen::spectrum_to_string(twogen::order_spectrum(g)) << "\n";
      return kOk;
    }

    if (*group_cmd) {
      const twogen::Group g = twogen::build_from_recipe(group_recipe);
      if (!out_file.empty() && !write_file(out_file, twogen::to_json(g).dump() + "\n")) return kUsage;
      if (group_query == "dmin") {
        std::cout << twogen::d_min(g, false) << "\n";
      } else if (group_query == "spectrum") {
        const auto spectrum = twogen::order_spectrum(g);
        std::cout << (group_json ? twogen::to_json(spectrum).dump() : twogen::spectrum_to_string(spectrum)) << "\n";
      } else if (group_query == "graph") {
        const auto graph = twogen::generating_graph(g);
        if (!dot_file.empty() && !write_file(dot_file, twogen::to_dot(graph, g.recipe()))) return kUsage;
        if (group_json) {
          Json edges = Json::array();
          for (const auto& [a, b] : graph.edges) edges.push_back({a, b});
          std::cout << Json{{"order", graph.order}, {"recipe", g.recipe()}, {"edges", edges}}.dump() << "\n";
        } else {
          std::cout << "vertices: " << graph.order << "\nedges: " << graph.edges.size() << "\n";
        }
      } else {
        std::cout << twogen::to_json(g).dump() << "\n";
      }
      return kOk;
    }

    if (*verify_cmd) {
      const auto report = twogen::verify_order(verify_n, {budget_ms});
      if (verify_json)
        std::cout << twogen::to_json(report).dump() << "\n";
      else
        print_report(report);
      return report.agree ? kOk : kNegative;
    }

    if (*range_cmd) {
      if (range_lo > range_hi) {
        std::cerr << "error: lo must not exceed hi\n";
        return kUsage;
      }
      const auto summary = twogen::verify_range(range_lo, range_hi, {budget_ms});
      for (const auto& r : summary.reports) {
        if (verify_json)
          std::cout << twogen::to_json(r).dump() << "\n";
        else
          std::cout << r.n << "  " << twogen::to_string(r.completeness) << "  predicate=" << yes_no(r.predicate_verdict)
                    << "  oracle=" << yes_no(r.oracle_verdict) << "  " << (r.agree ? "agree" : "DISAGREE") << "\n";
      }
      if (!verify_json) {
        std::cout << "full agreements: " << summary.full_agreements << "\n"
                  << "full disagreements: " << summary.full_disagreements << "\n"
                  << "sample checks: " << summary.sample_checks << "\n"
                  << "sample violations: " << summary.sample_violations << "\n"
                  << "refuted:";
        for (auto n : summary.refuted) std::cout << " " << n;
        std::cout << "\n";
      }
      if (!summary.ok()) std::cerr << "error: verification disagreement\n";
      return summary.ok() ? kOk : kNegative;
    }

    if (*selftest_cmd) {
      return twogen::report_acceptance(twogen::run_acceptance(), std::cout) ? kOk : kNegative;
    }
  } catch (const twogen::RecipeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const twogen::SizeCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}
