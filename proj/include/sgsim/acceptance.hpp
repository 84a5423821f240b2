#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sgsim {

// Release-gate checks. Each runner executes one numbered criterion end to
// end and reports pass/fail with a human-readable account of what was
// measured. Experiments run at committed seeds; tolerances and runtime
// budgets are part of the pass condition.

struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  std::string detail;
  double seconds;
};

CriterionResult criterion_analytic_suite();
CriterionResult criterion_monte_carlo_equivalence(std::uint64_t seed, unsigned workers);
CriterionResult criterion_density_inference(std::uint64_t seed, unsigned workers);
CriterionResult criterion_zone_properties();
CriterionResult criterion_throughput_ratios(std::uint64_t seed, unsigned workers);
CriterionResult criterion_structural();
// Shells out to the CLI: repeats small runs of every sweep subcommand at
// worker counts 1 and 4 and requires byte-identical output files.
CriterionResult criterion_determinism(const std::string& cli_path,
                                      const std::string& scratch_dir);

inline constexpr std::uint64_t kAcceptanceSeed = 1905;

// Runs criteria whose ids appear in `ids` (all seven when empty), in order.
std::vector<CriterionResult> run_criteria(const std::vector<int>& ids,
                                          const std::string& cli_path,
                                          const std::string& scratch_dir,
                                          unsigned workers);

}  // namespace sgsim
