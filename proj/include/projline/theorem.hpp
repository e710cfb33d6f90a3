#ifndef PROJLINE_THEOREM_HPP
#define PROJLINE_THEOREM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "projline/reconstruct.hpp"
#include "projline/search.hpp"

namespace projline
{

enum class ArrowStatus { pass, fail, skipped, infeasible };

std::string to_string(ArrowStatus s);

/// One implication of the classification, checked at finite scale.
struct Arrow
{
  std::string name;
  ArrowStatus status = ArrowStatus::skipped;
  bool asserted = false;  // a failure here is a theorem violation
  std::string detail;
  std::optional<Perm> witness;
};

/// Diagnostics for one permutation of the O-preserving stabilizer.
struct SurvivorReport
{
  Perm perm;
  Classification classification;
  Restriction restriction;
  ClosureReport closure;
  bool image_of_k = false;
};

struct VerifyOptions
{
  SearchMethod method = SearchMethod::backtracking;
  SearchOptions search;
  /// Bound on group elements times quadruple (or chain) checks for the
  /// element-by-element sweeps; above it only generators are checked, which
  /// still decides the question because both properties are closed under
  /// composition.
  std::uint64_t sweep_budget = 2'000'000'000;
};

struct TheoremReport
{
  Hypotheses hypotheses;
  bool hypotheses_violated = false;
  std::optional<std::uint64_t> pgammal2_order;
  std::optional<SearchReport> search;
  std::optional<std::uint64_t> group_order;
  std::optional<bool> group_equals_pgammal2;
  std::vector<SurvivorReport> survivors;
  std::optional<std::size_t> chain_count;
  std::optional<SearchReport> chain_search;
  std::vector<Arrow> arrows;

  bool all_asserted_pass() const;
  /// Some asserted arrow could not be decided within the caps.
  bool any_asserted_infeasible() const;
};

/// Runs every arrow. Searches that exceed their caps mark the arrows that
/// depend on them as infeasible; nothing throws for size reasons.
TheoremReport verify_theorem(ProjectiveLine const &line, OSet const &O,
                             VerifyOptions const &opts = {});

} // namespace projline

#endif // PROJLINE_THEOREM_HPP
