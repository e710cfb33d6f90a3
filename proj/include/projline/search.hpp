#ifndef PROJLINE_SEARCH_HPP
#define PROJLINE_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "projline/chains.hpp"
#include "projline/oset.hpp"

namespace projline
{

/// For every ordered triple (a, b, c) of distinct points, the set of points d
/// with R(a, b, c, d). The 4-ary relation R must be invariant under the Klein
/// four-group acting on positions; the search engine relies on that to cover
/// every quadruple through the last coordinate alone.
class TripleRelation
{
public:
  /// R(a,b,c,d) <=> [a,b;c,d] in O, i.e. d = g_x(a,b,c) for some x in O.
  static TripleRelation from_oset(ProjectiveLine const &line, OSet const &O);
  /// R(a,b,c,d) <=> d lies on the chain through a, b, c.
  static TripleRelation from_chains(ProjectiveLine const &line,
                                    ChainSystem const &chains);

  std::uint32_t points() const { return n_; }
  std::uint32_t words() const { return words_; }

  std::uint64_t const *related(std::uint32_t a, std::uint32_t b,
                               std::uint32_t c) const
  { return &bits_[((std::size_t(a) * n_ + b) * n_ + c) * words_]; }

  bool holds(std::uint32_t a, std::uint32_t b, std::uint32_t c,
             std::uint32_t d) const
  { return (related(a, b, c)[d >> 6] >> (d & 63)) & 1; }

private:
  TripleRelation(std::uint32_t n);

  std::uint32_t n_ = 0;
  std::uint32_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

enum class SearchMethod { exhaustive, backtracking };

std::string to_string(SearchMethod m);
/// Throws std::invalid_argument for unknown names.
SearchMethod parse_search_method(std::string const &s);

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;
inline constexpr std::uint64_t kMaxExhaustiveCandidates = 10'000'000;
inline constexpr std::uint32_t kMaxBacktrackingOrder = 64;

struct SearchOptions
{
  std::uint64_t node_budget = kDefaultNodeBudget;
  unsigned workers = 1;
};

/// Permutations fixing 0, 1 and infinity that satisfy the leaf check.
struct SearchReport
{
  SearchMethod method = SearchMethod::backtracking;
  std::vector<Perm> stabilizer;  // sorted
  std::uint64_t nodes = 0;   // assignments tried (exhaustive: candidates)
  std::uint64_t prunes = 0;  // assignments refuted by propagation
  std::uint64_t leaves = 0;  // complete assignments reaching the leaf check
  std::uint64_t false_accepts = 0;  // leaves rejected by the leaf check
  double wall_seconds = 0.0;
};

class SearchInfeasible : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Node budget exhausted; `partial()` holds what was found so far.
class BudgetExceeded : public std::runtime_error
{
public:
  BudgetExceeded(std::string const &what, SearchReport partial)
  : std::runtime_error(what), partial_(std::move(partial))
  {}

  SearchReport const &partial() const { return partial_; }

private:
  SearchReport partial_;
};

using LeafCheck = std::function<bool(Perm const &)>;

/// Enumerates every permutation fixing 0, 1, infinity whose image respects
/// `rel` on all quadruples (backtracking), or every such permutation at all
/// (exhaustive); either way the result is filtered by `accept`.
///
/// Backtracking assigns points in a fixed order: after 0, 1, infinity, the
/// point with the most related triples among the already ordered points, ties
/// by index. Candidate images are kept as bitsets; assigning v = w restricts
/// every open point d through every ordered triple (a, b, c) of assigned
/// points containing v: d related to (a, b, c) must map into the relation
/// set of (f a, f b, f c), and unrelated d must map outside it.
SearchReport stabilizer_search(ProjectiveLine const &line, TripleRelation const &rel,
                               SearchMethod method, LeafCheck const &accept,
                               SearchOptions const &opts = {});

/// Every one of the (q-2)! candidates, filtered by `accept`. Throws
/// SearchInfeasible above 10^7 candidates.
SearchReport exhaustive_search(ProjectiveLine const &line, LeafCheck const &accept,
                               SearchOptions const &opts = {});

SearchReport o_preserving_stabilizer(ProjectiveLine const &line, OSet const &O,
                                     SearchMethod method,
                                     SearchOptions const &opts = {});

SearchReport chain_preserving_stabilizer(ProjectiveLine const &line,
                                         ChainSystem const &chains,
                                         SearchMethod method,
                                         SearchOptions const &opts = {});

/// {T o s : T in PGL_2(F), s in stabilizer}. PGL_2 is sharply 3-transitive,
/// so this is the whole preserving group whenever the property is
/// PGL_2-invariant and `stabilizer` is its full point stabilizer.
PermGroup group_from_stabilizer(ProjectiveLine const &line,
                                std::vector<Perm> const &stabilizer);

/// The Frobenius maps as permutations, sorted.
std::vector<Perm> frobenius_perms(ProjectiveLine const &line);

} // namespace projline

#endif // PROJLINE_SEARCH_HPP
