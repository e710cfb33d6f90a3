#ifndef PROJLINE_CHAINS_HPP
#define PROJLINE_CHAINS_HPP

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "projline/permgrp.hpp"

namespace projline
{

using PointSet = std::vector<std::uint32_t>;  // sorted point indices

/// A K-chain: an image of K u {inf} under PGammaL_2(F).
struct Chain
{
  PointSet points;
  SemilinearMap provenance;  // first map in sweep order producing it
};

/// The K-chains of P^1(F) for a proper subfield K, with lookups by point set
/// and by triple of points.
class ChainSystem
{
public:
  ChainSystem(ProjectiveLine const &line, Subfield const &K,
              std::vector<Chain> chains);

  Subfield const &subfield() const { return K_; }
  std::vector<Chain> const &chains() const { return chains_; }
  std::size_t size() const { return chains_.size(); }

  std::optional<std::size_t> find(PointSet const &pts) const;

  /// Index of the unique chain through three distinct points.
  std::size_t through(std::uint32_t a, std::uint32_t b, std::uint32_t c) const
  { return through_[(std::size_t(a) * n_ + b) * n_ + c]; }

  bool on_chain(std::size_t chain, std::uint32_t pt) const
  { return incidence_[chain * n_ + pt]; }

  /// Every triple of distinct points lies on exactly one chain.
  bool triples_covered_once() const { return triples_covered_once_; }

private:
  struct Hash
  {
    std::size_t operator()(PointSet const &s) const noexcept;
  };

  std::uint32_t n_ = 0;
  Subfield K_;
  std::vector<Chain> chains_;
  std::unordered_map<PointSet, std::size_t, Hash> by_points_;
  std::vector<std::uint32_t> through_;
  std::vector<bool> incidence_;
  bool triples_covered_once_ = true;
};

inline constexpr std::uint64_t kDefaultChainCap = 1'000'000;

/// Deduplicated images T(K u {inf}) over T in PGL_2(F). Throws
/// std::invalid_argument when K = F and CapExceeded above `cap` chains.
ChainSystem all_chains(ProjectiveLine const &line, Subfield const &K,
                       std::uint64_t cap = kDefaultChainCap);

/// Same sweep over all of PGammaL_2(F).
ChainSystem all_chains_semilinear(ProjectiveLine const &line, Subfield const &K,
                                  std::uint64_t cap = kDefaultChainCap);

/// All sets (aK + b) u {inf}, a != 0, sorted and deduplicated. Throws
/// std::invalid_argument when K = F.
std::vector<PointSet> projective_affine_lines(ProjectiveLine const &line,
                                              Subfield const &K);

struct AffineLineCertificate
{
  bool equal = false;
  std::size_t chains_through_infinity = 0;
  std::size_t affine_lines = 0;
  std::vector<PointSet> only_chains;  // chains through inf not affine lines
  std::vector<PointSet> only_lines;   // affine lines that are not chains
};

AffineLineCertificate chains_through_infinity_equal_affine_lines(
    ProjectiveLine const &line, ChainSystem const &chains);

/// Sorted image of a point set.
PointSet image(Perm const &f, PointSet const &pts);

/// Index of the first chain whose image is not a chain, if any.
std::optional<std::size_t> chain_violation(Perm const &f, ChainSystem const &chains);

inline bool is_chain_preserving(Perm const &f, ChainSystem const &chains)
{ return !chain_violation(f, chains).has_value(); }

} // namespace projline

#endif // PROJLINE_CHAINS_HPP
