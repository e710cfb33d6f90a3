#ifndef PROJLINE_PERMGRP_HPP
#define PROJLINE_PERMGRP_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "projline/pline.hpp"

namespace projline
{

/// A permutation of the points of P^1(F), as an image table over the line's
/// point enumeration.
class Perm
{
public:
  Perm() = default;
  /// Throws std::invalid_argument unless `table` is a bijection of [0, n).
  explicit Perm(std::vector<std::uint32_t> table);

  static Perm identity(std::uint32_t degree);

  std::uint32_t degree() const { return static_cast<std::uint32_t>(table_.size()); }
  std::uint32_t operator[](std::uint32_t i) const { return table_[i]; }
  std::vector<std::uint32_t> const &table() const { return table_; }

  bool is_identity() const;
  Perm inverse() const;

  friend auto operator<=>(Perm const &, Perm const &) = default;

private:
  struct Unchecked {};
  Perm(std::vector<std::uint32_t> table, Unchecked) : table_(std::move(table)) {}
  friend Perm compose(Perm const &, Perm const &);

  std::vector<std::uint32_t> table_;
};

/// (f o g)(x) = f(g(x)).
Perm compose(Perm const &f, Perm const &g);

struct PermHash
{
  std::size_t operator()(Perm const &p) const noexcept;
};

Perm perm_of(ProjectiveLine const &line, Moebius const &t);
Perm perm_of(ProjectiveLine const &line, SemilinearMap const &s);
/// x -> x^(p^i) on finite points, infinity fixed.
Perm frobenius_perm(ProjectiveLine const &line, unsigned i);

/// Raised when an enumeration would exceed its element cap. Carries the
/// number of elements reached before giving up.
class CapExceeded : public std::runtime_error
{
public:
  CapExceeded(std::string const &what, std::uint64_t reached)
  : std::runtime_error(what), reached_(reached)
  {}

  std::uint64_t reached() const { return reached_; }

private:
  std::uint64_t reached_;
};

/// A finite permutation group stored as its sorted element list.
class PermGroup
{
public:
  PermGroup() = default;
  /// `elements` must already be closed under composition and inversion.
  PermGroup(std::uint32_t degree, std::vector<Perm> elements,
            std::vector<Perm> generators = {});

  std::uint32_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  std::vector<Perm> const &elements() const { return elements_; }
  std::vector<Perm> const &generators() const { return generators_; }

  bool contains(Perm const &p) const;

  /// Generators if known, otherwise every element.
  std::vector<Perm> const &action_set() const
  { return generators_.empty() ? elements_ : generators_; }

  /// Checks G*s in G for every s in `gens` (with identity in G this makes
  /// G the group generated by G and gens).
  bool is_closed_under(std::vector<Perm> const &gens) const;

  friend bool operator==(PermGroup const &a, PermGroup const &b)
  { return a.degree_ == b.degree_ && a.elements_ == b.elements_; }

private:
  std::uint32_t degree_ = 0;
  std::vector<Perm> elements_;
  std::vector<Perm> generators_;
};

inline constexpr std::uint64_t kDefaultClosureCap = 10'000'000;
inline constexpr std::uint32_t kMaxGroupLineSize = 4097;
/// Bound on order * degree for materialized groups (about 512 MiB of tables).
inline constexpr std::uint64_t kMaxGroupEntries = std::uint64_t(1) << 27;

/// Translations by the basis elements, scaling by the primitive element and
/// x -> 1/x.
std::vector<Perm> pgl2_generators(ProjectiveLine const &line);
/// pgl2_generators() plus the Frobenius map when k > 1.
std::vector<Perm> pgammal2_generators(ProjectiveLine const &line);

/// Throws CapExceeded if the line has more than 4097 points or the element
/// tables would exceed kMaxGroupEntries.
PermGroup pgl2_group(ProjectiveLine const &line);
PermGroup pgammal2_group(ProjectiveLine const &line);

/// Breadth-first closure of `gens` under composition.
PermGroup closure(std::uint32_t degree, std::vector<Perm> const &gens,
                  std::uint64_t cap = kDefaultClosureCap);

using Quad = std::array<std::uint32_t, 4>;

struct OrbitClass
{
  std::vector<Quad> members;     // sorted
  std::vector<Elem> cross_ratios;  // sorted set of values over members
  Quad representative() const { return members.front(); }
  std::size_t size() const { return members.size(); }
};

/// Orbits on ordered quadruples of distinct points, sorted by representative.
struct OrbitPartition
{
  std::vector<OrbitClass> classes;

  std::size_t total() const;
};

inline constexpr std::uint64_t kDefaultTupleCap = std::uint64_t(1) << 25;

/// Throws CapExceeded when (q+1)^4 exceeds `cap`.
OrbitPartition quadruple_orbits(ProjectiveLine const &line, PermGroup const &g,
                                std::uint64_t cap = kDefaultTupleCap);

/// Orbits of Aut(F) on F \ {0, 1}, each sorted, ordered by smallest element.
std::vector<std::vector<Elem>> galois_orbits(Field const &field);

/// True when the classes are exactly {quadruples with cross-ratio in O_i}
/// for the Galois orbits O_i.
bool matches_galois_orbits(Field const &field, OrbitPartition const &part);

/// Number of orbits on ordered distinct t-tuples.
std::size_t tuple_orbit_count(ProjectiveLine const &line, PermGroup const &g,
                              unsigned t, std::uint64_t cap = kDefaultTupleCap);

/// Largest t <= max_k (max_k <= 4) with one orbit on distinct t-tuples.
unsigned transitivity_degree(ProjectiveLine const &line, PermGroup const &g,
                             unsigned max_k, std::uint64_t cap = kDefaultTupleCap);

} // namespace projline

#endif // PROJLINE_PERMGRP_HPP
