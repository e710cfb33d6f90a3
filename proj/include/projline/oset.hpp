#ifndef PROJLINE_OSET_HPP
#define PROJLINE_OSET_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "projline/permgrp.hpp"

namespace projline
{

/// Which side conditions of the O-preservation classification hold.
struct Hypotheses
{
  bool nonempty = false;
  bool aut_invariant = false;
  bool proper_subfield = false;  // K = k(O) is a proper subfield of F
  bool char2_conditions = true;  // char 2 => F perfect and |F| > 4

  bool hold() const
  { return nonempty && aut_invariant && proper_subfield && char2_conditions; }

  std::vector<std::string> violations() const;
};

/// A nonempty set O of field elements outside {0, 1}, with derived flags.
class OSet
{
public:
  /// Throws std::invalid_argument if `values` is empty or meets {0, 1}.
  static OSet make(Field const &field, std::vector<Elem> values);

  /// The subfield of degree d minus {0, 1}.
  static OSet subfield_minus_01(Field const &field, unsigned d);
  static OSet galois_orbit_of(Field const &field, Elem e);
  /// {-1}; throws std::invalid_argument in characteristic 2.
  static OSet neg_one(Field const &field);

  Field const &field() const { return field_; }
  std::vector<Elem> const &values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  bool contains(Elem e) const { return member_[e.v]; }
  std::vector<bool> const &membership() const { return member_; }

  bool aut_invariant() const { return aut_invariant_; }
  bool sqrt_closed() const { return sqrt_closed_; }
  Subfield const &generated() const { return K_; }
  bool proper() const { return K_.size() < field_.q(); }

  Hypotheses hypotheses() const;

private:
  explicit OSet(Field f) : field_(std::move(f)) {}

  Field field_;
  std::vector<Elem> values_;
  std::vector<bool> member_;
  bool aut_invariant_ = false;
  bool sqrt_closed_ = false;
  Subfield K_;
};

/// Forward-only O-preservation test against a precomputed table of the
/// quadruples whose cross-ratio lies in O.
///
/// On a finite line a permutation induces a bijection on ordered distinct
/// quadruples, so mapping the O-quadruples into themselves already forces
/// equality; the forward check is therefore equivalent to the two-sided one.
class OPreservationChecker
{
public:
  OPreservationChecker(ProjectiveLine const &line, OSet const &O);

  bool preserves(Perm const &f) const { return !witness(f).has_value(); }

  /// First O-quadruple (in enumeration order) whose image leaves O.
  std::optional<Quad> witness(Perm const &f) const;

  std::size_t o_quad_count() const { return o_quads_.size() / 4; }

private:
  bool member(std::uint32_t a, std::uint32_t b, std::uint32_t c,
              std::uint32_t d) const;

  ProjectiveLine line_;
  std::vector<bool> in_o_;
  std::uint32_t n_ = 0;
  std::vector<std::uint64_t> bits_;  // n^4 membership bits, empty when too large
  std::vector<std::uint32_t> o_quads_;  // flattened
};

bool is_o_preserving(ProjectiveLine const &line, OSet const &O, Perm const &f);

/// The definition read literally: membership equivalence on every ordered
/// distinct quadruple, evaluated with fresh cross-ratios. Returns the first
/// failing quadruple.
std::optional<Quad> two_sided_violation(ProjectiveLine const &line, OSet const &O,
                                        Perm const &f);

} // namespace projline

#endif // PROJLINE_OSET_HPP
