#ifndef PROJLINE_PLINE_HPP
#define PROJLINE_PLINE_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <limits>
#include <vector>

#include "projline/gf.hpp"

namespace projline
{

/// A point of P^1(F): a field element or infinity.
class Point
{
public:
  constexpr Point() = default;

  static constexpr Point at(Elem e) { return Point{e.v}; }
  static constexpr Point infinity() { return Point{kInf}; }

  constexpr bool is_infinite() const { return raw_ == kInf; }
  constexpr Elem elem() const { return Elem{raw_}; }

  friend constexpr auto operator<=>(Point, Point) = default;

private:
  static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

  constexpr explicit Point(std::uint32_t raw) : raw_(raw) {}

  std::uint32_t raw_ = 0;
};

/// x -> (ax + b) / (cx + d), stored in canonical form: the first nonzero
/// entry of (a, b, c, d) is 1.
struct Moebius
{
  Elem a, b, c, d;

  friend constexpr auto operator<=>(Moebius const &, Moebius const &) = default;
};

/// x -> t(x^(p^sigma)).
struct SemilinearMap
{
  Moebius t;
  unsigned sigma = 0;

  friend constexpr auto operator<=>(SemilinearMap const &,
                                    SemilinearMap const &) = default;
};

/// P^1(F) with a fixed enumeration: finite points by element index, then
/// infinity at index q.
class ProjectiveLine
{
public:
  explicit ProjectiveLine(Field f) : field_(std::move(f)) {}

  Field const &field() const { return field_; }

  std::uint32_t size() const { return field_.q() + 1; }
  std::uint32_t infinity_index() const { return field_.q(); }

  std::uint32_t index(Point pt) const
  { return pt.is_infinite() ? field_.q() : pt.elem().v; }

  Point point(std::uint32_t idx) const
  { return idx == field_.q() ? Point::infinity() : Point::at(Elem{idx}); }

  std::vector<Point> points() const;

  /// [a,b;c,d] = (c-a)/(c-b) * (d-b)/(d-a). A point at infinity cancels the
  /// two factors that contain it. Throws std::invalid_argument unless the
  /// four points are pairwise distinct.
  Elem cross_ratio(Point a, Point b, Point c, Point d) const;

  /// Same as cross_ratio() on point indices, without the distinctness check.
  Elem cross_ratio_idx(std::uint32_t a, std::uint32_t b, std::uint32_t c,
                       std::uint32_t d) const;

  /// The unique point g with [a,b;c,g] = x. Throws std::invalid_argument for
  /// repeated points or x in {0, 1}.
  Point g_x(Point a, Point b, Point c, Elem x) const;
  std::uint32_t g_x_idx(std::uint32_t a, std::uint32_t b, std::uint32_t c,
                        Elem x) const;

  /// Throws std::invalid_argument when ad - bc = 0.
  Moebius moebius(Elem a, Elem b, Elem c, Elem d) const;
  Moebius identity() const;
  Point apply(Moebius const &t, Point pt) const;
  Moebius compose(Moebius const &outer, Moebius const &inner) const;
  Moebius inverse(Moebius const &t) const;

  /// The unique T with T(src[i]) = dst[i]. Throws std::invalid_argument when
  /// either triple has a repeated point.
  Moebius from_triples(std::array<Point, 3> const &src,
                       std::array<Point, 3> const &dst) const;

  Point apply(SemilinearMap const &s, Point pt) const;

  /// Every element of PGL_2(F) in canonical form, in a fixed order.
  std::vector<Moebius> all_moebius() const;

private:
  Field field_;
};

} // namespace projline

#endif // PROJLINE_PLINE_HPP
