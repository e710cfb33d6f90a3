#ifndef PROJLINE_GF_HPP
#define PROJLINE_GF_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace projline
{

/// An element of GF(p^k), identified by its power-basis coordinates packed
/// as a base-p integer: v = c0 + c1*p + ... + c_{k-1}*p^{k-1}.
///
/// The packing is a bijection onto [0, q), so 0 and 1 keep their evident
/// values and elements order the same way as their coefficient sequences
/// read as base-p integers. Coordinates are recovered with Field::coeffs().
struct Elem
{
  std::uint32_t v = 0;

  friend constexpr auto operator<=>(Elem, Elem) = default;
};

struct Automorphism
{
  unsigned power = 0;  // x -> x^(p^power)
};

/// The subfield of degree `degree` over the prime field, as an explicit set.
struct Subfield
{
  unsigned degree = 1;
  std::vector<Elem> elements;  // sorted
  std::vector<bool> member;    // indexed by Elem::v

  std::size_t size() const { return elements.size(); }
  bool contains(Elem e) const { return e.v < member.size() && member[e.v]; }

  friend bool operator==(const Subfield &a, const Subfield &b)
  { return a.degree == b.degree && a.elements == b.elements; }
};

enum class ArithOp { add, sub, mul, div, neg, inv };

/// Largest field order accepted by Field::make().
inline constexpr std::uint32_t kMaxFieldOrder = 4096;

/// Exact arithmetic in GF(p^k) through precomputed tables.
///
/// The modulus is the smallest monic irreducible polynomial of degree k when
/// coefficient sequences are read as base-p integers (constant term least
/// significant). For k = 1 this is the polynomial x, so every element has a
/// single coordinate and all code paths stay uniform.
///
/// Field is a cheap handle: copies share the same immutable tables, which
/// may be read concurrently.
class Field
{
public:
  /// Throws std::invalid_argument for non-prime p, k < 1 or p^k > 4096.
  static Field make(unsigned p, unsigned k);

  unsigned p() const { return data_->p; }
  unsigned k() const { return data_->k; }
  std::uint32_t q() const { return data_->q; }

  /// Monic modulus, constant term first (length k + 1).
  const std::vector<unsigned> &modulus() const { return data_->modulus; }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }

  /// Image of an integer under Z -> prime field.
  Elem from_int(long long n) const;
  Elem from_coeffs(std::span<const unsigned> coeffs) const;
  std::vector<unsigned> coeffs(Elem e) const;

  Elem add(Elem a, Elem b) const
  {
    if (!data_->add_table.empty())
      return Elem{data_->add_table[a.v * data_->q + b.v]};
    return add_digits(a, b);
  }
  Elem neg(Elem a) const { return Elem{data_->neg_table[a.v]}; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const
  {
    if (a.v == 0 || b.v == 0)
      return Elem{0};
    auto const &d = *data_;
    std::uint32_t s = d.log[a.v] + d.log[b.v];
    if (s >= d.q - 1)
      s -= d.q - 1;
    return Elem{d.antilog[s]};
  }

  /// Throws std::domain_error for zero.
  Elem inv(Elem a) const;
  /// Throws std::domain_error for a zero divisor.
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  /// Unary ops ignore `b`.
  Elem arith(ArithOp op, Elem a, Elem b = Elem{}) const;

  Elem pow(Elem a, std::uint64_t n) const;

  /// a^(p^i) for 0 <= i < k.
  Elem frobenius(Elem a, unsigned i) const
  { return Elem{data_->frob[i % data_->k][a.v]}; }

  std::vector<Automorphism> automorphisms() const;
  Elem apply(Automorphism s, Elem a) const { return frobenius(a, s.power); }

  /// Smallest e >= 1 with a^(p^e) = a.
  unsigned degree_of(Elem a) const;

  /// Throws std::invalid_argument unless d divides k.
  Subfield subfield(unsigned d) const;
  Subfield prime_subfield() const { return subfield(1); }
  Subfield generated_subfield(std::span<const Elem> generators) const;

  /// The multiplicative generator found by exhaustive order testing.
  Elem primitive_element() const { return Elem{data_->antilog[1 % (data_->q - 1)]}; }

  bool is_square_map_bijective() const;

  friend bool operator==(const Field &a, const Field &b)
  { return a.data_ == b.data_ || (a.p() == b.p() && a.k() == b.k()); }

private:
  struct Data
  {
    unsigned p = 0;
    unsigned k = 0;
    std::uint32_t q = 0;
    std::vector<unsigned> modulus;
    std::vector<std::uint32_t> pow_p;  // p^i, i < k
    std::vector<std::uint16_t> add_table;  // q*q, only for small q
    std::vector<std::uint16_t> neg_table;
    std::vector<std::uint16_t> inv_table;
    std::vector<std::uint32_t> log;
    std::vector<std::uint16_t> antilog;
    std::vector<std::vector<std::uint16_t>> frob;
  };

  explicit Field(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

  Elem add_digits(Elem a, Elem b) const;

  std::shared_ptr<const Data> data_;
};

bool is_prime(unsigned n);

/// Polynomials over Z_p, constant term first. These back modulus selection
/// and table construction.
namespace poly
{

std::vector<unsigned> trim(std::vector<unsigned> a);
std::vector<unsigned> mul(std::vector<unsigned> const &a,
                          std::vector<unsigned> const &b, unsigned p);
std::vector<unsigned> mod(std::vector<unsigned> a,
                          std::vector<unsigned> const &m, unsigned p);
bool is_irreducible(std::vector<unsigned> const &f, unsigned p);

/// Smallest monic irreducible of degree k (base-p integer order).
std::vector<unsigned> smallest_irreducible(unsigned p, unsigned k);

} // namespace poly

} // namespace projline

#endif // PROJLINE_GF_HPP
