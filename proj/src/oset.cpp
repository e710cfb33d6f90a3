#include "projline/oset.hpp"

#include <algorithm>
#include <stdexcept>

namespace projline
{

std::vector<std::string> Hypotheses::violations() const
{
  std::vector<std::string> out;
  if (!nonempty)
    out.emplace_back("O is empty");
  if (!aut_invariant)
    out.emplace_back("O is not Aut(F)-invariant");
  if (!proper_subfield)
    out.emplace_back("k(O) is all of F");
  if (!char2_conditions)
    out.emplace_back("characteristic 2 requires a perfect field with more than 4 elements");
  return out;
}

OSet OSet::make(Field const &field, std::vector<Elem> values)
{
  if (values.empty())
    throw std::invalid_argument("O must be nonempty");
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  OSet o(field);
  o.member_.assign(field.q(), false);
  for (Elem e : values) {
    if (e.v >= field.q())
      throw std::invalid_argument("O contains an element outside the field");
    if (e == field.zero() || e == field.one())
      throw std::invalid_argument("O must avoid 0 and 1");
    o.member_[e.v] = true;
  }
  o.values_ = std::move(values);

  o.aut_invariant_ = std::all_of(o.values_.begin(), o.values_.end(), [&](Elem e) {
    return o.member_[field.frobenius(e, 1).v];
  });

  // Every square root of every element of O lies in O.
  o.sqrt_closed_ = true;
  for (std::uint32_t v = 0; v < field.q(); ++v) {
    Elem const sq = field.mul(Elem{v}, Elem{v});
    if (o.member_[sq.v] && !o.member_[v])
      o.sqrt_closed_ = false;
  }
  if (field.p() == 2 && o.aut_invariant_ && !o.sqrt_closed_)
    throw std::logic_error("Aut-invariant O in characteristic 2 must be sqrt-closed");

  o.K_ = field.generated_subfield(o.values_);
  return o;
}

OSet OSet::subfield_minus_01(Field const &field, unsigned d)
{
  auto const K = field.subfield(d);
  std::vector<Elem> vals;
  for (Elem e : K.elements)
    if (e != field.zero() && e != field.one())
      vals.push_back(e);
  return make(field, std::move(vals));
}

OSet OSet::galois_orbit_of(Field const &field, Elem e)
{
  std::vector<Elem> vals;
  for (unsigned i = 0; i < field.k(); ++i)
    vals.push_back(field.frobenius(e, i));
  return make(field, std::move(vals));
}

OSet OSet::neg_one(Field const &field)
{
  if (field.p() == 2)
    throw std::invalid_argument("-1 = 1 in characteristic 2");
  return make(field, {field.neg(field.one())});
}

Hypotheses OSet::hypotheses() const
{
  Hypotheses h;
  h.nonempty = !values_.empty();
  h.aut_invariant = aut_invariant_;
  h.proper_subfield = proper();
  if (field_.p() == 2)
    h.char2_conditions = field_.is_square_map_bijective() && field_.q() > 4;
  return h;
}

namespace
{

constexpr std::uint64_t kMaxMembershipBits = std::uint64_t(1) << 28;

} // namespace

OPreservationChecker::OPreservationChecker(ProjectiveLine const &line, OSet const &O)
: line_(line), in_o_(O.membership()), n_(line.size())
{
  std::uint64_t const n = n_;
  bool const tabulate = n * n * n * n <= kMaxMembershipBits;
  if (tabulate)
    bits_.assign((n * n * n * n + 63) / 64, 0);
  for (std::uint32_t a = 0; a < n_; ++a)
    for (std::uint32_t b = 0; b < n_; ++b) {
      if (b == a)
        continue;
      for (std::uint32_t c = 0; c < n_; ++c) {
        if (c == a || c == b)
          continue;
        for (Elem x : O.values()) {
          std::uint32_t const d = line.g_x_idx(a, b, c, x);
          o_quads_.insert(o_quads_.end(), {a, b, c, d});
          if (tabulate) {
            std::uint64_t const code = ((a * n + b) * n + c) * n + d;
            bits_[code >> 6] |= std::uint64_t(1) << (code & 63);
          }
        }
      }
    }
}

bool OPreservationChecker::member(std::uint32_t a, std::uint32_t b,
                                  std::uint32_t c, std::uint32_t d) const
{
  if (!bits_.empty()) {
    std::uint64_t const n = n_;
    std::uint64_t const code = ((a * n + b) * n + c) * n + d;
    return (bits_[code >> 6] >> (code & 63)) & 1;
  }
  return in_o_[line_.cross_ratio_idx(a, b, c, d).v];
}

std::optional<Quad> OPreservationChecker::witness(Perm const &f) const
{
  for (std::size_t i = 0; i < o_quads_.size(); i += 4) {
    std::uint32_t const *q = &o_quads_[i];
    if (!member(f[q[0]], f[q[1]], f[q[2]], f[q[3]]))
      return Quad{q[0], q[1], q[2], q[3]};
  }
  return std::nullopt;
}

bool is_o_preserving(ProjectiveLine const &line, OSet const &O, Perm const &f)
{
  return OPreservationChecker(line, O).preserves(f);
}

std::optional<Quad> two_sided_violation(ProjectiveLine const &line, OSet const &O,
                                        Perm const &f)
{
  auto const pts = line.points();
  std::uint32_t const n = line.size();
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        for (std::uint32_t d = 0; d < n; ++d) {
          if (a == b || a == c || a == d || b == c || b == d || c == d)
            continue;
          bool const before =
              O.contains(line.cross_ratio(pts[a], pts[b], pts[c], pts[d]));
          bool const after = O.contains(
              line.cross_ratio(pts[f[a]], pts[f[b]], pts[f[c]], pts[f[d]]));
          if (before != after)
            return Quad{a, b, c, d};
        }
  return std::nullopt;
}

} // namespace projline
