#include "projline/chains.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace projline
{

namespace
{

constexpr std::uint32_t kNoChain = std::numeric_limits<std::uint32_t>::max();

void require_proper(ProjectiveLine const &line, Subfield const &K)
{
  Field const &F = line.field();
  if (K.size() >= F.q())
    throw std::invalid_argument("K-chains need a proper subfield K");
  // Subfields of a finite field are unique per order, hence Aut-invariant.
  for (Elem e : K.elements)
    if (!K.contains(F.frobenius(e, 1)))
      throw std::logic_error("subfield is not Frobenius-stable");
}

PointSet base_set(ProjectiveLine const &line, Subfield const &K)
{
  PointSet s;
  for (Elem e : K.elements)
    s.push_back(e.v);
  s.push_back(line.infinity_index());
  std::sort(s.begin(), s.end());
  return s;
}

PointSet image_under(ProjectiveLine const &line, SemilinearMap const &m,
                     PointSet const &base)
{
  PointSet out;
  out.reserve(base.size());
  for (auto i : base)
    out.push_back(line.index(line.apply(m, line.point(i))));
  std::sort(out.begin(), out.end());
  return out;
}

ChainSystem sweep(ProjectiveLine const &line, Subfield const &K, unsigned sigmas,
                  std::uint64_t cap)
{
  require_proper(line, K);
  PointSet const base = base_set(line, K);
  std::set<PointSet> seen;
  std::vector<Chain> chains;
  auto const maps = line.all_moebius();
  for (unsigned s = 0; s < sigmas; ++s)
    for (auto const &t : maps) {
      SemilinearMap const m{t, s};
      PointSet pts = image_under(line, m, base);
      if (seen.insert(pts).second) {
        if (seen.size() > cap)
          throw CapExceeded("chain count exceeds cap", seen.size());
        chains.push_back(Chain{std::move(pts), m});
      }
    }
  std::sort(chains.begin(), chains.end(),
            [](Chain const &a, Chain const &b) { return a.points < b.points; });
  return ChainSystem(line, K, std::move(chains));
}

} // namespace

std::size_t ChainSystem::Hash::operator()(PointSet const &s) const noexcept
{
  std::uint64_t h = 1469598103934665603ull;
  for (auto v : s) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

ChainSystem::ChainSystem(ProjectiveLine const &line, Subfield const &K,
                         std::vector<Chain> chains)
: n_(line.size()), K_(K), chains_(std::move(chains))
{
  through_.assign(std::size_t(n_) * n_ * n_, kNoChain);
  incidence_.assign(chains_.size() * n_, false);
  for (std::size_t id = 0; id < chains_.size(); ++id) {
    auto const &pts = chains_[id].points;
    by_points_.emplace(pts, id);
    for (auto p : pts)
      incidence_[id * n_ + p] = true;
    for (auto a : pts)
      for (auto b : pts)
        for (auto c : pts) {
          if (a == b || a == c || b == c)
            continue;
          auto &slot = through_[(std::size_t(a) * n_ + b) * n_ + c];
          if (slot != kNoChain)
            triples_covered_once_ = false;
          slot = static_cast<std::uint32_t>(id);
        }
  }
  for (std::uint32_t a = 0; a < n_; ++a)
    for (std::uint32_t b = 0; b < n_; ++b)
      for (std::uint32_t c = 0; c < n_; ++c)
        if (a != b && a != c && b != c &&
            through_[(std::size_t(a) * n_ + b) * n_ + c] == kNoChain)
          triples_covered_once_ = false;
}

std::optional<std::size_t> ChainSystem::find(PointSet const &pts) const
{
  auto it = by_points_.find(pts);
  if (it == by_points_.end())
    return std::nullopt;
  return it->second;
}

ChainSystem all_chains(ProjectiveLine const &line, Subfield const &K,
                       std::uint64_t cap)
{
  return sweep(line, K, 1, cap);
}

ChainSystem all_chains_semilinear(ProjectiveLine const &line, Subfield const &K,
                                  std::uint64_t cap)
{
  return sweep(line, K, line.field().k(), cap);
}

std::vector<PointSet> projective_affine_lines(ProjectiveLine const &line,
                                              Subfield const &K)
{
  Field const &F = line.field();
  if (K.size() >= F.q())
    throw std::invalid_argument("affine lines need a proper subfield K");
  std::set<PointSet> lines;
  for (std::uint32_t a = 1; a < F.q(); ++a)
    for (std::uint32_t b = 0; b < F.q(); ++b) {
      PointSet s;
      for (Elem k : K.elements)
        s.push_back(F.add(F.mul(Elem{a}, k), Elem{b}).v);
      s.push_back(line.infinity_index());
      std::sort(s.begin(), s.end());
      lines.insert(std::move(s));
    }
  return {lines.begin(), lines.end()};
}

AffineLineCertificate chains_through_infinity_equal_affine_lines(
    ProjectiveLine const &line, ChainSystem const &chains)
{
  std::uint32_t const inf = line.infinity_index();
  std::set<PointSet> through_inf;
  for (auto const &c : chains.chains())
    if (std::binary_search(c.points.begin(), c.points.end(), inf))
      through_inf.insert(c.points);
  auto const lines = projective_affine_lines(line, chains.subfield());
  std::set<PointSet> const line_set(lines.begin(), lines.end());

  AffineLineCertificate cert;
  cert.chains_through_infinity = through_inf.size();
  cert.affine_lines = line_set.size();
  std::set_difference(through_inf.begin(), through_inf.end(), line_set.begin(),
                      line_set.end(), std::back_inserter(cert.only_chains));
  std::set_difference(line_set.begin(), line_set.end(), through_inf.begin(),
                      through_inf.end(), std::back_inserter(cert.only_lines));
  cert.equal = cert.only_chains.empty() && cert.only_lines.empty();
  return cert;
}

PointSet image(Perm const &f, PointSet const &pts)
{
  PointSet out;
  out.reserve(pts.size());
  for (auto p : pts)
    out.push_back(f[p]);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::size_t> chain_violation(Perm const &f, ChainSystem const &chains)
{
  for (std::size_t i = 0; i < chains.size(); ++i)
    if (!chains.find(image(f, chains.chains()[i].points)))
      return i;
  return std::nullopt;
}

} // namespace projline
