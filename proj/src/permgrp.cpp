#include "projline/permgrp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

namespace projline
{

Perm::Perm(std::vector<std::uint32_t> table) : table_(std::move(table))
{
  std::vector<bool> seen(table_.size(), false);
  for (auto v : table_) {
    if (v >= table_.size() || seen[v])
      throw std::invalid_argument("permutation table is not a bijection");
    seen[v] = true;
  }
}

Perm Perm::identity(std::uint32_t degree)
{
  std::vector<std::uint32_t> t(degree);
  std::iota(t.begin(), t.end(), 0u);
  return Perm(std::move(t), Unchecked{});
}

bool Perm::is_identity() const
{
  for (std::uint32_t i = 0; i < table_.size(); ++i)
    if (table_[i] != i)
      return false;
  return true;
}

Perm Perm::inverse() const
{
  std::vector<std::uint32_t> t(table_.size());
  for (std::uint32_t i = 0; i < table_.size(); ++i)
    t[table_[i]] = i;
  return Perm(std::move(t), Unchecked{});
}

Perm compose(Perm const &f, Perm const &g)
{
  std::vector<std::uint32_t> t(g.degree());
  for (std::uint32_t i = 0; i < g.degree(); ++i)
    t[i] = f[g[i]];
  return Perm(std::move(t), Perm::Unchecked{});
}

std::size_t PermHash::operator()(Perm const &p) const noexcept
{
  // FNV-1a over the table.
  std::uint64_t h = 1469598103934665603ull;
  for (auto v : p.table()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Perm perm_of(ProjectiveLine const &line, Moebius const &t)
{
  std::vector<std::uint32_t> table(line.size());
  for (std::uint32_t i = 0; i < line.size(); ++i)
    table[i] = line.index(line.apply(t, line.point(i)));
  return Perm(std::move(table));
}

Perm perm_of(ProjectiveLine const &line, SemilinearMap const &s)
{
  std::vector<std::uint32_t> table(line.size());
  for (std::uint32_t i = 0; i < line.size(); ++i)
    table[i] = line.index(line.apply(s, line.point(i)));
  return Perm(std::move(table));
}

Perm frobenius_perm(ProjectiveLine const &line, unsigned i)
{
  return perm_of(line, SemilinearMap{line.identity(), i});
}

PermGroup::PermGroup(std::uint32_t degree, std::vector<Perm> elements,
                     std::vector<Perm> generators)
: degree_(degree), elements_(std::move(elements)), generators_(std::move(generators))
{
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool PermGroup::contains(Perm const &p) const
{
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermGroup::is_closed_under(std::vector<Perm> const &gens) const
{
  if (!contains(Perm::identity(degree_)))
    return false;
  for (auto const &g : elements_)
    for (auto const &s : gens)
      if (!contains(compose(g, s)))
        return false;
  return true;
}

namespace
{

void check_line_size(ProjectiveLine const &line, unsigned k)
{
  std::uint64_t const n = line.size();
  if (n > kMaxGroupLineSize || k * n * n * n > kMaxGroupEntries)
    throw CapExceeded("projective line too large to materialize PGL_2", 0);
}

} // namespace

std::vector<Perm> pgl2_generators(ProjectiveLine const &line)
{
  Field const &F = line.field();
  std::vector<Perm> gens;
  std::uint32_t basis = 1;
  for (unsigned i = 0; i < F.k(); ++i, basis *= F.p())
    gens.push_back(perm_of(line, line.moebius(F.one(), Elem{basis}, F.zero(), F.one())));
  if (F.q() > 2)
    gens.push_back(perm_of(line, line.moebius(F.primitive_element(), F.zero(),
                                              F.zero(), F.one())));
  gens.push_back(perm_of(line, line.moebius(F.zero(), F.one(), F.one(), F.zero())));
  return gens;
}

std::vector<Perm> pgammal2_generators(ProjectiveLine const &line)
{
  auto gens = pgl2_generators(line);
  if (line.field().k() > 1)
    gens.push_back(frobenius_perm(line, 1));
  return gens;
}

PermGroup pgl2_group(ProjectiveLine const &line)
{
  check_line_size(line, 1);
  std::vector<Perm> elems;
  for (auto const &t : line.all_moebius())
    elems.push_back(perm_of(line, t));
  return PermGroup(line.size(), std::move(elems), pgl2_generators(line));
}

PermGroup pgammal2_group(ProjectiveLine const &line)
{
  Field const &F = line.field();
  check_line_size(line, F.k());
  auto const moebius = line.all_moebius();
  std::vector<Perm> elems;
  elems.reserve(moebius.size() * F.k());
  for (unsigned s = 0; s < F.k(); ++s)
    for (auto const &t : moebius)
      elems.push_back(perm_of(line, SemilinearMap{t, s}));
  return PermGroup(line.size(), std::move(elems), pgammal2_generators(line));
}

PermGroup closure(std::uint32_t degree, std::vector<Perm> const &gens,
                  std::uint64_t cap)
{
  for (auto const &g : gens)
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree mismatch");
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> frontier{Perm::identity(degree)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (auto const &x : frontier)
      for (auto const &g : gens) {
        Perm y = compose(x, g);
        if (seen.insert(y).second) {
          if (seen.size() > cap)
            throw CapExceeded("closure exceeded element cap", seen.size());
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  return PermGroup(degree, std::vector<Perm>(seen.begin(), seen.end()), gens);
}

namespace
{

class UnionFind
{
public:
  explicit UnionFind(std::size_t n) : parent_(n)
  { std::iota(parent_.begin(), parent_.end(), 0u); }

  std::uint32_t find(std::uint32_t x)
  {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b)
  {
    a = find(a);
    b = find(b);
    if (a != b)
      parent_[std::max(a, b)] = std::min(a, b);
  }

private:
  std::vector<std::uint32_t> parent_;
};

std::uint64_t ipow(std::uint64_t b, unsigned e)
{
  std::uint64_t r = 1;
  while (e--)
    r *= b;
  return r;
}

bool distinct_tuple(std::uint32_t code, std::uint32_t n, unsigned t,
                    std::uint32_t *digits)
{
  for (unsigned i = t; i-- > 0;) {
    digits[i] = code % n;
    code /= n;
  }
  for (unsigned i = 0; i < t; ++i)
    for (unsigned j = i + 1; j < t; ++j)
      if (digits[i] == digits[j])
        return false;
  return true;
}

// Union-find of distinct t-tuples under the group's action set.
UnionFind tuple_orbits(ProjectiveLine const &line, PermGroup const &g,
                       unsigned t, std::uint64_t cap)
{
  std::uint32_t const n = line.size();
  std::uint64_t const space = ipow(n, t);
  if (space > cap)
    throw CapExceeded("tuple space exceeds cap", 0);
  UnionFind uf(space);
  std::uint32_t digits[4];
  for (std::uint32_t code = 0; code < space; ++code) {
    if (!distinct_tuple(code, n, t, digits))
      continue;
    for (auto const &s : g.action_set()) {
      std::uint32_t img = 0;
      for (unsigned i = 0; i < t; ++i)
        img = img * n + s[digits[i]];
      uf.unite(code, img);
    }
  }
  return uf;
}

} // namespace

std::size_t OrbitPartition::total() const
{
  std::size_t s = 0;
  for (auto const &c : classes)
    s += c.size();
  return s;
}

OrbitPartition quadruple_orbits(ProjectiveLine const &line, PermGroup const &g,
                                std::uint64_t cap)
{
  std::uint32_t const n = line.size();
  if (n < 4)
    return {};
  UnionFind uf = tuple_orbits(line, g, 4, cap);
  std::map<std::uint32_t, std::size_t> root_to_class;
  OrbitPartition part;
  std::uint32_t d[4];
  std::uint64_t const space = ipow(n, 4);
  for (std::uint32_t code = 0; code < space; ++code) {
    if (!distinct_tuple(code, n, 4, d))
      continue;
    auto [it, fresh] = root_to_class.try_emplace(uf.find(code), part.classes.size());
    if (fresh)
      part.classes.emplace_back();
    auto &cls = part.classes[it->second];
    cls.members.push_back(Quad{d[0], d[1], d[2], d[3]});
    cls.cross_ratios.push_back(line.cross_ratio_idx(d[0], d[1], d[2], d[3]));
  }
  // Codes increase lexicographically, so members are already sorted and
  // classes are ordered by representative.
  for (auto &cls : part.classes) {
    auto &cr = cls.cross_ratios;
    std::sort(cr.begin(), cr.end());
    cr.erase(std::unique(cr.begin(), cr.end()), cr.end());
  }
  return part;
}

std::vector<std::vector<Elem>> galois_orbits(Field const &field)
{
  std::vector<bool> done(field.q(), false);
  std::vector<std::vector<Elem>> out;
  for (std::uint32_t v = 2; v < field.q(); ++v) {
    if (done[v])
      continue;
    std::vector<Elem> orb;
    for (unsigned i = 0; i < field.k(); ++i) {
      Elem const e = field.frobenius(Elem{v}, i);
      if (!done[e.v]) {
        done[e.v] = true;
        orb.push_back(e);
      }
    }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

bool matches_galois_orbits(Field const &field, OrbitPartition const &part)
{
  auto orbits = galois_orbits(field);
  std::vector<std::vector<Elem>> labels;
  for (auto const &c : part.classes)
    labels.push_back(c.cross_ratios);
  std::sort(labels.begin(), labels.end());
  std::sort(orbits.begin(), orbits.end());
  return labels == orbits;
}

std::size_t tuple_orbit_count(ProjectiveLine const &line, PermGroup const &g,
                              unsigned t, std::uint64_t cap)
{
  if (t == 0 || t > 4)
    throw std::invalid_argument("tuple length must be in 1..4");
  std::uint32_t const n = line.size();
  if (t > n)
    return 0;
  UnionFind uf = tuple_orbits(line, g, t, cap);
  std::uint64_t const space = ipow(n, t);
  std::size_t count = 0;
  std::uint32_t d[4];
  for (std::uint32_t code = 0; code < space; ++code)
    if (distinct_tuple(code, n, t, d) && uf.find(code) == code)
      ++count;
  return count;
}

unsigned transitivity_degree(ProjectiveLine const &line, PermGroup const &g,
                             unsigned max_k, std::uint64_t cap)
{
  if (max_k > 4)
    throw std::invalid_argument("transitivity degree is capped at 4");
  for (unsigned t = 1; t <= max_k; ++t)
    if (tuple_orbit_count(line, g, t, cap) != 1)
      return t - 1;
  return max_k;
}

} // namespace projline
