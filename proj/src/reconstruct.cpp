#include "projline/reconstruct.hpp"

#include <algorithm>

namespace projline
{

std::string to_string(CorrectionKind k)
{
  switch (k) {
  case CorrectionKind::tau: return "tau";
  case CorrectionKind::rho: return "rho";
  case CorrectionKind::chi: return "chi";
  case CorrectionKind::alpha: return "alpha";
  case CorrectionKind::beta: return "beta";
  }
  return "?";
}

std::string to_string(HuaVariant v)
{
  return v == HuaVariant::A ? "A" : "B";
}

Moebius correction_moebius(ProjectiveLine const &line, CorrectionKind kind,
                           Elem a, Elem b)
{
  Field const &F = line.field();
  Elem const one = F.one(), zero = F.zero();
  Elem const amb = F.sub(a, b), ab = F.mul(a, b);
  switch (kind) {
  case CorrectionKind::tau:  // ax + b(1-x)
    return line.moebius(amb, b, zero, one);
  case CorrectionKind::rho:  // (a - (1-x)b) / x
    return line.moebius(b, amb, one, zero);
  case CorrectionKind::chi:  // (a - xb) / (1-x)
    return line.moebius(F.neg(b), a, F.neg(one), one);
  case CorrectionKind::alpha:  // (abx - bx - ab + a) / (ax - x - b + 1)
    return line.moebius(F.sub(ab, b), F.sub(a, ab), F.sub(a, one), F.sub(one, b));
  case CorrectionKind::beta:  // (a - b - abx + bx) / (a - b - ax + x)
    return line.moebius(F.sub(b, ab), amb, F.sub(one, a), amb);
  }
  throw std::invalid_argument("unknown correction kind");
}

Elem CorrectionPerm::operator()(Elem x) const
{
  auto it = std::lower_bound(table.begin(), table.end(), x,
                             [](auto const &e, Elem v) { return e.first < v; });
  if (it == table.end() || it->first != x)
    throw std::out_of_range("element outside O");
  return it->second;
}

CorrectionPerm correction_perm(ProjectiveLine const &line, CorrectionKind kind,
                               Elem a, Elem b, Perm const &f, OSet const &O)
{
  Field const &F = line.field();
  if (a == b)
    throw std::invalid_argument("correction permutations need a != b");
  bool const needs_not_one = kind == CorrectionKind::alpha || kind == CorrectionKind::beta;
  if (needs_not_one && (a == F.one() || b == F.one()))
    throw std::invalid_argument(to_string(kind) + " needs a, b != 1");
  std::uint32_t const inf = line.infinity_index();
  if (f[inf] != inf)
    throw std::invalid_argument("f must fix infinity");
  if (needs_not_one && f[F.one().v] != F.one().v)
    throw std::invalid_argument(to_string(kind) + " needs f to fix 1");

  Moebius const src = correction_moebius(line, kind, a, b);
  Moebius const dst = correction_moebius(line, kind, Elem{f[a.v]}, Elem{f[b.v]});
  Moebius const dst_inv = line.inverse(dst);

  CorrectionPerm out{kind, a, b, {}};
  std::vector<bool> used(F.q(), false);
  for (Elem x : O.values()) {
    Point const arg = line.apply(src, Point::at(x));
    Point const image = line.point(f[line.index(arg)]);
    Point const y = line.apply(dst_inv, image);
    if (y.is_infinite() || !O.contains(y.elem()))
      throw NotOPreserving(to_string(kind) + " equation has no solution in O", x);
    if (line.apply(dst, y) != image)
      throw std::logic_error("correction solve failed to verify");
    if (used[y.elem().v])
      throw NotOPreserving(to_string(kind) + " is not injective on O", x);
    used[y.elem().v] = true;
    out.table.emplace_back(x, y.elem());
  }
  return out;
}

Restriction restrict_to_o(ProjectiveLine const &line, Perm const &f, OSet const &O)
{
  Restriction r;
  for (Elem x : O.values()) {
    Point const y = line.point(f[x.v]);
    if (y.is_infinite() || !O.contains(y.elem())) {
      if (!r.escaping)
        r.escaping = x;
      continue;
    }
    r.map.emplace_back(x, y.elem());
  }
  // Injective on a finite set, so onto once nothing escapes.
  r.is_permutation = !r.escaping.has_value();
  return r;
}

ClosureReport closure_check(ProjectiveLine const &line, Perm const &f, OSet const &O)
{
  Field const &F = line.field();
  Subfield const &K = O.generated();
  std::uint32_t const inf = line.infinity_index();
  std::vector<bool> in_fk(F.q(), false);
  for (Elem a : K.elements)
    if (f[a.v] != inf)
      in_fk[f[a.v]] = true;

  ClosureReport rep;
  auto check = [&](char const *family, Elem value, Elem a, Elem b, Elem x) {
    ++rep.checked;
    if (!in_fk[value.v])
      rep.violations.push_back({family, a, b, x});
  };
  Elem const one = F.one();
  for (Elem a : K.elements) {
    if (f[a.v] == inf) {
      rep.violations.push_back({"finite image", a, a, a});
      continue;
    }
    Elem const fa{f[a.v]};
    for (Elem x : O.values()) {
      for (Elem b : K.elements) {
        if (f[b.v] == inf)
          continue;
        Elem const fb{f[b.v]};
        check("f(a)+(1-x)f(b)", F.add(fa, F.mul(F.sub(one, x), fb)), a, b, x);
        check("xf(a)+f(b)", F.add(F.mul(x, fa), fb), a, b, x);
      }
      if (a == F.zero())
        continue;
      if (fa == F.zero()) {
        rep.violations.push_back({"f(a) != 0", a, a, x});
        continue;
      }
      Elem const fax = F.mul(fa, x);
      check("-f(a)^2x+f(a)x+f(a)",
            F.add(F.add(F.neg(F.mul(fa, fax)), fax), fa), a, a, x);
      check("1+x-x/f(a)", F.sub(F.add(one, x), F.div(x, fa)), a, a, x);
    }
  }
  return rep;
}

bool image_of_k(ProjectiveLine const &line, Perm const &f, OSet const &O)
{
  Subfield const &K = O.generated();
  for (Elem a : K.elements) {
    std::uint32_t const img = f[a.v];
    if (img == line.infinity_index() || !K.contains(Elem{img}))
      return false;
  }
  return true;
}

Elem hua(Field const &F, Elem a, Elem b, HuaVariant variant)
{
  if (a == F.zero())
    throw std::domain_error("a vanishes");
  if (b == F.zero())
    throw std::domain_error("b vanishes");
  Elem const b_inv2 = F.inv(F.mul(b, b));
  Elem const a_inv = F.inv(a);
  Elem const inner = variant == HuaVariant::A ? F.sub(b_inv2, a) : F.sub(b_inv2, a_inv);
  if (inner == F.zero())
    throw std::domain_error(variant == HuaVariant::A ? "b^-2 - a vanishes"
                                                     : "b^-2 - a^-1 vanishes");
  Elem const sum = F.add(a_inv, F.inv(inner));
  if (sum == F.zero())
    throw std::domain_error("a^-1 + (inner)^-1 vanishes");
  return F.sub(a, F.inv(sum));
}

HuaScan hua_scan(Field const &F, HuaVariant variant, std::size_t max_counterexamples)
{
  HuaScan scan;
  scan.variant = variant;
  for (std::uint32_t av = 1; av < F.q(); ++av)
    for (std::uint32_t bv = 1; bv < F.q(); ++bv) {
      Elem const a{av}, b{bv};
      Elem value;
      try {
        value = hua(F, a, b, variant);
      } catch (std::domain_error const &) {
        ++scan.excluded;
        continue;
      }
      ++scan.valid;
      Elem const ab = F.mul(a, b);
      if (value == F.mul(ab, ab))
        ++scan.equal;
      else if (scan.counterexamples.size() < max_counterexamples)
        scan.counterexamples.emplace_back(a, b);
    }
  return scan;
}

Classification classify_automorphism(ProjectiveLine const &line, Perm const &f)
{
  Field const &F = line.field();
  std::uint32_t const q = F.q();
  Classification c;
  if (f[0] != 0 || f[1] != 1 || f[q] != q) {
    c.violated = "f fixes 0, 1, inf";
    return c;
  }
  auto g = [&](Elem a) { return Elem{f[a.v]}; };
  auto fail = [&](char const *eq, std::vector<Elem> w) {
    c.violated = eq;
    c.witness = std::move(w);
    return c;
  };

  for (std::uint32_t av = 0; av < q; ++av)
    for (std::uint32_t bv = 0; bv < q; ++bv) {
      Elem const a{av}, b{bv};
      if (g(F.add(a, b)) != F.add(g(a), g(b)))
        return fail("f(a+b) = f(a)+f(b)", {a, b});
    }
  for (std::uint32_t av = 1; av < q; ++av) {
    Elem const a{av};
    if (F.mul(g(a), g(F.inv(a))) != F.one())
      return fail("f(a)f(1/a) = 1", {a});
    if (g(F.mul(a, a)) != F.mul(g(a), g(a)))
      return fail("f(a^2) = f(a)^2", {a});
  }
  bool const char2 = F.p() == 2;
  for (std::uint32_t av = 0; av < q; ++av)
    for (std::uint32_t bv = 0; bv < q; ++bv) {
      Elem const a{av}, b{bv};
      Elem const lhs = g(F.mul(a, b));
      Elem const rhs = F.mul(g(a), g(b));
      if (char2) {
        if (F.mul(lhs, lhs) != F.mul(rhs, rhs))
          return fail("f(ab)^2 = (f(a)f(b))^2", {a, b});
      } else if (lhs != rhs) {
        return fail("f(ab) = f(a)f(b)", {a, b});
      }
    }
  if (char2 && !F.is_square_map_bijective())
    return fail("squaring is injective", {});

  for (unsigned i = 0; i < F.k(); ++i) {
    bool match = true;
    for (std::uint32_t av = 0; av < q && match; ++av)
      match = g(Elem{av}) == F.frobenius(Elem{av}, i);
    if (match) {
      c.automorphism = i;
      return c;
    }
  }
  return fail("f is a Frobenius power", {});
}

} // namespace projline
