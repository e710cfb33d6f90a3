#include "projline/pline.hpp"

#include <stdexcept>

namespace projline
{

namespace
{

bool all_distinct(std::uint32_t a, std::uint32_t b, std::uint32_t c)
{
  return a != b && a != c && b != c;
}

} // namespace

std::vector<Point> ProjectiveLine::points() const
{
  std::vector<Point> out;
  out.reserve(size());
  for (std::uint32_t i = 0; i < size(); ++i)
    out.push_back(point(i));
  return out;
}

Elem ProjectiveLine::cross_ratio(Point a, Point b, Point c, Point d) const
{
  if (a == b || a == c || a == d || b == c || b == d || c == d)
    throw std::invalid_argument("cross-ratio needs four distinct points");
  return cross_ratio_idx(index(a), index(b), index(c), index(d));
}

Elem ProjectiveLine::cross_ratio_idx(std::uint32_t a, std::uint32_t b,
                                     std::uint32_t c, std::uint32_t d) const
{
  Field const &F = field_;
  std::uint32_t const inf = F.q();
  auto diff = [&](std::uint32_t x, std::uint32_t y) {
    return F.sub(Elem{x}, Elem{y});
  };
  if (a == inf)
    return F.div(diff(d, b), diff(c, b));
  if (b == inf)
    return F.div(diff(c, a), diff(d, a));
  if (c == inf)
    return F.div(diff(d, b), diff(d, a));
  if (d == inf)
    return F.div(diff(c, a), diff(c, b));
  return F.div(F.mul(diff(c, a), diff(d, b)), F.mul(diff(c, b), diff(d, a)));
}

Point ProjectiveLine::g_x(Point a, Point b, Point c, Elem x) const
{
  if (a == b || a == c || b == c)
    throw std::invalid_argument("g_x needs three distinct points");
  if (x == field_.zero() || x == field_.one())
    throw std::invalid_argument("g_x needs x outside {0, 1}");
  return point(g_x_idx(index(a), index(b), index(c), x));
}

std::uint32_t ProjectiveLine::g_x_idx(std::uint32_t ia, std::uint32_t ib,
                                      std::uint32_t ic, Elem x) const
{
  Field const &F = field_;
  std::uint32_t const inf = F.q();
  Elem const a{ia}, b{ib}, c{ic};
  Elem const one = F.one();
  if (ia == inf)  // b + x(c - b)
    return F.add(b, F.mul(x, F.sub(c, b))).v;
  if (ib == inf)  // a + (c - a)/x
    return F.add(a, F.div(F.sub(c, a), x)).v;
  if (ic == inf)  // (b - ax)/(1 - x)
    return F.div(F.sub(b, F.mul(a, x)), F.sub(one, x)).v;
  // (b(c-a) - ax(c-b)) / ((c-a) - x(c-b))
  Elem const ca = F.sub(c, a), cb = F.sub(c, b);
  Elem const num = F.sub(F.mul(b, ca), F.mul(F.mul(a, x), cb));
  Elem const den = F.sub(ca, F.mul(x, cb));
  if (den == F.zero())
    return inf;
  return F.div(num, den).v;
}

namespace
{

struct Mat
{
  Elem a, b, c, d;
};

Moebius canonical(Field const &F, Mat m)
{
  Elem lead = m.a;
  if (lead == F.zero())
    lead = m.b;
  // ad - bc != 0 forces (a, b) != (0, 0).
  Elem const s = F.inv(lead);
  return Moebius{F.mul(m.a, s), F.mul(m.b, s), F.mul(m.c, s), F.mul(m.d, s)};
}

Elem det(Field const &F, Mat const &m)
{
  return F.sub(F.mul(m.a, m.d), F.mul(m.b, m.c));
}

Mat mat(Moebius const &t) { return Mat{t.a, t.b, t.c, t.d}; }

Mat product(Field const &F, Mat const &x, Mat const &y)
{
  return Mat{F.add(F.mul(x.a, y.a), F.mul(x.b, y.c)),
             F.add(F.mul(x.a, y.b), F.mul(x.b, y.d)),
             F.add(F.mul(x.c, y.a), F.mul(x.d, y.c)),
             F.add(F.mul(x.c, y.b), F.mul(x.d, y.d))};
}

Mat adjugate(Field const &F, Mat const &m)
{
  return Mat{m.d, F.neg(m.b), F.neg(m.c), m.a};
}

// Matrix of the map sending (z1, z2, z3) to (0, 1, inf).
Mat to_standard(ProjectiveLine const &L, Point z1, Point z2, Point z3)
{
  Field const &F = L.field();
  Elem const one = F.one(), zero = F.zero();
  if (z1.is_infinite())  // (z2 - z3)/(z - z3)
    return Mat{zero, F.sub(z2.elem(), z3.elem()), one, F.neg(z3.elem())};
  if (z2.is_infinite())  // (z - z1)/(z - z3)
    return Mat{one, F.neg(z1.elem()), one, F.neg(z3.elem())};
  if (z3.is_infinite())  // (z - z1)/(z2 - z1)
    return Mat{one, F.neg(z1.elem()), zero, F.sub(z2.elem(), z1.elem())};
  Elem const u = F.sub(z2.elem(), z3.elem());
  Elem const w = F.sub(z2.elem(), z1.elem());
  return Mat{u, F.neg(F.mul(z1.elem(), u)), w, F.neg(F.mul(z3.elem(), w))};
}

} // namespace

Moebius ProjectiveLine::moebius(Elem a, Elem b, Elem c, Elem d) const
{
  Mat const m{a, b, c, d};
  if (det(field_, m) == field_.zero())
    throw std::invalid_argument("Moebius map with ad - bc = 0");
  return canonical(field_, m);
}

Moebius ProjectiveLine::identity() const
{
  return Moebius{field_.one(), field_.zero(), field_.zero(), field_.one()};
}

Point ProjectiveLine::apply(Moebius const &t, Point pt) const
{
  Field const &F = field_;
  if (pt.is_infinite()) {
    if (t.c == F.zero())
      return Point::infinity();
    return Point::at(F.div(t.a, t.c));
  }
  Elem const x = pt.elem();
  Elem const den = F.add(F.mul(t.c, x), t.d);
  if (den == F.zero())
    return Point::infinity();
  return Point::at(F.div(F.add(F.mul(t.a, x), t.b), den));
}

Moebius ProjectiveLine::compose(Moebius const &outer, Moebius const &inner) const
{
  return canonical(field_, product(field_, mat(outer), mat(inner)));
}

Moebius ProjectiveLine::inverse(Moebius const &t) const
{
  return canonical(field_, adjugate(field_, mat(t)));
}

Moebius ProjectiveLine::from_triples(std::array<Point, 3> const &src,
                                     std::array<Point, 3> const &dst) const
{
  if (!all_distinct(index(src[0]), index(src[1]), index(src[2])) ||
      !all_distinct(index(dst[0]), index(dst[1]), index(dst[2])))
    throw std::invalid_argument("triples must consist of distinct points");
  Mat const s = to_standard(*this, src[0], src[1], src[2]);
  Mat const t = to_standard(*this, dst[0], dst[1], dst[2]);
  return canonical(field_, product(field_, adjugate(field_, t), s));
}

Point ProjectiveLine::apply(SemilinearMap const &s, Point pt) const
{
  if (pt.is_infinite())
    return apply(s.t, pt);
  return apply(s.t, Point::at(field_.frobenius(pt.elem(), s.sigma)));
}

std::vector<Moebius> ProjectiveLine::all_moebius() const
{
  Field const &F = field_;
  std::uint32_t const q = F.q();
  std::vector<Moebius> out;
  out.reserve(std::size_t(q) * q * q - q);
  // a = 1: d != bc.
  for (std::uint32_t b = 0; b < q; ++b)
    for (std::uint32_t c = 0; c < q; ++c) {
      Elem const bc = F.mul(Elem{b}, Elem{c});
      for (std::uint32_t d = 0; d < q; ++d)
        if (Elem{d} != bc)
          out.push_back(Moebius{F.one(), Elem{b}, Elem{c}, Elem{d}});
    }
  // a = 0, b = 1: c != 0.
  for (std::uint32_t c = 1; c < q; ++c)
    for (std::uint32_t d = 0; d < q; ++d)
      out.push_back(Moebius{F.zero(), F.one(), Elem{c}, Elem{d}});
  return out;
}

} // namespace projline
