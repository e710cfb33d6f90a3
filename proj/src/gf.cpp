#include "projline/gf.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace projline
{

bool is_prime(unsigned n)
{
  if (n < 2)
    return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

namespace poly
{

std::vector<unsigned> trim(std::vector<unsigned> a)
{
  while (!a.empty() && a.back() == 0)
    a.pop_back();
  return a;
}

std::vector<unsigned> mul(std::vector<unsigned> const &a,
                          std::vector<unsigned> const &b, unsigned p)
{
  if (a.empty() || b.empty())
    return {};
  std::vector<unsigned> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return trim(std::move(r));
}

static unsigned inv_mod(unsigned a, unsigned p)
{
  // p is prime and small: Fermat.
  unsigned r = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1)
      r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r;
}

std::vector<unsigned> mod(std::vector<unsigned> a,
                          std::vector<unsigned> const &m, unsigned p)
{
  a = trim(std::move(a));
  auto const mt = trim(m);
  if (mt.empty())
    throw std::domain_error("polynomial division by zero");
  std::size_t const dm = mt.size() - 1;
  unsigned const lead_inv = inv_mod(mt.back(), p);
  while (a.size() > dm) {
    std::size_t const shift = a.size() - 1 - dm;
    unsigned const c = a.back() * lead_inv % p;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = (a[shift + i] + p * p - c * mt[i] % p) % p;
    a = trim(std::move(a));
  }
  return a;
}

bool is_irreducible(std::vector<unsigned> const &f, unsigned p)
{
  auto const ft = trim(f);
  if (ft.size() < 2)
    return false;
  unsigned const k = static_cast<unsigned>(ft.size() - 1);
  // Trial division by every monic polynomial of degree 1..k/2.
  for (unsigned d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i)
      count *= p;
    for (std::uint64_t m = 0; m < count; ++m) {
      std::vector<unsigned> g(d + 1, 0);
      std::uint64_t t = m;
      for (unsigned i = 0; i < d; ++i) {
        g[i] = static_cast<unsigned>(t % p);
        t /= p;
      }
      g[d] = 1;
      if (mod(ft, g, p).empty())
        return false;
    }
  }
  return true;
}

std::vector<unsigned> smallest_irreducible(unsigned p, unsigned k)
{
  std::uint64_t count = 1;
  for (unsigned i = 0; i < k; ++i)
    count *= p;
  for (std::uint64_t m = 0; m < count; ++m) {
    std::vector<unsigned> f(k + 1, 0);
    std::uint64_t t = m;
    for (unsigned i = 0; i < k; ++i) {
      f[i] = static_cast<unsigned>(t % p);
      t /= p;
    }
    f[k] = 1;
    if (is_irreducible(f, p))
      return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

} // namespace poly

namespace
{

std::vector<unsigned> unpack(std::uint32_t v, unsigned p, unsigned k)
{
  std::vector<unsigned> c(k, 0);
  for (unsigned i = 0; i < k; ++i) {
    c[i] = v % p;
    v /= p;
  }
  return c;
}

std::uint32_t pack(std::vector<unsigned> const &c, unsigned p, unsigned k)
{
  std::uint32_t v = 0;
  for (unsigned i = k; i-- > 0;)
    v = v * p + (i < c.size() ? c[i] : 0);
  return v;
}

} // namespace

Field Field::make(unsigned p, unsigned k)
{
  if (!is_prime(p))
    throw std::invalid_argument("characteristic " + std::to_string(p) +
                                " is not prime");
  if (k < 1)
    throw std::invalid_argument("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldOrder)
      throw std::invalid_argument("field order exceeds " +
                                  std::to_string(kMaxFieldOrder));
  }

  auto d = std::make_shared<Data>();
  d->p = p;
  d->k = k;
  d->q = static_cast<std::uint32_t>(q);
  d->modulus = poly::smallest_irreducible(p, k);
  d->pow_p.resize(k);
  for (unsigned i = 0; i < k; ++i)
    d->pow_p[i] = i == 0 ? 1 : d->pow_p[i - 1] * p;

  std::uint32_t const n = d->q;

  d->neg_table.resize(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    auto c = unpack(v, p, k);
    for (auto &x : c)
      x = (p - x) % p;
    d->neg_table[v] = static_cast<std::uint16_t>(pack(c, p, k));
  }

  if (n <= 1024) {
    d->add_table.resize(std::size_t(n) * n);
    for (std::uint32_t a = 0; a < n; ++a) {
      auto ca = unpack(a, p, k);
      for (std::uint32_t b = 0; b < n; ++b) {
        auto cb = unpack(b, p, k);
        for (unsigned i = 0; i < k; ++i)
          cb[i] = (ca[i] + cb[i]) % p;
        d->add_table[a * n + b] = static_cast<std::uint16_t>(pack(cb, p, k));
      }
    }
  }

  // Multiplicative generator by exhaustive order testing.
  auto mulmod = [&](std::uint32_t a, std::uint32_t b) {
    auto r = poly::mod(poly::mul(unpack(a, p, k), unpack(b, p, k), p),
                       d->modulus, p);
    return pack(r, p, k);
  };
  std::uint32_t gen = 0;
  if (n == 2) {
    gen = 1;
  } else {
    for (std::uint32_t g = 2; g < n && gen == 0; ++g) {
      std::uint32_t x = g, order = 1;
      while (x != 1) {
        x = mulmod(x, g);
        ++order;
        if (order > n)
          break;
      }
      if (order == n - 1)
        gen = g;
    }
  }
  if (gen == 0)
    throw std::logic_error("no multiplicative generator");

  d->antilog.resize(n - 1);
  d->log.assign(n, 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i + 1 < n; ++i) {
    d->antilog[i] = static_cast<std::uint16_t>(x);
    d->log[x] = i;
    x = mulmod(x, gen);
  }

  d->inv_table.assign(n, 0);
  for (std::uint32_t v = 1; v < n; ++v) {
    std::uint32_t const l = d->log[v];
    d->inv_table[v] = d->antilog[l == 0 ? 0 : (n - 1) - l];
  }

  Field const tmp{d};
  d->frob.assign(k, std::vector<std::uint16_t>(n));
  for (std::uint32_t v = 0; v < n; ++v) {
    Elem e{v};
    for (unsigned i = 0; i < k; ++i) {
      d->frob[i][v] = static_cast<std::uint16_t>(e.v);
      e = tmp.pow(e, p);
    }
  }

  return Field{std::move(d)};
}

Elem Field::add_digits(Elem a, Elem b) const
{
  auto const &d = *data_;
  if (d.p == 2)
    return Elem{a.v ^ b.v};
  std::uint32_t r = 0;
  for (unsigned i = 0; i < d.k; ++i) {
    std::uint32_t const da = a.v / d.pow_p[i] % d.p;
    std::uint32_t const db = b.v / d.pow_p[i] % d.p;
    r += (da + db) % d.p * d.pow_p[i];
  }
  return Elem{r};
}

Elem Field::from_int(long long n) const
{
  long long const r = ((n % static_cast<long long>(p())) + p()) % p();
  return Elem{static_cast<std::uint32_t>(r)};
}

Elem Field::from_coeffs(std::span<const unsigned> coeffs) const
{
  if (coeffs.size() != k())
    throw std::invalid_argument("expected " + std::to_string(k()) +
                                " coefficients");
  for (unsigned c : coeffs)
    if (c >= p())
      throw std::invalid_argument("coefficient out of range");
  return Elem{pack(std::vector<unsigned>(coeffs.begin(), coeffs.end()), p(), k())};
}

std::vector<unsigned> Field::coeffs(Elem e) const
{
  return unpack(e.v, p(), k());
}

Elem Field::inv(Elem a) const
{
  if (a.v == 0)
    throw std::domain_error("inverse of zero");
  return Elem{data_->inv_table[a.v]};
}

Elem Field::arith(ArithOp op, Elem a, Elem b) const
{
  switch (op) {
  case ArithOp::add: return add(a, b);
  case ArithOp::sub: return sub(a, b);
  case ArithOp::mul: return mul(a, b);
  case ArithOp::div: return div(a, b);
  case ArithOp::neg: return neg(a);
  case ArithOp::inv: return inv(a);
  }
  throw std::invalid_argument("unknown arithmetic op");
}

Elem Field::pow(Elem a, std::uint64_t n) const
{
  Elem r = one(), base = a;
  while (n) {
    if (n & 1)
      r = mul(r, base);
    base = mul(base, base);
    n >>= 1;
  }
  return r;
}

std::vector<Automorphism> Field::automorphisms() const
{
  std::vector<Automorphism> out;
  for (unsigned i = 0; i < k(); ++i)
    out.push_back(Automorphism{i});
  return out;
}

unsigned Field::degree_of(Elem a) const
{
  for (unsigned e = 1; e < k(); ++e)
    if (frobenius(a, e) == a)
      return e;
  return k();
}

Subfield Field::subfield(unsigned d) const
{
  if (d == 0 || k() % d != 0)
    throw std::invalid_argument("no subfield of degree " + std::to_string(d));
  Subfield s;
  s.degree = d;
  s.member.assign(q(), false);
  for (std::uint32_t v = 0; v < q(); ++v) {
    Elem const e{v};
    if (frobenius(e, d % k()) == e) {
      s.elements.push_back(e);
      s.member[v] = true;
    }
  }
  return s;
}

Subfield Field::generated_subfield(std::span<const Elem> generators) const
{
  unsigned d = 1;
  for (Elem g : generators)
    d = std::lcm(d, degree_of(g));
  return subfield(d);
}

bool Field::is_square_map_bijective() const
{
  std::vector<bool> hit(q(), false);
  for (std::uint32_t v = 0; v < q(); ++v) {
    Elem const s = mul(Elem{v}, Elem{v});
    if (hit[s.v])
      return false;
    hit[s.v] = true;
  }
  return true;
}

} // namespace projline
