#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "oracle.hpp"
#include "projline/gf.hpp"

using namespace projline;

namespace
{

struct PK
{
  unsigned p, k;
};

std::vector<PK> const kSmallFields = {{2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {3, 2},
                                      {2, 3}, {2, 4}, {5, 2}, {3, 3}, {7, 2}, {2, 5}};

} // namespace

TEST(Field, RejectsBadParameters)
{
  EXPECT_THROW(Field::make(4, 1), std::invalid_argument);
  EXPECT_THROW(Field::make(1, 1), std::invalid_argument);
  EXPECT_THROW(Field::make(3, 0), std::invalid_argument);
  EXPECT_THROW(Field::make(2, 13), std::invalid_argument);  // 8192 > cap
  EXPECT_NO_THROW(Field::make(2, 12));
}

TEST(Field, DegreeOneUsesModulusX)
{
  auto const F = Field::make(3, 1);
  EXPECT_EQ(F.modulus(), (std::vector<unsigned>{0, 1}));
  EXPECT_EQ(F.q(), 3u);
}

TEST(Field, ModulusIsSmallestIrreducibleBySieve)
{
  for (auto [p, k] : std::vector<PK>{{2, 2}, {3, 2}, {2, 3}, {2, 4}, {5, 2}, {3, 3}, {7, 2}}) {
    auto const F = Field::make(p, k);
    auto const sieve = oracle::irreducibles(p, k);
    ASSERT_FALSE(sieve.empty());
    EXPECT_EQ(F.modulus(), sieve.front()) << "p=" << p << " k=" << k;
  }
}

TEST(Field, KnownModuli)
{
  EXPECT_EQ(Field::make(2, 2).modulus(), (std::vector<unsigned>{1, 1, 1}));
  EXPECT_EQ(Field::make(3, 2).modulus(), (std::vector<unsigned>{1, 0, 1}));
}

TEST(Poly, IrreducibilityAgreesWithSieve)
{
  for (auto [p, k] : std::vector<PK>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}}) {
    auto const sieve = oracle::irreducibles(p, k);
    for (auto const &f : oracle::monic(p, k)) {
      bool const expect = std::find(sieve.begin(), sieve.end(), f) != sieve.end();
      EXPECT_EQ(poly::is_irreducible(f, p), expect);
    }
  }
}

TEST(Field, ArithmeticMatchesSchoolbook)
{
  for (auto [p, k] : kSmallFields) {
    auto const F = Field::make(p, k);
    auto const N = oracle::naive(p, k);
    for (std::uint32_t a = 0; a < F.q(); ++a)
      for (std::uint32_t b = 0; b < F.q(); ++b) {
        ASSERT_EQ(F.add(Elem{a}, Elem{b}).v, N.add(a, b));
        ASSERT_EQ(F.mul(Elem{a}, Elem{b}).v, N.mul(a, b));
        ASSERT_EQ(F.sub(Elem{a}, Elem{b}).v, N.sub(a, b));
      }
  }
}

TEST(Field, LargeFieldAdditionWithoutTable)
{
  auto const F = Field::make(3, 7);  // 2187 > add-table limit
  auto const N = oracle::NaiveField{3, 7, F.modulus()};
  oracle::Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    std::uint32_t const a = oracle::uniform(rng, F.q()), b = oracle::uniform(rng, F.q());
    ASSERT_EQ(F.add(Elem{a}, Elem{b}).v, N.add(a, b));
    ASSERT_EQ(F.mul(Elem{a}, Elem{b}).v, N.mul(a, b));
    ASSERT_EQ(F.neg(Elem{a}).v, N.neg(a));
  }
}

TEST(Field, Gf4OmegaSquared)
{
  auto const F = Field::make(2, 2);
  Elem const w = F.from_coeffs(std::vector<unsigned>{0, 1});
  EXPECT_EQ(F.coeffs(F.mul(w, w)), (std::vector<unsigned>{1, 1}));
}

TEST(Field, AxiomsFullTable)
{
  for (auto [p, k] : std::vector<PK>{{2, 2}, {3, 2}, {2, 3}, {5, 1}, {7, 1}, {2, 4}}) {
    auto const F = Field::make(p, k);
    std::uint32_t const q = F.q();
    for (std::uint32_t a = 0; a < q; ++a) {
      Elem const A{a};
      ASSERT_EQ(F.add(A, F.neg(A)), F.zero());
      if (a != 0)
        ASSERT_EQ(F.mul(A, F.inv(A)), F.one());
      for (std::uint32_t b = 0; b < q; ++b)
        for (std::uint32_t c = 0; c < q; ++c) {
          Elem const B{b}, C{c};
          ASSERT_EQ(F.add(F.add(A, B), C), F.add(A, F.add(B, C)));
          ASSERT_EQ(F.mul(A, F.add(B, C)), F.add(F.mul(A, B), F.mul(A, C)));
        }
    }
  }
}

TEST(Field, DivisionByZero)
{
  auto const F = Field::make(5, 1);
  EXPECT_THROW(F.inv(F.zero()), std::domain_error);
  EXPECT_THROW(F.div(F.one(), F.zero()), std::domain_error);
  EXPECT_THROW(F.arith(ArithOp::div, F.one(), F.zero()), std::domain_error);
  EXPECT_EQ(F.inv(F.one()), F.one());
}

TEST(Field, ArithDispatch)
{
  auto const F = Field::make(7, 1);
  Elem const a{3}, b{5};
  EXPECT_EQ(F.arith(ArithOp::add, a, b).v, 1u);
  EXPECT_EQ(F.arith(ArithOp::sub, a, b).v, 5u);
  EXPECT_EQ(F.arith(ArithOp::mul, a, b).v, 1u);
  EXPECT_EQ(F.arith(ArithOp::div, a, b).v, 2u);  // 5 * 2 = 10 = 3
  EXPECT_EQ(F.arith(ArithOp::neg, a).v, 4u);
  EXPECT_EQ(F.arith(ArithOp::inv, a).v, 5u);
}

TEST(Field, FromIntAndCoeffsRoundTrip)
{
  auto const F = Field::make(3, 3);
  EXPECT_EQ(F.from_int(-1).v, 2u);
  EXPECT_EQ(F.from_int(7).v, 1u);
  for (std::uint32_t v = 0; v < F.q(); ++v) {
    auto const c = F.coeffs(Elem{v});
    ASSERT_EQ(c.size(), 3u);
    EXPECT_EQ(F.from_coeffs(c).v, v);
  }
}

TEST(Field, FrobeniusIsPowering)
{
  for (auto [p, k] : kSmallFields) {
    auto const F = Field::make(p, k);
    auto const N = oracle::naive(p, k);
    std::uint64_t pp = 1;
    for (unsigned i = 0; i < k; ++i, pp *= p)
      for (std::uint32_t a = 0; a < F.q(); ++a)
        ASSERT_EQ(F.frobenius(Elem{a}, i).v, N.pow(a, pp));
  }
}

TEST(Field, FrobeniusOrderAndHomomorphism)
{
  for (auto [p, k] : kSmallFields) {
    auto const F = Field::make(p, k);
    for (std::uint32_t a = 0; a < F.q(); ++a) {
      Elem const A{a};
      EXPECT_EQ(F.frobenius(A, 0), A);
      EXPECT_EQ(F.frobenius(F.frobenius(A, 1), k - 1), A);
      for (std::uint32_t b = 0; b < F.q(); ++b) {
        Elem const B{b};
        ASSERT_EQ(F.frobenius(F.add(A, B), 1), F.add(F.frobenius(A, 1), F.frobenius(B, 1)));
        ASSERT_EQ(F.frobenius(F.mul(A, B), 1), F.mul(F.frobenius(A, 1), F.frobenius(B, 1)));
      }
    }
  }
}

TEST(Field, Automorphisms)
{
  EXPECT_EQ(Field::make(3, 1).automorphisms().size(), 1u);
  EXPECT_EQ(Field::make(3, 2).automorphisms().size(), 2u);
  auto const F = Field::make(2, 4);
  auto const auts = F.automorphisms();
  ASSERT_EQ(auts.size(), 4u);
  for (unsigned i = 0; i < 4; ++i) {
    EXPECT_EQ(auts[i].power, i);
    std::vector<bool> seen(F.q(), false);
    for (std::uint32_t a = 0; a < F.q(); ++a)
      seen[F.apply(auts[i], Elem{a}).v] = true;
    EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
    EXPECT_EQ(F.apply(auts[i], F.one()), F.one());
  }
}

TEST(Field, Gf9FrobeniusOfModulusRoot)
{
  auto const F = Field::make(3, 2);
  auto const N = oracle::naive(3, 2);
  Elem const x = F.from_coeffs(std::vector<unsigned>{0, 1});
  EXPECT_EQ(F.frobenius(x, 1).v, N.mul(N.mul(x.v, x.v), x.v));
}

TEST(Field, PrimitiveElementHasFullOrder)
{
  for (auto [p, k] : kSmallFields) {
    auto const F = Field::make(p, k);
    Elem const g = F.primitive_element();
    std::uint32_t order = 1;
    for (Elem e = g; e != F.one(); e = F.mul(e, g))
      ++order;
    EXPECT_EQ(order, F.q() - 1);
  }
}

TEST(Subfield, ExistsExactlyForDivisors)
{
  for (unsigned k = 1; k <= 6; ++k) {
    auto const F = Field::make(2, k);
    for (unsigned d = 1; d <= k; ++d) {
      if (k % d == 0) {
        auto const K = F.subfield(d);
        EXPECT_EQ(K.size(), 1u << d);
        EXPECT_EQ(K.degree, d);
      } else {
        EXPECT_THROW(F.subfield(d), std::invalid_argument);
      }
    }
  }
}

TEST(Subfield, ClosedUnderFieldOperations)
{
  for (auto [p, k] : std::vector<PK>{{2, 4}, {3, 2}, {2, 6}, {5, 2}}) {
    auto const F = Field::make(p, k);
    for (unsigned d = 1; d <= k; ++d) {
      if (k % d)
        continue;
      auto const K = F.subfield(d);
      for (Elem a : K.elements) {
        ASSERT_TRUE(K.contains(F.neg(a)));
        if (a != F.zero())
          ASSERT_TRUE(K.contains(F.inv(a)));
        for (Elem b : K.elements) {
          ASSERT_TRUE(K.contains(F.add(a, b)));
          ASSERT_TRUE(K.contains(F.mul(a, b)));
        }
      }
    }
  }
}

TEST(Subfield, GeneratedExamples)
{
  auto const F9 = Field::make(3, 2);
  auto const empty = F9.generated_subfield({});
  EXPECT_EQ(empty.degree, 1u);
  EXPECT_EQ(empty.elements, (std::vector<Elem>{Elem{0}, Elem{1}, Elem{2}}));

  std::vector<Elem> const gen{F9.primitive_element()};
  EXPECT_EQ(F9.generated_subfield(gen).degree, 2u);
  EXPECT_EQ(F9.generated_subfield(gen).size(), 9u);

  auto const F16 = Field::make(2, 4);
  auto const K4 = F16.subfield(2);
  std::vector<Elem> omegas;
  for (Elem e : K4.elements)
    if (e != F16.zero() && e != F16.one())
      omegas.push_back(e);
  ASSERT_EQ(omegas.size(), 2u);
  auto const gen4 = F16.generated_subfield(omegas);
  EXPECT_EQ(gen4.degree, 2u);
  EXPECT_EQ(gen4, K4);
  // Fixed points of x -> x^4 computed independently.
  auto const N = oracle::naive(2, 4);
  for (std::uint32_t a = 0; a < 16; ++a)
    EXPECT_EQ(K4.contains(Elem{a}), N.pow(a, 4) == a);
}

TEST(Subfield, GeneratedIsSmallestContaining)
{
  auto const F = Field::make(2, 6);
  for (std::uint32_t a = 0; a < F.q(); ++a) {
    std::vector<Elem> const s{Elem{a}};
    auto const K = F.generated_subfield(s);
    EXPECT_TRUE(K.contains(Elem{a}));
    EXPECT_EQ(K.degree, F.degree_of(Elem{a}));
    for (unsigned d = 1; d < K.degree; ++d)
      if (6 % d == 0)
        EXPECT_FALSE(F.subfield(d).contains(Elem{a}));
  }
}

TEST(Field, SquareMapBijectiveInCharacteristicTwo)
{
  EXPECT_TRUE(Field::make(2, 3).is_square_map_bijective());
  EXPECT_FALSE(Field::make(3, 2).is_square_map_bijective());
}

TEST(Field, HandlesShareTables)
{
  auto const F = Field::make(3, 2);
  auto const G = F;
  EXPECT_TRUE(F == G);
  EXPECT_TRUE(F == Field::make(3, 2));
  EXPECT_FALSE(F == Field::make(3, 1));
}
