#include <gtest/gtest.h>

#include "oracle.hpp"
#include "projline/reconstruct.hpp"
#include "projline/search.hpp"

using namespace projline;

namespace
{

constexpr CorrectionKind kKinds[] = {CorrectionKind::tau, CorrectionKind::rho,
                                     CorrectionKind::chi, CorrectionKind::alpha,
                                     CorrectionKind::beta};

bool needs_not_one(CorrectionKind k)
{
  return k == CorrectionKind::alpha || k == CorrectionKind::beta;
}

/// The point M_{a,b}(x) as printed for each kind, evaluated with the
/// schoolbook field; infinity is q.
std::uint32_t printed_value(oracle::NaiveField const &N, CorrectionKind kind,
                            std::uint32_t a, std::uint32_t b, std::uint32_t x)
{
  std::uint32_t const inf = N.q(), one = 1;
  auto frac = [&](std::uint32_t num, std::uint32_t den) {
    return den == 0 ? inf : N.div(num, den);
  };
  std::uint32_t const ab = N.mul(a, b);
  switch (kind) {
  case CorrectionKind::tau:
    return N.add(N.mul(a, x), N.mul(b, N.sub(one, x)));
  case CorrectionKind::rho:
    return frac(N.sub(a, N.mul(N.sub(one, x), b)), x);
  case CorrectionKind::chi:
    return frac(N.sub(a, N.mul(x, b)), N.sub(one, x));
  case CorrectionKind::alpha:
    return frac(N.add(N.sub(N.sub(N.mul(ab, x), N.mul(b, x)), ab), a),
                N.add(N.sub(N.sub(N.mul(a, x), x), b), one));
  case CorrectionKind::beta:
    return frac(N.add(N.sub(N.sub(a, b), N.mul(ab, x)), N.mul(b, x)),
                N.add(N.sub(N.sub(a, b), N.mul(a, x)), x));
  }
  return inf;
}

/// Replays the defining equation f(M_{a,b}(x)) = M_{f(a),f(b)}(y) for every
/// table entry, using the printed formulas.
bool equation_holds(ProjectiveLine const &L, oracle::NaiveField const &N,
                    CorrectionPerm const &cp, Perm const &f)
{
  for (auto [x, y] : cp.table) {
    std::uint32_t const lhs = f[printed_value(N, cp.kind, cp.a.v, cp.b.v, x.v)];
    std::uint32_t const rhs = printed_value(N, cp.kind, f[cp.a.v], f[cp.b.v], y.v);
    if (lhs != rhs)
      return false;
  }
  (void)L;
  return true;
}

} // namespace

TEST(Correction, MoebiusFormsMatchPrintedFormulas)
{
  for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{7, 1}, {3, 2}, {2, 3}}) {
    ProjectiveLine const L(Field::make(p, k));
    auto const N = oracle::naive(p, k);
    std::uint32_t const q = L.field().q();
    for (auto kind : kKinds)
      for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b) {
          if (a == b || (needs_not_one(kind) && (a == 1 || b == 1)))
            continue;
          auto const M = correction_moebius(L, kind, Elem{a}, Elem{b});
          for (std::uint32_t x = 2; x < q; ++x)
            ASSERT_EQ(L.index(L.apply(M, Point::at(Elem{x}))), printed_value(N, kind, a, b, x))
                << to_string(kind);
        }
  }
}

TEST(Correction, IdentityGivesIdentityTables)
{
  ProjectiveLine const L(Field::make(2, 4));
  auto const O = OSet::subfield_minus_01(L.field(), 2);
  Perm const id = Perm::identity(L.size());
  for (auto kind : kKinds)
    for (std::uint32_t a = 0; a < 16; ++a)
      for (std::uint32_t b = 0; b < 16; ++b) {
        if (a == b || (needs_not_one(kind) && (a == 1 || b == 1)))
          continue;
        auto const cp = correction_perm(L, kind, Elem{a}, Elem{b}, id, O);
        for (auto [x, y] : cp.table)
          ASSERT_EQ(x, y);
      }
}

TEST(Correction, Gf9SingletonIsFixed)
{
  ProjectiveLine const L(Field::make(3, 2));
  auto const O = OSet::neg_one(L.field());
  Perm const frob = frobenius_perm(L, 1);
  Elem const g = L.field().primitive_element();
  auto const cp = correction_perm(L, CorrectionKind::tau, g, Elem{0}, frob, O);
  ASSERT_EQ(cp.table.size(), 1u);
  EXPECT_EQ(cp(O.values()[0]), O.values()[0]);
  EXPECT_THROW(cp(Elem{3}), std::out_of_range);
}

TEST(Correction, Gf16FrobeniusTablesSatisfyEquations)
{
  ProjectiveLine const L(Field::make(2, 4));
  auto const N = oracle::naive(2, 4);
  auto const O = OSet::subfield_minus_01(L.field(), 2);
  for (auto const &f : frobenius_perms(L))
    for (auto kind : kKinds)
      for (std::uint32_t a = 0; a < 16; ++a)
        for (std::uint32_t b = 0; b < 16; ++b) {
          if (a == b || (needs_not_one(kind) && (a == 1 || b == 1)))
            continue;
          auto const cp = correction_perm(L, kind, Elem{a}, Elem{b}, f, O);
          ASSERT_EQ(cp.table.size(), 2u);
          ASSERT_NE(cp.table[0].second, cp.table[1].second);
          ASSERT_TRUE(equation_holds(L, N, cp, f)) << to_string(kind);
        }
}

TEST(Correction, WholeGroupGf9AllKinds)
{
  // Every O-preserving f fixing infinity gives bijective tables.
  ProjectiveLine const L(Field::make(3, 2));
  auto const N = oracle::naive(3, 2);
  Field const &F = L.field();
  auto const O = OSet::make(F, galois_orbits(F)[1]);
  auto const G = pgammal2_group(L);
  for (auto const &f : G.elements()) {
    if (f[L.infinity_index()] != L.infinity_index())
      continue;
    for (auto kind : kKinds)
      for (std::uint32_t a = 0; a < 9; a += 2)
        for (std::uint32_t b = 0; b < 9; b += 3) {
          if (a == b || (needs_not_one(kind) && (a == 1 || b == 1 || f[1] != 1)))
            continue;
          auto const cp = correction_perm(L, kind, Elem{a}, Elem{b}, f, O);
          ASSERT_TRUE(equation_holds(L, N, cp, f));
        }
  }
}

TEST(Correction, Preconditions)
{
  ProjectiveLine const L(Field::make(3, 2));
  auto const O = OSet::neg_one(L.field());
  Perm const id = Perm::identity(L.size());
  EXPECT_THROW(correction_perm(L, CorrectionKind::tau, Elem{2}, Elem{2}, id, O),
               std::invalid_argument);
  EXPECT_THROW(correction_perm(L, CorrectionKind::alpha, Elem{1}, Elem{2}, id, O),
               std::invalid_argument);
  EXPECT_THROW(correction_perm(L, CorrectionKind::beta, Elem{3}, Elem{1}, id, O),
               std::invalid_argument);
  Perm const recip = perm_of(L, L.moebius(Elem{0}, Elem{1}, Elem{1}, Elem{0}));
  EXPECT_THROW(correction_perm(L, CorrectionKind::tau, Elem{2}, Elem{3}, recip, O),
               std::invalid_argument);
  Perm const scale = perm_of(L, L.moebius(Elem{2}, Elem{0}, Elem{0}, Elem{1}));
  EXPECT_NO_THROW(correction_perm(L, CorrectionKind::tau, Elem{3}, Elem{4}, scale, O));
  EXPECT_THROW(correction_perm(L, CorrectionKind::alpha, Elem{3}, Elem{4}, scale, O),
               std::invalid_argument);
}

TEST(Correction, NonPreservingPermutationNamesFailingX)
{
  ProjectiveLine const L(Field::make(3, 2));
  auto const O = OSet::neg_one(L.field());
  // Swap two non-prime-field elements: fixes 0, 1, inf, 2 but is not O-preserving.
  std::vector<std::uint32_t> t(L.size());
  for (std::uint32_t i = 0; i < t.size(); ++i)
    t[i] = i;
  std::swap(t[3], t[4]);
  Perm const f(t);
  int failures = 0;
  for (std::uint32_t a = 0; a < 9; ++a)
    for (std::uint32_t b = 0; b < 9; ++b) {
      if (a == b)
        continue;
      try {
        correction_perm(L, CorrectionKind::tau, Elem{a}, Elem{b}, f, O);
      } catch (NotOPreserving const &e) {
        EXPECT_TRUE(O.contains(e.failing_x()));
        ++failures;
      }
    }
  EXPECT_GT(failures, 0);
}

TEST(Restriction, Examples)
{
  ProjectiveLine const L9(Field::make(3, 2));
  auto const O9 = OSet::neg_one(L9.field());
  for (auto const &f : frobenius_perms(L9)) {
    auto const r = restrict_to_o(L9, f, O9);
    EXPECT_TRUE(r.is_permutation);
    ASSERT_EQ(r.map.size(), 1u);
    EXPECT_EQ(r.map[0].second, O9.values()[0]);
  }

  ProjectiveLine const L16(Field::make(2, 4));
  auto const O16 = OSet::subfield_minus_01(L16.field(), 2);
  auto const r = restrict_to_o(L16, frobenius_perm(L16, 1), O16);
  ASSERT_TRUE(r.is_permutation);
  EXPECT_EQ(r.map[0].second, O16.values()[1]);
  EXPECT_EQ(r.map[1].second, O16.values()[0]);

  auto const id = restrict_to_o(L16, Perm::identity(L16.size()), O16);
  EXPECT_TRUE(id.is_permutation);
  for (auto [x, y] : id.map)
    EXPECT_EQ(x, y);

  std::vector<std::uint32_t> t(L9.size());
  for (std::uint32_t i = 0; i < t.size(); ++i)
    t[i] = i;
  std::swap(t[2], t[5]);
  auto const bad = restrict_to_o(L9, Perm(t), O9);
  EXPECT_FALSE(bad.is_permutation);
  ASSERT_TRUE(bad.escaping.has_value());
  EXPECT_EQ(*bad.escaping, Elem{2});
}

TEST(ClosureCheck, SurvivorsSatisfyAllFamilies)
{
  for (auto [p, k, d] : std::vector<std::array<unsigned, 3>>{{3, 2, 1}, {5, 2, 1}, {2, 4, 2}}) {
    ProjectiveLine const L(Field::make(p, k));
    auto const O = OSet::subfield_minus_01(L.field(), d);
    for (auto const &f : o_preserving_stabilizer(L, O, SearchMethod::backtracking).stabilizer) {
      auto const rep = closure_check(L, f, O);
      EXPECT_TRUE(rep.ok());
      EXPECT_GT(rep.checked, 0u);
      EXPECT_TRUE(image_of_k(L, f, O));
    }
  }
  ProjectiveLine const L9(Field::make(3, 2));
  auto const O9 = OSet::neg_one(L9.field());
  auto const rep = closure_check(L9, frobenius_perm(L9, 1), O9);
  // 3*3*1 pairs for the first lemma (two families), 2*1 for the second (two).
  EXPECT_EQ(rep.checked, 2u * 9 + 2u * 2);
  EXPECT_TRUE(rep.ok());
}

TEST(ClosureCheck, ReportsViolations)
{
  ProjectiveLine const L(Field::make(3, 2));
  auto const O = OSet::neg_one(L.field());
  std::vector<std::uint32_t> t(L.size());
  for (std::uint32_t i = 0; i < t.size(); ++i)
    t[i] = i;
  std::swap(t[2], t[5]);  // moves -1 out of K
  Perm const f(t);
  auto const rep = closure_check(L, f, O);
  EXPECT_FALSE(rep.ok());
  EXPECT_FALSE(image_of_k(L, f, O));
}

TEST(Hua, DomainErrors)
{
  auto const F = Field::make(7, 1);
  EXPECT_THROW(hua(F, Elem{1}, Elem{1}, HuaVariant::A), std::domain_error);
  EXPECT_THROW(hua(F, Elem{0}, Elem{1}, HuaVariant::A), std::domain_error);
  EXPECT_THROW(hua(F, Elem{2}, Elem{0}, HuaVariant::B), std::domain_error);
  try {
    hua(F, Elem{1}, Elem{1}, HuaVariant::A);
  } catch (std::domain_error const &e) {
    EXPECT_NE(std::string(e.what()).find("b^-2 - a"), std::string::npos);
  }
}

TEST(Hua, MatchesSchoolbookEvaluation)
{
  for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{7, 1}, {2, 3}, {3, 2}}) {
    auto const F = Field::make(p, k);
    auto const N = oracle::naive(p, k);
    for (std::uint32_t a = 1; a < F.q(); ++a)
      for (std::uint32_t b = 1; b < F.q(); ++b)
        for (auto v : {HuaVariant::A, HuaVariant::B}) {
          std::uint32_t const binv2 = N.inv(N.mul(b, b));
          std::uint32_t const inner =
              N.sub(binv2, v == HuaVariant::A ? a : N.inv(a));
          if (inner == 0) {
            EXPECT_THROW(hua(F, Elem{a}, Elem{b}, v), std::domain_error);
            continue;
          }
          std::uint32_t const sum = N.add(N.inv(a), N.inv(inner));
          if (sum == 0) {
            EXPECT_THROW(hua(F, Elem{a}, Elem{b}, v), std::domain_error);
            continue;
          }
          EXPECT_EQ(hua(F, Elem{a}, Elem{b}, v).v, N.sub(a, N.inv(sum)));
        }
  }
}

TEST(Hua, VariantAHoldsEverywhere)
{
  for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{7, 1}, {2, 3}, {3, 2}, {5, 2}}) {
    auto const scan = hua_scan(Field::make(p, k), HuaVariant::A);
    EXPECT_TRUE(scan.identity_holds()) << p << "^" << k;
    EXPECT_TRUE(scan.counterexamples.empty());
    EXPECT_EQ(scan.valid + scan.excluded, std::uint64_t(Field::make(p, k).q() - 1) *
                                              (Field::make(p, k).q() - 1));
  }
}

TEST(Hua, VariantBFails)
{
  for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{7, 1}, {2, 3}}) {
    auto const scan = hua_scan(Field::make(p, k), HuaVariant::B);
    EXPECT_FALSE(scan.identity_holds());
    EXPECT_FALSE(scan.counterexamples.empty());
    EXPECT_LE(scan.counterexamples.size(), 8u);
  }
}

TEST(Classify, FrobeniusAndIdentity)
{
  ProjectiveLine const L(Field::make(3, 2));
  auto const c1 = classify_automorphism(L, frobenius_perm(L, 1));
  ASSERT_TRUE(c1.automorphism.has_value());
  EXPECT_EQ(*c1.automorphism, 1u);
  auto const c0 = classify_automorphism(L, Perm::identity(L.size()));
  ASSERT_TRUE(c0.automorphism.has_value());
  EXPECT_EQ(*c0.automorphism, 0u);

  ProjectiveLine const L16(Field::make(2, 4));
  for (unsigned i = 0; i < 4; ++i)
    EXPECT_EQ(classify_automorphism(L16, frobenius_perm(L16, i)).automorphism, i);
}

TEST(Classify, TranspositionFailsAdditivity)
{
  ProjectiveLine const L(Field::make(3, 2));
  std::vector<std::uint32_t> t(L.size());
  for (std::uint32_t i = 0; i < t.size(); ++i)
    t[i] = i;
  std::swap(t[3], t[4]);
  auto const c = classify_automorphism(L, Perm(t));
  EXPECT_FALSE(c.automorphism.has_value());
  EXPECT_EQ(c.violated, "f(a+b) = f(a)+f(b)");
  EXPECT_EQ(c.witness.size(), 2u);
}

TEST(Classify, RequiresNormalization)
{
  ProjectiveLine const L(Field::make(5, 1));
  Perm const shift = perm_of(L, L.moebius(Elem{1}, Elem{1}, Elem{0}, Elem{1}));
  auto const c = classify_automorphism(L, shift);
  EXPECT_FALSE(c.automorphism.has_value());
  EXPECT_EQ(c.violated, "f fixes 0, 1, inf");
}

TEST(Classify, ConjugationIdentityOnSurvivors)
{
  ProjectiveLine const L(Field::make(3, 2));
  Field const &F = L.field();
  auto const O = OSet::neg_one(F);
  for (auto const &f : o_preserving_stabilizer(L, O, SearchMethod::backtracking).stabilizer) {
    auto g = [&](Elem a) { return Elem{f[a.v]}; };
    for (std::uint32_t av = 1; av < 9; ++av)
      for (std::uint32_t bv = 1; bv < 9; ++bv) {
        Elem const a{av}, b{bv};
        if (F.add(a, b) == F.zero())
          continue;
        Elem const lhs = g(F.div(F.mul(a, b), F.add(a, b)));
        Elem const rhs = F.div(F.mul(g(a), g(b)), F.add(g(a), g(b)));
        ASSERT_EQ(lhs, rhs);
      }
    EXPECT_TRUE(classify_automorphism(L, f).automorphism.has_value());
  }
}
