#include "cogredient/localring.hpp"

#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "support/test_support.hpp"

namespace cogredient {
namespace {

using testing::key;
using testing::unit_squares;

Element E(const Ring& ring, std::int64_t v) { return ring->from_int(v); }

TEST(MakeRingTest, CardinalitiesFollowTheFamilyFormulas) {
  const Ring z9 = make_ring("zmod:3^2");
  EXPECT_EQ(z9->card_R(), 9u);
  EXPECT_EQ(z9->card_M(), 3u);
  EXPECT_EQ(z9->card_units(), 6u);

  const Ring gr = make_ring("gr:3^2:2");
  EXPECT_EQ(gr->card_R(), 81u);
  EXPECT_EQ(gr->card_M(), 9u);
  EXPECT_EQ(gr->card_units(), 72u);

  // F_{5^2}[t]/(t^3): |R| = 5^6, |M| = 5^4.
  const Ring tr = make_ring("trunc:5:2:3");
  EXPECT_EQ(tr->card_R(), 15625u);
  EXPECT_EQ(tr->card_M(), 625u);
  EXPECT_EQ(tr->card_units(), 15000u);
  EXPECT_EQ(tr->card_M() % 2, 1u);
}

TEST(MakeRingTest, RejectsEvenCharacteristicAndComposites) {
  EXPECT_THROW(make_ring("zmod:2^3"), ParseError);
  EXPECT_THROW(make_ring("zmod:9^1"), ParseError);
  EXPECT_THROW(make_ring("gr:15^1:2"), ParseError);
  EXPECT_THROW(make_ring("trunc:2:1:2"), ParseError);
}

TEST(MakeRingTest, RejectsMalformedSpecs) {
  for (const char* spec : {"", "zmod", "zmod:", "zmod:3^", "zmod:3^0", "zmod:3^x", "zmod:3^2:1", "gr:3^2",
                           "gr:3^2:0", "trunc:3:1", "trunc:3:1:0", "field:3", "gr:3^2:2:1", "gr:3^2:2:1,0,0",
                           "gr:3^2:2:1,", "zmod:-3^1"}) {
    EXPECT_THROW(make_ring(spec), ParseError) << spec;
  }
}

TEST(MakeRingTest, RejectsReducibleDefiningPolynomial) {
  EXPECT_THROW(make_ring("gr:3^1:2:0,0"), ParseError);   // x^2
  EXPECT_THROW(make_ring("trunc:3:2:2:2,0"), ParseError);  // x^2 - 1
  EXPECT_THROW(make_ring("gr:3^2:2:8,0"), ParseError);   // x^2 - 1 mod 3
  EXPECT_NO_THROW(make_ring("gr:3^2:2:2,1"));            // x^2 + x + 2, irreducible mod 3
  EXPECT_THROW(make_ring("gr:3^2:2:9,0"), ParseError);   // coefficient out of range
}

TEST(MakeRingTest, ZmodShorthandAndCanonicalSpec) {
  EXPECT_EQ(make_ring("zmod:3")->spec(), "zmod:3^1");
  EXPECT_EQ(make_ring("zmod:9")->spec(), "zmod:3^2");
  EXPECT_EQ(make_ring("zmod:3486784401")->spec(), "zmod:3^20");
  EXPECT_EQ(make_ring("zmod:1000003")->spec(), "zmod:1000003^1");
  for (const char* spec : {"zmod:0", "zmod:1", "zmod:8", "zmod:15", "zmod:45"}) {
    EXPECT_THROW(make_ring(spec), ParseError) << spec;
  }
  EXPECT_EQ(make_ring("gr:3^2:2")->spec(), "gr:3^2:2");
  EXPECT_EQ(make_ring("gr:3^2:2:1,0")->spec(), "gr:3^2:2");
  EXPECT_EQ(make_ring("gr:3^2:2:2,1")->spec(), "gr:3^2:2:2,1");
  EXPECT_EQ(make_ring("trunc:3:1:2")->spec(), "trunc:3:1:2");
}

// Brute-force check: a monic polynomial of degree <= 3 over F_p is
// irreducible iff it has no root.
bool has_root(const std::vector<std::uint64_t>& low, std::uint64_t p) {
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t value = 1;  // leading coefficient
    for (std::size_t i = low.size(); i-- > 0;) value = (value * x + low[i]) % p;
    if (value == 0) return true;
  }
  return false;
}

TEST(MakeRingTest, DefaultPolynomialIsSmallestIrreducible) {
  for (std::uint64_t p : {3u, 5u, 7u, 11u}) {
    for (unsigned r : {2u, 3u}) {
      const auto poly = make_ring("gr:" + std::to_string(p) + "^1:" + std::to_string(r))->defining_poly();
      ASSERT_EQ(poly.size(), r);
      EXPECT_FALSE(has_root(poly, p));
      // Every smaller candidate (constant term most significant) has a root.
      std::uint64_t index = 0;
      for (std::uint64_t c : poly) index = index * p + c;
      for (std::uint64_t smaller = 0; smaller < index; ++smaller) {
        std::vector<std::uint64_t> cand(r);
        std::uint64_t rest = smaller;
        for (unsigned i = r; i-- > 0;) {
          cand[i] = rest % p;
          rest /= p;
        }
        EXPECT_TRUE(has_root(cand, p)) << "p=" << p << " r=" << r;
      }
    }
  }
  EXPECT_EQ(make_ring("gr:3^2:2")->defining_poly(), (std::vector<std::uint64_t>{1, 0}));  // x^2 + 1
}

TEST(ArithmeticTest, ZmodExamples) {
  const Ring z9 = make_ring("zmod:3^2");
  EXPECT_EQ(E(z9, 5) + E(z9, 7), E(z9, 3));
  EXPECT_EQ(E(z9, 5) * E(z9, 7), E(z9, 8));
  EXPECT_EQ(E(z9, 2) - E(z9, 7), E(z9, 4));
  EXPECT_EQ(-E(z9, 2), E(z9, 7));
  EXPECT_EQ(-E(z9, 0), E(z9, 0));
}

TEST(ArithmeticTest, GaloisXSquaredReducesByDefiningPolynomial) {
  const Ring gr = make_ring("gr:3^2:2");
  const std::vector<std::uint64_t> x{0, 1};
  const Element ex = gr->from_coeffs(x);
  const auto expected = testing::naive_block_mul(x, x, gr->defining_poly(), 9);
  EXPECT_EQ(key(ex * ex), expected);
  EXPECT_EQ(key(ex * ex), (std::vector<std::uint64_t>{8, 0}));  // x^2 = -1
}

TEST(ArithmeticTest, MultiplicationMatchesSchoolbookOracle) {
  std::mt19937_64 rng(7);
  for (const char* spec : {"gr:3^2:3", "gr:5^3:2", "gr:3^2:2:2,1", "trunc:3:2:3", "trunc:5:1:4", "trunc:7:3:2"}) {
    const Ring ring = make_ring(spec);
    for (int trial = 0; trial < 300; ++trial) {
      const Element a = ring->from_index(rng() % ring->card_R());
      const Element b = ring->from_index(rng() % ring->card_R());
      const std::vector<std::uint64_t> expected =
          ring->family() == RingFamily::kGalois
              ? testing::naive_block_mul(key(a), key(b), ring->defining_poly(), ring->coefficient_modulus())
              : testing::naive_trunc_mul(key(a), key(b), ring->defining_poly(), ring->p(), ring->truncation());
      ASSERT_EQ(key(a * b), expected) << spec << ' ' << a << " * " << b;
    }
  }
}

TEST(ArithmeticTest, RingAxiomsOnRandomTriples) {
  std::mt19937_64 rng(11);
  for (const char* spec : {"zmod:3^3", "gr:3^2:2", "trunc:5:2:2", "zmod:1000003^1"}) {
    const Ring ring = make_ring(spec);
    for (int trial = 0; trial < 200; ++trial) {
      const Element a = ring->from_index(rng() % ring->card_R());
      const Element b = ring->from_index(rng() % ring->card_R());
      const Element c = ring->from_index(rng() % ring->card_R());
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a - a, ring->zero());
      EXPECT_EQ(a * ring->one(), a);
    }
  }
}

TEST(ArithmeticTest, MismatchedContextsThrow) {
  const Ring a = make_ring("zmod:3^2");
  const Ring b = make_ring("zmod:3^2");
  EXPECT_THROW(a->one() + b->one(), MismatchError);
  EXPECT_THROW(a->mul(a->one(), b->one()), MismatchError);
  EXPECT_THROW(Element() + a->one(), MismatchError);
}

TEST(ArithmeticTest, IndexRoundTripFollowsEnumerationOrder) {
  const Ring tr = make_ring("trunc:3:2:2");
  for (std::uint64_t i = 0; i < tr->card_R(); ++i) {
    const Element e = tr->from_index(i);
    EXPECT_EQ(tr->index_of(e), i);
    if (i > 0) {
      EXPECT_TRUE(tr->from_index(i - 1) < e);
    }
  }
  EXPECT_EQ(key(tr->from_index(1)), (std::vector<std::uint64_t>{0, 0, 0, 1}));
}

TEST(UnitTest, UnitsAreResidueNonzero) {
  const Ring z9 = make_ring("zmod:3^2");
  EXPECT_TRUE(is_unit(E(z9, 2)));
  EXPECT_FALSE(is_unit(E(z9, 3)));
  EXPECT_FALSE(is_unit(E(z9, 0)));
  for (std::int64_t v = 0; v < 9; ++v) EXPECT_EQ(is_unit(E(z9, v)), std::gcd(v, std::int64_t{9}) == 1);

  // An element is a unit iff it has a multiplicative inverse.
  for (const char* spec : {"gr:3^2:2", "trunc:3:2:2"}) {
    const Ring ring = make_ring(spec);
    for (const Element& a : ring->elements()) {
      bool invertible = false;
      for (const Element& b : ring->elements()) invertible = invertible || a * b == ring->one();
      EXPECT_EQ(is_unit(a), invertible) << spec << ' ' << a;
    }
  }
}

TEST(UnitTest, InverseMatchesExhaustiveSearch) {
  const Ring z9 = make_ring("zmod:3^2");
  EXPECT_EQ(inv(E(z9, 2)), E(z9, 5));
  EXPECT_EQ(inv(E(z9, 7)), E(z9, 4));
  EXPECT_EQ(inv(z9->one()), z9->one());
  EXPECT_THROW(inv(E(z9, 3)), DomainError);

  for (const char* spec : {"zmod:3^3", "gr:3^2:2", "trunc:5:1:3"}) {
    const Ring ring = make_ring(spec);
    for (const Element& u : ring->units()) EXPECT_EQ(u * inv(u), ring->one());
  }
}

TEST(UnitTest, UnitPlusMaximalIdealIsUnit) {
  for (const char* spec : {"zmod:3^3", "gr:3^2:2", "trunc:3:2:2", "zmod:5^2"}) {
    const Ring ring = make_ring(spec);
    std::vector<Element> ideal;
    for (const Element& a : ring->elements()) {
      if (!is_unit(a)) ideal.push_back(a);
    }
    ASSERT_EQ(ideal.size(), ring->card_M());
    for (const Element& u : ring->units()) {
      for (const Element& m : ideal) ASSERT_TRUE(is_unit(u + m)) << spec;
    }
  }
}

TEST(SquareTest, IsSquareUnitMatchesEnumeratedSquares) {
  const Ring z9 = make_ring("zmod:3^2");
  EXPECT_TRUE(is_square_unit(E(z9, 4)));
  EXPECT_FALSE(is_square_unit(E(z9, 2)));
  EXPECT_TRUE(is_square_unit(z9->one()));
  EXPECT_THROW(is_square_unit(E(z9, 3)), DomainError);
  EXPECT_EQ(unit_squares(*z9), (std::set<std::vector<std::uint64_t>>{{1}, {4}, {7}}));

  for (const std::string& spec : testing::ring_specs_up_to(243)) {
    const Ring ring = make_ring(spec);
    const auto squares = unit_squares(*ring);
    EXPECT_EQ(squares.size() * 2, ring->card_units()) << spec;
    for (const Element& u : ring->units()) {
      EXPECT_EQ(is_square_unit(u), squares.count(key(u)) == 1) << spec << ' ' << u;
    }
  }
}

TEST(SquareTest, OnlyPlusMinusOneSquareToOne) {
  for (const std::string& spec : testing::ring_specs_up_to(243)) {
    const Ring ring = make_ring(spec);
    std::vector<Element> roots;
    for (const Element& u : ring->units()) {
      if (u * u == ring->one()) roots.push_back(u);
    }
    ASSERT_EQ(roots.size(), 2u) << spec;
    EXPECT_EQ(roots[0], ring->one());
    EXPECT_EQ(roots[1], -ring->one());
  }
}

TEST(SquareTest, SqrtUnitExamples) {
  const Ring z9 = make_ring("zmod:3^2");
  EXPECT_EQ(sqrt_unit(E(z9, 7)), E(z9, 4));
  EXPECT_EQ(sqrt_unit(z9->one()), z9->one());
  const Ring z5 = make_ring("zmod:5^1");
  EXPECT_EQ(sqrt_unit(E(z5, 4)), E(z5, 2));
  EXPECT_THROW(sqrt_unit(E(z9, 2)), DomainError);
  EXPECT_THROW(sqrt_unit(E(z9, 0)), DomainError);
}

TEST(SquareTest, SqrtUnitIsTheSmallerRootExhaustively) {
  for (const char* spec : {"zmod:3^3", "zmod:7^2", "gr:3^2:2", "gr:5^1:3", "trunc:3:2:2", "trunc:5:1:3", "zmod:13^1"}) {
    const Ring ring = make_ring(spec);
    for (const Element& s : ring->units()) {
      if (!is_square_unit(s)) continue;
      std::vector<Element> roots;
      for (const Element& w : ring->units()) {
        if (w * w == s) roots.push_back(w);
      }
      ASSERT_EQ(roots.size(), 2u);
      EXPECT_EQ(sqrt_unit(s), roots.front()) << spec << ' ' << s;  // units() is in canonical order
    }
  }
}

TEST(SquareTest, SqrtUnitOnLargeRings) {
  std::mt19937_64 rng(3);
  for (const char* spec : {"zmod:1000003^1", "zmod:3^30", "gr:101^3:2", "trunc:10007:1:3", "zmod:65537^2"}) {
    const Ring ring = make_ring(spec);
    for (int trial = 0; trial < 50; ++trial) {
      Element w = ring->from_index(rng() % ring->card_R());
      if (!is_unit(w)) continue;
      const Element s = w * w;
      const Element root = sqrt_unit(s);
      EXPECT_EQ(root * root, s) << spec;
      EXPECT_TRUE(root == w || root == -w);
    }
  }
}

TEST(NonsquareTest, CanonicalNonsquareIsSmallestNonsquareUnit) {
  const Ring z3 = make_ring("zmod:3^1");
  EXPECT_EQ(canonical_nonsquare(*z3), E(z3, 2));
  const Ring z9 = make_ring("zmod:3^2");
  EXPECT_EQ(canonical_nonsquare(*z9), E(z9, 2));
  const Ring z5 = make_ring("zmod:5^1");
  EXPECT_EQ(canonical_nonsquare(*z5), E(z5, 2));

  for (const std::string& spec : testing::ring_specs_up_to(243)) {
    const Ring ring = make_ring(spec);
    const auto squares = unit_squares(*ring);
    for (const Element& u : ring->units()) {
      if (squares.count(key(u)) == 0) {
        EXPECT_EQ(ring->z(), u) << spec;
        break;
      }
    }
  }
}

TEST(ScaleToTest, Examples) {
  const Ring z9 = make_ring("zmod:3^2");
  EXPECT_EQ(scale_to(E(z9, 1), E(z9, 3)), E(z9, 4));
  EXPECT_EQ(scale_to(E(z9, 2), E(z9, 3)), E(z9, 7));
  EXPECT_EQ(scale_to(E(z9, 5), E(z9, 0)), z9->one());
  EXPECT_THROW(scale_to(E(z9, 3), E(z9, 3)), DomainError);
  EXPECT_THROW(scale_to(E(z9, 1), E(z9, 1)), DomainError);
}

TEST(ScaleToTest, ContractHoldsExhaustively) {
  for (const char* spec : {"zmod:3^3", "gr:3^2:2", "trunc:3:1:3"}) {
    const Ring ring = make_ring(spec);
    for (const Element& u : ring->units()) {
      for (const Element& a : ring->elements()) {
        if (is_unit(a)) continue;
        const Element c = scale_to(u, a);
        ASSERT_TRUE(is_unit(c));
        ASSERT_EQ(c * c * (u + a), u) << spec << " u=" << u << " a=" << a;
      }
    }
  }
}

TEST(DecomposeTest, Examples) {
  const Ring z3 = make_ring("zmod:3^1");
  auto [x3, y3] = decompose_nonsquare(E(z3, 2));
  EXPECT_EQ(x3, E(z3, 1));
  EXPECT_EQ(y3, E(z3, 1));

  const Ring z9 = make_ring("zmod:3^2");
  auto [x, y] = decompose_nonsquare(E(z9, 2));
  EXPECT_EQ(x, E(z9, 1));
  EXPECT_EQ(y, E(z9, 1));
  auto [x5, y5] = decompose_nonsquare(E(z9, 5));
  EXPECT_EQ(x5, E(z9, 1));
  EXPECT_EQ(y5, E(z9, 4));

  EXPECT_THROW(decompose_nonsquare(E(z9, 4)), DomainError);
  const Ring z5 = make_ring("zmod:5^1");
  EXPECT_THROW(decompose_nonsquare(E(z5, 2)), DomainError);  // -1 = 2^2
}

TEST(DecomposeTest, ContractWhenMinusOneIsNonsquare) {
  for (const std::string& spec : testing::ring_specs_up_to(243)) {
    const Ring ring = make_ring(spec);
    if (ring->minus_one_is_square()) continue;
    for (const Element& u : ring->units()) EXPECT_TRUE(is_unit(ring->one() + u * u)) << spec;
    for (const Element& zz : ring->units()) {
      if (is_square_unit(zz)) continue;
      const auto [x, y] = decompose_nonsquare(zz);
      ASSERT_TRUE(is_unit(x) && is_unit(y));
      EXPECT_EQ((ring->one() + x * x) * y * y, zz) << spec;
    }
  }
}

TEST(DeterminismTest, IndependentContextsAgree) {
  for (const char* spec : {"gr:3^2:2", "trunc:5:2:2", "zmod:7^3"}) {
    const Ring a = make_ring(spec);
    const Ring b = make_ring(spec);
    EXPECT_EQ(key(a->z()), key(b->z()));
    for (std::uint64_t i = 0; i < a->card_R(); i += 7) {
      const Element ea = a->from_index(i);
      if (!is_unit(ea) || !is_square_unit(ea)) continue;
      EXPECT_EQ(key(sqrt_unit(ea)), key(sqrt_unit(b->from_index(i))));
    }
  }
}

TEST(ToStringTest, FamilyEncodings) {
  EXPECT_EQ(to_string(make_ring("zmod:3^2")->from_int(5)), "5");
  const Ring gr = make_ring("gr:3^2:2");
  EXPECT_EQ(to_string(gr->from_index(10)), "[1,1]");
  const Ring tr = make_ring("trunc:3:2:2");
  EXPECT_EQ(to_string(tr->from_index(1)), "[[0,0],[0,1]]");
}

}  // namespace
}  // namespace cogredient
