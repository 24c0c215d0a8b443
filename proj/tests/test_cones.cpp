#include <gtest/gtest.h>

#include "support.hpp"

using namespace toricq;

namespace {

IntVector e(std::size_t n, std::size_t i) { return IntVector::unit(n, i); }

}  // namespace

TEST(Cone, DualOfQuadrantInThreeSpace) {
  const Cone tau1 = Cone::from_generators({e(3, 0), e(3, 1)}, 3);
  const Cone d = tau1.dual();
  EXPECT_EQ(d.rays(), (std::vector<IntVector>{e(3, 1), e(3, 0)}));
  EXPECT_EQ(d.lineality(), Sublattice::from_generators(3, {e(3, 2)}));
  EXPECT_FALSE(d.is_pointed());
  EXPECT_EQ(d.dim(), 3u);
  EXPECT_EQ(d.dual(), tau1);
}

TEST(Cone, CanonicalFormIgnoresRedundancy) {
  const Cone a = Cone::from_generators({IntVector{2, 0}, IntVector{1, 1}, IntVector{0, 3}}, 2);
  const Cone b = Cone::from_generators({IntVector{0, 1}, IntVector{1, 0}}, 2);
  EXPECT_EQ(a, b);
  const Cone line = Cone::from_generators({IntVector{1, 1}, IntVector{-2, -2}, IntVector{0, 1}}, 2);
  EXPECT_EQ(line.lineality().rank(), 1u);
  EXPECT_EQ(line.dim(), 2u);
  EXPECT_EQ(Cone::from_inequalities(std::vector<IntVector>{IntVector{1, 0}, IntVector{0, 1}}, 2), b);
  EXPECT_TRUE(Cone::zero(3).is_zero());
  EXPECT_EQ(Cone::zero(2).dual(), Cone::from_generators({IntVector{1, 0}, IntVector{-1, 0}, IntVector{0, 1}, IntVector{0, -1}}, 2));
}

TEST(Cone, DualMatchesBruteForce) {
  support::rng(21);
  const auto pts = support::box(3, -3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const auto gens = support::random_generators(3, static_cast<std::size_t>(support::uniform(1, 5)), 3);
    const Cone d = Cone::from_generators(gens, 3).dual();
    for (const auto& u : pts) ASSERT_EQ(d.contains(u), support::brute_dual_contains(gens, u)) << u.str();
  }
}

TEST(Cone, MembershipMatchesFourierMotzkin) {
  support::rng(22);
  const auto pts = support::box(3, -3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto gens = support::random_generators(3, static_cast<std::size_t>(support::uniform(1, 4)), 3);
    const Cone c = Cone::from_generators(gens, 3);
    const auto ineqs = support::fourier_motzkin(gens, 3);
    for (const auto& x : pts) ASSERT_EQ(c.contains(x), support::satisfies(ineqs, x)) << c.str() << " " << x.str();
  }
}

TEST(Cone, DualDualRandom) {
  support::rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(support::uniform(1, 4));
    const Cone c = support::random_cone(n, static_cast<std::size_t>(support::uniform(0, 5)), 5);
    ASSERT_EQ(c.dual().dual(), c) << c.str();
  }
}

TEST(Cone, FacesOfSimplicialCone) {
  const Cone delta = Cone::from_generators({e(3, 0), e(3, 1), e(3, 2)}, 3);
  EXPECT_EQ(delta.faces().size(), 8u);
  const Cone square = Cone::from_generators({IntVector{1, 0, 1}, IntVector{0, 1, 1}, IntVector{-1, 0, 1}, IntVector{0, -1, 1}}, 3);
  EXPECT_EQ(square.faces().size(), 10u);
  EXPECT_THROW(Cone::from_generators({e(2, 0), IntVector{-1, 0}}, 2).faces(), Error);
}

TEST(Cone, FaceLatticeClosure) {
  support::rng(24);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = static_cast<std::size_t>(support::uniform(2, 4));
    const Cone c = support::random_pointed_cone(n, static_cast<std::size_t>(support::uniform(1, 5)), 3);
    const auto faces = c.faces();
    const std::set<Cone> all(faces.begin(), faces.end());
    ASSERT_EQ(all.size(), faces.size());
    ASSERT_TRUE(all.count(c));
    ASSERT_TRUE(all.count(Cone::zero(n)));
    for (const auto& f : faces) {
      ASSERT_TRUE(f.is_face_of(c));
      for (const auto& g : f.faces()) ASSERT_TRUE(all.count(g)) << "face of a face";
      for (const auto& g : faces) ASSERT_TRUE(all.count(intersect(f, g))) << "meet of faces";
    }
    for (const auto& r : c.rays()) ASSERT_TRUE(all.count(Cone::from_generators({r}, n)));
    std::size_t facets = 0;
    for (const auto& f : faces) facets += f.dim() + 1 == c.dim();
    ASSERT_EQ(facets, c.dim() == 0 ? 0 : c.facets().size());
  }
}

TEST(Cone, NonFaceDetected) {
  const Cone q = Cone::from_generators({IntVector{1, 0}, IntVector{0, 1}}, 2);
  EXPECT_FALSE(Cone::from_generators({IntVector{1, 1}}, 2).is_face_of(q));
  EXPECT_TRUE(Cone::from_generators({IntVector{1, 0}}, 2).is_face_of(q));
}

TEST(Cone, ClassifyConsistent) {
  support::rng(25);
  const auto pts = support::box(3, -2, 2);
  for (int trial = 0; trial < 40; ++trial) {
    const Cone c = support::random_pointed_cone(3, static_cast<std::size_t>(support::uniform(1, 4)), 3);
    for (const auto& v : pts) {
      const auto k = c.classify(v);
      switch (k.kind) {
        case PointClassification::Kind::Outside: ASSERT_FALSE(c.contains(v)); break;
        case PointClassification::Kind::Relint: ASSERT_TRUE(c.relint_contains(v)); break;
        case PointClassification::Kind::OnFace:
          ASSERT_TRUE(c.contains(v));
          ASSERT_FALSE(c.relint_contains(v));
          ASSERT_EQ(k.face.size(), 1u);
          ASSERT_TRUE(k.face.front().relint_contains(v));
          ASSERT_TRUE(k.face.front().is_face_of(c));
          break;
      }
    }
    ASSERT_TRUE(c.relint_contains(c.relint_point()));
  }
}

TEST(Semigroup, KnownBases) {
  const auto hb = semigroup_generators(Cone::from_generators({IntVector{1, 0}, IntVector{1, 2}}, 2));
  EXPECT_EQ(hb, (std::vector<IntVector>{IntVector{1, 0}, IntVector{1, 1}, IntVector{1, 2}}));
  const auto hb2 = semigroup_generators(Cone::from_generators({IntVector{0, 1}, IntVector{3, -2}}, 2));
  EXPECT_EQ(hb2.size(), 4u);
  const auto lin = semigroup_generators(Cone::from_generators({e(3, 0), e(3, 1)}, 3).dual());
  EXPECT_EQ(lin, (std::vector<IntVector>{IntVector{0, 0, -1}, IntVector{0, 0, 1}, IntVector{0, 1, 0}, IntVector{1, 0, 0}}));
}

TEST(Semigroup, CompletenessAgainstBox) {
  support::rng(26);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = static_cast<std::size_t>(support::uniform(2, 3));
    const Cone c = support::random_pointed_cone(n, static_cast<std::size_t>(support::uniform(1, 4)), 3);
    const auto gens = semigroup_generators(c);
    std::set<IntVector> yes, no;
    for (const auto& g : gens) ASSERT_TRUE(c.contains(g));
    for (const auto& x : support::box(n, -4, 4)) {
      if (!c.contains(x)) continue;
      ASSERT_TRUE(support::representable(x, gens, c, yes, no)) << c.str() << " misses " << x.str();
    }
    for (const auto& g : gens)
      for (const auto& x : support::box(n, -4, 4))
        if (!x.is_zero() && x != g && c.contains(x)) {
          ASSERT_FALSE(c.contains(g - x)) << g.str() << " decomposes";
        }
  }
}

TEST(Cone, ImageAndIntersection) {
  support::rng(27);
  const auto pts = support::box(2, -3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto gens = support::random_generators(3, 3, 3);
    const Cone c = Cone::from_generators(gens, 3);
    const IntMatrix p = support::random_matrix(2, 3, -2, 2);
    const Cone img = image_cone(p, c);
    std::vector<IntVector> mapped;
    for (const auto& g : gens) mapped.push_back(p * g);
    ASSERT_EQ(img, Cone::from_generators(mapped, 2));
    for (const auto& g : gens) ASSERT_TRUE(img.contains(p * g));
    const Cone a = support::random_cone(2, 2, 3), b = support::random_cone(2, 2, 3);
    const Cone ab = intersect(a, b);
    for (const auto& x : pts) ASSERT_EQ(ab.contains(x), a.contains(x) && b.contains(x));
  }
}
