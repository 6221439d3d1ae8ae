#include <gtest/gtest.h>

#include <random>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "tq/error.hpp"
#include "tq/quiver.hpp"

using namespace tq;

namespace {

Quiver linear(int n) {
  Quiver q;
  for (int k = 1; k <= n; ++k) q.add_vertex(std::to_string(k));
  for (int k = 1; k < n; ++k) q.add_arrow("a" + std::to_string(k), k - 1, k);
  return q;
}

Quiver square() {
  Quiver q;
  for (auto v : {"a", "b", "c", "d"}) q.add_vertex(v);
  q.add_arrow("x", "a", "b");
  q.add_arrow("y", "b", "d");
  q.add_arrow("z", "a", "c");
  q.add_arrow("w", "c", "d");
  return q;
}

Quiver random_dag(std::mt19937_64& rng, int n, const std::string& prefix = "") {
  Quiver q;
  for (int v = 0; v < n; ++v) q.add_vertex(prefix + "v" + std::to_string(v));
  int k = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      for (int m = static_cast<int>(rng() % 4); m >= 2; --m) q.add_arrow(prefix + "e" + std::to_string(k++), u, v);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() % 3 == 0) q.add_arrow(prefix + "e" + std::to_string(k++), u, v);
  return q;
}

}  // namespace

TEST(Quiver, StronglyLocallyFinite) {
  EXPECT_TRUE(is_strongly_locally_finite(linear(2)));
  Quiver loop;
  loop.add_vertex("a");
  loop.add_arrow("l", "a", "a");
  EXPECT_FALSE(is_strongly_locally_finite(loop));
  Quiver two;
  two.add_vertex("a");
  two.add_vertex("b");
  two.add_arrow("f", "a", "b");
  two.add_arrow("g", "b", "a");
  EXPECT_FALSE(is_strongly_locally_finite(two));
}

TEST(Quiver, EnumeratePaths) {
  EXPECT_EQ(enumerate_paths(linear(2), 0, 1, 5).size(), 1u);
  auto p = enumerate_paths(linear(3), 0, 2, 5);
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p[0].length(), 2u);
  Quiver s = square();
  auto sp = enumerate_paths(s, 0, 3, 5);
  ASSERT_EQ(sp.size(), 2u);
  // same length, so arrow names decide: (x, y) before (z, w)
  EXPECT_EQ(path_str(s, sp[0]), path_str(s, make_path(s, {s.arrow_index("x"), s.arrow_index("y")})));
  EXPECT_EQ(enumerate_paths(linear(3), 0, 2, 1).size(), 0u);
}

TEST(Quiver, HomBasisExamples) {
  EXPECT_EQ(hom_basis_paths(linear(2), {}, 0, 1).dimension, 1u);
  Quiver a3 = linear(3);
  Relation r;
  r.terms.push_back({Scalar(1), make_path(a3, {0, 1})});
  EXPECT_EQ(hom_basis_paths(a3, {r}, 0, 2).dimension, 0u);
  EXPECT_EQ(hom_basis_paths(a3, {}, 0, 2).dimension, 1u);
  EXPECT_EQ(hom_basis_paths(a3, {r}, 0, 1).dimension, 1u);
}

TEST(Quiver, CommutativeSquare) {
  Quiver s = square();
  Relation r;
  r.terms.push_back({Scalar(1), make_path(s, {s.arrow_index("x"), s.arrow_index("y")})});
  r.terms.push_back({Scalar(-1), make_path(s, {s.arrow_index("z"), s.arrow_index("w")})});
  HomPaths h = hom_basis_paths(s, {r}, 0, 3);
  EXPECT_EQ(h.dimension, 1u);
  EXPECT_EQ(h.coordinates(h.paths[0]), h.coordinates(h.paths[1]));
}

TEST(Quiver, ZigZagZeroComposites) {
  Window w = tq::testing::zigzag_window();
  CategoryPtr c = w.category();
  const Quiver& q = w.quiver;
  for (int x = 0; x < q.vertex_count(); ++x)
    for (int y = 0; y < q.vertex_count(); ++y)
      for (const auto& p : enumerate_paths(q, x, y, 5))
        if (p.length() >= 2) EXPECT_EQ(c->dim(x, y), 0u);
  const int a20 = c->index("a2_0"), a22 = c->index("a2_2");
  EXPECT_EQ(c->dim(a20, a22), 0u);
  EXPECT_EQ(c->dim(a20, c->index("a2_1")), 1u);
}

TEST(Quiver, NonAcyclicRejected) {
  Quiver two;
  two.add_vertex("a");
  two.add_vertex("b");
  two.add_arrow("f", "a", "b");
  two.add_arrow("g", "b", "a");
  try {
    hom_basis_paths(two, {}, 0, 1);
    FAIL() << "expected NonAcyclic";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonAcyclic);
  }
}

TEST(QuiverProperties, RelationFreeDimensionCountsPaths) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    Quiver q = random_dag(rng, 2 + static_cast<int>(rng() % 5));
    for (int x = 0; x < q.vertex_count(); ++x)
      for (int y = 0; y < q.vertex_count(); ++y)
        EXPECT_EQ(hom_basis_paths(q, {}, x, y).dimension, tq::testing::count_paths(q, x, y));
  }
}

TEST(QuiverProperties, IdentitySurvivesAndRenamingInvariant) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const std::uint64_t seed = rng();
    std::mt19937_64 r1(seed), r2(seed);
    Quiver a = random_dag(r1, 5), b = random_dag(r2, 5, "renamed_");
    // zero relation on every length-2 path
    std::vector<Relation> ra, rb;
    for (int u = 0; u < a.arrow_count(); ++u)
      for (int v : a.out_arrows(a.arrow(u).tgt)) {
        Relation x, y;
        x.terms.push_back({Scalar(1), make_path(a, {u, v})});
        y.terms.push_back({Scalar(1), make_path(b, {u, v})});
        ra.push_back(x);
        rb.push_back(y);
      }
    for (int x = 0; x < 5; ++x) {
      EXPECT_GE(hom_basis_paths(a, ra, x, x).dimension, 1u);
      for (int y = 0; y < 5; ++y)
        EXPECT_EQ(hom_basis_paths(a, ra, x, y).dimension, hom_basis_paths(b, rb, x, y).dimension);
    }
  }
}
