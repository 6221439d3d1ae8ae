#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "tq/error.hpp"
#include "tq/threadquiver.hpp"

using namespace tq;

namespace {

using E = LinearOrderExpr;

ThreadQuiver single_thread(const E& label) {
  ThreadQuiver tq;
  tq.vertices = {"a", "b"};
  tq.threads.push_back({"t", "a", "b", label});
  return tq;
}

ThreadQuiver linear_tq(int n) {
  ThreadQuiver tq;
  for (int k = 1; k <= n; ++k) tq.vertices.push_back("v" + std::to_string(k));
  for (int k = 1; k < n; ++k) tq.standard.push_back({"a" + std::to_string(k), tq.vertices[k - 1], tq.vertices[k]});
  return tq;
}

std::size_t count_marks(const FiniteChain& c, Mark m) {
  return static_cast<std::size_t>(std::count(c.marks.begin(), c.marks.end(), m));
}

void expect_error(ErrorKind kind, const std::function<void()>& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << to_string(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

}  // namespace

TEST(UnderlyingQuiver, Examples) {
  Quiver q = underlying_quiver(tq::testing::fixture("figure_left"));
  EXPECT_EQ(q.vertex_count(), 5);
  EXPECT_EQ(q.arrow_count(), 6);
  EXPECT_EQ(q.arrow(q.arrow_index("t")).src, q.vertex_index("v3"));
  EXPECT_EQ(q.arrow(q.arrow_index("t")).tgt, q.vertex_index("v2"));

  Quiver z = underlying_quiver(single_thread(E::integers()));
  EXPECT_EQ(z.vertex_count(), 2);
  EXPECT_EQ(z.arrow_count(), 1);

  Quiver l = underlying_quiver(linear_tq(3));
  EXPECT_EQ(l.arrow_count(), 2);
}

TEST(Normalize, DoubleArrow) {
  ThreadQuiver tq = single_thread(E::fin(0));
  tq.standard.push_back({"x", "a", "b"});
  ThreadQuiver n = normalize(tq);
  EXPECT_EQ(n.vertices.size(), 4u);
  EXPECT_EQ(n.standard.size(), 3u);
  ASSERT_EQ(n.threads.size(), 1u);
  // the new thread runs between the two fresh vertices
  EXPECT_NE(n.threads[0].src, "a");
  EXPECT_NE(n.threads[0].tgt, "b");
  Quiver q = underlying_quiver(n);
  EXPECT_EQ(tq::testing::count_paths(q, q.vertex_index("a"), q.vertex_index("b")), 2u);
}

TEST(Normalize, NoThreadsIsIdentity) {
  ThreadQuiver tq = tq::testing::fixture("square");
  EXPECT_EQ(normalize(tq), tq);
}

TEST(Normalize, EmptyLabelGivesFourVertexChain) {
  ThreadQuiver n = normalize(single_thread(E::fin(0)));
  EXPECT_EQ(n.vertices.size(), 4u);
  Quiver q = underlying_quiver(n);
  EXPECT_EQ(q.arrow_count(), 3);
  for (int v = 0; v < q.vertex_count(); ++v) {
    EXPECT_LE(q.out_arrows(v).size(), 1u);
    EXPECT_LE(q.in_arrows(v).size(), 1u);
  }
  EXPECT_EQ(tq::testing::count_paths(q, q.vertex_index("a"), q.vertex_index("b")), 1u);
}

TEST(Normalize, RelationsRewritten) {
  ThreadQuiver tq = single_thread(E::fin(2));
  tq.vertices.push_back("c");
  tq.standard.push_back({"x", "b", "c"});
  NamedRelation r;
  r.terms.push_back({Scalar(1), {"t", "x"}});
  tq.relations.push_back(r);
  ThreadQuiver n = normalize(tq);
  ASSERT_EQ(n.relations.size(), 1u);
  const auto& word = n.relations[0].terms[0].second;
  ASSERT_EQ(word.size(), 4u);
  EXPECT_EQ(word[1], "t");
  EXPECT_EQ(word[3], "x");
}

TEST(Expand, ChainCounts) {
  for (int d = 0; d <= 3; ++d) {
    const std::size_t n = 4 * d + 3;
    Window a = expand(tq::testing::fixture("thread_1"), d);
    Window b = expand(tq::testing::fixture("thread_empty2"), d);
    EXPECT_EQ(static_cast<std::size_t>(a.quiver.vertex_count()), n);
    EXPECT_EQ(static_cast<std::size_t>(b.quiver.vertex_count()), n);
    EXPECT_EQ(a.quiver.arrow_count(), static_cast<int>(n) - 1);
  }
}

TEST(Expand, EmbeddingsMatchTruncation) {
  for (const auto& name : tq::testing::thread_quiver_fixtures()) {
    ThreadQuiver tq = tq::testing::fixture(name);
    for (int d = 0; d <= 2; ++d) {
      Window w = expand(tq, d);
      std::size_t nb = std::count(w.boundary.begin(), w.boundary.end(), true);
      std::size_t expected_vertices = tq.vertices.size(), expected_boundary = 0;
      for (std::size_t t = 0; t < tq.threads.size(); ++t) {
        const FiniteChain c = truncate(thread_order(tq.threads[t].label), d);
        expected_vertices += c.size() - 2;
        expected_boundary += count_marks(c, Mark::CutAdjacent);
        ASSERT_EQ(w.embed_t[t].size(), c.size());
        EXPECT_EQ(w.quiver.vertex(w.embed_t[t].front()), tq.threads[t].src);
        EXPECT_EQ(w.quiver.vertex(w.embed_t[t].back()), tq.threads[t].tgt);
      }
      EXPECT_EQ(static_cast<std::size_t>(w.quiver.vertex_count()), expected_vertices) << name << " d=" << d;
      EXPECT_EQ(nb, expected_boundary) << name << " d=" << d;
    }
  }
}

TEST(Expand, NonAcyclicRejected) {
  ThreadQuiver tq;
  tq.vertices = {"a", "b"};
  tq.standard.push_back({"x", "a", "b"});
  tq.threads.push_back({"t", "b", "a", E::fin(1)});
  expect_error(ErrorKind::NonAcyclic, [&] { expand(tq, 1); });
}

TEST(Validate, Errors) {
  ThreadQuiver dup = linear_tq(2);
  dup.standard.push_back({"v1", "v1", "v2"});
  expect_error(ErrorKind::DuplicateName, [&] { dup.validate(); });
  ThreadQuiver unk = linear_tq(2);
  unk.standard.push_back({"y", "v1", "nowhere"});
  expect_error(ErrorKind::UnknownVertex, [&] { unk.validate(); });
  ThreadQuiver nested = single_thread(thread_order(E::fin(0)));
  expect_error(ErrorKind::NestedThreadLabel, [&] { nested.validate(); });
}

TEST(WindowIso, Examples) {
  for (int d = 0; d <= 2; ++d)
    EXPECT_TRUE(window_iso(expand(tq::testing::fixture("thread_1"), d), expand(tq::testing::fixture("thread_empty2"), d)));
  for (const auto& name : tq::testing::all_fixtures()) {
    Window w = expand(tq::testing::fixture(name), 1);
    EXPECT_TRUE(window_iso(w, w)) << name;
  }
  EXPECT_FALSE(window_iso(expand(linear_tq(2), 0), expand(linear_tq(3), 0)));
  // same size, different relations
  Window sq = expand(tq::testing::fixture("square"), 0);
  ThreadQuiver free_sq = tq::testing::fixture("square");
  free_sq.relations.clear();
  EXPECT_FALSE(window_iso(sq, expand(free_sq, 0)));
}

TEST(WindowIso, TooLarge) {
  Window w = expand(single_thread(E::integers()), 4);
  ASSERT_GT(w.quiver.vertex_count(), kWindowIsoLimit);
  expect_error(ErrorKind::TooLarge, [&] { window_iso(w, w); });
}

TEST(ThreadQuiverProperties, ChainHomIsOne) {
  for (const auto& name : tq::testing::thread_quiver_fixtures()) {
    ThreadQuiver tq = tq::testing::fixture(name);
    for (int d = 0; d <= 2; ++d) {
      Window w = expand(tq, d);
      CategoryPtr c = w.category();
      for (const auto& chain : w.embed_t)
        for (std::size_t i = 0; i < chain.size(); ++i)
          for (std::size_t j = i; j < chain.size(); ++j) {
            // the endpoints may carry parallel standard arrows
            if (i == 0 && j + 1 == chain.size()) continue;
            EXPECT_EQ(c->dim(chain[i], chain[j]), 1u) << name << " d=" << d;
            if (j > i) EXPECT_EQ(c->dim(chain[j], chain[i]), 0u);
          }
    }
  }
}

TEST(ThreadQuiverProperties, EmptyLabelNormalizeShiftsDepth) {
  for (const auto& name : {"thread_empty", "thread_empty2"}) {
    ThreadQuiver tq = tq::testing::fixture(name);
    for (int d = 1; d <= 3; ++d) EXPECT_TRUE(window_iso(expand(tq, d), expand(normalize(tq), d - 1))) << name << " " << d;
  }
}

TEST(ThreadQuiverProperties, NormalizeKeepsEndpointsChained) {
  // non-empty labels: both sides are still single chains between the same endpoints
  for (const auto& name : {"thread_z", "thread_3", "thread_1"}) {
    ThreadQuiver tq = tq::testing::fixture(name);
    Window a = expand(tq, 1), b = expand(normalize(tq), 1);
    for (const Window* w : {&a, &b}) {
      const Quiver& q = w->quiver;
      EXPECT_EQ(tq::testing::count_paths(q, q.vertex_index("a"), q.vertex_index("b")), 1u) << name;
      EXPECT_EQ(q.arrow_count(), q.vertex_count() - 1);
    }
  }
}

TEST(ThreadQuiverProperties, Monotone) {
  for (const auto& name : tq::testing::thread_quiver_fixtures()) {
    ThreadQuiver tq = tq::testing::fixture(name);
    for (int d = 0; d <= 2; ++d) {
      Window a = expand(tq, d), b = expand(tq, d + 1);
      for (int v = 0; v < a.quiver.vertex_count(); ++v)
        EXPECT_TRUE(b.quiver.find_vertex(a.quiver.vertex(v)).has_value()) << name << " " << a.quiver.vertex(v);
      for (std::size_t t = 0; t < a.embed_t.size(); ++t)
        for (std::size_t k = 0; k < a.embed_t[t].size(); ++k) {
          auto pos = b.chains[t].find(a.chains[t].elements[k]);
          ASSERT_TRUE(pos.has_value());
          EXPECT_EQ(b.quiver.vertex(b.embed_t[t][*pos]), a.quiver.vertex(a.embed_t[t][k]));
        }
    }
  }
}

TEST(ThreadQuiverProperties, IsoUnderReordering) {
  std::mt19937_64 rng(23);
  for (const auto& name : tq::testing::all_fixtures()) {
    ThreadQuiver tq = tq::testing::fixture(name);
    ThreadQuiver shuffled = tq;
    std::shuffle(shuffled.vertices.begin(), shuffled.vertices.end(), rng);
    std::shuffle(shuffled.standard.begin(), shuffled.standard.end(), rng);
    std::shuffle(shuffled.threads.begin(), shuffled.threads.end(), rng);
    EXPECT_TRUE(window_iso(expand(tq, 1), expand(shuffled, 1))) << name;
  }
}
