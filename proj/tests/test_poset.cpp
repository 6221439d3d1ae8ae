#include <gtest/gtest.h>

#include <set>

#include "tq/error.hpp"
#include "tq/poset.hpp"

using namespace tq;

namespace {

using E = LinearOrderExpr;

std::size_t interior_count(const FiniteChain& c) {
  std::size_t n = 0;
  for (Mark m : c.marks) n += m == Mark::Interior;
  return n;
}

// Depth-d elements survive at depth d + 1 in the same relative order.
void expect_monotone(const E& e, int d) {
  const FiniteChain a = truncate(e, d), b = truncate(e, d + 1);
  std::size_t last = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto j = b.find(a.elements[i]);
    ASSERT_TRUE(j.has_value()) << e.str() << " depth " << d << ": " << a.elements[i];
    if (i > 0) EXPECT_GT(*j, last);
    last = *j;
  }
}

std::vector<E> sample_orders() {
  return {E::fin(0),
          E::fin(3),
          E::nat(),
          E::neg_nat(),
          E::integers(),
          E::concat(E::nat(), E::neg_nat()),
          E::concat(E::fin(2), E::integers()),
          E::concat(E::concat(E::nat(), E::fin(1)), E::neg_nat())};
}

}  // namespace

TEST(Truncate, Examples) {
  FiniteChain a = truncate(E::concat(E::nat(), E::neg_nat()), 1);
  EXPECT_EQ(a.size(), 4u);
  EXPECT_EQ(truncate(E::concat(E::fin(1), E::fin(2)), 5).size(), 3u);
  EXPECT_EQ(truncate(E::fin(3), 7).size(), 3u);
  EXPECT_EQ(interior_count(truncate(E::fin(3), 7)), 3u);

  FiniteChain z = truncate(E::integers(), 1);
  ASSERT_EQ(z.size(), 3u);
  EXPECT_EQ(z.marks.front(), Mark::CutAdjacent);
  EXPECT_EQ(z.marks[1], Mark::Interior);
  EXPECT_EQ(z.marks.back(), Mark::CutAdjacent);
  EXPECT_TRUE(z.cut_before.front());
  EXPECT_FALSE(z.cut_after.front());
  EXPECT_TRUE(z.cut_after.back());
}

TEST(Truncate, NatKeepsItsMinimum) {
  FiniteChain n = truncate(E::nat(), 2);
  ASSERT_EQ(n.size(), 3u);
  EXPECT_EQ(n.marks.front(), Mark::Interior);
  EXPECT_TRUE(n.cut_after.back());
  FiniteChain m = truncate(E::neg_nat(), 2);
  ASSERT_EQ(m.size(), 3u);
  EXPECT_EQ(m.marks.back(), Mark::Interior);
  EXPECT_TRUE(m.cut_before.front());
}

TEST(Truncate, ConcatWithEmptyIsNeutral) {
  for (const E& p : sample_orders())
    for (int d = 0; d <= 3; ++d) {
      FiniteChain a = truncate(p, d), b = truncate(E::concat(E::fin(0), p), d);
      EXPECT_EQ(a.size(), b.size());
      EXPECT_EQ(a.marks, b.marks);
      EXPECT_EQ(a.cut_before, b.cut_before);
      EXPECT_EQ(a.cut_after, b.cut_after);
    }
}

TEST(ThreadOrder, Sizes) {
  for (int d = 0; d <= 4; ++d) {
    EXPECT_EQ(truncate(thread_order(E::fin(0)), d).size(), static_cast<std::size_t>(2 * d + 2));
    EXPECT_EQ(truncate(thread_order(E::fin(1)), d).size(), static_cast<std::size_t>(4 * d + 3));
  }
  for (int m = 0; m <= 4; ++m) EXPECT_EQ(truncate(thread_order(E::fin(m)), 0).size(), static_cast<std::size_t>(m + 2));
  FiniteChain c = truncate(thread_order(E::fin(1)), 1);
  ASSERT_EQ(c.size(), 7u);
  EXPECT_EQ(c.marks.front(), Mark::Interior);
  EXPECT_EQ(c.marks.back(), Mark::Interior);
}

TEST(ThreadOrder, NestedThrows) {
  try {
    thread_order(thread_order(E::fin(1)));
    FAIL() << "expected NestedThread";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NestedThread);
  }
  EXPECT_THROW(thread_order(E::concat(E::nat(), thread_order(E::fin(0)))), Error);
}

TEST(Neighbors, Examples) {
  FiniteChain c;
  for (auto s : {"a", "b", "c"}) {
    c.elements.push_back(s);
    c.marks.push_back(Mark::Interior);
    c.cut_before.push_back(false);
    c.cut_after.push_back(false);
  }
  auto [p, s] = neighbors(c, "b");
  EXPECT_EQ(p, std::optional<std::string>("a"));
  EXPECT_EQ(s, std::optional<std::string>("c"));

  FiniteChain t = truncate(thread_order(E::fin(0)), 2);
  auto [p0, s0] = neighbors(t, t.elements.front());
  EXPECT_FALSE(p0.has_value());
  EXPECT_EQ(s0, std::optional<std::string>(t.elements[1]));

  try {
    neighbors(c, "z");
    FAIL() << "expected ElementNotFound";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ElementNotFound);
  }
}

TEST(Str, Spelling) {
  EXPECT_EQ(E::fin(3).str(), "3");
  EXPECT_EQ(E::fin(0).str(), "");
  EXPECT_EQ(E::integers().str(), "Z");
  EXPECT_EQ(E::neg_nat().str(), "-N");
}

TEST(PosetProperties, ThreadOrderSizeFormula) {
  for (int m = 0; m <= 4; ++m)
    for (int d = 0; d <= 4; ++d) {
      const FiniteChain c = truncate(thread_order(E::fin(m)), d);
      EXPECT_EQ(c.size(), static_cast<std::size_t>((d + 1) + m * (2 * d + 1) + (d + 1))) << m << " " << d;
    }
}

TEST(PosetProperties, ThreadOrderHasInteriorEnds) {
  for (const E& p : sample_orders())
    for (int d = 0; d <= 3; ++d) {
      const FiniteChain c = truncate(thread_order(p), d);
      EXPECT_EQ(c.marks.front(), Mark::Interior);
      EXPECT_EQ(c.marks.back(), Mark::Interior);
      EXPECT_FALSE(c.cut_before.front());
      EXPECT_FALSE(c.cut_after.back());
    }
}

TEST(PosetProperties, LabelsUniqueAndMonotone) {
  for (const E& p : sample_orders())
    for (int d = 0; d <= 3; ++d) {
      for (const E& e : {p, thread_order(p)}) {
        const FiniteChain c = truncate(e, d);
        std::set<std::string> seen(c.elements.begin(), c.elements.end());
        EXPECT_EQ(seen.size(), c.size());
        expect_monotone(e, d);
      }
    }
}

TEST(PosetProperties, CutFlagsMatchMarks) {
  for (const E& p : sample_orders())
    for (int d = 0; d <= 3; ++d) {
      const FiniteChain c = truncate(p, d);
      for (std::size_t i = 0; i < c.size(); ++i)
        EXPECT_EQ(c.marks[i] == Mark::CutAdjacent, c.cut_before[i] || c.cut_after[i]);
    }
}
