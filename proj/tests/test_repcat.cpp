#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "tq/error.hpp"
#include "tq/functor.hpp"
#include "tq/resolution.hpp"
#include "tq/threads.hpp"
#include "tq/triple.hpp"

using namespace tq;
namespace tt = tq::testing;

namespace {

CategoryPtr linear_cat(int n) {
  Quiver q;
  for (int k = 1; k <= n; ++k) q.add_vertex(std::to_string(k));
  for (int k = 1; k < n; ++k) q.add_arrow("x" + std::to_string(k), k - 1, k);
  return make_window(q, {}).category();
}

using Dims = std::vector<std::size_t>;

void expect_error(ErrorKind kind, const std::function<void()>& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << to_string(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

RepMap random_map(const Rep& m, const Rep& n, std::mt19937_64& rng) {
  HomSpace h = hom_basis(m, n);
  RepMap f = RepMap::zero(m, n);
  for (const auto& b : h.basis) f = f + random_scalar(rng) * b;
  return f;
}

Dims add(const Dims& a, const Dims& b) {
  Dims out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

// Inclusion of the objects strictly inside the first thread chain.
CatFunctor inner_chain(const std::string& fixture, int d) {
  Window w = expand(tt::fixture(fixture), d);
  const auto& chain = w.embed_t.at(0);
  CategoryPtr c = w.category();
  return inclusion_functor(c, interval(*c, chain[1], chain[chain.size() - 2]));
}

std::vector<CategoryPtr> relation_free_windows(int d) {
  std::vector<CategoryPtr> out;
  for (const auto& name : tt::relation_free_fixtures()) out.push_back(expand(tt::fixture(name), d).category());
  return out;
}

}  // namespace

TEST(StdModule, A2) {
  CategoryPtr c = linear_cat(2);
  EXPECT_EQ(std_module(c, 0, ModuleKind::Projective).dims, (Dims{1, 0}));
  EXPECT_EQ(std_module(c, 1, ModuleKind::Projective).dims, (Dims{1, 1}));
  Rep i1 = std_module(c, 0, ModuleKind::Injective);
  EXPECT_EQ(i1.dims, (Dims{1, 1}));
  EXPECT_TRUE(probe_equivalent(i1, std_module(c, 1, ModuleKind::Projective)));
  for (int v = 0; v < 2; ++v) EXPECT_EQ(std_module(c, v, ModuleKind::Simple).total_dim(), 1u);
}

TEST(StdModule, DimensionsArePathCounts) {
  for (const auto& name : tt::relation_free_fixtures()) {
    Window w = expand(tt::fixture(name), 1);
    CategoryPtr c = w.category();
    for (int v = 0; v < c->size(); ++v) {
      Rep p = std_module(c, v, ModuleKind::Projective), i = std_module(c, v, ModuleKind::Injective);
      EXPECT_TRUE(p.is_valid());
      EXPECT_TRUE(i.is_valid());
      for (int x = 0; x < c->size(); ++x) {
        EXPECT_EQ(p.dims[x], tt::count_paths(w.quiver, x, v));
        EXPECT_EQ(i.dims[x], tt::count_paths(w.quiver, v, x));
      }
    }
  }
}

TEST(HomBasis, Examples) {
  CategoryPtr c = linear_cat(2);
  Rep p1 = std_module(c, 0, ModuleKind::Projective), p2 = std_module(c, 1, ModuleKind::Projective);
  EXPECT_EQ(hom_dim(p1, p2), 1u);
  EXPECT_EQ(hom_dim(p2, p1), 0u);
  HomSpace h = hom_basis(p1, p2);
  ASSERT_EQ(h.basis.size(), 1u);
  EXPECT_TRUE(is_natural(p1, p2, h.basis[0]));
  expect_error(ErrorKind::WindowMismatch, [&] { hom_dim(p1, std_module(linear_cat(2), 0, ModuleKind::Projective)); });
}

TEST(MapFactor, Examples) {
  CategoryPtr c = linear_cat(2);
  Rep p1 = std_module(c, 0, ModuleKind::Projective), p2 = std_module(c, 1, ModuleKind::Projective);
  Factorization id = map_factor(p2, p2, RepMap::identity(p2));
  EXPECT_TRUE(id.kernel.is_zero());
  EXPECT_TRUE(id.cokernel.is_zero());

  Factorization f = map_factor(p1, p2, hom_basis(p1, p2).basis[0]);
  EXPECT_TRUE(f.kernel.is_zero());
  EXPECT_EQ(f.cokernel.dims, (Dims{0, 1}));
  EXPECT_TRUE(probe_equivalent(f.cokernel, std_module(c, 1, ModuleKind::Simple)));

  Factorization z = map_factor(p1, p2, RepMap::zero(p1, p2));
  EXPECT_EQ(z.kernel.dims, p1.dims);
  EXPECT_EQ(z.cokernel.dims, p2.dims);
}

TEST(Resolution, Examples) {
  CategoryPtr c = linear_cat(2);
  ProjResolution r = projective_resolution(std_module(c, 1, ModuleKind::Simple), 4);
  EXPECT_EQ(r.length(), 1);
  EXPECT_EQ(r.terms[0], (ObjectSum{1}));
  EXPECT_EQ(r.terms[1], (ObjectSum{0}));
  for (int v = 0; v < 2; ++v) EXPECT_EQ(projective_dimension(std_module(c, v, ModuleKind::Projective), 4), 0);

  CategoryPtr z = tt::zigzag_window().category();
  EXPECT_EQ(projective_dimension(std_module(z, z->index("a2_2"), ModuleKind::Simple), 6), 2);
  EXPECT_EQ(projective_dimension(std_module(z, z->index("a3_3"), ModuleKind::Simple), 6), 3);
}

TEST(Resolution, ExceedsBound) {
  CategoryPtr c = tt::ainf_window(10).category();
  Rep s = std_module(c, c->index("v9"), ModuleKind::Simple);
  expect_error(ErrorKind::ExceedsBound, [&] { projective_resolution(s, 3); });
  EXPECT_EQ(projective_dimension(s, 9), 8);
}

TEST(Resolution, BoundaryPolicy) {
  CategoryPtr c = expand(tt::fixture("thread_z"), 1).category();
  // S at the vertex just after a boundary vertex needs that boundary vertex
  for (int v = 0; v < c->size(); ++v) {
    if (c->is_boundary(v)) continue;
    Rep s = std_module(c, v, ModuleKind::Simple);
    ProjResolution r = projective_resolution(s, 6);
    if (r.touches_boundary())
      expect_error(ErrorKind::BoundaryContaminated, [&] { projective_resolution(s, 6, BoundaryPolicy::Reject); });
    else
      EXPECT_EQ(projective_resolution(s, 6, BoundaryPolicy::Reject).length(), r.length());
  }
}

TEST(ExtDim, Examples) {
  CategoryPtr c = linear_cat(2);
  Rep s1 = std_module(c, 0, ModuleKind::Simple), s2 = std_module(c, 1, ModuleKind::Simple);
  EXPECT_EQ(ext_dim(1, s2, s1, 4), 1u);
  EXPECT_EQ(ext_dim(1, s1, s2, 4), 0u);
  std::mt19937_64 rng(29);
  for (int t = 0; t < 10; ++t) {
    Rep m = random_rep(c, rng), n = random_rep(c, rng);
    EXPECT_EQ(ext_dim(0, m, n, 4), hom_dim(m, n));
  }
}

TEST(Dualize, Examples) {
  std::mt19937_64 rng(31);
  for (const auto& name : {"a2", "square", "thread_3"}) {
    CategoryPtr c = expand(tt::fixture(name), 1).category();
    for (int v = 0; v < c->size(); ++v) {
      EXPECT_TRUE(probe_equivalent(dualize(std_module(c, v, ModuleKind::Projective)),
                                   std_module(c->opposite(), v, ModuleKind::Injective)));
      EXPECT_TRUE(probe_equivalent(dualize(std_module(c, v, ModuleKind::Simple)),
                                   std_module(c->opposite(), v, ModuleKind::Simple)));
    }
    Rep m = random_rep(c, rng);
    Rep dd = dualize(dualize(m));
    EXPECT_EQ(dd.dims, m.dims);
    ASSERT_EQ(dd.gens.size(), m.gens.size());
    for (std::size_t g = 0; g < m.gens.size(); ++g) EXPECT_EQ(dd.gens[g], m.gens[g]);
    EXPECT_TRUE(dualize(m).is_valid());
  }
}

TEST(Decompose, Examples) {
  CategoryPtr c = linear_cat(2);
  Rep p1 = std_module(c, 0, ModuleKind::Projective), p2 = std_module(c, 1, ModuleKind::Projective);
  std::vector<Rep> parts = decompose(direct_sum({p1, p2}));
  ASSERT_EQ(parts.size(), 2u);
  std::vector<Dims> dims = {parts[0].dims, parts[1].dims};
  std::sort(dims.begin(), dims.end());
  EXPECT_EQ(dims, (std::vector<Dims>{{1, 0}, {1, 1}}));
  EXPECT_TRUE(decompose(Rep::zero(c)).empty());

  CategoryPtr sq = expand(tt::fixture("square"), 0).category();
  for (int v = 0; v < sq->size(); ++v)
    for (auto k : {ModuleKind::Projective, ModuleKind::Injective, ModuleKind::Simple})
      EXPECT_EQ(decompose(std_module(sq, v, k)).size(), 1u);
}

TEST(Restrict, Examples) {
  CategoryPtr a3 = linear_cat(3);
  Rep p2 = std_module(a3, 1, ModuleKind::Projective);
  EXPECT_TRUE(tt::same_rep(restrict(p2, identity_functor(a3)), p2));
  CatFunctor sub = inclusion_functor(a3, {0, 1});
  Rep r = restrict(p2, sub);
  EXPECT_EQ(r.dims, (Dims{1, 1}));
  EXPECT_TRUE(probe_equivalent(r, std_module(sub.src, 1, ModuleKind::Projective)));
  EXPECT_TRUE(restrict(std_module(a3, 2, ModuleKind::Simple), sub).is_zero());
}

TEST(Induce, Examples) {
  CatFunctor f = inner_chain("thread_3", 1);
  CategoryPtr c = f.tgt;
  ASSERT_GE(f.src->size(), 3);
  for (int v = 0; v < f.src->size(); ++v)
    EXPECT_TRUE(probe_equivalent(induce(std_module(f.src, v, ModuleKind::Projective), f),
                                 std_module(c, f.obj[v], ModuleKind::Projective)));
  std::mt19937_64 rng(37);
  for (int t = 0; t < 10; ++t) {
    Rep m = random_rep(f.src, rng);
    EXPECT_TRUE(probe_equivalent(restrict(induce(m, f), f), m));
  }
}

TEST(Induce, ExactOnRelationFreeIntervals) {
  std::mt19937_64 rng(41);
  for (const auto& name : {"thread_3", "thread_1", "thread_empty2"}) {
    CatFunctor f = inner_chain(name, 1);
    for (int t = 0; t < 5; ++t) {
      Rep k = random_rep(f.src, rng), m = random_rep(f.src, rng);
      RepMap g = random_map(k, m, rng);
      auto [cq, cp] = cokernel(k, m, g);
      auto [img, incl] = kernel(m, cq, cp);
      auto [q, proj] = cokernel(img, m, incl);
      // 0 -> image -> M -> cokernel -> 0 stays exact after inducing
      EXPECT_EQ(add(induce(img, f).dims, induce(q, f).dims), induce(m, f).dims) << name;
    }
  }
}

TEST(Triple, RoundTrip) {
  std::mt19937_64 rng(43);
  for (const auto& name : {"thread_empty", "thread_3", "figure_left"}) {
    TripleContext ctx = triple_context(tt::fixture(name), 1);
    for (int t = 0; t < 5; ++t) {
      Rep m = random_rep(ctx.cat, rng);
      TripleRep tr = to_triple(ctx, m);
      EXPECT_TRUE(alpha_natural(ctx, tr));
      EXPECT_TRUE(tt::same_rep(from_triple(ctx, tr), m)) << name;
    }
  }
}

TEST(Triple, GluedProjective) {
  TripleContext ctx = triple_context(tt::fixture("thread_empty"), 2);
  const int b_qr = ctx.qr->index("b");
  TripleRep tr;
  tr.n = std_module(ctx.qr, b_qr, ModuleKind::Projective);
  ASSERT_EQ(tr.n.dims, (Dims{1, 1}));
  CategoryPtr chain = ctx.chains[0];
  tr.l.push_back(std_module(chain, chain->size() - 1, ModuleKind::Projective));
  tr.alpha.emplace_back(Matrix::identity(1), Matrix::identity(1));
  const Rep expected = std_module(ctx.cat, ctx.cat->index("b"), ModuleKind::Projective);
  EXPECT_TRUE(probe_equivalent(from_triple(ctx, tr), expected));

  // scaling both gluing maps gives an isomorphic representation
  tr.alpha[0] = {Matrix{{2}}, Matrix{{2}}};
  EXPECT_TRUE(alpha_natural(ctx, tr));
  EXPECT_TRUE(probe_equivalent(from_triple(ctx, tr), expected));

  tr.alpha[0] = {Matrix{{2}}, Matrix{{1}}};
  EXPECT_FALSE(alpha_natural(ctx, tr));
  expect_error(ErrorKind::NotFunctorial, [&] { from_triple(ctx, tr); });
  tr.alpha[0] = {Matrix{{0}}, Matrix{{0}}};
  expect_error(ErrorKind::AlphaNotInvertible, [&] { from_triple(ctx, tr); });
}

TEST(Triple, ModificationsAreHoms) {
  std::mt19937_64 rng(47);
  for (const auto& name : {"thread_empty", "thread_1"}) {
    TripleContext ctx = triple_context(tt::fixture(name), 1);
    for (int t = 0; t < 5; ++t) {
      Rep a = random_rep(ctx.cat, rng), b = random_rep(ctx.cat, rng);
      EXPECT_EQ(modification_dim(ctx, to_triple(ctx, a), to_triple(ctx, b)), hom_dim(a, b)) << name;
    }
  }
}

TEST(RepProperties, Yoneda) {
  std::mt19937_64 rng(53);
  for (const auto& name : tt::thread_quiver_fixtures()) {
    CategoryPtr c = expand(tt::fixture(name), 1).category();
    for (int t = 0; t < 3; ++t) {
      Rep m = random_rep(c, rng);
      ASSERT_TRUE(m.is_valid());
      for (int v = 0; v < c->size(); ++v) {
        EXPECT_EQ(hom_dim(std_module(c, v, ModuleKind::Projective), m), m.dims[v]);
        EXPECT_EQ(hom_dim(m, std_module(c, v, ModuleKind::Injective)), m.dims[v]);
      }
      if (!m.is_zero()) EXPECT_GE(hom_dim(m, m), 1u);
    }
  }
}

TEST(RepProperties, ImageTwoWays) {
  std::mt19937_64 rng(59);
  for (const auto& name : {"square", "zigzag", "figure_left"}) {
    CategoryPtr c = expand(tt::fixture(name), 1).category();
    for (int t = 0; t < 5; ++t) {
      Rep m = random_rep(c, rng), n = random_rep(c, rng);
      RepMap f = random_map(m, n, rng);
      Factorization fa = map_factor(m, n, f);
      auto [coker, cp] = cokernel(m, n, f);
      auto [ker_of_coker, i1] = kernel(n, coker, cp);
      auto [ker, ki] = kernel(m, n, f);
      auto [coker_of_ker, p1] = cokernel(ker, m, ki);
      EXPECT_EQ(ker_of_coker.dims, coker_of_ker.dims);
      EXPECT_EQ(fa.image.dims, ker_of_coker.dims);
      EXPECT_EQ(add(fa.kernel.dims, fa.image.dims), m.dims);
      EXPECT_EQ(add(fa.image.dims, fa.cokernel.dims), n.dims);
    }
  }
}

TEST(RepProperties, HereditaryKernelsSplit) {
  std::mt19937_64 rng(61);
  for (CategoryPtr c : relation_free_windows(1)) {
    for (int t = 0; t < 5; ++t) {
      ObjectSum s = random_sum(*c, rng, 3), u = random_sum(*c, rng, 3);
      RepMap f = varmor_to_projmap(*c, random_varmor(*c, s, u, rng));
      Rep ps = proj_sum(c, s), pu = proj_sum(c, u);
      auto [k, incl] = kernel(ps, pu, f);
      EXPECT_TRUE(tt::is_projective(k));
      EXPECT_TRUE(tt::is_split_mono(k, ps, incl));
    }
  }
}

TEST(RepProperties, HereditaryExt2Vanishes) {
  std::mt19937_64 rng(67);
  for (CategoryPtr c : relation_free_windows(1))
    for (int t = 0; t < 5; ++t) EXPECT_EQ(ext_dim(2, random_rep(c, rng), random_rep(c, rng), 6), 0u);
}

TEST(RepProperties, DualityExchangesResolutions) {
  std::mt19937_64 rng(71);
  for (const auto& name : {"a2", "square", "zigzag", "thread_3"}) {
    CategoryPtr c = expand(tt::fixture(name), 1).category();
    for (int t = 0; t < 4; ++t) {
      Rep m = random_rep(c, rng);
      EXPECT_EQ(injective_resolution(dualize(m), 8).length(), projective_resolution(m, 8).length()) << name;
    }
  }
}

TEST(RepProperties, KrullSchmidtOrderIndependent) {
  std::mt19937_64 rng(73);
  for (const auto& name : {"a2", "thread_3", "figure_left"}) {
    CategoryPtr c = expand(tt::fixture(name), 1).category();
    for (int t = 0; t < 4; ++t) {
      Rep m = random_rep(c, rng, 4);
      std::mt19937_64 s1(rng()), s2(rng());
      auto dims_of = [](const std::vector<Rep>& parts) {
        std::vector<Dims> d;
        for (const auto& p : parts) d.push_back(p.dims);
        std::sort(d.begin(), d.end());
        return d;
      };
      std::vector<Rep> a = decompose(m, &s1), b = decompose(m, &s2);
      EXPECT_EQ(dims_of(a), dims_of(b));
      Dims total(c->size(), 0);
      for (const auto& p : a) total = add(total, p.dims);
      EXPECT_EQ(total, m.dims);
    }
  }
}
