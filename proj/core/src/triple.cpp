#include "tq/triple.hpp"

#include "tq/error.hpp"

namespace tq {

CategoryPtr chain_category(const FiniteChain& c) {
  Quiver q;
  for (const auto& e : c.elements) q.add_vertex(e);
  for (std::size_t k = 0; k + 1 < c.size(); ++k)
    q.add_arrow("c" + std::to_string(k), static_cast<int>(k), static_cast<int>(k + 1));
  return Category::from_quiver(q, {});
}

TripleContext triple_context(const ThreadQuiver& tq, int depth) {
  TripleContext ctx;
  ctx.tq = tq;
  ctx.window = expand(tq, depth);
  ctx.cat = ctx.window.category();
  Quiver uq = underlying_quiver(tq);
  ctx.qr_window = make_window(uq, underlying_relations(tq, uq));
  ctx.qr = ctx.qr_window.category();

  std::vector<std::vector<int>> paths;
  for (std::size_t a = 0; a < tq.standard.size(); ++a) paths.push_back({static_cast<int>(a)});
  for (const auto& arrows : ctx.window.chain_arrows) paths.push_back(arrows);
  ctx.i = window_functor(ctx.qr_window, ctx.cat, ctx.window.embed_r, paths);

  for (std::size_t t = 0; t < tq.threads.size(); ++t) {
    CategoryPtr ch = chain_category(ctx.window.chains[t]);
    ctx.chains.push_back(ch);
    CatFunctor f;
    f.src = ch;
    f.tgt = ctx.cat;
    f.obj = ctx.window.embed_t[t];
    for (int a : ctx.window.chain_arrows[t]) f.gen_images.push_back(ctx.cat->generators()[a].coords);
    ctx.j.push_back(std::move(f));
  }
  return ctx;
}

TripleRep to_triple(const TripleContext& ctx, const Rep& m) {
  if (m.cat != ctx.cat) throw Error(ErrorKind::WindowMismatch, "representation is not over the context window");
  TripleRep t;
  t.n = restrict(m, ctx.i);
  for (std::size_t k = 0; k < ctx.j.size(); ++k) {
    t.l.push_back(restrict(m, ctx.j[k]));
    const auto& l = t.l.back();
    t.alpha.emplace_back(Matrix::identity(l.dims.front()), Matrix::identity(l.dims.back()));
  }
  return t;
}

namespace {

Matrix chain_composite(const Rep& l) {
  const int last = static_cast<int>(l.dims.size()) - 1;
  Matrix a = Matrix::identity(l.dims[0]);
  for (int k = 0; k < last; ++k) a = a * l.gens[k];
  return a;
}

}  // namespace

bool alpha_natural(const TripleContext& ctx, const TripleRep& t) {
  const std::size_t s = ctx.tq.standard.size();
  for (std::size_t k = 0; k < t.l.size(); ++k) {
    const Matrix& nt = t.n.gens[s + k];
    if (!(nt * t.alpha[k].second == t.alpha[k].first * chain_composite(t.l[k]))) return false;
  }
  return true;
}

Rep from_triple(const TripleContext& ctx, const TripleRep& t) {
  const Window& w = ctx.window;
  const ThreadQuiver& tq = ctx.tq;
  for (const auto& [a, b] : t.alpha)
    if (!is_invertible(a) || !is_invertible(b)) throw Error(ErrorKind::AlphaNotInvertible, "alpha has a singular component");
  if (!alpha_natural(ctx, t)) throw Error(ErrorKind::NotFunctorial, "alpha is not natural along a thread arrow");

  Rep m;
  m.cat = ctx.cat;
  m.dims.assign(w.quiver.vertex_count(), 0);
  for (std::size_t v = 0; v < tq.vertices.size(); ++v) m.dims[w.embed_r[v]] = t.n.dims[v];
  for (std::size_t k = 0; k < t.l.size(); ++k)
    for (std::size_t e = 1; e + 1 < w.embed_t[k].size(); ++e) m.dims[w.embed_t[k][e]] = t.l[k].dims[e];
  m.gens.resize(w.quiver.arrow_count());
  for (std::size_t a = 0; a < tq.standard.size(); ++a) m.gens[a] = t.n.gens[a];
  for (std::size_t k = 0; k < t.l.size(); ++k) {
    const auto& arrows = w.chain_arrows[k];
    const Matrix amax_inv = inverse(t.alpha[k].second);
    for (std::size_t e = 0; e < arrows.size(); ++e) {
      Matrix g = t.l[k].gens[e];
      if (e == 0) g = t.alpha[k].first * g;
      if (e + 1 == arrows.size()) g = g * amax_inv;
      m.gens[arrows[e]] = std::move(g);
    }
  }
  if (!m.is_valid()) throw Error(ErrorKind::NotFunctorial, "glued representation violates the relations");
  return m;
}

std::size_t modification_dim(const TripleContext& ctx, const TripleRep& a, const TripleRep& b) {
  std::vector<Matrix> blocks;
  std::vector<std::vector<std::size_t>> offs;
  std::vector<std::size_t> base;
  std::size_t total = 0, rows = 0;
  auto add = [&](const Rep& x, const Rep& y) {
    std::vector<std::size_t> off;
    blocks.push_back(naturality_matrix(x, y, &off));
    for (auto& o : off) o += total;
    offs.push_back(std::move(off));
    base.push_back(total);
    total += blocks.back().cols();
    rows += blocks.back().rows();
  };
  add(a.n, b.n);
  for (std::size_t k = 0; k < a.l.size(); ++k) add(a.l[k], b.l[k]);

  // squares: beta_end alpha = alpha' gamma_end at both ends of every chain
  struct Square {
    const Matrix* al;   // N(v) x L(e)
    const Matrix* al2;  // N'(v) x L'(e)
    std::size_t beta_off, gamma_off, n_dim, l_dim;
  };
  std::vector<Square> squares;
  const std::size_t s = ctx.tq.standard.size();
  for (std::size_t k = 0; k < a.l.size(); ++k) {
    const auto& arrow = ctx.qr->generators()[s + k];
    const std::size_t last = a.l[k].dims.size() - 1;
    squares.push_back({&a.alpha[k].first, &b.alpha[k].first, offs[0][arrow.src], offs[k + 1][0],
                       a.n.dims[arrow.src], a.l[k].dims[0]});
    squares.push_back({&a.alpha[k].second, &b.alpha[k].second, offs[0][arrow.tgt], offs[k + 1][last],
                       a.n.dims[arrow.tgt], a.l[k].dims[last]});
  }
  for (const auto& q : squares) rows += q.al2->rows() * q.l_dim;

  Matrix sys(rows, total);
  std::size_t r0 = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    sys.set_block(r0, base[i], blocks[i]);
    r0 += blocks[i].rows();
  }
  for (const auto& q : squares) {
    const Matrix& al = *q.al;
    const Matrix& al2 = *q.al2;
    const std::size_t n2 = al2.rows(), l2 = al2.cols();
    for (std::size_t r = 0; r < n2; ++r)
      for (std::size_t c = 0; c < q.l_dim; ++c) {
        const std::size_t row = r0 + r * q.l_dim + c;
        // beta (n2 x n_dim), unknown (r, k) at beta_off + r * n_dim + k
        for (std::size_t k = 0; k < q.n_dim; ++k)
          if (!al(k, c).is_zero()) sys(row, q.beta_off + r * q.n_dim + k) += al(k, c);
        // gamma (l2 x l_dim), unknown (k, c) at gamma_off + k * l_dim + c
        for (std::size_t k = 0; k < l2; ++k)
          if (!al2(r, k).is_zero()) sys(row, q.gamma_off + k * q.l_dim + c) -= al2(r, k);
      }
    r0 += n2 * q.l_dim;
  }
  if (total == 0) return 0;
  return total - rank(sys);
}

}  // namespace tq
