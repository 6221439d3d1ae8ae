#include "tq/rep.hpp"

#include <algorithm>
#include <numeric>

#include "tq/error.hpp"

namespace tq {

namespace {

void same_category(const Rep& m, const Rep& n) {
  if (m.cat != n.cat) throw Error(ErrorKind::WindowMismatch, "representations live over different categories");
}

Matrix word_action(const Rep& m, int x, const Word& w) {
  Matrix a = Matrix::identity(m.dims[x]);
  for (int g : w) a = a * m.gens[g];
  return a;
}

}  // namespace

Rep Rep::zero(CategoryPtr c) {
  Rep r;
  r.dims.assign(c->size(), 0);
  r.gens.assign(c->generators().size(), Matrix(0, 0));
  r.cat = std::move(c);
  return r;
}

std::size_t Rep::total_dim() const { return std::accumulate(dims.begin(), dims.end(), std::size_t{0}); }

Matrix Rep::act(int x, int y, const Vec& h) const {
  Matrix out(dims[x], dims[y]);
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i].is_zero()) continue;
    for (const auto& [c, w] : cat->basis_expr(x, y, i)) out += (h[i] * c) * word_action(*this, x, w);
  }
  return out;
}

Matrix ActionTable::act(int x, int y, const Vec& h, std::size_t rows, std::size_t cols) const {
  Matrix out(rows, cols);
  const auto& b = at(x, y);
  for (std::size_t i = 0; i < h.size(); ++i)
    if (!h[i].is_zero()) out += h[i] * b[i];
  return out;
}

ActionTable actions(const Rep& m) {
  const Category& c = *m.cat;
  ActionTable t;
  t.n = c.size();
  t.basis.resize(static_cast<std::size_t>(t.n) * t.n);
  for (int x = 0; x < t.n; ++x)
    for (int y = 0; y < t.n; ++y)
      for (std::size_t i = 0; i < c.dim(x, y); ++i) {
        Matrix a(m.dims[x], m.dims[y]);
        for (const auto& [k, w] : c.basis_expr(x, y, i)) a += k * word_action(m, x, w);
        t.basis[x * t.n + y].push_back(std::move(a));
      }
  return t;
}

bool Rep::is_valid() const {
  const Category& c = *cat;
  if (dims.size() != static_cast<std::size_t>(c.size()) || gens.size() != c.generators().size()) return false;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const auto& gen = c.generators()[g];
    if (gens[g].rows() != dims[gen.src] || gens[g].cols() != dims[gen.tgt]) return false;
  }
  ActionTable t = actions(*this);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const auto& gen = c.generators()[g];
    const int y = gen.src, z = gen.tgt;
    for (int x = 0; x < c.size(); ++x)
      for (std::size_t j = 0; j < c.dim(x, y); ++j) {
        Vec comp = c.compose(x, y, z, gen.coords, c.unit(x, y, j));
        if (!(t.act(x, z, comp, dims[x], dims[z]) == t.at(x, y)[j] * gens[g])) return false;
      }
  }
  return true;
}

RepMap RepMap::zero(const Rep& m, const Rep& n) {
  RepMap f;
  for (std::size_t v = 0; v < m.dims.size(); ++v) f.comp.emplace_back(n.dims[v], m.dims[v]);
  return f;
}

RepMap RepMap::identity(const Rep& m) {
  RepMap f;
  for (auto d : m.dims) f.comp.push_back(Matrix::identity(d));
  return f;
}

bool RepMap::is_zero() const {
  return std::all_of(comp.begin(), comp.end(), [](const Matrix& m) { return m.is_zero(); });
}

RepMap compose(const RepMap& g, const RepMap& f) {
  RepMap h;
  for (std::size_t v = 0; v < f.comp.size(); ++v) h.comp.push_back(g.comp[v] * f.comp[v]);
  return h;
}

RepMap operator+(const RepMap& a, const RepMap& b) {
  RepMap h;
  for (std::size_t v = 0; v < a.comp.size(); ++v) h.comp.push_back(a.comp[v] + b.comp[v]);
  return h;
}

RepMap operator*(const Scalar& s, const RepMap& a) {
  RepMap h;
  for (const auto& m : a.comp) h.comp.push_back(s * m);
  return h;
}

bool is_natural(const Rep& m, const Rep& n, const RepMap& f) {
  const auto& gens = m.cat->generators();
  for (std::size_t g = 0; g < gens.size(); ++g)
    if (!(n.gens[g] * f.comp[gens[g].tgt] == f.comp[gens[g].src] * m.gens[g])) return false;
  return true;
}

Rep std_module(CategoryPtr cp, int v, ModuleKind kind) {
  const Category& c = *cp;
  Rep r;
  r.cat = cp;
  const int n = c.size();
  r.dims.resize(n);
  for (int x = 0; x < n; ++x) {
    switch (kind) {
      case ModuleKind::Projective: r.dims[x] = c.dim(x, v); break;
      case ModuleKind::Injective: r.dims[x] = c.dim(v, x); break;
      case ModuleKind::Simple: r.dims[x] = x == v ? 1 : 0; break;
    }
  }
  for (const auto& g : c.generators()) {
    const int x = g.src, y = g.tgt;
    Matrix a(r.dims[x], r.dims[y]);
    if (kind == ModuleKind::Projective) {
      // h in hom(y, v) goes to h o g
      for (std::size_t j = 0; j < r.dims[y]; ++j) {
        Vec col = c.compose(x, y, v, c.unit(y, v, j), g.coords);
        for (std::size_t i = 0; i < col.size(); ++i) a(i, j) = col[i];
      }
    } else if (kind == ModuleKind::Injective) {
      // dual of h in hom(v, x) going to g o h
      for (std::size_t j = 0; j < r.dims[x]; ++j) {
        Vec col = c.compose(v, x, y, g.coords, c.unit(v, x, j));
        for (std::size_t i = 0; i < col.size(); ++i) a(j, i) = col[i];
      }
    }
    r.gens.push_back(std::move(a));
  }
  return r;
}

Rep direct_sum(const std::vector<Rep>& parts) {
  if (parts.empty()) throw Error(ErrorKind::InvalidArgument, "direct sum of nothing needs a category");
  Rep r;
  r.cat = parts.front().cat;
  const std::size_t n = parts.front().dims.size();
  r.dims.assign(n, 0);
  for (const auto& p : parts) {
    same_category(parts.front(), p);
    for (std::size_t v = 0; v < n; ++v) r.dims[v] += p.dims[v];
  }
  for (std::size_t g = 0; g < parts.front().gens.size(); ++g) {
    std::vector<Matrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.gens[g]);
    r.gens.push_back(direct_sum(blocks));
  }
  return r;
}

RepMap sum_injection(const std::vector<Rep>& parts, std::size_t k) {
  RepMap f;
  const std::size_t n = parts.front().dims.size();
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t total = 0, off = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i == k) off = total;
      total += parts[i].dims[v];
    }
    Matrix m(total, parts[k].dims[v]);
    m.set_block(off, 0, Matrix::identity(parts[k].dims[v]));
    f.comp.push_back(std::move(m));
  }
  return f;
}

RepMap sum_projection(const std::vector<Rep>& parts, std::size_t k) {
  RepMap f = sum_injection(parts, k);
  for (auto& m : f.comp) m = m.transpose();
  return f;
}

Rep proj_sum(CategoryPtr c, const ObjectSum& s) {
  if (s.empty()) return Rep::zero(c);
  std::vector<Rep> parts;
  for (int v : s) parts.push_back(std_module(c, v, ModuleKind::Projective));
  return direct_sum(parts);
}

Rep inj_sum(CategoryPtr c, const ObjectSum& s) {
  if (s.empty()) return Rep::zero(c);
  std::vector<Rep> parts;
  for (int v : s) parts.push_back(std_module(c, v, ModuleKind::Injective));
  return direct_sum(parts);
}

RepMap varmor_to_projmap(const Category& c, const VarietyMor& f) {
  RepMap out;
  for (int x = 0; x < c.size(); ++x) {
    std::size_t rows = 0, cols = 0;
    for (int t : f.tgt) rows += c.dim(x, t);
    for (int s : f.src) cols += c.dim(x, s);
    Matrix m(rows, cols);
    std::size_t r0 = 0;
    for (std::size_t i = 0; i < f.tgt.size(); ++i) {
      std::size_t c0 = 0;
      for (std::size_t j = 0; j < f.src.size(); ++j) {
        const std::size_t dj = c.dim(x, f.src[j]);
        for (std::size_t k = 0; k < dj; ++k) {
          Vec col = c.compose(x, f.src[j], f.tgt[i], f.entries[i][j], c.unit(x, f.src[j], k));
          for (std::size_t r = 0; r < col.size(); ++r) m(r0 + r, c0 + k) = col[r];
        }
        c0 += dj;
      }
      r0 += c.dim(x, f.tgt[i]);
    }
    out.comp.push_back(std::move(m));
  }
  return out;
}

RepMap varmor_to_injmap(const Category& c, const VarietyMor& f) {
  RepMap out;
  for (int x = 0; x < c.size(); ++x) {
    std::size_t rows = 0, cols = 0;
    for (int t : f.tgt) rows += c.dim(t, x);
    for (int s : f.src) cols += c.dim(s, x);
    Matrix m(rows, cols);
    std::size_t r0 = 0;
    for (std::size_t i = 0; i < f.tgt.size(); ++i) {
      std::size_t c0 = 0;
      const std::size_t di = c.dim(f.tgt[i], x);
      for (std::size_t j = 0; j < f.src.size(); ++j) {
        // dual of hom(tgt_i, x) -> hom(src_j, x), h -> h o f_ij
        for (std::size_t k = 0; k < di; ++k) {
          Vec col = c.compose(f.src[j], f.tgt[i], x, c.unit(f.tgt[i], x, k), f.entries[i][j]);
          for (std::size_t r = 0; r < col.size(); ++r) m(r0 + k, c0 + r) = col[r];
        }
        c0 += c.dim(f.src[j], x);
      }
      r0 += di;
    }
    out.comp.push_back(std::move(m));
  }
  return out;
}

VarietyMor projmap_to_varmor(const Category& c, const ObjectSum& src, const ObjectSum& tgt, const RepMap& f) {
  VarietyMor out = VarietyMor::zero(c, src, tgt);
  for (std::size_t j = 0; j < src.size(); ++j) {
    const int x = src[j];
    std::size_t off = 0;
    for (std::size_t k = 0; k < j; ++k) off += c.dim(x, src[k]);
    std::size_t r0 = 0;
    for (std::size_t i = 0; i < tgt.size(); ++i) {
      const std::size_t di = c.dim(x, tgt[i]);
      for (std::size_t r = 0; r < di; ++r) out.entries[i][j][r] = f.comp[x](r0 + r, off);
      r0 += di;
    }
  }
  return out;
}

namespace {

struct Layout {
  std::vector<std::size_t> off;
  std::size_t total = 0;
};

Layout hom_layout(const Rep& m, const Rep& n) {
  Layout l;
  for (std::size_t v = 0; v < m.dims.size(); ++v) {
    l.off.push_back(l.total);
    l.total += n.dims[v] * m.dims[v];
  }
  return l;
}

Matrix naturality_system(const Rep& m, const Rep& n, const Layout& l) {
  const auto& gens = m.cat->generators();
  std::size_t rows = 0;
  for (const auto& g : gens) rows += n.dims[g.src] * m.dims[g.tgt];
  Matrix a(rows, l.total);
  std::size_t r0 = 0;
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const int x = gens[gi].src, y = gens[gi].tgt;
    const std::size_t nx = n.dims[x], ny = n.dims[y], mx = m.dims[x], my = m.dims[y];
    const Matrix& ng = n.gens[gi];
    const Matrix& mg = m.gens[gi];
    // N(g) phi_y - phi_x M(g) = 0, entry (r, c)
    for (std::size_t r = 0; r < nx; ++r)
      for (std::size_t c = 0; c < my; ++c) {
        const std::size_t row = r0 + r * my + c;
        for (std::size_t k = 0; k < ny; ++k)
          if (!ng(r, k).is_zero()) a(row, l.off[y] + k * my + c) += ng(r, k);
        for (std::size_t k = 0; k < mx; ++k)
          if (!mg(k, c).is_zero()) a(row, l.off[x] + r * mx + k) -= mg(k, c);
      }
    r0 += nx * my;
  }
  return a;
}

}  // namespace

Matrix naturality_matrix(const Rep& m, const Rep& n, std::vector<std::size_t>* offsets) {
  same_category(m, n);
  Layout l = hom_layout(m, n);
  if (offsets) *offsets = l.off;
  return naturality_system(m, n, l);
}

HomSpace hom_basis(const Rep& m, const Rep& n) {
  same_category(m, n);
  Layout l = hom_layout(m, n);
  Matrix k = kernel_basis(naturality_system(m, n, l));
  HomSpace h;
  h.dimension = k.cols();
  for (std::size_t c = 0; c < k.cols(); ++c) {
    RepMap f;
    for (std::size_t v = 0; v < m.dims.size(); ++v) {
      Matrix comp(n.dims[v], m.dims[v]);
      for (std::size_t r = 0; r < n.dims[v]; ++r)
        for (std::size_t s = 0; s < m.dims[v]; ++s) comp(r, s) = k(l.off[v] + r * m.dims[v] + s, c);
      f.comp.push_back(std::move(comp));
    }
    h.basis.push_back(std::move(f));
  }
  return h;
}

std::size_t hom_dim(const Rep& m, const Rep& n) {
  same_category(m, n);
  Layout l = hom_layout(m, n);
  if (l.total == 0) return 0;
  return l.total - rank(naturality_system(m, n, l));
}

std::pair<Rep, RepMap> kernel(const Rep& m, const Rep& n, const RepMap& f) {
  (void)n;
  Rep k;
  k.cat = m.cat;
  RepMap incl;
  for (std::size_t v = 0; v < m.dims.size(); ++v) {
    Matrix b = kernel_basis(f.comp[v]);
    k.dims.push_back(b.cols());
    incl.comp.push_back(std::move(b));
  }
  const auto& gens = m.cat->generators();
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const int x = gens[g].src, y = gens[g].tgt;
    if (k.dims[x] == 0 || k.dims[y] == 0) {
      k.gens.emplace_back(k.dims[x], k.dims[y]);
      continue;
    }
    k.gens.push_back(solve(incl.comp[x], m.gens[g] * incl.comp[y]));
  }
  return {std::move(k), std::move(incl)};
}

std::pair<Rep, RepMap> cokernel(const Rep& m, const Rep& n, const RepMap& f) {
  (void)m;
  Rep q;
  q.cat = n.cat;
  RepMap proj;
  for (std::size_t v = 0; v < n.dims.size(); ++v) {
    Matrix p = left_kernel_basis(f.comp[v]);
    if (p.cols() != n.dims[v]) p = Matrix(0, n.dims[v]);
    q.dims.push_back(p.rows());
    proj.comp.push_back(std::move(p));
  }
  const auto& gens = n.cat->generators();
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const int x = gens[g].src, y = gens[g].tgt;
    if (q.dims[x] == 0 || q.dims[y] == 0) {
      q.gens.emplace_back(q.dims[x], q.dims[y]);
      continue;
    }
    q.gens.push_back(solve_left(proj.comp[y], proj.comp[x] * n.gens[g]));
  }
  return {std::move(q), std::move(proj)};
}

Factorization map_factor(const Rep& m, const Rep& n, const RepMap& f) {
  same_category(m, n);
  Factorization out;
  std::tie(out.kernel, out.kernel_incl) = kernel(m, n, f);
  std::tie(out.cokernel, out.cokernel_proj) = cokernel(m, n, f);
  out.image.cat = m.cat;
  for (std::size_t v = 0; v < m.dims.size(); ++v) {
    Matrix b = column_space_basis(f.comp[v]);
    if (b.rows() != n.dims[v]) b = Matrix(n.dims[v], 0);
    out.image.dims.push_back(b.cols());
    out.image_proj.comp.push_back(b.cols() && m.dims[v] ? solve(b, f.comp[v]) : Matrix(b.cols(), m.dims[v]));
    out.image_incl.comp.push_back(std::move(b));
  }
  const auto& gens = m.cat->generators();
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const int x = gens[g].src, y = gens[g].tgt;
    const auto& dims = out.image.dims;
    if (dims[x] == 0 || dims[y] == 0) {
      out.image.gens.emplace_back(dims[x], dims[y]);
      continue;
    }
    out.image.gens.push_back(solve(out.image_incl.comp[x], n.gens[g] * out.image_incl.comp[y]));
  }
  return out;
}

Rep dualize(const Rep& m) {
  Rep d;
  d.cat = m.cat->opposite();
  d.dims = m.dims;
  for (const auto& g : m.gens) d.gens.push_back(g.transpose());
  return d;
}

RepMap dualize(const RepMap& f) {
  RepMap d;
  for (const auto& c : f.comp) d.comp.push_back(c.transpose());
  return d;
}

Scalar random_scalar(std::mt19937_64& rng, int range) {
  std::uniform_int_distribution<int> dist(-range, range);
  return Scalar(dist(rng));
}

VarietyMor random_varmor(const Category& c, const ObjectSum& src, const ObjectSum& tgt, std::mt19937_64& rng,
                         double density) {
  VarietyMor f = VarietyMor::zero(c, src, tgt);
  std::bernoulli_distribution keep(density);
  for (std::size_t i = 0; i < tgt.size(); ++i)
    for (std::size_t j = 0; j < src.size(); ++j)
      for (auto& s : f.entries[i][j])
        if (keep(rng)) s = random_scalar(rng);
  return f;
}

ObjectSum random_sum(const Category& c, std::mt19937_64& rng, std::size_t max_terms, const std::vector<int>& pool) {
  std::vector<int> all = pool;
  if (all.empty())
    for (int v = 0; v < c.size(); ++v) all.push_back(v);
  std::uniform_int_distribution<std::size_t> count(1, std::max<std::size_t>(1, max_terms));
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  ObjectSum s;
  for (std::size_t k = count(rng); k > 0; --k) s.push_back(all[pick(rng)]);
  std::sort(s.begin(), s.end());
  return s;
}

Rep random_rep(CategoryPtr c, std::mt19937_64& rng, std::size_t max_terms, const std::vector<int>& pool) {
  ObjectSum tgt = random_sum(*c, rng, max_terms, pool);
  ObjectSum src = random_sum(*c, rng, max_terms, pool);
  VarietyMor f = random_varmor(*c, src, tgt, rng);
  Rep p = proj_sum(c, src), q = proj_sum(c, tgt);
  return cokernel(p, q, varmor_to_projmap(*c, f)).first;
}

bool probe_equivalent(const Rep& a, const Rep& b) {
  if (a.cat != b.cat || a.dims != b.dims) return false;
  for (int v = 0; v < a.cat->size(); ++v) {
    Rep s = std_module(a.cat, v, ModuleKind::Simple);
    if (hom_dim(s, a) != hom_dim(s, b) || hom_dim(a, s) != hom_dim(b, s)) return false;
  }
  return true;
}

}  // namespace tq
