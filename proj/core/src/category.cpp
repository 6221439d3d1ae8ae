#include "tq/category.hpp"

#include <algorithm>

#include "tq/error.hpp"

namespace tq {

void Category::init_storage(std::vector<std::string> names) {
  names_ = std::move(names);
  index_.clear();
  for (int i = 0; i < size(); ++i) index_[names_[i]] = i;
  const std::size_t n = names_.size();
  dims_.assign(n * n, 0);
  exprs_.assign(n * n, {});
  if (cuts_.size() != n) cuts_.assign(n, 0);
}

int Category::index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw Error(ErrorKind::UnknownVertex, name);
  return it->second;
}

std::vector<int> Category::gens_out(int x) const {
  std::vector<int> r;
  for (int g = 0; g < static_cast<int>(gens_.size()); ++g)
    if (gens_[g].src == x) r.push_back(g);
  return r;
}

std::vector<int> Category::gens_in(int x) const {
  std::vector<int> r;
  for (int g = 0; g < static_cast<int>(gens_.size()); ++g)
    if (gens_[g].tgt == x) r.push_back(g);
  return r;
}

const Matrix* Category::mult(int x, int y, int z) const {
  auto it = mult_.find(key(x, y, z));
  return it == mult_.end() ? nullptr : &it->second;
}

Vec Category::unit(int x, int y, std::size_t i) const {
  Vec v = zero(x, y);
  v.at(i) = Scalar(1);
  return v;
}

Vec Category::compose(int x, int y, int z, const Vec& g, const Vec& f) const {
  Vec out = zero(x, z);
  const Matrix* m = mult(x, y, z);
  if (!m) return out;
  const std::size_t dxy = dim(x, y);
  Scalar coef, t;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].is_zero()) continue;
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (f[j].is_zero()) continue;
      coef = g[i];
      coef *= f[j];
      const std::size_t c = i * dxy + j;
      for (std::size_t r = 0; r < out.size(); ++r) {
        const Scalar& e = (*m)(r, c);
        if (e.is_zero()) continue;
        t = coef;
        t *= e;
        out[r] += t;
      }
    }
  }
  return out;
}

void Category::compute_topological_order() {
  const int n = size();
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> succ(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && dim(x, y) > 0) {
        ++indeg[y];
        succ[x].push_back(y);
      }
  topo_.clear();
  std::vector<int> ready;
  for (int v = n - 1; v >= 0; --v)
    if (indeg[v] == 0) ready.push_back(v);
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    topo_.push_back(v);
    for (auto it = succ[v].rbegin(); it != succ[v].rend(); ++it)
      if (--indeg[*it] == 0) ready.push_back(*it);
  }
  if (static_cast<int>(topo_.size()) != n) throw Error(ErrorKind::NonAcyclic, "category has cycles");
}

namespace {

void add_scaled(Expr& acc, const Scalar& c, const Expr& e) {
  for (const auto& [k, w] : e) {
    Scalar v = c * k;
    auto it = std::find_if(acc.begin(), acc.end(), [&](const auto& t) { return t.second == w; });
    if (it == acc.end())
      acc.emplace_back(v, w);
    else
      it->first += v;
  }
  acc.erase(std::remove_if(acc.begin(), acc.end(), [](const auto& t) { return t.first.is_zero(); }), acc.end());
}

}  // namespace

void Category::derive_expressions() {
  const int n = size();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[topo_[i]] = i;
  for (int x = 0; x < n; ++x) {
    exprs_[x * n + x] = {Expr{{Scalar(1), Word{}}}};
    for (int y : topo_) {
      if (y == x || pos[y] < pos[x] || dim(x, y) == 0) continue;
      std::vector<Vec> cand;
      std::vector<Expr> cand_expr;
      for (int g = 0; g < static_cast<int>(gens_.size()); ++g) {
        const auto& gen = gens_[g];
        if (gen.tgt != y) continue;
        const int z = gen.src;
        for (std::size_t b = 0; b < dim(x, z); ++b) {
          cand.push_back(compose(x, z, y, gen.coords, unit(x, z, b)));
          Expr e;
          for (const auto& [c, w] : exprs_[x * n + z][b]) {
            Word w2 = w;
            w2.push_back(g);
            e.emplace_back(c, std::move(w2));
          }
          cand_expr.push_back(std::move(e));
        }
      }
      const std::size_t d = dim(x, y);
      Matrix cm(d, cand.size());
      for (std::size_t c = 0; c < cand.size(); ++c)
        for (std::size_t r = 0; r < d; ++r) cm(r, c) = cand[c][r];
      auto sol = try_solve(cm, Matrix::identity(d));
      if (!sol) throw Error(ErrorKind::InvalidArgument, "generators do not generate hom(" + names_[x] + "," + names_[y] + ")");
      std::vector<Expr> basis(d);
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t c = 0; c < cand.size(); ++c)
          if (!(*sol)(c, k).is_zero()) add_scaled(basis[k], (*sol)(c, k), cand_expr[c]);
      exprs_[x * n + y] = std::move(basis);
    }
  }
}

CategoryPtr Category::from_quiver(const Quiver& q, const std::vector<Relation>& rels,
                                  const std::vector<std::uint8_t>& cuts) {
  for (const auto& r : rels) validate_relation(q, r);
  PathTable table = all_paths(q);
  auto c = make();
  c->cuts_ = cuts;
  c->init_storage(q.vertices());
  const int n = c->size();

  std::vector<HomPaths> hp(static_cast<std::size_t>(n) * n);
  std::vector<std::map<std::vector<int>, std::size_t>> lookup(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (table[x][y].empty()) continue;
      auto& h = hp[x * n + y];
      h = hom_basis_paths(q, rels, table, x, y);
      c->dims_[x * n + y] = h.dimension;
      for (std::size_t i = 0; i < h.paths.size(); ++i) lookup[x * n + y][h.paths[i].arrows] = i;
      auto& ex = c->exprs_[x * n + y];
      for (auto b : h.basis) ex.push_back(Expr{{Scalar(1), h.paths[b].arrows}});
    }

  for (int ai = 0; ai < q.arrow_count(); ++ai) {
    const auto& a = q.arrow(ai);
    const auto& h = hp[a.src * n + a.tgt];
    c->gens_.push_back({a.name, a.src, a.tgt, h.reduction.col(lookup[a.src * n + a.tgt].at({ai}))});
  }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const std::size_t dxy = c->dim(x, y);
      if (!dxy) continue;
      for (int z = 0; z < n; ++z) {
        const std::size_t dyz = c->dim(y, z), dxz = c->dim(x, z);
        if (!dyz || !dxz) continue;
        const auto& hxy = hp[x * n + y];
        const auto& hyz = hp[y * n + z];
        const auto& hxz = hp[x * n + z];
        Matrix m(dxz, dyz * dxy);
        for (std::size_t i = 0; i < dyz; ++i)
          for (std::size_t j = 0; j < dxy; ++j) {
            std::vector<int> w = hxy.paths[hxy.basis[j]].arrows;
            const auto& tail = hyz.paths[hyz.basis[i]].arrows;
            w.insert(w.end(), tail.begin(), tail.end());
            const std::size_t pi = lookup[x * n + z].at(w);
            for (std::size_t r = 0; r < dxz; ++r) m(r, i * dxy + j) = hxz.reduction(r, pi);
          }
        if (!m.is_zero()) c->mult_.emplace(c->key(x, y, z), std::move(m));
      }
    }
  c->compute_topological_order();
  return c;
}

CategoryPtr Category::opposite() const {
  std::lock_guard<std::mutex> lock(op_mutex_);
  if (op_strong_) return op_strong_;
  if (auto w = op_weak_.lock()) return w;
  auto o = make();
  for (auto f : cuts_)
    o->cuts_.push_back(static_cast<std::uint8_t>(((f & kCutBefore) ? kCutAfter : 0) | ((f & kCutAfter) ? kCutBefore : 0)));
  o->init_storage(names_);
  const int n = size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      o->dims_[x * n + y] = dim(y, x);
      for (const auto& e : exprs_[y * n + x]) {
        Expr r;
        for (const auto& [c, w] : e) r.emplace_back(c, Word(w.rbegin(), w.rend()));
        o->exprs_[x * n + y].push_back(std::move(r));
      }
    }
  for (const auto& g : gens_) o->gens_.push_back({g.name, g.tgt, g.src, g.coords});
  for (const auto& [k, m] : mult_) {
    const int z = static_cast<int>(k % n);
    const int y = static_cast<int>((k / n) % n);
    const int x = static_cast<int>(k / n / n);
    // original (x,y,z) becomes opposite (z,y,x)
    const std::size_t d_op_zy = dim(y, z);  // hom_op(z, y)
    const std::size_t d_op_yx = dim(x, y);  // hom_op(y, x)
    Matrix om(m.rows(), m.cols());
    for (std::size_t i = 0; i < d_op_yx; ++i)
      for (std::size_t j = 0; j < d_op_zy; ++j) {
        // op column i*dim_op(z,y)+j is e_i(op hom(y,x)) o_op e_j(op hom(z,y)) = e_j o e_i in the original
        const std::size_t orig = j * dim(x, y) + i;
        for (std::size_t r = 0; r < m.rows(); ++r) om(r, i * d_op_zy + j) = m(r, orig);
      }
    o->mult_.emplace(o->key(z, y, x), std::move(om));
  }
  o->topo_.assign(topo_.rbegin(), topo_.rend());
  o->op_weak_ = shared_from_this();
  op_strong_ = o;
  return o;
}

CategoryPtr Category::full_subcategory(const std::vector<int>& objects) const {
  auto s = make();
  std::vector<std::string> names;
  for (int x : objects) {
    names.push_back(names_.at(x));
    s->cuts_.push_back(cuts_.at(x));
  }
  s->init_storage(std::move(names));
  const int m = s->size();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) s->dims_[a * m + b] = dim(objects[a], objects[b]);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        if (const Matrix* mm = mult(objects[a], objects[b], objects[c])) s->mult_.emplace(s->key(a, b, c), *mm);

  // Generators: a complement of rad^2 inside each hom(x, y), x != y.
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const std::size_t d = s->dim(a, b);
      if (a == b || d == 0) continue;
      std::vector<Vec> span;
      for (int c = 0; c < m; ++c) {
        if (c == a || c == b) continue;
        for (std::size_t i = 0; i < s->dim(c, b); ++i)
          for (std::size_t j = 0; j < s->dim(a, c); ++j) span.push_back(s->compose(a, c, b, s->unit(c, b, i), s->unit(a, c, j)));
      }
      Matrix sm(d, span.size());
      for (std::size_t k = 0; k < span.size(); ++k)
        for (std::size_t r = 0; r < d; ++r) sm(r, k) = span[k][r];
      std::size_t rk = rank(sm);
      int count = 0;
      for (std::size_t e = 0; e < d && rk < d; ++e) {
        Matrix ext = hstack(d, {sm, Matrix::column(s->unit(a, b, e))});
        std::size_t r2 = rank(ext);
        if (r2 > rk) {
          sm = ext;
          rk = r2;
          s->gens_.push_back({s->names_[a] + "->" + s->names_[b] + "#" + std::to_string(count++), a, b, s->unit(a, b, e)});
        }
      }
    }
  s->compute_topological_order();
  s->derive_expressions();
  return s;
}

std::string sum_str(const Category& c, const ObjectSum& s) {
  if (s.empty()) return "0";
  std::map<int, int> mult;
  for (int x : s) ++mult[x];
  std::string out;
  for (const auto& [x, k] : mult) {
    if (!out.empty()) out += " + ";
    if (k > 1) out += std::to_string(k) + "*";
    out += c.name(x);
  }
  return out;
}

VarietyMor VarietyMor::zero(const Category& c, ObjectSum src, ObjectSum tgt) {
  VarietyMor f{std::move(src), std::move(tgt), {}};
  f.entries.resize(f.tgt.size());
  for (std::size_t i = 0; i < f.tgt.size(); ++i)
    for (std::size_t j = 0; j < f.src.size(); ++j) f.entries[i].push_back(c.zero(f.src[j], f.tgt[i]));
  return f;
}

VarietyMor VarietyMor::identity(const Category& c, const ObjectSum& s) {
  VarietyMor f = zero(c, s, s);
  for (std::size_t i = 0; i < s.size(); ++i) f.entries[i][i] = c.identity(s[i]);
  return f;
}

VarietyMor compose(const Category& c, const VarietyMor& g, const VarietyMor& f) {
  if (g.src != f.tgt) throw Error(ErrorKind::DimensionMismatch, "variety morphisms do not compose");
  VarietyMor h = VarietyMor::zero(c, f.src, g.tgt);
  for (std::size_t k = 0; k < g.tgt.size(); ++k)
    for (std::size_t j = 0; j < f.src.size(); ++j)
      for (std::size_t i = 0; i < f.tgt.size(); ++i) {
        Vec t = c.compose(f.src[j], f.tgt[i], g.tgt[k], g.entries[k][i], f.entries[i][j]);
        for (std::size_t r = 0; r < t.size(); ++r) h.entries[k][j][r] += t[r];
      }
  return h;
}

VarietyMor opposite_mor(const Category& into, const VarietyMor& f) {
  VarietyMor g = VarietyMor::zero(into, f.tgt, f.src);
  for (std::size_t i = 0; i < f.tgt.size(); ++i)
    for (std::size_t j = 0; j < f.src.size(); ++j) g.entries[j][i] = f.entries[i][j];
  return g;
}

}  // namespace tq
