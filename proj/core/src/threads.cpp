#include "tq/threads.hpp"

#include <algorithm>
#include <set>

#include "tq/error.hpp"
#include "tq/resolution.hpp"

namespace tq {

RadDims rad_irr_dims(const Category& c, int x, int y) {
  RadDims d;
  if (x == y || c.dim(x, y) == 0) return d;
  d.rad = c.dim(x, y);
  std::vector<Vec> span;
  for (int z = 0; z < c.size(); ++z) {
    if (z == x || z == y || !c.dim(x, z) || !c.dim(z, y)) continue;
    for (std::size_t i = 0; i < c.dim(z, y); ++i)
      for (std::size_t j = 0; j < c.dim(x, z); ++j) span.push_back(c.compose(x, z, y, c.unit(z, y, i), c.unit(x, z, j)));
  }
  Matrix m(d.rad, span.size());
  for (std::size_t k = 0; k < span.size(); ++k)
    for (std::size_t r = 0; r < d.rad; ++r) m(r, k) = span[k][r];
  d.rad2 = span.empty() ? 0 : rank(m);
  d.irr = d.rad - d.rad2;
  return d;
}

Quiver gabriel_quiver(const Category& c) {
  Quiver q;
  for (int v = 0; v < c.size(); ++v) q.add_vertex(c.name(v));
  for (int x = 0; x < c.size(); ++x)
    for (int y = 0; y < c.size(); ++y) {
      const std::size_t k = rad_irr_dims(c, x, y).irr;
      for (std::size_t i = 0; i < k; ++i)
        q.add_arrow(c.name(x) + "->" + c.name(y) + "#" + std::to_string(i), x, y);
    }
  return q;
}

ObjectSum almost_split(CategoryPtr c, int v, Side side, bool strict) {
  if (strict && c->is_boundary(v))
    throw Error(ErrorKind::BoundaryContaminated, c->name(v) + " lies on the window boundary");
  Rep s = std_module(c, v, ModuleKind::Simple);
  Presentation p = side == Side::Left ? projective_presentation(s) : injective_copresentation(s);
  if (strict && !p.faithful)
    throw Error(ErrorKind::BoundaryContaminated, "presentation of S(" + c->name(v) + ") reaches the boundary");
  return p.second;
}

ThreadAnalysis thread_analysis(CategoryPtr c) {
  const int n = c->size();
  ThreadAnalysis ta;
  ta.thread_vertex.assign(n, false);
  std::vector<ObjectSum> left(n), right(n);
  for (int v = 0; v < n; ++v) {
    left[v] = almost_split(c, v, Side::Left, false);
    right[v] = almost_split(c, v, Side::Right, false);
    ta.thread_vertex[v] = left[v].size() == 1 && right[v].size() == 1;
  }
  for (int v : c->topological_order()) {
    if (!ta.thread_vertex[v] || ta.thread_vertex[left[v][0]]) continue;
    std::vector<int> run{v};
    while (ta.thread_vertex[right[run.back()][0]]) run.push_back(right[run.back()][0]);
    ta.maximal.push_back(std::move(run));
  }
  return ta;
}

std::vector<int> interval(const Category& c, int x, int y) {
  std::vector<int> out;
  for (int a = 0; a < c.size(); ++a)
    if (c.dim(x, a) && c.dim(a, y)) out.push_back(a);
  return out;
}

Report thread_hom_check(CategoryPtr c) {
  Report rep;
  rep.check = "threads";
  ThreadAnalysis ta = thread_analysis(c);
  for (const auto& run : ta.maximal) {
    const std::string subject = "thread [" + c->name(run.front()) + ", " + c->name(run.back()) + "]";
    std::string homs = "1", segs = "segments", nest = "nested";
    std::vector<std::vector<std::vector<int>>> iv(run.size(), std::vector<std::vector<int>>(run.size()));
    for (std::size_t i = 0; i < run.size(); ++i)
      for (std::size_t j = i; j < run.size(); ++j) {
        const std::size_t d = c->dim(run[i], run[j]);
        if (d != 1 && homs == "1")
          homs = "dim hom(" + c->name(run[i]) + ", " + c->name(run[j]) + ") = " + std::to_string(d);
        iv[i][j] = interval(*c, run[i], run[j]);
        std::vector<int> seg(run.begin() + i, run.begin() + j + 1);
        std::sort(seg.begin(), seg.end());
        if (iv[i][j] != seg && segs == "segments")
          segs = "[" + c->name(run[i]) + ", " + c->name(run[j]) + "] leaves the thread";
      }
    for (std::size_t i = 0; i < run.size(); ++i)
      for (std::size_t j = i; j < run.size(); ++j)
        for (std::size_t k = j + 1; k < run.size(); ++k) {
          const auto& a = iv[i][j];
          const auto& b = iv[i][k];
          if (!std::includes(b.begin(), b.end(), a.begin(), a.end()) &&
              !std::includes(a.begin(), a.end(), b.begin(), b.end()) && nest == "nested")
            nest = "[" + c->name(run[i]) + ", " + c->name(run[j]) + "] and [" + c->name(run[i]) + ", " +
                   c->name(run[k]) + "] are not nested";
        }
    rep.add(subject + " hom", "1", homs);
    rep.add(subject + " intervals", "segments", segs);
    rep.add(subject + " nesting", "nested", nest);
  }
  return rep;
}

ThreadQuiver extract_threadquiver(const Window& w, int min_len) {
  CategoryPtr c = w.category();
  const Quiver& q = w.quiver;
  ThreadAnalysis ta = thread_analysis(c);
  std::vector<int> owner(q.vertex_count(), -1);
  std::vector<std::vector<int>> runs;
  for (const auto& run : ta.maximal)
    if (static_cast<int>(run.size()) >= min_len) {
      for (int v : run) owner[v] = static_cast<int>(runs.size());
      runs.push_back(run);
    }
  auto touches = [&](int a) { return owner[q.arrow(a).src] >= 0 || owner[q.arrow(a).tgt] >= 0; };

  ThreadQuiver tq;
  for (int v = 0; v < q.vertex_count(); ++v)
    if (owner[v] < 0) tq.vertices.push_back(q.vertex(v));
  for (int a = 0; a < q.arrow_count(); ++a)
    if (!touches(a)) tq.standard.push_back({q.arrow(a).name, q.vertex(q.arrow(a).src), q.vertex(q.arrow(a).tgt)});
  for (const auto& run : runs) {
    const auto in = q.in_arrows(run.front());
    const auto out = q.out_arrows(run.back());
    if (in.size() != 1 || out.size() != 1)
      throw Error(ErrorKind::InvalidArgument, "thread ends are not joined by single arrows");
    const Arrow& first = q.arrow(in[0]);
    const Arrow& last = q.arrow(out[0]);
    tq.threads.push_back({first.name, q.vertex(first.src), q.vertex(last.tgt),
                          LinearOrderExpr::fin(static_cast<int>(run.size()))});
  }
  for (const auto& r : w.relations) {
    NamedRelation nr;
    for (const auto& [k, p] : r.terms) {
      std::vector<std::string> names;
      for (int a : p.arrows) {
        if (touches(a)) throw Error(ErrorKind::InvalidArgument, "a relation runs through a contracted thread");
        names.push_back(q.arrow(a).name);
      }
      nr.terms.emplace_back(k, std::move(names));
    }
    tq.relations.push_back(std::move(nr));
  }
  return tq;
}

namespace {

// Kernel of m -> sum of all maps m -> z, z in targets.
std::pair<Rep, RepMap> common_kernel(const Rep& m, const std::vector<Rep>& targets) {
  RepMap all;
  for (std::size_t v = 0; v < m.dims.size(); ++v) all.comp.emplace_back(0, m.dims[v]);
  for (const auto& z : targets)
    for (const auto& phi : hom_basis(m, z).basis)
      for (std::size_t v = 0; v < m.dims.size(); ++v) all.comp[v] = vstack(m.dims[v], {all.comp[v], phi.comp[v]});
  return kernel(m, m, all);
}

// The cover P(terms) -> m when it is an isomorphism.
Cover projective_iso(const Rep& m, const char* what) {
  Cover cv = projective_cover(m);
  if (proj_sum(m.cat, cv.terms).dims != m.dims) throw Error(ErrorKind::NotRepresentable, what);
  return cv;
}

RepMap inverse_map(const RepMap& f) {
  RepMap g;
  for (const auto& m : f.comp) g.comp.push_back(m.rows() ? inverse(m) : Matrix(0, 0));
  return g;
}

VarietyMor remap(const Category& c, const VarietyMor& f, const std::vector<int>& objs) {
  ObjectSum s, t;
  for (int v : f.src) s.push_back(objs[v]);
  for (int v : f.tgt) t.push_back(objs[v]);
  VarietyMor g = VarietyMor::zero(c, s, t);
  g.entries = f.entries;
  return g;
}

}  // namespace

namespace {

void check_ext_orthogonal(const Category& c, const std::vector<Rep>& z) {
  const int bound = c.size() + 1;
  for (const auto& z1 : z)
    for (const auto& z2 : z)
      if (ext_dim(1, z1, z2, bound) != 0) throw Error(ErrorKind::ZNotExtOrthogonal, "Ext^1 between members of Z");
}

// Right adjoint image of a, Z already known to be Ext-orthogonal.
AdjointImage perp_right(CategoryPtr c, int a, const std::vector<Rep>& z) {
  Rep p = std_module(c, a, ModuleKind::Projective);
  auto [k, incl] = common_kernel(p, z);
  AdjointImage out;
  if (k.is_zero()) {
    out.map = VarietyMor::zero(*c, {}, {a});
    return out;
  }
  Cover cv = projective_iso(k, "kernel is not representable");
  out.object = cv.terms;
  out.map = projmap_to_varmor(*c, cv.terms, {a}, compose(incl, cv.map));
  return out;
}

std::vector<AdjointImage> perp_all(CategoryPtr c, const std::vector<int>& objs, const std::vector<Rep>& z,
                                   Side side, bool check) {
  if (side == Side::Left) {
    CategoryPtr op = c->opposite();
    std::vector<Rep> dz;
    for (const auto& m : z) dz.push_back(dualize(m));
    std::vector<AdjointImage> out = perp_all(op, objs, dz, Side::Right, check);
    for (auto& r : out) r.map = opposite_mor(*c, r.map);
    return out;
  }
  if (check) check_ext_orthogonal(*c, z);
  std::vector<AdjointImage> out;
  for (int a : objs) out.push_back(perp_right(c, a, z));
  return out;
}

std::vector<int> all_objects(const Category& c) {
  std::vector<int> v(c.size());
  for (int k = 0; k < c.size(); ++k) v[k] = k;
  return v;
}

// Left adjoint images of [x, y] -> c for the objects in objs.
std::vector<AdjointImage> interval_left(CategoryPtr c, int x, int y, const std::vector<int>& objs) {
  if (interval(*c, x, y).empty()) throw Error(ErrorKind::InvalidArgument, "empty interval");

  // hom(-, zs) = kernel of hom(-, y) -> hom(x, -)* (x) hom(x, y)
  auto [kz, kincl] = common_kernel(std_module(c, y, ModuleKind::Projective), {std_module(c, x, ModuleKind::Injective)});
  ObjectSum zs;
  if (!kz.is_zero()) zs = projective_iso(kz, "kernel is not representable").terms;

  std::vector<int> supp;
  for (int b = 0; b < c->size(); ++b)
    if (c->dim(b, y)) supp.push_back(b);
  CatFunctor inc = inclusion_functor(c, supp);
  std::vector<int> pos(c->size(), -1);
  for (std::size_t k = 0; k < supp.size(); ++k) pos[supp[k]] = static_cast<int>(k);
  std::vector<Rep> zmods;
  for (int z : zs) zmods.push_back(restrict(std_module(c, z, ModuleKind::Projective), inc));
  std::vector<AdjointImage> perp = perp_all(inc.src, all_objects(*inc.src), zmods, Side::Left, true);

  std::vector<AdjointImage> result;
  for (int a : objs) {
    AdjointImage first = supp_adjoint(c, a, y);
    AdjointImage out;
    std::vector<VarietyMor> parts;
    for (int t : first.object) {
      if (pos[t] < 0) throw Error(ErrorKind::NotRepresentable, "supp adjoint left the support");
      VarietyMor m = remap(*c, perp[pos[t]].map, supp);
      for (int v : m.tgt) out.object.push_back(v);
      parts.push_back(std::move(m));
    }
    // block diagonal first.object -> out.object
    VarietyMor second = VarietyMor::zero(*c, first.object, out.object);
    std::size_t col = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (std::size_t r = 0; r < parts[i].tgt.size(); ++r) second.entries[col + r][i] = parts[i].entries[r][0];
      col += parts[i].tgt.size();
    }
    out.map = compose(*c, second, first.map);
    result.push_back(std::move(out));
  }
  return result;
}

std::vector<AdjointImage> interval_all(CategoryPtr c, int x, int y, const std::vector<int>& objs, Side side) {
  if (side == Side::Left) return interval_left(c, x, y, objs);
  CategoryPtr op = c->opposite();
  std::vector<AdjointImage> out = interval_left(op, y, x, objs);
  for (auto& r : out) r.map = opposite_mor(*c, r.map);
  return out;
}

}  // namespace

AdjointImage perp_adjoint(CategoryPtr c, int a, const std::vector<Rep>& z, Side side) {
  return perp_all(c, {a}, z, side, true).front();
}

std::vector<AdjointImage> perp_adjoints(CategoryPtr c, const std::vector<Rep>& z, Side side) {
  return perp_all(c, all_objects(*c), z, side, true);
}

AdjointImage supp_adjoint(CategoryPtr c, int a, int y) {
  AdjointImage out;
  if (c->dim(a, y) == 0) {
    out.map = VarietyMor::zero(*c, {a}, {});
    return out;
  }
  Rep p = std_module(c, a, ModuleKind::Projective);
  auto [k, incl] = common_kernel(p, {std_module(c, y, ModuleKind::Projective)});
  auto [img, proj] = cokernel(k, p, incl);
  Cover cv = projective_iso(img, "image is not representable");
  out.object = cv.terms;
  out.map = projmap_to_varmor(*c, {a}, cv.terms, compose(inverse_map(cv.map), proj));
  return out;
}

AdjointImage interval_adjoint(CategoryPtr c, int x, int y, int a, Side side) {
  return interval_all(c, x, y, {a}, side).front();
}

std::vector<AdjointImage> interval_adjoints(CategoryPtr c, int x, int y, Side side) {
  return interval_all(c, x, y, all_objects(*c), side);
}

Report adjunction_check(const CatFunctor& i, const std::optional<std::vector<ObjectSum>>& left,
                        const std::optional<std::vector<ObjectSum>>& right) {
  const Category& sub = *i.src;
  const Category& big = *i.tgt;
  Report rep;
  rep.check = "adjunction";
  auto join = [](const std::vector<std::size_t>& v) {
    std::string s;
    for (auto d : v) s += (s.empty() ? "" : ",") + std::to_string(d);
    return s;
  };
  for (int a = 0; a < sub.size(); ++a) {
    std::vector<std::size_t> e, g;
    for (int b = 0; b < sub.size(); ++b) {
      e.push_back(sub.dim(a, b));
      g.push_back(big.dim(i.obj[a], i.obj[b]));
    }
    rep.add("fully faithful at " + sub.name(a), join(e), join(g));
  }
  for (int z = 0; z < big.size(); ++z) {
    if (left) {
      std::vector<std::size_t> e, g;
      for (int b = 0; b < sub.size(); ++b) {
        std::size_t s = 0;
        for (int t : (*left)[z]) s += sub.dim(t, b);
        e.push_back(big.dim(z, i.obj[b]));
        g.push_back(s);
      }
      rep.add("left adjoint at " + big.name(z), join(e), join(g));
    }
    if (right) {
      std::vector<std::size_t> e, g;
      for (int b = 0; b < sub.size(); ++b) {
        std::size_t s = 0;
        for (int t : (*right)[z]) s += sub.dim(b, t);
        e.push_back(big.dim(i.obj[b], z));
        g.push_back(s);
      }
      rep.add("right adjoint at " + big.name(z), join(e), join(g));
    }
  }
  return rep;
}

Rep interval_module(CategoryPtr c, const std::vector<int>& objects) {
  std::set<int> in(objects.begin(), objects.end());
  Rep r;
  r.cat = c;
  for (int v = 0; v < c->size(); ++v) r.dims.push_back(in.count(v) ? 1 : 0);
  for (const auto& g : c->generators()) {
    if (in.count(g.src) && in.count(g.tgt))
      r.gens.push_back(Matrix::identity(1));
    else
      r.gens.emplace_back(r.dims[g.src], r.dims[g.tgt]);
  }
  return r;
}

}  // namespace tq
