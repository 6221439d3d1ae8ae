#include "tq/functor.hpp"

#include "tq/error.hpp"
#include "tq/resolution.hpp"

namespace tq {

Vec CatFunctor::apply(int x, int y, const Vec& h) const {
  const Category& a = *src;
  const Category& b = *tgt;
  const int fx = obj[x], fy = obj[y];
  Vec out = b.zero(fx, fy);
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i].is_zero()) continue;
    for (const auto& [c, w] : a.basis_expr(x, y, i)) {
      Vec acc = b.identity(fx);
      int cur = x;
      for (int g : w) {
        const int nxt = a.generators()[g].tgt;
        acc = b.compose(fx, obj[cur], obj[nxt], gen_images[g], acc);
        cur = nxt;
      }
      const Scalar k = h[i] * c;
      for (std::size_t r = 0; r < out.size(); ++r) out[r] += k * acc[r];
    }
  }
  return out;
}

bool CatFunctor::is_functorial() const {
  const Category& a = *src;
  const Category& b = *tgt;
  if (obj.size() != static_cast<std::size_t>(a.size()) || gen_images.size() != a.generators().size()) return false;
  for (std::size_t g = 0; g < gen_images.size(); ++g) {
    const auto& gen = a.generators()[g];
    if (gen_images[g].size() != b.dim(obj[gen.src], obj[gen.tgt])) return false;
    if (apply(gen.src, gen.tgt, gen.coords) != gen_images[g]) return false;
  }
  const int n = a.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!a.dim(x, y)) continue;
      for (int z = 0; z < n; ++z) {
        if (!a.dim(y, z)) continue;
        for (std::size_t i = 0; i < a.dim(y, z); ++i)
          for (std::size_t j = 0; j < a.dim(x, y); ++j) {
            Vec lhs = apply(x, z, a.compose(x, y, z, a.unit(y, z, i), a.unit(x, y, j)));
            Vec rhs = b.compose(obj[x], obj[y], obj[z], apply(y, z, a.unit(y, z, i)), apply(x, y, a.unit(x, y, j)));
            if (lhs != rhs) return false;
          }
      }
    }
  return true;
}

CatFunctor identity_functor(CategoryPtr c) {
  CatFunctor f;
  f.src = c;
  f.tgt = c;
  for (int v = 0; v < c->size(); ++v) f.obj.push_back(v);
  for (const auto& g : c->generators()) f.gen_images.push_back(g.coords);
  return f;
}

CatFunctor inclusion_functor(CategoryPtr big, const std::vector<int>& objects) {
  CatFunctor f;
  f.src = big->full_subcategory(objects);
  f.tgt = big;
  f.obj = objects;
  // full subcategories keep the hom bases of the ambient category
  for (const auto& g : f.src->generators()) f.gen_images.push_back(g.coords);
  return f;
}

Vec path_element(const Category& c, int src, const std::vector<int>& gens) {
  Vec acc = c.identity(src);
  int cur = src;
  for (int g : gens) {
    const auto& gen = c.generators().at(g);
    if (gen.src != cur) throw Error(ErrorKind::InvalidArgument, "generators do not compose");
    acc = c.compose(src, cur, gen.tgt, gen.coords, acc);
    cur = gen.tgt;
  }
  return acc;
}

CatFunctor window_functor(const Window& from, CategoryPtr into, const std::vector<int>& vertex_map,
                          const std::vector<std::vector<int>>& arrow_paths) {
  CatFunctor f;
  f.src = from.category();
  f.tgt = into;
  f.obj = vertex_map;
  if (vertex_map.size() != static_cast<std::size_t>(from.quiver.vertex_count()) ||
      arrow_paths.size() != static_cast<std::size_t>(from.quiver.arrow_count()))
    throw Error(ErrorKind::InvalidArgument, "functor data has the wrong size");
  for (int a = 0; a < from.quiver.arrow_count(); ++a) {
    const Arrow& ar = from.quiver.arrow(a);
    const int s = vertex_map[ar.src], t = vertex_map[ar.tgt];
    int end = s;
    for (int g : arrow_paths[a]) {
      const auto& gen = into->generators().at(g);
      if (gen.src != end) throw Error(ErrorKind::NotFunctorial, "path for arrow " + ar.name + " is not composable");
      end = gen.tgt;
    }
    if (end != t) throw Error(ErrorKind::NotFunctorial, "path for arrow " + ar.name + " has the wrong endpoints");
    f.gen_images.push_back(path_element(*into, s, arrow_paths[a]));
  }
  if (!f.is_functorial()) throw Error(ErrorKind::NotFunctorial, "assigned paths violate the relations");
  return f;
}

Rep restrict(const Rep& m, const CatFunctor& f) {
  if (m.cat != f.tgt) throw Error(ErrorKind::WindowMismatch, "representation is not over the functor's target");
  if (!f.is_functorial()) throw Error(ErrorKind::NotFunctorial, "assigned paths violate the relations");
  Rep r;
  r.cat = f.src;
  for (int v : f.obj) r.dims.push_back(m.dims[v]);
  const auto& gens = f.src->generators();
  for (std::size_t g = 0; g < gens.size(); ++g)
    r.gens.push_back(m.act(f.obj[gens[g].src], f.obj[gens[g].tgt], f.gen_images[g]));
  return r;
}

Rep induce(const Rep& m, const CatFunctor& f) {
  if (m.cat != f.src) throw Error(ErrorKind::WindowMismatch, "representation is not over the functor's source");
  const Category& b = *f.src;
  const Category& a = *f.tgt;
  Cover c0 = projective_cover(m);
  ObjectSum t0;
  for (int v : c0.terms) t0.push_back(f.obj[v]);
  Rep p0 = proj_sum(f.tgt, t0);
  auto [k, incl] = kernel(proj_sum(f.src, c0.terms), m, c0.map);
  if (k.is_zero()) return p0;
  Cover c1 = projective_cover(k);
  VarietyMor d = projmap_to_varmor(b, c1.terms, c0.terms, compose(incl, c1.map));
  ObjectSum t1;
  for (int v : c1.terms) t1.push_back(f.obj[v]);
  VarietyMor fd = VarietyMor::zero(a, t1, t0);
  for (std::size_t i = 0; i < t0.size(); ++i)
    for (std::size_t j = 0; j < t1.size(); ++j) fd.entries[i][j] = f.apply(d.src[j], d.tgt[i], d.entries[i][j]);
  return cokernel(proj_sum(f.tgt, t1), p0, varmor_to_projmap(a, fd)).first;
}

}  // namespace tq
