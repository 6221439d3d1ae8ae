#include "oracles.hpp"

#include "tq/resolution.hpp"

namespace tq::testing {

bool is_projective(const Rep& m) { return proj_sum(m.cat, projective_cover(m).terms).dims == m.dims; }

bool is_split_mono(const Rep& m, const Rep& n, const RepMap& f) {
  // columns: r_i f flattened, last column the identity of m
  std::size_t len = 0;
  for (auto d : m.dims) len += d * d;
  if (len == 0) return true;
  const HomSpace h = hom_basis(n, m);
  Matrix a(len, h.dimension + 1);
  auto put = [&](std::size_t col, const RepMap& g) {
    std::size_t r = 0;
    for (std::size_t v = 0; v < m.dims.size(); ++v)
      for (std::size_t i = 0; i < m.dims[v]; ++i)
        for (std::size_t j = 0; j < m.dims[v]; ++j) a(r++, col) = g.comp[v](i, j);
  };
  for (std::size_t k = 0; k < h.dimension; ++k) put(k, compose(h.basis[k], f));
  put(h.dimension, RepMap::identity(m));
  return rank(a) == rank(a.block(0, 0, len, h.dimension));
}

std::size_t count_paths(const Quiver& q, int x, int y) {
  std::vector<std::size_t> n(q.vertex_count(), 0);
  n[x] = 1;
  for (int v : topological_order(q))
    for (int a : q.out_arrows(v)) n[q.arrow(a).tgt] += n[v];
  return n[y];
}

bool same_rep(const Rep& a, const Rep& b) {
  if (a.dims != b.dims || a.gens.size() != b.gens.size()) return false;
  for (std::size_t k = 0; k < a.gens.size(); ++k)
    if (!(a.gens[k] == b.gens[k])) return false;
  return true;
}

}  // namespace tq::testing
