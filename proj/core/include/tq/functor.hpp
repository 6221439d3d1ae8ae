#pragma once

#include <vector>

#include "tq/rep.hpp"
#include "tq/threadquiver.hpp"

namespace tq {

// A k-linear functor src -> tgt given on objects and generators.
struct CatFunctor {
  CategoryPtr src;
  CategoryPtr tgt;
  std::vector<int> obj;         // src object -> tgt object
  std::vector<Vec> gen_images;  // src generator -> element of hom_tgt

  // F applied to an arbitrary element of hom_src(x, y).
  Vec apply(int x, int y, const Vec& h) const;
  // Whether composition is respected on all basis elements.
  bool is_functorial() const;
};

CatFunctor identity_functor(CategoryPtr c);
// The full subcategory on `objects` with its inclusion.
CatFunctor inclusion_functor(CategoryPtr big, const std::vector<int>& objects);
// Element of hom represented by a path of generators (traversal order).
Vec path_element(const Category& c, int src, const std::vector<int>& gens);

// Functor from a window's category into another category: each vertex goes
// to vertex_map[v] and each arrow to the given path of target generators.
// Throws NotFunctorial when the relations of `from` are not respected.
CatFunctor window_functor(const Window& from, CategoryPtr into, const std::vector<int>& vertex_map,
                          const std::vector<std::vector<int>>& arrow_paths);

// M o F. Throws NotFunctorial.
Rep restrict(const Rep& m, const CatFunctor& f);
// Left adjoint of restriction, via a projective presentation of m over f.src.
Rep induce(const Rep& m, const CatFunctor& f);

}  // namespace tq
