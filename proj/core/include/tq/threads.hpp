#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tq/functor.hpp"
#include "tq/report.hpp"
#include "tq/threadquiver.hpp"

namespace tq {

struct RadDims {
  std::size_t rad = 0;
  std::size_t rad2 = 0;
  std::size_t irr = 0;
};

RadDims rad_irr_dims(const Category& c, int x, int y);
// One arrow x -> y per dimension of irr(x, y).
Quiver gabriel_quiver(const Category& c);

enum class Side { Left, Right };

// Left: the N of the left almost split map N -> v (from a projective
// presentation of S_v); Right: the M of v -> M. With strict set, throws
// BoundaryContaminated when the presentation reaches the boundary.
ObjectSum almost_split(CategoryPtr c, int v, Side side, bool strict = true);

struct ThreadAnalysis {
  std::vector<bool> thread_vertex;
  std::vector<std::vector<int>> maximal;  // each a run first .. last of thread vertices
};

ThreadAnalysis thread_analysis(CategoryPtr c);
// Objects A with hom(x, A) and hom(A, y) both nonzero, in index order.
std::vector<int> interval(const Category& c, int x, int y);

// dim hom = 1 between comparable objects of each maximal thread, intervals
// inside a thread are the thread segments, and nesting for a common start.
Report thread_hom_check(CategoryPtr c);

// Contracts maximal threads with at least min_len objects into thread arrows
// labelled Fin(length). Throws InvalidArgument when a relation crosses a
// contracted thread.
ThreadQuiver extract_threadquiver(const Window& w, int min_len);

// An adjoint image: the object together with the unit A -> A' (Left) or the
// counit A' -> A (Right), written as a morphism of c.
struct AdjointImage {
  ObjectSum object;
  VarietyMor map;
};

// Adjoints of the embedding of the objects B with Z(B) = 0 for all Z in z.
// Throws ZNotExtOrthogonal, NotRepresentable.
AdjointImage perp_adjoint(CategoryPtr c, int a, const std::vector<Rep>& z, Side side);
// perp_adjoint for every object, index = object.
std::vector<AdjointImage> perp_adjoints(CategoryPtr c, const std::vector<Rep>& z, Side side);
// Left adjoint of supp hom(-, y) -> c. Throws NotRepresentable.
AdjointImage supp_adjoint(CategoryPtr c, int a, int y);
// Adjoints of [x, y] -> c; the object lies in [x, y].
AdjointImage interval_adjoint(CategoryPtr c, int x, int y, int a, Side side);
std::vector<AdjointImage> interval_adjoints(CategoryPtr c, int x, int y, Side side);

// Adjunction dimension identities for an embedding i: sub -> big. left[z]
// (right[z]) is i_L z (i_R z) as a sum of sub objects, for every big object z.
Report adjunction_check(const CatFunctor& i, const std::optional<std::vector<ObjectSum>>& left,
                        const std::optional<std::vector<ObjectSum>>& right);

// k on each object of `objects`, 1 x 1 identities along generators inside
// the set, zero elsewhere. Only a representation when relations allow it.
Rep interval_module(CategoryPtr c, const std::vector<int>& objects);

}  // namespace tq
