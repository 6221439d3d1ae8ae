#pragma once

#include <cstddef>

#include "tq/quiver.hpp"
#include "tq/rep.hpp"

namespace tq::testing {

// The minimal projective cover is an isomorphism.
bool is_projective(const Rep& m);
// Some r: n -> m has r f = 1.
bool is_split_mono(const Rep& m, const Rep& n, const RepMap& f);
// Number of paths x -> y; hom dimension when there are no relations.
std::size_t count_paths(const Quiver& q, int x, int y);
// Matrices agree entrywise, dims included.
bool same_rep(const Rep& a, const Rep& b);

}  // namespace tq::testing
