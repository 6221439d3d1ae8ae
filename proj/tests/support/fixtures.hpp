#pragma once

#include <string>
#include <vector>

#include "tq/threadquiver.hpp"

namespace tq::testing {

// fixtures/<name>.tq parsed in the current field.
ThreadQuiver fixture(const std::string& name);
std::string fixture_path(const std::string& name);
std::vector<std::string> all_fixtures();

// Thread quivers whose underlying quiver is a single path of thread arrows.
std::vector<std::string> chain_fixtures();
// Fixtures used for the dualizing and Serre suites.
std::vector<std::string> dualizing_fixtures();
// Everything except the two rad^2 = 0 quivers.
std::vector<std::string> thread_quiver_fixtures();
// Fixtures without relations.
std::vector<std::string> relation_free_fixtures();

// The zig-zag fixture with its truncated end b3_0 marked as having lost its successors.
Window zigzag_window();
// Linear A_n, all composites of two arrows zero, v1 cut before and vn cut after.
Window ainf_window(int n);
// X with an arrow to Y and to each vertex of m_d -> ... -> m_0, every
// composite X -> m_j -> m_{j-1} zero; m_d lost its predecessors.
Window not_locally_finite_window(int d);

}  // namespace tq::testing
