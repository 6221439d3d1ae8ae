#pragma once

#include <string>

#include "tq/threadquiver.hpp"

namespace tq {

// Graphviz digraphs. Thread arrows are dashed and labelled with their order,
// boundary vertices of a window are dotted.
std::string emit_dot(const ThreadQuiver& tq);
std::string emit_dot(const Window& w);

}  // namespace tq
