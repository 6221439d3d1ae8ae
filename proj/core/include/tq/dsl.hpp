#pragma once

#include <string>

#include "tq/threadquiver.hpp"

namespace tq {

// Text format, one statement per line, '#' starts a comment:
//   vertex a b c
//   arrow x: a -> b
//   thread t: a ..> b [Z]          orders: 3 | N | -N | Z | p . q | (p) | empty
//   relation y*x - 2*z = 0         words compose right to left
// Throws ParseError carrying the line and column; its kind is ParseError,
// UnknownVertex, DuplicateName or NestedThreadLabel.
ThreadQuiver parse_tq(const std::string& text);

std::string serialize(const ThreadQuiver& tq);

}  // namespace tq
