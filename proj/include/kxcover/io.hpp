#pragma once

// Text formats.
//
//   skeleton:    "q m" then m lines "i j", 1 <= i <= j <= q (i == j: loop)
//   allocation:  q nonnegative integers on one line
//   graph:       "n m" then m lines "u v", 0-based, u != v

#include <string>

#include "kxcover/exact.hpp"
#include "kxcover/skeleton.hpp"

namespace kxcover {

SkeletonGraph parse_skeleton(const std::string& text);
std::string format_skeleton(const SkeletonGraph& s);

NodeAllocation parse_allocation(const std::string& text);
std::string format_allocation(const NodeAllocation& x);

GeneralGraph parse_graph(const std::string& text);
std::string format_graph(const GeneralGraph& g);

/// Throws ParseError if the file cannot be read.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace kxcover
