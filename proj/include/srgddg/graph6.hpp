#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "srgddg/graph.hpp"

namespace srgddg::graph6 {

inline constexpr std::uint64_t kMaxOrder = 68719476735ULL;

/// graph6 encoding without header or trailing newline.
std::string encode(const Graph& g);

/// Accepts an optional ">>graph6<<" header; rejects anything else that is
/// not exactly one well-formed graph6 record (ParseError with byte offset).
Graph decode(std::string_view bytes);

}  // namespace srgddg::graph6
