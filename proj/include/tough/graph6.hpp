#pragma once

#include <string>
#include <string_view>

#include "tough/graph.hpp"

namespace tough {

/// Largest order expressible with the one- and four-byte length forms.
inline constexpr int kMaxGraph6Order = 258047;

/// Decodes one graph6 line. A leading ">>graph6<<" header and trailing
/// whitespace are skipped. Errors name the offending byte offset.
Graph parse_graph6(std::string_view line);

/// Canonical encoding with zero-filled padding bits.
std::string write_graph6(const Graph& g);

}  // namespace tough
