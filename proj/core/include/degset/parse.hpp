#pragma once

#include <string>

#include "degset/types.hpp"

namespace degset {

/// Parses "5,4,3" into a DegreeSet. Whitespace around numbers is ignored.
DegreeSet parse_degree_set(const std::string& text, int limit = kDefaultLimit);

/// Parses "5,4,3^5" (optional "^m" multiplicity, whitespace-insensitive)
/// into a DegreeSequence. Entries may appear in any order; equal values
/// are merged into runs.
DegreeSequence parse_degree_sequence(const std::string& text,
                                     int limit = kDefaultLimit);

}  // namespace degset
