#pragma once

#include <map>
#include <string>

#include "gss/closure/space.hpp"

namespace gss::closure {

// Structured-text form of a space: {"ground": [...], "closed": [[...], ...]}.
// Writing is canonical (closed sets ordered by size then members, members in
// ground order), so write ∘ read is idempotent byte for byte.
Space read_space(const std::string& text);
std::string write_space(const Space& space);

// Map files: {"table": {"src-label": "dst-label", ...}}.
std::map<std::string, std::string> read_map_table(const std::string& text);
std::string write_map_table(const SpaceMap& map);

}  // namespace gss::closure
