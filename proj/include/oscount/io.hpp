#pragma once

#include <cstdint>
#include <filesystem>

#include <json.hpp>

#include "oscount/engine.hpp"
#include "oscount/geometry.hpp"

namespace oscount::io {

using Json = nlohmann::ordered_json;

// Generic-space descriptor:
//   {"chern": [c_1, ...], "invariants": {"b1,...,bt": "num/den", ...}}
AmbientSpace descriptor_from_json(const Json& doc);
Json descriptor_to_json(const AmbientSpace& space);
AmbientSpace load_descriptor(const std::filesystem::path& path);

// The "space" member of a cache file: {"dims": [...]} for products, the
// descriptor object otherwise.
Json space_to_json(const AmbientSpace& space);
AmbientSpace space_from_json(const Json& doc);

// Cache persistence:
//   {"space": {...}, "entries": {"b1,...,bt": "num/den", ...}, "version": 1}
// Entries are written in subclass order of the largest class when the
// table is a full box, lexicographic otherwise.
Json table_to_json(const OCTable& table);
// Validates version, closure under the recursion, and re-derives one
// sampled entry (chosen by `seed`) from smaller ones.
OCTable table_from_json(const Json& doc, std::uint64_t seed = 0);

void save_table(const OCTable& table, const std::filesystem::path& path);
OCTable load_table(const std::filesystem::path& path, std::uint64_t seed = 0);

}  // namespace oscount::io
