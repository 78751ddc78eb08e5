#pragma once

#include <optional>
#include <string>

#include "wh/orbit.hpp"

namespace wh {

// WH_CACHE_DIR, when set and non-empty.
std::optional<std::string> default_cache_dir();

// One file per (rank, canonical base word): sorted JSON lines, one canonical
// member per line in signed-integer form.  Cache hits skip the closure
// entirely; unreadable or stale files are recomputed and rewritten.
std::string level_set_cache_path(const std::string& dir, const CyclicWord& base);

void store_level_set(const std::string& dir, const LevelSet& ls);
std::optional<LevelSet> try_load_level_set(const std::string& dir, const CyclicWord& base);

LevelSet cached_level_set(const CyclicWord& u, const std::optional<std::string>& dir);

}  // namespace wh
