#include "wh/cache.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

namespace wh {

std::optional<std::string> default_cache_dir() {
  const char* env = std::getenv("WH_CACHE_DIR");
  if (env && *env) return std::string(env);
  return std::nullopt;
}

std::string level_set_cache_path(const std::string& dir, const CyclicWord& base) {
  std::string name = base.empty() ? "1" : base.text();
  return (std::filesystem::path(dir) /
          ("levelset-r" + std::to_string(base.rank()) + "-" + name + ".jsonl"))
      .string();
}

void store_level_set(const std::string& dir, const LevelSet& ls) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const std::string path = level_set_cache_path(dir, ls.base);
  std::ofstream out(path, std::ios::trunc);
  if (!out) fail(ErrorKind::Io, "cannot write cache file " + path);
  for (const CyclicWord& w : ls.members) out << nlohmann::json(w.ints()).dump() << "\n";
}

std::optional<LevelSet> try_load_level_set(const std::string& dir, const CyclicWord& base) {
  const std::string path = level_set_cache_path(dir, base);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  LevelSet ls;
  ls.base = base;
  std::string line;
  try {
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto ints = nlohmann::json::parse(line).get<std::vector<int>>();
      CyclicWord w = CyclicWord::from_ints(ints, base.rank());
      if (w.size() != base.size()) return std::nullopt;  // stale or foreign file
      ls.members.push_back(std::move(w));
    }
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (!std::is_sorted(ls.members.begin(), ls.members.end())) return std::nullopt;
  if (!ls.contains(base)) return std::nullopt;
  return ls;
}

LevelSet cached_level_set(const CyclicWord& u, const std::optional<std::string>& dir) {
  if (dir) {
    if (auto hit = try_load_level_set(*dir, u)) return *hit;
  }
  LevelSet ls = level_set(u);
  if (dir) store_level_set(*dir, ls);
  return ls;
}

}  // namespace wh
