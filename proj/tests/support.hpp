#pragma once

#include <doctest.h>

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "idealkit/cases.hpp"
#include "idealkit/parse.hpp"

namespace idealkit::test {

inline QPoly P(const std::string& text, const TablePtr& table) { return parse_poly(text, table); }

inline TablePtr xy() {
  static const TablePtr t = make_table(std::vector<std::string>{"x", "y"});
  return t;
}

inline std::filesystem::path fixture(const std::string& rel) { return default_fixture_dir() / rel; }

inline const SystemFile& load(const std::string& rel) {
  static std::map<std::string, SystemFile> cache;
  auto it = cache.find(rel);
  if (it == cache.end()) it = cache.emplace(rel, load_system(fixture(rel))).first;
  return it->second;
}

inline const QPoly& entry(const std::string& rel, const std::string& name) {
  return load(rel).entry(name).poly();
}

inline std::vector<QPoly> with_conjugates(std::vector<QPoly> F) {
  const std::size_t n = F.size();
  for (std::size_t i = 0; i < n; ++i) F.push_back(conjugate(F[i]));
  return F;
}

inline const std::vector<std::string>& fixture_files() {
  static const std::vector<std::string> files = {
      "d1_branch.sys",
      "final_system.sys",
      "finiteness.sys",
      "phi11_zero/g6_reality.sys",
      "phi11_zero/p1_branch.sys",
      "phi11_zero/p2_components.sys",
      "side_relations/spin_relations.sys",
      "side_relations/vii13.sys",
  };
  return files;
}

}  // namespace idealkit::test
