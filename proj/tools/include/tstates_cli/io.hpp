#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace tstates::cli {

// Whole file as bytes; gzip-compressed files are inflated transparently.
std::string read_input(const std::filesystem::path& path);

std::uint32_t crc32_of(const std::string& bytes);

// Artifacts are buffered in memory and written only by commit(). Each file
// goes to a temporary sibling first and is renamed into place; if anything
// fails, every file this set created is removed again.
class ArtifactSet {
 public:
  void add(std::filesystem::path path, std::string content);
  std::vector<std::filesystem::path> commit();
  bool empty() const noexcept { return pending_.empty(); }

 private:
  std::vector<std::pair<std::filesystem::path, std::string>> pending_;
};

}  // namespace tstates::cli
