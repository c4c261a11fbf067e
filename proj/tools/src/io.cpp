#include "tstates_cli/io.hpp"

#include <fstream>

#include <zlib.h>

#include "tstates/error.hpp"

namespace fs = std::filesystem;

namespace tstates::cli {

std::string read_input(const fs::path& path) {
  if (!fs::is_regular_file(path)) throw InvalidInputError("cannot read input '" + path.string() + "'");
  gzFile f = gzopen(path.c_str(), "rb");
  if (f == nullptr) throw InvalidInputError("cannot open input '" + path.string() + "'");
  std::string data;
  char buf[1 << 16];
  int n = 0;
  while ((n = gzread(f, buf, sizeof buf)) > 0) data.append(buf, static_cast<std::size_t>(n));
  const bool failed = n < 0;
  gzclose(f);
  if (failed) throw InvalidInputError("failed to read '" + path.string() + "'");
  return data;
}

std::uint32_t crc32_of(const std::string& bytes) {
  uLong crc = crc32(0L, Z_NULL, 0);
  std::size_t off = 0;
  while (off < bytes.size()) {
    const auto chunk = static_cast<uInt>(std::min<std::size_t>(bytes.size() - off, 1u << 30));
    crc = crc32(crc, reinterpret_cast<const Bytef*>(bytes.data() + off), chunk);
    off += chunk;
  }
  return static_cast<std::uint32_t>(crc);
}

void ArtifactSet::add(fs::path path, std::string content) {
  pending_.emplace_back(std::move(path), std::move(content));
}

std::vector<fs::path> ArtifactSet::commit() {
  std::vector<fs::path> temps;
  std::vector<fs::path> written;
  std::vector<fs::path> created_dirs;
  auto rollback = [&] {
    std::error_code ec;
    for (const auto& p : temps) fs::remove(p, ec);
    for (const auto& p : written) fs::remove(p, ec);
    for (const auto& p : created_dirs) fs::remove(p, ec);
  };
  try {
    for (const auto& [path, content] : pending_) {
      const fs::path dir = path.parent_path();
      if (!dir.empty() && !fs::exists(dir)) {
        for (fs::path p = dir; !p.empty() && !fs::exists(p); p = p.parent_path()) created_dirs.push_back(p);
        fs::create_directories(dir);
      }
      fs::path tmp = path;
      tmp += ".partial";
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      temps.push_back(tmp);
      out << content;
      out.close();
      if (!out) throw InvalidInputError("cannot write '" + path.string() + "'");
    }
    for (std::size_t i = 0; i < pending_.size(); ++i) {
      fs::rename(temps[i], pending_[i].first);
      written.push_back(pending_[i].first);
    }
  } catch (const fs::filesystem_error& e) {
    rollback();
    throw InvalidInputError(std::string("cannot write outputs: ") + e.what());
  } catch (...) {
    rollback();
    throw;
  }
  pending_.clear();
  return written;
}

}  // namespace tstates::cli
