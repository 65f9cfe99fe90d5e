#include "ellconf/cache.hpp"

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;

namespace ellconf {

Cache::Cache(std::string dir) : dir_(std::move(dir)) {
  if (dir_.empty()) return;
  std::error_code ec;
  fs::create_directories(dir_, ec);
  // probe writability; an unusable directory disables the cache with a
  // warning, never a failure
  std::string probe = dir_ + "/.probe";
  {
    std::ofstream f(probe);
    enabled_ = f.good();
  }
  if (enabled_) {
    fs::remove(probe, ec);
  } else {
    std::cerr << "warning: cache directory '" << dir_
              << "' is not writable; caching disabled\n";
  }
}

static std::string key_path(const std::string& dir, const std::string& key) {
  return dir + "/" + key + ".txt";
}

std::optional<std::string> Cache::get(const std::string& key) const {
  if (!enabled_) return std::nullopt;
  std::ifstream f(key_path(dir_, key));
  if (!f) return std::nullopt;
  std::string version, fkey;
  if (!(f >> version >> fkey)) return std::nullopt;
  if (version != kVersion || fkey != key) return std::nullopt;
  f.get();  // newline after header
  std::ostringstream body;
  body << f.rdbuf();
  return body.str();
}

void Cache::put(const std::string& key, const std::string& payload) const {
  if (!enabled_) return;
  std::string final_path = key_path(dir_, key);
  std::string tmp = final_path + "." + std::to_string(::getpid()) + ".tmp";
  {
    std::ofstream f(tmp);
    if (!f) return;
    f << kVersion << " " << key << "\n" << payload;
  }
  std::error_code ec;
  fs::rename(tmp, final_path, ec);
  if (ec) fs::remove(tmp, ec);
}

std::string serialize_matrix(const SparseMatrix& m) {
  std::ostringstream os;
  os << "matrix " << m.rows << " " << m.cols << "\n";
  for (int r = 0; r < m.rows; ++r)
    for (auto& [c, v] : m.row[r].e)
      os << r << " " << c << " " << to_string(v) << "\n";
  return os.str();
}

std::optional<SparseMatrix> parse_matrix(const std::string& s) {
  std::istringstream is(s);
  std::string tag;
  int rows, cols;
  if (!(is >> tag >> rows >> cols) || tag != "matrix" || rows < 0 || cols < 0)
    return std::nullopt;
  SparseMatrix m(rows, cols);
  int r, c;
  std::string v;
  while (is >> r >> c >> v) {
    if (r < 0 || r >= rows || c < 0 || c >= cols) return std::nullopt;
    try {
      m.row[r].e.emplace_back(c, parse_rational(v));
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
  }
  for (auto& rw : m.row)
    for (size_t i = 1; i < rw.e.size(); ++i)
      if (rw.e[i - 1].first >= rw.e[i].first) return std::nullopt;
  return m;
}

}  // namespace ellconf
