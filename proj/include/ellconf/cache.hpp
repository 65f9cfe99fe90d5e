#pragma once

#include <optional>
#include <string>

#include "ellconf/linalg.hpp"

namespace ellconf {

// On-disk cache keyed by strings like "basisA-n4-p2-q1".  One file per key
// with a self-describing header carrying the artifact version and the key;
// entries with a foreign version or a corrupted payload are ignored and the
// value is recomputed.  Writes go through a temp file plus rename, so
// concurrent writers of the same key leave one valid entry.
class Cache {
 public:
  static constexpr const char* kVersion = "ellconf-1";

  Cache() = default;
  explicit Cache(std::string dir);

  bool enabled() const { return enabled_; }
  const std::string& dir() const { return dir_; }

  std::optional<std::string> get(const std::string& key) const;
  void put(const std::string& key, const std::string& payload) const;

 private:
  std::string dir_;
  bool enabled_ = false;
};

// portable text payloads: exact integers only, no binary floats
std::string serialize_matrix(const SparseMatrix& m);
std::optional<SparseMatrix> parse_matrix(const std::string& s);

}  // namespace ellconf
