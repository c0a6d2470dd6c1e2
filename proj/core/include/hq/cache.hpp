#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "hq/common.hpp"

namespace hq {

/// Persistent exact-value memo keyed by "D|modulus|label|s".
/// Thread safe; save() writes atomically through a temporary file.
class LValueCache {
 public:
  static constexpr int kVersion = 1;

  LValueCache() = default;
  explicit LValueCache(std::string path) : path_(std::move(path)) {}

  static std::string key(Int D, const std::string& modulus, const std::string& label, int s);

  /// Loads entries from path(); a missing file is not an error. A file with
  /// a different version is ignored.
  void load();
  void save() const;

  std::optional<Rational> get(const std::string& key);
  void put(const std::string& key, const Rational& value);

  const std::string& path() const { return path_; }
  size_t size() const;
  Int hits() const;
  bool dirty() const;

 private:
  std::string path_;
  mutable std::mutex mu_;
  std::map<std::string, Rational> entries_;
  Int hits_ = 0;
  bool dirty_ = false;
};

}  // namespace hq
