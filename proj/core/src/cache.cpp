#include "hq/cache.hpp"

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace hq {

std::string LValueCache::key(Int D, const std::string& modulus, const std::string& label, int s) {
  return std::to_string(D) + "|" + modulus + "|" + label + "|" + std::to_string(s);
}

void LValueCache::load() {
  if (path_.empty()) return;
  std::ifstream in(path_);
  if (!in) return;
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, "cache file " + path_ + ": " + e.what());
  }
  if (!j.is_object() || j.value("version", 0) != kVersion) return;
  std::lock_guard<std::mutex> lock(mu_);
  for (const auto& [k, v] : j["entries"].items()) entries_[k] = parse_rational(v.get<std::string>());
}

void LValueCache::save() const {
  if (path_.empty()) return;
  nlohmann::ordered_json j;
  j["version"] = kVersion;
  auto& e = j["entries"] = nlohmann::ordered_json::object();
  {
    std::lock_guard<std::mutex> lock(mu_);
    for (const auto& [k, v] : entries_) e[k] = to_string(v);
  }
  std::string tmp = path_ + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write cache file " + tmp);
    out << j.dump(1) << "\n";
  }
  if (std::rename(tmp.c_str(), path_.c_str()) != 0)
    throw Error(ErrorCode::InvalidArgument, "cannot replace cache file " + path_);
}

std::optional<Rational> LValueCache::get(const std::string& key) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  ++hits_;
  return it->second;
}

void LValueCache::put(const std::string& key, const Rational& value) {
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = entries_.emplace(key, value);
  if (!inserted && it->second != value)
    throw Error(ErrorCode::OracleMismatch, "cache entry " + key + " changed value");
  dirty_ |= inserted;
}

size_t LValueCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return entries_.size();
}

Int LValueCache::hits() const {
  std::lock_guard<std::mutex> lock(mu_);
  return hits_;
}

bool LValueCache::dirty() const {
  std::lock_guard<std::mutex> lock(mu_);
  return dirty_;
}

}  // namespace hq
