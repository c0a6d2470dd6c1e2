#pragma once

#include <map>
#include <string>
#include <vector>

#include "hq/common.hpp"

namespace hq {

struct RelationRow {
  Int n = 0;
  std::string label;
  Rational lhs;
  Rational rhs;
  bool equal = true;
};

/// Result of checking one family of exact identities.
struct RelationReport {
  std::string relation;
  std::map<std::string, std::string> params;
  std::vector<RelationRow> rows;
  std::vector<std::string> notes;
  /// Not serialized, so artifacts do not depend on cache warmth.
  Int cache_hits = 0;

  void add(Int n, const Rational& lhs, const Rational& rhs, std::string label = {});
  /// Adds a boolean verdict row (lhs/rhs rendered as 1/0).
  void add_check(Int n, bool ok, std::string label);
  Int pass_count() const;
  Int fail_count() const;
  bool ok() const { return fail_count() == 0 && !rows.empty(); }

  std::string to_csv() const;
  std::string to_json() const;
  /// Merges rows of `other`, prefixing labels with its relation name.
  void absorb(const RelationReport& other);
};

}  // namespace hq
