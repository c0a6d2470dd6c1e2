#include "hq/report.hpp"

#include <json.hpp>

#include "hq/version.hpp"

namespace hq {

void RelationReport::add(Int n, const Rational& lhs, const Rational& rhs, std::string label) {
  rows.push_back({n, std::move(label), lhs, rhs, lhs == rhs});
}

void RelationReport::add_check(Int n, bool ok, std::string label) {
  rows.push_back({n, std::move(label), Rational(ok ? 1 : 0), Rational(1), ok});
}

Int RelationReport::pass_count() const {
  Int c = 0;
  for (const auto& r : rows) c += r.equal;
  return c;
}

Int RelationReport::fail_count() const { return static_cast<Int>(rows.size()) - pass_count(); }

std::string RelationReport::to_csv() const {
  std::string out = "n,label,lhs,rhs,equal\n";
  for (const auto& r : rows)
    out += std::to_string(r.n) + "," + r.label + "," + to_string(r.lhs) + "," + to_string(r.rhs) + "," +
           (r.equal ? "true" : "false") + "\n";
  return out;
}

std::string RelationReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["relation"] = relation;
  j["params"] = params;
  auto& arr = j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["n"] = r.n;
    if (!r.label.empty()) row["label"] = r.label;
    row["lhs"] = to_string(r.lhs);
    row["rhs"] = to_string(r.rhs);
    row["equal"] = r.equal;
    arr.push_back(std::move(row));
  }
  j["summary"] = {{"pass", pass_count()}, {"fail", fail_count()}};
  j["notes"] = notes;
  j["provenance"] = {{"version", kVersion}};
  return j.dump(2) + "\n";
}

void RelationReport::absorb(const RelationReport& other) {
  for (auto r : other.rows) {
    r.label = other.relation + (r.label.empty() ? "" : ":" + r.label);
    rows.push_back(std::move(r));
  }
  for (const auto& n : other.notes) notes.push_back(other.relation + ": " + n);
  cache_hits += other.cache_hits;
}

}  // namespace hq
