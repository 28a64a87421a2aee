#include "permdesign/report_json.hpp"

#include "permdesign/errors.hpp"
#include "permdesign/permutation.hpp"

#include <json.hpp>

namespace permdesign {

namespace {

using json = nlohmann::ordered_json;

json verdict_json(Verdict verdict) {
  switch (verdict) {
  case Verdict::yes:
    return true;
  case Verdict::no:
    return false;
  case Verdict::not_applicable:
    return "n/a";
  }
  throw error("unknown verdict");
}

json rational_array(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& value : values)
    out.push_back(to_string(value));
  return out;
}

std::string dump(const json& document) { return document.dump(2) + "\n"; }

json permutation_lines(const PermSet& set) {
  json out = json::array();
  for (const auto& sigma : set.elements())
    out.push_back(format_one_line(sigma));
  return out;
}

const char* status_name(SearchStatus status) {
  switch (status) {
  case SearchStatus::found:
    return "found";
  case SearchStatus::exhausted:
    return "exhausted";
  case SearchStatus::inconclusive:
    return "inconclusive";
  }
  throw error("unknown search status");
}

json report_body(const DesignReport& report) {
  json out;
  out["n"] = report.n;
  out["size"] = report.size;
  out["frequencies"] = rational_array(report.freq.f);

  json moments = json::array();
  for (const auto& cmp : report.moments) {
    json entry;
    entry["i"] = cmp.i;
    entry["value"] = to_string(cmp.value);
    entry["space_value"] = to_string(cmp.space_value);
    entry["equal"] = cmp.equal;
    moments.push_back(std::move(entry));
  }
  out["moments"] = std::move(moments);

  if (report.t > report.n / 2) {
    out["dual_frequencies"] = nullptr;
  } else {
    json duals = json::array();
    for (const auto& dual : report.dual_frequencies) {
      json entry;
      entry["k"] = dual.k;
      entry["value"] = to_string(dual.value);
      duals.push_back(std::move(entry));
    }
    out["dual_frequencies"] = std::move(duals);
  }

  json criteria;
  criteria["moments"] = verdict_json(report.criterion_moments);
  criteria["dual"] = verdict_json(report.criterion_dual);
  criteria["tcrit"] = verdict_json(report.criterion_tcrit);
  out["criteria"] = std::move(criteria);

  json bounds;
  bounds["sm"] = to_string(report.sm_bound);
  bounds["cor2_t2"] = to_string(report.cor2_bound_t2);
  bounds["meets_sm_equality"] = report.meets_sm_equality;
  out["bounds"] = std::move(bounds);

  json transitivity;
  transitivity["max_t"] = report.max_transitivity;
  transitivity["sharp"] = report.sharply_transitive;
  transitivity["is_group"] = report.group;
  out["transitivity"] = std::move(transitivity);
  return out;
}

} // namespace

std::string design_report_json(const DesignReport& report) {
  return dump(report_body(report));
}

std::string frequencies_json(const FrequencyVector& freq) {
  json out;
  out["n"] = freq.n;
  out["frequencies"] = rational_array(freq.f);
  return dump(out);
}

std::string orthogonality_report_json(const OrthogonalityReport& report) {
  json out;
  out["n"] = report.n;
  out["max_index"] = report.n / 2;
  json entries = json::array();
  for (const auto& entry : report.entries) {
    json item;
    item["r"] = entry.r;
    item["s"] = entry.s;
    item["value"] = to_string(entry.value);
    item["expected"] = to_string(entry.expected);
    item["pass"] = entry.pass;
    entries.push_back(std::move(item));
  }
  out["pairs"] = std::move(entries);
  out["all_pass"] = report.all_pass;
  return dump(out);
}

std::string bounds_json(int n, int t) {
  json out;
  out["n"] = n;
  out["t"] = t;
  out["sm"] = to_string(design_bound(n, t));
  out["cor2_t2"] = to_string(cor2_bound(n));
  out["sm_exceeds_cor2"] = sm_bound_exceeds_cor2(n);
  return dump(out);
}

std::string charlier_json(int k, std::optional<int> reversal_degree) {
  IntPolynomial poly =
      reversal_degree ? reversed_charlier(k, *reversal_degree) : charlier(k);
  json out;
  out["k"] = k;
  if (reversal_degree)
    out["reversed_at_n"] = *reversal_degree;
  out["polynomial"] = poly.to_string();
  json coeffs = json::array();
  for (const auto& c : poly.coefficients())
    coeffs.push_back(to_string(c));
  out["coefficients"] = std::move(coeffs); // low-to-high
  return dump(out);
}

std::string min_design_certificate_json(const MinDesignSearchResult& result) {
  json out;
  out["search"] = "min-design";
  out["n"] = result.n;
  out["t"] = result.t;
  out["max_size"] = result.max_size;
  out["status"] = status_name(result.status);
  out["predicate"] = result.predicate;
  out["subsets_checked"] = result.subsets_checked;
  out["last_complete_size"] = result.last_complete_size;
  if (result.design) {
    out["design"] = permutation_lines(*result.design);
    out["report"] = report_body(*result.report);
  } else {
    out["design"] = nullptr;
    out["report"] = nullptr;
  }
  return dump(out);
}

std::string sharp_search_certificate_json(const SharpSearchResult& result) {
  json out;
  out["search"] = "sharp";
  out["n"] = result.n;
  out["t"] = result.t;
  out["status"] = status_name(result.status);
  out["nodes"] = result.nodes;
  out["branches_aborted"] = result.branches_aborted;
  if (result.set) {
    out["set"] = permutation_lines(*result.set);
    out["report"] = report_body(*result.report);
  } else {
    out["set"] = nullptr;
    out["report"] = nullptr;
  }
  return dump(out);
}

} // namespace permdesign
