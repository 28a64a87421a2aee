#pragma once

#include "permdesign/charlier.hpp"
#include "permdesign/design.hpp"
#include "permdesign/search.hpp"

#include <optional>
#include <string>

namespace permdesign {

/// JSON documents are canonically ordered (fixed key order, sorted indices)
/// and carry every rational or big-integer value as an exact decimal string,
/// so output is byte-identical across runs and worker counts.

/// Top-level keys: n, size, frequencies, moments, dual_frequencies,
/// criteria, bounds, transitivity. dual_frequencies is null when t > n/2;
/// the dual/tcrit criteria read "n/a" there.
std::string design_report_json(const DesignReport& report);

std::string frequencies_json(const FrequencyVector& freq);
std::string orthogonality_report_json(const OrthogonalityReport& report);
std::string bounds_json(int n, int t);
std::string charlier_json(int k, std::optional<int> reversal_degree);
std::string min_design_certificate_json(const MinDesignSearchResult& result);
std::string sharp_search_certificate_json(const SharpSearchResult& result);

} // namespace permdesign
