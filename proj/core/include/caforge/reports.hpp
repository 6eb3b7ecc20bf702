#pragma once

#include <nlohmann/json.hpp>

#include "caforge/ca_search.hpp"
#include "caforge/discriminants.hpp"
#include "caforge/monomial_dsub.hpp"

namespace caforge {

using ordered_json = nlohmann::ordered_json;

// Stable machine-readable forms of the report structs: fixed key order, no
// timing or host data, so identical inputs dump byte-identical documents.
ordered_json report_json(const CAReport& r);
ordered_json report_json(const SearchResult& r);
ordered_json report_json(const BadPrimeScan& r);
ordered_json report_json(const SweepReport& r);
ordered_json report_json(const FiberScanReport& r);
ordered_json report_json(const JcReport& r);
ordered_json report_json(const Prop2Report& r);
ordered_json report_json(const LinearReduction& r);

ordered_json points_json(const std::vector<std::vector<std::uint32_t>>& points);
ordered_json disc_json(const DiscTable& t);

}  // namespace caforge
