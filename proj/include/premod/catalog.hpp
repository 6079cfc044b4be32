#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "premod/metric_groups.hpp"
#include "premod/premodular.hpp"

namespace premod {

enum class EntryKind { Premodular, MetricGroup };
std::string_view to_string(EntryKind kind);

struct CatalogEntry {
    std::string name;
    EntryKind kind = EntryKind::Premodular;
    std::variant<PremodularData, MetricGroup> payload;
    std::string doc;
};

/// Built-in entry by key. Besides the listed keys, accepts the parametric form
///     pointed:<n1>x<n2>...:<q1>,<q2>,...[:<b12>,<b13>,...,<b23>,...]
/// (generator orders, q on generators, upper-triangular b on generator pairs).
/// Throws Error(UnknownCatalogKey) listing the valid keys, Error(ParseError) on
/// a malformed pointed key and Error(ValidationError) if its form is invalid.
CatalogEntry catalog_get(const std::string& name);

/// All fixed entries sorted by name, numeric suffixes in numeric order.
const std::vector<CatalogEntry>& catalog_list();

/// Datum of an entry as premodular data; metric groups are linearized.
PremodularData as_premodular(const CatalogEntry& entry);

}  // namespace premod
