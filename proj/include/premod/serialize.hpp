#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "premod/metric_groups.hpp"
#include "premod/premodular.hpp"

namespace premod {

using Json = nlohmann::ordered_json;
using Datum = std::variant<PremodularData, MetricGroup>;

/// {"n": N, "c": [["p", "q"], ...]} in the power basis.
Json to_json(const CycNum& x);
CycNum cyc_from_json(const Json& j);

/// {"labels", "unit", "dual", "fusion": [[a, b, c, N], ...]} with zero entries omitted.
Json to_json(const FusionRing& ring);
FusionRing ring_from_json(const Json& j);

/// Ring fields plus "conductor", "dims", "twists" and, when it was supplied, "s".
Json to_json(const PremodularData& data);
/// {"orders": [...], "q": {"(c1,...)": "p/q", ...}}.
Json to_json(const MetricGroup& mg);
/// Either schema with its "type" discriminator.
Json to_json(const Datum& datum);

/// Parses without validating. Throws Error(ParseError).
Datum datum_from_json(const Json& j);
Datum datum_from_text(const std::string& text);
/// Reads, parses and validates a datum file; throws Error(ParseError) or
/// Error(ValidationError) carrying the violation summary.
Datum load_datum(const std::string& path);
/// Validation report of either kind of datum.
ValidationReport validate_datum(const Datum& datum, unsigned threads = 1);

}  // namespace premod
