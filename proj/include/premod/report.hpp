#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "premod/center_components.hpp"
#include "premod/extensions.hpp"
#include "premod/klein.hpp"
#include "premod/serialize.hpp"

namespace premod {

struct AnalysisReport {
    std::string input_name;
    /// Labels of the analysed datum, for naming indices in the output.
    std::vector<std::string> labels;
    ValidationReport validation;
    CentreClassification classification;
    ComponentAnalysis components;
    std::optional<KappaReport> kappa;
    MainTheoremVerdict verdict;
    /// Per-stage wall time in milliseconds, in pipeline order.
    std::vector<std::pair<std::string, double>> timings;
};

/// validate -> classify -> components -> kappa (slightly degenerate only) -> verdict.
/// Stops after validation when the datum is invalid.
AnalysisReport analyze(const PremodularData& data, const std::string& name, std::uint64_t seed = 1,
                       unsigned threads = 1);

/// Complex values as [re, im] rounded to 12 decimals.
Json complex_json(std::complex<double> z);

Json to_json(const ValidationReport& report);
Json to_json(const ComponentAnalysis& comp, const std::vector<std::string>& labels);
Json to_json(const KappaReport& kappa, const std::vector<std::string>& labels);
Json to_json(const AnalysisReport& report, bool with_timings = false);
Json extensions_json(const MetricGroup& base, const std::vector<PointedExtension>& exts, bool fix_fermion);
Json gauss_json(const Datum& datum);

std::string validation_table(const ValidationReport& report);
std::string components_table(const ComponentAnalysis& comp, const std::vector<std::string>& labels);
std::string kappa_table(const KappaReport& kappa, const std::vector<std::string>& labels);
std::string analysis_table(const AnalysisReport& report, bool with_timings = false);
std::string extensions_table(const MetricGroup& base, const std::vector<PointedExtension>& exts);
std::string gauss_table(const Datum& datum);

}  // namespace premod
