#include "premod/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace premod {

namespace {

double round12(double x) {
    const double r = std::round(x * 1e12) / 1e12;
    return r == 0.0 ? 0.0 : r;
}

std::string fmt_complex(std::complex<double> z) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%+.9f%+.9fi", round12(z.real()), round12(z.imag()));
    return buf;
}

std::string line(const std::string& key, const std::string& value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%-24s", key.c_str());
    return std::string(buf) + value + "\n";
}

std::string join(const std::vector<std::string>& xs, const std::string& sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
    return out;
}

std::vector<std::string> names(const std::vector<Label>& idx, const std::vector<std::string>& labels) {
    std::vector<std::string> out;
    for (Label a : idx) out.push_back(labels.at(a));
    return out;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

AnalysisReport analyze(const PremodularData& data, const std::string& name, std::uint64_t seed, unsigned threads) {
    AnalysisReport out;
    out.input_name = name;
    out.labels = data.ring().labels();
    auto t = std::chrono::steady_clock::now();
    out.validation = validate_premodular(data, threads);
    out.timings.emplace_back("validate", elapsed_ms(t));
    if (!out.validation.ok()) return out;

    t = std::chrono::steady_clock::now();
    out.classification = classify_degeneracy(data);
    out.timings.emplace_back("classify", elapsed_ms(t));

    t = std::chrono::steady_clock::now();
    out.components = ring_characters(data, seed);
    out.timings.emplace_back("components", elapsed_ms(t));

    if (out.classification.kind == CentreKind::SlightlyDegenerate) {
        t = std::chrono::steady_clock::now();
        out.kappa = kappa_lagrangian(data);
        out.timings.emplace_back("kappa", elapsed_ms(t));
    }

    t = std::chrono::steady_clock::now();
    out.verdict = main_theorem_verdict(data);
    out.timings.emplace_back("verdict", elapsed_ms(t));
    if (out.verdict.classification.kind != out.classification.kind ||
        out.verdict.kappa.has_value() != out.kappa.has_value())
        throw Error(ErrorKind::CrossCheckMismatch, "verdict disagrees with the pipeline classification");
    return out;
}

Json complex_json(std::complex<double> z) { return Json::array({round12(z.real()), round12(z.imag())}); }

Json to_json(const ValidationReport& report) {
    Json violations = Json::array();
    for (const auto& v : report.violations)
        violations.push_back(Json{{"kind", v.kind}, {"witness", v.witness}, {"detail", v.detail}});
    return Json{{"ok", report.ok()}, {"violations", std::move(violations)}};
}

Json to_json(const ComponentAnalysis& comp, const std::vector<std::string>& labels) {
    Json chars = Json::array();
    for (const auto& chi : comp.characters) {
        Json row = Json::object();
        for (std::size_t j = 0; j < comp.labels.size(); ++j) row[labels.at(comp.labels[j])] = complex_json(chi[j]);
        chars.push_back(std::move(row));
    }
    Json j{{"component_count", comp.count},
           {"characters", std::move(chars)},
           {"dim_index", comp.dim_index},
           {"magnetic_index", comp.magnetic_index ? Json(*comp.magnetic_index) : Json(nullptr)},
           {"seed", comp.seed},
           {"exact", comp.exact}};
    if (comp.exact_exponents) {
        Json ex = Json::array();
        for (const auto& chi : *comp.exact_exponents) {
            Json row = Json::array();
            for (const auto& r : chi) row.push_back(rational_to_string(r));
            ex.push_back(std::move(row));
        }
        j["exponents"] = std::move(ex);
    }
    return j;
}

Json to_json(const KappaReport& kappa, const std::vector<std::string>& labels) {
    return Json{{"fermion", labels.at(kappa.fermion)},
                {"n_self_dual", kappa.n_self_dual},
                {"n_e_twisted", kappa.n_e_twisted},
                {"kappa_plus", rational_to_string(kappa.kappa_plus)},
                {"kappa_minus", rational_to_string(kappa.kappa_minus)},
                {"matrix_kappa_plus", rational_to_string(kappa.matrix_kappa_plus)},
                {"matrix_kappa_minus", rational_to_string(kappa.matrix_kappa_minus)},
                {"verdict", to_string(kappa.verdict)}};
}

Json to_json(const AnalysisReport& report, bool with_timings) {
    Json j{{"input", report.input_name}, {"validation", to_json(report.validation)}};
    if (report.validation.ok()) {
        const auto& cls = report.classification;
        j["classification"] = to_string(cls.kind);
        j["transparent"] = names(cls.transparent, report.labels);
        j["fermion"] = cls.fermion ? Json(report.labels.at(*cls.fermion)) : Json(nullptr);
        j["components"] = to_json(report.components, report.labels);
        j["kappa"] = report.kappa ? to_json(*report.kappa, report.labels) : Json(nullptr);
        j["verdict"] = to_string(report.verdict.kind);
        j["message"] = report.verdict.message;
        j["reference_kappa"] = Json{{"S", rational_to_string(report.verdict.reference_kappa_s)},
                                    {"T", rational_to_string(report.verdict.reference_kappa_t)}};
    }
    if (with_timings) {
        Json t = Json::object();
        for (const auto& [stage, ms] : report.timings) t[stage] = ms;
        j["timings_ms"] = std::move(t);
    }
    return j;
}

Json extensions_json(const MetricGroup& base, const std::vector<PointedExtension>& exts, bool fix_fermion) {
    Json list = Json::array();
    for (const auto& e : exts) {
        Json g = to_json(e.group);
        g.erase("type");
        std::vector<std::string> emb;
        for (auto y : e.embedding) emb.push_back(e.group.element_name(y));
        list.push_back(Json{{"orders", g["orders"]},
                            {"q", g["q"]},
                            {"fermion", e.group.element_name(e.fermion)},
                            {"embedding", emb},
                            {"gauss", to_json(e.gauss)},
                            {"gauss_complex", complex_json(e.gauss.to_complex())},
                            {"signature", e.signature}});
    }
    const auto f = transparent_fermion(base);
    return Json{{"base", to_json(base)},
                {"fermion", f ? Json(base.element_name(*f)) : Json(nullptr)},
                {"equivalence", fix_fermion ? "fixing_fermion" : "free"},
                {"pointed_classes", exts.size()},
                {"note", "non-pointed extensions, if any, not enumerated"},
                {"extensions", std::move(list)}};
}

Json gauss_json(const Datum& datum) {
    if (const auto* mg = std::get_if<MetricGroup>(&datum)) {
        const CycNum g = gauss_sum(*mg);
        const auto sig = signature_mod8(*mg);
        return Json{{"type", "metric_group"},
                    {"order", mg->size()},
                    {"radical_size", radical(*mg).size()},
                    {"gauss_sum", to_json(g)},
                    {"gauss_complex", complex_json(g.to_complex())},
                    {"signature", sig ? Json(*sig) : Json(nullptr)}};
    }
    const auto& data = std::get<PremodularData>(datum);
    const CycNum g = gauss_sum(data);
    const CycNum dim = global_dimension(data);
    const std::complex<double> normalized = g.to_complex() / std::sqrt(std::abs(dim.to_complex()));
    return Json{{"type", "premodular"},
                {"global_dimension", to_json(dim)},
                {"gauss_sum", to_json(g)},
                {"gauss_complex", complex_json(g.to_complex())},
                {"normalized", complex_json(normalized)},
                {"modulus_squared_equals_dimension", g * g.conj() == dim}};
}

std::string validation_table(const ValidationReport& report) {
    if (report.ok()) return line("validation", "ok");
    std::string out = line("validation", std::to_string(report.violations.size()) + " violation(s)");
    for (const auto& v : report.violations) {
        std::string row = "  " + v.kind + " [" + join(v.witness) + "]";
        if (!v.detail.empty()) row += " " + v.detail;
        out += row + "\n";
    }
    return out;
}

std::string components_table(const ComponentAnalysis& comp, const std::vector<std::string>& labels) {
    std::string out = line("component_count", std::to_string(comp.count));
    out += line("character path", comp.exact ? "exact (group-like)" : "numeric, seed " + std::to_string(comp.seed));
    out += line("dim character", "#" + std::to_string(comp.dim_index));
    out += line("magnetic character", comp.magnetic_index ? "#" + std::to_string(*comp.magnetic_index) : "none");
    for (std::size_t i = 0; i < comp.characters.size(); ++i) {
        std::vector<std::string> cells;
        for (std::size_t j = 0; j < comp.labels.size(); ++j)
            cells.push_back(labels.at(comp.labels[j]) + " -> " + fmt_complex(comp.characters[i][j]));
        out += "  #" + std::to_string(i) + "  " + join(cells, "  ") + "\n";
    }
    return out;
}

std::string kappa_table(const KappaReport& kappa, const std::vector<std::string>& labels) {
    std::string out = line("fermion", labels.at(kappa.fermion));
    out += line("#self-dual", std::to_string(kappa.n_self_dual));
    out += line("#e-twisted self-dual", std::to_string(kappa.n_e_twisted));
    out += line("kappa(L+), kappa(L-)",
                rational_to_string(kappa.kappa_plus) + ", " + rational_to_string(kappa.kappa_minus));
    out += line("trace check",
                rational_to_string(kappa.matrix_kappa_plus) + ", " + rational_to_string(kappa.matrix_kappa_minus));
    out += line("kappa verdict", std::string(to_string(kappa.verdict)));
    return out;
}

std::string analysis_table(const AnalysisReport& report, bool with_timings) {
    std::string out = line("input", report.input_name);
    out += validation_table(report.validation);
    if (report.validation.ok()) {
        const auto& cls = report.classification;
        out += line("classification", std::string(to_string(cls.kind)));
        out += line("transparent", join(names(cls.transparent, report.labels)));
        out += components_table(report.components, report.labels);
        if (report.kappa) out += kappa_table(*report.kappa, report.labels);
        out += line("verdict", std::string(to_string(report.verdict.kind)));
        out += line("message", report.verdict.message);
    }
    if (with_timings)
        for (const auto& [stage, ms] : report.timings) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.3f ms", ms);
            out += line("time " + stage, buf);
        }
    return out;
}

std::string extensions_table(const MetricGroup& /*base*/, const std::vector<PointedExtension>& exts) {
    std::string out = line("pointed classes found", std::to_string(exts.size()) +
                                                         " (non-pointed extensions, if any, not enumerated)");
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-4s %-12s %-4s %-12s %-28s %s\n", "#", "orders", "sig", "fermion", "gauss",
                  "q on generators");
    out += buf;
    for (std::size_t i = 0; i < exts.size(); ++i) {
        const auto& e = exts[i];
        std::vector<std::string> orders, qs;
        for (long n : e.group.orders()) orders.push_back(std::to_string(n));
        for (std::size_t g = 0; g < e.group.rank(); ++g) qs.push_back(rational_to_string(e.group.q(e.group.generator(g))));
        std::snprintf(buf, sizeof buf, "%-4zu %-12s %-4d %-12s %-28s %s\n", i, join(orders, "x").c_str(), e.signature,
                      e.group.element_name(e.fermion).c_str(), fmt_complex(e.gauss.to_complex()).c_str(),
                      join(qs).c_str());
        out += buf;
    }
    return out;
}

std::string gauss_table(const Datum& datum) {
    if (const auto* mg = std::get_if<MetricGroup>(&datum)) {
        const CycNum g = gauss_sum(*mg);
        const auto sig = signature_mod8(*mg);
        std::string out = line("order", std::to_string(mg->size()));
        out += line("radical size", std::to_string(radical(*mg).size()));
        out += line("gauss sum", g.to_string());
        out += line("numeric", fmt_complex(g.to_complex()));
        out += line("signature mod 8", sig ? std::to_string(*sig) : "undefined (degenerate)");
        return out;
    }
    const auto& data = std::get<PremodularData>(datum);
    const CycNum g = gauss_sum(data);
    const CycNum dim = global_dimension(data);
    std::string out = line("global dimension", dim.to_string());
    out += line("gauss sum", g.to_string());
    out += line("numeric", fmt_complex(g.to_complex()));
    out += line("|gauss|^2 = dimension", g * g.conj() == dim ? "yes" : "no");
    return out;
}

}  // namespace premod
