#include "premod/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "premod/catalog.hpp"
#include "premod/report.hpp"

namespace premod {

namespace {

struct Options {
    std::string format = "table";
    std::size_t max_order = 64;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    bool free_fermion = false;
    bool timings = false;
    std::string input;
    std::string catalog_name;
};

// Exit status for an error escaping a subcommand.
int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::CrossCheckMismatch:
        case ErrorKind::NonConvergent:
        case ErrorKind::DegenerateEigenproblem:
            return 1;
        default:
            return 2;
    }
}

constexpr const char* kCatalogPrefix = "catalog:";

// Unvalidated datum from a file path or catalog:<key>.
Datum read_datum(const std::string& input) {
    if (input.rfind(kCatalogPrefix, 0) == 0) {
        const CatalogEntry entry = catalog_get(input.substr(std::string(kCatalogPrefix).size()));
        return std::visit([](const auto& d) -> Datum { return d; }, entry.payload);
    }
    std::ifstream in(input);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + input + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return datum_from_text(buf.str());
}

Datum load_valid(const std::string& input, unsigned threads) {
    Datum d = read_datum(input);
    const auto report = validate_datum(d, threads);
    if (!report.ok()) throw Error(ErrorKind::ValidationError, report.summary());
    return d;
}

PremodularData linearized(const Datum& d) {
    if (const auto* mg = std::get_if<MetricGroup>(&d)) return to_premodular(*mg);
    return std::get<PremodularData>(d);
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int cmd_validate(const Options& o, std::ostream& out) {
    const Datum d = read_datum(o.input);
    const auto report = validate_datum(d, o.threads);
    if (o.format == "json") {
        Json j{{"input", o.input}, {"type", std::holds_alternative<MetricGroup>(d) ? "metric_group" : "premodular"}};
        j["validation"] = to_json(report);
        emit(out, j);
    } else {
        out << validation_table(report);
    }
    return report.ok() ? 0 : 2;
}

int cmd_analyze(const Options& o, std::ostream& out) {
    const Datum d = load_valid(o.input, o.threads);
    const auto report = analyze(linearized(d), o.input, o.seed, o.threads);
    if (o.format == "json")
        emit(out, to_json(report, o.timings));
    else
        out << analysis_table(report, o.timings);
    return report.verdict.kind == TheoremVerdict::Inconsistent ? 1 : 0;
}

int cmd_components(const Options& o, std::ostream& out) {
    const PremodularData data = linearized(load_valid(o.input, o.threads));
    const auto comp = ring_characters(data, o.seed);
    if (o.format == "json")
        emit(out, to_json(comp, data.ring().labels()));
    else
        out << components_table(comp, data.ring().labels());
    return 0;
}

int cmd_kappa(const Options& o, std::ostream& out) {
    const PremodularData data = linearized(load_valid(o.input, o.threads));
    const auto kappa = kappa_lagrangian(data);
    if (o.format == "json")
        emit(out, to_json(kappa, data.ring().labels()));
    else
        out << kappa_table(kappa, data.ring().labels());
    return kappa.verdict == KappaVerdict::Inconsistent ? 1 : 0;
}

int cmd_extend(const Options& o, std::ostream& out) {
    const Datum d = load_valid(o.input, o.threads);
    const auto* mg = std::get_if<MetricGroup>(&d);
    if (!mg) throw Error(ErrorKind::InvalidArgument, "extend requires a metric-group input");
    ExtensionOptions eo;
    eo.max_order = o.max_order;
    eo.threads = o.threads;
    eo.fix_fermion = !o.free_fermion;
    const auto exts = enumerate_pointed_extensions(*mg, eo);
    if (o.format == "json")
        emit(out, extensions_json(*mg, exts, eo.fix_fermion));
    else
        out << extensions_table(*mg, exts);
    return 0;
}

int cmd_gauss(const Options& o, std::ostream& out) {
    const Datum d = load_valid(o.input, o.threads);
    if (o.format == "json")
        emit(out, gauss_json(d));
    else
        out << gauss_table(d);
    return 0;
}

int cmd_catalog_list(const Options& o, std::ostream& out) {
    if (o.format == "json") {
        Json list = Json::array();
        for (const auto& e : catalog_list())
            list.push_back(Json{{"name", e.name}, {"kind", to_string(e.kind)}, {"doc", e.doc}});
        emit(out, list);
    } else {
        char buf[256];
        for (const auto& e : catalog_list()) {
            std::snprintf(buf, sizeof buf, "%-16s %-13s %s\n", e.name.c_str(), std::string(to_string(e.kind)).c_str(),
                          e.doc.c_str());
            out << buf;
        }
    }
    return 0;
}

int cmd_catalog_show(const Options& o, std::ostream& out) {
    const CatalogEntry e = catalog_get(o.catalog_name);
    const Datum d = std::visit([](const auto& x) -> Datum { return x; }, e.payload);
    if (o.format == "json") {
        emit(out, to_json(d));
        return 0;
    }
    out << "name      " << e.name << "\nkind      " << to_string(e.kind) << "\ndoc       " << e.doc << "\n";
    if (const auto* mg = std::get_if<MetricGroup>(&d)) {
        for (MetricGroup::Element x = 0; x < mg->size(); ++x)
            out << "  q" << mg->element_name(x) << " = " << rational_to_string(mg->q(x)) << "\n";
    } else {
        const auto& data = std::get<PremodularData>(d);
        for (Label a = 0; a < data.rank(); ++a)
            out << "  " << data.ring().label(a) << ": d = " << data.dim(a).to_string()
                << ", theta = " << data.twist(a).to_string() << "\n";
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Premodular data analysis: centres, Klein invariants and minimal nondegenerate extensions", "premod"};
    app.require_subcommand(1);
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "json"}));
    app.add_option("--max-order", o.max_order, "Largest extension order for extend")->check(CLI::PositiveNumber);
    app.add_option("--seed", o.seed, "Seed for numeric character enumeration");
    app.add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1u, 256u));
    app.add_flag("--free-fermion", o.free_fermion, "extend: identify classes without fixing the fermion");
    app.add_flag("--timings", o.timings, "analyze: include per-stage timings");

    const auto input_cmd = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->fallthrough();
        sub->add_option("input", o.input, "Datum file or catalog:<key>")->required();
        return sub;
    };
    auto* validate = input_cmd("validate", "Check the axioms of a datum");
    auto* analyze_cmd = input_cmd("analyze", "Full pipeline: validate, classify, components, kappa, verdict");
    auto* kappa = input_cmd("kappa", "Klein invariants of the Lagrangian summands");
    auto* components = input_cmd("components", "Characters of the transparent subring");
    auto* extend = input_cmd("extend", "Enumerate pointed minimal nondegenerate extensions");
    auto* gauss = input_cmd("gauss", "Gauss sum, dimension and signature");
    auto* catalog = app.add_subcommand("catalog", "Built-in data");
    catalog->fallthrough();
    catalog->require_subcommand(1);
    auto* list = catalog->add_subcommand("list", "List catalog keys");
    list->fallthrough();
    auto* show = catalog->add_subcommand("show", "Print a catalog entry");
    show->fallthrough();
    show->add_option("name", o.catalog_name, "Catalog key")->required();

    std::vector<std::string> argv_store{"premod"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (validate->parsed()) return cmd_validate(o, out);
        if (analyze_cmd->parsed()) return cmd_analyze(o, out);
        if (kappa->parsed()) return cmd_kappa(o, out);
        if (components->parsed()) return cmd_components(o, out);
        if (extend->parsed()) return cmd_extend(o, out);
        if (gauss->parsed()) return cmd_gauss(o, out);
        if (list->parsed()) return cmd_catalog_list(o, out);
        if (show->parsed()) return cmd_catalog_show(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    }
    err << app.help();
    return 2;
}

}  // namespace premod
