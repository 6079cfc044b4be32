#include "premod/serialize.hpp"

#include <fstream>
#include <sstream>

namespace premod {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

Json rational_pair(const Rational& r) {
    return Json::array({r.get_num().get_str(), r.get_den().get_str()});
}

Rational rational_from_pair(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
        parse_fail("expected a rational as a pair of decimal strings, got " + j.dump());
    mpz_class p, q;
    if (p.set_str(j[0].get<std::string>(), 10) != 0 || q.set_str(j[1].get<std::string>(), 10) != 0)
        parse_fail("non-decimal rational component in " + j.dump());
    if (q == 0) parse_fail("zero denominator in " + j.dump());
    Rational r(p, q);
    r.canonicalize();
    return r;
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

long small_int(const Json& j, const std::string& what) {
    if (!j.is_number_integer()) parse_fail(what + " must be an integer, got " + j.dump());
    return j.get<long>();
}

std::vector<CycNum> cyc_list(const Json& j, const char* what) {
    if (!j.is_array()) parse_fail(std::string(what) + " must be an array");
    std::vector<CycNum> out;
    for (const auto& x : j) out.push_back(cyc_from_json(x));
    return out;
}

PremodularData premodular_from_json(const Json& j) {
    FusionRing ring = ring_from_json(j);
    const long conductor = small_int(field(j, "conductor"), "conductor");
    if (conductor < 1) parse_fail("conductor must be positive");
    auto dims = cyc_list(field(j, "dims"), "dims");
    std::vector<CycNum> twists;
    if (j.contains("twists")) {
        twists = cyc_list(j.at("twists"), "twists");
    } else if (j.contains("theta_exp")) {
        if (!j.at("theta_exp").is_array()) parse_fail("theta_exp must be an array");
        for (const auto& e : j.at("theta_exp")) {
            const Rational r = rational_from_pair(e);
            if (!r.get_num().fits_slong_p() || !r.get_den().fits_slong_p()) parse_fail("theta exponent too large");
            twists.push_back(CycNum::root(r.get_num().get_si(), r.get_den().get_si()));
        }
    } else {
        parse_fail("missing field \"twists\" (or \"theta_exp\")");
    }
    std::optional<CycMatrix> s;
    if (j.contains("s")) {
        if (!j.at("s").is_array()) parse_fail("s must be an array of rows");
        CycMatrix m;
        for (const auto& row : j.at("s")) m.push_back(cyc_list(row, "s row"));
        s = std::move(m);
    }
    try {
        return PremodularData(std::move(ring), conductor, std::move(dims), std::move(twists), std::move(s));
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::InvalidArgument) parse_fail(e.what());
        throw;
    }
}

MetricGroup metric_group_from_json(const Json& j) {
    const auto& orders_j = field(j, "orders");
    if (!orders_j.is_array()) parse_fail("orders must be an array");
    std::vector<long> orders;
    for (const auto& n : orders_j) orders.push_back(small_int(n, "cyclic order"));
    const auto& q = field(j, "q");
    if (!q.is_object()) parse_fail("q must be an object keyed by element");
    std::size_t size = 1;
    for (long n : orders) {
        if (n < 1) parse_fail("cyclic orders must be positive");
        size *= static_cast<std::size_t>(n);
        if (size > MetricGroup::kMaxOrder)
            throw Error(ErrorKind::GroupsTooLarge, "group order exceeds " + std::to_string(MetricGroup::kMaxOrder));
    }
    // Shape first with a zero table, then fill through the element parser.
    MetricGroup shape(orders, std::vector<Rational>(size, Rational(0)));
    std::vector<Rational> table(size);
    std::vector<bool> seen(size, false);
    for (const auto& [key, value] : q.items()) {
        const auto x = shape.parse_element(key);
        if (seen[x]) parse_fail("duplicate q entry for " + key);
        if (!value.is_string()) parse_fail("q value for " + key + " must be a \"p/q\" string");
        table[x] = rational_from_string(value.get<std::string>());
        seen[x] = true;
    }
    for (MetricGroup::Element x = 0; x < size; ++x)
        if (!seen[x]) parse_fail("q table has no entry for " + shape.element_name(x));
    return MetricGroup(std::move(orders), std::move(table));
}

}  // namespace

Json to_json(const CycNum& x) {
    Json c = Json::array();
    for (const auto& r : x.coeffs()) c.push_back(rational_pair(r));
    return Json{{"n", x.conductor()}, {"c", std::move(c)}};
}

CycNum cyc_from_json(const Json& j) {
    const long n = small_int(field(j, "n"), "n");
    if (n < 1) parse_fail("conductor must be positive");
    const auto& c = field(j, "c");
    if (!c.is_array()) parse_fail("c must be an array");
    std::vector<Rational> coeffs;
    for (const auto& r : c) coeffs.push_back(rational_from_pair(r));
    try {
        return CycNum::from_coeffs(n, coeffs);
    } catch (const Error& e) {
        parse_fail(e.what());
    }
}

Json to_json(const FusionRing& ring) {
    Json fusion = Json::array();
    for (Label a = 0; a < ring.rank(); ++a)
        for (Label b = 0; b < ring.rank(); ++b)
            for (Label c = 0; c < ring.rank(); ++c)
                if (const long m = ring.n(a, b, c); m != 0) fusion.push_back(Json::array({a, b, c, m}));
    return Json{{"labels", ring.labels()}, {"unit", ring.unit()}, {"dual", ring.duals()}, {"fusion", std::move(fusion)}};
}

FusionRing ring_from_json(const Json& j) {
    const auto& labels_j = field(j, "labels");
    if (!labels_j.is_array()) parse_fail("labels must be an array");
    std::vector<std::string> labels;
    for (const auto& l : labels_j) {
        if (!l.is_string()) parse_fail("labels must be strings");
        labels.push_back(l.get<std::string>());
    }
    const std::size_t r = labels.size();
    if (r == 0) parse_fail("a fusion ring needs at least one label");
    const long unit = small_int(field(j, "unit"), "unit");
    if (unit < 0 || static_cast<std::size_t>(unit) >= r) parse_fail("unit index out of range");
    const auto& dual_j = field(j, "dual");
    if (!dual_j.is_array() || dual_j.size() != r) parse_fail("dual must list one index per label");
    std::vector<Label> dual;
    for (const auto& d : dual_j) {
        const long v = small_int(d, "dual index");
        if (v < 0 || static_cast<std::size_t>(v) >= r) parse_fail("dual index out of range");
        dual.push_back(static_cast<Label>(v));
    }
    std::vector<std::vector<std::vector<long>>> fusion(r, std::vector<std::vector<long>>(r, std::vector<long>(r, 0)));
    const auto& entries = field(j, "fusion");
    if (!entries.is_array()) parse_fail("fusion must be an array of [a, b, c, N]");
    for (const auto& e : entries) {
        if (!e.is_array() || e.size() != 4) parse_fail("fusion entries must be [a, b, c, N], got " + e.dump());
        long idx[3];
        for (int i = 0; i < 3; ++i) {
            idx[i] = small_int(e[i], "fusion index");
            if (idx[i] < 0 || static_cast<std::size_t>(idx[i]) >= r) parse_fail("fusion index out of range in " + e.dump());
        }
        fusion[idx[0]][idx[1]][idx[2]] = small_int(e[3], "fusion multiplicity");
    }
    return FusionRing(std::move(labels), static_cast<Label>(unit), std::move(dual), std::move(fusion));
}

Json to_json(const PremodularData& data) {
    Json j{{"type", "premodular"}};
    const Json ring = to_json(data.ring());
    for (const auto& [k, v] : ring.items()) j[k] = v;
    j["conductor"] = data.conductor();
    Json dims = Json::array(), twists = Json::array();
    for (const auto& d : data.dims()) dims.push_back(to_json(d));
    for (const auto& t : data.twists()) twists.push_back(to_json(t));
    j["dims"] = std::move(dims);
    j["twists"] = std::move(twists);
    if (data.s_supplied()) {
        Json s = Json::array();
        for (const auto& row : data.s_matrix()) {
            Json jr = Json::array();
            for (const auto& x : row) jr.push_back(to_json(x));
            s.push_back(std::move(jr));
        }
        j["s"] = std::move(s);
    }
    return j;
}

Json to_json(const MetricGroup& mg) {
    Json q = Json::object();
    for (MetricGroup::Element x = 0; x < mg.size(); ++x) q[mg.element_name(x)] = rational_to_string(mg.q(x));
    return Json{{"type", "metric_group"}, {"orders", mg.orders()}, {"q", std::move(q)}};
}

Json to_json(const Datum& datum) {
    return std::visit([](const auto& d) { return to_json(d); }, datum);
}

Datum datum_from_json(const Json& j) {
    const auto& type = field(j, "type");
    if (type == "premodular") return premodular_from_json(j);
    if (type == "metric_group") return metric_group_from_json(j);
    parse_fail("unknown datum type " + type.dump() + " (expected \"premodular\" or \"metric_group\")");
}

Datum datum_from_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        parse_fail(std::string("invalid JSON: ") + e.what());
    }
    try {
        return datum_from_json(j);
    } catch (const nlohmann::json::exception& e) {
        parse_fail(std::string("malformed datum: ") + e.what());
    }
}

ValidationReport validate_datum(const Datum& datum, unsigned threads) {
    if (const auto* mg = std::get_if<MetricGroup>(&datum)) return validate_metric_group(*mg);
    return validate_premodular(std::get<PremodularData>(datum), threads);
}

Datum load_datum(const std::string& path) {
    std::ifstream in(path);
    if (!in) parse_fail("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    Datum d = datum_from_text(buf.str());
    const auto report = validate_datum(d);
    if (!report.ok()) throw Error(ErrorKind::ValidationError, report.summary());
    return d;
}

}  // namespace premod
