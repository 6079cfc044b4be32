#include "premod/catalog.hpp"

#include <algorithm>
#include <sstream>

namespace premod {

std::string_view to_string(EntryKind kind) {
    return kind == EntryKind::Premodular ? "premodular" : "metric_group";
}

namespace {

MetricGroup cyclic(long n, long num, long den) { return MetricGroup::from_generators({n}, {Rational(num, den)}); }

CatalogEntry pointed_entry(std::string name, MetricGroup mg, std::string doc) {
    return {std::move(name), EntryKind::MetricGroup, std::move(mg), std::move(doc)};
}

FusionRing z2_ring() {
    return FusionRing::group_ring({"1", "e"}, 0, {{0, 1}, {1, 0}});
}

PremodularData ising(long nu) {
    // 1, psi, sigma with psi^2 = 1, psi sigma = sigma, sigma^2 = 1 + psi.
    std::vector<std::vector<std::vector<long>>> fusion(3, std::vector<std::vector<long>>(3, std::vector<long>(3, 0)));
    const auto set = [&](int a, int b, int c) { fusion[a][b][c] = 1; };
    for (int a = 0; a < 3; ++a) {
        set(0, a, a);
        set(a, 0, a);
    }
    set(1, 1, 0);
    set(1, 2, 2);
    set(2, 1, 2);
    set(2, 2, 0);
    set(2, 2, 1);
    FusionRing ring({"1", "psi", "sigma"}, 0, {0, 1, 2}, std::move(fusion));
    const CycNum sqrt2 = CycNum::root(1, 8) + CycNum::root(-1, 8);
    return PremodularData(std::move(ring), 16, {CycNum(1), CycNum(1), sqrt2},
                          {CycNum(1), CycNum(-1), CycNum::root(nu, 16)});
}

// "ising:11" sorts after "ising:3".
std::pair<std::string, long> natural_key(const std::string& name) {
    const auto colon = name.rfind(':');
    if (colon == std::string::npos) return {name, -1};
    const std::string tail = name.substr(colon + 1);
    if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos) return {name, -1};
    return {name.substr(0, colon + 1), std::stol(tail)};
}

std::vector<CatalogEntry> build() {
    std::vector<CatalogEntry> out;
    out.push_back({"svec", EntryKind::Premodular,
                   PremodularData(z2_ring(), 2, {CycNum(1), CycNum(1)}, {CycNum(1), CycNum(-1)}),
                   "super vector spaces; transparent fermion e with theta_e = -1"});
    out.push_back({"rep-z2", EntryKind::Premodular,
                   PremodularData(z2_ring(), 1, {CycNum(1), CycNum(1)}, {CycNum(1), CycNum(1)}),
                   "Rep(Z2), symmetric with a transparent boson"});
    for (long nu = 1; nu < 16; nu += 2)
        out.push_back({"ising:" + std::to_string(nu), EntryKind::Premodular, ising(nu),
                       "Ising-type modular data, theta_sigma = exp(2 pi i " + std::to_string(nu) + "/16)"});

    out.push_back(pointed_entry("svec-mg", cyclic(2, 1, 2), "sVec as the metric group (Z2, q(1) = 1/2)"));
    out.push_back(pointed_entry("semion", cyclic(2, 1, 4), "(Z2, q(1) = 1/4)"));
    out.push_back(pointed_entry("semion-bar", cyclic(2, 3, 4), "(Z2, q(1) = 3/4)"));
    for (long k : {1, 2, 3, 5, 7}) {
        const std::string doc = k == 2 ? "(Z4, q(x) = x^2/4); degenerate with a transparent boson"
                                       : "(Z4, q(x) = " + std::to_string(k) + " x^2/8)";
        out.push_back(pointed_entry("z4-q:" + std::to_string(k), cyclic(4, k, 8), doc));
    }
    out.push_back(pointed_entry("toric",
                                MetricGroup::from_generators({2, 2}, {Rational(0), Rational(0)}, {Rational(1, 2)}),
                                "toric code, (Z2 x Z2, q(x, y) = xy/2)"));
    out.push_back(pointed_entry(
        "three-fermion", MetricGroup::from_generators({2, 2}, {Rational(1, 2), Rational(1, 2)}, {Rational(1, 2)}),
        "three-fermion, q = 1/2 on every nonzero element"));
    out.push_back(pointed_entry("svec-x-semion", orthogonal_sum(cyclic(2, 1, 2), cyclic(2, 1, 4)),
                                "sVec (+) semion on Z2 x Z2"));
    out.push_back(pointed_entry("svec-x-z4-q:1", orthogonal_sum(cyclic(2, 1, 2), cyclic(4, 1, 8)),
                                "sVec (+) (Z4, x^2/8) on Z2 x Z4"));

    std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        return natural_key(a.name) < natural_key(b.name);
    });
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream in(s);
    std::string part;
    while (std::getline(in, part, sep)) parts.push_back(part);
    if (!s.empty() && s.back() == sep) parts.emplace_back();
    return parts;
}

CatalogEntry pointed_from_key(const std::string& name) {
    const auto fields = split(name.substr(std::string("pointed:").size()), ':');
    if (fields.size() < 2 || fields.size() > 3)
        throw Error(ErrorKind::ParseError, "expected pointed:<n1>x<n2>...:<q1>,...[:<b12>,...], got '" + name + "'");
    std::vector<long> orders;
    for (const auto& n : split(fields[0], 'x')) {
        try {
            std::size_t used = 0;
            orders.push_back(std::stol(n, &used));
            if (used != n.size()) throw std::invalid_argument(n);
        } catch (const std::exception&) {
            throw Error(ErrorKind::ParseError, "bad cyclic order '" + n + "' in '" + name + "'");
        }
    }
    std::vector<Rational> qs, bs;
    for (const auto& q : split(fields[1], ',')) qs.push_back(rational_from_string(q));
    if (fields.size() == 3)
        for (const auto& b : split(fields[2], ',')) bs.push_back(rational_from_string(b));
    MetricGroup mg;
    try {
        mg = MetricGroup::from_generators(orders, qs, bs);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::InvalidArgument) throw Error(ErrorKind::ParseError, e.what());
        throw;
    }
    const auto report = validate_metric_group(mg);
    if (!report.ok()) throw Error(ErrorKind::ValidationError, report.summary());
    return pointed_entry(name, std::move(mg), "pointed metric group from generator data");
}

}  // namespace

const std::vector<CatalogEntry>& catalog_list() {
    static const std::vector<CatalogEntry> entries = build();
    return entries;
}

CatalogEntry catalog_get(const std::string& name) {
    if (name.rfind("pointed:", 0) == 0) return pointed_from_key(name);
    for (const auto& e : catalog_list())
        if (e.name == name) return e;
    std::string keys;
    for (const auto& e : catalog_list()) keys += (keys.empty() ? "" : ", ") + e.name;
    throw Error(ErrorKind::UnknownCatalogKey,
                "'" + name + "'; valid keys: " + keys + ", pointed:<orders>:<q>[:<b>]");
}

PremodularData as_premodular(const CatalogEntry& entry) {
    if (const auto* mg = std::get_if<MetricGroup>(&entry.payload)) return to_premodular(*mg);
    return std::get<PremodularData>(entry.payload);
}

}  // namespace premod
