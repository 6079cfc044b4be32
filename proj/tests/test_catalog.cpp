#include <doctest.h>

#include <set>

#include "premod/catalog.hpp"
#include "support.hpp"

using premod::CentreKind;
using premod::CycNum;
using premod::EntryKind;
using premod::ErrorKind;
using premod::Label;
using premod::MetricGroup;
using premod::Rational;

namespace {

ErrorKind get_error(const std::string& key) {
    try {
        (void)premod::catalog_get(key);
    } catch (const premod::Error& e) {
        return e.kind();
    }
    FAIL("no error for " << key);
    return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("catalog examples") {
    const auto svec = premod::catalog_get("svec");
    CHECK(svec.kind == EntryKind::Premodular);
    const auto d = premod::as_premodular(svec);
    CHECK(d.rank() == 2);
    CHECK(d.twist(0) == CycNum(1));
    CHECK(d.twist(1) == CycNum(-1));
    CHECK(d == testsupport::svec_data());

    const auto ising = premod::as_premodular(premod::catalog_get("ising:3"));
    const Label sigma = ising.ring().index_of("sigma"), psi = ising.ring().index_of("psi");
    CHECK(ising.twist(sigma) == CycNum::root(3, 16));
    CHECK(premod::gauss_sum(ising) == CycNum(2) * CycNum::root(3, 16));
    CHECK(premod::validate_premodular(ising).ok());
    CHECK(premod::classify_degeneracy(ising).kind == CentreKind::Nondegenerate);
    CHECK(premod::relative_centralizer(ising, {0, psi}) == std::vector<Label>{0, psi});

    CHECK(get_error("nonsense") == ErrorKind::UnknownCatalogKey);
    try {
        (void)premod::catalog_get("nonsense");
    } catch (const premod::Error& e) {
        CHECK(std::string(e.what()).find("ising:11") != std::string::npos);
    }
}

TEST_CASE("catalog list") {
    const auto& list = premod::catalog_list();
    CHECK(list.size() == 22);
    std::set<std::string> names;
    for (const auto& e : list) {
        names.insert(e.name);
        CHECK_FALSE(e.doc.empty());
        CHECK(premod::catalog_get(e.name).name == e.name);
        CHECK(premod::as_premodular(premod::catalog_get(e.name)) == premod::as_premodular(e));
        CHECK((e.kind == EntryKind::MetricGroup) == std::holds_alternative<MetricGroup>(e.payload));
    }
    CHECK(names.size() == list.size());
    CHECK(list.front().name == "ising:1");
    // ising:3 sorts before ising:11.
    std::size_t i3 = 0, i11 = 0;
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (list[i].name == "ising:3") i3 = i;
        if (list[i].name == "ising:11") i11 = i;
    }
    CHECK(i3 < i11);
    CHECK(premod::to_string(EntryKind::MetricGroup) == "metric_group");
}

TEST_CASE("every entry validates") {
    for (const auto& e : premod::catalog_list()) {
        CAPTURE(e.name);
        if (const auto* mg = std::get_if<MetricGroup>(&e.payload)) {
            CHECK(premod::validate_metric_group(*mg).ok());
            CHECK(testsupport::quadratic_law_holds(*mg));
            CHECK(testsupport::bi_additive(*mg));
        }
        CHECK(premod::validate_premodular(premod::as_premodular(e)).ok());
    }
}

TEST_CASE("the Ising family") {
    int seen = 0;
    for (long nu = 1; nu < 16; nu += 2) {
        CAPTURE(nu);
        const auto d = premod::as_premodular(premod::catalog_get("ising:" + std::to_string(nu)));
        CHECK(d == testsupport::ising_data(nu));
        CHECK(premod::gauss_sum(d) == CycNum(2) * CycNum::root(nu, 16));
        CHECK(premod::fpdim(d.ring()).total == doctest::Approx(4.0).epsilon(1e-12));
        ++seen;
    }
    CHECK(seen == 8);
    CHECK(get_error("ising:2") == ErrorKind::UnknownCatalogKey);
}

TEST_CASE("expected classifications") {
    const auto kind = [](const char* key) {
        return premod::classify_degeneracy(premod::as_premodular(premod::catalog_get(key))).kind;
    };
    CHECK(kind("svec") == CentreKind::SlightlyDegenerate);
    CHECK(kind("svec-mg") == CentreKind::SlightlyDegenerate);
    CHECK(kind("svec-x-semion") == CentreKind::SlightlyDegenerate);
    CHECK(kind("svec-x-z4-q:1") == CentreKind::SlightlyDegenerate);
    CHECK(kind("rep-z2") == CentreKind::OtherDegenerate);
    CHECK(kind("z4-q:2") == CentreKind::OtherDegenerate);
    for (const char* key : {"semion", "semion-bar", "toric", "three-fermion", "z4-q:1", "z4-q:3", "z4-q:5", "z4-q:7"})
        CHECK(kind(key) == CentreKind::Nondegenerate);
}

TEST_CASE("parametric pointed keys") {
    const auto e = premod::catalog_get("pointed:2x4:1/2,1/8");
    CHECK(e.kind == EntryKind::MetricGroup);
    const auto& mg = std::get<MetricGroup>(e.payload);
    CHECK(mg == MetricGroup::from_generators({2, 4}, {Rational(1, 2), Rational(1, 8)}));
    const auto toric = premod::catalog_get("pointed:2x2:0,0:1/2");
    CHECK(std::get<MetricGroup>(toric.payload) == std::get<MetricGroup>(premod::catalog_get("toric").payload));

    CHECK(get_error("pointed:") == ErrorKind::ParseError);
    CHECK(get_error("pointed:2x2") == ErrorKind::ParseError);
    CHECK(get_error("pointed:2xa:0,0") == ErrorKind::ParseError);
    CHECK(get_error("pointed:2x2:0") == ErrorKind::ParseError);
    CHECK(get_error("pointed:2:1/x") == ErrorKind::ParseError);
    CHECK(get_error("pointed:2:1/3") == ErrorKind::ValidationError);
}
