#include <doctest.h>

#include <cmath>
#include <complex>

#include "premod/center_components.hpp"
#include "support.hpp"

using premod::CycNum;
using premod::FusionRing;
using premod::Label;
using premod::PremodularData;
using testsupport::cyclic;

namespace {

using Chars = std::vector<std::vector<std::complex<double>>>;

// Symmetric datum on Rep(S3): 1, sgn, std with std x std = 1 + sgn + std.
PremodularData rep_s3() {
    std::vector<std::vector<std::vector<long>>> n(3, std::vector<std::vector<long>>(3, std::vector<long>(3, 0)));
    for (int a = 0; a < 3; ++a) n[0][a][a] = n[a][0][a] = 1;
    n[1][1][0] = 1;
    n[1][2][2] = n[2][1][2] = 1;
    n[2][2][0] = n[2][2][1] = n[2][2][2] = 1;
    const FusionRing ring({"1", "sgn", "std"}, 0, {0, 1, 2}, n);
    return PremodularData(ring, 1, {CycNum(1), CycNum(1), CycNum(2)}, {CycNum(1), CycNum(1), CycNum(1)});
}

// Every row of `a` matches exactly one row of `b` within tol, and vice versa.
bool same_rows(const Chars& a, const Chars& b, double tol) {
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (const auto& row : a) {
        bool found = false;
        for (std::size_t j = 0; j < b.size() && !found; ++j) {
            if (used[j] || b[j].size() != row.size()) continue;
            bool eq = true;
            for (std::size_t k = 0; k < row.size(); ++k)
                if (std::abs(row[k] - b[j][k]) > tol) eq = false;
            if (eq) used[j] = found = true;
        }
        if (!found) return false;
    }
    return true;
}

Chars from_exponents(const std::vector<std::vector<premod::Rational>>& ex) {
    Chars out;
    for (const auto& row : ex) {
        std::vector<std::complex<double>> r;
        for (const auto& e : row) r.push_back(std::polar(1.0, 2.0 * M_PI * e.get_d()));
        out.push_back(r);
    }
    return out;
}

}  // namespace

TEST_CASE("component examples") {
    const auto semion = premod::ring_characters(premod::to_premodular(cyclic(2, 1, 4)));
    CHECK(semion.count == 1);
    REQUIRE(semion.characters.size() == 1);
    CHECK(std::abs(semion.characters[0][0] - 1.0) < 1e-12);
    CHECK_FALSE(semion.magnetic_index.has_value());

    const auto svec = premod::ring_characters(testsupport::svec_data());
    CHECK(svec.count == 2);
    CHECK(svec.exact);
    REQUIRE(svec.magnetic_index.has_value());
    CHECK(std::abs(svec.characters[*svec.magnetic_index][1] + 1.0) < 1e-12);
    CHECK(std::abs(svec.characters[svec.dim_index][1] - 1.0) < 1e-12);

    const auto z4 = premod::ring_characters(premod::to_premodular(cyclic(4, 1, 4)));
    CHECK(z4.count == 2);
    CHECK(z4.labels == std::vector<Label>{0, 2});
    CHECK_FALSE(z4.magnetic_index.has_value());
    CHECK(same_rows(z4.characters, Chars{{1.0, 1.0}, {1.0, -1.0}}, 1e-12));
}

TEST_CASE("component counts") {
    CHECK(premod::component_count(testsupport::ising_data(3)) == 1);
    CHECK(premod::component_count(testsupport::svec_data()) == 2);
    CHECK(premod::component_count(premod::as_premodular(premod::catalog_get("svec-x-semion"))) == 2);
}

TEST_CASE("catalog: transparent simples, characters and components agree") {
    for (const auto& e : premod::catalog_list()) {
        CAPTURE(e.name);
        const auto d = premod::as_premodular(e);
        const auto transparent = premod::transparent_labels(d);
        const auto comp = premod::ring_characters(d);
        CHECK(comp.count == transparent.size());
        CHECK(comp.characters.size() == transparent.size());
        CHECK(premod::component_count(d) == transparent.size());
        // Transparent simples of catalog entries are all invertible, so the dim
        // character is identically one and the exact path is taken.
        CHECK(comp.exact);
        for (const auto& z : comp.characters[comp.dim_index]) CHECK(std::abs(z - 1.0) < 1e-12);
        // Characters are multiplicative on the transparent fusion rules.
        const auto sub = d.ring().restrict_to(transparent);
        for (const auto& chi : comp.characters)
            for (Label a = 0; a < sub.rank(); ++a)
                for (Label b = 0; b < sub.rank(); ++b) {
                    std::complex<double> rhs = 0.0;
                    for (Label c = 0; c < sub.rank(); ++c) rhs += static_cast<double>(sub.n(a, b, c)) * chi[c];
                    CHECK(std::abs(chi[a] * chi[b] - rhs) < 1e-8);
                }
    }
}

TEST_CASE("numeric characters agree with exact ones on group rings") {
    for (const auto& e : premod::catalog_list()) {
        const auto ring = premod::as_premodular(e).ring();
        if (!premod::is_group_like(ring)) continue;
        CAPTURE(e.name);
        const auto exact = from_exponents(premod::group_ring_characters(ring));
        CHECK(same_rows(premod::numeric_ring_characters(ring, 1), exact, 1e-8));
        CHECK(same_rows(premod::numeric_ring_characters(ring, 99), exact, 1e-8));
    }
    CHECK_THROWS_AS(premod::group_ring_characters(testsupport::ising_ring()), premod::Error);
}

TEST_CASE("numeric characters of the Ising ring are the normalized S columns") {
    const auto d = testsupport::ising_data(1);
    Chars expected;
    for (Label b = 0; b < 3; ++b) {
        std::vector<std::complex<double>> row;
        for (Label a = 0; a < 3; ++a) row.push_back(d.s(a, b).to_complex() / d.s(0, b).to_complex());
        expected.push_back(row);
    }
    CHECK(same_rows(premod::numeric_ring_characters(d.ring(), 1), expected, 1e-8));
}

TEST_CASE("generic path: character table of Rep(S3)") {
    const auto d = rep_s3();
    REQUIRE(premod::validate_premodular(d).ok());
    const auto comp = premod::ring_characters(d, 7);
    CHECK_FALSE(comp.exact);
    CHECK(comp.count == 3);
    CHECK(same_rows(comp.characters, Chars{{1.0, 1.0, 2.0}, {1.0, -1.0, 0.0}, {1.0, 1.0, -1.0}}, 1e-8));
    CHECK(std::abs(comp.characters[comp.dim_index][2] - 2.0) < 1e-8);
    CHECK_FALSE(comp.magnetic_index.has_value());
}

TEST_CASE("the same seed gives the same characters") {
    const auto d = rep_s3();
    const auto a = premod::ring_characters(d, 3);
    const auto b = premod::ring_characters(d, 3);
    CHECK(a.characters == b.characters);
    CHECK(a.dim_index == b.dim_index);
    // Sorting makes the order independent of the seed as well.
    const auto c = premod::ring_characters(d, 11);
    REQUIRE(c.characters.size() == a.characters.size());
    for (std::size_t i = 0; i < a.characters.size(); ++i)
        for (std::size_t j = 0; j < a.characters[i].size(); ++j)
            CHECK(std::abs(a.characters[i][j] - c.characters[i][j]) < 1e-8);
}
