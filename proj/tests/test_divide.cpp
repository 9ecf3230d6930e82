#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "acampo/errors.hpp"
#include "acampo/generate.hpp"
#include "acampo/json_io.hpp"
#include "test_util.hpp"

using namespace acampo;

TEST_CASE("gl4 fixture validates with the right counts") {
    GermSpec germ = germ_from_file(fixture_path("gl4.germ.json"));
    Divide d = divide_from_file(fixture_path("gl4.divide.json"));
    ValidationReport r = validate_divide(d, germ);
    CHECK(r.pass);
    CHECK(d.mu_plus() == 1);
    CHECK(d.mu0() == 6);
    CHECK(d.mu_minus() == 2);
    CHECK(d.mu() == 9);
}

TEST_CASE("tampered gl4 fixture fails with the right count") {
    GermSpec germ = germ_from_file(fixture_path("gl4.germ.json"));
    Divide d = divide_from_file(fixture_path("gl4.divide.json"));
    // delete one minus region (and its back-reference)
    d.regions.pop_back();
    for (auto& reg : d.regions) {
        auto& nb = reg.segment_neighbors;
        nb.erase(std::remove(nb.begin(), nb.end(), 3), nb.end());
    }
    ValidationReport r = validate_divide(d, germ);
    CHECK_FALSE(r.pass);
    bool found = false;
    for (const auto& issue : r.issues)
        if (issue.expected == 9 && issue.actual == 8) found = true;
    CHECK(found);
}

TEST_CASE("cusp grid divide") {
    GeneratedDivide gd = generate_grid_divide(2, 3);
    ValidationReport r = validate_divide(gd.divide, gd.germ);
    CHECK(r.pass);
    CHECK(gd.divide.mu0() == 1);
    CHECK(gd.divide.mu_plus() + gd.divide.mu_minus() == 1);

    // Dynkin diagram is a path on 2 vertices
    CycleLattice lat = intersection_form(gd.divide);
    DynkinGraph g = dynkin_graph(lat);
    CHECK(g.vertices.size() == 2);
    CHECK(g.edges.size() == 1);
}

TEST_CASE("line arrangement counts for d = 2..7") {
    for (int d = 2; d <= 7; ++d) {
        CAPTURE(d);
        GeneratedDivide gd = generate_line_arrangement_divide(d);
        ValidationReport r = validate_divide(gd.divide, gd.germ);
        CHECK(r.pass);
        CHECK(gd.divide.mu0() == static_cast<std::size_t>(d * (d - 1) / 2));
        CHECK(gd.divide.regions.size() == static_cast<std::size_t>((d - 1) * (d - 2) / 2));
        CHECK(gd.divide.mu() == static_cast<std::size_t>((d - 1) * (d - 1)));
        CHECK(gd.divide.mu_plus() <= gd.divide.mu_minus());
    }
    CHECK_THROWS_AS(generate_line_arrangement_divide(1), Error);
}

TEST_CASE("the d = 4 arrangement has the pinned coloring") {
    GeneratedDivide gd = generate_line_arrangement_divide(4);
    CHECK(gd.divide.mu0() == 6);
    CHECK(gd.divide.mu_plus() == 1);
    CHECK(gd.divide.mu_minus() == 2);
    CHECK(gd.divide.mu() == 9);
}

TEST_CASE("grid divides validate") {
    for (auto [p, q] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 3}, {3, 4}, {4, 4}, {2, 5}, {3, 5},
                        {4, 5}, {5, 5}, {5, 6}, {4, 2}, {5, 2}}) {
        CAPTURE(p);
        CAPTURE(q);
        GeneratedDivide gd = generate_grid_divide(p, q);
        ValidationReport r = validate_divide(gd.divide, gd.germ);
        CHECK(r.pass);
        long long g = std::gcd(p, q);
        CHECK(gd.divide.mu() == static_cast<std::size_t>((p - 1) * (q - 1)));
        CHECK(gd.divide.mu0() == static_cast<std::size_t>(((p - 1) * (q - 1) + g - 1) / 2));
    }
    CHECK_THROWS_AS(generate_grid_divide(1, 3), Error);
    // gcd > 1 with both reduced exponents > 1 needs curved nested branches
    CHECK_THROWS_AS(generate_grid_divide(4, 6), Error);
}

TEST_CASE("grid (2,2) is the node") {
    GeneratedDivide gd = generate_grid_divide(2, 2);
    CHECK(gd.divide.mu0() == 1);
    CHECK(gd.divide.regions.empty());
    CHECK(gd.germ.branches.size() == 2);
    GermInvariants gi = germ_invariants(gd.germ);
    CHECK(gi.delta == 1);
    CHECK(gi.mu == 1);
}

TEST_CASE("grid (3,3) agrees with the 3-line arrangement") {
    GeneratedDivide grid = generate_grid_divide(3, 3);
    GeneratedDivide lines = generate_line_arrangement_divide(3);
    CHECK(grid.divide.mu0() == lines.divide.mu0());
    CHECK(grid.divide.mu() == lines.divide.mu());
    CHECK(grid.divide.regions.size() == lines.divide.regions.size());
    GermInvariants gi = germ_invariants(grid.germ);
    CHECK(gi.mu == 4);
    CHECK(gi.delta == 3);
    CHECK(gi.r == 3);
}

TEST_CASE("intersection form follows the three incidence cases") {
    GermSpec germ = germ_from_file(fixture_path("gl4.germ.json"));
    Divide d = divide_from_file(fixture_path("gl4.divide.json"));
    REQUIRE(validate_divide(d, germ).pass);
    CycleLattice lat = intersection_form(d);
    REQUIRE(lat.rank() == 9);

    // basis order: plus regions, double points, minus regions
    CHECK(lat.basis[0].kind == CyclePointKind::PlusRegion);
    CHECK(lat.basis[1].kind == CyclePointKind::DoublePoint);
    CHECK(lat.basis[8].kind == CyclePointKind::MinusRegion);

    // <alpha_plus, alpha_j> = 1 for every D_j on the closure of the plus region
    std::size_t plus = lat.index_of(CyclePointKind::PlusRegion, 1);
    for (int pid : {2, 3, 4, 5})
        CHECK(lat.form.at(plus, lat.index_of(CyclePointKind::DoublePoint, pid)).to_int64() == 1);
    // and 0 where the incidence table gives nothing
    CHECK(lat.form.at(plus, lat.index_of(CyclePointKind::DoublePoint, 1)).is_zero());
    CHECK(lat.form.at(plus, lat.index_of(CyclePointKind::DoublePoint, 6)).is_zero());

    // <alpha_j, alpha_minus> = 1 for D_j on the minus closure
    std::size_t m2 = lat.index_of(CyclePointKind::MinusRegion, 2);
    for (int pid : {1, 2, 4})
        CHECK(lat.form.at(lat.index_of(CyclePointKind::DoublePoint, pid), m2).to_int64() == 1);

    // <alpha_plus, alpha_minus> = 1 across shared segments
    CHECK(lat.form.at(plus, m2).to_int64() == 1);
    CHECK(lat.form.at(plus, lat.index_of(CyclePointKind::MinusRegion, 3)).to_int64() == 1);
}

TEST_CASE("forms are skew with zero diagonal and entries in -1..1") {
    std::vector<GeneratedDivide> fixtures;
    for (int d = 2; d <= 6; ++d) fixtures.push_back(generate_line_arrangement_divide(d));
    for (auto [p, q] : {std::pair{2, 3}, {2, 4}, {3, 4}, {4, 4}, {3, 5}})
        fixtures.push_back(generate_grid_divide(p, q));
    for (const auto& gd : fixtures) {
        CHECK(validate_divide(gd.divide, gd.germ).pass);
        CycleLattice lat = intersection_form(gd.divide);
        for (std::size_t i = 0; i < lat.rank(); ++i) {
            CHECK(lat.form.at(i, i).is_zero());
            for (std::size_t j = 0; j < lat.rank(); ++j) {
                CHECK(lat.form.at(i, j) == -lat.form.at(j, i));
                CHECK(lat.form.at(i, j).abs() <= BigInt(1));
            }
        }
    }
}

TEST_CASE("gl4 dynkin graph is tag-isomorphic to the transcribed diagram") {
    Divide d = divide_from_file(fixture_path("gl4.divide.json"));
    DynkinGraph got = dynkin_graph(intersection_form(d));
    DynkinGraph want = dynkin_from_file(fixture_path("gl4.dynkin.json"));
    CHECK(dynkin_isomorphic(got, want));

    // a broken edge set must not match
    DynkinGraph broken = want;
    broken.edges.pop_back();
    broken.edges.emplace_back(0, 4);
    CHECK_FALSE(dynkin_isomorphic(got, broken));
}

TEST_CASE("empty divide gives the empty graph") {
    Divide d;
    CycleLattice lat = intersection_form(d);
    DynkinGraph g = dynkin_graph(lat);
    CHECK(g.vertices.empty());
    CHECK(g.edges.empty());
}

TEST_CASE("dot output is deterministic and carries the vertex shapes") {
    Divide d = divide_from_file(fixture_path("gl4.divide.json"));
    DynkinGraph g = dynkin_graph(intersection_form(d));
    std::string a = dynkin_to_dot(g);
    std::string b = dynkin_to_dot(g);
    CHECK(a == b);
    CHECK(a.find("doublecircle") != std::string::npos);
    CHECK(a.find("diamond") != std::string::npos);
    CHECK(a.find("shape=circle") != std::string::npos);
}

TEST_CASE("structural violations are caught") {
    Divide d = divide_from_file(fixture_path("gl4.divide.json"));
    d.regions[1].sign = RegionSign::Plus;  // neighbor of region 1 with equal sign
    CHECK_THROWS_AS(d.check_structure(), Error);
}
