#include <doctest.h>

#include <fstream>

#include <json.hpp>

#include "jnum/catalog.hpp"
#include "jnum/cli_result.hpp"

using namespace jnum;
using json = nlohmann::json;

namespace {

json load(const std::string& name) {
    std::ifstream in(std::string(JNUM_FIXTURE_DIR) + "/" + name);
    REQUIRE(in);
    return json::parse(in);
}

}  // namespace

TEST_CASE("arithcomp fixture matches the embedded table") {
    auto f = load("arithcomp.json");
    const auto& t = arithcomp_table();
    REQUIRE(f["entries"].size() == t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        const auto& e = f["entries"][i];
        CHECK(e["label"] == t[i].label);
        CHECK(std::abs(cx_from_json(e["c"]) - t[i].c) < 1e-12);
        CHECK(e["b_order"] == t[i].b_order);
        CHECK(e["J"].get<double>() == doctest::Approx(t[i].expected_J).epsilon(1e-12));
        CHECK(e["field_d"] == t[i].field_d);
    }
}

TEST_CASE("knot table fixture matches the embedded table") {
    auto f = load("knot_table.json");
    const auto& t = knot_table();
    REQUIRE(f["entries"].size() == t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        const auto& e = f["entries"][i];
        CHECK(e["label"] == t[i].label);
        CHECK(e["p"] == t[i].p);
        CHECK(e["q"] == t[i].q);
        CHECK(IntPoly::parse(e["min_poly"].get<std::string>()) == t[i].min_poly);
        CHECK(cx_from_json(e["z"]) == t[i].z);
        CHECK(e["J"].get<double>() == t[i].J);
        CHECK(e["alpha"].get<double>() == t[i].alpha);
    }
    CHECK(f["geodesic_bound"]["trace"].get<double>() == kGeodesicTraceBound);
    CHECK(f["geodesic_bound"]["defect"].get<double>() == kGeodesicDefectBound);
}

TEST_CASE("gtk family fixture matches the embedded list") {
    auto f = load("gtk_families.json");
    const auto& t = gtk_families();
    REQUIRE(f["entries"].size() == t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        const auto& e = f["entries"][i];
        CHECK(e["label"] == t[i].label);
        CHECK(e["theta_num"] == t[i].theta_num);
        CHECK(e["theta_den"] == t[i].theta_den);
        CHECK(e["k"].get<double>() == doctest::Approx(t[i].k).epsilon(1e-12));
        CHECK(e["integer_multiple"] == t[i].integer_multiple);
        CHECK(e["arithmetic"] == t[i].arithmetic);
        if (t[i].field_d) CHECK(e["field_d"] == *t[i].field_d);
        else CHECK(e["field_d"].is_null());
    }
}

TEST_CASE("bianchi fixture matches the embedded presentations") {
    auto f = load("bianchi.json");
    REQUIRE(f["entries"].size() == kBianchiDs.size());
    for (const auto& e : f["entries"]) {
        int d = e["d"];
        auto rel = bianchi_relations(d);
        REQUIRE(e["relators"].size() == rel.size());
        for (std::size_t i = 0; i < rel.size(); ++i) CHECK(e["relators"][i] == rel[i].text);
        CHECK(std::abs(cx_from_json(e["alpha"]) - bianchi_generators(d)[2].b()) < 1e-12);
    }
}
