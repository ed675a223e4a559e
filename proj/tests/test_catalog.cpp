#include <doctest.h>

#include "helpers.hpp"
#include "jnum/catalog.hpp"
#include "jnum/errors.hpp"

using namespace jnum;
using namespace testing;

TEST_CASE("gtk generators") {
    auto g = gtk_generators({1, 2, 0.5});
    CHECK(proj_dist(g[1], Mat2(0, -1, 1, Cx(0, 1))) < 1e-15);
    for (const auto& f : gtk_families()) {
        auto h = gtk_generators({f.theta_num, f.theta_den, f.k});
        CHECK(std::abs(jorgensen_value(h[0], h[1]) - 1.0) <= 1e-12);
    }
    for (double k : {0.3, 1.0, 2.7})
        for (int num = 0; num <= 4; ++num) {
            double th = kPi * num / 4;
            CHECK(proj_dist(gtk_B(th + kPi, k), gtk_B(th, k)) < 1e-12);
        }
    CHECK_THROWS_AS(gtk_generators({1, 0, 0.5}), UsageError);
    CHECK_THROWS_AS(gtk_generators({5, 2, 0.5}), UsageError);
}

TEST_CASE("gtk (pi/6, sqrt3/2) is the figure-eight group") {
    auto g = gtk_generators({1, 6, std::sqrt(3.0) / 2});
    CHECK(jtilde_upper_bound(g, 3).report.value == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("sigma lambda generators") {
    auto g = sigma_lambda_generators(1, Cx(0.5, std::sqrt(3.0) / 2));
    CHECK(std::abs(g[1].c() - 1.0) < 1e-15);
    CHECK(jorgensen_value(A, sigma_lambda_generators(Cx(0, 1), Cx(0.7, -0.2))[1]) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(jorgensen_value(A, sigma_lambda_generators(2, 0)[1]) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK_THROWS_AS(sigma_lambda_generators(0, 1), UsageError);
}

TEST_CASE("bianchi") {
    CHECK(proj_dist(bianchi_generators(1)[2], Mat2(1, Cx(0, 1), 0, 1)) == 0.0);
    CHECK(proj_dist(bianchi_generators(3)[2], Mat2(1, w3, 0, 1)) < 1e-15);
    CHECK_THROWS_AS(bianchi_generators(5), UsageError);
    CHECK(bianchi_relations(2).size() == 4);
    CHECK(bianchi_relations(1).size() == 6);
    CHECK(bianchi_relations(3).size() == 6);
    bool has7 = false, has11 = false;
    for (auto& r : bianchi_relations(7)) has7 |= r.text == "(S A T^-1 S T)^2";
    for (auto& r : bianchi_relations(11)) has11 |= r.text == "(S A T^-1 S T)^3";
    CHECK(has7);
    CHECK(has11);
    for (int d : kBianchiDs) {
        auto rep = verify_relations(d);
        CHECK(rep.all_hold());
        CHECK(rep.max_deviation() < 1e-9);
    }
}

TEST_CASE("word identities") {
    auto rep = losid_identity_suite();
    auto find = [&](const std::string& group, const std::string& label) -> const IdentityCheck* {
        for (auto& e : rep.entries)
            if (e.group == group && e.label == label) return &e;
        return nullptr;
    };
    for (auto grp : {"(pi/2, 1/2)", "(pi/2, sqrt2/2)", "(pi/2, sqrt3/2)"}) {
        auto st = find(grp, "S T = B");
        REQUIRE(st);
        CHECK(st->holds);
    }
    auto d2 = find("(pi/6, 2*sqrt3/2)", "D^2 = 1");
    REQUIRE(d2);
    CHECK(d2->holds);
    // stated conjugation for (pi/3, even n) comes out as D A D^-1 = C^-1
    auto stated = find("(pi/3, 2*sqrt3/2)", "D A D^-1 = C");
    REQUIRE(stated);
    CHECK_FALSE(stated->holds);
    CHECK(stated->deviation == doctest::Approx(2.0).epsilon(1e-9));
    auto fixed = find("(pi/3, 2*sqrt3/2)", "D A^-1 D^-1 = C");
    REQUIRE(fixed);
    CHECK(fixed->holds);
    CHECK_FALSE(fixed->as_stated);
    for (auto& e : rep.entries)
        if (!(e.group.rfind("(pi/3,", 0) == 0 && e.label == "D A D^-1 = C")) CHECK_MESSAGE(e.holds, e.group, e.label);
}

TEST_CASE("sigma lambda identities") {
    auto rep = sigma_lambda_identity_suite();
    int failing = 0;
    for (auto& e : rep.entries) {
        bool stated_slip = e.group.rfind("sigma=e^(-i pi/6)", 0) == 0 && e.label == "C = D A D^-1";
        if (stated_slip) {
            CHECK_FALSE(e.holds);
            ++failing;
        } else {
            CHECK_MESSAGE(e.holds, e.group, e.label);
        }
    }
    CHECK(failing == 3);
}

TEST_CASE("family matching") {
    auto m = match_gtk_family({1, 2, 0.5});
    CHECK(m.listed);
    CHECK(m.exact);
    CHECK(m.identification == "PSL2(O1)");
    CHECK(match_gtk_family({1, 2, 0.7071067811865476}).identification == "PSL2(O2)");
    CHECK(match_gtk_family({1, 4, 1.7071067811865476}).identification == "listed family, not arithmetic");
    auto f = match_gtk_family({1, 6, 3 * std::sqrt(3.0) / 2});
    CHECK(f.n == 3);
    CHECK(f.identification == "figure-eight knot group");
    auto p = match_gtk_family({7, 6, std::sqrt(3.0) / 2});
    CHECK(p.listed);
    CHECK(p.exact);
    auto r = match_gtk_family({3, 4, -0.5});
    CHECK(r.listed);
    CHECK_FALSE(r.exact);
    CHECK_FALSE(match_gtk_family({1, 5, 0.5}).listed);
}

TEST_CASE("arithcomp table") {
    const auto& t = arithcomp_table();
    REQUIRE(t.size() == 16);
    for (const auto& e : t) {
        auto g = e.generators();
        double j = jorgensen_value(g[0], g[1]);
        CHECK(j == doctest::Approx(std::norm(e.c)).epsilon(1e-9));
        CHECK(j == doctest::Approx(e.expected_J).epsilon(1e-9));
        if (e.b_order) CHECK(classify(g[1]).rotation_order == e.b_order);
        else CHECK(classify(g[1]).kind == MobiusKind::parabolic);
    }
}

TEST_CASE("knot table") {
    const auto& t = knot_table();
    REQUIRE(t.size() == 4);
    CHECK(t[0].J == 1.32471796);
    CHECK(t[0].alpha == 4.219276205);
    CHECK(t[1].z == Cx(0.104876618, -1.552491820));
    CHECK(t[2].min_poly == IntPoly{1, 4, -4, 1});
    CHECK(kGeodesicTraceBound == doctest::Approx(2 * std::cosh(1.5)).epsilon(1e-9));
    CHECK(kGeodesicTraceBoundSq - 4 == doctest::Approx(kGeodesicDefectBound).epsilon(1e-12));
}

TEST_CASE("catalog entries") {
    for (const auto& e : catalog_entries()) {
        if (!e.expected_J) continue;
        auto& g = e.generators;
        CHECK_MESSAGE(std::abs(jorgensen_value(g[0], g[1]) - *e.expected_J) <= 1e-6, e.label);
    }
    for (const auto& e : arithmetic_catalog()) {
        auto d = recognize_invariant_field(invariant_trace_field_generators(e.generators[0], e.generators[1]));
        CHECK_MESSAGE(d == e.expected_field_d, e.label);
    }
    CHECK(jorgensen_catalog().size() > 20);
}

TEST_CASE("J = 1 dichotomy") {
    for (const auto& e : jorgensen_catalog()) {
        auto r = jorgensen_dichotomy(e.generators[0], e.generators[1]);
        CHECK_MESSAGE(r.holds, e.label);
    }
    for (int n : kEllipticOrders) {
        auto g = elliptic_type_pair(n, elliptic_tr2B_default(n));
        CHECK(jorgensen_value(g[0], g[1]) == doctest::Approx(1.0).epsilon(1e-12));
        auto r = jorgensen_dichotomy(g[0], g[1]);
        CHECK(r.x_elliptic);
        CHECK(std::abs(r.tr_xyxy - 1.0) < 1e-9);
    }
    // J > 1 pair is not covered
    CHECK_FALSE(jorgensen_dichotomy(A, Mat2(1, 0, Cx(1, 1), 1)).holds);
}
