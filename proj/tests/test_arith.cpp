#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "jnum/arith.hpp"
#include "jnum/catalog.hpp"
#include "jnum/errors.hpp"

using namespace jnum;
using namespace testing;

TEST_CASE("fields") {
    QuadImagField f1(1), f3(3), f2(2);
    CHECK(f1.units().size() == 4);
    CHECK(f3.units().size() == 6);
    CHECK(f2.units().size() == 2);
    CHECK(f3.half_integral());
    CHECK_THROWS_AS(QuadImagField(4), UsageError);
    CHECK(squarefree_part(12) == 3);
    CHECK(is_squarefree(15));
    CHECK_FALSE(is_squarefree(18));
}

TEST_CASE("trace field generators") {
    auto g = trace_field_generators(A, fig8B);
    REQUIRE(g.size() == 3);
    CHECK(std::abs(g[2] - (2.0 + w3)) < 1e-12);
    CHECK(std::abs(g[0] - 2.0) < 1e-12);
    auto s = trace_field_generators(A, S);
    CHECK(std::abs(s[1]) < 1e-12);
    CHECK(std::abs(s[2] - 1.0) < 1e-12);
    auto i = trace_field_generators(Mat2::identity(), Mat2::identity());
    for (auto x : i) CHECK(std::abs(x - 2.0) < 1e-12);
}

TEST_CASE("invariant trace field") {
    auto g = invariant_trace_field_generators(A, fig8B);
    CHECK(recognize_invariant_field(g) == 3);
    auto h = gtk_generators({1, 2, 0.5});
    CHECK(recognize_invariant_field(invariant_trace_field_generators(h[0], h[1])) == 1);
    auto s = invariant_trace_field_generators(A, S);
    REQUIRE(s.size() == 2);
    CHECK(std::abs(s[0] - 4.0) < 1e-12);
    CHECK(std::abs(s[1] - commutator(A, S).trace()) < 1e-12);
    // tr x = 0 swaps roles
    auto sw = invariant_trace_field_generators(S, A);
    CHECK(std::abs(sw[0] - 4.0) < 1e-12);
    CHECK_THROWS_AS(invariant_trace_field_generators(S, S), UnsupportedBranchError);
}

TEST_CASE("quadratic imaginary recognition") {
    CHECK(recognize_quad_imaginary(w3) == 3);
    CHECK(recognize_quad_imaginary(Cx(1, 1)) == 1);
    CHECK(recognize_quad_imaginary(Cx(0, std::sqrt(2.0))) == 2);
    CHECK(recognize_quad_imaginary(Cx(1.5, std::sqrt(15.0) / 2)) == 15);
    CHECK_FALSE(recognize_quad_imaginary(1.5));
    CHECK_FALSE(recognize_quad_imaginary(expi(1.0)));
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> ib(-20, 20), ic(1, 40);
    for (int i = 0; i < 300; ++i) {
        double b = ib(rng), c = ic(rng) + b * b / 4;
        Cx x(-b / 2, std::sqrt(c - b * b / 4));
        CHECK(recognize_quad_imaginary(x) == recognize_quad_imaginary(std::conj(x)));
    }
}

TEST_CASE("algebraic units") {
    CHECK(is_algebraic_unit(IntPoly{1, 2, 1, 1}));
    CHECK_FALSE(is_algebraic_unit(IntPoly{2, 1}));
    CHECK_FALSE(is_algebraic_unit(IntPoly{0, 1}));
    CHECK(is_algebraic_unit(IntPoly{-1, 0, 0, -1}));
}

TEST_CASE("unit multiples") {
    QuadImagField f1(1), f3(3);
    Cx w(0.3, 1.7);
    CHECK(unit_multiple_check(Cx(0, 1) * w, w, f1));
    CHECK_FALSE(unit_multiple_check(2.0 * w, w, f1));
    Mat2 BA = fig8B * A;
    CHECK(unit_multiple_check(commutator(A, BA).trace() - 2.0, commutator(A, fig8B).trace() - 2.0, f3));
    CHECK_THROWS_AS(unit_multiple_check(w, 0, f1), DegenerateInputError);
    for (const auto& u : f3.units()) {
        CHECK(unit_multiple_check(u * w, w, f3) == unit_multiple_check(w, u * w, f3));
    }
}

TEST_CASE("delta discriminant") {
    CHECK(std::abs(delta_discriminant(Mat2::identity(), Mat2::identity())) < 1e-12);
    // X elliptic of order 7, Y with tr^2 = 5.4 and the prescribed commutator trace
    auto g = elliptic_type_pair(7, 5.4);
    Cx d = delta_discriminant(g[0], g[1]);
    CHECK(std::abs(d.imag()) < 1e-9);
    CHECK(d.real() < 0);
}

TEST_CASE("delta agrees with the trace relation") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 1000; ++i) {
        Mat2 x = random_sl2(rng, 3), y = random_sl2(rng, 3);
        Cx a = delta_discriminant(x, y), b = delta_via_trace_relation(x, y);
        CHECK(std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(a)));
    }
}

TEST_CASE("hilbert real ramification") {
    CHECK(hilbert_real_ramified({-1}, {2 * std::cos(4 * kPi / 7) - 1}));
    CHECK_FALSE(hilbert_real_ramified({-1, -1}, {-0.5, 0.1}));
    CHECK(hilbert_real_ramified({}, {}));
}

TEST_CASE("elliptic type") {
    CHECK(elliptic_j_value(7) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(elliptic_j_value(30) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(elliptic_j_value(4) == doctest::Approx(3.0).epsilon(1e-12));
    for (int n = 7; n <= 200; ++n) CHECK(std::abs(elliptic_j_value(n) - 1.0) <= 1e-12);
    CHECK(nonidentity_embeddings(7) == std::vector<int>{2, 3});
    CHECK(nonidentity_embeddings(12) == std::vector<int>{5});

    auto bad = elliptic_type_check({7, 5.0, {5.0, 0.8}, std::nullopt});
    CHECK(bad.cond[1].status == CondStatus::fail);
    CHECK(bad.cond[3].status == CondStatus::fail);
    auto good = elliptic_type_check({7, 5.4, {1.2, 0.8}, std::nullopt});
    CHECK(good.cond[0].status == CondStatus::pass);
    CHECK(good.cond[1].status == CondStatus::pass);
    CHECK(good.cond[3].status == CondStatus::pass);
    CHECK(elliptic_type_check({6, 10.0, {}, std::nullopt}).cond[0].status == CondStatus::fail);
    auto open = elliptic_type_check({7, 5.4, {}, std::nullopt});
    CHECK(open.cond[3].status == CondStatus::unchecked);
    CHECK_THROWS_AS(elliptic_type_check({7, 5.4, {1.0}, std::nullopt}), UsageError);
    CHECK_THROWS_AS(elliptic_type_check({2, 5.4, {}, std::nullopt}), UsageError);
    CHECK_THROWS_AS(elliptic_j_value(2), UsageError);
}

TEST_CASE("nielsen moves preserve the commutator modulus") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 200; ++i) {
        Mat2 x = random_sl2(rng, 2), y = random_sl2(rng, 2);
        double base = std::abs(commutator(x, y).trace() - 2.0);
        CHECK(nielsen_modulus_deviation(x, y) <= 1e-9 * std::max(1.0, base) * 1e3);
    }
}
