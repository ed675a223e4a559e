#include <doctest.h>

#include <limits>

#include "jnum/errors.hpp"
#include "jnum/poly.hpp"
#include "jnum/roots.hpp"

using namespace jnum;

TEST_CASE("arithmetic") {
    IntPoly p{1, 1}, q{-1, 1};
    CHECK(p * q == IntPoly{-1, 0, 1});
    CHECK(p + q == IntPoly{0, 2});
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == -1);
    CHECK(IntPoly{0, 0, 3, 0, 0}.degree() == 2);
    CHECK(IntPoly{0, 0, 3}.valuation() == 2);
    CHECK(IntPoly{0, 0, 3}.shift_down(2) == IntPoly{3});
    CHECK(IntPoly::monomial(5, 3) == IntPoly{0, 0, 0, 5});
    CHECK(IntPoly{1, 2, 1, 1}.eval(Cx(1, 0)) == Cx(5, 0));
}

TEST_CASE("exact division") {
    IntPoly a{1, -1, 3, -2, 1}, b{1, 4, -4, 1};
    auto q = (a * b).divide_exact(b);
    REQUIRE(q);
    CHECK(*q == a);
    CHECK_FALSE(IntPoly{1, 0, 1}.divide_exact(IntPoly{1, 1}));
    CHECK_FALSE(IntPoly{1, 1}.divide_exact(IntPoly{0, 2}));
}

TEST_CASE("overflow is detected") {
    auto big = std::numeric_limits<IntPoly::Coeff>::max() / 2 + 1;
    CHECK_THROWS_AS(IntPoly{big} + IntPoly{big}, NumericRangeError);
    CHECK_THROWS_AS(IntPoly{big} * IntPoly{3}, NumericRangeError);
}

TEST_CASE("text round trip") {
    for (IntPoly p : {IntPoly{1, 2, 1, 1}, IntPoly{0, 0, -2, -2, -1}, IntPoly{7}, IntPoly{}}) {
        CHECK(IntPoly::parse(p.text()) == p);
    }
    CHECK(IntPoly{1, 2, 1, 1}.text() == "1,2,1,1");
    CHECK(IntPoly::parse(" 1, -2 ,3") == IntPoly{1, -2, 3});
    CHECK_THROWS_AS(IntPoly::parse("1,x"), UsageError);
    CHECK(IntPoly{1, 2, 1, 1}.pretty() == "z^3 + z^2 + 2z + 1");
}

TEST_CASE("roots of small polynomials") {
    auto r = solve_roots(IntPoly{1, -1, 1});
    REQUIRE(r.roots.size() == 2);
    CHECK(std::abs(r.roots[0].z - Cx(0.5, std::sqrt(3.0) / 2)) < 1e-12);
    CHECK(std::abs(r.roots[1].z - Cx(0.5, -std::sqrt(3.0) / 2)) < 1e-12);

    auto c = solve_roots(IntPoly{1, 2, 1, 1});
    REQUIRE(c.roots.size() == 3);
    CHECK(c.roots[0].z.imag() == 0.0);
    CHECK(c.roots[0].z.real() == doctest::Approx(-0.569840).epsilon(1e-6));
    CHECK(std::abs(c.roots[1].z - Cx(-0.21507985, 1.307141279)) < 1e-8);
    CHECK(c.roots[2].z == std::conj(c.roots[1].z));
    CHECK(c.max_residual() < 1e-12);

    auto l = solve_roots(IntPoly{2, 1});
    REQUIRE(l.roots.size() == 1);
    CHECK(l.roots[0].z == Cx(-2, 0));

    auto z = solve_roots(IntPoly{0, 0, 2, 2, 1});
    REQUIRE(z.roots.size() == 4);
    int zeros = 0;
    for (auto& x : z.roots) zeros += x.z == Cx(0, 0);
    CHECK(zeros == 2);

    CHECK_THROWS_AS(solve_roots(IntPoly{5}), UsageError);
}

TEST_CASE("roots of a high degree product") {
    IntPoly p{1};
    for (int k = 1; k <= 6; ++k) p = p * IntPoly{k, 0, 1};
    auto r = solve_roots(p);
    CHECK(r.roots.size() == 12);
    for (auto& x : r.roots) CHECK(std::abs(p.eval(x.z)) < 1e-6);
}

TEST_CASE("minimal polynomial and factoring") {
    IntPoly f{1, 4, -4, 1}, g{1, 0, 2, -3, 1};
    IntPoly d = f * g;
    CHECK(d == IntPoly{1, 4, -2, 6, -19, 18, -7, 1});
    for (auto& r : solve_roots(f).roots) CHECK(minimal_polynomial(d, r.z) == f);
    for (auto& r : solve_roots(g).roots) CHECK(minimal_polynomial(d, r.z) == g);

    auto fac = factor_over_z(IntPoly{-2, 0, 2});
    CHECK(fac.unit == 2);
    CHECK(fac.factors.size() == 2);
    IntPoly prod{fac.unit};
    for (auto& x : fac.factors) prod = prod * x;
    CHECK(prod == IntPoly{-2, 0, 2});
}
