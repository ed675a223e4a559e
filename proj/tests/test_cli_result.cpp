#include <doctest.h>

#include "jnum/cli_result.hpp"
#include "jnum/errors.hpp"

using namespace jnum;
using json = nlohmann::ordered_json;

TEST_CASE("cli result round trip") {
    CliResult r;
    r.command = "knot";
    r.inputs = {{"p", 7}, {"q", 3}};
    r.results.push_back({{"J", 1.3247179572447458}, {"z", cx_json(Cx(-0.21507985, 1.307141279))}});
    r.tolerances.eps_fix = 1e-5;
    r.tolerances.order_cap = 64;
    r.status = Status::violation;
    r.message = "x";
    json j = r;
    auto back = json::parse(j.dump()).get<CliResult>();
    CHECK(json(back) == j);
    CHECK(back.tolerances.eps_fix == 1e-5);
    CHECK(back.tolerances.order_cap == 64);
    CHECK(back.status == Status::violation);
    CHECK(back.results[0]["J"].get<double>() == 1.3247179572447458);
    CHECK(cx_from_json(back.results[0]["z"]) == Cx(-0.21507985, 1.307141279));
}

TEST_CASE("status and tolerances") {
    CHECK(exit_code(Status::ok) == 0);
    CHECK(exit_code(Status::violation) == 1);
    CHECK(exit_code(Status::error) == 1);
    CHECK_THROWS_AS(status_from_string("fine"), UsageError);
    CHECK_THROWS_AS(tolerances_from_json(json{{"eps_cx", 2.0}}), UsageError);
    CHECK_THROWS_AS(tolerances_from_json(json{{"eps_q", 1e-3}}), UsageError);
    CHECK(tolerances_from_json(json{{"eps_j", 1e-7}}).eps_j == 1e-7);
}
