#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "addcomb/report.hpp"

using namespace addcomb;

TEST_CASE("json serialization preserves insertion order") {
    Report r = Report::object();
    r.set("size", Report::integer(2));
    r.set("verified", Report::boolean(true));
    r.set("density", Report::rational(Rational(1, 5)));
    CHECK(r.to_json() == R"({"size":2,"verified":true,"density":"1/5"})");
}

TEST_CASE("rationals normalize before printing") {
    CHECK(Report::rational(Rational(2, 10)).to_json() == "\"1/5\"");
    CHECK(Report::rational(Rational(3, 1)).to_json() == "\"3/1\"");
    CHECK(Report::rational(Rational(-2, 4)).to_json() == "\"-1/2\"");
}

TEST_CASE("reals use 12 significant digits") {
    CHECK(Report::real(0.5).to_json() == "0.5");
    CHECK(Report::real(1.0 / 3.0).to_json() == "0.333333333333");
    CHECK(Report::real(1234567.0).to_json() == "1234567");
}

TEST_CASE("arrays and nesting") {
    Report steps = Report::array();
    Report s0 = Report::object();
    s0.set("codim", Report::integer(1));
    steps.push(std::move(s0));
    Report r = Report::object();
    r.set("steps", std::move(steps));
    r.set("termination", Report::str("DENSITY_CAP"));
    CHECK(r.to_json() == R"({"steps":[{"codim":1}],"termination":"DENSITY_CAP"})");

    Report empty = Report::object();
    empty.set("steps", Report::array());
    empty.set("termination", Report::str("DENSITY_CAP"));
    CHECK(empty.to_json() == R"({"steps":[],"termination":"DENSITY_CAP"})");
}

TEST_CASE("string escaping") {
    CHECK(Report::str("a\"b\\c\nd").to_json() == R"("a\"b\\c\nd")");
}

TEST_CASE("csv emits a header row matching the json keys") {
    Report r = Report::object();
    r.set("size", Report::integer(4));
    r.set("density", Report::rational(Rational(4, 25)));
    r.set("verified", Report::boolean(true));
    CHECK(r.to_csv() == "size,density,verified\n4,4/25,true\n");
}

TEST_CASE("csv quotes nested values") {
    Report inner = Report::array();
    inner.push(Report::integer(1));
    inner.push(Report::integer(2));
    Report r = Report::object();
    r.set("name", Report::str("trace"));
    r.set("items", std::move(inner));
    CHECK(r.to_csv() == "name,items\ntrace,\"[1,2]\"\n");
}

TEST_CASE("misuse throws") {
    CHECK_THROWS(Report::array().set("k", Report::integer(1)));
    CHECK_THROWS(Report::object().push(Report::integer(1)));
    CHECK_THROWS(Report::integer(3).to_csv());
}
