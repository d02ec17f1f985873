#include <doctest.h>

#include "cwl/errors.hpp"
#include "cwl/link_data.hpp"
#include "cwl/surgery.hpp"

using namespace cwl;

TEST_SUITE("link_data") {

TEST_CASE("matrix-route JSON") {
    const std::string text = R"({
        "linking_matrix": [[1, 2], [2, 0]],
        "conway": {"1": [1], "2": [1, 0, "3"], "1,2": [0, 2, 0, "-1/2"]}
    })";
    LinkInvariantData data = LinkInvariantData::from_json(text);
    CHECK(data.num_components() == 2);
    CHECK(data.l(0, 1) == 2);
    CHECK(data.conway_coeff(Subset{2}, 2) == 3);
    CHECK(data.conway_coeff(Subset{3}, 3) == Rational(-1, 2));
    CHECK(data.conway_coeff(Subset{3}, 5) == 0);
    CHECK(data.complete());

    // round trip through to_json
    LinkInvariantData again = LinkInvariantData::from_json(data.to_json());
    CHECK(again.to_json() == data.to_json());
    CHECK(lambda_lescop(again).lambda == lambda_lescop(data).lambda);
}

TEST_CASE("pd-route JSON") {
    const std::string text = R"({
        "pd": [[4, 2, 3, 1], [2, 4, 1, 3]],
        "components": 2,
        "framings": [1, 1]
    })";
    LinkInvariantData data = LinkInvariantData::from_json(text);
    CHECK(data.l(0, 1) == 1);
    CHECK(data.conway_coeff(Subset{3}, 1) == 1);
    // same table through the explicit matrix route
    LinkInvariantData direct = LinkInvariantData::from_json(R"({
        "linking_matrix": [[1, 1], [1, 1]],
        "conway": {"1": [1], "2": [1], "1,2": [0, 1]}
    })");
    CHECK(lambda_lescop(direct).lambda == lambda_lescop(data).lambda);
}

TEST_CASE("schema errors") {
    CHECK_THROWS_AS(LinkInvariantData::from_json("not json"), ParseError);
    CHECK_THROWS_AS(LinkInvariantData::from_json(R"({"linking_matrix": [[0, 1]]})"), ParseError);
    CHECK_THROWS_AS(LinkInvariantData::from_json(R"({"conway": {}})"), ParseError);
    CHECK_THROWS_AS(
        LinkInvariantData::from_json(
            R"({"linking_matrix": [[0]], "conway": {"2": [1]}})"),
        std::exception);  // subset key out of range
    CHECK_THROWS_AS(
        LinkInvariantData::from_json(
            R"({"pd": [[4, 2, 3, 1], [2, 4, 1, 3]], "components": 3, "framings": [0, 0]})"),
        ParseError);
    // parity violation: a knot with a nonzero z^1 coefficient
    CHECK_THROWS_AS(
        LinkInvariantData::from_json(
            R"({"linking_matrix": [[0]], "conway": {"1": [1, 1]}})"),
        ArgumentError);
}

TEST_CASE("subset keys") {
    CHECK(subset_to_string(0b101) == "1,3");
    CHECK(subset_from_string("1,3", 3) == 0b101);
    CHECK(subset_from_string("3", 3) == 0b100);
    CHECK_THROWS_AS(subset_from_string("0", 3), ParseError);
    CHECK_THROWS_AS(subset_from_string("4", 3), ParseError);
    CHECK_THROWS_AS(subset_from_string("1,1", 3), ParseError);
    CHECK_THROWS_AS(subset_from_string("", 3), ParseError);
}

TEST_CASE("rational text form") {
    CHECK(to_string(Rational(-3, 8)) == "-3/8");
    CHECK(to_string(Rational(4)) == "4");
    CHECK(parse_rational("-3/8") == Rational(-3, 8));
    CHECK(parse_rational("17") == 17);
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

}  // TEST_SUITE
