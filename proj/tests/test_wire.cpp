#include <doctest.h>

#include <gordon/wire.hpp>

using namespace gordon;
using namespace gordon::wire;

TEST_CASE("rationals")
{
    CHECK(rational_to_json(Rational(3, 2)) == "3/2");
    CHECK(rational_to_json(Rational(-4)) == "-4");
    CHECK(rational_from_json("6/4") == Rational(3, 2));
    CHECK(rational_from_json(7) == Rational(7));
    CHECK_THROWS_AS(rational_from_json("1/0"), precondition_error);
    CHECK_THROWS_AS(rational_from_json("x"), precondition_error);
    CHECK_THROWS_AS(rational_from_json(json::array()), precondition_error);
}

TEST_CASE("series")
{
    Series s = poch_infinite({-1, Rational(1, 2), 1}, Rational(21, 2));
    s -= Series::monomial(Integer("123456789012345678901234567890"), 5, 20);
    const json j = to_json(s);
    CHECK(j["denom"] == 2);
    CHECK(j["order_num"] == 21);
    CHECK(j["order_den"] == 2);
    CHECK(j["coeffs"][0] == json::array({0, "1"}));
    const Series back = series_from_json(j);
    CHECK(back == s);
    CHECK(back.order() == s.order());
    CHECK(back.denom() == s.denom());
    CHECK(series_from_json(json::parse(j.dump())) == s);

    CHECK_THROWS_AS(series_from_json(json::object()), precondition_error);
    CHECK_THROWS_AS(series_from_json({{"denom", 1}, {"order_num", 3}, {"order_den", 1}, {"coeffs", {{5, "1"}}}}),
                    precondition_error);
    CHECK_THROWS_AS(series_from_json({{"denom", 1}, {"order_num", 3}, {"order_den", 1}, {"coeffs", {{0, "1x"}}}}),
                    precondition_error);
}

TEST_CASE("paths and construction data")
{
    const auto p = paths::LatticePath::parse("h=2:SNSSENS");
    const json j = to_json(p);
    CHECK(j["steps"] == "SNSSENS");
    CHECK(j["major_index"] == 2 + 6);
    CHECK(j["peaks"].size() == 2);
    CHECK(path_from_json(j) == p);
    CHECK_THROWS_AS(path_from_json({{"start_height", 0}, {"steps", "S"}}), precondition_error);

    paths::ConstructionData cd = paths::minimal_data({5, 2}, {3, 1, 1, 2});
    cd.east_partition = {1, 0};
    cd.uplift_ranks = {2};
    cd.right_moves = {{2, 1, 0}, {0}, {1}};
    CHECK(construction_from_json(to_json(cd)) == cd);
    json bad = to_json(cd);
    bad["east_partition"] = {0, 1};
    CHECK_THROWS_AS(construction_from_json(bad), precondition_error);
}

TEST_CASE("bailey pairs")
{
    const auto bp = bailey::apply_S2(bailey::unit_pair(4, 10));
    const auto back = pair_from_json(to_json(bp));
    CHECK(back.a_exponent == bp.a_exponent);
    CHECK(back.base == bp.base);
    CHECK(back.order == bp.order);
    REQUIRE(back.alpha.size() == bp.alpha.size());
    for (std::size_t n = 0; n < bp.alpha.size(); ++n) {
        CHECK(back.alpha[n] == bp.alpha[n]);
        CHECK(back.beta[n] == bp.beta[n]);
    }
    CHECK(bailey::check_pair(back));
}

TEST_CASE("identity specs and reports")
{
    const identities::IdentitySpec spec{identities::Theorem::Wbar_odd_even, {3, 2}, 25};
    const auto s2 = spec_from_json(to_json(spec));
    CHECK(s2.theorem == spec.theorem);
    CHECK(s2.gp == spec.gp);
    CHECK(s2.order == spec.order);
    CHECK_THROWS_AS(spec_from_json({{"theorem", "Main"}, {"k", 3}}), precondition_error);

    const auto r = identities::verify(spec);
    const auto r2 = report_from_json(to_json(r));
    CHECK(r2.equal == r.equal);
    CHECK(r2.lhs == r.lhs);
    CHECK(r2.rhs == r.rhs);
    CHECK_FALSE(r2.first_discrepancy.has_value());

    const Discrepancy d{Rational(7, 2), Integer(3), Integer(-5)};
    const auto d2 = discrepancy_from_json(to_json(d));
    CHECK(d2.exponent == d.exponent);
    CHECK(d2.lhs == d.lhs);
    CHECK(d2.rhs == d.rhs);
}

TEST_CASE("malformed json")
{
    CHECK_FALSE(json::accept("{\"denom\": "));
    CHECK_THROWS_AS(spec_from_json(json::array()), precondition_error);
    CHECK_THROWS_AS(path_from_json({{"start_height", "two"}, {"steps", "NS"}}), precondition_error);
}
