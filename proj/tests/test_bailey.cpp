#include <doctest.h>

#include <gordon/bailey.hpp>

#include <vector>

using namespace gordon;
using namespace gordon::bailey;

namespace
{

const Rational order = 14;

Series q_pow(Rational e, long c = 1) { return Series::monomial(Integer(c), e, order); }

std::vector<Transform> tags(const std::vector<ChainStage> &stages)
{
    std::vector<Transform> out;
    for (const auto &s : stages) {
        if (s.transform) {
            out.push_back(*s.transform);
        }
    }
    return out;
}

} // namespace

TEST_CASE("unit pair")
{
    const auto u = unit_pair(6, order);
    CHECK(u.n_max() == 6);
    CHECK(u.alpha[0] == Series::one(order));
    CHECK(u.alpha[1] == -Series::one(order) - q_pow(1));
    CHECK(u.alpha[2] == q_pow(1) + q_pow(3));
    CHECK(u.beta[0] == Series::one(order));
    CHECK(u.beta[3].is_zero());
    CHECK(check_pair(u));
}

TEST_CASE("a corrupted pair is caught")
{
    auto u = unit_pair(5, order);
    u.alpha[1] += q_pow(1);
    const auto c = check_pair_detail(u);
    CHECK_FALSE(c.ok);
    REQUIRE(c.first_bad_n.has_value());
    CHECK(*c.first_bad_n == 1);
    REQUIRE(c.discrepancy.has_value());
    CHECK(c.discrepancy->exponent == 1);
}

TEST_CASE("S1 and S2 on the unit pair")
{
    const auto u = unit_pair(5, order);
    const auto s1 = apply_S1(u);
    CHECK(check_pair(s1));
    const auto s2 = apply_S2(u);
    CHECK(check_pair(s2));
    for (int n = 0; n <= 5; ++n) {
        CHECK(s1.beta[n] == invert_poch({1, 1, 1}, n, order));
        CHECK(s2.beta[n] == invert_poch({1, 1, 1}, n, order) * invert_poch({-1, Rational(1, 2), 1}, n, order));
    }
    CHECK(s1.alpha[1] == -q_pow(1) - q_pow(2));
    CHECK(s2.alpha[1] == -q_pow(Rational(1, 2)) - q_pow(Rational(3, 2)));
}

TEST_CASE("D1 on the unit pair")
{
    const auto d = apply_D1(unit_pair(5, order));
    CHECK(check_pair(d));
    for (int n = 0; n <= 5; ++n) {
        CHECK(d.beta[n] == invert_poch({1, 2, 2}, n, order).times_monomial(Integer(1), n));
    }
    CHECK(d.alpha[2] == q_pow(2) + q_pow(6));
    CHECK(has_P41_shape(d, 1) == false);
    CHECK_THROWS_AS(apply_P41(d, 1), precondition_error);
    CHECK_THROWS_AS(apply_P41(d, 2), precondition_error);
}

TEST_CASE("P41 after two S2 steps")
{
    const auto d = apply_D1(unit_pair(5, order));
    const auto s = apply_S2(apply_S2(d));
    CHECK(has_P41_shape(s, 2));
    for (int n = 0; n <= 5; ++n) {
        CHECK(s.alpha[n] == two_term_alpha(2, 1, n, order));
    }
    const auto p = apply_P41(s, 2);
    CHECK(check_pair(p));
    for (int n = 0; n <= 5; ++n) {
        CHECK(p.alpha[n] == two_term_alpha(2, 2, n, order));
        CHECK(p.beta[n] == s.beta[n].times_monomial(Integer(1), n));
    }
}

TEST_CASE("transform preconditions")
{
    const auto d = apply_D1(unit_pair(3, order));
    BaileyPair bad = unit_pair(3, order);
    bad.beta.pop_back();
    CHECK_THROWS_AS(apply_S1(bad), precondition_error);
    CHECK_THROWS_AS(apply_P41(apply_S2(apply_S2(d)), 0), precondition_error);
}

TEST_CASE("chain shapes")
{
    using T = Transform;
    CHECK(tags(chain_stages({2, 1}, 3, 8)) == std::vector<T>{T::D1, T::S2});
    CHECK(tags(chain_stages({4, 1}, 3, 8)) == std::vector<T>{T::D1, T::S2, T::S2, T::P41, T::S2});
    CHECK(tags(chain_stages({5, 2}, 3, 8)) == std::vector<T>{T::D1, T::S2, T::S2, T::P41, T::S2, T::S2});
    CHECK(chain_stages({4, 1}, 3, 8)[4].A == 2);
    for (const auto &stage : chain_stages({5, 2}, 4, 10)) {
        CHECK(stage.check.ok);
    }
    CHECK_THROWS_AS(chain_stages({3, 1}, 3, 8), precondition_error);
    CHECK(to_string(T::P41) == "P41");
}

TEST_CASE("closed-form alpha")
{
    for (const GordonParams gp : {GordonParams{2, 1}, GordonParams{4, 1}, GordonParams{5, 2}, GordonParams{6, 3}}) {
        const auto bp = build_chain(gp, 5, order);
        for (int n = 0; n <= 5; ++n) {
            CHECK(bp.alpha[n] == alpha_closed_form(gp, n, order));
        }
    }
}

TEST_CASE("displayed beta")
{
    for (const GordonParams gp : {GordonParams{2, 1}, GordonParams{3, 2}, GordonParams{5, 2}}) {
        CHECK(matching_beta_forms(gp, 4, order) == std::vector<BetaForm>{BetaForm::single});
    }
    const auto bp = build_chain({3, 2}, 3, order);
    CHECK(displayed_beta({3, 2}, 3, order, BetaForm::single) == bp.beta[3]);
    CHECK_FALSE(displayed_beta({3, 2}, 3, order, BetaForm::doubled) == bp.beta[3]);
    CHECK(to_string(BetaForm::doubled) == "doubled");
}

TEST_CASE("limit identity")
{
    CHECK(limit_depth(20) >= 20);
    for (const GordonParams gp : {GordonParams{2, 1}, GordonParams{3, 2}, GordonParams{4, 3}}) {
        const auto li = limit_identity(gp, 16);
        CHECK(li.lhs == li.rhs);
        CHECK(li.lhs == limit_lhs_direct(gp, 16));
        CHECK(li.rhs == limit_rhs_direct(gp, 16));
        CHECK(li.lhs.coeff(0) == 1);
    }
}
