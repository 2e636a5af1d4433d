// One line per acceptance criterion; exits nonzero if any line fails.

#include <gordon/bailey.hpp>
#include <gordon/identities.hpp>
#include <gordon/lattice_path.hpp>
#include <gordon/partitions.hpp>
#include <gordon/qseries.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace gordon;
namespace id = gordon::identities;
namespace pa = gordon::partitions;
namespace lp = gordon::paths;
namespace bl = gordon::bailey;

namespace
{

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void fail(const std::string &why)
    {
        if (pass) {
            detail.str("");
        }
        pass = false;
        detail << why << "; ";
    }
};

std::string pair_str(const GordonParams &gp)
{
    return "(" + std::to_string(gp.k) + "," + std::to_string(gp.a) + ")";
}

std::string diff_str(const Series &x, const Series &y)
{
    const auto d = first_difference(x, y);
    if (!d) {
        return "equal";
    }
    return "first difference at q^" + to_string(d->exponent) + ": " + d->lhs.get_str() + " vs " + d->rhs.get_str();
}

void expect_equal(Outcome &o, const Series &x, const Series &y, const std::string &what)
{
    if (!(x == y)) {
        o.fail(what + " " + diff_str(x, y));
    }
}

// ---------------------------------------------------------------------------

Outcome main_identity()
{
    Outcome o;
    int pairs = 0;
    for (int k = 2; k <= 6; ++k) {
        for (int a = 1; a <= k; ++a) {
            const GordonParams gp{k, a};
            if (gp.same_parity()) {
                continue;
            }
            const auto r = id::verify({id::Theorem::Main, gp, 60});
            if (!r.equal) {
                o.fail("Main " + pair_str(gp) + " " + diff_str(r.lhs, r.rhs));
            }
            ++pairs;
        }
    }
    if (o.pass) {
        o.detail << pairs << " opposite-parity pairs with k<=6, multisum = product to q^60";
    }
    return o;
}

Outcome andrews_gordon()
{
    Outcome o;
    for (int k = 2; k <= 5; ++k) {
        for (int a = 1; a <= k; ++a) {
            const GordonParams gp{k, a};
            const auto r = id::verify({id::Theorem::AG, gp, 60});
            if (!r.equal) {
                o.fail("AG " + pair_str(gp) + " " + diff_str(r.lhs, r.rhs));
            }
            const Series sum41 = r.lhs.truncated(41);
            expect_equal(o, sum41, id::count_series(pa::Family::A, gp, 41), "A oracle " + pair_str(gp));
            expect_equal(o, sum41, id::count_series(pa::Family::B, gp, 41), "B oracle " + pair_str(gp));
        }
    }
    if (o.pass) {
        o.detail << "14 pairs to q^60; A and B counts agree with both sides for n<=40";
    }
    return o;
}

Outcome w_family()
{
    Outcome o;
    int same = 0;
    int diff = 0;
    for (int k = 1; k <= 5; ++k) {
        for (int a = 1; a <= k; ++a) {
            const GordonParams gp{k, a};
            const auto r = id::verify({id::w_case(gp), gp, 40});
            if (!r.equal) {
                o.fail(id::to_string(id::w_case(gp)) + " " + pair_str(gp) + " " + diff_str(r.lhs, r.rhs));
            }
            expect_equal(o, r.lhs.truncated(37), id::count_series(pa::Family::W, gp, 37), "W oracle " + pair_str(gp));
            (gp.same_parity() ? same : diff) += 1;
        }
    }
    if (o.pass) {
        o.detail << same << " same-parity and " << diff
                 << " opposite-parity pairs: sum = product to q^40, W counts agree for n<=36";
    }
    return o;
}

Outcome wbar_family()
{
    Outcome o;
    int cells = 0;
    for (int k = 1; k <= 5; ++k) {
        for (int a = 1; a <= k; ++a) {
            const GordonParams gp{k, a};
            const auto t = id::wbar_case(gp);
            if (!t) {
                continue;
            }
            const auto r = id::verify({*t, gp, 40});
            if (!r.equal) {
                o.fail(id::to_string(*t) + " " + pair_str(gp) + " " + diff_str(r.lhs, r.rhs));
            }
            expect_equal(o, r.lhs.truncated(37), id::count_series(pa::Family::Wbar, gp, 37),
                         "Wbar oracle " + pair_str(gp));
            ++cells;
        }
    }
    if (o.pass) {
        o.detail << cells << " pairs (k odd/a even and k even/a odd): sum = product to q^40, counts agree for n<=36";
    }
    return o;
}

Outcome path_count()
{
    Outcome o;
    const std::vector<GordonParams> grid{{2, 1}, {3, 2}, {4, 1}, {4, 3}, {5, 2}};
    int alt_matches = 0;
    for (const auto &gp : grid) {
        const int n_max = gp.k <= 3 ? 24 : 20;
        const Series target = id::eval_multisum_main(gp, n_max + 1);
        expect_equal(o, id::path_series(gp, n_max + 1), target, "paths " + pair_str(gp));
        const auto alt = lp::count_S_table(gp, n_max, lp::EastReading::none_after_last_tall_peak);
        bool same = true;
        for (int n = 0; n <= n_max; ++n) {
            same = same && Integer(static_cast<unsigned long>(alt[static_cast<std::size_t>(n)])) == target.coeff(n);
        }
        alt_matches += same ? 1 : 0;
    }
    if (o.pass) {
        o.detail << "S counts = (-q;q^2) multisum for 5 pairs (n<=24 for k<=3, else n<=20) under East-step reading "
                 << lp::to_string(lp::EastReading::before_each_tall_peak) << "; reading "
                 << lp::to_string(lp::EastReading::none_after_last_tall_peak) << " matches " << alt_matches
                 << " of 5";
    }
    return o;
}

lp::ConstructionData example_data()
{
    lp::ConstructionData cd;
    cd.gp = {5, 2};
    cd.n = {3, 1, 1, 2};
    cd.east_partition = {1, 0};
    cd.uplift_ranks = {2};
    cd.right_moves = {{2, 1, 0}, {0}, {1}};
    return cd;
}

Outcome worked_example()
{
    Outcome o;
    const auto cd = example_data();
    const auto path = lp::forward_construct(cd);
    std::vector<int> weights;
    std::vector<int> rel;
    for (const auto &pk : lp::peaks(path)) {
        weights.push_back(pk.weight);
        rel.push_back(pk.relative_height);
    }
    if (weights != std::vector<int>{1, 5, 8, 11, 17, 25, 38}) {
        o.fail("peak weights differ");
    }
    if (rel != std::vector<int>{1, 1, 2, 1, 3, 5, 4}) {
        o.fail("relative heights differ");
    }
    if (lp::major_index(path) != 105 || cd.weight() != 105) {
        o.fail("major index " + std::to_string(lp::major_index(path)));
    }
    if (!lp::is_S_admissible(path, cd.gp)) {
        o.fail("path not admissible");
    }
    if (!(lp::reverse_deconstruct(path, cd.gp) == cd)) {
        o.fail("reverse construction differs");
    }
    if (o.pass) {
        o.detail << "weights 1,5,8,11,17,25,38; relative heights 1,1,2,1,3,5,4; major index 105; "
                    "n=(3,1,1,2) and all choices recovered; path "
                 << path.compact();
    }
    return o;
}

Outcome round_trip()
{
    Outcome o;
    std::size_t total = 0;
    for (const GordonParams gp : {GordonParams{2, 1}, GordonParams{3, 2}}) {
        lp::for_each_admissible_path(gp, 20, [&](const lp::LatticePath &p) {
            ++total;
            try {
                const auto cd = lp::reverse_deconstruct(p, gp);
                if (!(lp::forward_construct(cd) == p) || cd.weight() != lp::major_index(p)) {
                    o.fail("round trip changed " + p.compact());
                }
            } catch (const std::exception &e) {
                o.fail(p.compact() + ": " + e.what());
            }
        });
    }
    if (o.pass) {
        o.detail << total << " admissible paths with major index <= 20 for (2,1) and (3,2) round-trip";
    }
    return o;
}

Outcome bailey_machinery()
{
    Outcome o;
    const Rational order(40);
    const int n_max = 10;
    if (!bl::check_pair(bl::unit_pair(n_max, order))) {
        o.fail("unit pair");
    }
    const auto first = bl::apply_D1(bl::unit_pair(n_max, order));
    for (int n = 0; n <= n_max; ++n) {
        const Series expect = Series::monomial(Integer(1), Rational(n), order) * invert_poch({1, 2, 2}, n, order);
        expect_equal(o, first.beta[static_cast<std::size_t>(n)], expect, "beta(1)_" + std::to_string(n));
    }
    std::string forms;
    for (const GordonParams gp : {GordonParams{2, 1}, GordonParams{3, 2}, GordonParams{4, 1}, GordonParams{5, 2}}) {
        const auto stages = bl::chain_stages(gp, n_max, order);
        for (std::size_t i = 0; i < stages.size(); ++i) {
            if (!stages[i].check.ok) {
                o.fail("stage " + std::to_string(i) + " of " + pair_str(gp) + " fails at n=" +
                       std::to_string(*stages[i].check.first_bad_n));
            }
        }
        const auto &last = stages.back().pair;
        for (int n = 0; n <= 6; ++n) {
            expect_equal(o, last.alpha[static_cast<std::size_t>(n)], bl::alpha_closed_form(gp, n, order),
                         "alpha closed form " + pair_str(gp));
        }
        const auto m = bl::matching_beta_forms(gp, 6, order);
        forms += pair_str(gp) + ":" + (m.empty() ? std::string("none") : bl::to_string(m.front())) + " ";
    }
    if (o.pass) {
        o.detail << "unit pair, first pair and every chain stage satisfy the defining relation for n<=10 to q^40; "
                 << "beta(1)_n = q^n/(q^2;q^2)_n; alpha(k) closed form for n<=6; displayed beta matches with "
                 << forms << "(-sqrt q;q)_n factor";
    }
    return o;
}

Outcome chain_consistency()
{
    Outcome o;
    for (const GordonParams gp : {GordonParams{2, 1}, GordonParams{3, 2}, GordonParams{4, 1}, GordonParams{5, 2}}) {
        const auto lim = bl::limit_identity(gp, Rational(20));
        const Series lhs = rescale(lim.lhs, 2);
        const Series rhs = rescale(lim.rhs, 2);
        expect_equal(o, lhs, id::eval_multisum_main(gp, 40), "LHS " + pair_str(gp));
        expect_equal(o, rhs, id::eval_product_side({id::Theorem::Main, gp, 40}), "RHS " + pair_str(gp));
    }
    if (o.pass) {
        o.detail << "limit of the chain, rescaled q -> q^2, equals the multisum and the product to q^40 for 4 pairs";
    }
    return o;
}

Series random_series(std::mt19937_64 &rng, Rational order, int denom)
{
    std::uniform_int_distribution<int> coeff(-50, 50);
    std::bernoulli_distribution keep(0.5);
    Series s(denom, order);
    for (auto &c : s.mutable_coeffs()) {
        if (keep(rng)) {
            c = coeff(rng);
        }
    }
    return s;
}

Outcome properties()
{
    Outcome o;
    std::mt19937_64 rng(20240601);
    const Rational order(30);
    std::uniform_int_distribution<int> grid(1, 3);
    for (int t = 0; t < 1000 && o.pass; ++t) {
        const Series x = random_series(rng, order, grid(rng));
        const Series y = random_series(rng, order, grid(rng));
        const Series z = random_series(rng, order, grid(rng));
        if (!(x + y == y + x) || !(x * y == y * x) || !((x + y) + z == x + (y + z)) || !((x * y) * z == x * (y * z)) ||
            !(x * (y + z) == x * y + x * z) || !(x - x == Series::zero(order)) || !(x * Series::one(order) == x)) {
            o.fail("ring axiom failed at triple " + std::to_string(t));
        }
    }
    for (const PochSpec spec : {PochSpec{1, 1, 1}, PochSpec{-1, Rational(1, 2), 1}, PochSpec{1, 2, 2}, PochSpec{-1, 1, 2}}) {
        for (int n = 0; n < 20; ++n) {
            const Series step = Series::one(Rational(60)) -
                                Series::monomial(Integer(spec.sign), spec.exponent + spec.base * n, Rational(60));
            expect_equal(o, poch_finite(spec, n + 1, 60), poch_finite(spec, n, 60) * step, "Pochhammer recurrence");
        }
    }
    for (int k = 1; k <= 6; ++k) {
        for (int a = 1; a <= k; ++a) {
            const int m1 = 2 * k + 1;
            const int m2 = 2 * k + 2;
            expect_equal(o, triple_product(a, m1 - a, m1, 60), theta_sum(a, m1, 60), "triple product mod 2k+1");
            expect_equal(o, triple_product(a, m2 - a, m2, 60), theta_sum(a, m2, 60), "triple product mod 2k+2");
        }
    }
    for (int k = 1; k <= 5; ++k) {
        for (int a = 1; a <= k; ++a) {
            const GordonParams gp{k, a};
            const auto b = pa::count_table(pa::Family::B, gp, 25);
            const auto w = pa::count_table(pa::Family::W, gp, 25);
            const auto wb = pa::count_table(pa::Family::Wbar, gp, 25);
            if (b != pa::count_table_naive(pa::Family::B, gp, 25) || w != pa::count_table_naive(pa::Family::W, gp, 25) ||
                wb != pa::count_table_naive(pa::Family::Wbar, gp, 25)) {
                o.fail("pruned and naive counts differ at " + pair_str(gp));
            }
            for (int n = 0; n <= 25; ++n) {
                const auto i = static_cast<std::size_t>(n);
                bool mono = w[i] <= b[i] && wb[i] <= b[i];
                if (a < k) {
                    mono = mono && b[i] <= pa::count_table(pa::Family::B, {k, a + 1}, 25)[i];
                }
                mono = mono && b[i] <= pa::count_table(pa::Family::B, {k + 1, a}, 25)[i];
                if (!mono) {
                    o.fail("monotonicity at " + pair_str(gp) + " n=" + std::to_string(n));
                    break;
                }
            }
        }
    }
    if (o.pass) {
        o.detail << "1000 random ring-axiom triples (order 30, mixed grids); Pochhammer recurrence n<20; "
                    "triple product = theta sum to q^60; count monotonicity in k, a and family for n<=25, k<=5";
    }
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"main parity identity", main_identity},
        {"Andrews-Gordon", andrews_gordon},
        {"W family", w_family},
        {"Wbar family", wbar_family},
        {"lattice path count", path_count},
        {"worked example", worked_example},
        {"bijection round trip", round_trip},
        {"Bailey machinery", bailey_machinery},
        {"chain to identity", chain_consistency},
        {"property suites", properties},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << " ("
                  << static_cast<int>(secs * 1000) << " ms): " << o.detail.str() << std::endl;
        failures += o.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
