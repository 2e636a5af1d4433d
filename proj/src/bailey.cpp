#include <gordon/bailey.hpp>
#include <gordon/multisum.hpp>

#include <cmath>

namespace gordon::bailey
{

namespace
{

const PochSpec q_poch{1, 1, 1};
const PochSpec q2_poch{1, 2, 2};

void require_base_q(const BaileyPair &bp, const char *what)
{
    if (bp.base != 1) {
        throw precondition_error(std::string(what) + " needs a pair at base q");
    }
    if (bp.alpha.size() != bp.beta.size() || bp.alpha.empty()) {
        throw precondition_error(std::string(what) + " needs matching nonempty alpha/beta tables");
    }
}

std::vector<Series> inverse_table(const PochSpec &spec, int count, Rational order)
{
    std::vector<Series> out;
    out.reserve(static_cast<std::size_t>(count) + 1);
    for (int m = 0; m <= count; ++m) {
        out.push_back(invert_poch(spec, m, order));
    }
    return out;
}

Series sign_monomial(int n, Rational e, Rational order)
{
    return Series::monomial(Integer(n % 2 == 0 ? 1 : -1), e, order);
}

} // namespace

std::string to_string(Transform t)
{
    switch (t) {
    case Transform::S1:
        return "S1";
    case Transform::S2:
        return "S2";
    case Transform::D1:
        return "D1";
    case Transform::P41:
        return "P41";
    }
    return "?";
}

std::string to_string(BetaForm f)
{
    return f == BetaForm::single ? "single" : "doubled";
}

PairCheck check_pair_detail(const BaileyPair &bp)
{
    if (bp.alpha.size() != bp.beta.size()) {
        throw precondition_error("alpha and beta tables differ in length");
    }
    const int n_max = bp.n_max();
    if (n_max < 0) {
        return {};
    }
    const auto inv_q = inverse_table({1, bp.base, bp.base}, n_max, bp.order);
    const auto inv_a = inverse_table({1, bp.a_exponent + bp.base, bp.base}, 2 * n_max, bp.order);
    for (int n = 0; n <= n_max; ++n) {
        Series sum = Series::zero(bp.order);
        for (int r = 0; r <= n; ++r) {
            const auto &al = bp.alpha[static_cast<std::size_t>(r)];
            if (al.is_zero()) {
                continue;
            }
            sum += al * inv_q[static_cast<std::size_t>(n - r)] * inv_a[static_cast<std::size_t>(n + r)];
        }
        if (auto d = first_difference(bp.beta[static_cast<std::size_t>(n)], sum)) {
            return {false, n, d};
        }
    }
    return {};
}

bool check_pair(const BaileyPair &bp)
{
    return check_pair_detail(bp).ok;
}

Series two_term_alpha(Rational Q, Rational L, int n, Rational order)
{
    if (n == 0) {
        return Series::one(order);
    }
    const Rational nn(n);
    const Rational lin = (L < 0 ? -L : L) * nn;
    const Rational low = Q * nn * nn - lin;
    if (low < 0) {
        throw precondition_error("alpha template has a negative exponent");
    }
    return sign_monomial(n, low, order) + sign_monomial(n, low + 2 * lin, order);
}

BaileyPair unit_pair(int n_max, Rational order)
{
    if (n_max < 0) {
        throw precondition_error("n_max must be nonnegative");
    }
    BaileyPair bp;
    bp.order = order;
    for (int n = 0; n <= n_max; ++n) {
        bp.alpha.push_back(two_term_alpha(Rational(1, 2), Rational(1, 2), n, order));
        bp.beta.push_back(n == 0 ? Series::one(order) : Series::zero(order));
    }
    return bp;
}

BaileyPair apply_S1(const BaileyPair &bp)
{
    require_base_q(bp, "S1");
    const Rational e = bp.a_exponent;
    BaileyPair out = bp;
    const auto inv_q = inverse_table(q_poch, bp.n_max(), bp.order);
    for (int n = 0; n <= bp.n_max(); ++n) {
        const auto un = static_cast<std::size_t>(n);
        out.alpha[un] = bp.alpha[un].times_monomial(Integer(1), e * n + Rational(n) * n);
        Series sum = Series::zero(bp.order);
        for (int k = 0; k <= n; ++k) {
            const Rational w = e * k + Rational(k) * k;
            if (w >= bp.order) {
                break;
            }
            sum += bp.beta[static_cast<std::size_t>(k)].times_monomial(Integer(1), w) *
                   inv_q[static_cast<std::size_t>(n - k)];
        }
        out.beta[un] = std::move(sum);
    }
    return out;
}

BaileyPair apply_S2(const BaileyPair &bp)
{
    require_base_q(bp, "S2");
    const Rational e = bp.a_exponent;
    // (-sqrt(aq); q) with sqrt(aq) = q^{(e+1)/2}
    const PochSpec root{-1, (e + 1) / 2, 1};
    BaileyPair out = bp;
    const auto inv_q = inverse_table(q_poch, bp.n_max(), bp.order);
    for (int n = 0; n <= bp.n_max(); ++n) {
        const auto un = static_cast<std::size_t>(n);
        out.alpha[un] = bp.alpha[un].times_monomial(Integer(1), (e * n + Rational(n) * n) / 2);
        Series sum = Series::zero(bp.order);
        for (int k = 0; k <= n; ++k) {
            const Rational w = (e * k + Rational(k) * k) / 2;
            if (w >= bp.order) {
                break;
            }
            const auto &b = bp.beta[static_cast<std::size_t>(k)];
            if (b.is_zero()) {
                continue;
            }
            sum += poch_finite(root, k, bp.order) * b.times_monomial(Integer(1), w) *
                   inv_q[static_cast<std::size_t>(n - k)];
        }
        out.beta[un] = sum * invert_poch(root, n, bp.order);
    }
    return out;
}

BaileyPair apply_D1(const BaileyPair &bp)
{
    require_base_q(bp, "D1");
    const Rational e = bp.a_exponent;
    const PochSpec neg_aq{-1, e + 1, 1};
    BaileyPair out = bp;
    const auto inv_q2 = inverse_table(q2_poch, bp.n_max(), bp.order);
    std::vector<Series> doubled;
    for (const auto &b : bp.beta) {
        doubled.push_back(rescale(b, 2).truncated(bp.order));
    }
    for (int n = 0; n <= bp.n_max(); ++n) {
        const auto un = static_cast<std::size_t>(n);
        out.alpha[un] = rescale(bp.alpha[un], 2).truncated(bp.order);
        Series sum = Series::zero(bp.order);
        for (int r = 0; r <= n; ++r) {
            const auto &b = doubled[static_cast<std::size_t>(r)];
            if (b.is_zero()) {
                continue;
            }
            sum += poch_finite(neg_aq, 2 * r, bp.order) * inv_q2[static_cast<std::size_t>(n - r)] *
                   b.times_monomial(Integer(1), Rational(n - r));
        }
        out.beta[un] = std::move(sum);
    }
    return out;
}

bool has_P41_shape(const BaileyPair &bp, Rational A)
{
    for (int n = 0; n <= bp.n_max(); ++n) {
        const Series t = two_term_alpha(A, A - 1, n, bp.order);
        if (first_difference(bp.alpha[static_cast<std::size_t>(n)], t)) {
            return false;
        }
    }
    return true;
}

BaileyPair apply_P41(const BaileyPair &bp, Rational A)
{
    require_base_q(bp, "P41");
    if (bp.a_exponent != 0) {
        throw precondition_error("P41 needs a = 1");
    }
    if (A < 1) {
        throw precondition_error("P41 needs A >= 1");
    }
    if (!has_P41_shape(bp, A)) {
        throw precondition_error("alpha does not have the P41 shape for A = " + gordon::to_string(A));
    }
    BaileyPair out = bp;
    for (int n = 0; n <= bp.n_max(); ++n) {
        const auto un = static_cast<std::size_t>(n);
        out.alpha[un] = two_term_alpha(A, A, n, bp.order);
        out.beta[un] = bp.beta[un].times_monomial(Integer(1), Rational(n));
    }
    return out;
}

std::vector<ChainStage> chain_stages(const GordonParams &gp, int n_max, Rational order)
{
    gp.validate();
    if (gp.same_parity()) {
        throw precondition_error("the Bailey chain needs k and a of opposite parity");
    }
    std::vector<ChainStage> stages;
    auto push = [&](std::optional<Transform> t, Rational A, BaileyPair p) {
        PairCheck c = check_pair_detail(p);
        stages.push_back({t, A, std::move(p), std::move(c)});
    };
    push(std::nullopt, 0, unit_pair(n_max, order));
    push(Transform::D1, 0, apply_D1(stages.back().pair));
    const int blocks = (gp.k - gp.a - 1) / 2;
    for (int m = 1; m <= blocks; ++m) {
        push(Transform::S2, 0, apply_S2(stages.back().pair));
        push(Transform::S2, 0, apply_S2(stages.back().pair));
        push(Transform::P41, Rational(m + 1), apply_P41(stages.back().pair, Rational(m + 1)));
    }
    for (int i = 0; i < gp.a; ++i) {
        push(Transform::S2, 0, apply_S2(stages.back().pair));
    }
    return stages;
}

BaileyPair build_chain(const GordonParams &gp, int n_max, Rational order)
{
    return chain_stages(gp, n_max, order).back().pair;
}

Series alpha_closed_form(const GordonParams &gp, int n, Rational order)
{
    return two_term_alpha(Rational(gp.k + 1, 2), Rational(gp.k - gp.a + 1, 2), n, order);
}

namespace
{

MultisumShape half_grid_shape(const GordonParams &gp)
{
    const int k = gp.k;
    const int a = gp.a;
    MultisumShape shape;
    shape.length = k - 1;
    shape.square_weight = Rational(1, 2);
    shape.exponent = [k, a](std::span<const int> big) {
        Rational e = 0;
        for (const int v : big) {
            e += Rational(static_cast<std::int64_t>(v) * v, 2);
        }
        for (int j = a; j <= k - 1; j += 2) {
            e += big_at(big, j);
        }
        return e;
    };
    for (int i = 1; i <= k - 2; ++i) {
        shape.factors.push_back({i, false, q_poch, true});
    }
    shape.factors.push_back({k - 1, true, q2_poch, true});
    shape.factors.push_back({k - 1, true, PochSpec{-1, Rational(1, 2), 1}, false});
    return shape;
}

} // namespace

Series displayed_beta(const GordonParams &gp, int n, Rational order, BetaForm form)
{
    gp.validate();
    if (gp.k < 2) {
        throw precondition_error("displayed beta needs k >= 2");
    }
    MultisumShape shape = half_grid_shape(gp);
    shape.top = n;
    shape.factors.push_back({0, false, q_poch, true});
    const Series root = invert_poch(PochSpec{-1, Rational(1, 2), 1}, n, order);
    Series s = eval_multisum(shape, order) * root;
    if (form == BetaForm::doubled) {
        s *= root;
    }
    return s;
}

std::vector<BetaForm> matching_beta_forms(const GordonParams &gp, int n_check, Rational order)
{
    const BaileyPair chain = build_chain(gp, n_check, order);
    std::vector<BetaForm> out;
    for (const BetaForm f : {BetaForm::single, BetaForm::doubled}) {
        bool all = true;
        for (int n = 0; n <= n_check && all; ++n) {
            all = chain.beta[static_cast<std::size_t>(n)] == displayed_beta(gp, n, order, f);
        }
        if (all) {
            out.push_back(f);
        }
    }
    return out;
}

int limit_depth(Rational order)
{
    const double o = boost::rational_cast<double>(order);
    return static_cast<int>(std::ceil(o)) + static_cast<int>(std::ceil(std::sqrt(2.0 * o))) + 2;
}

LimitIdentity limit_identity(const GordonParams &gp, Rational order)
{
    const int n = limit_depth(order);
    const BaileyPair bp = build_chain(gp, n, order);
    const Series scale = poch_finite(q_poch, n, order) * poch_finite(PochSpec{-1, Rational(1, 2), 1}, n, order);

    Series rhs = Series::zero(order);
    for (int r = 0; r <= n; ++r) {
        const auto &al = bp.alpha[static_cast<std::size_t>(r)];
        if (al.is_zero()) {
            continue;
        }
        rhs += al * invert_poch(q_poch, n - r, order) * invert_poch(q_poch, n + r, order);
    }
    return {scale * bp.beta[static_cast<std::size_t>(n)], scale * rhs, n};
}

Series limit_lhs_direct(const GordonParams &gp, Rational order)
{
    gp.validate();
    return eval_multisum(half_grid_shape(gp), order);
}

Series limit_rhs_direct(const GordonParams &gp, Rational order)
{
    gp.validate();
    const Rational Q(gp.k + 1, 2);
    const Rational L(gp.k - gp.a + 1, 2);
    Series theta = Series::zero(order, 2);
    for (int r = 0; Q * r * r - L * r < order; ++r) {
        theta += two_term_alpha(Q, L, r, order);
    }
    return poch_infinite(PochSpec{-1, Rational(1, 2), 1}, order) * invert_poch(q_poch, order) * theta;
}

} // namespace gordon::bailey
