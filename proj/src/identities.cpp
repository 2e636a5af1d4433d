#include <gordon/identities.hpp>
#include <gordon/lattice_path.hpp>
#include <gordon/multisum.hpp>

namespace gordon::identities
{

namespace
{

bool odd(int x)
{
    return x % 2 != 0;
}

Rational sum_of_squares(std::span<const int> big)
{
    std::int64_t e = 0;
    for (const int v : big) {
        e += static_cast<std::int64_t>(v) * v;
    }
    return Rational(e);
}

// N_from + N_{from+step} + ... up to N_to.
std::int64_t big_run(std::span<const int> big, int from, int to, int step)
{
    std::int64_t s = 0;
    for (int j = from; j <= to; j += step) {
        s += big_at(big, j);
    }
    return s;
}

MultisumShape shape_with(const GordonParams &gp, PochSpec denom, std::function<Rational(std::span<const int>)> exponent)
{
    MultisumShape shape;
    shape.length = gp.k - 1;
    shape.exponent = std::move(exponent);
    for (int i = 1; i <= gp.k - 1; ++i) {
        shape.factors.push_back({i, false, denom, true});
    }
    return shape;
}

const PochSpec q_poch{1, 1, 1};
const PochSpec q2_poch{1, 2, 2};

Series theta_quotient(const PochSpec &front, Rational e1, Rational e2, Rational e3, Rational order)
{
    return poch_infinite(front, order) * triple_product(e1, e2, e3, order) * invert_poch(q2_poch, order);
}

} // namespace

std::string to_string(Theorem t)
{
    switch (t) {
    case Theorem::AG:
        return "AG";
    case Theorem::W_same:
        return "W_same";
    case Theorem::W_diff:
        return "W_diff";
    case Theorem::Wbar_odd_even:
        return "Wbar_odd_even";
    case Theorem::Wbar_even_odd:
        return "Wbar_even_odd";
    case Theorem::Main:
        return "Main";
    case Theorem::Paths:
        return "Paths";
    }
    return "?";
}

Theorem theorem_from_string(const std::string &name)
{
    for (const Theorem t : {Theorem::AG, Theorem::W_same, Theorem::W_diff, Theorem::Wbar_odd_even,
                            Theorem::Wbar_even_odd, Theorem::Main, Theorem::Paths}) {
        if (to_string(t) == name) {
            return t;
        }
    }
    throw precondition_error("unknown theorem '" + name + "'");
}

Theorem w_case(const GordonParams &gp)
{
    return gp.same_parity() ? Theorem::W_same : Theorem::W_diff;
}

std::optional<Theorem> wbar_case(const GordonParams &gp)
{
    if (odd(gp.k) && !odd(gp.a)) {
        return Theorem::Wbar_odd_even;
    }
    if (!odd(gp.k) && odd(gp.a)) {
        return Theorem::Wbar_even_odd;
    }
    return std::nullopt;
}

void IdentitySpec::validate() const
{
    gp.validate();
    if (order < 0) {
        throw precondition_error("order must be nonnegative");
    }
    const auto fail = [&](const std::string &why) {
        throw precondition_error(to_string(theorem) + " needs " + why + ", got k=" + std::to_string(gp.k) +
                                 ", a=" + std::to_string(gp.a));
    };
    switch (theorem) {
    case Theorem::AG:
        return;
    case Theorem::W_same:
        if (!gp.same_parity()) {
            fail("k = a (mod 2)");
        }
        return;
    case Theorem::W_diff:
    case Theorem::Main:
    case Theorem::Paths:
        if (gp.same_parity()) {
            fail("k != a (mod 2)");
        }
        return;
    case Theorem::Wbar_odd_even:
        if (!odd(gp.k) || odd(gp.a)) {
            fail("k odd and a even");
        }
        return;
    case Theorem::Wbar_even_odd:
        if (odd(gp.k) || !odd(gp.a)) {
            fail("k even and a odd");
        }
        return;
    }
}

Series eval_multisum_AG(const GordonParams &gp, int order)
{
    gp.validate();
    const int k = gp.k;
    const int a = gp.a;
    return eval_multisum(shape_with(gp, q_poch,
                                    [k, a](std::span<const int> big) {
                                        return sum_of_squares(big) + big_run(big, a, k - 1, 1);
                                    }),
                         order);
}

Series eval_multisum_W(const GordonParams &gp, int order, Theorem parity_case)
{
    IdentitySpec{parity_case, gp, order}.validate();
    if (parity_case != Theorem::W_same && parity_case != Theorem::W_diff) {
        throw precondition_error("not a W parity case");
    }
    const int k = gp.k;
    const int a = gp.a;
    const int last = parity_case == Theorem::W_same ? k - 2 : k - 1;
    return eval_multisum(shape_with(gp, q2_poch,
                                    [a, last](std::span<const int> big) {
                                        return sum_of_squares(big) + 2 * big_run(big, a, last, 2);
                                    }),
                         order);
}

Series eval_multisum_Wbar(const GordonParams &gp, int order, Theorem parity_case)
{
    IdentitySpec{parity_case, gp, order}.validate();
    if (parity_case != Theorem::Wbar_odd_even && parity_case != Theorem::Wbar_even_odd) {
        throw precondition_error("not a Wbar parity case");
    }
    const int k = gp.k;
    const int a = gp.a;
    const bool odd_even = parity_case == Theorem::Wbar_odd_even;
    const int small_last = odd_even ? a - 3 : a - 2;
    const int big_first = odd_even ? a - 1 : a;
    return eval_multisum(shape_with(gp, q2_poch,
                                    [k, small_last, big_first](std::span<const int> big) {
                                        std::int64_t e = big_run(big, big_first, k - 1, 1);
                                        for (int j = 1; j <= small_last; j += 2) {
                                            e += small_at(big, j);
                                        }
                                        return sum_of_squares(big) + Rational(e);
                                    }),
                         order);
}

Series eval_multisum_main(const GordonParams &gp, int order)
{
    IdentitySpec{Theorem::Main, gp, order}.validate();
    const int k = gp.k;
    const int a = gp.a;
    MultisumShape shape;
    shape.length = k - 1;
    shape.exponent = [k, a](std::span<const int> big) {
        return sum_of_squares(big) + 2 * big_run(big, a, k - 1, 2);
    };
    for (int i = 1; i <= k - 2; ++i) {
        shape.factors.push_back({i, false, q2_poch, true});
    }
    shape.factors.push_back({k - 1, false, PochSpec{-1, 1, 2}, false});
    shape.factors.push_back({k - 1, false, PochSpec{1, 4, 4}, true});
    return eval_multisum(shape, order);
}

Series count_series(partitions::Family f, const GordonParams &gp, int order)
{
    Series s(1, Rational(order));
    const auto table = partitions::count_table(f, gp, order - 1);
    for (std::size_t n = 0; n < table.size(); ++n) {
        s.mutable_coeffs()[n] = Integer(static_cast<unsigned long>(table[n]));
    }
    return s;
}

Series path_series(const GordonParams &gp, int order)
{
    Series s(1, Rational(order));
    const auto table = paths::count_S_table(gp, order - 1);
    for (std::size_t n = 0; n < table.size(); ++n) {
        s.mutable_coeffs()[n] = Integer(static_cast<unsigned long>(table[n]));
    }
    return s;
}

Series eval_product_side(const IdentitySpec &spec)
{
    spec.validate();
    const Rational order(spec.order);
    const int k = spec.gp.k;
    const int a = spec.gp.a;
    const Rational m(2 * k + 2);
    switch (spec.theorem) {
    case Theorem::AG: {
        const Rational m1(2 * k + 1);
        return triple_product(Rational(a), m1 - a, m1, order) * invert_poch(q_poch, order);
    }
    case Theorem::W_same:
    case Theorem::Main:
        return theta_quotient({-1, 1, 2}, Rational(a), m - a, m, order);
    case Theorem::W_diff: {
        Series s = theta_quotient({-1, 3, 2}, Rational(a + 1), m - a - 1, m, order);
        // (q^0; q^{2k+2})_inf = 0 kills the second product when a = 1.
        if (a > 1) {
            s += theta_quotient({-1, 3, 2}, Rational(a - 1), m - a + 1, m, order).times_monomial(Integer(1), 1);
        }
        return s;
    }
    case Theorem::Wbar_odd_even:
        return theta_quotient({-1, 2, 2}, Rational(a), m - a, m, order);
    case Theorem::Wbar_even_odd:
        return theta_quotient({-1, 2, 2}, Rational(a + 1), m - a - 1, m, order);
    case Theorem::Paths:
        return eval_multisum_main(spec.gp, spec.order);
    }
    throw precondition_error("unknown theorem");
}

Series eval_sum_side(const IdentitySpec &spec)
{
    spec.validate();
    switch (spec.theorem) {
    case Theorem::AG:
        return eval_multisum_AG(spec.gp, spec.order);
    case Theorem::W_same:
    case Theorem::W_diff:
        return eval_multisum_W(spec.gp, spec.order, spec.theorem);
    case Theorem::Wbar_odd_even:
    case Theorem::Wbar_even_odd:
        return eval_multisum_Wbar(spec.gp, spec.order, spec.theorem);
    case Theorem::Main:
        return eval_multisum_main(spec.gp, spec.order);
    case Theorem::Paths:
        return path_series(spec.gp, spec.order);
    }
    throw precondition_error("unknown theorem");
}

VerificationReport verify(const IdentitySpec &spec)
{
    VerificationReport r;
    r.spec = spec;
    r.lhs = eval_sum_side(spec);
    r.rhs = eval_product_side(spec);
    r.first_discrepancy = first_difference(r.lhs, r.rhs);
    r.equal = !r.first_discrepancy.has_value();
    return r;
}

} // namespace gordon::identities
