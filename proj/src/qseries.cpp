#include <gordon/qseries.hpp>

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace gordon
{

std::string to_string(const Rational &r)
{
    if (r.denominator() == 1) {
        return std::to_string(r.numerator());
    }
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::int64_t slot_count(Rational order, int denom)
{
    if (order <= 0) {
        return 0;
    }
    const Rational scaled = order * Rational(denom);
    // ceil for a positive rational
    return (scaled.numerator() + scaled.denominator() - 1) / scaled.denominator();
}

std::int64_t to_slot(Rational e, int denom)
{
    const Rational scaled = e * Rational(denom);
    if (scaled.denominator() != 1) {
        throw precondition_error("exponent " + to_string(e) + " is not on the 1/" + std::to_string(denom) + " grid");
    }
    if (scaled.numerator() < 0) {
        throw precondition_error("negative exponent " + to_string(e));
    }
    return scaled.numerator();
}

int common_denom(int d1, int d2)
{
    return std::lcm(d1, d2);
}

int grid_for(Rational e)
{
    return static_cast<int>(e.denominator());
}

namespace
{

const Integer &zero_integer()
{
    static const Integer z(0);
    return z;
}

void check_order(Rational order)
{
    if (order < 0) {
        throw precondition_error("negative truncation order " + to_string(order));
    }
}

} // namespace

Series::Series(int denom, Rational order) : denom_(denom), order_(order)
{
    if (denom < 1) {
        throw precondition_error("grid denominator must be positive");
    }
    check_order(order);
    c_.resize(static_cast<std::size_t>(slot_count(order, denom)));
}

Series Series::one(Rational order, int denom)
{
    Series s(denom, order);
    if (!s.c_.empty()) {
        s.c_[0] = 1;
    }
    return s;
}

Series Series::monomial(const Integer &c, Rational exponent, Rational order)
{
    Series s(grid_for(exponent), order);
    const auto slot = to_slot(exponent, s.denom_);
    if (slot < s.slots()) {
        s.c_[static_cast<std::size_t>(slot)] = c;
    }
    return s;
}

Series Series::from_terms(int denom, Rational order, std::span<const std::pair<std::int64_t, Integer>> terms)
{
    Series s(denom, order);
    for (const auto &[slot, c] : terms) {
        if (slot < 0) {
            throw precondition_error("negative exponent in term list");
        }
        if (slot < s.slots()) {
            s.c_[static_cast<std::size_t>(slot)] += c;
        }
    }
    return s;
}

const Integer &Series::coeff_scaled(std::int64_t s) const
{
    if (s < 0 || s >= slots()) {
        return zero_integer();
    }
    return c_[static_cast<std::size_t>(s)];
}

Integer Series::coeff(Rational e) const
{
    if (e >= order_) {
        throw precondition_error("coefficient of q^" + to_string(e) + " is beyond the order " + to_string(order_));
    }
    const Rational scaled = e * Rational(denom_);
    if (scaled.denominator() != 1) {
        return 0;
    }
    return coeff_scaled(scaled.numerator());
}

void Series::set_coeff(Rational e, const Integer &c)
{
    if (e >= order_) {
        throw precondition_error("cannot set a coefficient beyond the order");
    }
    const int grid = common_denom(denom_, grid_for(e));
    if (grid != denom_) {
        *this = on_grid(grid);
    }
    c_[static_cast<std::size_t>(to_slot(e, denom_))] = c;
}

bool Series::is_zero() const
{
    return std::all_of(c_.begin(), c_.end(), [](const Integer &c) { return sgn(c) == 0; });
}

Series Series::on_grid(int new_denom) const
{
    if (new_denom == denom_) {
        return *this;
    }
    if (new_denom % denom_ != 0) {
        throw precondition_error("cannot move a 1/" + std::to_string(denom_) + " series to the 1/"
                                 + std::to_string(new_denom) + " grid");
    }
    const std::int64_t f = new_denom / denom_;
    Series out(new_denom, order_);
    for (std::int64_t s = 0; s < slots(); ++s) {
        out.c_[static_cast<std::size_t>(s * f)] = c_[static_cast<std::size_t>(s)];
    }
    return out;
}

Series Series::compacted() const
{
    std::int64_t g = denom_;
    for (std::int64_t s = 1; s < slots() && g > 1; ++s) {
        if (sgn(c_[static_cast<std::size_t>(s)]) != 0) {
            g = std::gcd(g, s);
        }
    }
    if (g == 1) {
        return *this;
    }
    Series out(static_cast<int>(denom_ / g), order_);
    for (std::int64_t s = 0; s < out.slots(); ++s) {
        out.c_[static_cast<std::size_t>(s)] = coeff_scaled(s * g);
    }
    return out;
}

Series Series::truncated(Rational new_order) const
{
    Series out = *this;
    if (new_order < order_) {
        check_order(new_order);
        out.order_ = new_order;
        out.c_.resize(static_cast<std::size_t>(slot_count(new_order, denom_)));
    }
    return out;
}

Series Series::times_monomial(const Integer &c, Rational e) const
{
    const int grid = common_denom(denom_, grid_for(e));
    const Series src = on_grid(grid);
    const auto shift = to_slot(e, grid);
    Series out(grid, order_);
    for (std::int64_t s = 0; s + shift < out.slots(); ++s) {
        const auto &x = src.c_[static_cast<std::size_t>(s)];
        if (sgn(x) != 0) {
            out.c_[static_cast<std::size_t>(s + shift)] = x * c;
        }
    }
    return out;
}

namespace
{

// Bring a and b onto a common grid and order.
std::pair<Series, Series> align(const Series &a, const Series &b)
{
    const int grid = common_denom(a.denom(), b.denom());
    const Rational order = std::min(a.order(), b.order());
    return {a.on_grid(grid).truncated(order), b.on_grid(grid).truncated(order)};
}

} // namespace

Series &Series::operator+=(const Series &other)
{
    auto [x, y] = align(*this, other);
    auto &xc = x.c_;
    const auto &yc = y.c_;
    for (std::size_t i = 0; i < xc.size(); ++i) {
        xc[i] += yc[i];
    }
    *this = std::move(x);
    return *this;
}

Series &Series::operator-=(const Series &other)
{
    auto [x, y] = align(*this, other);
    auto &xc = x.c_;
    const auto &yc = y.c_;
    for (std::size_t i = 0; i < xc.size(); ++i) {
        xc[i] -= yc[i];
    }
    *this = std::move(x);
    return *this;
}

Series &Series::operator*=(const Series &other)
{
    *this = *this * other;
    return *this;
}

Series operator*(const Series &a, const Series &b)
{
    const auto [x, y] = align(a, b);
    Series out(x.denom(), x.order());
    const auto n = static_cast<std::size_t>(out.slots());
    const auto &xc = x.scaled_coeffs();
    const auto &yc = y.scaled_coeffs();
    // Sparse-aware Cauchy product: skip zero terms of both factors.
    std::vector<std::size_t> ynz;
    for (std::size_t j = 0; j < n; ++j) {
        if (sgn(yc[j]) != 0) {
            ynz.push_back(j);
        }
    }
    auto &oc = out.mutable_coeffs();
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(xc[i]) == 0) {
            continue;
        }
        for (const auto j : ynz) {
            if (i + j >= n) {
                break;
            }
            mpz_addmul(oc[i + j].get_mpz_t(), xc[i].get_mpz_t(), yc[j].get_mpz_t());
        }
    }
    return out;
}

Series operator-(Series a)
{
    for (auto &c : a.c_) {
        c = -c;
    }
    return a;
}

std::optional<Discrepancy> first_difference(const Series &a, const Series &b)
{
    const auto [x, y] = align(a, b);
    for (std::int64_t s = 0; s < x.slots(); ++s) {
        const auto &xs = x.coeff_scaled(s);
        const auto &ys = y.coeff_scaled(s);
        if (xs != ys) {
            return Discrepancy{Rational(s, x.denom()), xs, ys};
        }
    }
    return std::nullopt;
}

bool operator==(const Series &a, const Series &b)
{
    return !first_difference(a, b).has_value();
}

std::string Series::str() const
{
    std::ostringstream os;
    bool first = true;
    for (std::int64_t s = 0; s < slots(); ++s) {
        const auto &c = c_[static_cast<std::size_t>(s)];
        if (sgn(c) == 0) {
            continue;
        }
        const Rational e(s, denom_);
        Integer mag = abs(c);
        if (first) {
            os << (sgn(c) < 0 ? "-" : "");
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) {
            os << mag.get_str() << "*";
        }
        os << "q";
        if (e != 1) {
            os << "^" << (e.denominator() == 1 ? to_string(e) : "(" + to_string(e) + ")");
        }
    }
    if (first) {
        os << "0";
    }
    os << " + O(q^" << (order_.denominator() == 1 ? to_string(order_) : "(" + to_string(order_) + ")") << ")";
    return os.str();
}

namespace
{

int poch_grid(const PochSpec &spec)
{
    if (spec.sign != 1 && spec.sign != -1) {
        throw precondition_error("q-Pochhammer sign must be +1 or -1");
    }
    if (spec.base <= 0) {
        throw precondition_error("q-Pochhammer base exponent must be positive");
    }
    if (spec.exponent < 0) {
        throw precondition_error("q-Pochhammer exponent must be nonnegative");
    }
    return common_denom(grid_for(spec.exponent), grid_for(spec.base));
}

// x <- x * (1 - c q^{shift/denom})
void mul_binomial(std::vector<Integer> &x, std::int64_t shift, int c)
{
    if (shift == 0) {
        for (auto &v : x) {
            v *= (1 - c);
        }
        return;
    }
    for (auto i = static_cast<std::int64_t>(x.size()) - 1; i >= shift; --i) {
        auto &dst = x[static_cast<std::size_t>(i)];
        const auto &src = x[static_cast<std::size_t>(i - shift)];
        if (c == 1) {
            dst -= src;
        } else {
            dst += src;
        }
    }
}

// x <- x / (1 - c q^{shift/denom})
void div_binomial(std::vector<Integer> &x, std::int64_t shift, int c)
{
    if (shift == 0) {
        throw precondition_error(c == 1 ? "division by the zero factor (1 - 1)"
                                        : "division by the non-unit factor (1 + 1)");
    }
    for (auto i = shift; i < static_cast<std::int64_t>(x.size()); ++i) {
        auto &dst = x[static_cast<std::size_t>(i)];
        const auto &src = x[static_cast<std::size_t>(i - shift)];
        if (c == 1) {
            dst += src;
        } else {
            dst -= src;
        }
    }
}

template <typename Op>
Series poch_apply(const PochSpec &spec, std::int64_t n, Rational order, Op op)
{
    if (n < 0) {
        throw precondition_error("q-Pochhammer length must be nonnegative");
    }
    const int grid = poch_grid(spec);
    Series out = Series::one(order, grid);
    auto &c = out.mutable_coeffs();
    for (std::int64_t j = 0; j < n; ++j) {
        const Rational e = spec.exponent + Rational(j) * spec.base;
        if (e >= order) {
            break;
        }
        op(c, to_slot(e, grid), spec.sign);
    }
    return out;
}

constexpr std::int64_t unbounded = std::numeric_limits<std::int64_t>::max();

void reject_zero_factor(const PochSpec &spec)
{
    if (spec.exponent == 0 && spec.sign == 1) {
        throw precondition_error("(1; q)_infinity vanishes identically");
    }
}

} // namespace

Series poch_finite(const PochSpec &spec, std::int64_t n, Rational order)
{
    return poch_apply(spec, n, order, mul_binomial);
}

Series poch_infinite(const PochSpec &spec, Rational order)
{
    reject_zero_factor(spec);
    return poch_apply(spec, unbounded, order, mul_binomial);
}

Series invert_poch(const PochSpec &spec, Rational order)
{
    reject_zero_factor(spec);
    return poch_apply(spec, unbounded, order, div_binomial);
}

Series invert_poch(const PochSpec &spec, std::int64_t n, Rational order)
{
    return poch_apply(spec, n, order, div_binomial);
}

Series inverse(const Series &x)
{
    const auto &a = x.scaled_coeffs();
    if (a.empty()) {
        return x;
    }
    if (a[0] != 1 && a[0] != -1) {
        throw precondition_error("only series with constant term +1 or -1 are invertible over the integers");
    }
    Series out(x.denom(), x.order());
    auto &b = out.mutable_coeffs();
    const Integer c0 = a[0];
    b[0] = c0;
    for (std::size_t n = 1; n < b.size(); ++n) {
        Integer acc = 0;
        for (std::size_t j = 1; j <= n; ++j) {
            if (sgn(a[j]) != 0) {
                mpz_addmul(acc.get_mpz_t(), a[j].get_mpz_t(), b[n - j].get_mpz_t());
            }
        }
        b[n] = -c0 * acc;
    }
    return out;
}

Series triple_product(Rational e1, Rational e2, Rational e3, Rational order)
{
    if (e1 <= 0 || e2 <= 0 || e3 <= 0) {
        throw precondition_error("triple product exponents must be positive");
    }
    return poch_infinite({1, e1, e3}, order) * poch_infinite({1, e2, e3}, order) * poch_infinite({1, e3, e3}, order);
}

Series theta_sum(Rational e1, Rational e3, Rational order)
{
    if (e3 <= 0 || e1 < 0 || e1 > e3) {
        throw precondition_error("theta sum needs 0 <= e1 <= e3 and e3 > 0");
    }
    const int grid = common_denom(grid_for(e1), grid_for(e3));
    Series out(grid, order);
    auto &c = out.mutable_coeffs();
    auto add_term = [&](std::int64_t r) {
        const Rational e = e3 * Rational(r * (r - 1), 2) + e1 * Rational(r);
        if (e >= order) {
            return false;
        }
        c[static_cast<std::size_t>(to_slot(e, grid))] += (r % 2 == 0) ? 1 : -1;
        return true;
    };
    for (std::int64_t r = 0; add_term(r); ++r) {
    }
    // For r <= -1 the exponent is increasing in |r| once e1 <= e3.
    for (std::int64_t r = -1; add_term(r); --r) {
    }
    return out;
}

Series triple_product_theta(Rational e1, Rational e2, Rational e3, Rational order)
{
    if (e1 + e2 != e3) {
        throw precondition_error("theta form requires e1 + e2 == e3");
    }
    return theta_sum(e1, e3, order);
}

Series rescale(const Series &x, Rational factor)
{
    if (factor <= 0) {
        throw precondition_error("rescale factor must be positive");
    }
    // s/d * p/r lands on the grid d*r/g with slot s*p/g, g = gcd(p, d*r).
    const std::int64_t p = factor.numerator();
    const std::int64_t dr = static_cast<std::int64_t>(x.denom()) * factor.denominator();
    const std::int64_t g = std::gcd(p, dr);
    Series out(static_cast<int>(dr / g), x.order() * factor);
    auto &c = out.mutable_coeffs();
    const std::int64_t step = p / g;
    for (std::int64_t s = 0; s < x.slots(); ++s) {
        const auto &v = x.coeff_scaled(s);
        if (sgn(v) != 0) {
            c[static_cast<std::size_t>(s * step)] = v;
        }
    }
    return out;
}

} // namespace gordon
