#pragma once

// Truncated formal power series in q with exact integer coefficients.
//
// A Series lives on the exponent grid (1/denom)Z_{>=0}. Coefficient slot s
// holds the coefficient of q^{s/denom}; only exponents strictly below the
// truncation order are stored. Binary operations promote both operands to
// the least common grid and truncate at the smaller order, so equality "to
// order" composes.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>
#include <gmpxx.h>

// Exact-match overloads: under C++20 rewritten comparisons Boost's templated
// mixed rational/integer operator== resolves to itself and never returns.
namespace boost
{
inline bool operator==(const rational<std::int64_t> &r, std::int64_t i)
{
    return r.denominator() == 1 && r.numerator() == i;
}
inline bool operator==(const rational<std::int64_t> &r, int i)
{
    return r == static_cast<std::int64_t>(i);
}
} // namespace boost

namespace gordon
{

using Integer = mpz_class;
using Rational = boost::rational<std::int64_t>;

// Thrown when an operation's precondition does not hold.
class precondition_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

std::string to_string(const Rational &r);

struct Discrepancy {
    Rational exponent;
    Integer lhs;
    Integer rhs;
};

class Series
{
public:
    Series() : Series(1, Rational(0)) {}
    Series(int denom, Rational order);

    static Series zero(Rational order, int denom = 1) { return Series(denom, order); }
    static Series one(Rational order, int denom = 1);
    // c * q^exponent; the grid is chosen fine enough to hold the exponent.
    static Series monomial(const Integer &c, Rational exponent, Rational order);
    // Build from (scaled exponent, coefficient) pairs; terms at or beyond the
    // order are dropped, duplicates accumulate.
    static Series from_terms(int denom, Rational order, std::span<const std::pair<std::int64_t, Integer>> terms);

    int denom() const noexcept { return denom_; }
    Rational order() const noexcept { return order_; }
    std::int64_t slots() const noexcept { return static_cast<std::int64_t>(c_.size()); }
    const std::vector<Integer> &scaled_coeffs() const noexcept { return c_; }

    // Coefficient of q^{s/denom}; zero outside the stored range.
    const Integer &coeff_scaled(std::int64_t s) const;
    // Coefficient of q^e. Exponents off the grid have coefficient zero;
    // exponents at or beyond the order are unknown and rejected.
    Integer coeff(Rational e) const;
    void set_coeff(Rational e, const Integer &c);

    bool is_zero() const;

    // Same series on a finer grid; new_denom must be a multiple of denom().
    Series on_grid(int new_denom) const;
    // Drop the grid to the coarsest one that still holds every nonzero term.
    Series compacted() const;
    // Lower the order (never raises it).
    Series truncated(Rational new_order) const;
    // Multiply by c*q^e.
    Series times_monomial(const Integer &c, Rational e) const;

    Series &operator+=(const Series &other);
    Series &operator-=(const Series &other);
    Series &operator*=(const Series &other);

    friend Series operator+(Series a, const Series &b) { return a += b; }
    friend Series operator-(Series a, const Series &b) { return a -= b; }
    friend Series operator*(const Series &a, const Series &b);
    friend Series operator-(Series a);

    // Agreement on every exponent below the smaller order.
    friend bool operator==(const Series &a, const Series &b);

    std::string str() const;

    // Internal access for the arithmetic kernels.
    std::vector<Integer> &mutable_coeffs() noexcept { return c_; }

private:
    int denom_;
    Rational order_;
    std::vector<Integer> c_;
};

// First exponent below the common order where a and b differ.
std::optional<Discrepancy> first_difference(const Series &a, const Series &b);

// Number of grid points e = s/denom with 0 <= e < order.
std::int64_t slot_count(Rational order, int denom);
// s such that e = s/denom; throws if e is off the grid.
std::int64_t to_slot(Rational e, int denom);
// Smallest grid holding both.
int common_denom(int d1, int d2);
int grid_for(Rational e);

// The factor family (a; q^base)_n with a = sign * q^exponent.
struct PochSpec {
    int sign = 1;
    Rational exponent = 1;
    Rational base = 1;
};

// prod_{j=0}^{n-1} (1 - sign q^{exponent + j*base}) truncated at order.
Series poch_finite(const PochSpec &spec, std::int64_t n, Rational order);
// The infinite product modulo q^order. Rejects exponent 0 with sign +1.
Series poch_infinite(const PochSpec &spec, Rational order);
// 1/(a; q^base)_infinity and 1/(a; q^base)_n.
Series invert_poch(const PochSpec &spec, Rational order);
Series invert_poch(const PochSpec &spec, std::int64_t n, Rational order);
// Formal reciprocal; the constant term must be +1 or -1.
Series inverse(const Series &x);

// (q^e1, q^e2, q^e3; q^e3)_infinity.
Series triple_product(Rational e1, Rational e2, Rational e3, Rational order);
// sum_{r in Z} (-1)^r q^{e3 r(r-1)/2 + e1 r}; equals triple_product(e1, e3-e1, e3)
// by the Jacobi triple product.
Series theta_sum(Rational e1, Rational e3, Rational order);
// Theta form of triple_product; requires e1 + e2 == e3.
Series triple_product_theta(Rational e1, Rational e2, Rational e3, Rational order);

// q -> q^factor.
Series rescale(const Series &x, Rational factor);

} // namespace gordon
